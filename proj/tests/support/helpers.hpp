#pragma once

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "infoimb/panel.hpp"
#include "infoimb/rng.hpp"

namespace testutil {

/// Panel on a synthetic daily calendar from raw (pre-standardization)
/// columns; the last name is the target unless stated otherwise.
inline infoimb::AlignedPanel make_panel(
    std::vector<std::string> names, std::vector<std::vector<double>> cols,
    std::string target = {}) {
  const std::size_t n = cols.front().size();
  std::vector<infoimb::Date> grid;
  grid.reserve(n);
  infoimb::Date d = infoimb::parse_date("2014-01-01");
  for (std::size_t i = 0; i < n; ++i, d += std::chrono::days{1}) {
    grid.push_back(d);
  }
  if (target.empty()) target = names.back();
  return infoimb::AlignedPanel::from_raw(std::move(grid), std::move(names),
                                         std::move(cols), std::move(target));
}

inline std::vector<double> random_column(infoimb::PortableRng& rng,
                                         std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.normal();
  return v;
}

/// Scratch directory wiped on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            (tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testutil
