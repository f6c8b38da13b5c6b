#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "locuskit/pipeline.hpp"

namespace lk_test {

inline std::string data_path(const std::string& name) {
  return std::string(LOCUSKIT_TEST_DATA) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> lines(const std::string& path) {
  std::vector<std::string> out;
  std::istringstream in(slurp(path));
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

inline locuskit::Polynomial P(const std::string& text) { return locuskit::parse_xy(text); }

// Printed objects from the published k = 2 example.
inline locuskit::Polynomial printed_factor(int i) {
  return P(lines(data_path("euler_k2_factors.txt")).at(static_cast<std::size_t>(i)));
}
inline locuskit::Polynomial golden_locus() { return P(slurp(data_path("euler_k2_locus.txt"))); }

inline locuskit::ExactPoint equilateral(int sign) {
  return {locuskit::QuadExt(locuskit::Rational::make(1, 2)),
          locuskit::QuadExt(0, locuskit::Rational::make(sign, 2), 3)};
}

inline locuskit::QuadExt at(const locuskit::Polynomial& p, const locuskit::ExactPoint& pt) {
  const locuskit::QuadExt v[2] = {pt.x, pt.y};
  return p.eval(std::span<const locuskit::QuadExt>(v, 2));
}

}  // namespace lk_test
