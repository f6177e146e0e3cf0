#include "halphen/gauss_manin.hpp"

#include <cmath>

namespace halphen {

double max_abs(const Mat2<Rational>& m) {
  double out = 0.0;
  for (const auto& row : m) {
    for (const auto& v : row) {
      out = std::max(out, std::abs(v.get_d()));
    }
  }
  return out;
}

double max_abs(const Mat2<cplx>& m) {
  double out = 0.0;
  for (const auto& row : m) {
    for (const auto& v : row) {
      out = std::max(out, std::abs(v));
    }
  }
  return out;
}

}  // namespace halphen
