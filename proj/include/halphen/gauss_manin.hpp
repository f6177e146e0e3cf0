#ifndef HALPHEN_GAUSS_MANIN_HPP
#define HALPHEN_GAUSS_MANIN_HPP

// Gauss-Manin connection of y^2 = 4 (x - t1)(x - t2)(x - t3) in the basis
// (dx/y, x dx/y):  nabla (dx/y, x dx/y)^T = A (dx/y, x dx/y)^T,
//   A = sum_i dt_i / (2 (t_i - t_j)(t_i - t_k)) [[-t_i, 1], [t_j t_k - t_i (t_j + t_k), t_i]].
// Contracting A with the Darboux-Halphen field gives [[0, -1], [0, 0]], i.e.
// nabla_R (dx/y) = -x dx/y and nabla_R (x dx/y) = 0.

#include <algorithm>
#include <array>

#include "halphen/dh_core.hpp"
#include "halphen/types.hpp"

namespace halphen {

template <class T>
using Mat2 = std::array<std::array<T, 2>, 2>;

/// Coefficients of dt1, dt2, dt3.
template <class T>
struct ConnectionMatrix {
  std::array<Mat2<T>, 3> a;
};

/// Thrown on the discriminant locus t_i = t_j.
class SingularLocusError : public DomainError {
 public:
  using DomainError::DomainError;
};

template <class T>
bool pairwise_distinct(const Triple<T>& t) {
  return t[0] != t[1] && t[0] != t[2] && t[1] != t[2];
}

template <class T>
ConnectionMatrix<T> gm_matrix(const Triple<T>& t) {
  if (!pairwise_distinct(t)) {
    throw SingularLocusError("Gauss-Manin connection is singular where t_i = t_j");
  }
  ConnectionMatrix<T> out;
  for (int i = 0; i < 3; ++i) {
    const T& ti = t[i];
    const T& tj = t[(i + 1) % 3];
    const T& tk = t[(i + 2) % 3];
    const T inv = T(1) / (T(2) * (ti - tj) * (ti - tk));
    out.a[i] = Mat2<T>{{{-ti * inv, inv}, {(tj * tk - ti * (tj + tk)) * inv, ti * inv}}};
  }
  return out;
}

/// sum_i v_i A_i(t).
template <class T>
Mat2<T> gm_contract(const Triple<T>& t, const Triple<T>& v) {
  const ConnectionMatrix<T> m = gm_matrix(t);
  Mat2<T> out{{{T(0), T(0)}, {T(0), T(0)}}};
  for (int i = 0; i < 3; ++i) {
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        out[r][c] += v[i] * m.a[i][r][c];
      }
    }
  }
  return out;
}

/// The expected contraction with R in the (dx/y, x dx/y) ordering.
template <class T>
Mat2<T> r_property_target() {
  return Mat2<T>{{{T(0), T(-1)}, {T(0), T(0)}}};
}

/// gm_contract(t, dh_vector_field(t)) - [[0, -1], [0, 0]].
template <class T>
Mat2<T> verify_R_property(const Triple<T>& t) {
  Mat2<T> out = gm_contract(t, dh_vector_field(t));
  const Mat2<T> target = r_property_target<T>();
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out[r][c] -= target[r][c];
    }
  }
  return out;
}

double max_abs(const Mat2<Rational>& m);
double max_abs(const Mat2<cplx>& m);

}  // namespace halphen

#endif  // HALPHEN_GAUSS_MANIN_HPP
