#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace uqosp {

using Matrix = Eigen::MatrixXcd;

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline Parity parity_of(long n) { return (n % 2 == 0) ? Parity::even : Parity::odd; }
inline int bit(Parity p) { return static_cast<int>(p); }

/// A square complex matrix (row = output basis index, column = input basis
/// index) together with its Z2 degree.
struct GradedOperator {
  Matrix matrix;
  Parity parity = Parity::even;

  Eigen::Index dim() const { return matrix.rows(); }
};

/// ||lhs - rhs||_F / max(1, ||lhs||_F).
inline double relative_residual(const Matrix& lhs, const Matrix& rhs) {
  return (lhs - rhs).norm() / std::max(1.0, lhs.norm());
}

}  // namespace uqosp
