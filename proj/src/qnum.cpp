#include "uqosp/qnum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "uqosp/error.hpp"

namespace uqosp {
namespace {

Complex checked(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(ErrorCode::non_finite, std::string(what) + " produced a non-finite value");
  }
  return v;
}

}  // namespace

bool is_negligible(Complex value, double scale) {
  return std::abs(value) < kZeroTolerance * std::max(1.0, scale);
}

Deformation Deformation::from_log(Complex log_q) { return Deformation(log_q); }

Deformation Deformation::from_value(Complex q) {
  if (q == Complex(0.0, 0.0)) throw Error(ErrorCode::invalid_argument, "q must be nonzero");
  return Deformation(std::log(q));
}

Complex Deformation::value() const { return std::exp(log_q_); }

Complex Deformation::pow(Complex z) const { return std::exp(z * log_q_); }

AdmissibleRoot make_root(int k, int m) {
  if (k < 2) throw Error(ErrorCode::k_too_small, "k must be >= 2, got " + std::to_string(k));
  if (m < 1 || m > k - 1) {
    throw Error(ErrorCode::m_out_of_range,
                "m must lie in 1..k-1, got m=" + std::to_string(m) + " for k=" + std::to_string(k));
  }
  if (std::gcd(m, k) != 1) {
    throw Error(ErrorCode::not_coprime,
                "m and k are not co-prime (gcd(" + std::to_string(m) + "," + std::to_string(k) +
                    ")=" + std::to_string(std::gcd(m, k)) + ")");
  }
  const auto log_q = Complex(0.0, std::numbers::pi * m / (2.0 * k));
  const auto cls = ((k - m) % 2 != 0) ? RootClass::ClassI : RootClass::ClassII;
  return AdmissibleRoot(k, m, Deformation::from_log(log_q), cls);
}

namespace {

// (q^a - (-1)^n q^-a) / 2 as sinh or cosh of a log q.
Complex half_difference(int n, Complex a, const Deformation& q) {
  const Complex arg = a * q.log();
  return n % 2 == 0 ? std::sinh(arg) : std::cosh(arg);
}

}  // namespace

Complex brace(int n, Complex x, const Deformation& q) {
  const Complex den = half_difference(n, 1.0, q);
  const double scale = 0.5 * (std::abs(q.value()) + std::abs(q.inverse()));
  if (is_negligible(den, scale)) {
    throw Error(ErrorCode::zero_denominator,
                "q - (-1)^n q^-1 vanishes (q is +-1 or +-i) at n=" + std::to_string(n));
  }
  return checked(half_difference(n, Complex(n) + x, q) / den, "brace");
}

Complex qint(int n, const Deformation& q) {
  return checked(2.0 * half_difference(n, Complex(n), q), "qint");
}

Complex qbinom(int N, int n, const Deformation& q) {
  if (n < 0 || n > N) {
    throw Error(ErrorCode::invalid_argument,
                "qbinom needs 0 <= n <= N, got N=" + std::to_string(N) + " n=" + std::to_string(n));
  }
  // {N}! / {n}! leaves indices n+1..N on top; {N-n}! contributes 1..N-n below.
  std::vector<int> top;
  for (int j = n + 1; j <= N; ++j) top.push_back(j);
  std::vector<int> bottom;
  for (int j = 1; j <= N - n; ++j) {
    auto it = std::find(top.begin(), top.end(), j);
    if (it != top.end()) {
      top.erase(it);
    } else {
      bottom.push_back(j);
    }
  }
  Complex value(1.0, 0.0);
  for (int j : top) value *= qint(j, q);
  for (int j : bottom) {
    const Complex f = qint(j, q);
    if (is_negligible(f, std::abs(q.pow(j)) + std::abs(q.pow(-j)))) {
      throw Error(ErrorCode::singular_factorial,
                  "factor {" + std::to_string(j) + "}_q vanishes in the denominator", j);
    }
    value /= f;
  }
  return checked(value, "qbinom");
}

Complex qpoch_factorial(int n, Complex a) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "qpoch_factorial needs n >= 0");
  const Complex one(1.0, 0.0);
  if (n > 0 && is_negligible(one - a, std::abs(a))) {
    throw Error(ErrorCode::zero_denominator, "(n)_a undefined at a = 1");
  }
  Complex value = one;
  for (int j = 1; j <= n; ++j) {
    const Complex aj = std::pow(a, j);
    const Complex factor = (one - aj) / (one - a);
    if (is_negligible(factor, std::abs(aj))) {
      throw Error(ErrorCode::vanishing_factor, "(" + std::to_string(j) + ")_a vanishes", j);
    }
    value *= factor;
  }
  return checked(value, "qpoch_factorial");
}

}  // namespace uqosp
