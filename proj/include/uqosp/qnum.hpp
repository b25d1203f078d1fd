#pragma once

// Scalar kernel: admissible roots of unity and the q-numbers consumed by the
// representation and R-matrix formulas. Everything here is a pure function.

#include <complex>

namespace uqosp {

using Complex = std::complex<double>;

/// Relative zero threshold for complex scalars.
inline constexpr double kZeroTolerance = 1e-14;

/// True when |value| < kZeroTolerance * max(1, scale).
bool is_negligible(Complex value, double scale = 1.0);

/// The deformation parameter, stored through its logarithm. Complex powers
/// q^z are exp(z log q) with log q taken exactly, never recovered from q.
class Deformation {
 public:
  static Deformation from_log(Complex log_q);
  /// Principal logarithm of q. Only meant for generic (non-root) q.
  static Deformation from_value(Complex q);

  Complex log() const { return log_q_; }
  Complex value() const;
  Complex pow(Complex z) const;
  Complex pow(double z) const { return pow(Complex(z, 0.0)); }
  Complex pow(int n) const { return pow(Complex(n, 0.0)); }
  Complex inverse() const { return pow(-1); }

 private:
  explicit Deformation(Complex log_q) : log_q_(log_q) {}
  Complex log_q_;
};

enum class RootClass { ClassI, ClassII };

/// q = exp(i pi m / 2k) with k >= 2, 1 <= m <= k-1, gcd(m, k) = 1.
/// Class I: k - m odd. Class II: k and m both odd.
class AdmissibleRoot {
 public:
  int k() const { return k_; }
  int m() const { return m_; }
  const Deformation& q() const { return q_; }
  Complex value() const { return q_.value(); }
  RootClass root_class() const { return class_; }
  /// k odd and m even: no universal R-matrix can exist (central values of
  /// cyclic irreps are unconstrained).
  bool universal_r_known_absent() const { return k_ % 2 == 1 && m_ % 2 == 0; }

  friend bool operator==(const AdmissibleRoot& a, const AdmissibleRoot& b) {
    return a.k_ == b.k_ && a.m_ == b.m_;
  }

 private:
  friend AdmissibleRoot make_root(int k, int m);
  AdmissibleRoot(int k, int m, Deformation q, RootClass c) : k_(k), m_(m), q_(q), class_(c) {}

  int k_;
  int m_;
  Deformation q_;
  RootClass class_;
};

/// Validates (k, m) and throws Error{k_too_small | m_out_of_range | not_coprime}.
AdmissibleRoot make_root(int k, int m);

/// {n; x}_q = (q^{n+x} - (-1)^n q^{-n-x}) / (q - (-1)^n q^{-1}).
Complex brace(int n, Complex x, const Deformation& q);

/// {n}_q = q^n - (-1)^n q^{-n}.
Complex qint(int n, const Deformation& q);

/// Super q-binomial {N}_q! / ({n}_q! {N-n}_q!). Matching factor indices are
/// cancelled before dividing; a surviving zero denominator throws
/// singular_factorial.
Complex qbinom(int N, int n, const Deformation& q);

/// (n)_a! = prod_{j=1..n} (1 - a^j)/(1 - a). Throws vanishing_factor with
/// index j when (j)_a is zero.
Complex qpoch_factorial(int n, Complex a);

}  // namespace uqosp
