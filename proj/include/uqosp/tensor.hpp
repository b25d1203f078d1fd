#pragma once

// Graded tensor calculus on lexicographically ordered tensor bases.
//
// Sign convention: (A (x) B)(v (x) w) = (-1)^{|B||v|} Av (x) Bw. Legs are
// numbered from 0. Each factor is a Fock module whose basis vector |n> has
// parity n mod 2.

#include <initializer_list>
#include <vector>

#include "uqosp/graded.hpp"
#include "uqosp/repn.hpp"

namespace uqosp {

class TensorSpace {
 public:
  TensorSpace() = default;
  explicit TensorSpace(std::vector<int> dims);
  static TensorSpace of(std::initializer_list<const FockModule*> factors);

  const std::vector<int>& dims() const { return dims_; }
  int legs() const { return static_cast<int>(dims_.size()); }
  int dim() const { return total_; }

  /// Flat index of a multi-index, lexicographic (last leg fastest).
  int flat_index(const std::vector<int>& multi) const;
  std::vector<int> multi_index(int flat) const;
  /// Sum of per-factor parities mod 2.
  Parity parity_of_index(int flat) const;

  /// Sub-space of legs [first, first + count).
  TensorSpace slice(int first, int count) const;

 private:
  std::vector<int> dims_;
  int total_ = 1;
};

/// Graded product of an operator on `left` and an operator on `right`.
GradedOperator graded_kron(const GradedOperator& a, const GradedOperator& b,
                           const TensorSpace& left, const TensorSpace& right);

GradedOperator identity_operator(int dim);

struct SuperFlip {
  GradedOperator op;   ///< maps `source` onto `target`
  TensorSpace source;
  TensorSpace target;  ///< source with legs i and j exchanged
};

/// v_i <-> v_j with the Koszul sign of moving both vectors past each other
/// and past every leg in between. Works for unequal leg dimensions.
SuperFlip super_flip(const TensorSpace& space, int i, int j);

/// Endomorphism version of super_flip; legs i and j must have equal dims.
GradedOperator super_perm(const TensorSpace& space, int i, int j);

enum class Generator { H, a_plus, a_minus };

/// (rho1 (x) rho2) Delta(gen) with
/// Delta(H) = H(x)1 + 1(x)H, Delta(a+) = a+(x)1 + q^-H(x)a+, Delta(a-) = a-(x)q^H + 1(x)a-.
GradedOperator coproduct_rep(Generator gen, const FockModule& mod1, const FockModule& mod2);

/// Opposite coproduct: 1(x)a+ + a+(x)q^-H and q^H(x)a- + a-(x)1.
GradedOperator opposite_coproduct_rep(Generator gen, const FockModule& mod1, const FockModule& mod2);

/// 1^{(x) first} (x) op (x) 1^{(x) rest}; `op` covers `count` consecutive legs.
GradedOperator embed_at_leg(const GradedOperator& op, const TensorSpace& space, int first, int count = 1);

struct ExpansionResidual {
  double precondition = 0.0;  ///< ||AB + q^2 BA|| / max(1, ||AB||)
  double residual = 0.0;      ///< ||LHS - RHS|| / max(1, ||A+B||^N, largest summand)
};

/// With A = 1(x)a- and B = a-(x)K, checks
/// (A+B)^N = sum_n q^{-n(N-n)} {N brace n}_q A^n B^{N-n}.
/// Throws precondition_failed if AB + q^2 BA is not zero.
ExpansionResidual qbinom_expansion_residual(const FockModule& mod1, const FockModule& mod2, int N);

struct CentralScalars {
  Complex x_minus;
  Complex z;
};

struct ObstructionSides {
  Complex lhs;  ///< rho2(x-) + rho2(z) rho1(x-)
  Complex rhs;  ///< rho1(x-) + rho1(z) rho2(x-)
};

/// Both sides of the necessary condition for almost-cocommutativity on two irreps.
ObstructionSides cocommutativity_obstruction(const CentralScalars& rho1, const CentralScalars& rho2);

}  // namespace uqosp
