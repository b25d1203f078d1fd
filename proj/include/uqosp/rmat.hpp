#pragma once

// R-matrices on W^{L1}(p1) (x) W^{L2}(p2), built from the closed-form action
// and from the truncated universal series, plus the leg operators on triple
// products and the residuals that check them.

#include "uqosp/graded.hpp"
#include "uqosp/repn.hpp"
#include "uqosp/tensor.hpp"

namespace uqosp {

enum class Construction { Explicit, Universal };

struct RMatrix {
  ModuleSpec mod1;
  ModuleSpec mod2;
  Matrix matrix;
  Construction construction = Construction::Explicit;
};

/// Column (l1,l2) holds
///   q^{(2l1+p1)(2l2+p2)/2} sum_n (-1)^{n(n+2l1+1)/2} (q-q^-1)^n / (n)_{-q^-2}!
///     prod_{i<n} {l2-i;0}_q {l2-1-i;p2}_q  |l1+n> (x) |l2-n>,
/// n = 0..min(L1-l1, l2).
RMatrix r_explicit(const FockModule& mod1, const FockModule& mod2);

/// sum_n (-1)^{n(n+1)/2} (q-q^-1)^n/(n)_{-q^-2}! [(a+)^n (x) (a-)^n] q^{H(x)H/2},
/// truncated at n = min(L1, L2) + 1 where the graded product vanishes.
RMatrix r_universal(const FockModule& mod1, const FockModule& mod2);

enum class LegPair { r12, r13, r23 };

/// Leg operators on the triple product, written directly from their basis action.
GradedOperator r_legs(const FockModule& mod1, const FockModule& mod2, const FockModule& mod3, LegPair pair);

/// R (x) 1, P23 (R (x) 1) P23 and 1 (x) R.
GradedOperator r_legs_via_perm(const FockModule& mod1, const FockModule& mod2, const FockModule& mod3,
                               LegPair pair);

/// ||R12 R13 R23 - R23 R13 R12||_F / max(1, ||R12 R13 R23||_F).
double qybe_residual(const FockModule& mod1, const FockModule& mod2, const FockModule& mod3);

struct IntertwineResidual {
  double h = 0.0;
  double a_plus = 0.0;
  double a_minus = 0.0;

  double max() const { return std::max({h, a_plus, a_minus}); }
};

/// ||R Delta(gen) - Delta^op(gen) R|| / max(1, ||R Delta(gen)||) per generator.
IntertwineResidual intertwine_residual(const FockModule& mod1, const FockModule& mod2);

/// P R^{L,L}(p,p) with P the super-flip.
GradedOperator r_check(const FockModule& mod);

}  // namespace uqosp
