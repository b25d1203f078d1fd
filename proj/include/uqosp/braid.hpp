#pragma once

// Braid group generators sigma_i = 1^{(x)(i)} (x) Rcheck (x) 1^{(x)(N-i-2)} on the
// N-fold tensor power of one Fock module (i counted from 0).

#include <vector>

#include "uqosp/graded.hpp"
#include "uqosp/repn.hpp"
#include "uqosp/tensor.hpp"

namespace uqosp {

inline constexpr long kDefaultSizeCap = 4096;

struct BraidRep {
  FockModule module;
  int strands = 2;
  TensorSpace space;
  std::vector<GradedOperator> generators;  ///< N - 1 entries
};

/// Throws size_cap_exceeded when (L+1)^N > size_cap.
BraidRep braid_generators(const FockModule& mod, int strands, long size_cap = kDefaultSizeCap);

/// Inverses of the generators, embedded from the inverse of Rcheck.
std::vector<GradedOperator> braid_inverse_generators(const BraidRep& rep);

struct BraidResidual {
  double far_commutation = 0.0;  ///< max over |i-j|>1 of sigma_i sigma_j vs sigma_j sigma_i
  double yang_baxter = 0.0;      ///< max over i of sigma_i sigma_{i+1} sigma_i vs sigma_{i+1} sigma_i sigma_{i+1}
};

BraidResidual braid_relation_residual(const BraidRep& rep);

/// max over generators of ||[Rcheck, Delta(gen)]|| / max(1, ||Rcheck Delta(gen)||). Needs N = 2.
double intertwiner_commutant_residual(const BraidRep& rep);

}  // namespace uqosp
