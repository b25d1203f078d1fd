#include "uqosp/braid.hpp"

#include <Eigen/SparseCore>
#include <string>

#include "uqosp/error.hpp"
#include "uqosp/rmat.hpp"

namespace uqosp {

BraidRep braid_generators(const FockModule& mod, int strands, long size_cap) {
  if (strands < 2) throw Error(ErrorCode::invalid_argument, "braid group needs N >= 2");
  long total = 1;
  for (int i = 0; i < strands; ++i) {
    total *= mod.dim();
    if (total > size_cap) {
      throw Error(ErrorCode::size_cap_exceeded, "(L+1)^N exceeds the size cap " + std::to_string(size_cap));
    }
  }
  BraidRep rep{mod, strands, TensorSpace(std::vector<int>(strands, mod.dim())), {}};
  const auto check = r_check(mod);
  for (int i = 0; i + 1 < strands; ++i) rep.generators.push_back(embed_at_leg(check, rep.space, i, 2));
  return rep;
}

std::vector<GradedOperator> braid_inverse_generators(const BraidRep& rep) {
  const GradedOperator inverse{r_check(rep.module).matrix.inverse(), Parity::even};
  std::vector<GradedOperator> out;
  for (int i = 0; i + 1 < rep.strands; ++i) out.push_back(embed_at_leg(inverse, rep.space, i, 2));
  return out;
}

namespace {

using Sparse = Eigen::SparseMatrix<Complex>;

double sparse_residual(const Sparse& lhs, const Sparse& rhs) {
  return Sparse(lhs - rhs).norm() / std::max(1.0, lhs.norm());
}

}  // namespace

BraidResidual braid_relation_residual(const BraidRep& rep) {
  std::vector<Sparse> s;
  for (const auto& g : rep.generators) s.push_back(g.matrix.sparseView(Complex(0.0), 0.0));
  BraidResidual out;
  const auto count = s.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 2; j < count; ++j) {
      const Sparse lhs = s[i] * s[j];
      const Sparse rhs = s[j] * s[i];
      out.far_commutation = std::max(out.far_commutation, sparse_residual(lhs, rhs));
    }
    if (i + 1 < count) {
      const Sparse lhs = Sparse(s[i] * s[i + 1]) * s[i];
      const Sparse rhs = Sparse(s[i + 1] * s[i]) * s[i + 1];
      out.yang_baxter = std::max(out.yang_baxter, sparse_residual(lhs, rhs));
    }
  }
  return out;
}

double intertwiner_commutant_residual(const BraidRep& rep) {
  if (rep.strands != 2) {
    throw Error(ErrorCode::invalid_argument, "the commutant check is stated for N = 2 only");
  }
  const Matrix& check = rep.generators.front().matrix;
  double worst = 0.0;
  for (auto gen : {Generator::H, Generator::a_plus, Generator::a_minus}) {
    const Matrix delta = coproduct_rep(gen, rep.module, rep.module).matrix;
    worst = std::max(worst, relative_residual(check * delta, delta * check));
  }
  return worst;
}

}  // namespace uqosp
