#include "uqosp/tensor.hpp"

#include <string>
#include <utility>

#include "uqosp/error.hpp"

namespace uqosp {

TensorSpace::TensorSpace(std::vector<int> dims) : dims_(std::move(dims)) {
  total_ = 1;
  for (int d : dims_) {
    if (d < 1) throw Error(ErrorCode::dimension_mismatch, "tensor factor dimension must be positive");
    total_ *= d;
  }
}

TensorSpace TensorSpace::of(std::initializer_list<const FockModule*> factors) {
  std::vector<int> dims;
  for (const auto* f : factors) dims.push_back(f->dim());
  return TensorSpace(std::move(dims));
}

int TensorSpace::flat_index(const std::vector<int>& multi) const {
  if (multi.size() != dims_.size()) throw Error(ErrorCode::dimension_mismatch, "multi-index has wrong length");
  int flat = 0;
  for (std::size_t leg = 0; leg < dims_.size(); ++leg) flat = flat * dims_[leg] + multi[leg];
  return flat;
}

std::vector<int> TensorSpace::multi_index(int flat) const {
  std::vector<int> multi(dims_.size());
  for (std::size_t leg = dims_.size(); leg-- > 0;) {
    multi[leg] = flat % dims_[leg];
    flat /= dims_[leg];
  }
  return multi;
}

Parity TensorSpace::parity_of_index(int flat) const {
  int total = 0;
  for (int n : multi_index(flat)) total += n;
  return parity_of(total);
}

TensorSpace TensorSpace::slice(int first, int count) const {
  if (first < 0 || count < 0 || first + count > legs()) throw Error(ErrorCode::invalid_leg, "slice out of range");
  return TensorSpace(std::vector<int>(dims_.begin() + first, dims_.begin() + first + count));
}

GradedOperator graded_kron(const GradedOperator& a, const GradedOperator& b,
                           const TensorSpace& left, const TensorSpace& right) {
  if (a.dim() != left.dim() || b.dim() != right.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "graded_kron: operator dims (" + std::to_string(a.dim()) + "," + std::to_string(b.dim()) +
                    ") do not match spaces (" + std::to_string(left.dim()) + "," +
                    std::to_string(right.dim()) + ")");
  }
  const Eigen::Index da = a.dim();
  const Eigen::Index db = b.dim();
  GradedOperator out{Matrix::Zero(da * db, da * db), a.parity + b.parity};
  for (Eigen::Index col_a = 0; col_a < da; ++col_a) {
    const bool flip = b.parity == Parity::odd && left.parity_of_index(static_cast<int>(col_a)) == Parity::odd;
    const double sign = flip ? -1.0 : 1.0;
    for (Eigen::Index row_a = 0; row_a < da; ++row_a) {
      const Complex coeff = a.matrix(row_a, col_a);
      if (coeff == Complex(0.0, 0.0)) continue;
      out.matrix.block(row_a * db, col_a * db, db, db) = (sign * coeff) * b.matrix;
    }
  }
  return out;
}

GradedOperator identity_operator(int dim) { return {Matrix::Identity(dim, dim), Parity::even}; }

SuperFlip super_flip(const TensorSpace& space, int i, int j) {
  if (i < 0 || j < 0 || i >= space.legs() || j >= space.legs() || i == j) {
    throw Error(ErrorCode::invalid_leg, "super_flip needs two distinct legs in range, got " +
                                            std::to_string(i) + "," + std::to_string(j));
  }
  std::vector<int> target_dims = space.dims();
  std::swap(target_dims[i], target_dims[j]);
  TensorSpace target(target_dims);
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  SuperFlip out{{Matrix::Zero(space.dim(), space.dim()), Parity::even}, space, target};
  for (int col = 0; col < space.dim(); ++col) {
    auto multi = space.multi_index(col);
    int exponent = multi[i] * multi[j];
    for (int t = lo + 1; t < hi; ++t) exponent += (multi[i] + multi[j]) * multi[t];
    std::swap(multi[i], multi[j]);
    out.op.matrix(target.flat_index(multi), col) = (exponent % 2 == 0) ? 1.0 : -1.0;
  }
  return out;
}

GradedOperator super_perm(const TensorSpace& space, int i, int j) {
  if (i >= 0 && j >= 0 && i < space.legs() && j < space.legs() && space.dims()[i] != space.dims()[j]) {
    throw Error(ErrorCode::dimension_mismatch, "super_perm needs legs of equal dimension; use super_flip");
  }
  return super_flip(space, i, j).op;
}

GradedOperator coproduct_rep(Generator gen, const FockModule& mod1, const FockModule& mod2) {
  const TensorSpace left({mod1.dim()});
  const TensorSpace right({mod2.dim()});
  const auto id1 = identity_operator(mod1.dim());
  const auto id2 = identity_operator(mod2.dim());
  auto sum = [](GradedOperator x, const GradedOperator& y) {
    x.matrix += y.matrix;
    return x;
  };
  switch (gen) {
    case Generator::H:
      return sum(graded_kron(mod1.H(), id2, left, right), graded_kron(id1, mod2.H(), left, right));
    case Generator::a_plus:
      return sum(graded_kron(mod1.a_plus(), id2, left, right),
                 graded_kron(mod1.K_inv(), mod2.a_plus(), left, right));
    case Generator::a_minus:
      return sum(graded_kron(mod1.a_minus(), mod2.K(), left, right),
                 graded_kron(id1, mod2.a_minus(), left, right));
  }
  throw Error(ErrorCode::invalid_argument, "unknown generator");
}

GradedOperator opposite_coproduct_rep(Generator gen, const FockModule& mod1, const FockModule& mod2) {
  const TensorSpace left({mod1.dim()});
  const TensorSpace right({mod2.dim()});
  const auto id1 = identity_operator(mod1.dim());
  const auto id2 = identity_operator(mod2.dim());
  auto sum = [](GradedOperator x, const GradedOperator& y) {
    x.matrix += y.matrix;
    return x;
  };
  switch (gen) {
    case Generator::H:
      return coproduct_rep(Generator::H, mod1, mod2);
    case Generator::a_plus:
      return sum(graded_kron(id1, mod2.a_plus(), left, right),
                 graded_kron(mod1.a_plus(), mod2.K_inv(), left, right));
    case Generator::a_minus:
      return sum(graded_kron(mod1.K(), mod2.a_minus(), left, right),
                 graded_kron(mod1.a_minus(), id2, left, right));
  }
  throw Error(ErrorCode::invalid_argument, "unknown generator");
}

GradedOperator embed_at_leg(const GradedOperator& op, const TensorSpace& space, int first, int count) {
  if (count < 1 || first < 0 || first + count > space.legs()) {
    throw Error(ErrorCode::invalid_leg, "embed_at_leg: legs [" + std::to_string(first) + "," +
                                            std::to_string(first + count) + ") outside a " +
                                            std::to_string(space.legs()) + "-leg space");
  }
  const TensorSpace before = space.slice(0, first);
  const TensorSpace covered = space.slice(first, count);
  const TensorSpace after = space.slice(first + count, space.legs() - first - count);
  if (op.dim() != covered.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "embed_at_leg: operator dim does not match covered legs");
  }
  const auto inner = graded_kron(identity_operator(before.dim()), op, before, covered);
  std::vector<int> head_dims = before.dims();
  head_dims.insert(head_dims.end(), covered.dims().begin(), covered.dims().end());
  return graded_kron(inner, identity_operator(after.dim()), TensorSpace(head_dims), after);
}

ExpansionResidual qbinom_expansion_residual(const FockModule& mod1, const FockModule& mod2, int N) {
  if (N < 1) throw Error(ErrorCode::invalid_argument, "expansion order must be >= 1");
  const TensorSpace left({mod1.dim()});
  const TensorSpace right({mod2.dim()});
  const Matrix a = graded_kron(identity_operator(mod1.dim()), mod2.a_minus(), left, right).matrix;
  const Matrix b = graded_kron(mod1.a_minus(), mod2.K(), left, right).matrix;
  const auto& q = mod1.q();

  ExpansionResidual out;
  const Matrix ab = a * b;
  out.precondition = relative_residual(ab, -q.pow(2) * (b * a));
  if (out.precondition > 1e-10) {
    throw Error(ErrorCode::precondition_failed,
                "AB + q^2 BA != 0 (residual " + std::to_string(out.precondition) + ")");
  }

  const auto dim = a.rows();
  Matrix lhs = Matrix::Identity(dim, dim);
  const Matrix sum_ab = a + b;
  for (int i = 0; i < N; ++i) lhs = lhs * sum_ab;

  // powers[n] = A^n, likewise for B
  std::vector<Matrix> pow_a{Matrix::Identity(dim, dim)};
  std::vector<Matrix> pow_b{Matrix::Identity(dim, dim)};
  for (int n = 1; n <= N; ++n) {
    pow_a.push_back(pow_a.back() * a);
    pow_b.push_back(pow_b.back() * b);
  }
  Matrix rhs = Matrix::Zero(dim, dim);
  double scale = std::max(1.0, std::pow(sum_ab.norm(), N));
  for (int n = 0; n <= N; ++n) {
    const Matrix term = q.pow(-n * (N - n)) * qbinom(N, n, q) * (pow_a[n] * pow_b[N - n]);
    scale = std::max(scale, term.norm());
    rhs += term;
  }
  // Scaled by the size of the factors, not of the result.
  out.residual = (lhs - rhs).norm() / scale;
  return out;
}

ObstructionSides cocommutativity_obstruction(const CentralScalars& rho1, const CentralScalars& rho2) {
  return {rho2.x_minus + rho2.z * rho1.x_minus, rho1.x_minus + rho1.z * rho2.x_minus};
}

}  // namespace uqosp
