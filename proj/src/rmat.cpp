#include "uqosp/rmat.hpp"

#include <algorithm>
#include <string>

#include "uqosp/error.hpp"

namespace uqosp {
namespace {

const ModuleSpec& require_spec(const FockModule& mod) {
  if (!mod.spec()) throw Error(ErrorCode::precondition_failed, "R-matrices need root-of-unity modules");
  return *mod.spec();
}

void require_same_root(std::initializer_list<const FockModule*> mods) {
  const auto& root = require_spec(**mods.begin()).root;
  for (const auto* m : mods) {
    const auto& other = require_spec(*m).root;
    if (!(other == root)) {
      throw Error(ErrorCode::root_mismatch,
                  "modules over different roots (k,m)=(" + std::to_string(root.k()) + "," +
                      std::to_string(root.m()) + ") vs (" + std::to_string(other.k()) + "," +
                      std::to_string(other.m()) + ")");
    }
  }
}

double sign_power(long exponent) { return (exponent % 2 == 0) ? 1.0 : -1.0; }

// (q - q^-1)^n / (n)_{-q^-2}!
Complex series_weight(const Deformation& q, int n) {
  const Complex a = -q.pow(-2);
  Complex diff_pow(1.0, 0.0);
  for (int i = 0; i < n; ++i) diff_pow *= q.value() - q.inverse();
  return diff_pow / qpoch_factorial(n, a);
}

// Coefficient of |l1+n> (x) |l2-n> in R(|l1> (x) |l2>) without the
// (l1, n)-dependent sign; callers supply the sign for their leg layout.
Complex unsigned_term(const FockModule& mod1, const FockModule& mod2, int l1, int l2, int n) {
  const auto& q = mod1.q();
  const Complex phase = q.pow((2.0 * l1 + mod1.p()) * (2.0 * l2 + mod2.p()) / 2.0);
  Complex product(1.0, 0.0);
  for (int i = 0; i < n; ++i) product *= brace(l2 - i, 0.0, q) * brace(l2 - 1 - i, mod2.p(), q);
  return phase * series_weight(q, n) * product;
}

Matrix matrix_power(const Matrix& m, int n) {
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < n; ++i) out = out * m;
  return out;
}

}  // namespace

RMatrix r_explicit(const FockModule& mod1, const FockModule& mod2) {
  require_same_root({&mod1, &mod2});
  const int d1 = mod1.dim();
  const int d2 = mod2.dim();
  const int L1 = mod1.highest_index();
  RMatrix out{*mod1.spec(), *mod2.spec(), Matrix::Zero(d1 * d2, d1 * d2), Construction::Explicit};
  for (int l1 = 0; l1 < d1; ++l1) {
    for (int l2 = 0; l2 < d2; ++l2) {
      const int col = l1 * d2 + l2;
      for (int n = 0; n <= std::min(L1 - l1, l2); ++n) {
        const long exponent = static_cast<long>(n) * (n + 2 * l1 + 1) / 2;
        out.matrix((l1 + n) * d2 + (l2 - n), col) = sign_power(exponent) * unsigned_term(mod1, mod2, l1, l2, n);
      }
    }
  }
  return out;
}

RMatrix r_universal(const FockModule& mod1, const FockModule& mod2) {
  require_same_root({&mod1, &mod2});
  const auto& q = mod1.q();
  const int d1 = mod1.dim();
  const int d2 = mod2.dim();
  const TensorSpace left({d1});
  const TensorSpace right({d2});

  Matrix cartan = Matrix::Zero(d1 * d2, d1 * d2);
  for (int l1 = 0; l1 < d1; ++l1) {
    for (int l2 = 0; l2 < d2; ++l2) {
      cartan(l1 * d2 + l2, l1 * d2 + l2) = q.pow(mod1.H().matrix(l1, l1) * mod2.H().matrix(l2, l2) / 2.0);
    }
  }

  auto series_term = [&](int n) {
    const GradedOperator raise{matrix_power(mod1.a_plus().matrix, n), parity_of(n)};
    const GradedOperator lower{matrix_power(mod2.a_minus().matrix, n), parity_of(n)};
    return graded_kron(raise, lower, left, right).matrix;
  };

  const int cutoff = std::min(mod1.highest_index(), mod2.highest_index()) + 1;
  Matrix sum = Matrix::Zero(d1 * d2, d1 * d2);
  for (int n = 0; n < cutoff; ++n) {
    const long exponent = static_cast<long>(n) * (n + 1) / 2;
    sum += (sign_power(exponent) * series_weight(q, n)) * series_term(n);
  }
  // The first omitted term must vanish identically by nilpotency.
  if (series_term(cutoff).cwiseAbs().maxCoeff() != 0.0) {
    throw Error(ErrorCode::precondition_failed, "universal series did not terminate at min(L1,L2)+1");
  }
  return {*mod1.spec(), *mod2.spec(), sum * cartan, Construction::Universal};
}

GradedOperator r_legs(const FockModule& mod1, const FockModule& mod2, const FockModule& mod3, LegPair pair) {
  require_same_root({&mod1, &mod2, &mod3});
  const TensorSpace space = TensorSpace::of({&mod1, &mod2, &mod3});
  GradedOperator out{Matrix::Zero(space.dim(), space.dim()), Parity::even};

  // Acting legs (first, second) and the passive leg.
  const FockModule* first = &mod1;
  const FockModule* second = &mod2;
  int a = 0, b = 1;
  if (pair == LegPair::r13) {
    second = &mod3;
    b = 2;
  } else if (pair == LegPair::r23) {
    first = &mod2;
    second = &mod3;
    a = 1;
    b = 2;
  }
  const int L_first = first->highest_index();

  for (int col = 0; col < space.dim(); ++col) {
    const auto in = space.multi_index(col);
    const int la = in[a];
    const int lb = in[b];
    // R13 picks up (-1)^{n l2} from moving past the middle leg.
    const int skipped = (pair == LegPair::r13) ? in[1] : 0;
    for (int n = 0; n <= std::min(L_first - la, lb); ++n) {
      const long exponent = static_cast<long>(n) * (n + 2 * la + 2 * skipped + 1) / 2;
      auto target = in;
      target[a] += n;
      target[b] -= n;
      out.matrix(space.flat_index(target), col) = sign_power(exponent) * unsigned_term(*first, *second, la, lb, n);
    }
  }
  return out;
}

GradedOperator r_legs_via_perm(const FockModule& mod1, const FockModule& mod2, const FockModule& mod3,
                               LegPair pair) {
  require_same_root({&mod1, &mod2, &mod3});
  const TensorSpace space = TensorSpace::of({&mod1, &mod2, &mod3});
  switch (pair) {
    case LegPair::r12: {
      const GradedOperator r{r_explicit(mod1, mod2).matrix, Parity::even};
      return embed_at_leg(r, space, 0, 2);
    }
    case LegPair::r23: {
      const GradedOperator r{r_explicit(mod2, mod3).matrix, Parity::even};
      return embed_at_leg(r, space, 1, 2);
    }
    case LegPair::r13: {
      const auto to_swapped = super_flip(space, 1, 2);
      const auto back = super_flip(to_swapped.target, 1, 2);
      const GradedOperator r{r_explicit(mod1, mod3).matrix, Parity::even};
      const auto lifted = embed_at_leg(r, to_swapped.target, 0, 2);
      return {back.op.matrix * lifted.matrix * to_swapped.op.matrix, Parity::even};
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown leg pair");
}

double qybe_residual(const FockModule& mod1, const FockModule& mod2, const FockModule& mod3) {
  const Matrix r12 = r_legs(mod1, mod2, mod3, LegPair::r12).matrix;
  const Matrix r13 = r_legs(mod1, mod2, mod3, LegPair::r13).matrix;
  const Matrix r23 = r_legs(mod1, mod2, mod3, LegPair::r23).matrix;
  const Matrix lhs = r12 * r13 * r23;
  const Matrix rhs = r23 * r13 * r12;
  return relative_residual(lhs, rhs);
}

IntertwineResidual intertwine_residual(const FockModule& mod1, const FockModule& mod2) {
  const Matrix r = r_explicit(mod1, mod2).matrix;
  auto one = [&](Generator gen) {
    const Matrix lhs = r * coproduct_rep(gen, mod1, mod2).matrix;
    const Matrix rhs = opposite_coproduct_rep(gen, mod1, mod2).matrix * r;
    return relative_residual(lhs, rhs);
  };
  return {one(Generator::H), one(Generator::a_plus), one(Generator::a_minus)};
}

GradedOperator r_check(const FockModule& mod) {
  const TensorSpace space = TensorSpace::of({&mod, &mod});
  return {super_perm(space, 0, 1).matrix * r_explicit(mod, mod).matrix, Parity::even};
}

}  // namespace uqosp
