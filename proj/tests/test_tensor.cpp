#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "uqosp/error.hpp"
#include "uqosp/tensor.hpp"

using namespace uqosp;

namespace {

FockModule module_of(int k, int m, Complex p, RepGroup g) { return build_module(classify(make_root(k, m), p, g)); }

// Entry-by-entry Koszul product on two factors: column (j1, j2), row (i1, i2).
Matrix oracle_kron(const GradedOperator& a, const GradedOperator& b) {
  const auto da = a.dim();
  const auto db = b.dim();
  Matrix out = Matrix::Zero(da * db, da * db);
  for (int i1 = 0; i1 < da; ++i1)
    for (int i2 = 0; i2 < db; ++i2)
      for (int j1 = 0; j1 < da; ++j1)
        for (int j2 = 0; j2 < db; ++j2) {
          const double sign = (bit(b.parity) * (j1 % 2)) % 2 == 0 ? 1.0 : -1.0;
          out(i1 * db + i2, j1 * db + j2) = sign * a.matrix(i1, j1) * b.matrix(i2, j2);
        }
  return out;
}

Eigen::VectorXcd basis(const TensorSpace& space, const std::vector<int>& multi) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(space.dim());
  v(space.flat_index(multi)) = 1.0;
  return v;
}

GradedOperator random_operator(int dim, Parity parity, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Matrix m = Matrix::Zero(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      if ((parity_of(r) + parity_of(c)) == parity) m(r, c) = Complex(g(rng), g(rng));
  return {m, parity};
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("lexicographic indexing") {
  const TensorSpace two({3, 4});
  CHECK(two.dim() == 12);
  CHECK(two.flat_index({2, 1}) == 2 * 4 + 1);
  const TensorSpace three({2, 3, 4});
  CHECK(three.flat_index({1, 2, 3}) == (1 * 3 + 2) * 4 + 3);
  for (int f = 0; f < three.dim(); ++f) {
    const auto mi = three.multi_index(f);
    CHECK(three.flat_index(mi) == f);
    CHECK(three.parity_of_index(f) == parity_of(mi[0] + mi[1] + mi[2]));
  }
  CHECK(three.slice(1, 2).dims() == std::vector<int>{3, 4});
  CHECK(code_of([&] { three.slice(2, 2); }) == ErrorCode::invalid_leg);
}

TEST_CASE("graded_kron examples") {
  const auto mod = module_of(3, 1, 0.7, RepGroup::IIa);
  const TensorSpace one({mod.dim()});
  const TensorSpace pair = TensorSpace::of({&mod, &mod});
  const auto id = identity_operator(mod.dim());

  const auto ii = graded_kron(id, id, one, one);
  CHECK(ii.parity == Parity::even);
  CHECK(ii.matrix.isApprox(Matrix::Identity(9, 9)));

  const auto ap1 = graded_kron(mod.a_plus(), id, one, one);
  CHECK(ap1.parity == Parity::odd);
  CHECK((ap1.matrix * basis(pair, {0, 0}) - basis(pair, {1, 0})).norm() == 0.0);

  const auto ap2 = graded_kron(id, mod.a_plus(), one, one);
  CHECK((ap2.matrix * basis(pair, {1, 0}) + basis(pair, {1, 1})).norm() == 0.0);
  CHECK((ap2.matrix * basis(pair, {0, 0}) - basis(pair, {0, 1})).norm() == 0.0);

  CHECK(code_of([&] { graded_kron(mod.a_plus(), id, TensorSpace({2}), one); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("graded_kron matches the entrywise oracle") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const int da = 1 + int(rng() % 4);
    const int db = 1 + int(rng() % 4);
    const auto a = random_operator(da, Parity(rng() % 2), rng);
    const auto b = random_operator(db, Parity(rng() % 2), rng);
    const auto ab = graded_kron(a, b, TensorSpace({da}), TensorSpace({db}));
    CHECK((ab.matrix - oracle_kron(a, b)).norm() <= 1e-14);
    CHECK(ab.parity == a.parity + b.parity);
  }
}

TEST_CASE("graded_kron is associative and reduces to kron for even factors") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int da = 1 + int(rng() % 3), db = 1 + int(rng() % 3), dc = 1 + int(rng() % 3);
    const auto a = random_operator(da, Parity(rng() % 2), rng);
    const auto b = random_operator(db, Parity(rng() % 2), rng);
    const auto c = random_operator(dc, Parity(rng() % 2), rng);
    const TensorSpace sa({da}), sb({db}), sc({dc});
    const auto left = graded_kron(graded_kron(a, b, sa, sb), c, TensorSpace({da, db}), sc);
    const auto right = graded_kron(a, graded_kron(b, c, sb, sc), sa, TensorSpace({db, dc}));
    CHECK((left.matrix - right.matrix).norm() <= 1e-13 * std::max(1.0, left.matrix.norm()));

    const auto ea = random_operator(da, Parity::even, rng);
    const auto eb = random_operator(db, Parity::even, rng);
    Matrix plain(da * db, da * db);
    for (int r = 0; r < da; ++r)
      for (int s = 0; s < da; ++s) plain.block(r * db, s * db, db, db) = ea.matrix(r, s) * eb.matrix;
    CHECK((graded_kron(ea, eb, sa, sb).matrix - plain).norm() <= 1e-14);
  }
}

TEST_CASE("super_perm examples and involution") {
  const auto mod = module_of(3, 1, 0.7, RepGroup::IIa);
  const auto space = TensorSpace::of({&mod, &mod, &mod});
  const auto p23 = super_perm(space, 1, 2);
  for (int f = 0; f < space.dim(); ++f) {
    const auto n = space.multi_index(f);
    const double sign = (n[1] * n[2]) % 2 == 0 ? 1.0 : -1.0;
    CHECK((p23.matrix * basis(space, n) - sign * basis(space, {n[0], n[2], n[1]})).norm() == 0.0);
  }
  CHECK(p23.parity == Parity::even);
  CHECK((p23.matrix * p23.matrix - Matrix::Identity(27, 27)).norm() == 0.0);

  const auto pair = TensorSpace::of({&mod, &mod});
  const auto p = super_perm(pair, 0, 1);
  CHECK((p.matrix * basis(pair, {0, 0}) - basis(pair, {0, 0})).norm() == 0.0);
  CHECK((p.matrix * basis(pair, {1, 1}) + basis(pair, {1, 1})).norm() == 0.0);

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const auto pij = super_perm(space, i, j);
      CHECK((pij.matrix * pij.matrix - Matrix::Identity(27, 27)).norm() == 0.0);
    }
  CHECK(code_of([&] { super_perm(space, 1, 1); }) == ErrorCode::invalid_leg);
  CHECK(code_of([&] { super_perm(space, 0, 3); }) == ErrorCode::invalid_leg);
  CHECK(code_of([&] { super_perm(TensorSpace({2, 3}), 0, 1); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("super_flip between unequal spaces") {
  const TensorSpace space({2, 3, 4});
  const auto flip = super_flip(space, 0, 2);
  CHECK(flip.target.dims() == std::vector<int>{4, 3, 2});
  for (int f = 0; f < space.dim(); ++f) {
    const auto n = space.multi_index(f);
    // v0 passes v1 and v2, then v2 passes v1: parity n0(n1+n2) + n2 n1
    const int exponent = n[0] * (n[1] + n[2]) + n[1] * n[2];
    const double sign = exponent % 2 == 0 ? 1.0 : -1.0;
    Eigen::VectorXcd want = basis(flip.target, {n[2], n[1], n[0]});
    CHECK((flip.op.matrix * basis(space, n) - sign * want).norm() == 0.0);
  }
  const auto back = super_flip(flip.target, 0, 2);
  CHECK((back.op.matrix * flip.op.matrix - Matrix::Identity(24, 24)).norm() == 0.0);
}

TEST_CASE("coproduct examples") {
  const auto m1 = module_of(3, 1, Complex(0.7, 0.2), RepGroup::IIa);
  const auto m2 = module_of(3, 1, 1.3, RepGroup::IIa);
  const Complex p1 = m1.p(), p2 = m2.p();
  const auto& q = m1.q();
  const auto space = TensorSpace::of({&m1, &m2});

  const auto dh = coproduct_rep(Generator::H, m1, m2);
  for (int f = 0; f < space.dim(); ++f) {
    const auto n = space.multi_index(f);
    CHECK(std::abs(dh.matrix(f, f) - (2.0 * n[0] + p1 + 2.0 * n[1] + p2)) < 1e-14);
  }
  CHECK((opposite_coproduct_rep(Generator::H, m1, m2).matrix - dh.matrix).norm() == 0.0);

  const auto dp = coproduct_rep(Generator::a_plus, m1, m2);
  CHECK(dp.parity == Parity::odd);
  Eigen::VectorXcd want = basis(space, {1, 0}) + q.pow(-p1) * basis(space, {0, 1});
  CHECK((dp.matrix * basis(space, {0, 0}) - want).norm() <= 1e-14);
  want = basis(space, {2, 0}) - q.pow(-(2.0 + p1)) * basis(space, {1, 1});
  CHECK((dp.matrix * basis(space, {1, 0}) - want).norm() <= 1e-14);

  const auto op = opposite_coproduct_rep(Generator::a_plus, m1, m2);
  want = q.pow(-p2) * basis(space, {1, 0}) + basis(space, {0, 1});
  CHECK((op.matrix * basis(space, {0, 0}) - want).norm() <= 1e-14);
}

TEST_CASE("opposite coproduct is the flipped coproduct on equal modules") {
  const auto mod = module_of(2, 1, 1.0, RepGroup::Ib);
  const auto pair = TensorSpace::of({&mod, &mod});
  const auto P = super_perm(pair, 0, 1).matrix;
  for (auto g : {Generator::H, Generator::a_plus, Generator::a_minus}) {
    const Matrix conj = P * coproduct_rep(g, mod, mod).matrix * P;
    CHECK((conj - opposite_coproduct_rep(g, mod, mod).matrix).norm() <= 1e-14);
  }
  const auto other = module_of(3, 1, Complex(2.2, 0.3), RepGroup::IIa);
  const auto pair3 = TensorSpace::of({&other, &other});
  const auto P3 = super_perm(pair3, 0, 1).matrix;
  for (auto g : {Generator::H, Generator::a_plus, Generator::a_minus}) {
    const Matrix conj = P3 * coproduct_rep(g, other, other).matrix * P3;
    CHECK((conj - opposite_coproduct_rep(g, other, other).matrix).norm() <= 1e-12);
  }
}

TEST_CASE("coproduct images satisfy the defining relations for k <= 5") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> re(0.1, 8.0), im(-0.4, 0.4);
  for (int k = 2; k <= 5; ++k) {
    for (int m = 1; m < k; ++m) {
      if (std::gcd(k, m) != 1) continue;
      const auto root = make_root(k, m);
      const auto g = root.root_class() == RootClass::ClassI ? RepGroup::Ic : RepGroup::IIc;
      for (int s = 0; s < 4; ++s) {
        const auto m1 = build_module(classify(root, Complex(re(rng), im(rng)), g));
        const auto m2 = build_module(classify(root, Complex(re(rng), im(rng)), g));
        CHECK(relation_residual(coproduct_rep(Generator::H, m1, m2).matrix,
                                coproduct_rep(Generator::a_plus, m1, m2).matrix,
                                coproduct_rep(Generator::a_minus, m1, m2).matrix, root.q()) <= 1e-10);
        CHECK(relation_residual(opposite_coproduct_rep(Generator::H, m1, m2).matrix,
                                opposite_coproduct_rep(Generator::a_plus, m1, m2).matrix,
                                opposite_coproduct_rep(Generator::a_minus, m1, m2).matrix, root.q()) <= 1e-10);
      }
    }
  }
}

TEST_CASE("embed_at_leg") {
  const auto mod = module_of(3, 1, 0.7, RepGroup::IIa);
  const auto space = TensorSpace::of({&mod, &mod, &mod});
  const auto id = identity_operator(3);
  CHECK(embed_at_leg(id, space, 1).matrix.isApprox(Matrix::Identity(27, 27)));

  const auto h = embed_at_leg(mod.H(), space, 1);
  for (int f = 0; f < 27; ++f) {
    const auto n = space.multi_index(f);
    CHECK(h.matrix(f, f) == mod.H().matrix(n[1], n[1]));
  }
  CHECK((h.matrix - Matrix(h.matrix.diagonal().asDiagonal())).norm() == 0.0);

  const TensorSpace one({3});
  const auto two_leg = graded_kron(mod.a_plus(), mod.a_minus(), one, one);
  const auto embedded = embed_at_leg(two_leg, space, 1, 2);
  const auto direct = graded_kron(id, two_leg, one, TensorSpace({3, 3}));
  CHECK((embedded.matrix - direct.matrix).norm() == 0.0);

  CHECK(code_of([&] { embed_at_leg(id, space, 3); }) == ErrorCode::invalid_leg);
  CHECK(code_of([&] { embed_at_leg(two_leg, space, 2, 2); }) == ErrorCode::invalid_leg);
  CHECK(code_of([&] { embed_at_leg(identity_operator(2), space, 0); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("q-binomial expansion of the coproduct of a-") {
  const auto f = module_of(2, 1, 1.0, RepGroup::Ib);
  const auto n1 = qbinom_expansion_residual(f, f, 1);
  CHECK(n1.precondition <= 1e-14);
  CHECK(n1.residual == 0.0);
  CHECK(qbinom_expansion_residual(f, f, 2).residual <= 1e-12);

  for (auto [k, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 1}, {4, 3}}) {
    const auto root = make_root(k, m);
    const auto m1 = build_module(classify(root, Complex(1.3, 0.1), RepGroup::Ia));
    const auto m2 = build_module(classify(root, 2.6, RepGroup::Ia));
    for (int N = 1; N <= 2 * k; ++N) {
      CAPTURE(N);
      const auto r = qbinom_expansion_residual(m1, m2, N);
      CHECK(r.precondition <= 1e-12);
      CHECK(r.residual <= 1e-12);
    }
  }
}

TEST_CASE("cocommutativity obstruction") {
  CHECK(cocommutativity_obstruction({0.0, 0.0}, {0.0, 0.0}).lhs == Complex(0.0));
  const auto a = cocommutativity_obstruction({1.0, 3.0}, {2.0, 5.0});
  CHECK(a.lhs == Complex(7.0));
  CHECK(a.rhs == Complex(7.0));
  const auto b = cocommutativity_obstruction({1.0, 2.0}, {1.0, 3.0});
  CHECK(b.lhs == Complex(4.0));
  CHECK(b.rhs == Complex(3.0));

  const auto m1 = module_of(3, 1, 0.7, RepGroup::IIa);
  const auto m2 = module_of(3, 1, 2.0, RepGroup::IIb);
  const auto c1 = central_values(m1);
  const auto c2 = central_values(m2);
  const auto s = cocommutativity_obstruction({c1.x_minus, c1.z}, {c2.x_minus, c2.z});
  CHECK(std::abs(s.lhs) <= 1e-12);
  CHECK(std::abs(s.rhs) <= 1e-12);
}
