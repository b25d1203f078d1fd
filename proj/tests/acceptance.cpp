// Acceptance gate: one line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "uqosp/braid.hpp"
#include "uqosp/golden.hpp"
#include "uqosp/rmat.hpp"

using namespace uqosp;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::vector<std::pair<int, int>> admissible_upto(int kmax) {
  std::vector<std::pair<int, int>> out;
  for (int k = 2; k <= kmax; ++k)
    for (int m = 1; m < k; ++m)
      if (std::gcd(m, k) == 1) out.emplace_back(k, m);
  return out;
}

std::vector<RepGroup> groups_of(const AdmissibleRoot& root) {
  if (root.root_class() == RootClass::ClassI) return {RepGroup::Ia, RepGroup::Ib, RepGroup::Ic};
  return {RepGroup::IIa, RepGroup::IIb, RepGroup::IIc};
}

// Integer p for Ib, even p for IIb, otherwise complex p with 0 < Re(p) <= 4k
// and a small imaginary part; Ic/IIc also get integer draws half the time.
Complex sample_p(RepGroup g, int k, std::mt19937& rng) {
  std::uniform_real_distribution<double> re(0.05, 4.0 * k);
  std::uniform_real_distribution<double> im(-0.3, 0.3);
  std::uniform_int_distribution<int> whole(1, 4 * k);
  std::uniform_int_distribution<int> half(1, 2 * k);
  switch (g) {
    case RepGroup::Ib: return double(whole(rng));
    case RepGroup::IIb: return double(2 * half(rng));
    case RepGroup::Ic:
    case RepGroup::IIc:
      if (rng() % 2 == 0) return double(whole(rng));
      [[fallthrough]];
    default: {
      Complex p(re(rng), im(rng));
      if (is_integer(p)) p += 0.25;
      return p;
    }
  }
}

FockModule draw(const AdmissibleRoot& root, RepGroup g, std::mt19937& rng) {
  return build_module(classify(root, sample_p(g, root.k(), rng), g));
}

FockModule k3(Complex p, RepGroup g) { return build_module(classify(make_root(3, 1), p, g)); }

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Module pairs of the sweep {admissible (k,m), k <= 5} x {groups} x {5 samples}.
std::vector<std::pair<FockModule, FockModule>> sweep_pairs(std::mt19937& rng) {
  std::vector<std::pair<FockModule, FockModule>> out;
  for (auto [k, m] : admissible_upto(5)) {
    const auto root = make_root(k, m);
    const auto gs = groups_of(root);
    for (auto g : gs) {
      for (int s = 0; s < 5; ++s) {
        const auto other = gs[rng() % gs.size()];
        out.emplace_back(draw(root, g, rng), draw(root, other, rng));
      }
    }
  }
  return out;
}

Outcome golden_reproduction() {
  double worst = 0.0;
  for (const auto& label : golden::labels()) worst = std::max(worst, golden::reproduce(label).max_deviation);
  const auto f = build_module(classify(make_root(2, 1), 1.0, RepGroup::Ib));
  const Matrix r = r_explicit(f, f).matrix;
  int nonzero = 0;
  for (Eigen::Index i = 0; i < r.size(); ++i) nonzero += std::abs(r.data()[i]) > kZeroTolerance;
  const bool pass = worst <= 1e-12 && nonzero == 5;
  return {pass, "max deviation " + sci(worst) + " (tol 1e-12), fermionic nonzero entries " + std::to_string(nonzero)};
}

Outcome oracle_equivalence() {
  // Entrywise deviation relative to the largest entry.
  std::mt19937 rng(101);
  double worst = 0.0, worst_abs = 0.0;
  int count = 0;
  for (const auto& [a, b] : sweep_pairs(rng)) {
    const Matrix e = r_explicit(a, b).matrix;
    const double dev = max_abs(e - r_universal(a, b).matrix);
    worst_abs = std::max(worst_abs, dev);
    worst = std::max(worst, dev / std::max(1.0, max_abs(e)));
    ++count;
  }
  return {worst <= 1e-11, std::to_string(count) + " pairs, max scaled deviation " + sci(worst) +
                              " (tol 1e-11), max absolute deviation " + sci(worst_abs)};
}

Outcome qybe() {
  std::mt19937 rng(202);
  double worst = qybe_residual(k3(2.3, RepGroup::IIc), k3(0.9, RepGroup::IIc), k3(4.1, RepGroup::IIc));
  int count = 1;
  // three free parameters on the 27-dimensional class II space
  std::uniform_real_distribution<double> re(0.05, 12.0), im(-0.3, 0.3);
  for (int s = 0; s < 10; ++s) {
    worst = std::max(worst, qybe_residual(k3(Complex(re(rng), im(rng)), RepGroup::IIc),
                                          k3(Complex(re(rng), im(rng)), RepGroup::IIc),
                                          k3(Complex(re(rng), im(rng)), RepGroup::IIc)));
    ++count;
  }
  const auto roots = admissible_upto(5);
  while (count < 60) {
    const auto [k, m] = roots[rng() % roots.size()];
    const auto root = make_root(k, m);
    const auto gs = groups_of(root);
    const auto a = draw(root, gs[rng() % 3], rng);
    const auto b = draw(root, gs[rng() % 3], rng);
    const auto c = draw(root, gs[rng() % 3], rng);
    worst = std::max(worst, qybe_residual(a, b, c));
    ++count;
  }
  return {worst <= 1e-9, std::to_string(count) + " triples, max residual " + sci(worst) + " (tol 1e-9)"};
}

Outcome leg_consistency() {
  std::mt19937 rng(303);
  std::vector<std::array<FockModule, 3>> triples;
  triples.push_back({k3(1.3, RepGroup::IIc), k3(2.0, RepGroup::IIb), k3(0.4, RepGroup::IIc)});
  triples.push_back({k3(2.0, RepGroup::IIb), k3(0.7, RepGroup::IIa), k3(6.0, RepGroup::IIb)});
  for (auto [k, m] : admissible_upto(4)) {
    const auto root = make_root(k, m);
    const auto gs = groups_of(root);
    for (int s = 0; s < 3; ++s) {
      triples.push_back({draw(root, gs[rng() % 3], rng), draw(root, gs[rng() % 3], rng),
                         draw(root, gs[rng() % 3], rng)});
    }
  }
  double worst = 0.0;
  int mixed = 0;
  for (const auto& t : triples) {
    mixed += !(t[0].dim() == t[1].dim() && t[1].dim() == t[2].dim());
    for (auto pair : {LegPair::r12, LegPair::r13, LegPair::r23}) {
      const Matrix direct = r_legs(t[0], t[1], t[2], pair).matrix;
      const Matrix perm = r_legs_via_perm(t[0], t[1], t[2], pair).matrix;
      worst = std::max(worst, max_abs(direct - perm) / std::max(1.0, max_abs(direct)));
    }
  }
  return {worst <= 1e-11 && mixed > 0, std::to_string(triples.size()) + " triples (" + std::to_string(mixed) +
                                           " mixed-dimension), max deviation " + sci(worst) + " (tol 1e-11)"};
}

Outcome intertwining() {
  std::mt19937 rng(101);
  double worst = 0.0, weight = 0.0;
  int count = 0;
  for (const auto& [a, b] : sweep_pairs(rng)) {
    const auto r = intertwine_residual(a, b);
    worst = std::max(worst, r.max());
    weight = std::max(weight, r.h);
    ++count;
  }
  return {worst <= 1e-12 && weight <= 1e-13, std::to_string(count) + " pairs, max residual " + sci(worst) +
                                                 " (tol 1e-12), weight conservation " + sci(weight) +
                                                 " (tol 1e-13)"};
}

Outcome algebra_relations() {
  std::mt19937 rng(404);
  double rel = 0.0, delta = 0.0, central = 0.0, x = 0.0, z = 0.0;
  int modules = 0;
  for (auto [k, m] : admissible_upto(7)) {
    const auto root = make_root(k, m);
    const auto gs = groups_of(root);
    for (auto g : gs) {
      for (int s = 0; s < 20; ++s) {
        const Complex p = sample_p(g, k, rng);
        const auto mod = build_module(classify(root, p, g));
        ++modules;
        rel = std::max(rel, defining_relation_residual(mod));
        const auto cv = central_values(mod);
        central = std::max(central, cv.scalarness_residual);
        x = std::max({x, std::abs(cv.x_plus), std::abs(cv.x_minus)});
        const Complex want = root.q().pow(2.0 * k * p);
        z = std::max(z, std::abs(cv.z - want) / std::max(1.0, std::abs(want)));
        if (s < 3 && k <= 5) {
          const auto other = draw(root, gs[rng() % 3], rng);
          delta = std::max(delta, relation_residual(coproduct_rep(Generator::H, mod, other).matrix,
                                                    coproduct_rep(Generator::a_plus, mod, other).matrix,
                                                    coproduct_rep(Generator::a_minus, mod, other).matrix, root.q()));
          delta = std::max(delta,
                           relation_residual(opposite_coproduct_rep(Generator::H, mod, other).matrix,
                                             opposite_coproduct_rep(Generator::a_plus, mod, other).matrix,
                                             opposite_coproduct_rep(Generator::a_minus, mod, other).matrix, root.q()));
        }
      }
    }
  }
  const bool pass = rel <= 1e-10 && delta <= 1e-10 && central <= 1e-12 && x <= 1e-12 && z <= 1e-12;
  return {pass, std::to_string(modules) + " modules, relations " + sci(rel) + ", coproduct images " + sci(delta) +
                    " (tol 1e-10), scalarness " + sci(central) + ", |x| " + sci(x) + ", z deviation " + sci(z) +
                    " (tol 1e-12)"};
}

Outcome braid_relations() {
  std::mt19937 rng(505);
  double braid = 0.0, commutant = 0.0;
  int reps = 0;
  for (auto [k, m] : admissible_upto(3)) {
    const auto root = make_root(k, m);
    for (auto g : groups_of(root)) {
      for (int s = 0; s < 2; ++s) {
        const auto mod = draw(root, g, rng);
        for (int N = 2; N <= 4; ++N) {
          long size = 1;
          for (int i = 0; i < N; ++i) size *= mod.dim();
          if (size > kDefaultSizeCap) continue;
          const auto rep = braid_generators(mod, N);
          const auto r = braid_relation_residual(rep);
          braid = std::max({braid, r.far_commutation, r.yang_baxter});
          if (N == 2) commutant = std::max(commutant, intertwiner_commutant_residual(rep));
          ++reps;
        }
      }
    }
  }
  return {braid <= 1e-9 && commutant <= 1e-12, std::to_string(reps) + " representations, braid residual " +
                                                   sci(braid) + " (tol 1e-9), commutant " + sci(commutant) +
                                                   " (tol 1e-12)"};
}

Outcome qbinom_identity() {
  std::mt19937 rng(606);
  double worst = 0.0;
  int checks = 0;
  for (auto [k, m] : admissible_upto(5)) {
    const auto root = make_root(k, m);
    if (root.root_class() != RootClass::ClassI) continue;
    for (int s = 0; s < 3; ++s) {
      const auto gs = groups_of(root);
      const auto a = draw(root, gs[rng() % 3], rng);
      const auto b = draw(root, gs[rng() % 3], rng);
      for (int N = 1; N <= 2 * k; ++N) {
        worst = std::max(worst, qbinom_expansion_residual(a, b, N).residual);
        ++checks;
      }
    }
  }
  return {worst <= 1e-12, std::to_string(checks) + " expansions up to N = 2k, max residual " + sci(worst) +
                              " (tol 1e-12)"};
}

Outcome limit_decay() {
  // Halving eps must halve the residual within a factor 1.2.
  const double lo = 2.0 / 1.2, hi = 2.0 * 1.2;
  std::string detail = "ratios r(eps)/r(eps/2):";
  bool pass = true;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const auto a = build_truncated_generic(std::exp(Complex(0.0, eps)), 3.0, 10);
    const auto b = build_truncated_generic(std::exp(Complex(0.0, eps / 2)), 3.0, 10);
    const double ratio = parabose_limit_residual(a) / parabose_limit_residual(b);
    pass = pass && ratio >= lo && ratio <= hi;
    char buf[48];
    std::snprintf(buf, sizeof buf, " %.3f", ratio);
    detail += buf;
  }
  return {pass, detail + " (required within [1.667, 2.4])"};
}

Outcome submatrix_chain() {
  double worst = 0.0;
  for (Complex p1 : golden::branch_samples()) {
    const Matrix big = r_explicit(k3(p1, RepGroup::IIc), k3(2.0, RepGroup::IIc)).matrix;
    const Matrix mid = r_explicit(k3(p1, RepGroup::IIc), k3(2.0, RepGroup::IIb)).matrix;
    worst = std::max(worst, golden::max_deviation(golden::delete_rows_cols(big, {2, 5, 8}), mid));
    worst = std::max(worst, golden::max_deviation(golden::delete_rows_cols(golden::root_9x9(p1, 2.0), {2, 5, 8}),
                                                  golden::branch_6x6(p1)));
  }
  const Matrix mid = r_explicit(k3(2.0, RepGroup::IIc), k3(2.0, RepGroup::IIb)).matrix;
  const Matrix small = r_explicit(k3(2.0, RepGroup::IIb), k3(2.0, RepGroup::IIb)).matrix;
  worst = std::max(worst, golden::max_deviation(golden::delete_rows_cols(mid, {4, 5}), small));
  worst = std::max(worst, golden::max_deviation(golden::delete_rows_cols(golden::branch_6x6(2.0), {4, 5}),
                                                golden::constant_4x4().evaluate()));
  return {worst <= 1e-12, "max deviation " + sci(worst) + " (tol 1e-12)"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 means no runtime requirement
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden matrices", 1.0, golden_reproduction},
      {2, "explicit vs universal R", 30.0, oracle_equivalence},
      {3, "QYBE", 60.0, qybe},
      {4, "leg operators", 10.0, leg_consistency},
      {5, "intertwining", 0.0, intertwining},
      {6, "algebra relations and central values", 0.0, algebra_relations},
      {7, "braid relations", 0.0, braid_relations},
      {8, "q-binomial operator identity", 0.0, qbinom_identity},
      {9, "linear decay of the para-Bose limit residual", 0.0, limit_decay},
      {10, "submatrix chain", 0.0, submatrix_chain},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_seconds == 0.0 || seconds < c.budget_seconds;
    const bool pass = outcome.pass && in_time;
    failures += !pass;
    char timing[64];
    if (c.budget_seconds > 0.0) {
      std::snprintf(timing, sizeof timing, "%.3f s (budget %.0f s)", seconds, c.budget_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    }
    std::printf("criterion %2d %s  %s: %s; %s\n", c.id, pass ? "PASS" : "FAIL", c.name, outcome.detail.c_str(),
                timing);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
