#include "uqosp/golden.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "uqosp/error.hpp"
#include "uqosp/rmat.hpp"

namespace uqosp::golden {
namespace {

using std::numbers::pi;
const Complex I(0.0, 1.0);

Complex expi(Complex angle) { return std::exp(I * angle); }

const double kSqrt3 = std::sqrt(3.0);

FockModule module_k3(Complex p, RepGroup group) { return build_module(classify(make_root(3, 1), p, group)); }

}  // namespace

Complex PhaseTerm::value() const {
  Complex ipow(1.0, 0.0);
  for (int i = 0; i < ((i_power % 4) + 4) % 4; ++i) ipow *= I;
  return scale * ipow * expi(pi * pi_24ths / 24.0);
}

Matrix FixedMatrix::evaluate() const {
  Matrix out = Matrix::Zero(size, size);
  for (const auto& e : entries) {
    for (const auto& t : e.terms) out(e.row, e.col) += t.value();
  }
  return out;
}

const FixedMatrix& fermionic_4x4() {
  // e^{i pi/8} = 3/24, e^{3i pi/8} = 9/24, e^{5i pi/8} = 15/24
  static const FixedMatrix m{4,
                             {
                                 {0, 0, {{1.0, 0, 3}}},
                                 {1, 1, {{1.0, 0, 9}}},
                                 {2, 1, {{1.0, 0, 3}, {-1.0, 0, 15}}},
                                 {2, 2, {{1.0, 0, 9}}},
                                 {3, 3, {{-1.0, 0, 3}}},
                             }};
  return m;
}

const FixedMatrix& constant_4x4() {
  // e^{i pi/3} = 8/24, e^{2i pi/3} = 16/24
  static const FixedMatrix m{4,
                             {
                                 {0, 0, {{1.0, 0, 8}}},
                                 {1, 1, {{1.0, 0, 16}}},
                                 {2, 1, {{-kSqrt3, 1, 16}}},
                                 {2, 2, {{1.0, 0, 16}}},
                                 {3, 3, {{-1.0, 0, 8}}},
                             }};
  return m;
}

Matrix branch_6x6(Complex p1) {
  Matrix m = Matrix::Zero(6, 6);
  m(0, 0) = expi(pi / 6.0 * p1);
  m(1, 1) = expi(pi / 3.0 * p1);
  m(2, 1) = -I * kSqrt3 * expi(pi / 3.0 * p1);
  m(2, 2) = expi(pi / 6.0 * (p1 + 2.0));
  m(3, 3) = expi(pi / 3.0 * (p1 + 2.0));
  m(4, 3) = I * kSqrt3 * expi(pi / 3.0 * (p1 + 2.0));
  m(4, 4) = expi(pi / 6.0 * (p1 + 4.0));
  m(5, 5) = expi(pi / 3.0 * (p1 + 4.0));
  return m;
}

Matrix root_9x9(Complex p1, Complex p2) {
  // basis |l1> (x) |l2> sits at 3*l1 + l2
  auto at = [](int l1, int l2) { return 3 * l1 + l2; };
  auto phase = [](Complex x) { return expi(pi / 12.0 * x); };
  Matrix m = Matrix::Zero(9, 9);
  m(at(0, 0), at(0, 0)) = phase(p1 * p2);
  m(at(0, 1), at(0, 1)) = phase(p1 * (p2 + 2.0));
  m(at(0, 2), at(0, 2)) = phase(p1 * (p2 + 4.0));
  m(at(1, 0), at(1, 0)) = phase((p1 + 2.0) * p2);
  m(at(1, 1), at(1, 1)) = phase((p1 + 2.0) * (p2 + 2.0));
  m(at(1, 2), at(1, 2)) = phase((p1 + 2.0) * (p2 + 4.0));
  m(at(2, 0), at(2, 0)) = phase((p1 + 4.0) * p2);
  m(at(2, 1), at(2, 1)) = phase((p1 + 4.0) * (p2 + 2.0));
  m(at(2, 2), at(2, 2)) = phase((p1 + 4.0) * (p2 + 4.0));

  m(at(1, 0), at(0, 1)) = -2.0 * I * phase(p1 * (p2 + 2.0)) * std::sin(pi / 6.0 * p2);
  m(at(1, 1), at(0, 2)) = -2.0 * I * phase(p1 * (p2 + 4.0)) * std::cos(pi / 6.0 * (p2 + 1.0));
  m(at(2, 0), at(1, 1)) = 2.0 * I * phase((p1 + 2.0) * (p2 + 2.0)) * std::sin(pi / 6.0 * p2);
  m(at(2, 0), at(0, 2)) =
      -I * phase(p1 * (p2 + 4.0) + 2.0) * (2.0 * std::sin(pi / 6.0 * (2.0 * p2 + 1.0)) - 1.0);
  m(at(2, 1), at(1, 2)) = 2.0 * I * phase((p1 + 2.0) * (p2 + 4.0)) * std::cos(pi / 6.0 * (p2 + 1.0));
  return m;
}

std::vector<Complex> branch_samples() { return {1.0, 2.0, Complex(1.0, 1.0)}; }

std::vector<std::pair<Complex, Complex>> root_samples() {
  return {{1.0, 1.0}, {2.0, 2.0}, {0.5, 3.7}};
}

double max_deviation(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "max_deviation: shapes differ");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

Matrix delete_rows_cols(const Matrix& m, const std::vector<int>& drop) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (std::find(drop.begin(), drop.end(), static_cast<int>(i)) == drop.end()) keep.push_back(i);
  }
  Matrix out(keep.size(), keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    for (std::size_t c = 0; c < keep.size(); ++c) out(r, c) = m(keep[r], keep[c]);
  }
  return out;
}

std::vector<std::string> labels() { return {"fermionic", "root", "branch", "constant"}; }

ReproduceResult reproduce(std::string_view label) {
  ReproduceResult out;
  out.label = std::string(label);
  if (label == "fermionic") {
    out.description = "fermionic 4x4, k=2 m=1 p=(1,1)";
    const auto root = make_root(2, 1);
    const auto mod = build_module(classify(root, 1.0, RepGroup::Ib));
    out.max_deviation = max_deviation(r_explicit(mod, mod).matrix, fermionic_4x4().evaluate());
    out.points = 1;
  } else if (label == "root") {
    out.description = "9x9 root matrix, k=3 m=1 L=(2,2), 14 coefficients";
    for (const auto& [p1, p2] : root_samples()) {
      const auto r = r_explicit(module_k3(p1, RepGroup::IIc), module_k3(p2, RepGroup::IIc));
      out.max_deviation = std::max(out.max_deviation, max_deviation(r.matrix, root_9x9(p1, p2)));
      ++out.points;
    }
  } else if (label == "branch") {
    out.description = "6x6 branch matrix, k=3 m=1 L=(2,1) p2=2";
    for (const auto p1 : branch_samples()) {
      const auto r = r_explicit(module_k3(p1, RepGroup::IIc), module_k3(2.0, RepGroup::IIb));
      out.max_deviation = std::max(out.max_deviation, max_deviation(r.matrix, branch_6x6(p1)));
      ++out.points;
    }
  } else if (label == "constant") {
    out.description = "constant 4x4, k=3 m=1 p=(2,2)";
    const auto mod = module_k3(2.0, RepGroup::IIb);
    out.max_deviation = max_deviation(r_explicit(mod, mod).matrix, constant_4x4().evaluate());
    out.points = 1;
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown example '" + std::string(label) + "'");
  }
  return out;
}

}  // namespace uqosp::golden
