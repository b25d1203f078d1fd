#include "uqosp/repn.hpp"

#include <array>
#include <cmath>
#include <string>

#include "uqosp/error.hpp"

namespace uqosp {
namespace {

constexpr double kIntegerTolerance = 1e-12;

bool group_in_class(RepGroup group, RootClass cls) {
  const bool class_one = group == RepGroup::Ia || group == RepGroup::Ib || group == RepGroup::Ic;
  return class_one == (cls == RootClass::ClassI);
}

int positive_mod(long value, int modulus) {
  const long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

std::string describe(Complex p) {
  return "(" + std::to_string(p.real()) + "," + std::to_string(p.imag()) + ")";
}

Matrix diagonal_power(const Deformation& q, const Matrix& h, double sign) {
  Matrix out = Matrix::Zero(h.rows(), h.cols());
  for (Eigen::Index n = 0; n < h.rows(); ++n) out(n, n) = q.pow(sign * h(n, n));
  return out;
}

}  // namespace

std::string_view to_string(RepGroup group) {
  switch (group) {
    case RepGroup::Ia: return "Ia";
    case RepGroup::Ib: return "Ib";
    case RepGroup::Ic: return "Ic";
    case RepGroup::IIa: return "IIa";
    case RepGroup::IIb: return "IIb";
    case RepGroup::IIc: return "IIc";
  }
  return "?";
}

std::optional<RepGroup> parse_group(std::string_view text) {
  static constexpr std::array groups = {RepGroup::Ia,  RepGroup::Ib,  RepGroup::Ic,
                                        RepGroup::IIa, RepGroup::IIb, RepGroup::IIc};
  for (auto g : groups) {
    if (to_string(g) == text) return g;
  }
  return std::nullopt;
}

bool is_integer(Complex p) {
  return std::abs(p.imag()) < kIntegerTolerance &&
         std::abs(p.real() - std::round(p.real())) < kIntegerTolerance;
}

bool is_even_integer(Complex p) {
  return is_integer(p) && static_cast<long>(std::llround(p.real())) % 2 == 0;
}

ModuleSpec classify(const AdmissibleRoot& root, Complex p, RepGroup group) {
  if (!group_in_class(group, root.root_class())) {
    throw Error(ErrorCode::incompatible_group,
                "group " + std::string(to_string(group)) + " does not belong to class " +
                    (root.root_class() == RootClass::ClassI ? "I" : "II") + " (k=" +
                    std::to_string(root.k()) + ", m=" + std::to_string(root.m()) + ")");
  }
  if (is_even_integer(p) && p.real() < 0.0) {
    throw Error(ErrorCode::invalid_order_parameter, "p is a negative even integer " + describe(p));
  }
  if (!(p.real() > 0.0)) {
    throw Error(ErrorCode::invalid_order_parameter, "Re(p) must be positive, got " + describe(p));
  }

  const int k = root.k();
  const long p_int = std::llround(p.real());
  ModuleSpec spec{root, p, group, 0, false};
  switch (group) {
    case RepGroup::Ia:
      if (is_integer(p)) {
        throw Error(ErrorCode::invalid_order_parameter, "group Ia needs non-integer p, got " + describe(p));
      }
      spec.L = 2 * k - 1;
      break;
    case RepGroup::Ib:
      if (!is_integer(p)) {
        throw Error(ErrorCode::invalid_order_parameter, "group Ib needs integer p, got " + describe(p));
      }
      spec.L = positive_mod(p_int * (k - 1), 2 * k);
      break;
    case RepGroup::Ic:
      spec.L = 2 * k - 1;
      spec.indecomposable = is_integer(p);
      break;
    case RepGroup::IIa:
      if (is_even_integer(p)) {
        throw Error(ErrorCode::invalid_order_parameter, "group IIa needs p not an even integer, got " + describe(p));
      }
      spec.L = k - 1;
      break;
    case RepGroup::IIb:
      if (!is_even_integer(p)) {
        throw Error(ErrorCode::invalid_order_parameter, "group IIb needs an even integer p, got " + describe(p));
      }
      spec.L = positive_mod(k - p_int, k);
      break;
    case RepGroup::IIc:
      spec.L = k - 1;
      spec.indecomposable = is_even_integer(p);
      break;
  }
  return spec;
}

RepGroup default_group(const AdmissibleRoot& root, Complex p) {
  if (root.root_class() == RootClass::ClassI) return is_integer(p) ? RepGroup::Ib : RepGroup::Ia;
  return is_even_integer(p) ? RepGroup::IIb : RepGroup::IIa;
}

Complex canonical_order_parameter(const AdmissibleRoot& root, Complex p) {
  const int k = root.k();
  const int m = root.m();
  double period = 4.0 * k;
  if (k % 2 == 1 && m % 2 == 0) period = (m % 4 == 2) ? 2.0 * k : 1.0 * k;
  // Largest shift keeping 0 < Re <= period.
  const double shifts = std::ceil(p.real() / period) - 1.0;
  return {p.real() - shifts * period, p.imag()};
}

FockModule::FockModule(Deformation q, Complex p, int L) : q_(q), p_(p), L_(L) {
  const int d = L + 1;
  H_ = {Matrix::Zero(d, d), Parity::even};
  K_ = {Matrix::Zero(d, d), Parity::even};
  K_inv_ = {Matrix::Zero(d, d), Parity::even};
  a_plus_ = {Matrix::Zero(d, d), Parity::odd};
  a_minus_ = {Matrix::Zero(d, d), Parity::odd};
  for (int n = 0; n < d; ++n) {
    const Complex weight = 2.0 * n + p;
    H_.matrix(n, n) = weight;
    K_.matrix(n, n) = q.pow(weight);
    K_inv_.matrix(n, n) = q.pow(-weight);
    if (n < L) a_plus_.matrix(n + 1, n) = 1.0;
    if (n >= 1) a_minus_.matrix(n - 1, n) = brace(n, 0.0, q) * brace(n - 1, p, q);
  }
}

FockModule build_module(const ModuleSpec& spec) {
  FockModule mod(spec.root.q(), spec.p, spec.L);
  mod.spec_ = spec;
  return mod;
}

FockModule build_truncated_generic(Complex q, Complex p, int size) {
  if (size < 2) throw Error(ErrorCode::invalid_argument, "truncated module needs size >= 2");
  const auto def = Deformation::from_value(q);
  for (int r = 1; r <= 4 * size; ++r) {
    if (std::abs(def.pow(r) - 1.0) < 1e-12) {
      throw Error(ErrorCode::invalid_argument,
                  "q is a root of unity of order " + std::to_string(r) + "; use build_module");
    }
  }
  FockModule mod(def, p, size - 1);
  mod.truncated_ = true;
  return mod;
}

double relation_residual(const Matrix& h, const Matrix& a_plus, const Matrix& a_minus,
                         const Deformation& q) {
  Matrix off = h;
  off.diagonal().setZero();
  if (off.norm() > 1e-12 * std::max(1.0, h.norm())) {
    throw Error(ErrorCode::invalid_argument, "relation_residual needs a diagonal H");
  }
  const Matrix k = diagonal_power(q, h, 1.0);
  const Matrix k_inv = diagonal_power(q, h, -1.0);
  auto term = [](const Matrix& lhs, const Matrix& rhs) {
    return (lhs - rhs).norm() / (1.0 + rhs.norm());
  };
  const double r1 = term(h * a_plus - a_plus * h, 2.0 * a_plus);
  const double r2 = term(h * a_minus - a_minus * h, -2.0 * a_minus);
  const Matrix cartan = (k - k_inv) / (q.value() - q.inverse());
  const double r3 = term(a_plus * a_minus + a_minus * a_plus, cartan);
  return std::max({r1, r2, r3});
}

double defining_relation_residual(const FockModule& mod) {
  return relation_residual(mod.H().matrix, mod.a_plus().matrix, mod.a_minus().matrix, mod.q());
}

CentralValues central_values(const FockModule& mod) {
  if (!mod.spec()) throw Error(ErrorCode::precondition_failed, "central values need a root-of-unity module");
  const int power = 2 * mod.spec()->root.k();
  const auto d = mod.dim();
  auto raise = [&](const Matrix& m) {
    Matrix out = Matrix::Identity(d, d);
    for (int i = 0; i < power; ++i) out = out * m;
    return out;
  };
  CentralValues out;
  auto scalar_of = [&](const Matrix& m) {
    const Complex s = m.trace() / static_cast<double>(d);
    const Matrix dev = m - s * Matrix::Identity(d, d);
    out.scalarness_residual =
        std::max(out.scalarness_residual, dev.cwiseAbs().maxCoeff() / std::max(1.0, std::abs(s)));
    return s;
  };
  out.x_plus = scalar_of(raise(mod.a_plus().matrix));
  out.x_minus = scalar_of(raise(mod.a_minus().matrix));
  out.z = scalar_of(raise(mod.K().matrix));
  return out;
}

BosonResidual boson_relation_residual(const FockModule& mod) {
  if (std::abs(mod.p() - 1.0) > 1e-12) {
    throw Error(ErrorCode::precondition_failed, "boson relations need p = 1");
  }
  const auto& ap = mod.a_plus().matrix;
  const auto& am = mod.a_minus().matrix;
  const Matrix h_minus_one = mod.H().matrix - Matrix::Identity(mod.dim(), mod.dim());
  const int L = mod.highest_index();
  BosonResidual out;
  for (double sign : {1.0, -1.0}) {
    const Matrix lhs = am * ap - mod.q().pow(2.0 * sign) * ap * am;
    const Matrix rhs = diagonal_power(mod.q(), h_minus_one, -sign);  // q^{-+2N}
    const Matrix diff = lhs - rhs;
    out.interior = std::max(out.interior, diff.topRows(L).norm());
    out.boundary = std::max(out.boundary, diff.row(L).norm());
  }
  return out;
}

double parabose_limit_residual(const FockModule& mod) {
  if (!mod.is_truncated()) {
    throw Error(ErrorCode::precondition_failed, "the para-Bose limit check needs a truncated generic module");
  }
  const Eigen::Index keep = std::max<Eigen::Index>(0, mod.dim() - 2);
  auto op = [&](int sign) -> const Matrix& { return sign > 0 ? mod.a_plus().matrix : mod.a_minus().matrix; };
  double worst = 0.0;
  for (int xi : {1, -1}) {
    for (int eta : {1, -1}) {
      for (int eps : {1, -1}) {
        const Matrix anti = op(xi) * op(eta) + op(eta) * op(xi);
        const Matrix lhs = anti * op(eps) - op(eps) * anti;
        const Matrix rhs = double(eps - eta) * op(xi) + double(eps - xi) * op(eta);
        worst = std::max(worst, (lhs - rhs).topLeftCorner(keep, keep).norm());
      }
    }
  }
  return worst;
}

}  // namespace uqosp
