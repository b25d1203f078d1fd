#pragma once

// Fock modules W^L(p) of the deformed para-Bose superalgebra at admissible
// roots of unity, and residual checks of the algebra relations on them.

#include <optional>
#include <string_view>
#include <vector>

#include "uqosp/graded.hpp"
#include "uqosp/qnum.hpp"

namespace uqosp {

/// The six groups of modules: Ia/Ib/Ic belong to class I roots, IIa/IIb/IIc
/// to class II roots.
enum class RepGroup { Ia, Ib, Ic, IIa, IIb, IIc };

std::string_view to_string(RepGroup group);
std::optional<RepGroup> parse_group(std::string_view text);

struct ModuleSpec {
  AdmissibleRoot root;
  Complex p;
  RepGroup group;
  int L = 0;  ///< highest basis index; dim = L + 1
  bool indecomposable = false;

  int dim() const { return L + 1; }
};

/// Validates group/class compatibility and the arithmetic condition on p,
/// then computes L.
ModuleSpec classify(const AdmissibleRoot& root, Complex p, RepGroup group);

/// Ia/IIa when p violates the integer (resp. even) condition, Ib/IIb otherwise.
RepGroup default_group(const AdmissibleRoot& root, Complex p);

/// p shifted by a multiple of the period so that 0 < Re(p) <= period; the
/// period is 4k, reduced to 2k (m = 2 mod 4) or k (m = 0 mod 4) for odd k.
Complex canonical_order_parameter(const AdmissibleRoot& root, Complex p);

/// True when p is an integer, resp. an even integer, within 1e-12.
bool is_integer(Complex p);
bool is_even_integer(Complex p);

/// The generators H, K = q^H, a+, a- on the basis |0>..|L>. Immutable.
class FockModule {
 public:
  const Deformation& q() const { return q_; }
  Complex p() const { return p_; }
  int highest_index() const { return L_; }
  int dim() const { return L_ + 1; }
  Parity parity(int n) const { return parity_of(n); }

  /// Present for root-of-unity modules, empty for truncated generic ones.
  const std::optional<ModuleSpec>& spec() const { return spec_; }
  /// Truncated generic-q module: the last basis row is not a valid image.
  bool is_truncated() const { return truncated_; }

  const GradedOperator& H() const { return H_; }
  const GradedOperator& K() const { return K_; }
  const GradedOperator& K_inv() const { return K_inv_; }
  const GradedOperator& a_plus() const { return a_plus_; }
  const GradedOperator& a_minus() const { return a_minus_; }

 private:
  friend FockModule build_module(const ModuleSpec& spec);
  friend FockModule build_truncated_generic(Complex q, Complex p, int size);
  FockModule(Deformation q, Complex p, int L);

  Deformation q_;
  Complex p_;
  int L_;
  std::optional<ModuleSpec> spec_;
  bool truncated_ = false;
  GradedOperator H_, K_, K_inv_, a_plus_, a_minus_;
};

FockModule build_module(const ModuleSpec& spec);

/// Same matrix formulas on basis 0..size-1 for q off the root-of-unity set.
/// Rejects q with q^r = 1 for some r <= 4 * size.
FockModule build_truncated_generic(Complex q, Complex p, int size);

/// max over [H,a+] = 2a+, [H,a-] = -2a-, {a+,a-} = (q^H - q^-H)/(q - q^-1)
/// of ||LHS - RHS||_F / (1 + ||RHS||_F). H must be diagonal; q^H is formed
/// from its diagonal.
double relation_residual(const Matrix& h, const Matrix& a_plus, const Matrix& a_minus,
                         const Deformation& q);
double defining_relation_residual(const FockModule& mod);

struct CentralValues {
  Complex x_plus;
  Complex x_minus;
  Complex z;
  /// max |M - s 1| / max(1, |s|) over M in {(a+)^{2k}, (a-)^{2k}, K^{2k}}.
  double scalarness_residual = 0.0;
};

/// Values of (a+)^{2k}, (a-)^{2k} and K^{2k}. Needs a root-of-unity module.
CentralValues central_values(const FockModule& mod);

struct BosonResidual {
  double interior = 0.0;  ///< rows 0..L-1
  double boundary = 0.0;  ///< row L alone
};

/// a- a+ - q^{+-2} a+ a- = q^{-+2N}, N = (H - 1)/2. Requires p = 1.
BosonResidual boson_relation_residual(const FockModule& mod);

/// max over xi, eta, eps in {+,-} of
/// ||[{a^xi,a^eta},a^eps] - (eps-eta) a^xi - (eps-xi) a^eta||_F restricted to
/// rows/columns 0..size-3. Requires a truncated generic module.
double parabose_limit_residual(const FockModule& mod);

}  // namespace uqosp
