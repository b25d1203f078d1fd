#include "uqosp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "uqosp/braid.hpp"
#include "uqosp/error.hpp"
#include "uqosp/golden.hpp"
#include "uqosp/io.hpp"
#include "uqosp/repn.hpp"
#include "uqosp/rmat.hpp"
#include "uqosp/tensor.hpp"

namespace uqosp::cli {
namespace {

struct GlobalFlags {
  std::optional<double> tol;
  std::string out;
  std::string format = "json";
  long size_cap = kDefaultSizeCap;
};

/// Flags shared by the module-building subcommands.
struct ModuleFlags {
  int k = 0;
  int m = 0;
  std::vector<std::string> p{"", "", ""};
  std::vector<std::string> group{"", "", ""};
  std::string method = "explicit";
  int strands = 3;
};

void add_root(CLI::App* cmd, ModuleFlags& f) {
  cmd->add_option("--k", f.k, "root parameter k (q = exp(i pi m / 2k))")->required();
  cmd->add_option("--m", f.m, "root parameter m")->required();
}

void add_modules(CLI::App* cmd, ModuleFlags& f, int count) {
  if (count == 1) {
    cmd->add_option("--p,--p1", f.p[0], "order parameter, 're' or 're,im'")->required();
    cmd->add_option("--group,--group1", f.group[0], "Ia|Ib|Ic|IIa|IIb|IIc (inferred when omitted)");
    return;
  }
  for (int i = 0; i < count; ++i) {
    const auto n = std::to_string(i + 1);
    cmd->add_option("--p" + n, f.p[i], "order parameter of factor " + n)->required();
    cmd->add_option("--group" + n, f.group[i], "group of factor " + n);
  }
}

FockModule module_from(const AdmissibleRoot& root, const std::string& p_text, const std::string& group_text) {
  const Complex p = parse_complex(p_text);
  RepGroup group = default_group(root, p);
  if (!group_text.empty()) {
    const auto parsed = parse_group(group_text);
    if (!parsed) throw Error(ErrorCode::invalid_argument, "unknown group '" + group_text + "'");
    group = *parsed;
  }
  return build_module(classify(root, p, group));
}

std::vector<FockModule> modules_from(const ModuleFlags& f, int count) {
  const auto root = make_root(f.k, f.m);
  std::vector<FockModule> mods;
  for (int i = 0; i < count; ++i) mods.push_back(module_from(root, f.p[i], f.group[i]));
  return mods;
}

OrderedJson module_parameters(const ModuleFlags& f, const std::vector<FockModule>& mods) {
  OrderedJson j;
  j["k"] = f.k;
  j["m"] = f.m;
  j["groups"] = OrderedJson::array();
  j["p_values"] = OrderedJson::array();
  j["dims"] = OrderedJson::array();
  for (const auto& mod : mods) {
    j["groups"].push_back(std::string(to_string(mod.spec()->group)));
    j["p_values"].push_back(complex_to_json(mod.p()));
    j["dims"].push_back(mod.dim());
  }
  return j;
}

OrderedJson classify_summary(const ModuleFlags& f) {
  const auto root = make_root(f.k, f.m);
  const auto mod = module_from(root, f.p[0], f.group[0]);
  const auto& spec = *mod.spec();
  OrderedJson j;
  j["schema_version"] = kSchemaVersion;
  j["k"] = root.k();
  j["m"] = root.m();
  j["class"] = root.root_class() == RootClass::ClassI ? "I" : "II";
  j["universal_r_known_absent"] = root.universal_r_known_absent();
  j["p"] = complex_to_json(spec.p);
  j["group"] = std::string(to_string(spec.group));
  j["L"] = spec.L;
  j["dim"] = spec.dim();
  j["indecomposable"] = spec.indecomposable;
  j["canonical_p"] = complex_to_json(canonical_order_parameter(root, spec.p));
  return j;
}

VerificationReport verify_qybe(const ModuleFlags& f) {
  const auto mods = modules_from(f, 3);
  VerificationReport report{"qybe", module_parameters(f, mods), {}};
  report.residuals.emplace_back("qybe", qybe_residual(mods[0], mods[1], mods[2]));
  return report;
}

VerificationReport verify_intertwine(const ModuleFlags& f) {
  const auto mods = modules_from(f, 2);
  VerificationReport report{"intertwine", module_parameters(f, mods), {}};
  const auto r = intertwine_residual(mods[0], mods[1]);
  report.residuals = {{"H", r.h}, {"a_plus", r.a_plus}, {"a_minus", r.a_minus}};
  return report;
}

VerificationReport verify_braid(const ModuleFlags& f, long size_cap) {
  const auto mods = modules_from(f, 1);
  VerificationReport report{"braid", module_parameters(f, mods), {}};
  report.parameters["N"] = f.strands;
  const auto rep = braid_generators(mods[0], f.strands, size_cap);
  const auto r = braid_relation_residual(rep);
  report.residuals = {{"far_commutation", r.far_commutation}, {"yang_baxter", r.yang_baxter}};
  if (f.strands == 2) report.residuals.emplace_back("commutant", intertwiner_commutant_residual(rep));
  return report;
}

VerificationReport verify_relations(const ModuleFlags& f) {
  const int count = f.p[1].empty() ? 1 : 2;
  const auto mods = modules_from(f, count);
  VerificationReport report{"relations", module_parameters(f, mods), {}};
  for (int i = 0; i < count; ++i) {
    report.residuals.emplace_back("module" + std::to_string(i + 1), defining_relation_residual(mods[i]));
  }
  if (count == 2) {
    const auto& q = mods[0].q();
    auto image = [&](auto builder) {
      return relation_residual(builder(Generator::H, mods[0], mods[1]).matrix,
                               builder(Generator::a_plus, mods[0], mods[1]).matrix,
                               builder(Generator::a_minus, mods[0], mods[1]).matrix, q);
    };
    report.residuals.emplace_back("coproduct", image(coproduct_rep));
    report.residuals.emplace_back("opposite_coproduct", image(opposite_coproduct_rep));
  }
  return report;
}

VerificationReport verify_central(const ModuleFlags& f) {
  const auto mods = modules_from(f, 1);
  VerificationReport report{"central", module_parameters(f, mods), {}};
  const auto c = central_values(mods[0]);
  const Complex expected_z = mods[0].q().pow(2.0 * f.k * mods[0].p());
  report.parameters["x_plus"] = complex_to_json(c.x_plus);
  report.parameters["x_minus"] = complex_to_json(c.x_minus);
  report.parameters["z"] = complex_to_json(c.z);
  report.residuals = {{"scalarness", c.scalarness_residual},
                      {"x_plus", std::abs(c.x_plus)},
                      {"x_minus", std::abs(c.x_minus)},
                      {"z", std::abs(c.z - expected_z) / std::max(1.0, std::abs(expected_z))}};
  return report;
}

// Example keys accepted on the command line and the fixture each one selects.
const std::vector<std::pair<std::string, std::string>>& example_table() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"3.15", "fermionic"}, {"3.16", "root"}, {"3.17", "branch"}, {"3.18", "constant"}};
  return table;
}

OrderedJson reproduce_json(const std::string& example, bool& all_pass) {
  std::vector<std::pair<std::string, std::string>> selected;
  for (const auto& entry : example_table()) {
    if (example == "all" || example == entry.first || example == entry.second) selected.push_back(entry);
  }
  if (selected.empty()) throw Error(ErrorCode::invalid_argument, "unknown example '" + example + "'");
  OrderedJson reports = OrderedJson::array();
  all_pass = true;
  for (const auto& [key, fixture] : selected) {
    const auto r = golden::reproduce(fixture);
    all_pass = all_pass && r.pass();
    reports.push_back({{"example", key},
                       {"fixture", r.label},
                       {"description", r.description},
                       {"points", r.points},
                       {"max_deviation", r.max_deviation},
                       {"tolerance", r.tolerance},
                       {"verdict", r.pass() ? "pass" : "fail"}});
  }
  return {{"schema_version", kSchemaVersion}, {"check", "reproduce"}, {"reports", reports},
          {"verdict", all_pass ? "pass" : "fail"}};
}

OrderedJson selftest_json(double tol, long size_cap, bool& all_pass) {
  OrderedJson reports = OrderedJson::array();
  all_pass = true;
  auto record = [&](VerificationReport report) {
    report.tolerance = tol;
    all_pass = all_pass && report.pass();
    reports.push_back(to_json(report));
  };
  ModuleFlags fermionic{2, 1, {"1", "1", "1"}, {"", "", ""}};
  ModuleFlags three_params{3, 1, {"2.3", "0.9", "4.1"}, {"IIc", "IIc", "IIc"}};
  record(verify_qybe(fermionic));
  record(verify_qybe(three_params));
  record(verify_intertwine(fermionic));
  record(verify_intertwine(three_params));
  record(verify_relations(three_params));
  record(verify_central(three_params));
  ModuleFlags braid_flags = fermionic;
  braid_flags.strands = 3;
  record(verify_braid(braid_flags, size_cap));

  bool golden_pass = true;
  reports.push_back(reproduce_json("all", golden_pass));
  all_pass = all_pass && golden_pass;
  return {{"schema_version", kSchemaVersion}, {"check", "selftest"}, {"reports", reports},
          {"verdict", all_pass ? "pass" : "fail"}};
}

bool is_numeric_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::zero_denominator:
    case ErrorCode::singular_factorial:
    case ErrorCode::vanishing_factor:
    case ErrorCode::non_finite:
      return true;
    default:
      return false;
  }
}

void emit(const std::string& text, const GlobalFlags& g, std::ostream& out) {
  if (g.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::invalid_argument, "cannot open output file '" + g.out + "'");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root-of-unity Fock modules, R-matrices and Yang-Baxter checks", "uqosp"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_option("--tol", g.tol, "verification tolerance (default 1e-9)");
  app.add_option("--out", g.out, "write the primary output to this file");
  app.add_option("--format", g.format, "json|csv (rmatrix only)")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--size-cap", g.size_cap, "largest tensor-power dimension for braid checks");

  ModuleFlags f;
  auto* classify_cmd = app.add_subcommand("classify", "classify a Fock module W^L(p)");
  add_root(classify_cmd, f);
  add_modules(classify_cmd, f, 1);

  auto* rmatrix_cmd = app.add_subcommand("rmatrix", "build an R-matrix document");
  add_root(rmatrix_cmd, f);
  add_modules(rmatrix_cmd, f, 2);
  rmatrix_cmd->add_option("--method", f.method, "explicit|universal")
      ->check(CLI::IsMember({"explicit", "universal"}));

  auto* verify_cmd = app.add_subcommand("verify", "run a residual check");
  verify_cmd->require_subcommand(1);
  auto* qybe_cmd = verify_cmd->add_subcommand("qybe", "Yang-Baxter residual on a triple product");
  add_root(qybe_cmd, f);
  add_modules(qybe_cmd, f, 3);
  auto* intertwine_cmd = verify_cmd->add_subcommand("intertwine", "R Delta = Delta^op R");
  add_root(intertwine_cmd, f);
  add_modules(intertwine_cmd, f, 2);
  auto* braid_cmd = verify_cmd->add_subcommand("braid", "braid relations on the N-fold power");
  add_root(braid_cmd, f);
  add_modules(braid_cmd, f, 1);
  braid_cmd->add_option("--N", f.strands, "number of strands")->check(CLI::PositiveNumber);
  auto* relations_cmd = verify_cmd->add_subcommand("relations", "algebra relations on modules and coproduct images");
  add_root(relations_cmd, f);
  relations_cmd->add_option("--p,--p1", f.p[0], "order parameter")->required();
  relations_cmd->add_option("--group,--group1", f.group[0], "group");
  relations_cmd->add_option("--p2", f.p[1], "second module: also check the coproduct images");
  relations_cmd->add_option("--group2", f.group[1], "group of the second module");
  auto* central_cmd = verify_cmd->add_subcommand("central", "values of the extra central elements");
  add_root(central_cmd, f);
  add_modules(central_cmd, f, 1);

  std::string example = "all";
  auto* reproduce_cmd = app.add_subcommand("reproduce", "compare against the printed matrices");
  reproduce_cmd->add_option("--example", example, "3.15|3.16|3.17|3.18|all");
  auto* selftest_cmd = app.add_subcommand("selftest", "run every check at fixed parameter points");

  for (auto* cmd : {classify_cmd, rmatrix_cmd, verify_cmd, reproduce_cmd, selftest_cmd}) cmd->fallthrough();
  for (auto* cmd : {qybe_cmd, intertwine_cmd, braid_cmd, relations_cmd, central_cmd}) cmd->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    const double tol = g.tol.value_or(1e-9);
    if (classify_cmd->parsed()) {
      emit(classify_summary(f).dump(2) + "\n", g, out);
      return kExitPass;
    }
    if (rmatrix_cmd->parsed()) {
      const auto mods = modules_from(f, 2);
      const auto r = f.method == "universal" ? r_universal(mods[0], mods[1]) : r_explicit(mods[0], mods[1]);
      const auto doc = make_document(r);
      std::ostringstream body;
      if (g.format == "csv") {
        write_csv(doc, body);
      } else {
        body << write_json(doc);
      }
      emit(body.str(), g, out);
      OrderedJson summary{{"dim", r.matrix.rows()}, {"construction", doc.construction}, {"format", g.format}};
      (g.out.empty() ? err : out) << summary.dump() << "\n";
      return kExitPass;
    }
    if (verify_cmd->parsed()) {
      VerificationReport report;
      if (qybe_cmd->parsed()) report = verify_qybe(f);
      if (intertwine_cmd->parsed()) report = verify_intertwine(f);
      if (braid_cmd->parsed()) report = verify_braid(f, g.size_cap);
      if (relations_cmd->parsed()) report = verify_relations(f);
      if (central_cmd->parsed()) report = verify_central(f);
      report.tolerance = tol;
      emit(to_json(report).dump(2) + "\n", g, out);
      return report.pass() ? kExitPass : kExitFail;
    }
    if (reproduce_cmd->parsed()) {
      bool pass = false;
      emit(reproduce_json(example, pass).dump(2) + "\n", g, out);
      return pass ? kExitPass : kExitFail;
    }
    if (selftest_cmd->parsed()) {
      bool pass = false;
      emit(selftest_json(tol, g.size_cap, pass).dump(2) + "\n", g, out);
      return pass ? kExitPass : kExitFail;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_numeric_failure(e.code()) ? kExitFail : kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace uqosp::cli
