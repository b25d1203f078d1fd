#include "uqosp/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "uqosp/error.hpp"

namespace uqosp {
namespace {

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view text) {
  // from_chars accepts no leading '+' or whitespace; reject partial parses.
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw Error(ErrorCode::invalid_argument, "cannot parse '" + std::string(text) + "' as a number");
  }
  return value;
}

}  // namespace

MatrixDocument make_document(const RMatrix& r) {
  MatrixDocument doc;
  doc.k = r.mod1.root.k();
  doc.m = r.mod1.root.m();
  doc.groups = {std::string(to_string(r.mod1.group)), std::string(to_string(r.mod2.group))};
  doc.p_values = {r.mod1.p, r.mod2.p};
  doc.dims = {r.mod1.dim(), r.mod2.dim()};
  doc.construction = r.construction == Construction::Explicit ? "explicit" : "universal";
  doc.matrix = r.matrix;
  return doc;
}

OrderedJson complex_to_json(Complex z) { return OrderedJson::array({z.real(), z.imag()}); }

OrderedJson to_json(const MatrixDocument& doc) {
  OrderedJson j;
  j["schema_version"] = doc.schema_version;
  j["k"] = doc.k;
  j["m"] = doc.m;
  j["groups"] = doc.groups;
  j["p_values"] = OrderedJson::array();
  for (auto p : doc.p_values) j["p_values"].push_back(complex_to_json(p));
  j["dims"] = doc.dims;
  j["construction"] = doc.construction;
  j["ordering"] = doc.ordering;
  j["size"] = doc.matrix.rows();
  j["entries"] = OrderedJson::array();
  for (Eigen::Index col = 0; col < doc.matrix.cols(); ++col) {
    for (Eigen::Index row = 0; row < doc.matrix.rows(); ++row) {
      const Complex v = doc.matrix(row, col);
      if (std::abs(v) <= kZeroTolerance) continue;
      j["entries"].push_back({{"row", row}, {"col", col}, {"re", v.real()}, {"im", v.imag()}});
    }
  }
  return j;
}

MatrixDocument matrix_document_from_json(const OrderedJson& j) {
  try {
    MatrixDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != kSchemaVersion) {
      throw Error(ErrorCode::invalid_argument, "unsupported schema_version " + doc.schema_version);
    }
    doc.k = j.at("k").get<int>();
    doc.m = j.at("m").get<int>();
    doc.groups = j.at("groups").get<std::vector<std::string>>();
    for (const auto& p : j.at("p_values")) doc.p_values.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    doc.dims = j.at("dims").get<std::vector<int>>();
    doc.construction = j.at("construction").get<std::string>();
    doc.ordering = j.at("ordering").get<std::string>();
    if (doc.ordering != "lexicographic") throw Error(ErrorCode::invalid_argument, "unknown ordering " + doc.ordering);
    const auto size = j.at("size").get<Eigen::Index>();
    doc.matrix = Matrix::Zero(size, size);
    for (const auto& e : j.at("entries")) {
      const auto row = e.at("row").get<Eigen::Index>();
      const auto col = e.at("col").get<Eigen::Index>();
      if (row < 0 || col < 0 || row >= size || col >= size) {
        throw Error(ErrorCode::invalid_argument, "entry index outside the matrix");
      }
      doc.matrix(row, col) = Complex(e.at("re").get<double>(), e.at("im").get<double>());
    }
    return doc;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::invalid_argument, std::string("malformed matrix document: ") + ex.what());
  }
}

std::string write_json(const MatrixDocument& doc) { return to_json(doc).dump(2) + "\n"; }

MatrixDocument read_json(std::string_view text) {
  OrderedJson j;
  try {
    j = OrderedJson::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::invalid_argument, std::string("invalid JSON: ") + ex.what());
  }
  return matrix_document_from_json(j);
}

void write_csv(const MatrixDocument& doc, std::ostream& out) {
  out << "row,col,re,im\n";
  for (Eigen::Index col = 0; col < doc.matrix.cols(); ++col) {
    for (Eigen::Index row = 0; row < doc.matrix.rows(); ++row) {
      const Complex v = doc.matrix(row, col);
      if (std::abs(v) <= kZeroTolerance) continue;
      out << row << ',' << col << ',' << format17(v.real()) << ',' << format17(v.imag()) << '\n';
    }
  }
}

bool VerificationReport::pass() const {
  for (const auto& [name, value] : residuals) {
    if (!(value <= tolerance)) return false;
  }
  return true;
}

OrderedJson to_json(const VerificationReport& report) {
  OrderedJson j;
  j["schema_version"] = kSchemaVersion;
  j["check"] = report.check;
  j["parameters"] = report.parameters;
  j["residuals"] = OrderedJson::object();
  for (const auto& [name, value] : report.residuals) j["residuals"][name] = value;
  j["tolerance"] = report.tolerance;
  j["verdict"] = report.pass() ? "pass" : "fail";
  return j;
}

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_double(text), 0.0};
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

}  // namespace uqosp
