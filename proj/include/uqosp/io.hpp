#pragma once

// Flat-file formats: the R-matrix document (JSON canonical, CSV lossy) and
// the verification report emitted by the CLI.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "uqosp/graded.hpp"
#include "uqosp/qnum.hpp"
#include "uqosp/rmat.hpp"

namespace uqosp {

using OrderedJson = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct MatrixDocument {
  std::string schema_version = kSchemaVersion;
  int k = 0;
  int m = 0;
  std::vector<std::string> groups;
  std::vector<Complex> p_values;
  std::vector<int> dims;
  std::string construction = "explicit";
  std::string ordering = "lexicographic";
  Matrix matrix;  ///< only entries with |value| > kZeroTolerance are serialised
};

MatrixDocument make_document(const RMatrix& r);

OrderedJson to_json(const MatrixDocument& doc);
MatrixDocument matrix_document_from_json(const OrderedJson& j);

std::string write_json(const MatrixDocument& doc);
MatrixDocument read_json(std::string_view text);

/// Header `row,col,re,im`, then one line per nonzero entry, 17 significant digits.
void write_csv(const MatrixDocument& doc, std::ostream& out);

struct VerificationReport {
  std::string check;
  OrderedJson parameters = OrderedJson::object();
  std::vector<std::pair<std::string, double>> residuals;
  double tolerance = 1e-9;

  bool pass() const;
};

OrderedJson to_json(const VerificationReport& report);

/// "re" or "re,im". Throws Error{invalid_argument} on anything else.
Complex parse_complex(std::string_view text);

OrderedJson complex_to_json(Complex z);

}  // namespace uqosp
