#pragma once

// Printed R-matrices kept as exact phase descriptors or closed forms, and the
// comparison harness behind `uqosp reproduce`.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "uqosp/graded.hpp"
#include "uqosp/qnum.hpp"
#include "uqosp/repn.hpp"

namespace uqosp::golden {

/// scale * i^i_power * exp(i pi pi_24ths / 24)
struct PhaseTerm {
  double scale = 1.0;
  int i_power = 0;
  int pi_24ths = 0;

  Complex value() const;
};

struct FixedEntry {
  int row = 0;
  int col = 0;
  std::vector<PhaseTerm> terms;
};

/// A parameter-free matrix given entry by entry (0-based, unlisted entries zero).
struct FixedMatrix {
  int size = 0;
  std::vector<FixedEntry> entries;

  Matrix evaluate() const;
};

/// k=2, m=1, p1=p2=1, L1=L2=1.
const FixedMatrix& fermionic_4x4();
/// k=3, m=1, p1=p2=2, L1=L2=1.
const FixedMatrix& constant_4x4();

/// k=3, m=1, L1=2, L2=1, p2=2, as a function of p1.
Matrix branch_6x6(Complex p1);
/// k=3, m=1, L1=L2=2, as a function of (p1, p2); every listed coefficient.
Matrix root_9x9(Complex p1, Complex p2);

/// Sample points used by the harness.
std::vector<Complex> branch_samples();
std::vector<std::pair<Complex, Complex>> root_samples();

struct ReproduceResult {
  std::string label;
  std::string description;
  int points = 0;
  double max_deviation = 0.0;
  double tolerance = 1e-12;

  bool pass() const { return max_deviation <= tolerance; }
};

/// Labels accepted by `reproduce` (excluding "all").
std::vector<std::string> labels();

/// Compares the explicit R-matrix construction against one fixture.
/// Throws Error{invalid_argument} for an unknown label.
ReproduceResult reproduce(std::string_view label);

/// Entrywise max |a - b|.
double max_deviation(const Matrix& a, const Matrix& b);

/// Drops the listed 0-based rows and columns.
Matrix delete_rows_cols(const Matrix& m, const std::vector<int>& drop);

}  // namespace uqosp::golden
