#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilbc/cohomology.hpp"
#include "nilbc/metrics.hpp"
#include "nilbc/model.hpp"
#include "nilbc/predicate.hpp"

namespace nilbc {

struct GoldenRow {
  std::vector<int> bc;  // in bc_columns(n) order
  std::vector<int> betti;  // b_1..b_n
  std::vector<int> delta;  // Delta^1..Delta^n
  bool skt = false;
  friend bool operator==(const GoldenRow&, const GoldenRow&) = default;
};

/// Bidegrees listed in a golden row, by total degree then p descending: for
/// n=3 every (p,q) with 1 <= p+q <= 5; for n=4 only p >= q, 1 <= p+q <= 7.
std::vector<std::pair<int, int>> bc_columns(int n);

/// The golden-row view of a computed table.
GoldenRow golden_view(const CohomologyTable& t, bool skt);

struct CatalogCase {
  std::string id;
  std::string algebra_text;
  std::string template_text;
  std::string binding_text;
  Predicate region;
  GoldenRow golden;

  int n() const;
  /// "h5", "h5xT2"; "?" for an algebra outside the classification.
  std::string algebra_name() const;
  RealAlgebra algebra() const;
  ComplexStructureTemplate structure_template() const;
  /// The stored sample. Throws ValidationError when it leaves the region.
  ParameterBinding sample() const;
  ComplexStructure structure() const;
};

class Catalog {
 public:
  /// The golden data compiled into the library.
  static const Catalog& builtin();
  static Catalog load(const std::string& path);
  /// Parses golden-data text; every sample is checked against its region.
  static Catalog parse(const std::string& text);

  const std::vector<CatalogCase>& cases() const { return cases_; }
  /// Cases of complex dimension n (all when n is unset), in file order.
  std::vector<const CatalogCase*> list(std::optional<int> n = std::nullopt) const;
  const CatalogCase* find(const std::string& id) const;
  const CatalogCase& at(const std::string& id) const;

 private:
  std::vector<CatalogCase> cases_;
};

/// Algebra name for canonical real-algebra text, "?" when unknown.
std::string algebra_name_of(const RealAlgebra& a);

struct Evaluation {
  std::string id;
  CohomologyTable table;
  bool skt = false;
  /// Human-readable differences against the golden row; empty on a match.
  std::vector<std::string> diffs;
  bool matches() const { return diffs.empty(); }
};

Evaluation evaluate(const CatalogCase& c);
/// Evaluates in parallel on `jobs` threads; results keep the input order.
std::vector<Evaluation> evaluate_all(const std::vector<const CatalogCase*>& cases, int jobs = 1);

/// Ids whose structure is pluriclosed for the standard metric.
std::vector<std::string> skt_scan(const std::vector<const CatalogCase*>& cases);

// ---------------------------------------------------------------------------
// Pluriclosed formulas: del delbar(sum w^j ^ wbar^j) = coefficient * w12~1~2.

struct SktFormula {
  std::string row;  // classification row, "06"
  std::string template_text;
  std::string coefficient;  // expression in the template parameters
  std::vector<std::string> samples;  // binding texts
};

const std::vector<SktFormula>& skt_formulas();

// ---------------------------------------------------------------------------
// Deformation curves

struct CurvePoint {
  std::string label;  // "t=1/2"
  ParameterBinding binding;
  std::optional<int> expect_bc;  // value of curve.bidegree at this point
  std::optional<bool> expect_pluriclosed;  // standard metric
  std::optional<bool> expect_balanced;  // curve.metric, or standard/random when unset
};

struct DeformationCurve {
  std::string id;
  std::string description;
  std::string algebra_text;
  std::string template_text;
  std::optional<std::pair<int, int>> bidegree;  // tracked h_BC entry
  /// Special balanced metric as a function of the binding (curve C).
  std::optional<HermitianForm> (*metric)(const ParameterBinding&) = nullptr;
  std::vector<CurvePoint> points;
};

const std::vector<DeformationCurve>& deformation_curves();
const DeformationCurve& curve(const std::string& id);

struct CurvePointResult {
  std::string label;
  CohomologyTable table;
  bool pluriclosed_standard = false;
  bool balanced_standard = false;
  std::optional<bool> balanced_special;
  int random_pluriclosed = 0;  // among kRandomMetrics seeded forms
  int random_balanced = 0;
  std::vector<std::string> diffs;
};

inline constexpr int kRandomMetrics = 20;

std::vector<CurvePointResult> evaluate_curve(const DeformationCurve& c);

}  // namespace nilbc
