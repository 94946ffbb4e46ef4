#pragma once

// The reduction subalgebra s of a real form: the sum of the zero restricted
// root space and the root spaces of a strongly orthogonal set, decomposed
// into abelian, compact and so(1,n) summands.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "w0/dynkin.hpp"
#include "w0/linalg.hpp"
#include "w0/realforms.hpp"
#include "w0/rootsys.hpp"

namespace w0 {

struct Summand {
  enum class Kind { So1n = 0, Compact = 1, Abelian = 2 };
  Kind kind = Kind::Abelian;
  int n = 0;                  // so(1,n) only
  DynkinType type;            // complex type; D2special for so(1,3)
  int abelian_dim = 0;        // abelian only
  std::vector<Vec> simple_roots;  // in h* of g, in the order of `type`
  std::vector<bool> highlighted;  // nonzero restricted projection

  /// Coordinates of a weight of g in the summand's own epsilon basis,
  /// i.e. sum_i <w, alpha_i^vee> varpi_i computed in the standard
  /// realisation of `type`.
  Vec chart(const Vec& weight) const;
  const RootSystem& chart_system() const;
  std::string name() const;

 private:
  std::shared_ptr<const RootSystem> chart_;
  friend Summand make_summand(Summand::Kind, int, DynkinType, std::vector<Vec>,
                              std::vector<bool>);
};

Summand make_summand(Summand::Kind kind, int n, DynkinType type, std::vector<Vec> simple,
                     std::vector<bool> highlighted);

struct SummandDecomposition {
  std::string real_form;
  std::vector<Vec> xi;            // strongly orthogonal set in a*
  std::vector<Vec> roots;         // all roots of s, sorted
  std::vector<Vec> simple_roots;  // simple roots of s (positive ones of g)
  std::vector<Summand> summands;  // sorted by kind, then simple roots
  std::vector<Vec> center_basis;  // span(roots of g) orthogonal to simple_roots
  int abelian_dim() const;
  int count(Summand::Kind kind) const;
  std::string describe() const;
};

/// Classify one connected component of the Dynkin graph of s. A single A1
/// component with nonzero projection is reported as so(1,2); grouping two
/// such components into so(1,3) is done by build_s.
Summand classify_component(const std::vector<Vec>& component, const RealForm& form);

/// Build s for a (non-complex) catalogued real form.
SummandDecomposition build_s(const RealForm& form);

/// Structural invariants of a decomposition; empty when all hold.
std::vector<std::string> check_decomposition(const SummandDecomposition& dec,
                                             const RealForm& form);

struct GoldenSummand {
  Summand::Kind kind = Summand::Kind::Abelian;
  int n = 0;
  std::string label;
  std::vector<Vec> roots;
  std::vector<bool> highlighted;
};

struct GoldenRow {
  std::string id;
  std::string display;
  std::vector<GoldenSummand> summands;  // abelian entries already folded in
  int abelian_dim = 0;
  std::vector<std::string> footnotes_applied;
  bool printed = false;  // expanded from the "as printed" variant
};

class GoldenTables {
 public:
  static const GoldenTables& builtin();
  /// Parse an alternative table file (same schema); throws ParseError.
  static GoldenTables from_json(const std::string& text);
  static GoldenTables from_file(const std::string& path);

  /// The expected row for a form, or nullopt when the form is not covered
  /// (complex forms, so(1,3)). With `printed`, rows that carry an erratum
  /// are expanded as printed instead of corrected; other rows are
  /// unaffected.
  std::optional<GoldenRow> expected(const RealForm& form, bool printed = false) const;
  bool has_erratum(const RealForm& form) const;
  /// Exceptional form names covered by the tables, in table order.
  std::vector<std::string> exceptional_forms() const;

  struct Data;

 private:
  std::shared_ptr<const Data> data_;
};

struct GoldenVerdict {
  bool applicable = false;
  bool ok = false;
  std::string row_id;
  std::vector<std::string> diffs;
};

GoldenVerdict compare_with_golden(const SummandDecomposition& dec, const GoldenRow& row);
GoldenVerdict golden_check(const RealForm& form,
                           const GoldenTables& tables = GoldenTables::builtin(),
                           bool printed = false);

}  // namespace w0
