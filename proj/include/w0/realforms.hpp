#pragma once

// Catalog of simple real Lie algebras, described by Satake data, and the
// restricted-root data derived from it.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "w0/dynkin.hpp"
#include "w0/expr.hpp"
#include "w0/linalg.hpp"
#include "w0/rootsys.hpp"

namespace w0 {

struct RealForm {
  std::string name;       // canonical spelling, e.g. "su(1,2)"
  std::string family_id;  // catalog row id, e.g. "su"
  Bindings params;        // pattern captures plus derived quantities

  // Obtained from a complex simple algebra by restriction of scalars. Only
  // `complex_system` is meaningful then.
  bool is_complex = false;

  RootSystem complex_system;            // root system of the complexification
  std::vector<int> black;               // 0-based Satake black nodes
  std::vector<std::pair<int, int>> arrows;

  Matrix theta;       // Cartan involution on h*, identity off the root span
  Matrix projection;  // (1 - theta)/2, the restriction map h* -> a*

  DynkinType restricted_type;           // canonical; rank 0 for compact forms
  std::vector<Vec> restricted_simple;   // Bourbaki order
  std::vector<Vec> restricted_roots;    // distinct nonzero projections, sorted
  std::map<Vec, int, bool (*)(const Vec&, const Vec&)> restricted_multiplicity{&lex_less};

  bool compact() const { return !is_complex && restricted_type.rank == 0; }
  bool split() const { return !is_complex && restricted_type.rank == complex_system.rank; }
  bool is_restricted_root(const Vec& v) const;
  Vec project(const Vec& v) const { return projection.apply(v); }
};

/// Longest element of the restricted Weyl group as a matrix on h*; it acts
/// trivially on the kernel of the projection.
Matrix restricted_w0(const RealForm& form);

class Catalog {
 public:
  /// The catalog compiled into the library.
  static const Catalog& builtin();
  /// Parse an alternative catalog (same schema); throws ParseError.
  static Catalog from_json(const std::string& text);

  /// Resolve a name such as "su(1,2)", "sp(2·,1,1)", "EIV", "complex:A2".
  /// Throws UnknownAlgebra (with a suggestion) or ParameterOutOfRange.
  RealForm lookup(const std::string& name) const;

  /// Every admissible catalog instance whose complexification has rank in
  /// [1, max_rank], in catalog order. Exceptional rows are included when
  /// their rank fits.
  std::vector<std::string> instances(int max_rank) const;

  /// Catalog row ids in order, with their display names.
  std::vector<std::pair<std::string, std::string>> rows() const;

  struct Spec;

 private:
  std::vector<std::shared_ptr<const Spec>> specs_;
};

/// Whitespace removal and the ASCII spellings of '·' in sp(...) names.
std::string normalize_form_name(const std::string& name);

}  // namespace w0
