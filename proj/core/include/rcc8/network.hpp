#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcc8/composition_table.hpp"
#include "rcc8/relations.hpp"

namespace rcc8 {

/// A binary constraint network of disjunctive relations over named
/// variables. The constraint matrix is kept coherent at all times:
/// constraints(i, i) = {EQ}, constraints(j, i) = converse of
/// constraints(i, j), and unspecified pairs default to the full set.
class ConstraintNetwork {
 public:
  /// Index of the variable, creating it on first mention.
  std::size_t variable(const std::string& name);

  std::optional<std::size_t> find_variable(std::string_view name) const;

  const std::vector<std::string>& variables() const { return names_; }
  std::size_t size() const { return names_.size(); }

  const RelationSet& constraint(std::size_t i, std::size_t j) const {
    return matrix_[i * names_.size() + j];
  }

  /// Intersects the (x, y) constraint with s and mirrors the converse onto
  /// (y, x). Throws SelfConstraintError when x == y with s != {EQ}, and
  /// EmptyConstraintError when the intersection is empty.
  void add_constraint(const std::string& x, const std::string& y, RelationSet s);

  /// Used by closure: writes both directions, no intersection.
  void set_constraint(std::size_t i, std::size_t j, RelationSet s);

  bool operator==(const ConstraintNetwork&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<RelationSet> matrix_;
};

/// One base relation per ordered variable pair; rel(i,i) = EQ and
/// rel(j,i) = converse(rel(i,j)) by construction.
struct Scenario {
  std::vector<std::string> variables;
  std::vector<Relation> matrix;

  Relation relation(std::size_t i, std::size_t j) const {
    return matrix[i * variables.size() + j];
  }
};

/// Path-consistency refinement: repeatedly intersects constraints(i, k) with
/// the composition of constraints(i, j) and constraints(j, k) until a fixed
/// point, processing a work-list of dirtied pairs in lexicographic order.
/// Returns the refined network, or nullopt when some constraint becomes
/// empty. The result is pointwise contained in the input; the fixed point is
/// order-independent.
std::optional<ConstraintNetwork> algebraic_closure(ConstraintNetwork net,
                                                   const CompositionTable& t);

/// Backtracking search for one base relation per pair surviving closure.
/// Branches on the pair with the smallest remaining set, trying relations in
/// canonical order, so the returned scenario is deterministic. Closure is
/// sound but not complete for arbitrary disjunctive networks; this is the
/// decision procedure.
std::optional<Scenario> refine_to_scenario(const ConstraintNetwork& net,
                                           const CompositionTable& t);

/// Builds a network from a JSON list of {"x": name, "y": name,
/// "rels": [names]} records. Relation names are canonical.
ConstraintNetwork network_from_json(std::string_view json_text);

/// Deterministic rendering: variable list, then one line per unordered pair.
std::string render_network(const ConstraintNetwork& net);

}  // namespace rcc8
