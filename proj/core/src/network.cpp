#include "rcc8/network.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "rcc8/errors.hpp"
#include "rcc8/lexicon.hpp"

namespace rcc8 {

std::size_t ConstraintNetwork::variable(const std::string& name) {
  if (auto found = find_variable(name)) return *found;
  const std::size_t old_n = names_.size();
  const std::size_t new_n = old_n + 1;
  names_.push_back(name);
  std::vector<RelationSet> grown(new_n * new_n, RelationSet::all());
  for (std::size_t i = 0; i < old_n; ++i)
    for (std::size_t j = 0; j < old_n; ++j) grown[i * new_n + j] = matrix_[i * old_n + j];
  matrix_ = std::move(grown);
  matrix_[old_n * new_n + old_n] = RelationSet::single(Relation::EQ);
  return old_n;
}

std::optional<std::size_t> ConstraintNetwork::find_variable(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

void ConstraintNetwork::set_constraint(std::size_t i, std::size_t j, RelationSet s) {
  matrix_[i * names_.size() + j] = s;
  matrix_[j * names_.size() + i] = converse(s);
}

void ConstraintNetwork::add_constraint(const std::string& x, const std::string& y,
                                       RelationSet s) {
  if (x == y) {
    if (s != RelationSet::single(Relation::EQ))
      throw SelfConstraintError("constraint on (" + x + ", " + x + ") must be exactly EQ");
    variable(x);
    return;
  }
  std::size_t i = variable(x);
  std::size_t j = variable(y);
  RelationSet refined = constraint(i, j) & s;
  if (refined.empty())
    throw EmptyConstraintError("constraint on (" + x + ", " + y + ") became empty");
  set_constraint(i, j, refined);
}

std::optional<ConstraintNetwork> algebraic_closure(ConstraintNetwork net,
                                                   const CompositionTable& t) {
  const std::size_t n = net.size();
  if (n < 2) return net;

  std::set<std::pair<std::size_t, std::size_t>> worklist;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) worklist.insert({i, j});

  bool inconsistent = false;
  auto refine = [&](std::size_t i, std::size_t k, RelationSet by) {
    RelationSet refined = net.constraint(i, k) & by;
    if (refined == net.constraint(i, k)) return;
    net.set_constraint(i, k, refined);
    if (refined.empty()) {
      inconsistent = true;
      return;
    }
    worklist.insert({std::min(i, k), std::max(i, k)});
  };

  while (!worklist.empty() && !inconsistent) {
    auto [i, j] = *worklist.begin();
    worklist.erase(worklist.begin());
    for (std::size_t k = 0; k < n && !inconsistent; ++k) {
      if (k == i || k == j) continue;
      refine(i, k, compose_sets(net.constraint(i, j), net.constraint(j, k), t));
      if (inconsistent) break;
      refine(k, j, compose_sets(net.constraint(k, i), net.constraint(i, j), t));
    }
  }
  if (inconsistent) return std::nullopt;
  return net;
}

namespace {

std::optional<ConstraintNetwork> search_scenario(const ConstraintNetwork& closed,
                                                 const CompositionTable& t) {
  const std::size_t n = closed.size();
  // Branch on the undecided pair with the fewest remaining relations.
  std::size_t best_i = 0, best_j = 0;
  std::size_t best_size = kRelationCount + 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t size = closed.constraint(i, j).size();
      if (size > 1 && size < best_size) {
        best_size = size;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (best_size == kRelationCount + 1) return closed;  // all singletons

  for (Relation r : closed.constraint(best_i, best_j).members()) {
    ConstraintNetwork branch = closed;
    branch.set_constraint(best_i, best_j, RelationSet::single(r));
    if (auto reclosed = algebraic_closure(std::move(branch), t)) {
      if (auto solved = search_scenario(*reclosed, t)) return solved;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Scenario> refine_to_scenario(const ConstraintNetwork& net,
                                           const CompositionTable& t) {
  auto closed = algebraic_closure(net, t);
  if (!closed) return std::nullopt;
  auto solved = search_scenario(*closed, t);
  if (!solved) return std::nullopt;

  Scenario scenario;
  scenario.variables = solved->variables();
  const std::size_t n = solved->size();
  scenario.matrix.resize(n * n, Relation::EQ);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scenario.matrix[i * n + j] = solved->constraint(i, j).members().front();
  return scenario;
}

ConstraintNetwork network_from_json(std::string_view json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_array())
    throw Error("network document is not a JSON array");

  Lexicon lex = Lexicon::canonical();
  ConstraintNetwork net;
  for (const auto& record : doc) {
    if (!record.is_object() || !record.contains("x") || !record.contains("y") ||
        !record.contains("rels"))
      throw Error("network record must have fields x, y, rels");
    RelationSet set;
    for (const auto& name : record.at("rels")) set.insert(parse_relation(name.get<std::string>(), lex));
    if (set.empty()) throw Error("network record has an empty rels list");
    net.add_constraint(record.at("x").get<std::string>(), record.at("y").get<std::string>(), set);
  }
  return net;
}

std::string render_network(const ConstraintNetwork& net) {
  std::string out = "variables:";
  for (const auto& name : net.variables()) out += " " + name;
  out += "\n";
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      out += net.variables()[i] + " " + net.variables()[j] + ": " +
             net.constraint(i, j).to_string() + "\n";
    }
  }
  return out;
}

}  // namespace rcc8
