#include "rcc8/composition_table.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rcc8/errors.hpp"
#include "rcc8/lexicon.hpp"

namespace rcc8 {

namespace {

std::string cell_key(Relation r1, Relation r2) {
  return std::string(relation_name(r1)) + "|" + std::string(relation_name(r2));
}

Relation relation_from_exact_name(const std::string& name, const std::string& context) {
  for (Relation r : kAllRelations)
    if (name == relation_name(r)) return r;
  throw MalformedTableError("unknown relation name '" + name + "' in " + context);
}

}  // namespace

std::size_t CompositionTable::entry_count() const {
  std::size_t n = 0;
  for (Relation r1 : kAllRelations)
    for (Relation r2 : kAllRelations) n += cell(r1, r2).size();
  return n;
}

RelationSet compose(Relation r1, Relation r2, const CompositionTable& t) {
  return t.cell(r1, r2);
}

RelationSet compose_sets(RelationSet s1, RelationSet s2, const CompositionTable& t) {
  RelationSet out;
  for (Relation r1 : kAllRelations) {
    if (!s1.contains(r1)) continue;
    for (Relation r2 : kAllRelations) {
      if (!s2.contains(r2)) continue;
      out |= t.cell(r1, r2);
    }
  }
  return out;
}

CompositionTable load_composition_table(std::string_view json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw MalformedTableError("table document is not a JSON object");
  if (doc.size() != kRelationCount * kRelationCount)
    throw MalformedTableError("expected 64 cells, found " + std::to_string(doc.size()));

  CompositionTable table;
  std::array<std::array<bool, kRelationCount>, kRelationCount> seen{};
  for (const auto& [key, value] : doc.items()) {
    auto sep = key.find('|');
    if (sep == std::string::npos)
      throw MalformedTableError("cell key '" + key + "' is not of the form R1|R2");
    Relation r1 = relation_from_exact_name(key.substr(0, sep), "cell key '" + key + "'");
    Relation r2 = relation_from_exact_name(key.substr(sep + 1), "cell key '" + key + "'");
    if (!value.is_array())
      throw MalformedTableError("cell " + key + " is not an array");
    RelationSet set;
    for (const auto& item : value) {
      if (!item.is_string())
        throw MalformedTableError("cell " + key + " contains a non-string entry");
      set.insert(relation_from_exact_name(item.get<std::string>(), "cell " + key));
    }
    if (set.empty()) throw MalformedTableError("cell " + key + " is empty");
    table.cells_[index_of(r1)][index_of(r2)] = set;
    seen[index_of(r1)][index_of(r2)] = true;
  }
  for (Relation r1 : kAllRelations)
    for (Relation r2 : kAllRelations)
      if (!seen[index_of(r1)][index_of(r2)])
        throw MalformedTableError("missing cell " + cell_key(r1, r2));

  // Identity law: EQ composes as the identity on both sides.
  for (Relation r : kAllRelations) {
    if (table.cell(Relation::EQ, r) != RelationSet::single(r))
      throw LawViolationError(LawViolationError::Law::Identity, cell_key(Relation::EQ, r),
                              "expected exactly {" + std::string(relation_name(r)) + "}");
    if (table.cell(r, Relation::EQ) != RelationSet::single(r))
      throw LawViolationError(LawViolationError::Law::Identity, cell_key(r, Relation::EQ),
                              "expected exactly {" + std::string(relation_name(r)) + "}");
  }

  // Converse law: u in cell(r,s) iff converse(u) in cell(converse(s), converse(r)).
  for (Relation r : kAllRelations) {
    for (Relation s : kAllRelations) {
      for (Relation u : kAllRelations) {
        bool lhs = table.cell(r, s).contains(u);
        bool rhs = table.cell(converse(s), converse(r)).contains(converse(u));
        if (lhs != rhs)
          throw LawViolationError(
              LawViolationError::Law::Converse, cell_key(r, s),
              std::string(relation_name(u)) + " disagrees with cell " +
                  cell_key(converse(s), converse(r)));
      }
    }
  }
  return table;
}

CompositionTable load_composition_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedTableError("cannot open table file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_composition_table(buf.str());
}

std::filesystem::path default_composition_table_path() {
  return std::filesystem::path(RCC8_ASSET_DIR) / "composition_table.json";
}

}  // namespace rcc8
