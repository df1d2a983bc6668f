#include "rcc8/relations.hpp"

namespace rcc8 {

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::DC:
      return "DC";
    case Relation::EC:
      return "EC";
    case Relation::PO:
      return "PO";
    case Relation::TPP:
      return "TPP";
    case Relation::NTPP:
      return "NTPP";
    case Relation::TPPi:
      return "TPPi";
    case Relation::NTPPi:
      return "NTPPi";
    case Relation::EQ:
      return "EQ";
  }
  return "?";
}

char relation_letter(Relation r) {
  switch (r) {
    case Relation::DC:
      return 'D';
    case Relation::EC:
      return 'E';
    case Relation::PO:
      return 'P';
    case Relation::TPP:
      return 'T';
    case Relation::NTPP:
      return 'N';
    case Relation::TPPi:
      return 't';
    case Relation::NTPPi:
      return 'n';
    case Relation::EQ:
      return 'Q';
  }
  return '?';
}

std::vector<Relation> RelationSet::members() const {
  std::vector<Relation> out;
  out.reserve(size());
  for (Relation r : kAllRelations)
    if (contains(r)) out.push_back(r);
  return out;
}

std::string RelationSet::to_string() const {
  std::string out;
  for (Relation r : kAllRelations) {
    if (!contains(r)) continue;
    if (!out.empty()) out += ' ';
    out += relation_name(r);
  }
  return out;
}

}  // namespace rcc8
