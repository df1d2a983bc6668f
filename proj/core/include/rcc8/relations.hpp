#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace rcc8 {

/// The eight jointly exhaustive, pairwise disjoint base relations of the
/// region connection calculus, in canonical order.
enum class Relation : std::uint8_t {
  DC = 0,     // disconnected
  EC = 1,     // externally connected
  PO = 2,     // partial overlap
  TPP = 3,    // tangential proper part
  NTPP = 4,   // non-tangential proper part
  TPPi = 5,   // tangential proper part inverse
  NTPPi = 6,  // non-tangential proper part inverse
  EQ = 7,     // equal
};

inline constexpr std::size_t kRelationCount = 8;

inline constexpr std::array<Relation, kRelationCount> kAllRelations = {
    Relation::DC,   Relation::EC,    Relation::PO,    Relation::TPP,
    Relation::NTPP, Relation::TPPi,  Relation::NTPPi, Relation::EQ,
};

constexpr std::size_t index_of(Relation r) {
  return static_cast<std::size_t>(r);
}

std::string_view relation_name(Relation r);

/// Single-letter coding used by grid reports: D E P T N t n Q.
char relation_letter(Relation r);

/// DC, EC, PO, EQ are self-converse; TPP<->TPPi and NTPP<->NTPPi swap.
constexpr Relation converse(Relation r) {
  switch (r) {
    case Relation::TPP:
      return Relation::TPPi;
    case Relation::TPPi:
      return Relation::TPP;
    case Relation::NTPP:
      return Relation::NTPPi;
    case Relation::NTPPi:
      return Relation::NTPP;
    default:
      return r;
  }
}

/// A subset of the eight base relations, stored as a bitmask. Iteration and
/// rendering always follow the canonical order DC, EC, PO, TPP, NTPP, TPPi,
/// NTPPi, EQ.
class RelationSet {
 public:
  constexpr RelationSet() = default;

  constexpr RelationSet(std::initializer_list<Relation> rels) {
    for (Relation r : rels) insert(r);
  }

  static constexpr RelationSet none() { return RelationSet(); }

  static constexpr RelationSet all() {
    RelationSet s;
    s.bits_ = 0xFF;
    return s;
  }

  static constexpr RelationSet single(Relation r) { return RelationSet{r}; }

  constexpr bool contains(Relation r) const {
    return (bits_ & bit(r)) != 0;
  }

  constexpr void insert(Relation r) { bits_ |= bit(r); }
  constexpr void erase(Relation r) { bits_ &= static_cast<std::uint8_t>(~bit(r)); }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool full() const { return bits_ == 0xFF; }

  constexpr std::size_t size() const {
    std::size_t n = 0;
    for (Relation r : kAllRelations)
      if (contains(r)) ++n;
    return n;
  }

  constexpr bool is_subset_of(RelationSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr RelationSet operator|(RelationSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr RelationSet operator&(RelationSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr RelationSet& operator|=(RelationSet o) { bits_ |= o.bits_; return *this; }
  constexpr RelationSet& operator&=(RelationSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const RelationSet&) const = default;

  constexpr std::uint8_t bits() const { return bits_; }

  static constexpr RelationSet from_bits(std::uint8_t bits) {
    RelationSet s;
    s.bits_ = bits;
    return s;
  }

  /// Members in canonical order.
  std::vector<Relation> members() const;

  /// Space-separated canonical names, e.g. "DC EC PO".
  std::string to_string() const;

 private:
  static constexpr std::uint8_t bit(Relation r) {
    return static_cast<std::uint8_t>(1u << index_of(r));
  }

  std::uint8_t bits_ = 0;
};

/// Elementwise converse of a set.
constexpr RelationSet converse(RelationSet s) {
  RelationSet out;
  for (Relation r : kAllRelations)
    if (s.contains(r)) out.insert(converse(r));
  return out;
}

}  // namespace rcc8
