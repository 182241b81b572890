#ifndef TEMPREL_RELATIONS_HPP
#define TEMPREL_RELATIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace temprel {

// The six temporal relations. Ordinal values are part of the serialization
// contract and of tie-breaking rules; do not reorder.
enum class Relation : std::uint8_t {
  Before = 0,
  After = 1,
  Includes = 2,
  IsIncluded = 3,
  Equal = 4,
  Vague = 5,
};

inline constexpr int kNumRelations = 6;

inline constexpr std::array<Relation, kNumRelations> kAllRelations = {
    Relation::Before,     Relation::After, Relation::Includes,
    Relation::IsIncluded, Relation::Equal, Relation::Vague,
};

constexpr int ordinal(Relation r) { return static_cast<int>(r); }

constexpr Relation reverse(Relation r) {
  switch (r) {
    case Relation::Before:
      return Relation::After;
    case Relation::After:
      return Relation::Before;
    case Relation::Includes:
      return Relation::IsIncluded;
    case Relation::IsIncluded:
      return Relation::Includes;
    case Relation::Equal:
      return Relation::Equal;
    case Relation::Vague:
      return Relation::Vague;
  }
  return Relation::Vague;
}

std::string_view to_string(Relation r);
std::optional<Relation> relation_from_string(std::string_view name);

// Subset of the six relations as a 6-bit mask. Empty sets are representable
// and signal an inconsistent composition context.
class RelationSet {
public:
  constexpr RelationSet() = default;
  constexpr explicit RelationSet(std::uint8_t bits) : bits_(bits & 0x3f) {}

  static constexpr RelationSet all() { return RelationSet(0x3f); }
  static constexpr RelationSet non_vague() { return RelationSet(0x1f); }
  static constexpr RelationSet single(Relation r) {
    return RelationSet(static_cast<std::uint8_t>(1u << ordinal(r)));
  }

  constexpr bool contains(Relation r) const {
    return (bits_ >> ordinal(r)) & 1u;
  }
  constexpr void insert(Relation r) { bits_ |= (1u << ordinal(r)); }
  constexpr void erase(Relation r) { bits_ &= ~(1u << ordinal(r)); }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const {
    int n = 0;
    for (int i = 0; i < kNumRelations; ++i) n += (bits_ >> i) & 1;
    return n;
  }
  constexpr bool is_singleton() const { return size() == 1; }

  // The single member of a singleton set. Undefined on non-singletons.
  constexpr Relation only() const {
    for (int i = 0; i < kNumRelations; ++i)
      if ((bits_ >> i) & 1) return static_cast<Relation>(i);
    return Relation::Vague;
  }

  // Lowest-ordinal member; undefined on the empty set.
  constexpr Relation first() const { return only(); }

  constexpr RelationSet reversed() const {
    RelationSet out;
    for (int i = 0; i < kNumRelations; ++i)
      if ((bits_ >> i) & 1) out.insert(reverse(static_cast<Relation>(i)));
    return out;
  }

  constexpr RelationSet operator&(RelationSet o) const {
    return RelationSet(static_cast<std::uint8_t>(bits_ & o.bits_));
  }
  constexpr RelationSet operator|(RelationSet o) const {
    return RelationSet(static_cast<std::uint8_t>(bits_ | o.bits_));
  }
  constexpr RelationSet& operator&=(RelationSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr RelationSet& operator|=(RelationSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool operator==(const RelationSet&) const = default;

  constexpr std::uint8_t bits() const { return bits_; }

  class iterator {
   public:
    constexpr iterator(std::uint8_t bits, int pos) : bits_(bits), pos_(pos) {
      advance();
    }
    constexpr Relation operator*() const { return static_cast<Relation>(pos_); }
    constexpr iterator& operator++() {
      ++pos_;
      advance();
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return pos_ != o.pos_; }

   private:
    constexpr void advance() {
      while (pos_ < kNumRelations && !((bits_ >> pos_) & 1)) ++pos_;
    }
    std::uint8_t bits_;
    int pos_;
  };

  constexpr iterator begin() const { return iterator(bits_, 0); }
  constexpr iterator end() const { return iterator(bits_, kNumRelations); }

private:
  std::uint8_t bits_ = 0;
};

std::string to_string(RelationSet s);

}  // namespace temprel

#endif  // TEMPREL_RELATIONS_HPP
