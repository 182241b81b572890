#ifndef TEMPREL_ALGEBRA_HPP
#define TEMPREL_ALGEBRA_HPP

#include "temprel/relations.hpp"

#include <array>

namespace temprel {

// Non-degenerate interval on the timeline. Positions are exact as long as
// they stay within the double-representable integer range, which is all the
// generator and the oracle ever use.
struct IntervalConfig {
  double start = 0.0;
  double end = 1.0;
};

// Reads the label off interval endpoints. Containment is strict: a shared
// endpoint falls outside the five definite labels and maps to vague.
Relation relation_of_intervals(const IntervalConfig& a, const IntervalConfig& b);

// The 36-entry generalized transitivity table: (r1, r2) -> set of labels r3
// compatible with (A r1 B) and (B r2 C). Entries with a vague premise are the
// full six-label set; the 25 definite entries are derived by enumerating all
// weak orderings of the six endpoints of three intervals and projecting the
// realized labels onto the five definite ones.
class CompositionTable {
public:
  static const CompositionTable& instance();

  RelationSet compose(Relation r1, Relation r2) const {
    return table_[ordinal(r1)][ordinal(r2)];
  }

private:
  CompositionTable();
  std::array<std::array<RelationSet, kNumRelations>, kNumRelations> table_;
};

inline RelationSet compose(Relation r1, Relation r2) {
  return CompositionTable::instance().compose(r1, r2);
}

}  // namespace temprel

#endif  // TEMPREL_ALGEBRA_HPP
