#include "temprel/algebra.hpp"

#include "temprel/errors.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace temprel {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Before:
      return "before";
    case Relation::After:
      return "after";
    case Relation::Includes:
      return "includes";
    case Relation::IsIncluded:
      return "is_included";
    case Relation::Equal:
      return "equal";
    case Relation::Vague:
      return "vague";
  }
  return "vague";
}

std::optional<Relation> relation_from_string(std::string_view name) {
  for (Relation r : kAllRelations)
    if (to_string(r) == name) return r;
  return std::nullopt;
}

std::string to_string(RelationSet s) {
  std::string out = "{";
  bool first = true;
  for (Relation r : s) {
    if (!first) out += ",";
    out += to_string(r);
    first = false;
  }
  out += "}";
  return out;
}

Relation relation_of_intervals(const IntervalConfig& a, const IntervalConfig& b) {
  if (!(a.start < a.end) || !(b.start < b.end))
    throw std::invalid_argument("relation_of_intervals: degenerate interval");
  if (a.end < b.start) return Relation::Before;
  if (b.end < a.start) return Relation::After;
  if (a.start < b.start && b.end < a.end) return Relation::Includes;
  if (b.start < a.start && a.end < b.end) return Relation::IsIncluded;
  if (a.start == b.start && a.end == b.end) return Relation::Equal;
  return Relation::Vague;
}

namespace {

// Enumerates every weak ordering of the six endpoints (a.s, a.e, b.s, b.e,
// c.s, c.e) as an ordered set partition: item t joins one of the levels used
// so far or opens the next one. 4683 orderings for six items.
void enumerate_weak_orderings(
    std::array<int, 6>& level, int item, int n_levels,
    const std::function<void(const std::array<int, 6>&)>& emit) {
  if (item == 6) {
    emit(level);
    return;
  }
  for (int l = 0; l <= n_levels; ++l) {
    level[item] = l;
    enumerate_weak_orderings(level, item + 1,
                             l == n_levels ? n_levels + 1 : n_levels, emit);
  }
}

}  // namespace

CompositionTable::CompositionTable() {
  std::array<std::array<RelationSet, kNumRelations>, kNumRelations> realized{};

  std::array<int, 6> level{};
  long long count = 0;
  enumerate_weak_orderings(level, 0, 0, [&](const std::array<int, 6>& lv) {
    ++count;
    // Slots: 0 = a.start, 1 = a.end, 2 = b.start, 3 = b.end,
    //        4 = c.start, 5 = c.end.
    if (!(lv[0] < lv[1]) || !(lv[2] < lv[3]) || !(lv[4] < lv[5])) return;
    IntervalConfig a{double(lv[0]), double(lv[1])};
    IntervalConfig b{double(lv[2]), double(lv[3])};
    IntervalConfig c{double(lv[4]), double(lv[5])};
    Relation r1 = relation_of_intervals(a, b);
    Relation r2 = relation_of_intervals(b, c);
    Relation r3 = relation_of_intervals(a, c);
    realized[ordinal(r1)][ordinal(r2)].insert(r3);
  });
  if (count != 4683)
    throw std::logic_error("composition table: weak-ordering enumeration bug");

  for (Relation r1 : kAllRelations) {
    for (Relation r2 : kAllRelations) {
      if (r1 == Relation::Vague || r2 == Relation::Vague) {
        // A vague premise imposes no constraint.
        table_[ordinal(r1)][ordinal(r2)] = RelationSet::all();
        continue;
      }
      // Project onto the definite labels: realizable overlap-style
      // arrangements fall outside the label set and are dropped.
      RelationSet s =
          realized[ordinal(r1)][ordinal(r2)] & RelationSet::non_vague();
      if (s.empty())
        throw std::logic_error("composition table: empty definite entry");
      table_[ordinal(r1)][ordinal(r2)] = s;
    }
  }
}

const CompositionTable& CompositionTable::instance() {
  static const CompositionTable table;
  return table;
}

}  // namespace temprel
