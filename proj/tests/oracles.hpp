// Test-side oracles, kept independent of the library's implementation
// paths: composition sets re-derived from an integer endpoint grid instead
// of ordered set partitions, MAP solved by exhaustive enumeration instead of
// branch and bound, and consistent graphs built from sampled interval
// models.

#ifndef TEMPREL_TESTS_ORACLES_HPP
#define TEMPREL_TESTS_ORACLES_HPP

#include "temprel/algebra.hpp"
#include "temprel/graph.hpp"
#include "temprel/inference.hpp"
#include "temprel/rng.hpp"

#include <array>
#include <vector>

namespace temprel::testing {

// Composition sets from all 6^6 integer endpoint configurations in [0,6)^6.
// Values 0..5 realize every weak ordering of six endpoints, so this covers
// exactly the arrangements the production table is derived from, through a
// different enumeration.
inline std::array<std::array<RelationSet, kNumRelations>, kNumRelations>
grid_composition_sets() {
  std::array<std::array<RelationSet, kNumRelations>, kNumRelations> realized{};
  std::array<int, 6> v{};
  for (v[0] = 0; v[0] < 6; ++v[0])
    for (v[1] = 0; v[1] < 6; ++v[1])
      for (v[2] = 0; v[2] < 6; ++v[2])
        for (v[3] = 0; v[3] < 6; ++v[3])
          for (v[4] = 0; v[4] < 6; ++v[4])
            for (v[5] = 0; v[5] < 6; ++v[5]) {
              if (!(v[0] < v[1]) || !(v[2] < v[3]) || !(v[4] < v[5])) continue;
              IntervalConfig a{double(v[0]), double(v[1])};
              IntervalConfig b{double(v[2]), double(v[3])};
              IntervalConfig c{double(v[4]), double(v[5])};
              realized[ordinal(relation_of_intervals(a, b))]
                      [ordinal(relation_of_intervals(b, c))]
                          .insert(relation_of_intervals(a, c));
            }
  return realized;
}

// Exhaustive MAP: every assignment over the active labels, feasibility via
// check_assignment, objective summed in canonical pair order.
struct BruteForceResult {
  double objective = -1.0;
  std::vector<Relation> labels;
};

inline BruteForceResult brute_force_map(const ScoreTable& scores,
                                        const CandidatePairSet& pairs,
                                        bool vague_exclusion) {
  std::vector<Relation> active;
  for (Relation r : kAllRelations)
    if (!(vague_exclusion && r == Relation::Vague)) active.push_back(r);

  const std::size_t n = pairs.size();
  BruteForceResult best;
  std::vector<Relation> labels(n, active.front());
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) labels[i] = active[idx[i]];
    if (check_assignment(pairs, labels)) {
      double value = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        value += scores.probs[i][ordinal(labels[i])];
      if (value > best.objective) {
        best.objective = value;
        best.labels = labels;
      }
    }
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == active.size()) idx[pos++] = 0;
    if (pos == n) break;
  }
  return best;
}

// Graph sampled from an interval model: consistent by construction. Each
// pair's relation is kept with the given probability so sparse graphs also
// show up.
inline TemporalGraph random_consistent_graph(int n_events, Rng& rng,
                                             double keep_prob = 0.7) {
  std::vector<IntervalConfig> intervals;
  for (int i = 0; i < n_events; ++i) {
    long long start = rng.next_int(0, 20);
    long long len = rng.next_int(1, 12);
    intervals.push_back({double(start), double(start + len)});
  }
  TemporalGraph g(n_events);
  for (int i = 0; i < n_events; ++i)
    for (int j = i + 1; j < n_events; ++j) {
      if (!rng.next_bool(keep_prob)) continue;
      Relation r = relation_of_intervals(intervals[i], intervals[j]);
      if (r != Relation::Vague) g.add_edge(i, j, r);
    }
  return g;
}

// Random scores for n_pairs over the active label set, normalized per pair.
inline ScoreTable random_scores(std::size_t n_pairs, bool vague_exclusion,
                                Rng& rng) {
  ScoreTable t;
  for (std::size_t i = 0; i < n_pairs; ++i) {
    PairProbs p{};
    double total = 0.0;
    for (Relation r : kAllRelations) {
      if (vague_exclusion && r == Relation::Vague) continue;
      p[ordinal(r)] = 0.05 + rng.next_double();
      total += p[ordinal(r)];
    }
    for (double& x : p) x /= total;
    t.probs.push_back(p);
  }
  return t;
}

}  // namespace temprel::testing

#endif  // TEMPREL_TESTS_ORACLES_HPP
