#include "temprel/evaluation.hpp"

namespace temprel {

namespace {

long long matching_edges(const TemporalGraph& lhs, const TemporalGraph& rhs) {
  long long n = 0;
  for (const auto& [pair, rel] : lhs.edges())
    if (rhs.relation(pair.first, pair.second) == rel) ++n;
  return n;
}

}  // namespace

AwarenessScore AwarenessCounts::score() const {
  AwarenessScore s;
  s.precision =
      precision_den > 0 ? double(precision_num) / double(precision_den) : 0.0;
  s.recall = recall_den > 0 ? double(recall_num) / double(recall_den) : 0.0;
  s.f1 = (s.precision + s.recall) > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

AwarenessCounts awareness_counts(const TemporalGraph& sys,
                                 const TemporalGraph& gold) {
  TemporalGraph sys_plus = closure(sys);
  TemporalGraph gold_plus = closure(gold);
  TemporalGraph sys_minus = reduce(sys);
  TemporalGraph gold_minus = reduce(gold);

  AwarenessCounts c;
  c.precision_den = sys_minus.edge_count();
  c.precision_num = matching_edges(sys_minus, gold_plus);
  c.recall_den = gold_minus.edge_count();
  c.recall_num = matching_edges(gold_minus, sys_plus);
  return c;
}

AwarenessScore temporal_awareness(const TemporalGraph& sys,
                                  const TemporalGraph& gold) {
  return awareness_counts(sys, gold).score();
}

double pairwise_accuracy(const TemporalGraph& sys, const TemporalGraph& gold) {
  const int n = gold.n_events();
  long long total = (long long)n * (n - 1) / 2;
  if (total == 0) return 0.0;
  long long hit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sys.relation(i, j) == gold.relation(i, j)) ++hit;
  return double(hit) / double(total);
}

}  // namespace temprel
