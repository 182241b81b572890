#ifndef TEMPREL_EVALUATION_HPP
#define TEMPREL_EVALUATION_HPP

#include "temprel/graph.hpp"

namespace temprel {

struct AwarenessScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Integer intersection counts; micro-averaging sums these across documents
// before forming ratios.
struct AwarenessCounts {
  long long precision_num = 0;
  long long precision_den = 0;
  long long recall_num = 0;
  long long recall_den = 0;

  AwarenessCounts& operator+=(const AwarenessCounts& o) {
    precision_num += o.precision_num;
    precision_den += o.precision_den;
    recall_num += o.recall_num;
    recall_den += o.recall_den;
    return *this;
  }

  AwarenessScore score() const;
};

// Temporal awareness of a system graph against gold:
//   P = |reduce(sys) n closure(gold)| / |reduce(sys)|
//   R = |reduce(gold) n closure(sys)| / |reduce(gold)|
// Edges intersect on canonical pair plus exact relation. Empty denominators
// contribute zero to that component.
AwarenessCounts awareness_counts(const TemporalGraph& sys,
                                 const TemporalGraph& gold);

AwarenessScore temporal_awareness(const TemporalGraph& sys,
                                  const TemporalGraph& gold);

// Debug statistic only: straight per-pair label accuracy with vague counted
// as a label. Not an acceptance surface.
double pairwise_accuracy(const TemporalGraph& sys, const TemporalGraph& gold);

}  // namespace temprel

#endif  // TEMPREL_EVALUATION_HPP
