#ifndef TEMPREL_INFERENCE_HPP
#define TEMPREL_INFERENCE_HPP

#include "temprel/algebra.hpp"
#include "temprel/corpus.hpp"
#include "temprel/model.hpp"

#include <utility>
#include <vector>

namespace temprel {

struct InferenceConfig {
  int max_sentence_dist = 1;
  double post_filter_tau = 0.2;
  // 0 means all active definite labels; feasible_subset_m switches the
  // candidate set to the transitivity-feasible labels of each pair.
  int post_filter_m = 0;
  bool feasible_subset_m = false;
  bool vague_exclusion = true;
  long long solver_node_limit = 1'000'000;
};

// Candidate pairs admitted to inference, canonical order, ascending.
// pair_index maps back into Document::pairs.
struct CandidatePairSet {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> pair_index;

  std::size_t size() const { return pairs.size(); }
};

// Soft-max probabilities per candidate pair, parallel to the pair set.
struct ScoreTable {
  std::vector<PairProbs> probs;
};

// One label per candidate pair, parallel to the pair set.
struct Assignment {
  std::vector<Relation> labels;

  TemporalGraph to_graph(int n_events, const CandidatePairSet& pairs) const;
};

// Pairs within the sentence-distance bound.
CandidatePairSet prefilter(const Document& doc, const InferenceConfig& cfg);

ScoreTable score_pairs(const Model& m, const Document& doc,
                       const CandidatePairSet& pairs);

// Exact MAP under uniqueness, symmetry and generalized transitivity:
// depth-first branch and bound over the candidate pairs, ordered by
// descending score margin, with arc-consistency propagation over the
// composition sets and an optimistic per-pair-max bound. Throws
// NodeLimitError past cfg.solver_node_limit.
Assignment solve_map(const ScoreTable& scores, const CandidatePairSet& pairs,
                     const InferenceConfig& cfg);

// True iff every in-set triple satisfies label(ac) in
// compose(label(ab), label(bc)) for all six walk orientations.
bool check_assignment(const CandidatePairSet& pairs,
                      const std::vector<Relation>& labels);

// Relative entropy of the renormalized distribution over the M candidate
// labels against uniform; in [0, log M].
double relative_entropy_delta(const std::vector<double>& candidate_probs);

// Relabels low-confidence pairs to vague: keep the ILP label when
// delta > tau, otherwise drop it. Never moves a definite label to another
// definite label.
Assignment post_filter(const ScoreTable& scores, const CandidatePairSet& pairs,
                       const Assignment& a, const InferenceConfig& cfg);

}  // namespace temprel

#endif  // TEMPREL_INFERENCE_HPP
