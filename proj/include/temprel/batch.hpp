#ifndef TEMPREL_BATCH_HPP
#define TEMPREL_BATCH_HPP

#include "temprel/corpus.hpp"
#include "temprel/evaluation.hpp"
#include "temprel/inference.hpp"
#include "temprel/model.hpp"

#include <string>
#include <vector>

namespace temprel {

// Documents are independent during prediction, pseudo-labeling and
// evaluation, so those passes run as OpenMP parallel-for kernels. Serial is
// the reference implementation: results are element-indexed and integer
// aggregation is order-free, so both modes produce identical output, which
// the tests assert.
enum class ExecMode { Serial, Parallel };

// Closure for predicted graphs: strict first; a conflict between an edge
// derived through out-of-candidate-set pairs and an assigned edge falls back
// to first-writer-wins instead of aborting a run on solver-feasible output.
TemporalGraph close_prediction(const TemporalGraph& g);

// Per-document labels parallel to Document::pairs; vague outside the
// candidate set. No closure applied; the metric is closure-invariant.
struct DocPrediction {
  std::vector<Relation> labels;
};

std::vector<DocPrediction> predict_corpus(const Model& m, const Corpus& corpus,
                                          const InferenceConfig& inf,
                                          bool apply_post_filter,
                                          ExecMode mode);

// Local-only prediction: per-pair argmax over the active labels, no global
// inference. The L baseline.
std::vector<DocPrediction> predict_corpus_local(const Model& m,
                                                const Corpus& corpus,
                                                const InferenceConfig& inf,
                                                bool apply_post_filter,
                                                ExecMode mode);

// Inference plus closure per document; feeds CoDL's T set.
std::vector<std::vector<Relation>> pseudo_label_corpus(
    const Model& m, const Corpus& corpus, const InferenceConfig& inf,
    ExecMode mode);

// Copy of the corpus with gold replaced by predictions.
Corpus apply_predictions(const Corpus& corpus,
                         const std::vector<DocPrediction>& preds);

struct CorpusEval {
  AwarenessScore micro;
  AwarenessScore macro;
  AwarenessCounts micro_counts;
  std::vector<AwarenessScore> per_document;
};

// Documents matched by doc_id; throws ConfigError on a mismatch.
CorpusEval evaluate_corpora(const Corpus& sys, const Corpus& gold,
                            ExecMode mode);

CorpusEval evaluate_predictions(const std::vector<DocPrediction>& preds,
                                const Corpus& gold, ExecMode mode);

}  // namespace temprel

#endif  // TEMPREL_BATCH_HPP
