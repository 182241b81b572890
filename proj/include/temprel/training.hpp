#ifndef TEMPREL_TRAINING_HPP
#define TEMPREL_TRAINING_HPP

#include "temprel/corpus.hpp"
#include "temprel/inference.hpp"
#include "temprel/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace temprel {

struct TrainConfig {
  double learning_rate = 1.0;
  int epochs = 20;
  std::uint64_t shuffle_seed = 7;
  double codl_gamma = 0.9;
  int codl_iterations = 5;
  bool vague_exclusion = true;
  double convergence_tol = 0.0;
  bool average = true;  // averaged weights; false returns the final iterate
};

struct TrainLogEntry {
  int epoch = 0;        // or CoDL iteration
  long long updates = 0;  // weight updates this epoch / changed pseudo-labels
  double objective = 0.0;
};

struct TrainLog {
  std::vector<TrainLogEntry> entries;
};

// One-vs-all averaged perceptron over the pairs of every document,
// each pair an independent example. Gold-vague pairs are skipped when
// vague exclusion is on.
Model train_local_ap(const Corpus& train, const TrainConfig& cfg,
                     TrainLog* log = nullptr);

// Structured perceptron with inference in the loop: per document, solve the
// constrained MAP with current weights, close the prediction, and update on
// the disagreeing pairs. Gold graphs are closed once up front.
Model train_structured(const Corpus& train, const TrainConfig& cfg,
                       const InferenceConfig& inf, TrainLog* log = nullptr);

// Constraint-driven semi-supervised learning: initialize from the labeled
// set, then repeatedly pseudo-label the unlabeled set through constrained
// inference plus closure and blend Learn(T) into the weights with
// coefficient gamma.
Model train_codl(const Corpus& labeled, const Corpus& unlabeled,
                 const TrainConfig& cfg, const InferenceConfig& inf,
                 TrainLog* log = nullptr);

}  // namespace temprel

#endif  // TEMPREL_TRAINING_HPP
