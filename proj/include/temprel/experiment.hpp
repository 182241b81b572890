#ifndef TEMPREL_EXPERIMENT_HPP
#define TEMPREL_EXPERIMENT_HPP

#include "temprel/batch.hpp"
#include "temprel/synth.hpp"
#include "temprel/training.hpp"

#include <string>
#include <vector>

namespace temprel {

// The L / L+I / S+I / CoDL comparison grid on a generated corpus: train and
// test splits are drawn per seed, every method trains and predicts under the
// shared vague-handling configuration, and scores are averaged over seeds.
struct ExperimentConfig {
  SynthConfig synth;           // seed field is overridden per run seed
  int train_docs = 50;
  int test_docs = 20;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  TrainConfig train;
  InferenceConfig inference;
  bool post_filter = false;
  bool tune_tau = false;       // grid over {0, 0.05, ..., 1.0} on a 10% dev split
  double labeled_fraction = 0.2;  // CoDL: fraction of train docs kept labeled
  std::vector<std::string> methods = {"local", "l+i", "s+i", "codl"};
  ExecMode exec = ExecMode::Parallel;
};

struct MethodResult {
  std::string method;
  std::vector<AwarenessScore> per_seed;
  AwarenessScore mean;
  std::vector<double> tuned_tau;  // per seed, when tau tuning ran
};

struct ExperimentResult {
  std::vector<MethodResult> rows;

  const MethodResult& row(const std::string& method) const;
  std::string table() const;  // aligned text table
  std::string to_json() const;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace temprel

#endif  // TEMPREL_EXPERIMENT_HPP
