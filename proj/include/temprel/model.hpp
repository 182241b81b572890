#ifndef TEMPREL_MODEL_HPP
#define TEMPREL_MODEL_HPP

#include "temprel/features.hpp"
#include "temprel/relations.hpp"

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace temprel {

// One-vs-all linear model: a dense weight vector per active relation.
// The active set is the five definite labels when vague exclusion is on,
// all six otherwise.
struct Model {
  std::uint32_t dimension = 0;
  std::vector<Relation> active_labels;
  std::vector<std::vector<double>> weights;  // parallel to active_labels

  static Model zeros(std::uint32_t dimension, bool vague_exclusion);

  const std::vector<double>& weights_for(Relation r) const;
  std::vector<double>& weights_for(Relation r);
  bool has_label(Relation r) const;

  bool operator==(const Model&) const = default;
};

// Per-pair soft-max probabilities over the six ordinals; inactive labels
// hold zero. Probabilities over the active set sum to one.
using PairProbs = std::array<double, kNumRelations>;

// f_r = exp(w_r . phi) / sum_r' exp(w_r' . phi), max-subtracted. Throws
// SchemaError when a feature index reaches past the model dimension.
PairProbs softmax_scores(const Model& m, const FeatureVector& phi);

// Sum of per-pair probabilities of the assigned labels.
double document_score(const Model& m, const std::vector<FeatureVector>& pair_features,
                      const std::vector<Relation>& assignment);

void save_model(const Model& m, const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);

}  // namespace temprel

#endif  // TEMPREL_MODEL_HPP
