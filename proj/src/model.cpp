#include "temprel/model.hpp"

#include "temprel/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>

namespace temprel {

using nlohmann::json;

FeatureVector::FeatureVector(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  normalize();
}

void FeatureVector::add(std::uint32_t index, double value) {
  entries_.emplace_back(index, value);
  normalize();
}

void FeatureVector::normalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (const Entry& e : entries_) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  std::erase_if(merged, [](const Entry& e) { return e.second == 0.0; });
  entries_ = std::move(merged);
}

std::uint32_t FeatureVector::max_index() const {
  return entries_.empty() ? 0 : entries_.back().first;
}

double FeatureVector::dot(const std::vector<double>& dense) const {
  double s = 0.0;
  for (const auto& [i, v] : entries_)
    if (i < dense.size()) s += v * dense[i];
  return s;
}

void FeatureVector::add_to(std::vector<double>& dense, double scale) const {
  for (const auto& [i, v] : entries_)
    if (i < dense.size()) dense[i] += scale * v;
}

Model Model::zeros(std::uint32_t dimension, bool vague_exclusion) {
  Model m;
  m.dimension = dimension;
  for (Relation r : kAllRelations) {
    if (vague_exclusion && r == Relation::Vague) continue;
    m.active_labels.push_back(r);
    m.weights.emplace_back(dimension, 0.0);
  }
  return m;
}

const std::vector<double>& Model::weights_for(Relation r) const {
  for (std::size_t i = 0; i < active_labels.size(); ++i)
    if (active_labels[i] == r) return weights[i];
  throw ConfigError("model has no weights for label " +
                    std::string(to_string(r)));
}

std::vector<double>& Model::weights_for(Relation r) {
  for (std::size_t i = 0; i < active_labels.size(); ++i)
    if (active_labels[i] == r) return weights[i];
  throw ConfigError("model has no weights for label " +
                    std::string(to_string(r)));
}

bool Model::has_label(Relation r) const {
  return std::find(active_labels.begin(), active_labels.end(), r) !=
         active_labels.end();
}

PairProbs softmax_scores(const Model& m, const FeatureVector& phi) {
  if (!phi.empty() && phi.max_index() >= m.dimension)
    throw SchemaError("feature index " + std::to_string(phi.max_index()) +
                      " out of range for model dimension " +
                      std::to_string(m.dimension));

  std::vector<double> logits(m.active_labels.size());
  for (std::size_t i = 0; i < m.weights.size(); ++i)
    logits[i] = phi.dot(m.weights[i]);

  double max_logit = *std::max_element(logits.begin(), logits.end());
  double denom = 0.0;
  for (double& l : logits) {
    l = std::exp(l - max_logit);
    denom += l;
  }

  PairProbs probs{};
  for (std::size_t i = 0; i < m.active_labels.size(); ++i)
    probs[ordinal(m.active_labels[i])] = logits[i] / denom;
  return probs;
}

double document_score(const Model& m,
                      const std::vector<FeatureVector>& pair_features,
                      const std::vector<Relation>& assignment) {
  if (pair_features.size() != assignment.size())
    throw ConfigError("document_score: assignment does not cover every pair");
  double total = 0.0;
  for (std::size_t i = 0; i < pair_features.size(); ++i) {
    if (!m.has_label(assignment[i]))
      throw ConfigError("document_score: assigned label outside active set");
    total += softmax_scores(m, pair_features[i])[ordinal(assignment[i])];
  }
  return total;
}

void save_model(const Model& m, const std::filesystem::path& path) {
  json j;
  j["version"] = 1;
  j["feature_dimension"] = m.dimension;
  json labels = json::array();
  for (Relation r : m.active_labels) labels.push_back(std::string(to_string(r)));
  j["active_labels"] = labels;
  json weights = json::object();
  for (std::size_t i = 0; i < m.active_labels.size(); ++i) {
    json arr = json::array();
    for (std::uint32_t k = 0; k < m.dimension; ++k)
      if (m.weights[i][k] != 0.0) arr.push_back(json::array({k, m.weights[i][k]}));
    weights[std::string(to_string(m.active_labels[i]))] = arr;
  }
  j["weights"] = weights;

  std::ofstream out(path);
  if (!out) throw SchemaError("cannot open model file for writing: " + path.string());
  out << j.dump(2) << "\n";
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open model file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw SchemaError("model file " + path.string() + ": " + e.what());
  }
  try {
    if (j.at("version").get<int>() != 1)
      throw SchemaError("model file " + path.string() + ": unsupported version");
    Model m;
    m.dimension = j.at("feature_dimension").get<std::uint32_t>();
    for (const auto& name : j.at("active_labels")) {
      auto r = relation_from_string(name.get<std::string>());
      if (!r)
        throw SchemaError("model file " + path.string() + ": unknown label " +
                          name.get<std::string>());
      m.active_labels.push_back(*r);
      m.weights.emplace_back(m.dimension, 0.0);
    }
    const json& weights = j.at("weights");
    for (std::size_t i = 0; i < m.active_labels.size(); ++i) {
      std::string name(to_string(m.active_labels[i]));
      for (const auto& entry : weights.at(name)) {
        std::uint32_t idx = entry.at(0).get<std::uint32_t>();
        if (idx >= m.dimension)
          throw SchemaError("model file " + path.string() +
                            ": weight index out of range");
        m.weights[i][idx] = entry.at(1).get<double>();
      }
    }
    return m;
  } catch (const json::exception& e) {
    throw SchemaError("model file " + path.string() + ": " + e.what());
  }
}

}  // namespace temprel
