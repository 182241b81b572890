#include "temprel/training.hpp"

#include "temprel/batch.hpp"
#include "temprel/errors.hpp"
#include "temprel/rng.hpp"

#include <algorithm>
#include <iostream>

namespace temprel {

namespace {

// Averaging accumulator: avg after T steps is w - u/T where u collects
// (step-1)-weighted deltas. Equals the mean of the per-step snapshots.
class AveragedWeights {
public:
  AveragedWeights(std::size_t n_labels, std::uint32_t dim)
      : w_(n_labels, std::vector<double>(dim, 0.0)),
        u_(n_labels, std::vector<double>(dim, 0.0)) {}

  void update(std::size_t label, const FeatureVector& phi, double scale) {
    phi.add_to(w_[label], scale);
    phi.add_to(u_[label], scale * double(step_));
  }

  // Call once per example visit, after any updates for it.
  void tick() { ++step_; }

  std::vector<std::vector<double>> final_weights() const { return w_; }

  std::vector<std::vector<double>> averaged_weights() const {
    std::vector<std::vector<double>> avg = w_;
    if (step_ == 0) return avg;
    const double t = double(step_);
    for (std::size_t l = 0; l < avg.size(); ++l)
      for (std::size_t k = 0; k < avg[l].size(); ++k)
        avg[l][k] -= u_[l][k] / t;
    return avg;
  }

  const std::vector<double>& raw(std::size_t label) const { return w_[label]; }
  std::size_t n_labels() const { return w_.size(); }

private:
  std::vector<std::vector<double>> w_;
  std::vector<std::vector<double>> u_;
  long long step_ = 0;  // examples seen so far; updates use the 0-based index
};

int argmax_label(const Model& m, const AveragedWeights& acc,
                 const FeatureVector& phi) {
  int best = 0;
  double best_score = -1e300;
  for (std::size_t l = 0; l < m.active_labels.size(); ++l) {
    double s = phi.dot(acc.raw(l));
    if (s > best_score) {
      best_score = s;
      best = (int)l;
    }
  }
  return best;
}

int label_slot(const Model& m, Relation r) {
  for (std::size_t l = 0; l < m.active_labels.size(); ++l)
    if (m.active_labels[l] == r) return (int)l;
  return -1;
}

void finalize(Model& m, const AveragedWeights& acc, bool average) {
  m.weights = average ? acc.averaged_weights() : acc.final_weights();
}

}  // namespace

Model train_local_ap(const Corpus& train, const TrainConfig& cfg,
                     TrainLog* log) {
  if (cfg.epochs < 1) throw ConfigError("train_local_ap: epochs must be >= 1");

  struct Example {
    const FeatureVector* phi;
    Relation gold;
  };
  std::vector<Example> examples;
  for (const Document& doc : train.documents) {
    for (const PairExample& p : doc.pairs) {
      Relation gold = p.gold.value_or(Relation::Vague);
      if (cfg.vague_exclusion && gold == Relation::Vague) continue;
      examples.push_back({&p.features, gold});
    }
  }
  if (examples.empty())
    throw ConfigError("train_local_ap: no usable training pairs");

  Model m = Model::zeros(train.feature_dimension, cfg.vague_exclusion);
  AveragedWeights acc(m.active_labels.size(), m.dimension);
  Rng rng(cfg.shuffle_seed);

  std::vector<std::size_t> order(examples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(order);
    long long updates = 0;
    for (std::size_t i : order) {
      const Example& ex = examples[i];
      int predicted = argmax_label(m, acc, *ex.phi);
      int gold = label_slot(m, ex.gold);
      if (predicted != gold) {
        acc.update(gold, *ex.phi, cfg.learning_rate);
        acc.update(predicted, *ex.phi, -cfg.learning_rate);
        ++updates;
      }
      acc.tick();
    }
    if (log) log->entries.push_back({epoch, updates, 0.0});
    if (updates == 0) break;
  }

  finalize(m, acc, cfg.average);
  return m;
}

namespace {

// Per-pair labels of a document read off a closed graph; vague when absent.
std::vector<Relation> labels_from_graph(const Document& doc,
                                        const TemporalGraph& g) {
  std::vector<Relation> out;
  out.reserve(doc.pairs.size());
  for (const PairExample& p : doc.pairs) out.push_back(g.relation(p.e1, p.e2));
  return out;
}

}  // namespace

Model train_structured(const Corpus& train, const TrainConfig& cfg,
                       const InferenceConfig& inf, TrainLog* log) {
  if (cfg.epochs < 1)
    throw ConfigError("train_structured: epochs must be >= 1");
  if (train.documents.empty())
    throw ConfigError("train_structured: empty training set");

  // Line 1: close each gold graph once; gold never changes afterwards.
  struct DocState {
    const Document* doc;
    CandidatePairSet candidates;
    std::vector<Relation> gold_labels;  // per document pair, from closed gold
  };
  std::vector<DocState> states;
  for (const Document& doc : train.documents) {
    DocState st;
    st.doc = &doc;
    st.candidates = prefilter(doc, inf);
    TemporalGraph closed_gold;
    try {
      closed_gold = closure(doc.gold_graph());
    } catch (const InconsistentGraphError& e) {
      throw InconsistentGraphError("document '" + doc.doc_id + "': " + e.what());
    }
    st.gold_labels = labels_from_graph(doc, closed_gold);
    states.push_back(std::move(st));
  }

  Model m = Model::zeros(train.feature_dimension, cfg.vague_exclusion);
  AveragedWeights acc(m.active_labels.size(), m.dimension);
  Rng rng(cfg.shuffle_seed);

  std::vector<std::size_t> order(states.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  InferenceConfig train_inf = inf;
  train_inf.vague_exclusion = cfg.vague_exclusion;

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(order);
    long long updates = 0;
    double objective = 0.0;
    for (std::size_t di : order) {
      const DocState& st = states[di];
      const Document& doc = *st.doc;

      finalize(m, acc, false);  // current (non-averaged) iterate drives inference
      ScoreTable scores = score_pairs(m, doc, st.candidates);
      Assignment a;
      try {
        a = solve_map(scores, st.candidates, train_inf);
      } catch (const NodeLimitError& e) {
        throw NodeLimitError(
            "document '" + doc.doc_id + "': " + e.what(), e.node_limit);
      }
      for (std::size_t i = 0; i < st.candidates.size(); ++i)
        objective += scores.probs[i][ordinal(a.labels[i])];

      TemporalGraph predicted = close_prediction(
          a.to_graph(doc.n_events(), st.candidates));
      std::vector<Relation> pred_labels = labels_from_graph(doc, predicted);

      // Line 9 update over disagreeing pairs; gold-vague pairs contribute to
      // neither sum under vague exclusion.
      bool differs = false;
      for (std::size_t i = 0; i < doc.pairs.size(); ++i) {
        Relation gold = st.gold_labels[i];
        if (cfg.vague_exclusion && gold == Relation::Vague) continue;
        if (pred_labels[i] != gold) {
          differs = true;
          break;
        }
      }
      if (differs) {
        ++updates;
        for (std::size_t i = 0; i < doc.pairs.size(); ++i) {
          Relation gold = st.gold_labels[i];
          if (cfg.vague_exclusion && gold == Relation::Vague) continue;
          Relation pred = pred_labels[i];
          if (gold == pred) continue;  // contributions cancel
          int gs = label_slot(m, gold);
          int ps = label_slot(m, pred);
          if (gs >= 0) acc.update(gs, doc.pairs[i].features, cfg.learning_rate);
          if (ps >= 0) acc.update(ps, doc.pairs[i].features, -cfg.learning_rate);
        }
      }
      acc.tick();
    }
    if (log) log->entries.push_back({epoch, updates, objective});
    if (updates == 0) break;
  }

  finalize(m, acc, cfg.average);
  return m;
}

Model train_codl(const Corpus& labeled, const Corpus& unlabeled,
                 const TrainConfig& cfg, const InferenceConfig& inf,
                 TrainLog* log) {
  if (labeled.documents.empty())
    throw ConfigError("train_codl: labeled set must be non-empty");
  if (cfg.codl_gamma < 0.0 || cfg.codl_gamma > 1.0)
    throw ConfigError("train_codl: gamma must lie in [0,1]");

  // Line 2: initialize from the labeled documents.
  Model m = train_local_ap(labeled, cfg);

  if (unlabeled.documents.empty()) {
    std::cerr << "train_codl: empty unlabeled set, returning Learn(L)\n";
    return m;
  }

  InferenceConfig train_inf = inf;
  train_inf.vague_exclusion = cfg.vague_exclusion;

  std::vector<std::vector<Relation>> previous;
  for (int iter = 0; iter < cfg.codl_iterations; ++iter) {
    // Pseudo-label every unlabeled document with the current weights.
    std::vector<std::vector<Relation>> pseudo =
        pseudo_label_corpus(m, unlabeled, train_inf, ExecMode::Parallel);

    long long changed = 0;
    if (previous.empty()) {
      for (const auto& labels : pseudo) changed += (long long)labels.size();
    } else {
      for (std::size_t d = 0; d < pseudo.size(); ++d)
        for (std::size_t i = 0; i < pseudo[d].size(); ++i)
          changed += pseudo[d][i] != previous[d][i];
    }
    if (log) log->entries.push_back({iter, changed, 0.0});
    if (!previous.empty() && changed == 0) break;
    previous = pseudo;

    Corpus pseudo_corpus = unlabeled;
    for (std::size_t d = 0; d < pseudo.size(); ++d)
      for (std::size_t i = 0; i < pseudo[d].size(); ++i)
        pseudo_corpus.documents[d].pairs[i].gold = pseudo[d][i];

    Model learned = train_local_ap(pseudo_corpus, cfg);

    // Line 8: convex combination per relation.
    const double g = cfg.codl_gamma;
    for (std::size_t l = 0; l < m.weights.size(); ++l)
      for (std::size_t k = 0; k < m.weights[l].size(); ++k)
        m.weights[l][k] = g * m.weights[l][k] + (1.0 - g) * learned.weights[l][k];
  }
  return m;
}

}  // namespace temprel
