#include "temprel/inference.hpp"

#include "temprel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace temprel {

TemporalGraph Assignment::to_graph(int n_events,
                                   const CandidatePairSet& pairs) const {
  TemporalGraph g(n_events);
  for (std::size_t i = 0; i < pairs.pairs.size(); ++i)
    if (labels[i] != Relation::Vague)
      g.add_edge(pairs.pairs[i].first, pairs.pairs[i].second, labels[i]);
  return g;
}

CandidatePairSet prefilter(const Document& doc, const InferenceConfig& cfg) {
  CandidatePairSet out;
  for (std::size_t i = 0; i < doc.pairs.size(); ++i) {
    const PairExample& p = doc.pairs[i];
    if (doc.sentence_distance(p.e1, p.e2) <= cfg.max_sentence_dist) {
      out.pairs.emplace_back(p.e1, p.e2);
      out.pair_index.push_back((int)i);
    }
  }
  // Document pairs are stored canonically sorted; keep that order explicit.
  std::vector<std::size_t> order(out.pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.pairs[a] < out.pairs[b];
  });
  CandidatePairSet sorted;
  for (std::size_t i : order) {
    sorted.pairs.push_back(out.pairs[i]);
    sorted.pair_index.push_back(out.pair_index[i]);
  }
  return sorted;
}

ScoreTable score_pairs(const Model& m, const Document& doc,
                       const CandidatePairSet& pairs) {
  ScoreTable t;
  t.probs.reserve(pairs.size());
  for (int idx : pairs.pair_index)
    t.probs.push_back(softmax_scores(m, doc.pairs[idx].features));
  return t;
}

namespace {

// Triangle of candidate pairs over events a < b < c, indexed into the pair
// set: ab, bc, ac.
struct Triangle {
  int ab, bc, ac;
};

RelationSet active_set(const InferenceConfig& cfg) {
  return cfg.vague_exclusion ? RelationSet::non_vague() : RelationSet::all();
}

// Union of compose(r1, r2) over r1 in s1, r2 in s2.
RelationSet compose_sets(RelationSet s1, RelationSet s2) {
  const auto& table = CompositionTable::instance();
  RelationSet out;
  for (Relation r1 : s1)
    for (Relation r2 : s2) out |= table.compose(r1, r2);
  return out;
}

std::vector<Triangle> build_triangles(const CandidatePairSet& pairs) {
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < pairs.pairs.size(); ++i)
    index[pairs.pairs[i]] = (int)i;

  std::vector<Triangle> tris;
  for (std::size_t i = 0; i < pairs.pairs.size(); ++i) {
    auto [a, b] = pairs.pairs[i];
    for (std::size_t j = i + 1; j < pairs.pairs.size(); ++j) {
      auto [a2, c] = pairs.pairs[j];
      if (a2 != a) break;  // pair list is sorted by (first, second)
      auto it = index.find({b, c});
      if (it != index.end()) tris.push_back({(int)i, it->second, (int)j});
    }
  }
  return tris;
}

class MapSolver {
public:
  MapSolver(const ScoreTable& scores, const CandidatePairSet& pairs,
            const InferenceConfig& cfg)
      : scores_(scores),
        pairs_(pairs),
        cfg_(cfg),
        n_((int)pairs.size()),
        domain_(active_set(cfg)),
        feasible_(pairs.size(), active_set(cfg)),
        triangles_(build_triangles(pairs)),
        tri_of_var_(pairs.size()) {
    for (std::size_t t = 0; t < triangles_.size(); ++t) {
      tri_of_var_[triangles_[t].ab].push_back((int)t);
      tri_of_var_[triangles_[t].bc].push_back((int)t);
      tri_of_var_[triangles_[t].ac].push_back((int)t);
    }
    order_ = margin_order();
  }

  Assignment solve() {
    if (n_ == 0) return Assignment{};
    best_value_ = -std::numeric_limits<double>::infinity();

    // Root propagation; an empty set here would mean an unsatisfiable
    // instance, which the label algebra rules out.
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    if (!propagate(all))
      throw InfeasibleInstanceError(
          "solve_map: root propagation emptied a pair's feasible set");

    std::vector<Relation> assigned(n_, Relation::Vague);
    dfs(0, 0.0, assigned);

    if (best_value_ == -std::numeric_limits<double>::infinity())
      throw InfeasibleInstanceError("solve_map: no feasible assignment found");

    Assignment out;
    out.labels = best_labels_;
    if (!check_assignment(pairs_, out.labels))
      throw InfeasibleInstanceError(
          "solve_map: returned assignment failed the constraint checker");
    return out;
  }

private:
  double prob(int var, Relation r) const {
    return scores_.probs[var][ordinal(r)];
  }

  // Static branching order: widest score margin first.
  std::vector<int> margin_order() const {
    std::vector<double> margin(n_);
    for (int v = 0; v < n_; ++v) {
      double best = -1, second = -1;
      for (Relation r : domain_) {
        double p = prob(v, r);
        if (p > best) {
          second = best;
          best = p;
        } else if (p > second) {
          second = p;
        }
      }
      margin[v] = best - second;
    }
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return margin[a] > margin[b]; });
    return order;
  }

  // Labels of one variable in descending score, ties to the lower ordinal.
  std::vector<Relation> label_order(int var, RelationSet feasible) const {
    std::vector<Relation> ls;
    for (Relation r : feasible) ls.push_back(r);
    std::stable_sort(ls.begin(), ls.end(), [&](Relation a, Relation b) {
      return prob(var, a) > prob(var, b);
    });
    return ls;
  }

  // Arc consistency over triangles touching the seed variables. Returns
  // false when some feasible set empties.
  bool propagate(std::vector<int> dirty) {
    while (!dirty.empty()) {
      int var = dirty.back();
      dirty.pop_back();
      for (int ti : tri_of_var_[var]) {
        const Triangle& t = triangles_[ti];
        // Each pair of sides constrains the third; all three directions.
        struct Rule {
          int target;
          RelationSet allowed;
        };
        RelationSet ab = feasible_[t.ab];
        RelationSet bc = feasible_[t.bc];
        RelationSet ac = feasible_[t.ac];
        const Rule rules[3] = {
            {t.ac, compose_sets(ab, bc)},
            // A->C then C->B gives A->B.
            {t.ab, compose_sets(ac, bc.reversed())},
            // B->A then A->C gives B->C.
            {t.bc, compose_sets(ab.reversed(), ac)},
        };
        for (const Rule& rule : rules) {
          RelationSet next = feasible_[rule.target] & rule.allowed;
          if (next == feasible_[rule.target]) continue;
          if (next.empty()) return false;
          feasible_[rule.target] = next;
          dirty.push_back(rule.target);
        }
      }
    }
    return true;
  }

  // Optimistic completion value: per-pair max over the feasible labels.
  double bound(const std::vector<Relation>& assigned, int depth) const {
    double b = 0.0;
    for (int d = depth; d < n_; ++d) {
      int var = order_[d];
      double best = 0.0;
      for (Relation r : feasible_[var]) best = std::max(best, prob(var, r));
      b += best;
    }
    (void)assigned;
    return b;
  }

  void dfs(int depth, double value, std::vector<Relation>& assigned) {
    if (depth == n_) {
      if (value > best_value_) {
        best_value_ = value;
        best_labels_ = assigned;
      }
      return;
    }
    const int var = order_[depth];
    for (Relation r : label_order(var, feasible_[var])) {
      if (++nodes_ > cfg_.solver_node_limit)
        throw NodeLimitError("solve_map: node limit exceeded",
                             cfg_.solver_node_limit);
      auto saved = feasible_;
      feasible_[var] = RelationSet::single(r);
      assigned[var] = r;
      if (propagate({var})) {
        double optimistic = value + prob(var, r) + bound(assigned, depth + 1);
        if (optimistic > best_value_)
          dfs(depth + 1, value + prob(var, r), assigned);
      }
      assigned[var] = Relation::Vague;
      feasible_ = std::move(saved);
    }
  }

  const ScoreTable& scores_;
  const CandidatePairSet& pairs_;
  const InferenceConfig& cfg_;
  int n_;
  RelationSet domain_;
  std::vector<RelationSet> feasible_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<int>> tri_of_var_;
  std::vector<int> order_;

  long long nodes_ = 0;
  double best_value_ = 0.0;
  std::vector<Relation> best_labels_;
};

}  // namespace

Assignment solve_map(const ScoreTable& scores, const CandidatePairSet& pairs,
                     const InferenceConfig& cfg) {
  if (scores.probs.size() != pairs.size())
    throw ConfigError("solve_map: scores do not cover the candidate set");
  MapSolver solver(scores, pairs, cfg);
  return solver.solve();
}

bool check_assignment(const CandidatePairSet& pairs,
                      const std::vector<Relation>& labels) {
  if (labels.size() != pairs.size()) return false;
  const auto& table = CompositionTable::instance();
  auto tris = build_triangles(pairs);
  for (const Triangle& t : tris) {
    Relation ab = labels[t.ab];
    Relation bc = labels[t.bc];
    Relation ac = labels[t.ac];
    // Walk a->b->c and the five other orientations; the converse duality
    // makes three of them redundant but checking all six is cheap.
    if (!table.compose(ab, bc).contains(ac)) return false;
    if (!table.compose(reverse(ab), ac).contains(bc)) return false;
    if (!table.compose(ac, reverse(bc)).contains(ab)) return false;
    if (!table.compose(bc, reverse(ac)).contains(reverse(ab))) return false;
    if (!table.compose(reverse(ac), ab).contains(reverse(bc))) return false;
    if (!table.compose(reverse(bc), reverse(ab)).contains(reverse(ac)))
      return false;
  }
  return true;
}

double relative_entropy_delta(const std::vector<double>& candidate_probs) {
  double total = 0.0;
  for (double p : candidate_probs) total += p;
  if (total <= 0.0) return 0.0;
  const double m = (double)candidate_probs.size();
  double delta = 0.0;
  for (double p : candidate_probs) {
    double q = p / total;
    if (q > 0.0) delta += q * std::log(m * q);
  }
  return delta;
}

namespace {

// Transitivity-feasible labels for one pair given everyone else's labels.
RelationSet feasible_given_others(const CandidatePairSet& pairs,
                                  const std::vector<Relation>& labels,
                                  std::size_t target, RelationSet domain) {
  auto tris = build_triangles(pairs);
  RelationSet allowed = domain;
  for (const auto& t : tris) {
    if ((std::size_t)t.ac == target)
      allowed &= compose_sets(RelationSet::single(labels[t.ab]),
                              RelationSet::single(labels[t.bc]));
    else if ((std::size_t)t.ab == target)
      allowed &= compose_sets(RelationSet::single(labels[t.ac]),
                              RelationSet::single(labels[t.bc]).reversed());
    else if ((std::size_t)t.bc == target)
      allowed &= compose_sets(RelationSet::single(labels[t.ab]).reversed(),
                              RelationSet::single(labels[t.ac]));
  }
  return allowed;
}

}  // namespace

Assignment post_filter(const ScoreTable& scores, const CandidatePairSet& pairs,
                       const Assignment& a, const InferenceConfig& cfg) {
  Assignment out = a;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (out.labels[i] == Relation::Vague) continue;

    RelationSet candidates = RelationSet::non_vague();
    if (cfg.feasible_subset_m)
      candidates = feasible_given_others(pairs, a.labels, i,
                                         RelationSet::non_vague());
    if (cfg.post_filter_m > 0) {
      // Keep the top-M candidate labels by score.
      std::vector<Relation> ls;
      for (Relation r : candidates) ls.push_back(r);
      std::stable_sort(ls.begin(), ls.end(), [&](Relation x, Relation y) {
        return scores.probs[i][ordinal(x)] > scores.probs[i][ordinal(y)];
      });
      RelationSet top;
      for (std::size_t k = 0; k < ls.size() && (int)k < cfg.post_filter_m; ++k)
        top.insert(ls[k]);
      candidates = top;
    }

    std::vector<double> probs;
    for (Relation r : candidates) probs.push_back(scores.probs[i][ordinal(r)]);
    double delta = relative_entropy_delta(probs);
    if (!(delta > cfg.post_filter_tau)) out.labels[i] = Relation::Vague;
  }
  return out;
}

}  // namespace temprel
