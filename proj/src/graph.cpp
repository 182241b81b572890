#include "temprel/graph.hpp"

#include <sstream>
#include <string>

namespace temprel {

namespace {

std::string pair_name(int a, int b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

// Dense oriented relation matrix used by the closure sweeps.
class RelationMatrix {
public:
  explicit RelationMatrix(const TemporalGraph& g)
      : n_(g.n_events()), m_(size_t(n_) * n_, Relation::Vague) {
    for (const auto& [pair, rel] : g.edges()) {
      at(pair.first, pair.second) = rel;
      at(pair.second, pair.first) = reverse(rel);
    }
  }

  Relation& at(int i, int j) { return m_[size_t(i) * n_ + j]; }
  Relation at(int i, int j) const { return m_[size_t(i) * n_ + j]; }
  int n() const { return n_; }

  TemporalGraph to_graph() const {
    TemporalGraph g(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (at(i, j) != Relation::Vague) g.add_edge(i, j, at(i, j));
    return g;
  }

private:
  int n_;
  std::vector<Relation> m_;
};

TemporalGraph closure_impl(const TemporalGraph& g, bool strict) {
  RelationMatrix m(g);
  const int n = m.n();
  const auto& table = CompositionTable::instance();

  // Fixpoint over ordered walks i -> j -> k. Only singleton compositions
  // produce edges; larger sets constrain inference but not closure.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j == i || m.at(i, j) == Relation::Vague) continue;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j || m.at(j, k) == Relation::Vague) continue;
          RelationSet s = table.compose(m.at(i, j), m.at(j, k));
          if (!s.is_singleton()) continue;
          Relation derived = s.only();
          Relation existing = m.at(i, k);
          if (existing == Relation::Vague) {
            m.at(i, k) = derived;
            m.at(k, i) = reverse(derived);
            changed = true;
          } else if (existing != derived) {
            if (strict) {
              std::ostringstream os;
              os << "inconsistent graph: " << pair_name(i, j) << "="
                 << to_string(m.at(i, j)) << " and " << pair_name(j, k) << "="
                 << to_string(m.at(j, k)) << " derive " << pair_name(i, k)
                 << "=" << to_string(derived) << ", conflicting with existing "
                 << to_string(existing);
              throw InconsistentGraphError(os.str());
            }
            // Lenient mode: first writer wins, skip the conflicting add.
          }
        }
      }
    }
  }
  return m.to_graph();
}

}  // namespace

void TemporalGraph::add_edge(int a, int b, Relation r) {
  if (a == b)
    throw InconsistentGraphError("self-loop on event " + std::to_string(a));
  if (a < 0 || b < 0 || a >= n_ || b >= n_)
    throw InconsistentGraphError("event id out of range in edge " +
                                 pair_name(a, b));
  if (r == Relation::Vague) return;
  if (a > b) {
    std::swap(a, b);
    r = reverse(r);
  }
  auto [it, inserted] = edges_.try_emplace({a, b}, r);
  if (!inserted && it->second != r) {
    std::ostringstream os;
    os << "conflicting labels on pair " << pair_name(a, b) << ": "
       << to_string(it->second) << " vs " << to_string(r);
    throw InconsistentGraphError(os.str());
  }
}

Relation TemporalGraph::relation(int a, int b) const {
  bool flipped = a > b;
  if (flipped) std::swap(a, b);
  auto it = edges_.find({a, b});
  if (it == edges_.end()) return Relation::Vague;
  return flipped ? reverse(it->second) : it->second;
}

bool TemporalGraph::has_edge(int a, int b) const {
  return relation(a, b) != Relation::Vague;
}

TemporalGraph closure(const TemporalGraph& g) { return closure_impl(g, true); }

TemporalGraph closure_lenient(const TemporalGraph& g) {
  return closure_impl(g, false);
}

TemporalGraph reduce(const TemporalGraph& g) {
  TemporalGraph closed = closure(g);
  const int target = closed.edge_count();

  TemporalGraph kept = closed;
  // Ascending canonical pair order over the closed edge set; drop any edge
  // the remainder still derives.
  for (const auto& [pair, rel] : closed.edges()) {
    TemporalGraph trial(closed.n_events());
    for (const auto& [p2, r2] : kept.edges())
      if (p2 != pair) trial.add_edge(p2.first, p2.second, r2);
    if (closure(trial).edge_count() == target) kept = trial;
  }
  return kept;
}

bool is_consistent(const TemporalGraph& g) {
  try {
    closure(g);
    return true;
  } catch (const InconsistentGraphError&) {
    return false;
  }
}

bool is_consistent(int n_events, std::span<const TLink> links) {
  try {
    TemporalGraph g(n_events);
    for (const TLink& l : links) g.add_edge(l.source, l.target, l.relation);
    closure(g);
    return true;
  } catch (const InconsistentGraphError&) {
    return false;
  }
}

AnnotationCensus annotation_census(const TemporalGraph& gold) {
  AnnotationCensus c;
  const long long n = gold.n_events();
  c.total = n * (n - 1) / 2;
  c.annotated = gold.edge_count();
  c.inferred = closure(gold).edge_count() - c.annotated;
  c.unknown = c.total - c.annotated - c.inferred;
  return c;
}

}  // namespace temprel
