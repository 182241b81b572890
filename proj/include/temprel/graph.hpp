#ifndef TEMPREL_GRAPH_HPP
#define TEMPREL_GRAPH_HPP

#include "temprel/algebra.hpp"
#include "temprel/errors.hpp"
#include "temprel/relations.hpp"

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace temprel {

// One labeled edge in source->target orientation.
struct TLink {
  int source = 0;
  int target = 0;
  Relation relation = Relation::Vague;
};

// Event temporal graph over events 0..n-1. Edges are stored once, in
// canonical orientation source < target; the reverse edge is implied by
// symmetry. Vague means no edge: adding a vague link is a no-op and absent
// pairs read back as vague.
class TemporalGraph {
public:
  using EdgeMap = std::map<std::pair<int, int>, Relation>;

  TemporalGraph() = default;
  explicit TemporalGraph(int n_events) : n_(n_events) {}

  int n_events() const { return n_; }

  // Canonicalizes and inserts. A duplicate pair with a conflicting label
  // throws InconsistentGraphError; re-adding the same label is a no-op.
  void add_edge(int a, int b, Relation r);

  // Oriented lookup: relation of a with respect to b. Vague when absent.
  Relation relation(int a, int b) const;
  bool has_edge(int a, int b) const;

  const EdgeMap& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool operator==(const TemporalGraph&) const = default;

private:
  int n_ = 0;
  EdgeMap edges_;
};

// Saturates the graph under symmetry and singleton transitivity
// compositions. Throws InconsistentGraphError, naming the offending triple,
// when a derived label conflicts with an existing one.
TemporalGraph closure(const TemporalGraph& g);

// Like closure but never throws: a conflicting derivation is skipped and the
// existing label kept. Intended for predicted graphs only; gold graphs go
// through the strict variant.
TemporalGraph closure_lenient(const TemporalGraph& g);

// Deterministic irredundant subset of closure(g): edges are visited in
// ascending canonical pair order and removed while still derivable from the
// remainder. closure(reduce(g)) == closure(g).
TemporalGraph reduce(const TemporalGraph& g);

bool is_consistent(const TemporalGraph& g);

// Builds from a raw edge list first, so duplicate pairs with conflicting
// labels also count as inconsistent.
bool is_consistent(int n_events, std::span<const TLink> links);

struct AnnotationCensus {
  long long annotated = 0;
  long long inferred = 0;
  long long unknown = 0;
  long long total = 0;

  AnnotationCensus& operator+=(const AnnotationCensus& o) {
    annotated += o.annotated;
    inferred += o.inferred;
    unknown += o.unknown;
    total += o.total;
    return *this;
  }
};

// Table-1-style breakdown: of the n(n-1)/2 event pairs, how many carry an
// annotated label, how many more closure infers, and how many stay unknown.
AnnotationCensus annotation_census(const TemporalGraph& gold);

}  // namespace temprel

#endif  // TEMPREL_GRAPH_HPP
