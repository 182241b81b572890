#ifndef TEMPREL_CORPUS_HPP
#define TEMPREL_CORPUS_HPP

#include "temprel/features.hpp"
#include "temprel/graph.hpp"
#include "temprel/relations.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace temprel {

struct EventNode {
  int id = 0;
  int sentence = 0;
};

// One candidate event pair: canonical orientation e1 < e2, sparse features,
// optional gold label. A missing gold means unannotated; an explicit vague
// behaves the same way everywhere downstream.
struct PairExample {
  int e1 = 0;
  int e2 = 0;
  FeatureVector features;
  std::optional<Relation> gold;
};

struct Document {
  std::string doc_id;
  std::vector<EventNode> events;
  std::vector<PairExample> pairs;

  int n_events() const { return static_cast<int>(events.size()); }

  // Graph over the non-vague gold labels.
  TemporalGraph gold_graph() const;

  int sentence_distance(int e1, int e2) const;
};

struct Corpus {
  std::uint32_t feature_dimension = 0;
  std::vector<std::string> label_set;  // the six canonical names, in order
  std::vector<Document> documents;
};

// Canonical label list, ordinal order.
std::vector<std::string> canonical_label_set();

// Strict schema validation; throws SchemaError naming the offending
// document/field. Gold consistency is not checked here — callers that need
// it use inconsistent_documents() or hit the error at closure time.
Corpus load_corpus(const std::filesystem::path& path);
void save_corpus(const Corpus& c, const std::filesystem::path& path);

// doc_ids whose gold graphs fail closure.
std::vector<std::string> inconsistent_documents(const Corpus& c);

// Drops the later-ordered edge of every conflicting pair until the gold
// graph closes cleanly; returns the number of edges dropped. Backing for
// the --on-conflict=drop repair path.
int repair_document_gold(Document& doc);

}  // namespace temprel

#endif  // TEMPREL_CORPUS_HPP
