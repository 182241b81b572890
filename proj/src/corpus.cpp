#include "temprel/corpus.hpp"

#include "temprel/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>

namespace temprel {

using nlohmann::json;

TemporalGraph Document::gold_graph() const {
  TemporalGraph g(n_events());
  for (const PairExample& p : pairs)
    if (p.gold && *p.gold != Relation::Vague) g.add_edge(p.e1, p.e2, *p.gold);
  return g;
}

int Document::sentence_distance(int e1, int e2) const {
  return std::abs(events.at(e1).sentence - events.at(e2).sentence);
}

std::vector<std::string> canonical_label_set() {
  std::vector<std::string> names;
  for (Relation r : kAllRelations) names.emplace_back(to_string(r));
  return names;
}

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

Document parse_document(const json& jd, std::uint32_t dim) {
  Document doc;
  if (!jd.contains("doc_id") || !jd["doc_id"].is_string())
    schema_fail("document", "missing string field 'doc_id'");
  doc.doc_id = jd["doc_id"].get<std::string>();
  const std::string where = "document '" + doc.doc_id + "'";

  if (!jd.contains("events") || !jd["events"].is_array())
    schema_fail(where, "missing array field 'events'");
  int expected_id = 0;
  int last_sentence = 0;
  for (const json& je : jd["events"]) {
    EventNode ev;
    if (!je.contains("id") || !je.contains("sentence"))
      schema_fail(where, "event missing 'id' or 'sentence'");
    ev.id = je["id"].get<int>();
    ev.sentence = je["sentence"].get<int>();
    if (ev.id != expected_id)
      schema_fail(where, "event ids must be dense 0..n-1 in order");
    if (ev.sentence < 0) schema_fail(where, "negative sentence index");
    if (expected_id > 0 && ev.sentence < last_sentence)
      schema_fail(where, "sentence indices must be non-decreasing in id order");
    last_sentence = ev.sentence;
    ++expected_id;
    doc.events.push_back(ev);
  }

  if (!jd.contains("pairs") || !jd["pairs"].is_array())
    schema_fail(where, "missing array field 'pairs'");
  std::set<std::pair<int, int>> seen;
  for (const json& jp : jd["pairs"]) {
    PairExample p;
    if (!jp.contains("e1") || !jp.contains("e2") || !jp.contains("features") ||
        !jp.contains("gold"))
      schema_fail(where, "pair missing one of 'e1','e2','features','gold'");
    p.e1 = jp["e1"].get<int>();
    p.e2 = jp["e2"].get<int>();
    if (p.e1 < 0 || p.e2 < 0 || p.e1 >= doc.n_events() || p.e2 >= doc.n_events())
      schema_fail(where, "pair references unknown event");
    if (p.e1 >= p.e2)
      schema_fail(where, "pairs must be canonical (e1 < e2)");
    if (!seen.insert({p.e1, p.e2}).second)
      schema_fail(where, "duplicate pair");

    std::vector<FeatureVector::Entry> entries;
    for (const json& jf : jp["features"]) {
      if (!jf.is_array() || jf.size() != 2)
        schema_fail(where, "feature entries must be [index, value] arrays");
      auto idx = jf[0].get<long long>();
      double val = jf[1].get<double>();
      if (idx < 0 || (std::uint64_t)idx >= dim)
        schema_fail(where, "feature index " + std::to_string(idx) +
                               " out of range (dimension " +
                               std::to_string(dim) + ")");
      entries.emplace_back((std::uint32_t)idx, val);
    }
    p.features = FeatureVector(std::move(entries));

    const json& jg = jp["gold"];
    if (jg.is_null()) {
      p.gold = std::nullopt;
    } else if (jg.is_string()) {
      auto r = relation_from_string(jg.get<std::string>());
      if (!r) schema_fail(where, "unknown gold label '" + jg.get<std::string>() + "'");
      p.gold = r;
    } else {
      schema_fail(where, "'gold' must be a string or null");
    }
    doc.pairs.push_back(std::move(p));
  }
  return doc;
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open corpus file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw SchemaError("corpus file " + path.string() + ": " + e.what());
  }

  Corpus c;
  if (!j.contains("version") || j["version"].get<int>() != 1)
    schema_fail(path.string(), "missing or unsupported 'version' (want 1)");
  if (!j.contains("feature_dimension") ||
      !j["feature_dimension"].is_number_unsigned())
    schema_fail(path.string(), "missing non-negative 'feature_dimension'");
  c.feature_dimension = j["feature_dimension"].get<std::uint32_t>();

  if (!j.contains("label_set") || !j["label_set"].is_array())
    schema_fail(path.string(), "missing array 'label_set'");
  for (const json& name : j["label_set"])
    c.label_set.push_back(name.get<std::string>());
  if (c.label_set != canonical_label_set())
    schema_fail(path.string(), "label_set must be the six canonical names in order");

  if (!j.contains("documents") || !j["documents"].is_array())
    schema_fail(path.string(), "missing array 'documents'");
  for (const json& jd : j["documents"])
    c.documents.push_back(parse_document(jd, c.feature_dimension));
  return c;
}

void save_corpus(const Corpus& c, const std::filesystem::path& path) {
  json j;
  j["version"] = 1;
  j["feature_dimension"] = c.feature_dimension;
  j["label_set"] = c.label_set;
  json docs = json::array();
  for (const Document& d : c.documents) {
    json jd;
    jd["doc_id"] = d.doc_id;
    json events = json::array();
    for (const EventNode& e : d.events)
      events.push_back({{"id", e.id}, {"sentence", e.sentence}});
    jd["events"] = events;
    json pairs = json::array();
    for (const PairExample& p : d.pairs) {
      json jp;
      jp["e1"] = p.e1;
      jp["e2"] = p.e2;
      json feats = json::array();
      for (const auto& [idx, val] : p.features.entries())
        feats.push_back(json::array({idx, val}));
      jp["features"] = feats;
      if (p.gold)
        jp["gold"] = std::string(to_string(*p.gold));
      else
        jp["gold"] = nullptr;
      pairs.push_back(jp);
    }
    jd["pairs"] = pairs;
    docs.push_back(jd);
  }
  j["documents"] = docs;

  std::ofstream out(path);
  if (!out) throw SchemaError("cannot open corpus file for writing: " + path.string());
  out << j.dump(2) << "\n";
}

std::vector<std::string> inconsistent_documents(const Corpus& c) {
  std::vector<std::string> bad;
  for (const Document& d : c.documents)
    if (!is_consistent(d.gold_graph())) bad.push_back(d.doc_id);
  return bad;
}

int repair_document_gold(Document& doc) {
  int dropped = 0;
  // Re-insert gold edges in pair order; an edge whose addition breaks
  // closure is the later-ordered conflicting one and gets dropped.
  TemporalGraph g(doc.n_events());
  for (PairExample& p : doc.pairs) {
    if (!p.gold || *p.gold == Relation::Vague) continue;
    TemporalGraph trial = g;
    bool ok = true;
    try {
      trial.add_edge(p.e1, p.e2, *p.gold);
      closure(trial);
    } catch (const InconsistentGraphError&) {
      ok = false;
    }
    if (ok) {
      g = std::move(trial);
    } else {
      p.gold = std::nullopt;
      ++dropped;
    }
  }
  return dropped;
}

}  // namespace temprel
