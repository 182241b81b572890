#include "temprel/batch.hpp"

#include "temprel/errors.hpp"

#include <algorithm>
#include <exception>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace temprel {

namespace {

// Runs fn(i) for i in [0, n); parallel mode farms iterations out to OpenMP
// threads. Exceptions are captured and the first one (lowest index) rethrown
// so both modes fail identically.
template <typename Fn>
void for_each_index(std::size_t n, ExecMode mode, Fn&& fn) {
  if (mode == ExecMode::Serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < (long long)n; ++i) {
    try {
      fn((std::size_t)i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
}

std::vector<Relation> doc_labels_from_assignment(const Document& doc,
                                                 const CandidatePairSet& cps,
                                                 const Assignment& a) {
  std::vector<Relation> labels(doc.pairs.size(), Relation::Vague);
  for (std::size_t i = 0; i < cps.size(); ++i)
    labels[cps.pair_index[i]] = a.labels[i];
  return labels;
}

}  // namespace

TemporalGraph close_prediction(const TemporalGraph& g) {
  try {
    return closure(g);
  } catch (const InconsistentGraphError&) {
    return closure_lenient(g);
  }
}

std::vector<DocPrediction> predict_corpus(const Model& m, const Corpus& corpus,
                                          const InferenceConfig& inf,
                                          bool apply_post_filter,
                                          ExecMode mode) {
  std::vector<DocPrediction> out(corpus.documents.size());
  for_each_index(corpus.documents.size(), mode, [&](std::size_t d) {
    const Document& doc = corpus.documents[d];
    CandidatePairSet cps = prefilter(doc, inf);
    ScoreTable scores = score_pairs(m, doc, cps);
    Assignment a;
    try {
      a = solve_map(scores, cps, inf);
    } catch (const NodeLimitError& e) {
      throw NodeLimitError("document '" + doc.doc_id + "': " + e.what(),
                           e.node_limit);
    }
    if (apply_post_filter) a = post_filter(scores, cps, a, inf);
    out[d].labels = doc_labels_from_assignment(doc, cps, a);
  });
  return out;
}

std::vector<DocPrediction> predict_corpus_local(const Model& m,
                                                const Corpus& corpus,
                                                const InferenceConfig& inf,
                                                bool apply_post_filter,
                                                ExecMode mode) {
  std::vector<DocPrediction> out(corpus.documents.size());
  for_each_index(corpus.documents.size(), mode, [&](std::size_t d) {
    const Document& doc = corpus.documents[d];
    CandidatePairSet cps = prefilter(doc, inf);
    ScoreTable scores = score_pairs(m, doc, cps);
    Assignment a;
    a.labels.resize(cps.size(), Relation::Vague);
    for (std::size_t i = 0; i < cps.size(); ++i) {
      Relation best = Relation::Vague;
      double best_p = -1.0;
      for (Relation r : kAllRelations) {
        if (!m.has_label(r)) continue;
        double p = scores.probs[i][ordinal(r)];
        if (p > best_p) {
          best_p = p;
          best = r;
        }
      }
      a.labels[i] = best;
    }
    if (apply_post_filter) a = post_filter(scores, cps, a, inf);
    out[d].labels = doc_labels_from_assignment(doc, cps, a);
  });
  return out;
}

std::vector<std::vector<Relation>> pseudo_label_corpus(
    const Model& m, const Corpus& corpus, const InferenceConfig& inf,
    ExecMode mode) {
  std::vector<std::vector<Relation>> out(corpus.documents.size());
  for_each_index(corpus.documents.size(), mode, [&](std::size_t d) {
    const Document& doc = corpus.documents[d];
    CandidatePairSet cps = prefilter(doc, inf);
    ScoreTable scores = score_pairs(m, doc, cps);
    Assignment a;
    try {
      a = solve_map(scores, cps, inf);
    } catch (const NodeLimitError& e) {
      throw NodeLimitError("document '" + doc.doc_id + "': " + e.what(),
                           e.node_limit);
    }
    TemporalGraph closed = close_prediction(a.to_graph(doc.n_events(), cps));
    std::vector<Relation> labels(doc.pairs.size(), Relation::Vague);
    for (std::size_t i = 0; i < doc.pairs.size(); ++i)
      labels[i] = closed.relation(doc.pairs[i].e1, doc.pairs[i].e2);
    out[d] = std::move(labels);
  });
  return out;
}

Corpus apply_predictions(const Corpus& corpus,
                         const std::vector<DocPrediction>& preds) {
  if (preds.size() != corpus.documents.size())
    throw ConfigError("apply_predictions: prediction/document count mismatch");
  Corpus out = corpus;
  for (std::size_t d = 0; d < preds.size(); ++d) {
    Document& doc = out.documents[d];
    if (preds[d].labels.size() != doc.pairs.size())
      throw ConfigError("apply_predictions: label/pair count mismatch in '" +
                        doc.doc_id + "'");
    for (std::size_t i = 0; i < doc.pairs.size(); ++i)
      doc.pairs[i].gold = preds[d].labels[i];
  }
  return out;
}

namespace {

CorpusEval evaluate_graph_pairs(
    const std::vector<const Document*>& sys_docs,
    const std::vector<const Document*>& gold_docs,
    const std::vector<const DocPrediction*>& preds, ExecMode mode) {
  const std::size_t n = gold_docs.size();
  std::vector<AwarenessCounts> counts(n);
  for_each_index(n, mode, [&](std::size_t d) {
    TemporalGraph sys_graph(gold_docs[d]->n_events());
    if (preds.empty()) {
      sys_graph = sys_docs[d]->gold_graph();
    } else {
      const Document& doc = *gold_docs[d];
      for (std::size_t i = 0; i < doc.pairs.size(); ++i)
        if (preds[d]->labels[i] != Relation::Vague)
          sys_graph.add_edge(doc.pairs[i].e1, doc.pairs[i].e2,
                             preds[d]->labels[i]);
    }
    counts[d] = awareness_counts(sys_graph, gold_docs[d]->gold_graph());
  });

  CorpusEval eval;
  double p_sum = 0, r_sum = 0, f_sum = 0;
  for (std::size_t d = 0; d < n; ++d) {
    eval.micro_counts += counts[d];
    AwarenessScore s = counts[d].score();
    eval.per_document.push_back(s);
    p_sum += s.precision;
    r_sum += s.recall;
    f_sum += s.f1;
  }
  eval.micro = eval.micro_counts.score();
  if (n > 0) {
    eval.macro.precision = p_sum / double(n);
    eval.macro.recall = r_sum / double(n);
    eval.macro.f1 = f_sum / double(n);
  }
  return eval;
}

}  // namespace

CorpusEval evaluate_corpora(const Corpus& sys, const Corpus& gold,
                            ExecMode mode) {
  std::map<std::string, const Document*> sys_by_id;
  for (const Document& d : sys.documents) sys_by_id[d.doc_id] = &d;

  std::vector<const Document*> sys_docs, gold_docs;
  for (const Document& d : gold.documents) {
    auto it = sys_by_id.find(d.doc_id);
    if (it == sys_by_id.end())
      throw ConfigError("evaluate_corpora: system output missing document '" +
                        d.doc_id + "'");
    if (it->second->n_events() != d.n_events())
      throw ConfigError("evaluate_corpora: event count mismatch in '" +
                        d.doc_id + "'");
    sys_docs.push_back(it->second);
    gold_docs.push_back(&d);
  }
  return evaluate_graph_pairs(sys_docs, gold_docs, {}, mode);
}

CorpusEval evaluate_predictions(const std::vector<DocPrediction>& preds,
                                const Corpus& gold, ExecMode mode) {
  if (preds.size() != gold.documents.size())
    throw ConfigError("evaluate_predictions: prediction/document count mismatch");
  std::vector<const Document*> gold_docs;
  std::vector<const DocPrediction*> pred_ptrs;
  for (std::size_t d = 0; d < preds.size(); ++d) {
    gold_docs.push_back(&gold.documents[d]);
    pred_ptrs.push_back(&preds[d]);
  }
  return evaluate_graph_pairs({}, gold_docs, pred_ptrs, mode);
}

}  // namespace temprel
