// temprel: structured learning and exact global inference for event
// temporal graphs. Subcommands wrap the library operations one-to-one and
// every run emits a manifest sufficient to reproduce its outputs.

#include "temprel/batch.hpp"
#include "temprel/errors.hpp"
#include "temprel/evaluation.hpp"
#include "temprel/experiment.hpp"
#include "temprel/manifest.hpp"
#include "temprel/synth.hpp"
#include "temprel/training.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace temprel;
using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitSolverLimit = 3;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void require_input(const std::string& path) {
  if (!fs::exists(path))
    throw ConfigError("input file does not exist: " + path);
}

struct ManifestSink {
  RunManifest man;
  std::string path;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void input(const std::string& p) { man.input_hashes[p] = hash_file(p); }
  void output(const std::string& p) { man.output_paths.push_back(p); }

  void finish(const std::string& default_path) {
    man.wall_clock_sec = seconds_since(t0);
    std::string target = path.empty() ? default_path : path;
    man.write(target);
  }
};

std::string default_manifest_path(const ManifestSink& sink,
                                  const std::string& command) {
  if (!sink.man.output_paths.empty())
    return sink.man.output_paths.front() + ".manifest.json";
  return "temprel-" + command + ".manifest.json";
}

// ---------------------------------------------------------------- gen ----

struct GenArgs {
  SynthConfig synth;
  std::string out;
  std::string manifest;
};

int cmd_gen(const GenArgs& a) {
  ManifestSink sink;
  sink.path = a.manifest;
  Corpus c = generate_synthetic(a.synth);
  save_corpus(c, a.out);
  sink.output(a.out);

  json cfg = {{"n_docs", a.synth.n_docs},
              {"events_min", a.synth.events_min},
              {"events_max", a.synth.events_max},
              {"sentences_min", a.synth.sentences_min},
              {"sentences_max", a.synth.sentences_max},
              {"feature_noise", a.synth.feature_noise},
              {"drop_rate", a.synth.drop_rate},
              {"uninformative_rate", a.synth.uninformative_rate},
              {"seed", a.synth.seed}};
  sink.man.command = "gen";
  sink.man.config_json = cfg.dump();
  sink.man.seed = a.synth.seed;
  sink.finish(default_manifest_path(sink, "gen"));
  std::cerr << "gen: wrote " << c.documents.size() << " documents to " << a.out
            << "\n";
  return kExitOk;
}

// -------------------------------------------------------------- train ----

struct TrainArgs {
  std::string corpus;
  std::string labeled;    // codl only
  std::string unlabeled;  // codl only
  std::string out;
  std::string log_path;
  std::string manifest;
  std::string vague_mode = "exclude";
  std::string on_conflict = "error";
  bool no_average = false;
  TrainConfig tc;
  InferenceConfig inf;
};

void apply_common(TrainArgs& a) {
  a.tc.vague_exclusion = a.vague_mode == "exclude";
  a.inf.vague_exclusion = a.tc.vague_exclusion;
  a.tc.average = !a.no_average;
}

Corpus load_training_corpus(const std::string& path,
                            const std::string& on_conflict) {
  Corpus c = load_corpus(path);
  std::vector<std::string> bad = inconsistent_documents(c);
  if (bad.empty()) return c;
  if (on_conflict == "drop") {
    for (Document& d : c.documents) {
      int dropped = repair_document_gold(d);
      if (dropped > 0)
        std::cerr << "warning: dropped " << dropped
                  << " conflicting gold edge(s) in document '" << d.doc_id
                  << "'\n";
    }
    return c;
  }
  throw InconsistentGraphError(
      "inconsistent gold annotations in document '" + bad.front() +
      "' (and " + std::to_string(bad.size() - 1) +
      " more); rerun with --on-conflict drop to repair");
}

void write_train_log(const std::string& path, const TrainLog& log) {
  if (path.empty()) return;
  std::ofstream out(path);
  for (const TrainLogEntry& e : log.entries) {
    json j = {{"epoch", e.epoch}, {"updates", e.updates},
              {"objective", e.objective}};
    out << j.dump() << "\n";
  }
}

json train_config_json(const TrainArgs& a) {
  return {{"learning_rate", a.tc.learning_rate},
          {"epochs", a.tc.epochs},
          {"shuffle_seed", a.tc.shuffle_seed},
          {"codl_gamma", a.tc.codl_gamma},
          {"codl_iterations", a.tc.codl_iterations},
          {"vague_mode", a.vague_mode},
          {"average", a.tc.average},
          {"on_conflict", a.on_conflict},
          {"max_sentence_dist", a.inf.max_sentence_dist},
          {"solver_node_limit", a.inf.solver_node_limit}};
}

int cmd_train(const std::string& kind, TrainArgs& a) {
  apply_common(a);
  ManifestSink sink;
  sink.path = a.manifest;

  TrainLog log;
  Model m;
  if (kind == "train-codl") {
    require_input(a.labeled);
    require_input(a.unlabeled);
    sink.input(a.labeled);
    sink.input(a.unlabeled);
    Corpus labeled = load_training_corpus(a.labeled, a.on_conflict);
    Corpus unlabeled = load_corpus(a.unlabeled);
    m = train_codl(labeled, unlabeled, a.tc, a.inf, &log);
  } else {
    require_input(a.corpus);
    sink.input(a.corpus);
    if (kind == "train-local") {
      Corpus train = load_corpus(a.corpus);
      m = train_local_ap(train, a.tc, &log);
    } else {
      Corpus train = load_training_corpus(a.corpus, a.on_conflict);
      m = train_structured(train, a.tc, a.inf, &log);
    }
  }

  save_model(m, a.out);
  sink.output(a.out);
  if (!a.log_path.empty()) {
    write_train_log(a.log_path, log);
    sink.output(a.log_path);
  }

  sink.man.command = kind;
  sink.man.config_json = train_config_json(a).dump();
  sink.man.seed = a.tc.shuffle_seed;
  sink.finish(default_manifest_path(sink, kind));
  std::cerr << kind << ": wrote model to " << a.out << "\n";
  return kExitOk;
}

// -------------------------------------------------------------- infer ----

struct InferArgs {
  std::string corpus;
  std::string model;
  std::string out;
  std::string manifest;
  std::string vague_mode = "exclude";
  bool post_filter = false;
  bool serial = false;
  InferenceConfig inf;
};

int cmd_infer(const InferArgs& a) {
  ManifestSink sink;
  sink.path = a.manifest;
  require_input(a.corpus);
  require_input(a.model);
  sink.input(a.corpus);
  sink.input(a.model);

  InferenceConfig inf = a.inf;
  inf.vague_exclusion = a.vague_mode == "exclude";

  Corpus corpus = load_corpus(a.corpus);
  Model m = load_model(a.model);
  ExecMode mode = a.serial ? ExecMode::Serial : ExecMode::Parallel;
  auto preds = predict_corpus(m, corpus, inf, a.post_filter, mode);
  Corpus out = apply_predictions(corpus, preds);
  save_corpus(out, a.out);
  sink.output(a.out);

  json cfg = {{"max_sentence_dist", inf.max_sentence_dist},
              {"tau", inf.post_filter_tau},
              {"post_filter", a.post_filter},
              {"post_filter_m", inf.post_filter_m},
              {"feasible_subset_m", inf.feasible_subset_m},
              {"vague_mode", a.vague_mode},
              {"node_limit", inf.solver_node_limit},
              {"serial", a.serial}};
  sink.man.command = "infer";
  sink.man.config_json = cfg.dump();
  sink.finish(default_manifest_path(sink, "infer"));
  std::cerr << "infer: wrote predictions to " << a.out << "\n";
  return kExitOk;
}

// --------------------------------------------------------------- eval ----

struct EvalArgs {
  std::string sys;
  std::string gold;
  std::string json_out;
  std::string manifest;
  bool macro = false;
  bool serial = false;
};

int cmd_eval(const EvalArgs& a) {
  ManifestSink sink;
  sink.path = a.manifest;
  require_input(a.sys);
  require_input(a.gold);
  sink.input(a.sys);
  sink.input(a.gold);

  Corpus sys = load_corpus(a.sys);
  Corpus gold = load_corpus(a.gold);
  ExecMode mode = a.serial ? ExecMode::Serial : ExecMode::Parallel;
  CorpusEval eval = evaluate_corpora(sys, gold, mode);
  const AwarenessScore& s = a.macro ? eval.macro : eval.micro;

  char line[64];
  std::snprintf(line, sizeof(line), "P=%.4f\n", s.precision);
  std::cout << line;
  std::snprintf(line, sizeof(line), "R=%.4f\n", s.recall);
  std::cout << line;
  std::snprintf(line, sizeof(line), "F1=%.4f\n", s.f1);
  std::cout << line;

  if (!a.json_out.empty()) {
    json j = {{"precision", s.precision},
              {"recall", s.recall},
              {"f1", s.f1},
              {"averaging", a.macro ? "macro" : "micro"}};
    std::ofstream out(a.json_out);
    out << j.dump(2) << "\n";
    sink.output(a.json_out);
  }

  json cfg = {{"macro", a.macro}, {"serial", a.serial}};
  sink.man.command = "eval";
  sink.man.config_json = cfg.dump();
  sink.finish(default_manifest_path(sink, "eval"));
  return kExitOk;
}

// ------------------------------------------------------------ closure ----

struct ClosureArgs {
  std::string corpus;
  std::string out;
  std::string manifest;
  std::string on_conflict = "error";
};

int cmd_closure(const ClosureArgs& a) {
  ManifestSink sink;
  sink.path = a.manifest;
  require_input(a.corpus);
  sink.input(a.corpus);

  Corpus c = load_training_corpus(a.corpus, a.on_conflict);
  for (Document& d : c.documents) {
    TemporalGraph closed = closure(d.gold_graph());
    for (PairExample& p : d.pairs) {
      Relation r = closed.relation(p.e1, p.e2);
      if (r != Relation::Vague) p.gold = r;
    }
  }
  save_corpus(c, a.out);
  sink.output(a.out);

  json cfg = {{"on_conflict", a.on_conflict}};
  sink.man.command = "closure";
  sink.man.config_json = cfg.dump();
  sink.finish(default_manifest_path(sink, "closure"));
  std::cerr << "closure: wrote closed corpus to " << a.out << "\n";
  return kExitOk;
}

// ------------------------------------------------------------- census ----

struct CensusArgs {
  std::string corpus;
  std::string json_out;
  std::string manifest;
  bool per_doc = false;
};

int cmd_census(const CensusArgs& a) {
  ManifestSink sink;
  sink.path = a.manifest;
  require_input(a.corpus);
  sink.input(a.corpus);

  Corpus c = load_corpus(a.corpus);
  AnnotationCensus total;
  json per_doc = json::array();
  for (const Document& d : c.documents) {
    AnnotationCensus cen = annotation_census(d.gold_graph());
    total += cen;
    if (a.per_doc)
      std::printf("%-16s annotated=%lld inferred=%lld unknown=%lld total=%lld\n",
                  d.doc_id.c_str(), cen.annotated, cen.inferred, cen.unknown,
                  cen.total);
    per_doc.push_back({{"doc_id", d.doc_id},
                       {"annotated", cen.annotated},
                       {"inferred", cen.inferred},
                       {"unknown", cen.unknown},
                       {"total", cen.total}});
  }
  auto pct = [&](long long x) {
    return total.total ? 100.0 * double(x) / double(total.total) : 0.0;
  };
  std::printf("annotated %lld (%.1f%%)\n", total.annotated, pct(total.annotated));
  std::printf("inferred  %lld (%.1f%%)\n", total.inferred, pct(total.inferred));
  std::printf("unknown   %lld (%.1f%%)\n", total.unknown, pct(total.unknown));
  std::printf("total     %lld\n", total.total);

  if (!a.json_out.empty()) {
    json j = {{"annotated", total.annotated},
              {"inferred", total.inferred},
              {"unknown", total.unknown},
              {"total", total.total},
              {"documents", per_doc}};
    std::ofstream out(a.json_out);
    out << j.dump(2) << "\n";
    sink.output(a.json_out);
  }

  sink.man.command = "census";
  sink.man.config_json = json{{"per_doc", a.per_doc}}.dump();
  sink.finish(default_manifest_path(sink, "census"));
  return kExitOk;
}

// --------------------------------------------------------- experiment ----

struct ExperimentArgs {
  ExperimentConfig cfg;
  std::string seeds = "1,2,3,4,5";
  std::string methods = "local,l+i,s+i,codl";
  std::string vague_mode = "exclude";
  std::string table_out;
  std::string json_out;
  std::string manifest;
  bool serial = false;
};

int cmd_experiment(ExperimentArgs& a) {
  ManifestSink sink;
  sink.path = a.manifest;

  a.cfg.seeds.clear();
  {
    std::stringstream ss(a.seeds);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) a.cfg.seeds.push_back(std::stoull(tok));
  }
  a.cfg.methods.clear();
  {
    std::stringstream ss(a.methods);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) a.cfg.methods.push_back(tok);
  }
  a.cfg.train.vague_exclusion = a.vague_mode == "exclude";
  a.cfg.inference.vague_exclusion = a.cfg.train.vague_exclusion;
  a.cfg.exec = a.serial ? ExecMode::Serial : ExecMode::Parallel;

  ExperimentResult res = run_experiment(a.cfg);
  std::cout << res.table();

  if (!a.table_out.empty()) {
    std::ofstream out(a.table_out);
    out << res.table();
    sink.output(a.table_out);
  }
  if (!a.json_out.empty()) {
    std::ofstream out(a.json_out);
    out << res.to_json() << "\n";
    sink.output(a.json_out);
  }

  json cfg = {{"train_docs", a.cfg.train_docs},
              {"test_docs", a.cfg.test_docs},
              {"seeds", a.seeds},
              {"methods", a.methods},
              {"events_min", a.cfg.synth.events_min},
              {"events_max", a.cfg.synth.events_max},
              {"feature_noise", a.cfg.synth.feature_noise},
              {"drop_rate", a.cfg.synth.drop_rate},
              {"uninformative_rate", a.cfg.synth.uninformative_rate},
              {"post_filter", a.cfg.post_filter},
              {"tune_tau", a.cfg.tune_tau},
              {"tau", a.cfg.inference.post_filter_tau},
              {"labeled_fraction", a.cfg.labeled_fraction},
              {"epochs", a.cfg.train.epochs},
              {"learning_rate", a.cfg.train.learning_rate},
              {"gamma", a.cfg.train.codl_gamma},
              {"iterations", a.cfg.train.codl_iterations},
              {"vague_mode", a.vague_mode},
              {"serial", a.serial}};
  sink.man.command = "experiment";
  sink.man.config_json = cfg.dump();
  sink.finish(default_manifest_path(sink, "experiment"));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"temporal relation learning and global inference"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* sc_gen = app.add_subcommand("gen", "generate a synthetic corpus");
  sc_gen->add_option("--out", gen.out, "output corpus path")->required();
  sc_gen->add_option("--docs", gen.synth.n_docs, "number of documents");
  sc_gen->add_option("--events-min", gen.synth.events_min, "min events per doc");
  sc_gen->add_option("--events-max", gen.synth.events_max, "max events per doc");
  sc_gen->add_option("--sentences-min", gen.synth.sentences_min,
                     "min sentences per doc");
  sc_gen->add_option("--sentences-max", gen.synth.sentences_max,
                     "max sentences per doc");
  sc_gen->add_option("--noise", gen.synth.feature_noise,
                     "indicative-feature flip rate");
  sc_gen->add_option("--drop", gen.synth.drop_rate,
                     "fraction of definite gold labels replaced by vague");
  sc_gen->add_option("--uninformative", gen.synth.uninformative_rate,
                     "fraction of derivable pairs left without indicative features");
  sc_gen->add_option("--seed", gen.synth.seed, "generator seed");
  sc_gen->add_option("--manifest", gen.manifest, "manifest path");

  TrainArgs tl, ts, tcdl;
  auto add_train_common = [](CLI::App* sc, TrainArgs& a, bool structured) {
    sc->add_option("--out", a.out, "output model path")->required();
    sc->add_option("--epochs", a.tc.epochs, "training epochs");
    sc->add_option("--lr", a.tc.learning_rate, "learning rate lambda");
    sc->add_option("--seed", a.tc.shuffle_seed, "shuffle seed");
    sc->add_option("--vague-mode", a.vague_mode, "exclude|include")
        ->check(CLI::IsMember({"exclude", "include"}));
    sc->add_flag("--no-average", a.no_average,
                 "return the final iterate instead of averaged weights");
    sc->add_option("--log", a.log_path, "training log (JSON lines)");
    sc->add_option("--manifest", a.manifest, "manifest path");
    if (structured) {
      sc->add_option("--max-sent-dist", a.inf.max_sentence_dist,
                     "candidate-pair sentence distance bound");
      sc->add_option("--node-limit", a.inf.solver_node_limit,
                     "solver node limit");
      sc->add_option("--on-conflict", a.on_conflict, "error|drop")
          ->check(CLI::IsMember({"error", "drop"}));
    }
  };

  auto* sc_tl = app.add_subcommand("train-local",
                                   "train the local averaged perceptron");
  sc_tl->add_option("--corpus", tl.corpus, "training corpus")->required();
  add_train_common(sc_tl, tl, false);

  auto* sc_ts = app.add_subcommand(
      "train-structured", "train the structured perceptron (inference in the loop)");
  sc_ts->add_option("--corpus", ts.corpus, "training corpus")->required();
  add_train_common(sc_ts, ts, true);

  auto* sc_tc = app.add_subcommand("train-codl",
                                   "constraint-driven semi-supervised training");
  sc_tc->add_option("--labeled", tcdl.labeled, "labeled corpus")->required();
  sc_tc->add_option("--unlabeled", tcdl.unlabeled, "unlabeled corpus")
      ->required();
  sc_tc->add_option("--gamma", tcdl.tc.codl_gamma, "weighting coefficient");
  sc_tc->add_option("--iterations", tcdl.tc.codl_iterations,
                    "CoDL iterations");
  add_train_common(sc_tc, tcdl, true);

  InferArgs inf;
  auto* sc_inf = app.add_subcommand("infer", "constrained MAP inference");
  sc_inf->add_option("--corpus", inf.corpus, "input corpus")->required();
  sc_inf->add_option("--model", inf.model, "model file")->required();
  sc_inf->add_option("--out", inf.out, "output corpus with predictions")
      ->required();
  sc_inf->add_option("--max-sent-dist", inf.inf.max_sentence_dist,
                     "candidate-pair sentence distance bound");
  sc_inf->add_option("--tau", inf.inf.post_filter_tau,
                     "post-filter threshold");
  sc_inf->add_option("--post-filter-m", inf.inf.post_filter_m,
                     "post-filter candidate count (0 = all definite labels)");
  sc_inf->add_flag("--feasible-m", inf.inf.feasible_subset_m,
                   "restrict post-filter candidates to transitivity-feasible labels");
  sc_inf->add_option("--vague-mode", inf.vague_mode, "exclude|include")
      ->check(CLI::IsMember({"exclude", "include"}));
  sc_inf->add_flag("--post-filter", inf.post_filter,
                   "relabel low-confidence pairs to vague");
  sc_inf->add_option("--node-limit", inf.inf.solver_node_limit,
                     "solver node limit");
  sc_inf->add_flag("--serial", inf.serial, "single-threaded prediction");
  sc_inf->add_option("--manifest", inf.manifest, "manifest path");

  EvalArgs ev;
  auto* sc_ev = app.add_subcommand("eval", "temporal awareness evaluation");
  sc_ev->add_option("--sys", ev.sys, "system corpus")->required();
  sc_ev->add_option("--gold", ev.gold, "gold corpus")->required();
  sc_ev->add_flag("--macro", ev.macro, "macro-average instead of micro");
  sc_ev->add_option("--json-out", ev.json_out, "machine-readable record");
  sc_ev->add_flag("--serial", ev.serial, "single-threaded evaluation");
  sc_ev->add_option("--manifest", ev.manifest, "manifest path");

  ClosureArgs cl;
  auto* sc_cl = app.add_subcommand("closure", "close gold graphs");
  sc_cl->add_option("--corpus", cl.corpus, "input corpus")->required();
  sc_cl->add_option("--out", cl.out, "output corpus")->required();
  sc_cl->add_option("--on-conflict", cl.on_conflict, "error|drop")
      ->check(CLI::IsMember({"error", "drop"}));
  sc_cl->add_option("--manifest", cl.manifest, "manifest path");

  CensusArgs cen;
  auto* sc_cen = app.add_subcommand("census",
                                    "annotated/inferred/unknown pair counts");
  sc_cen->add_option("--corpus", cen.corpus, "input corpus")->required();
  sc_cen->add_flag("--per-doc", cen.per_doc, "per-document lines");
  sc_cen->add_option("--json-out", cen.json_out, "machine-readable record");
  sc_cen->add_option("--manifest", cen.manifest, "manifest path");

  ExperimentArgs ex;
  auto* sc_ex = app.add_subcommand(
      "experiment", "L / L+I / S+I / CoDL comparison on a generated corpus");
  sc_ex->add_option("--train-docs", ex.cfg.train_docs, "training documents");
  sc_ex->add_option("--test-docs", ex.cfg.test_docs, "test documents");
  sc_ex->add_option("--seeds", ex.seeds, "comma-separated seeds");
  sc_ex->add_option("--methods", ex.methods,
                    "comma-separated: local,l+i,s+i,s+i-vague,codl");
  sc_ex->add_option("--events-min", ex.cfg.synth.events_min, "min events");
  sc_ex->add_option("--events-max", ex.cfg.synth.events_max, "max events");
  sc_ex->add_option("--noise", ex.cfg.synth.feature_noise, "feature noise");
  sc_ex->add_option("--drop", ex.cfg.synth.drop_rate, "annotation drop rate");
  sc_ex->add_option("--uninformative", ex.cfg.synth.uninformative_rate,
                    "transitivity-dependent pair fraction");
  sc_ex->add_flag("--post-filter", ex.cfg.post_filter, "apply the post-filter");
  sc_ex->add_flag("--tune-tau", ex.cfg.tune_tau,
                  "grid-search tau on a held-out 10% split");
  sc_ex->add_option("--tau", ex.cfg.inference.post_filter_tau,
                    "post-filter threshold (when not tuning)");
  sc_ex->add_option("--labeled-fraction", ex.cfg.labeled_fraction,
                    "CoDL labeled fraction of the training split");
  sc_ex->add_option("--epochs", ex.cfg.train.epochs, "training epochs");
  sc_ex->add_option("--lr", ex.cfg.train.learning_rate, "learning rate");
  sc_ex->add_option("--gamma", ex.cfg.train.codl_gamma, "CoDL gamma");
  sc_ex->add_option("--iterations", ex.cfg.train.codl_iterations,
                    "CoDL iterations");
  sc_ex->add_option("--max-sent-dist", ex.cfg.inference.max_sentence_dist,
                    "candidate-pair sentence distance bound");
  sc_ex->add_option("--node-limit", ex.cfg.inference.solver_node_limit,
                    "solver node limit");
  sc_ex->add_option("--vague-mode", ex.vague_mode, "exclude|include")
      ->check(CLI::IsMember({"exclude", "include"}));
  sc_ex->add_flag("--serial", ex.serial, "disable cell-level parallelism");
  sc_ex->add_option("--table-out", ex.table_out, "write the text table here");
  sc_ex->add_option("--json-out", ex.json_out, "machine-readable results");
  sc_ex->add_option("--manifest", ex.manifest, "manifest path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sc_gen->parsed()) return cmd_gen(gen);
    if (sc_tl->parsed()) return cmd_train("train-local", tl);
    if (sc_ts->parsed()) return cmd_train("train-structured", ts);
    if (sc_tc->parsed()) return cmd_train("train-codl", tcdl);
    if (sc_inf->parsed()) return cmd_infer(inf);
    if (sc_ev->parsed()) return cmd_eval(ev);
    if (sc_cl->parsed()) return cmd_closure(cl);
    if (sc_cen->parsed()) return cmd_census(cen);
    if (sc_ex->parsed()) return cmd_experiment(ex);
  } catch (const NodeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolverLimit;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const InconsistentGraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
