#include "temprel/experiment.hpp"

#include "temprel/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace temprel {

namespace {

Corpus slice(const Corpus& c, std::size_t begin, std::size_t end) {
  Corpus out;
  out.feature_dimension = c.feature_dimension;
  out.label_set = c.label_set;
  out.documents.assign(c.documents.begin() + begin, c.documents.begin() + end);
  return out;
}

Corpus strip_gold(const Corpus& c) {
  Corpus out = c;
  for (Document& d : out.documents)
    for (PairExample& p : d.pairs) p.gold = std::nullopt;
  return out;
}

struct SeedRun {
  Corpus train;
  Corpus test;
  TrainConfig tc;
};

double tune_tau_on_dev(const Model& m, const Corpus& dev,
                       const InferenceConfig& inf, bool local_method,
                       ExecMode exec) {
  double best_tau = 0.0;
  double best_f1 = -1.0;
  for (int step = 0; step <= 20; ++step) {
    InferenceConfig probe = inf;
    probe.post_filter_tau = 0.05 * step;
    auto preds = local_method
                     ? predict_corpus_local(m, dev, probe, true, exec)
                     : predict_corpus(m, dev, probe, true, exec);
    double f1 = evaluate_predictions(preds, dev, exec).micro.f1;
    if (f1 > best_f1) {
      best_f1 = f1;
      best_tau = probe.post_filter_tau;
    }
  }
  return best_tau;
}

struct CellResult {
  AwarenessScore score;
  double tuned_tau = -1.0;
};

CellResult run_cell(const std::string& method, const SeedRun& run,
                    const ExperimentConfig& cfg) {
  InferenceConfig inf = cfg.inference;
  TrainConfig tc = run.tc;

  const bool vague_as_label = method == "s+i-vague";
  if (vague_as_label) {
    tc.vague_exclusion = false;
    inf.vague_exclusion = false;
  }
  const bool use_post_filter = cfg.post_filter && !vague_as_label;
  const bool local_decoding = method == "local";

  Corpus train_set = run.train;
  Corpus dev_set;
  if (use_post_filter && cfg.tune_tau) {
    std::size_t n_dev =
        std::max<std::size_t>(1, run.train.documents.size() / 10);
    std::size_t split = run.train.documents.size() - n_dev;
    train_set = slice(run.train, 0, split);
    dev_set = slice(run.train, split, run.train.documents.size());
  }

  Model m;
  if (method == "local" || method == "l+i") {
    m = train_local_ap(train_set, tc);
  } else if (method == "s+i" || method == "s+i-vague") {
    m = train_structured(train_set, tc, inf);
  } else if (method == "codl") {
    std::size_t n_labeled = std::max<std::size_t>(
        1, (std::size_t)(cfg.labeled_fraction *
                             (double)train_set.documents.size() +
                         0.5));
    Corpus labeled = slice(train_set, 0, n_labeled);
    Corpus unlabeled =
        strip_gold(slice(train_set, n_labeled, train_set.documents.size()));
    m = train_codl(labeled, unlabeled, tc, inf);
  } else {
    throw ConfigError("run_experiment: unknown method '" + method + "'");
  }

  CellResult cell;
  if (use_post_filter && cfg.tune_tau) {
    cell.tuned_tau = tune_tau_on_dev(m, dev_set, inf, local_decoding, cfg.exec);
    inf.post_filter_tau = cell.tuned_tau;
  }

  auto preds = local_decoding
                   ? predict_corpus_local(m, run.test, inf, use_post_filter,
                                          cfg.exec)
                   : predict_corpus(m, run.test, inf, use_post_filter,
                                    cfg.exec);
  cell.score = evaluate_predictions(preds, run.test, cfg.exec).micro;
  return cell;
}

}  // namespace

const MethodResult& ExperimentResult::row(const std::string& method) const {
  for (const MethodResult& r : rows)
    if (r.method == method) return r;
  throw ConfigError("experiment result has no row for method '" + method + "'");
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.train_docs < 1 || cfg.test_docs < 1)
    throw ConfigError("run_experiment: need at least one train and test doc");
  if (cfg.seeds.empty()) throw ConfigError("run_experiment: no seeds");

  const std::size_t n_seeds = cfg.seeds.size();
  std::vector<SeedRun> runs(n_seeds);
  for (std::size_t s = 0; s < n_seeds; ++s) {
    SynthConfig sc = cfg.synth;
    sc.seed = cfg.seeds[s];
    sc.n_docs = cfg.train_docs + cfg.test_docs;
    Corpus all = generate_synthetic(sc);
    runs[s].train = slice(all, 0, cfg.train_docs);
    runs[s].test = slice(all, cfg.train_docs, all.documents.size());
    runs[s].tc = cfg.train;
    runs[s].tc.shuffle_seed = cfg.seeds[s];
  }

  // Grid cells are independent; the per-document kernels inside each cell
  // stay serial when the cell loop already owns the threads.
  struct Cell {
    std::size_t method_idx;
    std::size_t seed_idx;
  };
  std::vector<Cell> cells;
  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi)
    for (std::size_t s = 0; s < n_seeds; ++s) cells.push_back({mi, s});

  std::vector<CellResult> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  if (cfg.exec == ExecMode::Parallel) {
    ExperimentConfig inner = cfg;
    inner.exec = ExecMode::Serial;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < (long long)cells.size(); ++i) {
      try {
        results[i] = run_cell(cfg.methods[cells[i].method_idx],
                              runs[cells[i].seed_idx], inner);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (errors[i]) std::rethrow_exception(errors[i]);
  } else {
    for (std::size_t i = 0; i < cells.size(); ++i)
      results[i] = run_cell(cfg.methods[cells[i].method_idx],
                            runs[cells[i].seed_idx], cfg);
  }

  ExperimentResult out;
  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    MethodResult row;
    row.method = cfg.methods[mi];
    double p = 0, r = 0, f = 0;
    for (std::size_t s = 0; s < n_seeds; ++s) {
      const CellResult& cell = results[mi * n_seeds + s];
      row.per_seed.push_back(cell.score);
      if (cell.tuned_tau >= 0) row.tuned_tau.push_back(cell.tuned_tau);
      p += cell.score.precision;
      r += cell.score.recall;
      f += cell.score.f1;
    }
    row.mean.precision = p / double(n_seeds);
    row.mean.recall = r / double(n_seeds);
    row.mean.f1 = f / double(n_seeds);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string ExperimentResult::table() const {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-10s %8s %8s %8s   per-seed F1\n", "method",
                "P", "R", "F1");
  os << buf;
  for (const MethodResult& r : rows) {
    std::snprintf(buf, sizeof(buf), "%-10s %8.4f %8.4f %8.4f   ",
                  r.method.c_str(), r.mean.precision, r.mean.recall, r.mean.f1);
    os << buf;
    for (std::size_t s = 0; s < r.per_seed.size(); ++s) {
      std::snprintf(buf, sizeof(buf), "%s%.4f", s ? " " : "", r.per_seed[s].f1);
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

std::string ExperimentResult::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const MethodResult& r : rows) {
    nlohmann::json row;
    row["method"] = r.method;
    row["mean"] = {{"precision", r.mean.precision},
                   {"recall", r.mean.recall},
                   {"f1", r.mean.f1}};
    nlohmann::json seeds = nlohmann::json::array();
    for (const AwarenessScore& s : r.per_seed)
      seeds.push_back({{"precision", s.precision},
                       {"recall", s.recall},
                       {"f1", s.f1}});
    row["per_seed"] = seeds;
    if (!r.tuned_tau.empty()) row["tuned_tau"] = r.tuned_tau;
    j.push_back(row);
  }
  return j.dump(2);
}

}  // namespace temprel
