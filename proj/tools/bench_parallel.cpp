// Benchmarks the serial reference paths against the OpenMP kernels for
// corpus prediction, pseudo-labeling and evaluation, and verifies that both
// modes produce identical results.

#include "temprel/batch.hpp"
#include "temprel/synth.hpp"
#include "temprel/training.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace temprel;

namespace {

double now_sec() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename Fn>
double timed(Fn&& fn) {
  double t0 = now_sec();
  fn();
  return now_sec() - t0;
}

}  // namespace

int main(int argc, char** argv) {
  int docs = 200;
  if (argc > 1) docs = std::atoi(argv[1]);

  SynthConfig sc;
  sc.n_docs = docs;
  sc.events_min = 10;
  sc.events_max = 14;
  sc.feature_noise = 0.25;
  sc.uninformative_rate = 0.3;
  sc.seed = 9;
  Corpus corpus = generate_synthetic(sc);

  TrainConfig tc;
  tc.epochs = 3;
  Model m = train_local_ap(corpus, tc);
  InferenceConfig inf;

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both lanes run serially\n");
#endif
  std::printf("corpus: %d documents\n\n", docs);

  std::vector<DocPrediction> serial_preds, parallel_preds;
  double t_serial = timed([&] {
    serial_preds = predict_corpus(m, corpus, inf, true, ExecMode::Serial);
  });
  double t_parallel = timed([&] {
    parallel_preds = predict_corpus(m, corpus, inf, true, ExecMode::Parallel);
  });
  bool preds_equal = serial_preds.size() == parallel_preds.size();
  for (std::size_t d = 0; preds_equal && d < serial_preds.size(); ++d)
    preds_equal = serial_preds[d].labels == parallel_preds[d].labels;
  std::printf("predict      serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              t_serial, t_parallel, t_serial / t_parallel,
              preds_equal ? "identical" : "MISMATCH");

  std::vector<std::vector<Relation>> serial_pseudo, parallel_pseudo;
  double tp_serial = timed([&] {
    serial_pseudo = pseudo_label_corpus(m, corpus, inf, ExecMode::Serial);
  });
  double tp_parallel = timed([&] {
    parallel_pseudo = pseudo_label_corpus(m, corpus, inf, ExecMode::Parallel);
  });
  bool pseudo_equal = serial_pseudo == parallel_pseudo;
  std::printf("pseudo-label serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              tp_serial, tp_parallel, tp_serial / tp_parallel,
              pseudo_equal ? "identical" : "MISMATCH");

  CorpusEval serial_eval, parallel_eval;
  double te_serial = timed([&] {
    serial_eval = evaluate_predictions(serial_preds, corpus, ExecMode::Serial);
  });
  double te_parallel = timed([&] {
    parallel_eval =
        evaluate_predictions(parallel_preds, corpus, ExecMode::Parallel);
  });
  bool eval_equal =
      serial_eval.micro_counts.precision_num ==
          parallel_eval.micro_counts.precision_num &&
      serial_eval.micro_counts.precision_den ==
          parallel_eval.micro_counts.precision_den &&
      serial_eval.micro_counts.recall_num ==
          parallel_eval.micro_counts.recall_num &&
      serial_eval.micro_counts.recall_den ==
          parallel_eval.micro_counts.recall_den;
  std::printf("evaluate     serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              te_serial, te_parallel, te_serial / te_parallel,
              eval_equal ? "identical" : "MISMATCH");

  bool all_equal = preds_equal && pseudo_equal && eval_equal;
  std::printf("\n%s\n", all_equal ? "serial and parallel lanes agree"
                                  : "serial/parallel DISAGREEMENT");
  return all_equal ? 0 : 1;
}
