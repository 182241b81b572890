#include "temprel/synth.hpp"

#include "temprel/errors.hpp"
#include "temprel/rng.hpp"

#include <algorithm>
#include <cstdio>

namespace temprel {

namespace {

constexpr double kEqualProb = 0.08;
constexpr double kNestProb = 0.22;

struct SampledEvent {
  long long start = 0;
  long long end = 0;
  int sample_index = 0;
};

std::vector<SampledEvent> sample_intervals(int n, Rng& rng) {
  std::vector<SampledEvent> events;
  long long cursor = 0;
  for (int t = 0; t < n; ++t) {
    SampledEvent ev;
    ev.sample_index = t;
    double mode = rng.next_double();
    if (t > 0 && mode < kEqualProb) {
      const SampledEvent& src = events[rng.next_below(events.size())];
      ev.start = src.start;
      ev.end = src.end;
    } else if (t > 0 && mode < kEqualProb + kNestProb) {
      // Nest strictly inside an earlier interval when one has room.
      std::vector<int> roomy;
      for (int i = 0; i < t; ++i)
        if (events[i].end - events[i].start >= 3) roomy.push_back(i);
      if (!roomy.empty()) {
        const SampledEvent& host = events[roomy[rng.next_below(roomy.size())]];
        ev.start = rng.next_int(host.start + 1, host.end - 2);
        ev.end = rng.next_int(ev.start + 1, host.end - 1);
      } else {
        ev.start = cursor + rng.next_int(1, 4);
        ev.end = ev.start + rng.next_int(3, 30);
      }
    } else {
      ev.start = cursor + rng.next_int(1, 4);
      ev.end = ev.start + rng.next_int(3, 30);
    }
    cursor = std::max(cursor, ev.start);
    events.push_back(ev);
  }
  return events;
}

}  // namespace

Corpus generate_synthetic(const SynthConfig& cfg) {
  if (cfg.n_docs <= 0 || cfg.events_min < 2 || cfg.events_max < cfg.events_min ||
      cfg.sentences_min < 1 || cfg.sentences_max < cfg.sentences_min)
    throw ConfigError("generate_synthetic: empty range in config");
  if (cfg.feature_noise < 0 || cfg.feature_noise > 1 || cfg.drop_rate < 0 ||
      cfg.drop_rate > 1 || cfg.uninformative_rate < 0 ||
      cfg.uninformative_rate > 1)
    throw ConfigError("generate_synthetic: rates must lie in [0,1]");

  Rng rng(cfg.seed);
  Corpus corpus;
  corpus.feature_dimension = kSynthFeatureDimension;
  corpus.label_set = canonical_label_set();

  for (int di = 0; di < cfg.n_docs; ++di) {
    const int n = (int)rng.next_int(cfg.events_min, cfg.events_max);
    int n_sent = (int)rng.next_int(cfg.sentences_min, cfg.sentences_max);
    n_sent = std::min(n_sent, n);

    std::vector<SampledEvent> sampled = sample_intervals(n, rng);

    // Temporal order defines the narrative: sentences progress with interval
    // start, while text order inside one sentence is free.
    std::vector<int> temporal(n);
    for (int i = 0; i < n; ++i) temporal[i] = i;
    std::sort(temporal.begin(), temporal.end(), [&](int a, int b) {
      if (sampled[a].start != sampled[b].start)
        return sampled[a].start < sampled[b].start;
      if (sampled[a].end != sampled[b].end) return sampled[a].end < sampled[b].end;
      return sampled[a].sample_index < sampled[b].sample_index;
    });

    // Cut the temporally sorted sequence into n_sent non-empty sentences.
    std::vector<int> gaps;
    for (int g = 1; g < n; ++g) gaps.push_back(g);
    rng.shuffle(gaps);
    std::vector<int> cuts(gaps.begin(), gaps.begin() + (n_sent - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);

    Document doc;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "synth-%04d", di);
    doc.doc_id = buf;

    // id assignment: sentence-major, permuted within each sentence.
    std::vector<long long> start_of(n), end_of(n);
    int pos = 0;
    int id = 0;
    for (int s = 0; s < n_sent; ++s) {
      std::vector<int> chunk;
      for (; pos < cuts[s]; ++pos) chunk.push_back(temporal[pos]);
      rng.shuffle(chunk);
      for (int src : chunk) {
        doc.events.push_back({id, s});
        start_of[id] = sampled[src].start;
        end_of[id] = sampled[src].end;
        ++id;
      }
    }

    // Gold from the intervals, every canonical pair listed.
    TemporalGraph gold(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        PairExample p;
        p.e1 = i;
        p.e2 = j;
        p.gold = relation_of_intervals({double(start_of[i]), double(end_of[i])},
                                       {double(start_of[j]), double(end_of[j])});
        doc.pairs.push_back(p);
        if (*p.gold != Relation::Vague) gold.add_edge(i, j, *p.gold);
      }
    }

    // Pairs whose label the rest of the graph re-derives are the candidates
    // for the uninformative treatment.
    std::vector<int> derivable;
    long long n_definite = 0;
    for (std::size_t pi = 0; pi < doc.pairs.size(); ++pi) {
      const PairExample& p = doc.pairs[pi];
      if (*p.gold == Relation::Vague) continue;
      ++n_definite;
      TemporalGraph rest(n);
      for (const auto& [pair, rel] : gold.edges())
        if (pair != std::make_pair(p.e1, p.e2))
          rest.add_edge(pair.first, pair.second, rel);
      if (closure(rest).relation(p.e1, p.e2) == *p.gold)
        derivable.push_back((int)pi);
    }
    rng.shuffle(derivable);
    std::size_t n_uninformative = std::min(
        derivable.size(),
        (std::size_t)(cfg.uninformative_rate * (double)n_definite + 0.5));
    std::vector<bool> uninformative(doc.pairs.size(), false);
    for (std::size_t k = 0; k < n_uninformative; ++k)
      uninformative[derivable[k]] = true;

    for (std::size_t pi = 0; pi < doc.pairs.size(); ++pi) {
      PairExample& p = doc.pairs[pi];
      std::vector<FeatureVector::Entry> feats;
      feats.emplace_back(kSynthBiasIndex, 1.0);
      int dist = doc.sentence_distance(p.e1, p.e2);
      if (dist == 0) feats.emplace_back(kSynthSameSentenceIndex, 1.0);
      if (dist == 1) feats.emplace_back(kSynthAdjacentSentenceIndex, 1.0);
      if (uninformative[pi]) {
        feats.emplace_back(kSynthUninformativeIndex, 1.0);
      } else {
        int block = ordinal(*p.gold);
        if (rng.next_bool(cfg.feature_noise))
          block = (int)rng.next_below(kNumRelations);
        std::uint32_t offset = (std::uint32_t)rng.next_below(kSynthBlockSize);
        feats.emplace_back((std::uint32_t)block * kSynthBlockSize + offset, 1.0);
      }
      p.features = FeatureVector(std::move(feats));
    }

    // rho-dropping: definite labels become vague, emulating unannotated
    // pairs. Removal only, so consistency is preserved.
    for (PairExample& p : doc.pairs)
      if (*p.gold != Relation::Vague && rng.next_bool(cfg.drop_rate))
        p.gold = Relation::Vague;

    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

}  // namespace temprel
