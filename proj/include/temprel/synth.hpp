#ifndef TEMPREL_SYNTH_HPP
#define TEMPREL_SYNTH_HPP

#include "temprel/corpus.hpp"

#include <cstdint>

namespace temprel {

// Synthetic corpus generator. Documents are built from sampled event
// intervals, so gold graphs are consistent by construction. A configurable
// fraction of pairs carries no label-indicative feature at all; their labels
// are recoverable only through the transitivity structure, which is what
// separates global from local methods at desk scale.
struct SynthConfig {
  int n_docs = 20;
  int events_min = 8;
  int events_max = 12;
  int sentences_min = 3;
  int sentences_max = 5;
  double feature_noise = 0.0;       // epsilon: indicative feature flipped to a random block
  double drop_rate = 0.0;           // rho: non-vague gold replaced by vague
  double uninformative_rate = 0.0;  // fraction of derivable pairs left uninformative
  std::uint64_t seed = 42;
};

Corpus generate_synthetic(const SynthConfig& cfg);

// Feature layout constants of the generator, shared with tests.
inline constexpr std::uint32_t kSynthBlockSize = 8;
inline constexpr std::uint32_t kSynthBiasIndex = 48;
inline constexpr std::uint32_t kSynthSameSentenceIndex = 49;
inline constexpr std::uint32_t kSynthAdjacentSentenceIndex = 50;
inline constexpr std::uint32_t kSynthUninformativeIndex = 51;
inline constexpr std::uint32_t kSynthFeatureDimension = 52;

}  // namespace temprel

#endif  // TEMPREL_SYNTH_HPP
