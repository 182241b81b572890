#ifndef TEMPREL_FEATURES_HPP
#define TEMPREL_FEATURES_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace temprel {

// Sparse feature vector: (index, value) entries sorted by index, no explicit
// zeros, no duplicate indices.
class FeatureVector {
public:
  using Entry = std::pair<std::uint32_t, double>;

  FeatureVector() = default;
  explicit FeatureVector(std::vector<Entry> entries);

  // Adds value at index, merging duplicates; zeros are pruned on normalize.
  void add(std::uint32_t index, double value);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  std::uint32_t max_index() const;

  double dot(const std::vector<double>& dense) const;

  // dense[i] += scale * this[i]
  void add_to(std::vector<double>& dense, double scale) const;

  bool operator==(const FeatureVector&) const = default;

private:
  void normalize();
  std::vector<Entry> entries_;
};

}  // namespace temprel

#endif  // TEMPREL_FEATURES_HPP
