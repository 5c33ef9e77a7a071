#pragma once

#include <cstdint>
#include <string_view>

namespace dpc {

/// Counter-based generator: value i of stream `key` is mix(key, i).
/// Reproducible across platforms and cheap to split.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next() { return mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }
  /// Uniform value in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection keeps the distribution exact.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return v % bound;
  }
  /// Independent child stream.
  CounterRng split(std::uint64_t stream) const { return CounterRng(mix(key_ ^ mix(stream + 0x632BE59BD9B4E019ULL))); }
  CounterRng split(std::string_view tag) const { return split(hash(tag)); }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  static std::uint64_t hash(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) h = (h ^ c) * 0x100000001B3ULL;
    return h;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace dpc
