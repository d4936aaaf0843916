#pragma once

#include <cstdint>
#include <vector>

#if defined(_MSC_VER)
#include <intrin.h>
#endif

namespace domkit {

/// Fixed-size bitset whose width is chosen at runtime (one bit per vertex).
class DynamicBitset {
public:
  DynamicBitset() = default;

  explicit DynamicBitset(int bit_count)
      : bit_count_(bit_count), words_(word_count(bit_count), 0ULL) {}

  static DynamicBitset all_set(int bit_count) {
    DynamicBitset b(bit_count);
    for (auto& w : b.words_) w = ~0ULL;
    b.trim();
    return b;
  }

  int bit_count() const { return bit_count_; }

  void set(int i) { words_[unsigned(i) >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { words_[unsigned(i) >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (words_[unsigned(i) >> 6] >> (i & 63)) & 1ULL; }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  bool all() const { return count() == bit_count_; }

  DynamicBitset& operator|=(const DynamicBitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DynamicBitset& operator&=(const DynamicBitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend DynamicBitset operator|(DynamicBitset a, const DynamicBitset& b) { return a |= b; }
  friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset& b) { return a &= b; }

  /// Bits set in *this but not in `o`.
  DynamicBitset and_not(const DynamicBitset& o) const {
    DynamicBitset r(bit_count_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }

  bool intersects(const DynamicBitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const DynamicBitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// Lowest set bit, or -1 if empty.
  int find_first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i << 6) + countr_zero(words_[i]);
    return -1;
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        f(int(i << 6) + countr_zero(w));
        w &= w - 1;
      }
    }
  }

  bool operator==(const DynamicBitset&) const = default;

private:
  static size_t word_count(int bits) { return (size_t(bits) + 63) / 64; }

  static int popcount(uint64_t w) {
#if defined(_MSC_VER)
    return int(__popcnt64(w));
#else
    return __builtin_popcountll(w);
#endif
  }

  static int countr_zero(uint64_t w) {
#if defined(_MSC_VER)
    unsigned long idx;
    _BitScanForward64(&idx, w);
    return int(idx);
#else
    return __builtin_ctzll(w);
#endif
  }

  void trim() {
    if (words_.empty()) return;
    int r = bit_count_ & 63;
    if (r != 0) words_.back() &= (1ULL << r) - 1ULL;
  }

  int bit_count_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace domkit
