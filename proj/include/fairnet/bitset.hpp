#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace fairnet {

// Runtime-sized bitset. Approval rows and bundles are bitsets over goods,
// neighborhoods are bitsets over agents; the checkers and solvers reduce
// utility queries to masked popcounts.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  // |*this & o| without materializing the intersection.
  int intersection_count(const Bitset& o) const {
    int c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += std::popcount(words_[k] & o.words_[k]);
    return c;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  bool operator==(const Bitset&) const = default;

  int first_set() const {  // -1 when empty
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return int(k) * 64 + std::countr_zero(words_[k]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(int(k) * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace fairnet
