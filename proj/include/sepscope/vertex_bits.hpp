#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sepscope {

/// Dense bit set over vertex indices [0, size). Used by every set-heavy
/// kernel; the public API speaks sorted index vectors.
class VertexBits {
 public:
  VertexBits() = default;
  explicit VertexBits(int size) : size_(size), words_((size + 63) / 64, 0) {}

  template <class Range>
  static VertexBits from(int size, const Range& members) {
    VertexBits b(size);
    for (int v : members) b.set(v);
    return b;
  }

  int size() const { return size_; }

  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  void fill() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  /// Lowest member, or -1 when empty.
  int first() const { return next(0); }
  /// Lowest member >= from, or -1.
  int next(int from) const {
    if (from >= size_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(static_cast<int>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  VertexBits& operator|=(const VertexBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexBits& operator&=(const VertexBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexBits& operator-=(const VertexBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexBits operator|(VertexBits a, const VertexBits& b) { return a |= b; }
  friend VertexBits operator&(VertexBits a, const VertexBits& b) { return a &= b; }
  friend VertexBits operator-(VertexBits a, const VertexBits& b) { return a -= b; }

  VertexBits complement() const {
    VertexBits c(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  bool intersects(const VertexBits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const VertexBits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const VertexBits&, const VertexBits&) = default;
  friend bool operator<(const VertexBits& a, const VertexBits& b) {
    return a.members() < b.members();
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void trim() {
    if (size_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexBitsHash {
  std::size_t operator()(const VertexBits& b) const { return b.hash(); }
};

}  // namespace sepscope
