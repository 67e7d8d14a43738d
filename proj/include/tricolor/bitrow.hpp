#ifndef TRICOLOR_BITROW_HPP
#define TRICOLOR_BITROW_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace tricolor {

// Fixed-width bit vector used for digraph adjacency rows and range subsets.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(int n) : n_(n), blocks_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  void set(int i) { blocks_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { blocks_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto b : blocks_) c += std::popcount(b);
    return c;
  }
  bool any() const {
    for (auto b : blocks_)
      if (b) return true;
    return false;
  }

  BitRow& operator|=(const BitRow& o) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
    return *this;
  }
  BitRow& operator&=(const BitRow& o) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
    return *this;
  }

  bool operator==(const BitRow& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }

  // true if this is a subset of o
  bool subset_of(const BitRow& o) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & ~o.blocks_[i]) return false;
    return true;
  }

  bool intersects(const BitRow& o) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & o.blocks_[i]) return true;
    return false;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t w = 0; w < blocks_.size(); ++w) {
      std::uint64_t b = blocks_[w];
      while (b) {
        int bit = std::countr_zero(b);
        f(static_cast<int>(w * 64 + bit));
        b &= b - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& blocks() const { return blocks_; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(n_);
    for (auto b : blocks_) {
      h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> blocks_;
};

struct BitRowHash {
  std::size_t operator()(const BitRow& b) const { return b.hash(); }
};

}  // namespace tricolor

#endif
