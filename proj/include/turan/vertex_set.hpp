#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace turan {

/// Fixed-capacity bitset over vertex ids 0..(64*Words - 1).
///
/// Used both as an adjacency row and as a free-standing vertex subset.
/// All operations are value-semantic and allocation free.
template <std::size_t Words>
class BasicVertexSet {
 public:
  static constexpr int kCapacity = static_cast<int>(64 * Words);

  constexpr BasicVertexSet() = default;
  BasicVertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }

  /// The set {0, 1, ..., n-1}.
  static BasicVertexSet prefix(int n) {
    BasicVertexSet s;
    for (std::size_t w = 0; w < Words && n > 0; ++w, n -= 64) {
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }
    return s;
  }

  void insert(int v) { words_[word(v)] |= bit(v); }
  void erase(int v) { words_[word(v)] &= ~bit(v); }
  [[nodiscard]] bool contains(int v) const { return (words_[word(v)] & bit(v)) != 0; }

  [[nodiscard]] int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  [[nodiscard]] bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  /// Smallest member, or -1 when empty.
  [[nodiscard]] int first() const {
    for (std::size_t w = 0; w < Words; ++w) {
      if (words_[w] != 0) return static_cast<int>(64 * w) + std::countr_zero(words_[w]);
    }
    return -1;
  }

  [[nodiscard]] bool is_subset_of(const BasicVertexSet& other) const {
    for (std::size_t w = 0; w < Words; ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }

  [[nodiscard]] bool intersects(const BasicVertexSet& other) const {
    for (std::size_t w = 0; w < Words; ++w) {
      if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
  }

  BasicVertexSet& operator&=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  BasicVertexSet& operator|=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  BasicVertexSet& operator-=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
  friend BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
  friend BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) { return a -= b; }
  friend bool operator==(const BasicVertexSet&, const BasicVertexSet&) = default;

  /// Lexicographic comparison of the sorted member lists.
  friend bool operator<(const BasicVertexSet& a, const BasicVertexSet& b) {
    for (std::size_t w = 0; w < Words; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff == 0) continue;
      const std::uint64_t low = diff & (~diff + 1);
      // The set owning the lowest differing element is the smaller one.
      return (a.words_[w] & low) != 0;
    }
    return false;
  }

  [[nodiscard]] std::uint64_t word_at(std::size_t w) const { return words_[w]; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const std::array<std::uint64_t, Words>* words, std::size_t index)
        : words_(words), index_(index) {
      if (index_ < Words) current_ = (*words_)[index_];
      advance();
    }
    int operator*() const { return static_cast<int>(64 * index_) + std::countr_zero(current_); }
    iterator& operator++() {
      current_ &= current_ - 1;
      advance();
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.index_ == b.index_ && a.current_ == b.current_;
    }

   private:
    void advance() {
      while (current_ == 0 && index_ < Words) {
        ++index_;
        current_ = index_ < Words ? (*words_)[index_] : 0;
      }
    }
    const std::array<std::uint64_t, Words>* words_ = nullptr;
    std::size_t index_ = Words;
    std::uint64_t current_ = 0;
  };

  [[nodiscard]] iterator begin() const { return iterator(&words_, 0); }
  [[nodiscard]] iterator end() const { return iterator(&words_, Words); }

  [[nodiscard]] std::vector<int> members() const { return {begin(), end()}; }

 private:
  static constexpr std::size_t word(int v) { return static_cast<std::size_t>(v) >> 6; }
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

  std::array<std::uint64_t, Words> words_{};
};

using VertexSet = BasicVertexSet<1>;
using WideVertexSet = BasicVertexSet<4>;

}  // namespace turan
