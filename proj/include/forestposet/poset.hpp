#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace forestposet {

using Cover = std::pair<std::size_t, std::size_t>;

// A finite poset given by its full order relation and a corank function.
//
// Covers are derived from gradedness (corank drops by exactly one along a
// comparable pair) unless supplied explicitly, which is how tests build
// deliberately broken fixtures.
class FinitePoset {
 public:
  FinitePoset() = default;
  // `relation` is a row-major size*size relation matrix.
  FinitePoset(std::size_t size, std::vector<char> relation, std::vector<int> corank);
  FinitePoset(std::size_t size, std::vector<char> relation, std::vector<int> corank,
              std::vector<Cover> covers);

  std::size_t size() const { return size_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size_ + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  int corank(std::size_t a) const { return corank_[a]; }
  const std::vector<int>& coranks() const { return corank_; }
  // (lower, upper) pairs.
  const std::vector<Cover>& covers() const { return covers_; }

  // Unique minimum / maximum; size() when there is none.
  std::size_t bottom() const;
  std::size_t top() const;

  // Elements sorted so that every element precedes the elements above it.
  std::vector<std::size_t> linear_extension() const;

  // Covers computed directly as the transitive reduction of the order.
  std::vector<Cover> transitive_reduction() const;

 private:
  std::size_t size_ = 0;
  std::vector<char> leq_;
  std::vector<int> corank_;
  std::vector<Cover> covers_;
};

}  // namespace forestposet
