#include "forestposet/poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace forestposet {

FinitePoset::FinitePoset(std::size_t size, std::vector<char> relation, std::vector<int> corank)
    : size_(size), leq_(std::move(relation)), corank_(std::move(corank)) {
  if (leq_.size() != size_ * size_ || corank_.size() != size_) {
    throw std::invalid_argument("poset relation and corank sizes do not match");
  }
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (a != b && leq(a, b) && corank_[a] == corank_[b] + 1) covers_.emplace_back(a, b);
    }
  }
}

FinitePoset::FinitePoset(std::size_t size, std::vector<char> relation, std::vector<int> corank,
                         std::vector<Cover> covers)
    : size_(size),
      leq_(std::move(relation)),
      corank_(std::move(corank)),
      covers_(std::move(covers)) {
  if (leq_.size() != size_ * size_ || corank_.size() != size_) {
    throw std::invalid_argument("poset relation and corank sizes do not match");
  }
}

std::size_t FinitePoset::bottom() const {
  for (std::size_t a = 0; a < size_; ++a) {
    bool below_all = true;
    for (std::size_t b = 0; b < size_ && below_all; ++b) below_all = leq(a, b);
    if (below_all) return a;
  }
  return size_;
}

std::size_t FinitePoset::top() const {
  for (std::size_t a = 0; a < size_; ++a) {
    bool above_all = true;
    for (std::size_t b = 0; b < size_ && above_all; ++b) above_all = leq(b, a);
    if (above_all) return a;
  }
  return size_;
}

std::vector<std::size_t> FinitePoset::linear_extension() const {
  // Counting strictly smaller elements gives a valid topological key.
  std::vector<std::size_t> below(size_, 0);
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (less(b, a)) ++below[a];
    }
  }
  std::vector<std::size_t> order(size_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  return order;
}

std::vector<Cover> FinitePoset::transitive_reduction() const {
  std::vector<Cover> out;
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (!less(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < size_ && direct; ++c) {
        if (less(a, c) && less(c, b)) direct = false;
      }
      if (direct) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace forestposet
