#include "forestposet/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "forestposet/order.hpp"

namespace forestposet {

SetPartition::SetPartition(std::vector<LabelSet> blocks) : blocks_(std::move(blocks)) {
  std::vector<Label> all;
  for (LabelSet& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("partition blocks must be nonempty");
    std::sort(block.begin(), block.end());
    all.insert(all.end(), block.begin(), block.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  ground_ = make_label_set(std::move(all));
}

SetPartition SetPartition::finest(const LabelSet& ground) {
  std::vector<LabelSet> blocks;
  for (const Label& l : ground) blocks.push_back({l});
  return SetPartition(std::move(blocks));
}

SetPartition SetPartition::coarsest(const LabelSet& ground) { return SetPartition({ground}); }

std::size_t SetPartition::block_of(const Label& label) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), label)) return i;
  }
  throw std::invalid_argument("label '" + label + "' is not in the partition");
}

SetPartition SetPartition::merged(const Label& a, const Label& b) const {
  const std::size_t ia = block_of(a);
  const std::size_t ib = block_of(b);
  if (ia == ib) return *this;
  std::vector<LabelSet> blocks;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i != ia && i != ib) blocks.push_back(blocks_[i]);
  }
  blocks.push_back(set_union(blocks_[ia], blocks_[ib]));
  return SetPartition(std::move(blocks));
}

SetPartition SetPartition::disjoint_union(const SetPartition& other) const {
  std::vector<LabelSet> blocks = blocks_;
  blocks.insert(blocks.end(), other.blocks_.begin(), other.blocks_.end());
  return SetPartition(std::move(blocks));
}

std::vector<std::size_t> SetPartition::block_sizes() const {
  std::vector<std::size_t> out;
  for (const LabelSet& b : blocks_) out.push_back(b.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::string SetPartition::to_string() const {
  const bool compact = std::all_of(ground_.begin(), ground_.end(),
                                   [](const Label& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) out += '|';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j > 0 && !compact) out += ',';
      out += blocks_[i][j];
    }
  }
  return out;
}

bool refines(const SetPartition& finer, const SetPartition& coarser) {
  if (finer.ground() != coarser.ground()) {
    throw std::invalid_argument("partitions are on different ground sets");
  }
  return std::all_of(finer.blocks().begin(), finer.blocks().end(), [&](const LabelSet& block) {
    return is_subset(block, coarser.blocks()[coarser.block_of(block.front())]);
  });
}

std::vector<SetPartition> enumerate_set_partitions(const LabelSet& ground) {
  // Restricted growth strings: label i goes to an existing block or opens
  // the next one.
  std::vector<SetPartition> out;
  if (ground.empty()) return out;
  std::vector<std::size_t> assignment(ground.size(), 0);
  while (true) {
    std::size_t blocks = *std::max_element(assignment.begin(), assignment.end()) + 1;
    std::vector<LabelSet> parts(blocks);
    for (std::size_t i = 0; i < ground.size(); ++i) parts[assignment[i]].push_back(ground[i]);
    out.emplace_back(std::move(parts));

    std::size_t i = ground.size();
    while (--i > 0) {
      const std::size_t prefix_max =
          *std::max_element(assignment.begin(), assignment.begin() + static_cast<long>(i));
      if (assignment[i] <= prefix_max) {
        ++assignment[i];
        std::fill(assignment.begin() + static_cast<long>(i) + 1, assignment.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

PartitionLattice partition_lattice(const LabelSet& ground) {
  auto elements = enumerate_set_partitions(ground);
  const std::size_t n = elements.size();
  std::vector<char> relation(n * n, 0);
  std::vector<int> corank(n);
  for (std::size_t a = 0; a < n; ++a) {
    corank[a] = static_cast<int>(elements[a].block_count()) - 1;
    for (std::size_t b = 0; b < n; ++b) relation[a * n + b] = refines(elements[a], elements[b]);
  }
  return {std::move(elements), FinitePoset(n, std::move(relation), std::move(corank))};
}

SetPartition comb_iso(const Forest& forest, const Tree& comb) {
  if (!is_comb(comb)) throw std::invalid_argument(comb.text() + " is not a comb");
  if (!leq(forest, Forest({comb}))) throw NotComparableError(forest, Forest({comb}));
  return SetPartition(forest.blocks());
}

UnivariatePolynomial partition_char_poly(int n) {
  if (n < 1) throw std::invalid_argument("partition_char_poly needs n >= 1");
  UnivariatePolynomial out(1);
  for (int k = 1; k < n; ++k) out = out * UnivariatePolynomial::linear_factor(k);
  return out;
}

}  // namespace forestposet
