#pragma once

// Set partitions under refinement, used as an oracle that shares no code with
// the forest machinery, plus the comb isomorphism [E, C] -> Pi_I.

#include <string>
#include <vector>

#include "forestposet/forest.hpp"
#include "forestposet/polynomial.hpp"
#include "forestposet/poset.hpp"

namespace forestposet {

class SetPartition {
 public:
  SetPartition() = default;
  // Blocks must be nonempty and pairwise disjoint; they are sorted on entry.
  explicit SetPartition(std::vector<LabelSet> blocks);

  static SetPartition finest(const LabelSet& ground);
  static SetPartition coarsest(const LabelSet& ground);

  const std::vector<LabelSet>& blocks() const { return blocks_; }
  const LabelSet& ground() const { return ground_; }
  std::size_t block_count() const { return blocks_.size(); }

  // Index of the block holding `label`; throws when absent.
  std::size_t block_of(const Label& label) const;
  // Merge the blocks holding `a` and `b`.
  SetPartition merged(const Label& a, const Label& b) const;
  // Disjoint union of partitions on disjoint grounds.
  SetPartition disjoint_union(const SetPartition& other) const;

  std::vector<std::size_t> block_sizes() const;

  // Blocks joined by '|'. Labels inside a block are concatenated when all
  // labels are single characters ("ab|c"), comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ == b.blocks_;
  }
  friend bool operator<(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ < b.blocks_;
  }

 private:
  std::vector<LabelSet> blocks_;
  LabelSet ground_;
};

// Throws std::invalid_argument on ground-set mismatch.
bool refines(const SetPartition& finer, const SetPartition& coarser);

std::vector<SetPartition> enumerate_set_partitions(const LabelSet& ground);

// Pi_I with corank = block count - 1.
struct PartitionLattice {
  std::vector<SetPartition> elements;
  FinitePoset order;
};
PartitionLattice partition_lattice(const LabelSet& ground);

// Leaf-set partition of F, for F below the comb C.
SetPartition comb_iso(const Forest& forest, const Tree& comb);

// prod_{k=1}^{n-1} (y - k)
UnivariatePolynomial partition_char_poly(int n);

}  // namespace forestposet
