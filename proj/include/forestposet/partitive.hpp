#pragma once

// Partitive posets: ranked posets with 0 and 1 together with a rank-compatible
// map into the partition lattice of a ground set. Intervals of For(I) are
// partitive through the leaf-set partition of each forest, and the three
// interval decompositions correspond to the product, the twisted product and
// the vee-product defined here.

#include <optional>
#include <string>
#include <vector>

#include "forestposet/forest.hpp"
#include "forestposet/partition.hpp"
#include "forestposet/poset.hpp"

namespace forestposet {

struct PartitivePoset {
  FinitePoset order;
  LabelSet ground;
  std::vector<SetPartition> part_map;
  // Partition rank (|ground| - blocks) minus poset rank, constant over the
  // poset. Poset rank is corank(bottom) - corank(a).
  int rank_shift = 0;
  // Provenance of each element, e.g. "F=(a,b)|c" or "G[(0,1);a;c]".
  std::vector<std::string> tags;

  std::size_t size() const { return order.size(); }
};

// Empty string when the invariants hold, otherwise a description.
std::string validate(const PartitivePoset& poset);

PartitivePoset as_partitive(const Forest& lower, const Forest& upper);

// Throws std::invalid_argument when the grounds overlap.
PartitivePoset product(const PartitivePoset& p1, const PartitivePoset& p2);

// Product poset whose partitions merge the blocks containing k1 and k2.
// Each factor's top must map to a one-block partition and k_i must be a block
// of the image of its bottom.
PartitivePoset twisted_product(const PartitivePoset& p1, const PartitivePoset& p2,
                               const LabelSet& k1, const LabelSet& k2);

// Elements a1 u a2 (pairs) and G(a1, J1, a2, J2) (pairs plus one block of
// each image), ordered by
//   u <= u'  iff a1 <= a1' and a2 <= a2'
//   G <= G'  iff a1 <= a1', a2 <= a2', J1 in J1' and J2 in J2'
//   u <= G'  iff a1 <= a1' and a2 <= a2'
// and never G <= u.
PartitivePoset vee_product(const PartitivePoset& p1, const PartitivePoset& p2);

// Rebuild [lower, upper] abstractly from its decomposition. With
// `recursive` the factors are rebuilt the same way, otherwise they are the
// concrete sub-intervals.
PartitivePoset rebuild_from_decomposition(const Forest& lower, const Forest& upper,
                                          bool recursive);

// Backtracking search seeded by color refinement on (corank, up/down cover
// degrees). Returns the map from elements of `a` to elements of `b`.
std::optional<std::vector<std::size_t>> find_isomorphism(
    const FinitePoset& a, const FinitePoset& b, const std::vector<std::string>& labels_a = {},
    const std::vector<std::string>& labels_b = {});

bool poset_isomorphic(const FinitePoset& a, const FinitePoset& b);

enum class PartitiveMatch {
  // Collapse each block of the minimum's partition to a point; a poset
  // isomorphism must carry every partition onto its image under one
  // relabeling of those points.
  kQuotientRelabeling,
  // Matched elements must have equal block-size multisets.
  kBlockSizes,
};

bool partitive_isomorphic(const PartitivePoset& a, const PartitivePoset& b,
                          PartitiveMatch match = PartitiveMatch::kQuotientRelabeling);

}  // namespace forestposet
