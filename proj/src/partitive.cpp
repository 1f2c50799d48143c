#include "forestposet/partitive.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "forestposet/order.hpp"

namespace forestposet {

namespace {

int partition_rank(const SetPartition& p) {
  return static_cast<int>(p.ground().size()) - static_cast<int>(p.block_count());
}

int poset_rank(const FinitePoset& order, std::size_t a) {
  return order.corank(order.bottom()) - order.corank(a);
}

int infer_shift(const FinitePoset& order, const std::vector<SetPartition>& parts) {
  const std::size_t zero = order.bottom();
  if (zero == order.size()) throw std::invalid_argument("partitive poset needs a minimum");
  return partition_rank(parts[zero]) - poset_rank(order, zero);
}

void require_one_block_top(const PartitivePoset& p, const char* what) {
  const std::size_t top = p.order.top();
  if (top == p.size() || p.part_map[top].block_count() != 1) {
    throw std::invalid_argument(std::string(what) +
                                ": factor top must map to a one-block partition");
  }
}

std::string block_text(const LabelSet& block) {
  std::string out;
  for (std::size_t i = 0; i < block.size(); ++i) out += (i ? "," : "") + block[i];
  return out;
}

}  // namespace

std::string validate(const PartitivePoset& poset) {
  const auto& order = poset.order;
  if (poset.part_map.size() != order.size()) return "part_map size mismatch";
  if (order.bottom() == order.size()) return "no minimum";
  if (order.top() == order.size()) return "no maximum";
  for (std::size_t a = 0; a < order.size(); ++a) {
    if (poset.part_map[a].ground() != poset.ground) return "element maps outside the ground set";
    if (partition_rank(poset.part_map[a]) - poset_rank(order, a) != poset.rank_shift) {
      return "rank shift is not constant";
    }
    for (std::size_t b = 0; b < order.size(); ++b) {
      if (order.leq(a, b) && !refines(poset.part_map[a], poset.part_map[b])) {
        return "part_map is not order preserving";
      }
    }
  }
  return {};
}

PartitivePoset as_partitive(const Forest& lower, const Forest& upper) {
  IntervalPoset iv = interval(lower, upper);
  PartitivePoset out;
  out.ground = upper.labels();
  for (const Forest& f : iv.elements) {
    out.part_map.emplace_back(f.blocks());
    out.tags.push_back("F=" + f.text());
  }
  out.order = std::move(iv.order);
  out.rank_shift = infer_shift(out.order, out.part_map);
  return out;
}

PartitivePoset product(const PartitivePoset& p1, const PartitivePoset& p2) {
  if (!are_disjoint(p1.ground, p2.ground)) {
    throw std::invalid_argument("product: ground sets overlap");
  }
  const std::size_t n1 = p1.size();
  const std::size_t n2 = p2.size();
  const std::size_t n = n1 * n2;
  std::vector<char> relation(n * n, 0);
  std::vector<int> corank(n);
  PartitivePoset out;
  out.ground = set_union(p1.ground, p2.ground);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      const std::size_t a = i * n2 + j;
      corank[a] = p1.order.corank(i) + p2.order.corank(j);
      out.part_map.push_back(p1.part_map[i].disjoint_union(p2.part_map[j]));
      out.tags.push_back("(" + p1.tags[i] + "," + p2.tags[j] + ")");
      for (std::size_t k = 0; k < n1; ++k) {
        for (std::size_t l = 0; l < n2; ++l) {
          relation[a * n + k * n2 + l] = p1.order.leq(i, k) && p2.order.leq(j, l);
        }
      }
    }
  }
  out.order = FinitePoset(n, std::move(relation), std::move(corank));
  out.rank_shift = infer_shift(out.order, out.part_map);
  return out;
}

PartitivePoset twisted_product(const PartitivePoset& p1, const PartitivePoset& p2,
                               const LabelSet& k1, const LabelSet& k2) {
  require_one_block_top(p1, "twisted_product");
  require_one_block_top(p2, "twisted_product");
  const auto& bottom1 = p1.part_map[p1.order.bottom()].blocks();
  const auto& bottom2 = p2.part_map[p2.order.bottom()].blocks();
  if (std::find(bottom1.begin(), bottom1.end(), k1) == bottom1.end() ||
      std::find(bottom2.begin(), bottom2.end(), k2) == bottom2.end()) {
    throw std::invalid_argument("twisted_product: chosen parts are not blocks of the minimum");
  }
  PartitivePoset out = product(p1, p2);
  for (std::size_t a = 0; a < out.size(); ++a) {
    out.part_map[a] = out.part_map[a].merged(k1.front(), k2.front());
    out.tags[a] = "T" + out.tags[a];
  }
  out.rank_shift = infer_shift(out.order, out.part_map);
  return out;
}

PartitivePoset vee_product(const PartitivePoset& p1, const PartitivePoset& p2) {
  require_one_block_top(p1, "vee_product");
  require_one_block_top(p2, "vee_product");
  if (!are_disjoint(p1.ground, p2.ground)) {
    throw std::invalid_argument("vee_product: ground sets overlap");
  }

  struct Element {
    std::size_t a1;
    std::size_t a2;
    bool grafted;
    std::size_t j1;  // block indices, grafted elements only
    std::size_t j2;
  };
  std::vector<Element> elements;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    for (std::size_t j = 0; j < p2.size(); ++j) elements.push_back({i, j, false, 0, 0});
  }
  for (std::size_t i = 0; i < p1.size(); ++i) {
    for (std::size_t j = 0; j < p2.size(); ++j) {
      for (std::size_t b1 = 0; b1 < p1.part_map[i].block_count(); ++b1) {
        for (std::size_t b2 = 0; b2 < p2.part_map[j].block_count(); ++b2) {
          elements.push_back({i, j, true, b1, b2});
        }
      }
    }
  }

  const std::size_t n = elements.size();
  std::vector<char> relation(n * n, 0);
  std::vector<int> corank(n);
  PartitivePoset out;
  out.ground = set_union(p1.ground, p2.ground);
  for (std::size_t a = 0; a < n; ++a) {
    const Element& e = elements[a];
    const SetPartition joint = p1.part_map[e.a1].disjoint_union(p2.part_map[e.a2]);
    corank[a] = p1.order.corank(e.a1) + p2.order.corank(e.a2) + (e.grafted ? 0 : 1);
    if (e.grafted) {
      const LabelSet& block1 = p1.part_map[e.a1].blocks()[e.j1];
      const LabelSet& block2 = p2.part_map[e.a2].blocks()[e.j2];
      out.part_map.push_back(joint.merged(block1.front(), block2.front()));
      out.tags.push_back("G[" + p1.tags[e.a1] + ";" + p2.tags[e.a2] + ";" + block_text(block1) +
                         ";" + block_text(block2) + "]");
    } else {
      out.part_map.push_back(joint);
      out.tags.push_back("U[" + p1.tags[e.a1] + ";" + p2.tags[e.a2] + "]");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Element& e = elements[a];
    for (std::size_t b = 0; b < n; ++b) {
      const Element& f = elements[b];
      if (!p1.order.leq(e.a1, f.a1) || !p2.order.leq(e.a2, f.a2)) continue;
      if (e.grafted && !f.grafted) continue;
      if (e.grafted) {
        const LabelSet& j1 = p1.part_map[e.a1].blocks()[e.j1];
        const LabelSet& j2 = p2.part_map[e.a2].blocks()[e.j2];
        if (!is_subset(j1, p1.part_map[f.a1].blocks()[f.j1]) ||
            !is_subset(j2, p2.part_map[f.a2].blocks()[f.j2])) {
          continue;
        }
      }
      relation[a * n + b] = 1;
    }
  }
  out.order = FinitePoset(n, std::move(relation), std::move(corank));
  out.rank_shift = infer_shift(out.order, out.part_map);
  return out;
}

PartitivePoset rebuild_from_decomposition(const Forest& lower, const Forest& upper,
                                          bool recursive) {
  if (!leq(lower, upper)) throw NotComparableError(lower, upper);
  auto factor = [&](const Forest& f, const Tree& t) {
    const Forest tf({t});
    return recursive ? rebuild_from_decomposition(f, tf, true) : as_partitive(f, tf);
  };

  if (lower == upper) return as_partitive(lower, upper);
  if (upper.tree_count() >= 2) {
    std::optional<PartitivePoset> out;
    for (const TreeFactor& tf : split_by_trees(lower, upper)) {
      PartitivePoset p = factor(tf.lower, tf.upper);
      out = out ? product(*out, p) : std::move(p);
    }
    return *out;
  }
  const Tree& tree = upper.trees().front();
  const RootSplit split = split_at_root(lower, tree);
  PartitivePoset p1 = factor(split.left_lower, split.left_upper);
  PartitivePoset p2 = factor(split.right_lower, split.right_upper);
  if (split.root_marked) return twisted_product(p1, p2, split.left_part, split.right_part);
  return vee_product(p1, p2);
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::vector<std::size_t> refine_colors(const FinitePoset& a, const FinitePoset& b,
                                       const std::vector<std::string>& labels_a,
                                       const std::vector<std::string>& labels_b,
                                       std::size_t& class_count) {
  const std::size_t na = a.size();
  const std::size_t n = na + b.size();
  auto poset_of = [&](std::size_t v) -> const FinitePoset& { return v < na ? a : b; };
  auto local = [&](std::size_t v) { return v < na ? v : v - na; };

  std::vector<std::vector<std::size_t>> up(n);
  std::vector<std::vector<std::size_t>> down(n);
  for (const auto& [x, y] : a.covers()) {
    up[x].push_back(y);
    down[y].push_back(x);
  }
  for (const auto& [x, y] : b.covers()) {
    up[na + x].push_back(na + y);
    down[na + y].push_back(na + x);
  }

  std::vector<std::size_t> color(n);
  {
    std::map<std::string, std::size_t> ids;
    for (std::size_t v = 0; v < n; ++v) {
      const FinitePoset& p = poset_of(v);
      std::size_t below = 0;
      std::size_t above = 0;
      for (std::size_t w = 0; w < p.size(); ++w) {
        below += p.less(w, local(v)) ? 1 : 0;
        above += p.less(local(v), w) ? 1 : 0;
      }
      std::string sig = std::to_string(p.corank(local(v))) + "/" + std::to_string(below) + "/" +
                        std::to_string(above);
      const auto& labels = v < na ? labels_a : labels_b;
      if (!labels.empty()) sig += "/" + labels[local(v)];
      color[v] = ids.try_emplace(sig, ids.size()).first->second;
    }
    class_count = ids.size();
  }

  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> sig{color[v]};
      std::vector<std::size_t> ups;
      std::vector<std::size_t> downs;
      for (std::size_t w : up[v]) ups.push_back(color[w]);
      for (std::size_t w : down[v]) downs.push_back(color[w]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      sig.push_back(ups.size());
      sig.insert(sig.end(), ups.begin(), ups.end());
      sig.push_back(downs.size());
      sig.insert(sig.end(), downs.begin(), downs.end());
      next[v] = ids.try_emplace(sig, ids.size()).first->second;
    }
    const std::size_t count = ids.size();
    color = std::move(next);
    if (count == class_count) break;
    class_count = count;
  }
  return color;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& a,
                                                         const FinitePoset& b,
                                                         const std::vector<std::string>& labels_a,
                                                         const std::vector<std::string>& labels_b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.covers().size() != b.covers().size()) return std::nullopt;
  if (n == 0) return std::vector<std::size_t>{};

  std::size_t classes = 0;
  const auto color = refine_colors(a, b, labels_a, labels_b, classes);
  std::vector<std::size_t> histogram_a(classes, 0);
  std::vector<std::size_t> histogram_b(classes, 0);
  for (std::size_t v = 0; v < n; ++v) {
    ++histogram_a[color[v]];
    ++histogram_b[color[n + v]];
  }
  if (histogram_a != histogram_b) return std::nullopt;

  // Assign rare colors first, then bottom-up within equal rarity.
  std::vector<std::size_t> order = a.linear_extension();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return histogram_a[color[x]] < histogram_a[color[y]];
  });

  std::vector<std::size_t> map(n, n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || color[n + w] != color[v]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const std::size_t u = order[k];
        consistent = a.leq(u, v) == b.leq(map[u], w) && a.leq(v, u) == b.leq(w, map[u]);
      }
      if (!consistent) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
    }
    map[v] = n;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

bool poset_isomorphic(const FinitePoset& a, const FinitePoset& b) {
  return find_isomorphism(a, b).has_value();
}

namespace {

std::vector<std::string> block_size_labels(const PartitivePoset& p) {
  std::vector<std::string> out;
  for (const SetPartition& part : p.part_map) {
    std::string s;
    for (std::size_t k : part.block_sizes()) s += std::to_string(k) + ",";
    out.push_back(s);
  }
  return out;
}

// Each element's partition as a partition of the minimum's blocks.
using PointPartition = std::vector<std::vector<std::size_t>>;

std::vector<PointPartition> quotient_partitions(const PartitivePoset& p, std::size_t& points) {
  const SetPartition& base = p.part_map[p.order.bottom()];
  points = base.block_count();
  std::vector<PointPartition> out;
  for (const SetPartition& part : p.part_map) {
    PointPartition q;
    for (const LabelSet& block : part.blocks()) {
      std::vector<std::size_t> members;
      for (const Label& l : block) members.push_back(base.block_of(l));
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      q.push_back(std::move(members));
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::string encode(const PointPartition& q, const std::vector<std::size_t>& relabel) {
  PointPartition mapped;
  for (const auto& block : q) {
    std::vector<std::size_t> m;
    for (std::size_t v : block) m.push_back(relabel[v]);
    std::sort(m.begin(), m.end());
    mapped.push_back(std::move(m));
  }
  std::sort(mapped.begin(), mapped.end());
  std::string s;
  for (const auto& block : mapped) {
    for (std::size_t v : block) s += std::to_string(v) + ".";
    s += "|";
  }
  return s;
}

std::vector<std::string> point_size_labels(const std::vector<PointPartition>& qs) {
  std::vector<std::string> out;
  for (const auto& q : qs) {
    std::vector<std::size_t> sizes;
    for (const auto& block : q) sizes.push_back(block.size());
    std::sort(sizes.begin(), sizes.end());
    std::string s;
    for (std::size_t k : sizes) s += std::to_string(k) + ",";
    out.push_back(s);
  }
  return out;
}

}  // namespace

bool partitive_isomorphic(const PartitivePoset& a, const PartitivePoset& b,
                          PartitiveMatch match) {
  if (a.size() != b.size()) return false;
  if (match == PartitiveMatch::kBlockSizes) {
    return find_isomorphism(a.order, b.order, block_size_labels(a), block_size_labels(b))
        .has_value();
  }
  if (a.size() == 0) return true;
  std::size_t points_a = 0;
  std::size_t points_b = 0;
  const auto qa = quotient_partitions(a, points_a);
  const auto qb = quotient_partitions(b, points_b);
  if (points_a != points_b) return false;
  if (!find_isomorphism(a.order, b.order, point_size_labels(qa), point_size_labels(qb))) {
    return false;
  }
  std::vector<std::size_t> identity(points_b);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::string> labels_b;
  for (const auto& q : qb) labels_b.push_back(encode(q, identity));
  std::vector<std::size_t> relabel = identity;
  do {
    std::vector<std::string> labels_a;
    for (const auto& q : qa) labels_a.push_back(encode(q, relabel));
    if (find_isomorphism(a.order, b.order, labels_a, labels_b)) return true;
  } while (std::next_permutation(relabel.begin(), relabel.end()));
  return false;
}

}  // namespace forestposet
