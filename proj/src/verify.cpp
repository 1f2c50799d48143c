#include "forestposet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "forestposet/forest.hpp"
#include "forestposet/invariants.hpp"
#include "forestposet/order.hpp"
#include "forestposet/partition.hpp"
#include "forestposet/partitive.hpp"
#include "forestposet/recursion.hpp"

namespace forestposet {

namespace {

constexpr std::size_t kMaxReportedFailures = 20;

std::string bracket(const Forest& lower, const Forest& upper) {
  return "[" + lower.text() + ", " + upper.text() + "]";
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double milliseconds() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Calls `visit` for every interval [F, G] with G on 1..max_labels labels.
void for_each_interval(int max_labels,
                       const std::function<void(const DownSet&, std::size_t)>& visit) {
  for (int n = 1; n <= max_labels; ++n) {
    for (const Forest& upper : enumerate_forests(letters(static_cast<std::size_t>(n)))) {
      const DownSet down(upper);
      for (std::size_t i = 0; i < down.size(); ++i) visit(down, i);
    }
  }
}

std::uint64_t double_factorial(int k) {
  std::uint64_t out = 1;
  for (int i = k; i > 1; i -= 2) out *= static_cast<std::uint64_t>(i);
  return out;
}

std::uint64_t tree_count(int n) { return n <= 1 ? 1 : double_factorial(2 * n - 3); }

std::uint64_t binomial(int n, int k) {
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / i;
  return out;
}

// Exponential formula: the block holding the first label has size k.
std::uint64_t forest_count(int n) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1; k <= m; ++k) {
      a[m] += binomial(m - 1, k - 1) * tree_count(k) * a[m - k];
    }
  }
  return a[n];
}

std::uint64_t bell(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.back();
}

}  // namespace

void CheckResult::fail(const std::string& what) {
  passed = false;
  if (failures.size() < kMaxReportedFailures) failures.push_back(what);
}

CheckResult check_comb_factorization(int max_fast, int max_brute) {
  Timer timer;
  CheckResult r{"comb factorization", true, {}, {}, 0};
  for (int n = 2; n <= max_fast; ++n) {
    const LabelSet labels = letters(static_cast<std::size_t>(n));
    const Forest comb({make_comb(labels)});
    const auto expected = partition_char_poly(n);
    const MarkedTreePair pair(comb, {});
    if (chi_fast(pair) != expected) r.fail("chi_fast " + comb.text());
    if (n <= max_brute) {
      const auto iv = interval(Forest::discrete(labels), comb);
      if (characteristic_polynomial(iv.order) != expected) r.fail("brute chi " + comb.text());
    }
  }
  r.detail = "n = 2.." + std::to_string(max_fast) + " fast, brute through " +
             std::to_string(max_brute);
  r.milliseconds = timer.milliseconds();
  return r;
}

std::vector<CheckResult> check_interval_sweep(int max_labels) {
  Timer timer;
  std::vector<CheckResult> results{
      {"oracle equivalence (Z, M, chi, mu)", true, {}, {}, 0},
      {"M(x,1) = 1", true, {}, {}, 0},
      {"chi roots = exponents", true, {}, {}, 0},
      {"rank property", true, {}, {}, 0},
      {"product law", true, {}, {}, 0},
      {"exponent formula consistency", true, {}, {}, 0},
      {"degree bookkeeping", true, {}, {}, 0},
      {"cardinal polynomial", true, {}, {}, 0},
      {"Moebius row sums", true, {}, {}, 0},
  };
  auto& oracle = results[0];
  auto& m_at_one = results[1];
  auto& roots = results[2];
  auto& ranked = results[3];
  auto& product_law = results[4];
  auto& from_exponents = results[5];
  auto& degrees = results[6];
  auto& cardinal = results[7];
  auto& row_sums = results[8];

  FastEvaluator fast;
  std::size_t intervals = 0;
  std::size_t products = 0;
  for_each_interval(max_labels, [&](const DownSet& down, std::size_t index) {
    ++intervals;
    const IntervalPoset iv = down.interval_from(index);
    const std::string where = bracket(iv.lower, iv.upper);
    const FinitePoset& p = iv.order;
    const MobiusTable mu(p);
    const std::size_t zero = p.bottom();
    const std::size_t one = p.top();

    const auto m_brute = m_polynomial(p);
    const auto z_brute = z_polynomial(p);
    const auto chi_brute = characteristic_polynomial(p);
    const MarkedTreePair pair = marked_pair(iv.lower, iv.upper);
    const auto m_rec = fast.m(pair);
    const auto z_rec = fast.z(pair);
    const auto chi_rec = chi_fast(pair);
    const auto mu_rec = mobius_fast(pair);
    if (m_rec != m_brute || z_rec != z_brute || chi_rec != chi_brute || mu_rec != mu(zero, one)) {
      oracle.fail(where);
    }

    if (m_brute.at_y_one() != UnivariatePolynomial(1) ||
        m_rec.at_y_one() != UnivariatePolynomial(1)) {
      m_at_one.fail(where);
    }

    const auto exps = exponents(pair);
    UnivariatePolynomial rest = chi_brute;
    bool divides = std::all_of(exps.begin(), exps.end(), [](long long e) { return e >= 1; });
    for (long long e : exps) {
      if (!divides) break;
      auto q = rest.divide_by_linear(e);
      if (!q) {
        divides = false;
      } else {
        rest = *q;
      }
    }
    if (!divides || rest != UnivariatePolynomial(1)) roots.fail(where);

    auto covers = p.covers();
    auto reduction = p.transitive_reduction();
    std::sort(covers.begin(), covers.end());
    std::sort(reduction.begin(), reduction.end());
    if (!check_ranked(iv) || covers != reduction) ranked.fail(where);

    if (iv.upper.tree_count() >= 2) {
      ++products;
      BivariatePolynomial m_prod(1);
      BivariatePolynomial z_prod(1);
      for (const TreeFactor& f : split_by_trees(iv.lower, iv.upper)) {
        const auto sub = interval(f.lower, Forest({f.upper}));
        m_prod = m_prod * m_polynomial(sub.order);
        z_prod = z_prod * z_polynomial(sub.order);
      }
      if (m_prod != m_brute || z_prod != z_brute) product_law.fail(where);
    }

    if (fast.chi_by_exponents(pair) != chi_rec || mobius_from_exponents(pair) != mu_rec) {
      from_exponents.fail(where);
    }

    const auto tree = decompose(pair);
    const std::size_t degree = iv.degree();
    if (count_special_nodes(tree) != degree || pair.unmarked_count() != degree ||
        exps.size() != degree || chi_brute.degree() != static_cast<int>(degree) ||
        !chi_brute.is_monic() || p.corank(zero) != static_cast<int>(degree)) {
      degrees.fail(where);
    }

    UnivariatePolynomial card_direct;
    for (const Forest& f : iv.elements) {
      card_direct += UnivariatePolynomial::monomial(
          static_cast<int>(f.tree_count() - iv.upper.tree_count()));
    }
    const auto card = cardinal_polynomial(p);
    if (card != card_direct || card.eval(1) != BigInt(iv.elements.size())) cardinal.fail(where);

    BigInt sum = 0;
    for (std::size_t c = 0; c < p.size(); ++c) sum += mu(zero, c);
    bool vanishes = p.size() == 1 ? sum == 1 : sum == 0;
    for (long long e : exps) vanishes = vanishes && chi_brute.eval(e) == 0;
    if (!vanishes) row_sums.fail(where);
  });

  const std::string summary =
      std::to_string(intervals) + " intervals, |I| <= " + std::to_string(max_labels);
  const double ms = timer.milliseconds();
  for (auto& r : results) {
    r.detail = summary;
    r.milliseconds = ms;
  }
  product_law.detail = std::to_string(products) + " forest-topped intervals, |I| <= " +
                       std::to_string(max_labels);
  return results;
}

CheckResult check_sampled_oracle(int labels, std::size_t samples, std::uint64_t seed) {
  Timer timer;
  CheckResult r{"sampled oracle equivalence", true, {}, {}, 0};
  std::mt19937_64 rng(seed);
  const auto forests = enumerate_forests(letters(static_cast<std::size_t>(labels)));
  for (std::size_t s = 0; s < samples; ++s) {
    const Forest& upper = forests[rng() % forests.size()];
    const auto below = lower_set(upper);
    const Forest& lower = below[rng() % below.size()];
    const auto iv = interval(lower, upper);
    const auto pair = marked_pair(lower, upper);
    const auto& p = iv.order;
    if (m_fast(pair) != m_polynomial(p) || z_fast(pair) != z_polynomial(p) ||
        chi_fast(pair) != characteristic_polynomial(p) ||
        mobius_fast(pair) != mobius(p, p.bottom(), p.top())) {
      r.fail(bracket(lower, upper));
    }
  }
  r.detail = std::to_string(samples) + " intervals on " + std::to_string(labels) +
             " labels, seed " + std::to_string(seed);
  r.milliseconds = timer.milliseconds();
  return r;
}

CheckResult check_order_axioms(int exhaustive_labels, int sampled_labels, std::size_t samples,
                               std::uint64_t seed) {
  Timer timer;
  CheckResult r{"order axioms", true, {}, {}, 0};
  std::size_t triples = 0;
  for (int n = 1; n <= exhaustive_labels; ++n) {
    const auto forests = enumerate_forests(letters(static_cast<std::size_t>(n)));
    const std::size_t k = forests.size();
    std::vector<char> rel(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) rel[a * k + b] = leq(forests[a], forests[b]);
    }
    for (std::size_t a = 0; a < k; ++a) {
      if (!rel[a * k + a]) r.fail("reflexivity " + forests[a].text());
      for (std::size_t b = 0; b < k; ++b) {
        if (a == b || !rel[a * k + b]) continue;
        if (rel[b * k + a]) r.fail("antisymmetry " + bracket(forests[a], forests[b]));
        if (forests[a].inner_count() >= forests[b].inner_count()) {
          r.fail("strict cardinality " + bracket(forests[a], forests[b]));
        }
        for (std::size_t c = 0; c < k; ++c) {
          ++triples;
          if (rel[b * k + c] && !rel[a * k + c]) {
            r.fail("transitivity " + forests[a].text() + " <= " + forests[b].text() +
                   " <= " + forests[c].text());
          }
        }
      }
    }
  }

  if (sampled_labels > 0) {
    std::mt19937_64 rng(seed);
    const auto forests = enumerate_forests(letters(static_cast<std::size_t>(sampled_labels)));
    for (std::size_t s = 0; s < samples; ++s) {
      // A random chain c >= b >= a, plus a random unrelated pair.
      const Forest& c = forests[rng() % forests.size()];
      const auto below_c = lower_set(c);
      const Forest& b = below_c[rng() % below_c.size()];
      const auto below_b = lower_set(b);
      const Forest& a = below_b[rng() % below_b.size()];
      if (!leq(a, c)) r.fail("transitivity " + a.text() + " <= " + b.text() + " <= " + c.text());
      const Forest& x = forests[rng() % forests.size()];
      const Forest& y = forests[rng() % forests.size()];
      if (!leq(x, x)) r.fail("reflexivity " + x.text());
      if (!(x == y) && leq(x, y) && leq(y, x)) r.fail("antisymmetry " + bracket(x, y));
      if (!(x == y) && leq(x, y) && x.inner_count() >= y.inner_count()) {
        r.fail("strict cardinality " + bracket(x, y));
      }
    }
  }
  r.detail = "exhaustive |I| <= " + std::to_string(exhaustive_labels) + " (" +
             std::to_string(triples) + " chains checked)";
  if (sampled_labels > 0) {
    r.detail += ", " + std::to_string(samples) + " samples at |I| = " +
                std::to_string(sampled_labels);
  }
  r.milliseconds = timer.milliseconds();
  return r;
}

CheckResult check_lower_sets(int max_labels) {
  Timer timer;
  CheckResult r{"leq agrees with lower_set", true, {}, {}, 0};
  std::size_t pairs = 0;
  for (int n = 1; n <= max_labels; ++n) {
    const auto forests = enumerate_forests(letters(static_cast<std::size_t>(n)));
    for (const Forest& g : forests) {
      const auto below = lower_set(g);
      const std::set<Forest> members(below.begin(), below.end());
      if (members.size() != below.size()) r.fail("duplicate in lower_set " + g.text());
      for (const Forest& f : forests) {
        ++pairs;
        if (leq(f, g) != (members.count(f) == 1)) r.fail(bracket(f, g));
      }
    }
  }
  r.detail = std::to_string(pairs) + " pairs, |I| <= " + std::to_string(max_labels);
  r.milliseconds = timer.milliseconds();
  return r;
}

CheckResult check_marked_vertices(int max_labels) {
  Timer timer;
  CheckResult r{"marked vertices", true, {}, {}, 0};
  for (int n = 1; n <= max_labels; ++n) {
    for (const Forest& g : enumerate_forests(letters(static_cast<std::size_t>(n)))) {
      const DownSet down(g);
      std::vector<std::vector<VertexId>> marks;
      for (const Forest& f : down.elements()) marks.push_back(marked_vertices(f, g));
      std::map<std::vector<VertexId>, UnivariatePolynomial> chi_by_marks;
      for (std::size_t a = 0; a < down.size(); ++a) {
        const Forest& f = down.elements()[a];
        if (marks[a].size() != f.inner_count()) r.fail("cardinality " + bracket(f, g));
        for (std::size_t b = 0; b < down.size(); ++b) {
          if (down.leq(a, b) && !std::includes(marks[b].begin(), marks[b].end(),
                                               marks[a].begin(), marks[a].end())) {
            r.fail("monotonicity " + f.text() + " <= " + down.elements()[b].text() + " <= " +
                   g.text());
          }
        }
        const auto chi = characteristic_polynomial(down.interval_from(a).order);
        auto [it, inserted] = chi_by_marks.try_emplace(marks[a], chi);
        if (!inserted && it->second != chi) r.fail("exponent invariance " + bracket(f, g));
        if (chi_fast(MarkedTreePair(g, marks[a])) != chi) r.fail("exponents " + bracket(f, g));
      }
    }
  }
  r.detail = "|I| <= " + std::to_string(max_labels);
  r.milliseconds = timer.milliseconds();
  return r;
}

namespace {

struct MarkedGroups {
  Forest upper;
  std::vector<std::vector<Forest>> groups;  // only groups with >= 2 members
};

MarkedGroups group_by_marks(const Forest& upper) {
  std::map<std::vector<VertexId>, std::vector<Forest>> by_marks;
  for (const Forest& f : lower_set(upper)) by_marks[marked_vertices(f, upper)].push_back(f);
  MarkedGroups out{upper, {}};
  for (auto& [marks, members] : by_marks) {
    if (members.size() >= 2) out.groups.push_back(std::move(members));
  }
  return out;
}

}  // namespace

CheckResult check_classification(int exhaustive_labels, int sampled_labels, std::size_t samples,
                                 std::uint64_t seed) {
  Timer timer;
  CheckResult r{"classification by (F', V)", true, {}, {}, 0};
  std::size_t exhaustive_pairs = 0;
  std::size_t size_mismatches = 0;
  std::string first_mismatch;
  auto compare = [&](const PartitivePoset& a, const PartitivePoset& b, const std::string& where) {
    if (!partitive_isomorphic(a, b)) r.fail(where);
    if (!partitive_isomorphic(a, b, PartitiveMatch::kBlockSizes) && size_mismatches++ == 0) {
      first_mismatch = where;
    }
  };
  for (int n = 1; n <= exhaustive_labels; ++n) {
    for (const Forest& g : enumerate_forests(letters(static_cast<std::size_t>(n)))) {
      const MarkedGroups grouped = group_by_marks(g);
      for (const auto& group : grouped.groups) {
        std::vector<PartitivePoset> posets;
        for (const Forest& f : group) posets.push_back(as_partitive(f, g));
        for (std::size_t i = 0; i < group.size(); ++i) {
          for (std::size_t j = i + 1; j < group.size(); ++j) {
            ++exhaustive_pairs;
            compare(posets[i], posets[j], bracket(group[i], g) + " vs " + bracket(group[j], g));
          }
        }
      }
    }
  }

  std::size_t sampled = 0;
  if (sampled_labels > 0 && samples > 0) {
    std::vector<std::pair<Forest, std::vector<Forest>>> pool;
    for (const Forest& g : enumerate_forests(letters(static_cast<std::size_t>(sampled_labels)))) {
      MarkedGroups grouped = group_by_marks(g);
      for (auto& group : grouped.groups) pool.emplace_back(g, std::move(group));
    }
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples && !pool.empty(); ++s) {
      const auto& [g, group] = pool[rng() % pool.size()];
      const std::size_t i = rng() % group.size();
      std::size_t j = rng() % (group.size() - 1);
      if (j >= i) ++j;
      ++sampled;
      compare(as_partitive(group[i], g), as_partitive(group[j], g),
              bracket(group[i], g) + " vs " + bracket(group[j], g));
    }
  }
  r.detail = std::to_string(exhaustive_pairs) + " pairs exhaustive |I| <= " +
             std::to_string(exhaustive_labels);
  if (sampled_labels > 0) {
    r.detail += ", " + std::to_string(sampled) + " sampled pairs at |I| = " +
                std::to_string(sampled_labels) + " (seed " + std::to_string(seed) + ")";
  }
  r.detail += "; equal block sizes fail on " + std::to_string(size_mismatches) + " pairs";
  if (size_mismatches > 0) r.detail += ", first " + first_mismatch;
  r.milliseconds = timer.milliseconds();
  return r;
}

CheckResult check_decomposition_isomorphisms(int max_labels) {
  Timer timer;
  CheckResult r{"decomposition isomorphisms", true, {}, {}, 0};
  std::size_t counts[3] = {0, 0, 0};
  std::size_t size_mismatches = 0;
  for_each_interval(max_labels, [&](const DownSet& down, std::size_t index) {
    const Forest& lower = down.elements()[index];
    const Forest& upper = down.upper();
    if (lower == upper) return;
    const std::string where = bracket(lower, upper);
    const PartitivePoset concrete = as_partitive(lower, upper);
    const PartitivePoset one_level = rebuild_from_decomposition(lower, upper, false);
    const PartitivePoset recursive = rebuild_from_decomposition(lower, upper, true);
    for (const auto* p : {&concrete, &one_level, &recursive}) {
      const std::string problem = validate(*p);
      if (!problem.empty()) r.fail(where + ": " + problem);
    }
    if (!partitive_isomorphic(concrete, one_level)) r.fail(where + " one level");
    if (!partitive_isomorphic(concrete, recursive)) r.fail(where + " recursive");
    if (!partitive_isomorphic(concrete, one_level, PartitiveMatch::kBlockSizes) ||
        !partitive_isomorphic(concrete, recursive, PartitiveMatch::kBlockSizes)) {
      ++size_mismatches;
    }

    if (upper.tree_count() >= 2) {
      ++counts[0];
      return;
    }
    const RootSplit split = split_at_root(lower, upper.trees().front());
    if (split.root_marked) {
      ++counts[1];
      return;
    }
    ++counts[2];
    if (z_polynomial(one_level.order) != z_polynomial(concrete.order) ||
        m_polynomial(one_level.order) != m_polynomial(concrete.order)) {
      r.fail(where + " vee-product polynomials");
    }
    const auto p1 = as_partitive(split.left_lower, Forest({split.left_upper}));
    const auto p2 = as_partitive(split.right_lower, Forest({split.right_upper}));
    std::size_t expected = p1.size() * p2.size();
    for (std::size_t a = 0; a < p1.size(); ++a) {
      for (std::size_t b = 0; b < p2.size(); ++b) {
        expected += p1.part_map[a].block_count() * p2.part_map[b].block_count();
      }
    }
    if (concrete.size() != expected) r.fail(where + " vee-product size");
  });
  r.detail = std::to_string(counts[0]) + " products, " + std::to_string(counts[1]) +
             " twisted, " + std::to_string(counts[2]) + " vee-products, |I| <= " +
             std::to_string(max_labels) + "; equal block sizes fail on " +
             std::to_string(size_mismatches);
  r.milliseconds = timer.milliseconds();
  return r;
}

CheckResult find_non_semimodular(int labels) {
  Timer timer;
  CheckResult r{"non-semimodular witness", false, {}, {}, 0};
  std::size_t checked = 0;
  std::size_t found = 0;
  for (const Forest& upper : enumerate_forests(letters(static_cast<std::size_t>(labels)))) {
    const DownSet down(upper);
    for (std::size_t i = 0; i < down.size(); ++i) {
      ++checked;
      const auto iv = down.interval_from(i);
      const auto violation = semimodularity_violation(iv.order);
      if (!violation) continue;
      if (found++ == 0) {
        r.detail = bracket(iv.lower, iv.upper) + " with x = " +
                   iv.elements[violation->first].text() +
                   ", y = " + iv.elements[violation->second].text();
      }
    }
  }
  r.passed = found > 0;
  r.detail = std::to_string(found) + " of " + std::to_string(checked) +
             " intervals not semimodular" + (found ? "; first: " + r.detail : std::string());
  if (!r.passed) r.failures.push_back("no non-semimodular interval found");
  r.milliseconds = timer.milliseconds();
  return r;
}

CheckResult check_counting(int max_tree_labels, int max_forest_labels, int max_comb_labels) {
  Timer timer;
  CheckResult r{"counting", true, {}, {}, 0};
  for (int n = 1; n <= max_tree_labels; ++n) {
    const auto count = enumerate_trees(letters(static_cast<std::size_t>(n))).size();
    if (count != tree_count(n)) r.fail("trees n=" + std::to_string(n));
  }
  for (int n = 1; n <= max_forest_labels; ++n) {
    const auto count = enumerate_forests(letters(static_cast<std::size_t>(n))).size();
    if (count != forest_count(n)) r.fail("forests n=" + std::to_string(n));
  }
  for (int n = 1; n <= max_comb_labels; ++n) {
    const LabelSet labels = letters(static_cast<std::size_t>(n));
    const auto iv = interval(Forest::discrete(labels), Forest({make_comb(labels)}));
    if (iv.elements.size() != bell(n)) r.fail("[E, comb] n=" + std::to_string(n));
  }
  r.detail = "trees n <= " + std::to_string(max_tree_labels) + ", forests n <= " +
             std::to_string(max_forest_labels) + ", combs n <= " +
             std::to_string(max_comb_labels);
  r.milliseconds = timer.milliseconds();
  return r;
}

CheckResult check_partition_lattice(int max_labels, int max_fast_labels) {
  Timer timer;
  CheckResult r{"partition lattice", true, {}, {}, 0};
  for (int n = 1; n <= max_labels; ++n) {
    const LabelSet labels = letters(static_cast<std::size_t>(n));
    const Tree comb = make_comb(labels);
    const auto iv = interval(Forest::discrete(labels), Forest({comb}));
    std::vector<SetPartition> images;
    for (const Forest& f : iv.elements) images.push_back(comb_iso(f, comb));
    std::vector<SetPartition> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    auto all = enumerate_set_partitions(labels);
    std::sort(all.begin(), all.end());
    if (sorted != all) r.fail("comb_iso not bijective on " + comb.text());
    for (std::size_t a = 0; a < images.size(); ++a) {
      for (std::size_t b = 0; b < images.size(); ++b) {
        if (iv.order.leq(a, b) != refines(images[a], images[b])) {
          r.fail("comb_iso order " + bracket(iv.elements[a], iv.elements[b]));
        }
      }
    }

    // Exactly one comb on each J embeds into the comb on I.
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      LabelSet subset;
      LabelSet rest;
      for (int i = 0; i < n; ++i) ((mask >> i) & 1U ? subset : rest).push_back(labels[i]);
      std::size_t embedded = 0;
      for (const Tree& t : enumerate_trees(subset)) {
        if (!is_comb(t)) continue;
        std::vector<Tree> trees{t};
        for (const Label& l : rest) trees.push_back(Tree::leaf(l));
        if (leq(Forest(std::move(trees)), Forest({comb}))) ++embedded;
      }
      if (embedded != 1) r.fail("comb embeddings on subset " + std::to_string(mask));
    }

    const auto lattice = partition_lattice(labels);
    if (characteristic_polynomial(lattice.order) != partition_char_poly(n)) {
      r.fail("Pi_" + std::to_string(n) + " characteristic polynomial");
    }
  }
  for (int n = 1; n <= max_fast_labels; ++n) {
    const Forest comb({make_comb(letters(static_cast<std::size_t>(n)))});
    if (chi_fast(MarkedTreePair(comb, {})) != partition_char_poly(n)) {
      r.fail("chi_fast " + comb.text());
    }
  }
  r.detail = "|I| <= " + std::to_string(max_labels) + ", chi_fast through " +
             std::to_string(max_fast_labels);
  r.milliseconds = timer.milliseconds();
  return r;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const int n = options.max_labels;
  if (n < 2 || n > 6) throw std::invalid_argument("--max-labels must be between 2 and 6");
  const int exhaustive = std::min(n, 5);
  const int small = std::min(exhaustive, 4);
  const int sampled = n >= 5 ? 5 : 0;

  std::vector<CheckResult> out;
  out.push_back(check_counting(std::min(7, n + 2), std::min(6, n + 1), std::min(6, n + 1)));
  out.push_back(check_comb_factorization(std::min(7, n + 2), exhaustive));
  for (auto& r : check_interval_sweep(exhaustive)) out.push_back(std::move(r));
  if (n == 6) out.push_back(check_sampled_oracle(6, options.sampled_intervals, options.seed));
  out.push_back(check_order_axioms(small, sampled, options.sampled_intervals, options.seed));
  out.push_back(check_lower_sets(exhaustive));
  out.push_back(check_marked_vertices(exhaustive));
  out.push_back(
      check_classification(small, sampled, options.classification_samples, options.seed));
  out.push_back(check_decomposition_isomorphisms(exhaustive));
  if (n >= 4) out.push_back(find_non_semimodular(4));
  out.push_back(check_partition_lattice(exhaustive, std::min(7, n + 2)));
  return out;
}

}  // namespace forestposet
