#pragma once

// Verification suites: every invariant of the library checked against
// brute-force enumeration. Shared by the `verify` subcommand and the
// acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

namespace forestposet {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  // Offending inputs in forest text (capped).
  std::vector<std::string> failures;
  double milliseconds = 0;

  void fail(const std::string& what);
};

// Comb intervals: chi_fast(comb, {}) = prod (y - k) for 2 <= n <= max_fast,
// and the brute-force polynomial agrees for n <= max_brute.
CheckResult check_comb_factorization(int max_fast, int max_brute);

// Sweep over every interval [F, F'] with |I| <= max_labels. Produces, in
// order: oracle equivalence (Z, M, chi, mu), M(x, 1) = 1, chi roots =
// exponents, rank property, product law, exponent formula consistency, degree
// bookkeeping, cardinal polynomial, Moebius row sums.
std::vector<CheckResult> check_interval_sweep(int max_labels);

// Oracle equivalence on `samples` random intervals over `labels` labels.
CheckResult check_sampled_oracle(int labels, std::size_t samples, std::uint64_t seed);

// Order axioms and T1|T2 <= T1 v T2 exhaustively for |I| <= exhaustive_labels, plus
// `samples` random triples on sampled_labels labels.
CheckResult check_order_axioms(int exhaustive_labels, int sampled_labels, std::size_t samples,
                               std::uint64_t seed);

// leq(F, G) iff F in lower_set(G), exhaustively.
CheckResult check_lower_sets(int max_labels);

// Marked-vertex cardinality and monotonicity, exponent invariance.
CheckResult check_marked_vertices(int max_labels);

// Intervals sharing (F', V) are partitive-isomorphic: all pairs for
// |I| <= exhaustive_labels, `samples` seeded pairs on sampled_labels labels.
CheckResult check_classification(int exhaustive_labels, int sampled_labels, std::size_t samples,
                                 std::uint64_t seed);

// Product / twisted / vee rebuilds are partitive-isomorphic to the concrete
// interval, one level and fully recursive; vee-products keep Z and M.
CheckResult check_decomposition_isomorphisms(int max_labels);

// Finds intervals on `labels` labels that are not semimodular; passes when at
// least one exists. The first witness goes into `detail`.
CheckResult find_non_semimodular(int labels);

// Tree counts (2n-3)!!, forest counts by partition sum, Bell numbers.
CheckResult check_counting(int max_tree_labels, int max_forest_labels, int max_comb_labels);

// Comb isomorphism, unique comb embeddings, Pi_n characteristic polynomial.
CheckResult check_partition_lattice(int max_labels, int max_fast_labels);

struct VerifyOptions {
  int max_labels = 5;
  std::uint64_t seed = 1;
  std::size_t sampled_intervals = 200;
  std::size_t classification_samples = 1000;
};

// Exhaustive through min(max_labels, 5); sampled at 6 when max_labels = 6.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace forestposet
