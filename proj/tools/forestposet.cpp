// forestposet: invariants, Hasse diagrams, verification and enumeration for
// the poset of leaf-labeled binary forests.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "forestposet/export.hpp"
#include "forestposet/forest.hpp"
#include "forestposet/invariants.hpp"
#include "forestposet/order.hpp"
#include "forestposet/recursion.hpp"
#include "forestposet/verify.hpp"

namespace fp = forestposet;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

template <typename F>
double time_ms(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// Z(x, 0): only the top contributes a y^0 factor, leaving sum x^crk(a).
fp::UnivariatePolynomial card_from_z(const fp::BivariatePolynomial& z) {
  fp::UnivariatePolynomial out;
  for (const auto& [i, j, c] : z.terms()) {
    if (j == 0) out += fp::UnivariatePolynomial::monomial(i, c);
  }
  return out;
}

struct Invariants {
  fp::UnivariatePolynomial chi;
  fp::BigInt mobius;
  fp::BivariatePolynomial m;
  fp::BivariatePolynomial z;
  fp::UnivariatePolynomial card;
};

Invariants compute_fast(const fp::MarkedTreePair& pair) {
  fp::FastEvaluator eval;
  Invariants out;
  out.m = eval.m(pair);
  out.z = eval.z(pair);
  out.chi = fp::chi_fast(pair);
  out.mobius = fp::mobius_fast(pair);
  out.card = card_from_z(out.z);
  return out;
}

Invariants compute_brute(const fp::Forest& lower, const fp::Forest& upper) {
  const auto iv = fp::interval(lower, upper);
  const auto& p = iv.order;
  Invariants out;
  out.m = fp::m_polynomial(p);
  out.z = fp::z_polynomial(p);
  out.chi = fp::characteristic_polynomial(p);
  out.mobius = fp::mobius(p, p.bottom(), p.top());
  out.card = fp::cardinal_polynomial(p);
  return out;
}

std::string join(const std::vector<long long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out;
}

int cmd_invariants(const std::string& lower_text, const std::string& upper_text,
                   const std::string& method, bool as_json, bool trace) {
  const fp::Forest lower = fp::parse_forest(lower_text);
  const fp::Forest upper = fp::parse_forest(upper_text);
  const fp::MarkedTreePair pair = fp::marked_pair(lower, upper);
  const auto exps = fp::exponents(pair);

  Invariants fast;
  Invariants brute;
  double fast_ms = 0;
  double brute_ms = 0;
  const bool want_fast = method != "brute";
  const bool want_brute = method != "fast";
  if (want_fast) fast_ms = time_ms([&] { fast = compute_fast(pair); });
  if (want_brute) brute_ms = time_ms([&] { brute = compute_brute(lower, upper); });
  const Invariants& shown = want_fast ? fast : brute;

  json agreement = nullptr;
  bool agree = true;
  if (want_fast && want_brute) {
    agreement = {{"chi", fast.chi == brute.chi},
                 {"mobius", fast.mobius == brute.mobius},
                 {"m_poly", fast.m == brute.m},
                 {"z_poly", fast.z == brute.z},
                 {"card", fast.card == brute.card}};
    for (const auto& [key, value] : agreement.items()) agree = agree && value.get<bool>();
  }

  if (as_json) {
    json timings = json::object();
    if (want_fast) timings["fast_ms"] = fast_ms;
    if (want_brute) timings["brute_ms"] = brute_ms;
    json report = {
        {"subject",
         {{"lower", lower.text()},
          {"upper", upper.text()},
          {"degree", pair.unmarked_count()},
          {"method", method}}},
        {"chi_factored", fp::format_factored(exps)},
        {"chi_coeffs", fp::to_json(shown.chi)},
        {"exponents", exps},
        {"mobius", fp::to_json(shown.mobius)},
        {"m_poly", fp::to_json(shown.m)},
        {"z_poly", fp::to_json(shown.z)},
        {"card", fp::to_json(shown.card)},
        {"agreement", agreement},
        {"timings", timings},
    };
    if (trace) report["trace"] = fp::format_trace(fp::decompose(pair));
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "interval  [" << lower.text() << ", " << upper.text() << "]\n";
    std::cout << "degree    " << pair.unmarked_count() << "\n";
    std::cout << "chi       " << fp::format_factored(exps) << "\n";
    std::cout << "          = " << shown.chi.to_string('y') << "\n";
    std::cout << "exponents " << join(exps) << "\n";
    std::cout << "mu        " << shown.mobius << "\n";
    std::cout << "M         " << shown.m.to_string() << "\n";
    std::cout << "Z         " << shown.z.to_string() << "\n";
    std::cout << "Card      " << shown.card.to_string('x') << "\n";
    if (want_fast && want_brute) {
      std::cout << "agreement";
      for (const auto& [key, value] : agreement.items()) {
        std::cout << " " << key << "=" << (value.get<bool>() ? "yes" : "NO");
      }
      std::cout << "\n";
    }
    if (trace) std::cout << "\n" << fp::format_trace(fp::decompose(pair));
  }
  return agree ? kExitOk : kExitFailed;
}

int cmd_hasse(const std::string& lower_text, const std::string& upper_text,
              const std::string& format) {
  const fp::Forest lower = fp::parse_forest(lower_text);
  const fp::Forest upper = fp::parse_forest(upper_text);
  const auto iv = fp::interval(lower, upper);
  if (format == "json") {
    std::cout << fp::to_json(iv).dump(2) << "\n";
  } else {
    std::cout << fp::to_dot(iv);
  }
  return kExitOk;
}

int cmd_verify(const fp::VerifyOptions& options, bool as_json) {
  const auto results = fp::run_verification(options);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (as_json) {
    json checks = json::array();
    json agreement = json::object();
    json timings = json::object();
    for (const auto& r : results) {
      checks.push_back({{"name", r.name},
                        {"passed", r.passed},
                        {"detail", r.detail},
                        {"failures", r.failures},
                        {"ms", r.milliseconds}});
      agreement[r.name] = r.passed;
      timings[r.name] = r.milliseconds;
    }
    json report = {
        {"subject",
         {{"max_labels", options.max_labels},
          {"seed", options.seed},
          {"sampled_intervals", options.sampled_intervals},
          {"classification_samples", options.classification_samples}}},
        {"checks", checks},
        {"agreement", agreement},
        {"timings", timings},
        {"passed", all},
    };
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
      for (const auto& f : r.failures) std::cout << "     " << f << "\n";
    }
    std::cout << (all ? "all checks passed" : "verification FAILED") << "\n";
  }
  return all ? kExitOk : kExitFailed;
}

int cmd_enumerate(const std::vector<std::string>& raw_labels, const std::string& what,
                  bool as_json) {
  for (const auto& l : raw_labels) {
    if (!fp::is_valid_label(l)) throw std::invalid_argument("invalid label '" + l + "'");
  }
  const fp::LabelSet labels = fp::make_label_set(raw_labels);
  std::vector<std::string> lines;
  if (what == "trees") {
    for (const auto& t : fp::enumerate_trees(labels)) lines.push_back(t.text());
  } else {
    for (const auto& f : fp::enumerate_forests(labels)) lines.push_back(f.text());
  }
  if (as_json) {
    std::cout << json{{"labels", labels}, {"what", what}, {"items", lines},
                      {"count", lines.size()}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& line : lines) std::cout << line << "\n";
    std::cout << "# " << lines.size() << " " << what << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leaf-labeled binary forests: order, intervals and their invariants"};
  app.require_subcommand(1);

  std::string lower;
  std::string upper;
  std::string method = "fast";
  std::string format = "dot";
  bool as_json = false;
  bool trace = false;

  auto* inv =
      app.add_subcommand("invariants", "chi, exponents, mu, M, Z and Card of [lower, upper]");
  inv->add_option("lower", lower, "lower forest, e.g. \"a|b|c\"")->required();
  inv->add_option("upper", upper, "upper forest, e.g. \"((a,b),c)\"")->required();
  inv->add_option("--method", method, "fast, brute or both")
      ->check(CLI::IsMember({"fast", "brute", "both"}));
  inv->add_flag("--json", as_json, "machine-readable report");
  inv->add_flag("--trace", trace, "print the decomposition tree");

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of [lower, upper]");
  hasse->add_option("lower", lower, "lower forest")->required();
  hasse->add_option("upper", upper, "upper forest")->required();
  hasse->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  fp::VerifyOptions options;
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--max-labels", options.max_labels, "largest label count (2..6)")
      ->check(CLI::Range(2, 6));
  verify->add_option("--seed", options.seed, "seed for sampled checks");
  verify->add_option("--samples", options.sampled_intervals, "sampled intervals at 6 labels");
  verify->add_flag("--json", as_json, "machine-readable report");

  std::vector<std::string> labels;
  std::string what = "trees";
  auto* enumerate = app.add_subcommand("enumerate", "list trees or forests on a label set");
  enumerate->add_option("--labels", labels, "comma-separated labels")
      ->required()
      ->delimiter(',');
  enumerate->add_option("--what", what, "trees or forests")
      ->check(CLI::IsMember({"trees", "forests"}));
  enumerate->add_flag("--json", as_json, "machine-readable listing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*inv) return cmd_invariants(lower, upper, method, as_json, trace);
    if (*hasse) return cmd_hasse(lower, upper, format);
    if (*verify) return cmd_verify(options, as_json);
    if (*enumerate) return cmd_enumerate(labels, what, as_json);
  } catch (const fp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fp::NotComparableError& e) {
    std::cerr << "not comparable: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
