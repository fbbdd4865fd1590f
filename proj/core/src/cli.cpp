#include "leafine/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leafine/asymptotics.hpp"
#include "leafine/bigcount.hpp"
#include "leafine/dialect.hpp"
#include "leafine/distinct.hpp"
#include "leafine/errors.hpp"
#include "leafine/fib_trees.hpp"
#include "leafine/induce.hpp"
#include "leafine/recurrence.hpp"

namespace leafine::cli {

namespace {

struct UsageFailure {
  std::string message;
};

std::vector<ParsedLine> read_trees(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return parse_lines(in);
  std::ifstream file(path);
  if (!file) throw UsageFailure{"cannot open '" + path + "'"};
  return parse_lines(file);
}

bool choose_brute(const TopTree& tree, const std::string& method,
                  std::uint64_t budget) {
  if (method == "brute") return true;
  if (method == "dp") return false;
  std::uint64_t leaves = tree.leaf_count();
  return leaves < 64 && (std::uint64_t{1} << leaves) <= budget;
}

unsigned print_digits(unsigned precision_bits) {
  double d = static_cast<double>(precision_bits) * 0.30102999566398120 - 2.0;
  return d < 6.0 ? 6u : static_cast<unsigned>(d);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void parse_table_range(const std::string& text, unsigned& lo, unsigned& hi) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = static_cast<unsigned>(std::stoul(text));
      return;
    }
    lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
    hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
  } catch (const std::exception&) {
    throw UsageFailure{"bad table range '" + text + "', expected a..b"};
  }
  if (lo > hi) throw UsageFailure{"bad table range '" + text + "', expected a..b with a <= b"};
}

int run_verify(unsigned n_max, std::uint64_t budget, std::size_t cap,
               std::ostream& out) {
  std::vector<BigCount> seq = n_sequence(n_max);

  struct Check {
    Check(const char* n, unsigned l, unsigned h) : name(n), lo(l), hi(h) {}
    std::string name;
    unsigned lo, hi;
    bool ran = false;
    bool ok = true;
    std::string detail;
  };
  Check bounds{"recurrence-bounds", 2, n_max};
  Check vs_brute{"sequence-vs-brute", 0, 0};
  Check vs_dp{"sequence-vs-dp", 0, 0};
  Check sets{"brute-vs-dp-sets", 0, 0};
  Check root{"root-identity", 2, 0};

  bounds.ran = n_max >= 2;
  bounds.ok = check_bounds(seq);
  if (!bounds.ok) bounds.detail = "an inequality of the bounding chain failed";

  unsigned brute_max = 0;
  bool any_brute = false;
  for (unsigned n = 0; n <= n_max; ++n) {
    BigCount leaves = fibonacci(n + 2u);
    if (leaves > 63) break;
    std::uint64_t l = leaves.get_ui();
    if ((std::uint64_t{1} << l) > budget) break;
    brute_max = n;
    any_brute = true;
  }
  unsigned dp_max = 0;
  bool any_dp = false;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (seq[n] > static_cast<unsigned long>(cap)) break;
    dp_max = n;
    any_dp = true;
  }

  vs_brute.ran = any_brute;
  vs_brute.hi = brute_max;
  vs_dp.ran = any_dp;
  vs_dp.hi = dp_max;
  sets.ran = any_brute && any_dp;
  sets.hi = std::min(brute_max, dp_max);
  root.ran = any_dp && dp_max >= 2;
  root.hi = dp_max;

  for (unsigned n = 0; n <= n_max; ++n) {
    const bool do_brute = any_brute && n <= brute_max;
    const bool do_dp = any_dp && n <= dp_max;
    if (!do_brute && !do_dp) break;
    TopTree t = leaf_fibonacci(n);

    std::set<std::string> brute_codes;
    std::set<std::string> dp_codes;
    if (do_brute) {
      brute_codes = enumerate_bruteforce(t, budget).codes;
      if (vs_brute.ok && BigCount(static_cast<unsigned long>(brute_codes.size())) != seq[n]) {
        vs_brute.ok = false;
        vs_brute.detail = "n=" + std::to_string(n) + ": brute found " +
                          std::to_string(brute_codes.size()) + ", recurrence says " +
                          to_decimal(seq[n]);
      }
    }
    if (do_dp) {
      dp_codes = distinct_codes(t, cap);
      if (vs_dp.ok && BigCount(static_cast<unsigned long>(dp_codes.size())) != seq[n]) {
        vs_dp.ok = false;
        vs_dp.detail = "n=" + std::to_string(n) + ": merge pass found " +
                       std::to_string(dp_codes.size()) + ", recurrence says " +
                       to_decimal(seq[n]);
      }
      if (n >= 2 && root.ok) {
        std::set<std::string> rooted = root_containing_codes(t, cap);
        bool match = rooted.size() + 1 == dp_codes.size() &&
                     dp_codes.count("L") == 1;
        if (match)
          for (const std::string& c : rooted)
            if (dp_codes.count(c) == 0) { match = false; break; }
        if (!match) {
          root.ok = false;
          root.detail = "n=" + std::to_string(n) +
                        ": root-containing set is not the full set minus the single leaf";
        }
      }
    }
    if (do_brute && do_dp && sets.ok && brute_codes != dp_codes) {
      sets.ok = false;
      sets.detail = "n=" + std::to_string(n) + ": the two methods disagree on the set";
    }
  }

  unsigned passed = 0, total = 0;
  for (const Check* c : {&bounds, &vs_brute, &vs_dp, &sets, &root}) {
    ++total;
    out << "check " << c->name << " n=" << c->lo << ".." << c->hi << ": ";
    if (!c->ran) {
      out << "SKIP (range empty at these limits)\n";
      ++passed;
    } else if (c->ok) {
      out << "PASS\n";
      ++passed;
    } else {
      out << "FAIL (" << c->detail << ")\n";
    }
  }
  out << "verify: " << passed << "/" << total << " checks passed\n";
  return passed == total ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"nonisomorphic leaf-induced subtrees of topological rooted trees"};
  app.name("leafine");
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "emit a generator tree in canonical form");
  gen->require_subcommand(1);
  unsigned fib_n = 0;
  auto* gen_leaf = gen->add_subcommand("fib-leaf", "leaf-Fibonacci tree f_n");
  gen_leaf->add_option("n", fib_n, "height index")
      ->required()
      ->check(CLI::Range(0u, 40u));
  unsigned knuth_order = 0;
  auto* gen_knuth = gen->add_subcommand("fib-knuth", "binary Fibonacci tree");
  gen_knuth->add_option("order", knuth_order, "tree order")
      ->required()
      ->check(CLI::Range(0u, 41u));

  std::string count_input = "-";
  std::string count_method = "auto";
  std::uint64_t count_budget = kDefaultBruteBudget;
  std::size_t count_cap = kDefaultDistinctCap;
  bool count_json = false;
  auto* count = app.add_subcommand("count", "count nonisomorphic leaf-induced subtrees");
  count->add_option("input", count_input, "tree file, '-' for stdin");
  count->add_option("--method", count_method, "auto, brute or dp")
      ->check(CLI::IsMember({"auto", "brute", "dp"}));
  count->add_option("--budget", count_budget, "max subsets for brute force");
  count->add_option("--cap", count_cap, "max codes created by the dp");
  count->add_flag("--json", count_json, "one JSON object per input tree");

  std::string enum_input = "-";
  std::string enum_method = "auto";
  std::uint64_t enum_budget = kDefaultBruteBudget;
  std::size_t enum_cap = kDefaultDistinctCap;
  auto* enumerate = app.add_subcommand("enumerate", "list all distinct canonical codes of one tree");
  enumerate->add_option("input", enum_input, "tree file, '-' for stdin");
  enumerate->add_option("--method", enum_method, "auto, brute or dp")
      ->check(CLI::IsMember({"auto", "brute", "dp"}));
  enumerate->add_option("--budget", enum_budget, "max subsets for brute force");
  enumerate->add_option("--cap", enum_cap, "max codes created by the dp");

  unsigned seq_max = 0;
  std::uint64_t seq_digits_cap = kDefaultDigitsCap;
  auto* seq = app.add_subcommand("seq", "recurrence values N(f_n) for n = 0..n_max");
  seq->add_option("n_max", seq_max, "last index")->required();
  seq->add_option("--digits-cap", seq_digits_cap, "refuse terms predicted to exceed this many digits");

  unsigned c_precision = kDefaultPrecisionBits;
  unsigned c_terms = kDefaultSeriesTerms;
  std::string c_table = "8..16";
  auto* constants = app.add_subcommand("constants", "asymptotic constants at the requested precision");
  constants->add_option("--precision", c_precision, "working precision in bits")
      ->envname("LEAFINE_PRECISION_BITS")
      ->check(CLI::Range(64u, 1u << 24));
  constants->add_option("--terms", c_terms, "series terms for K2")
      ->check(CLI::Range(2u, 42u));
  constants->add_option("--table-n", c_table, "index range a..b for the prefactor table");

  unsigned p_n = 0;
  std::string p_k1 = "paper";
  bool p_by_leaves = false;
  unsigned p_precision = kDefaultPrecisionBits;
  unsigned p_terms = kDefaultSeriesTerms;
  std::uint64_t p_digits_cap = kDefaultDigitsCap;
  auto* predict_cmd = app.add_subcommand("predict", "predicted N(f_n) from the asymptotic form");
  predict_cmd->add_option("n", p_n, "tree height index")->required();
  predict_cmd->add_option("--k1", p_k1, "prefactor choice")
      ->check(CLI::IsMember({"paper", "unity"}));
  predict_cmd->add_flag("--by-leaves", p_by_leaves, "exponent written against the leaf count");
  predict_cmd->add_option("--precision", p_precision, "working precision in bits")
      ->envname("LEAFINE_PRECISION_BITS")
      ->check(CLI::Range(64u, 1u << 24));
  predict_cmd->add_option("--terms", p_terms, "series terms for K2")
      ->check(CLI::Range(2u, 42u));
  predict_cmd->add_option("--digits-cap", p_digits_cap, "skip the exact comparison past this size");

  unsigned v_max = 0;
  std::uint64_t v_budget = kDefaultBruteBudget;
  std::size_t v_cap = kDefaultDistinctCap;
  auto* verify = app.add_subcommand("verify", "cross-check brute force, merge pass, recurrence and the root identity");
  verify->add_option("n_max", v_max, "largest height index to verify")->required();
  verify->add_option("--budget", v_budget, "max subsets for brute force");
  verify->add_option("--cap", v_cap, "max codes created by the dp");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_leaf->parsed()) {
      serialize(leaf_fibonacci(fib_n), out, /*canonical=*/true);
      out << "\n";
      return 0;
    }
    if (gen_knuth->parsed()) {
      serialize(knuth_fibonacci(knuth_order), out, /*canonical=*/true);
      out << "\n";
      return 0;
    }

    if (count->parsed()) {
      std::vector<ParsedLine> trees = read_trees(count_input, in);
      if (trees.empty()) throw UsageFailure{"no trees in the input"};
      std::size_t index = 0;
      for (const ParsedLine& pl : trees) {
        const bool brute = choose_brute(pl.tree, count_method, count_budget);
        auto t0 = std::chrono::steady_clock::now();
        BigCount value;
        if (brute)
          value = BigCount(static_cast<unsigned long>(
              enumerate_bruteforce(pl.tree, count_budget).codes.size()));
        else
          value = count_distinct(pl.tree, count_cap);
        double elapsed = ms_since(t0);
        if (count_json) {
          nlohmann::ordered_json j{{"input_index", index},
                                   {"line", pl.line_number},
                                   {"leaf_count", pl.tree.leaf_count()},
                                   {"method", brute ? "brute" : "dp"},
                                   {"count", to_decimal(value)},
                                   {"elapsed_ms", elapsed}};
          out << j.dump() << "\n";
        } else if (trees.size() == 1) {
          out << to_decimal(value) << "\n";
        } else {
          out << pl.line_number << ": " << to_decimal(value) << "\n";
        }
        ++index;
      }
      return 0;
    }

    if (enumerate->parsed()) {
      std::vector<ParsedLine> trees = read_trees(enum_input, in);
      if (trees.size() != 1)
        throw UsageFailure{"enumerate expects exactly one tree, got " +
                           std::to_string(trees.size())};
      const TopTree& t = trees.front().tree;
      std::set<std::string> codes =
          choose_brute(t, enum_method, enum_budget)
              ? enumerate_bruteforce(t, enum_budget).codes
              : distinct_codes(t, enum_cap);
      out << "count=" << codes.size() << "\n";
      for (const std::string& c : codes) out << c << "\n";
      return 0;
    }

    if (seq->parsed()) {
      std::vector<BigCount> values = n_sequence(seq_max, seq_digits_cap);
      for (const BigCount& v : values) out << to_decimal(v) << "\n";
      return 0;
    }

    if (constants->parsed()) {
      unsigned lo = 8, hi = 16;
      parse_table_range(c_table, lo, hi);
      AsymptoticConstants c = compute_constants(c_terms, c_precision);
      const unsigned digits = print_digits(c_precision);
      out << "precision_bits = " << c.precision << "\n";
      out << "series_terms = " << c.terms_used << "\n";
      out << "lambda1 = " << c.lambda1.to_string(digits) << "\n";
      out << "lambda2 = " << c.lambda2.to_string(digits) << "\n";
      out << "k2 = " << c.k2.value.to_string(digits) << "\n";
      out << "k2_half_width = " << c.k2.half_width.to_string(3) << "\n";
      out << "k2_tail_bound = " << c.k2.tail_bound.to_string(3) << "\n";
      out << "k2_sup_estimate_ok = " << (c.k2.sup_estimate_ok ? "true" : "false") << "\n";
      out << "k2_reference_14 = " << kReferenceK2Decimal << "\n";
      out << "k1_truncated[" << c.k1_truncation_index << "] = "
          << c.k1_truncated.to_string(digits) << "\n";
      out << "k1_reference_14 = " << kReferenceK1Decimal << "\n";
      out << "note = the 14-digit k1 reference matches the index-20 truncation; "
             "higher truncations drift toward 1, so the reference is a "
             "truncation artifact, not the limit\n";
      std::vector<BigCount> seqv = n_sequence(hi);
      for (unsigned n = lo; n <= hi; ++n) {
        PrefactorResult pr = prefactor_empirical(n, c.k2, seqv, c_precision);
        out << "C[" << n << "] = " << pr.value.to_string(digits)
            << "  half_width = " << pr.half_width.to_string(3) << "\n";
      }
      return 0;
    }

    if (predict_cmd->parsed()) {
      AsymptoticConstants c = compute_constants(p_terms, p_precision);
      K1Mode mode = (p_k1 == "unity") ? K1Mode::unity : K1Mode::paper;
      const unsigned digits = print_digits(p_precision);
      BigFloat est = predict(p_n, c, mode, p_by_leaves);
      BigFloat lg = predict_log10(p_n, c, mode, p_by_leaves);
      out << "n = " << p_n << "\n";
      out << "k1_mode = " << p_k1 << "\n";
      out << "exponent_form = " << (p_by_leaves ? "by-leaves" : "by-height") << "\n";
      if (est.is_finite())
        out << "estimate = " << est.to_string(digits) << "\n";
      else
        out << "estimate = overflow\n";
      out << "log10_estimate = " << lg.to_string(digits) << "\n";
      if (predicted_digits(p_n) <= static_cast<double>(p_digits_cap)) {
        BigCount exact = n_of(p_n, p_digits_cap);
        std::string dec = to_decimal(exact);
        out << "exact_digits = " << dec.size() << "\n";
        if (dec.size() <= 120) out << "exact = " << dec << "\n";
        const unsigned work = p_precision + 64;
        BigFloat ex = BigFloat::from_bigcount(exact, work);
        if (est.is_finite()) {
          BigFloat rel = abs(est.with_precision(work) - ex) / ex;
          out << "relative_error = " << rel.to_string(4) << "\n";
        } else {
          BigFloat lgerr = lg.with_precision(work) - log10(ex);
          out << "log10_error = " << lgerr.to_string(4) << "\n";
        }
      } else {
        out << "exact = skipped (predicted to exceed the digits cap)\n";
      }
      return 0;
    }

    if (verify->parsed()) return run_verify(v_max, v_budget, v_cap, out);

    throw UsageFailure{"no subcommand selected"};
  } catch (const UsageFailure& u) {
    err << "error:UsageError: " << u.message << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error:" << e.name() << ": " << e.what() << "\n";
    return is_resource_cap_error(e) ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error:Internal: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace leafine::cli
