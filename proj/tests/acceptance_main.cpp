// Acceptance gate: one timed pass/fail line per criterion, summary at the
// end, exit 0 only when everything passed. Run through ctest as
//   leafine_acceptance --cli <path-to-leafine-binary>
// because two criteria drive the installed CLI as a subprocess.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "leafine/asymptotics.hpp"
#include "leafine/bigcount.hpp"
#include "leafine/bigfloat.hpp"
#include "leafine/canonical.hpp"
#include "leafine/distinct.hpp"
#include "leafine/fib_trees.hpp"
#include "leafine/induce.hpp"
#include "leafine/recurrence.hpp"
#include "leafine/tree.hpp"
#include "support/random_trees.hpp"

using namespace leafine;

namespace {

std::string g_cli;

std::string run_cli(const std::string& args, int& exit_code) {
  std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

bool cli_seq_first_nine(std::string& detail) {
  int rc = -1;
  std::string out = run_cli("seq 8", rc);
  const std::string expected = "1\n2\n3\n6\n16\n82\n1193\n94506\n112034631\n";
  if (rc != 0) {
    detail = "exit code " + std::to_string(rc);
    return false;
  }
  if (out != expected) {
    detail = "unexpected output: " + out;
    return false;
  }
  return true;
}

bool brute_matches_recurrence(std::string& detail) {
  auto seq = n_sequence(6);
  for (unsigned n = 0; n <= 6; ++n) {
    auto res = enumerate_bruteforce(leaf_fibonacci(n));
    if (BigCount(static_cast<unsigned long>(res.codes.size())) != seq[n]) {
      detail = "n=" + std::to_string(n) + ": got " +
               std::to_string(res.codes.size()) + ", expected " +
               to_decimal(seq[n]);
      return false;
    }
  }
  return true;
}

bool merge_matches_recurrence(std::string& detail) {
  auto seq = n_sequence(7);
  for (unsigned n = 0; n <= 7; ++n) {
    BigCount got = count_distinct(leaf_fibonacci(n));
    if (got != seq[n]) {
      detail = "n=" + std::to_string(n) + ": got " + to_decimal(got) +
               ", expected " + to_decimal(seq[n]);
      return false;
    }
  }
  return true;
}

bool methods_agree_on_random_trees(std::string& detail) {
  std::mt19937 rng(20260819);
  for (unsigned i = 0; i < 200; ++i) {
    TopTree t = testsupport::random_topological(rng, 16, /*force_branch=*/true);
    auto brute = enumerate_bruteforce(t).codes;
    auto dp = distinct_codes(t);
    if (brute != dp) {
      detail = "tree " + std::to_string(i) + " (" +
               std::to_string(t.leaf_count()) + " leaves): brute " +
               std::to_string(brute.size()) + " vs merge " +
               std::to_string(dp.size());
      return false;
    }
  }
  return true;
}

bool root_identity(std::string& detail) {
  for (unsigned n = 2; n <= 6; ++n) {
    TopTree t = leaf_fibonacci(n);
    std::set<std::string> all = distinct_codes(t);
    std::set<std::string> rooted = root_containing_codes(t);
    bool ok = rooted.size() + 1 == all.size() && all.count("L") == 1 &&
              rooted.count("L") == 0;
    if (ok)
      for (const std::string& c : rooted)
        if (all.count(c) == 0) {
          ok = false;
          break;
        }
    if (!ok) {
      detail = "n=" + std::to_string(n) +
               ": root-containing set is not the full set minus the leaf";
      return false;
    }
  }
  return true;
}

bool generator_sets_nest(std::string& detail) {
  std::vector<std::set<std::string>> sets;
  for (unsigned n = 0; n <= 7; ++n)
    sets.push_back(distinct_codes(leaf_fibonacci(n)));
  for (unsigned n = 1; n <= 7; ++n)
    for (const std::string& c : sets[n - 1])
      if (sets[n].count(c) == 0) {
        detail = "set of height " + std::to_string(n - 1) +
                 " is not contained in height " + std::to_string(n);
        return false;
      }
  for (unsigned m = 0; m <= 7; ++m) {
    std::string code = canonical_code(leaf_fibonacci(m));
    for (unsigned n = m; n <= 7; ++n)
      if (sets[n].count(code) == 0) {
        detail = "generator of height " + std::to_string(m) +
                 " missing from the set of height " + std::to_string(n);
        return false;
      }
  }
  return true;
}

bool growth_base_fast_reference(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  K2Result k2 = compute_k2(20, 128);
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  BigFloat ref = BigFloat::from_string(kReferenceK2Decimal, 192);
  double diff = abs(k2.value - ref).to_double();
  if (!(diff < 1e-12)) {
    detail = "difference " + std::to_string(diff);
    return false;
  }
  if (elapsed >= 1.0) {
    detail = "took " + std::to_string(elapsed) + "s, limit 1s";
    return false;
  }
  return true;
}

bool prefactor_table_and_note(std::string& detail) {
  K2Result k2 = compute_k2(30, 256);
  auto seq = n_sequence(16);
  BigFloat ref = BigFloat::from_string(kReferenceK1Decimal, 320);
  std::vector<BigFloat> c;
  for (unsigned n = 12; n <= 16; ++n) {
    PrefactorResult pr = prefactor_empirical(n, k2, seq, 256);
    double diff = abs(pr.value - ref).to_double();
    if (!(diff < 1e-3)) {
      detail = "C[" + std::to_string(n) + "] is " + std::to_string(diff) +
               " from the reference";
      return false;
    }
    c.push_back(pr.value);
  }
  for (std::size_t i = 0; i + 2 < c.size(); ++i)
    if (abs(c[i + 2] - c[i + 1]) > abs(c[i + 1] - c[i])) {
      detail = "|C[n+1] - C[n]| grew at n = " + std::to_string(13 + i);
      return false;
    }

  int rc = -1;
  std::string out = run_cli("constants", rc);
  if (rc != 0) {
    detail = "constants exit code " + std::to_string(rc);
    return false;
  }
  if (out.find("truncation artifact, not the limit") == std::string::npos ||
      out.find("k1_reference_14 = 1.00001887227319") == std::string::npos) {
    detail = "constants output lacks the reference discrepancy note";
    return false;
  }
  return true;
}

bool recurrence_bounds_hold(std::string& detail) {
  auto seq = n_sequence(30);
  if (!check_bounds(seq)) {
    detail = "an inequality in the bounding chain failed";
    return false;
  }
  if (seq[3] != seq[2] * seq[1]) {
    detail = "upper bound is not tight at the third term";
    return false;
  }
  return true;
}

bool generator_shapes(std::string& detail) {
  for (unsigned n = 0; n <= 25; ++n) {
    TopTree t = leaf_fibonacci(n);
    if (BigCount(static_cast<unsigned long>(t.leaf_count())) != fibonacci(n + 2)) {
      detail = "leaf count of height " + std::to_string(n) + " is " +
               std::to_string(t.leaf_count());
      return false;
    }
    if (t.height() != n) {
      detail = "height " + std::to_string(n) + " reports " +
               std::to_string(t.height());
      return false;
    }
  }
  TopTree k5 = knuth_fibonacci(5);
  if (k5.leaf_count() != 8 || k5.node_count() != 15) {
    detail = "order-5 binary tree has " + std::to_string(k5.leaf_count()) +
             " leaves and " + std::to_string(k5.node_count()) + " vertices";
    return false;
  }
  if (!knuth_fibonacci(0).root().is_leaf() ||
      !knuth_fibonacci(1).root().is_leaf()) {
    detail = "orders 0 and 1 should be single vertices";
    return false;
  }
  return true;
}

bool labeled_count_closed_form(std::string& detail) {
  TopTree star = TopTree::branch(std::vector<TopTree>(21, TopTree::leaf()));
  if (count_labeled(star) != pow2_minus_1(21) ||
      count_labeled(leaf_fibonacci(6)) != pow2_minus_1(21) ||
      count_labeled(TopTree::leaf()) != 1) {
    detail = "selection count is not 2^leaves - 1";
    return false;
  }
  for (unsigned n : {4u, 5u, 6u}) {
    TopTree t = leaf_fibonacci(n);
    auto res = enumerate_bruteforce(t);
    BigCount expected = pow2_minus_1(t.leaf_count());
    if (BigCount(static_cast<unsigned long>(res.subsets_visited)) != expected) {
      detail = "n=" + std::to_string(n) + ": visited " +
               std::to_string(res.subsets_visited) + " subsets, expected " +
               to_decimal(expected);
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
  if (g_cli.empty()) {
    std::cerr << "usage: leafine_acceptance --cli <path-to-leafine>\n";
    return 2;
  }

  struct Criterion {
    const char* name;
    bool (*fn)(std::string&);
    double limit_secs;  // 0 = untimed
  };
  const Criterion criteria[] = {
      {"cli-seq-first-nine", cli_seq_first_nine, 1.0},
      {"bruteforce-matches-recurrence", brute_matches_recurrence, 60.0},
      {"merge-pass-matches-recurrence", merge_matches_recurrence, 60.0},
      {"methods-agree-on-random-trees", methods_agree_on_random_trees, 0},
      {"root-identity", root_identity, 0},
      {"generator-sets-nest", generator_sets_nest, 0},
      {"growth-base-fast-reference", growth_base_fast_reference, 1.0},
      {"prefactor-table-and-note", prefactor_table_and_note, 0},
      {"recurrence-bounds-hold", recurrence_bounds_hold, 0},
      {"generator-shapes", generator_shapes, 0},
      {"labeled-count-closed-form", labeled_count_closed_form, 0},
  };

  unsigned passed = 0, index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ok && c.limit_secs > 0 && secs >= c.limit_secs) {
      ok = false;
      detail = "took " + std::to_string(secs) + "s, limit " +
               std::to_string(c.limit_secs) + "s";
    }
    char line[160];
    std::snprintf(line, sizeof line, "[%2u] %s %s (%.2fs)", index,
                  ok ? "PASS" : "FAIL", c.name, secs);
    std::cout << line;
    if (!ok && !detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    if (ok) ++passed;
  }
  std::cout << "acceptance: " << passed << "/" << index
            << " criteria passed\n";
  return passed == index ? 0 : 1;
}
