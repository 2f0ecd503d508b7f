// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "matchings/binom_demo.hpp"
#include "matchings/cli.hpp"
#include "matchings/error.hpp"
#include "matchings/properties.hpp"
#include "matchings/random_instances.hpp"
#include "matchings/subtraction.hpp"
#include "matchings/xdiv.hpp"

using namespace matchings;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_trailing_newlines(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

int run_cli(std::vector<std::string> args, std::string& out) {
  std::ostringstream o, e;
  int code = cli::run(args, o, e);
  out = o.str();
  return code;
}

struct Criterion {
  int number;
  std::string title;
  std::function<std::string()> check;  // empty string: passed
};

std::string golden_table() {
  auto start = Clock::now();
  std::string out;
  int code = run_cli({"binom", "5", "2"}, out);
  double elapsed = seconds_since(start);
  if (code != 0) return "exit code " + std::to_string(code);
  std::string expected = read_file(std::string(GOLDEN_DIR) + "/binom_5_2.txt");
  if (expected.empty()) return "golden file missing";
  if (strip_trailing_newlines(out) != strip_trailing_newlines(expected)) return "output differs from the table";
  if (elapsed >= 1.0) return "took " + std::to_string(elapsed) + " s";
  return {};
}

std::string round_trip() {
  std::string out;
  if (int code = run_cli({"verify-binom", "5", "2"}, out); code != 0 || out != "True\n")
    return "verify-binom 5 2 printed '" + out + "' with exit " + std::to_string(code);
  auto start = Clock::now();
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      if (int code = run_cli({"verify-binom", std::to_string(n), std::to_string(k)}, out); code != 0)
        return "verify-binom " + std::to_string(n) + " " + std::to_string(k) + " failed";
  if (double elapsed = seconds_since(start); elapsed >= 60.0) return "took " + std::to_string(elapsed) + " s";
  return {};
}

std::vector<SubtractionInstance> subtraction_instances() {
  Rng rng(20240601);
  std::vector<SubtractionInstance> out;
  for (int i = 0; i < 200; ++i) out.push_back(random_subtraction_instance(rng, 12));
  return out;
}

std::string subtraction_soundness(const std::vector<SubtractionInstance>& instances) {
  std::size_t points = 0;
  for (const auto& inst : instances) points += inst.a.size() + inst.c.size();
  std::cout << "  " << instances.size() << " instances, " << points << " points in A+C\n";
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    if (inst.a.size() + inst.c.size() > 12) return "instance " + std::to_string(i) + " too large";
    if (auto failure = check_subtraction_soundness(inst)) return "instance " + std::to_string(i) + ": " + *failure;
  }
  return {};
}

std::string proposition_suite(const std::vector<SubtractionInstance>& instances) {
  std::size_t respectful = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    std::string where = "instance " + std::to_string(i) + ": ";
    if (auto f = check_result_respect(inst)) return where + *f;
    if (auto f = check_idempotence(inst)) return where + *f;
    if (auto f = check_closure(inst)) return where + *f;
    if (auto f = check_respectful_agreement(inst)) return where + *f;
    if (respects(inst.g, inst.f)) ++respectful;
  }
  std::cout << "  " << respectful << " respectful, " << instances.size() - respectful << " not\n";
  // Both sides of the equivalence have to be exercised.
  if (respectful == 0 || respectful == instances.size())
    return "only one side of respects exercised (" + std::to_string(respectful) + " respectful)";
  return {};
}

std::string incexc_soundness() {
  Rng rng(7);
  std::size_t chains = 0, matchings = 0;
  for (int i = 0; i < 100; ++i) {
    auto inst = random_incexc_instance(rng, 5, 4);
    matchings += inst.gs.size();
    std::string where = "instance " + std::to_string(i) + ": ";
    if (auto f = check_incexc_soundness(inst)) return where + *f;
    if (is_two_chain(inst.a.poset())) {
      ++chains;
      if (auto f = check_incexc_chain(inst)) return where + *f;
    }
  }
  // The random posets rarely come out as 2-chains, so add dedicated ones.
  for (int i = 0; i < 100; ++i) {
    auto inst = random_chain_instance(rng, 4);
    if (auto f = check_incexc_soundness(inst)) return "chain " + std::to_string(i) + ": " + *f;
    if (auto f = check_incexc_chain(inst)) return "chain " + std::to_string(i) + ": " + *f;
    ++chains;
  }
  std::cout << "  " << matchings << " point matchings over 100 posets, " << chains << " 2-chain instances\n";
  if (chains < 100) return "too few 2-chain instances";
  return {};
}

std::string x_divisibility() {
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      if (auto report = check_total(binom::match_binom(n, k)); !report)
        return "binom(" + std::to_string(n) + ", " + std::to_string(k) + "): " + report.describe();

  // Negative control: G relabelled by a random matching of A×C.
  constexpr std::size_t kBudget = 100'000;
  if (!check_total(binom::match_binom(5, 2, {.budget = kBudget}))) return "control budget too small";
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto fg = binom::binom_pair(5, 2);
    Rng rng(seed);
    FiniteSet ac = product_set(fg.a, fg.c);
    fg.backward = compose(fg.backward, random_matching(rng, ac, ac));
    auto report = check_total(xdiv(fg, binom::omega(5, 2), {.budget = kBudget}));
    if (!report) {
      if (!report.point) return "non-total control has no witness";
      std::cout << "  scrambled G (seed " << seed << "): " << report.describe() << "\n";
      return {};
    }
  }
  return "no scrambled G was reported non-total";
}

std::string memoization() {
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      auto memo = binom::match_binom(n, k, {.memoize = true});
      auto plain = binom::match_binom(n, k, {.memoize = false});
      for (auto x : memo.a)
        if (memo.f(x) != plain.f(x)) return "f differs at " + encode(x);
      for (auto y : memo.b)
        if (memo.g(y) != plain.g(y)) return "g differs at " + encode(y);
    }
  auto memo = binom::match_binom(5, 2, {.memoize = true});
  auto plain = binom::match_binom(5, 2, {.memoize = false});
  std::cout << "  n=5 k=2: " << memo.total_steps << " applications memoized, " << plain.total_steps
            << " without\n";
  if (!(memo.total_steps < plain.total_steps)) return "memoization did not reduce applications";
  return {};
}

}  // namespace

int main() {
  auto instances = subtraction_instances();
  std::vector<Criterion> criteria{
      {1, "golden table for binom 5 2", golden_table},
      {2, "verify-binom round trip for n <= 7", round_trip},
      {3, "subtraction soundness on 200 instances", [&] { return subtraction_soundness(instances); }},
      {4, "subtraction propositions on 200 instances", [&] { return proposition_suite(instances); }},
      {5, "inclusion-exclusion soundness", incexc_soundness},
      {6, "X-divisibility of the binomial pair", x_divisibility},
      {7, "memoization agrees and saves work", memoization},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    std::string failure;
    try {
      failure = c.check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds_since(start));
    if (failure.empty()) {
      std::cout << "PASS criterion " << c.number << ": " << c.title << " (" << timing << ")\n";
    } else {
      ++failures;
      std::cout << "FAIL criterion " << c.number << ": " << c.title << " (" << timing << "): " << failure << "\n";
    }
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
