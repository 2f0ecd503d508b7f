#include "matchings/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <map>
#include <ostream>

#include "matchings/binom_demo.hpp"
#include "matchings/error.hpp"
#include "matchings/incexc.hpp"
#include "matchings/properties.hpp"

namespace matchings::cli {

namespace {

using nlohmann::json;

json to_json(const Element& e) {
  switch (e.kind()) {
    case Element::Kind::Int:
      return e.as_int();
    case Element::Kind::Seq: {
      json arr = json::array();
      for (const auto& item : e.items()) arr.push_back(to_json(item));
      return arr;
    }
    case Element::Kind::TagL:
      return json{{"L", to_json(e.untag())}};
    case Element::Kind::TagR:
      return json{{"R", to_json(e.untag())}};
    case Element::Kind::Pair:
      return json{{"pair", json::array({to_json(e.first()), to_json(e.second())})}};
  }
  return nullptr;
}

bool check_nk(const CliConfig& config, std::ostream& err) {
  if (config.n < 0 || config.k < 0 || config.k > config.n) {
    err << "error: need 0 <= k <= n (got n=" << config.n << ", k=" << config.k << ")\n";
    return false;
  }
  if (config.n > kMaxN) {
    err << "error: n is capped at " << kMaxN << " (got " << config.n << ")\n";
    return false;
  }
  return true;
}

constexpr std::string_view kDiamondPoset = R"(# diamond: 0 < 1, 0 < 2, 1 < 3, 2 < 3
points: 0; 1; 2; 3
0 <= 1
0 <= 2
1 <= 3
2 <= 3
)";

constexpr std::string_view kDiamondParts = R"(0: 0
0: 1
1: 0
2: 0
2: 1
3: 0
3: 1
3: 2
)";

constexpr std::string_view kOnePointPoset = "points: 0\n";
constexpr std::string_view kOnePointParts = "0: 0\n0: 1\n0: 2\n";

// Sends the i-th member of A_{<=p} to member (i + shift) mod m of B_{<=p}.
Matching rotation(const FiniteSet& from, const FiniteSet& to, std::size_t shift) {
  ElementPairs pairs;
  for (std::size_t i = 0; i < from.size(); ++i) pairs.emplace_back(from.at(i), to.at((i + shift) % to.size()));
  return make_matching(from, to, pairs);
}

}  // namespace

int cmd_binom(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (!check_nk(config, err)) return kExitUsage;
  auto pair = binom::match_binom(config.n, config.k, {.budget = config.budget});
  if (auto report = check_total(pair); !report) {
    err << "error: " << report.describe() << "\n";
    return kExitFailure;
  }
  if (config.format == Format::Json) {
    json rows = json::array();
    for (std::size_t i = 0; i < pair.a.size(); ++i)
      rows.push_back(json::array({to_json(pair.a.at(i)), to_json(*pair.f_values[i].value)}));
    json doc = {{"n", config.n},
                {"k", config.k},
                {"omega", to_json(pair.omega)},
                {"steps", pair.total_steps},
                {"rows", rows}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < pair.a.size(); ++i)
    out << encode(Element::pair(pair.a.at(i), *pair.f_values[i].value)) << "\n";
  return kExitOk;
}

int cmd_verify_binom(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (!check_nk(config, err)) return kExitUsage;
  auto pair = binom::match_binom(config.n, config.k, {.budget = config.budget});
  if (auto report = check_total(pair); !report) {
    out << "False\n";
    err << report.describe() << "\n";
    return kExitFailure;
  }
  try {
    auto [f, g, mutual] = as_matchings(pair);
    if (auto report = verify(f); !report) {
      out << "False\n";
      err << "f: " << report.describe() << "\n";
      return kExitFailure;
    }
    for (auto x : pair.a) {
      if (!(g.forward(f.forward(x)) == x)) {
        out << "False\n";
        err << "g(f(x)) != x at x = " << encode(x) << "\n";
        return kExitFailure;
      }
    }
  } catch (const Error& e) {
    out << "False\n";
    err << e.what() << "\n";
    return kExitFailure;
  }
  out << "True\n";
  return kExitOk;
}

int cmd_props(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.cases < 1) {
    err << "error: --cases must be at least 1\n";
    return kExitUsage;
  }
  auto outcomes = run_property_suite({config.seed, config.cases, config.inject_fault});
  bool all_ok = true;
  for (const auto& o : outcomes) {
    out << o.name << ": " << o.passed << "/" << o.cases << " passed\n";
    if (!o.ok()) {
      if (all_ok) out << "counterexample for " << o.name << ":\n" << *o.counterexample;
      all_ok = false;
    }
  }
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_incexc_demo(const CliConfig& config, std::ostream& out, std::ostream& err) {
  Poset poset = parse_poset(config.one_point ? kOnePointPoset : kDiamondPoset);
  std::string_view parts = config.one_point ? kOnePointParts : kDiamondParts;
  IndexedFamily a = parse_family(poset, parts);
  IndexedFamily b = parse_family(poset, parts);
  PointMatchings gs;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    Element p = poset.points().at(i);
    gs.emplace_back(p, rotation(a.below(p), b.below(p), i + 1));
  }
  auto result = inclusion_exclusion(a, b, gs, {.memoize = true, .step_budget = config.budget});

  for (const auto& [p, fp] : result.matchings()) {
    if (auto report = verify(fp); !report) {
      err << "f_" << encode(p) << " failed verification: " << report.describe() << "\n";
      return kExitFailure;
    }
  }

  if (config.format == Format::Json) {
    json relations = json::array();
    for (auto q : poset.points())
      for (auto p : poset.points())
        if (poset.less(q, p)) relations.push_back(json::array({to_json(q), to_json(p)}));
    json points = json::array();
    for (auto p : poset.points()) points.push_back(to_json(p));
    json matchings = json::array();
    for (const auto& [p, fp] : result.matchings()) {
      json rows = json::array();
      for (auto x : fp.domain()) rows.push_back(json::array({to_json(x), to_json(fp.forward(x))}));
      json given = json::array();
      const Matching& g = matching_at(gs, p);
      for (auto x : g.domain()) given.push_back(json::array({to_json(x), to_json(g.forward(x))}));
      matchings.push_back({{"point", to_json(p)}, {"g", given}, {"f", rows}});
    }
    json doc = {{"points", points}, {"relations", relations}, {"matchings", matchings}, {"verified", true}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  out << "# poset\n";
  for (auto q : poset.points())
    for (auto p : poset.points())
      if (poset.less(q, p)) out << encode(q) << " <= " << encode(p) << "\n";
  for (const auto& [p, fp] : result.matchings()) {
    out << "# g_" << encode(p) << "\n" << write_table(matching_at(gs, p));
    out << "# f_" << encode(p) << "\n" << write_table(fp);
  }
  return kExitOk;
}

std::vector<std::pair<Element, Element>> parse_paper_table(std::string_view text) {
  std::vector<std::pair<Element, Element>> rows;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) continue;
    Element row = decode(line);
    rows.emplace_back(row.first(), row.second());
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Matchings: subtraction, inclusion-exclusion and extreme division of finite bijections", "matchings"};
  app.require_subcommand(1);
  app.add_option("--budget", config.budget, "Step budget for xdiv and inclusion-exclusion")
      ->check(CLI::PositiveNumber);

  std::map<std::string, Format> formats{{"paper", Format::Paper}, {"json", Format::Json}};

  auto* binom_cmd = app.add_subcommand("binom", "Print the matching choose(n,k) -> choose(n,n-k)");
  binom_cmd->add_option("n", config.n)->required();
  binom_cmd->add_option("k", config.k)->required();
  binom_cmd->add_option("--format", config.format)->transform(CLI::CheckedTransformer(formats));

  auto* verify_cmd = app.add_subcommand("verify-binom", "Check the binomial matching is total and bijective");
  verify_cmd->add_option("n", config.n)->required();
  verify_cmd->add_option("k", config.k)->required();

  auto* props_cmd = app.add_subcommand("props", "Run the randomized property suites");
  props_cmd->add_option("--seed", config.seed);
  props_cmd->add_option("--cases", config.cases);
  props_cmd->add_flag("--inject-fault", config.inject_fault)->group("");

  auto* incexc_cmd = app.add_subcommand("incexc-demo", "Inclusion-exclusion on a fixed diamond poset");
  incexc_cmd->add_option("--format", config.format)->transform(CLI::CheckedTransformer(formats));
  incexc_cmd->add_flag("--one-point", config.one_point, "Use a one-point poset instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; everything else is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (binom_cmd->parsed()) return cmd_binom(config, out, err);
    if (verify_cmd->parsed()) return cmd_verify_binom(config, out, err);
    if (props_cmd->parsed()) return cmd_props(config, out, err);
    return cmd_incexc_demo(config, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace matchings::cli
