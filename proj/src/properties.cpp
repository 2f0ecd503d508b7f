#include "matchings/properties.hpp"

#include <functional>

#include "matchings/error.hpp"

namespace matchings {

namespace {

template <typename Body>
CheckResult guarded(Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return std::string("error: ") + e.what();
  }
}

}  // namespace

CheckResult check_subtraction_soundness(const SubtractionInstance& inst) {
  return guarded([&]() -> CheckResult {
    auto report = verify(subtract(inst.f, inst.g));
    if (!report) return "subtract(f, g) failed verification: " + report.describe();
    for (auto x : inst.a)
      if (auto t = subtract_forward_trace(inst.f, inst.g, x); t.iterations > inst.d.size())
        return "forward orbit of " + encode(x) + " took " + std::to_string(t.iterations) + " iterations";
    for (auto y : inst.b)
      if (auto t = subtract_backward_trace(inst.f, inst.g, y); t.iterations > inst.d.size())
        return "backward orbit of " + encode(y) + " took " + std::to_string(t.iterations) + " iterations";
    return std::nullopt;
  });
}

CheckResult check_result_respect(const SubtractionInstance& inst) {
  return guarded([&]() -> CheckResult {
    if (!check_result_respects(inst.f, inst.g)) return "subtract(f, g) does not respect f";
    return std::nullopt;
  });
}

CheckResult check_idempotence(const SubtractionInstance& inst) {
  return guarded([&]() -> CheckResult {
    bool respectful = respects(inst.g, inst.f);
    bool same = pointwise_equal(double_subtract(inst.f, inst.g), inst.g);
    if (respectful && !same) return "g respects f but f \\ (f \\ g) differs from g";
    if (!respectful && same) return "g does not respect f but f \\ (f \\ g) equals g";
    return std::nullopt;
  });
}

CheckResult check_closure(const SubtractionInstance& inst) {
  return guarded([&]() -> CheckResult {
    Matching once = subtract(inst.f, inst.g);
    Matching thrice = subtract(inst.f, double_subtract(inst.f, inst.g));
    if (!pointwise_equal(once, thrice)) return "f \\ (f \\ (f \\ g)) differs from f \\ g";
    return std::nullopt;
  });
}

CheckResult check_respectful_agreement(const SubtractionInstance& inst) {
  return guarded([&]() -> CheckResult {
    if (!respects(inst.g, inst.f)) return std::nullopt;
    if (!pointwise_equal(respectful_subtract(inst.f, inst.g), subtract(inst.f, inst.g)))
      return "respectful_subtract differs from subtract";
    return std::nullopt;
  });
}

CheckResult check_incexc_soundness(const IncExcInstance& inst) {
  return guarded([&]() -> CheckResult {
    auto result = inclusion_exclusion(inst.a, inst.b, inst.gs);
    for (const auto& [p, fp] : result.matchings())
      if (auto report = verify(fp); !report) return "f_" + encode(p) + " failed verification: " + report.describe();
    return std::nullopt;
  });
}

CheckResult check_incexc_minimal(const IncExcInstance& inst) {
  return guarded([&]() -> CheckResult {
    auto result = inclusion_exclusion(inst.a, inst.b, inst.gs);
    const Poset& poset = inst.a.poset();
    for (const auto& [p, fp] : result.matchings()) {
      if (!poset.is_minimal(p)) continue;
      const Matching& g = matching_at(inst.gs, p);
      for (auto x : fp.domain())
        if (!(Element::pair(p, fp.forward(x)) == g.forward(Element::pair(p, x))))
          return "minimal point " + encode(p) + ": f_p differs from g_p at " + encode(x);
    }
    return std::nullopt;
  });
}

CheckResult check_incexc_memo_transparency(const IncExcInstance& inst) {
  return guarded([&]() -> CheckResult {
    auto memo = inclusion_exclusion(inst.a, inst.b, inst.gs, {.memoize = true});
    auto plain = inclusion_exclusion(inst.a, inst.b, inst.gs, {.memoize = false});
    for (const auto& [p, fp] : memo.matchings())
      if (!pointwise_equal(fp, plain.at(p))) return "memoized and plain f_" + encode(p) + " differ";
    return std::nullopt;
  });
}

ChainSubtraction chain_as_subtraction(const IncExcInstance& inst, const IncExcResult& result) {
  const Poset& poset = inst.a.poset();
  if (!is_two_chain(poset)) throw Error(ErrorCode::CarrierMismatch, "not a two-point chain");
  Element p0 = poset.points().at(0);
  Element p1 = poset.points().at(1);
  Element bottom = poset.leq(p0, p1) ? p0 : p1;
  Element top = poset.leq(p0, p1) ? p1 : p0;

  const Matching& g_top = matching_at(inst.gs, top);
  // (top, x) <-> L:x and (bottom, x) <-> R:x
  auto to_tagged = [top](const Element& e) {
    return e.first() == top ? Element::tag_left(e.second()) : Element::tag_right(e.second());
  };
  auto from_tagged = [top, bottom](const Element& t) {
    return Element::pair(t.is_left() ? top : bottom, t.untag());
  };
  Matching f = Matching::computed(
      sum_set(inst.a.part(top), inst.a.part(bottom)), sum_set(inst.b.part(top), inst.b.part(bottom)),
      [=](const Element& t) { return to_tagged(g_top.forward(from_tagged(t))); },
      [=](const Element& t) { return to_tagged(g_top.backward(from_tagged(t))); });
  return {f, result.at(bottom), top, bottom};
}

CheckResult check_incexc_chain(const IncExcInstance& inst) {
  return guarded([&]() -> CheckResult {
    auto result = inclusion_exclusion(inst.a, inst.b, inst.gs);
    auto chain = chain_as_subtraction(inst, result);
    if (!pointwise_equal(result.at(chain.top), subtract(chain.f, chain.g)))
      return "f_top differs from g_top \\ f_bottom";
    return std::nullopt;
  });
}

namespace {

IncExcInstance with_fault(IncExcInstance inst) {
  for (auto& [p, g] : inst.gs) {
    if (g.domain().size() >= 2) {
      g = flip_one_entry(g);
      break;
    }
  }
  return inst;
}

template <typename Instance>
void record(PropertyOutcome& outcome, const Instance& inst, const CheckResult& failure) {
  ++outcome.cases;
  if (!failure) {
    ++outcome.passed;
    return;
  }
  if (!outcome.counterexample) outcome.counterexample = *failure + "\n" + inst.describe();
}

}  // namespace

std::vector<PropertyOutcome> run_property_suite(const PropertySuiteConfig& config) {
  Rng rng(config.seed);

  using SubCheck = std::function<CheckResult(const SubtractionInstance&)>;
  const std::vector<std::pair<std::string, SubCheck>> sub_checks = {
      {"subtraction-soundness", check_subtraction_soundness},
      {"subtraction-result-respects", check_result_respect},
      {"subtraction-idempotence-iff-respectful", check_idempotence},
      {"subtraction-closure", check_closure},
      {"respectful-agrees-with-general", check_respectful_agreement},
  };
  using IncCheck = std::function<CheckResult(const IncExcInstance&)>;
  const std::vector<std::pair<std::string, IncCheck>> inc_checks = {
      {"incexc-soundness", check_incexc_soundness},
      {"incexc-minimal-points", check_incexc_minimal},
      {"incexc-memo-transparency", check_incexc_memo_transparency},
  };

  std::vector<PropertyOutcome> outcomes;
  auto add = [&](std::string name) {
    outcomes.emplace_back();
    outcomes.back().name = std::move(name);
  };
  for (const auto& [name, _] : sub_checks) add(name);
  for (const auto& [name, _] : inc_checks) add(name);
  add("incexc-chain-matches-subtraction");

  for (std::size_t i = 0; i < config.cases; ++i) {
    SubtractionInstance inst = random_subtraction_instance(rng);
    if (config.inject_fault) inst.g = flip_one_entry(inst.g);
    for (std::size_t k = 0; k < sub_checks.size(); ++k) record(outcomes[k], inst, sub_checks[k].second(inst));
  }
  for (std::size_t i = 0; i < config.cases; ++i) {
    IncExcInstance inst = random_incexc_instance(rng);
    if (config.inject_fault) inst = with_fault(std::move(inst));
    for (std::size_t k = 0; k < inc_checks.size(); ++k)
      record(outcomes[sub_checks.size() + k], inst, inc_checks[k].second(inst));
  }
  for (std::size_t i = 0; i < config.cases; ++i) {
    IncExcInstance inst = random_chain_instance(rng);
    if (config.inject_fault) inst = with_fault(std::move(inst));
    record(outcomes.back(), inst, check_incexc_chain(inst));
  }
  return outcomes;
}

}  // namespace matchings
