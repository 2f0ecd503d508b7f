#include "matchings/xdiv.hpp"

#include "matchings/error.hpp"

namespace matchings {

void MatchingPair::validate() const {
  if (!same_elements(forward.domain(), product_set(a, c)) || !same_elements(forward.codomain(), product_set(b, c)))
    throw Error(ErrorCode::CarrierMismatch, "F is not a matching A×C -> B×C");
  if (!same_elements(backward.domain(), product_set(b, c)) || !same_elements(backward.codomain(), product_set(a, c)))
    throw Error(ErrorCode::CarrierMismatch, "G is not a matching B×C -> A×C");
}

struct XDivEvaluator::Frame {
  Side side;
  Element x;
  Element y;
  Element z;
  bool started = false;
};

XDivEvaluator::XDivEvaluator(MatchingPair fg, Element omega, XDivOptions options)
    : fg_(std::move(fg)), omega_(std::move(omega)), options_(options) {
  if (!fg_.c.contains(omega_)) throw Error(ErrorCode::OmegaNotInC, encode(omega_));
  fg_.validate();
}

std::pair<Element, Element> XDivEvaluator::apply(Side side, const Element& arg) {
  if (applications_ >= options_.budget) throw BudgetExhausted{};
  ++applications_;
  Element out = side == Side::F ? fg_.forward.forward(arg) : fg_.backward.forward(arg);
  const FiniteSet& left = side == Side::F ? fg_.b : fg_.a;
  if (!out.is_pair() || !left.contains(out.first()) || !fg_.c.contains(out.second()))
    throw Error(ErrorCode::CarrierMismatch, std::string(side == Side::F ? "F" : "G") + " sent " + encode(arg) +
                                                " outside its codomain: " + encode(out));
  return {out.first(), out.second()};
}

std::optional<Element> XDivEvaluator::evaluate(Side side, const Element& x) {
  if (options_.memoize) {
    if (auto it = memo(side).find(x); it != memo(side).end()) return it->second;
  }
  std::vector<Frame> stack;
  stack.push_back({side, x, {}, {}, false});
  std::optional<Element> returned;
  try {
    while (true) {
      Frame& fr = stack.back();
      if (!fr.started) {
        std::tie(fr.y, fr.z) = apply(fr.side, Element::pair(fr.x, omega_));
        fr.started = true;
      } else if (returned) {
        std::tie(fr.y, fr.z) = apply(fr.side, Element::pair(*returned, fr.z));
        returned.reset();
      }
      bool descended = false;
      while (!(fr.z == omega_)) {
        Side other = fr.side == Side::F ? Side::G : Side::F;
        if (options_.memoize) {
          if (auto it = memo(other).find(fr.y); it != memo(other).end()) {
            std::tie(fr.y, fr.z) = apply(fr.side, Element::pair(it->second, fr.z));
            continue;
          }
        }
        Element child = fr.y;
        stack.push_back({other, std::move(child), {}, {}, false});
        descended = true;
        break;
      }
      if (descended) continue;
      Element result = fr.y;
      if (options_.memoize) memo(fr.side).emplace(fr.x, result);
      stack.pop_back();
      if (stack.empty()) return result;
      returned = std::move(result);
    }
  } catch (const BudgetExhausted&) {
    constexpr std::size_t kShown = 8;
    std::string trace;
    std::size_t start = stack.size() > kShown ? stack.size() - kShown : 0;
    if (start > 0) trace += "... " + std::to_string(start) + " frames ... ";
    for (std::size_t i = start; i < stack.size(); ++i) {
      trace += (stack[i].side == Side::F ? "f(" : "g(") + encode(stack[i].x) + ")";
      if (i + 1 < stack.size()) trace += " <- ";
    }
    last_trace_ = std::move(trace);
    return std::nullopt;
  }
}

std::optional<Element> PartialMatchingPair::f(const Element& x) const {
  auto i = a.index_of(x);
  if (!i) return std::nullopt;
  return f_values[*i].value;
}

std::optional<Element> PartialMatchingPair::g(const Element& y) const {
  auto j = b.index_of(y);
  if (!j) return std::nullopt;
  return g_values[*j].value;
}

std::string PartialMatchingPair::stats_report() const {
  std::string out;
  auto lines = [&out](char name, const FiniteSet& carrier, const std::vector<PointResult>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      out += name;
      out += "(" + encode(carrier.at(i)) + ") ";
      out += values[i].value ? "= " + encode(*values[i].value) : std::string("undefined (budget)");
      out += " steps=" + std::to_string(values[i].steps) + "\n";
    }
  };
  lines('f', a, f_values);
  lines('g', b, g_values);
  out += "omega = " + encode(omega) + "\n";
  out += "memoized = " + std::string(memoized ? "yes" : "no") + "\n";
  out += "total steps = " + std::to_string(total_steps) + "\n";
  return out;
}

PartialMatchingPair xdiv(const MatchingPair& fg, const Element& omega, const XDivOptions& options) {
  XDivEvaluator eval(fg, omega, options);
  PartialMatchingPair out{fg.a, fg.b, omega, {}, {}, 0, options.memoize};
  auto run = [&eval](auto&& fn, const Element& x) {
    PointResult r;
    std::size_t before = eval.applications();
    r.value = fn(x);
    r.steps = eval.applications() - before;
    if (!r.value) r.trace = eval.last_trace();
    return r;
  };
  for (auto x : fg.a) out.f_values.push_back(run([&](const Element& e) { return eval.f(e); }, x));
  for (auto y : fg.b) out.g_values.push_back(run([&](const Element& e) { return eval.g(e); }, y));
  out.total_steps = eval.applications();
  return out;
}

std::string TotalityReport::describe() const {
  if (total) return "total";
  std::string out = "not total: ";
  out += side;
  out += "(" + (point ? encode(*point) : std::string("?")) + ") undefined";
  if (!trace.empty()) out += "; trace: " + trace;
  return out;
}

TotalityReport check_total(const PartialMatchingPair& pair) {
  for (std::size_t i = 0; i < pair.f_values.size(); ++i)
    if (!pair.f_values[i].value) return {false, 'f', pair.a.at(i), pair.f_values[i].trace};
  for (std::size_t j = 0; j < pair.g_values.size(); ++j)
    if (!pair.g_values[j].value) return {false, 'g', pair.b.at(j), pair.g_values[j].trace};
  return {};
}

DividedMatchings as_matchings(const PartialMatchingPair& pair) {
  if (auto report = check_total(pair); !report) throw Error(ErrorCode::NotTotal, report.describe());
  ElementPairs f_pairs;
  ElementPairs g_pairs;
  for (std::size_t i = 0; i < pair.a.size(); ++i) f_pairs.emplace_back(pair.a.at(i), *pair.f_values[i].value);
  for (std::size_t j = 0; j < pair.b.size(); ++j) g_pairs.emplace_back(pair.b.at(j), *pair.g_values[j].value);
  // make_matching rejects anything that is not a bijection; the inverse it
  // stores is read off the table, which is g itself when g inverts f.
  Matching f = make_matching(pair.a, pair.b, f_pairs);
  Matching g = make_matching(pair.b, pair.a, g_pairs);
  bool mutual = true;
  for (auto x : pair.a)
    if (!(g.forward(f.forward(x)) == x)) mutual = false;
  for (auto y : pair.b)
    if (!(f.forward(g.forward(y)) == y)) mutual = false;
  return {f, g, mutual};
}

}  // namespace matchings
