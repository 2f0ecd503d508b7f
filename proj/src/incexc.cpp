#include "matchings/incexc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "matchings/error.hpp"

namespace matchings {

// ---------------------------------------------------------------------------
// Poset

Poset::Poset(FiniteSet points, const ElementPairs& relations) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (const auto& [q, p] : relations) leq_[index_of(q) * n + index_of(p)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq_[i * n + j] && leq_[j * n + i])
        throw Error(ErrorCode::InvalidPoset,
                    "cycle through " + encode(points_.at(i)) + " and " + encode(points_.at(j)));
}

std::size_t Poset::index_of(const Element& p) const {
  auto i = points_.index_of(p);
  if (!i) throw Error(ErrorCode::UnknownPoint, encode(p));
  return *i;
}

bool Poset::leq(const Element& q, const Element& p) const { return leq_index(index_of(q), index_of(p)); }

bool Poset::less(const Element& q, const Element& p) const { return !(q == p) && leq(q, p); }

FiniteSet Poset::down_set(const Element& p) const {
  std::size_t pi = index_of(p);
  std::vector<Element> out;
  for (std::size_t q = 0; q < size(); ++q)
    if (leq_index(q, pi)) out.push_back(points_.at(q));
  return FiniteSet::from(std::move(out));
}

bool Poset::is_minimal(const Element& p) const {
  std::size_t pi = index_of(p);
  for (std::size_t q = 0; q < size(); ++q)
    if (q != pi && leq_index(q, pi)) return false;
  return true;
}

std::vector<Element> Poset::linear_extension() const {
  std::vector<std::size_t> below(size(), 0);
  for (std::size_t q = 0; q < size(); ++q)
    for (std::size_t p = 0; p < size(); ++p) below[p] += leq_index(q, p);
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  // q < p implies the down-set of q is strictly smaller.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
  std::vector<Element> out;
  for (auto i : order) out.push_back(points_.at(i));
  return out;
}

bool operator==(const Poset& a, const Poset& b) {
  if (!same_elements(a.points_, b.points_)) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.leq_index(i, j) != b.leq(a.points_.at(i), a.points_.at(j))) return false;
  return true;
}

FiniteSet down_set(const Poset& poset, const Element& p) { return poset.down_set(p); }

// ---------------------------------------------------------------------------
// IndexedFamily

IndexedFamily::IndexedFamily(Poset poset, const std::vector<std::pair<Element, FiniteSet>>& parts)
    : poset_(std::move(poset)), parts_(poset_.size()) {
  std::vector<bool> seen(poset_.size(), false);
  for (const auto& [p, part] : parts) {
    std::size_t i = poset_.index_of(p);
    if (seen[i]) throw Error(ErrorCode::CarrierMismatch, "part given twice for point " + encode(p));
    seen[i] = true;
    parts_[i] = part;
  }
  for (std::size_t p = 0; p < poset_.size(); ++p) {
    std::vector<Element> members;
    for (std::size_t q = 0; q < poset_.size(); ++q) {
      if (!poset_.leq_index(q, p)) continue;
      Element point = poset_.points().at(q);
      for (auto x : parts_[q]) members.push_back(Element::pair(point, x));
    }
    below_.push_back(FiniteSet::from(std::move(members)));
  }
}

FiniteSet IndexedFamily::total() const {
  std::vector<Element> members;
  for (std::size_t p = 0; p < poset_.size(); ++p) {
    Element point = poset_.points().at(p);
    for (auto x : parts_[p]) members.push_back(Element::pair(point, x));
  }
  return FiniteSet::from(std::move(members));
}

FiniteSet IndexedFamily::strictly_below(const Element& p) const {
  std::vector<Element> members;
  for (auto e : below(p))
    if (!(e.first() == p)) members.push_back(e);
  return FiniteSet::from(std::move(members));
}

bool IndexedFamily::contains(const Element& e) const {
  if (!e.is_pair()) return false;
  auto i = poset_.points().index_of(e.first());
  return i && parts_[*i].contains(e.second());
}

const Element& IndexedFamily::projection(const Element& e) const {
  if (!contains(e)) throw Error(ErrorCode::CarrierMismatch, "not a member of the family: " + encode(e));
  return e.first();
}

const Matching& matching_at(const PointMatchings& ms, const Element& p) {
  for (const auto& [q, m] : ms)
    if (q == p) return m;
  throw Error(ErrorCode::UnknownPoint, encode(p));
}

// ---------------------------------------------------------------------------
// Engine

class IncExcEngine {
 public:
  enum Dir { Forward = 0, Backward = 1 };

  IncExcEngine(IndexedFamily a, IndexedFamily b, std::vector<Matching> gs, IncExcOptions options)
      : a_(std::move(a)), b_(std::move(b)), gs_(std::move(gs)), options_(options) {}

  // F(p, x) for Forward, F̄(p, x) for Backward.
  Element eval(Dir dir, std::size_t p, const Element& x) {
    std::lock_guard lock(mutex_);
    std::vector<Frame> stack;
    stack.push_back({dir, p, x, {}});
    std::optional<Element> returned;
    std::size_t steps = 0;
    while (true) {
      Frame& fr = stack.back();
      if (returned) {
        fr.x = std::move(*returned);
        returned.reset();
      }
      const Element point = points().at(fr.p);
      Element key = Element::pair(point, fr.x);
      std::optional<Element> result;
      if (options_.memoize) {
        if (auto it = memo_[fr.dir].find(key); it != memo_[fr.dir].end()) result = it->second;
      }
      if (!result) {
        if (++steps > options_.step_budget) overflow(stack);
        ++evaluations_;
        const Matching& g = gs_[fr.p];
        Element y = fr.dir == Forward ? g.forward(fr.x) : g.backward(fr.x);
        const IndexedFamily& target = fr.dir == Forward ? b_ : a_;
        if (!target.below(point).contains(y))
          throw Error(ErrorCode::CarrierMismatch,
                      "g_" + encode(point) + " sent " + encode(fr.x) + " outside the down-set union: " + encode(y));
        if (y.first() == point) {
          result = std::move(y);
        } else {
          if (options_.memoize) fr.pending.push_back(std::move(key));
          std::size_t q = a_.poset().index_of(y.first());
          Dir other = fr.dir == Forward ? Backward : Forward;
          stack.push_back({other, q, std::move(y), {}});
          continue;
        }
      }
      // Every argument visited along a tail chain shares the chain's value.
      if (options_.memoize) {
        memo_[fr.dir].emplace(std::move(key), *result);
        for (auto& k : fr.pending) memo_[fr.dir].emplace(std::move(k), *result);
      }
      stack.pop_back();
      if (stack.empty()) return std::move(*result);
      returned = std::move(result);
    }
  }

  std::size_t evaluations() const {
    std::lock_guard lock(mutex_);
    return evaluations_;
  }

  const FiniteSet& points() const { return a_.poset().points(); }

 private:
  struct Frame {
    Dir dir;
    std::size_t p;
    Element x;
    std::vector<Element> pending;
  };

  [[noreturn]] void overflow(const std::vector<Frame>& stack) const {
    constexpr std::size_t kShown = 8;
    std::string trace;
    std::size_t start = stack.size() > kShown ? stack.size() - kShown : 0;
    if (start > 0) trace += "... " + std::to_string(start) + " frames ... ";
    for (std::size_t i = start; i < stack.size(); ++i) {
      const auto& fr = stack[i];
      trace += (fr.dir == Forward ? "F(" : "Fbar(") + encode(points().at(fr.p)) + ", " + encode(fr.x) + ")";
      if (i + 1 < stack.size()) trace += " <- ";
    }
    throw Error(ErrorCode::RecursionOverflow,
                "step budget of " + std::to_string(options_.step_budget) + " exhausted; stack: " + trace);
  }

  IndexedFamily a_;
  IndexedFamily b_;
  std::vector<Matching> gs_;
  IncExcOptions options_;
  mutable std::mutex mutex_;
  std::unordered_map<Element, Element> memo_[2];
  std::size_t evaluations_ = 0;
};

std::size_t IncExcResult::evaluations() const { return engine_->evaluations(); }

IncExcResult inclusion_exclusion(const IndexedFamily& a, const IndexedFamily& b, const PointMatchings& gs,
                                 const IncExcOptions& options) {
  if (!(a.poset() == b.poset())) throw Error(ErrorCode::CarrierMismatch, "families are indexed by different posets");
  const Poset& poset = a.poset();
  std::vector<std::optional<Matching>> by_point(poset.size());
  for (const auto& [p, g] : gs) {
    auto i = poset.points().index_of(p);
    if (!i) throw Error(ErrorCode::CarrierMismatch, "matching given for unknown point " + encode(p));
    if (by_point[*i]) throw Error(ErrorCode::CarrierMismatch, "two matchings given for point " + encode(p));
    if (!same_elements(g.domain(), a.below(p)) || !same_elements(g.codomain(), b.below(p)))
      throw Error(ErrorCode::CarrierMismatch, "g_" + encode(p) + " is not a matching A_{<=p} -> B_{<=p}");
    by_point[*i] = g;
  }
  std::vector<Matching> ordered;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (!by_point[i]) throw Error(ErrorCode::CarrierMismatch, "no matching for point " + encode(poset.points().at(i)));
    ordered.push_back(*by_point[i]);
  }

  IncExcResult result;
  result.engine_ = std::make_shared<IncExcEngine>(a, b, std::move(ordered), options);
  auto kind = options.memoize ? Matching::Kind::Memoized : Matching::Kind::Computed;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    Element p = poset.points().at(i);
    auto engine = result.engine_;
    result.matchings_.emplace_back(
        p, Matching::computed(
               a.part(p), b.part(p),
               [engine, i, p](const Element& x) {
                 return engine->eval(IncExcEngine::Forward, i, Element::pair(p, x)).second();
               },
               [engine, i, p](const Element& y) {
                 return engine->eval(IncExcEngine::Backward, i, Element::pair(p, y)).second();
               },
               kind));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace

Poset parse_poset(std::string_view text) {
  std::optional<FiniteSet> points;
  ElementPairs relations;
  constexpr std::string_view kPoints = "points:";
  for (auto line : content_lines(text)) {
    if (line.starts_with(kPoints)) {
      if (points) throw Error(ErrorCode::ParseError, "points declared twice");
      std::vector<Element> ps;
      std::string_view rest = line.substr(kPoints.size());
      if (rest.starts_with(' ')) rest.remove_prefix(1);
      while (!rest.empty()) {
        auto sep = rest.find("; ");
        ps.push_back(decode(rest.substr(0, sep)));
        rest = sep == std::string_view::npos ? std::string_view{} : rest.substr(sep + 2);
      }
      points = FiniteSet::from(std::move(ps));
      continue;
    }
    auto op = line.find(" <= ");
    if (op == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected 'q <= p': " + std::string(line));
    relations.emplace_back(decode(line.substr(0, op)), decode(line.substr(op + 4)));
  }
  if (!points) throw Error(ErrorCode::ParseError, "missing 'points:' declaration");
  return Poset(std::move(*points), relations);
}

IndexedFamily parse_family(const Poset& poset, std::string_view text) {
  std::vector<std::vector<Element>> members(poset.size());
  for (auto line : content_lines(text)) {
    auto sep = line.find(": ");
    if (sep == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected 'p: x': " + std::string(line));
    members[poset.index_of(decode(line.substr(0, sep)))].push_back(decode(line.substr(sep + 2)));
  }
  std::vector<std::pair<Element, FiniteSet>> parts;
  for (std::size_t i = 0; i < poset.size(); ++i)
    parts.emplace_back(poset.points().at(i), FiniteSet::from(std::move(members[i])));
  return IndexedFamily(poset, parts);
}

}  // namespace matchings
