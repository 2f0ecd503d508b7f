#include "matchings/random_instances.hpp"

#include <algorithm>
#include <numeric>

#include "matchings/error.hpp"

namespace matchings {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Matching random_matching(Rng& rng, const FiniteSet& domain, const FiniteSet& codomain) {
  if (domain.size() != codomain.size()) throw Error(ErrorCode::NotABijection, "random_matching: sizes differ");
  std::vector<std::size_t> perm(domain.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  ElementPairs pairs;
  for (std::size_t i = 0; i < perm.size(); ++i) pairs.emplace_back(domain.at(i), codomain.at(perm[i]));
  return make_matching(domain, codomain, pairs);
}

SubtractionInstance random_subtraction_instance(Rng& rng, std::size_t max_total) {
  std::size_t total = uniform(rng, 0, max_total);
  std::size_t na = uniform(rng, 0, total);
  std::size_t nc = total - na;
  FiniteSet a = FiniteSet::range(static_cast<std::int64_t>(na));
  FiniteSet b = FiniteSet::range(static_cast<std::int64_t>(na));
  FiniteSet c = FiniteSet::range(static_cast<std::int64_t>(nc));
  FiniteSet d = FiniteSet::range(static_cast<std::int64_t>(nc));
  Matching f = random_matching(rng, sum_set(a, c), sum_set(b, d));

  bool respectful = std::bernoulli_distribution(0.5)(rng);
  if (!respectful) return {a, b, c, d, f, random_matching(rng, c, d)};

  // Copy f wherever it already lands in D, then pair up what is left.
  ElementPairs pairs;
  std::vector<bool> c_used(nc, false);
  std::vector<bool> d_used(nc, false);
  for (std::size_t i = 0; i < nc; ++i) {
    Element y = f.forward(Element::tag_right(c.at(i)));
    if (y.is_right()) {
      pairs.emplace_back(c.at(i), y.untag());
      c_used[i] = true;
      d_used[*d.index_of(y.untag())] = true;
    }
  }
  std::vector<Element> free_d;
  for (std::size_t j = 0; j < nc; ++j)
    if (!d_used[j]) free_d.push_back(d.at(j));
  std::shuffle(free_d.begin(), free_d.end(), rng);
  std::size_t next = 0;
  for (std::size_t i = 0; i < nc; ++i)
    if (!c_used[i]) pairs.emplace_back(c.at(i), free_d[next++]);
  return {a, b, c, d, f, make_matching(c, d, pairs)};
}

namespace {

IncExcInstance random_instance_on(Rng& rng, const Poset& poset, std::size_t max_part) {
  std::vector<std::pair<Element, FiniteSet>> a_parts;
  std::vector<std::pair<Element, FiniteSet>> b_parts;
  for (auto p : poset.points()) {
    auto n = static_cast<std::int64_t>(uniform(rng, 0, max_part));
    a_parts.emplace_back(p, FiniteSet::range(n));
    b_parts.emplace_back(p, FiniteSet::range(n));
  }
  IndexedFamily a(poset, a_parts);
  IndexedFamily b(poset, b_parts);
  PointMatchings gs;
  for (auto p : poset.points()) gs.emplace_back(p, random_matching(rng, a.below(p), b.below(p)));
  return {std::move(a), std::move(b), std::move(gs)};
}

}  // namespace

IncExcInstance random_incexc_instance(Rng& rng, std::size_t max_points, std::size_t max_part) {
  auto n = static_cast<std::int64_t>(uniform(rng, 1, max_points));
  ElementPairs relations;
  std::bernoulli_distribution edge(0.4);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i + 1; j < n; ++j)
      if (edge(rng)) relations.emplace_back(Element::integer(i), Element::integer(j));
  return random_instance_on(rng, Poset(FiniteSet::range(n), relations), max_part);
}

IncExcInstance random_chain_instance(Rng& rng, std::size_t max_part) {
  Poset chain(FiniteSet::range(2), {{Element::integer(0), Element::integer(1)}});
  return random_instance_on(rng, chain, max_part);
}

bool is_two_chain(const Poset& poset) {
  if (poset.size() != 2) return false;
  return poset.leq_index(0, 1) || poset.leq_index(1, 0);
}

std::string IncExcInstance::describe() const {
  std::string out;
  const Poset& poset = a.poset();
  out += "points:";
  for (auto p : poset.points()) out += " " + encode(p);
  out += "\n";
  for (auto q : poset.points())
    for (auto p : poset.points())
      if (poset.less(q, p)) out += encode(q) + " <= " + encode(p) + "\n";
  for (const auto& [p, g] : gs) out += "g_" + encode(p) + ":\n" + write_table(g);
  return out;
}

Matching flip_one_entry(const Matching& g) {
  if (g.domain().size() < 2) return g;
  Element victim = g.domain().at(0);
  Element stolen = g.forward(g.domain().at(1));
  return Matching::computed(
      g.domain(), g.codomain(), [g, victim, stolen](const Element& x) { return x == victim ? stolen : g.forward(x); },
      [g](const Element& y) { return g.backward(y); });
}

}  // namespace matchings
