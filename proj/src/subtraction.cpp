#include "matchings/subtraction.hpp"

#include "matchings/error.hpp"

namespace matchings {

namespace {

Element flip_tag(const Element& t) {
  if (t.is_left()) return Element::tag_right(t.untag());
  if (t.is_right()) return Element::tag_left(t.untag());
  throw Error(ErrorCode::DomainMismatch, "untagged element in a sum carrier: " + encode(t));
}

Summands summands_of(const FiniteSet& s, const char* which) {
  try {
    return split_sum(s);
  } catch (const Error&) {
    throw Error(ErrorCode::DomainMismatch, std::string(which) + " of f is not a disjoint union");
  }
}

// y := outer(L:x); while y ∈ R:inner_carrier do y := outer(R:inner(untag y)).
// Forward uses (f, g⁻¹); backward uses (f⁻¹, g).
template <typename Outer, typename Inner>
OrbitTrace run_orbit(Outer&& outer, Inner&& inner, const Element& x, std::size_t cap) {
  Element y = outer(Element::tag_left(x));
  std::size_t iterations = 0;
  while (y.is_right()) {
    if (++iterations > cap)
      throw Error(ErrorCode::IterationOverflow,
                  "orbit of " + encode(x) + " exceeded " + std::to_string(cap) + " iterations");
    y = outer(Element::tag_right(inner(y.untag())));
  }
  if (!y.is_left()) throw Error(ErrorCode::DomainMismatch, "untagged image " + encode(y));
  return {y.untag(), iterations};
}

}  // namespace

SubtractionCarriers subtraction_carriers(const Matching& f, const Matching& g) {
  auto [a, c] = summands_of(f.domain(), "domain");
  auto [b, d] = summands_of(f.codomain(), "codomain");
  if (!same_elements(g.domain(), c))
    throw Error(ErrorCode::DomainMismatch, "domain of g differs from the R: summand of f's domain");
  if (!same_elements(g.codomain(), d))
    throw Error(ErrorCode::DomainMismatch, "codomain of g differs from the R: summand of f's codomain");
  if (a.size() != b.size() || c.size() != d.size())
    throw Error(ErrorCode::DomainMismatch, "carrier sizes disagree: |A|=" + std::to_string(a.size()) +
                                               " |B|=" + std::to_string(b.size()) + " |C|=" +
                                               std::to_string(c.size()) + " |D|=" + std::to_string(d.size()));
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

bool respects(const Matching& g, const Matching& f) {
  auto carriers = subtraction_carriers(f, g);
  for (auto x : carriers.c) {
    Element y = f.forward(Element::tag_right(x));
    if (y.is_right() && !(g.forward(x) == y.untag())) return false;
  }
  return true;
}

Matching respectful_subtract(const Matching& f, const Matching& g) {
  auto carriers = subtraction_carriers(f, g);
  if (!respects(g, f)) throw Error(ErrorCode::NotRespectful, "g does not respect f");
  auto step = [](auto&& outer, auto&& inner, const Element& x) {
    Element y = outer(Element::tag_left(x));
    if (y.is_right()) y = outer(Element::tag_right(inner(y.untag())));
    if (!y.is_left()) throw Error(ErrorCode::NotRespectful, "second step of " + encode(x) + " stayed in D");
    return y.untag();
  };
  return Matching::computed(
      carriers.a, carriers.b,
      [f, g, step](const Element& x) {
        return step([&](const Element& t) { return f.forward(t); }, [&](const Element& t) { return g.backward(t); }, x);
      },
      [f, g, step](const Element& y) {
        return step([&](const Element& t) { return f.backward(t); }, [&](const Element& t) { return g.forward(t); }, y);
      });
}

OrbitTrace subtract_forward_trace(const Matching& f, const Matching& g, const Element& a) {
  auto cap = subtraction_carriers(f, g).d.size();
  return run_orbit([&](const Element& t) { return f.forward(t); }, [&](const Element& t) { return g.backward(t); }, a,
                   cap);
}

OrbitTrace subtract_backward_trace(const Matching& f, const Matching& g, const Element& b) {
  auto cap = subtraction_carriers(f, g).d.size();
  return run_orbit([&](const Element& t) { return f.backward(t); }, [&](const Element& t) { return g.forward(t); }, b,
                   cap);
}

Matching subtract(const Matching& f, const Matching& g) {
  auto carriers = subtraction_carriers(f, g);
  std::size_t cap = carriers.d.size();
  return Matching::computed(
      carriers.a, carriers.b,
      [f, g, cap](const Element& x) {
        return run_orbit([&](const Element& t) { return f.forward(t); },
                         [&](const Element& t) { return g.backward(t); }, x, cap)
            .value;
      },
      [f, g, cap](const Element& y) {
        return run_orbit([&](const Element& t) { return f.backward(t); },
                         [&](const Element& t) { return g.forward(t); }, y, cap)
            .value;
      });
}

Matching swap_roles(const Matching& f) {
  auto [a, c] = summands_of(f.domain(), "domain");
  auto [b, d] = summands_of(f.codomain(), "codomain");
  return Matching::computed(
      sum_set(c, a), sum_set(d, b), [f](const Element& t) { return flip_tag(f.forward(flip_tag(t))); },
      [f](const Element& t) { return flip_tag(f.backward(flip_tag(t))); });
}

bool check_result_respects(const Matching& f, const Matching& g) { return respects(subtract(f, g), swap_roles(f)); }

Matching double_subtract(const Matching& f, const Matching& g) { return subtract(swap_roles(f), subtract(f, g)); }

void SubtractionInstance::validate() const {
  if (!same_elements(f.domain(), sum_set(a, c)) || !same_elements(f.codomain(), sum_set(b, d)))
    throw Error(ErrorCode::DomainMismatch, "f is not a matching A+C -> B+D");
  if (!same_elements(g.domain(), c) || !same_elements(g.codomain(), d))
    throw Error(ErrorCode::DomainMismatch, "g is not a matching C -> D");
}

std::string SubtractionInstance::describe() const {
  auto list = [](const FiniteSet& s) {
    std::vector<Element> v = s.to_vector();
    return encode(Element::seq(std::move(v)));
  };
  std::string out;
  out += "A = " + list(a) + "\nB = " + list(b) + "\nC = " + list(c) + "\nD = " + list(d) + "\n";
  out += "f:\n" + write_table(f);
  out += "g:\n" + write_table(g);
  return out;
}

}  // namespace matchings
