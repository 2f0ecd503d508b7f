#include "matchings/matching.hpp"

#include <mutex>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "matchings/error.hpp"

namespace matchings {

namespace {

Element lookup(const FiniteSet& carrier, const std::vector<Element>& images, const Element& x) {
  auto i = carrier.index_of(x);
  if (!i) throw Error(ErrorCode::DomainMismatch, "argument outside carrier: " + encode(x));
  return images[*i];
}

struct MemoCache {
  Matching underlying;
  std::mutex mutex;
  std::unordered_map<Element, Element> forward;
  std::unordered_map<Element, Element> backward;

  explicit MemoCache(Matching f) : underlying(std::move(f)) {}

  template <typename Eval>
  Element get(std::unordered_map<Element, Element>& cache, const Element& x, Eval&& eval) {
    {
      std::lock_guard lock(mutex);
      if (auto it = cache.find(x); it != cache.end()) return it->second;
    }
    // Evaluated unlocked: the underlying procedure may re-enter this matching.
    Element y = eval(x);
    std::lock_guard lock(mutex);
    return cache.emplace(x, std::move(y)).first->second;
  }
};

}  // namespace

Matching Matching::computed(FiniteSet domain, FiniteSet codomain, Function forward, Function backward,
                            Kind kind) {
  return Matching(std::make_shared<const Impl>(
      Impl{std::move(domain), std::move(codomain), std::move(forward), std::move(backward), kind}));
}

Matching make_matching(FiniteSet domain, FiniteSet codomain, const ElementPairs& pairs) {
  if (pairs.size() != domain.size() || pairs.size() != codomain.size())
    throw Error(ErrorCode::NotABijection, "table has " + std::to_string(pairs.size()) + " entries for carriers of size " +
                                              std::to_string(domain.size()) + " and " +
                                              std::to_string(codomain.size()));
  std::vector<std::optional<Element>> images(domain.size());
  std::vector<std::optional<Element>> preimages(codomain.size());
  for (const auto& [x, y] : pairs) {
    auto i = domain.index_of(x);
    if (!i) throw Error(ErrorCode::NotABijection, "left entry outside domain: " + encode(x));
    auto j = codomain.index_of(y);
    if (!j) throw Error(ErrorCode::NotABijection, "right entry outside codomain: " + encode(y));
    if (images[*i]) throw Error(ErrorCode::NotABijection, "duplicate left entry: " + encode(x));
    if (preimages[*j]) throw Error(ErrorCode::NotABijection, "duplicate right entry: " + encode(y));
    images[*i] = y;
    preimages[*j] = x;
  }
  // Sizes agree and there are no duplicates, so both tables are full.
  std::vector<Element> fwd;
  std::vector<Element> bwd;
  fwd.reserve(images.size());
  bwd.reserve(preimages.size());
  for (auto& e : images) fwd.push_back(std::move(*e));
  for (auto& e : preimages) bwd.push_back(std::move(*e));
  return Matching::computed(
      domain, codomain, [domain, fwd = std::move(fwd)](const Element& x) { return lookup(domain, fwd, x); },
      [codomain, bwd = std::move(bwd)](const Element& y) { return lookup(codomain, bwd, y); },
      Matching::Kind::Table);
}

Matching identity_matching(const FiniteSet& a) {
  auto id = [a](const Element& x) {
    if (!a.contains(x)) throw Error(ErrorCode::DomainMismatch, "argument outside carrier: " + encode(x));
    return x;
  };
  return Matching::computed(a, a, id, id);
}

Matching invert(const Matching& f) {
  const auto& i = *f.impl_;
  return Matching(
      std::make_shared<const Matching::Impl>(Matching::Impl{i.codomain, i.domain, i.backward, i.forward, i.kind}));
}

Matching compose(const Matching& f, const Matching& g) {
  if (!same_elements(f.codomain(), g.domain()))
    throw Error(ErrorCode::DomainMismatch, "compose: codomain of the first differs from domain of the second");
  return Matching::computed(
      f.domain(), g.codomain(), [f, g](const Element& x) { return g.forward(f.forward(x)); },
      [f, g](const Element& y) { return f.backward(g.backward(y)); });
}

Matching add_matchings(const Matching& f, const Matching& g) {
  auto apply = [](const Element& t, auto&& left, auto&& right) {
    if (t.is_left()) return Element::tag_left(left(t.untag()));
    if (t.is_right()) return Element::tag_right(right(t.untag()));
    throw Error(ErrorCode::DomainMismatch, "untagged argument to a sum matching: " + encode(t));
  };
  return Matching::computed(
      sum_set(f.domain(), g.domain()), sum_set(f.codomain(), g.codomain()),
      [f, g, apply](const Element& t) {
        return apply(t, [&](const Element& x) { return f.forward(x); }, [&](const Element& x) { return g.forward(x); });
      },
      [f, g, apply](const Element& t) {
        return apply(t, [&](const Element& y) { return f.backward(y); },
                     [&](const Element& y) { return g.backward(y); });
      });
}

Matching mul_matchings(const Matching& f, const Matching& g) {
  auto check = [](const Element& t) {
    if (!t.is_pair()) throw Error(ErrorCode::DomainMismatch, "non-pair argument to a product matching: " + encode(t));
  };
  return Matching::computed(
      product_set(f.domain(), g.domain()), product_set(f.codomain(), g.codomain()),
      [f, g, check](const Element& t) {
        check(t);
        return Element::pair(f.forward(t.first()), g.forward(t.second()));
      },
      [f, g, check](const Element& t) {
        check(t);
        return Element::pair(f.backward(t.first()), g.backward(t.second()));
      });
}

Matching memoize(const Matching& f) {
  if (f.kind() == Matching::Kind::Memoized) return f;
  auto cache = std::make_shared<MemoCache>(f);
  return Matching::computed(
      f.domain(), f.codomain(),
      [cache](const Element& x) {
        return cache->get(cache->forward, x, [&](const Element& a) { return cache->underlying.forward(a); });
      },
      [cache](const Element& y) {
        return cache->get(cache->backward, y, [&](const Element& b) { return cache->underlying.backward(b); });
      },
      Matching::Kind::Memoized);
}

std::string_view to_string(VerificationReport::Failure failure) {
  using F = VerificationReport::Failure;
  switch (failure) {
    case F::None: return "none";
    case F::SizeMismatch: return "size-mismatch";
    case F::Totality: return "totality";
    case F::ImageOutsideCodomain: return "image-outside-carrier";
    case F::NotInjective: return "injectivity";
    case F::RoundTripForward: return "round-trip-forward";
    case F::RoundTripBackward: return "round-trip-backward";
  }
  return "unknown";
}

std::string VerificationReport::describe() const {
  if (passed()) return "pass";
  std::string out = "fail(" + std::string(to_string(failure));
  if (!witness.empty()) out += ", " + witness;
  out += ")";
  if (!detail.empty()) out += ": " + detail;
  return out;
}

namespace {

using Failure = VerificationReport::Failure;

VerificationReport fail(Failure failure, std::string witness, std::string detail = {}) {
  return VerificationReport{failure, std::move(witness), std::move(detail)};
}

// Evaluates `direction` over `carrier`, recording images. Returns a failure
// report for the first point that throws or lands outside `target`.
std::optional<VerificationReport> evaluate_all(const FiniteSet& carrier, const FiniteSet& target,
                                               const Matching::Function& direction, std::string_view name,
                                               std::vector<std::size_t>& image_index) {
  image_index.clear();
  image_index.reserve(carrier.size());
  for (auto x : carrier) {
    Element y;
    try {
      y = direction(x);
    } catch (const Error& e) {
      return fail(Failure::Totality, encode(x), std::string(name) + " undefined: " + e.what());
    }
    auto j = target.index_of(y);
    if (!j) return fail(Failure::ImageOutsideCodomain, encode(x) + " -> " + encode(y), std::string(name));
    image_index.push_back(*j);
  }
  return std::nullopt;
}

std::optional<VerificationReport> check_injective(const FiniteSet& carrier, const std::vector<std::size_t>& images,
                                                  std::size_t target_size, std::string_view name) {
  std::vector<std::optional<std::size_t>> seen(target_size);
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto& slot = seen[images[i]];
    if (slot)
      return fail(Failure::NotInjective, encode(carrier.at(*slot)) + ", " + encode(carrier.at(i)),
                  std::string(name) + " sends both to the same image");
    slot = i;
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify(const Matching& f) {
  const auto& dom = f.domain();
  const auto& cod = f.codomain();
  if (dom.size() != cod.size())
    return fail(Failure::SizeMismatch, {},
                "domain has " + std::to_string(dom.size()) + " elements, codomain " + std::to_string(cod.size()));

  auto fwd = [&f](const Element& x) { return f.forward(x); };
  auto bwd = [&f](const Element& y) { return f.backward(y); };
  std::vector<std::size_t> images;
  std::vector<std::size_t> preimages;
  if (auto r = evaluate_all(dom, cod, fwd, "forward", images)) return *r;
  if (auto r = evaluate_all(cod, dom, bwd, "backward", preimages)) return *r;
  if (auto r = check_injective(dom, images, cod.size(), "forward")) return *r;
  if (auto r = check_injective(cod, preimages, dom.size(), "backward")) return *r;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (preimages[images[i]] != i)
      return fail(Failure::RoundTripForward, encode(dom.at(i)),
                  "backward(forward(x)) = " + encode(dom.at(preimages[images[i]])));
  for (std::size_t j = 0; j < preimages.size(); ++j)
    if (images[preimages[j]] != j)
      return fail(Failure::RoundTripBackward, encode(cod.at(j)),
                  "forward(backward(y)) = " + encode(cod.at(images[preimages[j]])));
  return {};
}

bool pointwise_equal(const Matching& a, const Matching& b) {
  if (!same_elements(a.domain(), b.domain()) || !same_elements(a.codomain(), b.codomain())) return false;
  for (auto x : a.domain())
    if (!(a.forward(x) == b.forward(x))) return false;
  for (auto y : a.codomain())
    if (!(a.backward(y) == b.backward(y))) return false;
  return true;
}

std::string write_table(const Matching& f) {
  std::string out;
  for (auto x : f.domain()) {
    out += encode(x);
    out += " -> ";
    out += encode(f.forward(x));
    out += '\n';
  }
  return out;
}

Matching read_table(std::string_view text) {
  ElementPairs pairs;
  std::vector<Element> lefts;
  std::vector<Element> rights;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    auto arrow = line.find(" -> ");
    if (arrow == std::string_view::npos)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": missing ' -> '");
    Element x = decode(line.substr(0, arrow));
    Element y = decode(line.substr(arrow + 4));
    lefts.push_back(x);
    rights.push_back(y);
    pairs.emplace_back(std::move(x), std::move(y));
  }
  FiniteSet domain, codomain;
  try {
    domain = FiniteSet::from(std::move(lefts));
    codomain = FiniteSet::from(std::move(rights));
  } catch (const Error& e) {
    throw Error(ErrorCode::NotABijection, e.what());
  }
  return make_matching(std::move(domain), std::move(codomain), pairs);
}

}  // namespace matchings
