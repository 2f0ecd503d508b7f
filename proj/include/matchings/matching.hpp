#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchings/element.hpp"
#include "matchings/finite_set.hpp"

namespace matchings {

/// A bijection between two finite sets, carried together with its inverse.
///
/// Matchings are cheap handles: copying shares the underlying tables or
/// closures. Carriers are always explicit so that any matching can be
/// enumerated and verified, even when `forward`/`backward` are procedures.
class Matching {
 public:
  enum class Kind { Table, Computed, Memoized };
  using Function = std::function<Element(const Element&)>;

  /// A matching whose directions are arbitrary procedures. Nothing is
  /// checked here; use verify() to judge the result.
  static Matching computed(FiniteSet domain, FiniteSet codomain, Function forward, Function backward,
                           Kind kind = Kind::Computed);

  const FiniteSet& domain() const noexcept { return impl_->domain; }
  const FiniteSet& codomain() const noexcept { return impl_->codomain; }
  Kind kind() const noexcept { return impl_->kind; }

  Element forward(const Element& x) const { return impl_->forward(x); }
  Element backward(const Element& y) const { return impl_->backward(y); }
  Element operator()(const Element& x) const { return forward(x); }

 private:
  struct Impl {
    FiniteSet domain;
    FiniteSet codomain;
    Function forward;
    Function backward;
    Kind kind;
  };
  explicit Matching(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  friend Matching invert(const Matching& f);

  std::shared_ptr<const Impl> impl_;
};

using ElementPairs = std::vector<std::pair<Element, Element>>;

/// Table-backed matching. Throws Error(NotABijection) unless `pairs` covers
/// `domain` exactly once on the left and `codomain` exactly once on the right.
Matching make_matching(FiniteSet domain, FiniteSet codomain, const ElementPairs& pairs);

Matching identity_matching(const FiniteSet& a);

Matching invert(const Matching& f);

/// First f, then g. Throws Error(DomainMismatch) unless f.codomain and
/// g.domain hold the same elements.
Matching compose(const Matching& f, const Matching& g);

/// (A+C) ≡ (B+D): L:x ↦ L:f(x), R:x ↦ R:g(x).
Matching add_matchings(const Matching& f, const Matching& g);

/// (A×C) ≡ (B×D): (x, z) ↦ (f(x), g(z)).
Matching mul_matchings(const Matching& f, const Matching& g);

/// Caches both directions independently. Cache access is synchronised, so a
/// memoized matching may be evaluated from several threads.
Matching memoize(const Matching& f);

struct VerificationReport {
  enum class Failure {
    None,
    SizeMismatch,
    Totality,
    ImageOutsideCodomain,
    NotInjective,
    RoundTripForward,
    RoundTripBackward,
  };

  Failure failure = Failure::None;
  std::string witness;
  std::string detail;

  bool passed() const noexcept { return failure == Failure::None; }
  explicit operator bool() const noexcept { return passed(); }
  std::string describe() const;
};

std::string_view to_string(VerificationReport::Failure failure);

/// Enumerates both carriers and reports the first failure, checking in order:
/// sizes, totality, images landing in the other carrier, injectivity, and
/// the two round trips. An Error thrown while evaluating (an iteration or
/// step budget running out, for example) counts as a totality failure.
VerificationReport verify(const Matching& f);

/// True when both matchings have the same carriers and agree on every
/// point in both directions.
bool pointwise_equal(const Matching& a, const Matching& b);

/// Line-oriented table, one `encode(x) -> encode(f(x))` per domain element.
std::string write_table(const Matching& f);

/// Inverse of write_table. Carriers are taken in line order.
Matching read_table(std::string_view text);

}  // namespace matchings
