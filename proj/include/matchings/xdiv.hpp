#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matchings/matching.hpp"

namespace matchings {

/// F: A×C ≡ B×C and G: B×C ≡ A×C. G = invert(F) is allowed, not required.
struct MatchingPair {
  FiniteSet a;
  FiniteSet b;
  FiniteSet c;
  Matching forward;   // F
  Matching backward;  // G

  /// Throws Error(CarrierMismatch) if F or G do not sit on A×C and B×C.
  void validate() const;
};

struct XDivOptions {
  /// Combined F/G applications allowed for one xdiv invocation.
  std::size_t budget = 10'000'000;
  bool memoize = true;
};

/// Outcome of one top-level evaluation of f or g.
struct PointResult {
  std::optional<Element> value;  // empty: budget exhausted
  std::size_t steps = 0;         // F/G applications spent on this point
  std::string trace;             // recursion stack when the budget ran out
};

/// The partial functions f: A → B and g: B → A produced by xdiv, evaluated
/// at every point. Immutable once returned.
struct PartialMatchingPair {
  FiniteSet a;
  FiniteSet b;
  Element omega;
  std::vector<PointResult> f_values;  // aligned with a
  std::vector<PointResult> g_values;  // aligned with b
  std::size_t total_steps = 0;
  bool memoized = true;

  std::optional<Element> f(const Element& x) const;
  std::optional<Element> g(const Element& y) const;

  /// One line per point plus totals, for the CLI.
  std::string stats_report() const;
};

/// Lazily evaluates the xdiv recursion
///
///   f(x) = (y, z) := F(x, ω); while z ≠ ω: (y, z) := F(g(y), z); return y
///   g(x) = (y, z) := G(x, ω); while z ≠ ω: (y, z) := G(f(y), z); return y
///
/// on an explicit stack, so arbitrarily deep mutual recursion does not touch
/// the host stack. f and g share memo tables and one step budget. Not
/// thread-safe.
class XDivEvaluator {
 public:
  /// Throws Error(OmegaNotInC) and the errors of MatchingPair::validate.
  XDivEvaluator(MatchingPair fg, Element omega, XDivOptions options = {});

  /// Empty once the budget is exhausted. Throws Error(CarrierMismatch) if F
  /// or G produce a value outside B×C or A×C.
  std::optional<Element> f(const Element& x) { return evaluate(Side::F, x); }
  std::optional<Element> g(const Element& y) { return evaluate(Side::G, y); }

  std::size_t applications() const noexcept { return applications_; }
  const std::string& last_trace() const noexcept { return last_trace_; }
  const MatchingPair& pair() const noexcept { return fg_; }
  const Element& omega() const noexcept { return omega_; }

 private:
  enum class Side { F, G };
  struct Frame;
  struct BudgetExhausted {};

  std::optional<Element> evaluate(Side side, const Element& x);
  std::pair<Element, Element> apply(Side side, const Element& arg);
  std::unordered_map<Element, Element>& memo(Side side) { return side == Side::F ? memo_f_ : memo_g_; }

  MatchingPair fg_;
  Element omega_;
  XDivOptions options_;
  std::unordered_map<Element, Element> memo_f_;
  std::unordered_map<Element, Element> memo_g_;
  std::size_t applications_ = 0;
  std::string last_trace_;
};

/// Evaluates f on all of A, then g on all of B.
PartialMatchingPair xdiv(const MatchingPair& fg, const Element& omega, const XDivOptions& options = {});

struct TotalityReport {
  bool total = true;
  char side = 0;  // 'f' or 'g' when not total
  std::optional<Element> point;
  std::string trace;

  explicit operator bool() const noexcept { return total; }
  std::string describe() const;
};

/// True iff f is defined on all of A and g on all of B; otherwise names the
/// first undefined point.
TotalityReport check_total(const PartialMatchingPair& pair);

struct DividedMatchings {
  Matching f;  // A ≡ B
  Matching g;  // B ≡ A
  bool mutually_inverse = false;
};

/// Packages a total pair as matchings. When g∘f and f∘g are identities, f and
/// g are each other's inverse; otherwise each gets the inverse read off its
/// own table. Throws Error(NotTotal) or Error(NotABijection).
DividedMatchings as_matchings(const PartialMatchingPair& pair);

}  // namespace matchings
