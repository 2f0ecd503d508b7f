#pragma once

#include <cstddef>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "matchings/matching.hpp"

namespace matchings {

/// Explicit finite poset. The order is the reflexive-transitive closure of
/// the relations given at construction, stored as a dense table.
class Poset {
 public:
  /// `relations` holds pairs (q, p) meaning q ≤ p. Throws
  /// Error(UnknownPoint) for relations naming points outside `points`, and
  /// Error(InvalidPoset) if the closure is not antisymmetric.
  Poset(FiniteSet points, const ElementPairs& relations);

  const FiniteSet& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  /// Throws Error(UnknownPoint).
  std::size_t index_of(const Element& p) const;

  bool leq(const Element& q, const Element& p) const;
  bool less(const Element& q, const Element& p) const;
  bool leq_index(std::size_t q, std::size_t p) const { return leq_[q * size() + p] != 0; }

  /// {q : q ≤ p} in the enumeration order of points().
  FiniteSet down_set(const Element& p) const;
  bool is_minimal(const Element& p) const;

  /// Points ordered so that every point follows everything below it.
  std::vector<Element> linear_extension() const;

  friend bool operator==(const Poset& a, const Poset& b);

 private:
  FiniteSet points_;
  std::vector<char> leq_;
};

FiniteSet down_set(const Poset& poset, const Element& p);

/// A family of finite sets A_p indexed by the points of a poset. The
/// disjoint union Σ A_p is realised as pairs (p, x), which is what makes the
/// parts disjoint and gives the projection π(p, x) = p.
class IndexedFamily {
 public:
  /// Points absent from `parts` get an empty part. Throws
  /// Error(UnknownPoint) for parts at points outside the poset.
  IndexedFamily(Poset poset, const std::vector<std::pair<Element, FiniteSet>>& parts);

  const Poset& poset() const noexcept { return poset_; }
  const FiniteSet& part(const Element& p) const { return parts_[poset_.index_of(p)]; }

  /// Σ_p A_p as (p, x) pairs.
  FiniteSet total() const;
  /// A_{≤p}.
  const FiniteSet& below(const Element& p) const { return below_[poset_.index_of(p)]; }
  /// A_{<p}.
  FiniteSet strictly_below(const Element& p) const;

  /// π: (p, x) ↦ p. Throws Error(CarrierMismatch) for non-members.
  const Element& projection(const Element& e) const;
  bool contains(const Element& e) const;

 private:
  Poset poset_;
  std::vector<FiniteSet> parts_;
  std::vector<FiniteSet> below_;
};

/// One matching per point, in any order.
using PointMatchings = std::vector<std::pair<Element, Matching>>;

const Matching& matching_at(const PointMatchings& ms, const Element& p);

struct IncExcOptions {
  bool memoize = true;
  /// Combined F/F̄ evaluations allowed per top-level f_p or f_p⁻¹ call.
  std::size_t step_budget = 1'000'000;
};

class IncExcEngine;

/// Result of inclusion_exclusion: f_p : A_p ≡ B_p for every point, in the
/// poset's point order. The matchings evaluate lazily and share the memo
/// tables of the run that produced them.
class IncExcResult {
 public:
  const PointMatchings& matchings() const noexcept { return matchings_; }
  const Matching& at(const Element& p) const { return matching_at(matchings_, p); }
  /// Total F/F̄ evaluations performed so far (memo hits excluded).
  std::size_t evaluations() const;

 private:
  friend IncExcResult inclusion_exclusion(const IndexedFamily&, const IndexedFamily&, const PointMatchings&,
                                          const IncExcOptions&);
  PointMatchings matchings_;
  std::shared_ptr<IncExcEngine> engine_;
};

/// From g_p : A_{≤p} ≡ B_{≤p} for every p, builds f_p : A_p ≡ B_p with the
/// mutual recursion
///
///   F(p, x)  = y := g_p(x);    q := π_B(y); y if q = p else F(p, F̄(q, y))
///   F̄(p, x) = y := g_p⁻¹(x);  q := π_A(y); y if q = p else F̄(p, F(q, y))
///
/// evaluated with an explicit work stack. Throws Error(CarrierMismatch) when
/// the families or the g_p do not line up. Evaluating an f_p throws
/// Error(RecursionOverflow) once a call exceeds the step budget.
IncExcResult inclusion_exclusion(const IndexedFamily& a, const IndexedFamily& b, const PointMatchings& gs,
                                 const IncExcOptions& options = {});

/// Text format: a line `points: e1; e2; ...` and lines `q <= p`.
/// Blank lines and lines starting with '#' are ignored.
Poset parse_poset(std::string_view text);

/// Text format: lines `p: x`, one member per line.
IndexedFamily parse_family(const Poset& poset, std::string_view text);

}  // namespace matchings
