#pragma once

#include <cstddef>
#include <string>

#include "matchings/matching.hpp"

namespace matchings {

/// The four carriers of a subtraction problem f: A+C ≡ B+D, g: C ≡ D.
/// Membership in a summand is carried by the L:/R: tag, so A and C (or B
/// and D) may share raw elements.
struct SubtractionCarriers {
  FiniteSet a;
  FiniteSet b;
  FiniteSet c;
  FiniteSet d;
};

/// Reads A, B, C, D off the carriers of f and checks that g: C ≡ D.
/// Throws Error(DomainMismatch) when they do not line up.
SubtractionCarriers subtraction_carriers(const Matching& f, const Matching& g);

/// g ≪ f: for every x in C with f(R:x) in R:D, g(x) equals that image.
bool respects(const Matching& g, const Matching& f);

/// One-step subtraction, valid when g respects f. Throws
/// Error(NotRespectful) otherwise.
Matching respectful_subtract(const Matching& f, const Matching& g);

/// General subtraction A ≡ B by iterating f∘g⁻¹ until the orbit leaves D.
/// Each evaluation performs at most |D| loop iterations and throws
/// Error(IterationOverflow) on the next one.
Matching subtract(const Matching& f, const Matching& g);

struct OrbitTrace {
  Element value;
  std::size_t iterations = 0;
};

/// The forward loop of subtract at a ∈ A, with its iteration count.
OrbitTrace subtract_forward_trace(const Matching& f, const Matching& g, const Element& a);
/// The backward loop of subtract at b ∈ B, with its iteration count.
OrbitTrace subtract_backward_trace(const Matching& f, const Matching& g, const Element& b);

/// f re-tagged as C+A ≡ D+B, so that (C, D) become the outer pair.
Matching swap_roles(const Matching& f);

/// respects(subtract(f, g), swap_roles(f)); holds for every valid input.
bool check_result_respects(const Matching& f, const Matching& g);

/// subtract(swap_roles(f), subtract(f, g)): C ≡ D. Equals g pointwise
/// exactly when g respects f.
Matching double_subtract(const Matching& f, const Matching& g);

/// A fully spelled-out subtraction problem, as produced by the random
/// instance generators.
struct SubtractionInstance {
  FiniteSet a, b, c, d;
  Matching f;
  Matching g;

  /// Throws Error(DomainMismatch) if f or g disagree with the carriers.
  void validate() const;
  std::string describe() const;
};

}  // namespace matchings
