#pragma once

#include <cstddef>
#include <random>
#include <string>

#include "matchings/incexc.hpp"
#include "matchings/subtraction.hpp"

namespace matchings {

using Rng = std::mt19937_64;

/// Uniformly random table-backed bijection. Sizes must agree.
Matching random_matching(Rng& rng, const FiniteSet& domain, const FiniteSet& codomain);

/// Random f: A+C ≡ B+D and g: C ≡ D with |A+C| ≤ max_total. Carriers reuse
/// the raw integers 0, 1, ... on every side, so only the tags keep them
/// apart. About half the instances are built so that g respects f.
SubtractionInstance random_subtraction_instance(Rng& rng, std::size_t max_total = 12);

struct IncExcInstance {
  IndexedFamily a;
  IndexedFamily b;
  PointMatchings gs;

  std::string describe() const;
};

/// Random poset on up to max_points points with parts of up to max_part
/// elements and random down-set matchings.
IncExcInstance random_incexc_instance(Rng& rng, std::size_t max_points = 5, std::size_t max_part = 4);

/// Two-point chain 0 < 1.
IncExcInstance random_chain_instance(Rng& rng, std::size_t max_part = 4);

/// True when the poset is a two-element chain.
bool is_two_chain(const Poset& poset);

/// Redirects the first domain element of g to the image of the second,
/// leaving backward alone. Used to check that the property suite notices.
Matching flip_one_entry(const Matching& g);

}  // namespace matchings
