#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "matchings/xdiv.hpp"

// Matching choose(n,k) with choose(n,n-k) by extreme division of
// choose(n,k)·k!·(n-k)! ≡ n! ≡ choose(n,n-k)·(n-k)!·k!.
namespace matchings::binom {

using Word = std::vector<std::int64_t>;

/// An element of choose(n,k): a sorted k-block and its sorted complement.
struct SplitPair {
  Word a;
  Word b;

  Element to_element() const;
  static SplitPair from_element(const Element& e);
  friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

/// An element of k!×(n-k)!: two permutation words.
struct WordPair {
  Word c;
  Word d;

  Element to_element() const;
  static WordPair from_element(const Element& e);
  friend bool operator==(const WordPair&, const WordPair&) = default;
};

/// An element of choose(n,k)×k!×(n-k)!, encoded as Pair(split, words).
struct SplitWords {
  SplitPair split;
  WordPair words;

  Element to_element() const;
  static SplitWords from_element(const Element& e);
  friend bool operator==(const SplitWords&, const SplitWords&) = default;
};

/// All splits of {0..n-1}, in lexicographic order of the k-block.
/// Throws Error(BadArguments) unless 0 ≤ k ≤ n.
FiniteSet choose_set(int n, int k);

/// k!×l!, both factors in lexicographic order.
FiniteSet word_pairs(int k, int l);

/// Replaces each entry by its rank. Throws Error(DuplicateEntries).
Word compress(std::span<const std::int64_t> values);

/// σ ↦ ((sorted σ[:k], sorted σ[k:]), (compress σ[:k], compress σ[k:])).
/// Throws Error(BadArguments) if σ is not a permutation word or k is out of range.
SplitWords binom_split(std::span<const std::int64_t> sigma, int k);

/// Inverse of binom_split: a indexed by c, followed by b indexed by d.
/// Throws Error(LengthMismatch).
Word monib(const SplitWords& x);

/// Swaps the two words; an involution.
SplitWords flipkl(const SplitWords& x);

/// flipkl ∘ binom_split(·, |b|) ∘ monib.
Element demo_F(const Element& x);
/// binom_split(·, |b|) ∘ monib ∘ flipkl.
Element demo_G(const Element& x);

/// (identity word of length k, identity word of length n-k).
Element omega(int n, int k);

/// F = demo_F on choose(n,k)×C, G = demo_G on choose(n,n-k)×C.
MatchingPair binom_pair(int n, int k);

/// xdiv(binom_pair(n, k), omega(n, k)).
PartialMatchingPair match_binom(int n, int k, const XDivOptions& options = {});

}  // namespace matchings::binom
