#include "matchings/binom_demo.hpp"

#include <algorithm>
#include <numeric>

#include "matchings/error.hpp"

namespace matchings::binom {

namespace {

void check_range(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw Error(ErrorCode::BadArguments, "need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

Word iota_word(std::int64_t n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  return w;
}

bool is_permutation_word(std::span<const std::int64_t> w) {
  std::vector<bool> seen(w.size(), false);
  for (auto v : w) {
    if (v < 0 || v >= static_cast<std::int64_t>(w.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<Word> all_permutations(int m) {
  std::vector<Word> out;
  Word w = iota_word(m);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Word pick(const Word& from, const Word& indices) {
  Word out;
  out.reserve(indices.size());
  for (auto i : indices) {
    if (i < 0 || i >= static_cast<std::int64_t>(from.size()))
      throw Error(ErrorCode::LengthMismatch, "index " + std::to_string(i) + " out of range");
    out.push_back(from[i]);
  }
  return out;
}

std::pair<Element, Element> two(const Element& e) {
  auto items = e.items();
  if (items.size() != 2) throw Error(ErrorCode::ParseError, "expected a two-element sequence: " + encode(e));
  return {items[0], items[1]};
}

}  // namespace

Element SplitPair::to_element() const { return Element::seq({Element::ints(a), Element::ints(b)}); }

SplitPair SplitPair::from_element(const Element& e) {
  auto [a, b] = two(e);
  return {a.as_ints(), b.as_ints()};
}

Element WordPair::to_element() const { return Element::seq({Element::ints(c), Element::ints(d)}); }

WordPair WordPair::from_element(const Element& e) {
  auto [c, d] = two(e);
  return {c.as_ints(), d.as_ints()};
}

Element SplitWords::to_element() const { return Element::pair(split.to_element(), words.to_element()); }

SplitWords SplitWords::from_element(const Element& e) {
  return {SplitPair::from_element(e.first()), WordPair::from_element(e.second())};
}

FiniteSet choose_set(int n, int k) {
  check_range(n, k);
  std::vector<Element> out;
  // Walk k-subsets in lexicographic order via a selection mask.
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    SplitPair s;
    for (int i = 0; i < n; ++i) (mask[i] ? s.a : s.b).push_back(i);
    out.push_back(s.to_element());
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return FiniteSet::from(std::move(out));
}

FiniteSet word_pairs(int k, int l) {
  if (k < 0 || l < 0) throw Error(ErrorCode::BadArguments, "negative word length");
  std::vector<Element> out;
  auto cs = all_permutations(k);
  auto ds = all_permutations(l);
  for (const auto& c : cs)
    for (const auto& d : ds) out.push_back(WordPair{c, d}.to_element());
  return FiniteSet::from(std::move(out));
}

Word compress(std::span<const std::int64_t> values) {
  Word sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::DuplicateEntries, encode(Element::ints(values)));
  Word out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
  return out;
}

SplitWords binom_split(std::span<const std::int64_t> sigma, int k) {
  if (!is_permutation_word(sigma))
    throw Error(ErrorCode::BadArguments, "not a permutation word: " + encode(Element::ints(sigma)));
  check_range(static_cast<int>(sigma.size()), k);
  auto head = sigma.first(k);
  auto tail = sigma.subspan(k);
  SplitWords out;
  out.split.a.assign(head.begin(), head.end());
  out.split.b.assign(tail.begin(), tail.end());
  std::sort(out.split.a.begin(), out.split.a.end());
  std::sort(out.split.b.begin(), out.split.b.end());
  out.words.c = compress(head);
  out.words.d = compress(tail);
  return out;
}

Word monib(const SplitWords& x) {
  if (x.split.a.size() != x.words.c.size() || x.split.b.size() != x.words.d.size())
    throw Error(ErrorCode::LengthMismatch, "block and word lengths differ: " + encode(x.to_element()));
  Word out = pick(x.split.a, x.words.c);
  Word rest = pick(x.split.b, x.words.d);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

SplitWords flipkl(const SplitWords& x) { return {x.split, {x.words.d, x.words.c}}; }

Element demo_F(const Element& x) {
  SplitWords s = SplitWords::from_element(x);
  int l = static_cast<int>(s.split.b.size());
  return flipkl(binom_split(monib(s), l)).to_element();
}

Element demo_G(const Element& x) {
  SplitWords s = SplitWords::from_element(x);
  int l = static_cast<int>(s.split.b.size());
  return binom_split(monib(flipkl(s)), l).to_element();
}

Element omega(int n, int k) {
  check_range(n, k);
  return WordPair{iota_word(k), iota_word(n - k)}.to_element();
}

MatchingPair binom_pair(int n, int k) {
  check_range(n, k);
  FiniteSet a = choose_set(n, k);
  FiniteSet b = choose_set(n, n - k);
  FiniteSet c = word_pairs(k, n - k);
  FiniteSet ac = product_set(a, c);
  FiniteSet bc = product_set(b, c);
  Matching f = Matching::computed(ac, bc, demo_F, demo_G);
  Matching g = Matching::computed(bc, ac, demo_G, demo_F);
  return {a, b, c, f, g};
}

PartialMatchingPair match_binom(int n, int k, const XDivOptions& options) {
  return xdiv(binom_pair(n, k), omega(n, k), options);
}

}  // namespace matchings::binom
