#pragma once

#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <optional>
#include <vector>

#include "matchings/element.hpp"

namespace matchings {

struct Summands;

/// Explicit finite set of Elements with a fixed enumeration order.
///
/// Sums and products keep a reference to their factors instead of
/// materialising every member, so `product_set` of two sets of sizes m and n
/// costs O(1) memory while still enumerating A-major and answering
/// membership in O(1).
class FiniteSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Element;

    Iterator() = default;
    Iterator(const FiniteSet* set, std::size_t index) : set_(set), index_(index) {}

    Element operator*() const { return set_->at(index_); }
    Iterator& operator++() {
      ++index_;
      return *this;
    }
    Iterator operator++(int) {
      Iterator tmp = *this;
      ++index_;
      return tmp;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) { return a.index_ == b.index_; }

   private:
    const FiniteSet* set_ = nullptr;
    std::size_t index_ = 0;
  };

  FiniteSet();
  FiniteSet(std::initializer_list<Element> elements);

  /// Throws Error(DuplicateElement) if two entries are structurally equal.
  static FiniteSet from(std::vector<Element> elements);
  /// {Int(0), ..., Int(n-1)}.
  static FiniteSet range(std::int64_t n);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  Element at(std::size_t index) const;
  std::optional<std::size_t> index_of(const Element& e) const;
  bool contains(const Element& e) const { return index_of(e).has_value(); }

  Iterator begin() const { return Iterator(this, 0); }
  Iterator end() const { return Iterator(this, size()); }
  std::vector<Element> to_vector() const;

  friend FiniteSet sum_set(const FiniteSet& a, const FiniteSet& b);
  friend FiniteSet product_set(const FiniteSet& a, const FiniteSet& c);
  friend bool same_elements(const FiniteSet& a, const FiniteSet& b);
  friend Summands split_sum(const FiniteSet& s);

 private:
  struct Rep;
  explicit FiniteSet(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

/// {L:a : a in A} followed by {R:b : b in B}.
FiniteSet sum_set(const FiniteSet& a, const FiniteSet& b);

/// All (a, c), A-major.
FiniteSet product_set(const FiniteSet& a, const FiniteSet& c);

/// Equality as sets, ignoring enumeration order.
bool same_elements(const FiniteSet& a, const FiniteSet& b);

/// Splits the members of a sum carrier back into its two summands.
struct Summands {
  FiniteSet left;
  FiniteSet right;
};
Summands split_sum(const FiniteSet& s);

}  // namespace matchings
