#include "matchings/finite_set.hpp"

#include <unordered_map>
#include <variant>

#include "matchings/error.hpp"

namespace matchings {

struct FiniteSet::Rep {
  struct Explicit {
    std::vector<Element> elements;
    std::unordered_map<Element, std::size_t> index;
  };
  struct Sum {
    FiniteSet left;
    FiniteSet right;
  };
  struct Product {
    FiniteSet outer;
    FiniteSet inner;
  };

  std::variant<Explicit, Sum, Product> data;
  std::size_t size = 0;
};

FiniteSet::FiniteSet() : rep_(std::make_shared<const Rep>(Rep{Rep::Explicit{}, 0})) {}

FiniteSet::FiniteSet(std::initializer_list<Element> elements)
    : FiniteSet(from(std::vector<Element>(elements))) {}

FiniteSet FiniteSet::from(std::vector<Element> elements) {
  Rep::Explicit ex;
  ex.index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!ex.index.emplace(elements[i], i).second)
      throw Error(ErrorCode::DuplicateElement, encode(elements[i]));
  }
  std::size_t n = elements.size();
  ex.elements = std::move(elements);
  return FiniteSet(std::make_shared<const Rep>(Rep{std::move(ex), n}));
}

FiniteSet FiniteSet::range(std::int64_t n) {
  std::vector<Element> v;
  for (std::int64_t i = 0; i < n; ++i) v.push_back(Element::integer(i));
  return from(std::move(v));
}

std::size_t FiniteSet::size() const noexcept { return rep_->size; }

Element FiniteSet::at(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("FiniteSet::at");
  return std::visit(
      [i](const auto& d) -> Element {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Rep::Explicit>) {
          return d.elements[i];
        } else if constexpr (std::is_same_v<T, Rep::Sum>) {
          if (i < d.left.size()) return Element::tag_left(d.left.at(i));
          return Element::tag_right(d.right.at(i - d.left.size()));
        } else {
          std::size_t n = d.inner.size();
          return Element::pair(d.outer.at(i / n), d.inner.at(i % n));
        }
      },
      rep_->data);
}

std::optional<std::size_t> FiniteSet::index_of(const Element& e) const {
  return std::visit(
      [&e](const auto& d) -> std::optional<std::size_t> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Rep::Explicit>) {
          auto it = d.index.find(e);
          if (it == d.index.end()) return std::nullopt;
          return it->second;
        } else if constexpr (std::is_same_v<T, Rep::Sum>) {
          if (e.is_left()) return d.left.index_of(e.untag());
          if (e.is_right()) {
            auto j = d.right.index_of(e.untag());
            if (!j) return std::nullopt;
            return d.left.size() + *j;
          }
          return std::nullopt;
        } else {
          if (!e.is_pair()) return std::nullopt;
          auto i = d.outer.index_of(e.first());
          if (!i) return std::nullopt;
          auto j = d.inner.index_of(e.second());
          if (!j) return std::nullopt;
          return *i * d.inner.size() + *j;
        }
      },
      rep_->data);
}

std::vector<Element> FiniteSet::to_vector() const {
  std::vector<Element> out;
  out.reserve(size());
  for (auto e : *this) out.push_back(std::move(e));
  return out;
}

FiniteSet sum_set(const FiniteSet& a, const FiniteSet& b) {
  return FiniteSet(
      std::make_shared<const FiniteSet::Rep>(FiniteSet::Rep{FiniteSet::Rep::Sum{a, b}, a.size() + b.size()}));
}

FiniteSet product_set(const FiniteSet& a, const FiniteSet& c) {
  return FiniteSet(std::make_shared<const FiniteSet::Rep>(
      FiniteSet::Rep{FiniteSet::Rep::Product{a, c}, a.size() * c.size()}));
}

bool same_elements(const FiniteSet& a, const FiniteSet& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.size() != b.size()) return false;
  const auto* pa = std::get_if<FiniteSet::Rep::Product>(&a.rep_->data);
  const auto* pb = std::get_if<FiniteSet::Rep::Product>(&b.rep_->data);
  if (pa && pb && pa->inner.size() > 0 && pb->inner.size() > 0)
    return same_elements(pa->outer, pb->outer) && same_elements(pa->inner, pb->inner);
  const auto* sa = std::get_if<FiniteSet::Rep::Sum>(&a.rep_->data);
  const auto* sb = std::get_if<FiniteSet::Rep::Sum>(&b.rep_->data);
  if (sa && sb) return same_elements(sa->left, sb->left) && same_elements(sa->right, sb->right);
  for (auto e : a)
    if (!b.contains(e)) return false;
  return true;
}

Summands split_sum(const FiniteSet& s) {
  if (const auto* sum = std::get_if<FiniteSet::Rep::Sum>(&s.rep_->data)) return {sum->left, sum->right};
  std::vector<Element> left;
  std::vector<Element> right;
  for (auto e : s) {
    if (e.is_left())
      left.push_back(e.untag());
    else if (e.is_right())
      right.push_back(e.untag());
    else
      throw Error(ErrorCode::CarrierMismatch, "untagged member of a sum carrier: " + encode(e));
  }
  return {FiniteSet::from(std::move(left)), FiniteSet::from(std::move(right))};
}

}  // namespace matchings
