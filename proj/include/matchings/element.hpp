#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace matchings {

/// Immutable nested value used as the member type of every set.
///
/// An Element is one of: an integer, a sequence of Elements, a left- or
/// right-tagged Element (the two summands of a disjoint union) or a pair.
/// Copies share structure; equality is structural.
class Element {
 public:
  enum class Kind : std::uint8_t { Int, Seq, TagL, TagR, Pair };

  Element();  // Int(0)

  static Element integer(std::int64_t value);
  static Element seq(std::vector<Element> items);
  static Element seq(std::initializer_list<Element> items);
  static Element ints(std::span<const std::int64_t> values);
  static Element ints(std::initializer_list<std::int64_t> values);
  static Element tag_left(Element inner);
  static Element tag_right(Element inner);
  static Element pair(Element first, Element second);

  Kind kind() const noexcept { return node_->kind; }
  bool is_int() const noexcept { return kind() == Kind::Int; }
  bool is_seq() const noexcept { return kind() == Kind::Seq; }
  bool is_left() const noexcept { return kind() == Kind::TagL; }
  bool is_right() const noexcept { return kind() == Kind::TagR; }
  bool is_pair() const noexcept { return kind() == Kind::Pair; }

  // Accessors throw Error(ParseError) when the kind does not match.
  std::int64_t as_int() const;
  std::span<const Element> items() const;
  std::vector<std::int64_t> as_ints() const;
  const Element& untag() const;
  const Element& first() const;
  const Element& second() const;

  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const Element& a, const Element& b);
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  struct Node {
    Kind kind;
    std::int64_t value;
    std::vector<Element> children;
    std::size_t hash;
  };

  explicit Element(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Element make(Kind kind, std::int64_t value, std::vector<Element> children);

  std::shared_ptr<const Node> node_;
};

/// Canonical text: `5`, `[0, 1]`, `L:3`, `R:[]`, `(1, 2)`.
std::string encode(const Element& e);

/// Inverse of encode; accepts exactly the canonical form.
Element decode(std::string_view text);

}  // namespace matchings

template <>
struct std::hash<matchings::Element> {
  std::size_t operator()(const matchings::Element& e) const noexcept { return e.hash(); }
};
