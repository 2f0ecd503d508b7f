#include "matchings/element.hpp"

#include <algorithm>
#include <charconv>

#include "matchings/error.hpp"

namespace matchings {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void encode_into(const Element& e, std::string& out) {
  switch (e.kind()) {
    case Element::Kind::Int:
      out += std::to_string(e.as_int());
      return;
    case Element::Kind::Seq: {
      out += '[';
      bool first = true;
      for (const auto& item : e.items()) {
        if (!first) out += ", ";
        first = false;
        encode_into(item, out);
      }
      out += ']';
      return;
    }
    case Element::Kind::TagL:
      out += "L:";
      encode_into(e.untag(), out);
      return;
    case Element::Kind::TagR:
      out += "R:";
      encode_into(e.untag(), out);
      return;
    case Element::Kind::Pair:
      out += '(';
      encode_into(e.first(), out);
      out += ", ";
      encode_into(e.second(), out);
      out += ')';
      return;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Element parse_all() {
    Element e = parse();
    if (pos_ != text_.size()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  Element parse() {
    char c = peek();
    if (c == '[') {
      ++pos_;
      std::vector<Element> items;
      if (peek() != ']') {
        items.push_back(parse());
        while (peek() == ',') {
          expect(", ");
          items.push_back(parse());
        }
      }
      expect("]");
      return Element::seq(std::move(items));
    }
    if (c == '(') {
      ++pos_;
      Element a = parse();
      expect(", ");
      Element b = parse();
      expect(")");
      return Element::pair(std::move(a), std::move(b));
    }
    if (c == 'L' || c == 'R') {
      ++pos_;
      expect(":");
      Element inner = parse();
      return c == 'L' ? Element::tag_left(std::move(inner)) : Element::tag_right(std::move(inner));
    }
    if (c == '-' || (c >= '0' && c <= '9')) return parse_int();
    fail("unexpected character");
  }

  Element parse_int() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    std::size_t digits = pos_;
    while (!at_end() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    std::string_view token = text_.substr(start, pos_ - start);
    std::size_t ndigits = pos_ - digits;
    // Canonical integers: no leading zeros, no "-0".
    if (ndigits == 0) fail("expected digits");
    if (ndigits > 1 && text_[digits] == '0') fail("leading zero");
    if (token == "-0") fail("negative zero");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) fail("integer out of range");
    return Element::integer(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element::Element() : Element(make(Kind::Int, 0, {})) {}

Element Element::make(Kind kind, std::int64_t value, std::vector<Element> children) {
  std::size_t h = mix(static_cast<std::size_t>(kind) + 1, std::hash<std::int64_t>{}(value));
  for (const auto& child : children) h = mix(h, child.hash());
  h = mix(h, children.size());
  return Element(std::make_shared<const Node>(Node{kind, value, std::move(children), h}));
}

Element Element::integer(std::int64_t value) { return make(Kind::Int, value, {}); }

Element Element::seq(std::vector<Element> items) { return make(Kind::Seq, 0, std::move(items)); }

Element Element::seq(std::initializer_list<Element> items) {
  return seq(std::vector<Element>(items));
}

Element Element::ints(std::span<const std::int64_t> values) {
  std::vector<Element> items;
  items.reserve(values.size());
  for (auto v : values) items.push_back(integer(v));
  return seq(std::move(items));
}

Element Element::ints(std::initializer_list<std::int64_t> values) {
  return ints(std::span<const std::int64_t>(values.begin(), values.size()));
}

Element Element::tag_left(Element inner) { return make(Kind::TagL, 0, {std::move(inner)}); }

Element Element::tag_right(Element inner) { return make(Kind::TagR, 0, {std::move(inner)}); }

Element Element::pair(Element first, Element second) {
  return make(Kind::Pair, 0, {std::move(first), std::move(second)});
}

std::int64_t Element::as_int() const {
  if (!is_int()) throw Error(ErrorCode::ParseError, "not an integer: " + encode(*this));
  return node_->value;
}

std::span<const Element> Element::items() const {
  if (!is_seq()) throw Error(ErrorCode::ParseError, "not a sequence: " + encode(*this));
  return node_->children;
}

std::vector<std::int64_t> Element::as_ints() const {
  std::vector<std::int64_t> out;
  for (const auto& item : items()) out.push_back(item.as_int());
  return out;
}

const Element& Element::untag() const {
  if (!is_left() && !is_right()) throw Error(ErrorCode::ParseError, "not tagged: " + encode(*this));
  return node_->children[0];
}

const Element& Element::first() const {
  if (!is_pair()) throw Error(ErrorCode::ParseError, "not a pair: " + encode(*this));
  return node_->children[0];
}

const Element& Element::second() const {
  if (!is_pair()) throw Error(ErrorCode::ParseError, "not a pair: " + encode(*this));
  return node_->children[1];
}

bool operator==(const Element& a, const Element& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind ||
      a.node_->value != b.node_->value)
    return false;
  return a.node_->children == b.node_->children;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
  if (auto c = a.node_->value <=> b.node_->value; c != 0) return c;
  return std::lexicographical_compare_three_way(a.node_->children.begin(), a.node_->children.end(),
                                                b.node_->children.begin(), b.node_->children.end());
}

std::string encode(const Element& e) {
  std::string out;
  encode_into(e, out);
  return out;
}

Element decode(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace matchings
