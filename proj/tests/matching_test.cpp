#include <doctest.h>

#include <atomic>
#include <thread>

#include "matchings/error.hpp"
#include "matchings/matching.hpp"
#include "matchings/random_instances.hpp"
#include "test_support.hpp"

using namespace matchings;
using test_support::I;

namespace {

Matching swap01() {
  FiniteSet s = FiniteSet::range(2);
  return make_matching(s, s, {{I(0), I(1)}, {I(1), I(0)}});
}

}  // namespace

TEST_CASE("make_matching") {
  Matching single = make_matching({I(10)}, {I(20)}, {{I(10), I(20)}});
  CHECK(single(I(10)) == I(20));
  CHECK(single.backward(I(20)) == I(10));
  CHECK(single.kind() == Matching::Kind::Table);

  SUBCASE("right duplicate") {
    CHECK_THROWS_WITH_AS(make_matching({I(1), I(2)}, {I(3)}, {{I(1), I(3)}, {I(2), I(3)}}), doctest::Contains("NotABijection"), Error);
    CHECK_THROWS_AS(make_matching(FiniteSet::range(2), FiniteSet::range(2), {{I(0), I(1)}, {I(1), I(1)}}), Error);
  }
  SUBCASE("left duplicate and coverage gap") {
    CHECK_THROWS_AS(make_matching(FiniteSet::range(2), FiniteSet::range(2), {{I(0), I(1)}, {I(0), I(0)}}), Error);
    CHECK_THROWS_AS(make_matching(FiniteSet::range(2), FiniteSet::range(2), {{I(0), I(1)}}), Error);
    CHECK_THROWS_AS(make_matching(FiniteSet::range(1), FiniteSet::range(1), {{I(5), I(0)}}), Error);
  }
  SUBCASE("swap is self-inverse") {
    Matching s = swap01();
    CHECK(s(I(0)) == I(1));
    CHECK(s.backward(I(0)) == I(1));
    CHECK(pointwise_equal(invert(s), s));
  }
  CHECK_THROWS_AS(single(I(11)), Error);
}

TEST_CASE("identity_matching") {
  CHECK(identity_matching(FiniteSet{}).domain().empty());
  CHECK(verify(identity_matching(FiniteSet{})));
  Matching id = identity_matching(FiniteSet::range(3));
  for (int i = 0; i < 3; ++i) CHECK(id(I(i)) == I(i));
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, 10)(rng);
    CHECK(verify(identity_matching(FiniteSet::range(static_cast<std::int64_t>(n)))));
  }
  CHECK(pointwise_equal(invert(id), id));
}

TEST_CASE("invert swaps directions pointwise") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    auto n = std::uniform_int_distribution<std::int64_t>(0, 8)(rng);
    FiniteSet a = FiniteSet::range(n);
    FiniteSet b = FiniteSet::from([&] {
      std::vector<Element> v;
      for (std::int64_t i = 0; i < n; ++i) v.push_back(Element::ints({i, i}));
      return v;
    }());
    Matching f = random_matching(rng, a, b);
    Matching inv = invert(f);
    CHECK(same_elements(inv.domain(), b));
    for (auto y : b) CHECK(inv.forward(y) == f.backward(y));
    for (auto x : a) CHECK(inv.backward(x) == f.forward(x));
    CHECK(pointwise_equal(invert(inv), f));
  }
}

TEST_CASE("compose") {
  Rng rng(9);
  FiniteSet s = FiniteSet::range(6);
  for (int t = 0; t < 30; ++t) {
    Matching f = random_matching(rng, s, s);
    Matching g = random_matching(rng, s, s);
    Matching h = random_matching(rng, s, s);
    CHECK(pointwise_equal(compose(f, invert(f)), identity_matching(s)));
    CHECK(pointwise_equal(compose(identity_matching(s), f), f));
    Matching fg = compose(f, g);
    CHECK(verify(fg));
    for (auto x : s) CHECK(fg(x) == g(f(x)));
    CHECK(pointwise_equal(compose(compose(f, g), h), compose(f, compose(g, h))));
  }
  CHECK_THROWS_WITH_AS(compose(swap01(), identity_matching(FiniteSet::range(3))), doctest::Contains("DomainMismatch"),
                       Error);
}

TEST_CASE("add_matchings") {
  Matching sum = add_matchings(swap01(), identity_matching({I(42)}));
  CHECK(sum(Element::tag_left(I(0))) == Element::tag_left(I(1)));
  CHECK(sum(Element::tag_right(I(42))) == Element::tag_right(I(42)));
  CHECK_THROWS_AS(sum(I(0)), Error);

  Matching with_empty = add_matchings(swap01(), identity_matching(FiniteSet{}));
  CHECK(with_empty.domain().size() == 2);
  for (auto x : FiniteSet::range(2)) CHECK(with_empty(Element::tag_left(x)) == Element::tag_left(swap01()(x)));

  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    auto n = std::uniform_int_distribution<std::int64_t>(0, 6)(rng);
    auto m = std::uniform_int_distribution<std::int64_t>(0, 6)(rng);
    Matching f = random_matching(rng, FiniteSet::range(n), FiniteSet::range(n));
    Matching g = random_matching(rng, FiniteSet::range(m), FiniteSet::range(m));
    CHECK(verify(add_matchings(f, g)));
  }
}

TEST_CASE("mul_matchings") {
  FiniteSet a = FiniteSet::range(2);
  FiniteSet c{I(7)};
  CHECK(pointwise_equal(mul_matchings(identity_matching(a), identity_matching(c)), identity_matching(product_set(a, c))));
  Matching prod = mul_matchings(swap01(), identity_matching(c));
  CHECK(prod(Element::pair(I(0), I(7))) == Element::pair(I(1), I(7)));

  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    auto n = std::uniform_int_distribution<std::int64_t>(0, 5)(rng);
    auto m = std::uniform_int_distribution<std::int64_t>(0, 5)(rng);
    Matching f = random_matching(rng, FiniteSet::range(n), FiniteSet::range(n));
    Matching g = random_matching(rng, FiniteSet::range(m), FiniteSet::range(m));
    CHECK(verify(mul_matchings(f, g)));
  }
}

TEST_CASE("verify reports the first failure with a witness") {
  FiniteSet s = FiniteSet::range(3);
  CHECK(verify(identity_matching(s)).passed());

  SUBCASE("injectivity") {
    Matching bad = Matching::computed(
        s, s, [](const Element& x) { return x == I(2) ? I(1) : x; }, [](const Element& y) { return y; });
    auto r = verify(bad);
    CHECK(r.failure == VerificationReport::Failure::NotInjective);
    CHECK(r.witness == "1, 2");
  }
  SUBCASE("image outside codomain") {
    Matching bad = Matching::computed(s, s, [](const Element& x) { return Element::tag_left(x); },
                                      [](const Element& y) { return y; });
    auto r = verify(bad);
    CHECK(r.failure == VerificationReport::Failure::ImageOutsideCodomain);
    CHECK(r.witness == "0 -> L:0");
  }
  SUBCASE("totality") {
    Matching bad = Matching::computed(
        s, s,
        [](const Element& x) -> Element {
          if (x == I(1)) throw Error(ErrorCode::IterationOverflow, "loop");
          return x;
        },
        [](const Element& y) { return y; });
    auto r = verify(bad);
    CHECK(r.failure == VerificationReport::Failure::Totality);
    CHECK(r.witness == "1");
  }
  SUBCASE("round trip") {
    // Both directions are bijections, but not inverse to each other.
    Matching bad = Matching::computed(
        s, s, [](const Element& x) { return I((x.as_int() + 1) % 3); }, [](const Element& y) { return y; });
    auto r = verify(bad);
    CHECK(r.failure == VerificationReport::Failure::RoundTripForward);
    CHECK(r.witness == "0");
  }
  SUBCASE("sizes") {
    Matching bad = Matching::computed(s, FiniteSet::range(2), [](const Element& x) { return x; },
                                      [](const Element& y) { return y; });
    CHECK(verify(bad).failure == VerificationReport::Failure::SizeMismatch);
  }
}

TEST_CASE("memoize") {
  FiniteSet s = FiniteSet::range(8);
  Rng rng(21);
  Matching table = random_matching(rng, s, s);
  auto calls = std::make_shared<std::atomic<int>>(0);
  Matching counted = Matching::computed(
      s, s,
      [table, calls](const Element& x) {
        ++*calls;
        return table(x);
      },
      [table](const Element& y) { return table.backward(y); });

  Matching memo = memoize(counted);
  CHECK(memo.kind() == Matching::Kind::Memoized);
  CHECK(pointwise_equal(memo, table));
  int after_first_pass = *calls;
  CHECK(after_first_pass == 8);
  CHECK(memo(I(3)) == table(I(3)));
  CHECK(memo(I(3)) == table(I(3)));
  CHECK(*calls == after_first_pass);

  Matching twice = memoize(memo);
  CHECK(pointwise_equal(twice, table));
  CHECK(*calls == after_first_pass);
}

TEST_CASE("memoized matching is safe to share between threads") {
  FiniteSet s = FiniteSet::range(64);
  Rng rng(23);
  Matching table = random_matching(rng, s, s);
  Matching memo = memoize(table);
  std::atomic<int> mismatches = 0;
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&] {
      for (auto x : s)
        if (!(memo(x) == table(x)) || !(memo.backward(x) == table.backward(x))) ++mismatches;
    });
  for (auto& w : workers) w.join();
  CHECK(mismatches == 0);
}

TEST_CASE("table text round trip") {
  Rng rng(29);
  FiniteSet a = sum_set(FiniteSet::range(3), FiniteSet{Element::ints({1, 2})});
  FiniteSet b = product_set(FiniteSet::range(2), FiniteSet::range(2));
  Matching f = random_matching(rng, a, b);
  std::string text = write_table(f);
  CHECK(text.find(" -> ") != std::string::npos);
  Matching back = read_table(text);
  CHECK(pointwise_equal(back, f));
  CHECK(write_table(back) == text);

  CHECK(write_table(swap01()) == "0 -> 1\n1 -> 0\n");
  CHECK_THROWS_AS(read_table("0 -> 1\n1 -> 1\n"), Error);
  CHECK_THROWS_AS(read_table("0 => 1\n"), Error);
}
