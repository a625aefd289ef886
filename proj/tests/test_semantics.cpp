#include "cka/semantics.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace cka;

namespace {

PomsetLanguage L(std::initializer_list<const char*> items) {
  PomsetLanguage out;
  for (const char* s : items) out.insert(parse_pomset(s));
  return out;
}

PomsetLanguage random_language(testing::Rng& rng, std::size_t max_events) {
  PomsetLanguage out;
  const auto n = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < n; ++i) out.insert(testing::random_pomset(rng, max_events, {"a", "b", "c"}));
  return out;
}

}  // namespace

TEST_CASE("bounded languages") {
  for (std::size_t k = 0; k <= 3; ++k) CHECK(bka_language(parse("a|b"), k) == L({"a|b"}));
  CHECK(bka_language(parse("0"), 2).empty());
  CHECK(bka_language(parse("a*"), 2) == L({"1", "a", "a.a"}));
  CHECK(bka_language(parse("(a.b)*"), 1) == L({"1", "a.b"}));
}

TEST_CASE("bounded languages are monotone in the bound") {
  testing::Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const Term t = testing::random_term(rng, {{"a", "b"}, 3, true, true});
    const auto l1 = bka_language(t, 1);
    const auto l2 = bka_language(t, 2);
    CHECK_FALSE(first_missing(l1, l2).has_value());
  }
}

TEST_CASE("size-restricted languages agree with the bounded ones below the bound") {
  testing::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Term t = testing::random_term(rng, {{"a", "b"}, 3, true, true});
    CHECK(language_equal(bka_language_upto(t, 3), restrict_events(bka_language(t, 3), 3)).equal);
    CHECK(language_equal(bka_language_within(t, 2, 3), restrict_events(bka_language(t, 2), 3)).equal);
  }
}

TEST_CASE("downward closure examples") {
  CHECK(downclose(L({"a|b"})) == L({"a|b", "a.b", "b.a"}));
  CHECK(downclose({}).empty());
  const auto abc = downclose(L({"a|b|c"}));
  std::size_t non_sequential = 0;
  for (const Pomset& u : abc) non_sequential += u.kind() == PomsetKind::Seq ? 0 : 1;
  CHECK(non_sequential == 7);
  CHECK(abc.size() == 19);
  CHECK(abc.contains(parse_pomset("a.b.c")));
}

TEST_CASE("closed languages") {
  CHECK(cka_language(parse("a|b"), 2) == L({"a|b", "a.b", "b.a"}));
  CHECK(cka_language(parse("1"), 2) == L({"1"}));
  CHECK(cka_language(parse("(a|b).c"), 0) == L({"(a|b).c", "a.b.c", "b.a.c"}));
}

TEST_CASE("language comparison returns a witness") {
  CHECK(language_equal(L({"a"}), L({"a"})).equal);
  const auto cmp = language_equal(L({"a"}), L({"b"}));
  REQUIRE_FALSE(cmp.equal);
  CHECK(*cmp.witness == parse_pomset("a"));
  CHECK(cmp.witness_in_first);
  for (std::size_t k = 0; k <= 2; ++k) {
    CHECK(language_equal(bka_language(parse("a.b+b.a+a|b"), k), cka_language(parse("a|b"), k)).equal);
  }
}

TEST_CASE("series-parallel enumeration") {
  CHECK(enumerate_sp({"a"}) == L({"a"}));
  CHECK(enumerate_sp({"a", "b"}) == L({"a.b", "b.a", "a|b"}));
  CHECK(enumerate_sp({}) == L({"1"}));
  CHECK_THROWS_AS(enumerate_sp({"a", "a", "a", "a", "a", "a", "a", "a"}), ResourceLimit);
  for (const auto& labels : std::vector<std::vector<std::string>>{
           {"a", "a", "b"}, {"a", "b", "c"}, {"a", "a", "b", "b"}, {"a", "b", "c", "d"}, {"a", "a", "a", "b", "c"}}) {
    CHECK(enumerate_sp(labels) == testing::brute_sp(labels));
  }
}

TEST_CASE("closure distributes over union and sequential composition and is idempotent") {
  testing::Rng rng(4);
  for (int i = 0; i < 150; ++i) {
    const auto l1 = random_language(rng, 4);
    const auto l2 = random_language(rng, 4);
    PomsetLanguage both = l1;
    both.insert(l2.begin(), l2.end());
    PomsetLanguage separate = downclose(l1);
    const auto d2 = downclose(l2);
    separate.insert(d2.begin(), d2.end());
    CHECK(downclose(both) == separate);
    CHECK(downclose(seq_product(l1, l2)) == seq_product(downclose(l1), d2));
    CHECK(downclose(downclose(l1)) == downclose(l1));
    const auto small = random_language(rng, 2);
    CHECK(downclose(bounded_star(small, 2)) == bounded_star(downclose(small), 2));
  }
}

TEST_CASE("both closure algorithms agree") {
  testing::Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto l = random_language(rng, 6);
    CHECK(downclose(l) == downclose_by_enumeration(l));
  }
}

TEST_CASE("cardinality cap is reported, not truncated") {
  CHECK_THROWS_AS(bka_language(parse("(a+b)*"), 6, 50), ResourceLimit);
  CHECK_THROWS_AS(downclose(L({"a|b|c|d"}), 10), ResourceLimit);
}

TEST_CASE("membership oracle matches enumeration") {
  testing::Rng rng(8);
  for (int i = 0; i < 150; ++i) {
    const Term t = testing::random_term(rng, {{"a", "b"}, 3, true, true});
    for (std::size_t k = 0; k <= 2; ++k) {
      const auto bka = bka_language(t, k);
      const auto cka = downclose(bka);
      MembershipOracle oracle(k);
      for (const Pomset& u : enumerate_sp({"a", "b", "a"})) {
        CHECK(oracle.bka_contains(u, t) == bka.contains(u));
        CHECK(oracle.cka_contains(u, t) == cka.contains(u));
      }
      for (const Pomset& u : cka) CHECK(oracle.cka_contains(u, t));
    }
    MembershipOracle exact;
    const auto upto = bka_language_upto(t, 4);
    const auto closed = downclose(upto);
    for (const Pomset& u : enumerate_sp({"a", "b", "b"})) {
      CHECK(exact.bka_contains(u, t) == upto.contains(u));
      CHECK(exact.cka_contains(u, t) == closed.contains(u));
    }
  }
}
