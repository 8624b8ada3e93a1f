#include <catch_amalgamated.hpp>

#include "conjlab/arith.hpp"
#include "conjlab/error.hpp"
#include "gen.hpp"
#include "oracle/oracle.hpp"

using namespace conjlab;
using namespace conjlab::arith;

TEST_CASE("prime divisors") {
  CHECK(prime_divisors(1).empty());
  CHECK(prime_divisors(60) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_divisors(343) == std::vector<std::uint64_t>{7});
  CHECK_THROWS_AS(prime_divisors(0), DomainError);
}

TEST_CASE("p-parts") {
  CHECK(p_part(12, 2) == 4);
  CHECK(p_part(12, 5) == 1);
  CHECK(p_part(20580, 7) == 343);
  CHECK_THROWS_AS(p_part(12, 4), DomainError);
  CHECK_THROWS_AS(p_part(0, 2), DomainError);
}

TEST_CASE("maximal and minimal elements") {
  CHECK(max_elements({1, 2, 4, 6}) == IntSet{4, 6});
  CHECK(min_elements({1, 2, 4, 6}) == IntSet{1});
  CHECK(max_elements({12, 15, 20}) == IntSet{12, 15, 20});
  CHECK(min_elements({12, 15, 20}) == IntSet{12, 15, 20});
  CHECK(max_elements({7}) == IntSet{7});
  CHECK(min_elements({7}) == IntSet{7});
  CHECK_THROWS_AS(max_elements({}), DomainError);
  CHECK_THROWS_AS(min_elements({}), DomainError);
}

TEST_CASE("separated sets") {
  CHECK(is_separated({12, 15, 20}));
  CHECK_FALSE(is_separated({2, 4}));
  CHECK_FALSE(is_separated({1, 5}));
}

TEST_CASE("set products") {
  auto p = set_product({1, 4, 5}, {1, 3});
  CHECK(p.values == IntSet{1, 3, 4, 5, 12, 15});
  CHECK(p.collision_free);

  CHECK(set_product({1}, {6, 10}).values == IntSet{6, 10});

  p = set_product({1, 2}, {1, 2});
  CHECK(p.values == IntSet{1, 2, 4});
  CHECK_FALSE(p.collision_free);
}

TEST_CASE("divisibility digraph and components") {
  auto g = divisibility_digraph({12, 15, 20});
  CHECK(g.vertices.size() == 3);
  CHECK(g.edges.empty());
  CHECK(weak_components(g).parts == std::vector<IntSet>{{12}, {15}, {20}});

  g = divisibility_digraph({3, 6, 8});
  CHECK(g.edges == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 6}});
  CHECK(weak_components(g).parts == std::vector<IntSet>{{3, 6}, {8}});

  g = divisibility_digraph({9});
  CHECK(g.vertices == IntSet{9});
  CHECK(g.edges.empty());

  CHECK(weak_components(divisibility_digraph({2, 4, 8})).parts.size() == 1);
  CHECK(weak_components(DivisibilityDigraph{}).parts.empty());
}

TEST_CASE("dot export") {
  const std::string dot = to_dot(divisibility_digraph({3, 6, 8}));
  CHECK(dot.rfind("digraph Gamma {", 0) == 0);
  CHECK(dot.find(R"("3" -> "6")") != std::string::npos);
  CHECK(dot.find(R"(-> "8")") == std::string::npos);
  CHECK(dot.find(R"(  "3";)") < dot.find(R"(  "6";)"));
  CHECK(dot.find(R"(  "6";)") < dot.find(R"(  "8";)"));
}

TEST_CASE("hypothesis factorizations") {
  auto f = find_hypothesis_factorizations({1, 3, 4, 5, 12, 15});
  REQUIRE(f.size() == 1);
  CHECK(f[0].omega == IntSet{1, 4, 5});
  CHECK(f[0].n == 3);

  CHECK(find_hypothesis_factorizations({1, 3, 6, 8}).empty());
  CHECK(find_hypothesis_factorizations({1}).empty());
  CHECK_THROWS_AS(find_hypothesis_factorizations({2, 3}), DomainError);
}

TEST_CASE("int set parsing") {
  CHECK(parse_int_set("12,15,20") == IntSet{12, 15, 20});
  CHECK(parse_int_set(" 3 , 6,8 ") == IntSet{3, 6, 8});
  CHECK_THROWS_AS(parse_int_set("3,x"), ParseError);
  CHECK_THROWS_AS(parse_int_set("3,,4"), ParseError);
  CHECK_THROWS_AS(parse_int_set("0,4"), ParseError);
  CHECK_THROWS_AS(parse_int_set(""), ParseError);
  CHECK(format_int_set({1, 4, 5}) == "{1,4,5}");
}

// Properties

TEST_CASE("extremes agree with the oracle and cover the set") {
  gen::Rng rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto s = gen::int_set(rng, 1, 10, 120);
    const auto mu = max_elements(s), nu = min_elements(s);
    REQUIRE(mu == oracle::maximal(s));
    REQUIRE(nu == oracle::minimal(s));
    for (auto a : s) {
      REQUIRE(std::any_of(mu.begin(), mu.end(), [a](auto m) { return m % a == 0; }));
      REQUIRE(std::any_of(nu.begin(), nu.end(), [a](auto m) { return a % m == 0; }));
    }
  }
}

TEST_CASE("separatedness and components") {
  gen::Rng rng(2);
  for (int trial = 0; trial < 2000; ++trial) {
    auto s = gen::int_set(rng, 1, 8, 90);
    REQUIRE(is_separated(s) == oracle::separated(s));
    const auto comps = weak_components(divisibility_digraph(s));
    REQUIRE(comps.parts == oracle::components(s));
    if (comps.is_disconnected() && s.size() >= 2) REQUIRE(is_separated(s));
    s.insert(1);
    REQUIRE_FALSE(is_separated(s));
  }
}

TEST_CASE("digraph edges are exactly the divisibility pairs") {
  gen::Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = gen::int_set(rng, 1, 10, 60);
    const auto g = divisibility_digraph(s);
    std::size_t expected = 0;
    for (auto a : s)
      for (auto b : s) expected += a != b && b % a == 0;
    REQUIRE(g.edges.size() == expected);
    for (const auto& [a, b] : g.edges) REQUIRE((a != b && b % a == 0));
  }
}

TEST_CASE("set product algebra") {
  gen::Rng rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = gen::int_set(rng, 1, 5, 30);
    const auto b = gen::int_set(rng, 1, 5, 30);
    const auto c = gen::int_set(rng, 1, 4, 30);
    REQUIRE(set_product(a, b).values == set_product(b, a).values);
    REQUIRE(set_product(set_product(a, b).values, c).values == set_product(a, set_product(b, c).values).values);
    REQUIRE(set_product(a, {1}).values == a);
    REQUIRE(set_product(a, b).collision_free == (set_product(a, b).values.size() == a.size() * b.size()));
  }
}

TEST_CASE("factorization search matches brute force") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    IntSet s = gen::class_size_like(rng, 5);
    // Half the trials are built to factor, so the positive branch is exercised.
    if (trial % 2 == 0) {
      const std::uint64_t n = gen::pick(rng, std::vector<std::uint64_t>{2, 3, 5, 7, 9, 13, 49});
      IntSet omega{1};
      for (auto v : s)
        if (oracle::gcd(v, n) == 1) omega.insert(v);
      s = set_product(omega, {1, n}).values;
    }
    if (s.size() > 12) continue;
    const auto got = find_hypothesis_factorizations(s);
    const auto want = oracle::factorizations(s);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      REQUIRE(got[i].omega == want[i].omega);
      REQUIRE(got[i].n == want[i].n);
      const auto round = set_product(got[i].omega, {1, got[i].n});
      REQUIRE(round.values == s);
      REQUIRE(round.collision_free);
    }
  }
}
