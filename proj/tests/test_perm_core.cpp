#include <catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>

#include "conjlab/corpus.hpp"
#include "conjlab/error.hpp"
#include "conjlab/grp_format.hpp"
#include "conjlab/structure.hpp"
#include "gen.hpp"
#include "oracle/oracle.hpp"

using namespace conjlab;

namespace {

Permutation cyc(std::size_t d, std::vector<std::vector<Point>> c) { return Permutation::from_cycles(d, c); }

Group s3() { return Group::from_generators(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}); }
Group s4() { return build(GroupSpec::symmetric(4)); }
Group a5() { return Group::from_generators(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{2, 3, 4}})}); }
Group c(std::uint64_t n) { return build(GroupSpec::cyclic(n)); }

std::vector<std::uint64_t> orders(const std::vector<Subgroup>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& s : v) out.push_back(s.order());
  return out;
}

std::vector<std::uint64_t> class_sizes_list(const Group& g) {
  std::vector<std::uint64_t> out;
  for (const auto& cl : conjugacy_classes(g)) out.push_back(cl.size());
  return out;
}

/// Small groups with few enough classes for the bitmask oracle.
std::vector<GroupSpec> small_specs() {
  return {GroupSpec::cyclic(1),      GroupSpec::cyclic(8),      GroupSpec::cyclic(12),
          GroupSpec::dihedral(4),    GroupSpec::dihedral(6),    GroupSpec::dihedral(9),
          GroupSpec::symmetric(3),   GroupSpec::symmetric(4),   GroupSpec::alternating(4),
          GroupSpec::alternating(5), GroupSpec::frobenius(5, 4), GroupSpec::frobenius(7, 3),
          GroupSpec::heisenberg(3),  GroupSpec::direct({GroupSpec::symmetric(3), GroupSpec::cyclic(2)}),
          GroupSpec::direct({GroupSpec::cyclic(2), GroupSpec::cyclic(2), GroupSpec::cyclic(2)})};
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto a = cyc(4, {{0, 1}});
  const auto b = cyc(4, {{1, 2, 3}});
  // Left to right: apply a, then b.
  CHECK((a * b)[0] == 2);
  CHECK((a * b).to_cycle_string() == "(0 2 3 1)");
  CHECK((a * a).is_identity());
  CHECK(b.order() == 3);
  CHECK((b * b.inverse()).is_identity());
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  CHECK(cyc(6, {{4, 2}, {5, 1, 3}}).to_cycle_string() == "(1 3 5)(2 4)");
  CHECK(b.extended(6, 2).to_cycle_string() == "(3 4 5)");

  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({0, 3}), InvalidPermutation);
  CHECK_THROWS_AS(cyc(3, {{0, 1}, {1, 2}}), InvalidPermutation);
  CHECK_THROWS_AS(cyc(3, {{0, 5}}), InvalidPermutation);
}

TEST_CASE("cycle parsing") {
  CHECK(parse_cycles(5, "(0 1 2)(3 4)") == cyc(5, {{0, 1, 2}, {3, 4}}));
  CHECK(parse_cycles(3, "()").is_identity());
  CHECK(parse_cycles(3, " ( 0  2 ) ") == cyc(3, {{0, 2}}));
  CHECK_THROWS_AS(parse_cycles(3, "(0 1"), ParseError);
  CHECK_THROWS_AS(parse_cycles(3, "(0 x)"), ParseError);
  CHECK_THROWS_AS(parse_cycles(3, "(0 7)"), ParseError);
  CHECK_THROWS_AS(parse_cycles(3, "(0 1)(1 2)"), ParseError);
}

TEST_CASE("group from generators") {
  CHECK(s3().order() == 6);
  CHECK(a5().order() == 60);
  CHECK(Group::from_generators(2, {}).order() == 1);
  CHECK(Group().order() == 1);

  CHECK_THROWS_AS(Group::from_generators(3, {cyc(4, {{0, 1}})}), InvalidPermutation);
  CHECK_THROWS_AS(Group::from_generators(5, {cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})}, 100), CapExceeded);

  const Group g = s4();
  CHECK(g.element(Group::identity()).is_identity());
  for (ElementId e = 1; e < g.order(); ++e) CHECK(g.element(e - 1) < g.element(e));
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    CHECK(g.element(g.generator_ids()[i]) == g.generators()[i]);
  CHECK_THROWS_AS(g.id_of(cyc(5, {{0, 1}})), ElementNotInGroup);
  CHECK_FALSE(a5().find(cyc(5, {{0, 1}})).has_value());
}

TEST_CASE("element arithmetic matches permutations") {
  gen::Rng rng(11);
  const Group g = a5();
  for (int t = 0; t < 500; ++t) {
    const auto x = static_cast<ElementId>(gen::uniform(rng, 0, g.order() - 1));
    const auto y = static_cast<ElementId>(gen::uniform(rng, 0, g.order() - 1));
    REQUIRE(g.element(g.mul(x, y)) == g.element(x) * g.element(y));
    REQUIRE(g.element(g.inv(x)) == g.element(x).inverse());
    REQUIRE(g.element(g.conj(x, y)) == g.element(y).inverse() * g.element(x) * g.element(y));
    REQUIRE(g.commute(x, y) == (g.element(x) * g.element(y) == g.element(y) * g.element(x)));
    REQUIRE(g.element_order(x) == g.element(x).order());
    REQUIRE(g.element(g.pow(x, 7)) == g.element(x) * g.element(x) * g.element(x) * g.element(x) *
                                          g.element(x) * g.element(x) * g.element(x));
  }
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes_list(s3()) == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(class_sizes_list(a5()) == std::vector<std::uint64_t>{1, 12, 12, 15, 20});
  CHECK(class_sizes_list(c(6)) == std::vector<std::uint64_t>(6, 1));

  const Group g = s4();
  const auto& cp = g.classes();
  for (std::size_t i = 0; i < cp.classes.size(); ++i) {
    const auto& cl = cp.classes[i];
    CHECK(cl.representative == cl.members.front());
    for (auto m : cl.members) CHECK(cp.class_of[m] == i);
  }
}

TEST_CASE("centralizers and center") {
  const Group g = s3();
  CHECK(centralizer(g, cyc(3, {{0, 1}})).order() == 2);
  CHECK(centralizer(g, Group::identity()).order() == 6);
  CHECK(center(g).order() == 1);
  CHECK(center(c(6)).order() == 6);
  CHECK(center(build(GroupSpec::heisenberg(3))).order() == 3);
  CHECK_THROWS_AS(centralizer(g, cyc(4, {{0, 1}})), ElementNotInGroup);
}

TEST_CASE("generated subgroups") {
  const Group g = s3();
  CHECK(subgroup_generated(g, std::vector<Permutation>{cyc(3, {{0, 1, 2}})}).order() == 3);
  CHECK(subgroup_generated(g, std::vector<Permutation>{}).order() == 1);

  const Group a = a5();
  const auto& fives = *std::find_if(a.classes().classes.begin(), a.classes().classes.end(),
                                    [&](const ConjugacyClass& cl) { return a.element_order(cl.representative) == 5; });
  CHECK(subgroup_generated(a, std::span<const ElementId>(fives.members)).order() == 60);
  CHECK_THROWS_AS(subgroup_generated(g, std::vector<Permutation>{cyc(4, {{0, 1}})}), ElementNotInGroup);
}

TEST_CASE("subgroup construction from elements") {
  const Group g = s3();
  const ElementId t = g.id_of(cyc(3, {{0, 1}}));
  CHECK(Subgroup::from_elements(g, {t, Group::identity()}).order() == 2);
  CHECK_THROWS_AS(Subgroup::from_elements(g, {Group::identity(), g.id_of(cyc(3, {{0, 1, 2}}))}), NotASubgroup);
}

TEST_CASE("Sylow subgroups") {
  CHECK(sylow_subgroup(s4(), 2).order() == 8);
  CHECK(sylow_subgroup(a5(), 5).order() == 5);
  CHECK(sylow_subgroup(c(15), 2).order() == 1);
  CHECK(sylow_subgroup(build(GroupSpec::frobenius(13, 3)), 13).order() == 13);
}

TEST_CASE("normalizers") {
  const Group g = s3();
  CHECK(normalizer(sylow_subgroup(g, 3)).order() == 6);
  const Subgroup t = subgroup_generated(g, std::vector<Permutation>{cyc(3, {{0, 1}})});
  CHECK(normalizer(t) == t);
  CHECK(normalizer(Subgroup::whole(g)).order() == 6);
  CHECK(conjugates(t).size() == 3);
}

TEST_CASE("normal subgroups") {
  CHECK(orders(normal_subgroups(s3())) == std::vector<std::uint64_t>{1, 3, 6});
  CHECK(orders(normal_subgroups(a5())) == std::vector<std::uint64_t>{1, 60});
  CHECK(orders(normal_subgroups(c(4))) == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(orders(normal_subgroups(s4())) == std::vector<std::uint64_t>{1, 4, 12, 24});
  CHECK_THROWS_AS(normal_subgroups(build(GroupSpec::heisenberg(3)), 3), BudgetExceeded);
}

TEST_CASE("normal subgroups agree with the class-union oracle") {
  for (const auto& spec : small_specs()) {
    INFO(spec.name());
    const Group g = build(spec);
    std::vector<Permutation> elems;
    for (ElementId e = 0; e < g.order(); ++e) elems.push_back(g.element(e));
    const auto want = oracle::normal_subgroups(elems);
    const auto got = normal_subgroups(g);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      std::set<Permutation> s;
      for (auto e : got[i].elements()) s.insert(g.element(e));
      CHECK(s == want[i]);
      CHECK(is_normal(got[i]));
    }
  }
}

TEST_CASE("O_p' and normal p-complements") {
  const Group g = s3();
  CHECK(o_p_prime(g, 3).order() == 1);
  CHECK_FALSE(has_normal_p_complement(g, 3));
  CHECK(has_normal_p_complement(g, 2));
  CHECK(o_p_prime(g, 2).order() == 3);
  for (std::uint64_t p : {2, 3, 5}) CHECK(has_normal_p_complement(c(6), p));

  // O_{p'} is the unique maximal p'-order normal subgroup.
  for (const auto& spec : small_specs()) {
    const Group h = build(spec);
    const auto normals = normal_subgroups(h);
    for (auto p : h.order() > 1 ? arith::prime_divisors(h.order()) : std::vector<std::uint64_t>{}) {
      const Subgroup o = o_p_prime(h, p, normals);
      CHECK(o.order() % p != 0);
      for (const auto& n : normals)
        if (n.order() % p != 0) CHECK(n.is_subgroup_of(o));
    }
  }
}

TEST_CASE("quotients") {
  const Group g = s3();
  const auto q = quotient_group(sylow_subgroup(g, 3));
  CHECK(q.group.order() == 2);
  CHECK_THROWS_AS(quotient_group(sylow_subgroup(g, 2)), NotNormal);

  const Group c4 = c(4);
  const ElementId sq = c4.mul(c4.generator_ids()[0], c4.generator_ids()[0]);
  CHECK(quotient_group(subgroup_generated(c4, std::vector<ElementId>{sq})).group.order() == 2);

  // The projection is a homomorphism with kernel K.
  const Group h = s4();
  for (const auto& k : normal_subgroups(h)) {
    const auto qk = quotient_group(k);
    CHECK(qk.group.order() * k.order() == h.order());
    for (ElementId x = 0; x < h.order(); ++x) {
      CHECK((qk.projection[x] == Group::identity()) == k.contains(x));
      for (ElementId y = 0; y < h.order(); y += 5)
        REQUIRE(qk.projection[h.mul(x, y)] == qk.group.mul(qk.projection[x], qk.projection[y]));
    }
  }
}

TEST_CASE("quotient of A5 x H7 by O_7'") {
  const Group g = build(GroupSpec::direct({GroupSpec::alternating(5), GroupSpec::heisenberg(7)}));
  const Subgroup o = o_p_prime(g, 7);
  CHECK(o.order() == 60);
  CHECK(quotient_group(o).group.order() == 343);
}

TEST_CASE("direct products") {
  CHECK(direct_product(s3(), c(2)).order() == 12);
  CHECK(direct_product(s3(), c(2)).degree() == 5);
  const Group t = direct_product(Group(), s4());
  CHECK(t.order() == 24);
  CHECK(class_sizes_list(t) == class_sizes_list(s4()));
  CHECK_THROWS_AS(direct_product(s4(), s4(), 500), CapExceeded);
}

TEST_CASE("internal direct products") {
  const Group g = c(6);
  CHECK(is_internal_direct_product(sylow_subgroup(g, 2), sylow_subgroup(g, 3)));
  const Group h = s3();
  CHECK_FALSE(is_internal_direct_product(sylow_subgroup(h, 3), sylow_subgroup(h, 2)));
  CHECK(is_internal_direct_product(Subgroup::whole(h), Subgroup::trivial(h)));
}

TEST_CASE("composition factors") {
  auto f = composition_factors(s4());
  std::sort(f.begin(), f.end());
  CHECK(f == std::vector<CompositionFactor>{{2, true}, {2, true}, {2, true}, {3, true}});
  CHECK(composition_factors(a5()) == std::vector<CompositionFactor>{{60, false}});
  f = composition_factors(c(6));
  std::sort(f.begin(), f.end());
  CHECK(f == std::vector<CompositionFactor>{{2, true}, {3, true}});
  CHECK(composition_factors(Group()).empty());
}

TEST_CASE("grp format round trip") {
  const GrpFile f{7, "pair of cycles", {cyc(7, {{0, 1, 2}, {3, 4}}), Permutation::identity(7), cyc(7, {{5, 6}})}};
  const std::string text = write_grp(f);
  CHECK(text == "degree 7\nname pair of cycles\n(0 1 2)(3 4)\n()\n(5 6)\n");
  CHECK(parse_grp(text) == f);
  CHECK(write_grp(parse_grp(text)) == text);
  CHECK(parse_grp("# comment\n\ndegree 3\nname s3\n# gens\n(0 1)\n(0 1 2)\n").generators.size() == 2);

  try {
    parse_grp("degree 3\nname x\n(0 1)\n(0 9)\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_grp("name x\ndegree 3\n"), ParseError);
  CHECK_THROWS_AS(parse_grp("degree three\nname x\n"), ParseError);

  const auto path = std::filesystem::temp_directory_path() / "conjlab_perm_core_test.grp";
  write_grp_file(path, f);
  CHECK(read_grp_file(path) == f);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_grp_file(path), IoError);
}

// Properties

TEST_CASE("class equation and orbit-stabilizer on random generated groups") {
  gen::Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = gen::uniform(rng, 1, 6);
    std::vector<Permutation> gens;
    for (auto k = gen::uniform(rng, 0, 2); k > 0; --k) gens.push_back(gen::permutation(rng, d));
    const Group g = Group::from_generators(d, gens);
    const auto elems = oracle::enumerate(d, gens);
    REQUIRE(g.order() == elems.size());
    for (ElementId e = 0; e < g.order(); ++e) REQUIRE(g.element(e) == elems[e]);

    std::uint64_t sum = 0;
    for (const auto& cl : conjugacy_classes(g)) {
      sum += cl.size();
      REQUIRE(g.order() % cl.size() == 0);
    }
    REQUIRE(sum == g.order());
    for (ElementId x = 0; x < g.order(); ++x) {
      const auto cx = centralizer(g, x).order();
      REQUIRE(cx == oracle::centralizer_order(elems, g.element(x)));
      REQUIRE(cx * g.classes().classes[g.classes().class_of[x]].size() == g.order());
    }
  }
}

TEST_CASE("Lagrange for generated subgroups") {
  gen::Rng rng(13);
  const Group g = s4();
  for (int t = 0; t < 200; ++t) {
    std::vector<ElementId> seed;
    for (auto k = gen::uniform(rng, 0, 2); k > 0; --k) seed.push_back(static_cast<ElementId>(gen::uniform(rng, 0, 23)));
    const Subgroup h = subgroup_generated(g, seed);
    REQUIRE(g.order() % h.order() == 0);
    for (auto s : seed) REQUIRE(h.contains(s));
    for (auto a : h.elements())
      for (auto b : h.elements()) REQUIRE(h.contains(g.mul(a, b)));
  }
}

TEST_CASE("Sylow subgroups have full p-part and are all conjugate") {
  for (const auto& spec : small_specs()) {
    const Group g = build(spec);
    for (auto p : g.order() > 1 ? arith::prime_divisors(g.order()) : std::vector<std::uint64_t>{}) {
      INFO(spec.name() << " p=" << p);
      const Subgroup s = sylow_subgroup(g, p);
      REQUIRE(s.order() == arith::p_part(g.order(), p));
      // Every p-subgroup generated by a p-element lies in some conjugate.
      const auto conj = conjugates(s);
      REQUIRE(g.order() % conj.size() == 0);
      REQUIRE(conj.size() % p == 1 % p);
      for (ElementId x = 0; x < g.order(); ++x)
        if (is_p_element(g, x, p))
          REQUIRE(std::any_of(conj.begin(), conj.end(), [x](const Subgroup& c) { return c.contains(x); }));
      // A second Sylow subgroup found from a conjugated start is one of the conjugates.
      const Subgroup other = conjugate(s, static_cast<ElementId>(g.order() - 1));
      REQUIRE(std::find(conj.begin(), conj.end(), other) != conj.end());
    }
  }
}

TEST_CASE("composition factor multiset does not depend on the choice of maximal normal subgroup") {
  for (const auto& spec : small_specs()) {
    INFO(spec.name());
    const Group g = build(spec);
    auto a = composition_factors(g, kDefaultNormalBudget, MaximalNormalChoice::Largest);
    auto b = composition_factors(g, kDefaultNormalBudget, MaximalNormalChoice::Smallest);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    std::uint64_t prod = 1;
    for (const auto& f : a) prod *= f.order;
    CHECK(prod == g.order());
  }
}
