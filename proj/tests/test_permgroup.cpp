#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "depthkit/cli/corpus.hpp"
#include "depthkit/errors.hpp"
#include "depthkit/permgroup.hpp"
#include "oracles.hpp"

using namespace depthkit;

namespace {

oracle::Perm images(const Permutation &p) { return {p.images().begin(), p.images().end()}; }

oracle::Table table_of(const FiniteGroup &g)
{
  std::vector<oracle::Perm> gens;
  for (const auto &p : g.generators())
    gens.push_back(images(p));
  return oracle::Table(oracle::closure(gens));
}

std::vector<std::size_t> members(const Subgroup &h)
{
  return {h.members().begin(), h.members().end()};
}

FiniteGroup named(const std::string &n)
{
  auto ng = cli::named_group(n);
  REQUIRE(ng);
  return FiniteGroup(ng->generators, default_group_cap, n);
}

} // namespace

TEST_CASE("permutation basics")
{
  auto a = Permutation::from_cycles(4, {{0, 1, 2}});
  auto b = Permutation::from_cycles(4, {{2, 3}});
  CHECK((a * b)(2) == a(b(2)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK((a * b).to_cycle_string() == "(0 1 2 3)");
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  CHECK_THROWS(Permutation(std::vector<std::uint32_t>{0, 0, 1}));
}

TEST_CASE("enumeration matches the brute-force closure element for element")
{
  for (const auto &ng : cli::corpus_groups()) {
    FiniteGroup g(ng.generators, default_group_cap, ng.name);
    auto t = table_of(g);
    REQUIRE(g.order() == t.order());
    for (std::size_t i = 0; i < g.order(); ++i)
      CHECK(images(g.element(static_cast<ElementIndex>(i))) == t.elems[i]);
    CHECK(g.element(0).is_identity());
    for (ElementIndex x = 0; x < g.order(); x += 7)
      for (ElementIndex y = 0; y < g.order(); y += 5)
        CHECK(g.mul(x, y) == t.mul[x][y]);
  }
}

TEST_CASE("group orders of the corpus")
{
  std::map<std::string, std::size_t> expect{{"C12", 12}, {"D8", 16}, {"Q8", 8},  {"Q16", 16},
                                            {"S4", 24},  {"A5", 60}, {"S5", 120}, {"E27", 27},
                                            {"S3xC2", 12}, {"C2xC2", 4}, {"A4", 12}};
  for (const auto &[n, o] : expect)
    CHECK(named(n).order() == o);
  CHECK_THROWS_AS(FiniteGroup(cli::named_group("S5")->generators, 100), CapExceeded);
}

TEST_CASE("conjugacy classes, centers and derived subgroups agree with brute force")
{
  for (const auto &ng : cli::corpus_groups()) {
    FiniteGroup g(ng.generators, default_group_cap, ng.name);
    auto t = table_of(g);
    auto cls = conjugacy_classes(g);
    CHECK(cls.size() == oracle::class_count(t));
    std::size_t total = 0;
    for (const auto &c : cls) {
      total += c.size();
      CHECK(centralizer(g, c.front()).order() * c.size() == g.order());
      CHECK(centralizer(g, c.front()).order() == oracle::centralizer(t, c.front()).size());
    }
    CHECK(total == g.order());
    CHECK(center(g).order() == oracle::center(t).size());
    CHECK(derived_subgroup(g).order() == oracle::derived_order(t));
    CHECK(g.is_abelian() == (cls.size() == g.order()));
  }
}

TEST_CASE("group criteria agree with brute force on every small corpus pair")
{
  for (const auto &e : cli::full_corpus()) {
    if (e.group->order() > 60)
      continue;
    const auto &g = *e.group;
    auto t = table_of(g);
    auto h = members(e.subgroup);
    CAPTURE(e.id());
    CHECK(property_S(g, e.subgroup) == oracle::property_S(t, h));
    CHECK(lemma_S_via_centralizers(g, e.subgroup) == oracle::property_S(t, h));
    CHECK(depth1_group(g, e.subgroup) == oracle::depth_one(t, h));
    CHECK(hz_condition(g, e.subgroup) == (oracle::product_size(t, h, oracle::center(t)) == t.order()));
    CHECK(is_normal(g, e.subgroup) == oracle::normal(t, h));
    CHECK(h_orbits(g, e.subgroup).size() == oracle::conjugation_orbits(t, h));
  }
}

TEST_CASE("transversal covers each right coset once, identity first")
{
  auto g = named("S4");
  for (const auto &h : cyclic_subgroups(g)) {
    auto tr = right_transversal(g, h);
    CHECK(tr.size() == h.index());
    CHECK(tr.front() == 0);
    std::set<ElementIndex> seen;
    for (auto r : tr)
      for (auto m : h.members())
        CHECK(seen.insert(g.mul(m, r)).second);
    CHECK(seen.size() == g.order());
  }
}

TEST_CASE("subgroup lattices of small groups")
{
  // join closure from the trivial subgroup, one element at a time
  auto count_subgroups = [](const FiniteGroup &g) {
    auto t = table_of(g);
    std::set<std::vector<std::size_t>> subs;
    std::vector<oracle::Perm> none;
    subs.insert(oracle::subgroup(t, none));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<std::size_t>> cur(subs.begin(), subs.end());
      for (const auto &s : cur)
        for (std::size_t x = 0; x < t.order(); ++x) {
          std::vector<oracle::Perm> gens;
          for (auto m : s)
            gens.push_back(t.elems[m]);
          gens.push_back(t.elems[x]);
          if (subs.insert(oracle::subgroup(t, gens)).second)
            grew = true;
        }
    }
    return subs.size();
  };
  for (const char *n : {"S3", "C2xC2", "Q8", "D4", "C12", "A4", "S3xC2"}) {
    auto g = named(n);
    CAPTURE(n);
    CHECK(all_subgroups(g).size() == count_subgroups(g));
  }
  CHECK(all_subgroups(named("S4")).size() == 30);
}

TEST_CASE("Q8 with a cyclic subgroup of order four fails property S")
{
  auto g = named("Q8");
  auto h = Subgroup::generated_by(g, std::vector<Permutation>{g.generators()[0]});
  REQUIRE(h.order() == 4);
  CHECK_FALSE(property_S(g, h));
  CHECK_FALSE(lemma_S_via_centralizers(g, h));
  CHECK(is_normal(g, h));
  CHECK_FALSE(hz_condition(g, h));
}

TEST_CASE("trivial and whole subgroups")
{
  for (const char *n : {"S3", "D5", "A4", "Q16"}) {
    auto g = named(n);
    auto whole = Subgroup::whole(g);
    auto triv = Subgroup::trivial(g);
    CHECK(property_S(g, whole));
    CHECK(depth1_group(g, whole));
    CHECK(hz_condition(g, whole));
    CHECK(is_normal(g, triv));
    CHECK(property_S(g, triv) == g.is_abelian());
    CHECK(depth1_group(g, triv));
  }
}

TEST_CASE("subgroup construction errors")
{
  auto g = named("S3");
  auto outside = Permutation::from_cycles(4, {{0, 3}});
  CHECK_THROWS_AS(Subgroup::generated_by(g, std::vector<Permutation>{outside}), Error);
  CHECK_THROWS_AS(Subgroup::from_members(g, {0, 1, 2}), NotASubgroup);
  auto a4 = named("A4");
  CHECK_THROWS_AS(a4.index_of(Permutation::from_cycles(4, {{0, 1}})), ElementNotInGroup);
}

TEST_CASE("property: criteria implications on random subgroups of S6")
{
  std::mt19937 rng(2024);
  auto s6 = named("S6");
  std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(s6.order() - 1));
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<ElementIndex> gens{pick(rng)};
    if (trial % 3 == 0)
      gens.push_back(pick(rng));
    auto h = Subgroup::generated_by_indices(s6, gens);
    if (h.order() > 120)
      continue;
    bool s = property_S(s6, h), hz = hz_condition(s6, h), d1 = depth1_group(s6, h);
    CHECK(s == lemma_S_via_centralizers(s6, h));
    CHECK((!hz || s));
    CHECK((!s || d1));
    CHECK((!hz || d1));
  }
}
