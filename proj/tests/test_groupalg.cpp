#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "depthkit/cli/corpus.hpp"
#include "depthkit/errors.hpp"
#include "depthkit/groupalg.hpp"
#include "oracles.hpp"

using namespace depthkit;
using linalg::Index;

namespace {

FiniteGroup named(const std::string &n)
{
  auto ng = cli::named_group(n);
  REQUIRE(ng);
  return FiniteGroup(ng->generators, default_group_cap, n);
}

oracle::Table table_of(const FiniteGroup &g)
{
  std::vector<oracle::Perm> gens;
  for (const auto &p : g.generators())
    gens.emplace_back(p.images().begin(), p.images().end());
  return oracle::Table(oracle::closure(gens));
}

std::vector<std::size_t> members(const Subgroup &h) { return {h.members().begin(), h.members().end()}; }

/// Exact rank of span{x e y : x, y in the basis of T}, with no shortcuts.
std::size_t exact_ideal_rank(const TensorSquare &ts, const SubspaceBasis &t, const TensorSquareElement &e)
{
  linalg::EchelonForm ech(ts.dim());
  for (const auto &x : t.vectors) {
    auto xe = ts.t_product(x, e);
    for (const auto &y : t.vectors)
      ech.insert(ts.t_product(xe, y));
  }
  return ech.rank();
}

} // namespace

TEST_CASE("group algebra multiplication")
{
  auto g = named("S3");
  auto a = linalg::make_vector({{1, Rational(2)}, {3, Rational(-1)}});
  CHECK(ga_multiply(g, ga_identity(), a) == a);
  linalg::RationalVector sum;
  for (ElementIndex x = 0; x < g.order(); ++x)
    sum.emplace_back(x, Rational(1));
  // the sum of all elements absorbs every group element
  CHECK(ga_multiply(g, sum, linalg::unit_vector(4)) == sum);
}

TEST_CASE("centralizer and center dimensions count orbits")
{
  for (const auto &e : cli::full_corpus()) {
    if (e.group->order() > 60)
      continue;
    CAPTURE(e.id());
    auto t = table_of(*e.group);
    CHECK(centralizer_of_subalgebra(*e.group, e.subgroup).dim() ==
          oracle::conjugation_orbits(t, members(e.subgroup)));
    CHECK(center_space(*e.group).dim() == oracle::class_count(t));
  }
}

TEST_CASE("Q8 over a cyclic subgroup of order four")
{
  auto g = named("Q8");
  auto h = Subgroup::generated_by(g, std::vector<Permutation>{g.generators()[0]});
  CHECK(centralizer_of_subalgebra(g, h).dim() == 6);
  CHECK(center_space(g).dim() == 5);
  TensorSquare ts(g, h);
  CHECK_FALSE(unique_separable(ts, casimir_space(ts)));
  CHECK(separability_elements(ts).kind == SeparabilityElements::Kind::infinite);
}

TEST_CASE("T product matches the normalized factorwise product")
{
  std::mt19937 rng(17);
  for (const char *n : {"S3", "Q8", "A4", "D5"}) {
    auto g = named(n);
    auto t = table_of(g);
    for (const auto &h : cyclic_subgroups(g)) {
      TensorSquare ts(g, h);
      const auto &tr = ts.transversal();
      // x (x) y with y = m g_k becomes x m (x) g_k
      auto normal_form = [&](std::size_t x, std::size_t y) {
        for (std::size_t k = 0; k < tr.size(); ++k)
          for (auto m : h.members())
            if (t.mul[m][tr[k]] == y)
              return ts.basis(static_cast<ElementIndex>(t.mul[x][m]), k);
        FAIL("no coset");
        return Index{0};
      };
      std::uniform_int_distribution<Index> pick(0, static_cast<Index>(ts.dim() - 1));
      for (int k = 0; k < 40; ++k) {
        Index b1 = pick(rng), b2 = pick(rng);
        auto [g1, i] = ts.decode(b1);
        auto [g2, j] = ts.decode(b2);
        // (x (x) y)(x' (x) y') = x' x (x) y y'
        Index expect = normal_form(t.mul[g2][g1], t.mul[tr[i]][tr[j]]);
        CHECK(ts.t_product(linalg::unit_vector(b1), linalg::unit_vector(b2)) ==
              linalg::unit_vector(expect));
        CHECK(ts.mu(b1) == t.mul[g1][tr[i]]);
      }
    }
  }
}

TEST_CASE("Casimir and T dimensions agree with brute-force orbit counts")
{
  for (const auto &e : cli::full_corpus()) {
    if (e.group->order() > 24)
      continue;
    CAPTURE(e.id());
    auto t = table_of(*e.group);
    auto h = members(e.subgroup);
    TensorSquare ts(*e.group, e.subgroup);
    CHECK(casimir_space(ts).dim() == oracle::casimir_dim(t, h));
    CHECK(t_space(ts).dim() == oracle::t_dim(t, h));
    CHECK(u_space(*e.group, e.subgroup).dim() == oracle::u_dim(t, h));
  }
}

TEST_CASE("separability: uniqueness agrees with property S, and the canonical element")
{
  for (const auto &e : cli::full_corpus()) {
    if (e.group->order() > 60)
      continue;
    CAPTURE(e.id());
    auto t = table_of(*e.group);
    TensorSquare ts(*e.group, e.subgroup);
    auto cas = casimir_space(ts);
    auto sep = separability_elements(ts, cas);
    CHECK((sep.kind == SeparabilityElements::Kind::unique) ==
          oracle::property_S(t, members(e.subgroup)));
    REQUIRE(sep.kind != SeparabilityElements::Kind::none);
    REQUIRE(sep.element);
    CHECK(ts.multiplication(*sep.element) == ga_identity());
    CHECK(ts.is_a_central(*sep.element));
    for (const auto &k : sep.kernel) {
      CHECK(ts.multiplication(k).empty());
      CHECK(cas.contains(k));
    }
    linalg::EchelonForm image(e.group->order());
    for (const auto &v : cas.vectors)
      image.insert(ts.multiplication(v));
    CHECK(sep.kernel.size() + image.rank() == cas.dim());
    auto c = canonical_separability_element(ts);
    CHECK(ts.multiplication(c) == ga_identity());
    CHECK(ts.is_a_central(c));
    CHECK(idempotent_in_T(ts, c));
    if (sep.kind == SeparabilityElements::Kind::unique)
      CHECK(*sep.element == c);
  }
}

TEST_CASE("fullness in T matches exact elimination and the T-diagonal criterion")
{
  for (const auto &e : cli::full_corpus()) {
    if (e.group->order() > 12)
      continue;
    CAPTURE(e.id());
    TensorSquare ts(*e.group, e.subgroup);
    auto t = t_space(ts);
    auto c = canonical_separability_element(ts);
    bool full = is_full_in_T(ts, t, c);
    CHECK(full == (exact_ideal_rank(ts, t, c) == t.dim()));
    CHECK(dim_eTe(ts, t, c) == conjugacy_classes(*e.group).size());
  }
}

TEST_CASE("fullness in U matches depth one")
{
  for (const auto &e : cli::full_corpus()) {
    if (e.group->order() > 24)
      continue;
    CAPTURE(e.id());
    auto t = table_of(*e.group);
    BimoduleEndomorphisms u(*e.group, e.subgroup);
    auto E = u.projection();
    CHECK(u.basis().contains(u.identity()));
    CHECK(u.basis().contains(E));
    CHECK(u.compose(E, E) == E);
    CHECK(u.is_full() == oracle::depth_one(t, members(e.subgroup)));
    CHECK(u.dim_EUE() == conjugacy_classes(e.subgroup.as_group()).size());
    // E is the conditional expectation onto B
    auto a = linalg::make_vector({{0, Rational(3)}, {static_cast<Index>(e.group->order() - 1), Rational(1)}});
    CHECK(u.apply(E, a) == conditional_expectation(e.subgroup, a));
  }
}

TEST_CASE("T product table is associative with unit 1 (x) 1")
{
  auto e = cli::symmetric_chain(2, 2).front();
  TensorSquare ts(*e.group, e.subgroup);
  auto ta = t_space_with_product(ts);
  const auto d = ta.basis.dim();
  REQUIRE(d == 10);
  REQUIRE(ta.table.size() == d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        auto ab = ta.basis.combine(ta.table[a][b]);
        auto bc = ta.basis.combine(ta.table[b][c]);
        CHECK(ts.t_product(ab, ta.basis.vectors[c]) == ts.t_product(ta.basis.vectors[a], bc));
      }
  auto one = linalg::unit_vector(0);
  for (const auto &v : ta.basis.vectors) {
    CHECK(ts.t_product(one, v) == v);
    CHECK(ts.t_product(v, one) == v);
  }
}

TEST_CASE("Frobenius data and E-index")
{
  for (const auto &e : cli::full_corpus()) {
    if (e.group->order() > 60)
      continue;
    CAPTURE(e.id());
    auto ei = e_index(*e.group, e.subgroup);
    CHECK(ei.equals_index_times_one);
    CHECK(ei.central);
    CHECK(ei.transversal_independent);
    CHECK(ei.element == linalg::make_vector({{0, Rational(static_cast<long>(e.subgroup.index()))}}));
    CHECK(dual_basis_identity(*e.group, e.subgroup,
                              frobenius_data(*e.group, e.subgroup, alternate_transversal(*e.group, e.subgroup))));
  }
}

TEST_CASE("errors")
{
  auto e = cli::symmetric_chain(2, 2).front();
  CHECK_THROWS_AS(TensorSquare(*e.group, e.subgroup, 10), CapExceeded);
  TensorSquare ts(*e.group, e.subgroup);
  CHECK_THROWS_AS(t_space(ts, 5), CapExceeded);
  CHECK_THROWS_AS(BimoduleEndomorphisms(*e.group, e.subgroup, 20), CapExceeded);
  auto other = named("S3");
  CHECK_THROWS_AS(TensorSquare(other, e.subgroup), NotASubgroup);
  CHECK_THROWS_AS(idempotent_in_T(ts, linalg::unit_vector(ts.basis(1, 1))), NotInT);
}
