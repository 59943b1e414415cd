#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "depthkit/chartable.hpp"
#include "depthkit/cli/corpus.hpp"
#include "depthkit/depth.hpp"
#include "oracles.hpp"

using namespace depthkit;

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

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::vector<std::vector<long>> as_long(const InclusionMatrix &m)
{
  std::vector<std::vector<long>> out;
  for (const auto &r : m.entries)
    out.emplace_back(r.begin(), r.end());
  return out;
}

long sum_of_squares(const std::vector<std::vector<long>> &m)
{
  long s = 0;
  for (const auto &r : m)
    for (auto x : r)
      s += x * x;
  return s;
}

std::vector<std::vector<long>> gram(const std::vector<std::vector<long>> &a, bool rows)
{
  std::size_t n = rows ? a.size() : a.front().size(), k = rows ? a.front().size() : a.size();
  std::vector<std::vector<long>> g(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < k; ++l)
        g[i][j] += rows ? a[i][l] * a[j][l] : a[l][i] * a[l][j];
  return g;
}

} // namespace

TEST_CASE("Dixon prime is the least admissible prime")
{
  for (const auto &ng : cli::corpus_groups()) {
    FiniteGroup g(ng.generators, default_group_cap, ng.name);
    auto p = dixon_prime(g);
    CHECK(is_prime(p));
    CHECK(p % g.exponent() == 1);
    CHECK(p * p > 4 * g.order());
    for (std::uint64_t q = 2; q < p; ++q)
      CHECK_FALSE((is_prime(q) && q % g.exponent() == 1 && q * q > 4 * g.order()));
  }
}

TEST_CASE("class multiplication coefficients match direct counting")
{
  for (const char *n : {"S3", "Q8", "A4", "D5", "S4"}) {
    auto g = named(n);
    auto t = table_of(g);
    auto cd = class_data(g);
    for (std::size_t i = 0; i < cd.count(); ++i) {
      auto a = class_mult_coeffs(g, cd, i);
      for (std::size_t j = 0; j < cd.count(); ++j)
        for (std::size_t k = 0; k < cd.count(); ++k) {
          std::uint64_t c = 0;
          auto z = cd.representatives[k];
          for (auto x : cd.classes[i])
            for (auto y : cd.classes[j])
              c += t.mul[x][y] == z;
          CHECK(a[j][k] == c);
        }
    }
  }
}

TEST_CASE("character tables of the corpus: degrees, orthogonality, linear characters")
{
  for (const auto &ng : cli::corpus_groups()) {
    FiniteGroup g(ng.generators, default_group_cap, ng.name);
    CAPTURE(ng.name);
    auto ct = character_table_mod_p(g);
    auto t = table_of(g);
    CHECK(ct.size() == oracle::class_count(t));
    CHECK(degrees_square_sum_ok(ct));
    CHECK(rows_orthonormal(ct));
    CHECK(std::count(ct.degrees.begin(), ct.degrees.end(), 1u) == g.order() / oracle::derived_order(t));
    CHECK(std::is_sorted(ct.degrees.begin(), ct.degrees.end()));
    for (std::size_t c = 0; c < ct.size(); ++c)
      CHECK(ct.table[0][c] == 1);
    // column orthogonality against brute-force centralizer orders
    const auto p = ct.prime;
    for (std::size_t c = 0; c < ct.size(); ++c) {
      std::uint64_t s = 0;
      auto inv = ct.classes.inverse_class[c];
      for (std::size_t r = 0; r < ct.size(); ++r)
        s = (s + mulmod(ct.table[r][c], ct.table[r][inv], p)) % p;
      CHECK(s == oracle::centralizer(t, ct.classes.representatives[c]).size() % p);
    }
  }
}

TEST_CASE("known degree sequences")
{
  using D = std::vector<std::size_t>;
  CHECK(character_table_mod_p(named("S3")).degrees == D{1, 1, 2});
  CHECK(character_table_mod_p(named("S4")).degrees == D{1, 1, 2, 3, 3});
  CHECK(character_table_mod_p(named("A5")).degrees == D{1, 3, 3, 4, 5});
  CHECK(character_table_mod_p(named("S5")).degrees == D{1, 1, 4, 4, 5, 5, 6});
  CHECK(character_table_mod_p(named("Q8")).degrees == D{1, 1, 1, 1, 2});
  D e27(9, 1);
  e27.push_back(3);
  e27.push_back(3);
  CHECK(character_table_mod_p(named("E27")).degrees == e27);
}

TEST_CASE("the table does not depend on the seed")
{
  auto g = named("S5");
  auto a = character_table_mod_p(g, 0, 1), b = character_table_mod_p(g, 0, 987654321);
  CHECK(a.table == b.table);
}

TEST_CASE("inclusion matrices agree with orbit counts of the group algebra")
{
  for (const auto &e : cli::full_corpus()) {
    if (e.group->order() > 60)
      continue;
    CAPTURE(e.id());
    auto t = table_of(*e.group);
    std::vector<std::size_t> h(e.subgroup.members().begin(), e.subgroup.members().end());
    auto tables = extension_tables(*e.group, e.subgroup);
    auto m = inclusion_matrix(tables);
    auto ml = as_long(m);
    // dim of the centralizer of B in A, of (A (x)_B A)^B, and of End_B A_B
    CHECK(sum_of_squares(ml) == static_cast<long>(oracle::conjugation_orbits(t, h)));
    CHECK(sum_of_squares(gram(ml, false)) == static_cast<long>(oracle::t_dim(t, h)));
    CHECK(sum_of_squares(gram(ml, true)) == static_cast<long>(oracle::u_dim(t, h)));
    CHECK(induction_matrix(*e.group, e.subgroup, tables).entries == m.entries);
    for (std::size_t j = 0; j < m.cols; ++j) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < m.rows; ++i)
        s += m.entries[i][j] * m.row_degrees[i];
      CHECK(s == m.col_degrees[j]);
    }
  }
}

TEST_CASE("symmetric group branching")
{
  for (const auto &e : cli::symmetric_chain(2, 5)) {
    CAPTURE(e.id());
    auto m = inclusion_matrix(*e.group, e.subgroup);
    const std::size_t n = e.subgroup.parent().degree();
    CHECK(m.rows == oracle::partitions(n - 1));
    CHECK(m.cols == oracle::partitions(n));
    std::size_t nnz = 0;
    for (const auto &r : m.entries)
      for (auto x : r) {
        CHECK(x <= 1);
        nnz += x != 0;
      }
    CHECK(nnz == oracle::branching_edges(n));
  }
}

TEST_CASE("S2 in S3 has the stated inclusion matrix")
{
  auto e = cli::symmetric_chain(2, 2).front();
  auto m = inclusion_matrix(*e.group, e.subgroup);
  CHECK(m.entries == std::vector<std::vector<std::uint64_t>>{{1, 0, 1}, {0, 1, 1}});
}
