#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "depthkit/linalg.hpp"

using namespace depthkit::linalg;

namespace {

std::vector<RationalVector> random_rows(std::mt19937 &rng, std::size_t rows, std::size_t cols,
                                        int density, int range)
{
  std::uniform_int_distribution<int> coin(0, 99), val(-range, range), den(1, 3);
  std::vector<RationalVector> out;
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<std::pair<Index, Rational>> t;
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) < density) {
        Rational q(val(rng), den(rng));
        q.canonicalize();
        t.emplace_back(static_cast<Index>(c), q);
      }
    out.push_back(make_vector(std::move(t)));
  }
  return out;
}

std::vector<std::vector<Integer>> dense(const std::vector<RationalVector> &rows, std::size_t cols)
{
  std::vector<std::vector<Integer>> m;
  for (const auto &r : rows) {
    std::vector<Integer> d(cols, 0);
    for (const auto &[i, q] : primitive_row(r))
      d[i] = q;
    m.push_back(std::move(d));
  }
  return m;
}

} // namespace

TEST_CASE("rational parsing and printing")
{
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("sparse vector helpers")
{
  auto v = make_vector({{3, Rational(1)}, {1, Rational(2)}, {3, Rational(-1)}});
  REQUIRE(v.size() == 1);
  CHECK(v[0].first == 1);
  CHECK(is_zero(subtract(v, v)));
  CHECK(coefficient(scale(v, Rational(1, 2)), 1) == 1);
  CHECK(dot(v, add(v, unit_vector(5))) == 4);
  auto p = primitive_row(make_vector({{0, Rational(-2, 3)}, {2, Rational(4, 9)}}));
  CHECK(p[0].second == 3);
  CHECK(p[1].second == -2);
}

TEST_CASE("echelon rank agrees with dense Bareiss on random matrices")
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 3 + trial % 9, cols = 2 + (trial * 5) % 11;
    auto m = random_rows(rng, rows, cols, 30 + trial % 50, 3);
    // duplicate combinations force dependent rows
    if (rows > 2)
      m.push_back(add(m[0], scale(m[1], Rational(-5, 7))));
    EchelonForm e(cols);
    for (const auto &r : m)
      e.insert(r);
    CHECK(e.rank() == bareiss_rank(dense(m, cols)));
    auto b = e.rref();
    for (const auto &r : m)
      CHECK(b.contains(r));
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t k = 0; k < b.dim(); ++k)
        CHECK(coefficient(b.vectors[k], b.pivots[i]) == (i == k ? 1 : 0));
  }
}

TEST_CASE("nullspace vectors annihilate every equation")
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t cols = 3 + trial % 8;
    auto eqs = random_rows(rng, 1 + trial % 6, cols, 50, 4);
    auto k = nullspace(std::span<const RationalVector>(eqs), cols);
    EchelonForm e(cols);
    for (const auto &r : eqs)
      e.insert(r);
    CHECK(k.dim() + e.rank() == cols);
    for (const auto &v : k.vectors)
      for (const auto &r : eqs)
        CHECK(dot(v, r) == 0);
  }
}

TEST_CASE("coordinates and combine are inverse")
{
  std::mt19937 rng(3);
  auto rows = random_rows(rng, 4, 7, 60, 5);
  auto b = span_of(rows, 7);
  auto v = add(scale(rows[0], Rational(2)), scale(rows[2], Rational(-1, 3)));
  auto c = b.coordinates(v);
  CHECK(b.combine(c) == v);
}

TEST_CASE("affine solve")
{
  std::vector<RationalVector> rows{make_vector({{0, Rational(1)}, {1, Rational(1)}}),
                                   make_vector({{1, Rational(1)}, {2, Rational(-1)}})};
  std::vector<Rational> rhs{Rational(3), Rational(1)};
  auto s = solve_affine(rows, rhs, 3);
  REQUIRE(s);
  CHECK(dot(rows[0], s->particular) == 3);
  CHECK(dot(rows[1], s->particular) == 1);
  CHECK(s->kernel.dim() == 1);
  std::vector<Rational> bad{Rational(1), Rational(2)};
  std::vector<RationalVector> twice{rows[0], rows[0]};
  CHECK_FALSE(solve_affine(twice, bad, 3));
}

TEST_CASE("invariant space of permutations has one vector per orbit")
{
  std::vector<std::vector<Index>> perms{{1, 2, 0, 3, 4, 6, 5}, {0, 1, 2, 4, 3, 5, 6}};
  auto b = invariant_space(7, perms);
  CHECK(b.dim() == 3); // {0,1,2}, {3,4}, {5,6}
}

TEST_CASE("modular rank never exceeds the exact rank and matches it generically")
{
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t cols = 4 + trial % 9;
    auto m = random_rows(rng, 2 + trial % 10, cols, 45, 6);
    ModularEchelon mod(cols);
    EchelonForm ex(cols);
    for (const auto &r : m) {
      mod.insert(r);
      ex.insert(r);
    }
    CHECK(mod.rank() == ex.rank());
    if (mod.rank() < cols) {
      auto phi = mod.kernel_candidate();
      REQUIRE(phi);
      CHECK_FALSE(phi->empty());
      for (const auto &r : m)
        CHECK(dot(r, *phi) == 0);
    } else {
      CHECK_FALSE(mod.kernel_candidate());
    }
  }
}

TEST_CASE("rational reconstruction recovers small fractions")
{
  const auto p = ModularEchelon::prime;
  for (long n : {-7L, 0L, 1L, 12345L, -99991L})
    for (unsigned long d : {1UL, 2UL, 9UL, 1000003UL}) {
      mpz_class x = mpz_class(n) % mpz_class(static_cast<unsigned long>(p));
      if (x < 0)
        x += static_cast<unsigned long>(p);
      mpz_class inv;
      mpz_class mp(static_cast<unsigned long>(p));
      mpz_class dd(d);
      mpz_invert(inv.get_mpz_t(), dd.get_mpz_t(), mp.get_mpz_t());
      mpz_class r = x * inv % mp;
      auto q = rational_reconstruction(r.get_ui(), p);
      if (n == 0) {
        CHECK((!q || *q == 0));
        continue;
      }
      REQUIRE(q);
      Rational expect{mpz_class(n), mpz_class(d)};
      expect.canonicalize();
      CHECK(*q == expect);
    }
}
