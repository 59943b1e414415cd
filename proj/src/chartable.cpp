#include "depthkit/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "depthkit/errors.hpp"

namespace depthkit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p ? s - p : s; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 a, u64 e, u64 p)
{
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p)
{
  if (a % p == 0)
    throw Error("attempt to invert zero mod p");
  return powmod(a, p - 2, p);
}

bool is_prime(u64 n)
{
  if (n < 2)
    return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::size_t isqrt(std::size_t n)
{
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

/// Characteristic polynomial (coefficients low to high, monic) via Hessenberg reduction.
std::vector<u64> charpoly(ModMatrix a, u64 p)
{
  const std::size_t n = a.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && a[i][j] == 0)
      ++i;
    if (i == n)
      continue;
    if (i != j + 1) {
      std::swap(a[i], a[j + 1]);
      for (std::size_t r = 0; r < n; ++r)
        std::swap(a[r][i], a[r][j + 1]);
    }
    u64 inv = invmod(a[j + 1][j], p);
    for (std::size_t k = j + 2; k < n; ++k) {
      u64 u = mulmod(a[k][j], inv, p);
      if (u == 0)
        continue;
      for (std::size_t c = 0; c < n; ++c)
        a[k][c] = submod(a[k][c], mulmod(u, a[j + 1][c], p), p);
      for (std::size_t r = 0; r < n; ++r)
        a[r][j + 1] = addmod(a[r][j + 1], mulmod(u, a[r][k], p), p);
    }
  }
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // (x - h[m-1][m-1]) * p_{m-1}
    std::vector<u64> cur(m + 1, 0);
    const auto &prev = polys[m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = addmod(cur[d + 1], prev[d], p);
      cur[d] = submod(cur[d], mulmod(a[m - 1][m - 1], prev[d], p), p);
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mulmod(t, a[m - i][m - i - 1], p);
      u64 coef = mulmod(t, a[m - i - 1][m - 1], p);
      if (coef == 0)
        continue;
      const auto &q = polys[m - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d)
        cur[d] = submod(cur[d], mulmod(coef, q[d], p), p);
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

u64 eval(const std::vector<u64> &poly, u64 x, u64 p)
{
  u64 r = 0;
  for (std::size_t d = poly.size(); d-- > 0;)
    r = addmod(mulmod(r, x, p), poly[d], p);
  return r;
}

/// Kernel basis of a square matrix mod p.
std::vector<std::vector<u64>> kernel_mod(ModMatrix a, u64 p)
{
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(a[piv], a[r]);
    u64 inv = invmod(a[r][c], p);
    for (auto &x : a[r])
      x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      u64 f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = submod(a[i][j], mulmod(f, a[r][j], p), p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col)
    is_pivot[c] = true;
  std::vector<std::vector<u64>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<u64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = submod(0, a[i][f], p);
    out.push_back(std::move(v));
  }
  return out;
}

/// Subspace of F_p^n in reduced form: basis[m][pivots[m]] = 1, zero at other pivots.
struct ModSubspace
{
  std::vector<std::vector<u64>> basis;
  std::vector<std::size_t> pivots;
};

ModSubspace reduce_subspace(std::vector<std::vector<u64>> vecs, u64 p)
{
  ModSubspace s;
  if (vecs.empty())
    return s;
  const std::size_t n = vecs[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < vecs.size(); ++c) {
    std::size_t piv = r;
    while (piv < vecs.size() && vecs[piv][c] == 0)
      ++piv;
    if (piv == vecs.size())
      continue;
    std::swap(vecs[piv], vecs[r]);
    u64 inv = invmod(vecs[r][c], p);
    for (auto &x : vecs[r])
      x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (i == r || vecs[i][c] == 0)
        continue;
      u64 f = vecs[i][c];
      for (std::size_t j = 0; j < n; ++j)
        vecs[i][j] = submod(vecs[i][j], mulmod(f, vecs[r][j], p), p);
    }
    s.pivots.push_back(c);
    ++r;
  }
  vecs.resize(r);
  s.basis = std::move(vecs);
  return s;
}

} // namespace

ClassData class_data(const FiniteGroup &g)
{
  ClassData cd;
  cd.classes = conjugacy_classes(g);
  cd.class_of.assign(g.order(), 0);
  for (std::size_t k = 0; k < cd.classes.size(); ++k) {
    cd.sizes.push_back(cd.classes[k].size());
    cd.representatives.push_back(cd.classes[k].front());
    for (auto x : cd.classes[k])
      cd.class_of[x] = k;
  }
  for (std::size_t k = 0; k < cd.classes.size(); ++k)
    cd.inverse_class.push_back(cd.class_of[g.inv(cd.representatives[k])]);
  cd.exponent = g.exponent();
  return cd;
}

std::vector<std::vector<std::uint64_t>> class_mult_coeffs(const FiniteGroup &g,
                                                          const ClassData &cd, std::size_t i)
{
  const std::size_t r = cd.count();
  std::vector<std::vector<std::uint64_t>> a(r, std::vector<std::uint64_t>(r, 0));
  for (std::size_t k = 0; k < r; ++k) {
    ElementIndex z = cd.representatives[k];
    for (auto x : cd.classes[i]) {
      ElementIndex y = g.mul(g.inv(x), z);
      ++a[cd.class_of[y]][k];
    }
  }
  return a;
}

std::uint64_t dixon_prime(std::size_t order, std::size_t exponent)
{
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  for (u64 p = exponent + 1;; p += exponent) {
    if (static_cast<double>(p) > bound && is_prime(p))
      return p;
  }
}

std::uint64_t dixon_prime(const FiniteGroup &g) { return dixon_prime(g.order(), g.exponent()); }

CharacterTableModP character_table_mod_p(const FiniteGroup &g, std::uint64_t prime,
                                         std::uint64_t seed)
{
  CharacterTableModP t;
  t.classes = class_data(g);
  t.group_order = g.order();
  t.seed = seed;
  const ClassData &cd = t.classes;
  const std::size_t r = cd.count();
  const u64 p = prime ? prime : dixon_prime(g.order(), cd.exponent);
  t.prime = p;
  if ((p - 1) % cd.exponent != 0 || !is_prime(p))
    throw Error("prime " + std::to_string(p) + " is not 1 mod the group exponent");
  if (static_cast<double>(p) <= 2.0 * std::sqrt(static_cast<double>(g.order())))
    throw Error("prime " + std::to_string(p) + " is too small for the group order");

  std::vector<ModMatrix> mats;
  mats.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto a = class_mult_coeffs(g, cd, i);
    for (auto &row : a)
      for (auto &x : row)
        x %= p;
    mats.push_back(std::move(a));
  }

  std::mt19937_64 rng(seed);
  std::vector<std::vector<u64>> all(r, std::vector<u64>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    all[i][i] = 1;
  std::vector<ModSubspace> stack{reduce_subspace(all, p)};
  std::vector<std::vector<u64>> lines;
  const std::size_t max_attempts = 32 + 2 * r;

  while (!stack.empty()) {
    ModSubspace w = std::move(stack.back());
    stack.pop_back();
    const std::size_t k = w.basis.size();
    if (k == 1) {
      lines.push_back(w.basis[0]);
      continue;
    }
    bool split = false;
    for (std::size_t attempt = 0; attempt < max_attempts && !split; ++attempt) {
      // mostly random combinations; every third attempt a single class matrix
      std::vector<u64> coef(r, 0);
      if (attempt % 3 == 2) {
        coef[1 + (attempt / 3) % (r - 1)] = 1;
      } else {
        for (auto &c : coef)
          c = rng() % p;
      }
      ModMatrix x(r, std::vector<u64>(r, 0));
      for (std::size_t i = 0; i < r; ++i) {
        if (coef[i] == 0)
          continue;
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t b = 0; b < r; ++b)
            x[a][b] = addmod(x[a][b], mulmod(coef[i], mats[i][a][b], p), p);
      }
      ModMatrix restricted(k, std::vector<u64>(k, 0));
      for (std::size_t l = 0; l < k; ++l) {
        std::vector<u64> img(r, 0);
        for (std::size_t a = 0; a < r; ++a) {
          u64 s = 0;
          for (std::size_t b = 0; b < r; ++b)
            s = addmod(s, mulmod(x[a][b], w.basis[l][b], p), p);
          img[a] = s;
        }
        for (std::size_t m = 0; m < k; ++m)
          restricted[m][l] = img[w.pivots[m]];
      }
      auto poly = charpoly(restricted, p);
      std::vector<u64> roots;
      for (u64 lam = 0; lam < p; ++lam)
        if (eval(poly, lam, p) == 0)
          roots.push_back(lam);
      if (roots.size() < 2)
        continue;
      std::vector<ModSubspace> parts;
      std::size_t total = 0;
      for (u64 lam : roots) {
        ModMatrix shifted = restricted;
        for (std::size_t m = 0; m < k; ++m)
          shifted[m][m] = submod(shifted[m][m], lam, p);
        auto ker = kernel_mod(shifted, p);
        std::vector<std::vector<u64>> vecs;
        for (const auto &c : ker) {
          std::vector<u64> v(r, 0);
          for (std::size_t l = 0; l < k; ++l)
            for (std::size_t a = 0; a < r; ++a)
              v[a] = addmod(v[a], mulmod(c[l], w.basis[l][a], p), p);
          vecs.push_back(std::move(v));
        }
        total += vecs.size();
        parts.push_back(reduce_subspace(std::move(vecs), p));
      }
      if (total != k)
        throw SplittingFailure("class matrix restricted to an eigenspace is not diagonalizable mod " +
                               std::to_string(p));
      for (auto &part : parts)
        stack.push_back(std::move(part));
      split = true;
    }
    if (!split)
      throw SplittingFailure("eigenspace of dimension " + std::to_string(k) +
                             " did not split after " + std::to_string(max_attempts) + " attempts");
  }

  if (lines.size() != r)
    throw SplittingFailure("found " + std::to_string(lines.size()) + " characters for " +
                           std::to_string(r) + " classes");

  const std::size_t root_bound = isqrt(g.order());
  std::vector<std::pair<std::size_t, std::vector<u64>>> rows;
  for (auto &v : lines) {
    if (v[0] == 0)
      throw SplittingFailure("central character vanishes on the identity class");
    u64 inv0 = invmod(v[0], p);
    for (auto &x : v)
      x = mulmod(x, inv0, p);
    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = addmod(s, mulmod(mulmod(v[k], v[cd.inverse_class[k]], p), invmod(cd.sizes[k] % p, p), p),
                 p);
    u64 dsq = mulmod(g.order() % p, invmod(s, p), p);
    std::size_t degree = 0;
    for (std::size_t d = 1; d <= root_bound; ++d)
      if (mulmod(d, d, p) == dsq) {
        degree = d;
        break;
      }
    if (degree == 0)
      throw SplittingFailure("no integer degree matches the central character");
    std::vector<u64> chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = mulmod(mulmod(degree, v[k], p), invmod(cd.sizes[k] % p, p), p);
    rows.emplace_back(degree, std::move(chi));
  }
  std::sort(rows.begin(), rows.end());
  for (auto &[d, chi] : rows) {
    t.degrees.push_back(d);
    t.table.push_back(std::move(chi));
  }
  return t;
}

bool degrees_square_sum_ok(const CharacterTableModP &t)
{
  std::size_t s = 0;
  for (auto d : t.degrees)
    s += d * d;
  return s == t.group_order;
}

bool rows_orthonormal(const CharacterTableModP &t)
{
  const u64 p = t.prime;
  const auto &cd = t.classes;
  const u64 inv_order = invmod(t.group_order % p, p);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      u64 s = 0;
      for (std::size_t k = 0; k < cd.count(); ++k)
        s = addmod(s,
                   mulmod(cd.sizes[k] % p, mulmod(t.table[i][k], t.table[j][cd.inverse_class[k]], p), p),
                   p);
      if (mulmod(s, inv_order, p) != (i == j ? 1u : 0u))
        return false;
    }
  return true;
}

ExtensionTables extension_tables(const FiniteGroup &g, const Subgroup &h, std::uint64_t seed)
{
  ExtensionTables out;
  const u64 p = dixon_prime(g.order(), g.exponent());
  out.group = character_table_mod_p(g, p, seed);
  FiniteGroup hg = h.as_group();
  out.subgroup = character_table_mod_p(hg, p, seed);
  for (auto rep : out.subgroup.classes.representatives)
    out.subgroup_class_in_group.push_back(out.group.classes.class_of[g.index_of(hg.element(rep))]);
  return out;
}

namespace {

InclusionMatrix lift(const std::vector<std::vector<u64>> &residues, const ExtensionTables &tables,
                     const char *what)
{
  InclusionMatrix m;
  m.prime = tables.group.prime;
  m.rows = tables.subgroup.size();
  m.cols = tables.group.size();
  m.row_degrees = tables.subgroup.degrees;
  m.col_degrees = tables.group.degrees;
  m.entries = residues;
  for (std::size_t j = 0; j < m.cols; ++j) {
    std::size_t dim = 0;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (m.entries[i][j] > m.col_degrees[j])
        throw LiftInconsistency(std::string(what) + ": multiplicity exceeds character degree");
      dim += m.entries[i][j] * m.row_degrees[i];
    }
    if (dim != m.col_degrees[j])
      throw LiftInconsistency(std::string(what) + ": column " + std::to_string(j) +
                              " restricts to dimension " + std::to_string(dim) + " not " +
                              std::to_string(m.col_degrees[j]));
  }
  return m;
}

} // namespace

InclusionMatrix inclusion_matrix(const ExtensionTables &tables)
{
  const u64 p = tables.group.prime;
  const auto &hc = tables.subgroup.classes;
  const auto &gc = tables.group.classes;
  const u64 inv_h = invmod(tables.subgroup.group_order % p, p);
  std::vector<std::vector<u64>> res(tables.subgroup.size(), std::vector<u64>(tables.group.size(), 0));
  for (std::size_t i = 0; i < tables.subgroup.size(); ++i)
    for (std::size_t j = 0; j < tables.group.size(); ++j) {
      u64 s = 0;
      for (std::size_t c = 0; c < hc.count(); ++c) {
        std::size_t gk = gc.inverse_class[tables.subgroup_class_in_group[c]];
        s = addmod(s, mulmod(hc.sizes[c] % p, mulmod(tables.subgroup.table[i][c], tables.group.table[j][gk], p), p),
                   p);
      }
      res[i][j] = mulmod(s, inv_h, p);
    }
  return lift(res, tables, "restriction");
}

InclusionMatrix inclusion_matrix(const FiniteGroup &g, const Subgroup &h, std::uint64_t seed)
{
  return inclusion_matrix(extension_tables(g, h, seed));
}

InclusionMatrix induction_matrix(const FiniteGroup &g, const Subgroup &h,
                                 const ExtensionTables &tables)
{
  const u64 p = tables.group.prime;
  const auto &gc = tables.group.classes;
  FiniteGroup hg = h.as_group();
  ClassData hcd = class_data(hg);
  constexpr std::size_t outside = static_cast<std::size_t>(-1);
  std::vector<std::size_t> hclass(g.order(), outside);
  for (ElementIndex x = 0; x < hg.order(); ++x)
    hclass[g.index_of(hg.element(x))] = hcd.class_of[x];
  const u64 inv_h = invmod(hg.order() % p, p);
  const u64 inv_g = invmod(g.order() % p, p);
  const std::size_t r = tables.subgroup.size();
  const std::size_t s = tables.group.size();
  std::vector<std::vector<u64>> res(r, std::vector<u64>(s, 0));
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<u64> induced(gc.count(), 0);
    for (std::size_t k = 0; k < gc.count(); ++k) {
      ElementIndex rep = gc.representatives[k];
      u64 acc = 0;
      for (ElementIndex x = 0; x < g.order(); ++x) {
        std::size_t c = hclass[g.conj(x, rep)];
        if (c != outside)
          acc = addmod(acc, tables.subgroup.table[i][c], p);
      }
      induced[k] = mulmod(acc, inv_h, p);
    }
    for (std::size_t j = 0; j < s; ++j) {
      u64 acc = 0;
      for (std::size_t k = 0; k < gc.count(); ++k)
        acc = addmod(acc, mulmod(gc.sizes[k] % p, mulmod(induced[k], tables.group.table[j][gc.inverse_class[k]], p), p),
                     p);
      res[i][j] = mulmod(acc, inv_g, p);
    }
  }
  return lift(res, tables, "induction");
}

} // namespace depthkit
