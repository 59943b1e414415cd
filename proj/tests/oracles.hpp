// Brute-force reference computations used by the unit and acceptance tests.
// Everything here works on raw image vectors and sets, sharing no code with the library.
#ifndef DEPTHKIT_TESTS_ORACLES_HPP
#define DEPTHKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;

inline Perm compose(const Perm &a, const Perm &b)
{
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    c[x] = a[b[x]];
  return c;
}

inline Perm inverse(const Perm &a)
{
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    c[a[x]] = static_cast<std::uint32_t>(x);
  return c;
}

inline Perm identity(std::size_t n)
{
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

/// Repeated multiplication until nothing new appears.
inline std::set<Perm> closure(const std::vector<Perm> &gens)
{
  std::set<Perm> s{identity(gens.front().size())};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(s.begin(), s.end());
    for (const auto &x : cur)
      for (const auto &g : gens)
        if (s.insert(compose(g, x)).second)
          grew = true;
  }
  return s;
}

/// A small group as a list of elements with a multiplication table.
struct Table
{
  std::vector<Perm> elems;
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::size_t> inv;

  explicit Table(const std::set<Perm> &s) : elems(s.begin(), s.end())
  {
    std::map<Perm, std::size_t> at;
    for (std::size_t i = 0; i < elems.size(); ++i)
      at[elems[i]] = i;
    mul.assign(elems.size(), std::vector<std::size_t>(elems.size()));
    inv.resize(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      inv[i] = at[inverse(elems[i])];
      for (std::size_t j = 0; j < elems.size(); ++j)
        mul[i][j] = at[compose(elems[i], elems[j])];
    }
  }

  std::size_t order() const { return elems.size(); }
  std::size_t conj(std::size_t g, std::size_t x) const { return mul[mul[g][x]][inv[g]]; }
  std::size_t index(const Perm &p) const
  {
    return static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
  }
};

/// Members of the subgroup generated by gens, as indices into t.
inline std::vector<std::size_t> subgroup(const Table &t, const std::vector<Perm> &gens)
{
  std::vector<std::size_t> out;
  if (gens.empty())
    return {t.index(identity(t.elems.front().size()))};
  for (const auto &p : closure(gens))
    out.push_back(t.index(p));
  std::sort(out.begin(), out.end());
  return out;
}

class UnionFind
{
public:
  explicit UnionFind(std::size_t n) : p_(n) { std::iota(p_.begin(), p_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x)
  {
    while (p_[x] != x)
      x = p_[x] = p_[p_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { p_[find(a)] = find(b); }
  std::size_t classes()
  {
    std::size_t c = 0;
    for (std::size_t i = 0; i < p_.size(); ++i)
      c += find(i) == i;
    return c;
  }

private:
  std::vector<std::size_t> p_;
};

/// Orbits of the actors acting by conjugation on the whole group.
inline std::size_t conjugation_orbits(const Table &t, const std::vector<std::size_t> &actors)
{
  UnionFind uf(t.order());
  for (std::size_t x = 0; x < t.order(); ++x)
    for (auto s : actors)
      uf.join(x, t.conj(s, x));
  return uf.classes();
}

inline std::vector<std::size_t> all(const Table &t)
{
  std::vector<std::size_t> v(t.order());
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

inline std::size_t class_count(const Table &t) { return conjugation_orbits(t, all(t)); }

inline std::vector<std::size_t> centralizer(const Table &t, std::size_t a)
{
  std::vector<std::size_t> c;
  for (std::size_t g = 0; g < t.order(); ++g)
    if (t.mul[g][a] == t.mul[a][g])
      c.push_back(g);
  return c;
}

inline std::size_t product_size(const Table &t, const std::vector<std::size_t> &a,
                                const std::vector<std::size_t> &b)
{
  std::set<std::size_t> s;
  for (auto x : a)
    for (auto y : b)
      s.insert(t.mul[x][y]);
  return s.size();
}

/// Every class is one H-orbit: the class of x equals {h x h^-1}.
inline bool property_S(const Table &t, const std::vector<std::size_t> &h)
{
  for (std::size_t x = 0; x < t.order(); ++x) {
    std::set<std::size_t> cls, orb;
    for (std::size_t g = 0; g < t.order(); ++g)
      cls.insert(t.conj(g, x));
    for (auto s : h)
      orb.insert(t.conj(s, x));
    if (cls != orb)
      return false;
  }
  return true;
}

inline bool depth_one(const Table &t, const std::vector<std::size_t> &h)
{
  for (auto x : h)
    if (product_size(t, h, centralizer(t, x)) != t.order())
      return false;
  return true;
}

inline std::vector<std::size_t> center(const Table &t)
{
  std::vector<std::size_t> z;
  for (std::size_t a = 0; a < t.order(); ++a)
    if (centralizer(t, a).size() == t.order())
      z.push_back(a);
  return z;
}

inline bool normal(const Table &t, const std::vector<std::size_t> &h)
{
  std::set<std::size_t> hs(h.begin(), h.end());
  for (std::size_t g = 0; g < t.order(); ++g)
    for (auto x : h)
      if (!hs.count(t.conj(g, x)))
        return false;
  return true;
}

/// Commutator subgroup order: closure of all commutators.
inline std::size_t derived_order(const Table &t)
{
  std::set<std::size_t> s{t.index(identity(t.elems.front().size()))};
  for (std::size_t a = 0; a < t.order(); ++a)
    for (std::size_t b = 0; b < t.order(); ++b)
      s.insert(t.mul[t.mul[a][b]][t.mul[t.inv[a]][t.inv[b]]]);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> cur(s.begin(), s.end());
    for (auto x : cur)
      for (auto y : cur)
        if (s.insert(t.mul[x][y]).second)
          grew = true;
  }
  return s.size();
}

/// Orbits on G x G of the group generated by the given pair maps.
template <class... Maps>
std::size_t pair_orbits(const Table &t, Maps &&...maps)
{
  const std::size_t n = t.order();
  UnionFind uf(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      (maps(uf, x, y), ...);
  return uf.classes();
}

/// dim (A (x)_B A)^A: orbits of (x,y) -> (x h^-1, h y) and (g x, y g^-1).
inline std::size_t casimir_dim(const Table &t, const std::vector<std::size_t> &h)
{
  const std::size_t n = t.order();
  return pair_orbits(
      t,
      [&](UnionFind &uf, std::size_t x, std::size_t y) {
        for (auto s : h)
          uf.join(x * n + y, t.mul[x][t.inv[s]] * n + t.mul[s][y]);
      },
      [&](UnionFind &uf, std::size_t x, std::size_t y) {
        for (std::size_t g = 0; g < n; ++g)
          uf.join(x * n + y, t.mul[g][x] * n + t.mul[y][t.inv[g]]);
      });
}

/// dim (A (x)_B A)^B.
inline std::size_t t_dim(const Table &t, const std::vector<std::size_t> &h)
{
  const std::size_t n = t.order();
  return pair_orbits(t, [&](UnionFind &uf, std::size_t x, std::size_t y) {
    for (auto s : h) {
      uf.join(x * n + y, t.mul[x][t.inv[s]] * n + t.mul[s][y]);
      uf.join(x * n + y, t.mul[s][x] * n + t.mul[y][t.inv[s]]);
    }
  });
}

/// dim End_B A_B: maps determined on H-double-coset orbits of pairs (output, input).
inline std::size_t u_dim(const Table &t, const std::vector<std::size_t> &h)
{
  const std::size_t n = t.order();
  return pair_orbits(t, [&](UnionFind &uf, std::size_t x, std::size_t y) {
    for (auto s : h) {
      uf.join(x * n + y, t.mul[s][x] * n + t.mul[s][y]);
      uf.join(x * n + y, t.mul[x][s] * n + t.mul[y][s]);
    }
  });
}

/// Number of removable corners summed over partitions of n, which is the number
/// of nonzero entries in the restriction matrix from S_n to S_{n-1}.
inline std::size_t branching_edges(std::size_t n)
{
  std::size_t total = 0;
  std::vector<std::size_t> parts;
  auto rec = [&](auto &&self, std::size_t left, std::size_t maxp) -> void {
    if (left == 0) {
      for (std::size_t i = 0; i < parts.size(); ++i)
        total += (i + 1 == parts.size() || parts[i + 1] < parts[i]);
      return;
    }
    for (std::size_t p = std::min(left, maxp); p >= 1; --p) {
      parts.push_back(p);
      self(self, left - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return total;
}

inline std::size_t partitions(std::size_t n)
{
  std::vector<std::size_t> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t m = k; m <= n; ++m)
      p[m] += p[m - k];
  return p[n];
}

using BoolMatrix = std::vector<std::vector<bool>>;

inline BoolMatrix bool_product(const BoolMatrix &a, const BoolMatrix &b)
{
  BoolMatrix c(a.size(), std::vector<bool>(b.front().size(), false));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < b[k].size(); ++j)
          if (b[k][j])
            c[i][j] = true;
  return c;
}

inline BoolMatrix support(const std::vector<std::vector<long>> &m)
{
  BoolMatrix b(m.size(), std::vector<bool>(m.front().size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      b[i][j] = m[i][j] != 0;
  return b;
}

inline BoolMatrix transpose(const BoolMatrix &m)
{
  BoolMatrix t(m.front().size(), std::vector<bool>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      t[j][i] = m[i][j];
  return t;
}

inline BoolMatrix eye(std::size_t n)
{
  BoolMatrix b(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    b[i][i] = true;
  return b;
}

/// Nonzero patterns only matter for depth, so boolean walks suffice.
/// Odd depth 2n+1: least n with supp(S^n) = supp(S^{n+1}).
inline std::size_t odd_depth(const std::vector<std::vector<long>> &m)
{
  auto b = support(m);
  auto s = bool_product(b, transpose(b));
  auto p = eye(b.size());
  for (std::size_t n = 0;; ++n) {
    auto q = bool_product(p, s);
    if (q == p)
      return 2 * n + 1;
    p = q;
  }
}

/// Even depth 2n: least n >= 1 with supp(S^{n-1} M) = supp(S^n M).
inline std::size_t even_depth(const std::vector<std::vector<long>> &m)
{
  auto b = support(m);
  auto s = bool_product(b, transpose(b));
  auto p = b;
  for (std::size_t n = 1;; ++n) {
    auto q = bool_product(s, p);
    if (q == p)
      return 2 * n;
    p = q;
  }
}

/// H-depth 2n-1: least n >= 1 with supp(T^{n-1}) = supp(T^n).
inline std::size_t h_depth(const std::vector<std::vector<long>> &m)
{
  auto b = support(m);
  auto t = bool_product(transpose(b), b);
  auto p = eye(t.size());
  for (std::size_t n = 1;; ++n) {
    auto q = bool_product(p, t);
    if (q == p)
      return 2 * n - 1;
    p = q;
  }
}

} // namespace oracle

#endif // DEPTHKIT_TESTS_ORACLES_HPP
