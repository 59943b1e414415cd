#include "depthkit/groupalg.hpp"

#include <algorithm>
#include <unordered_map>

#include "depthkit/errors.hpp"

namespace depthkit {

using linalg::EchelonForm;
using linalg::Index;

namespace {

RationalVector from_map(std::unordered_map<Index, Rational> &acc)
{
  RationalVector out;
  out.reserve(acc.size());
  for (auto &[k, v] : acc)
    if (v != 0)
      out.emplace_back(k, std::move(v));
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
  return out;
}

/// Integer numerators over a common denominator, when they fit in 64 bits.
struct Scaled
{
  std::vector<long long> num;
  linalg::Integer den;
};

bool scale_to_int64(const RationalVector &v, Scaled &out)
{
  out.den = 1;
  for (const auto &t : v)
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), t.second.get_den_mpz_t());
  out.num.clear();
  out.num.reserve(v.size());
  for (const auto &t : v) {
    linalg::Integer x = t.second.get_num() * (out.den / t.second.get_den());
    if (!x.fits_slong_p() || abs(x) > (1L << 40))
      return false;
    out.num.push_back(x.get_si());
  }
  return true;
}

linalg::Integer to_integer(__int128 x)
{
  bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  linalg::Integer hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u));
  linalg::Integer r = (hi << 64) + lo;
  return neg ? linalg::Integer(-r) : r;
}

RationalVector unscale(const std::vector<__int128> &acc, const linalg::Integer &den)
{
  RationalVector out;
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (acc[k] != 0) {
      Rational q(to_integer(acc[k]), den);
      q.canonicalize();
      out.emplace_back(static_cast<Index>(k), std::move(q));
    }
  return out;
}

/// Sparse coordinates in an RREF basis: the entries of v sitting on pivot columns.
class Coordinates
{
public:
  explicit Coordinates(const SubspaceBasis &b)
  {
    for (std::size_t i = 0; i < b.pivots.size(); ++i)
      pos_.emplace(b.pivots[i], static_cast<Index>(i));
  }

  RationalVector operator()(const RationalVector &v) const
  {
    RationalVector out;
    for (const auto &t : v) {
      auto it = pos_.find(t.first);
      if (it != pos_.end())
        out.emplace_back(it->second, t.second);
    }
    return out;
  }

private:
  std::unordered_map<Index, Index> pos_;
};

/// Generators from `candidates` that raise the rank, in coordinates of `space`.
std::vector<RationalVector> spanning_subset(const std::vector<RationalVector> &candidates,
                                            const Coordinates &coords, std::size_t dim)
{
  EchelonForm ech(dim);
  std::vector<RationalVector> kept;
  for (const auto &c : candidates)
    if (ech.insert(coords(c)))
      kept.push_back(c);
  return kept;
}

/// Whether candidates(emit) span Q^d. The rank is found mod p; a deficient
/// rank is confirmed by an exact annihilating vector, else recomputed over Q.
template <class Candidates>
bool spans_all(std::size_t d, Candidates &&candidates)
{
  linalg::ModularEchelon mod(d);
  std::vector<RationalVector> seen;
  bool full = false;
  candidates([&](RationalVector v) {
    mod.insert(v);
    seen.push_back(std::move(v));
    full = mod.rank() == d;
    return !full;
  });
  if (full)
    return true;
  if (auto phi = mod.kernel_candidate()) {
    bool annihilates = std::all_of(seen.begin(), seen.end(),
                                   [&](const auto &v) { return linalg::dot(v, *phi) == 0; });
    if (annihilates)
      return false;
  }
  EchelonForm ech(d);
  for (const auto &v : seen)
    if (ech.insert(v) && ech.rank() == d)
      return true;
  return false;
}

} // namespace

GroupAlgebraElement ga_identity() { return linalg::unit_vector(0); }

GroupAlgebraElement ga_multiply(const FiniteGroup &g, const GroupAlgebraElement &a,
                                const GroupAlgebraElement &b)
{
  std::unordered_map<Index, Rational> acc;
  for (const auto &[x, cx] : a)
    for (const auto &[y, cy] : b)
      acc[g.mul(x, y)] += cx * cy;
  return from_map(acc);
}

SubspaceBasis centralizer_space(const FiniteGroup &g, std::span<const ElementIndex> actors)
{
  std::vector<std::vector<Index>> perms;
  for (auto s : actors) {
    std::vector<Index> p(g.order());
    for (ElementIndex x = 0; x < g.order(); ++x)
      p[x] = g.conj(s, x);
    perms.push_back(std::move(p));
  }
  return linalg::invariant_space(g.order(), perms);
}

SubspaceBasis center_space(const FiniteGroup &g)
{
  auto gens = g.generator_indices();
  return centralizer_space(g, gens);
}

TensorSquare::TensorSquare(const FiniteGroup &g, const Subgroup &h, std::size_t cap)
: g_(&g), h_(&h)
{
  if (&h.parent() != &g)
    throw NotASubgroup("subgroup belongs to a different group");
  std::size_t d = g.order() * h.index();
  if (d > cap)
    throw CapExceeded("tensor square A (x)_B A", d, cap);
  transversal_ = right_transversal(g, h);
  coset_.assign(g.order(), 0);
  hpart_.assign(g.order(), 0);
  for (std::size_t i = 0; i < transversal_.size(); ++i)
    for (auto m : h.members()) {
      ElementIndex x = g.mul(m, transversal_[i]);
      coset_[x] = i;
      hpart_[x] = m;
    }
}

std::pair<ElementIndex, std::size_t> TensorSquare::coset_product(std::size_t i, std::size_t j) const
{
  ElementIndex x = g_->mul(transversal_[i], transversal_[j]);
  return {hpart_[x], coset_[x]};
}

Index TensorSquare::right(Index b, ElementIndex a) const
{
  auto [g, i] = decode(b);
  ElementIndex x = g_->mul(transversal_[i], a);
  return basis(g_->mul(g, hpart_[x]), coset_[x]);
}

Index TensorSquare::left(ElementIndex a, Index b) const
{
  auto [g, i] = decode(b);
  return basis(g_->mul(a, g), i);
}

ElementIndex TensorSquare::mu(Index b) const
{
  auto [g, i] = decode(b);
  return g_->mul(g, transversal_[i]);
}

TensorSquareElement TensorSquare::right_action(const TensorSquareElement &t, ElementIndex a) const
{
  std::vector<std::pair<Index, Rational>> terms;
  terms.reserve(t.size());
  for (const auto &[b, c] : t)
    terms.emplace_back(right(b, a), c);
  return linalg::make_vector(std::move(terms));
}

TensorSquareElement TensorSquare::left_action(ElementIndex a, const TensorSquareElement &t) const
{
  std::vector<std::pair<Index, Rational>> terms;
  terms.reserve(t.size());
  for (const auto &[b, c] : t)
    terms.emplace_back(left(a, b), c);
  return linalg::make_vector(std::move(terms));
}

TensorSquareElement TensorSquare::left_action(const GroupAlgebraElement &a,
                                              const TensorSquareElement &t) const
{
  std::unordered_map<Index, Rational> acc;
  for (const auto &[x, cx] : a)
    for (const auto &[b, c] : t)
      acc[left(x, b)] += cx * c;
  return from_map(acc);
}

GroupAlgebraElement TensorSquare::multiplication(const TensorSquareElement &t) const
{
  std::unordered_map<Index, Rational> acc;
  for (const auto &[b, c] : t)
    acc[mu(b)] += c;
  return from_map(acc);
}

TensorSquareElement TensorSquare::t_product(const TensorSquareElement &t,
                                            const TensorSquareElement &u) const
{
  auto kernel = [&](auto &&emit) {
    for (std::size_t a = 0; a < t.size(); ++a) {
      auto [g, i] = decode(t[a].first);
      for (std::size_t b = 0; b < u.size(); ++b) {
        auto [gp, j] = decode(u[b].first);
        auto [h, k] = coset_product(i, j);
        emit(a, b, basis(g_->mul(g_->mul(gp, g), h), k));
      }
    }
  };
  Scaled st, su;
  if (scale_to_int64(t, st) && scale_to_int64(u, su)) {
    std::vector<__int128> acc(dim(), 0);
    kernel([&](std::size_t a, std::size_t b, Index k) {
      acc[k] += static_cast<__int128>(st.num[a]) * su.num[b];
    });
    return unscale(acc, st.den * su.den);
  }
  std::unordered_map<Index, Rational> acc;
  kernel([&](std::size_t a, std::size_t b, Index k) { acc[k] += t[a].second * u[b].second; });
  return from_map(acc);
}

bool TensorSquare::is_a_central(const TensorSquareElement &t) const
{
  for (auto s : g_->generator_indices())
    if (left_action(s, t) != right_action(t, s))
      return false;
  return true;
}

bool TensorSquare::is_h_central(const TensorSquareElement &t) const
{
  for (auto s : h_->generators())
    if (left_action(s, t) != right_action(t, s))
      return false;
  return true;
}

namespace {

/// Invariance of t under t -> s^-1 t s for each actor s.
SubspaceBasis commutant(const TensorSquare &ts, std::span<const ElementIndex> actors)
{
  const FiniteGroup &g = ts.group();
  std::vector<std::vector<Index>> perms;
  for (auto s : actors) {
    std::vector<Index> p(ts.dim());
    ElementIndex si = g.inv(s);
    for (Index b = 0; b < ts.dim(); ++b)
      p[b] = ts.right(ts.left(si, b), s);
    perms.push_back(std::move(p));
  }
  return linalg::invariant_space(ts.dim(), perms);
}

} // namespace

SubspaceBasis casimir_space(const TensorSquare &ts)
{
  auto gens = ts.group().generator_indices();
  return commutant(ts, gens);
}

SubspaceBasis t_space(const TensorSquare &ts, std::size_t cap)
{
  if (ts.dim() > cap)
    throw CapExceeded("T = (A (x)_B A)^B", ts.dim(), cap);
  return commutant(ts, ts.subgroup().generators());
}

const char *to_string(SeparabilityElements::Kind k)
{
  switch (k) {
  case SeparabilityElements::Kind::none: return "none";
  case SeparabilityElements::Kind::unique: return "unique";
  case SeparabilityElements::Kind::infinite: return "infinite";
  }
  return "?";
}

SeparabilityElements separability_elements(const TensorSquare &ts, const SubspaceBasis &casimir)
{
  const std::size_t n = ts.group().order();
  std::vector<RationalVector> rows(n);
  for (std::size_t k = 0; k < casimir.dim(); ++k)
    for (const auto &[a, c] : ts.multiplication(casimir.vectors[k]))
      rows[a].emplace_back(static_cast<Index>(k), c);
  std::vector<Rational> rhs(n, Rational(0));
  rhs[0] = 1;
  SeparabilityElements out;
  auto sol = linalg::solve_affine(rows, rhs, casimir.dim());
  if (!sol)
    return out;
  std::vector<Rational> coords(casimir.dim(), Rational(0));
  for (const auto &[k, c] : sol->particular)
    coords[k] = c;
  out.element = casimir.combine(coords);
  for (const auto &kv : sol->kernel.vectors) {
    std::fill(coords.begin(), coords.end(), Rational(0));
    for (const auto &[k, c] : kv)
      coords[k] = c;
    out.kernel.push_back(casimir.combine(coords));
  }
  out.kind = out.kernel.empty() ? SeparabilityElements::Kind::unique
                                : SeparabilityElements::Kind::infinite;
  return out;
}

SeparabilityElements separability_elements(const TensorSquare &ts)
{
  return separability_elements(ts, casimir_space(ts));
}

bool unique_separable(const TensorSquare &ts, const SubspaceBasis &casimir)
{
  return separability_elements(ts, casimir).kind == SeparabilityElements::Kind::unique;
}

TensorSquareElement canonical_separability_element(const TensorSquare &ts)
{
  Rational w(1, static_cast<unsigned long>(ts.index()));
  std::vector<std::pair<Index, Rational>> terms;
  for (std::size_t i = 0; i < ts.index(); ++i)
    terms.emplace_back(ts.basis(ts.group().inv(ts.transversal()[i]), i), w);
  return linalg::make_vector(std::move(terms));
}

bool idempotent_in_T(const TensorSquare &ts, const TensorSquareElement &e)
{
  if (!ts.is_h_central(e))
    throw NotInT("element is not centralized by the subgroup");
  return ts.t_product(e, e) == e;
}

TAlgebra t_space_with_product(const TensorSquare &ts, std::size_t cap, std::size_t table_limit)
{
  TAlgebra out;
  out.basis = t_space(ts, cap);
  const std::size_t d = out.basis.dim();
  if (d > table_limit)
    return out;
  out.table.assign(d, std::vector<std::vector<Rational>>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      auto p = ts.t_product(out.basis.vectors[a], out.basis.vectors[b]);
      if (!out.basis.contains(p))
        throw Error("T is not closed under its product");
      out.table[a][b] = out.basis.coordinates(p);
    }
  return out;
}

bool is_full_in_T(const TensorSquare &ts, const SubspaceBasis &t, const TensorSquareElement &e)
{
  const std::size_t d = t.dim();
  Coordinates coords(t);
  std::vector<RationalVector> te, et;
  for (const auto &v : t.vectors) {
    te.push_back(ts.t_product(v, e));
    et.push_back(ts.t_product(e, v));
  }
  // e^2 = e, so T e T is spanned by products (T e)(e T)
  te = spanning_subset(te, coords, d);
  et = spanning_subset(et, coords, d);
  return spans_all(d, [&](auto &&emit) {
    for (const auto &x : te)
      for (const auto &y : et)
        if (!emit(coords(ts.t_product(x, y))))
          return;
  });
}

std::size_t dim_eTe(const TensorSquare &ts, const SubspaceBasis &t, const TensorSquareElement &e)
{
  Coordinates coords(t);
  EchelonForm ech(t.dim());
  for (const auto &v : t.vectors)
    ech.insert(coords(ts.t_product(ts.t_product(e, v), e)));
  return ech.rank();
}

BimoduleEndomorphisms::BimoduleEndomorphisms(const FiniteGroup &g, const Subgroup &h,
                                             std::size_t cap)
: g_(&g), h_(&h)
{
  const std::size_t n = g.order();
  if (n * n > cap)
    throw CapExceeded("End(A) ambient for U", n * n, cap);
  std::vector<std::vector<Index>> perms;
  for (auto s : h.generators()) {
    std::vector<Index> lp(n * n), rp(n * n);
    for (ElementIndex x = 0; x < n; ++x)
      for (ElementIndex y = 0; y < n; ++y) {
        lp[x * n + y] = static_cast<Index>(g.mul(s, x) * n + g.mul(s, y));
        rp[x * n + y] = static_cast<Index>(g.mul(x, s) * n + g.mul(y, s));
      }
    perms.push_back(std::move(lp));
    perms.push_back(std::move(rp));
  }
  basis_ = linalg::invariant_space(n * n, perms);
}

RationalVector BimoduleEndomorphisms::identity() const
{
  const std::size_t n = g_->order();
  RationalVector v;
  for (ElementIndex x = 0; x < n; ++x)
    v.emplace_back(static_cast<Index>(x * n + x), Rational(1));
  return v;
}

RationalVector BimoduleEndomorphisms::projection() const
{
  const std::size_t n = g_->order();
  RationalVector v;
  for (auto m : h_->members())
    v.emplace_back(static_cast<Index>(m * n + m), Rational(1));
  return v;
}

RationalVector BimoduleEndomorphisms::compose(const RationalVector &alpha,
                                              const RationalVector &beta) const
{
  const std::size_t n = g_->order();
  std::vector<std::vector<std::size_t>> rows(n);
  for (std::size_t b = 0; b < beta.size(); ++b)
    rows[beta[b].first / n].push_back(b);
  auto kernel = [&](auto &&emit) {
    for (std::size_t a = 0; a < alpha.size(); ++a) {
      Index k = alpha[a].first;
      Index x = k / n;
      for (auto b : rows[k % n])
        emit(a, b, static_cast<Index>(x * n + beta[b].first % n));
    }
  };
  Scaled sa, sb;
  if (scale_to_int64(alpha, sa) && scale_to_int64(beta, sb)) {
    std::vector<__int128> acc(n * n, 0);
    kernel([&](std::size_t a, std::size_t b, Index k) {
      acc[k] += static_cast<__int128>(sa.num[a]) * sb.num[b];
    });
    return unscale(acc, sa.den * sb.den);
  }
  std::unordered_map<Index, Rational> acc;
  kernel([&](std::size_t a, std::size_t b, Index k) { acc[k] += alpha[a].second * beta[b].second; });
  return from_map(acc);
}

GroupAlgebraElement BimoduleEndomorphisms::apply(const RationalVector &f,
                                                 const GroupAlgebraElement &a) const
{
  const std::size_t n = g_->order();
  std::unordered_map<Index, Rational> acc;
  for (const auto &[k, c] : f) {
    Rational ca = linalg::coefficient(a, k % n);
    if (ca != 0)
      acc[k / n] += c * ca;
  }
  return from_map(acc);
}

bool BimoduleEndomorphisms::is_full() const
{
  const std::size_t n = g_->order();
  const std::size_t d = dim();
  Coordinates coords(basis_);
  std::vector<RationalVector> ue, eu;
  for (const auto &v : basis_.vectors) {
    RationalVector a, b;
    for (const auto &t : v) {
      if (h_->contains(t.first % n))
        a.push_back(t); // alpha o E keeps inputs in H
      if (h_->contains(t.first / n))
        b.push_back(t); // E o beta keeps outputs in H
    }
    if (!a.empty())
      ue.push_back(std::move(a));
    if (!b.empty())
      eu.push_back(std::move(b));
  }
  ue = spanning_subset(ue, coords, d);
  eu = spanning_subset(eu, coords, d);
  return spans_all(d, [&](auto &&emit) {
    for (const auto &x : ue)
      for (const auto &y : eu)
        if (!emit(coords(compose(x, y))))
          return;
  });
}

std::size_t BimoduleEndomorphisms::dim_EUE() const
{
  const std::size_t n = g_->order();
  Coordinates coords(basis_);
  EchelonForm ech(dim());
  for (const auto &v : basis_.vectors) {
    RationalVector c;
    for (const auto &t : v)
      if (h_->contains(t.first % n) && h_->contains(t.first / n))
        c.push_back(t);
    ech.insert(coords(c));
  }
  return ech.rank();
}

SubspaceBasis u_space(const FiniteGroup &g, const Subgroup &h, std::size_t cap)
{
  return BimoduleEndomorphisms(g, h, cap).basis();
}

bool is_full_in_U(const FiniteGroup &g, const Subgroup &h, std::size_t cap)
{
  return BimoduleEndomorphisms(g, h, cap).is_full();
}

FrobeniusData frobenius_data(const FiniteGroup &g, const Subgroup &h,
                             std::vector<ElementIndex> transversal)
{
  FrobeniusData f;
  f.transversal = std::move(transversal);
  std::vector<std::pair<Index, Rational>> sum;
  for (auto gi : f.transversal) {
    f.x.push_back(g.inv(gi));
    f.y.push_back(gi);
    sum.emplace_back(g.mul(g.inv(gi), gi), Rational(1));
  }
  (void)h;
  f.e_index = linalg::make_vector(std::move(sum));
  return f;
}

std::vector<ElementIndex> alternate_transversal(const FiniteGroup &g, const Subgroup &h)
{
  std::vector<ElementIndex> reps;
  for (auto r : right_transversal(g, h)) {
    ElementIndex best = r;
    for (auto m : h.members())
      best = std::max(best, g.mul(m, r));
    reps.push_back(best);
  }
  return reps;
}

GroupAlgebraElement conditional_expectation(const Subgroup &h, const GroupAlgebraElement &a)
{
  GroupAlgebraElement out;
  for (const auto &t : a)
    if (h.contains(t.first))
      out.push_back(t);
  return out;
}

bool dual_basis_identity(const FiniteGroup &g, const Subgroup &h, const FrobeniusData &f)
{
  for (ElementIndex a = 0; a < g.order(); ++a) {
    GroupAlgebraElement av = linalg::unit_vector(a);
    GroupAlgebraElement left, right;
    for (std::size_t i = 0; i < f.x.size(); ++i) {
      auto xi = linalg::unit_vector(f.x[i]);
      auto yi = linalg::unit_vector(f.y[i]);
      left = linalg::add(left, ga_multiply(g, conditional_expectation(h, ga_multiply(g, av, xi)), yi));
      right = linalg::add(right, ga_multiply(g, xi, conditional_expectation(h, ga_multiply(g, yi, av))));
    }
    if (left != av || right != av)
      return false;
  }
  return true;
}

EIndex e_index(const FiniteGroup &g, const Subgroup &h)
{
  EIndex r;
  FrobeniusData f = frobenius_data(g, h, right_transversal(g, h));
  r.element = f.e_index;
  r.equals_index_times_one =
      r.element == GroupAlgebraElement{{0, Rational(static_cast<unsigned long>(h.index()))}};
  r.central = true;
  for (auto s : g.generator_indices()) {
    auto sv = linalg::unit_vector(s);
    if (ga_multiply(g, sv, r.element) != ga_multiply(g, r.element, sv))
      r.central = false;
  }
  FrobeniusData f2 = frobenius_data(g, h, alternate_transversal(g, h));
  r.transversal_independent = (f2.e_index == r.element);
  return r;
}

} // namespace depthkit
