#include "depthkit/findim.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "depthkit/errors.hpp"

namespace depthkit {

using linalg::EchelonForm;
using linalg::Index;

namespace {

RationalVector accumulate(std::map<Index, Rational> &acc)
{
  RationalVector out;
  for (auto &[k, v] : acc)
    if (v != 0)
      out.emplace_back(k, std::move(v));
  return out;
}

std::string unit_label(std::size_t size, std::size_t r, std::size_t c)
{
  if (size <= 9)
    return "e" + std::to_string(r + 1) + std::to_string(c + 1);
  return "e" + std::to_string(r + 1) + "," + std::to_string(c + 1);
}

RationalVector flatten(std::size_t size, const SparseMatrix &m)
{
  std::vector<std::pair<Index, Rational>> terms;
  for (const auto &[r, c, v] : m) {
    if (r >= size || c >= size)
      throw Error("matrix entry outside declared size");
    terms.emplace_back(static_cast<Index>(r * size + c), v);
  }
  return linalg::make_vector(std::move(terms));
}

RationalVector matrix_product(std::size_t size, const RationalVector &x, const RationalVector &y)
{
  std::map<Index, Rational> acc;
  for (const auto &[p, a] : x)
    for (const auto &[q, b] : y)
      if (p % size == q / size)
        acc[static_cast<Index>((p / size) * size + q % size)] += a * b;
  return accumulate(acc);
}

/// Coefficients of v in the (not necessarily echelon) independent list `basis`.
std::optional<RationalVector> express(const std::vector<RationalVector> &basis, std::size_t ambient,
                                      const RationalVector &v)
{
  std::vector<RationalVector> rows(ambient);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto &[p, c] : basis[k])
      rows[p].emplace_back(static_cast<Index>(k), c);
  std::vector<Rational> rhs(ambient, Rational(0));
  for (const auto &[p, c] : v)
    rhs[p] = c;
  auto sol = linalg::solve_affine(rows, rhs, basis.size());
  if (!sol)
    return std::nullopt;
  return sol->particular;
}

RationalVector in_subspace_coords(const SubspaceBasis &b, const RationalVector &v)
{
  auto c = b.coordinates(v);
  RationalVector out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0)
      out.emplace_back(static_cast<Index>(i), c[i]);
  return out;
}

} // namespace

StructureConstantAlgebra::StructureConstantAlgebra(std::vector<std::string> labels,
                                                   const std::vector<Constant> &constants,
                                                   RationalVector unit)
: labels_(std::move(labels)), unit_(std::move(unit))
{
  const std::size_t n = labels_.size();
  if (n == 0)
    throw Error("algebra must have positive dimension");
  std::vector<std::vector<std::pair<Index, Rational>>> terms(n * n);
  for (const auto &[i, j, k, c] : constants) {
    if (i >= n || j >= n || k >= n)
      throw Error("structure constant index out of range");
    terms[i * n + j].emplace_back(static_cast<Index>(k), c);
  }
  table_.resize(n * n);
  for (std::size_t p = 0; p < n * n; ++p)
    table_[p] = linalg::make_vector(std::move(terms[p]));
  for (const auto &t : unit_)
    if (t.first >= n)
      throw Error("unit vector index out of range");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto lhs = multiply(product(i, j), linalg::unit_vector(static_cast<Index>(k)));
        auto rhs = multiply(linalg::unit_vector(static_cast<Index>(i)), product(j, k));
        if (lhs != rhs)
          throw Error("structure constants are not associative at (" + labels_[i] + ", " +
                      labels_[j] + ", " + labels_[k] + ")");
      }
  for (std::size_t i = 0; i < n; ++i) {
    auto bi = linalg::unit_vector(static_cast<Index>(i));
    if (multiply(unit_, bi) != bi || multiply(bi, unit_) != bi)
      throw UnitMissing("given unit does not act as identity on " + labels_[i]);
  }
}

RationalVector StructureConstantAlgebra::multiply(const RationalVector &x, const RationalVector &y) const
{
  std::map<Index, Rational> acc;
  for (const auto &[i, a] : x)
    for (const auto &[j, b] : y)
      for (const auto &[k, c] : product(i, j))
        acc[k] += a * b * c;
  return accumulate(acc);
}

Rational StructureConstantAlgebra::trace(const RationalVector &x) const
{
  Rational t = 0;
  for (const auto &[i, a] : x)
    for (std::size_t m = 0; m < dim(); ++m)
      t += a * linalg::coefficient(product(i, m), static_cast<Index>(m));
  return t;
}

std::vector<StructureConstantAlgebra::Constant> StructureConstantAlgebra::constants() const
{
  std::vector<Constant> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto &[k, c] : product(i, j))
        out.emplace_back(i, j, k, c);
  return out;
}

StructureConstantAlgebra matrix_subalgebra(std::size_t size, const std::vector<SparseMatrix> &basis,
                                           std::vector<std::string> labels)
{
  const std::size_t amb = size * size;
  std::vector<RationalVector> vecs;
  EchelonForm ech(amb);
  for (const auto &m : basis) {
    vecs.push_back(flatten(size, m));
    if (!ech.insert(vecs.back()))
      throw Error("matrix basis is linearly dependent");
  }
  if (labels.empty())
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto &m = basis[k];
      if (m.size() == 1 && std::get<2>(m[0]) == 1)
        labels.push_back(unit_label(size, std::get<0>(m[0]), std::get<1>(m[0])));
      else
        labels.push_back("b" + std::to_string(k));
    }
  if (labels.size() != basis.size())
    throw Error("label count does not match basis size");

  std::vector<StructureConstantAlgebra::Constant> constants;
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < vecs.size(); ++j) {
      auto p = matrix_product(size, vecs[i], vecs[j]);
      if (p.empty())
        continue;
      auto c = express(vecs, amb, p);
      if (!c)
        throw Error("matrix span is not closed under products (" + labels[i] + " * " + labels[j] + ")");
      for (const auto &[k, v] : *c)
        constants.emplace_back(i, j, k, v);
    }
  RationalVector one;
  for (std::size_t r = 0; r < size; ++r)
    one.emplace_back(static_cast<Index>(r * size + r), Rational(1));
  auto unit = express(vecs, amb, one);
  if (!unit)
    throw UnitMissing("identity matrix is not in the span of the basis");
  return StructureConstantAlgebra(std::move(labels), constants, *unit);
}

StructureConstantAlgebra full_matrix_algebra(std::size_t n)
{
  std::vector<SparseMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      basis.push_back({{i, j, Rational(1)}});
  return matrix_subalgebra(n, basis);
}

StructureConstantAlgebra AlgebraInclusion::as_algebra() const
{
  const auto &vs = subalgebra.vectors;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (vs[k].size() == 1 && vs[k][0].second == 1)
      labels.push_back(ambient.labels()[vs[k][0].first]);
    else
      labels.push_back("b" + std::to_string(k));
  }
  std::vector<StructureConstantAlgebra::Constant> constants;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      for (const auto &[k, c] : in_subspace_coords(subalgebra, ambient.multiply(vs[i], vs[j])))
        constants.emplace_back(i, j, k, c);
  return StructureConstantAlgebra(std::move(labels), constants,
                                  in_subspace_coords(subalgebra, ambient.unit()));
}

AlgebraInclusion make_inclusion(const StructureConstantAlgebra &a, const std::vector<RationalVector> &basis)
{
  EchelonForm ech(a.dim());
  for (const auto &v : basis)
    if (!ech.insert(v))
      throw Error("subalgebra basis is linearly dependent");
  AlgebraInclusion inc{a, ech.rref()};
  if (!inc.subalgebra.contains(a.unit()))
    throw UnitMissing("subalgebra does not contain the unit of the ambient algebra");
  for (const auto &x : inc.subalgebra.vectors)
    for (const auto &y : inc.subalgebra.vectors)
      if (!inc.subalgebra.contains(a.multiply(x, y)))
        throw Error("subalgebra basis is not closed under products");
  return inc;
}

AlgebraInclusion subalgebra_closure(const StructureConstantAlgebra &a,
                                    const std::vector<RationalVector> &vectors)
{
  EchelonForm ech(a.dim());
  std::vector<RationalVector> gens;
  for (const auto &v : vectors)
    if (ech.insert(v))
      gens.push_back(v);
  if (!ech.contains(a.unit()))
    throw UnitMissing("closure requested without the unit");
  for (std::size_t fresh = 0; fresh < gens.size(); ++fresh)
    for (std::size_t k = 0; k <= fresh; ++k)
      for (const auto &p : {a.multiply(gens[fresh], gens[k]), a.multiply(gens[k], gens[fresh])})
        if (ech.insert(p))
          gens.push_back(p);
  return AlgebraInclusion{a, ech.rref()};
}

bool is_two_sided_ideal(const StructureConstantAlgebra &a, const SubspaceBasis &i)
{
  for (std::size_t k = 0; k < a.dim(); ++k) {
    auto bk = linalg::unit_vector(static_cast<Index>(k));
    for (const auto &v : i.vectors)
      if (!i.contains(a.multiply(bk, v)) || !i.contains(a.multiply(v, bk)))
        return false;
  }
  return true;
}

std::optional<std::size_t> nilpotency_index(const StructureConstantAlgebra &a, const SubspaceBasis &i)
{
  SubspaceBasis power = i;
  for (std::size_t m = 1; m <= a.dim() + 1; ++m) {
    if (power.dim() == 0)
      return m;
    EchelonForm next(a.dim());
    for (const auto &x : power.vectors)
      for (const auto &y : i.vectors)
        next.insert(a.multiply(x, y));
    power = next.rref();
  }
  return std::nullopt;
}

SubspaceBasis radical(const StructureConstantAlgebra &a)
{
  const std::size_t n = a.dim();
  std::vector<Rational> tr(n);
  for (std::size_t k = 0; k < n; ++k)
    tr[k] = a.trace(linalg::unit_vector(static_cast<Index>(k)));
  std::vector<RationalVector> gram(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = 0;
      for (const auto &[k, c] : a.product(i, j))
        v += c * tr[k];
      if (v != 0)
        gram[i].emplace_back(static_cast<Index>(j), v);
    }
  SubspaceBasis j = linalg::nullspace(std::span<const RationalVector>(gram), n);
  if (!is_two_sided_ideal(a, j) || !nilpotency_index(a, j))
    throw Error("trace-form kernel is not a nilpotent ideal");
  return j;
}

RationalVector RelativeTensorSquare::tensor(std::size_t n, const RationalVector &x, const RationalVector &y)
{
  RationalVector out;
  for (const auto &[p, a] : x)
    for (const auto &[r, b] : y)
      out.emplace_back(static_cast<Index>(p * n + r), a * b);
  return out; // x sorted then y sorted gives increasing p*n + r
}

RelativeTensorSquare::RelativeTensorSquare(const AlgebraInclusion &inc, std::size_t cap)
: inc_(&inc), n_(inc.ambient.dim())
{
  if (n_ * n_ > cap)
    throw CapExceeded("A (x) A", n_ * n_, cap);
  const auto &a = inc.ambient;
  EchelonForm ech(n_ * n_);
  for (std::size_t p = 0; p < n_; ++p) {
    auto ap = linalg::unit_vector(static_cast<Index>(p));
    for (const auto &bq : inc.subalgebra.vectors) {
      auto apbq = a.multiply(ap, bq);
      for (std::size_t r = 0; r < n_; ++r) {
        auto ar = linalg::unit_vector(static_cast<Index>(r));
        ech.insert(linalg::subtract(tensor(n_, apbq, ar), tensor(n_, ap, a.multiply(bq, ar))));
      }
    }
  }
  relations_ = ech.rref();
  std::vector<bool> pivot(n_ * n_, false);
  for (auto p : relations_.pivots)
    pivot[p] = true;
  for (Index c = 0; c < n_ * n_; ++c)
    if (!pivot[c])
      free_.push_back(c);
}

RationalVector RelativeTensorSquare::reduce(const RationalVector &t) const
{
  RationalVector residual = t;
  for (std::size_t i = 0; i < relations_.vectors.size(); ++i) {
    Rational c = linalg::coefficient(residual, relations_.pivots[i]);
    if (c != 0)
      residual = linalg::subtract(residual, linalg::scale(relations_.vectors[i], c));
  }
  RationalVector out;
  for (const auto &[k, v] : residual) {
    auto it = std::lower_bound(free_.begin(), free_.end(), k);
    out.emplace_back(static_cast<Index>(it - free_.begin()), v);
  }
  return out;
}

RationalVector RelativeTensorSquare::lift(const RationalVector &coords) const
{
  RationalVector out;
  for (const auto &[k, v] : coords)
    out.emplace_back(free_[k], v);
  return out;
}

RationalVector RelativeTensorSquare::left(const RationalVector &a, const RationalVector &t) const
{
  std::map<Index, Rational> acc;
  for (const auto &[idx, c] : t) {
    auto ap = linalg::unit_vector(static_cast<Index>(idx / n_));
    for (const auto &[k, v] : inc_->ambient.multiply(a, ap))
      acc[static_cast<Index>(k * n_ + idx % n_)] += c * v;
  }
  return accumulate(acc);
}

RationalVector RelativeTensorSquare::right(const RationalVector &t, const RationalVector &a) const
{
  std::map<Index, Rational> acc;
  for (const auto &[idx, c] : t) {
    auto ar = linalg::unit_vector(static_cast<Index>(idx % n_));
    for (const auto &[k, v] : inc_->ambient.multiply(ar, a))
      acc[static_cast<Index>((idx / n_) * n_ + k)] += c * v;
  }
  return accumulate(acc);
}

RationalVector RelativeTensorSquare::mu(const RationalVector &t) const
{
  std::map<Index, Rational> acc;
  for (const auto &[idx, c] : t)
    for (const auto &[k, v] : inc_->ambient.product(idx / n_, idx % n_))
      acc[k] += c * v;
  return accumulate(acc);
}

SeparabilityVerdict is_separable_extension(const AlgebraInclusion &inc, std::size_t cap)
{
  RelativeTensorSquare ts(inc, cap);
  const std::size_t n = inc.ambient.dim();
  const std::size_t q = ts.quotient_dim();
  // rows (s, c) for the commutator with b_s, then n rows for mu(t) = 1
  std::map<std::pair<std::size_t, Index>, RationalVector> central;
  std::vector<RationalVector> mu_rows(n);
  for (std::size_t f = 0; f < q; ++f) {
    auto xf = ts.lift(linalg::unit_vector(static_cast<Index>(f)));
    for (std::size_t s = 0; s < n; ++s) {
      auto bs = linalg::unit_vector(static_cast<Index>(s));
      for (const auto &[c, v] : ts.reduce(linalg::subtract(ts.left(bs, xf), ts.right(xf, bs))))
        central[{s, c}].emplace_back(static_cast<Index>(f), v);
    }
    for (const auto &[k, v] : ts.mu(xf))
      mu_rows[k].emplace_back(static_cast<Index>(f), v);
  }
  std::vector<RationalVector> rows;
  std::vector<Rational> rhs;
  for (auto &[key, row] : central) {
    rows.push_back(std::move(row));
    rhs.emplace_back(0);
  }
  for (std::size_t k = 0; k < n; ++k) {
    rows.push_back(std::move(mu_rows[k]));
    rhs.push_back(linalg::coefficient(inc.ambient.unit(), static_cast<Index>(k)));
  }
  SeparabilityVerdict out;
  out.quotient_dim = q;
  auto sol = linalg::solve_affine(rows, rhs, q);
  if (!sol)
    return out;
  out.separable = true;
  out.witness = ts.lift(sol->particular);
  out.solution_kernel_dim = sol->kernel.dim();
  return out;
}

bool is_separability_element(const AlgebraInclusion &inc, const RationalVector &t, std::size_t cap)
{
  RelativeTensorSquare ts(inc, cap);
  for (std::size_t s = 0; s < inc.ambient.dim(); ++s) {
    auto bs = linalg::unit_vector(static_cast<Index>(s));
    if (!ts.reduce(linalg::subtract(ts.left(bs, t), ts.right(t, bs))).empty())
      return false;
  }
  return ts.mu(t) == inc.ambient.unit();
}

const char *to_string(RadicalCriterion c)
{
  switch (c) {
  case RadicalCriterion::separable: return "separable";
  case RadicalCriterion::inseparable: return "inseparable";
  case RadicalCriterion::not_applicable: return "not-applicable";
  }
  return "?";
}

RadicalCheck prop_rad_check(const AlgebraInclusion &inc)
{
  RadicalCheck r;
  r.radical_a = radical(inc.ambient);
  SubspaceBasis jb_local = radical(inc.as_algebra());
  std::vector<RationalVector> jb;
  for (const auto &v : jb_local.vectors) {
    std::vector<Rational> coords(inc.subalgebra.dim(), Rational(0));
    for (const auto &[k, c] : v)
      coords[k] = c;
    jb.push_back(inc.subalgebra.combine(coords));
  }
  r.radical_b = linalg::span_of(jb, inc.ambient.dim());
  r.radical_b_is_ideal = is_two_sided_ideal(inc.ambient, r.radical_b);
  if (!r.radical_b_is_ideal)
    r.verdict = RadicalCriterion::not_applicable;
  else if (r.radical_a.vectors == r.radical_b.vectors)
    r.verdict = RadicalCriterion::separable;
  else
    r.verdict = RadicalCriterion::inseparable;
  return r;
}

StructureConstantAlgebra monoid_algebra(std::size_t n)
{
  if (n == 0)
    throw Error("monoid algebra needs n >= 1");
  const std::size_t d = 2 * n;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < d; ++k)
    labels.push_back(k == 0 ? "1" : k == 1 ? "f" : "f^" + std::to_string(k));
  std::vector<StructureConstantAlgebra::Constant> constants;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      std::size_t s = a + b;
      std::size_t k = s < d ? s : n + (s - n) % n;
      constants.emplace_back(a, b, k, Rational(1));
    }
  return StructureConstantAlgebra(std::move(labels), constants, linalg::unit_vector(0));
}

MonoidDecomposition monoid_decomposition(std::size_t n)
{
  const auto m = monoid_algebra(n);
  MonoidDecomposition r;
  r.e = linalg::unit_vector(static_cast<Index>(n));
  r.e_idempotent = m.multiply(r.e, r.e) == r.e;
  const auto one_minus_e = linalg::subtract(m.unit(), r.e);

  EchelonForm em(m.dim()), cm(m.dim()), both(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) {
    auto fk = linalg::unit_vector(static_cast<Index>(k));
    auto x = m.multiply(r.e, fk), y = m.multiply(one_minus_e, fk);
    em.insert(x);
    cm.insert(y);
    both.insert(x);
    both.insert(y);
  }
  r.dim_eM = em.rank();
  r.dim_complement = cm.rank();
  r.direct = both.rank() == m.dim() && r.dim_eM + r.dim_complement == m.dim();

  // eM: f^{n+a} f^{n+b} = f^{n + (a+b) mod n}, unit f^n, n independent images
  bool ok = r.dim_eM == n && m.multiply(r.e, linalg::unit_vector(static_cast<Index>(n))) ==
                                 linalg::unit_vector(static_cast<Index>(n));
  for (std::size_t a = 0; a < n && ok; ++a)
    for (std::size_t b = 0; b < n && ok; ++b)
      ok = m.product(n + a, n + b) == linalg::unit_vector(static_cast<Index>(n + (a + b) % n));
  r.eM_is_cyclic_group_algebra = ok;

  // (1-e)M: x_k = (1-e) f^k, x_a x_b = x_{a+b} or 0, x_0 the corner unit
  std::vector<RationalVector> xs;
  for (std::size_t k = 0; k < n; ++k)
    xs.push_back(m.multiply(one_minus_e, linalg::unit_vector(static_cast<Index>(k))));
  ok = r.dim_complement == n && linalg::span_of(xs, m.dim()).dim() == n;
  for (std::size_t a = 0; a < n && ok; ++a)
    for (std::size_t b = 0; b < n && ok; ++b) {
      RationalVector expect = a + b < n ? xs[a + b] : RationalVector{};
      ok = m.multiply(xs[a], xs[b]) == expect;
    }
  r.complement_is_truncated_polynomial = ok;
  return r;
}

AlgebraInclusion monoid_fixture(std::size_t n)
{
  const auto m = monoid_algebra(n);
  auto one_minus_e = linalg::subtract(m.unit(), linalg::unit_vector(static_cast<Index>(n)));
  return subalgebra_closure(m, {m.unit(), m.multiply(one_minus_e, linalg::unit_vector(1))});
}

StructureConstantAlgebra upper_triangular(std::size_t n)
{
  std::vector<SparseMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      basis.push_back({{i, j, Rational(1)}});
  return matrix_subalgebra(n, basis);
}

namespace {

/// Coordinates of a matrix in an algebra whose basis is a list of matrix units.
RationalVector unit_coordinates(const std::vector<std::pair<std::size_t, std::size_t>> &units,
                                const SparseMatrix &m)
{
  std::vector<std::pair<Index, Rational>> terms;
  for (const auto &[r, c, v] : m) {
    auto it = std::find(units.begin(), units.end(), std::make_pair(r, c));
    if (it == units.end())
      throw Error("matrix uses a unit outside the ambient algebra");
    terms.emplace_back(static_cast<Index>(it - units.begin()), v);
  }
  return linalg::make_vector(std::move(terms));
}

AlgebraInclusion unit_basis_inclusion(std::size_t size,
                                      const std::vector<std::pair<std::size_t, std::size_t>> &units,
                                      const std::vector<SparseMatrix> &sub)
{
  std::vector<SparseMatrix> basis;
  for (const auto &[r, c] : units)
    basis.push_back({{r, c, Rational(1)}});
  auto a = matrix_subalgebra(size, basis);
  std::vector<RationalVector> vs;
  for (const auto &m : sub)
    vs.push_back(unit_coordinates(units, m));
  return make_inclusion(a, vs);
}

std::vector<std::pair<std::size_t, std::size_t>> triangular_units(std::size_t n)
{
  std::vector<std::pair<std::size_t, std::size_t>> u;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      u.emplace_back(i, j);
  return u;
}

SparseMatrix identity_matrix(std::size_t n)
{
  SparseMatrix m;
  for (std::size_t i = 0; i < n; ++i)
    m.emplace_back(i, i, Rational(1));
  return m;
}

} // namespace

AlgebraInclusion triangular_subalgebra(std::size_t n, const std::vector<SparseMatrix> &matrices)
{
  return unit_basis_inclusion(n, triangular_units(n), matrices);
}

AlgebraInclusion upper_triangular_fixture(std::size_t n)
{
  std::vector<SparseMatrix> sub{identity_matrix(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      sub.push_back({{i, j, Rational(1)}});
  return triangular_subalgebra(n, sub);
}

AlgebraInclusion jordan_fixture(std::size_t n)
{
  std::vector<SparseMatrix> sub{identity_matrix(n)};
  for (std::size_t k = 1; k < n; ++k) {
    SparseMatrix p;
    for (std::size_t i = 0; i + k < n; ++i)
      p.emplace_back(i, i + k, Rational(1));
    sub.push_back(std::move(p));
  }
  return triangular_subalgebra(n, sub);
}

AlgebraInclusion structural_fixture()
{
  std::vector<std::pair<std::size_t, std::size_t>> units{
      {0, 0}, {1, 1}, {2, 2}, {3, 3}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2}};
  std::vector<SparseMatrix> sub{
      {{0, 0, Rational(1)}, {3, 3, Rational(1)}},
      {{1, 1, Rational(1)}, {2, 2, Rational(1)}},
      {{1, 0, Rational(1)}},
      {{3, 2, Rational(1)}},
  };
  return unit_basis_inclusion(4, units, sub);
}

AlgebraInclusion matrix_algebra_fixture(std::size_t n)
{
  auto a = full_matrix_algebra(n);
  return make_inclusion(a, {a.unit()});
}

RationalVector matrix_unit_witness(std::size_t n, std::size_t j)
{
  const std::size_t d = n * n;
  RationalVector t;
  for (std::size_t i = 0; i < n; ++i)
    t.emplace_back(static_cast<Index>((i * n + j) * d + (j * n + i)), Rational(1));
  return linalg::make_vector(std::move(t));
}

} // namespace depthkit
