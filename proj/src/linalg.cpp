#include "depthkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "depthkit/errors.hpp"

namespace depthkit::linalg {

std::string to_string(const Rational &q)
{
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string &text)
{
  std::string t;
  for (char c : text)
    if (c != ' ')
      t.push_back(c);
  if (t.empty())
    throw ParseError("empty rational literal");
  auto slash = t.find('/');
  auto valid_int = [](const std::string &s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size())
      return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!num.empty() && num[0] == '+')
    num = num.substr(1);
  if (!valid_int(num) || !valid_int(den))
    throw ParseError("malformed rational literal '" + text + "'");
  Integer d(den);
  if (d == 0)
    throw ParseError("zero denominator in '" + text + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

RationalVector make_vector(std::vector<std::pair<Index, Rational>> terms)
{
  std::sort(terms.begin(), terms.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  RationalVector out;
  for (auto &[i, v] : terms) {
    if (!out.empty() && out.back().first == i)
      out.back().second += v;
    else
      out.emplace_back(i, std::move(v));
    if (out.back().second == 0)
      out.pop_back();
  }
  return out;
}

RationalVector unit_vector(Index i) { return {{i, Rational(1)}}; }

namespace {

template <typename T, typename Op>
std::vector<std::pair<Index, T>> merge(const std::vector<std::pair<Index, T>> &a,
                                       const std::vector<std::pair<Index, T>> &b,
                                       Op combine_b)
{
  std::vector<std::pair<Index, T>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, combine_b(T(0), b[j].second));
      ++j;
    } else {
      T v = combine_b(a[i].second, b[j].second);
      if (v != 0)
        out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

RationalVector add(const RationalVector &a, const RationalVector &b)
{
  return merge(a, b, [](const Rational &x, const Rational &y) { return Rational(x + y); });
}

RationalVector subtract(const RationalVector &a, const RationalVector &b)
{
  return merge(a, b, [](const Rational &x, const Rational &y) { return Rational(x - y); });
}

RationalVector scale(const RationalVector &a, const Rational &c)
{
  if (c == 0)
    return {};
  RationalVector out = a;
  for (auto &t : out)
    t.second *= c;
  return out;
}

Rational coefficient(const RationalVector &a, Index i)
{
  auto it = std::lower_bound(a.begin(), a.end(), i,
                             [](const auto &t, Index k) { return t.first < k; });
  if (it != a.end() && it->first == i)
    return it->second;
  return Rational(0);
}

bool is_zero(const RationalVector &a) { return a.empty(); }

IntegerRow primitive_row(const RationalVector &v)
{
  IntegerRow row;
  if (v.empty())
    return row;
  Integer l = 1;
  for (const auto &t : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  Integer g = 0;
  row.reserve(v.size());
  for (const auto &t : v) {
    Integer x = t.second.get_num() * (l / t.second.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    row.emplace_back(t.first, std::move(x));
  }
  if (row.front().second < 0)
    g = -g;
  if (g != 1)
    for (auto &t : row)
      mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
  return row;
}

RationalVector to_rational(const IntegerRow &row)
{
  RationalVector out;
  out.reserve(row.size());
  for (const auto &t : row)
    out.emplace_back(t.first, Rational(t.second));
  return out;
}

namespace {

void make_primitive(IntegerRow &v)
{
  if (v.empty())
    return;
  Integer g = 0;
  for (const auto &t : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1)
      break;
  }
  if (v.front().second < 0)
    g = -g;
  if (g != 1)
    for (auto &t : v)
      mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
}

/// v <- (p*v - c*r)/gcd(p, c) where r has leading entry (k, p) and v has entry c at k.
IntegerRow eliminate(const IntegerRow &v, const Integer &c0, const IntegerRow &r)
{
  const Index k = r.front().first;
  Integer p = r.front().second, c = c0, g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), c.get_mpz_t());
  if (g != 1) {
    mpz_divexact(p.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  IntegerRow out;
  out.reserve(v.size() + r.size());
  std::size_t i = 0, j = 1;
  const bool unit = (p == 1);
  Integer tmp;
  while (i < v.size() || j < r.size()) {
    if (i < v.size() && v[i].first == k) {
      ++i;
      continue;
    }
    if (j == r.size() || (i < v.size() && v[i].first < r[j].first)) {
      out.emplace_back(v[i].first, unit ? v[i].second : Integer(p * v[i].second));
      ++i;
    } else if (i == v.size() || r[j].first < v[i].first) {
      out.emplace_back(r[j].first, Integer(-c * r[j].second));
      ++j;
    } else {
      if (unit)
        tmp = v[i].second - c * r[j].second;
      else
        tmp = p * v[i].second - c * r[j].second;
      if (tmp != 0)
        out.emplace_back(v[i].first, tmp);
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

} // namespace

EchelonForm::EchelonForm(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

IntegerRow EchelonForm::reduce_leading(IntegerRow v) const
{
  while (!v.empty()) {
    auto it = pivot_row_.find(v.front().first);
    if (it == pivot_row_.end())
      break;
    Integer c = v.front().second;
    v = eliminate(v, c, rows_[it->second]);
  }
  return v;
}

IntegerRow EchelonForm::reduce_full(IntegerRow v) const
{
  std::size_t i = 0;
  while (i < v.size()) {
    auto it = pivot_row_.find(v[i].first);
    if (it == pivot_row_.end()) {
      ++i;
      continue;
    }
    Integer c = v[i].second;
    v = eliminate(v, c, rows_[it->second]);
  }
  return v;
}

bool EchelonForm::insert(const RationalVector &v) { return insert(primitive_row(v)); }

bool EchelonForm::insert(IntegerRow row)
{
  for (const auto &t : row)
    if (t.first >= ambient_dim_)
      throw std::out_of_range("vector index outside ambient dimension");
  row = reduce_leading(std::move(row));
  if (row.empty())
    return false;
  make_primitive(row);
  pivot_row_.emplace(row.front().first, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool EchelonForm::contains(const RationalVector &v) const
{
  return reduce_leading(primitive_row(v)).empty();
}

SubspaceBasis EchelonForm::rref() const
{
  std::vector<IntegerRow> rows = rows_;
  std::sort(rows.begin(), rows.end(),
            [](const IntegerRow &a, const IntegerRow &b) { return a.front().first < b.front().first; });
  std::unordered_map<Index, std::size_t> where;
  for (std::size_t i = 0; i < rows.size(); ++i)
    where.emplace(rows[i].front().first, i);
  // Back substitution from the largest pivot down; rows with larger pivots are final.
  for (std::size_t ii = rows.size(); ii-- > 0;) {
    IntegerRow &v = rows[ii];
    std::size_t i = 1;
    while (i < v.size()) {
      auto it = where.find(v[i].first);
      if (it == where.end()) {
        ++i;
        continue;
      }
      Integer c = v[i].second;
      v = eliminate(v, c, rows[it->second]);
    }
  }
  SubspaceBasis basis;
  basis.ambient_dim = ambient_dim_;
  for (const auto &r : rows) {
    Rational lead(r.front().second);
    RationalVector q;
    q.reserve(r.size());
    for (const auto &t : r) {
      Rational x(t.second);
      x /= lead;
      q.emplace_back(t.first, std::move(x));
    }
    basis.pivots.push_back(r.front().first);
    basis.vectors.push_back(std::move(q));
  }
  return basis;
}

bool SubspaceBasis::contains(const RationalVector &v) const
{
  RationalVector residual = v;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Rational c = coefficient(residual, pivots[i]);
    if (c != 0)
      residual = subtract(residual, scale(vectors[i], c));
  }
  return residual.empty();
}

std::vector<Rational> SubspaceBasis::coordinates(const RationalVector &v) const
{
  std::vector<Rational> c(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    c[i] = coefficient(v, pivots[i]);
  return c;
}

RationalVector SubspaceBasis::combine(std::span<const Rational> coords) const
{
  std::map<Index, Rational> acc;
  for (std::size_t i = 0; i < vectors.size() && i < coords.size(); ++i) {
    if (coords[i] == 0)
      continue;
    for (const auto &t : vectors[i])
      acc[t.first] += coords[i] * t.second;
  }
  RationalVector out;
  for (auto &[k, v] : acc)
    if (v != 0)
      out.emplace_back(k, v);
  return out;
}

SubspaceBasis span_of(std::span<const RationalVector> vectors, std::size_t ambient_dim)
{
  EchelonForm ech(ambient_dim);
  for (const auto &v : vectors)
    ech.insert(v);
  return ech.rref();
}

SubspaceBasis nullspace(std::span<const IntegerRow> equations, std::size_t ncols)
{
  EchelonForm ech(ncols);
  for (const auto &row : equations)
    ech.insert(row);
  SubspaceBasis r = ech.rref();
  std::vector<bool> is_pivot(ncols, false);
  for (Index p : r.pivots)
    is_pivot[p] = true;
  // kernel vector for free column f: x_f = 1, x_p = -R[p][f]
  std::unordered_map<Index, std::vector<std::pair<Index, Rational>>> columns;
  for (std::size_t i = 0; i < r.vectors.size(); ++i)
    for (std::size_t j = 1; j < r.vectors[i].size(); ++j)
      columns[r.vectors[i][j].first].emplace_back(r.pivots[i], -r.vectors[i][j].second);
  EchelonForm kernel(ncols);
  for (Index f = 0; f < ncols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<std::pair<Index, Rational>> terms;
    auto it = columns.find(f);
    if (it != columns.end())
      terms = it->second;
    terms.emplace_back(f, Rational(1));
    kernel.insert(make_vector(std::move(terms)));
  }
  return kernel.rref();
}

SubspaceBasis nullspace(std::span<const RationalVector> equations, std::size_t ncols)
{
  std::vector<IntegerRow> rows;
  rows.reserve(equations.size());
  for (const auto &e : equations)
    rows.push_back(primitive_row(e));
  return nullspace(std::span<const IntegerRow>(rows), ncols);
}

SubspaceBasis invariant_space(std::size_t dim, std::span<const std::vector<Index>> perms)
{
  std::vector<IntegerRow> rows;
  for (const auto &perm : perms)
    for (Index b = 0; b < dim; ++b) {
      Index c = perm[b];
      if (c == b)
        continue;
      Index lo = std::min(b, c), hi = std::max(b, c);
      rows.push_back({{lo, Integer(1)}, {hi, Integer(-1)}});
    }
  return nullspace(std::span<const IntegerRow>(rows), dim);
}

std::optional<AffineSolution> solve_affine(std::span<const RationalVector> rows,
                                           std::span<const Rational> rhs,
                                           std::size_t ncols)
{
  if (rows.size() != rhs.size())
    throw std::invalid_argument("solve_affine: row/rhs size mismatch");
  const Index aug = static_cast<Index>(ncols);
  EchelonForm ech(ncols + 1);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    RationalVector v = rows[k];
    if (rhs[k] != 0)
      v.emplace_back(aug, -rhs[k]);
    ech.insert(v);
  }
  SubspaceBasis r = ech.rref();
  if (!r.pivots.empty() && r.pivots.back() == aug)
    return std::nullopt;
  AffineSolution sol;
  std::vector<std::pair<Index, Rational>> part;
  for (std::size_t i = 0; i < r.vectors.size(); ++i) {
    // row: x_p + sum_free c_f x_f - b = 0  (rhs stored negated at column aug)
    Rational b = -coefficient(r.vectors[i], aug);
    if (b != 0)
      part.emplace_back(r.pivots[i], b);
  }
  sol.particular = make_vector(std::move(part));
  sol.kernel = nullspace(rows, ncols);
  return sol;
}

std::size_t bareiss_rank(std::vector<std::vector<Integer>> m)
{
  const std::size_t nrows = m.size();
  if (nrows == 0)
    return 0;
  const std::size_t ncols = m[0].size();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t piv = rank;
    while (piv < nrows && m[piv][col] == 0)
      ++piv;
    if (piv == nrows)
      continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        Integer v = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 mersenne = ModularEchelon::prime;

u64 mulmod(u64 a, u64 b, u64 p)
{
  u128 x = static_cast<u128>(a) * b;
  if (p != mersenne)
    return static_cast<u64>(x % p);
  u64 r = static_cast<u64>(x & mersenne) + static_cast<u64>(x >> 61);
  return r >= mersenne ? r - mersenne : r;
}

u64 powmod(u64 a, u64 e, u64 p)
{
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1)
      r = mulmod(r, a, p);
  return r;
}

u64 reduce_mod(const Integer &z, u64 p)
{
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

} // namespace

ModularEchelon::ModularEchelon(std::size_t ambient_dim)
: ambient_dim_(ambient_dim), row_of_(ambient_dim, -1)
{
}

bool ModularEchelon::insert(const RationalVector &v)
{
  std::vector<u64> row(ambient_dim_, 0);
  for (const auto &[i, q] : v) {
    if (i >= ambient_dim_)
      throw std::out_of_range("vector index outside ambient dimension");
    u64 den = reduce_mod(q.get_den(), prime);
    if (den == 0)
      throw std::domain_error("denominator divisible by the modulus");
    row[i] = mulmod(reduce_mod(q.get_num(), prime), powmod(den, prime - 2, prime), prime);
  }
  for (std::size_t c = 0; c < ambient_dim_; ++c) {
    if (row[c] == 0 || row_of_[c] < 0)
      continue;
    const auto &r = rows_[static_cast<std::size_t>(row_of_[c])];
    u64 f = prime - row[c];
    for (std::size_t k = c; k < ambient_dim_; ++k)
      if (r[k])
        if ((row[k] += mulmod(f, r[k], prime)) >= prime)
          row[k] -= prime;
  }
  std::size_t lead = 0;
  while (lead < ambient_dim_ && row[lead] == 0)
    ++lead;
  if (lead == ambient_dim_)
    return false;
  u64 inv = powmod(row[lead], prime - 2, prime);
  for (std::size_t k = lead; k < ambient_dim_; ++k)
    if (row[k])
      row[k] = mulmod(row[k], inv, prime);
  row_of_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
  lead_.push_back(lead);
  rows_.push_back(std::move(row));
  return true;
}

std::optional<RationalVector> ModularEchelon::kernel_candidate() const
{
  std::size_t free = 0;
  while (free < ambient_dim_ && row_of_[free] >= 0)
    ++free;
  if (free == ambient_dim_)
    return std::nullopt;
  // Solve with x_free = 1 and the other free variables 0, by back substitution.
  std::vector<u64> x(ambient_dim_, 0);
  x[free] = 1;
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return lead_[a] > lead_[b]; });
  for (auto i : order) {
    const auto &r = rows_[i];
    u64 s = 0;
    for (std::size_t k = lead_[i] + 1; k < ambient_dim_; ++k)
      if (r[k] && x[k])
        s = (s + mulmod(r[k], x[k], prime)) % prime;
    x[lead_[i]] = (prime - s) % prime;
  }
  RationalVector out;
  for (std::size_t k = 0; k < ambient_dim_; ++k)
    if (x[k]) {
      auto q = rational_reconstruction(x[k], prime);
      if (!q)
        return std::nullopt;
      out.emplace_back(static_cast<Index>(k), std::move(*q));
    }
  return out;
}

std::optional<Rational> rational_reconstruction(std::uint64_t x, std::uint64_t p)
{
  Integer r0 = p, r1 = x, t0 = 0, t1 = 1, bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(p / 2).get_mpz_t());
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (abs(t1) > bound || t1 == 0)
    return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

Rational dot(const RationalVector &a, const RationalVector &b)
{
  Rational s = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      ++i;
    else if (b[j].first < a[i].first)
      ++j;
    else
      s += a[i++].second * b[j++].second;
  }
  return s;
}

} // namespace depthkit::linalg
