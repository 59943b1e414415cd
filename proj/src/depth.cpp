#include "depthkit/depth.hpp"

#include <stdexcept>

#include "depthkit/errors.hpp"

namespace depthkit {

BimoduleMatrix::BimoduleMatrix(std::size_t rows, std::size_t cols)
: rows_(rows), cols_(cols), data_(rows * cols, 0)
{}

BimoduleMatrix BimoduleMatrix::identity(std::size_t n)
{
  BimoduleMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

BimoduleMatrix BimoduleMatrix::from(const InclusionMatrix &im)
{
  BimoduleMatrix m(im.rows, im.cols);
  for (std::size_t i = 0; i < im.rows; ++i)
    for (std::size_t j = 0; j < im.cols; ++j)
      m.at(i, j) = static_cast<unsigned long>(im.entries[i][j]);
  return m;
}

BimoduleMatrix BimoduleMatrix::from(const std::vector<std::vector<long>> &rows)
{
  BimoduleMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != m.cols())
      throw Error("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (rows[i][j] < 0)
        throw Error("bimodule matrices have nonnegative entries");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

BimoduleMatrix BimoduleMatrix::operator*(const BimoduleMatrix &rhs) const
{
  if (cols_ != rhs.rows_)
    throw Error("matrix dimension mismatch");
  BimoduleMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class &a = at(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

BimoduleMatrix BimoduleMatrix::transpose() const
{
  BimoduleMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out.at(j, i) = at(i, j);
  return out;
}

bool BimoduleMatrix::is_diagonal() const
{
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && at(i, j) != 0)
        return false;
  return true;
}

bool BimoduleMatrix::is_symmetric() const
{
  if (rows_ != cols_)
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i))
        return false;
  return true;
}

ZeroPattern zero_pattern(const BimoduleMatrix &m)
{
  ZeroPattern z(m.rows(), std::vector<bool>(m.cols(), false));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      z[i][j] = (m.at(i, j) == 0);
  return z;
}

BimoduleMatrix s_matrix(const BimoduleMatrix &m) { return m * m.transpose(); }
BimoduleMatrix t_matrix(const BimoduleMatrix &m) { return m.transpose() * m; }

namespace {

void require_no_zero_lines(const BimoduleMatrix &m)
{
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < m.cols(); ++j)
      any = any || m.at(i, j) != 0;
    if (!any)
      throw Error("inclusion matrix has a zero row");
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool any = false;
    for (std::size_t i = 0; i < m.rows(); ++i)
      any = any || m.at(i, j) != 0;
    if (!any)
      throw Error("inclusion matrix has a zero column");
  }
}

/// Least n >= start with pattern(X_n) == pattern(X_{n+1}) where X_{n+1} = step * X_n.
/// The zero sets only shrink because step has a positive diagonal, so the scan
/// stops after at most (entries + 1) steps.
std::size_t stabilization_index(BimoduleMatrix x, const BimoduleMatrix &step, std::size_t start)
{
  const std::size_t limit = x.rows() * x.cols() + 2;
  auto pat = zero_pattern(x);
  for (std::size_t n = start; n < start + limit; ++n) {
    BimoduleMatrix next = step * x;
    auto next_pat = zero_pattern(next);
    if (next_pat == pat)
      return n;
    x = std::move(next);
    pat = std::move(next_pat);
  }
  throw Error("zero pattern failed to stabilize");
}

} // namespace

std::size_t min_odd_depth(const BimoduleMatrix &m)
{
  require_no_zero_lines(m);
  BimoduleMatrix s = s_matrix(m);
  std::size_t n = stabilization_index(BimoduleMatrix::identity(m.rows()), s, 0);
  return 2 * n + 1;
}

std::size_t min_even_depth(const BimoduleMatrix &m)
{
  require_no_zero_lines(m);
  BimoduleMatrix s = s_matrix(m);
  std::size_t n = stabilization_index(m, s, 1);
  return 2 * n;
}

std::size_t min_h_depth(const BimoduleMatrix &m)
{
  require_no_zero_lines(m);
  BimoduleMatrix t = t_matrix(m);
  std::size_t n = stabilization_index(BimoduleMatrix::identity(m.cols()), t, 1);
  return 2 * n - 1;
}

std::size_t min_depth(const BimoduleMatrix &m)
{
  return std::min(min_odd_depth(m), min_even_depth(m));
}

bool burciu_depth1(const FiniteGroup &g, const Subgroup &h)
{
  Partition classes = h_orbits(g, h);
  std::vector<std::size_t> which(g.order(), 0);
  std::vector<bool> in_h(g.order(), false);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto x : classes[c])
      which[x] = c;
  auto gens = g.generator_indices();
  for (const auto &cls : classes) {
    if (!h.contains(cls.front()))
      continue; // only classes of H itself
    for (auto s : gens) {
      // s * (class sum) = (class sum) * s  iff  s C s^-1 = C
      for (auto x : cls) {
        auto y = g.conj(s, x);
        if (!h.contains(y) || which[y] != which[cls.front()])
          return false;
      }
    }
  }
  return true;
}

DepthReport depth_report(const InclusionMatrix &im)
{
  DepthReport r;
  r.m = BimoduleMatrix::from(im);
  r.s = s_matrix(r.m);
  r.t = t_matrix(r.m);
  r.min_odd_depth = min_odd_depth(r.m);
  r.min_even_depth = min_even_depth(r.m);
  r.min_depth = std::min(r.min_odd_depth, r.min_even_depth);
  r.min_h_depth = min_h_depth(r.m);
  r.s_diagonal = r.s.is_diagonal();
  r.t_diagonal = r.t.is_diagonal();
  r.oracle_verdicts["depth_one_iff_s_diagonal"] = (r.min_depth == 1) == r.s_diagonal;
  r.oracle_verdicts["h_depth_one_iff_t_diagonal"] = (r.min_h_depth == 1) == r.t_diagonal;
  r.oracle_verdicts["depth_gap_at_most_two"] =
      (r.min_depth > r.min_h_depth ? r.min_depth - r.min_h_depth : r.min_h_depth - r.min_depth) <= 2;
  r.oracle_verdicts["h_depth_bounds_depth"] = r.min_depth <= r.min_h_depth + 1;
  r.oracle_verdicts["s_t_symmetric"] = r.s.is_symmetric() && r.t.is_symmetric();
  return r;
}

} // namespace depthkit
