#ifndef DEPTHKIT_DEPTH_HPP
#define DEPTHKIT_DEPTH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "depthkit/chartable.hpp"
#include "depthkit/permgroup.hpp"

namespace depthkit {

/// Nonnegative big-integer matrix, row major.
class BimoduleMatrix
{
public:
  BimoduleMatrix() = default;
  BimoduleMatrix(std::size_t rows, std::size_t cols);
  static BimoduleMatrix identity(std::size_t n);
  static BimoduleMatrix from(const InclusionMatrix &m);
  static BimoduleMatrix from(const std::vector<std::vector<long>> &m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const mpz_class &at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  mpz_class &at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  BimoduleMatrix operator*(const BimoduleMatrix &rhs) const;
  BimoduleMatrix transpose() const;
  bool is_diagonal() const;
  bool is_symmetric() const;

  friend bool operator==(const BimoduleMatrix &, const BimoduleMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

using ZeroPattern = std::vector<std::vector<bool>>;

/// Entry is true iff the matrix entry is zero.
ZeroPattern zero_pattern(const BimoduleMatrix &m);

/// S = M M^t (order r) and T = M^t M (order s).
BimoduleMatrix s_matrix(const BimoduleMatrix &m);
BimoduleMatrix t_matrix(const BimoduleMatrix &m);

/// 2n+1 for the least n >= 0 with zero_pattern(S^n) = zero_pattern(S^{n+1}), S^0 = I.
std::size_t min_odd_depth(const BimoduleMatrix &m);
/// 2n for the least n >= 1 with zero_pattern(S^{n-1} M) = zero_pattern(S^n M).
std::size_t min_even_depth(const BimoduleMatrix &m);
/// 2n-1 for the least n >= 1 with zero_pattern(T^{n-1}) = zero_pattern(T^n), T^0 = I.
std::size_t min_h_depth(const BimoduleMatrix &m);
std::size_t min_depth(const BimoduleMatrix &m);

/// Every H-class sum commutes with every generator of G in the group algebra.
bool burciu_depth1(const FiniteGroup &g, const Subgroup &h);

struct DepthReport
{
  std::size_t min_odd_depth = 0;
  std::size_t min_even_depth = 0;
  std::size_t min_depth = 0;
  std::size_t min_h_depth = 0;
  bool s_diagonal = false;
  bool t_diagonal = false;
  BimoduleMatrix m, s, t;
  std::map<std::string, bool> oracle_verdicts;
};

DepthReport depth_report(const InclusionMatrix &m);

} // namespace depthkit

#endif // DEPTHKIT_DEPTH_HPP
