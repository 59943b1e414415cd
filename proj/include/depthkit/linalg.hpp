#ifndef DEPTHKIT_LINALG_HPP
#define DEPTHKIT_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace depthkit::linalg {

using Integer = mpz_class;
using Rational = mpq_class;
using Index = std::uint32_t;

/// Sparse vector: terms sorted by index, no explicit zeros.
using RationalVector = std::vector<std::pair<Index, Rational>>;
using IntegerRow = std::vector<std::pair<Index, Integer>>;

std::string to_string(const Rational &q);
Rational parse_rational(const std::string &text);

/// Builds a sparse vector from unordered (index, value) terms, summing duplicates.
RationalVector make_vector(std::vector<std::pair<Index, Rational>> terms);
RationalVector unit_vector(Index i);
RationalVector add(const RationalVector &a, const RationalVector &b);
RationalVector subtract(const RationalVector &a, const RationalVector &b);
RationalVector scale(const RationalVector &a, const Rational &c);
Rational coefficient(const RationalVector &a, Index i);
bool is_zero(const RationalVector &a);

/// Clears denominators and content; the leading coefficient of the result is positive.
IntegerRow primitive_row(const RationalVector &v);
RationalVector to_rational(const IntegerRow &row);

/// Row-reduced echelon basis of a subspace of Q^ambient_dim.
struct SubspaceBasis
{
  std::size_t ambient_dim = 0;
  std::vector<RationalVector> vectors; // RREF rows, pivots strictly increasing
  std::vector<Index> pivots;

  std::size_t dim() const { return vectors.size(); }
  bool contains(const RationalVector &v) const;
  /// Coordinates of v in this basis; v must lie in the subspace.
  std::vector<Rational> coordinates(const RationalVector &v) const;
  /// The vector with the given coordinates.
  RationalVector combine(std::span<const Rational> coords) const;
};

/// Incremental fraction-free echelon form. Stored rows are primitive integer
/// rows, each with a distinct leading index. Elimination cross-multiplies and
/// strips content, so no rational arithmetic happens until rref().
class EchelonForm
{
public:
  explicit EchelonForm(std::size_t ambient_dim);

  /// Adds v to the spanning set; returns true if the rank grew.
  bool insert(const RationalVector &v);
  bool insert(IntegerRow row);

  bool contains(const RationalVector &v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }

  SubspaceBasis rref() const;

private:
  IntegerRow reduce_leading(IntegerRow v) const;
  IntegerRow reduce_full(IntegerRow v) const;

  std::size_t ambient_dim_;
  std::vector<IntegerRow> rows_;
  std::unordered_map<Index, std::size_t> pivot_row_;
};

SubspaceBasis span_of(std::span<const RationalVector> vectors, std::size_t ambient_dim);

/// Kernel of the system given by its rows (each row is one homogeneous equation).
SubspaceBasis nullspace(std::span<const IntegerRow> equations, std::size_t ncols);
SubspaceBasis nullspace(std::span<const RationalVector> equations, std::size_t ncols);

/// Kernel of x_b = x_{perm(b)} for every listed permutation of {0..dim-1}.
SubspaceBasis invariant_space(std::size_t dim, std::span<const std::vector<Index>> perms);

struct AffineSolution
{
  RationalVector particular;
  SubspaceBasis kernel;
};

/// Solves rows[k] . x = rhs[k]; nullopt if inconsistent.
std::optional<AffineSolution> solve_affine(std::span<const RationalVector> rows,
                                           std::span<const Rational> rhs,
                                           std::size_t ncols);

/// Echelon form over F_p, p = 2^61 - 1. Rows are reduced modulo p after
/// clearing denominators, so the rank here never exceeds the rank over Q.
class ModularEchelon
{
public:
  static constexpr std::uint64_t prime = (std::uint64_t{1} << 61) - 1;

  explicit ModularEchelon(std::size_t ambient_dim);

  /// Returns true if the rank mod p grew; throws std::domain_error if p divides a denominator.
  bool insert(const RationalVector &v);
  std::size_t rank() const { return rows_.size(); }

  /// A nonzero vector orthogonal to the inserted rows mod p, lifted to Q by
  /// rational reconstruction; nullopt when the rank is full or lifting fails.
  /// The result is not checked against the rows over Q.
  std::optional<RationalVector> kernel_candidate() const;

private:
  std::size_t ambient_dim_;
  std::vector<std::vector<std::uint64_t>> rows_; // dense, leading entry 1
  std::vector<std::size_t> lead_;
  std::vector<std::ptrdiff_t> row_of_; // column -> row, -1 if free
};

/// Smallest |n|, d with n/d = x mod p, |n|, d below sqrt(p/2).
std::optional<Rational> rational_reconstruction(std::uint64_t x, std::uint64_t p);

Rational dot(const RationalVector &a, const RationalVector &b);

/// Dense Bareiss elimination; returns the rank. The matrix is consumed.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> m);

} // namespace depthkit::linalg

#endif // DEPTHKIT_LINALG_HPP
