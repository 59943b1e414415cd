#ifndef DEPTHKIT_FINDIM_HPP
#define DEPTHKIT_FINDIM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "depthkit/linalg.hpp"

namespace depthkit {

using linalg::Rational;
using linalg::RationalVector;
using linalg::SubspaceBasis;

/// b_i b_j = sum_k c_ijk b_k over the rationals.
class StructureConstantAlgebra
{
public:
  using Constant = std::tuple<std::size_t, std::size_t, std::size_t, Rational>;

  /// Validates associativity on all basis triples and the unit axiom; throws Error.
  StructureConstantAlgebra(std::vector<std::string> labels, const std::vector<Constant> &constants,
                           RationalVector unit);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const RationalVector &unit() const { return unit_; }
  const RationalVector &product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  RationalVector multiply(const RationalVector &x, const RationalVector &y) const;
  /// Trace of left multiplication by x.
  Rational trace(const RationalVector &x) const;
  std::vector<Constant> constants() const;

private:
  std::vector<std::string> labels_;
  std::vector<RationalVector> table_;
  RationalVector unit_;
};

/// Sparse matrix with rational entries: ((row, col), value), 0-based.
using SparseMatrix = std::vector<std::tuple<std::size_t, std::size_t, Rational>>;

/// Algebra with the given independent, product-closed matrices as basis. Throws Error.
StructureConstantAlgebra matrix_subalgebra(std::size_t size, const std::vector<SparseMatrix> &basis,
                                           std::vector<std::string> labels = {});
/// M_n(Q) with basis e_ij at index i*n + j.
StructureConstantAlgebra full_matrix_algebra(std::size_t n);

/// A subalgebra B of A, given by a basis of vectors in A-coordinates.
struct AlgebraInclusion
{
  StructureConstantAlgebra ambient;
  SubspaceBasis subalgebra;

  /// B with its RREF basis as a standalone algebra.
  StructureConstantAlgebra as_algebra() const;
};

/// Checks independence, product closure and 1_B = 1_A; throws Error or UnitMissing.
AlgebraInclusion make_inclusion(const StructureConstantAlgebra &a, const std::vector<RationalVector> &basis);

/// Smallest product-closed subspace containing the vectors. Throws UnitMissing.
AlgebraInclusion subalgebra_closure(const StructureConstantAlgebra &a,
                                    const std::vector<RationalVector> &vectors);

/// Kernel of the regular trace form; verified to be a nilpotent ideal.
SubspaceBasis radical(const StructureConstantAlgebra &a);
bool is_two_sided_ideal(const StructureConstantAlgebra &a, const SubspaceBasis &i);
/// Least m with I^m = 0, or nullopt if none up to dim + 1.
std::optional<std::size_t> nilpotency_index(const StructureConstantAlgebra &a, const SubspaceBasis &i);

/// A (x)_B A as A (x) A modulo ab (x) a' - a (x) ba'. Tensor index p * dim + r.
class RelativeTensorSquare
{
public:
  /// Throws CapExceeded if dim A squared exceeds cap.
  RelativeTensorSquare(const AlgebraInclusion &inc, std::size_t cap = 4096);

  std::size_t quotient_dim() const { return free_.size(); }
  std::size_t ambient_dim() const { return n_ * n_; }
  /// Coordinates of the class of t in the quotient (free columns of the relation RREF).
  RationalVector reduce(const RationalVector &t) const;
  /// Representative using only free columns.
  RationalVector lift(const RationalVector &coords) const;

  RationalVector left(const RationalVector &a, const RationalVector &t) const;
  RationalVector right(const RationalVector &t, const RationalVector &a) const;
  RationalVector mu(const RationalVector &t) const;

  static RationalVector tensor(std::size_t n, const RationalVector &x, const RationalVector &y);

private:
  const AlgebraInclusion *inc_;
  std::size_t n_;
  SubspaceBasis relations_;
  std::vector<linalg::Index> free_;
};

struct SeparabilityVerdict
{
  bool separable = false;
  std::optional<RationalVector> witness; // in A (x) A coordinates
  std::size_t quotient_dim = 0;
  std::size_t solution_kernel_dim = 0;
};

/// Solvability of {t A-central in A (x)_B A, mu(t) = 1}.
SeparabilityVerdict is_separable_extension(const AlgebraInclusion &inc, std::size_t cap = 4096);
/// t represents an A-central element with mu(t) = 1 in A (x)_B A.
bool is_separability_element(const AlgebraInclusion &inc, const RationalVector &t,
                             std::size_t cap = 4096);

enum class RadicalCriterion { separable, inseparable, not_applicable };
const char *to_string(RadicalCriterion c);

struct RadicalCheck
{
  SubspaceBasis radical_a;
  SubspaceBasis radical_b; // in A-coordinates
  bool radical_b_is_ideal = false;
  RadicalCriterion verdict = RadicalCriterion::not_applicable;
};

RadicalCheck prop_rad_check(const AlgebraInclusion &inc);

/// Basis f^0 .. f^{2n-1} with f^{2n} = f^n.
StructureConstantAlgebra monoid_algebra(std::size_t n);

struct MonoidDecomposition
{
  RationalVector e; // f^n
  bool e_idempotent = false;
  std::size_t dim_eM = 0;
  std::size_t dim_complement = 0;
  bool direct = false;
  /// f^{n+k} -> g^k is an algebra isomorphism eM -> QZ_n.
  bool eM_is_cyclic_group_algebra = false;
  /// (1-e)f^k -> X^k is an algebra isomorphism (1-e)M -> Q[X]/(X^n).
  bool complement_is_truncated_polynomial = false;
};

MonoidDecomposition monoid_decomposition(std::size_t n);
/// M(2n,n) over the subalgebra generated by (1-e)f.
AlgebraInclusion monoid_fixture(std::size_t n);

StructureConstantAlgebra upper_triangular(std::size_t n);
/// T_n over Q1 + strictly upper triangular matrices.
AlgebraInclusion upper_triangular_fixture(std::size_t n);
/// T_n over Q1 + QN + ... + QN^{n-1}, N the sum of e_{i,i+1}.
AlgebraInclusion jordan_fixture(std::size_t n);
/// T_n over a subalgebra given by matrices inside T_n.
AlgebraInclusion triangular_subalgebra(std::size_t n, const std::vector<SparseMatrix> &matrices);
/// The 9-dimensional structural matrix algebra in M_4 over the Sweedler-Nakayama algebra.
AlgebraInclusion structural_fixture();
/// M_n(Q) over Q1.
AlgebraInclusion matrix_algebra_fixture(std::size_t n);
/// sum_i e_ij (x) e_ji, j in 0..n-1.
RationalVector matrix_unit_witness(std::size_t n, std::size_t j);

} // namespace depthkit

#endif // DEPTHKIT_FINDIM_HPP
