#ifndef DEPTHKIT_CHARTABLE_HPP
#define DEPTHKIT_CHARTABLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "depthkit/permgroup.hpp"

namespace depthkit {

inline constexpr std::uint64_t default_seed = 20240601;

struct ClassData
{
  Partition classes;                     // canonical order; class 0 is {identity}
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> inverse_class; // class of x^-1 for x in class k
  std::vector<std::size_t> class_of;      // element index -> class index
  std::vector<ElementIndex> representatives;
  std::size_t exponent = 1;

  std::size_t count() const { return classes.size(); }
};

ClassData class_data(const FiniteGroup &g);

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

/// Class multiplication coefficients for class i: result[j][k] is the number of
/// pairs (x, y) in C_i x C_j with xy = z, for a fixed z in C_k.
std::vector<std::vector<std::uint64_t>> class_mult_coeffs(const FiniteGroup &g,
                                                          const ClassData &cd, std::size_t i);

/// Smallest prime p with p = 1 mod exponent and p > 2 sqrt(order).
std::uint64_t dixon_prime(std::size_t order, std::size_t exponent);
std::uint64_t dixon_prime(const FiniteGroup &g);

/// Irreducible characters reduced mod a prime. Rows are characters, sorted by
/// (degree, residue sequence); columns follow ClassData order.
struct CharacterTableModP
{
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t group_order = 0;
  ClassData classes;
  ModMatrix table;
  std::vector<std::size_t> degrees;

  std::size_t size() const { return degrees.size(); }
};

/// Dixon-Schneider simultaneous eigenspace splitting of the class matrices.
/// prime = 0 selects dixon_prime(g). Throws SplittingFailure.
CharacterTableModP character_table_mod_p(const FiniteGroup &g, std::uint64_t prime = 0,
                                         std::uint64_t seed = default_seed);

/// Sum of squared degrees equals the group order, and the rows are orthonormal mod p.
bool degrees_square_sum_ok(const CharacterTableModP &t);
bool rows_orthonormal(const CharacterTableModP &t);

/// Multiplicities of irreducibles of H (rows) in restrictions of irreducibles of G (columns).
struct InclusionMatrix
{
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::uint64_t>> entries;
  std::vector<std::size_t> row_degrees; // degrees of the irreducibles of H
  std::vector<std::size_t> col_degrees; // degrees of the irreducibles of G
  std::uint64_t prime = 0;
};

struct ExtensionTables
{
  CharacterTableModP group;
  CharacterTableModP subgroup;
  std::vector<std::size_t> subgroup_class_in_group; // H class -> G class of its elements
};

/// Tables of G and H computed with one prime valid for both.
ExtensionTables extension_tables(const FiniteGroup &g, const Subgroup &h,
                                 std::uint64_t seed = default_seed);

/// Restriction multiplicities, lifted from mod p. Throws LiftInconsistency.
InclusionMatrix inclusion_matrix(const ExtensionTables &tables);
InclusionMatrix inclusion_matrix(const FiniteGroup &g, const Subgroup &h,
                                 std::uint64_t seed = default_seed);

/// Induction multiplicities <Ind chi_i, psi_j>_G, computed from induced class
/// functions; equals the inclusion matrix by Frobenius reciprocity.
InclusionMatrix induction_matrix(const FiniteGroup &g, const Subgroup &h,
                                 const ExtensionTables &tables);

} // namespace depthkit

#endif // DEPTHKIT_CHARTABLE_HPP
