#ifndef DEPTHKIT_GROUPALG_HPP
#define DEPTHKIT_GROUPALG_HPP

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "depthkit/linalg.hpp"
#include "depthkit/permgroup.hpp"

namespace depthkit {

using linalg::Rational;
using linalg::RationalVector;
using linalg::SubspaceBasis;

/// Coefficients indexed by ElementIndex.
using GroupAlgebraElement = RationalVector;
/// Coefficients indexed by g * |G:H| + i for the basis vector g (x) g_i.
using TensorSquareElement = RationalVector;

struct LinearCaps
{
  /// Ambient dimension allowed for the Casimir, separability and centralizer systems.
  std::size_t tensor = 16384;
  /// Ambient dimension allowed for T and U (the fullness computations).
  std::size_t linear = 4096;
};

GroupAlgebraElement ga_multiply(const FiniteGroup &g, const GroupAlgebraElement &a,
                                const GroupAlgebraElement &b);
GroupAlgebraElement ga_identity();

/// Elements of A commuting with every listed element of G.
SubspaceBasis centralizer_space(const FiniteGroup &g, std::span<const ElementIndex> actors);
inline SubspaceBasis centralizer_of_subalgebra(const FiniteGroup &g, const Subgroup &h)
{ return centralizer_space(g, h.generators()); }
SubspaceBasis center_space(const FiniteGroup &g);

/// A (x)_B A with the canonical basis {g (x) g_i}.
class TensorSquare
{
public:
  /// Throws CapExceeded if |G| * |G:H| > cap.
  TensorSquare(const FiniteGroup &g, const Subgroup &h, std::size_t cap = LinearCaps{}.tensor);

  const FiniteGroup &group() const { return *g_; }
  const Subgroup &subgroup() const { return *h_; }
  std::size_t index() const { return transversal_.size(); }
  std::size_t dim() const { return g_->order() * transversal_.size(); }
  const std::vector<ElementIndex> &transversal() const { return transversal_; }

  linalg::Index basis(ElementIndex g, std::size_t i) const
  { return static_cast<linalg::Index>(g * index() + i); }
  std::pair<ElementIndex, std::size_t> decode(linalg::Index b) const
  { return {static_cast<ElementIndex>(b / index()), b % index()}; }

  /// Coset of x and the H-part: x = h * g_i.
  std::size_t coset_of(ElementIndex x) const { return coset_[x]; }
  ElementIndex h_part(ElementIndex x) const { return hpart_[x]; }

  linalg::Index right(linalg::Index b, ElementIndex a) const;
  linalg::Index left(ElementIndex a, linalg::Index b) const;
  ElementIndex mu(linalg::Index b) const;

  TensorSquareElement right_action(const TensorSquareElement &t, ElementIndex a) const;
  TensorSquareElement left_action(ElementIndex a, const TensorSquareElement &t) const;
  TensorSquareElement left_action(const GroupAlgebraElement &a, const TensorSquareElement &t) const;
  GroupAlgebraElement multiplication(const TensorSquareElement &t) const;

  /// Product in T: (g (x) g_i)(g' (x) g_j) = g'gh (x) g_k with g_i g_j = h g_k.
  TensorSquareElement t_product(const TensorSquareElement &t, const TensorSquareElement &u) const;

  bool is_a_central(const TensorSquareElement &t) const;
  bool is_h_central(const TensorSquareElement &t) const;

private:
  std::pair<ElementIndex, std::size_t> coset_product(std::size_t i, std::size_t j) const;

  const FiniteGroup *g_;
  const Subgroup *h_;
  std::vector<ElementIndex> transversal_;
  std::vector<std::size_t> coset_;
  std::vector<ElementIndex> hpart_;
};

/// (A (x)_B A)^A.
SubspaceBasis casimir_space(const TensorSquare &ts);
/// T = (A (x)_B A)^B; throws CapExceeded above caps.linear.
SubspaceBasis t_space(const TensorSquare &ts, std::size_t cap = LinearCaps{}.linear);

struct SeparabilityElements
{
  enum class Kind { none, unique, infinite };
  Kind kind = Kind::none;
  std::optional<TensorSquareElement> element;
  std::vector<TensorSquareElement> kernel; // basis of Casimir intersected with ker mu
};

const char *to_string(SeparabilityElements::Kind k);

SeparabilityElements separability_elements(const TensorSquare &ts, const SubspaceBasis &casimir);
SeparabilityElements separability_elements(const TensorSquare &ts);
bool unique_separable(const TensorSquare &ts, const SubspaceBasis &casimir);

/// (1/|G:H|) sum_i g_i^-1 (x) g_i.
TensorSquareElement canonical_separability_element(const TensorSquare &ts);

/// e*e == e in T. Throws NotInT unless e is H-central.
bool idempotent_in_T(const TensorSquare &ts, const TensorSquareElement &e);

struct TAlgebra
{
  SubspaceBasis basis;
  /// table[a][b] holds the coordinates of basis[a]*basis[b]; left empty above the table limit.
  std::vector<std::vector<std::vector<Rational>>> table;
};

TAlgebra t_space_with_product(const TensorSquare &ts, std::size_t cap = LinearCaps{}.linear,
                              std::size_t table_limit = 48);

/// span{t_a e t_b} == T.
bool is_full_in_T(const TensorSquare &ts, const SubspaceBasis &t, const TensorSquareElement &e);
std::size_t dim_eTe(const TensorSquare &ts, const SubspaceBasis &t, const TensorSquareElement &e);

/// U = End_B A_B inside End(A); coordinate x * |G| + g is the coefficient of x in f(g).
class BimoduleEndomorphisms
{
public:
  /// Throws CapExceeded if |G|^2 > cap.
  BimoduleEndomorphisms(const FiniteGroup &g, const Subgroup &h,
                        std::size_t cap = LinearCaps{}.linear);

  const SubspaceBasis &basis() const { return basis_; }
  std::size_t dim() const { return basis_.dim(); }
  RationalVector identity() const;
  /// Projection onto the H-support.
  RationalVector projection() const;
  RationalVector compose(const RationalVector &alpha, const RationalVector &beta) const;
  GroupAlgebraElement apply(const RationalVector &f, const GroupAlgebraElement &a) const;

  bool is_full() const;
  std::size_t dim_EUE() const;

private:
  const FiniteGroup *g_;
  const Subgroup *h_;
  SubspaceBasis basis_;
};

SubspaceBasis u_space(const FiniteGroup &g, const Subgroup &h, std::size_t cap = LinearCaps{}.linear);
bool is_full_in_U(const FiniteGroup &g, const Subgroup &h, std::size_t cap = LinearCaps{}.linear);

struct FrobeniusData
{
  std::vector<ElementIndex> transversal;
  std::vector<ElementIndex> x; // g_i^-1
  std::vector<ElementIndex> y; // g_i
  GroupAlgebraElement e_index;
};

FrobeniusData frobenius_data(const FiniteGroup &g, const Subgroup &h,
                             std::vector<ElementIndex> transversal);
/// Right transversal using the lexicographically largest element of every coset.
std::vector<ElementIndex> alternate_transversal(const FiniteGroup &g, const Subgroup &h);
GroupAlgebraElement conditional_expectation(const Subgroup &h, const GroupAlgebraElement &a);
/// a = sum E(a x_i) y_i = sum x_i E(y_i a) for every a in G.
bool dual_basis_identity(const FiniteGroup &g, const Subgroup &h, const FrobeniusData &f);

struct EIndex
{
  GroupAlgebraElement element;
  bool equals_index_times_one = false;
  bool central = false;
  bool transversal_independent = false;
};

EIndex e_index(const FiniteGroup &g, const Subgroup &h);

} // namespace depthkit

#endif // DEPTHKIT_GROUPALG_HPP
