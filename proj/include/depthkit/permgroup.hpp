#ifndef DEPTHKIT_PERMGROUP_HPP
#define DEPTHKIT_PERMGROUP_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace depthkit {

inline constexpr std::size_t default_group_cap = 20000;

/// Bijection of {0, ..., degree-1}, stored as its image sequence.
class Permutation
{
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles on 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<std::uint32_t>> cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const { return images_; }

  /// Function composition: (a * b)(x) = a(b(x)).
  Permutation operator*(const Permutation &rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b)
  { return a.images_ <=> b.images_; }

private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash
{
  std::size_t operator()(const Permutation &p) const noexcept;
};

using ElementIndex = std::uint32_t;
/// Classes of a partition of group elements; each class sorted ascending.
using Partition = std::vector<std::vector<ElementIndex>>;

/// Sorts classes by (size, minimal element); the convention for all reported partitions.
void canonicalize(Partition &p);

class Subgroup;

/// Permutation group with all elements enumerated, sorted lexicographically.
/// Element 0 is the identity. Products and inverses are answered by index.
class FiniteGroup
{
public:
  FiniteGroup(std::vector<Permutation> generators, std::size_t cap = default_group_cap,
              std::string name = {});

  const std::string &name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation> &generators() const { return generators_; }
  const std::vector<Permutation> &elements() const { return elements_; }
  const Permutation &element(ElementIndex i) const { return elements_[i]; }
  std::vector<ElementIndex> generator_indices() const;

  /// Throws ElementNotInGroup.
  ElementIndex index_of(const Permutation &p) const;
  bool contains(const Permutation &p) const;

  ElementIndex mul(ElementIndex a, ElementIndex b) const;
  ElementIndex inv(ElementIndex a) const { return inverse_[a]; }
  ElementIndex conj(ElementIndex g, ElementIndex x) const; // g x g^-1
  std::size_t element_order(ElementIndex a) const;
  std::size_t exponent() const;
  bool is_abelian() const;

private:
  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementIndex, PermutationHash> index_;
  std::vector<ElementIndex> inverse_;
  std::vector<ElementIndex> table_; // Cayley table when small enough
};

/// Closure of generators under composition, sorted lexicographically. Throws CapExceeded.
std::vector<Permutation> enumerate(std::span<const Permutation> generators,
                                   std::size_t cap = default_group_cap);

/// Subset of a parent group closed under products, given by element indices.
class Subgroup
{
public:
  /// Throws NotASubgroup if a generator is outside the parent.
  static Subgroup generated_by(const FiniteGroup &parent, std::span<const Permutation> generators);
  static Subgroup generated_by_indices(const FiniteGroup &parent,
                                       std::span<const ElementIndex> generators);
  /// Throws NotASubgroup unless members are closed under products.
  static Subgroup from_members(const FiniteGroup &parent, std::vector<ElementIndex> members);
  static Subgroup whole(const FiniteGroup &parent);
  static Subgroup trivial(const FiniteGroup &parent);

  const FiniteGroup &parent() const { return *parent_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const { return parent_->order() / members_.size(); }
  const std::vector<ElementIndex> &members() const { return members_; }
  const std::vector<ElementIndex> &generators() const { return generators_; }
  bool contains(ElementIndex g) const { return mask_[g]; }
  /// The subgroup as a standalone permutation group (same degree).
  FiniteGroup as_group(std::string name = {}) const;

  friend bool operator==(const Subgroup &a, const Subgroup &b) { return a.members_ == b.members_; }

private:
  Subgroup(const FiniteGroup &parent, std::vector<ElementIndex> members,
           std::vector<ElementIndex> generators);

  const FiniteGroup *parent_;
  std::vector<ElementIndex> members_;
  std::vector<ElementIndex> generators_;
  std::vector<bool> mask_;
};

Partition conjugacy_classes(const FiniteGroup &g);
/// Throws ElementNotInGroup.
Subgroup centralizer(const FiniteGroup &g, const Permutation &a);
Subgroup centralizer(const FiniteGroup &g, ElementIndex a);
Subgroup center(const FiniteGroup &g);
Subgroup derived_subgroup(const FiniteGroup &g);

/// One representative per right coset Hg; identity first, then the
/// lexicographically minimal representative of each remaining coset.
std::vector<ElementIndex> right_transversal(const FiniteGroup &g, const Subgroup &h);

/// Orbits of G under conjugation by H.
Partition h_orbits(const FiniteGroup &g, const Subgroup &h);

/// Every conjugacy class of G is a single H-orbit.
bool property_S(const FiniteGroup &g, const Subgroup &h);
/// |H C_G(a)| = |G| for every a in G.
bool lemma_S_via_centralizers(const FiniteGroup &g, const Subgroup &h);
/// |H C_G(h)| = |G| for every h in H (depth one over a field of characteristic zero).
bool depth1_group(const FiniteGroup &g, const Subgroup &h);
/// |H Z(G)| = |G|.
bool hz_condition(const FiniteGroup &g, const Subgroup &h);
bool is_normal(const FiniteGroup &g, const Subgroup &h);

/// Size of the product set A B, computed by hashing products.
std::size_t product_set_size(const FiniteGroup &g, std::span<const ElementIndex> a,
                             std::span<const ElementIndex> b);

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup &g);
/// Every subgroup, by joining cyclic subgroups to a fixed point. Intended for small groups.
std::vector<Subgroup> all_subgroups(const FiniteGroup &g);

} // namespace depthkit

#endif // DEPTHKIT_PERMGROUP_HPP
