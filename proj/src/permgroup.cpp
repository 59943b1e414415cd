#include "depthkit/permgroup.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>

#include "depthkit/errors.hpp"

namespace depthkit {

namespace {
constexpr std::size_t cayley_table_limit = 2048;
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error("image sequence is not a bijection on {0,...," +
                  std::to_string(images_.size()) + "-1}");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::initializer_list<std::initializer_list<std::uint32_t>> cycles)
{
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  for (const auto &cycle : cycles) {
    std::vector<std::uint32_t> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree)
        throw Error("cycle point out of range");
      im[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation &rhs) const
{
  if (rhs.degree() != degree())
    throw Error("composing permutations of different degree");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[x] = images_[rhs.images_[x]];
  return out;
}

Permutation Permutation::inverse() const
{
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[images_[x]] = static_cast<std::uint32_t>(x);
  return out;
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

std::size_t Permutation::order() const
{
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x])
      continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycle_string() const
{
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x)
      continue;
    out += "(";
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (y != x)
        out += " ";
      out += std::to_string(y);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

void canonicalize(Partition &p)
{
  for (auto &c : p)
    std::sort(c.begin(), c.end());
  std::sort(p.begin(), p.end(), [](const auto &a, const auto &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a.front() < b.front();
  });
}

std::vector<Permutation> enumerate(std::span<const Permutation> generators, std::size_t cap)
{
  if (generators.empty())
    throw Error("cannot enumerate a group from an empty generator list");
  const std::size_t degree = generators.front().degree();
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw Error("generators have different degrees");
  std::unordered_map<Permutation, bool, PermutationHash> seen;
  std::vector<Permutation> out;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(degree);
  seen.emplace(id, true);
  out.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto &s : generators) {
      Permutation y = s * x;
      if (seen.emplace(y, true).second) {
        if (out.size() >= cap)
          throw CapExceeded("group closure", out.size() + 1, cap);
        out.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroup::FiniteGroup(std::vector<Permutation> generators, std::size_t cap, std::string name)
: name_(std::move(name)), generators_(std::move(generators))
{
  elements_ = enumerate(generators_, cap);
  degree_ = elements_.front().degree();
  const std::size_t n = elements_.size();
  index_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i)
    index_.emplace(elements_[i], static_cast<ElementIndex>(i));
  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    inverse_[i] = index_.at(elements_[i].inverse());
  if (n <= cayley_table_limit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
  }
}

std::vector<ElementIndex> FiniteGroup::generator_indices() const
{
  std::vector<ElementIndex> out;
  for (const auto &g : generators_)
    out.push_back(index_of(g));
  return out;
}

ElementIndex FiniteGroup::index_of(const Permutation &p) const
{
  auto it = index_.find(p);
  if (it == index_.end())
    throw ElementNotInGroup("permutation " + p.to_cycle_string() + " is not in the group");
  return it->second;
}

bool FiniteGroup::contains(const Permutation &p) const { return index_.count(p) > 0; }

ElementIndex FiniteGroup::mul(ElementIndex a, ElementIndex b) const
{
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

ElementIndex FiniteGroup::conj(ElementIndex g, ElementIndex x) const
{
  return mul(mul(g, x), inverse_[g]);
}

std::size_t FiniteGroup::element_order(ElementIndex a) const { return elements_[a].order(); }

std::size_t FiniteGroup::exponent() const
{
  std::size_t e = 1;
  for (const auto &p : elements_)
    e = std::lcm(e, p.order());
  return e;
}

bool FiniteGroup::is_abelian() const
{
  auto gens = generator_indices();
  for (auto a : gens)
    for (auto b : gens)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

namespace {

std::vector<ElementIndex> closure(const FiniteGroup &g, std::span<const ElementIndex> gens)
{
  std::vector<bool> seen(g.order(), false);
  std::vector<ElementIndex> out{0};
  seen[0] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (auto s : gens) {
      ElementIndex y = g.mul(s, out[k]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Greedy generating set drawn from a closed subset, in index order.
std::vector<ElementIndex> small_generating_set(const FiniteGroup &g,
                                               const std::vector<ElementIndex> &members)
{
  std::vector<ElementIndex> gens;
  std::vector<bool> in_span(g.order(), false);
  in_span[0] = true;
  std::size_t spanned = 1;
  for (auto m : members) {
    if (spanned == members.size())
      break;
    if (in_span[m])
      continue;
    gens.push_back(m);
    auto c = closure(g, gens);
    for (auto x : c)
      in_span[x] = true;
    spanned = c.size();
  }
  return gens;
}

} // namespace

Subgroup::Subgroup(const FiniteGroup &parent, std::vector<ElementIndex> members,
                   std::vector<ElementIndex> generators)
: parent_(&parent), members_(std::move(members)), generators_(std::move(generators)),
  mask_(parent.order(), false)
{
  for (auto m : members_)
    mask_[m] = true;
  if (parent.order() % members_.size() != 0)
    throw NotASubgroup("subgroup order does not divide the group order");
}

Subgroup Subgroup::generated_by(const FiniteGroup &parent, std::span<const Permutation> generators)
{
  std::vector<ElementIndex> idx;
  for (const auto &p : generators) {
    if (p.degree() != parent.degree() || !parent.contains(p))
      throw NotASubgroup("generator " + p.to_cycle_string() + " is not in the parent group");
    idx.push_back(parent.index_of(p));
  }
  return generated_by_indices(parent, idx);
}

Subgroup Subgroup::generated_by_indices(const FiniteGroup &parent,
                                        std::span<const ElementIndex> generators)
{
  std::vector<ElementIndex> gens;
  for (auto g : generators) {
    if (g >= parent.order())
      throw NotASubgroup("generator index out of range");
    if (g != 0)
      gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto members = closure(parent, gens);
  return Subgroup(parent, std::move(members), std::move(gens));
}

Subgroup Subgroup::from_members(const FiniteGroup &parent, std::vector<ElementIndex> members)
{
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0)
    throw NotASubgroup("subset does not contain the identity");
  std::vector<bool> mask(parent.order(), false);
  for (auto m : members)
    mask[m] = true;
  for (auto a : members)
    for (auto b : members)
      if (!mask[parent.mul(a, b)])
        throw NotASubgroup("subset is not closed under products");
  auto gens = small_generating_set(parent, members);
  return Subgroup(parent, std::move(members), std::move(gens));
}

Subgroup Subgroup::whole(const FiniteGroup &parent)
{
  auto gens = parent.generator_indices();
  return generated_by_indices(parent, gens);
}

Subgroup Subgroup::trivial(const FiniteGroup &parent) { return Subgroup(parent, {0}, {}); }

FiniteGroup Subgroup::as_group(std::string name) const
{
  std::vector<Permutation> gens;
  for (auto g : generators_)
    gens.push_back(parent_->element(g));
  if (gens.empty())
    gens.push_back(Permutation::identity(parent_->degree()));
  return FiniteGroup(std::move(gens), members_.size(), std::move(name));
}

namespace {

Partition orbits_under_conjugation(const FiniteGroup &g, std::span<const ElementIndex> actors)
{
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  Partition out;
  for (ElementIndex x = 0; x < n; ++x) {
    if (seen[x])
      continue;
    std::vector<ElementIndex> orbit{x};
    seen[x] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (auto s : actors) {
        ElementIndex y = g.conj(s, orbit[k]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    out.push_back(std::move(orbit));
  }
  canonicalize(out);
  return out;
}

void require_subgroup_of(const FiniteGroup &g, const Subgroup &h)
{
  if (&h.parent() != &g)
    throw NotASubgroup("subgroup belongs to a different parent group");
}

} // namespace

Partition conjugacy_classes(const FiniteGroup &g)
{
  auto gens = g.generator_indices();
  return orbits_under_conjugation(g, gens);
}

Subgroup centralizer(const FiniteGroup &g, const Permutation &a)
{
  return centralizer(g, g.index_of(a));
}

Subgroup centralizer(const FiniteGroup &g, ElementIndex a)
{
  if (a >= g.order())
    throw ElementNotInGroup("element index out of range");
  std::vector<ElementIndex> members;
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (g.mul(x, a) == g.mul(a, x))
      members.push_back(x);
  auto gens = small_generating_set(g, members);
  return Subgroup::generated_by_indices(g, gens);
}

Subgroup center(const FiniteGroup &g)
{
  auto gens = g.generator_indices();
  std::vector<ElementIndex> members;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    bool central = std::all_of(gens.begin(), gens.end(),
                               [&](ElementIndex s) { return g.mul(s, x) == g.mul(x, s); });
    if (central)
      members.push_back(x);
  }
  auto sg = small_generating_set(g, members);
  return Subgroup::generated_by_indices(g, sg);
}

Subgroup derived_subgroup(const FiniteGroup &g)
{
  auto gens = g.generator_indices();
  std::vector<ElementIndex> comm;
  for (auto a : gens)
    for (auto b : gens)
      comm.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  Subgroup k = Subgroup::generated_by_indices(g, comm);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<ElementIndex> extra = k.generators();
    for (auto s : gens)
      for (auto x : k.generators()) {
        ElementIndex y = g.conj(s, x);
        if (!k.contains(y)) {
          extra.push_back(y);
          grew = true;
        }
      }
    if (grew)
      k = Subgroup::generated_by_indices(g, extra);
  }
  return k;
}

std::vector<ElementIndex> right_transversal(const FiniteGroup &g, const Subgroup &h)
{
  require_subgroup_of(g, h);
  std::vector<bool> covered(g.order(), false);
  std::vector<ElementIndex> reps;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (covered[x])
      continue;
    reps.push_back(x);
    for (auto m : h.members())
      covered[g.mul(m, x)] = true;
  }
  return reps;
}

Partition h_orbits(const FiniteGroup &g, const Subgroup &h)
{
  require_subgroup_of(g, h);
  return orbits_under_conjugation(g, h.generators());
}

bool property_S(const FiniteGroup &g, const Subgroup &h)
{
  return h_orbits(g, h) == conjugacy_classes(g);
}

std::size_t product_set_size(const FiniteGroup &g, std::span<const ElementIndex> a,
                             std::span<const ElementIndex> b)
{
  std::vector<bool> hit(g.order(), false);
  std::size_t count = 0;
  for (auto x : a)
    for (auto y : b) {
      ElementIndex z = g.mul(x, y);
      if (!hit[z]) {
        hit[z] = true;
        ++count;
      }
    }
  return count;
}

bool lemma_S_via_centralizers(const FiniteGroup &g, const Subgroup &h)
{
  require_subgroup_of(g, h);
  for (ElementIndex a = 0; a < g.order(); ++a) {
    auto c = centralizer(g, a);
    if (product_set_size(g, h.members(), c.members()) != g.order())
      return false;
  }
  return true;
}

bool depth1_group(const FiniteGroup &g, const Subgroup &h)
{
  require_subgroup_of(g, h);
  for (auto x : h.members()) {
    auto c = centralizer(g, x);
    if (product_set_size(g, h.members(), c.members()) != g.order())
      return false;
  }
  return true;
}

bool hz_condition(const FiniteGroup &g, const Subgroup &h)
{
  require_subgroup_of(g, h);
  auto z = center(g);
  return product_set_size(g, h.members(), z.members()) == g.order();
}

bool is_normal(const FiniteGroup &g, const Subgroup &h)
{
  require_subgroup_of(g, h);
  for (auto s : g.generator_indices())
    for (auto x : h.generators())
      if (!h.contains(g.conj(s, x)))
        return false;
  return true;
}

namespace {

void sort_subgroups(std::vector<Subgroup> &v)
{
  std::sort(v.begin(), v.end(), [](const Subgroup &a, const Subgroup &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.members() < b.members();
  });
}

} // namespace

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup &g)
{
  std::set<std::vector<ElementIndex>> seen;
  std::vector<Subgroup> out;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    std::array<ElementIndex, 1> gen{x};
    Subgroup c = Subgroup::generated_by_indices(g, gen);
    if (seen.insert(c.members()).second)
      out.push_back(std::move(c));
  }
  sort_subgroups(out);
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup &g)
{
  auto cyclic = cyclic_subgroups(g);
  std::set<std::vector<ElementIndex>> seen;
  std::vector<Subgroup> out;
  for (const auto &c : cyclic) {
    seen.insert(c.members());
    out.push_back(c);
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto &c : cyclic) {
      if (std::all_of(c.generators().begin(), c.generators().end(),
                      [&](ElementIndex x) { return out[k].contains(x); }))
        continue;
      std::vector<ElementIndex> gens = out[k].generators();
      gens.insert(gens.end(), c.generators().begin(), c.generators().end());
      Subgroup j = Subgroup::generated_by_indices(g, gens);
      if (seen.insert(j.members()).second)
        out.push_back(std::move(j));
    }
  }
  sort_subgroups(out);
  return out;
}

} // namespace depthkit
