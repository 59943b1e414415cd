#ifndef DEPTHKIT_CLI_CORPUS_HPP
#define DEPTHKIT_CLI_CORPUS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "depthkit/permgroup.hpp"

namespace depthkit::cli {

struct NamedGroup
{
  std::string name;
  std::vector<Permutation> generators;
};

/// C<n>, D<n> (order 2n), Q<4m> (dicyclic), S<n>, A<n>, S3xC2, C2xC2, E27 (extraspecial, exponent 3).
std::optional<NamedGroup> named_group(const std::string &name);
/// The groups of the verification corpus, in corpus order.
std::vector<NamedGroup> corpus_groups();

struct CorpusEntry
{
  std::string group_name;
  std::string subgroup_name;
  std::shared_ptr<const FiniteGroup> group;
  Subgroup subgroup;

  std::string id() const { return group_name + "/" + subgroup_name; }
};

/// Whole, trivial, derived and cyclic subgroups, plus all subgroups when |G| <= 16;
/// duplicates keep their first label.
std::vector<CorpusEntry> corpus_entries(const std::shared_ptr<const FiniteGroup> &g,
                                        const std::string &group_name);
/// S_n < S_{n+1} (stabilizer of the last point) for n = first..last.
std::vector<CorpusEntry> symmetric_chain(std::size_t first = 2, std::size_t last = 5);
/// Whole corpus followed by the symmetric chain.
std::vector<CorpusEntry> full_corpus();

/// Shell-style glob with '*' and '?'.
bool glob_match(const std::string &pattern, const std::string &text);

} // namespace depthkit::cli

#endif // DEPTHKIT_CLI_CORPUS_HPP
