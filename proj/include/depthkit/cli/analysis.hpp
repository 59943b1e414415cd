#ifndef DEPTHKIT_CLI_ANALYSIS_HPP
#define DEPTHKIT_CLI_ANALYSIS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "depthkit/chartable.hpp"
#include "depthkit/cli/corpus.hpp"
#include "depthkit/depth.hpp"
#include "depthkit/groupalg.hpp"

namespace depthkit::cli {

using nlohmann::json;

struct AnalysisOptions
{
  std::uint64_t seed = default_seed;
  std::size_t cap_group = default_group_cap;
  LinearCaps caps;
  /// Skip every computation inside the group algebra.
  bool matrix_only = false;
  /// Throw CapExceeded when a linear space is over its cap instead of skipping it.
  bool strict_caps = false;
  bool timing = false;
};

enum class Status { agree, disagree, skipped };
const char *to_string(Status s);

struct Check
{
  std::string name;
  Status status = Status::skipped;
  std::string detail;
};

struct SeparabilityFacts
{
  SeparabilityElements::Kind kind = SeparabilityElements::Kind::none;
  std::size_t casimir_dim = 0;
  std::size_t kernel_dim = 0;
  bool canonical_mu_one = false;
  bool canonical_a_central = false;
  bool canonical_idempotent = false;
  bool canonical_in_solution_set = false;

  bool unique() const { return kind == SeparabilityElements::Kind::unique; }
};

struct FullnessFacts
{
  std::optional<std::size_t> t_dim, eTe_dim, u_dim, EUE_dim;
  std::optional<bool> full_in_T, full_in_U;
  /// Associativity and unit of the product table on T, checked when T is small.
  std::optional<bool> t_product_ok;
};

struct AnalysisReport
{
  std::string group_name, subgroup_name;
  std::size_t group_order = 0, subgroup_order = 0, index = 0, degree = 0;
  std::size_t class_count = 0, subgroup_class_count = 0, orbit_count = 0;
  std::size_t center_order = 0;

  bool normal = false, property_S = false, lemma_S = false, hz_condition = false;
  bool depth1_group = false, burciu_depth1 = false;

  InclusionMatrix inclusion;
  std::size_t min_depth = 0, min_odd_depth = 0, min_even_depth = 0, min_h_depth = 0;
  bool s_diagonal = false, t_diagonal = false;

  std::size_t centralizer_dim = 0, center_dim = 0;
  std::optional<SeparabilityFacts> separability;
  FullnessFacts fullness;

  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::uint64_t prime = 0, seed = 0;
  std::map<std::string, double> timing_ms;

  std::string id() const { return group_name + "/" + subgroup_name; }
  std::size_t count(Status s) const;
};

/// Throws CapExceeded (group cap, or tensor cap under strict_caps) and the module errors.
AnalysisReport analyze(const FiniteGroup &g, const Subgroup &h, const std::string &group_name,
                       const std::string &subgroup_name, const AnalysisOptions &opts);

json report_json(const AnalysisReport &r, bool with_timing);

std::vector<std::string> tsv_header();
std::vector<std::string> tsv_row(const AnalysisReport &r);
std::string tsv_line(const std::vector<std::string> &cells);

struct CorpusResult
{
  std::vector<AnalysisReport> reports; // corpus order
  /// Per check name: counts of AGREE, DISAGREE, SKIPPED.
  std::map<std::string, std::array<std::size_t, 3>> by_check;
  std::size_t agree = 0, disagree = 0, skipped = 0;
};

/// Runs the entries on a pool of `jobs` threads; an entry that throws is reported
/// as a disagreement of the check "analysis_completed".
CorpusResult run_corpus(const std::vector<CorpusEntry> &entries, const AnalysisOptions &opts,
                        std::size_t jobs = 1);

json corpus_json(const CorpusResult &c, bool with_timing);

} // namespace depthkit::cli

#endif // DEPTHKIT_CLI_ANALYSIS_HPP
