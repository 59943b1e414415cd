#ifndef DEPTHKIT_CLI_FINDIM_DEMO_HPP
#define DEPTHKIT_CLI_FINDIM_DEMO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "depthkit/findim.hpp"

namespace depthkit::cli {

using nlohmann::json;

struct NamedFixture
{
  AlgebraInclusion inclusion;
  /// Set for monoid fixtures, whose report includes the decomposition.
  std::optional<std::size_t> monoid_n;
};

/// "triangular:<n>", "jordan:<n>", "matrix:<n>", "monoid:<n>", "structural".
std::optional<NamedFixture> named_fixture(const std::string &name);
std::vector<std::string> fixture_names();

/// Radicals, separability verdict, witness and the radical criterion.
json findim_report(const AlgebraInclusion &inc, std::optional<std::size_t> monoid_n = std::nullopt,
                   std::size_t cap = 4096);

} // namespace depthkit::cli

#endif // DEPTHKIT_CLI_FINDIM_DEMO_HPP
