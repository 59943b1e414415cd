#ifndef DEPTHKIT_CLI_SPEC_IO_HPP
#define DEPTHKIT_CLI_SPEC_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "depthkit/findim.hpp"
#include "depthkit/permgroup.hpp"

namespace depthkit::cli {

using nlohmann::json;

/// Parses JSON text; syntax errors become ParseError with 1-based line and column.
json parse_json(const std::string &text, const std::string &source = "<input>");
/// Reads a file, or stdin for "-".
std::string read_text(const std::string &path);

/// {"name": ..., "degree": n, "generators": [[images...] | "(0 1)(2 3)", ...]}
struct GroupSpec
{
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

GroupSpec parse_group_spec(const json &j);
/// Parses a 0-based cycle string such as "(0 1 2)(3 4)".
Permutation parse_cycles(const std::string &text, std::size_t degree);

/// {"name": ..., "generator_indices": [...]} or {"generators": [...]} or {"special": "trivial" | "whole" | "derived" | "center"}
struct SubgroupSpec
{
  std::string name;
  std::optional<std::vector<std::size_t>> generator_indices;
  std::vector<Permutation> generators;
  std::string special;
};

SubgroupSpec parse_subgroup_spec(const json &j, std::size_t degree);
/// Throws NotASubgroup.
Subgroup resolve_subgroup(const FiniteGroup &g, const SubgroupSpec &s);

/// An algebra together with the matrices of its basis when given by the shorthand.
struct AlgebraSpec
{
  std::optional<StructureConstantAlgebra> algebra;
  std::size_t matrix_size = 0;
  std::vector<SparseMatrix> matrices;
};

/// Either {"labels", "constants": [[i, j, k, "c"]...], "unit": [[i, "c"]...]}
/// or {"matrix_size": n, "basis": [[[row, col, "c"]...]...], "labels"?}.
AlgebraSpec parse_algebra_spec(const json &j);

/// {"vectors": [[[i, "c"]...]...]}, {"matrices": [...]} (matrix shorthand ambient only),
/// either optionally with "closure": true.
AlgebraInclusion parse_subalgebra_spec(const json &j, const AlgebraSpec &ambient);

linalg::Rational parse_rational_value(const json &j);
json rational_json(const linalg::Rational &q);
/// Sparse vector as [[index, "p/q"], ...].
json vector_json(const linalg::RationalVector &v);
json vector_json(const linalg::RationalVector &v, const std::vector<std::string> &labels);
json subspace_json(const linalg::SubspaceBasis &b);

} // namespace depthkit::cli

#endif // DEPTHKIT_CLI_SPEC_IO_HPP
