#include "depthkit/cli/findim_demo.hpp"

#include "depthkit/cli/spec_io.hpp"

namespace depthkit::cli {

namespace {

std::optional<std::size_t> parameter(const std::string &name, const std::string &prefix)
{
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size() || name.size() > prefix.size() + 2)
    return std::nullopt;
  std::size_t v = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9')
      return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(name[i] - '0');
  }
  if (v == 0)
    return std::nullopt;
  return v;
}

} // namespace

std::optional<NamedFixture> named_fixture(const std::string &name)
{
  if (name == "structural")
    return NamedFixture{structural_fixture(), std::nullopt};
  if (auto n = parameter(name, "triangular:"); n && *n >= 2 && *n <= 6)
    return NamedFixture{upper_triangular_fixture(*n), std::nullopt};
  if (auto n = parameter(name, "jordan:"); n && *n >= 2 && *n <= 6)
    return NamedFixture{jordan_fixture(*n), std::nullopt};
  if (auto n = parameter(name, "matrix:"); n && *n <= 6)
    return NamedFixture{matrix_algebra_fixture(*n), std::nullopt};
  if (auto n = parameter(name, "monoid:"); n && *n <= 6)
    return NamedFixture{monoid_fixture(*n), *n};
  return std::nullopt;
}

std::vector<std::string> fixture_names()
{
  return {"triangular:<n>", "jordan:<n>", "matrix:<n>", "monoid:<n>", "structural"};
}

json findim_report(const AlgebraInclusion &inc, std::optional<std::size_t> monoid_n, std::size_t cap)
{
  const auto &a = inc.ambient;
  json j;
  auto rad = prop_rad_check(inc);
  j["algebra"] = {{"dim", a.dim()}, {"labels", a.labels()}, {"radical_dim", rad.radical_a.dim()}};
  json basis = json::array();
  for (const auto &v : inc.subalgebra.vectors)
    basis.push_back(vector_json(v, a.labels()));
  j["subalgebra"] = {{"dim", inc.subalgebra.dim()},
                     {"basis", std::move(basis)},
                     {"radical_dim", rad.radical_b.dim()},
                     {"radical_is_ideal_of_algebra", rad.radical_b_is_ideal}};
  auto v = is_separable_extension(inc, cap);
  j["separable"] = v.separable;
  j["tensor_square_dim"] = v.quotient_dim;
  j["solution_kernel_dim"] = v.solution_kernel_dim;
  if (v.witness) {
    std::vector<std::string> pairs;
    for (const auto &p : a.labels())
      for (const auto &r : a.labels())
        pairs.push_back(p + " (x) " + r);
    j["witness"] = vector_json(*v.witness, pairs);
    j["witness_valid"] = is_separability_element(inc, *v.witness, cap);
  } else {
    j["witness"] = nullptr;
  }
  j["radical_criterion"] = to_string(rad.verdict);
  if (monoid_n) {
    auto d = monoid_decomposition(*monoid_n);
    j["decomposition"] = {{"dim_eM", d.dim_eM},
                          {"dim_complement", d.dim_complement},
                          {"e_idempotent", d.e_idempotent},
                          {"direct", d.direct},
                          {"eM_is_cyclic_group_algebra", d.eM_is_cyclic_group_algebra},
                          {"complement_is_truncated_polynomial", d.complement_is_truncated_polynomial}};
  }
  return j;
}

} // namespace depthkit::cli
