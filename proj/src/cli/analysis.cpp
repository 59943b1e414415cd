#include "depthkit/cli/analysis.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "depthkit/errors.hpp"

namespace depthkit::cli {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch
{
public:
  explicit Stopwatch(std::map<std::string, double> &out) : out_(out), last_(Clock::now()) {}

  void lap(const std::string &name)
  {
    auto now = Clock::now();
    out_[name] += std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

private:
  std::map<std::string, double> &out_;
  Clock::time_point last_;
};

std::string yes(bool b) { return b ? "true" : "false"; }

class Checklist
{
public:
  explicit Checklist(std::vector<Check> &out) : out_(out) {}

  void expect(const std::string &name, bool ok, std::string detail = {})
  {
    out_.push_back({name, ok ? Status::agree : Status::disagree, std::move(detail)});
  }
  void skip(const std::string &name, std::string why)
  {
    out_.push_back({name, Status::skipped, std::move(why)});
  }

private:
  std::vector<Check> &out_;
};

bool is_divisor_sum_ok(const InclusionMatrix &m, std::size_t index, std::string &detail)
{
  for (std::size_t j = 0; j < m.cols; ++j) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < m.rows; ++i)
      s += m.entries[i][j] * m.row_degrees[i];
    if (s != m.col_degrees[j]) {
      detail = "column " + std::to_string(j);
      return false;
    }
  }
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < m.cols; ++j)
      s += m.entries[i][j] * m.col_degrees[j];
    if (s != index * m.row_degrees[i]) {
      detail = "row " + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool table_associative_with_unit(const TAlgebra &t, const std::vector<Rational> &unit)
{
  const std::size_t d = t.basis.dim();
  auto mul = [&](const std::vector<Rational> &x, const std::vector<Rational> &y) {
    std::vector<Rational> z(d);
    for (std::size_t a = 0; a < d; ++a) {
      if (x[a] == 0)
        continue;
      for (std::size_t b = 0; b < d; ++b) {
        if (y[b] == 0)
          continue;
        Rational c = x[a] * y[b];
        for (std::size_t k = 0; k < d; ++k)
          if (t.table[a][b][k] != 0)
            z[k] += c * t.table[a][b][k];
      }
    }
    return z;
  };
  std::vector<std::vector<Rational>> e(d, std::vector<Rational>(d));
  for (std::size_t a = 0; a < d; ++a)
    e[a][a] = 1;
  for (std::size_t a = 0; a < d; ++a) {
    if (mul(unit, e[a]) != e[a] || mul(e[a], unit) != e[a])
      return false;
    for (std::size_t b = 0; b < d; ++b) {
      const auto &ab = t.table[a][b];
      for (std::size_t c = 0; c < d; ++c)
        if (mul(ab, e[c]) != mul(e[a], t.table[b][c]))
          return false;
    }
  }
  return true;
}

void group_algebra_part(const FiniteGroup &g, const Subgroup &h, const AnalysisOptions &opts,
                        AnalysisReport &r, Stopwatch &sw)
{
  std::optional<TensorSquare> ts;
  try {
    ts.emplace(g, h, opts.caps.tensor);
  } catch (const CapExceeded &e) {
    if (opts.strict_caps)
      throw;
    r.notes.push_back(std::string("separability skipped: ") + e.what());
    return;
  }
  auto cas = casimir_space(*ts);
  auto sep = separability_elements(*ts, cas);
  auto e = canonical_separability_element(*ts);
  SeparabilityFacts f;
  f.kind = sep.kind;
  f.casimir_dim = cas.dim();
  f.kernel_dim = sep.kernel.size();
  f.canonical_mu_one = ts->multiplication(e) == ga_identity();
  f.canonical_a_central = ts->is_a_central(e);
  f.canonical_idempotent = ts->is_h_central(e) && idempotent_in_T(*ts, e);
  f.canonical_in_solution_set = cas.contains(e) && f.canonical_mu_one &&
                                (sep.kind != SeparabilityElements::Kind::unique || *sep.element == e);
  r.separability = f;
  sw.lap("separability");

  try {
    auto t = t_space_with_product(*ts, opts.caps.linear, 24);
    r.fullness.t_dim = t.basis.dim();
    r.fullness.full_in_T = is_full_in_T(*ts, t.basis, e);
    r.fullness.eTe_dim = dim_eTe(*ts, t.basis, e);
    if (!t.table.empty())
      r.fullness.t_product_ok =
          table_associative_with_unit(t, t.basis.coordinates(linalg::unit_vector(0)));
  } catch (const CapExceeded &x) {
    if (opts.strict_caps)
      throw;
    r.notes.push_back(std::string("T skipped: ") + x.what());
  }
  sw.lap("t_fullness");

  try {
    BimoduleEndomorphisms u(g, h, opts.caps.linear);
    r.fullness.u_dim = u.dim();
    r.fullness.full_in_U = u.is_full();
    r.fullness.EUE_dim = u.dim_EUE();
  } catch (const CapExceeded &x) {
    if (opts.strict_caps)
      throw;
    r.notes.push_back(std::string("U skipped: ") + x.what());
  }
  sw.lap("u_fullness");
}

void agreement_checks(const AnalysisReport &r, const ExtensionTables &tables,
                      const InclusionMatrix &induced, bool e_index_ok, bool dual_basis_ok,
                      bool orbits_refine, std::vector<Check> &out)
{
  Checklist c(out);
  const auto &sep = r.separability;
  const auto &fu = r.fullness;
  const std::string no_sep = "group algebra computations skipped";

  c.expect("centralizer_dim_is_orbit_count", r.centralizer_dim == r.orbit_count,
           std::to_string(r.centralizer_dim) + " vs " + std::to_string(r.orbit_count));
  c.expect("center_dim_is_class_count", r.center_dim == r.class_count);
  if (sep)
    c.expect("casimir_dim_is_orbit_count", sep->casimir_dim == r.orbit_count,
             std::to_string(sep->casimir_dim) + " vs " + std::to_string(r.orbit_count));
  else
    c.skip("casimir_dim_is_orbit_count", no_sep);
  c.expect("orbits_refine_classes", orbits_refine);

  if (sep) {
    c.expect("property_S_iff_unique_separable", r.property_S == sep->unique(),
             "property_S=" + yes(r.property_S) + " unique_separable=" + yes(sep->unique()));
    c.expect("unique_separable_iff_centralizer_is_center",
             sep->unique() == (r.centralizer_dim == r.center_dim));
  } else {
    c.skip("property_S_iff_unique_separable", no_sep);
    c.skip("unique_separable_iff_centralizer_is_center", no_sep);
  }
  c.expect("property_S_iff_centralizer_lemma", r.property_S == r.lemma_S);

  const bool depth_one = r.min_depth == 1;
  c.expect("depth_one_group_vs_matrix", r.depth1_group == depth_one,
           "depth1_group=" + yes(r.depth1_group) + " min_depth=" + std::to_string(r.min_depth));
  c.expect("depth_one_group_vs_burciu", r.depth1_group == r.burciu_depth1);
  c.expect("depth_one_group_vs_s_diagonal", r.depth1_group == r.s_diagonal);
  if (fu.full_in_U)
    c.expect("depth_one_group_vs_full_in_U", r.depth1_group == *fu.full_in_U,
             "full_in_U=" + yes(*fu.full_in_U));
  else
    c.skip("depth_one_group_vs_full_in_U", "U over cap");

  c.expect("h_depth_one_vs_t_diagonal", (r.min_h_depth == 1) == r.t_diagonal);
  if (fu.full_in_T)
    c.expect("h_depth_one_vs_full_in_T", (r.min_h_depth == 1) == *fu.full_in_T,
             "full_in_T=" + yes(*fu.full_in_T) + " min_h_depth=" + std::to_string(r.min_h_depth));
  else
    c.skip("h_depth_one_vs_full_in_T", "T over cap");

  if (sep) {
    bool u = sep->unique();
    c.expect("unique_separable_implies_depth_one",
             !u || (r.depth1_group && r.burciu_depth1 && depth_one));
    if (fu.full_in_U)
      c.expect("unique_separable_implies_full_in_U", !u || *fu.full_in_U);
    else
      c.skip("unique_separable_implies_full_in_U", "U over cap");
    c.expect("hz_implies_unique_separable", !r.hz_condition || u);
  } else {
    c.skip("unique_separable_implies_depth_one", no_sep);
    c.skip("unique_separable_implies_full_in_U", no_sep);
    c.skip("hz_implies_unique_separable", no_sep);
  }
  c.expect("hz_implies_depth_one", !r.hz_condition || (r.depth1_group && depth_one));
  if (r.group_order < 64 && r.group_order != 48)
    c.expect("property_S_implies_hz_small_order", !r.property_S || r.hz_condition);
  else
    c.skip("property_S_implies_hz_small_order", "order outside the cited range");

  c.expect("depth_at_most_two_iff_normal", (r.min_depth <= 2) == r.normal,
           "min_depth=" + std::to_string(r.min_depth) + " normal=" + yes(r.normal));
  auto gap = r.min_depth > r.min_h_depth ? r.min_depth - r.min_h_depth : r.min_h_depth - r.min_depth;
  c.expect("depth_gap_at_most_two", gap <= 2);
  c.expect("odd_depth_at_most_even_depth_plus_one", r.min_odd_depth <= r.min_even_depth + 1);
  c.expect("even_depth_at_most_odd_depth_plus_one", r.min_even_depth <= r.min_odd_depth + 1);

  if (sep) {
    c.expect("canonical_element_mu_is_one", sep->canonical_mu_one);
    c.expect("canonical_element_a_central", sep->canonical_a_central);
    c.expect("canonical_element_idempotent_in_T", sep->canonical_idempotent);
    c.expect("canonical_element_in_solution_set", sep->canonical_in_solution_set);
  } else {
    for (const char *n : {"canonical_element_mu_is_one", "canonical_element_a_central",
                          "canonical_element_idempotent_in_T", "canonical_element_in_solution_set"})
      c.skip(n, no_sep);
  }

  c.expect("group_degrees_square_sum", degrees_square_sum_ok(tables.group));
  c.expect("group_rows_orthonormal", rows_orthonormal(tables.group));
  c.expect("subgroup_degrees_square_sum", degrees_square_sum_ok(tables.subgroup));
  c.expect("subgroup_rows_orthonormal", rows_orthonormal(tables.subgroup));
  std::string where;
  bool sums = is_divisor_sum_ok(r.inclusion, r.index, where);
  c.expect("inclusion_dimension_sums", sums, where);
  c.expect("frobenius_reciprocity", induced.entries == r.inclusion.entries);

  if (fu.eTe_dim)
    c.expect("eTe_dim_is_class_count", *fu.eTe_dim == r.class_count,
             std::to_string(*fu.eTe_dim) + " vs " + std::to_string(r.class_count));
  else
    c.skip("eTe_dim_is_class_count", "T over cap");
  if (fu.EUE_dim)
    c.expect("EUE_dim_is_subgroup_class_count", *fu.EUE_dim == r.subgroup_class_count,
             std::to_string(*fu.EUE_dim) + " vs " + std::to_string(r.subgroup_class_count));
  else
    c.skip("EUE_dim_is_subgroup_class_count", "U over cap");
  if (fu.t_product_ok)
    c.expect("t_product_associative_with_unit", *fu.t_product_ok);
  else
    c.skip("t_product_associative_with_unit", "T too large for the product table");

  c.expect("e_index_is_index_times_one", e_index_ok);
  c.expect("dual_basis_identity", dual_basis_ok);
}

} // namespace

const char *to_string(Status s)
{
  switch (s) {
  case Status::agree:
    return "AGREE";
  case Status::disagree:
    return "DISAGREE";
  default:
    return "SKIPPED";
  }
}

std::size_t AnalysisReport::count(Status s) const
{
  std::size_t n = 0;
  for (const auto &c : checks)
    n += c.status == s;
  return n;
}

AnalysisReport analyze(const FiniteGroup &g, const Subgroup &h, const std::string &group_name,
                       const std::string &subgroup_name, const AnalysisOptions &opts)
{
  if (g.order() > opts.cap_group)
    throw CapExceeded("group order", g.order(), opts.cap_group);
  AnalysisReport r;
  Stopwatch sw(r.timing_ms);
  r.group_name = group_name;
  r.subgroup_name = subgroup_name;
  r.group_order = g.order();
  r.subgroup_order = h.order();
  r.index = h.index();
  r.degree = g.degree();
  r.seed = opts.seed;

  auto orbits = h_orbits(g, h);
  auto classes = conjugacy_classes(g);
  r.class_count = classes.size();
  r.orbit_count = orbits.size();
  r.center_order = center(g).order();
  std::vector<std::size_t> class_of(g.order());
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (auto x : classes[k])
      class_of[x] = k;
  bool refine = true;
  for (const auto &o : orbits)
    for (auto x : o)
      refine = refine && class_of[x] == class_of[o.front()];

  r.normal = is_normal(g, h);
  r.property_S = property_S(g, h);
  r.lemma_S = lemma_S_via_centralizers(g, h);
  r.hz_condition = hz_condition(g, h);
  r.depth1_group = depth1_group(g, h);
  r.burciu_depth1 = burciu_depth1(g, h);
  sw.lap("group_criteria");

  auto tables = extension_tables(g, h, opts.seed);
  r.prime = tables.group.prime;
  r.subgroup_class_count = tables.subgroup.size();
  r.inclusion = inclusion_matrix(tables);
  auto induced = induction_matrix(g, h, tables);
  sw.lap("character_tables");

  auto dr = depth_report(r.inclusion);
  r.min_depth = dr.min_depth;
  r.min_odd_depth = dr.min_odd_depth;
  r.min_even_depth = dr.min_even_depth;
  r.min_h_depth = dr.min_h_depth;
  r.s_diagonal = dr.s_diagonal;
  r.t_diagonal = dr.t_diagonal;
  sw.lap("depth");

  bool e_index_ok = false, dual_ok = false;
  if (!opts.matrix_only) {
    r.centralizer_dim = centralizer_of_subalgebra(g, h).dim();
    r.center_dim = center_space(g).dim();
    auto ei = e_index(g, h);
    e_index_ok = ei.equals_index_times_one && ei.central && ei.transversal_independent;
    dual_ok = dual_basis_identity(g, h, frobenius_data(g, h, right_transversal(g, h))) &&
              dual_basis_identity(g, h, frobenius_data(g, h, alternate_transversal(g, h)));
    sw.lap("centralizers");
    group_algebra_part(g, h, opts, r, sw);
  }

  agreement_checks(r, tables, induced, e_index_ok, dual_ok, refine, r.checks);
  if (opts.matrix_only) {
    // checks that read group-algebra data become skipped
    for (auto &c : r.checks)
      if (c.name == "centralizer_dim_is_orbit_count" || c.name == "center_dim_is_class_count" ||
          c.name == "e_index_is_index_times_one" || c.name == "dual_basis_identity") {
        c.status = Status::skipped;
        c.detail = "matrix-only mode";
      }
    r.notes.push_back("matrix-only mode");
  }
  for (const auto &[name, ok] : dr.oracle_verdicts)
    if (name == "s_t_symmetric")
      r.checks.push_back({"s_t_symmetric", ok ? Status::agree : Status::disagree, {}});
  return r;
}

json report_json(const AnalysisReport &r, bool with_timing)
{
  json j;
  j["group"] = {{"name", r.group_name},
                {"order", r.group_order},
                {"degree", r.degree},
                {"classes", r.class_count},
                {"center_order", r.center_order}};
  j["subgroup"] = {{"name", r.subgroup_name},
                   {"order", r.subgroup_order},
                   {"index", r.index},
                   {"classes", r.subgroup_class_count},
                   {"orbits_under_conjugation", r.orbit_count}};
  j["group_criteria"] = {{"normal", r.normal},
                         {"property_S", r.property_S},
                         {"lemma_S_via_centralizers", r.lemma_S},
                         {"hz_condition", r.hz_condition},
                         {"depth1_group", r.depth1_group},
                         {"burciu_depth1", r.burciu_depth1}};
  j["inclusion_matrix"] = {{"entries", r.inclusion.entries},
                           {"subgroup_degrees", r.inclusion.row_degrees},
                           {"group_degrees", r.inclusion.col_degrees}};
  j["depth"] = {{"min_depth", r.min_depth},
                {"min_odd_depth", r.min_odd_depth},
                {"min_even_depth", r.min_even_depth},
                {"min_even_depth_status", "derived criterion"},
                {"min_h_depth", r.min_h_depth},
                {"s_diagonal", r.s_diagonal},
                {"t_diagonal", r.t_diagonal}};
  if (r.separability) {
    const auto &s = *r.separability;
    j["separability"] = {{"kind", to_string(s.kind)},
                         {"unique_separable", s.unique()},
                         {"casimir_dim", s.casimir_dim},
                         {"kernel_dim", s.kernel_dim},
                         {"centralizer_dim", r.centralizer_dim},
                         {"center_dim", r.center_dim}};
  } else {
    j["separability"] = nullptr;
  }
  auto opt = [](const auto &o) -> json { return o ? json(*o) : json(nullptr); };
  j["fullness"] = {{"t_dim", opt(r.fullness.t_dim)},
                   {"full_in_T", opt(r.fullness.full_in_T)},
                   {"eTe_dim", opt(r.fullness.eTe_dim)},
                   {"u_dim", opt(r.fullness.u_dim)},
                   {"full_in_U", opt(r.fullness.full_in_U)},
                   {"EUE_dim", opt(r.fullness.EUE_dim)}};
  json checks = json::array();
  for (const auto &c : r.checks) {
    json x = {{"check", c.name}, {"status", to_string(c.status)}};
    if (!c.detail.empty())
      x["detail"] = c.detail;
    checks.push_back(std::move(x));
  }
  j["agreement"] = std::move(checks);
  j["summary"] = {{"agree", r.count(Status::agree)},
                  {"disagree", r.count(Status::disagree)},
                  {"skipped", r.count(Status::skipped)}};
  j["notes"] = r.notes;
  j["prime"] = r.prime;
  j["seed"] = r.seed;
  if (with_timing)
    j["timing_ms"] = r.timing_ms;
  return j;
}

std::vector<std::string> tsv_header()
{
  return {"pair",        "G",          "H",       "index",     "classes",   "orbits",
          "normal",      "property_S", "lemma_S", "hz",        "depth1",    "burciu",
          "unique_sep",  "min_depth",  "odd",     "even",      "h_depth",   "full_T",
          "full_U",      "agree",      "disagree", "skipped"};
}

std::vector<std::string> tsv_row(const AnalysisReport &r)
{
  auto b = [](bool x) { return std::string(x ? "1" : "0"); };
  auto ob = [](const std::optional<bool> &x) { return x ? std::string(*x ? "1" : "0") : std::string("-"); };
  return {r.id(),
          std::to_string(r.group_order),
          std::to_string(r.subgroup_order),
          std::to_string(r.index),
          std::to_string(r.class_count),
          std::to_string(r.orbit_count),
          b(r.normal),
          b(r.property_S),
          b(r.lemma_S),
          b(r.hz_condition),
          b(r.depth1_group),
          b(r.burciu_depth1),
          r.separability ? b(r.separability->unique()) : std::string("-"),
          std::to_string(r.min_depth),
          std::to_string(r.min_odd_depth),
          std::to_string(r.min_even_depth),
          std::to_string(r.min_h_depth),
          ob(r.fullness.full_in_T),
          ob(r.fullness.full_in_U),
          std::to_string(r.count(Status::agree)),
          std::to_string(r.count(Status::disagree)),
          std::to_string(r.count(Status::skipped))};
}

std::string tsv_line(const std::vector<std::string> &cells)
{
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i)
      out += '\t';
    out += cells[i];
  }
  return out;
}

CorpusResult run_corpus(const std::vector<CorpusEntry> &entries, const AnalysisOptions &opts,
                        std::size_t jobs)
{
  CorpusResult out;
  out.reports.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < entries.size();) {
      const auto &e = entries[i];
      try {
        out.reports[i] = analyze(*e.group, e.subgroup, e.group_name, e.subgroup_name, opts);
      } catch (const std::exception &x) {
        AnalysisReport r;
        r.group_name = e.group_name;
        r.subgroup_name = e.subgroup_name;
        r.group_order = e.group->order();
        r.subgroup_order = e.subgroup.order();
        r.index = e.subgroup.index();
        r.seed = opts.seed;
        r.checks.push_back({"analysis_completed", Status::disagree, x.what()});
        out.reports[i] = std::move(r);
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, entries.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < jobs; ++k)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }
  for (const auto &r : out.reports)
    for (const auto &c : r.checks) {
      auto &slot = out.by_check[c.name];
      ++slot[static_cast<std::size_t>(c.status)];
      if (c.status == Status::agree)
        ++out.agree;
      else if (c.status == Status::disagree)
        ++out.disagree;
      else
        ++out.skipped;
    }
  return out;
}

json corpus_json(const CorpusResult &c, bool with_timing)
{
  json j;
  json reports = json::array();
  for (const auto &r : c.reports)
    reports.push_back(report_json(r, with_timing));
  j["pairs"] = std::move(reports);
  json by = json::object();
  for (const auto &[name, n] : c.by_check)
    by[name] = {{"agree", n[0]}, {"disagree", n[1]}, {"skipped", n[2]}};
  j["summary"] = {{"pairs", c.reports.size()},
                  {"agree", c.agree},
                  {"disagree", c.disagree},
                  {"skipped", c.skipped},
                  {"by_check", std::move(by)}};
  return j;
}

} // namespace depthkit::cli
