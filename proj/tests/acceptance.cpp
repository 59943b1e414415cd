#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "depthkit/chartable.hpp"
#include "depthkit/cli/analysis.hpp"
#include "depthkit/cli/corpus.hpp"
#include "depthkit/findim.hpp"

using namespace depthkit;
using namespace depthkit::cli;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int n, const std::string &name, bool ok, const std::string &detail)
{
  std::printf("%s  %2d  %s: %s\n", ok ? "PASS" : "FAIL", n, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok)
    ++failures;
}

/// Counts pairs violating `bad`, collecting the first few ids.
struct Tally
{
  std::size_t checked = 0, violations = 0;
  std::string first;

  void add(const AnalysisReport &r, bool bad)
  {
    ++checked;
    if (bad && violations++ < 3)
      first += " " + r.id();
  }
  bool ok() const { return violations == 0 && checked > 0; }
  std::string text(const char *what = "pairs") const
  {
    return std::to_string(checked) + " " + what + ", " + std::to_string(violations) + " violations" +
           (first.empty() ? "" : " [" + first + " ]");
  }
};

std::string secs(double s)
{
  char b[32];
  std::snprintf(b, sizeof b, "%.1f s", s);
  return b;
}

FiniteGroup named(const std::string &n) { return FiniteGroup(named_group(n)->generators, default_group_cap, n); }

} // namespace

int main()
{
  AnalysisOptions opts;

  {
    auto t0 = Clock::now();
    AnalysisOptions m = opts;
    m.matrix_only = true;
    std::string got;
    bool ok = true;
    for (const auto &e : symmetric_chain(2, 5)) {
      auto r = analyze(*e.group, e.subgroup, e.group_name, e.subgroup_name, m);
      std::size_t n = e.group->degree() - 1;
      ok = ok && r.min_depth == 2 * n - 1;
      got += " " + e.id() + "=" + std::to_string(r.min_depth);
    }
    double s = seconds_since(t0);
    report(1, "symmetric chain depth 2n-1", ok && s < 60, got.substr(1) + " in " + secs(s));
  }

  {
    auto t0 = Clock::now();
    auto g = named("Q8");
    auto h = Subgroup::generated_by(g, std::vector<Permutation>{g.generators()[0]});
    auto r = analyze(g, h, "Q8", "<i>", opts);
    double s = seconds_since(t0);
    bool ok = h.order() == 4 && !r.property_S && r.separability && !r.separability->unique() &&
              r.centralizer_dim == 6 && r.center_dim == 5 && s < 1;
    report(2, "Q8 over <i>", ok,
           std::string("property_S=") + (r.property_S ? "true" : "false") + " unique=" +
               (r.separability && r.separability->unique() ? "true" : "false") +
               " dim A^B=" + std::to_string(r.centralizer_dim) + " dim Z(A)=" +
               std::to_string(r.center_dim) + " in " + secs(s));
  }

  auto t0 = Clock::now();
  auto corpus = run_corpus(full_corpus(), opts, 1);
  double corpus_s = seconds_since(t0);
  std::size_t crashed = 0;
  for (const auto &r : corpus.reports)
    for (const auto &k : r.checks)
      if (k.name == "analysis_completed")
        ++crashed;

  {
    Tally t;
    for (const auto &r : corpus.reports)
      t.add(r, !r.separability || r.property_S != r.separability->unique());
    report(3, "property S iff unique separability", t.ok() && crashed == 0 && corpus_s < 600,
           t.text() + ", corpus " + secs(corpus_s));
  }
  {
    Tally t;
    for (const auto &r : corpus.reports)
      t.add(r, r.property_S != r.lemma_S);
    report(4, "property S iff centralizer lemma", t.ok(), t.text());
  }
  {
    Tally t;
    std::size_t with_u = 0;
    for (const auto &r : corpus.reports) {
      bool bad = r.depth1_group != r.burciu_depth1 || r.depth1_group != r.s_diagonal;
      if (r.fullness.full_in_U) {
        ++with_u;
        bad = bad || *r.fullness.full_in_U != r.depth1_group;
      }
      t.add(r, bad);
    }
    report(5, "depth one four-way agreement", t.ok() && with_u > 0,
           t.text() + ", full-in-U decided on " + std::to_string(with_u));
  }
  {
    Tally t;
    std::size_t with_t = 0;
    for (const auto &r : corpus.reports) {
      bool bad = r.t_diagonal != (r.min_h_depth == 1);
      if (r.fullness.full_in_T) {
        ++with_t;
        bad = bad || *r.fullness.full_in_T != r.t_diagonal;
      }
      t.add(r, bad);
    }
    report(6, "H-depth one three-way agreement", t.ok() && with_t > 0,
           t.text() + ", full-in-T decided on " + std::to_string(with_t));
  }
  {
    Tally t;
    for (const auto &r : corpus.reports) {
      bool unique = r.separability && r.separability->unique();
      bool d1 = r.depth1_group && r.burciu_depth1 && r.s_diagonal &&
                r.fullness.full_in_U.value_or(true);
      t.add(r, (unique && !d1) || (r.hz_condition && !(unique && d1)));
    }
    report(7, "unique separability and HZ imply depth one", t.ok(), t.text());
  }
  {
    Tally t;
    for (const auto &r : corpus.reports)
      t.add(r, (r.min_depth <= 2) != r.normal);
    auto g = named("S3");
    auto a3 = derived_subgroup(g);
    auto r = analyze(g, a3, "S3", "A3", opts);
    report(8, "depth at most two iff normal", t.ok() && r.min_depth == 2,
           t.text() + ", A3<S3 depth " + std::to_string(r.min_depth));
  }
  {
    Tally t;
    for (const auto &r : corpus.reports) {
      auto d = static_cast<long>(r.min_depth) - static_cast<long>(r.min_h_depth);
      t.add(r, d > 2 || d < -2);
    }
    report(9, "depth gap at most two", t.ok(), t.text());
  }
  {
    Tally t;
    for (const auto &r : corpus.reports) {
      const auto &s = r.separability;
      t.add(r, !s || !s->canonical_mu_one || !s->canonical_a_central || !s->canonical_idempotent);
    }
    report(10, "canonical separability idempotent", t.ok(), t.text());
  }

  {
    Tally groups, pairs;
    for (const auto &ng : corpus_groups()) {
      FiniteGroup g(ng.generators, default_group_cap, ng.name);
      auto ct = character_table_mod_p(g);
      AnalysisReport stub;
      stub.group_name = ng.name;
      groups.add(stub, !degrees_square_sum_ok(ct) || !rows_orthonormal(ct));
    }
    for (const auto &r : corpus.reports) {
      const auto &m = r.inclusion;
      bool bad = false;
      for (std::size_t j = 0; j < m.cols; ++j) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i < m.rows; ++i)
          sum += m.entries[i][j] * m.row_degrees[i];
        bad = bad || sum != m.col_degrees[j];
      }
      pairs.add(r, bad);
    }
    auto e = symmetric_chain(2, 2).front();
    auto m = inclusion_matrix(*e.group, e.subgroup);
    bool s3 = m.entries == std::vector<std::vector<std::uint64_t>>{{1, 0, 1}, {0, 1, 1}};
    report(11, "character tables and inclusion matrices", groups.ok() && pairs.ok() && s3,
           groups.text("groups") + "; " + pairs.text() + "; S2<S3 matrix " + (s3 ? "matches" : "differs"));
  }

  {
    auto t0 = Clock::now();
    std::string got;
    bool tri = true;
    for (std::size_t n = 2; n <= 4; ++n)
      tri = tri && is_separable_extension(upper_triangular_fixture(n)).separable;
    bool st = !is_separable_extension(structural_fixture()).separable;
    bool wit = true;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto inc = matrix_algebra_fixture(n);
      for (std::size_t j = 0; j < n; ++j)
        wit = wit && is_separability_element(inc, matrix_unit_witness(n, j));
    }
    bool mono = true;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto d = monoid_decomposition(n);
      mono = mono && d.direct && d.dim_eM == n && d.dim_complement == n &&
             is_separable_extension(monoid_fixture(n)).separable;
    }
    double s = seconds_since(t0);
    got = std::string("triangular ") + (tri ? "separable" : "not separable") + ", structural " +
          (st ? "inseparable" : "separable") + ", matrix-unit witnesses " + (wit ? "valid" : "invalid") +
          ", monoid (n, n) " + (mono ? "and separable" : "failed") + ", " + secs(s);
    report(12, "finite-dimensional fixtures", tri && st && wit && mono && s < 10, got);
  }

  std::printf("%s: %d of 12 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? EXIT_FAILURE : EXIT_SUCCESS;
}
