#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "depthkit/cli/analysis.hpp"
#include "depthkit/cli/corpus.hpp"
#include "depthkit/cli/findim_demo.hpp"
#include "depthkit/cli/spec_io.hpp"
#include "depthkit/errors.hpp"

using namespace depthkit;
using namespace depthkit::cli;

namespace {

enum Exit { ok = 0, parse_failure = 1, cap_failure = 2, disagreement = 3 };

/// Inline JSON, a file path, or "-" for stdin.
json load_json(const std::string &arg)
{
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '['))
    return parse_json(arg, "<argument>");
  return parse_json(read_text(arg), arg);
}

struct GroupInput
{
  std::shared_ptr<const FiniteGroup> group;
  std::string name;
};

GroupInput load_group(const std::string &arg, std::size_t cap)
{
  if (arg != "-" && !std::filesystem::exists(arg) && arg.front() != '{')
    if (auto ng = named_group(arg))
      return {std::make_shared<const FiniteGroup>(ng->generators, cap, ng->name), ng->name};
  auto spec = parse_group_spec(load_json(arg));
  return {std::make_shared<const FiniteGroup>(spec.generators, cap, spec.name), spec.name};
}

/// A spec, a special name (trivial, whole, derived, center), or cycle strings separated by ';'.
std::pair<Subgroup, std::string> load_subgroup(const std::string &arg, const FiniteGroup &g)
{
  SubgroupSpec spec;
  if (arg == "trivial" || arg == "whole" || arg == "derived" || arg == "center") {
    spec.special = arg;
    spec.name = arg;
  } else if (!arg.empty() && arg.front() == '(') {
    std::size_t start = 0;
    while (start <= arg.size()) {
      auto end = arg.find(';', start);
      if (end == std::string::npos)
        end = arg.size();
      spec.generators.push_back(parse_cycles(arg.substr(start, end - start), g.degree()));
      start = end + 1;
    }
    spec.name = "<" + arg + ">";
  } else {
    spec = parse_subgroup_spec(load_json(arg), g.degree());
  }
  return {resolve_subgroup(g, spec), spec.name};
}

void print_json(const json &j) { std::cout << j.dump(2) << '\n'; }

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Depth and separability of finite group algebra extensions"};
  app.require_subcommand(1);
  app.fallthrough();

  AnalysisOptions opts;
  std::string format = "json";
  std::size_t jobs = 1;
  app.add_option("--seed", opts.seed, "Seed for the character table splitting");
  app.add_option("--cap-group", opts.cap_group, "Largest group order enumerated")
      ->envname("DEPTHKIT_CAP_GROUP")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-linear", opts.caps.linear, "Largest ambient dimension for T and U")
      ->envname("DEPTHKIT_CAP_LINEAR")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-tensor", opts.caps.tensor, "Largest dimension of the tensor square")
      ->envname("DEPTHKIT_CAP_TENSOR")
      ->check(CLI::PositiveNumber);
  app.add_flag("--matrix-only", opts.matrix_only, "Only group and inclusion-matrix criteria");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--timing", opts.timing, "Include per-stage timings in the report");

  auto *analyze_cmd = app.add_subcommand("analyze", "Analyze one subgroup of one group");
  std::string group_arg, subgroup_arg;
  analyze_cmd
      ->add_option("group", group_arg,
                   "Group spec (file, inline JSON, '-' for stdin) or a name such as S3, D4, Q8")
      ->required();
  analyze_cmd->add_option("subgroup", subgroup_arg,
                          "Subgroup spec, trivial|whole|derived|center, or cycles like '(0 1);(2 3)'");

  auto *corpus_cmd = app.add_subcommand("corpus", "Run the built-in corpus and all agreement checks");
  std::string filter = "*";
  corpus_cmd->add_option("--corpus-filter", filter, "Glob on pair names such as 'S4/*'");
  corpus_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto *findim_cmd = app.add_subcommand("findim", "Separability of a finite-dimensional extension");
  std::string algebra_arg, subalgebra_arg, fixture;
  findim_cmd->add_option("algebra", algebra_arg, "Algebra spec (file, inline JSON or '-')");
  findim_cmd->add_option("subalgebra", subalgebra_arg, "Subalgebra spec");
  findim_cmd->add_option("--fixture", fixture,
                         "Built-in pair: triangular:<n>, jordan:<n>, matrix:<n>, monoid:<n>, structural");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? ok : parse_failure;
  }

  try {
    if (*analyze_cmd) {
      opts.strict_caps = true;
      GroupInput in;
      std::unique_ptr<Subgroup> h;
      std::string hname;
      if (group_arg == "-" && subgroup_arg.empty()) {
        // one object {"group": ..., "subgroup": ...} on stdin
        auto j = parse_json(read_text("-"), "<stdin>");
        if (!j.is_object() || !j.contains("group") || !j.contains("subgroup"))
          throw ParseError("stdin object needs 'group' and 'subgroup'");
        auto gs = parse_group_spec(j.at("group"));
        in = {std::make_shared<const FiniteGroup>(gs.generators, opts.cap_group, gs.name), gs.name};
        auto ss = parse_subgroup_spec(j.at("subgroup"), in.group->degree());
        h = std::make_unique<Subgroup>(resolve_subgroup(*in.group, ss));
        hname = ss.name;
      } else {
        if (subgroup_arg.empty())
          throw ParseError("missing subgroup argument");
        in = load_group(group_arg, opts.cap_group);
        auto [s, n] = load_subgroup(subgroup_arg, *in.group);
        h = std::make_unique<Subgroup>(std::move(s));
        hname = n;
      }
      auto r = analyze(*in.group, *h, in.name, hname, opts);
      if (format == "tsv") {
        std::cout << tsv_line(tsv_header()) << '\n' << tsv_line(tsv_row(r)) << '\n';
      } else {
        print_json(report_json(r, opts.timing));
      }
      return r.count(Status::disagree) ? disagreement : ok;
    }

    if (*corpus_cmd) {
      std::vector<CorpusEntry> entries;
      for (auto &e : full_corpus())
        if (glob_match(filter, e.id()))
          entries.push_back(std::move(e));
      auto c = run_corpus(entries, opts, jobs);
      if (format == "tsv") {
        std::cout << tsv_line(tsv_header()) << '\n';
        for (const auto &r : c.reports)
          std::cout << tsv_line(tsv_row(r)) << '\n';
        std::cout << "# pairs " << c.reports.size() << " agree " << c.agree << " disagree "
                  << c.disagree << " skipped " << c.skipped << '\n';
        for (const auto &r : c.reports)
          for (const auto &k : r.checks)
            if (k.status == Status::disagree)
              std::cout << "# DISAGREE " << r.id() << ' ' << k.name << ' ' << k.detail << '\n';
      } else {
        print_json(corpus_json(c, opts.timing));
      }
      return c.disagree ? disagreement : ok;
    }

    std::optional<NamedFixture> fx;
    if (!fixture.empty()) {
      fx = named_fixture(fixture);
      if (!fx)
        throw ParseError("unknown fixture '" + fixture + "'");
    } else {
      if (algebra_arg.empty() || subalgebra_arg.empty())
        throw ParseError("findim needs an algebra and a subalgebra spec, or --fixture");
      auto a = parse_algebra_spec(load_json(algebra_arg));
      fx = NamedFixture{parse_subalgebra_spec(load_json(subalgebra_arg), a), std::nullopt};
    }
    print_json(findim_report(fx->inclusion, fx->monoid_n, opts.caps.linear));
    return ok;
  } catch (const CapExceeded &e) {
    std::cerr << "depthkit: " << e.what() << '\n';
    return cap_failure;
  } catch (const std::exception &e) {
    std::cerr << "depthkit: " << e.what() << '\n';
    return parse_failure;
  }
}
