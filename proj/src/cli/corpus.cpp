#include "depthkit/cli/corpus.hpp"

#include <set>

#include "depthkit/errors.hpp"

namespace depthkit::cli {

namespace {

Permutation cycle(std::size_t degree, std::size_t from, std::size_t to)
{
  std::vector<std::uint32_t> im(degree);
  for (std::size_t i = 0; i < degree; ++i)
    im[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = from; i < to; ++i)
    im[i] = static_cast<std::uint32_t>(i + 1 == to ? from : i + 1);
  return Permutation(std::move(im));
}

Permutation transposition(std::size_t degree, std::size_t a, std::size_t b)
{
  std::vector<std::uint32_t> im(degree);
  for (std::size_t i = 0; i < degree; ++i)
    im[i] = static_cast<std::uint32_t>(i);
  std::swap(im[a], im[b]);
  return Permutation(std::move(im));
}

NamedGroup cyclic(std::size_t n) { return {"C" + std::to_string(n), {cycle(n, 0, n)}}; }

NamedGroup dihedral(std::size_t n)
{
  std::vector<std::uint32_t> refl(n);
  for (std::size_t i = 0; i < n; ++i)
    refl[i] = static_cast<std::uint32_t>((n - i) % n);
  return {"D" + std::to_string(n), {cycle(n, 0, n), Permutation(std::move(refl))}};
}

/// Left regular action of <a, x | a^{2m}, x^2 = a^m, x a x^-1 = a^-1> on a^k x^e, index k + 2m e.
NamedGroup dicyclic(std::size_t m)
{
  const std::size_t n = 2 * m;
  std::vector<std::uint32_t> a(2 * n), x(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    a[k] = static_cast<std::uint32_t>((k + 1) % n);
    a[k + n] = static_cast<std::uint32_t>((k + 1) % n + n);
    x[k] = static_cast<std::uint32_t>((n - k) % n + n);
    x[k + n] = static_cast<std::uint32_t>((n - k + m) % n);
  }
  return {"Q" + std::to_string(4 * m), {Permutation(std::move(a)), Permutation(std::move(x))}};
}

NamedGroup symmetric(std::size_t n)
{
  if (n == 1)
    return {"S1", {Permutation::identity(1)}};
  return {"S" + std::to_string(n), {transposition(n, 0, 1), cycle(n, 0, n)}};
}

NamedGroup alternating(std::size_t n)
{
  if (n < 3)
    return {"A" + std::to_string(n), {Permutation::identity(n)}};
  std::vector<Permutation> gens{cycle(n, 0, 3)};
  if (n > 3)
    gens.push_back(n % 2 ? cycle(n, 0, n) : cycle(n, 1, n));
  return {"A" + std::to_string(n), gens};
}

/// Heisenberg group mod 3: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'), left regular.
NamedGroup extraspecial27()
{
  std::vector<std::uint32_t> x(27), y(27);
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b)
      for (std::uint32_t c = 0; c < 3; ++c) {
        std::uint32_t i = a * 9 + b * 3 + c;
        x[i] = ((a + 1) % 3) * 9 + b * 3 + (c + b) % 3;
        y[i] = a * 9 + ((b + 1) % 3) * 3 + c;
      }
  return {"E27", {Permutation(std::move(x)), Permutation(std::move(y))}};
}

std::optional<std::size_t> suffix_number(const std::string &name, std::size_t prefix)
{
  if (name.size() <= prefix)
    return std::nullopt;
  std::size_t v = 0;
  for (std::size_t i = prefix; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9')
      return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(name[i] - '0');
    if (v > 1000)
      return std::nullopt;
  }
  return v;
}

} // namespace

std::optional<NamedGroup> named_group(const std::string &name)
{
  if (name == "S3xC2")
    return NamedGroup{name, {transposition(5, 0, 1), cycle(5, 0, 3), transposition(5, 3, 4)}};
  if (name == "C2xC2")
    return NamedGroup{name, {transposition(4, 0, 1), transposition(4, 2, 3)}};
  if (name == "E27")
    return extraspecial27();
  auto n = suffix_number(name, 1);
  if (!n || *n == 0)
    return std::nullopt;
  switch (name[0]) {
  case 'C':
    return cyclic(*n);
  case 'D':
    if (*n >= 3)
      return dihedral(*n);
    break;
  case 'Q':
    if (*n >= 8 && *n % 4 == 0)
      return dicyclic(*n / 4);
    break;
  case 'S':
    if (*n <= 10)
      return symmetric(*n);
    break;
  case 'A':
    if (*n <= 10)
      return alternating(*n);
    break;
  default:
    break;
  }
  return std::nullopt;
}

std::vector<NamedGroup> corpus_groups()
{
  std::vector<std::string> names;
  for (int n = 2; n <= 12; ++n)
    names.push_back("C" + std::to_string(n));
  for (int n = 3; n <= 8; ++n)
    names.push_back("D" + std::to_string(n));
  for (const char *s : {"Q8", "Q16", "S3", "S4", "S5", "A4", "A5", "S3xC2", "C2xC2", "E27"})
    names.push_back(s);
  std::vector<NamedGroup> out;
  for (const auto &s : names)
    out.push_back(*named_group(s));
  return out;
}

std::vector<CorpusEntry> corpus_entries(const std::shared_ptr<const FiniteGroup> &g,
                                        const std::string &group_name)
{
  std::vector<CorpusEntry> out;
  std::set<std::vector<ElementIndex>> seen;
  auto add = [&](const std::string &label, Subgroup h) {
    if (seen.insert(h.members()).second)
      out.push_back({group_name, label, g, std::move(h)});
  };
  add("G", Subgroup::whole(*g));
  add("1", Subgroup::trivial(*g));
  add("G'", derived_subgroup(*g));
  for (auto &c : cyclic_subgroups(*g)) {
    std::string label = "<" + (c.generators().empty() ? std::string("()")
                                                      : g->element(c.generators()[0]).to_cycle_string()) + ">";
    add(label, std::move(c));
  }
  if (g->order() <= 16) {
    std::size_t k = 0;
    for (auto &s : all_subgroups(*g)) {
      std::string label = "H" + std::to_string(k++) + "[" + std::to_string(s.order()) + "]";
      add(label, std::move(s));
    }
  }
  return out;
}

std::vector<CorpusEntry> symmetric_chain(std::size_t first, std::size_t last)
{
  std::vector<CorpusEntry> out;
  for (std::size_t n = first; n <= last; ++n) {
    auto g = std::make_shared<const FiniteGroup>(symmetric(n + 1).generators, default_group_cap,
                                                 "S" + std::to_string(n + 1));
    std::vector<Permutation> gens{transposition(n + 1, 0, 1), cycle(n + 1, 0, n)};
    out.push_back({"S" + std::to_string(n + 1), "S" + std::to_string(n), g,
                   Subgroup::generated_by(*g, gens)});
  }
  return out;
}

std::vector<CorpusEntry> full_corpus()
{
  std::vector<CorpusEntry> out;
  for (const auto &ng : corpus_groups()) {
    auto g = std::make_shared<const FiniteGroup>(ng.generators, default_group_cap, ng.name);
    auto es = corpus_entries(g, ng.name);
    out.insert(out.end(), std::make_move_iterator(es.begin()), std::make_move_iterator(es.end()));
  }
  auto chain = symmetric_chain();
  out.insert(out.end(), std::make_move_iterator(chain.begin()), std::make_move_iterator(chain.end()));
  return out;
}

bool glob_match(const std::string &pattern, const std::string &text)
{
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*')
    ++p;
  return p == pattern.size();
}

} // namespace depthkit::cli
