#include "depthkit/cli/spec_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "depthkit/errors.hpp"

namespace depthkit::cli {

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &msg)
{
  throw ParseError(where + ": " + msg);
}

std::size_t as_index(const json &j, const std::string &where)
{
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

const json &member(const json &j, const char *key, const std::string &where)
{
  if (!j.is_object() || !j.contains(key))
    fail(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

Permutation parse_permutation(const json &j, std::size_t degree, const std::string &where)
{
  if (j.is_string())
    return parse_cycles(j.get<std::string>(), degree);
  if (!j.is_array())
    fail(where, "generator must be an image list or a cycle string");
  std::vector<std::uint32_t> images;
  for (std::size_t k = 0; k < j.size(); ++k)
    images.push_back(static_cast<std::uint32_t>(as_index(j[k], where + "/" + std::to_string(k))));
  if (degree && images.size() != degree)
    fail(where, "image list length differs from degree");
  try {
    return Permutation(std::move(images));
  } catch (const std::exception &e) {
    fail(where, e.what());
  }
}

linalg::RationalVector parse_sparse_vector(const json &j, std::size_t dim, const std::string &where)
{
  if (!j.is_array())
    fail(where, "expected a list of [index, value] pairs");
  std::vector<std::pair<linalg::Index, linalg::Rational>> terms;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string w = where + "/" + std::to_string(k);
    if (!j[k].is_array() || j[k].size() != 2)
      fail(w, "expected [index, value]");
    std::size_t i = as_index(j[k][0], w);
    if (i >= dim)
      fail(w, "index out of range");
    terms.emplace_back(static_cast<linalg::Index>(i), parse_rational_value(j[k][1]));
  }
  return linalg::make_vector(std::move(terms));
}

SparseMatrix parse_sparse_matrix(const json &j, std::size_t size, const std::string &where)
{
  if (!j.is_array())
    fail(where, "expected a list of [row, col, value] triples");
  SparseMatrix m;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string w = where + "/" + std::to_string(k);
    if (!j[k].is_array() || j[k].size() != 3)
      fail(w, "expected [row, col, value]");
    std::size_t r = as_index(j[k][0], w), c = as_index(j[k][1], w);
    if (r >= size || c >= size)
      fail(w, "matrix position outside matrix_size");
    m.emplace_back(r, c, parse_rational_value(j[k][2]));
  }
  return m;
}

} // namespace

json parse_json(const std::string &text, const std::string &source)
{
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    std::size_t line = 1, column = 1;
    std::size_t upto = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t k = 0; k < upto; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(source + ": malformed JSON", line, column);
  }
}

std::string read_text(const std::string &path)
{
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  ss << in.rdbuf();
  return ss.str();
}

Permutation parse_cycles(const std::string &text, std::size_t degree)
{
  if (degree == 0)
    throw ParseError("cycle notation requires an explicit degree");
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ','))
      ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle string '" + text + "'", 1, pos + 1);
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip();
      if (pos >= text.size())
        throw ParseError("unterminated cycle in '" + text + "'", 1, pos + 1);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (start == pos)
        throw ParseError("expected a point in '" + text + "'", 1, pos + 1);
      unsigned long p = std::stoul(text.substr(start, pos - start));
      if (p >= degree || used[p])
        throw ParseError("point out of range or repeated in '" + text + "'", 1, start + 1);
      used[p] = true;
      cycle.push_back(static_cast<std::uint32_t>(p));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip();
  }
  return Permutation(std::move(images));
}

GroupSpec parse_group_spec(const json &j)
{
  GroupSpec s;
  if (!j.is_object())
    fail("group", "expected an object");
  s.name = j.value("name", std::string("G"));
  s.degree = as_index(member(j, "degree", "group"), "group/degree");
  const json &gens = member(j, "generators", "group");
  if (!gens.is_array() || gens.empty())
    fail("group/generators", "expected a nonempty list");
  for (std::size_t k = 0; k < gens.size(); ++k)
    s.generators.push_back(parse_permutation(gens[k], s.degree, "group/generators/" + std::to_string(k)));
  return s;
}

SubgroupSpec parse_subgroup_spec(const json &j, std::size_t degree)
{
  SubgroupSpec s;
  if (!j.is_object())
    fail("subgroup", "expected an object");
  s.name = j.value("name", std::string("H"));
  if (j.contains("special")) {
    s.special = j.at("special").get<std::string>();
    if (s.special != "trivial" && s.special != "whole" && s.special != "derived" && s.special != "center")
      fail("subgroup/special", "unknown special subgroup '" + s.special + "'");
  } else if (j.contains("generator_indices")) {
    std::vector<std::size_t> idx;
    const json &a = j.at("generator_indices");
    if (!a.is_array())
      fail("subgroup/generator_indices", "expected a list");
    for (std::size_t k = 0; k < a.size(); ++k)
      idx.push_back(as_index(a[k], "subgroup/generator_indices/" + std::to_string(k)));
    s.generator_indices = std::move(idx);
  } else if (j.contains("generators")) {
    const json &a = j.at("generators");
    if (!a.is_array())
      fail("subgroup/generators", "expected a list");
    for (std::size_t k = 0; k < a.size(); ++k)
      s.generators.push_back(parse_permutation(a[k], degree, "subgroup/generators/" + std::to_string(k)));
  } else {
    fail("subgroup", "needs 'special', 'generator_indices' or 'generators'");
  }
  return s;
}

Subgroup resolve_subgroup(const FiniteGroup &g, const SubgroupSpec &s)
{
  if (s.special == "trivial")
    return Subgroup::trivial(g);
  if (s.special == "whole")
    return Subgroup::whole(g);
  if (s.special == "derived")
    return derived_subgroup(g);
  if (s.special == "center")
    return center(g);
  if (s.generator_indices) {
    std::vector<ElementIndex> idx;
    for (auto k : *s.generator_indices) {
      if (k >= g.generators().size())
        throw NotASubgroup("generator index " + std::to_string(k) + " out of range");
      idx.push_back(g.index_of(g.generators()[k]));
    }
    return Subgroup::generated_by_indices(g, idx);
  }
  return Subgroup::generated_by(g, s.generators);
}

linalg::Rational parse_rational_value(const json &j)
{
  if (j.is_number_integer())
    return linalg::Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string())
    return linalg::parse_rational(j.get<std::string>());
  throw ParseError("rational must be an integer or a \"p/q\" string");
}

AlgebraSpec parse_algebra_spec(const json &j)
{
  AlgebraSpec out;
  if (!j.is_object())
    fail("algebra", "expected an object");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("matrix_size")) {
    out.matrix_size = as_index(j.at("matrix_size"), "algebra/matrix_size");
    const json &b = member(j, "basis", "algebra");
    if (!b.is_array() || b.empty())
      fail("algebra/basis", "expected a nonempty list of matrices");
    for (std::size_t k = 0; k < b.size(); ++k)
      out.matrices.push_back(parse_sparse_matrix(b[k], out.matrix_size, "algebra/basis/" + std::to_string(k)));
    out.algebra.emplace(matrix_subalgebra(out.matrix_size, out.matrices, labels));
    return out;
  }
  if (labels.empty())
    fail("algebra", "structure-constant form needs 'labels'");
  const std::size_t n = labels.size();
  std::vector<StructureConstantAlgebra::Constant> constants;
  const json &c = member(j, "constants", "algebra");
  if (!c.is_array())
    fail("algebra/constants", "expected a list");
  for (std::size_t k = 0; k < c.size(); ++k) {
    std::string w = "algebra/constants/" + std::to_string(k);
    if (!c[k].is_array() || c[k].size() != 4)
      fail(w, "expected [i, j, k, value]");
    std::size_t a = as_index(c[k][0], w), b = as_index(c[k][1], w), d = as_index(c[k][2], w);
    if (a >= n || b >= n || d >= n)
      fail(w, "index out of range");
    constants.emplace_back(a, b, d, parse_rational_value(c[k][3]));
  }
  auto unit = parse_sparse_vector(member(j, "unit", "algebra"), n, "algebra/unit");
  out.algebra.emplace(std::move(labels), constants, std::move(unit));
  return out;
}

AlgebraInclusion parse_subalgebra_spec(const json &j, const AlgebraSpec &ambient)
{
  if (!j.is_object())
    fail("subalgebra", "expected an object");
  const auto &a = *ambient.algebra;
  std::vector<linalg::RationalVector> vecs;
  if (j.contains("vectors")) {
    const json &v = j.at("vectors");
    if (!v.is_array())
      fail("subalgebra/vectors", "expected a list");
    for (std::size_t k = 0; k < v.size(); ++k)
      vecs.push_back(parse_sparse_vector(v[k], a.dim(), "subalgebra/vectors/" + std::to_string(k)));
  } else if (j.contains("matrices")) {
    if (ambient.matrix_size == 0)
      fail("subalgebra/matrices", "matrix form needs an ambient given by matrices");
    const json &m = j.at("matrices");
    if (!m.is_array())
      fail("subalgebra/matrices", "expected a list");
    const std::size_t sz = ambient.matrix_size;
    std::vector<linalg::RationalVector> amb;
    for (const auto &bm : ambient.matrices) {
      std::vector<std::pair<linalg::Index, linalg::Rational>> t;
      for (const auto &[r, c, x] : bm)
        t.emplace_back(static_cast<linalg::Index>(r * sz + c), x);
      amb.push_back(linalg::make_vector(std::move(t)));
    }
    for (std::size_t k = 0; k < m.size(); ++k) {
      std::string w = "subalgebra/matrices/" + std::to_string(k);
      auto sm = parse_sparse_matrix(m[k], sz, w);
      std::vector<linalg::RationalVector> rows(sz * sz);
      for (std::size_t b = 0; b < amb.size(); ++b)
        for (const auto &[p, x] : amb[b])
          rows[p].emplace_back(static_cast<linalg::Index>(b), x);
      std::vector<linalg::Rational> rhs(sz * sz, linalg::Rational(0));
      for (const auto &[r, c, x] : sm)
        rhs[r * sz + c] += x;
      auto sol = linalg::solve_affine(rows, rhs, amb.size());
      if (!sol)
        fail(w, "matrix is not in the ambient algebra");
      vecs.push_back(sol->particular);
    }
  } else {
    fail("subalgebra", "needs 'vectors' or 'matrices'");
  }
  if (j.value("closure", false))
    return subalgebra_closure(a, vecs);
  return make_inclusion(a, vecs);
}

json rational_json(const linalg::Rational &q) { return linalg::to_string(q); }

json vector_json(const linalg::RationalVector &v)
{
  json out = json::array();
  for (const auto &[i, c] : v)
    out.push_back(json::array({i, rational_json(c)}));
  return out;
}

json vector_json(const linalg::RationalVector &v, const std::vector<std::string> &labels)
{
  json out = json::array();
  for (const auto &[i, c] : v)
    out.push_back(json::array({labels.at(i), rational_json(c)}));
  return out;
}

json subspace_json(const linalg::SubspaceBasis &b)
{
  json vs = json::array();
  for (const auto &v : b.vectors)
    vs.push_back(vector_json(v));
  return {{"ambient_dim", b.ambient_dim}, {"dim", b.dim()}, {"basis", vs}};
}

} // namespace depthkit::cli
