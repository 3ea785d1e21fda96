#include "io.hpp"

#include "deltoid/envelope.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace deltoid::io {

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &what) {
  throw InputError(where + ": " + what);
}

const json &field(const json &doc, const char *key, const std::string &where) {
  if (!doc.is_object() || !doc.contains(key))
    fail(where, std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

long integer(const json &v, const std::string &where) {
  if (!v.is_number_integer())
    fail(where, "expected an integer");
  return v.get<long>();
}

Q rational(const json &v, const std::string &where) {
  if (v.is_number_integer())
    return Q(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InvalidArgument &e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a rational string");
}

std::string type_of(const json &doc) {
  if (!doc.is_object())
    fail("$", "document must be a JSON object");
  auto &t = field(doc, "type", "$");
  if (!t.is_string())
    fail("$.type", "expected a string");
  return t.get<std::string>();
}

int size_field(const json &doc, const std::string &where) {
  long n = integer(field(doc, "n", where), where + ".n");
  if (n < 0 || n > kMaxGround)
    fail(where + ".n", "out of range");
  return static_cast<int>(n);
}

json generator_delta(const std::string &name, const std::vector<long> &args);

} // namespace

json read_document(const std::string &path) {
  json doc;
  try {
    if (path == "-") {
      doc = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in)
        throw InputError(path + ": cannot open");
      doc = json::parse(in);
    }
  } catch (const json::parse_error &e) {
    throw InputError(path + ": " + e.what());
  }
  if (!doc.is_object())
    throw InputError(path + ": document must be a JSON object");
  if (!doc.contains("format") || doc["format"] != kFormat)
    throw InputError(path + ": unsupported or missing \"format\" (expected 1)");
  return doc;
}

json document(const std::string &type) { return json{{"format", kFormat}, {"type", type}}; }

std::pair<int, std::vector<Mask>> to_raw_family(const json &doc) {
  if (type_of(doc) != "delta-matroid")
    fail("$.type", "expected a delta-matroid document");
  if (doc.contains("generator")) {
    auto d = to_delta(doc);
    return {d.n(), d.feasible()};
  }
  int n = size_field(doc, "$");
  std::vector<Mask> out;
  if (doc.contains("feasible")) {
    auto &f = doc.at("feasible");
    if (!f.is_array())
      fail("$.feasible", "expected an array of sets");
    for (std::size_t k = 0; k < f.size(); ++k) {
      std::string where = "$.feasible[" + std::to_string(k) + "]";
      if (!f[k].is_array())
        fail(where, "expected an array of elements");
      std::vector<int> elems;
      bool barred = false;
      for (std::size_t j = 0; j < f[k].size(); ++j) {
        long x = integer(f[k][j], where + "[" + std::to_string(j) + "]");
        if (x == 0 || x > n || x < -n)
          fail(where + "[" + std::to_string(j) + "]", "element outside [n, n-bar]");
        barred |= x < 0;
        elems.push_back(static_cast<int>(x));
      }
      AdmissibleSet s;
      try {
        s = AdmissibleSet::from_signed(n, elems);
      } catch (const InvalidArgument &e) {
        fail(where, e.what());
      }
      // A set with barred elements is read as the maximal admissible set S ∪ ([n̄] ∖ S̄).
      if (barred && !s.is_maximal())
        fail(where, "a set with barred elements must be maximal admissible");
      out.push_back(s.pos());
    }
  } else if (doc.contains("maximal")) {
    auto &f = doc.at("maximal");
    if (!f.is_array())
      fail("$.maximal", "expected an array of sets");
    for (std::size_t k = 0; k < f.size(); ++k) {
      std::string where = "$.maximal[" + std::to_string(k) + "]";
      if (!f[k].is_array())
        fail(where, "expected an array of signed elements");
      std::vector<int> elems;
      for (std::size_t j = 0; j < f[k].size(); ++j) {
        long x = integer(f[k][j], where + "[" + std::to_string(j) + "]");
        if (x == 0 || x > n || x < -n)
          fail(where + "[" + std::to_string(j) + "]", "element outside [n, n-bar]");
        elems.push_back(static_cast<int>(x));
      }
      AdmissibleSet s;
      try {
        s = AdmissibleSet::from_signed(n, elems);
      } catch (const InvalidArgument &e) {
        fail(where, e.what());
      }
      if (!s.is_maximal())
        fail(where, "set is not maximal admissible");
      out.push_back(s.pos());
    }
  } else {
    fail("$", "delta-matroid needs \"feasible\", \"maximal\" or \"generator\"");
  }
  if (out.empty())
    fail("$", "a delta-matroid needs at least one feasible set");
  return {n, out};
}

DeltaMatroid to_delta(const json &doc, MatroidAs as) {
  std::string type = type_of(doc);
  if (type == "graph")
    return adjacency_delta(to_graph(doc));
  if (type == "matrix") {
    auto m = to_matrix(doc);
    try {
      return delta_from_isotropic(m.matrix, m.form);
    } catch (const InvalidArgument &e) {
      fail("$.rows", e.what());
    }
  }
  if (type == "matroid") {
    auto m = to_matroid(doc);
    return as == MatroidAs::Base ? from_bases(m) : from_independents(m);
  }
  if (type != "delta-matroid")
    fail("$.type", "cannot read a delta-matroid from a \"" + type + "\" document");
  if (doc.contains("generator")) {
    auto &g = doc.at("generator");
    std::string name = field(g, "name", "$.generator").get<std::string>();
    if (name == "u_circ") {
      long r = integer(field(g, "r", "$.generator"), "$.generator.r");
      long n = integer(field(g, "n", "$.generator"), "$.generator.n");
      try {
        return circ_uniform(static_cast<int>(r), static_cast<int>(n));
      } catch (const InvalidArgument &e) {
        fail("$.generator", e.what());
      }
    }
    fail("$.generator.name", "unknown generator \"" + name + "\"");
  }
  auto [n, f] = to_raw_family(doc);
  try {
    return DeltaMatroid(n, std::move(f));
  } catch (const NotADeltaMatroid &) {
    throw;
  } catch (const InvalidArgument &e) {
    fail("$.feasible", e.what());
  }
}

std::vector<DeltaMatroid> to_family(const json &doc) {
  if (type_of(doc) != "family")
    return {to_delta(doc)};
  auto &m = field(doc, "members", "$");
  if (!m.is_array())
    fail("$.members", "expected an array");
  std::vector<DeltaMatroid> out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    try {
      out.push_back(to_delta(m[k]));
    } catch (const InputError &e) {
      throw InputError("$.members[" + std::to_string(k) + "]" + std::string(e.what()).substr(1));
    }
  }
  return out;
}

Matroid to_matroid(const json &doc) {
  if (type_of(doc) != "matroid")
    fail("$.type", "expected a matroid document");
  auto &b = field(doc, "bases", "$");
  if (!b.is_array())
    fail("$.bases", "expected an array");
  std::vector<int> ground;
  if (doc.contains("ground")) {
    for (std::size_t k = 0; k < doc["ground"].size(); ++k)
      ground.push_back(static_cast<int>(integer(doc["ground"][k], "$.ground[" + std::to_string(k) + "]")));
  } else {
    int n = size_field(doc, "$");
    for (int i = 1; i <= n; ++i)
      ground.push_back(i);
  }
  std::vector<std::vector<int>> bases;
  for (std::size_t k = 0; k < b.size(); ++k) {
    std::vector<int> s;
    for (std::size_t j = 0; j < b[k].size(); ++j)
      s.push_back(static_cast<int>(integer(b[k][j], "$.bases[" + std::to_string(k) + "]")));
    bases.push_back(std::move(s));
  }
  try {
    return Matroid::from_labels(std::move(ground), bases);
  } catch (const InvalidArgument &e) {
    fail("$.bases", e.what());
  }
}

Graph to_graph(const json &doc) {
  if (type_of(doc) != "graph")
    fail("$.type", "expected a graph document");
  Graph g;
  g.n = size_field(doc, "$");
  auto &e = field(doc, "edges", "$");
  for (std::size_t k = 0; k < e.size(); ++k) {
    std::string where = "$.edges[" + std::to_string(k) + "]";
    if (!e[k].is_array() || e[k].size() != 2)
      fail(where, "expected a pair of vertices");
    g.edges.emplace_back(static_cast<int>(integer(e[k][0], where)), static_cast<int>(integer(e[k][1], where)));
  }
  try {
    g.validate();
  } catch (const InvalidArgument &ex) {
    fail("$.edges", ex.what());
  }
  return g;
}

MatrixDoc to_matrix(const json &doc) {
  if (type_of(doc) != "matrix")
    fail("$.type", "expected a matrix document");
  MatrixDoc out;
  long p = integer(field(doc, "p", "$"), "$.p");
  std::string form = doc.value("form", "D");
  if (form != "B" && form != "D")
    fail("$.form", "expected \"B\" or \"D\"");
  out.form = form == "B" ? FormType::B : FormType::D;
  auto &rows = field(doc, "rows", "$");
  std::vector<std::vector<std::int64_t>> r;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < rows[k].size(); ++j)
      row.push_back(integer(rows[k][j], "$.rows[" + std::to_string(k) + "][" + std::to_string(j) + "]"));
    r.push_back(std::move(row));
  }
  try {
    out.matrix = FqMatrix(p, r);
  } catch (const InvalidArgument &e) {
    fail("$.rows", e.what());
  }
  return out;
}

BnPolytope to_polytope(const json &doc) {
  std::string type = type_of(doc);
  if (type == "decomposition")
    return realize(to_decomposition(doc));
  if (type != "polytope")
    return BnPolytope::of(to_delta(doc));
  if (doc.contains("generator")) {
    auto &g = doc.at("generator");
    std::string name = field(g, "name", "$.generator").get<std::string>();
    int n = size_field(g, "$.generator");
    if (name == "cube")
      return BnPolytope::cube(n);
    if (name == "cross-polytope")
      return BnPolytope::cross_polytope(n);
    if (name == "permutohedron")
      return BnPolytope::signed_permutohedron(n);
    fail("$.generator.name", "unknown polytope generator \"" + name + "\"");
  }
  int n = size_field(doc, "$");
  try {
    if (doc.contains("support")) {
      auto &s = doc.at("support");
      int rays = ray_count(n);
      if (!s.is_array() || static_cast<int>(s.size()) != rays)
        fail("$.support", "expected one entry per ray (3^n - 1 entries)");
      std::vector<Q> h(rays);
      std::vector<bool> seen(rays, false);
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::string where = "$.support[" + std::to_string(k) + "]";
        auto &ray = field(s[k], "ray", where);
        std::vector<int> elems;
        for (std::size_t j = 0; j < ray.size(); ++j) {
          long x = integer(ray[j], where + ".ray");
          if (x == 0 || x > n || x < -n)
            fail(where + ".ray", "element outside [n, n-bar]");
          elems.push_back(static_cast<int>(x));
        }
        AdmissibleSet a;
        try {
          a = AdmissibleSet::from_signed(n, elems);
        } catch (const InvalidArgument &e) {
          fail(where + ".ray", e.what());
        }
        if (a.empty())
          fail(where + ".ray", "the empty set is not a ray");
        int idx = ray_index(a);
        if (seen[idx])
          fail(where + ".ray", "repeated ray");
        seen[idx] = true;
        h[idx] = rational(field(s[k], "value", where), where + ".value");
      }
      if (auto bad = support_violation(n, h))
        fail("$.support", "not the support function of a B_n generalized permutohedron (ray " +
                              bad->ray.to_string() + ")");
      return BnPolytope(n, std::move(h));
    }
    if (doc.contains("vertices")) {
      std::vector<Point> pts;
      auto &v = doc.at("vertices");
      for (std::size_t k = 0; k < v.size(); ++k) {
        std::string where = "$.vertices[" + std::to_string(k) + "]";
        if (!v[k].is_array() || static_cast<int>(v[k].size()) != n)
          fail(where, "expected a point with n coordinates");
        Point p;
        for (std::size_t j = 0; j < v[k].size(); ++j)
          p.push_back(rational(v[k][j], where));
        pts.push_back(std::move(p));
      }
      return BnPolytope::hull(n, pts);
    }
  } catch (const InvalidArgument &e) {
    fail("$", e.what());
  }
  fail("$", "polytope needs \"support\", \"vertices\" or \"generator\"");
}

DeltaDecomposition to_decomposition(const json &doc) {
  if (type_of(doc) != "decomposition")
    fail("$.type", "expected a decomposition document");
  int n = size_field(doc, "$");
  auto &c = field(doc, "coefficients", "$");
  if (!c.is_array())
    fail("$.coefficients", "expected an array");
  std::vector<std::pair<AdmissibleSet, Z>> pairs;
  for (std::size_t k = 0; k < c.size(); ++k) {
    std::string where = "$.coefficients[" + std::to_string(k) + "]";
    auto &ray = field(c[k], "ray", where);
    std::vector<int> elems;
    for (std::size_t j = 0; j < ray.size(); ++j)
      elems.push_back(static_cast<int>(integer(ray[j], where + ".ray")));
    Q v = rational(field(c[k], "c", where), where + ".c");
    if (!is_integer(v))
      fail(where + ".c", "coefficients must be integers");
    try {
      pairs.emplace_back(AdmissibleSet::from_signed(n, elems), v.get_num());
    } catch (const InvalidArgument &e) {
      fail(where + ".ray", e.what());
    }
  }
  try {
    return make_decomposition(n, pairs);
  } catch (const InvalidArgument &e) {
    fail("$.coefficients", e.what());
  }
}

json number(const Z &z) {
  if (z.fits_slong_p())
    return z.get_si();
  return z.get_str();
}

json number(const Q &q) {
  if (is_integer(q))
    return number(Z(q.get_num()));
  return q.get_str();
}

json signed_set(const AdmissibleSet &s) { return s.to_signed(); }

json from_delta(const DeltaMatroid &d) {
  json doc = document("delta-matroid");
  doc["n"] = d.n();
  json f = json::array();
  for (Mask m : d.feasible()) {
    json s = json::array();
    for (int i = 0; i < d.n(); ++i)
      if (m >> i & 1)
        s.push_back(i + 1);
    f.push_back(std::move(s));
  }
  doc["feasible"] = std::move(f);
  return doc;
}

json from_family(const std::vector<DeltaMatroid> &f) {
  json doc = document("family");
  json m = json::array();
  for (auto &d : f)
    m.push_back(from_delta(d));
  doc["members"] = std::move(m);
  return doc;
}

json from_matroid(const Matroid &m) {
  json doc = document("matroid");
  doc["ground"] = m.ground();
  json b = json::array();
  for (Mask s : m.bases())
    b.push_back(m.labels_of(s));
  doc["bases"] = std::move(b);
  return doc;
}

json from_graph(const Graph &g) {
  json doc = document("graph");
  doc["n"] = g.n;
  json e = json::array();
  for (auto [a, b] : g.edges)
    e.push_back({a, b});
  doc["edges"] = std::move(e);
  return doc;
}

json from_matrix(const FqMatrix &m, FormType form) {
  json doc = document("matrix");
  doc["p"] = m.p();
  doc["form"] = form == FormType::B ? "B" : "D";
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

json from_polytope(const BnPolytope &p) {
  json doc = document("polytope");
  doc["n"] = p.n();
  json s = json::array();
  for (int k = 0; k < ray_count(p.n()); ++k)
    s.push_back({{"ray", ray_from_index(p.n(), k).to_signed()}, {"value", number(p.h(k))}});
  doc["support"] = std::move(s);
  return doc;
}

json from_poly(const MPoly &p) {
  json terms = json::array();
  for (auto &[e, c] : p.terms()) {
    json mono = json::object();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i])
        mono[p.variables()[i]] = e[i];
    terms.push_back({{"monomial", mono}, {"coeff", number(c)}});
  }
  return {{"text", p.to_string()}, {"terms", terms}};
}

json from_report(const Report &r) {
  json checks = json::array();
  for (auto &c : r.checks) {
    json j = {{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty())
      j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

json from_decomposition(const DeltaDecomposition &d) {
  json c = json::array();
  for (auto &s : d.support_sets())
    c.push_back({{"ray", signed_set(s)}, {"c", number(d.c(s))}});
  json doc = document("decomposition");
  doc["n"] = d.n;
  doc["coefficients"] = std::move(c);
  return doc;
}

json from_indicator(const IndicatorCombination &comb) {
  json terms = json::array();
  for (auto &t : comb.terms)
    terms.push_back({{"coeff", number(t.coeff)},
                     {"translation", t.translation},
                     {"polytope", from_polytope(t.polytope)["support"]}});
  json doc = document("indicator-combination");
  doc["n"] = comb.n;
  doc["terms"] = std::move(terms);
  return doc;
}

namespace {

std::vector<std::vector<int>> duchamp_sets() {
  return {{-1, -2, -3, -4}, {-1, -2, -3, 4}, {-1, 2, 3, -4}, {1, -2, 3, -4}, {1, 2, -3, -4},
          {-1, 2, 3, 4},    {1, -2, 3, 4},   {1, 2, -3, 4},  {1, 2, 3, 4}};
}

json graph_doc(int n, std::vector<std::pair<int, int>> edges) {
  Graph g{n, std::move(edges)};
  return from_graph(g);
}

std::vector<std::pair<int, int>> complete_edges(int n, int base) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      e.emplace_back(a + base, b + base);
  return e;
}

json polytope_generator(const std::string &name, int n) {
  json doc = document("polytope");
  doc["generator"] = {{"name", name}, {"n", n}};
  return doc;
}

} // namespace

json fixture(const std::string &entry) {
  std::istringstream in(entry);
  std::string name;
  in >> name;
  std::vector<long> args;
  for (std::string tok; in >> tok;) {
    try {
      args.push_back(std::stol(tok));
    } catch (const std::exception &) {
      throw InputError("fixture \"" + entry + "\": parameters must be integers");
    }
  }
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw InputError("fixture \"" + name + "\" takes " + std::to_string(k) + " integer parameters");
  };
  if (name == "duchamp") {
    need(0);
    json doc = document("delta-matroid");
    doc["n"] = 4;
    doc["feasible"] = duchamp_sets();
    return doc;
  }
  if (name == "dplusminus") {
    need(0);
    return from_delta(DeltaMatroid(1, {0, 1}));
  }
  if (name == "dplus") {
    need(0);
    return from_delta(DeltaMatroid(1, {1}));
  }
  if (name == "circle") {
    need(0);
    return from_delta(DeltaMatroid(2, {0, 3}));
  }
  if (name == "u_circ") {
    need(2);
    if (args[0] < 0 || args[0] > args[1] || args[1] > 24)
      throw InputError("fixture u_circ needs 0 <= r <= n <= 24");
    return generator_delta("u_circ", args);
  }
  if (name == "path3") {
    need(0);
    return graph_doc(3, {{1, 2}, {2, 3}});
  }
  if (name == "triangle") {
    need(0);
    return graph_doc(3, complete_edges(3, 1));
  }
  if (name == "star4") {
    need(0);
    return graph_doc(4, {{1, 2}, {1, 3}, {1, 4}});
  }
  if (name == "cycle4") {
    need(0);
    return graph_doc(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  }
  if (name == "paw") {
    need(0);
    return graph_doc(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
  }
  if (name == "k4") {
    need(0);
    return graph_doc(4, complete_edges(4, 1));
  }
  if (name == "uniform") {
    need(2);
    if (args[0] < 0 || args[0] > args[1] || args[1] > 16)
      throw InputError("fixture uniform needs 0 <= r <= k <= 16");
    return from_matroid(Matroid::uniform(static_cast<int>(args[0]), static_cast<int>(args[1])));
  }
  if (name == "graphic_triangle") {
    need(0);
    return from_matroid(Matroid::graphic(3, complete_edges(3, 0)));
  }
  if (name == "graphic_k4") {
    need(0);
    return from_matroid(Matroid::graphic(4, complete_edges(4, 0)));
  }
  if (name == "all") {
    need(1);
    if (args[0] < 0 || args[0] > 3)
      throw InputError("fixture all needs 0 <= n <= 3");
    return from_family(enumerate_deltamatroids(static_cast<int>(args[0])));
  }
  if (name == "cube" || name == "cross-polytope" || name == "permutohedron") {
    need(1);
    if (args[0] < 0 || args[0] > 8)
      throw InputError("polytope fixtures need 0 <= n <= 8");
    return polytope_generator(name, static_cast<int>(args[0]));
  }
  throw InputError("unknown fixture \"" + name + "\"");
}

namespace {

json generator_delta(const std::string &name, const std::vector<long> &args) {
  json doc = document("delta-matroid");
  doc["generator"] = {{"name", name}, {"r", args[0]}, {"n", args[1]}};
  return doc;
}

} // namespace

std::vector<std::string> fixture_names() {
  return {"duchamp",    "dplusminus", "dplus",       "circle",           "u_circ 7 20",
          "u_circ 1 4", "path3",      "triangle",    "star4",            "cycle4",
          "paw",        "k4",         "uniform 2 4", "graphic_triangle", "graphic_k4",
          "all 1",      "all 2",      "cube 2",      "cross-polytope 2", "permutohedron 2"};
}

std::string fixture_file(const std::string &entry) {
  std::string s = entry;
  if (s.rfind("u_circ ", 0) == 0)
    s = "circ" + s.substr(6);
  for (auto &c : s)
    if (c == ' ' || c == '-')
      c = '_';
  return s + ".json";
}

} // namespace deltoid::io
