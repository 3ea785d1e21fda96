#include "io.hpp"

#include "deltoid/envelope.hpp"
#include "deltoid/invariants.hpp"
#include "deltoid/localization.hpp"
#include "deltoid/logconc.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

using namespace deltoid;
using io::json;

namespace {

struct Options {
  unsigned seed = 0;
  int max_n = -1;
  bool human = false;
  unsigned jobs = 0;
};

Options opts;

void emit(const json &doc) { std::cout << doc.dump(2) << '\n'; }

int emit_report(json doc, const Report &r) {
  doc["report"] = io::from_report(r);
  if (opts.human) {
    for (auto &c : r.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.pass && !c.detail.empty())
        std::cout << ": " << c.detail;
      std::cout << '\n';
    }
    std::cout << (r.ok() ? "ok" : "violation found") << '\n';
  } else {
    emit(doc);
  }
  return r.ok() ? 0 : 1;
}

json z_array(const std::vector<Z> &v) {
  json a = json::array();
  for (auto &z : v)
    a.push_back(io::number(z));
  return a;
}

json q_array(const std::vector<Q> &v) {
  json a = json::array();
  for (auto &q : v)
    a.push_back(io::number(q));
  return a;
}

// A u_circ generator document, read without building its feasible family.
std::optional<std::pair<int, int>> circ_generator(const json &doc) {
  if (doc.value("type", "") != "delta-matroid" || !doc.contains("generator"))
    return std::nullopt;
  auto &g = doc["generator"];
  if (g.value("name", "") != "u_circ" || !g.contains("r") || !g.contains("n"))
    return std::nullopt;
  return std::make_pair(g["r"].get<int>(), g["n"].get<int>());
}

// Largest n for which u_circ is expanded into feasible sets.
constexpr int kExpandCirc = 14;

// ---- validate

int cmd_validate(const std::string &path) {
  auto [n, family] = io::to_raw_family(io::read_document(path));
  json doc = io::document("validation");
  doc["n"] = n;
  auto bad = exchange_violation(n, family);
  doc["valid"] = !bad;
  if (bad) {
    auto set = [&](Mask m) { return AdmissibleSet::maximal(n, m).to_signed(); };
    doc["violation"] = {{"message", bad->what()},
                        {"first", set(bad->first)},
                        {"second", set(bad->second)},
                        {"element", bad->element}};
  }
  if (opts.human)
    std::cout << (bad ? std::string("not a delta-matroid: ") + bad->what() : "valid delta-matroid") << '\n';
  else
    emit(doc);
  return bad ? 1 : 0;
}

// ---- invariants

int cmd_upoly(const std::string &path, const std::string &method, bool matroid_indep) {
  auto d = io::to_delta(io::read_document(path),
                        matroid_indep ? io::MatroidAs::Independent : io::MatroidAs::Base);
  MPoly u;
  if (method == "explicit")
    u = u_poly_explicit(d);
  else if (method == "recursive")
    u = u_poly_recursive(d);
  else
    u = u_poly_multi(d);
  if (opts.human) {
    std::cout << u.to_string() << '\n';
    return 0;
  }
  json doc = io::document("polynomial");
  doc["n"] = d.n();
  doc["polynomial"] = io::from_poly(u);
  emit(doc);
  return 0;
}

int cmd_interlace(const std::string &path) {
  json in = io::read_document(path);
  std::vector<Z> c;
  int n;
  if (auto g = circ_generator(in); g && g->second > kExpandCirc) {
    n = g->second;
    c = circ_uniform_interlace(g->first, n);
  } else {
    auto d = io::to_delta(in);
    n = d.n();
    c = interlace_coefficients(d);
  }
  if (opts.human) {
    for (std::size_t k = 0; k < c.size(); ++k)
      std::cout << (k ? " " : "") << c[k].get_str();
    std::cout << '\n';
    return 0;
  }
  json doc = io::document("interlace");
  doc["n"] = n;
  doc["coefficients"] = z_array(c);
  emit(doc);
  return 0;
}

// ---- polyhedra

int cmd_volume(const std::string &path, bool oracle) {
  auto p = io::to_polytope(io::read_document(path));
  Q v = volume(delta_decompose(p));
  json doc = io::document("volume");
  doc["n"] = p.n();
  doc["volume"] = io::number(v);
  int status = 0;
  if (oracle) {
    Q o = volume_oracle(p);
    doc["oracle"] = io::number(o);
    doc["agree"] = o == v;
    status = o == v ? 0 : 1;
  }
  if (opts.human)
    std::cout << v.get_str() << '\n';
  else
    emit(doc);
  return status;
}

int cmd_decompose(const std::string &path) {
  auto p = io::to_polytope(io::read_document(path));
  auto d = delta_decompose(p);
  json doc = io::from_decomposition(d);
  bool exact = realize(d) == p;
  doc["reconstructs"] = exact;
  if (opts.human) {
    for (auto &s : d.support_sets())
      std::cout << s.to_string() << ' ' << d.c(s).get_str() << '\n';
  } else {
    emit(doc);
  }
  return exact ? 0 : 1;
}

int cmd_lattice_count(const std::string &path) {
  auto p = io::to_polytope(io::read_document(path));
  if (!p.is_lattice())
    throw InvalidArgument("lattice-count needs a lattice polytope");
  std::size_t brute = lattice_count(p);
  // The formulas count P′ − □ for P′ = P + □.
  auto d = delta_decompose(p + BnPolytope::cube(p.n()));
  Q multiset = lattice_count_formula(d, PsiConvention::Multiset);
  Q ordered = lattice_count_formula(d, PsiConvention::OrderedPsi);
  json doc = io::document("lattice-count");
  doc["n"] = p.n();
  doc["count"] = brute;
  doc["multiset_formula"] = io::number(multiset);
  doc["ordered_psi_formula"] = io::number(ordered);
  bool ok = multiset == Q(static_cast<unsigned long>(brute));
  doc["formula_matches"] = ok;
  if (opts.human)
    std::cout << brute << '\n';
  else
    emit(doc);
  return ok ? 0 : 1;
}

// ---- schubert

int cmd_schubert_decompose(const std::string &path, bool check) {
  auto p = io::to_polytope(io::read_document(path));
  auto comb = schubert_decompose(p);
  json doc = io::from_indicator(comb);
  int status = 0;
  if (check) {
    auto v = verify_indicator(comb, p, opts.seed);
    doc["verdict"] = {{"ok", v.ok()},
                      {"grid", v.grid},
                      {"random", v.random},
                      {"valuative", v.valuative},
                      {"grid_points", v.grid_points},
                      {"detail", v.detail}};
    status = v.ok() ? 0 : 1;
  }
  if (opts.human) {
    for (auto &t : comb.terms) {
      std::cout << t.coeff.get_str() << " * [";
      for (std::size_t i = 0; i < t.translation.size(); ++i)
        std::cout << (i ? "," : "") << t.translation[i];
      std::cout << "] + schubert polytope\n";
    }
  } else {
    emit(doc);
  }
  return status;
}

int cmd_schubert_census(int n) {
  auto c = coloop_free_schubert_census(n);
  auto e = eulerian_b(n);
  bool ok = c.size() == e.size() && std::equal(c.begin(), c.end(), e.begin());
  json doc = io::document("schubert-census");
  doc["n"] = n;
  doc["counts"] = c;
  doc["eulerian"] = e;
  doc["match"] = ok;
  if (opts.human) {
    for (std::size_t k = 0; k < c.size(); ++k)
      std::cout << (k ? " " : "") << c[k];
    std::cout << '\n';
  } else {
    emit(doc);
  }
  return ok ? 0 : 1;
}

// ---- representations and envelopes

int cmd_from_graph(const std::string &path) {
  emit(io::from_delta(adjacency_delta(io::to_graph(io::read_document(path)))));
  return 0;
}

int cmd_from_matrix(const std::string &path) {
  auto m = io::to_matrix(io::read_document(path));
  emit(io::from_delta(delta_from_isotropic(m.matrix, m.form)));
  return 0;
}

int cmd_envelope(const std::string &path, const std::string &construction) {
  json in = io::read_document(path);
  std::optional<EnvelopeWitness> w;
  std::string type = in.value("type", "");
  if (construction == "rep" || (construction == "auto" && (type == "graph" || type == "matrix"))) {
    FqMatrix rep;
    DeltaMatroid d;
    if (type == "graph") {
      auto g = io::to_graph(in);
      rep = adjacency_matrix_rep(g).with_zero_column();
      d = adjacency_delta(g);
    } else {
      auto m = io::to_matrix(in);
      d = delta_from_isotropic(m.matrix, m.form);
      rep = m.form == FormType::D ? m.matrix.with_zero_column() : m.matrix;
    }
    w = EnvelopeWitness{d, envelope_from_rep(rep), Construction::FromRepresentation};
  } else {
    auto d = io::to_delta(in);
    if (construction == "base") {
      if (auto m = as_base_polytope(d))
        w = EnvelopeWitness{d, envelope_base(*m), Construction::DirectSum};
    } else if (construction == "indep") {
      if (auto m = as_indep_polytope(d))
        w = EnvelopeWitness{d, envelope_indep(*m), Construction::FreeProduct};
    } else {
      w = find_envelope(d);
    }
  }
  json doc = io::document("envelope");
  doc["found"] = w.has_value();
  if (!w) {
    if (opts.human)
      std::cout << "no envelope found\n";
    else
      emit(doc);
    return 0;
  }
  Report lemmas = check_envelope_lemmas(*w);
  bool ok = lemmas.ok();
  doc["construction"] = to_string(w->construction);
  doc["delta"] = io::from_delta(w->delta);
  doc["matroid"] = io::from_matroid(w->matroid);
  doc["report"] = io::from_report(lemmas);
  if (opts.human) {
    std::cout << to_string(w->construction) << " envelope of rank " << w->matroid.rank() << '\n';
    return ok ? 0 : 1;
  }
  emit(doc);
  return ok ? 0 : 1;
}

// ---- verify

using Suite = std::function<Report(const DeltaMatroid &)>;

Suite suite_of(const std::string &name) {
  unsigned seed = opts.seed;
  if (name == "hrr")
    return [](const DeltaMatroid &d) { return check_hrr(d); };
  if (name == "interlace")
    return check_interlace_integral;
  if (name == "u")
    return check_u_integral;
  if (name == "isotropic")
    return check_isotropic_integral;
  if (name == "enveloping")
    return check_enveloping_integral;
  if (name == "nice-chern")
    return [seed](const DeltaMatroid &d) { return check_nice_chern(d, seed); };
  if (name == "restriction")
    return check_restriction;
  if (name == "classes")
    return check_classes;
  return [seed](const DeltaMatroid &d) { return verify_identities(d, seed); };
}

struct Outcome {
  Report report;
  std::string error;
};

std::vector<Outcome> run_pool(const std::vector<DeltaMatroid> &items, const Suite &suite) {
  std::vector<Outcome> out(items.size());
  std::atomic<std::size_t> next{0};
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(items.size(), 1));
  auto worker = [&] {
    for (std::size_t i; (i = next++) < items.size();) {
      try {
        out[i].report = suite(items[i]);
      } catch (const std::exception &e) {
        out[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  return out;
}

int cmd_verify(const std::string &suite_name, int n, bool all, const std::string &input, int random) {
  std::vector<DeltaMatroid> items;
  if (!input.empty()) {
    items = io::to_family(io::read_document(input));
  } else {
    if (n < 0)
      throw InvalidArgument("verify needs --n with --all or --random");
    check_cap(n, 4, "verify");
    if (random > 0) {
      for (int i = 0; i < random; ++i)
        items.push_back(random_deltamatroid(n, opts.seed + static_cast<std::uint64_t>(i)));
    } else if (all) {
      for (auto &d : enumerate_deltamatroids(n))
        items.push_back(d);
    } else {
      throw InvalidArgument("verify needs one of --all, --input or --random");
    }
  }
  auto results = run_pool(items, suite_of(suite_name));
  std::size_t passed = 0, checks = 0;
  json failures = json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto &r = results[i];
    checks += r.report.checks.size();
    if (!r.error.empty()) {
      failures.push_back({{"index", i}, {"delta", io::from_delta(items[i])}, {"error", r.error}});
      continue;
    }
    if (auto *c = r.report.first_failure()) {
      failures.push_back({{"index", i},
                          {"delta", io::from_delta(items[i])},
                          {"check", c->name},
                          {"detail", c->detail}});
      continue;
    }
    ++passed;
  }
  json doc = io::document("verify-summary");
  doc["suite"] = suite_name;
  if (n >= 0)
    doc["n"] = n;
  doc["seed"] = opts.seed;
  doc["instances"] = items.size();
  doc["checks"] = checks;
  doc["passed"] = passed;
  doc["failed"] = items.size() - passed;
  doc["ok"] = passed == items.size();
  doc["failures"] = failures;
  if (opts.human) {
    std::cout << suite_name << ": " << passed << "/" << items.size() << " instances pass (" << checks
              << " checks)\n";
    for (auto &f : failures)
      std::cout << "  #" << f["index"] << ": " << f.value("check", f.value("error", "")) << '\n';
  } else {
    emit(doc);
  }
  return passed == items.size() ? 0 : 1;
}

// ---- logconc

int logconc_circ(int r, int n, const std::string &suite) {
  if (suite != "corollaries")
    throw ResourceLimit("suite " + suite + " on U°_{" + std::to_string(r) + "," + std::to_string(n) +
                        "} needs the feasible family; only corollaries run at this size");
  auto c = circ_uniform_interlace(r, n);
  auto t = interlace_transform(c, n);
  Report rep;
  std::string why;
  rep.add("interlace transform log-concave", is_log_concave_sequence(t, &why), why);
  json doc = io::document("logconc");
  doc["suite"] = suite;
  doc["n"] = n;
  doc["interlace_coefficients"] = z_array(c);
  doc["interlace_transform"] = q_array(t);
  std::vector<Q> cq(c.begin(), c.end());
  doc["interlace_log_concave"] = is_log_concave_sequence(cq);
  return emit_report(std::move(doc), rep);
}

int cmd_logconc(const std::string &path, const std::string &suite) {
  json in = io::read_document(path);
  if (auto g = circ_generator(in); g && g->second > kExpandCirc)
    return logconc_circ(g->first, g->second, suite);
  json doc = io::document("logconc");
  doc["suite"] = suite;
  if (suite == "flawless") {
    auto family = io::to_family(in);
    auto res = flawless_scan(family);
    doc["scanned"] = res.scanned;
    json bad = json::array();
    for (auto &[d, a] : res.counterexamples)
      bad.push_back({{"delta", io::from_delta(d)}, {"coefficients", q_array(a)}});
    doc["counterexamples"] = bad;
    Report rep;
    rep.add("flawless", res.counterexamples.empty(),
            res.counterexamples.empty() ? "" : std::to_string(res.counterexamples.size()) + " counterexamples");
    return emit_report(std::move(doc), rep);
  }
  std::optional<Matroid> m;
  if (in.value("type", "") == "matroid")
    m = io::to_matroid(in);
  auto d = io::to_delta(in);
  doc["n"] = d.n();
  doc["interlace_coefficients"] = z_array(interlace_coefficients(d));
  Report rep = suite == "lorentzian" ? lorentzian_checks(d) : corollary_checks(d, m);
  return emit_report(std::move(doc), rep);
}

// ---- fixtures

int cmd_fixtures(const std::vector<std::string> &names, const std::string &dir) {
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    for (auto &entry : io::fixture_names()) {
      std::ofstream out(std::filesystem::path(dir) / io::fixture_file(entry));
      out << io::fixture(entry).dump(2) << '\n';
    }
    return 0;
  }
  if (names.empty()) {
    for (auto &entry : io::fixture_names())
      std::cout << entry << '\n';
    return 0;
  }
  std::string entry;
  for (auto &s : names)
    entry += (entry.empty() ? "" : " ") + s;
  emit(io::fixture(entry));
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"deltoid: delta-matroids and type-B generalized permutohedra"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", opts.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--max-n", opts.max_n, "Override size caps (sets DELTOID_MAX_N)");
  app.add_flag("--human", opts.human, "Plain-text output instead of JSON");
  app.add_option("--jobs", opts.jobs, "Worker threads for verify (0 = hardware)");

  std::string path;
  std::function<int()> action;

  auto *validate = app.add_subcommand("validate", "Check the exchange axiom for a feasible family");
  validate->add_option("input", path, "Delta-matroid document")->required();
  validate->callback([&] { action = [&] { return cmd_validate(path); }; });

  std::string method = "explicit";
  bool indep = false;
  auto *upoly = app.add_subcommand("upoly", "U-polynomial");
  upoly->add_option("input", path, "Delta-matroid, graph, matrix or matroid document")->required();
  upoly->add_option("--method", method)->check(CLI::IsMember({"explicit", "recursive", "multi"}));
  upoly->add_flag("--independent", indep, "Read matroids as IP(M) instead of P(M)");
  upoly->callback([&] { action = [&] { return cmd_upoly(path, method, indep); }; });

  auto *inter = app.add_subcommand("interlace", "Interlace polynomial coefficients");
  inter->add_option("input", path)->required();
  inter->callback([&] { action = [&] { return cmd_interlace(path); }; });

  bool oracle = false;
  auto *vol = app.add_subcommand("volume", "Normalized volume via signed transversals");
  vol->add_option("input", path, "Polytope, decomposition or delta-matroid document")->required();
  vol->add_flag("--oracle", oracle, "Also compute the Ehrhart oracle and compare");
  vol->callback([&] { action = [&] { return cmd_volume(path, oracle); }; });

  auto *dec = app.add_subcommand("decompose", "Coefficients c_S of the simplex decomposition");
  dec->add_option("input", path)->required();
  dec->callback([&] { action = [&] { return cmd_decompose(path); }; });

  auto *lc = app.add_subcommand("lattice-count", "Lattice points, brute force and by formula");
  lc->add_option("input", path)->required();
  lc->callback([&] { action = [&] { return cmd_lattice_count(path); }; });

  auto *sch = app.add_subcommand("schubert", "Schubert decompositions and census");
  sch->require_subcommand(1);
  bool check = false;
  auto *sdec = sch->add_subcommand("decompose", "Indicator combination of Schubert polytopes");
  sdec->add_option("input", path)->required();
  sdec->add_flag("--verify", check, "Run the grid, random and valuative checks");
  sdec->callback([&] { action = [&] { return cmd_schubert_decompose(path, check); }; });
  int census_n = 0;
  auto *cen = sch->add_subcommand("census", "Coloop-free Schubert delta-matroids by cornered rank");
  cen->add_option("n", census_n)->required()->check(CLI::Range(0, 6));
  cen->callback([&] { action = [&] { return cmd_schubert_census(census_n); }; });

  auto *fg = app.add_subcommand("from-graph", "Adjacency delta-matroid of a graph");
  fg->add_option("input", path)->required();
  fg->callback([&] { action = [&] { return cmd_from_graph(path); }; });

  auto *fm = app.add_subcommand("from-matrix", "Delta-matroid of an isotropic row space");
  fm->add_option("input", path)->required();
  fm->callback([&] { action = [&] { return cmd_from_matrix(path); }; });

  std::string construction = "auto";
  auto *env = app.add_subcommand("envelope", "Enveloping matroid witness");
  env->add_option("input", path)->required();
  env->add_option("--construction", construction)->check(CLI::IsMember({"auto", "base", "indep", "rep"}));
  env->callback([&] { action = [&] { return cmd_envelope(path, construction); }; });

  std::string suite = "all", input;
  int vn = -1, random = 0;
  bool all = false;
  auto *ver = app.add_subcommand("verify", "Localization identity suites");
  ver->add_option("suite", suite)
      ->check(CLI::IsMember({"hrr", "interlace", "u", "isotropic", "enveloping", "nice-chern", "restriction",
                             "classes", "all"}));
  ver->add_option("--n", vn, "Ground set size");
  auto *all_flag = ver->add_flag("--all", all, "Every delta-matroid on [n]");
  auto *in_opt = ver->add_option("--input", input, "Delta-matroid or family document");
  auto *rnd = ver->add_option("--random", random, "Number of random instances");
  all_flag->excludes(in_opt)->excludes(rnd);
  in_opt->excludes(rnd);
  ver->callback([&] { action = [&] { return cmd_verify(suite, vn, all, input, random); }; });

  std::string lsuite = "corollaries";
  auto *lg = app.add_subcommand("logconc", "Lorentzian and log-concavity checks");
  lg->add_option("input", path)->required();
  lg->add_option("--suite", lsuite)->check(CLI::IsMember({"lorentzian", "corollaries", "flawless"}));
  lg->callback([&] { action = [&] { return cmd_logconc(path, lsuite); }; });

  std::vector<std::string> fixture_args;
  std::string write_dir;
  auto *fx = app.add_subcommand("fixtures", "List, print or write the fixture catalog");
  fx->add_option("name", fixture_args, "Fixture name and integer parameters");
  fx->add_option("--write", write_dir, "Write every fixture into this directory");
  fx->callback([&] { action = [&] { return cmd_fixtures(fixture_args, write_dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (opts.max_n >= 0)
    setenv("DELTOID_MAX_N", std::to_string(opts.max_n).c_str(), 1);

  try {
    return action();
  } catch (const io::InputError &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimit &e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument &e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const InvalidCombination &e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const InternalError &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
