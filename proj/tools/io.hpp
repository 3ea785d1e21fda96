#ifndef DELTOID_TOOLS_IO_HPP
#define DELTOID_TOOLS_IO_HPP

#include "deltoid/polyhedra.hpp"
#include "deltoid/report.hpp"
#include "deltoid/represent.hpp"
#include "deltoid/schubert.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace deltoid::io {

using json = nlohmann::json;

inline constexpr int kFormat = 1;

/// Malformed or unreadable document; the message carries the location.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses a file ("-" reads stdin) and checks the "format" field.
json read_document(const std::string &path);
/// A fresh document {"format": 1, "type": type}.
json document(const std::string &type);

enum class MatroidAs { Base, Independent };

/// Accepts delta-matroid, graph, matrix and matroid documents.
DeltaMatroid to_delta(const json &doc, MatroidAs as = MatroidAs::Base);
/// A family document, or any single delta-matroid document.
std::vector<DeltaMatroid> to_family(const json &doc);
Matroid to_matroid(const json &doc);
Graph to_graph(const json &doc);
struct MatrixDoc {
  FqMatrix matrix;
  FormType form = FormType::D;
};
MatrixDoc to_matrix(const json &doc);
/// Polytope documents (support, vertices or generator), decompositions and delta-matroids.
BnPolytope to_polytope(const json &doc);
DeltaDecomposition to_decomposition(const json &doc);
/// Raw feasible-set family without the exchange check; for validation.
std::pair<int, std::vector<Mask>> to_raw_family(const json &doc);

json number(const Q &q);
json number(const Z &z);
json signed_set(const AdmissibleSet &s);
json from_delta(const DeltaMatroid &d);
json from_family(const std::vector<DeltaMatroid> &f);
json from_matroid(const Matroid &m);
json from_graph(const Graph &g);
json from_matrix(const FqMatrix &m, FormType form);
json from_polytope(const BnPolytope &p);
json from_poly(const MPoly &p);
json from_report(const Report &r);
json from_decomposition(const DeltaDecomposition &d);
json from_indicator(const IndicatorCombination &c);

/// A catalog entry by name, with integer parameters separated by spaces ("u_circ 7 20").
json fixture(const std::string &entry);
/// Every catalog entry with its default parameters.
std::vector<std::string> fixture_names();
/// File name used when writing the catalog to disk.
std::string fixture_file(const std::string &entry);

} // namespace deltoid::io

#endif
