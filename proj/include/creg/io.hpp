// Interchange formats.
//
//   graph       {"n": 6, "edges": [[0, 1], [0, 5], ...]}   i < j, sorted
//   complex     {"n": 4, "facets": [[0, 2], [1, 3]]}
//   polynomial  {"coeffs": [1, 6, 6]}
//   betti       {"field": "2", "n": 4, "entries": [[i, j, b], ...],
//                "reg": r, "pd": p}; the zero ideal has "zero_ideal": true,
//                no entries and null reg/pd.
//
// Graph spec strings (CLI): circulant:N:S (S comma-separated, e.g.
// circulant:10:1,3), moebius:N, prism:N, A:t, B:t, D:t, complete:N,
// cycle:N, or a path to a graph JSON file.

#ifndef CREG_IO_HPP
#define CREG_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "creg/betti.hpp"
#include "creg/complex.hpp"
#include "creg/graph.hpp"
#include "creg/polynomial.hpp"

namespace creg {

using Json = nlohmann::json;

Json graph_to_json(const Graph& g);
/// Rejects loops, duplicate edges and out-of-range labels.
Graph graph_from_json(const Json& j);

Json complex_to_json(const SimplicialComplex& delta);
SimplicialComplex complex_from_json(const Json& j);

Json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const Json& j);

/// Header "i,0,1,...,n", then one row per homological degree 0..pd. With
/// zero_suppressed, zero cells are left blank and all-zero rows are dropped.
/// The zero ideal prints the single line "zero_ideal".
std::string betti_to_csv(const BettiTable& t, bool zero_suppressed = false);

Graph parse_graph_spec(const std::string& spec);

}  // namespace creg

#endif  // CREG_IO_HPP
