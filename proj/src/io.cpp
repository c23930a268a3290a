#include "creg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace creg {

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON: expected an object with \"n\" and \"edges\"");
  const int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph JSON: each edge must be a pair [i, j]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_edges(n, edges);
}

Json complex_to_json(const SimplicialComplex& delta) {
  Json facets = Json::array();
  for (FaceMask f : delta.facets()) facets.push_back(mask_to_vertices(f));
  return {{"n", delta.vertex_count()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<FaceMask> facets;
  for (const auto& f : j.at("facets")) facets.push_back(vertices_to_mask(f.get<std::vector<int>>(), n));
  return SimplicialComplex::from_facets(n, facets);
}

Json polynomial_to_json(const IntPolynomial& p) { return {{"coeffs", p.coefficients()}}; }

IntPolynomial polynomial_from_json(const Json& j) {
  return IntPolynomial(j.at("coeffs").get<std::vector<std::int64_t>>());
}

Json betti_to_json(const BettiTable& t) {
  Json out = {{"field", t.field().to_string()}, {"n", t.variables()}};
  if (t.is_zero_ideal()) {
    out["zero_ideal"] = true;
    out["entries"] = Json::array();
    out["reg"] = nullptr;
    out["pd"] = nullptr;
    return out;
  }
  Json entries = Json::array();
  for (const auto& e : t.nonzero_entries()) entries.push_back({e.i, e.j, e.value});
  out["entries"] = entries;
  out["reg"] = t.regularity();
  out["pd"] = t.projective_dimension();
  return out;
}

BettiTable betti_from_json(const Json& j) {
  const Field field = Field::parse(j.at("field").get<std::string>());
  const int n = j.at("n").get<int>();
  if (j.value("zero_ideal", false)) return BettiTable::zero_ideal(n, field);
  BettiTable t(n, field);
  for (const auto& e : j.at("entries")) t.add(e[0].get<int>(), e[1].get<int>(), e[2].get<std::int64_t>());
  return t;
}

std::string betti_to_csv(const BettiTable& t, bool zero_suppressed) {
  if (t.is_zero_ideal()) return "zero_ideal\n";
  std::ostringstream os;
  const int n = t.variables();
  os << "i";
  for (int j = 0; j <= n; ++j) os << "," << j;
  os << "\n";
  for (int i = 0; i <= t.projective_dimension(); ++i) {
    bool any = false;
    for (int j = 0; j <= n; ++j) any = any || t.at(i, j) != 0;
    if (zero_suppressed && !any) continue;
    os << i;
    for (int j = 0; j <= n; ++j) {
      os << ",";
      if (!zero_suppressed || t.at(i, j) != 0) os << t.at(i, j);
    }
    os << "\n";
  }
  return os.str();
}

namespace {

int parse_int(const std::string& s, const std::string& spec) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("graph spec '" + spec + "': '" + s + "' is not an integer");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() >= 2) {
    const std::string& kind = parts[0];
    auto arg = [&](std::size_t i) { return parse_int(parts.at(i), spec); };
    auto expect = [&](std::size_t count) {
      if (parts.size() != count)
        throw std::invalid_argument("graph spec '" + spec + "': wrong number of fields");
    };
    if (kind == "circulant") {
      expect(3);
      std::vector<int> jumps;
      for (const auto& s : split(parts[2], ','))
        if (!s.empty()) jumps.push_back(parse_int(s, spec));
      return circulant(arg(1), jumps);
    }
    expect(2);
    if (kind == "moebius") return moebius(arg(1));
    if (kind == "prism") return prism(arg(1));
    if (kind == "A") return family_A(arg(1));
    if (kind == "B") return family_B(arg(1));
    if (kind == "D") return family_D(arg(1));
    if (kind == "complete") return complete_graph(arg(1));
    if (kind == "cycle") return cycle_graph(arg(1));
    throw std::invalid_argument("graph spec '" + spec + "': unknown family '" + kind + "'");
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("graph spec '" + spec + "': not a family spec or readable file");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::invalid_argument("graph file '" + spec + "': " + e.what());
  }
  return graph_from_json(j);
}

}  // namespace creg
