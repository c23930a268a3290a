#include <algorithm>
#include <sstream>

#include "creg/betti.hpp"

namespace creg {

bool PropertyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PropertyCheck& c) { return !c.applicable || c.passed; });
}

namespace {

PropertyCheck not_applicable(std::string name, std::string why) {
  return {std::move(name), false, true, std::move(why)};
}

PropertyCheck component_additivity(const Graph& g, const BettiTable& t,
                                   const BettiOracle& oracle) {
  std::vector<Graph> parts;
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp).graph;
    if (sub.size() > 0) parts.push_back(std::move(sub));
  }
  if (parts.size() < 2) return not_applicable("additivity", "fewer than two components with edges");
  int sum = 0;
  std::ostringstream os;
  os << "reg(R/I) per component:";
  for (const auto& p : parts) {
    const int r = quotient_regularity_or_zero(oracle(p));
    sum += r;
    os << " " << r;
  }
  const int whole = quotient_regularity_or_zero(t);
  os << "; sum " << sum << ", whole " << whole;
  return {"additivity", true, sum == whole, os.str()};
}

PropertyCheck froberg(const Graph& g, const BettiTable& t) {
  if (t.is_zero_ideal()) return not_applicable("froberg", "no edges");
  const bool reg2 = t.regularity() == 2;
  const bool cochordal = is_chordal(complement(g));
  std::ostringstream os;
  os << "reg(I) = " << t.regularity() << ", complement chordal = " << std::boolalpha << cochordal;
  return {"froberg", true, reg2 == cochordal, os.str()};
}

PropertyCheck cochord_bound(const Graph& g, const BettiTable& t, const std::vector<Graph>& cover) {
  std::ostringstream os;
  bool valid = false;
  try {
    valid = is_cochordal_cover(g, cover);
  } catch (const std::invalid_argument& e) {
    return {"cochord_bound", true, false, std::string("invalid witness: ") + e.what()};
  }
  if (!valid) return {"cochord_bound", true, false, "witness is not a co-chordal cover"};
  const int reg = t.is_zero_ideal() ? 1 : t.regularity();
  os << "reg(I) = " << reg << ", cover size " << cover.size();
  return {"cochord_bound", true, reg <= static_cast<int>(cover.size()) + 1, os.str()};
}

PropertyCheck gap_claw(const Graph& g, const BettiTable& t) {
  if (t.is_zero_ideal()) return not_applicable("gap_claw_free", "no edges");
  if (!is_gap_free(g) || !is_claw_free(g))
    return not_applicable("gap_claw_free", "graph is not both gap-free and claw-free");
  std::ostringstream os;
  os << "reg(I) = " << t.regularity();
  return {"gap_claw_free", true, t.regularity() <= 3, os.str()};
}

PropertyCheck vertex_recursion(const Graph& g, const BettiTable& t, const BettiOracle& oracle) {
  if (t.is_zero_ideal()) return not_applicable("vertex_recursion", "no edges");
  const int reg = t.regularity();
  std::ostringstream os;
  bool ok = true;
  for (int x = 0; x < g.order(); ++x) {
    const int with_nbhd = quotient_regularity_or_zero(oracle(delete_closed_neighborhood(g, x))) + 2;
    const int without = quotient_regularity_or_zero(oracle(delete_vertex(g, x))) + 1;
    if (reg != with_nbhd && reg != without) {
      ok = false;
      os << "x=" << x << ": reg " << reg << " not in {" << with_nbhd << ", " << without << "}; ";
    }
  }
  if (ok) os << "holds at all " << g.order() << " vertices";
  return {"vertex_recursion", true, ok, os.str()};
}

PropertyCheck subadditivity(const Graph& g, const BettiTable& t, const BettiOracle& oracle,
                            const std::pair<Graph, Graph>& split) {
  const auto& [h, k] = split;
  if (h.order() != g.order() || k.order() != g.order())
    return {"subadditivity", true, false, "split parts must share the vertex set"};
  GraphBuilder joined(g.order());
  for (auto [a, b] : h.edges()) joined.add_edge(a, b);
  for (auto [a, b] : k.edges()) joined.add_edge(a, b);
  if (!(std::move(joined).build() == g))
    return {"subadditivity", true, false, "split parts do not union to the graph"};

  const auto th = oracle(h);
  const auto tk = oracle(k);
  const int reg_g = quotient_regularity_or_zero(t);
  const int reg_sum = quotient_regularity_or_zero(th) + quotient_regularity_or_zero(tk);
  const int pd_g = projective_dimension_or_minus_one(t);
  const int pd_sum = projective_dimension_or_minus_one(th) + projective_dimension_or_minus_one(tk) + 1;
  std::ostringstream os;
  os << "reg(R/I): " << reg_g << " <= " << reg_sum << "; pd(I): " << pd_g << " <= " << pd_sum;
  return {"subadditivity", true, reg_g <= reg_sum && pd_g <= pd_sum, os.str()};
}

}  // namespace

PropertyReport property_suite(const Graph& g, const BettiTable& t, const BettiOracle& oracle,
                              const PropertyInputs& inputs) {
  PropertyReport report;
  report.checks.push_back(component_additivity(g, t, oracle));
  report.checks.push_back(froberg(g, t));
  if (inputs.cochordal_cover)
    report.checks.push_back(cochord_bound(g, t, *inputs.cochordal_cover));
  else
    report.checks.push_back(not_applicable("cochord_bound", "no cover supplied"));
  report.checks.push_back(gap_claw(g, t));
  report.checks.push_back(vertex_recursion(g, t, oracle));
  if (inputs.edge_split)
    report.checks.push_back(subadditivity(g, t, oracle, *inputs.edge_split));
  else
    report.checks.push_back(not_applicable("subadditivity", "no edge split supplied"));
  return report;
}

}  // namespace creg
