#include "creg/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "creg/io.hpp"

namespace creg {

std::uint64_t graph_hash(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ";";
  for (auto [i, j] : g.edges()) os << i << "-" << j << ",";
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : os.str()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

BettiCache::BettiCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path BettiCache::entry_path(const Graph& g, Field field) const {
  char name[64];
  std::snprintf(name, sizeof name, "%016llx-%s.json",
                static_cast<unsigned long long>(graph_hash(g)), field.to_string().c_str());
  return dir_ / name;
}

std::optional<BettiTable> BettiCache::load(const Graph& g, Field field) const {
  std::ifstream in(entry_path(g, field));
  if (!in) return std::nullopt;
  try {
    Json j;
    in >> j;
    if (!(graph_from_json(j.at("graph")) == g)) return std::nullopt;
    auto t = betti_from_json(j.at("betti"));
    if (t.field() != field) return std::nullopt;
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void BettiCache::store(const Graph& g, const BettiTable& t) const {
  const auto path = entry_path(g, t.field());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << Json{{"graph", graph_to_json(g)}, {"betti", betti_to_json(t)}}.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

BettiTable BettiCache::get_or_compute(const Graph& g, Field field, const HochsterOptions& options) const {
  if (auto hit = load(g, field)) return *hit;
  auto t = hochster_betti_table(g, field, options);
  store(g, t);
  return t;
}

}  // namespace creg
