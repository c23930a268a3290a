// On-disk memo of Betti tables, one JSON file per (labelled graph, field).

#ifndef CREG_CACHE_HPP
#define CREG_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "creg/betti.hpp"
#include "creg/graph.hpp"

namespace creg {

/// FNV-1a over the canonical text "n;i-j,i-j,..." of the sorted edge list.
std::uint64_t graph_hash(const Graph& g);

class BettiCache {
 public:
  explicit BettiCache(std::filesystem::path dir);

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::filesystem::path entry_path(const Graph& g, Field field) const;

  /// A stored table whose recorded graph differs (hash collision) is ignored.
  std::optional<BettiTable> load(const Graph& g, Field field) const;
  void store(const Graph& g, const BettiTable& t) const;

  /// load() or compute with hochster_betti_table and store.
  BettiTable get_or_compute(const Graph& g, Field field, const HochsterOptions& options) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace creg

#endif  // CREG_CACHE_HPP
