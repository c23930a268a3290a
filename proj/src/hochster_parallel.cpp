// OpenMP Hochster sweep for edge ideals.
//
// Each vertex subset W is independent work. Restrictions with a vertex that
// has no neighbour inside W are cones and are skipped. The homology of the
// remaining restrictions is memoized by the relabelled adjacency of G[W],
// which repeats heavily under the rotations of a circulant. Each thread
// accumulates a private table; partial tables are summed in thread order.

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include <omp.h>

#include "creg/betti.hpp"

namespace creg {

namespace {

class HomologyMemo {
 public:
  bool find(const std::string& key, std::size_t hash, std::vector<std::int64_t>& out) {
    Shard& s = shards_[hash % kShards];
    std::lock_guard lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) return false;
    out = it->second;
    return true;
  }

  // Values are a pure function of the key, so losing a race is harmless.
  void insert(std::string key, std::size_t hash, const std::vector<std::int64_t>& dims) {
    Shard& s = shards_[hash % kShards];
    std::lock_guard lock(s.mu);
    s.map.try_emplace(std::move(key), dims);
  }

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    std::mutex mu;
    std::unordered_map<std::string, std::vector<std::int64_t>> map;
  };
  std::array<Shard, kShards> shards_;
};

struct Scratch {
  std::array<std::uint64_t, 64> local{};
  std::array<int, 64> vertex{};
  std::vector<std::vector<FaceMask>> layers;
  std::string key;
};

std::vector<std::int64_t> restricted_homology(int k, Scratch& s, Field field) {
  s.layers.assign(static_cast<std::size_t>(k) + 1, {});
  detail::for_each_independent_set(std::span<const std::uint64_t>(s.local.data(), k),
                                   k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1,
                                   [&](FaceMask f) { s.layers[std::popcount(f)].push_back(f); });
  while (!s.layers.empty() && s.layers.back().empty()) s.layers.pop_back();
  for (auto& layer : s.layers) std::sort(layer.begin(), layer.end());
  return reduced_homology_from_faces(s.layers, field);
}

}  // namespace

BettiTable hochster_betti_table(const Graph& g, Field field, const HochsterOptions& options) {
  const int n = g.order();
  if (n > options.vertex_limit)
    throw std::invalid_argument("hochster: " + std::to_string(n) +
                                " vertices exceeds the vertex limit of " +
                                std::to_string(options.vertex_limit));
  if (n > kMaxComplexVertices)
    throw std::invalid_argument("hochster: at most 64 vertices are supported");
  if (g.size() == 0) return BettiTable::zero_ideal(n, field);

  std::vector<std::uint64_t> nbr(n);
  for (int v = 0; v < n; ++v) nbr[v] = g.row64(v);

  const int threads = options.workers > 0 ? options.workers : omp_get_max_threads();
  const std::size_t cells = static_cast<std::size_t>(n + 1) * (n + 1);
  std::vector<std::vector<std::int64_t>> partial(threads, std::vector<std::int64_t>(cells, 0));
  HomologyMemo memo;
  const std::int64_t subsets = std::int64_t{1} << n;

#pragma omp parallel num_threads(threads)
  {
    std::vector<std::int64_t>& mine = partial[omp_get_thread_num()];
    Scratch s;
    std::vector<std::int64_t> dims;

#pragma omp for schedule(dynamic, 256)
    for (std::int64_t wi = 1; wi < subsets; ++wi) {
      const auto w = static_cast<std::uint64_t>(wi);
      bool cone = false;
      for (std::uint64_t rest = w; rest; rest &= rest - 1)
        if ((nbr[std::countr_zero(rest)] & w) == 0) {
          cone = true;
          break;
        }
      if (cone) continue;

      int k = 0;
      for (std::uint64_t rest = w; rest; rest &= rest - 1) s.vertex[k++] = std::countr_zero(rest);
      for (int a = 0; a < k; ++a) {
        std::uint64_t m = 0;
        const std::uint64_t adj = nbr[s.vertex[a]] & w;
        for (int b = 0; b < k; ++b)
          if ((adj >> s.vertex[b]) & 1U) m |= std::uint64_t{1} << b;
        s.local[a] = m;
      }

      if (options.memoize) {
        s.key.assign(reinterpret_cast<const char*>(s.local.data()),
                     static_cast<std::size_t>(k) * sizeof(std::uint64_t));
        const std::size_t h = std::hash<std::string>{}(s.key);
        if (!memo.find(s.key, h, dims)) {
          dims = restricted_homology(k, s, field);
          memo.insert(s.key, h, dims);
        }
      } else {
        dims = restricted_homology(k, s, field);
      }

      for (std::size_t d = 0; d < dims.size(); ++d) {
        if (dims[d] == 0) continue;
        const int i = k - static_cast<int>(d) - 1;
        if (i >= 0) mine[static_cast<std::size_t>(i) * (n + 1) + k] += dims[d];
      }
    }
  }

  BettiTable t(n, field);
  for (const auto& p : partial)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        if (const auto v = p[static_cast<std::size_t>(i) * (n + 1) + j]; v != 0) t.add(i, j, v);
  return t;
}

}  // namespace creg
