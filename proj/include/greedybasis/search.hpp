#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "core.hpp"

namespace greedybasis {

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::uint64_t cap)
      : Error("instance count exceeds the configured cap of " + std::to_string(cap)) {}
};

enum class SearchMode { exhaustive, sampled };

/// Environment variable holding the default worker count.
inline constexpr const char* kWorkersEnv = "GREEDY_BASIS_WORKERS";

inline unsigned default_workers() {
  if (const char* s = std::getenv(kWorkersEnv)) {
    const long v = std::strtol(s, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct SearchConfig {
  /// Coefficient magnitudes {j/levels : j = 1..levels}.
  int levels = 3;
  /// Largest support of any single object (vector or index set) in an instance.
  std::size_t max_support = 4;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  /// Upper limit on the number of instances visited per search.
  std::uint64_t cap = 2'000'000'000;
  /// Magnitudes above 1 available to the dominating vectors (g, y).
  std::vector<double> large_magnitudes{2.0};

  void check() const {
    if (levels < 1) throw Error("search levels must be >= 1");
    if (cap == 0) throw Error("instance cap must be positive");
    if (mode == SearchMode::sampled && samples == 0) throw Error("sampled mode needs a positive sample count");
    for (double m : large_magnitudes)
      if (!(m > 1.0) || !std::isfinite(m)) throw Error("large magnitudes must be finite and > 1");
  }
};

inline std::string_view mode_name(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "sampled"; }

/// Search parameters echoed into reports. Worker count is deliberately absent:
/// results do not depend on it.
inline nlohmann::json to_json(const SearchConfig& cfg) {
  nlohmann::json j;
  j["levels"] = cfg.levels;
  j["max_support"] = cfg.max_support;
  j["mode"] = mode_name(cfg.mode);
  j["seed"] = cfg.seed;
  if (cfg.mode == SearchMode::sampled) j["samples"] = cfg.samples;
  j["large_magnitudes"] = cfg.large_magnitudes;
  return j;
}

/// Independent generator for sample `index` under `seed`, so that sample
/// streams do not depend on how work is split.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace greedybasis
