#include "gsp/generate.h"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "gsp/error.h"

namespace gsp {

std::int64_t SeededRng::UniformInt(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(Next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool SeededRng::Bernoulli(double p) {
  const double scale = 9007199254740992.0;  // 2^53
  const auto threshold = static_cast<std::uint64_t>(std::ceil(p * scale));
  return (Next() >> 11) < threshold;
}

namespace {

bool Connected(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (auto [a, b] : pairs) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

FuelGraph GenBinomial(int n, double p, std::uint64_t seed, const GenOptions& opts) {
  if (n < 2) throw GspError(ErrorCode::kInvalidInstance, "n must be >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw GspError(ErrorCode::kInvalidInstance, "p must be in (0, 1]");
  if (opts.price_lo < 0 || opts.price_lo > opts.price_hi || opts.fuel_lo < 1 ||
      opts.fuel_lo > opts.fuel_hi) {
    throw GspError(ErrorCode::kInvalidInstance, "bad price or fuel range");
  }
  SeededRng rng(seed);
  std::vector<std::pair<int, int>> pairs;
  bool ok = false;
  for (int attempt = 0; attempt < opts.max_attempts && !ok; ++attempt) {
    pairs.clear();
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng.Bernoulli(p)) pairs.emplace_back(a, b);
      }
    }
    ok = Connected(n, pairs);
  }
  if (!ok) {
    throw GspError(ErrorCode::kGenerationFailed,
                   "no connected sample in " + std::to_string(opts.max_attempts) + " attempts");
  }
  std::vector<double> prices;
  for (int v = 0; v < n; ++v) {
    prices.push_back(static_cast<double>(rng.UniformInt(opts.price_lo, opts.price_hi)));
  }
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) {
    const double fuel = static_cast<double>(rng.UniformInt(opts.fuel_lo, opts.fuel_hi));
    edges.push_back(Edge{a, b, fuel});
    edges.push_back(Edge{b, a, fuel});
  }
  return FuelGraph(std::move(prices), std::move(edges));
}

}  // namespace gsp
