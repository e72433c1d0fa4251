#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewrs/code.hpp"
#include "skewrs/pgz_decoder.hpp"

namespace skewrs {

struct WeightStats {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t echelon = 0;

  friend bool operator==(const WeightStats&, const WeightStats&) = default;
};

struct TrialStats {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t failures = 0;
  std::size_t decoder_failures = 0;  // decoder reported failure
  std::size_t miscorrections = 0;    // decoder succeeded with the wrong answer
  std::size_t echelon_branch_count = 0;
  std::map<std::size_t, WeightStats> per_weight;
  double wall_time = 0;

  /// Everything except wall time.
  bool same_outcome(const TrialStats& o) const {
    return trials == o.trials && successes == o.successes && failures == o.failures &&
           decoder_failures == o.decoder_failures && miscorrections == o.miscorrections &&
           echelon_branch_count == o.echelon_branch_count && per_weight == o.per_weight;
  }
};

struct SimulationOptions {
  std::size_t trials = 1000;
  std::vector<std::size_t> weights{0, 1};  // trial i uses weights[i % size]
  std::uint64_t seed = 1;
};

/// Seed for trial `i`, independent of how trials are scheduled.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t i) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// `weight` distinct positions, uniformly, with uniformly random nonzero values.
template <SkewField F>
std::vector<ElementOf<F>> random_error(const F& field, std::size_t n, std::size_t weight, Rng& rng) {
  if (weight > n) throw std::invalid_argument("error weight exceeds the code length");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<ElementOf<F>> e(n, field.zero());
  for (std::size_t i = 0; i < weight; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(idx[i], idx[pick(rng)]);
    e[idx[i]] = field.random_nonzero(rng);
  }
  return e;
}

template <SkewField F>
TrialStats simulate(const SkewRSCode<F>& code, const SimulationOptions& opts) {
  if (opts.weights.empty()) throw std::invalid_argument("no error weights given");
  const F& field = code.field();
  const std::size_t n = code.length();
  TrialStats stats;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < opts.trials; ++i) {
    Rng rng(trial_seed(opts.seed, i));
    const std::size_t w = opts.weights[i % opts.weights.size()];
    std::vector<ElementOf<F>> m(code.dimension());
    for (auto& c : m) c = field.random(rng);
    const SkewPoly<F> message(field, m);
    const auto e = random_error(field, n, w, rng);
    auto y = encode(code, message).to_vector(n);
    for (std::size_t j = 0; j < n; ++j) y[j] = field.add(y[j], e[j]);

    const auto report = decode<F>(code, y);
    auto& ws = stats.per_weight[w];
    ++stats.trials;
    ++ws.trials;
    if (report.branch == DecodeBranch::Echelon) {
      ++stats.echelon_branch_count;
      ++ws.echelon;
    }
    if (report.ok() && report.error == e && report.message && *report.message == message) {
      ++stats.successes;
      ++ws.successes;
    } else {
      ++stats.failures;
      if (report.ok())
        ++stats.miscorrections;
      else
        ++stats.decoder_failures;
    }
  }
  stats.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return stats;
}

inline std::string format_stats(const TrialStats& s) {
  std::string out;
  out += "trials = " + std::to_string(s.trials) + "\n";
  out += "successes = " + std::to_string(s.successes) + "\n";
  out += "failures = " + std::to_string(s.failures) + "\n";
  out += "decoder_failures = " + std::to_string(s.decoder_failures) + "\n";
  out += "miscorrections = " + std::to_string(s.miscorrections) + "\n";
  out += "echelon_branch_count = " + std::to_string(s.echelon_branch_count) + "\n";
  for (const auto& [w, ws] : s.per_weight)
    out += "weight." + std::to_string(w) + " = " + std::to_string(ws.successes) + "/" +
           std::to_string(ws.trials) + " ok, " + std::to_string(ws.echelon) + " echelon\n";
  out += "wall_time = " + std::to_string(s.wall_time) + " s\n";
  return out;
}

struct OracleReport {
  std::size_t min_distance = 0;
  std::uint64_t vectors_scanned = 0;
  std::uint64_t within_radius = 0;  // vectors at distance <= t from some codeword
  std::uint64_t disagreements = 0;
  std::vector<std::string> examples;  // first few disagreements
};

/// Compares decode with exhaustive nearest-codeword search over the whole
/// ambient space L^n. Inside the radius the decoder must return the nearest
/// codeword; outside it must fail or return a codeword within distance t.
template <EnumerableField F>
OracleReport nearest_codeword_oracle(const SkewRSCode<F>& code, std::uint64_t budget = 1u << 22) {
  const F& field = code.field();
  const std::size_t n = code.length();
  const std::size_t t = code.correction_capability();
  const std::uint64_t q = field.size();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (space > budget / q) throw std::length_error("ambient space exceeds the budget");
    space *= q;
  }
  const auto words = enumerate_codewords(code, budget);
  OracleReport rep;
  rep.min_distance = min_distance_oracle(code, budget);

  std::vector<ElementOf<F>> y(n);
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t j = 0; j < n; ++j, rest /= q) y[j] = field.element_at(rest % q);
    std::size_t best = n + 1;
    const std::vector<ElementOf<F>>* nearest = nullptr;
    for (const auto& w : words) {
      std::size_t d = 0;
      for (std::size_t j = 0; j < n && d < best; ++j) d += !(w[j] == y[j]);
      if (d < best) {
        best = d;
        nearest = &w;
      }
    }
    ++rep.vectors_scanned;
    const auto report = decode<F>(code, y);
    bool agree;
    if (best <= t) {
      ++rep.within_radius;
      agree = report.ok() && report.codeword == *nearest;
    } else {
      agree = !report.ok();
      if (report.ok()) {
        std::size_t d = 0;
        for (std::size_t j = 0; j < n; ++j) d += !(report.codeword[j] == y[j]);
        agree = d <= t;
      }
    }
    if (!agree) {
      ++rep.disagreements;
      if (rep.examples.size() < 5) rep.examples.push_back(format_element_list<F>(field, y));
    }
  }
  return rep;
}

}  // namespace skewrs
