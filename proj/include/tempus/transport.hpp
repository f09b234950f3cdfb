#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tempus/errors.hpp"

// Stochastic realization of the transit model: walkers cross a 1-D slab at
// speed c with exponential free paths, executing an instantaneous forward
// jump and/or a stationary delay at each scattering act. Validates the
// deterministic predictions of tempus::medium.

namespace tempus::transport {

struct WalkConfig {
  double mean_free_path_m;  // ell > 0
  double jump_m = 0.0;      // delta_ell >= 0, instantaneous displacement
  double delay_s = 0.0;     // tau1 >= 0, stationary delay per scattering
  double slab_length_m;     // L > 0
  std::uint64_t n_walkers;  // >= 1
  std::uint64_t master_seed;
  unsigned n_threads = 0;  // 0 = hardware concurrency; never affects results

  void validate() const;  // ConfigError on invariant violation
};

struct TransportResult {
  // Ensemble mean velocity over c: mean displacement / (c * mean time).
  // Walkers run in whole scattering cycles (flight + scattering act), so
  // the estimator is free of slab-boundary bias.
  double mean_speed_ratio;
  double standard_error;  // delta-method error of the ratio estimator
  double mean_scatter_count;
  double scatter_count_se;
  // Reciprocal view c*mean(T)/mean(D): the implied group index.
  double mean_group_index;
  double group_index_se;
  std::uint64_t walker_count;
  std::uint64_t master_seed;
};

// Deterministic for fixed (config, master_seed): per-walker randomness is
// counter-based and the reduction is a fixed-order pairwise sum, so the
// result is bit-identical for any thread count.
TransportResult simulate(const WalkConfig& config);

struct SweepEntry {
  bool ok;
  TransportResult result;  // valid when ok
  std::string error;       // set when not ok
};

// Independent simulations in input order; a bad config reports its error
// without aborting the sweep.
std::vector<SweepEntry> sweep(const std::vector<WalkConfig>& configs);

}  // namespace tempus::transport
