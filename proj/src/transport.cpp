#include "tempus/transport.hpp"

#include <cmath>
#include <functional>
#include <thread>

#include "tempus/constants.hpp"
#include "tempus/rng.hpp"

namespace tempus::transport {

namespace {

constexpr double kC = constants::c_m_per_s;

// Fixed-order pairwise sum over f(i), i in [begin, end): independent of
// thread count and stable against cancellation growth.
double pairwise_sum(std::size_t begin, std::size_t end,
                    const std::function<double(std::size_t)>& f) {
  const std::size_t n = end - begin;
  if (n <= 32) {
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += f(i);
    return s;
  }
  const std::size_t mid = begin + n / 2;
  return pairwise_sum(begin, mid, f) + pairwise_sum(mid, end, f);
}

struct WalkerTally {
  double displacement;  // D_i, full cycles, may overshoot the slab
  double light_path;    // c T_i in meters: flight + c tau1 per scattering
  double scatters;
};

WalkerTally run_walker(const WalkConfig& cfg, std::uint64_t walker) {
  double pos = 0.0;
  double flight = 0.0;
  std::uint64_t scatters = 0;
  std::uint64_t event = 0;
  // Whole scattering cycles: the begun flight is always completed and the
  // scattering act (jump + delay) always follows it. Termination is checked
  // per cycle, which keeps the ensemble ratio estimator exactly unbiased
  // (Wald's identity) instead of accumulating a slab-boundary offset.
  while (pos < cfg.slab_length_m) {
    const double u = rng::keyed_open_unit(cfg.master_seed, walker, event++);
    const double s = -cfg.mean_free_path_m * std::log(u);
    pos += s;
    flight += s;
    ++scatters;
    pos += cfg.jump_m;
  }
  return {pos, flight + kC * cfg.delay_s * static_cast<double>(scatters),
          static_cast<double>(scatters)};
}

}  // namespace

void WalkConfig::validate() const {
  if (!(mean_free_path_m > 0.0)) {
    throw ConfigError("mean free path must be positive");
  }
  if (!(slab_length_m > 0.0)) {
    throw ConfigError("slab length must be positive");
  }
  if (jump_m < 0.0) {
    throw ConfigError("jump must be >= 0");
  }
  if (delay_s < 0.0) {
    throw ConfigError("delay must be >= 0");
  }
  if (n_walkers < 1) {
    throw ConfigError("need at least one walker");
  }
}

TransportResult simulate(const WalkConfig& config) {
  config.validate();
  const std::size_t n = static_cast<std::size_t>(config.n_walkers);
  std::vector<WalkerTally> tally(n);

  unsigned threads = config.n_threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, n));

  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      tally[i] = run_walker(config, static_cast<std::uint64_t>(i));
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) {
          tally[i] = run_walker(config, static_cast<std::uint64_t>(i));
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Fixed-order reduction, identical for every thread count.
  const double nd = static_cast<double>(n);
  const double sum_d =
      pairwise_sum(0, n, [&](std::size_t i) { return tally[i].displacement; });
  const double sum_t =
      pairwise_sum(0, n, [&](std::size_t i) { return tally[i].light_path; });
  const double sum_n =
      pairwise_sum(0, n, [&](std::size_t i) { return tally[i].scatters; });

  const double ratio = sum_d / sum_t;  // mean(D) / (c mean(T))
  const double group = sum_t / sum_d;

  // Delta-method errors of the two ratio estimators; the residuals
  // g_i = D_i - R cT_i are centered by construction.
  const double sum_g2 = pairwise_sum(0, n, [&](std::size_t i) {
    const double g = tally[i].displacement - ratio * tally[i].light_path;
    return g * g;
  });
  const double sum_h2 = pairwise_sum(0, n, [&](std::size_t i) {
    const double h = tally[i].light_path - group * tally[i].displacement;
    return h * h;
  });
  const double sum_n2 = pairwise_sum(
      0, n, [&](std::size_t i) { return tally[i].scatters * tally[i].scatters; });

  TransportResult out{};
  out.mean_speed_ratio = ratio;
  out.standard_error = std::sqrt(sum_g2) / sum_t;
  out.mean_group_index = group;
  out.group_index_se = std::sqrt(sum_h2) / sum_d;
  out.mean_scatter_count = sum_n / nd;
  const double var_n =
      n > 1 ? (sum_n2 - sum_n * sum_n / nd) / (nd - 1.0) : 0.0;
  out.scatter_count_se = std::sqrt(std::max(0.0, var_n) / nd);
  out.walker_count = config.n_walkers;
  out.master_seed = config.master_seed;
  return out;
}

std::vector<SweepEntry> sweep(const std::vector<WalkConfig>& configs) {
  std::vector<SweepEntry> out;
  out.reserve(configs.size());
  for (const auto& cfg : configs) {
    try {
      out.push_back({true, simulate(cfg), {}});
    } catch (const Error& e) {
      out.push_back({false, {}, e.what()});
    }
  }
  return out;
}

}  // namespace tempus::transport
