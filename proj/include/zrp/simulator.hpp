#pragma once
// Stochastic sampling of the sector-restricted dynamics. Exact hop rates are
// converted to double exactly once (build_sim_rates / build_sim_columns);
// trajectories then run entirely in float mode:
//   continuous time: Gillespie over per-config event lists,
//   discrete time:   column sampling from a stochastic transfer matrix.
// The RNG is std::mt19937_64. Independent replicas take engines seeded with
// split_seed(seed, k) (a splitmix64 mix), and uniforms use the top 53 bits
// mapped to (0, 1], so log(u) is always finite.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zrp/markov.hpp"

namespace zrp {

// splitmix64 of seed advanced by `stream` increments; stream k labels the
// k-th independent replica
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

// uniform double in (0, 1]
double u01(std::mt19937_64& g);

struct SimState {
  Config config;
  double time = 0.0;       // continuous time, or the step count in discrete runs
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;  // stream label, carried through into reports
};

struct SimEvent {
  int site = 0;
  Occupancy gamma;
  int dir = +1;  // +1 hop right, -1 hop left
  int target = 0;
  double rate = 0.0;
};

// per-config float event lists; rates already include the a resp. b weights
struct SimRates {
  Sector sector;
  std::vector<std::vector<SimEvent>> events;
  std::vector<double> total;
};
SimRates build_sim_rates(const Sector& sec, const RateTable& rates);

// The generator implied by the event table must reproduce the exact H entry
// by entry after float conversion; the simulator and the solver have to
// encode identical dynamics.
bool audit_sim_rates(const SimRates& rates, const SectorOperator& h,
                     double tol = 1e-12, std::string* witness = nullptr);

// One exponential-clock event: waits ~ Exp(total rate), picks an event with
// probability proportional to its rate, moves gamma from the site to its
// neighbor. Throws domain_error in an absorbing state (total rate 0).
SimState gillespie_step(const SimState& state, const SimRates& rates,
                        std::mt19937_64& rng);

// float transfer columns; build refuses (domain_error) negative entries or a
// column sum off 1 by more than 1e-12
struct SimColumns {
  Sector sector;
  std::vector<std::vector<std::pair<int, double>>> cols;
};
SimColumns build_sim_columns(const SectorOperator& t);

SimState discrete_step(const SimState& state, const SimColumns& cols,
                       std::mt19937_64& rng);

struct EmpiricalDist {
  Sector sector;
  std::vector<double> weight;  // holding time (continuous) or visit counts
  double total = 0.0;
};

// Time-weighted occupation over `horizon` Gillespie events, discarding the
// first burn_in events (default horizon/10). The engine is seeded from
// initial.seed, so equal arguments give bit-identical results.
EmpiricalDist estimate_stationary_ct(
    const SimState& initial, const SimRates& rates, std::uint64_t horizon,
    std::optional<std::uint64_t> burn_in = std::nullopt);

// Visit counts over `horizon` discrete steps, discarding the first burn_in.
EmpiricalDist estimate_stationary_dt(
    const SimState& initial, const SimColumns& cols, std::uint64_t horizon,
    std::optional<std::uint64_t> burn_in = std::nullopt);

double tv_distance(const EmpiricalDist& emp, const SteadyState& exact);
double tv_distance(const EmpiricalDist& a, const EmpiricalDist& b);

}  // namespace zrp
