#include "zrp/simulator.hpp"

#include <cmath>
#include <cstdlib>

namespace zrp {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double u01(std::mt19937_64& g) {
  return static_cast<double>((g() >> 11) + 1) * 0x1.0p-53;
}

SimRates build_sim_rates(const Sector& sec, const RateTable& rates) {
  SimRates sr;
  sr.sector = sec;
  sr.events.resize(sec.dim());
  sr.total.assign(sec.dim(), 0.0);
  const int L = sec.L;
  for (int c = 0; c < sec.dim(); ++c) {
    const Config& cfg = sec.configs[c];
    for (int i = 0; i < L; ++i) {
      auto add = [&](const std::vector<RateEvent>& evs, int dir) {
        const int dst_site = (i + dir + L) % L;
        for (const RateEvent& ev : evs) {
          Config out = cfg;
          out.sites[i] = occ_sub(out.sites[i], ev.gamma);
          out.sites[dst_site] = occ_add(out.sites[dst_site], ev.gamma);
          const double r = ev.rate.to_double();
          if (r == 0.0) continue;
          sr.events[c].push_back(
              {i, ev.gamma, dir, sec.index_of(out), r});
          sr.total[c] += r;
        }
      };
      auto ri = rates.right.find(cfg.sites[i]);
      if (ri != rates.right.end()) add(ri->second, +1);
      auto li = rates.left.find(cfg.sites[i]);
      if (li != rates.left.end()) add(li->second, -1);
    }
  }
  return sr;
}

bool audit_sim_rates(const SimRates& rates, const SectorOperator& h,
                     double tol, std::string* witness) {
  const int dim = rates.sector.dim();
  if (h.kind != OpKind::hamiltonian || h.sector.dim() != dim) {
    if (witness) *witness = "operator is not a generator on this sector";
    return false;
  }
  std::vector<std::vector<double>> g(dim, std::vector<double>(dim, 0.0));
  for (int c = 0; c < dim; ++c) {
    for (const SimEvent& ev : rates.events[c]) g[ev.target][c] += ev.rate;
    g[c][c] -= rates.total[c];
  }
  for (int c = 0; c < dim; ++c) {
    std::vector<double> want(dim, 0.0);
    for (const auto& [r, v] : h.cols[c]) want[r] = v.to_double();
    for (int r = 0; r < dim; ++r)
      if (std::abs(g[r][c] - want[r]) > tol) {
        if (witness)
          *witness = "(" + std::to_string(r) + "," + std::to_string(c) +
                     "): events " + std::to_string(g[r][c]) + " generator " +
                     std::to_string(want[r]);
        return false;
      }
  }
  return true;
}

SimState gillespie_step(const SimState& state, const SimRates& rates,
                        std::mt19937_64& rng) {
  const int idx = rates.sector.index_of(state.config);
  const double total = rates.total[idx];
  if (!(total > 0.0))
    throw domain_error("gillespie_step: absorbing state, total rate 0");
  const double wait = -std::log(u01(rng)) / total;
  double r = u01(rng) * total;
  const auto& evs = rates.events[idx];
  std::size_t pick = evs.size() - 1;
  double cum = 0.0;
  for (std::size_t k = 0; k < evs.size(); ++k) {
    cum += evs[k].rate;
    if (r <= cum) {
      pick = k;
      break;
    }
  }
  SimState next;
  next.config = rates.sector.configs[evs[pick].target];
  next.time = state.time + wait;
  next.steps = state.steps + 1;
  next.seed = state.seed;
  return next;
}

SimColumns build_sim_columns(const SectorOperator& t) {
  if (t.kind != OpKind::transfer)
    throw domain_error("build_sim_columns: discrete sampling needs a transfer matrix");
  SimColumns sc;
  sc.sector = t.sector;
  sc.cols.resize(t.sector.dim());
  for (int c = 0; c < t.sector.dim(); ++c) {
    double sum = 0.0;
    for (const auto& [r, v] : t.cols[c]) {
      const double p = v.to_double();
      if (p < 0.0)
        throw domain_error("build_sim_columns: negative entry in column " +
                           pretty(t.sector.configs[c]));
      if (p == 0.0) continue;
      sc.cols[c].emplace_back(r, p);
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw domain_error("build_sim_columns: column " +
                         pretty(t.sector.configs[c]) + " sums to " +
                         std::to_string(sum));
  }
  return sc;
}

SimState discrete_step(const SimState& state, const SimColumns& cols,
                       std::mt19937_64& rng) {
  const int idx = cols.sector.index_of(state.config);
  const auto& col = cols.cols[idx];
  double r = u01(rng);
  std::size_t pick = col.size() - 1;
  double cum = 0.0;
  for (std::size_t k = 0; k < col.size(); ++k) {
    cum += col[k].second;
    if (r <= cum) {
      pick = k;
      break;
    }
  }
  SimState next;
  next.config = cols.sector.configs[col[pick].first];
  next.time = state.time + 1.0;
  next.steps = state.steps + 1;
  next.seed = state.seed;
  return next;
}

namespace {

std::uint64_t resolve_burn_in(std::uint64_t horizon,
                              std::optional<std::uint64_t> burn_in) {
  if (horizon == 0)
    throw domain_error("estimate_stationary: horizon must be positive");
  const std::uint64_t burn = burn_in ? *burn_in : horizon / 10;
  if (burn >= horizon)
    throw domain_error("estimate_stationary: burn-in must stay below the horizon");
  return burn;
}

}  // namespace

EmpiricalDist estimate_stationary_ct(const SimState& initial,
                                     const SimRates& rates,
                                     std::uint64_t horizon,
                                     std::optional<std::uint64_t> burn_in) {
  const std::uint64_t burn = resolve_burn_in(horizon, burn_in);
  std::mt19937_64 rng(split_seed(initial.seed, 0));
  EmpiricalDist d;
  d.sector = rates.sector;
  d.weight.assign(rates.sector.dim(), 0.0);
  SimState s = initial;
  for (std::uint64_t e = 0; e < horizon; ++e) {
    const int idx = rates.sector.index_of(s.config);
    SimState next = gillespie_step(s, rates, rng);
    if (e >= burn) {
      const double hold = next.time - s.time;
      d.weight[idx] += hold;
      d.total += hold;
    }
    s = next;
  }
  return d;
}

EmpiricalDist estimate_stationary_dt(const SimState& initial,
                                     const SimColumns& cols,
                                     std::uint64_t horizon,
                                     std::optional<std::uint64_t> burn_in) {
  const std::uint64_t burn = resolve_burn_in(horizon, burn_in);
  std::mt19937_64 rng(split_seed(initial.seed, 0));
  EmpiricalDist d;
  d.sector = cols.sector;
  d.weight.assign(cols.sector.dim(), 0.0);
  SimState s = initial;
  for (std::uint64_t step = 0; step < horizon; ++step) {
    if (step >= burn) {
      d.weight[cols.sector.index_of(s.config)] += 1.0;
      d.total += 1.0;
    }
    s = discrete_step(s, cols, rng);
  }
  return d;
}

double tv_distance(const EmpiricalDist& emp, const SteadyState& exact) {
  if (emp.sector.dim() != exact.sector.dim())
    throw domain_error("tv_distance: sector mismatch");
  if (!(emp.total > 0.0))
    throw domain_error("tv_distance: empty empirical distribution");
  double tv = 0.0;
  for (int i = 0; i < emp.sector.dim(); ++i)
    tv += std::abs(emp.weight[i] / emp.total - exact.probs[i].to_double());
  return 0.5 * tv;
}

double tv_distance(const EmpiricalDist& a, const EmpiricalDist& b) {
  if (a.sector.dim() != b.sector.dim())
    throw domain_error("tv_distance: sector mismatch");
  if (!(a.total > 0.0) || !(b.total > 0.0))
    throw domain_error("tv_distance: empty empirical distribution");
  double tv = 0.0;
  for (int i = 0; i < a.sector.dim(); ++i)
    tv += std::abs(a.weight[i] / a.total - b.weight[i] / b.total);
  return 0.5 * tv;
}

}  // namespace zrp
