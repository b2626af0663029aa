#pragma once
// Configurations of a periodic L-site chain with n particle species, and the
// finite sectors S(m) = { (sigma_1..sigma_L) : sigma_1 + ... + sigma_L = m }.
//
// Basis order inside a sector is lexicographic on the flattened tuple
// (sigma_1, ..., sigma_L), site-major, so enumeration is deterministic and
// index tables are reproducible across runs.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "zrp/qseries.hpp"

namespace zrp {

struct Config {
  std::vector<Occupancy> sites;
  auto operator<=>(const Config&) const = default;
  int L() const { return static_cast<int>(sites.size()); }
  int n() const { return sites.empty() ? 0 : static_cast<int>(sites[0].size()); }
};

struct Sector {
  int n = 0, L = 0;
  Occupancy m;
  std::vector<Config> configs;
  std::map<Config, int> index;

  int dim() const { return static_cast<int>(configs.size()); }
  int index_of(const Config& c) const;
  Occupancy species_totals() const { return m; }
};

// Enumerates S(m); dim = prod_a C(m_a + L - 1, L - 1) is computed up front
// and refused (cap_error) if it exceeds the cap.
Sector enumerate_sector(int n, int L, const Occupancy& m,
                        std::int64_t cap = 10000000);

// Cyclic site shift to the left: rotate((A,B,C), 1) = (B,C,A). Negative
// shifts and shifts >= L wrap around.
Config rotate(const Config& c, int shift);

// Site order reversed: (A,B,C) -> (C,B,A).
Config reverse_sites(const Config& c);

// True iff every species is present at least once.
bool is_basic(const Occupancy& m);

// Multiset display, e.g. sites {(1,1),(1,0)} -> "|12,1>"; empty site -> "-".
std::string pretty(const Config& c);

nlohmann::json config_to_json(const Config& c);
Config config_from_json(const nlohmann::json& j);

}  // namespace zrp
