#include "zrp/state.hpp"

#include <sstream>

namespace zrp {

int Sector::index_of(const Config& c) const {
  auto it = index.find(c);
  if (it == index.end())
    throw domain_error("config " + pretty(c) + " is not in sector " + occ_str(m));
  return it->second;
}

namespace {

std::int64_t binomial64(int top, int bot) {
  if (bot < 0 || bot > top) return 0;
  bot = std::min(bot, top - bot);
  std::int64_t r = 1;
  for (int i = 1; i <= bot; ++i) {
    r = r * (top - bot + i) / i;
    if (r < 0 || r > (std::int64_t{1} << 60)) return std::int64_t{1} << 60;
  }
  return r;
}

void fill_sector(const Occupancy& remaining, int sites_left, Config& partial,
                 Sector& out) {
  if (sites_left == 1) {
    partial.sites.push_back(remaining);
    out.index.emplace(partial, static_cast<int>(out.configs.size()));
    out.configs.push_back(partial);
    partial.sites.pop_back();
    return;
  }
  for (const Occupancy& here : occ_box(remaining)) {
    partial.sites.push_back(here);
    fill_sector(occ_sub(remaining, here), sites_left - 1, partial, out);
    partial.sites.pop_back();
  }
}

}  // namespace

Sector enumerate_sector(int n, int L, const Occupancy& m, std::int64_t cap) {
  if (n < 1 || L < 1) throw domain_error("enumerate_sector: need n >= 1, L >= 1");
  if (static_cast<int>(m.size()) != n)
    throw domain_error("enumerate_sector: species totals have wrong length");
  for (int x : m)
    if (x < 0) throw domain_error("enumerate_sector: negative species total");

  std::int64_t dim = 1;
  for (int a = 0; a < n; ++a) {
    dim *= binomial64(m[a] + L - 1, L - 1);
    if (dim > cap)
      throw cap_error("sector " + occ_str(m) + " at L=" + std::to_string(L) +
                      " exceeds the dimension cap");
  }

  Sector out;
  out.n = n;
  out.L = L;
  out.m = m;
  out.configs.reserve(static_cast<size_t>(dim));
  Config partial;
  fill_sector(m, L, partial, out);
  if (static_cast<std::int64_t>(out.configs.size()) != dim)
    throw std::logic_error("sector enumeration disagrees with the closed-form count");
  return out;
}

Config rotate(const Config& c, int shift) {
  int L = c.L();
  if (L == 0) return c;
  int s = ((shift % L) + L) % L;
  Config out;
  out.sites.reserve(L);
  for (int i = 0; i < L; ++i) out.sites.push_back(c.sites[(i + s) % L]);
  return out;
}

Config reverse_sites(const Config& c) {
  Config out = c;
  std::reverse(out.sites.begin(), out.sites.end());
  return out;
}

bool is_basic(const Occupancy& m) {
  if (m.empty()) return false;
  for (int x : m)
    if (x < 1) return false;
  return true;
}

std::string pretty(const Config& c) {
  std::ostringstream os;
  os << '|';
  for (int i = 0; i < c.L(); ++i) {
    if (i) os << ',';
    const Occupancy& site = c.sites[i];
    bool empty = true;
    for (size_t a = 0; a < site.size(); ++a)
      for (int r = 0; r < site[a]; ++r) {
        os << (a + 1);
        empty = false;
      }
    if (empty) os << '-';
  }
  os << '>';
  return os.str();
}

nlohmann::json config_to_json(const Config& c) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& site : c.sites) j.push_back(site);
  return j;
}

Config config_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw domain_error("config JSON must be a nonempty array of arrays");
  Config c;
  size_t n = 0;
  for (const auto& site : j) {
    if (!site.is_array()) throw domain_error("config JSON site must be an array");
    Occupancy occ;
    for (const auto& x : site) {
      if (!x.is_number_integer() || x.get<int>() < 0)
        throw domain_error("config JSON occupancies must be nonnegative ints");
      occ.push_back(x.get<int>());
    }
    if (c.sites.empty())
      n = occ.size();
    else if (occ.size() != n)
      throw domain_error("config JSON sites disagree on species count");
    c.sites.push_back(std::move(occ));
  }
  return c;
}

}  // namespace zrp
