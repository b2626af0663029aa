#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zrp/state.hpp"

using namespace zrp;

TEST_CASE("sector dimensions") {
  CHECK(enumerate_sector(2, 2, {1, 1}).dim() == 4);
  // two species, totals (2,1), two sites: 3 * 2 = 6 configurations
  CHECK(enumerate_sector(2, 2, {2, 1}).dim() == 6);
  CHECK(enumerate_sector(1, 3, {0}).dim() == 1);
  CHECK(enumerate_sector(2, 4, {3, 2}).dim() == 200);
  CHECK(enumerate_sector(3, 1, {5, 1, 2}).dim() == 1);
}

TEST_CASE("sector enumeration is a lexicographic bijection onto S(m)") {
  Sector s = enumerate_sector(2, 3, {2, 1});
  CHECK(s.dim() == 18);
  for (int i = 0; i < s.dim(); ++i) {
    const Config& c = s.configs[i];
    CHECK(s.index_of(c) == i);
    Occupancy tot(2, 0);
    for (const auto& site : c.sites) tot = occ_add(tot, site);
    CHECK(tot == s.m);
    if (i > 0) CHECK(s.configs[i - 1] < c);
  }
  Config foreign{{{3, 0}, {0, 1}, {0, 0}}};
  CHECK_THROWS_AS(s.index_of(foreign), domain_error);
}

TEST_CASE("dimension cap refusal") {
  CHECK_THROWS_AS(enumerate_sector(2, 60, {8, 8}), cap_error);
  // dim = 11 * 11 = 121
  CHECK_THROWS_AS(enumerate_sector(2, 2, {10, 10}, 100), cap_error);
  CHECK(enumerate_sector(2, 2, {10, 10}, 121).dim() == 121);
}

TEST_CASE("bad sector arguments") {
  CHECK_THROWS_AS(enumerate_sector(2, 0, {1, 1}), domain_error);
  CHECK_THROWS_AS(enumerate_sector(2, 2, {1}), domain_error);
  CHECK_THROWS_AS(enumerate_sector(1, 2, {-1}), domain_error);
}

TEST_CASE("rotate") {
  Config c{{{1, 0}, {0, 1}, {1, 1}}};
  Config r1 = rotate(c, 1);
  CHECK(r1.sites[0] == Occupancy{0, 1});
  CHECK(r1.sites[1] == Occupancy{1, 1});
  CHECK(r1.sites[2] == Occupancy{1, 0});
  CHECK(rotate(c, 0) == c);
  CHECK(rotate(c, 3) == c);
  CHECK(rotate(rotate(c, 1), 2) == c);
  CHECK(rotate(c, -1) == rotate(c, 2));
}

TEST_CASE("reverse_sites") {
  Config c{{{1, 0}, {0, 1}, {1, 1}}};
  Config r = reverse_sites(c);
  CHECK(r.sites[0] == Occupancy{1, 1});
  CHECK(r.sites[2] == Occupancy{1, 0});
  CHECK(reverse_sites(r) == c);
}

TEST_CASE("is_basic") {
  CHECK(is_basic({1, 1}));
  CHECK_FALSE(is_basic({2, 0}));
  CHECK(is_basic({3, 1}));
  CHECK_FALSE(is_basic({}));
}

TEST_CASE("pretty multiset display") {
  CHECK(pretty(Config{{{1, 1}, {1, 0}}}) == "|12,1>");
  CHECK(pretty(Config{{{0, 0}, {2, 1}}}) == "|-,112>");
  CHECK(pretty(Config{{{0, 1}}}) == "|2>");
}

TEST_CASE("config json round trip") {
  Config c{{{1, 1}, {1, 0}}};
  nlohmann::json j = config_to_json(c);
  CHECK(j.dump() == "[[1,1],[1,0]]");
  CHECK(config_from_json(j) == c);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse("[]")), domain_error);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse("[[1],[1,2]]")),
                  domain_error);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse("[[-1]]")),
                  domain_error);
}
