#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "zrp/mpa.hpp"
#include "zrp/markov.hpp"
#include "zrp/qboson.hpp"

using namespace zrp;

namespace {

Scalar ex(long n, long d = 1) { return Scalar::exact(n, d); }

Scalar mpa_inhom(const Config& c, const std::vector<Scalar>& mus,
                 const Scalar& q) {
  MpaQuery qy;
  qy.config = c;
  qy.formula = MpaFormula::inhomogeneous;
  qy.mus = mus;
  qy.q = q;
  return mpa_probability(qy);
}

Scalar mpa_hom(const Config& c, const Scalar& mu, const Scalar& q) {
  MpaQuery qy;
  qy.config = c;
  qy.formula = MpaFormula::homogeneous;
  qy.mu = mu;
  qy.q = q;
  return mpa_probability(qy);
}

Scalar mpa_tazrp(const Config& c) {
  MpaQuery qy;
  qy.config = c;
  qy.formula = MpaFormula::tazrp;
  qy.q = ex(0);
  return mpa_probability(qy);
}

bool proportional(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) return false;
  int ref = -1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (ref < 0 && !a[i].is_zero()) ref = static_cast<int>(i);
  }
  if (ref < 0) return true;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[ref] * b[i] != a[i] * b[ref]) return false;
  return true;
}

std::vector<Scalar> rotate_left(const std::vector<Scalar>& v) {
  std::vector<Scalar> r(v.begin() + 1, v.end());
  r.push_back(v[0]);
  return r;
}

}  // namespace

TEST_CASE("two-site sector: hand-expanded traces and the steady-state gauge") {
  const Config pair12{{{0, 0}, {1, 1}}}, split21{{{0, 1}, {1, 0}}};
  const Config split12{{{1, 0}, {0, 1}}}, pair21{{{1, 1}, {0, 0}}};

  // the two-composition expansions: both words for |-,12> reduce to b+ k b-,
  // while |1,2> splits into b+ b- k and b- b+ k
  {
    const Scalar m1 = ex(1, 4), m2 = ex(1, 5), q = ex(1, 3), one = ex(1);
    auto c1 = [&](const Scalar& nu) {
      return nu.inv() * qpoch(nu, 1, q) / qpoch(q, 1, q);
    };
    const Scalar q1sq = qpoch(q, 1, q) * qpoch(q, 1, q);
    const Scalar tr_bpkbm = (one - q * q).inv();

    Scalar want_pair =
        m2.pow(-2) * qpoch(m2, 2, q) / q1sq * (c1(m1) + c1(m2)) * tr_bpkbm;
    CHECK(mpa_inhom(pair12, {m1, m2}, q) == want_pair);

    Scalar want_split = (m1 * m2).inv() * qpoch(m1, 1, q) * qpoch(m2, 1, q) /
                        q1sq * (c1(m1) * q + c1(m2)) * tr_bpkbm;
    CHECK(mpa_inhom(split12, {m1, m2}, q) == want_split);
  }

  // the explicit degree-six steady-state vector is the matrix product values
  // times (mu1 mu2)^3 (q)_2 (1-q)^2
  const Scalar pts[2][3] = {{ex(1, 4), ex(1, 5), ex(1, 3)},
                            {ex(2, 7), ex(1, 3), ex(1, 6)}};
  for (const auto& p : pts) {
    const Scalar &m1 = p[0], &m2 = p[1], &q = p[2], one = ex(1), two = ex(2);
    auto c_pair = [&](const Scalar& a, const Scalar& b) {
      return a.pow(2) * (one - b) * (one - q * b) * (a + b - two * a * b);
    };
    auto c_split = [&](const Scalar& a, const Scalar& b) {
      return a * b * (one - a) * (one - b) * (a + q * b - a * b - q * a * b);
    };
    const Scalar gauge =
        (m1 * m2).pow(3) * qpoch(q, 2, q) * (one - q) * (one - q);
    CHECK(mpa_inhom(pair12, {m1, m2}, q) * gauge == c_pair(m1, m2));
    CHECK(mpa_inhom(pair21, {m1, m2}, q) * gauge == c_pair(m2, m1));
    CHECK(mpa_inhom(split12, {m1, m2}, q) * gauge == c_split(m1, m2));
    CHECK(mpa_inhom(split21, {m1, m2}, q) * gauge == c_split(m2, m1));
  }
}

TEST_CASE("condensed configurations match the rotated closed form") {
  const Scalar q = ex(1, 3);
  const std::vector<Scalar> mus2 = {ex(1, 4), ex(1, 5)};
  const std::vector<Scalar> mus3 = {ex(1, 4), ex(1, 5), ex(1, 6)};

  auto condensed_config = [](int site, int length, const Occupancy& m) {
    Config c;
    c.sites.assign(length, Occupancy{0, 0});
    c.sites[site] = m;
    return c;
  };

  for (const Occupancy& m : {Occupancy{1, 1}, Occupancy{2, 1}, Occupancy{0, 2}})
    for (int site = 0; site < 2; ++site) {
      INFO("L=2 site ", site, " m=(", m[0], ",", m[1], ")");
      CHECK(condensed_closed_form(site, m, mus2, q) ==
            mpa_inhom(condensed_config(site, 2, m), mus2, q));
    }
  for (const Occupancy& m : {Occupancy{2, 1}, Occupancy{2, 2}, Occupancy{1, 3}})
    for (int site = 0; site < 3; ++site) {
      INFO("L=3 site ", site, " m=(", m[0], ",", m[1], ")");
      CHECK(condensed_closed_form(site, m, mus3, q) ==
            mpa_inhom(condensed_config(site, 3, m), mus3, q));
    }

  CHECK_THROWS_AS(condensed_closed_form(2, {1, 1}, mus2, q), domain_error);
  CHECK_THROWS_AS(condensed_closed_form(0, {2, 0}, mus2, q), domain_error);
}

TEST_CASE("trace is invariant under a joint cyclic shift") {
  const Scalar q = ex(1, 3);
  const std::vector<Scalar> mus = {ex(1, 4), ex(1, 5), ex(1, 6)};
  Sector sec = enumerate_sector(2, 3, {2, 1});
  for (const auto& c : sec.configs) {
    INFO(pretty(c));
    CHECK(mpa_inhom(rotate(c, 1), rotate_left(mus), q) ==
          mpa_inhom(c, mus, q));
  }
}

TEST_CASE("homogeneous formula is a gauge rescaling of equal parameters") {
  const Scalar q = ex(1, 3), mu = ex(1, 5);
  Sector sec = enumerate_sector(2, 3, {2, 1});
  const std::vector<Scalar> mus(3, mu);
  const Scalar gauge = mu.pow(-(2 + 1) - 2);  // mu^{-|m| - m1}
  for (const auto& c : sec.configs) {
    INFO(pretty(c));
    CHECK(mpa_inhom(c, mus, q) == gauge * mpa_hom(c, mu, q));
  }
}

TEST_CASE("matrix product values are proportional to the direct steady state") {
  struct Case {
    int L;
    Occupancy m;
    std::vector<Scalar> mus;
    Scalar q;
  };
  const std::vector<Case> cases = {
      {2, {1, 1}, {ex(1, 4), ex(1, 5)}, ex(1, 3)},
      {2, {2, 1}, {ex(2, 7), ex(1, 3)}, ex(1, 6)},
      {3, {2, 1}, {ex(1, 4), ex(1, 5), ex(1, 6)}, ex(1, 3)},
      {3, {1, 2}, {ex(2, 7), ex(1, 3), ex(1, 5)}, ex(1, 6)},
      {3, {1, 1}, {ex(1, 5), ex(1, 5), ex(1, 5)}, ex(1, 3)},
      {4, {1, 1}, {ex(1, 4), ex(1, 5), ex(1, 6), ex(1, 7)}, ex(1, 3)},
  };
  for (const auto& cs : cases) {
    Sector sec = enumerate_sector(2, cs.L, cs.m);
    MpaReport rep = crosscheck_steady(sec, cs.mus, cs.q);
    INFO("L=", cs.L, " m=(", cs.m[0], ",", cs.m[1], ") ", rep.witness);
    REQUIRE(rep.proportional);
    Scalar total = cs.q.like(0);
    for (const Scalar& v : rep.mpa) total += v;
    CHECK(rep.ratio == total);  // direct is unit-sum, so the ratio is the mass
    CHECK(rep.ratio > cs.q.like(0));
  }

  // the spectral parameter used for the transfer matrix must not matter
  Sector sec = enumerate_sector(2, 2, {1, 1});
  const std::vector<Scalar> mus = {ex(1, 4), ex(1, 5)};
  MpaReport a = crosscheck_steady(sec, mus, ex(1, 3));
  MpaReport b = crosscheck_steady(sec, mus, ex(1, 3), ex(2, 3));
  REQUIRE(a.proportional);
  REQUIRE(b.proportional);
  CHECK(a.ratio == b.ratio);
}

TEST_CASE("a species-2 particle is required; without species 1 the state factorizes") {
  const Scalar q = ex(1, 3);
  CHECK_THROWS_AS(mpa_inhom(Config{{{2, 0}, {0, 0}}}, {ex(1, 4), ex(1, 5)}, q),
                  domain_error);
  CHECK_THROWS_AS(mpa_inhom(Config{{{0, 0}, {0, 0}}}, {ex(1, 4), ex(1, 5)}, q),
                  domain_error);

  // m1 = 0: single composition, trace Tr(k^{m2}) = 1/(1-q^{m2}), so the
  // probability is exactly the product measure weight over that constant
  const std::vector<Scalar> mus = {ex(1, 4), ex(1, 5), ex(1, 6)};
  Sector sec = enumerate_sector(2, 3, {0, 2});
  const Scalar tr = (ex(1) - q * q).inv();
  for (const auto& c : sec.configs) {
    Scalar pm = ex(1);
    for (int i = 0; i < 3; ++i) pm *= g_weight(c.sites[i], mus[i], q);
    CHECK(mpa_inhom(c, mus, q) == pm * tr);
  }
}

TEST_CASE("totally asymmetric point: pins, homogeneous limit, generator") {
  // hand-reduced traces at q = 0: the four two-site weights are 2,1,1,2
  Sector sec2 = enumerate_sector(2, 2, {1, 1});
  CHECK(mpa_tazrp(Config{{{0, 0}, {1, 1}}}) == ex(2));
  CHECK(mpa_tazrp(Config{{{0, 1}, {1, 0}}}) == ex(1));
  CHECK(mpa_tazrp(Config{{{1, 0}, {0, 1}}}) == ex(1));
  CHECK(mpa_tazrp(Config{{{1, 1}, {0, 0}}}) == ex(2));

  // the totally asymmetric weights are the exact q = 0, mu = 0 evaluation of
  // the homogeneous formula
  for (int L = 2; L <= 3; ++L)
    for (const Occupancy& m :
         {Occupancy{1, 1}, Occupancy{2, 1}, Occupancy{1, 2}, Occupancy{2, 2},
          Occupancy{3, 1}, Occupancy{1, 3}, Occupancy{0, 2}}) {
      Sector sec = enumerate_sector(2, L, m);
      for (const auto& c : sec.configs) {
        INFO("L=", L, " ", pretty(c));
        CHECK(mpa_tazrp(c) == mpa_hom(c, ex(0), ex(0)));
      }
    }

  // left-hopping generator at a = 0, mu = 0, q = 0 has the same steady state
  for (int L = 2; L <= 3; ++L) {
    Sector sec = enumerate_sector(2, L, {1, 1});
    SteadyState ss = steady_state(hamiltonian(sec, ex(0), ex(1), ex(0), ex(0)));
    std::vector<Scalar> want;
    want.reserve(sec.dim());
    for (const auto& c : sec.configs) want.push_back(mpa_tazrp(c));
    INFO("L=", L);
    CHECK(proportional(ss.probs, want));
  }
}

TEST_CASE("float-mode value agrees with a truncated basis trace") {
  const int D = 40;
  const Scalar q = Scalar::real(0.3);
  const std::vector<Scalar> mus = {Scalar::real(0.25), Scalar::real(0.2)};
  for (const Config& c :
       {Config{{{0, 0}, {1, 1}}}, Config{{{1, 0}, {0, 1}}},
        Config{{{1, 1}, {1, 1}}}}) {
    FockMatrix w = fock_mul(fock_site_z(c.sites[0], mus[0], D, q),
                            fock_site_z(c.sites[1], mus[1], D, q));
    Scalar tr = Scalar::real(0.0);
    for (int i = 0; i < D; ++i) tr += w.a[i][i];
    Scalar pref = Scalar::real(1.0);
    for (int i = 0; i < 2; ++i) pref *= g_weight(c.sites[i], mus[i], q);
    const double got = mpa_inhom(c, mus, q).to_double();
    const double want = (pref * tr).to_double();
    INFO(pretty(c), ": composition sum ", got, " truncated trace ", want);
    CHECK(std::abs(got - want) < 1e-9);
  }
}

TEST_CASE("separation sums: proven orders hold, open orders are recorded") {
  const Scalar mu = ex(1, 5), q = ex(1, 3);

  // r = 0 and r = |m| are rearrangements of the condensed probability
  CHECK(conjecture_ldma({2, 1}, 3, 2, 0, mu, q).equal);
  CHECK(conjecture_ldma({2, 1}, 3, 2, 3, mu, q).equal);
  CHECK(conjecture_ldma({2, 2}, 2, 2, 4, mu, q).equal);

  // r = 1 holds and the ratio depends on neither the target site nor the
  // ring size
  const Scalar want = qpoch(mu, 2, q) / qpoch(q, 2, q) * qpoch(mu, 1, q) /
                      qpoch(q, 1, q) / (qpoch(mu, 3, q) / qpoch(q, 3, q));
  for (int L = 3; L <= 4; ++L)
    for (int site = 2; site <= L; ++site) {
      LdmaResult res = conjecture_ldma({2, 1}, L, site, 1, mu, q);
      INFO("L=", L, " site=", site, " lhs=", res.lhs.str());
      CHECK(res.equal);
      CHECK(res.rhs == want);
    }
  CHECK(conjecture_ldma({1, 2}, 3, 3, 1, ex(1, 4), ex(2, 7)).equal);

  // higher orders are an open experiment: report, never assert
  for (const Occupancy& m : {Occupancy{2, 1}, Occupancy{2, 2}, Occupancy{1, 3}}) {
    LdmaResult res = conjecture_ldma(m, 3, 2, 2, mu, q);
    MESSAGE("r=2 m=(", m[0], ",", m[1], "): lhs ", res.lhs.str(), " rhs ",
            res.rhs.str(), std::string(res.equal ? " (equal)" : " (deviates)"));
  }

  CHECK_THROWS_AS(conjecture_ldma({2, 1}, 3, 1, 1, mu, q), domain_error);
  CHECK_THROWS_AS(conjecture_ldma({2, 1}, 3, 4, 1, mu, q), domain_error);
  CHECK_THROWS_AS(conjecture_ldma({2, 1}, 3, 2, 4, mu, q), domain_error);
  CHECK_THROWS_AS(conjecture_ldma({2, 0}, 3, 2, 1, mu, q), domain_error);
}

TEST_CASE("query validation") {
  const Scalar q = ex(1, 3);
  MpaQuery qy;
  qy.config = Config{{{1, 0}, {0, 1}}};
  qy.formula = MpaFormula::inhomogeneous;
  qy.mus = {ex(1, 4)};  // one parameter short
  qy.q = q;
  CHECK_THROWS_AS(mpa_probability(qy), domain_error);

  qy.formula = MpaFormula::tazrp;
  qy.q = ex(1, 3);
  CHECK_THROWS_AS(mpa_probability(qy), domain_error);

  qy.formula = MpaFormula::homogeneous;
  qy.mu = ex(1, 5);
  qy.q = q;
  qy.config = Config{{{1, 0, 0}, {0, 1, 0}}};
  CHECK_THROWS_AS(mpa_probability(qy), domain_error);
}
