#pragma once
// Matrix product form of the two-species steady state.
//
// The probability of a configuration is a prefactor of single-site weights
// times the trace of a product of site operators, one per site. Expanding
// each site operator's raising series and keeping only the compositions
// whose total raising power equals the species-1 count m1 (everything else
// is traceless) turns the trace into a finite exact sum.
//
// Three formula variants share that engine:
//   inhomogeneous: per-site parameters mu_i, series weights mu^{-j}(mu)_j/(q)_j
//                  and prefactor prod_i g_{sigma_i}(mu_i),
//   homogeneous:   one mu, rescaled so the series weight is (mu)_j/(q)_j and
//                  the prefactor prod_i (mu)_{|sigma_i|}/((q)_{s1}(q)_{s2}),
//   tazrp:         the q = 0, mu = 0 degeneration; every series weight and
//                  prefactor equals 1.
// Values are returned in the raw trace gauge; normalization is the caller's
// explicit step.

#include <optional>
#include <string>
#include <vector>

#include "zrp/state.hpp"

namespace zrp {

enum class MpaFormula { inhomogeneous, homogeneous, tazrp };

struct MpaQuery {
  Config config;
  MpaFormula formula = MpaFormula::inhomogeneous;
  std::vector<Scalar> mus;  // one per site, inhomogeneous mode only
  Scalar mu;                // homogeneous mode only
  Scalar q;
};

// Exact trace-gauge probability. Throws domain_error when the sector has no
// species-2 particle (the trace does not converge), on a site-count mismatch,
// and in tazrp mode when q != 0.
Scalar mpa_probability(const MpaQuery& query);

// Closed form for the fully condensed configuration (all of m at `site`,
// 0-based), derived by a cyclic rotation of the trace:
//   mu_i^{-|m|} (mu_i)_{|m|} / ((q)_{|m|} (1-q^{m2}))
//     * sum_{r_1+...+r_L = m1} prod_j (mu_j)_{r_j} mu_j^{-r_j} / (q)_{r_j}.
// An independent code path from mpa_probability, used as its oracle.
Scalar condensed_closed_form(int site, const Occupancy& m,
                             const std::vector<Scalar>& mus, const Scalar& q);

struct MpaReport {
  Sector sector;
  std::vector<Scalar> mpa;     // trace-gauge value per config
  std::vector<Scalar> direct;  // unit-sum steady state per config
  bool proportional = false;
  Scalar ratio;                // mpa[i] / direct[i] when proportional
  std::string witness;
};

// Computes the steady state through the transfer matrix and the matrix
// product values for every configuration, then tests exact proportionality.
// lambda defaults to (1 + max mu)/2, which cannot collide with the
// degenerate transfer-matrix points 0, 1, or any mu_i.
MpaReport crosscheck_steady(const Sector& sector,
                            const std::vector<Scalar>& mus, const Scalar& q,
                            std::optional<Scalar> lambda = std::nullopt);

struct LdmaResult {
  Scalar lhs, rhs;
  bool equal = false;
};

// Separation-sum experiment for the homogeneous chain: the probability of
// splitting r particles off the condensed configuration to site `site`
// (1-based, in [2, length]), summed over all splits of size r and divided by
// the condensed probability, against f_{|m|-r} f_r / f_{|m|} with
// f_s = (mu)_s/(q)_s. Equality is proven for r <= 1 and for r = |m|;
// for other r this returns the evidence and asserts nothing.
LdmaResult conjecture_ldma(const Occupancy& m, int length, int site, int r,
                           const Scalar& mu, const Scalar& q);

}  // namespace zrp
