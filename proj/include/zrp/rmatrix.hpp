#pragma once
// The stochastic R matrix on W (x) W and its identity suite.
//
// Element convention (column-stochastic):
//   S(lambda,mu)^{gamma,delta}_{alpha,beta}
//     = theta(gamma+delta = alpha+beta) * Phi(gamma | beta; lambda, mu)
// with
//   Phi(gamma|beta; lambda,mu) = q^{phi(beta-gamma, gamma)} (mu/lambda)^{|gamma|}
//       * (lambda)_{|gamma|} (mu/lambda)_{|beta|-|gamma|} / (mu)_{|beta|}
//       * prod_i [beta_i gamma_i]_q,
// zero unless gamma <= beta. The operator acts on |alpha> (x) |beta> and
// conserves alpha + beta, so it splits into finite blocks of fixed total
// weight; only those blocks are ever materialized.

#include <optional>
#include <string>

#include "zrp/linalg.hpp"
#include "zrp/state.hpp"

namespace zrp {

struct RBlock {
  Scalar lambda, mu, q;
  int n = 0;
  Occupancy weight;       // conserved alpha + beta
  Sector pair_basis;      // L = 2 sector over (first, second) slot pairs
  SparseCols cols;        // column (alpha,beta) -> rows (gamma,delta)
};

Scalar phi_weight(const Occupancy& gamma, const Occupancy& beta,
                  const Scalar& lambda, const Scalar& mu, const Scalar& q);

Scalar r_element(const Occupancy& gamma, const Occupancy& delta,
                 const Occupancy& alpha, const Occupancy& beta,
                 const Scalar& lambda, const Scalar& mu, const Scalar& q);

RBlock build_r_block(const Occupancy& weight, const Scalar& lambda,
                     const Scalar& mu, const Scalar& q);

// Yang-Baxter on the three-slot space of total weight `weight`, for both the
// operator S and its transpose:
//   S_12(v1,v2) S_13(v1,v3) S_23(v2,v3) = S_23(v2,v3) S_13(v1,v3) S_12(v1,v2).
bool verify_yang_baxter(const Occupancy& weight, const Scalar& nu1,
                        const Scalar& nu2, const Scalar& nu3, const Scalar& q,
                        std::string* witness = nullptr);

// Checked-R inversion: Scheck(lambda,mu) Scheck(mu,lambda) = id, where
// Scheck(|a>(x)|b>) = sum S^{g,d}_{a,b} |d>(x)|g>.
bool verify_inversion(const Occupancy& weight, const Scalar& lambda,
                      const Scalar& mu, const Scalar& q,
                      std::string* witness = nullptr);

// Scalar gauge identities at the given occupancies:
//  - reversal of S elements under species order reversal with gauge factors
//    gtilde_a(mu) = g_a(mu) q^{-phi(a,a)},
//  - absorption of g factors into one R element,
//  - the Phi exchange property behind the reversal,
//  - Phi reversal under species order reversal.
bool verify_gauge_identities(const Occupancy& alpha, const Occupancy& beta,
                             const Occupancy& gamma, const Occupancy& delta,
                             const Scalar& lambda, const Scalar& mu,
                             const Scalar& q, std::string* witness = nullptr);

}  // namespace zrp
