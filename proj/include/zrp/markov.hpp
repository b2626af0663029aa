#pragma once

#include <map>
#include <string>
#include <vector>

#include "zrp/linalg.hpp"
#include "zrp/rmatrix.hpp"
#include "zrp/state.hpp"

// Sector-restricted stochastic operators of the periodic chain: the discrete
// time transfer matrix T(lambda|mu_1..mu_L), the continuous time generators
// built from single-site hop rates, and the exact steady-state solver.

namespace zrp {

enum class OpKind { transfer, hamiltonian };

// cols[c][r] is the coefficient of |configs[r]> in Op|configs[c]>
struct SectorOperator {
  Sector sector;
  OpKind kind = OpKind::transfer;
  SparseCols cols;
  int dim() const { return sector.dim(); }
};

// One synchronous update sweep. Column beta is a probability distribution
// when 0 < mu_i < lambda < 1 and 0 < q < 1; outside that regime the matrix is
// still built exactly but need not be stochastic.
SectorOperator transfer_matrix(const Sector& sec, const Scalar& lambda,
                               const std::vector<Scalar>& mus, const Scalar& q);

// [T(lambda1), T(lambda2)] = 0 with the same site parameters
bool verify_commuting_family(const Sector& sec, const Scalar& lambda1,
                             const Scalar& lambda2,
                             const std::vector<Scalar>& mus, const Scalar& q,
                             std::string* witness = nullptr);

// Rates for the multiset gamma (|gamma| >= 1) to leave a site holding alpha
// and hop one site right, resp. left. Zero when gamma !<= alpha.
Scalar rate_right(const Occupancy& gamma, const Occupancy& alpha,
                  const Scalar& mu, const Scalar& q);
Scalar rate_left(const Occupancy& gamma, const Occupancy& alpha,
                 const Scalar& mu, const Scalar& q);

// total outflow rate from a site holding alpha against the closed forms
// sum_i q^i/(1-mu q^i) (right) and sum_i 1/(1-mu q^i) (left), i < |alpha|
bool verify_diagonal_closed_form(const Occupancy& alpha, const Scalar& mu,
                                 const Scalar& q,
                                 std::string* witness = nullptr);

// H = a H_right + b H_left on the ring; diagonal entries are the negated
// off-diagonal column sums, never the closed forms above.
SectorOperator hamiltonian(const Sector& sec, const Scalar& a, const Scalar& b,
                           const Scalar& mu, const Scalar& q);

// Signed variant: off-diagonal coefficients direction * (a r_right +
// b r_left), direction = +-1. The mirrored sign is what the duality check
// needs; hamiltonian() is direction = +1.
SectorOperator hamiltonian_directed(const Sector& sec, const Scalar& a,
                                    const Scalar& b, int direction,
                                    const Scalar& mu, const Scalar& q);

// permutation |b_1,..,b_L> -> |b_L,b_1,..,b_{L-1}> iterated `steps` times;
// negative steps give the inverse rotation
SparseCols cyclic_shift(const Sector& sec, int steps);

// T(lambda) on a sector equals lambda^{-|m|} P(lambda) entrywise with P
// polynomial of degree <= |m|. P is recovered exactly through |m|+1 integer
// sample points; one extra sample guards the degree bound.
struct TransferPoly {
  Sector sector;
  int shift = 0;
  std::vector<std::map<int, Poly>> cols;
};
TransferPoly transfer_matrix_poly(const Sector& sec,
                                  const std::vector<Scalar>& mus,
                                  const Scalar& q);
SparseCols transfer_poly_eval(const TransferPoly& tp, const Scalar& lambda);
SparseCols transfer_poly_derivative(const TransferPoly& tp,
                                    const Scalar& lambda);

// The two special points of the homogeneous transfer matrix: T(1) = id and
// T(mu) = cyclic shift, and the log-derivatives there reproduce the two
// generators: -mu^{-1} T'(1) = H_right and mu shift^{-1} T'(mu) = H_left.
// Also checks that hamiltonian(a, b) matches the extracted combination.
bool verify_baxter(const Sector& sec, const Scalar& mu, const Scalar& q,
                   const Scalar& a, const Scalar& b,
                   std::string* witness = nullptr);

// H(a, b, -, q^{-1}, mu^{-1}) = P H(mu b, mu a, +, q, mu) P with P the site
// reversal involution
bool verify_duality(const Sector& sec, const Scalar& a, const Scalar& b,
                    const Scalar& mu, const Scalar& q,
                    std::string* witness = nullptr);

enum class Normalization { unit_sum, mpa_gauge };

struct SteadyState {
  Sector sector;
  std::vector<Scalar> probs;
  Normalization normalization = Normalization::unit_sum;
};

// unique invariant vector: kernel of T - id (transfer) or of H
// (hamiltonian), normalized to unit sum; throws if the kernel is not
// one-dimensional
SteadyState steady_state(const SectorOperator& op);

// per-occupancy event lists for simulation; rates carry a resp. b already
struct RateEvent {
  Occupancy gamma;
  Scalar rate;
};
struct RateTable {
  Scalar a, b, mu, q;
  std::map<Occupancy, std::vector<RateEvent>> right, left;
};
RateTable build_rate_table(const Sector& sec, const Scalar& a, const Scalar& b,
                           const Scalar& mu, const Scalar& q);

}  // namespace zrp
