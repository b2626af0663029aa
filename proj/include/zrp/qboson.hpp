#pragma once
// Exact q-boson algebra engine and its truncated Fock representation.
//
// Generators obey
//   k b± = q^{±1} b± k,   b+ b- = 1 - k,   b- b+ = 1 - q k,
// acting on the Fock space spanned by |0>, |1>, ... as
//   b+|m> = |m+1>,   b-|m> = (1-q^m)|m-1>,   k|m> = q^m|m>,
// with the bilinear pairing <m|m'> = theta(m=m') (q)_m and trace
//   Tr(X) = sum_{m>=0} <m|X|m> / (q)_m,   Tr(k^r) = 1/(1-q^r).
//
// Elements are stored as sums of normal-ordered monomials b+^a k^s b-^c.
// That presentation is overcomplete: a monomial with a,c >= 1 reduces further
// via b+ k^s b- = q^{-s}(k^s - k^{s+1}), so equality tests run through
// no_canonical first. Traces are evaluated exactly, never by truncation.
//
// FockMatrix is the cutoff representation on |0>..|dim-1>. Every matrix
// carries a validity window `win`: the submatrix [0,win) x [0,win) is
// guaranteed exact. Products shrink the window according to how far the
// factors can move boson number, so a comparison outside guaranteed entries
// is a hard error rather than a silent pass.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "zrp/qseries.hpp"

namespace zrp {

// Normal-ordered monomial b+^a k^s b-^c.
struct BosonMono {
  int a = 0, s = 0, c = 0;
  friend bool operator<(const BosonMono& x, const BosonMono& y) {
    return std::array<int, 3>{x.a, x.s, x.c} <
           std::array<int, 3>{y.a, y.s, y.c};
  }
  friend bool operator==(const BosonMono& x, const BosonMono& y) {
    return x.a == y.a && x.s == y.s && x.c == y.c;
  }
};

struct NOElement {
  std::map<BosonMono, Scalar> terms;  // no zero coefficients stored
};

NOElement no_monomial(int a, int s, int c, const Scalar& coeff);
NOElement no_add(const NOElement& x, const NOElement& y);
NOElement no_scale(const Scalar& c, const NOElement& x);
NOElement no_multiply(const NOElement& x, const NOElement& y, const Scalar& q);

// Rewrites every mixed monomial (a >= 1 and c >= 1) into the b+^a k^s and
// k^s b-^c basis. Mixed monomials with s >= 1 need q != 0.
NOElement no_canonical(const NOElement& x, const Scalar& q);

bool no_equal(const NOElement& x, const NOElement& y, const Scalar& q,
              std::string* witness = nullptr);

std::string no_str(const NOElement& x);

// prod_{i=0}^{r-1} (1 - q^i x).
NOElement op_qpoch(const NOElement& x, int r, const Scalar& q);

// Exact trace. Monomials with a != c contribute zero; diagonal monomials with
// s >= 1 use Tr(b+^a k^s b-^a) = (q)_a (q)_{s-1} / (q)_{a+s}; diagonal
// monomials with s = 0 diverge individually and are summed as a group, which
// must have zero net constant term or a domain_error is thrown.
Scalar no_trace(const NOElement& x, const Scalar& q);

// ---------------------------------------------------------------------------
// Truncated Fock representation with validity-window bookkeeping.

struct FockMatrix {
  int dim = 0;      // basis |0>..|dim-1>
  int win = 0;      // entries with row, col < win are guaranteed exact
  int raise_b = 0;  // max boson-number increase, clamped to [0, dim]
  int drop_b = 0;   // max boson-number decrease, clamped to [0, dim]
  std::vector<std::vector<Scalar>> a;  // a[row][col]
};

FockMatrix fock_represent(const NOElement& x, int dim, const Scalar& q);

// Site operator Z_alpha(mu) for n = 2: the b+ series
//   sum_j mu^{-j} (mu)_j / (q)_j b+^j
// followed by the tail k^{alpha_2} b-^{alpha_1}, truncated so that every
// in-window entry is exact. raise_b carries the full-series sentinel dim.
FockMatrix fock_site_z(const Occupancy& alpha, const Scalar& mu, int dim,
                       const Scalar& q);

// Inverse of the alpha = 0 site operator: sum_j (lambda^{-1})_j / (q)_j b+^j.
FockMatrix fock_x0_inverse(const Scalar& lambda, int dim, const Scalar& q);

FockMatrix fock_mul(const FockMatrix& x, const FockMatrix& y);
FockMatrix fock_add(const FockMatrix& x, const FockMatrix& y);
FockMatrix fock_scale(const Scalar& c, const FockMatrix& x);

// Equality on the shared guaranteed-exact window; throws domain_error when
// that window is empty.
bool fock_equal_window(const FockMatrix& x, const FockMatrix& y,
                       std::string* witness = nullptr);

// ---------------------------------------------------------------------------
// Verifiers. X_alpha(mu) = g_alpha(mu) Z_alpha(mu) throughout.

// Exchange relation of Zamolodchikov-Faddeev type,
//   X_alpha(mu) X_beta(lambda) = sum_{gamma <= alpha}
//     Phi(beta | alpha+beta-gamma; lambda, mu)
//     X_gamma(lambda) X_{alpha+beta-gamma}(mu),
// checked as a window-exact matrix identity at cutoff dim.
bool verify_zf_relation(const Occupancy& alpha, const Occupancy& beta,
                        const Scalar& lambda, const Scalar& mu, const Scalar& q,
                        int dim, std::string* witness = nullptr);

// Auxiliary condition
//   X_beta(mu) X_0(lambda)^{-1} X_gamma(lambda)
//     = q^{phi(beta,gamma)} g_beta(mu) g_gamma(lambda) / g_{beta+gamma}(mu)
//       X_{beta+gamma}(mu).
bool verify_aux_condition(const Occupancy& beta, const Occupancy& gamma,
                          const Scalar& lambda, const Scalar& mu,
                          const Scalar& q, int dim,
                          std::string* witness = nullptr);

// Trivial representation K_alpha = k^{alpha_2} b-^{alpha_1}:
//   K_alpha K_beta = q^{phi(alpha,beta)} K_{alpha+beta},  K_0 = 1,
// as an exact element equality.
bool verify_trivial_rep(const Occupancy& alpha, const Occupancy& beta,
                        const Scalar& q, std::string* witness = nullptr);

// The operator identities the exchange relation reduces to, each checked both
// as a canonical element equality and as a Fock-window equality:
//   (i)   the pure-raising identity expanding (lambda^{-1} b+)_{alpha_2}
//         over the mu-series basis,
//   (ii)  the lowering identity rewriting (b+)_m b-^m as a Pochhammer sum in
//         mu^{-1} q^{1-m} (b- + k), at m = alpha_1,
//   (iii) the combined two-index identity at (alpha_1, alpha_2) built from
//         W = q^{-alpha_2} b- + lambda^{-1} k and
//         X_{g2} = q^{-g2} b- + mu^{-1} k.
bool verify_proof_identities(int alpha1, int alpha2, const Scalar& lambda,
                             const Scalar& mu, const Scalar& q, int dim,
                             std::string* witness = nullptr);

}  // namespace zrp
