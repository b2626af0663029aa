#include "zrp/qboson.hpp"

#include <utility>

#include "zrp/rmatrix.hpp"

namespace zrp {

namespace {

void acc_term(std::map<BosonMono, Scalar>& terms, const BosonMono& m,
              const Scalar& v) {
  if (v.is_zero()) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) terms.erase(it);
}

// x * b+: on a monomial b+^a k^s b-^c,
//   c >= 1:  b-^c b+ = b-^{c-1} - q^c k b-^{c-1}
//   c == 0:  k^s b+ = q^s b+ k^s.
NOElement rmul_bplus(const NOElement& x, const Scalar& q) {
  NOElement r;
  for (const auto& [m, v] : x.terms) {
    if (m.c >= 1) {
      acc_term(r.terms, {m.a, m.s, m.c - 1}, v);
      acc_term(r.terms, {m.a, m.s + 1, m.c - 1}, -v * q.pow(m.c));
    } else {
      acc_term(r.terms, {m.a + 1, m.s, 0}, v * q.pow(m.s));
    }
  }
  return r;
}

Scalar sign_pow(int e, const Scalar& proto) {
  return proto.like(e % 2 ? -1 : 1);
}

// sum_{m>=0} (prod_{i=0}^{a-1}(1 - q^{m-i}) - 1), the convergent part of a
// diagonal s = 0 monomial once net constant terms cancel.
Scalar diag_tail(int a, const Scalar& q) {
  if (a == 0) return q.like(0);
  if (q.is_zero()) return q.like(-a);  // product is 0 for m < a, 1 after
  Scalar total = q.like(0);
  for (int r = 1; r <= a; ++r) {
    Scalar t = qbinom(a, r, q) * q.pow(static_cast<long>(r) * (r - 1) / 2 +
                                       static_cast<long>(r) * (1 - a)) /
               (q.like(1) - q.pow(r));
    total += (r % 2) ? -t : t;
  }
  return total;
}

void require_same_dim(const FockMatrix& x, const FockMatrix& y) {
  if (x.dim != y.dim) throw domain_error("fock cutoff mismatch");
}

FockMatrix site_x(const Occupancy& alpha, const Scalar& z, int dim,
                  const Scalar& q) {
  return fock_scale(g_weight(alpha, z, q), fock_site_z(alpha, z, dim, q));
}

}  // namespace

NOElement no_monomial(int a, int s, int c, const Scalar& coeff) {
  if (a < 0 || s < 0 || c < 0) throw domain_error("negative monomial exponent");
  NOElement r;
  acc_term(r.terms, {a, s, c}, coeff);
  return r;
}

NOElement no_add(const NOElement& x, const NOElement& y) {
  NOElement r = x;
  for (const auto& [m, v] : y.terms) acc_term(r.terms, m, v);
  return r;
}

NOElement no_scale(const Scalar& c, const NOElement& x) {
  NOElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : x.terms) r.terms.emplace(m, c * v);
  return r;
}

NOElement no_multiply(const NOElement& x, const NOElement& y, const Scalar& q) {
  NOElement out;
  for (const auto& [my, vy] : y.terms) {
    NOElement t = x;
    for (int i = 0; i < my.a; ++i) t = rmul_bplus(t, q);
    // trailing k^{s'} b-^{c'} commutes past each b-^c at cost q^{c s'}
    for (const auto& [m, v] : t.terms)
      acc_term(out.terms, {m.a, m.s + my.s, m.c + my.c},
               v * vy * q.pow(static_cast<long>(m.c) * my.s));
  }
  return out;
}

NOElement no_canonical(const NOElement& x, const Scalar& q) {
  NOElement out;
  std::map<BosonMono, Scalar> work = x.terms;
  while (!work.empty()) {
    auto it = work.begin();
    BosonMono m = it->first;
    Scalar v = it->second;
    work.erase(it);
    if (v.is_zero()) continue;
    if (m.a >= 1 && m.c >= 1) {
      // b+^a k^s b-^c = q^{-s} (b+^{a-1} k^s b-^{c-1} - b+^{a-1} k^{s+1} b-^{c-1})
      if (m.s >= 1 && q.is_zero())
        throw domain_error("no_canonical: mixed monomial with k power needs q != 0");
      Scalar f = v * q.pow(-m.s);
      acc_term(work, {m.a - 1, m.s, m.c - 1}, f);
      acc_term(work, {m.a - 1, m.s + 1, m.c - 1}, -f);
    } else {
      acc_term(out.terms, m, v);
    }
  }
  return out;
}

bool no_equal(const NOElement& x, const NOElement& y, const Scalar& q,
              std::string* witness) {
  NOElement diff = no_canonical(no_add(x, no_scale(q.like(-1), y)), q);
  if (diff.terms.empty()) return true;
  if (witness) *witness = "element difference: " + no_str(diff);
  return false;
}

std::string no_str(const NOElement& x) {
  if (x.terms.empty()) return "0";
  std::string out;
  for (const auto& [m, v] : x.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + v.str() + ")";
    auto pow_str = [&](const char* g, int e) {
      if (e == 0) return;
      out += " ";
      out += g;
      if (e > 1) out += "^" + std::to_string(e);
    };
    pow_str("b+", m.a);
    pow_str("k", m.s);
    pow_str("b-", m.c);
  }
  return out;
}

NOElement op_qpoch(const NOElement& x, int r, const Scalar& q) {
  NOElement out = no_monomial(0, 0, 0, q.like(1));
  for (int i = 0; i < r; ++i)
    out = no_multiply(out, no_add(no_monomial(0, 0, 0, q.like(1)),
                                  no_scale(-q.pow(i), x)),
                      q);
  return out;
}

Scalar no_trace(const NOElement& x, const Scalar& q) {
  Scalar total = q.like(0);
  Scalar const_sum = q.like(0);
  std::vector<std::pair<int, Scalar>> flat;  // diagonal s = 0 monomials
  for (const auto& [m, v] : x.terms) {
    if (m.a != m.c) continue;
    if (m.s >= 1) {
      total += v * qpoch(q, m.a, q) * qpoch(q, m.s - 1, q) /
               qpoch(q, m.a + m.s, q);
    } else {
      const_sum += v;
      flat.emplace_back(m.a, v);
    }
  }
  if (!flat.empty()) {
    if (!const_sum.is_zero())
      throw domain_error("no_trace: divergent trace, net constant term " +
                         const_sum.str());
    for (const auto& [a, v] : flat) total += v * diag_tail(a, q);
  }
  return total;
}

// ---------------------------------------------------------------------------

FockMatrix fock_represent(const NOElement& x, int dim, const Scalar& q) {
  if (dim < 1) throw domain_error("fock cutoff must be positive");
  FockMatrix f;
  f.dim = dim;
  f.win = dim;
  f.a.assign(dim, std::vector<Scalar>(dim, q.like(0)));
  int raise = 0, drop = 0;
  for (const auto& [m, v] : x.terms) {
    raise = std::max(raise, m.a - m.c);
    drop = std::max(drop, m.c - m.a);
    for (int col = m.c; col < dim; ++col) {
      int row = col - m.c + m.a;
      if (row >= dim) break;
      Scalar w = v * q.pow(static_cast<long>(m.s) * (col - m.c));
      for (int i = 0; i < m.c; ++i) w *= q.like(1) - q.pow(col - i);
      f.a[row][col] += w;
    }
  }
  f.raise_b = std::min(raise, dim);
  f.drop_b = std::min(drop, dim);
  return f;
}

FockMatrix fock_site_z(const Occupancy& alpha, const Scalar& mu, int dim,
                       const Scalar& q) {
  if (alpha.size() != 2) throw domain_error("site operator needs n = 2");
  if (mu.is_zero()) throw domain_error("site operator needs mu != 0");
  NOElement series;
  for (int j = 0; j < dim; ++j)
    series = no_add(series,
                    no_monomial(j, alpha[1], alpha[0],
                                mu.pow(-j) * qpoch(mu, j, q) / qpoch(q, j, q)));
  FockMatrix f = fock_represent(series, dim, q);
  f.raise_b = dim;  // untruncated operator raises without bound
  return f;
}

FockMatrix fock_x0_inverse(const Scalar& lambda, int dim, const Scalar& q) {
  NOElement series;
  for (int j = 0; j < dim; ++j)
    series = no_add(series, no_monomial(j, 0, 0, qpoch(lambda.inv(), j, q) /
                                                     qpoch(q, j, q)));
  FockMatrix f = fock_represent(series, dim, q);
  f.raise_b = dim;
  return f;
}

FockMatrix fock_mul(const FockMatrix& x, const FockMatrix& y) {
  require_same_dim(x, y);
  int dim = x.dim;
  FockMatrix f;
  f.dim = dim;
  f.win = std::max(0, std::min(x.win, y.win) - std::min(x.drop_b, y.raise_b));
  f.raise_b = std::min(x.raise_b + y.raise_b, dim);
  f.drop_b = std::min(x.drop_b + y.drop_b, dim);
  Scalar zero;
  if (!x.a.empty() && !x.a[0].empty()) zero = x.a[0][0].like(0);
  f.a.assign(dim, std::vector<Scalar>(dim, zero));
  for (int r = 0; r < dim; ++r)
    for (int j = 0; j < dim; ++j) {
      if (x.a[r][j].is_zero()) continue;
      for (int c = 0; c < dim; ++c) {
        if (y.a[j][c].is_zero()) continue;
        f.a[r][c] += x.a[r][j] * y.a[j][c];
      }
    }
  return f;
}

FockMatrix fock_add(const FockMatrix& x, const FockMatrix& y) {
  require_same_dim(x, y);
  FockMatrix f = x;
  f.win = std::min(x.win, y.win);
  f.raise_b = std::max(x.raise_b, y.raise_b);
  f.drop_b = std::max(x.drop_b, y.drop_b);
  for (int r = 0; r < f.dim; ++r)
    for (int c = 0; c < f.dim; ++c) f.a[r][c] += y.a[r][c];
  return f;
}

FockMatrix fock_scale(const Scalar& c, const FockMatrix& x) {
  FockMatrix f = x;
  for (auto& row : f.a)
    for (auto& v : row) v *= c;
  return f;
}

bool fock_equal_window(const FockMatrix& x, const FockMatrix& y,
                       std::string* witness) {
  require_same_dim(x, y);
  int w = std::min(x.win, y.win);
  if (w <= 0) throw domain_error("fock comparison window is empty");
  for (int r = 0; r < w; ++r)
    for (int c = 0; c < w; ++c)
      if (x.a[r][c] != y.a[r][c]) {
        if (witness)
          *witness = "entry (" + std::to_string(r) + "," + std::to_string(c) +
                     "): " + x.a[r][c].str() + " vs " + y.a[r][c].str();
        return false;
      }
  return true;
}

// ---------------------------------------------------------------------------

bool verify_zf_relation(const Occupancy& alpha, const Occupancy& beta,
                        const Scalar& lambda, const Scalar& mu, const Scalar& q,
                        int dim, std::string* witness) {
  FockMatrix lhs = fock_mul(site_x(alpha, mu, dim, q),
                            site_x(beta, lambda, dim, q));
  FockMatrix rhs;
  bool first = true;
  for (const auto& g : occ_box(alpha)) {
    Occupancy d = occ_sub(occ_add(alpha, beta), g);
    FockMatrix t = fock_scale(phi_weight(beta, d, lambda, mu, q),
                              fock_mul(site_x(g, lambda, dim, q),
                                       site_x(d, mu, dim, q)));
    rhs = first ? std::move(t) : fock_add(rhs, t);
    first = false;
  }
  return fock_equal_window(lhs, rhs, witness);
}

bool verify_aux_condition(const Occupancy& beta, const Occupancy& gamma,
                          const Scalar& lambda, const Scalar& mu,
                          const Scalar& q, int dim, std::string* witness) {
  FockMatrix lhs =
      fock_mul(fock_mul(site_x(beta, mu, dim, q),
                        fock_x0_inverse(lambda, dim, q)),
               site_x(gamma, lambda, dim, q));
  Scalar f = q.pow(phi_exp(beta, gamma)) * g_weight(beta, mu, q) *
             g_weight(gamma, lambda, q) /
             g_weight(occ_add(beta, gamma), mu, q);
  FockMatrix rhs = fock_scale(f, site_x(occ_add(beta, gamma), mu, dim, q));
  return fock_equal_window(lhs, rhs, witness);
}

bool verify_trivial_rep(const Occupancy& alpha, const Occupancy& beta,
                        const Scalar& q, std::string* witness) {
  if (alpha.size() != 2 || beta.size() != 2)
    throw domain_error("trivial representation needs n = 2");
  NOElement ka = no_monomial(0, alpha[1], alpha[0], q.like(1));
  NOElement kb = no_monomial(0, beta[1], beta[0], q.like(1));
  NOElement rhs = no_monomial(0, alpha[1] + beta[1], alpha[0] + beta[0],
                              q.pow(phi_exp(alpha, beta)));
  return no_equal(no_multiply(ka, kb, q), rhs, q, witness);
}

bool verify_proof_identities(int alpha1, int alpha2, const Scalar& lambda,
                             const Scalar& mu, const Scalar& q, int dim,
                             std::string* witness) {
  Scalar one = q.like(1);
  NOElement bp = no_monomial(1, 0, 0, one);
  NOElement bm = no_monomial(0, 0, 1, one);
  NOElement kk = no_monomial(0, 1, 0, one);
  Scalar nu = mu / lambda;

  auto check = [&](const char* label, const NOElement& lhs,
                   const NOElement& rhs) {
    std::string w;
    if (!no_equal(lhs, rhs, q, &w)) {
      if (witness) *witness = std::string(label) + ": " + w;
      return false;
    }
    if (!fock_equal_window(fock_represent(lhs, dim, q),
                           fock_represent(rhs, dim, q), &w)) {
      if (witness) *witness = std::string(label) + " (fock): " + w;
      return false;
    }
    return true;
  };

  // (i) pure-raising identity at alpha2
  {
    NOElement lhs = op_qpoch(no_scale(lambda.inv(), bp), alpha2, q);
    NOElement rhs;
    for (int g2 = 0; g2 <= alpha2; ++g2) {
      Scalar cf = nu.pow(g2) * qpoch(lambda, g2, q) *
                  qpoch(nu, alpha2 - g2, q) / qpoch(mu, alpha2, q) *
                  qbinom(alpha2, g2, q);
      NOElement t = no_multiply(op_qpoch(no_scale(mu.inv(), bp), g2, q),
                                op_qpoch(no_scale(q.pow(g2), bp), alpha2 - g2,
                                         q),
                                q);
      rhs = no_add(rhs, no_scale(cf, t));
    }
    if (!check("raising identity", lhs, rhs)) return false;
  }

  // (ii) lowering identity at m = alpha1
  {
    int m = alpha1;
    NOElement lhs =
        no_multiply(op_qpoch(bp, m, q), no_monomial(0, 0, m, one), q);
    NOElement y = no_add(bm, kk);
    NOElement rhs;
    for (int s = 0; s <= m; ++s)
      rhs = no_add(rhs, no_scale(mu.pow(m - s) * qbinom(m, s, q) *
                                     qpoch(mu, s, q),
                                 op_qpoch(no_scale(mu.inv() * q.pow(1 - m), y),
                                          m - s, q)));
    rhs = no_scale(sign_pow(m, q) * q.pow(static_cast<long>(m) * (m - 1) / 2),
                   rhs);
    if (!check("lowering identity", lhs, rhs)) return false;
  }

  // (iii) combined identity at (alpha1, alpha2)
  {
    NOElement w_op = no_add(no_scale(q.pow(-alpha2), bm),
                            no_scale(lambda.inv(), kk));
    NOElement lhs = no_scale(
        sign_pow(alpha1, q) *
            q.pow(static_cast<long>(alpha1) * (alpha1 - 1) / 2),
        no_multiply(op_qpoch(no_scale(lambda.inv(), bp), alpha2, q),
                    op_qpoch(no_scale(q.pow(1 - alpha1), w_op), alpha1, q),
                    q));
    NOElement rhs;
    int aa = alpha1 + alpha2;
    for (int g1 = 0; g1 <= alpha1; ++g1)
      for (int g2 = 0; g2 <= alpha2; ++g2) {
        int gg = g1 + g2;
        Scalar cf = sign_pow(g1, q) *
                    q.pow(static_cast<long>(g1 - alpha1) * alpha2 +
                          static_cast<long>(g1) * (g1 - 1) / 2) *
                    nu.pow(gg) * qpoch(lambda, gg, q) * qpoch(nu, aa - gg, q) /
                    qpoch(mu, aa, q) * qbinom(alpha1, g1, q) *
                    qbinom(alpha2, g2, q);
        NOElement xg2 = no_add(no_scale(q.pow(-g2), bm),
                               no_scale(mu.inv(), kk));
        NOElement t = no_multiply(op_qpoch(no_scale(mu.inv(), bp), g2, q),
                                  op_qpoch(no_scale(q.pow(gg), bp), aa - gg, q),
                                  q);
        t = no_multiply(t, op_qpoch(no_scale(q.pow(1 - g1), xg2), g1, q), q);
        t = no_multiply(t, no_monomial(0, 0, alpha1 - g1, one), q);
        rhs = no_add(rhs, no_scale(cf, t));
      }
    if (!check("combined identity", lhs, rhs)) return false;
  }
  return true;
}

}  // namespace zrp
