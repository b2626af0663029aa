#include "zrp/markov.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace zrp {

SectorOperator transfer_matrix(const Sector& sec, const Scalar& lambda,
                               const std::vector<Scalar>& mus,
                               const Scalar& q) {
  if (static_cast<int>(mus.size()) != sec.L)
    throw domain_error("transfer_matrix: need one mu per site");
  const int L = sec.L;
  SectorOperator op{sec, OpKind::transfer, SparseCols(sec.dim())};
  for (int col = 0; col < sec.dim(); ++col) {
    const Config& in = sec.configs[col];
    // admissible pass-through loads per site with their vertex weights
    std::vector<std::vector<std::pair<Occupancy, Scalar>>> moves(L);
    for (int i = 0; i < L; ++i)
      for (const Occupancy& g : occ_box(in.sites[i])) {
        Scalar w = phi_weight(g, in.sites[i], lambda, mus[i], q);
        if (!w.is_zero()) moves[i].emplace_back(g, w);
      }
    // walk the ring: the load entering site i is gamma_{i-1}, the load
    // leaving is gamma_i, and site i emits alpha_i = gamma_{i-1} + beta_i -
    // gamma_i. Periodicity pins gamma_{L-1} first.
    Config out = in;
    std::function<void(int, const Occupancy&, const Occupancy&, const Scalar&)>
        walk = [&](int i, const Occupancy& g_last, const Occupancy& left,
                   const Scalar& acc) {
          if (i == L - 1) {
            out.sites[i] = occ_add(left, occ_sub(in.sites[i], g_last));
            sp_accum(op.cols, sec.index_of(out), col, acc);
            return;
          }
          for (const auto& [g, w] : moves[i]) {
            out.sites[i] = occ_add(left, occ_sub(in.sites[i], g));
            walk(i + 1, g_last, g, acc * w);
          }
        };
    for (const auto& [g_last, w_last] : moves[L - 1])
      walk(0, g_last, g_last, w_last);
  }
  return op;
}

bool verify_commuting_family(const Sector& sec, const Scalar& lambda1,
                             const Scalar& lambda2,
                             const std::vector<Scalar>& mus, const Scalar& q,
                             std::string* witness) {
  SparseCols t1 = transfer_matrix(sec, lambda1, mus, q).cols;
  SparseCols t2 = transfer_matrix(sec, lambda2, mus, q).cols;
  std::string w;
  if (!sp_equal(sp_mul(t1, t2), sp_mul(t2, t1), &w)) {
    if (witness) *witness = "transfer matrices do not commute at " + w;
    return false;
  }
  return true;
}

Scalar rate_right(const Occupancy& gamma, const Occupancy& alpha,
                  const Scalar& mu, const Scalar& q) {
  const int g = occ_total(gamma);
  if (g < 1) throw domain_error("rate_right: |gamma| >= 1 required");
  if (!occ_leq(gamma, alpha)) return q.like(0);
  const int a = occ_total(alpha);
  Scalar den = qpoch(mu * q.pow(a - g), g, q);
  if (den.is_zero())
    throw domain_error("rate_right: pole in (mu q^{|alpha|-|gamma|})_{|gamma|}");
  Scalar val = q.pow(phi_exp(occ_sub(alpha, gamma), gamma)) * mu.pow(g - 1) *
               qpoch(q, g - 1, q) / den;
  for (size_t i = 0; i < alpha.size(); ++i)
    val *= qbinom(alpha[i], gamma[i], q);
  return val;
}

Scalar rate_left(const Occupancy& gamma, const Occupancy& alpha,
                 const Scalar& mu, const Scalar& q) {
  const int g = occ_total(gamma);
  if (g < 1) throw domain_error("rate_left: |gamma| >= 1 required");
  if (!occ_leq(gamma, alpha)) return q.like(0);
  const int a = occ_total(alpha);
  Scalar den = qpoch(mu * q.pow(a - g), g, q);
  if (den.is_zero())
    throw domain_error("rate_left: pole in (mu q^{|alpha|-|gamma|})_{|gamma|}");
  Scalar val =
      q.pow(phi_exp(gamma, occ_sub(alpha, gamma))) * qpoch(q, g - 1, q) / den;
  for (size_t i = 0; i < alpha.size(); ++i)
    val *= qbinom(alpha[i], gamma[i], q);
  return val;
}

bool verify_diagonal_closed_form(const Occupancy& alpha, const Scalar& mu,
                                 const Scalar& q, std::string* witness) {
  Scalar sum_r = q.like(0), sum_l = q.like(0);
  for (const Occupancy& g : occ_box(alpha)) {
    if (occ_is_zero(g)) continue;
    sum_r += rate_right(g, alpha, mu, q);
    sum_l += rate_left(g, alpha, mu, q);
  }
  Scalar closed_r = q.like(0), closed_l = q.like(0);
  for (int i = 0; i < occ_total(alpha); ++i) {
    Scalar d = q.like(1) - mu * q.pow(i);
    if (d.is_zero())
      throw domain_error("diagonal closed form: pole at mu q^i = 1");
    closed_r += q.pow(i) / d;
    closed_l += d.inv();
  }
  if (sum_r != closed_r || sum_l != closed_l) {
    if (witness)
      *witness = "total outflow from " + occ_str(alpha) +
                 ": right " + sum_r.str() + " vs " + closed_r.str() +
                 ", left " + sum_l.str() + " vs " + closed_l.str();
    return false;
  }
  return true;
}

SectorOperator hamiltonian_directed(const Sector& sec, const Scalar& a,
                                    const Scalar& b, int direction,
                                    const Scalar& mu, const Scalar& q) {
  if (direction != 1 && direction != -1)
    throw domain_error("hamiltonian_directed: direction must be +-1");
  const Scalar sign = q.like(direction);
  SectorOperator op{sec, OpKind::hamiltonian, SparseCols(sec.dim())};
  for (int col = 0; col < sec.dim(); ++col) {
    const Config& in = sec.configs[col];
    Scalar colsum = q.like(0);
    auto hop = [&](int from, int to, const Occupancy& g, const Scalar& r) {
      if (r.is_zero()) return;
      Config out = in;
      out.sites[from] = occ_sub(out.sites[from], g);
      out.sites[to] = occ_add(out.sites[to], g);
      Scalar v = sign * r;
      sp_accum(op.cols, sec.index_of(out), col, v);
      colsum += v;
    };
    for (int i = 0; i < sec.L; ++i) {
      for (const Occupancy& g : occ_box(in.sites[i])) {
        if (occ_is_zero(g)) continue;
        if (!a.is_zero())
          hop(i, (i + 1) % sec.L, g, a * rate_right(g, in.sites[i], mu, q));
        if (!b.is_zero())
          hop(i, (i + sec.L - 1) % sec.L, g,
              b * rate_left(g, in.sites[i], mu, q));
      }
    }
    if (!colsum.is_zero()) sp_accum(op.cols, col, col, -colsum);
  }
  return op;
}

SectorOperator hamiltonian(const Sector& sec, const Scalar& a, const Scalar& b,
                           const Scalar& mu, const Scalar& q) {
  return hamiltonian_directed(sec, a, b, 1, mu, q);
}

SparseCols cyclic_shift(const Sector& sec, int steps) {
  SparseCols p(sec.dim());
  for (int col = 0; col < sec.dim(); ++col) {
    Config out = rotate(sec.configs[col], -steps);
    sp_set(p, sec.index_of(out), col, Scalar::exact(1));
  }
  return p;
}

TransferPoly transfer_matrix_poly(const Sector& sec,
                                  const std::vector<Scalar>& mus,
                                  const Scalar& q) {
  const int s = occ_total(sec.m);
  const int pts = s + 2;
  std::vector<Scalar> xs;
  std::vector<SparseCols> samples;
  for (int k = 0; k < pts; ++k) {
    Scalar x = q.like(k + 2);
    xs.push_back(x);
    samples.push_back(
        sp_scale(x.pow(s), transfer_matrix(sec, x, mus, q).cols));
  }
  const std::vector<Scalar> nodes(xs.begin(), xs.end() - 1);
  TransferPoly tp{sec, s, std::vector<std::map<int, Poly>>(sec.dim())};
  for (int c = 0; c < sec.dim(); ++c) {
    std::map<int, std::vector<Scalar>> vals;
    for (int k = 0; k < pts; ++k)
      for (const auto& [r, v] : samples[k][c]) {
        auto it =
            vals.try_emplace(r, std::vector<Scalar>(pts, q.like(0))).first;
        it->second[k] = v;
      }
    for (auto& [r, vec] : vals) {
      Poly p = interpolate(nodes, {vec.begin(), vec.end() - 1});
      if (p.eval(xs.back()) != vec.back())
        throw std::logic_error(
            "transfer_matrix_poly: entry violates the degree bound");
      tp.cols[c].emplace(r, std::move(p));
    }
  }
  return tp;
}

SparseCols transfer_poly_eval(const TransferPoly& tp, const Scalar& lambda) {
  const Scalar pref = lambda.pow(-tp.shift);
  SparseCols out(tp.cols.size());
  for (size_t c = 0; c < tp.cols.size(); ++c)
    for (const auto& [r, p] : tp.cols[c])
      sp_set(out, r, static_cast<int>(c), pref * p.eval(lambda));
  return out;
}

SparseCols transfer_poly_derivative(const TransferPoly& tp,
                                    const Scalar& lambda) {
  const Scalar pref = lambda.pow(-tp.shift);
  const Scalar deg = lambda.like(tp.shift);
  SparseCols out(tp.cols.size());
  for (size_t c = 0; c < tp.cols.size(); ++c)
    for (const auto& [r, p] : tp.cols[c]) {
      Scalar v = pref * (p.derivative().eval(lambda) -
                         deg * p.eval(lambda) / lambda);
      sp_set(out, r, static_cast<int>(c), v);
    }
  return out;
}

bool verify_baxter(const Sector& sec, const Scalar& mu, const Scalar& q,
                   const Scalar& a, const Scalar& b, std::string* witness) {
  const std::vector<Scalar> mus(sec.L, mu);
  const TransferPoly tp = transfer_matrix_poly(sec, mus, q);
  const Scalar one = q.like(1);
  std::string w;
  auto fail = [&](const char* what) {
    if (witness) *witness = std::string(what) + " at " + w;
    return false;
  };
  if (!sp_equal(transfer_poly_eval(tp, one), sp_identity(sec.dim(), q), &w))
    return fail("T(1) != id");
  SparseCols shift = cyclic_shift(sec, 1);
  if (!sp_equal(transfer_poly_eval(tp, mu), shift, &w))
    return fail("T(mu) != cyclic shift");
  SparseCols h1 = sp_scale(-mu.inv(), transfer_poly_derivative(tp, one));
  SparseCols h2 = sp_scale(
      mu, sp_mul(cyclic_shift(sec, -1), transfer_poly_derivative(tp, mu)));
  if (!sp_equal(h1, hamiltonian(sec, one, q.like(0), mu, q).cols, &w))
    return fail("-mu^{-1} T'(1) != right-hop generator");
  if (!sp_equal(h2, hamiltonian(sec, q.like(0), one, mu, q).cols, &w))
    return fail("mu shift^{-1} T'(mu) != left-hop generator");
  if (!sp_equal(sp_add(sp_scale(a, h1), sp_scale(b, h2)),
                hamiltonian(sec, a, b, mu, q).cols, &w))
    return fail("hamiltonian(a,b) != a H_right + b H_left");
  return true;
}

bool verify_duality(const Sector& sec, const Scalar& a, const Scalar& b,
                    const Scalar& mu, const Scalar& q, std::string* witness) {
  SectorOperator lhs =
      hamiltonian_directed(sec, a, b, -1, mu.inv(), q.inv());
  SectorOperator mirror =
      hamiltonian_directed(sec, mu * b, mu * a, 1, mu, q);
  std::vector<int> rev(sec.dim());
  for (int i = 0; i < sec.dim(); ++i)
    rev[i] = sec.index_of(reverse_sites(sec.configs[i]));
  SparseCols conj(sec.dim());
  for (int c = 0; c < sec.dim(); ++c)
    for (const auto& [r, v] : mirror.cols[c]) sp_set(conj, rev[r], rev[c], v);
  std::string w;
  if (!sp_equal(lhs.cols, conj, &w)) {
    if (witness) *witness = "duality failed at " + w;
    return false;
  }
  return true;
}

SteadyState steady_state(const SectorOperator& op) {
  const int d = op.sector.dim();
  std::vector<std::vector<Scalar>> rows(d, std::vector<Scalar>(d));
  for (int c = 0; c < d; ++c)
    for (const auto& [r, v] : op.cols[c]) rows[r][c] += v;
  if (op.kind == OpKind::transfer) {
    const Scalar one = Scalar::exact(1);
    for (int i = 0; i < d; ++i) rows[i][i] -= one;
  }
  std::vector<Scalar> x = kernel_vector(rows);
  Scalar total;
  for (const Scalar& v : x) total += v;
  if (total.is_zero())
    throw domain_error("steady_state: invariant vector has zero total mass");
  for (Scalar& v : x) v /= total;
  return SteadyState{op.sector, std::move(x), Normalization::unit_sum};
}

RateTable build_rate_table(const Sector& sec, const Scalar& a, const Scalar& b,
                           const Scalar& mu, const Scalar& q) {
  RateTable tab{a, b, mu, q, {}, {}};
  for (const Occupancy& occ : occ_box(sec.m)) {
    auto& rv = tab.right[occ];
    auto& lv = tab.left[occ];
    for (const Occupancy& g : occ_box(occ)) {
      if (occ_is_zero(g)) continue;
      if (!a.is_zero()) {
        Scalar r = a * rate_right(g, occ, mu, q);
        if (!r.is_zero()) rv.push_back({g, r});
      }
      if (!b.is_zero()) {
        Scalar l = b * rate_left(g, occ, mu, q);
        if (!l.is_zero()) lv.push_back({g, l});
      }
    }
  }
  return tab;
}

}  // namespace zrp
