#include "zrp/mpa.hpp"

#include <functional>
#include <vector>

#include "zrp/markov.hpp"
#include "zrp/qboson.hpp"

namespace zrp {
namespace {

// Visits every (j_1..j_parts) with j_i >= 0 and sum j_i = total.
void for_each_composition(
    int total, int parts, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> j(parts, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == parts - 1) {
      j[pos] = left;
      fn(j);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      j[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, total);
}

Scalar series_coeff(MpaFormula f, int j, const Scalar& mu_site,
                    const Scalar& q) {
  switch (f) {
    case MpaFormula::inhomogeneous:
      return mu_site.pow(-j) * qpoch(mu_site, j, q) / qpoch(q, j, q);
    case MpaFormula::homogeneous:
      return qpoch(mu_site, j, q) / qpoch(q, j, q);
    case MpaFormula::tazrp:
      return q.like(1);
  }
  return q.like(1);
}

Scalar site_prefactor(MpaFormula f, const Occupancy& s, const Scalar& mu_site,
                      const Scalar& q) {
  switch (f) {
    case MpaFormula::inhomogeneous:
      return g_weight(s, mu_site, q);
    case MpaFormula::homogeneous:
      return qpoch(mu_site, s[0] + s[1], q) /
             (qpoch(q, s[0], q) * qpoch(q, s[1], q));
    case MpaFormula::tazrp:
      return q.like(1);
  }
  return q.like(1);
}

}  // namespace

Scalar mpa_probability(const MpaQuery& query) {
  const Config& cfg = query.config;
  const int L = cfg.L();
  const Scalar& q = query.q;
  if (L == 0) throw domain_error("mpa_probability: empty configuration");
  for (const auto& s : cfg.sites)
    if (s.size() != 2)
      throw domain_error("mpa_probability: two species per site expected");
  if (query.formula == MpaFormula::inhomogeneous &&
      static_cast<int>(query.mus.size()) != L)
    throw domain_error("mpa_probability: need one mu per site");
  if (query.formula == MpaFormula::tazrp && !q.is_zero())
    throw domain_error("mpa_probability: tazrp formula requires q = 0");

  int m1 = 0, m2 = 0;
  for (const auto& s : cfg.sites) {
    m1 += s[0];
    m2 += s[1];
  }
  if (m2 == 0)
    throw domain_error(
        "mpa_probability: trace diverges without a species-2 particle");

  auto site_mu = [&](int i) -> Scalar {
    if (query.formula == MpaFormula::inhomogeneous) return query.mus[i];
    if (query.formula == MpaFormula::homogeneous) return query.mu;
    return q.like(0);
  };

  // Only raising powers summing to m1 leave a diagonal (traceable) word; the
  // trace of the operator product is therefore this finite composition sum.
  Scalar total = q.like(0);
  for_each_composition(m1, L, [&](const std::vector<int>& j) {
    Scalar coeff = q.like(1);
    for (int i = 0; i < L; ++i)
      coeff *= series_coeff(query.formula, j[i], site_mu(i), q);
    NOElement word =
        no_monomial(j[0], cfg.sites[0][1], cfg.sites[0][0], q.like(1));
    for (int i = 1; i < L; ++i)
      word = no_multiply(
          word, no_monomial(j[i], cfg.sites[i][1], cfg.sites[i][0], q.like(1)),
          q);
    total += coeff * no_trace(word, q);
  });

  Scalar pref = q.like(1);
  for (int i = 0; i < L; ++i)
    pref *= site_prefactor(query.formula, cfg.sites[i], site_mu(i), q);
  return pref * total;
}

Scalar condensed_closed_form(int site, const Occupancy& m,
                             const std::vector<Scalar>& mus, const Scalar& q) {
  const int L = static_cast<int>(mus.size());
  if (m.size() != 2)
    throw domain_error("condensed_closed_form: two species expected");
  if (site < 0 || site >= L)
    throw domain_error("condensed_closed_form: site out of range");
  if (m[1] == 0)
    throw domain_error(
        "condensed_closed_form: trace diverges without a species-2 particle");

  const int mt = m[0] + m[1];
  const Scalar& mu_i = mus[site];
  Scalar pref = mu_i.pow(-mt) * qpoch(mu_i, mt, q) /
                (qpoch(q, mt, q) * (q.like(1) - q.pow(m[1])));
  Scalar sum = q.like(0);
  for_each_composition(m[0], L, [&](const std::vector<int>& r) {
    Scalar term = q.like(1);
    for (int jx = 0; jx < L; ++jx)
      term *= qpoch(mus[jx], r[jx], q) * mus[jx].pow(-r[jx]) /
              qpoch(q, r[jx], q);
    sum += term;
  });
  return pref * sum;
}

MpaReport crosscheck_steady(const Sector& sector,
                            const std::vector<Scalar>& mus, const Scalar& q,
                            std::optional<Scalar> lambda) {
  if (sector.n != 2)
    throw domain_error("crosscheck_steady: two-species sectors only");
  if (static_cast<int>(mus.size()) != sector.L)
    throw domain_error("crosscheck_steady: need one mu per site");

  Scalar lam;
  if (lambda) {
    lam = *lambda;
  } else {
    Scalar mx = mus[0];
    for (const auto& mu : mus)
      if (mx < mu) mx = mu;
    lam = (mx.like(1) + mx) / mx.like(2);
  }

  MpaReport rep;
  rep.sector = sector;
  rep.direct = steady_state(transfer_matrix(sector, lam, mus, q)).probs;
  rep.mpa.reserve(sector.dim());
  for (const auto& c : sector.configs) {
    MpaQuery qy;
    qy.config = c;
    qy.formula = MpaFormula::inhomogeneous;
    qy.mus = mus;
    qy.q = q;
    rep.mpa.push_back(mpa_probability(qy));
  }

  int ref = -1;
  for (int i = 0; i < sector.dim(); ++i)
    if (!rep.direct[i].is_zero() && !rep.mpa[i].is_zero()) {
      ref = i;
      break;
    }
  if (ref < 0) {
    rep.witness = "no jointly nonzero reference entry";
    return rep;
  }
  rep.ratio = rep.mpa[ref] / rep.direct[ref];
  rep.proportional = true;
  for (int i = 0; i < sector.dim(); ++i) {
    if (rep.mpa[i] == rep.ratio * rep.direct[i]) continue;
    rep.proportional = false;
    rep.witness = pretty(sector.configs[i]) + ": mpa " + rep.mpa[i].str() +
                  " vs " + (rep.ratio * rep.direct[i]).str();
    break;
  }
  return rep;
}

LdmaResult conjecture_ldma(const Occupancy& m, int length, int site, int r,
                           const Scalar& mu, const Scalar& q) {
  if (m.size() != 2) throw domain_error("conjecture_ldma: two species expected");
  if (length < 2) throw domain_error("conjecture_ldma: need at least two sites");
  if (site < 2 || site > length)
    throw domain_error("conjecture_ldma: target site must lie in [2, length]");
  const int mt = m[0] + m[1];
  if (r < 0 || r > mt)
    throw domain_error("conjecture_ldma: split size out of range");

  auto prob = [&](const Config& c) {
    MpaQuery qy;
    qy.config = c;
    qy.formula = MpaFormula::homogeneous;
    qy.mu = mu;
    qy.q = q;
    return mpa_probability(qy);
  };

  Config base;
  base.sites.assign(length, Occupancy{0, 0});
  base.sites[0] = m;
  const Scalar denom = prob(base);

  Scalar sum = q.like(0);
  for (const auto& l : occ_box(m)) {
    if (occ_total(l) != r) continue;
    Config c = base;
    c.sites[0] = occ_sub(m, l);
    c.sites[site - 1] = l;
    sum += prob(c);
  }

  LdmaResult res;
  res.lhs = sum / denom;
  auto f = [&](int s) { return qpoch(mu, s, q) / qpoch(q, s, q); };
  res.rhs = f(mt - r) * f(r) / f(mt);
  res.equal = (res.lhs == res.rhs);
  return res;
}

}  // namespace zrp
