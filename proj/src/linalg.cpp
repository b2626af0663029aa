#include "zrp/linalg.hpp"

#include <sstream>

namespace zrp {

SparseCols sp_identity(int dim, const Scalar& proto) {
  SparseCols a(dim);
  for (int i = 0; i < dim; ++i) a[i][i] = proto.like(1);
  return a;
}

void sp_set(SparseCols& a, int row, int col, const Scalar& v) {
  if (v.is_zero())
    a[col].erase(row);
  else
    a[col][row] = v;
}

void sp_accum(SparseCols& a, int row, int col, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = a[col].emplace(row, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) a[col].erase(it);
  }
}

Scalar sp_get(const SparseCols& a, int row, int col, const Scalar& proto) {
  auto it = a[col].find(row);
  return it == a[col].end() ? proto.like(0) : it->second;
}

SparseCols sp_mul(const SparseCols& a, const SparseCols& b) {
  SparseCols out(b.size());
  for (size_t c = 0; c < b.size(); ++c)
    for (const auto& [k, bv] : b[c])
      for (const auto& [r, av] : a[k]) sp_accum(out, r, static_cast<int>(c), av * bv);
  return out;
}

SparseCols sp_add(const SparseCols& a, const SparseCols& b) {
  SparseCols out = a;
  for (size_t c = 0; c < b.size(); ++c)
    for (const auto& [r, v] : b[c]) sp_accum(out, r, static_cast<int>(c), v);
  return out;
}

SparseCols sp_sub(const SparseCols& a, const SparseCols& b) {
  SparseCols out = a;
  for (size_t c = 0; c < b.size(); ++c)
    for (const auto& [r, v] : b[c]) sp_accum(out, r, static_cast<int>(c), -v);
  return out;
}

SparseCols sp_scale(const Scalar& s, const SparseCols& a) {
  SparseCols out(a.size());
  if (s.is_zero()) return out;
  for (size_t c = 0; c < a.size(); ++c)
    for (const auto& [r, v] : a[c]) out[c][r] = s * v;
  return out;
}

std::vector<Scalar> sp_apply(const SparseCols& a, const std::vector<Scalar>& x) {
  if (a.size() != x.size()) throw domain_error("sp_apply: size mismatch");
  if (x.empty()) return {};
  std::vector<Scalar> y;
  // Row count is not stored; rows live in [0, dim) for square operators.
  y.assign(x.size(), x[0].like(0));
  for (size_t c = 0; c < a.size(); ++c) {
    if (x[c].is_zero()) continue;
    for (const auto& [r, v] : a[c]) y.at(r) += v * x[c];
  }
  return y;
}

Scalar sp_col_sum(const SparseCols& a, int col, const Scalar& proto) {
  Scalar s = proto.like(0);
  for (const auto& [r, v] : a[col]) s += v;
  return s;
}

bool sp_equal(const SparseCols& a, const SparseCols& b, std::string* witness) {
  if (a.size() != b.size()) {
    if (witness) *witness = "column counts differ";
    return false;
  }
  for (size_t c = 0; c < a.size(); ++c) {
    for (const auto& [r, v] : a[c]) {
      auto it = b[c].find(r);
      Scalar bv = it == b[c].end() ? v.like(0) : it->second;
      if (v != bv) {
        if (witness) {
          std::ostringstream os;
          os << "(" << r << "," << c << "): lhs=" << v.str() << " rhs=" << bv.str();
          *witness = os.str();
        }
        return false;
      }
    }
    for (const auto& [r, v] : b[c])
      if (a[c].find(r) == a[c].end() && !v.is_zero()) {
        if (witness) {
          std::ostringstream os;
          os << "(" << r << "," << c << "): lhs=0 rhs=" << v.str();
          *witness = os.str();
        }
        return false;
      }
  }
  return true;
}

int Poly::degree() const {
  for (int k = static_cast<int>(coeff.size()) - 1; k >= 0; --k)
    if (!coeff[k].is_zero()) return k;
  return -1;
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = x.like(0);
  for (int k = static_cast<int>(coeff.size()) - 1; k >= 0; --k)
    acc = acc * x + coeff[k];
  return acc;
}

Poly Poly::derivative() const {
  Poly d;
  for (size_t k = 1; k < coeff.size(); ++k)
    d.coeff.push_back(coeff[k].like(static_cast<long>(k)) * coeff[k]);
  return d;
}

Poly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw domain_error("interpolate: need equally many xs and ys");
  // Newton form, built incrementally: p += d_k * prod_{j<k} (x - x_j).
  Poly p, basis;
  p.coeff = {xs[0].like(0)};
  basis.coeff = {xs[0].like(1)};
  for (size_t k = 0; k < xs.size(); ++k) {
    Scalar denom = basis.eval(xs[k]);
    if (denom.is_zero()) throw domain_error("interpolate: repeated x value");
    Scalar d = (ys[k] - p.eval(xs[k])) / denom;
    if (p.coeff.size() < basis.coeff.size())
      p.coeff.resize(basis.coeff.size(), xs[0].like(0));
    for (size_t j = 0; j < basis.coeff.size(); ++j) p.coeff[j] += d * basis.coeff[j];
    // basis *= (x - x_k)
    basis.coeff.insert(basis.coeff.begin(), xs[0].like(0));
    for (size_t j = 0; j + 1 < basis.coeff.size(); ++j)
      basis.coeff[j] -= xs[k] * basis.coeff[j + 1];
  }
  return p;
}

namespace {

void strip_content(std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& x : row)
    if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::vector<Scalar> kernel_vector(const std::vector<std::vector<Scalar>>& rows) {
  const int nr = static_cast<int>(rows.size());
  if (nr == 0) throw domain_error("kernel_vector: empty matrix");
  const int nc = static_cast<int>(rows[0].size());

  // Clear denominators row by row; row scaling does not change the kernel.
  std::vector<std::vector<mpz_class>> m(nr, std::vector<mpz_class>(nc));
  for (int r = 0; r < nr; ++r) {
    if (static_cast<int>(rows[r].size()) != nc)
      throw domain_error("kernel_vector: ragged matrix");
    mpz_class l = 1;
    for (int c = 0; c < nc; ++c) {
      const mpq_class& v = rows[r][c].rat();  // throws in float mode
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    }
    for (int c = 0; c < nc; ++c) {
      const mpq_class& v = rows[r][c].rat();
      m[r][c] = v.get_num() * mpz_class(l / v.get_den());
    }
    strip_content(m[r]);
  }

  std::vector<int> pivot_cols;
  std::vector<int> free_cols;
  int prow = 0;
  mpz_class tmp;
  for (int col = 0; col < nc; ++col) {
    // Smallest nonzero pivot by bit size keeps intermediate growth down.
    int best = -1;
    size_t best_bits = static_cast<size_t>(-1);
    for (int r = prow; r < nr; ++r) {
      if (m[r][col] == 0) continue;
      size_t bits = mpz_sizeinbase(m[r][col].get_mpz_t(), 2);
      if (bits < best_bits) {
        best_bits = bits;
        best = r;
      }
    }
    if (best < 0) {
      free_cols.push_back(col);
      continue;
    }
    std::swap(m[prow], m[best]);
    for (int r = prow + 1; r < nr; ++r) {
      if (m[r][col] == 0) continue;
      const mpz_class piv = m[prow][col];
      const mpz_class f = m[r][col];
      for (int c2 = col; c2 < nc; ++c2) {
        m[r][c2] *= piv;
        if (m[prow][c2] != 0) {
          mpz_mul(tmp.get_mpz_t(), f.get_mpz_t(), m[prow][c2].get_mpz_t());
          m[r][c2] -= tmp;
        }
      }
      strip_content(m[r]);
    }
    pivot_cols.push_back(col);
    ++prow;
  }

  if (free_cols.size() != 1)
    throw domain_error("kernel_vector: null space has dimension " +
                       std::to_string(free_cols.size()) + ", expected 1");

  std::vector<mpq_class> x(nc, mpq_class(0));
  x[free_cols[0]] = 1;
  for (int pr = prow - 1; pr >= 0; --pr) {
    const int pc = pivot_cols[pr];
    mpq_class acc = 0;
    for (int c2 = pc + 1; c2 < nc; ++c2) {
      if (x[c2] == 0 || m[pr][c2] == 0) continue;
      acc += mpq_class(m[pr][c2]) * x[c2];
    }
    x[pc] = -acc / mpq_class(m[pr][pc]);
    x[pc].canonicalize();
  }

  std::vector<Scalar> out;
  out.reserve(nc);
  for (auto& v : x) out.push_back(Scalar::exact(std::move(v)));
  return out;
}

}  // namespace zrp
