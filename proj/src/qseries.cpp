#include "zrp/qseries.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace zrp {

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Scalar s;
  s.mode_ = Mode::exact;
  s.r_ = mpq_class(num, den);
  s.r_.canonicalize();
  return s;
}

Scalar Scalar::exact(mpq_class v) {
  if (v.get_den() == 0) throw domain_error("rational with zero denominator");
  v.canonicalize();
  Scalar s;
  s.mode_ = Mode::exact;
  s.r_ = std::move(v);
  return s;
}

Scalar Scalar::real(double v) {
  Scalar s;
  s.mode_ = Mode::real;
  s.d_ = v;
  return s;
}

Scalar Scalar::parse(const std::string& in, Mode mode) {
  std::string s;
  for (char c : in)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw domain_error("empty scalar literal");

  mpq_class v;
  auto pos = s.find('/');
  if (pos != std::string::npos) {
    if (v.set_str(s, 10) != 0 || v.get_den() == 0)
      throw domain_error("bad rational literal: '" + in + "'");
    v.canonicalize();
  } else if (s.find('.') != std::string::npos) {
    // Decimal literal: parse as integer mantissa over a power of ten.
    size_t dot = s.find('.');
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw domain_error("bad decimal literal: '" + in + "'");
    mpz_class num;
    if (num.set_str(digits, 10) != 0)
      throw domain_error("bad decimal literal: '" + in + "'");
    mpz_class den = 1;
    for (size_t i = 0; i < frac; ++i) den *= 10;
    v = mpq_class(num, den);
    v.canonicalize();
  } else {
    mpz_class num;
    if (num.set_str(s, 10) != 0)
      throw domain_error("bad integer literal: '" + in + "'");
    v = mpq_class(num);
  }
  Scalar out = Scalar::exact(std::move(v));
  return mode == Mode::exact ? out : out.to_mode(Mode::real);
}

Scalar Scalar::like(long num, long den) const {
  Scalar s = Scalar::exact(num, den);
  return mode_ == Mode::exact ? s : s.to_mode(Mode::real);
}

Scalar Scalar::to_mode(Mode m) const {
  if (m == mode_) return *this;
  if (m == Mode::real) return Scalar::real(to_double());
  throw mode_error("cannot promote a float scalar to exact mode");
}

const mpq_class& Scalar::rat() const {
  if (mode_ != Mode::exact) throw mode_error("rat() called on a float scalar");
  return r_;
}

double Scalar::to_double() const {
  return mode_ == Mode::exact ? r_.get_d() : d_;
}

bool Scalar::is_zero() const {
  return mode_ == Mode::exact ? r_ == 0 : d_ == 0.0;
}

int Scalar::sign() const {
  if (mode_ == Mode::exact) return sgn(r_);
  return d_ > 0 ? 1 : d_ < 0 ? -1 : 0;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw domain_error("division by zero");
  if (mode_ == Mode::exact) return Scalar::exact(1 / r_);
  return Scalar::real(1.0 / d_);
}

Scalar Scalar::pow(long e) const {
  if (mode_ == Mode::real) return Scalar::real(std::pow(d_, double(e)));
  if (e == 0) return like(1);
  bool neg = e < 0;
  unsigned long ue = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (is_zero()) {
    if (neg) throw domain_error("zero to a negative power");
    return like(0);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r_.get_num().get_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), r_.get_den().get_mpz_t(), ue);
  mpq_class v = neg ? mpq_class(den, num) : mpq_class(num, den);
  v.canonicalize();
  return Scalar::exact(std::move(v));
}

Scalar Scalar::operator-() const {
  if (mode_ == Mode::exact) return Scalar::exact(mpq_class(-r_));
  return Scalar::real(-d_);
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
  if (a.mode_ != b.mode_)
    throw mode_error("mixed exact/float scalar arithmetic");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  if (a.mode_ == Mode::exact) return Scalar::exact(mpq_class(a.r_ + b.r_));
  return Scalar::real(a.d_ + b.d_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  if (a.mode_ == Mode::exact) return Scalar::exact(mpq_class(a.r_ - b.r_));
  return Scalar::real(a.d_ - b.d_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  if (a.mode_ == Mode::exact) return Scalar::exact(mpq_class(a.r_ * b.r_));
  return Scalar::real(a.d_ * b.d_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  if (b.is_zero()) throw domain_error("division by zero");
  if (a.mode_ == Mode::exact) return Scalar::exact(mpq_class(a.r_ / b.r_));
  return Scalar::real(a.d_ / b.d_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  return a.mode_ == Mode::exact ? a.r_ == b.r_ : a.d_ == b.d_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  return a.mode_ == Mode::exact ? a.r_ < b.r_ : a.d_ < b.d_;
}

std::string Scalar::str() const {
  if (mode_ == Mode::exact) return r_.get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d_);
  return buf;
}

void ModelParams::validate() const {
  if (n < 1) throw domain_error("species count must be >= 1");
  Scalar zero = q.like(0), one = q.like(1);
  if (!(zero < q && q < one))
    throw domain_error("q outside the stochastic regime 0 < q < 1");
}

Scalar qpoch(const Scalar& z, int m, const Scalar& q) {
  if (m < 0) throw domain_error("qpoch: negative order");
  Scalar acc = z.like(1);
  Scalar zq = z;
  for (int j = 0; j < m; ++j) {
    acc *= z.like(1) - zq;
    zq *= q;
  }
  return acc;
}

Scalar qbinom(int m, int k, const Scalar& q) {
  if (m < 0) throw domain_error("qbinom: negative row");
  if (k < 0 || k > m) return q.like(0);
  // Pascal recurrence [i j] = [i-1 j-1] + q^j [i-1 j]; row updated in place
  // from the right so the previous row is still intact where needed.
  std::vector<Scalar> qp(m + 1);
  qp[0] = q.like(1);
  for (int j = 1; j <= m; ++j) qp[j] = qp[j - 1] * q;
  std::vector<Scalar> row(m + 1, q.like(0));
  row[0] = q.like(1);
  for (int i = 1; i <= m; ++i)
    for (int j = i; j >= 1; --j) row[j] = row[j - 1] + qp[j] * row[j];
  return row[k];
}

long phi_exp(const Occupancy& alpha, const Occupancy& beta) {
  if (alpha.size() != beta.size()) throw domain_error("phi_exp: length mismatch");
  long acc = 0;
  for (size_t i = 0; i + 1 < alpha.size(); ++i)
    for (size_t j = i + 1; j < alpha.size(); ++j)
      acc += static_cast<long>(alpha[i]) * beta[j];
  return acc;
}

Scalar g_weight(const Occupancy& alpha, const Scalar& mu, const Scalar& q) {
  if (mu.is_zero()) throw domain_error("g_weight: mu must be nonzero");
  int tot = occ_total(alpha);
  Scalar num = mu.pow(-tot) * qpoch(mu, tot, q);
  Scalar den = mu.like(1);
  for (int a : alpha) den *= qpoch(q, a, q);
  return num / den;
}

std::vector<Occupancy> occ_box(const Occupancy& bound) {
  std::vector<Occupancy> out;
  Occupancy cur(bound.size(), 0);
  for (;;) {
    out.push_back(cur);
    size_t i = bound.size();
    while (i > 0) {
      --i;
      if (cur[i] < bound[i]) {
        ++cur[i];
        std::fill(cur.begin() + i + 1, cur.end(), 0);
        break;
      }
      if (i == 0) return out;
    }
    if (bound.empty()) return out;
  }
}

std::string occ_str(const Occupancy& a) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

}  // namespace zrp
