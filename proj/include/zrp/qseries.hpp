#pragma once
// Mode-tagged scalars (exact GMP rationals or double) and the q-series
// primitives everything else is built from.
//
// Conventions used throughout the library:
//   (z)_m  = (z; q)_m = prod_{j=0}^{m-1} (1 - z q^j)          q-Pochhammer
//   [m k]_q = (q)_m / ((q)_k (q)_{m-k})  for 0 <= k <= m       Gaussian binomial
//   phi(a, b) = sum_{i<j} a_i b_j                              exponent statistic
//   g_a(mu) = mu^{-|a|} (mu)_{|a|} / prod_i (q)_{a_i}          single-site weight
//
// Exact mode is the default; float mode exists for the simulator's hot loop
// and large parameter sweeps. Mixing the two modes in one expression is a
// programming error and throws, never a silent coercion. Scalar::like() makes
// integer literals that follow the mode of an existing value.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zrp {

// Per-species particle counts at one site.
using Occupancy = std::vector<int>;

// ---------------------------------------------------------------------------
// Error taxonomy. domain_error covers bad arguments and regime violations
// (CLI exit 2), cap_error covers resource-cap refusals (CLI exit 3), and
// mode_error flags exact/float mixing bugs.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};
struct cap_error : std::runtime_error {
  explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};
struct mode_error : std::logic_error {
  explicit mode_error(const std::string& what) : std::logic_error(what) {}
};

enum class Mode { exact, real };

class Scalar {
 public:
  Scalar() : mode_(Mode::exact) {}  // exact zero

  static Scalar exact(long num, long den = 1);
  static Scalar exact(mpq_class v);
  static Scalar real(double v);
  // Accepts "p", "p/q", and decimal strings like "-0.25"; decimals parse to
  // the exact rational they denote before any mode conversion.
  static Scalar parse(const std::string& s, Mode mode = Mode::exact);

  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::exact; }

  // Integer literal carrying this scalar's mode.
  Scalar like(long num, long den = 1) const;
  Scalar to_mode(Mode m) const;  // exact -> real allowed; real -> exact throws

  const mpq_class& rat() const;
  double to_double() const;

  bool is_zero() const;
  int sign() const;
  Scalar inv() const;
  Scalar pow(long e) const;  // e may be negative; 0^0 = 1

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  // "p/q" (or "p") in exact mode, shortest round-trip decimal in float mode.
  std::string str() const;

 private:
  static void require_same(const Scalar& a, const Scalar& b);
  Mode mode_;
  mpq_class r_;
  double d_ = 0.0;
};

struct ModelParams {
  int n = 2;       // species count
  Scalar q;        // 0 < q < 1 in the stochastic regime
  void validate() const;
};

// (z; q)_m, m >= 0.
Scalar qpoch(const Scalar& z, int m, const Scalar& q);

// Gaussian binomial [m k]_q via the Pascal recurrence (division-free, so it
// stays valid at q = 0). Returns 0 for k outside [0, m].
Scalar qbinom(int m, int k, const Scalar& q);

// phi(alpha, beta) = sum_{i<j} alpha_i beta_j.
long phi_exp(const Occupancy& alpha, const Occupancy& beta);

// g_alpha(mu) = mu^{-|alpha|} (mu)_{|alpha|} / prod_i (q)_{alpha_i}; mu != 0.
Scalar g_weight(const Occupancy& alpha, const Scalar& mu, const Scalar& q);

// ---------------------------------------------------------------------------
// Small occupancy-vector helpers shared across modules.

inline int occ_total(const Occupancy& a) {
  int t = 0;
  for (int x : a) t += x;
  return t;
}

inline bool occ_leq(const Occupancy& a, const Occupancy& b) {
  if (a.size() != b.size()) throw domain_error("occupancy length mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Occupancy occ_add(const Occupancy& a, const Occupancy& b) {
  if (a.size() != b.size()) throw domain_error("occupancy length mismatch");
  Occupancy r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Componentwise difference; requires b <= a.
inline Occupancy occ_sub(const Occupancy& a, const Occupancy& b) {
  if (a.size() != b.size()) throw domain_error("occupancy length mismatch");
  Occupancy r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) throw domain_error("occupancy difference went negative");
  }
  return r;
}

inline Occupancy occ_reverse(Occupancy a) {
  std::reverse(a.begin(), a.end());
  return a;
}

inline bool occ_is_zero(const Occupancy& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

// All occupancies c with 0 <= c <= bound componentwise, in lexicographic
// order (the zero vector first).
std::vector<Occupancy> occ_box(const Occupancy& bound);

std::string occ_str(const Occupancy& a);

}  // namespace zrp
