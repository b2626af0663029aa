#pragma once
// Exact linear algebra on small matrices: sparse column-major operator
// arithmetic, Newton-form polynomial interpolation, and an exact rational
// null-space solver (integer-preserving elimination with per-row content
// stripping, so entries stay integers without Bareiss' division bookkeeping).

#include <map>
#include <string>
#include <vector>

#include "zrp/qseries.hpp"

namespace zrp {

// Column-major sparse matrix: cols[c] maps row index -> value. Zero entries
// are never stored.
using SparseCols = std::vector<std::map<int, Scalar>>;

SparseCols sp_identity(int dim, const Scalar& proto);
SparseCols sp_mul(const SparseCols& a, const SparseCols& b);
SparseCols sp_add(const SparseCols& a, const SparseCols& b);
SparseCols sp_sub(const SparseCols& a, const SparseCols& b);
SparseCols sp_scale(const Scalar& s, const SparseCols& a);
std::vector<Scalar> sp_apply(const SparseCols& a, const std::vector<Scalar>& x);
Scalar sp_col_sum(const SparseCols& a, int col, const Scalar& proto);
void sp_set(SparseCols& a, int row, int col, const Scalar& v);
void sp_accum(SparseCols& a, int row, int col, const Scalar& v);
Scalar sp_get(const SparseCols& a, int row, int col, const Scalar& proto);

// Exact equality; on mismatch writes "(<row>,<col>): lhs=.. rhs=.." into
// *witness when provided.
bool sp_equal(const SparseCols& a, const SparseCols& b,
              std::string* witness = nullptr);

// Dense polynomial with Scalar coefficients, c[k] the coefficient of x^k.
struct Poly {
  std::vector<Scalar> coeff;
  int degree() const;
  Scalar eval(const Scalar& x) const;
  Poly derivative() const;
};

// Interpolating polynomial through (xs[i], ys[i]); the xs must be distinct.
Poly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

// Kernel vector of a square exact matrix (rows[r][c]); throws domain_error
// unless the null space is exactly one-dimensional. The returned vector is
// unnormalized.
std::vector<Scalar> kernel_vector(const std::vector<std::vector<Scalar>>& rows);

}  // namespace zrp
