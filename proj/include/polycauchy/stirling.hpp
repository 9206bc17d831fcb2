#pragma once

#include "polycauchy/rational.hpp"
#include "polycauchy/report.hpp"

#include <vector>

namespace polycauchy {

enum class StirlingKind { first, second };

/*
 * Memoized triangle of r-Stirling numbers of one kind, populated on demand
 * by the recurrences
 *
 *   [n,m]_r = (n-1)[n-1,m]_r + [n-1,m-1]_r       (first kind,  n > r)
 *   {n,m}_r =    m {n-1,m}_r + {n-1,m-1}_r       (second kind, n > r)
 *
 * with [n,m]_r = 0 for n < r and [r,m]_r = delta_{m,r}.  Queries outside the
 * triangle return 0 rather than erroring; the sums built on these tables rely
 * on that zero-extension.
 */
class TriangleTable {
 public:
  TriangleTable(StirlingKind kind, int r);

  StirlingKind kind() const { return kind_; }
  int r() const { return r_; }

  Int value(int n, int m);

  /// Values for m = r..n (empty when n < r).
  std::vector<Int> row(int n);

  void ensure_rows(int n_max);

 private:
  StirlingKind kind_;
  int r_;
  std::vector<std::vector<Int>> rows_;  // rows_[n - r][m - r]
};

/// Shared memoized lookup, serialized on an internal mutex.
Int r_stirling(StirlingKind kind, int n, int m, int r);

/// Unsigned Stirling numbers of the first kind (the r = 0 table).
Int stirling1(int n, int m);

/// Stirling numbers of the second kind (the r = 0 table).
Int stirling2(int n, int m);

/// True iff the coefficients of z^r (z+r)(z+r+1)...(z+n-1) match row n of
/// the first-kind table for this r.
bool ogf_check_first(int n, int r);

/// True iff the series expansion of z^m / ((1-rz)...(1-mz)) matches
/// {t,m}_r for t = 0..order.
bool ogf_check_second(int m, int r, int order);

/// Sum of products i_1...i_m over weakly increasing tuples
/// r <= i_1 <= ... <= i_m <= n; equals {n+m, n}_r.  Enumerative oracle,
/// intended for small m only.
Int broder_symmetric_sum(int n, int m, int r);

/// Expresses [n,m] through the r-shifted triangle; requires
/// 1 <= r <= n and 1 <= m <= n.  For m <= n-r+1 this evaluates
///   sum_{l=1..m} [r,l] [n, r-l+m]_r
/// and otherwise
///   sum_{l=1..n+1-max(m,r)} [r, m-n+r-1+l] [n, n-l+1]_r.
Int lemma1_decompose(int n, int m, int r);

/// Checks the plain and transposed orthogonality sums of the two triangles,
/// plus the (n+1, m+1)-shifted variants, for all n, m <= n_max.
IdentityReport orthogonality_check(int n_max, int r);

}  // namespace polycauchy
