#include "polycauchy/stirling.hpp"

#include "polycauchy/binomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace polycauchy {

TriangleTable::TriangleTable(StirlingKind kind, int r) : kind_(kind), r_(r) {
  if (r < 0) throw std::invalid_argument("TriangleTable: negative r");
  rows_.push_back({Int(1)});  // n = r: delta_{m,r}
}

void TriangleTable::ensure_rows(int n_max) {
  for (int n = r_ + static_cast<int>(rows_.size()); n <= n_max; ++n) {
    const auto& prev = rows_.back();
    std::vector<Int> row(static_cast<std::size_t>(n - r_) + 1);
    for (int m = r_; m <= n; ++m) {
      Int v = 0;
      if (m <= n - 1) v = (kind_ == StirlingKind::first ? Int(n - 1) : Int(m)) *
                          prev[static_cast<std::size_t>(m - r_)];
      if (m - 1 >= r_) v += prev[static_cast<std::size_t>(m - 1 - r_)];
      row[static_cast<std::size_t>(m - r_)] = std::move(v);
    }
    rows_.push_back(std::move(row));
  }
}

Int TriangleTable::value(int n, int m) {
  if (n < r_ || m < r_ || m > n) return 0;
  ensure_rows(n);
  return rows_[static_cast<std::size_t>(n - r_)][static_cast<std::size_t>(m - r_)];
}

std::vector<Int> TriangleTable::row(int n) {
  if (n < r_) return {};
  ensure_rows(n);
  return rows_[static_cast<std::size_t>(n - r_)];
}

namespace {
std::mutex g_tables_mutex;

TriangleTable& locked_table(StirlingKind kind, int r) {
  static std::map<std::pair<int, int>, TriangleTable> tables;
  auto key = std::make_pair(static_cast<int>(kind), r);
  auto it = tables.find(key);
  if (it == tables.end()) it = tables.emplace(key, TriangleTable(kind, r)).first;
  return it->second;
}
}  // namespace

Int r_stirling(StirlingKind kind, int n, int m, int r) {
  if (r < 0) throw std::invalid_argument("r_stirling: negative r");
  if (n < 0 || m < 0) return 0;
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return locked_table(kind, r).value(n, m);
}

Int stirling1(int n, int m) { return r_stirling(StirlingKind::first, n, m, 0); }

Int stirling2(int n, int m) { return r_stirling(StirlingKind::second, n, m, 0); }

bool ogf_check_first(int n, int r) {
  if (r < 0 || n < r) throw std::invalid_argument("ogf_check_first: requires n >= r >= 0");
  // Coefficients of (z+r)(z+r+1)...(z+n-1), then shift by z^r.
  std::vector<Int> prod{Int(1)};
  for (int j = r; j <= n - 1; ++j) {
    std::vector<Int> next(prod.size() + 1);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i] += prod[i] * j;
      next[i + 1] += prod[i];
    }
    prod = std::move(next);
  }
  for (int m = 0; m <= n; ++m) {
    Int expect = 0;
    if (m >= r && m - r < static_cast<int>(prod.size()))
      expect = prod[static_cast<std::size_t>(m - r)];
    if (r_stirling(StirlingKind::first, n, m, r) != expect) return false;
  }
  return true;
}

bool ogf_check_second(int m, int r, int order) {
  if (r < 0 || m < r) throw std::invalid_argument("ogf_check_second: requires m >= r >= 0");
  if (order < 0) throw std::invalid_argument("ogf_check_second: negative order");
  // Expansion of 1/((1-rz)...(1-mz)) up to z^order, then shift by z^m.
  std::vector<Int> ser(static_cast<std::size_t>(order) + 1, Int(0));
  ser[0] = 1;
  for (int j = r; j <= m; ++j) {
    std::vector<Int> next(ser.size(), Int(0));
    for (std::size_t t = 0; t < ser.size(); ++t) {
      Int p = 1;  // j^(t-u)
      for (std::size_t u = t + 1; u-- > 0;) {
        if (!ser[u].is_zero()) next[t] += ser[u] * p;
        p *= j;
      }
    }
    ser = std::move(next);
  }
  for (int t = 0; t <= order; ++t) {
    Int expect = 0;
    if (t >= m) expect = ser[static_cast<std::size_t>(t - m)];
    if (r_stirling(StirlingKind::second, t, m, r) != expect) return false;
  }
  return true;
}

namespace {
Int broder_rec(int lo, int hi, int remaining, const Int& product) {
  if (remaining == 0) return product;
  Int total = 0;
  for (int i = lo; i <= hi; ++i) total += broder_rec(i, hi, remaining - 1, product * i);
  return total;
}
}  // namespace

Int broder_symmetric_sum(int n, int m, int r) {
  if (m < 0 || r < 0 || n < r)
    throw std::invalid_argument("broder_symmetric_sum: requires m >= 0 and n >= r >= 0");
  return broder_rec(r, n, m, Int(1));
}

Int lemma1_decompose(int n, int m, int r) {
  if (r < 1 || r > n || m < 1 || m > n)
    throw std::invalid_argument("lemma1_decompose: requires 1 <= r <= n and 1 <= m <= n");
  Int total = 0;
  if (m <= n - r + 1) {
    for (int l = 1; l <= m; ++l)
      total += stirling1(r, l) * r_stirling(StirlingKind::first, n, r - l + m, r);
  } else {
    int top = n + 1 - std::max(m, r);
    for (int l = 1; l <= top; ++l)
      total += stirling1(r, m - n + r - 1 + l) *
               r_stirling(StirlingKind::first, n, n - l + 1, r);
  }
  return total;
}

IdentityReport orthogonality_check(int n_max, int r) {
  if (r < 0 || n_max < r)
    throw std::invalid_argument("orthogonality_check: requires n_max >= r >= 0");
  IdentityReport rep;
  rep.id = IdentityId::ORTHOGONALITY;

  auto record = [&rep](const char* relation, int n, int m, int r_, const Int& got,
                       const Int& want) {
    ++rep.tuples_checked;
    if (got == want) return;
    ++rep.failures_total;
    if (rep.failures.size() < 50)
      rep.failures.push_back(Counterexample{{{"relation", relation},
                                             {"n", std::to_string(n)},
                                             {"m", std::to_string(m)},
                                             {"r", std::to_string(r_)}},
                                            got.str(),
                                            want.str()});
  };

  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n_max; ++m) {
      Int plain = 0, transposed = 0, shifted = 0, shifted_t = 0;
      for (int k = 0; k <= n_max + 1; ++k) {
        Int sgn = (n - k) % 2 == 0 ? 1 : -1;
        plain += sgn * r_stirling(StirlingKind::first, n, k, r) *
                 r_stirling(StirlingKind::second, k, m, r);
        transposed += sgn * r_stirling(StirlingKind::first, k, n, r) *
                      r_stirling(StirlingKind::second, m, k, r);
        shifted += sgn * r_stirling(StirlingKind::first, n + 1, k + 1, r) *
                   r_stirling(StirlingKind::second, k + 1, m + 1, r);
        shifted_t += sgn * r_stirling(StirlingKind::first, k + 1, n + 1, r) *
                     r_stirling(StirlingKind::second, m + 1, k + 1, r);
      }
      Int delta = n == m ? 1 : 0;
      record("plain", n, m, r, plain, n >= r ? delta : Int(0));
      record("transposed", n, m, r, transposed, n >= r ? delta : Int(0));
      record("shifted", n, m, r, shifted, n >= r - 1 ? delta : Int(0));
      record("shifted-transposed", n, m, r, shifted_t, n >= r - 1 ? delta : Int(0));
    }
  }
  finalize_report(rep);
  return rep;
}

}  // namespace polycauchy
