#include "trisect/snf.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace trisect {

IntMatrix identity_matrix(int n) {
  IntMatrix m(static_cast<size_t>(n), std::vector<BigInt>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const size_t m = a.size();
  const size_t k = m ? a[0].size() : 0;
  const size_t n = b.empty() ? 0 : b[0].size();
  IntMatrix c(m, std::vector<BigInt>(n, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> out;
  const size_t m = d.size();
  const size_t n = m ? d[0].size() : 0;
  for (size_t i = 0; i < std::min(m, n); ++i) out.push_back(d[i][i]);
  return out;
}

namespace {

void swap_rows(IntMatrix& a, IntMatrix& u, int i, int j) {
  std::swap(a[i], a[j]);
  std::swap(u[i], u[j]);
}

void swap_cols(IntMatrix& a, IntMatrix& v, int i, int j) {
  for (auto& row : a) std::swap(row[i], row[j]);
  for (auto& row : v) std::swap(row[i], row[j]);
}

// row_i -= q * row_t, applied to A and U alike.
void row_sub(IntMatrix& a, IntMatrix& u, int i, int t, const BigInt& q) {
  const size_t n = a[0].size();
  for (size_t j = 0; j < n; ++j) a[i][j] -= q * a[t][j];
  const size_t m = u[0].size();
  for (size_t j = 0; j < m; ++j) u[i][j] -= q * u[t][j];
}

void col_sub(IntMatrix& a, IntMatrix& v, int j, int t, const BigInt& q) {
  for (auto& row : a) row[j] -= q * row[t];
  for (auto& row : v) row[j] -= q * row[t];
}

void negate_row(IntMatrix& a, IntMatrix& u, int i) {
  for (auto& x : a[i]) x = -x;
  for (auto& x : u[i]) x = -x;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix a) {
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  SmithForm out;
  out.u = identity_matrix(m);
  out.v = identity_matrix(n);

  int t = 0;
  while (t < std::min(m, n)) {
    // Pivot: first nonzero entry of the trailing submatrix with minimal
    // absolute value.
    int pr = -1, pc = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (a[i][j] != 0 &&
            (pr < 0 || cmp(abs(a[i][j]), abs(a[pr][pc])) < 0)) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    if (pr != t) swap_rows(a, out.u, t, pr);
    if (pc != t) swap_cols(a, out.v, t, pc);

    for (;;) {
      // Euclid on column t.
      bool column_clear = true;
      for (int i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        if (q != 0) row_sub(a, out.u, i, t, q);
        if (a[i][t] != 0) {
          swap_rows(a, out.u, t, i);
          column_clear = false;
          break;
        }
      }
      if (!column_clear) continue;
      // Euclid on row t.
      bool row_clear = true;
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        if (q != 0) col_sub(a, out.v, j, t, q);
        if (a[t][j] != 0) {
          swap_cols(a, out.v, t, j);
          row_clear = false;
          break;
        }
      }
      if (!row_clear) continue;
      // Make the pivot divide every remaining entry, so the diagonal comes
      // out in divisibility order.
      bool divides_all = true;
      for (int i = t + 1; i < m && divides_all; ++i)
        for (int j = t + 1; j < n && divides_all; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_sub(a, out.u, t, i, BigInt(-1));  // row_t += row_i
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (a[t][t] < 0) negate_row(a, out.u, t);
    ++t;
  }

  out.rank = t;
  out.d = std::move(a);
  return out;
}

int matrix_rank(IntMatrix a) { return smith_normal_form(std::move(a)).rank; }

std::string AbelianInvariants::str() const {
  std::ostringstream out;
  out << "Z^" << free_rank;
  for (const auto& d : torsion) out << " + Z/" << d.get_str();
  return out.str();
}

}  // namespace trisect
