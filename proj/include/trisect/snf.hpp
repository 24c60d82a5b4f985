#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace trisect {

using BigInt = mpz_class;
using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix identity_matrix(int n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// U * A * V = D with U (m x m) and V (n x n) unimodular, D diagonal with
/// nonnegative entries, each dividing the next. All arithmetic is exact.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  int rank = 0;

  std::vector<BigInt> diagonal() const;
};

SmithForm smith_normal_form(IntMatrix a);

/// Exact rank over the integers.
int matrix_rank(IntMatrix a);

/// Abelianization data: free rank plus the invariant factors >= 2 in
/// divisibility order.
struct AbelianInvariants {
  long free_rank = 0;
  std::vector<BigInt> torsion;

  bool operator==(const AbelianInvariants& other) const = default;
  bool is_free_of_rank(long k) const { return torsion.empty() && free_rank == k; }
  bool is_trivial() const { return is_free_of_rank(0); }
  std::string str() const;
};

}  // namespace trisect
