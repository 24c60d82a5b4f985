#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "trisect/snf.hpp"

using namespace trisect;
using trisect::testing::bareiss_determinant;

namespace {

IntMatrix make(const std::vector<std::vector<long>>& rows) {
  IntMatrix out;
  for (const auto& row : rows) {
    std::vector<BigInt> r;
    for (long x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

void check_witnesses(const IntMatrix& a, const SmithForm& smith) {
  CHECK(multiply(multiply(smith.u, a), smith.v) == smith.d);
  CHECK(abs(bareiss_determinant(smith.u)) == 1);
  CHECK(abs(bareiss_determinant(smith.v)) == 1);
  const auto diagonal = smith.diagonal();
  for (size_t i = 0; i < diagonal.size(); ++i) {
    CHECK(diagonal[i] >= 0);
    if (i + 1 < diagonal.size() && diagonal[i] != 0)
      CHECK(diagonal[i + 1] % diagonal[i] == 0);
    if (diagonal[i] == 0 && i + 1 < diagonal.size()) CHECK(diagonal[i + 1] == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form of diag(2,3)") {
  const IntMatrix a = make({{2, 0}, {0, 3}});
  const SmithForm smith = smith_normal_form(a);
  CHECK(smith.rank == 2);
  CHECK(smith.diagonal() == std::vector<BigInt>{1, 6});
  check_witnesses(a, smith);
}

TEST_CASE("smith normal form edge shapes") {
  const IntMatrix zero = make({{0, 0, 0}});
  const SmithForm z = smith_normal_form(zero);
  CHECK(z.rank == 0);
  check_witnesses(zero, z);

  const IntMatrix row = make({{4, 6}});
  const SmithForm r = smith_normal_form(row);
  CHECK(r.rank == 1);
  CHECK(r.diagonal()[0] == 2);
  check_witnesses(row, r);

  CHECK(matrix_rank(make({{1, 0}, {2, 0}})) == 1);
  CHECK(matrix_rank(make({{1, 2}, {3, 4}})) == 2);
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = size(rng), n = size(rng);
    IntMatrix a(static_cast<size_t>(m), std::vector<BigInt>(static_cast<size_t>(n)));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    check_witnesses(a, smith_normal_form(a));
  }
}
