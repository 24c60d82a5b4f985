#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: quadratic rescan reduction, brute-force subgroup membership and a
// fraction-free determinant.

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "trisect/snf.hpp"
#include "trisect/word.hpp"

namespace trisect::testing {

// Free reduction by repeated full scans.
inline std::vector<int32_t> naive_reduce(std::vector<int32_t> codes) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < codes.size(); ++i) {
      if (codes[i] == -codes[i + 1]) {
        codes.erase(codes.begin() + static_cast<long>(i),
                    codes.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return codes;
}

// Splice generator images into a raw sequence, then rescan-reduce.
inline std::vector<int32_t> naive_substitute(
    const std::vector<int32_t>& word, const std::vector<std::vector<int32_t>>& images) {
  std::vector<int32_t> out;
  for (int32_t code : word) {
    const auto& image = images[static_cast<size_t>(std::abs(code) - 1)];
    if (code > 0) {
      out.insert(out.end(), image.begin(), image.end());
    } else {
      for (auto it = image.rbegin(); it != image.rend(); ++it) out.push_back(-*it);
    }
  }
  return naive_reduce(std::move(out));
}

// Membership by breadth-first enumeration of products of at most
// `max_factors` elements of S u S^-1. A partial product longer than
// |w| + remaining * max generator length cannot reduce to w, so pruning it
// keeps the bounded search complete.
inline bool brute_force_contains(const std::vector<Word>& generators, const Word& w,
                                 int max_factors) {
  if (w.empty()) return true;
  size_t max_len = 0;
  for (const auto& g : generators) max_len = std::max(max_len, g.codes().size());
  if (max_len == 0) return false;
  std::set<std::vector<int32_t>> seen;
  std::set<std::vector<int32_t>> frontier{{}};
  for (int step = 0; step < max_factors; ++step) {
    std::set<std::vector<int32_t>> next;
    const size_t cap =
        w.codes().size() + static_cast<size_t>(max_factors - step - 1) * max_len;
    for (const auto& state : frontier) {
      for (const auto& g : generators) {
        for (int inverted = 0; inverted < 2; ++inverted) {
          std::vector<int32_t> product = state;
          if (!inverted) {
            product.insert(product.end(), g.codes().begin(), g.codes().end());
          } else {
            for (auto it = g.codes().rbegin(); it != g.codes().rend(); ++it)
              product.push_back(-*it);
          }
          product = naive_reduce(std::move(product));
          if (product == w.codes()) return true;
          if (product.size() > cap) continue;
          if (seen.insert(product).second) next.insert(std::move(product));
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return false;
}

// Exact determinant, fraction-free Bareiss elimination.
inline BigInt bareiss_determinant(IntMatrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  BigInt sign = 1, previous = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int pivot_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
          pivot_row = i;
          break;
        }
      if (pivot_row < 0) return 0;
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(pivot_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            (a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                 a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
             a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                 a[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
            previous;
    previous = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  return sign * a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

inline Word random_reduced_word(std::mt19937& rng, const Alphabet& alphabet, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  const int len = len_dist(rng);
  std::vector<int32_t> raw;
  std::uniform_int_distribution<int> gen_dist(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  while (static_cast<int>(raw.size()) < len) {
    const int32_t code = (sign_dist(rng) ? 1 : -1) * (gen_dist(rng) + 1);
    if (!raw.empty() && raw.back() == -code) continue;
    raw.push_back(code);
  }
  return Word::reduce(alphabet, raw);
}

}  // namespace trisect::testing
