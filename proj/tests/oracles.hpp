// Brute-force reference implementations. Deliberately written from the
// textbook definitions, sharing no code with the library beyond the
// permutation type.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "positroid/perm.hpp"

namespace oracle {

// Position of x in the order i < i+1 < ... < i-1.
inline int rank_from(int i, int x, int n) { return ((x - i) % n + n) % n; }

// Cyclic interval starting at a with len elements, as a set.
inline std::set<int> run(int a, int len, int n) {
  std::set<int> s;
  for (int t = 0; t < len; ++t) s.insert((a - 1 + t) % n + 1);
  return s;
}

// No proper cyclic interval S with pi(S) = S.
inline bool connected(const positroid::DecoratedPermutation& p) {
  const int n = p.size();
  for (int a = 1; a <= n; ++a)
    for (int len = 1; len < n; ++len) {
      std::set<int> s = run(a, len, n), img;
      for (int x : s) img.insert(p(x));
      if (img == s) return false;
    }
  return true;
}

// I_v = { i : i <_v pi(i) } plus coloops.
inline std::vector<std::set<int>> necklace(const positroid::DecoratedPermutation& p) {
  const int n = p.size();
  std::vector<std::set<int>> out;
  for (int v = 1; v <= n; ++v) {
    std::set<int> I;
    for (int i = 1; i <= n; ++i) {
      if (p(i) == i) {
        if (p.decoration(i) == positroid::Decoration::Coloop) I.insert(i);
      } else if (rank_from(v, i, n) < rank_from(v, p(i), n)) {
        I.insert(i);
      }
    }
    out.push_back(I);
  }
  return out;
}

// Every permutation of [n] with no fixed points that is connected, by brute
// force over all n! permutations.
inline std::size_t connected_count(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  std::size_t count = 0;
  do {
    bool fixed = false;
    for (int i = 0; i < n; ++i) fixed = fixed || img[static_cast<std::size_t>(i)] == i + 1;
    if (!fixed && connected(positroid::DecoratedPermutation(img))) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

}  // namespace oracle
