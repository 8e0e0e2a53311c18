#ifndef FILLPERM_TESTS_ORACLES_HPP
#define FILLPERM_TESTS_ORACLES_HPP

// Independent reference computations. They use only the plain permutation
// arithmetic and build every fixed permutation from explicit cycle lists, so
// they share no code with the genus tables, the closed-form filling check or
// the pairing-based root generator.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "fillperm/permutation.hpp"

namespace oracle {

using fillperm::Permutation;

inline std::vector<int> range_step(int from, int to, int step) {
  std::vector<int> out;
  for (int x = from; step > 0 ? x <= to : x >= to; x += step) out.push_back(x);
  return out;
}

inline Permutation cyc(std::size_t n, std::vector<std::vector<int>> cycles) {
  std::vector<Permutation::Cycle> cs;
  for (auto& c : cycles) cs.emplace_back(c.begin(), c.end());
  return Permutation::from_cycles(n, cs);
}

struct Fixed {
  int n;
  Permutation Q, iota, tau;
};

// Q = (1,2,...,n), ι = Q^{4g-2} by repeated composition, τ from its cycles.
inline Fixed fixed(int g) {
  const int n = 8 * g - 4;
  const std::size_t N = static_cast<std::size_t>(n);
  Fixed f{n, cyc(N, {range_step(1, n, 1)}), Permutation::identity(N), Permutation::identity(N)};
  for (int k = 0; k < 4 * g - 2; ++k) f.iota = fillperm::compose(f.Q, f.iota);
  f.tau = cyc(N, {range_step(1, 4 * g - 3, 2), range_step(2, 4 * g - 2, 2), range_step(8 * g - 5, 4 * g - 1, -2),
                  range_step(8 * g - 4, 4 * g, -2)});
  return f;
}

inline bool single_cycle(const Permutation& p) {
  std::size_t len = 1;
  for (auto x = p(1); x != 1; x = p(x)) ++len;
  return len == p.degree();
}

inline bool parity_respecting(const Permutation& p) {
  std::set<std::pair<int, int>> kinds;
  for (std::size_t x = 1; x <= p.degree(); ++x)
    kinds.insert({static_cast<int>(x % 2), static_cast<int>(p(static_cast<Permutation::symbol>(x)) % 2)});
  return kinds.size() == 2;
}

// σ∘ι∘σ = τ straight from the definition.
inline bool is_filling(int g, const Permutation& p) {
  const Fixed f = fixed(g);
  if (p.degree() != static_cast<std::size_t>(f.n)) return false;
  return single_cycle(p) && parity_respecting(p) &&
         fillperm::compose(p, fillperm::compose(f.iota, p)) == f.tau;
}

// All C with C∘C = target by backtracking, keeping those with ι∘C parity
// respecting.
inline std::vector<Permutation> parity_square_roots(int g) {
  const Fixed f = fixed(g);
  const Permutation target = fillperm::compose(f.iota, f.tau);
  const std::size_t n = target.degree();
  std::vector<int> c(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  std::vector<Permutation> out;
  std::function<void()> rec = [&] {
    std::size_t x = 1;
    while (x <= n && c[x] != 0) ++x;
    if (x > n) {
      std::vector<Permutation::symbol> im;
      for (std::size_t t = 1; t <= n; ++t) im.push_back(static_cast<Permutation::symbol>(c[t]));
      Permutation C = Permutation::from_images(im);
      if (parity_respecting(fillperm::compose(f.iota, C))) out.push_back(std::move(C));
      return;
    }
    for (std::size_t y = 1; y <= n; ++y) {
      if (used[y]) continue;
      // C(x) = y forces C(y) = target(x), and so on around the cycle
      std::vector<std::size_t> set_now;
      bool ok = true;
      std::size_t a = x, b = y;
      while (ok) {
        if (c[a] != 0) {
          ok = c[a] == static_cast<int>(b);
          break;
        }
        if (used[b]) {
          ok = false;
          break;
        }
        c[a] = static_cast<int>(b);
        used[b] = true;
        set_now.push_back(a);
        const std::size_t next = target(static_cast<Permutation::symbol>(a));
        a = b;
        b = next;
      }
      if (ok) rec();
      for (auto s : set_now) {
        used[static_cast<std::size_t>(c[s])] = false;
        c[s] = 0;
      }
    }
  };
  rec();
  return out;
}

// Vertices of the glued polygon as cycles of σ∘ι on edge symbols.
inline std::size_t vertex_count(int g, const Permutation& sigma) {
  return fillperm::cycles(fillperm::compose(sigma, fixed(g).iota)).size();
}

// |L_g| by listing every subset of {1..4r-3} of size r.
inline std::uint64_t count_Lg_bruteforce(int g) {
  const int r = (g - 1) / 2;
  const int top = 4 * r - 3;
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1U << top); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    int i = 0;
    bool ok = true;
    for (int v = 1; v <= top && ok; ++v)
      if (mask & (1U << (v - 1))) ok = v <= 4 * (++i) - 3;
    count += ok;
  }
  return count;
}

}  // namespace oracle

#endif  // FILLPERM_TESTS_ORACLES_HPP
