#include "fillperm/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

namespace fillperm {

BaseInvolution base_involution(const GenusContext& ctx) {
  const CanonicalPerms cp = canonical_perms(ctx);
  BaseInvolution base{compose(cp.iota, cp.tau), {}, {}};
  for (const auto& cyc : cycles(base.perm)) {
    if (cyc.size() != 2) throw std::logic_error("iota*tau is not a product of disjoint transpositions");
    const int a = static_cast<int>(std::min(cyc[0], cyc[1]));
    const int b = static_cast<int>(std::max(cyc[0], cyc[1]));
    if (a % 2 != b % 2) throw std::logic_error("iota*tau transposition mixes parities");
    (a % 2 == 1 ? base.odd : base.even).push_back({a, b, a % 2 == 1});
  }
  auto by_first = [](const Transposition& x, const Transposition& y) { return x.a < y.a; };
  std::sort(base.odd.begin(), base.odd.end(), by_first);
  std::sort(base.even.begin(), base.even.end(), by_first);
  return base;
}

namespace {

// Writes the 4-cycle for odd (a, b) and even (c, d) into a 0-based image array.
inline void interleave(std::vector<Permutation::symbol>& c, const Transposition& o, const Transposition& e,
                       bool bit) {
  const auto a = static_cast<Permutation::symbol>(o.a - 1), b = static_cast<Permutation::symbol>(o.b - 1);
  auto x = static_cast<Permutation::symbol>(e.a - 1), y = static_cast<Permutation::symbol>(e.b - 1);
  if (bit) std::swap(x, y);
  c[a] = x;
  c[x] = b;
  c[b] = y;
  c[y] = a;
}

std::vector<int> unrank_matching(std::uint64_t rank, int m) {
  std::vector<int> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(m) + 1, 1);
  for (int k = 1; k <= m; ++k) fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k - 1)] * k;
  std::vector<int> out;
  for (int k = m; k >= 1; --k) {
    const std::uint64_t f = fact[static_cast<std::size_t>(k - 1)];
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<long>(idx));
  }
  return out;
}

std::uint64_t factorial_u64(int m) {
  std::uint64_t f = 1;
  for (int k = 2; k <= m; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// Walks matchings with ranks in [first, last) and every bit vector.
template <typename Visit>
bool walk_roots(const BaseInvolution& base, std::uint64_t first, std::uint64_t last, Visit&& visit) {
  const int m = static_cast<int>(base.odd.size());
  const std::size_t n = base.perm.degree();
  std::vector<int> matching = unrank_matching(first, m);
  std::vector<Permutation::symbol> c(n);
  for (std::uint64_t r = first; r < last; ++r) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      for (int t = 0; t < m; ++t) {
        const bool bit = (bits >> (m - 1 - t)) & 1U;
        interleave(c, base.odd[static_cast<std::size_t>(t)],
                   base.even[static_cast<std::size_t>(matching[static_cast<std::size_t>(t)])], bit);
      }
      if (!visit(c)) return false;
    }
    std::next_permutation(matching.begin(), matching.end());
  }
  return true;
}

// σ = ι∘C as a 0-based image array, returned only if it is a filling n-cycle.
bool is_filling_root(const std::vector<Permutation::symbol>& c, std::vector<Permutation::symbol>& sigma) {
  const std::size_t n = c.size();
  const std::size_t half = n / 2;
  for (std::size_t x = 0; x < n; ++x) sigma[x] = static_cast<Permutation::symbol>((c[x] + half) % n);
  const auto p0 = sigma[0] % 2, p1 = sigma[1] % 2;
  if (p0 == p1) return false;
  std::size_t len = 1;
  for (auto x = sigma[0]; x != 0; x = sigma[x]) {
    if (sigma[x] % 2 != (x % 2 == 0 ? p0 : p1)) return false;
    ++len;
  }
  return len == n;
}

}  // namespace

Permutation realize(const BaseInvolution& base, const TranspositionPairing& pairing) {
  const std::size_t m = base.odd.size();
  if (pairing.matching.size() != m || pairing.bits.size() != m)
    throw std::invalid_argument("pairing size does not match the number of transpositions");
  std::vector<bool> used(m, false);
  std::vector<Permutation::symbol> c(base.perm.degree());
  for (std::size_t t = 0; t < m; ++t) {
    const int e = pairing.matching[t];
    if (e < 0 || static_cast<std::size_t>(e) >= m || used[static_cast<std::size_t>(e)])
      throw std::invalid_argument("pairing is not a perfect matching");
    used[static_cast<std::size_t>(e)] = true;
    interleave(c, base.odd[t], base.even[static_cast<std::size_t>(e)], pairing.bits[t] != 0);
  }
  return Permutation::from_zero_based_unchecked(std::move(c));
}

void for_each_square_root(const GenusContext& ctx, const std::function<bool(const Permutation&)>& visit) {
  const BaseInvolution base = base_involution(ctx);
  const int m = static_cast<int>(base.odd.size());
  walk_roots(base, 0, factorial_u64(m), [&](const std::vector<Permutation::symbol>& c) {
    return visit(Permutation::from_zero_based_unchecked(c));
  });
}

std::vector<Permutation> square_roots(const GenusContext& ctx) {
  std::vector<Permutation> out;
  for_each_square_root(ctx, [&](const Permutation& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

GuardExceeded::GuardExceeded(int genus, int guard)
    : std::runtime_error("genus " + std::to_string(genus) + " exceeds the guard g <= " + std::to_string(guard) +
                         ": " + root_count(genus).str() + " square roots of " + std::to_string(8 * genus - 4) +
                         "-symbol permutations would be examined; raise the guard or force the run"),
      genus_(genus),
      guard_(guard) {}

EnumerationResult enumerate_roots(const GenusContext& ctx, const EnumerationOptions& opts) {
  if (ctx.g > opts.guard && !opts.force) throw GuardExceeded(ctx.g, opts.guard);
  const BaseInvolution base = base_involution(ctx);
  const int m = static_cast<int>(base.odd.size());
  if (m > 20) throw std::length_error("matching ranks overflow 64 bits");
  const std::uint64_t total = factorial_u64(m);
  const unsigned jobs = std::max(1U, opts.jobs);

  // fixed chunking so the merge order never depends on the worker count
  const std::uint64_t chunk_count = std::min<std::uint64_t>(total, 256);
  std::vector<std::vector<Permutation>> found(chunk_count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    std::vector<Permutation::symbol> sigma(base.perm.degree());
    for (std::uint64_t k = next++; k < chunk_count; k = next++) {
      const std::uint64_t first = total * k / chunk_count, last = total * (k + 1) / chunk_count;
      walk_roots(base, first, last, [&](const std::vector<Permutation::symbol>& c) {
        if (is_filling_root(c, sigma)) found[k].push_back(Permutation::from_zero_based_unchecked(sigma));
        return true;
      });
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  EnumerationResult result;
  result.root_count = total << m;
  for (auto& chunk : found)
    for (auto& p : chunk) result.fillings.emplace_back(ctx, std::move(p));
  return result;
}

std::vector<FillingPermutation> enumerate_filling(const GenusContext& ctx, const EnumerationOptions& opts) {
  return enumerate_roots(ctx, opts).fillings;
}

std::vector<Permutation> class_representatives(const GenusContext& ctx,
                                               const std::vector<FillingPermutation>& fillings, unsigned jobs) {
  const ClassCanonicalizer canon(ctx);
  jobs = std::max(1U, jobs);
  std::vector<std::set<Permutation>> partial(jobs);
  auto worker = [&](unsigned j) {
    for (std::size_t t = j; t < fillings.size(); t += jobs) partial[j].insert(canon.canonical(fillings[t].perm()));
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
    for (auto& t : pool) t.join();
  }
  std::set<Permutation> merged;
  for (auto& s : partial) merged.merge(s);
  return {merged.begin(), merged.end()};
}

std::size_t count_classes(const GenusContext& ctx, const EnumerationOptions& opts) {
  return class_representatives(ctx, enumerate_filling(ctx, opts), opts.jobs).size();
}

namespace {

BigInt factorial(int k) {
  BigInt f = 1;
  for (int t = 2; t <= k; ++t) f *= t;
  return f;
}

BigInt pow2(int k) { return BigInt(1) << k; }

}  // namespace

BigInt root_count(int g) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1");
  return pow2(2 * g - 1) * factorial(2 * g - 1);
}

BigInt upper_bound(int g) {
  if (g < 3) throw std::invalid_argument("bounds not defined");
  return pow2(2 * g - 2) * (4 * g - 5) * factorial(2 * g - 3);
}

BigInt count_Lg(int g) {
  if (g < 3 || g % 2 == 0) throw std::invalid_argument("L_g is defined for odd g >= 3");
  const int r = (g - 1) / 2;
  const int cap = 4 * r - 3;
  // ways[v] = number of valid prefixes of the current length ending in v
  std::vector<BigInt> ways(static_cast<std::size_t>(cap) + 1, 0);
  ways[1] = 1;
  for (int i = 2; i <= r; ++i) {
    std::vector<BigInt> next(ways.size(), 0);
    BigInt below = 0;
    for (int v = 1; v <= 4 * i - 3; ++v) {
      next[static_cast<std::size_t>(v)] = below;
      below += ways[static_cast<std::size_t>(v)];
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

std::optional<BigRational> lower_bound(int g) {
  if (g < 3) throw std::invalid_argument("bounds not defined");
  if (g % 2 == 0) return std::nullopt;
  return BigRational(count_Lg(g), BigInt(4 * (2 * g - 1) * (2 * g - 1)));
}

BigInt excluded_count(int g) {
  if (g < 2) throw std::invalid_argument("exclusion family needs g >= 2");
  return pow2(2 * g - 2) * (2 * g - 1) * factorial(2 * g - 3);
}

std::vector<Permutation> excluded_roots(const GenusContext& ctx) {
  if (ctx.g < 3) throw std::invalid_argument("exclusion family needs g >= 3");
  const BaseInvolution base = base_involution(ctx);
  const int n = ctx.n;
  const int m = ctx.i_min;
  auto odd_index = [&](int s) {
    for (std::size_t t = 0; t < base.odd.size(); ++t)
      if (base.odd[t].a == s || base.odd[t].b == s) return t;
    throw std::logic_error("symbol not in an odd transposition");
  };
  auto even_index = [&](int s) {
    for (std::size_t t = 0; t < base.even.size(); ++t)
      if (base.even[t].a == s || base.even[t].b == s) return t;
    throw std::logic_error("symbol not in an even transposition");
  };
  const std::size_t o1 = odd_index(1);
  const std::size_t o2 = odd_index(4 * ctx.g - 1);
  if (o1 == o2) throw std::logic_error("exclusion family degenerate");

  std::vector<Permutation> out;
  for (std::size_t e1 = 0; e1 < base.even.size(); ++e1)
    for (int order = 0; order < 2; ++order) {
      TranspositionPairing pairing{std::vector<int>(static_cast<std::size_t>(m), -1),
                                   std::vector<std::uint8_t>(static_cast<std::size_t>(m), 0)};
      // C(1) = k where k is the first symbol visited after 1
      const Transposition& ov = base.odd[o1];
      pairing.matching[o1] = static_cast<int>(e1);
      const std::uint8_t b1 = static_cast<std::uint8_t>(order);
      pairing.bits[o1] = ov.a == 1 ? b1 : static_cast<std::uint8_t>(1 - b1);
      const int k = order == 0 ? base.even[e1].a : base.even[e1].b;
      const int u = (k - 1 + n / 2) % n + 1;
      const std::size_t e2 = even_index(u);
      if (e2 == e1) throw std::logic_error("exclusion family degenerate");
      pairing.matching[o2] = static_cast<int>(e2);
      // odd (a, b) with even (c, d): bit 0 sends d -> a and c -> b
      const Transposition& ow = base.odd[o2];
      const Transposition& ew = base.even[e2];
      const int target = 4 * ctx.g - 1;
      const bool bit0_ok = (ew.b == u && ow.a == target) || (ew.a == u && ow.b == target);
      pairing.bits[o2] = bit0_ok ? 0 : 1;

      std::vector<std::size_t> rest_odd, rest_even;
      for (std::size_t t = 0; t < base.odd.size(); ++t)
        if (t != o1 && t != o2) rest_odd.push_back(t);
      for (std::size_t t = 0; t < base.even.size(); ++t)
        if (t != e1 && t != e2) rest_even.push_back(t);
      const std::size_t r = rest_odd.size();
      do {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << r); ++bits) {
          for (std::size_t t = 0; t < r; ++t) {
            pairing.matching[rest_odd[t]] = static_cast<int>(rest_even[t]);
            pairing.bits[rest_odd[t]] = static_cast<std::uint8_t>((bits >> (r - 1 - t)) & 1U);
          }
          out.push_back(realize(base, pairing));
        }
      } while (std::next_permutation(rest_even.begin(), rest_even.end()));
    }
  return out;
}

BoundsReport bounds_report(int g) {
  BoundsReport rep;
  rep.genus = g;
  rep.upper = upper_bound(g);
  rep.root_count = root_count(g);
  rep.lower = lower_bound(g);
  if (!rep.lower) rep.lower_note = "not implemented (even-genus chain)";
  return rep;
}

}  // namespace fillperm
