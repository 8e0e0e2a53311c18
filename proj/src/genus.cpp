#include "fillperm/genus.hpp"

#include <stdexcept>

namespace fillperm {

GenusContext GenusContext::make(int g) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1");
  if (g > 1000) throw std::invalid_argument("genus too large");
  return GenusContext{g, 8 * g - 4, 2 * g - 1};
}

SymbolInfo symbol_info(const GenusContext& ctx, int symbol) {
  if (symbol < 1 || symbol > ctx.n) throw std::out_of_range("symbol out of range");
  const int half = ctx.n / 2;
  SymbolInfo info;
  int base = symbol;
  if (symbol > half) {
    info.direction = Direction::inverse;
    base = symbol - half;
  }
  if (base % 2 == 1) {
    info.curve = Curve::alpha;
    info.arc_index = (base + 1) / 2;
  } else {
    info.curve = Curve::beta;
    info.arc_index = base / 2;
  }
  return info;
}

int symbol_of(const GenusContext& ctx, SymbolInfo info) {
  if (info.arc_index < 1 || info.arc_index > ctx.i_min) throw std::out_of_range("arc index out of range");
  int base = info.curve == Curve::alpha ? 2 * info.arc_index - 1 : 2 * info.arc_index;
  return info.direction == Direction::forward ? base : base + ctx.n / 2;
}

std::string symbol_name(const GenusContext& ctx, int symbol) {
  const SymbolInfo info = symbol_info(ctx, symbol);
  std::string s = info.curve == Curve::alpha ? "α" : "β";
  s += std::to_string(info.arc_index);
  if (info.direction == Direction::inverse) s += "⁻¹";
  return s;
}

namespace {

using Cycle = Permutation::Cycle;

// Arithmetic progression first, first+step, ... stopping once past `last`.
Cycle progression(int first, int last, int step) {
  Cycle c;
  if (step > 0)
    for (int v = first; v <= last; v += step) c.push_back(static_cast<Permutation::symbol>(v));
  else
    for (int v = first; v >= last; v += step) c.push_back(static_cast<Permutation::symbol>(v));
  return c;
}

}  // namespace

CanonicalPerms canonical_perms(const GenusContext& ctx) {
  const int g = ctx.g;
  const auto n = static_cast<std::size_t>(ctx.n);
  const int m = ctx.i_min;

  const Permutation Q = Permutation::from_cycles(n, {progression(1, ctx.n, 1)});
  Permutation iota = power(Q, 4 * g - 2);
  Permutation tau = Permutation::from_cycles(
      n, {progression(1, 4 * g - 3, 2), progression(2, 4 * g - 2, 2), progression(8 * g - 5, 4 * g - 1, -2),
          progression(8 * g - 4, 4 * g, -2)});
  Permutation kappa =
      Permutation::from_cycles(n, {progression(1, 4 * g - 3, 2), progression(4 * g - 1, 8 * g - 5, 2)});
  Permutation delta =
      Permutation::from_cycles(n, {progression(2, 4 * g - 2, 2), progression(4 * g, 8 * g - 4, 2)});

  std::vector<Cycle> eta_cycles;
  for (int k = 0; k < m; ++k)
    eta_cycles.push_back({static_cast<Permutation::symbol>(2 * k + 1), static_cast<Permutation::symbol>(4 * g - 1 + 2 * k)});
  Permutation eta = Permutation::from_cycles(n, eta_cycles);

  std::vector<Cycle> mu_cycles;
  for (int k = 0; k < ctx.n / 2; ++k)
    mu_cycles.push_back({static_cast<Permutation::symbol>(2 * k + 1), static_cast<Permutation::symbol>(2 * k + 2)});
  Permutation mu = Permutation::from_cycles(n, mu_cycles);

  // α_k <-> α_{2-k}^{-1}; the map is an involution on the α symbols.
  std::vector<Permutation::symbol> rev(n);
  for (std::size_t j = 0; j < n; ++j) rev[j] = static_cast<Permutation::symbol>(j + 1);
  for (int k = 1; k <= m; ++k) {
    const int partner = ((2 - k - 1) % m + m) % m + 1;
    const int from = symbol_of(ctx, {Curve::alpha, k, Direction::forward});
    const int to = symbol_of(ctx, {Curve::alpha, partner, Direction::inverse});
    rev[from - 1] = static_cast<Permutation::symbol>(to);
    rev[to - 1] = static_cast<Permutation::symbol>(from);
  }
  Permutation eta_reversal = Permutation::from_images(rev);

  return {Q, std::move(iota), std::move(tau), std::move(kappa), std::move(delta),
          std::move(eta), std::move(mu), std::move(eta_reversal)};
}

}  // namespace fillperm
