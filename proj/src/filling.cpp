#include "fillperm/filling.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace fillperm {

namespace {

// ι and τ evaluated from their closed forms on 0-based symbols.
std::uint32_t iota_of(std::uint32_t x, std::uint32_t n) { return (x + n / 2) % n; }

std::uint32_t tau_of(std::uint32_t x, std::uint32_t n) {
  const std::uint32_t half = n / 2;
  if (x < half) return (x + 2) % half;           // α_k -> α_{k+1}, β_k -> β_{k+1}
  return half + (x - half + half - 2) % half;    // inverses step backwards
}

}  // namespace

FillingCheck is_filling(const GenusContext& ctx, const Permutation& p) {
  if (p.degree() != static_cast<std::size_t>(ctx.n)) throw PermutationError("degree mismatch");
  if (!is_n_cycle(p)) return {false, "not an n-cycle"};
  if (!is_parity_respecting(p)) return {false, "not parity respecting"};
  const auto pz = p.zero_based();
  const auto n = static_cast<std::uint32_t>(ctx.n);
  for (std::uint32_t x = 0; x < n; ++x)
    if (pz[iota_of(pz[x], n)] != tau_of(x, n)) return {false, "equation sigma*iota*sigma = tau fails"};
  return {true, {}};
}

FillingPermutation::FillingPermutation(GenusContext ctx, Permutation perm) : ctx_(ctx), perm_(std::move(perm)) {
  const FillingCheck check = is_filling(ctx_, perm_);
  if (!check) throw InvalidFilling("not a filling permutation: " + check.failure);
}

std::vector<int> boundary_word(const FillingPermutation& fp) {
  const auto pz = fp.perm().zero_based();
  std::vector<int> word;
  word.reserve(pz.size());
  std::size_t x = 0;
  do {
    word.push_back(static_cast<int>(x + 1));
    x = pz[x];
  } while (x != 0);
  return word;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

SurfaceReport reconstruct(const FillingPermutation& fp) {
  const GenusContext& ctx = fp.context();
  const CanonicalPerms cp = canonical_perms(ctx);
  const std::size_t n = static_cast<std::size_t>(ctx.n);

  SurfaceReport report;
  report.boundary_word = boundary_word(fp);

  // position of each symbol on the boundary
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t t = 0; t < n; ++t) pos[report.boundary_word[t]] = t;

  // Edge t runs from corner t-1 to corner t (corner t follows edge t).
  auto initial_corner = [n](std::size_t t) { return (t + n - 1) % n; };
  auto terminal_corner = [](std::size_t t) { return t; };

  UnionFind uf(n);
  for (std::size_t t = 0; t < n; ++t) {
    const int s = report.boundary_word[t];
    const std::size_t u = pos[cp.iota(static_cast<Permutation::symbol>(s))];
    uf.unite(initial_corner(t), terminal_corner(u));
    uf.unite(terminal_corner(t), initial_corner(u));
  }

  std::map<std::size_t, std::vector<int>> classes;
  for (std::size_t c = 0; c < n; ++c) classes[uf.find(c)].push_back(static_cast<int>(c + 1));
  for (auto& [root, members] : classes) report.vertex_classes.push_back(std::move(members));
  std::sort(report.vertex_classes.begin(), report.vertex_classes.end());

  const long long V = static_cast<long long>(report.vertex_classes.size());
  const long long chi = V - static_cast<long long>(n / 2) + 1;
  if ((2 - chi) % 2 != 0) throw std::logic_error("reconstruct: odd Euler characteristic");
  report.genus = static_cast<int>((2 - chi) / 2);

  // terminal vertex of arc k must meet the initial vertex of arc k+1
  auto closes_up = [&](Curve curve) {
    for (int k = 1; k <= ctx.i_min; ++k) {
      const int next = k % ctx.i_min + 1;
      const int a = symbol_of(ctx, {curve, k, Direction::forward});
      const int b = symbol_of(ctx, {curve, next, Direction::forward});
      if (uf.find(terminal_corner(pos[a])) != uf.find(initial_corner(pos[b]))) return false;
    }
    return true;
  };
  report.alpha_is_single_curve = closes_up(Curve::alpha);
  report.beta_is_single_curve = closes_up(Curve::beta);

  bool sizes_ok = static_cast<int>(report.vertex_classes.size()) == ctx.i_min;
  for (const auto& c : report.vertex_classes) sizes_ok = sizes_ok && c.size() == 4;
  if (report.genus != ctx.g || !sizes_ok || !report.alpha_is_single_curve || !report.beta_is_single_curve)
    throw std::logic_error("reconstruct: glued surface inconsistent with a valid filling permutation");
  return report;
}

std::vector<Permutation> twisting_group(const GenusContext& ctx) {
  const CanonicalPerms cp = canonical_perms(ctx);
  const std::vector<Permutation> gens{cp.mu, cp.kappa, cp.delta, cp.eta_reversal};
  std::set<Permutation> group{Permutation::identity(static_cast<std::size_t>(ctx.n))};
  std::vector<Permutation> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& a : frontier)
      for (const auto& s : gens) {
        Permutation b = compose(s, a);
        if (group.insert(b).second) next.push_back(std::move(b));
      }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

std::vector<Permutation> displayed_twisting_set(const GenusContext& ctx) {
  const CanonicalPerms cp = canonical_perms(ctx);
  std::set<Permutation> out;
  for (int l = 0; l < 2; ++l)
    for (int k = 0; k < ctx.i_min; ++k)
      for (int j = 0; j < ctx.i_min; ++j)
        for (int i = 0; i < 2; ++i)
          out.insert(compose(power(cp.mu, l), compose(power(cp.kappa, k), compose(power(cp.delta, j), power(cp.eta, i)))));
  return {out.begin(), out.end()};
}

ClassCanonicalizer::ClassCanonicalizer(const GenusContext& ctx) : ctx_(ctx), group_(twisting_group(ctx)) {
  group_inverse_.reserve(group_.size());
  for (const auto& h : group_) group_inverse_.push_back(inverse(h));
}

Permutation ClassCanonicalizer::canonical(const Permutation& p) const {
  const std::size_t n = p.degree();
  const auto pz = p.zero_based();
  std::vector<Permutation::symbol> best(pz.begin(), pz.end());
  std::vector<Permutation::symbol> cand(n);
  for (std::size_t gi = 0; gi < group_.size(); ++gi) {
    const auto hz = group_[gi].zero_based();
    const auto hinv = group_inverse_[gi].zero_based();
    // (h p h^-1)[x] = h[p[h^-1[x]]], compared lazily against best
    bool smaller = false;
    std::size_t x = 0;
    for (; x < n; ++x) {
      cand[x] = hz[pz[hinv[x]]];
      if (cand[x] != best[x]) {
        smaller = cand[x] < best[x];
        break;
      }
    }
    if (!smaller) continue;
    for (++x; x < n; ++x) cand[x] = hz[pz[hinv[x]]];
    best.swap(cand);
  }
  return Permutation::from_zero_based_unchecked(std::move(best));
}

std::size_t ClassCanonicalizer::orbit_size(const Permutation& p) const {
  std::set<Permutation> orbit;
  for (const auto& h : group_) orbit.insert(conjugate(p, h));
  return orbit.size();
}

OrbitClass canonical_class_rep(const GenusContext& ctx, const Permutation& p) {
  const FillingCheck check = is_filling(ctx, p);
  if (!check) throw InvalidFilling("not a filling permutation: " + check.failure);
  std::optional<Permutation> best;
  for (const auto& h : twisting_group(ctx)) {
    Permutation c = conjugate(p, h);
    if (!is_filling(ctx, c)) throw std::logic_error("twisting conjugate is not a filling permutation");
    if (!best || c < *best) best = std::move(c);
  }
  return {ctx, std::move(*best)};
}

}  // namespace fillperm
