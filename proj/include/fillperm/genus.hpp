#ifndef FILLPERM_GENUS_HPP
#define FILLPERM_GENUS_HPP

#include <cstdint>
#include <string>

#include "fillperm/permutation.hpp"

namespace fillperm {

/// Genus g together with the derived sizes of the symbol table.
struct GenusContext {
  int g = 1;
  int n = 4;      ///< 8g-4 edge symbols
  int i_min = 1;  ///< 2g-1 intersection points (= arcs per curve)

  /// Throws std::invalid_argument for g < 1.
  static GenusContext make(int g);

  friend bool operator==(const GenusContext&, const GenusContext&) = default;
};

enum class Curve { alpha, beta };
enum class Direction { forward, inverse };

/// Decoded element of the ordered symbol table
/// {α1, β1, ..., α_{2g-1}, β_{2g-1}, α1⁻¹, β1⁻¹, ...}.
struct SymbolInfo {
  Curve curve = Curve::alpha;
  int arc_index = 1;
  Direction direction = Direction::forward;

  friend bool operator==(const SymbolInfo&, const SymbolInfo&) = default;
};

SymbolInfo symbol_info(const GenusContext& ctx, int symbol);
int symbol_of(const GenusContext& ctx, SymbolInfo info);
/// "α3", "β1⁻¹", ...
std::string symbol_name(const GenusContext& ctx, int symbol);

/// The fixed permutations of the construction. `eta` is the α-inversion
/// exactly as commonly displayed, (1,4g-1)(3,4g+1)...(4g-3,8g-5), which
/// swaps each α_k with α_k⁻¹ but keeps the arc order. `eta_reversal`
/// reverses the direction of α (α_k ↦ α_{2-k}⁻¹, indices mod 2g-1) and is
/// the generator used for the twisting group.
struct CanonicalPerms {
  Permutation Q;
  Permutation iota;  ///< Q^{4g-2}: each edge to its inverse
  Permutation tau;   ///< advance one arc along α and along β
  Permutation kappa;
  Permutation delta;
  Permutation eta;
  Permutation mu;
  Permutation eta_reversal;
};

CanonicalPerms canonical_perms(const GenusContext& ctx);

}  // namespace fillperm

#endif  // FILLPERM_GENUS_HPP
