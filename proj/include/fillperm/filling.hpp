#ifndef FILLPERM_FILLING_HPP
#define FILLPERM_FILLING_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fillperm/genus.hpp"
#include "fillperm/permutation.hpp"

namespace fillperm {

/// Outcome of the three filling conditions, checked in order:
/// n-cycle, parity respecting, σ∘ι∘σ = τ.
struct FillingCheck {
  bool ok = false;
  std::string failure;  ///< empty when ok

  explicit operator bool() const { return ok; }
};

FillingCheck is_filling(const GenusContext& ctx, const Permutation& p);

class InvalidFilling : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation known to satisfy all filling conditions for its genus.
/// Encodes one oriented minimally intersecting filling pair.
class FillingPermutation {
 public:
  /// Validates; throws InvalidFilling with the first failed condition.
  FillingPermutation(GenusContext ctx, Permutation perm);

  const GenusContext& context() const { return ctx_; }
  const Permutation& perm() const { return perm_; }

  friend bool operator==(const FillingPermutation& a, const FillingPermutation& b) { return a.perm_ == b.perm_; }
  friend auto operator<=>(const FillingPermutation& a, const FillingPermutation& b) { return a.perm_ <=> b.perm_; }

 private:
  GenusContext ctx_;
  Permutation perm_;
};

/// Edge labels of the polygon read clockwise from symbol 1:
/// (1, σ(1), σ²(1), ...).
std::vector<int> boundary_word(const FillingPermutation& fp);

/// Result of gluing the (8g-4)-gon along the boundary word.
struct SurfaceReport {
  int genus = 0;
  /// Each class lists polygon corners (1-based; corner t sits at the end of
  /// boundary edge t) identified to one point of the surface.
  std::vector<std::vector<int>> vertex_classes;
  bool alpha_is_single_curve = false;
  bool beta_is_single_curve = false;
  std::vector<int> boundary_word;
};

/// Glues edge s to edge ι(s) with reversed orientation and reads off the
/// corner classes, the genus and whether consecutive arcs meet end to start.
/// Throws std::logic_error if the glued surface contradicts validity.
SurfaceReport reconstruct(const FillingPermutation& fp);

/// The group of relabelings generated by μ, κ, δ and the α-reversal:
/// change of initial α/β arc, reversal of α (and, through μ, of β), and the
/// α/β swap. Sorted by image array; always contains the identity.
std::vector<Permutation> twisting_group(const GenusContext& ctx);

/// The product set {μ^l κ^k δ^j η^i} built from the displayed
/// η. Kept for comparison only; it is not closed under composition and its
/// conjugates do not preserve the filling equation.
std::vector<Permutation> displayed_twisting_set(const GenusContext& ctx);

/// Canonical representative of a filling permutation under twisting
/// conjugation.
struct OrbitClass {
  GenusContext ctx;
  Permutation canonical;
  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
};

/// Reusable canonicalizer holding the twisting group of one genus.
class ClassCanonicalizer {
 public:
  explicit ClassCanonicalizer(const GenusContext& ctx);

  /// Lexicographically least conjugate. The argument is assumed valid.
  Permutation canonical(const Permutation& p) const;
  /// Number of distinct twisting conjugates of p.
  std::size_t orbit_size(const Permutation& p) const;

  const std::vector<Permutation>& group() const { return group_; }

 private:
  GenusContext ctx_;
  std::vector<Permutation> group_;
  std::vector<Permutation> group_inverse_;
};

/// Throws InvalidFilling if p is not filling. Every conjugate considered
/// is verified to be filling (std::logic_error otherwise).
OrbitClass canonical_class_rep(const GenusContext& ctx, const Permutation& p);

}  // namespace fillperm

#endif  // FILLPERM_FILLING_HPP
