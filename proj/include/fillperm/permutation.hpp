#ifndef FILLPERM_PERMUTATION_HPP
#define FILLPERM_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fillperm {

/// Raised for malformed permutation data: non-bijective images, degree
/// mismatches, parity queries on odd degree.
class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by parse() with the byte offset of the offending character.
class ParseError : public PermutationError {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A bijection of {1..n}. Symbols are 1-based at every public entry point;
/// storage is 0-based. Instances are immutable once built.
class Permutation {
 public:
  using symbol = std::uint32_t;
  using Cycle = std::vector<symbol>;

  /// Identity of degree 1.
  Permutation();

  static Permutation identity(std::size_t n);

  /// images[j-1] is the image of j. Throws "not a permutation" unless the
  /// list is a bijection of {1..n}.
  static Permutation from_images(std::span<const symbol> images);
  static Permutation from_images(std::initializer_list<symbol> images);

  /// Product of the given cycles on n symbols. Cycles with fewer than two
  /// entries contribute nothing. Cycles must be pairwise disjoint.
  static Permutation from_cycles(std::size_t n, const std::vector<Cycle>& cycles);

  /// Builds directly from 0-based images without checking bijectivity.
  /// Callers must guarantee the invariant (hot loops in the enumerator).
  static Permutation from_zero_based_unchecked(std::vector<symbol> images);

  std::size_t degree() const { return images_.size(); }

  /// Image of the 1-based symbol j.
  symbol operator()(symbol j) const;

  /// 1-based image list.
  std::vector<symbol> images() const;

  /// 0-based view of the storage: zero_based()[x] = image(x+1) - 1.
  std::span<const symbol> zero_based() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on the image array (degree first).
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  explicit Permutation(std::vector<symbol> zero_based);

  std::vector<symbol> images_;
};

/// (p∘q)(x) = p(q(x)): q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// k-fold composition; negative k uses the inverse.
Permutation power(const Permutation& p, long long k);
/// h∘p∘h⁻¹.
Permutation conjugate(const Permutation& p, const Permutation& h);

/// Disjoint cycles including fixed points, each starting at its least
/// element, sorted by that element.
std::vector<Permutation::Cycle> cycles(const Permutation& p);
/// Sorted (descending) cycle lengths.
std::vector<std::size_t> cycle_type(const Permutation& p);
/// lcm of the cycle lengths.
std::uint64_t order(const Permutation& p);

bool is_n_cycle(const Permutation& p);

/// True iff the parity of p(j) is a function of the parity of j.
/// Throws "parity undefined" for odd degree.
bool is_parity_respecting(const Permutation& p);

/// Accepts "[i1,...,in]" or cycle notation "(a b c)(d e)" / "(a,b,c)".
/// Cycle notation needs a degree, either as the argument or as a leading
/// "n=K" token; without one, the largest symbol mentioned is used.
Permutation parse(std::string_view text, std::optional<std::size_t> degree = std::nullopt);

/// Canonical image-list form "[i1,...,in]".
std::string format(const Permutation& p);
/// Cycle notation with fixed points omitted, "()" for the identity.
std::string format_cycles(const Permutation& p);

}  // namespace fillperm

template <>
struct std::hash<fillperm::Permutation> {
  std::size_t operator()(const fillperm::Permutation& p) const noexcept;
};

#endif  // FILLPERM_PERMUTATION_HPP
