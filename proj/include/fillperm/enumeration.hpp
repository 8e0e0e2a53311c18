#ifndef FILLPERM_ENUMERATION_HPP
#define FILLPERM_ENUMERATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fillperm/filling.hpp"
#include "fillperm/genus.hpp"
#include "fillperm/permutation.hpp"

namespace fillperm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A transposition (a, b) of ι∘τ with a < b; odd when both symbols are odd.
struct Transposition {
  int a = 0;
  int b = 0;
  bool odd = false;
  friend bool operator==(const Transposition&, const Transposition&) = default;
};

struct BaseInvolution {
  Permutation perm;                 ///< ι∘τ
  std::vector<Transposition> odd;   ///< sorted by first symbol
  std::vector<Transposition> even;  ///< sorted by first symbol
};

BaseInvolution base_involution(const GenusContext& ctx);

/// A perfect matching between odd and even transpositions of ι∘τ plus one
/// interleaving bit per pair. odd[i] = (a, b) is paired with
/// even[matching[i]] = (c, d); bit 0 forms (a, c, b, d), bit 1 forms
/// (a, d, b, c).
struct TranspositionPairing {
  std::vector<int> matching;
  std::vector<std::uint8_t> bits;
};

/// The square root C with C² = ι∘τ realized by a pairing.
Permutation realize(const BaseInvolution& base, const TranspositionPairing& pairing);

/// Visits all 2^{2g-1}(2g-1)! square roots in order: matchings in
/// lexicographic order, then interleaving bits with the first pair's bit
/// most significant. Returning false from the visitor stops the walk.
void for_each_square_root(const GenusContext& ctx, const std::function<bool(const Permutation&)>& visit);

std::vector<Permutation> square_roots(const GenusContext& ctx);

/// Thrown when a run would exceed the genus guard.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(int genus, int guard);
  int genus() const { return genus_; }
  int guard() const { return guard_; }

 private:
  int genus_;
  int guard_;
};

inline constexpr int kDefaultGuard = 5;

struct EnumerationOptions {
  unsigned jobs = 1;
  int guard = kDefaultGuard;  ///< largest genus allowed without force
  bool force = false;
};

struct EnumerationResult {
  std::uint64_t root_count = 0;
  std::vector<FillingPermutation> fillings;  ///< in square-root order
};

/// All ι∘C over square roots C that are parity-respecting n-cycles, in the
/// order of for_each_square_root regardless of the number of jobs.
EnumerationResult enumerate_roots(const GenusContext& ctx, const EnumerationOptions& opts = {});

std::vector<FillingPermutation> enumerate_filling(const GenusContext& ctx, const EnumerationOptions& opts = {});

/// Sorted distinct canonical representatives of the twisting classes.
std::vector<Permutation> class_representatives(const GenusContext& ctx,
                                               const std::vector<FillingPermutation>& fillings, unsigned jobs = 1);

/// N(g): the number of twisting classes of filling permutations.
std::size_t count_classes(const GenusContext& ctx, const EnumerationOptions& opts = {});

/// 2^{2g-1}(2g-1)!
BigInt root_count(int g);
/// 2^{2g-2}(4g-5)(2g-3)!; throws std::invalid_argument("bounds not defined")
/// for g < 3.
BigInt upper_bound(int g);
/// |L_g| / (4(2g-1)²) for odd g >= 3, nullopt for even g >= 4; throws for
/// g < 3.
std::optional<BigRational> lower_bound(int g);

/// Number of strictly increasing sequences (a_1, ..., a_{(g-1)/2}) with
/// a_i <= 4i-3. Throws std::invalid_argument unless g is odd and >= 3.
BigInt count_Lg(int g);

/// 2^{2g-2}(2g-1)(2g-3)!
BigInt excluded_count(int g);

/// Square roots C built so that (ι∘C)²(1) = 1: the odd transposition
/// containing 1 is paired with each even transposition (k, j) in both
/// orders so that C(1) = k, the transposition containing u = ι(k) is paired
/// with the one containing 4g-1 so that C(u) = 4g-1, and the rest are
/// paired arbitrarily. Throws std::invalid_argument for g < 3.
std::vector<Permutation> excluded_roots(const GenusContext& ctx);

struct BoundsReport {
  int genus = 0;
  std::optional<BigRational> lower;
  std::string lower_note;  ///< why lower is absent
  BigInt upper;
  BigInt root_count;
  std::optional<std::size_t> exact_N;
};

BoundsReport bounds_report(int g);

}  // namespace fillperm

#endif  // FILLPERM_ENUMERATION_HPP
