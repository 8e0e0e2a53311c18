#ifndef FILLPERM_CROSSING_DIAGRAM_HPP
#define FILLPERM_CROSSING_DIAGRAM_HPP

#include <optional>
#include <vector>

#include "fillperm/filling.hpp"
#include "fillperm/permutation.hpp"

namespace fillperm {

/// Two oriented closed curves crossing transversally at `points()` points.
///
/// Points are labelled 1..m in the order α meets them, so α_k runs from
/// point k to point k+1 (cyclically). β_j runs from beta_sequence[j-1] to
/// beta_sequence[j]. The sign of a point fixes the counter-clockwise order
/// of its four half-edges:
///   +1: α-out, β-out, α-in, β-in
///   -1: α-out, β-in,  α-in, β-out
///
/// Faces are traced by leaving each point along the half-edge that follows
/// the arriving one counter-clockwise, which is the clockwise boundary
/// reading of the complementary polygons.
class CrossingDiagram {
 public:
  CrossingDiagram(std::vector<int> beta_sequence, std::vector<int> signs);

  int points() const { return static_cast<int>(beta_sequence_.size()); }
  const std::vector<int>& beta_sequence() const { return beta_sequence_; }
  const std::vector<int>& signs() const { return signs_; }
  int sign(int point) const { return signs_.at(static_cast<std::size_t>(point - 1)); }
  /// j such that β_j starts at `point`.
  int beta_position(int point) const { return beta_position_.at(static_cast<std::size_t>(point - 1)); }

  friend bool operator==(const CrossingDiagram& a, const CrossingDiagram& b) {
    return a.beta_sequence_ == b.beta_sequence_ && a.signs_ == b.signs_;
  }

 private:
  std::vector<int> beta_sequence_;
  std::vector<int> signs_;
  std::vector<int> beta_position_;
};

/// Reads the crossing data off a filling permutation. Throws
/// std::logic_error if the corners disagree about a point.
CrossingDiagram diagram_of(const FillingPermutation& fp);

/// Boundary cycles of the complementary regions as signed arc ids
/// (+k / -k for α_k, +(m+k) / -(m+k) for β_k), each starting at its
/// least-position entry of the tracing order; deterministic.
std::vector<std::vector<int>> faces(const CrossingDiagram& d);

/// The edge-successor map on the 4m directed-arc symbols (same numbering
/// as the filling symbol table with 2g-1 replaced by m). A filling
/// permutation exactly when the complement is one disk.
Permutation face_permutation(const CrossingDiagram& d);

/// face_permutation when m = 2g-1 is odd and the result is filling.
std::optional<FillingPermutation> filling_of(const CrossingDiagram& d);

}  // namespace fillperm

#endif  // FILLPERM_CROSSING_DIAGRAM_HPP
