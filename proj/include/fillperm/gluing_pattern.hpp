#ifndef FILLPERM_GLUING_PATTERN_HPP
#define FILLPERM_GLUING_PATTERN_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fillperm/crossing_diagram.hpp"
#include "fillperm/filling.hpp"

namespace fillperm {

/// Polygons obtained by cutting a surface along a filling pair that meets
/// `i` times. Each polygon is a clockwise cyclic list of signed arc ids:
/// +k / -k is α-arc k traversed forwards / backwards (1 <= k <= i), and
/// +(i+k) / -(i+k) is β-arc k. Edge +x is glued to edge -x.
///
/// JSON form: {"i": 4, "polygons": [[1, 5, -2, ...], [...]]}
struct GluingPattern {
  int i = 0;
  std::vector<std::vector<int>> polygons;

  friend bool operator==(const GluingPattern&, const GluingPattern&) = default;
  friend auto operator<=>(const GluingPattern&, const GluingPattern&) = default;
};

class InvalidPattern : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed pattern JSON.
class PatternFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValidationReport {
  bool valid = false;
  std::vector<std::string> failures;
  std::size_t corner_orbits = 0;
  bool connected = false;
  bool alpha_is_single_curve = false;
  bool beta_is_single_curve = false;
  /// A 2-gon face means the curves are not in minimal position. Reported,
  /// not a failure.
  bool has_bigon = false;
};

/// Checks the edge pairing, the corner map M(e) = partner(successor(e))
/// (all orbits of size exactly 4, each a transverse crossing), connectivity
/// of the glued complex and that each curve closes up as one cycle.
ValidationReport validate(const GluingPattern& pat);

/// Genus from χ = V - E + F. Throws InvalidPattern for invalid patterns or
/// odd χ.
int euler_genus(const GluingPattern& pat);

/// Number of arcs whose two edges lie on the same polygon.
int t1(const GluingPattern& pat);

/// Single polygon read off the boundary word.
GluingPattern from_filling(const FillingPermutation& fp);

/// Complementary polygons of a crossing diagram.
GluingPattern pattern_from_diagram(const CrossingDiagram& d);

/// Least form over arc relabelings (start arc and direction of each curve,
/// curve swap), each polygon rotated to its least rotation, polygons
/// sorted.
GluingPattern canonical_form(const GluingPattern& pat);

/// Exhaustive search for minimal-position (bigon-free) patterns of the
/// given genus and intersection number, deduplicated by canonical_form,
/// sorted, truncated to `limit`. Throws std::invalid_argument when
/// intersections < 2*genus-1 and std::length_error("search space too
/// large") when 4*intersections > 24.
std::vector<GluingPattern> search_patterns(int genus, int intersections, std::size_t limit);

GluingPattern pattern_from_json(const std::string& text);
std::string pattern_to_json(const GluingPattern& pat);

}  // namespace fillperm

#endif  // FILLPERM_GLUING_PATTERN_HPP
