#ifndef FILLPERM_ZPIECE_HPP
#define FILLPERM_ZPIECE_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fillperm/crossing_diagram.hpp"
#include "fillperm/filling.hpp"

namespace fillperm {

/// Splice pattern that replaces one intersection point by five.
///
/// The five new points are met by α in the order 1..5 and by β in the
/// order b_order[0..4]. Point i gets sign relative_sign[i] times the sign of
/// the excised point. The arc a runs over six arcs x1..x6 (entering arc,
/// four interior arcs, leaving arc), and likewise b over y1..y6.
struct ZTemplate {
  std::array<int, 5> b_order{};
  std::array<int, 5> relative_sign{};  ///< +1 same as excised point, -1 opposite

  /// Points along a, in order: always 1..5.
  std::array<int, 5> alpha_word() const { return {1, 2, 3, 4, 5}; }
  /// Points along b, in order.
  std::array<int, 5> beta_word() const { return b_order; }

  struct Incidence {
    int alpha_position;  ///< 1..5
    int beta_position;   ///< 1..5
    int relative_sign;
  };
  /// Which position along a equals which position along b, with signs.
  std::array<Incidence, 5> incidence() const;

  /// Roles of a and b exchanged: the b-word becomes the reading order and
  /// the a-word is visited in the inverse order.
  ZTemplate swapped() const;

  /// Lexicographic order on (b_order, sign bits) with +1 before -1.
  friend bool operator==(const ZTemplate&, const ZTemplate&) = default;
  friend bool operator<(const ZTemplate& x, const ZTemplate& y);
};

/// Inserts the template at point k of a diagram. Points after k are shifted
/// up by 4 and the new points take labels k..k+4. Throws
/// std::out_of_range("vertex out of range") unless 1 <= k <= points.
CrossingDiagram splice_diagram(const CrossingDiagram& d, int k, const ZTemplate& t);

/// Genus g+2 filling permutation obtained by splicing at vertex k.
/// Throws std::out_of_range("vertex out of range") unless 1 <= k <= 2g-1,
/// and std::logic_error if the result is not filling.
FillingPermutation splice(const FillingPermutation& fp, int k, const ZTemplate& t);

/// The genus-1 permutation [2,3,4,1].
FillingPermutation torus_solution();

/// Every template passing the derivation conditions, in template order:
/// the torus splice at point 1 lands in the genus-3 enumeration and every
/// genus-3 solution spliced at every point is a genus-5 filling
/// permutation.
std::vector<ZTemplate> derive_all_templates();

/// Least template of derive_all_templates(). Computed once per process.
/// Throws std::runtime_error("template derivation failed") if none exists.
const ZTemplate& derive_template();

std::string template_to_json(const ZTemplate& t);
/// Throws std::runtime_error on malformed input.
ZTemplate template_from_json(const std::string& text);

/// Hex digest identifying the derivation inputs (the genus-3 solution set
/// and the template encoding).
std::string derivation_key();

/// Reads the template cached under dir/ztemplate-<key>.json, deriving and
/// writing it on a miss.
ZTemplate load_or_derive_template(const std::filesystem::path& dir);

struct ZMatch {
  int alpha_start = 0;  ///< first point of the α window
  int beta_start = 0;   ///< first β position of the β window
  bool swapped = false;
  friend bool operator==(const ZMatch&, const ZMatch&) = default;
  friend auto operator<=>(const ZMatch&, const ZMatch&) = default;

  /// Interior α arcs alpha_start..alpha_start+3 (cyclic).
  std::vector<int> alpha_arcs(int points) const;
  /// Interior β arcs beta_start..beta_start+3 (cyclic).
  std::vector<int> beta_arcs(int points) const;
};

/// All windows of five consecutive α points and five consecutive β
/// positions carrying the template pattern (or its swap), with signs equal
/// to the template signs up to a common factor. One match per
/// (alpha_start, beta_start), the direct orientation preferred; sorted.
std::vector<ZMatch> detect_zpieces(const FillingPermutation& fp, const ZTemplate& t);
std::vector<ZMatch> detect_zpieces(const CrossingDiagram& d, const ZTemplate& t);

/// True when no two matches share an interior α arc or an interior β arc.
bool pairwise_arc_disjoint(const std::vector<ZMatch>& matches, int points);

/// The four ends of a Z-piece: initial end of x1 and y1, terminal end of x6
/// and y6. Each end is a half-edge (point, curve, outgoing/incoming).
struct ZEndpoints {
  struct End {
    int point;
    Curve curve;
    bool outgoing;
    friend bool operator==(const End&, const End&) = default;
  };
  std::array<End, 4> ends{};
  /// No two ends are the same half-edge.
  bool half_edges_distinct() const;
  /// No two ends sit at the same intersection point.
  bool points_distinct() const;
};

ZEndpoints zpiece_endpoints(const CrossingDiagram& d, const ZMatch& z);

/// Strictly increasing (a_1, ..., a_{(g-1)/2}) with a_i <= 4i-3.
struct LSequence {
  int g = 3;
  std::vector<int> entries;

  /// Throws std::invalid_argument if the constraints fail.
  void validate() const;
  friend bool operator==(const LSequence&, const LSequence&) = default;
};

/// All members of L_g in lexicographic order.
std::vector<LSequence> list_Lg(int g);

/// Starting from the torus, splices at point a_i in turn.
FillingPermutation build_from_sequence(const LSequence& seq, const ZTemplate& t);

/// Least twisting-class representative at genus 4, fixed as the genus-4
/// seed.
FillingPermutation genus4_seed();

}  // namespace fillperm

#endif  // FILLPERM_ZPIECE_HPP
