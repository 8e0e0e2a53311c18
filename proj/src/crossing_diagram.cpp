#include "fillperm/crossing_diagram.hpp"

#include <array>
#include <stdexcept>

namespace fillperm {

namespace {

enum class End { out, in };

struct HalfEdge {
  Curve curve;
  End end;
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

constexpr std::array<HalfEdge, 4> kPositive{{{Curve::alpha, End::out},
                                             {Curve::beta, End::out},
                                             {Curve::alpha, End::in},
                                             {Curve::beta, End::in}}};
constexpr std::array<HalfEdge, 4> kNegative{{{Curve::alpha, End::out},
                                             {Curve::beta, End::in},
                                             {Curve::alpha, End::in},
                                             {Curve::beta, End::out}}};

HalfEdge ccw_next(int sign, HalfEdge h) {
  const auto& rot = sign > 0 ? kPositive : kNegative;
  for (std::size_t i = 0; i < 4; ++i)
    if (rot[i] == h) return rot[(i + 1) % 4];
  throw std::logic_error("unreachable half-edge");
}

// Directed arc in symbol form for a curve pair with m arcs each.
struct Arc {
  Curve curve;
  int index;  // 1..m
  bool forward;
};

Arc decode(int m, int symbol) {
  const bool fwd = symbol <= 2 * m;
  const int base = fwd ? symbol : symbol - 2 * m;
  return base % 2 == 1 ? Arc{Curve::alpha, (base + 1) / 2, fwd} : Arc{Curve::beta, base / 2, fwd};
}

int encode(int m, Arc a) {
  const int base = a.curve == Curve::alpha ? 2 * a.index - 1 : 2 * a.index;
  return a.forward ? base : base + 2 * m;
}

int signed_id(int m, Arc a) {
  const int id = a.curve == Curve::alpha ? a.index : m + a.index;
  return a.forward ? id : -id;
}

int wrap(int k, int m) { return ((k - 1) % m + m) % m + 1; }

}  // namespace

CrossingDiagram::CrossingDiagram(std::vector<int> beta_sequence, std::vector<int> signs)
    : beta_sequence_(std::move(beta_sequence)), signs_(std::move(signs)) {
  const std::size_t m = beta_sequence_.size();
  if (m == 0) throw std::invalid_argument("diagram needs at least one point");
  if (signs_.size() != m) throw std::invalid_argument("one sign per point required");
  beta_position_.assign(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    const int v = beta_sequence_[j];
    if (v < 1 || static_cast<std::size_t>(v) > m || beta_position_[v - 1] != 0)
      throw std::invalid_argument("beta sequence is not a permutation of the points");
    beta_position_[v - 1] = static_cast<int>(j + 1);
  }
  for (int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
}

CrossingDiagram diagram_of(const FillingPermutation& fp) {
  const int m = fp.context().i_min;
  const int n = fp.context().n;
  const Permutation& sigma = fp.perm();
  std::vector<int> bseq(static_cast<std::size_t>(m), 0);
  std::vector<int> sgn(static_cast<std::size_t>(m), 0);

  auto assign = [](std::vector<int>& slot, int idx, int value) {
    int& cell = slot[static_cast<std::size_t>(idx - 1)];
    if (cell != 0 && cell != value) throw std::logic_error("diagram_of: inconsistent corner data");
    cell = value;
  };

  for (int e = 1; e <= n; ++e) {
    const Arc a = decode(m, e);
    const Arc b = decode(m, static_cast<int>(sigma(static_cast<Permutation::symbol>(e))));
    if (a.curve == b.curve) throw std::logic_error("diagram_of: consecutive edges on one curve");
    const HalfEdge h1{a.curve, a.forward ? End::in : End::out};
    const HalfEdge h2{b.curve, b.forward ? End::out : End::in};
    // terminal of a and initial of b are one point; exactly one is on α
    int point = 0;
    if (a.curve == Curve::alpha) {
      point = a.forward ? wrap(a.index + 1, m) : a.index;
      assign(bseq, b.forward ? b.index : wrap(b.index + 1, m), point);
    } else {
      point = b.forward ? b.index : wrap(b.index + 1, m);
      assign(bseq, a.forward ? wrap(a.index + 1, m) : a.index, point);
    }
    int sign = 0;
    if (ccw_next(+1, h1) == h2) sign = +1;
    else if (ccw_next(-1, h1) == h2) sign = -1;
    else throw std::logic_error("diagram_of: corner is not a sector of a crossing");
    assign(sgn, point, sign);
  }
  return CrossingDiagram(std::move(bseq), std::move(sgn));
}

namespace {

Arc successor(const CrossingDiagram& d, Arc a) {
  const int m = d.points();
  int point = 0;
  if (a.curve == Curve::alpha) {
    point = a.forward ? wrap(a.index + 1, m) : a.index;
  } else {
    const int j = a.forward ? wrap(a.index + 1, m) : a.index;
    point = d.beta_sequence()[static_cast<std::size_t>(j - 1)];
  }
  const HalfEdge h2 = ccw_next(d.sign(point), HalfEdge{a.curve, a.forward ? End::in : End::out});
  const bool out = h2.end == End::out;
  if (h2.curve == Curve::alpha) return Arc{Curve::alpha, out ? point : wrap(point - 1, m), out};
  const int j = d.beta_position(point);
  return Arc{Curve::beta, out ? j : wrap(j - 1, m), out};
}

}  // namespace

Permutation face_permutation(const CrossingDiagram& d) {
  const int m = d.points();
  std::vector<Permutation::symbol> im(static_cast<std::size_t>(4 * m));
  for (int e = 1; e <= 4 * m; ++e)
    im[static_cast<std::size_t>(e - 1)] = static_cast<Permutation::symbol>(encode(m, successor(d, decode(m, e))));
  return Permutation::from_images(im);
}

std::vector<std::vector<int>> faces(const CrossingDiagram& d) {
  const int m = d.points();
  const Permutation next = face_permutation(d);
  std::vector<std::vector<int>> out;
  for (const auto& cyc : cycles(next)) {
    std::vector<int> face;
    face.reserve(cyc.size());
    for (auto s : cyc) face.push_back(signed_id(m, decode(m, static_cast<int>(s))));
    out.push_back(std::move(face));
  }
  return out;
}

std::optional<FillingPermutation> filling_of(const CrossingDiagram& d) {
  const int m = d.points();
  if (m % 2 == 0) return std::nullopt;
  const GenusContext ctx = GenusContext::make((m + 1) / 2);
  Permutation sigma = face_permutation(d);
  if (!is_filling(ctx, sigma)) return std::nullopt;
  return FillingPermutation(ctx, std::move(sigma));
}

}  // namespace fillperm
