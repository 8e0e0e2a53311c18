#include "fillperm/zpiece.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fillperm/enumeration.hpp"

namespace fillperm {

std::array<ZTemplate::Incidence, 5> ZTemplate::incidence() const {
  std::array<Incidence, 5> out{};
  for (int j = 0; j < 5; ++j) {
    const int p = b_order[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(p - 1)] = {p, j + 1, relative_sign[static_cast<std::size_t>(p - 1)]};
  }
  return out;
}

ZTemplate ZTemplate::swapped() const {
  ZTemplate s;
  for (int j = 0; j < 5; ++j) {
    const int p = b_order[static_cast<std::size_t>(j)];
    s.b_order[static_cast<std::size_t>(p - 1)] = j + 1;
    s.relative_sign[static_cast<std::size_t>(j)] = relative_sign[static_cast<std::size_t>(p - 1)];
  }
  return s;
}

bool operator<(const ZTemplate& x, const ZTemplate& y) {
  if (x.b_order != y.b_order) return x.b_order < y.b_order;
  // +1 sorts before -1
  return std::lexicographical_compare(x.relative_sign.begin(), x.relative_sign.end(), y.relative_sign.begin(),
                                      y.relative_sign.end(), [](int a, int b) { return a > b; });
}

namespace {

void check_template(const ZTemplate& t) {
  std::array<int, 5> sorted = t.b_order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 5>{1, 2, 3, 4, 5}) throw std::invalid_argument("template b_order is not a permutation of 1..5");
  for (int s : t.relative_sign)
    if (s != 1 && s != -1) throw std::invalid_argument("template signs must be +1 or -1");
}

}  // namespace

CrossingDiagram splice_diagram(const CrossingDiagram& d, int k, const ZTemplate& t) {
  const int m = d.points();
  if (k < 1 || k > m) throw std::out_of_range("vertex out of range");
  check_template(t);
  std::vector<int> bseq;
  for (int v : d.beta_sequence()) {
    if (v == k) {
      for (int p : t.b_order) bseq.push_back(k + p - 1);
    } else {
      bseq.push_back(v < k ? v : v + 4);
    }
  }
  std::vector<int> signs;
  for (int v = 1; v <= m; ++v) {
    const int s = d.sign(v);
    if (v == k) {
      for (int r : t.relative_sign) signs.push_back(r * s);
    } else {
      signs.push_back(s);
    }
  }
  return CrossingDiagram(std::move(bseq), std::move(signs));
}

FillingPermutation splice(const FillingPermutation& fp, int k, const ZTemplate& t) {
  if (k < 1 || k > fp.context().i_min) throw std::out_of_range("vertex out of range");
  auto out = filling_of(splice_diagram(diagram_of(fp), k, t));
  if (!out) throw std::logic_error("splice did not produce a filling permutation");
  return *out;
}

FillingPermutation torus_solution() { return FillingPermutation(GenusContext::make(1), Permutation::from_images({2, 3, 4, 1})); }

namespace {

std::vector<ZTemplate> all_candidates() {
  std::vector<ZTemplate> out;
  std::array<int, 5> pi{1, 2, 3, 4, 5};
  do {
    for (unsigned bits = 0; bits < 32; ++bits) {
      ZTemplate t{pi, {}};
      for (int i = 0; i < 5; ++i) t.relative_sign[static_cast<std::size_t>(i)] = (bits >> (4 - i)) & 1U ? -1 : 1;
      out.push_back(t);
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

bool passes(const ZTemplate& t, const CrossingDiagram& torus, const std::set<Permutation>& genus3,
            const std::vector<CrossingDiagram>& sources) {
  const auto first = filling_of(splice_diagram(torus, 1, t));
  if (!first || !genus3.count(first->perm())) return false;
  for (const auto& d : sources)
    for (int k = 1; k <= d.points(); ++k)
      if (!filling_of(splice_diagram(d, k, t))) return false;
  return true;
}

struct DerivationInputs {
  CrossingDiagram torus;
  std::set<Permutation> genus3;
  std::vector<CrossingDiagram> sources;
};

DerivationInputs derivation_inputs() {
  const auto fillings = enumerate_filling(GenusContext::make(3));
  DerivationInputs in{diagram_of(torus_solution()), {}, {}};
  for (const auto& f : fillings) {
    in.genus3.insert(f.perm());
    in.sources.push_back(diagram_of(f));
  }
  return in;
}

}  // namespace

std::vector<ZTemplate> derive_all_templates() {
  const DerivationInputs in = derivation_inputs();
  std::vector<ZTemplate> out;
  for (const auto& t : all_candidates())
    if (passes(t, in.torus, in.genus3, in.sources)) out.push_back(t);
  return out;
}

const ZTemplate& derive_template() {
  static const ZTemplate derived = [] {
    const DerivationInputs in = derivation_inputs();
    for (const auto& t : all_candidates())
      if (passes(t, in.torus, in.genus3, in.sources)) return t;
    throw std::runtime_error("template derivation failed");
  }();
  return derived;
}

std::string template_to_json(const ZTemplate& t) {
  nlohmann::json j;
  j["b_order"] = t.b_order;
  j["relative_sign"] = t.relative_sign;
  return j.dump();
}

ZTemplate template_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ZTemplate t{j.at("b_order").get<std::array<int, 5>>(), j.at("relative_sign").get<std::array<int, 5>>()};
    check_template(t);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("template JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("template JSON: ") + e.what());
  }
}

std::string derivation_key() {
  static const std::string key = [] {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ULL;
    };
    for (char c : std::string("ztemplate-v1")) mix(static_cast<unsigned char>(c));
    for (const auto& p : derivation_inputs().genus3)
      for (auto s : p.images()) mix(s);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
  }();
  return key;
}

ZTemplate load_or_derive_template(const std::filesystem::path& dir) {
  const auto file = dir / ("ztemplate-" + derivation_key() + ".json");
  if (std::ifstream in{file}) {
    std::stringstream ss;
    ss << in.rdbuf();
    return template_from_json(ss.str());
  }
  const ZTemplate t = derive_template();
  std::filesystem::create_directories(dir);
  std::ofstream out{file};
  if (!out) throw std::runtime_error("cannot write template cache " + file.string());
  out << template_to_json(t) << '\n';
  return t;
}

std::vector<int> ZMatch::alpha_arcs(int points) const {
  std::vector<int> out;
  for (int i = 0; i < 4; ++i) out.push_back((alpha_start - 1 + i) % points + 1);
  return out;
}

std::vector<int> ZMatch::beta_arcs(int points) const {
  std::vector<int> out;
  for (int i = 0; i < 4; ++i) out.push_back((beta_start - 1 + i) % points + 1);
  return out;
}

std::vector<ZMatch> detect_zpieces(const CrossingDiagram& d, const ZTemplate& t) {
  const int m = d.points();
  std::vector<ZMatch> out;
  if (m < 5) return out;
  const ZTemplate ts = t.swapped();
  const auto& bseq = d.beta_sequence();
  auto wrap = [m](int x) { return ((x - 1) % m + m) % m + 1; };
  for (int k = 1; k <= m; ++k) {
    std::array<int, 5> A{};
    for (int i = 0; i < 5; ++i) A[static_cast<std::size_t>(i)] = wrap(k + i);
    std::optional<ZMatch> direct, swapped;
    for (int orient = 0; orient < 2; ++orient) {
      // direct: B[i] = A[π(i)-1] with sign(A[i]) = c·s_i
      // swapped: B[i] = A[π⁻¹(i)-1] with sign(B[i]) = c·s_i
      const std::array<int, 5>& P = orient == 0 ? t.b_order : ts.b_order;
      std::array<int, 5> B{};
      for (int i = 0; i < 5; ++i) B[static_cast<std::size_t>(i)] = A[static_cast<std::size_t>(P[static_cast<std::size_t>(i)] - 1)];
      const int l = d.beta_position(B[0]);
      bool ok = true;
      for (int i = 1; i < 5 && ok; ++i) ok = bseq[static_cast<std::size_t>(wrap(l + i) - 1)] == B[static_cast<std::size_t>(i)];
      if (!ok) continue;
      const std::array<int, 5>& W = orient == 0 ? A : B;
      const int c = d.sign(W[0]) * t.relative_sign[0];
      for (int i = 0; i < 5 && ok; ++i) ok = d.sign(W[static_cast<std::size_t>(i)]) == c * t.relative_sign[static_cast<std::size_t>(i)];
      if (!ok) continue;
      (orient == 0 ? direct : swapped) = ZMatch{k, l, orient == 1};
    }
    if (direct) out.push_back(*direct);
    else if (swapped) out.push_back(*swapped);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ZMatch> detect_zpieces(const FillingPermutation& fp, const ZTemplate& t) {
  return detect_zpieces(diagram_of(fp), t);
}

bool pairwise_arc_disjoint(const std::vector<ZMatch>& matches, int points) {
  std::set<int> alpha, beta;
  for (const auto& z : matches) {
    for (int a : z.alpha_arcs(points))
      if (!alpha.insert(a).second) return false;
    for (int b : z.beta_arcs(points))
      if (!beta.insert(b).second) return false;
  }
  return true;
}

bool ZEndpoints::half_edges_distinct() const {
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t j = i + 1; j < ends.size(); ++j)
      if (ends[i] == ends[j]) return false;
  return true;
}

bool ZEndpoints::points_distinct() const {
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t j = i + 1; j < ends.size(); ++j)
      if (ends[i].point == ends[j].point) return false;
  return true;
}

ZEndpoints zpiece_endpoints(const CrossingDiagram& d, const ZMatch& z) {
  const int m = d.points();
  auto wrap = [m](int x) { return ((x - 1) % m + m) % m + 1; };
  const auto& bseq = d.beta_sequence();
  auto beta_point = [&](int j) { return bseq[static_cast<std::size_t>(wrap(j) - 1)]; };
  // x1 starts one point before the window and x6 ends one point after it
  return ZEndpoints{{{{wrap(z.alpha_start - 1), Curve::alpha, true},
                      {beta_point(z.beta_start - 1), Curve::beta, true},
                      {wrap(z.alpha_start + 5), Curve::alpha, false},
                      {beta_point(z.beta_start + 5), Curve::beta, false}}}};
}

void LSequence::validate() const {
  if (g < 3 || g % 2 == 0) throw std::invalid_argument("L-sequence genus must be odd and at least 3");
  if (static_cast<int>(entries.size()) != (g - 1) / 2) throw std::invalid_argument("L-sequence has the wrong length");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int cap = 4 * static_cast<int>(i + 1) - 3;
    if (entries[i] < 1 || entries[i] > cap) throw std::invalid_argument("L-sequence entry exceeds 4i-3");
    if (i > 0 && entries[i] <= entries[i - 1]) throw std::invalid_argument("L-sequence is not strictly increasing");
  }
}

std::vector<LSequence> list_Lg(int g) {
  if (g < 3 || g % 2 == 0) throw std::invalid_argument("L_g is defined for odd g >= 3");
  const int r = (g - 1) / 2;
  std::vector<LSequence> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int i, int low) -> void {
    if (i > r) {
      out.push_back({g, cur});
      return;
    }
    for (int v = low; v <= 4 * i - 3; ++v) {
      cur.push_back(v);
      self(self, i + 1, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1, 1);
  return out;
}

FillingPermutation build_from_sequence(const LSequence& seq, const ZTemplate& t) {
  seq.validate();
  CrossingDiagram d = diagram_of(torus_solution());
  for (int a : seq.entries) d = splice_diagram(d, a, t);
  auto out = filling_of(d);
  if (!out) throw std::logic_error("iterated splice did not produce a filling permutation");
  return *out;
}

FillingPermutation genus4_seed() {
  const GenusContext ctx = GenusContext::make(4);
  static const Permutation seed = [&] {
    return class_representatives(ctx, enumerate_filling(ctx)).front();
  }();
  return FillingPermutation(ctx, seed);
}

}  // namespace fillperm
