#include "fillperm/gluing_pattern.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include <json.hpp>

namespace fillperm {

namespace {

struct Slots {
  std::vector<int> label;        // signed arc id per slot
  std::vector<std::size_t> poly; // polygon of each slot
  std::vector<std::size_t> succ; // clockwise successor slot
};

Slots flatten(const GluingPattern& pat) {
  Slots s;
  for (std::size_t p = 0; p < pat.polygons.size(); ++p) {
    const auto& poly = pat.polygons[p];
    const std::size_t base = s.label.size();
    for (std::size_t t = 0; t < poly.size(); ++t) {
      s.label.push_back(poly[t]);
      s.poly.push_back(p);
      s.succ.push_back(base + (t + 1) % poly.size());
    }
  }
  return s;
}

bool is_alpha(int label, int i) { return std::abs(label) <= i; }

}  // namespace

ValidationReport validate(const GluingPattern& pat) {
  ValidationReport rep;
  const int i = pat.i;
  if (i < 1) {
    rep.failures.push_back("intersection count must be positive");
    return rep;
  }
  for (std::size_t p = 0; p < pat.polygons.size(); ++p) {
    const std::size_t len = pat.polygons[p].size();
    if (len < 2 || len % 2 != 0)
      rep.failures.push_back("polygon " + std::to_string(p + 1) + " has " + std::to_string(len) + " sides");
    if (len == 2) rep.has_bigon = true;
  }
  const Slots s = flatten(pat);
  const std::size_t total = s.label.size();
  if (total != static_cast<std::size_t>(4 * i))
    rep.failures.push_back("expected " + std::to_string(4 * i) + " edge slots, found " + std::to_string(total));

  // slot of each signed label
  std::vector<long> where(static_cast<std::size_t>(4 * i + 1), -1);
  auto key = [i](int label) { return static_cast<std::size_t>(label > 0 ? label : 2 * i - label); };
  for (std::size_t t = 0; t < total; ++t) {
    const int x = s.label[t];
    if (x == 0 || std::abs(x) > 2 * i) {
      rep.failures.push_back("arc id " + std::to_string(x) + " out of range");
      continue;
    }
    if (where[key(x)] != -1) rep.failures.push_back("edge " + std::to_string(x) + " appears twice");
    where[key(x)] = static_cast<long>(t);
  }
  for (int x = 1; x <= 2 * i; ++x)
    if (where[key(x)] == -1 || where[key(-x)] == -1)
      rep.failures.push_back("arc " + std::to_string(x) + " is not paired with its inverse");
  if (!rep.failures.empty()) return rep;

  auto partner = [&](std::size_t t) { return static_cast<std::size_t>(where[key(-s.label[t])]); };

  // corner map and its orbits
  std::vector<std::size_t> M(total);
  for (std::size_t t = 0; t < total; ++t) M[t] = partner(s.succ[t]);
  std::vector<bool> seen(total, false);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t t = 0; t < total; ++t) {
    if (seen[t]) continue;
    std::vector<std::size_t> orb;
    for (std::size_t x = t; !seen[x]; x = M[x]) {
      seen[x] = true;
      orb.push_back(x);
    }
    orbits.push_back(std::move(orb));
  }
  rep.corner_orbits = orbits.size();

  // next arc along each curve, keyed by unsigned arc id
  std::vector<int> next_arc(static_cast<std::size_t>(2 * i + 1), 0);
  bool crossings_ok = true;
  for (const auto& orb : orbits) {
    if (orb.size() != 4) {
      rep.failures.push_back("corner map orbit of size " + std::to_string(orb.size()));
      crossings_ok = false;
      continue;
    }
    // half-edge t is the end of slot orb[t] reached while reading clockwise:
    // positive label -> terminal end of the arc, negative -> initial end
    const int a0 = s.label[orb[0]], a1 = s.label[orb[1]], a2 = s.label[orb[2]], a3 = s.label[orb[3]];
    const bool curves_ok = is_alpha(a0, i) == is_alpha(a2, i) && is_alpha(a1, i) == is_alpha(a3, i) &&
                           is_alpha(a0, i) != is_alpha(a1, i);
    const bool ends_ok = (a0 > 0) != (a2 > 0) && (a1 > 0) != (a3 > 0);
    if (!curves_ok || !ends_ok) {
      rep.failures.push_back("corner orbit is not a transverse crossing");
      crossings_ok = false;
      continue;
    }
    for (auto [in, out] : {std::pair{a0, a2}, std::pair{a1, a3}}) {
      if (in < 0) std::swap(in, out);
      next_arc[static_cast<std::size_t>(in)] = -out;
    }
  }

  // connectivity through the edge pairing
  const std::size_t F = pat.polygons.size();
  std::vector<std::size_t> comp(F);
  std::iota(comp.begin(), comp.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (std::size_t t = 0; t < total; ++t) comp[find(s.poly[t])] = find(s.poly[partner(t)]);
  std::set<std::size_t> roots;
  for (std::size_t p = 0; p < F; ++p) roots.insert(find(p));
  rep.connected = roots.size() == 1;
  if (!rep.connected) rep.failures.push_back("glued complex is disconnected");

  if (crossings_ok) {
    auto single = [&](int first, int count) {
      int x = first, steps = 0;
      do {
        x = next_arc[static_cast<std::size_t>(x)];
        ++steps;
      } while (x != first && x > 0 && steps <= count);
      return x == first && steps == count;
    };
    rep.alpha_is_single_curve = single(1, i);
    rep.beta_is_single_curve = single(i + 1, i);
    if (!rep.alpha_is_single_curve) rep.failures.push_back("alpha arcs do not close up into one curve");
    if (!rep.beta_is_single_curve) rep.failures.push_back("beta arcs do not close up into one curve");
  }
  rep.valid = rep.failures.empty();
  return rep;
}

int euler_genus(const GluingPattern& pat) {
  const ValidationReport rep = validate(pat);
  if (!rep.valid) throw InvalidPattern("invalid pattern: " + rep.failures.front());
  const long chi = static_cast<long>(rep.corner_orbits) - 2L * pat.i + static_cast<long>(pat.polygons.size());
  if ((2 - chi) % 2 != 0) throw InvalidPattern("non-orientable or malformed");
  return static_cast<int>((2 - chi) / 2);
}

int t1(const GluingPattern& pat) {
  const ValidationReport rep = validate(pat);
  if (!rep.valid) throw InvalidPattern("invalid pattern: " + rep.failures.front());
  int count = 0;
  for (const auto& poly : pat.polygons)
    for (int x : poly)
      if (x > 0 && std::find(poly.begin(), poly.end(), -x) != poly.end()) ++count;
  return count;
}

GluingPattern from_filling(const FillingPermutation& fp) {
  const GenusContext& ctx = fp.context();
  GluingPattern pat;
  pat.i = ctx.i_min;
  std::vector<int> poly;
  for (int s : boundary_word(fp)) {
    const SymbolInfo info = symbol_info(ctx, s);
    const int id = info.curve == Curve::alpha ? info.arc_index : ctx.i_min + info.arc_index;
    poly.push_back(info.direction == Direction::forward ? id : -id);
  }
  pat.polygons.push_back(std::move(poly));
  return pat;
}

GluingPattern pattern_from_diagram(const CrossingDiagram& d) { return GluingPattern{d.points(), faces(d)}; }

namespace {

std::vector<int> least_rotation(const std::vector<int>& poly) {
  std::vector<int> best = poly;
  std::vector<int> cand(poly.size());
  for (std::size_t r = 1; r < poly.size(); ++r) {
    std::rotate_copy(poly.begin(), poly.begin() + static_cast<long>(r), poly.end(), cand.begin());
    if (cand < best) best = cand;
  }
  return best;
}

GluingPattern normalized(GluingPattern pat) {
  for (auto& poly : pat.polygons) poly = least_rotation(poly);
  std::sort(pat.polygons.begin(), pat.polygons.end());
  return pat;
}

}  // namespace

GluingPattern canonical_form(const GluingPattern& pat) {
  const int i = pat.i;
  GluingPattern best = normalized(pat);
  // arc k of one curve: optionally reversed (k -> 2-k, sign flip), then shifted
  auto relabel_arc = [i](int k, bool reverse, int shift, bool& flip) {
    if (reverse) {
      k = 2 - k;
      flip = !flip;
    }
    return ((k - 1 + shift) % i + i) % i + 1;
  };
  for (int swap = 0; swap < 2; ++swap)
    for (int ra = 0; ra < 2; ++ra)
      for (int rb = 0; rb < 2; ++rb)
        for (int sa = 0; sa < i; ++sa)
          for (int sb = 0; sb < i; ++sb) {
            GluingPattern cand = pat;
            for (auto& poly : cand.polygons)
              for (int& x : poly) {
                const bool alpha = std::abs(x) <= i;
                bool flip = x < 0;
                const int k = alpha ? std::abs(x) : std::abs(x) - i;
                const int k2 = alpha ? relabel_arc(k, ra, sa, flip) : relabel_arc(k, rb, sb, flip);
                const bool to_alpha = alpha != (swap == 1);
                const int id = to_alpha ? k2 : i + k2;
                x = flip ? -id : id;
              }
            cand = normalized(std::move(cand));
            if (cand < best) best = std::move(cand);
          }
  return best;
}

std::vector<GluingPattern> search_patterns(int genus, int intersections, std::size_t limit) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1");
  if (intersections < 2 * genus - 1) throw std::invalid_argument("intersections below 2g-1");
  if (4 * intersections > 24) throw std::length_error("search space too large");
  const int i = intersections;
  const std::size_t want_faces = static_cast<std::size_t>(i - 2 * genus + 2);

  std::set<GluingPattern> found;
  // β may start at point 1 without loss: other starts are β relabelings
  std::vector<int> rest(static_cast<std::size_t>(i - 1));
  std::iota(rest.begin(), rest.end(), 2);
  do {
    std::vector<int> bseq{1};
    bseq.insert(bseq.end(), rest.begin(), rest.end());
    for (unsigned mask = 0; mask < (1U << i); ++mask) {
      std::vector<int> signs(static_cast<std::size_t>(i));
      for (int v = 0; v < i; ++v) signs[static_cast<std::size_t>(v)] = (mask >> v) & 1U ? -1 : 1;
      const CrossingDiagram d(bseq, signs);
      auto polys = faces(d);
      if (polys.size() != want_faces) continue;
      if (std::any_of(polys.begin(), polys.end(), [](const auto& p) { return p.size() == 2; })) continue;
      found.insert(canonical_form(GluingPattern{i, std::move(polys)}));
    }
  } while (std::next_permutation(rest.begin(), rest.end()));

  std::vector<GluingPattern> out;
  for (const auto& p : found) {
    if (out.size() >= limit) break;
    out.push_back(p);
  }
  return out;
}

GluingPattern pattern_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PatternFormatError(std::string("pattern JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("i") || !j.contains("polygons") || !j["i"].is_number_integer() ||
      !j["polygons"].is_array())
    throw PatternFormatError("pattern JSON must be {\"i\": int, \"polygons\": [[int, ...], ...]}");
  GluingPattern pat;
  pat.i = j["i"].get<int>();
  for (const auto& poly : j["polygons"]) {
    if (!poly.is_array()) throw PatternFormatError("each polygon must be an array of integers");
    std::vector<int> p;
    for (const auto& x : poly) {
      if (!x.is_number_integer()) throw PatternFormatError("arc ids must be integers");
      p.push_back(x.get<int>());
    }
    pat.polygons.push_back(std::move(p));
  }
  return pat;
}

std::string pattern_to_json(const GluingPattern& pat) {
  nlohmann::json j;
  j["i"] = pat.i;
  j["polygons"] = pat.polygons;
  return j.dump();
}

}  // namespace fillperm
