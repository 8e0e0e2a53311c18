#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "fillperm/cli.hpp"
#include "fillperm/genus.hpp"

namespace fillperm::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Point {
  double x, y;
};

}  // namespace

std::string render_svg(const FillingPermutation& fp) {
  const GenusContext& ctx = fp.context();
  const auto word = boundary_word(fp);
  const int n = ctx.n;
  const double size = 480.0 + 20.0 * n;
  const double c = size / 2.0;
  const double r = size / 2.0 - 60.0;

  // corner t sits at angle measured clockwise from the top
  auto corner = [&](int t) {
    const double a = 2.0 * std::numbers::pi * t / n - std::numbers::pi / 2.0;
    return Point{c + r * std::cos(a), c + r * std::sin(a)};
  };
  std::vector<Point> mid(static_cast<std::size_t>(n));
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(size) << "\" height=\""
    << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << ' ' << fmt(size) << "\">\n"
    << "  <defs>\n"
    << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"8\" markerHeight=\"8\" "
       "orient=\"auto\">\n"
    << "      <path d=\"M0,0 L10,5 L0,10 z\" fill=\"black\"/>\n"
    << "    </marker>\n"
    << "  </defs>\n"
    << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  s << "  <g id=\"edges\">\n";
  for (int t = 0; t < n; ++t) {
    const int sym = word[static_cast<std::size_t>(t)];
    pos[static_cast<std::size_t>(sym)] = t;
    const SymbolInfo info = symbol_info(ctx, sym);
    const Point p = corner(t), q = corner(t + 1);
    mid[static_cast<std::size_t>(t)] = {(p.x + q.x) / 2.0, (p.y + q.y) / 2.0};
    const char* colour = info.curve == Curve::alpha ? "#c0392b" : "#2c3e87";
    // the arrow points along the arc's own direction
    const bool fwd = info.direction == Direction::forward;
    const Point from = fwd ? p : q, to = fwd ? q : p;
    const Point m = mid[static_cast<std::size_t>(t)];
    s << "    <line class=\"edge\" x1=\"" << fmt(from.x) << "\" y1=\"" << fmt(from.y) << "\" x2=\"" << fmt(m.x)
      << "\" y2=\"" << fmt(m.y) << "\" stroke=\"" << colour << "\" stroke-width=\"3\" marker-end=\"url(#arrow)\"/>\n";
    s << "    <line x1=\"" << fmt(m.x) << "\" y1=\"" << fmt(m.y) << "\" x2=\"" << fmt(to.x) << "\" y2=\"" << fmt(to.y)
      << "\" stroke=\"" << colour << "\" stroke-width=\"3\"/>\n";
    const double lx = c + (m.x - c) * 1.12, ly = c + (m.y - c) * 1.12;
    const char* letter = info.curve == Curve::alpha ? "&#945;" : "&#946;";
    s << "    <text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly) << "\" font-family=\"serif\" font-size=\"16\" "
      << "text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"" << colour << "\">" << letter
      << "<tspan font-size=\"11\" dy=\"4\">" << info.arc_index << "</tspan></text>\n";
  }
  s << "  </g>\n";

  s << "  <g id=\"chords\" stroke=\"#7f8c8d\" stroke-width=\"1\" stroke-dasharray=\"4,3\" fill=\"none\">\n";
  for (int t = 0; t < n; ++t) {
    const int sym = word[static_cast<std::size_t>(t)];
    const int partner = (sym - 1 + n / 2) % n + 1;
    const int u = pos[static_cast<std::size_t>(partner)];
    if (u < t) continue;
    const Point a = mid[static_cast<std::size_t>(t)], b = mid[static_cast<std::size_t>(u)];
    s << "    <line class=\"chord\" x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
      << "\" y2=\"" << fmt(b.y) << "\"/>\n";
  }
  s << "  </g>\n</svg>\n";
  return s.str();
}

}  // namespace fillperm::cli
