#include "fillperm/hyperbolic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fillperm {

namespace {

void require_hyperbolic(int g) {
  if (g < 2) throw std::domain_error("genus must be at least 2 for a right-angled hyperbolic polygon");
}

}  // namespace

double m_g(int g) {
  require_hyperbolic(g);
  const double n = 8.0 * g - 4.0;
  return n * std::acosh(2.0 * (std::cos(2.0 * std::numbers::pi / n) + 0.5));
}

double edge_length(int g) { return m_g(g) / (8.0 * g - 4.0); }

double edge_length_half_angle(int g) {
  require_hyperbolic(g);
  const double n = 8.0 * g - 4.0;
  return 2.0 * std::acosh(std::numbers::sqrt2 * std::cos(std::numbers::pi / n));
}

double min_pair_length(int g) { return m_g(g) / 2.0; }

double lambda_g(double g) {
  if (g < 3) throw std::domain_error("lambda is defined for genus at least 3");
  // cos is even, so cos(π/(2-4g)) = cos(π/(4g-2))
  const double c = std::cos(std::numbers::pi / (4.0 * g - 2.0));
  const double num = 1.0 + 2.0 * c;
  const double den = std::sqrt(4.0 * c * (1.0 + c) + 1.0 / (num * num));
  return std::acosh(num / den);
}

double lambda_limit() { return std::acosh(9.0 / std::sqrt(73.0)); }

double inj_radius_lower() { return 0.5 * lambda_limit(); }

std::int64_t max_coincident(int g) {
  if (g < 2) throw std::domain_error("genus must be at least 2");
  return 42 * (2 * static_cast<std::int64_t>(g) - 2);
}

double polygon_area(int g) {
  require_hyperbolic(g);
  const double n = 8.0 * g - 4.0;
  return (n - 2.0) * std::numbers::pi - n * std::numbers::pi / 2.0;
}

double surface_area(int g) { return 2.0 * std::numbers::pi * (2.0 * g - 2.0); }

HyperbolicReport hyperbolic_report(int g) {
  HyperbolicReport r;
  r.genus = g;
  r.m_g = m_g(g);
  r.edge_length = edge_length(g);
  r.min_pair_length = min_pair_length(g);
  r.lambda_g = g >= 3 ? lambda_g(g) : std::numeric_limits<double>::quiet_NaN();
  r.inj_radius_lower = inj_radius_lower();
  r.max_coincident = max_coincident(g);
  return r;
}

}  // namespace fillperm
