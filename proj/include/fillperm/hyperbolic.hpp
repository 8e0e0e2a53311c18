#ifndef FILLPERM_HYPERBOLIC_HPP
#define FILLPERM_HYPERBOLIC_HPP

#include <cstdint>

namespace fillperm {

/// Perimeter of the regular right-angled (8g-4)-gon:
/// (8g-4)·arccosh(2[cos(2π/(8g-4)) + 1/2]). Throws std::domain_error for
/// g < 2.
double m_g(int g);

/// Side of the regular right-angled (8g-4)-gon, m_g / (8g-4).
double edge_length(int g);

/// Independent side length from the half-angle identity
/// cosh(ℓ/2) = √2·cos(π/n).
double edge_length_half_angle(int g);

/// m_g / 2.
double min_pair_length(int g);

/// Separator length; throws std::domain_error for g < 3.
double lambda_g(double g);

/// arccosh(9/√73), the limit of lambda_g.
double lambda_limit();

/// (1/2)·arccosh(9/√73).
double inj_radius_lower();

/// Decimal value printed alongside the injectivity-radius bound in the
/// literature; it equals the full arccosh(9/√73), not half of it.
inline constexpr double kQuotedInjRadius = 0.3253;

/// 42(2g-2).
std::int64_t max_coincident(int g);

/// Area of the polygon from its angles, (n-2)π - n·π/2 with n = 8g-4.
double polygon_area(int g);

/// Area by Gauss–Bonnet for the closed surface, 2π(2g-2).
double surface_area(int g);

struct HyperbolicReport {
  int genus = 0;
  double m_g = 0;
  double edge_length = 0;
  double min_pair_length = 0;
  double lambda_g = 0;  ///< NaN when g < 3
  double inj_radius_lower = 0;
  double inj_radius_quoted = kQuotedInjRadius;
  std::int64_t max_coincident = 0;
};

HyperbolicReport hyperbolic_report(int g);

}  // namespace fillperm

#endif  // FILLPERM_HYPERBOLIC_HPP
