#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace gamma {

// Triangle rule in barycentric coordinates with weights summing to 1
// (multiply by the triangle area).
struct TriQuadPoint {
  double l0, l1, l2;
  double w;
};

// 3-point rule, exact for degree 2 (edge midpoints).
inline const std::array<TriQuadPoint, 3>& tri_rule_3() {
  static const std::array<TriQuadPoint, 3> r = {{
      {0.5, 0.5, 0.0, 1.0 / 3.0},
      {0.0, 0.5, 0.5, 1.0 / 3.0},
      {0.5, 0.0, 0.5, 1.0 / 3.0},
  }};
  return r;
}

// 7-point rule, exact for degree 5.
inline const std::array<TriQuadPoint, 7>& tri_rule_7() {
  static const std::array<TriQuadPoint, 7> r = [] {
    const double a1 = 0.0597158717897698;
    const double b1 = 0.4701420641051151;
    const double a2 = 0.7974269853530873;
    const double b2 = 0.1012865073234563;
    const double w0 = 0.225;
    const double w1 = 0.1323941527885062;
    const double w2 = 0.1259391805448271;
    std::array<TriQuadPoint, 7> q = {{
        {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, w0},
        {a1, b1, b1, w1},
        {b1, a1, b1, w1},
        {b1, b1, a1, w1},
        {a2, b2, b2, w2},
        {b2, a2, b2, w2},
        {b2, b2, a2, w2},
    }};
    return q;
  }();
  return r;
}

// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on
// the Legendre recurrence; deterministic to machine precision.
std::vector<std::pair<double, double>> gauss_legendre(int n);

// Cached 4-point rule mapped to [0,1]: (t_k, w_k), sum w = 1.
inline const std::array<std::pair<double, double>, 4>& edge_rule_4() {
  static const std::array<std::pair<double, double>, 4> r = [] {
    auto gl = gauss_legendre(4);
    std::array<std::pair<double, double>, 4> m{};
    for (int i = 0; i < 4; ++i)
      m[i] = {0.5 * (gl[i].first + 1.0), 0.5 * gl[i].second};
    return m;
  }();
  return r;
}

// Composite Gauss on [a,b] with uniform panels.
double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels = 8, int order = 16);

// Composite Gauss on [a,b] with geometrically shrinking panels toward a,
// for integrands with a mild (integrable, e.g. logarithmic) endpoint
// feature at a.
double integrate_graded(const std::function<double(double)>& f, double a,
                        double b, int levels = 60, int order = 16);

// Integral of f over (a,b), 0 <= a < b, via the substitution r = t^2.
// Turns an r^{-1/2} endpoint factor at 0 into a smooth integrand.
double integrate_sqrt_sub(const std::function<double(double)>& f, double a,
                          double b, int panels = 8, int order = 16);

// Adaptive Simpson to tolerance tol.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-12, int max_depth = 40);

}  // namespace gamma
