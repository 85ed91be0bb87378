#include "entropic/quadrature.hpp"

#include <array>
#include <cmath>

#include "entropic/errors.hpp"

namespace entropic {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK tables).
// Abscissae are for the positive half of [-1, 1]; even entries are the
// embedded Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double kronrod;
  double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a,
                   double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  double gauss = 0.0;
  double kronrod = 0.0;
  for (std::size_t i = 0; i < kNodes.size(); ++i) {
    const double offset = half * kNodes[i];
    double fsum;
    if (kNodes[i] == 0.0) {
      fsum = f(mid);
    } else {
      fsum = f(mid - offset) + f(mid + offset);
    }
    kronrod += kKronrodWeights[i] * fsum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
  }
  gauss *= half;
  kronrod *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

void refine(const std::function<double(double)>& f, double a, double b,
            double tol, int depth, int max_depth, QuadratureResult& acc) {
  const PanelEstimate est = gk15(f, a, b);
  if (est.error <= tol || !(b - a > 0.0)) {
    acc.value += est.kronrod;
    acc.error_estimate += est.error;
    return;
  }
  if (depth >= max_depth) {
    throw NonconvergedQuadrature(
        "adaptive Gauss-Kronrod did not reach the requested tolerance");
  }
  const double mid = 0.5 * (a + b);
  acc.subdivisions += 1;
  refine(f, a, mid, 0.5 * tol, depth + 1, max_depth, acc);
  refine(f, mid, b, 0.5 * tol, depth + 1, max_depth, acc);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, int max_depth) {
  if (!(a < b)) throw DomainError("integrate requires a < b");
  if (!(abs_tol > 0.0)) throw DomainError("integrate requires abs_tol > 0");
  QuadratureResult acc;
  refine(f, a, b, abs_tol, 0, max_depth, acc);
  return acc;
}

}  // namespace entropic
