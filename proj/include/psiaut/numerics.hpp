#pragma once

#include <functional>
#include <string>
#include <vector>

#include "psiaut/psi_model.hpp"

namespace psiaut {

// Quadrature bound: the rounded winding number must sit within this distance
// of the raw integral or the contour is declared ill-conditioned.
inline constexpr double kWindingResidualTol = 1e-3;
// Invertibility bound for the modulus screen.
inline constexpr double kRatioBound = 1e6;

// A positively oriented circle used for argument-principle counting.  The
// circle must stay inside the open disc and at least 1e-6 away from every
// singularity of the integrand.
struct ContourSpec {
    Complex center;
    double radius = 0.1;
    int samples = 4096;
};

// Number of zeros of psi enclosed by the contour, from the trapezoid
// quadrature of psi'/psi (spectrally accurate for this smooth periodic
// integrand).  Throws "ill-conditioned-contour" when the contour grazes a
// singularity or the integral is further than kWindingResidualTol from an
// integer.
int count_zeros(const PsiSpec& spec, const ContourSpec& contour);

// Same count for psi o phi, using the chain rule
// (psi'/psi)(phi(z)) phi'(z); singularities of the composition are the
// phi-preimages of those of psi.
int count_zeros_composed(const PsiSpec& spec, const DiscAutomorphism& phi,
                         const ContourSpec& contour);

// Modulus screen for g = (psi o phi)/psi.
struct RatioReport {
    double sup_estimate = 1.0;
    double inf_estimate = 1.0;
    std::string grid;  // human-readable description of the evaluated grid
    bool invertible_verdict = false;
};

// Estimates sup and inf of |psi(phi(z))/psi(z)| and decides numerically
// whether g is invertible in H-infinity.  The grid is polar (radii x angular)
// augmented with radial probes toward every boundary root/atom of psi and of
// its pullback, and with rings around every interior zero on either side;
// points within 1e-6 of an interior zero or 1e-4 of an atom (of psi or the
// pullback) are excluded.  The verdict requires, simultaneously:
//   - sup <= kRatioBound and inf >= 1/kRatioBound over the whole grid,
//   - stability from radius 0.9 to 0.999 (no order-of-magnitude growth of
//     sup or collapse of inf between those bands), and
//   - zero winding of g around every interior zero of psi and of psi o phi
//     (argument-principle check; a genuine zero or pole of g inside the disc
//     defeats any finite grid, so it is tested by quadrature instead).
// All three are purely numerical and independent of the symbolic decision.
RatioReport ratio_bounds(const PsiSpec& spec, const DiscAutomorphism& phi,
                         std::vector<double> radii = {}, int angular = 720);

// All simple roots of f on [lo, hi] found by a fixed 1e-3-step sign scan
// followed by bisection to tol (tol >= 1e-12).  Roots closer than 10*tol are
// merged.  Tangential (non-sign-changing) zeros are out of scope.
std::vector<double> find_parameter_roots(const std::function<double(double)>& f,
                                         double lo, double hi, double tol);

}  // namespace psiaut
