#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "psiaut/error.hpp"

namespace psiaut {

using Complex = std::complex<double>;

// Ingestion tolerance for points that must sit on the unit circle and for
// multipliers that must be unimodular; inputs further out are rejected,
// inputs within are projected/renormalized exactly.
inline constexpr double kUnitTol = 1e-9;
// Denominator guard when evaluating near the pole 1/conj(a).
inline constexpr double kPoleTol = 1e-14;
// Probe tolerance for the identity predicate.
inline constexpr double kIdentityTol = 1e-12;

// Automorphism of the open unit disc in the canonical form
//
//     phi(z) = eta * (a - z) / (1 - conj(a) z),   |eta| = 1,  |a| < 1.
//
// Every disc automorphism has exactly one such representation.  The identity
// is (eta, a) = (-1, 0); the involution exchanging 0 and a is (1, a); the
// rotation z -> m z (|m| = 1) is (-m, 0).  eta is renormalized to exact unit
// modulus by every constructor and by compose/inverse, so downstream code may
// rely on |eta| == 1 to machine precision and |a| < 1 strictly.
class DiscAutomorphism {
public:
    // Identity map.
    DiscAutomorphism() : eta_(-1.0, 0.0), a_(0.0, 0.0) {}

    DiscAutomorphism(Complex eta, Complex a);

    // z -> e^{i theta} z.
    static DiscAutomorphism rotation(double theta);
    // z -> m z for unimodular m (m is normalized; rejected if |m| is far from 1).
    static DiscAutomorphism rotation_by(Complex multiplier);
    // tau_a: the self-inverse map exchanging 0 and a.
    static DiscAutomorphism tau(Complex a);

    Complex eta() const noexcept { return eta_; }
    Complex a() const noexcept { return a_; }

private:
    Complex eta_;
    Complex a_;
};

// Conformal classification by fixed-point configuration.
struct MoebiusClass {
    enum class Kind { identity, elliptic, parabolic, hyperbolic };

    Kind kind;
    // elliptic: the interior fixed point; parabolic: the unique boundary fixed
    // point; hyperbolic: attracting then repelling boundary fixed point;
    // identity: empty.
    std::vector<Complex> fixed_points;
    // elliptic: rotation angle of the multiplier at the interior fixed point;
    // hyperbolic: boundary derivative at the attracting fixed point (< 1);
    // parabolic and identity: 1.
    double multiplier;
};

const char* to_string(MoebiusClass::Kind kind);

// phi(z).  Defined past the closed disc as well; only evaluation near the
// pole 1/conj(a) is rejected ("pole-proximity").
Complex eval(const DiscAutomorphism& phi, Complex z);

// f after g: z -> f(g(z)), in canonical form.
DiscAutomorphism compose(const DiscAutomorphism& f, const DiscAutomorphism& g);

DiscAutomorphism inverse(const DiscAutomorphism& phi);

// phi'(z) = eta (|a|^2 - 1) / (1 - conj(a) z)^2.
Complex derivative(const DiscAutomorphism& phi, Complex z);

// |phi'(w)| for w on the unit circle: (1 - |a|^2) / |1 - conj(a) w|^2.
// This is the angular-derivative modulus entering the atom weight rule.
double boundary_derivative_modulus(const DiscAutomorphism& phi, Complex w);

// True iff phi moves none of three interior probe points by more than
// kIdentityTol.
bool is_identity(const DiscAutomorphism& phi);

MoebiusClass classify(const DiscAutomorphism& phi);

// rho(z, w) = |z - w| / |1 - conj(w) z|, the automorphism-invariant distance
// on the open disc.
double pseudo_hyperbolic(Complex z, Complex w);

// w normalized to exact unit modulus; rejects |w| further than kUnitTol
// from 1 ("modulus-out-of-range").
Complex project_to_circle(Complex w);

// The unique automorphism with phi(a1) = b1 and phi(a2) = b2, constructed as
// tau_{b1} o rotation o tau_{a1}.  Empty when the invariant distances
// rho(a1,a2) and rho(b1,b2) disagree beyond 1e-9.  Coinciding sources are a
// "degenerate-input" error.
std::optional<DiscAutomorphism> solve_interior_pair(Complex a1, Complex b1,
                                                    Complex a2, Complex b2);

// The unique automorphism with phi(a) = b (interior) and phi(w) = w_image
// (boundary).  Empty if the constructed map misses a constraint by more
// than 1e-9.
std::optional<DiscAutomorphism> solve_interior_boundary(Complex a, Complex b,
                                                        Complex w,
                                                        Complex w_image);

// The Moebius transformation through three boundary pairs, returned iff it is
// a disc automorphism (|a| < 1 and unimodular eta after canonicalization) and
// reproduces each image within 1e-9.  Repeated sources or targets are a
// "degenerate-input" error.
std::optional<DiscAutomorphism> solve_boundary_triple(Complex w1, Complex w1_image,
                                                      Complex w2, Complex w2_image,
                                                      Complex w3, Complex w3_image);

}  // namespace psiaut
