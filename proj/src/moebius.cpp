#include "psiaut/moebius.hpp"

#include <array>
#include <cmath>

namespace psiaut {

namespace {

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// 2x2 complex matrix acting as z -> (a z + b) / (c z + d).
struct Mat2 {
    Complex a, b, c, d;
};

Mat2 mul(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mat2 adjugate(const Mat2& m) { return {m.d, -m.b, -m.c, m.a}; }

// Matrix of phi(z) = eta (a - z)/(1 - conj(a) z).
Mat2 matrix_of(const DiscAutomorphism& phi) {
    return {-phi.eta(), phi.eta() * phi.a(), -std::conj(phi.a()), Complex(1.0, 0.0)};
}

// Recover (eta, a) from a matrix known to represent a disc automorphism up to
// a scalar.  The denominator entry d never vanishes for such maps (the pole
// lies outside the closed disc), so division by d is safe.
DiscAutomorphism canonical_from_matrix(const Mat2& m) {
    Complex a = -std::conj(m.c / m.d);
    Complex eta = -m.a / m.d;
    double r = std::abs(a);
    if (r >= 1.0) {
        // Rounding can push a hair past the circle for compositions that
        // approach the boundary; anything further out is a real error.
        if (r < 1.0 + 1e-9) {
            a *= (1.0 - 1e-13) / r;
        } else {
            throw Error("invalid-datum", "composition left the automorphism family");
        }
    }
    return DiscAutomorphism(eta, a);
}

}  // namespace

DiscAutomorphism::DiscAutomorphism(Complex eta, Complex a) {
    if (!finite(eta) || !finite(a)) {
        throw Error("invalid-datum", "automorphism parameters must be finite");
    }
    double m = std::abs(eta);
    if (std::abs(m - 1.0) > kUnitTol) {
        throw Error("invalid-datum", "multiplier eta must be unimodular");
    }
    if (!(std::abs(a) < 1.0)) {
        throw Error("invalid-datum", "parameter a must lie strictly inside the unit disc");
    }
    eta_ = eta / m;
    a_ = a;
}

DiscAutomorphism DiscAutomorphism::rotation(double theta) {
    if (!std::isfinite(theta)) {
        throw Error("invalid-datum", "rotation angle must be finite");
    }
    return DiscAutomorphism(-std::polar(1.0, theta), Complex(0.0, 0.0));
}

DiscAutomorphism DiscAutomorphism::rotation_by(Complex multiplier) {
    return DiscAutomorphism(-multiplier, Complex(0.0, 0.0));
}

DiscAutomorphism DiscAutomorphism::tau(Complex a) {
    return DiscAutomorphism(Complex(1.0, 0.0), a);
}

const char* to_string(MoebiusClass::Kind kind) {
    switch (kind) {
        case MoebiusClass::Kind::identity: return "identity";
        case MoebiusClass::Kind::elliptic: return "elliptic";
        case MoebiusClass::Kind::parabolic: return "parabolic";
        case MoebiusClass::Kind::hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

Complex eval(const DiscAutomorphism& phi, Complex z) {
    Complex den = 1.0 - std::conj(phi.a()) * z;
    if (std::abs(den) < kPoleTol) {
        throw Error("pole-proximity", "evaluation point is too close to the pole of the map");
    }
    return phi.eta() * (phi.a() - z) / den;
}

DiscAutomorphism compose(const DiscAutomorphism& f, const DiscAutomorphism& g) {
    return canonical_from_matrix(mul(matrix_of(f), matrix_of(g)));
}

DiscAutomorphism inverse(const DiscAutomorphism& phi) {
    // From w = eta (a - z)/(1 - conj(a) z):  z = conj(eta) (eta a - w)/(1 - conj(eta a) w),
    // i.e. the inverse has parameters (conj(eta), eta a).
    return DiscAutomorphism(std::conj(phi.eta()), phi.eta() * phi.a());
}

Complex derivative(const DiscAutomorphism& phi, Complex z) {
    Complex den = 1.0 - std::conj(phi.a()) * z;
    if (std::abs(den) < kPoleTol) {
        throw Error("pole-proximity", "derivative requested too close to the pole of the map");
    }
    return phi.eta() * (std::norm(phi.a()) - 1.0) / (den * den);
}

double boundary_derivative_modulus(const DiscAutomorphism& phi, Complex w) {
    Complex den = 1.0 - std::conj(phi.a()) * w;
    return (1.0 - std::norm(phi.a())) / std::norm(den);
}

bool is_identity(const DiscAutomorphism& phi) {
    static const std::array<Complex, 3> probes = {
        Complex(0.3, 0.0), Complex(-0.2, 0.4), Complex(0.0, 0.5)};
    for (Complex z : probes) {
        if (std::abs(eval(phi, z) - z) > kIdentityTol) return false;
    }
    return true;
}

double pseudo_hyperbolic(Complex z, Complex w) {
    return std::abs((z - w) / (1.0 - std::conj(w) * z));
}

Complex project_to_circle(Complex w) {
    double m = std::abs(w);
    if (!std::isfinite(m) || std::abs(m - 1.0) > kUnitTol) {
        throw Error("modulus-out-of-range", "point must lie on the unit circle");
    }
    return w / m;
}

MoebiusClass classify(const DiscAutomorphism& phi) {
    if (is_identity(phi)) {
        return {MoebiusClass::Kind::identity, {}, 1.0};
    }
    const Complex eta = phi.eta();
    const Complex a = phi.a();
    if (std::abs(a) < 1e-15) {
        // Pure rotation z -> -eta z about the origin.
        return {MoebiusClass::Kind::elliptic, {Complex(0.0, 0.0)}, std::arg(-eta)};
    }

    // Fixed points solve  conj(a) z^2 - (1 + eta) z + eta a = 0,
    // obtained from eta (a - z) = z (1 - conj(a) z).
    const Complex abar = std::conj(a);
    const Complex q = 1.0 + eta;
    const Complex disc = q * q - 4.0 * eta * std::norm(a);

    // The discriminant is a difference of two like-sized terms; judge
    // "vanishing" relative to their size so rounding residue from an exactly
    // parabolic map is not mistaken for a genuine root separation.
    const double disc_scale = std::norm(q) + 4.0 * std::norm(a);
    if (std::abs(disc) <= 1e-12 * disc_scale) {
        Complex p = q / (2.0 * abar);
        return {MoebiusClass::Kind::parabolic, {p / std::abs(p)}, 1.0};
    }

    Complex s = std::sqrt(disc);
    if (std::real(std::conj(q) * s) < 0.0) s = -s;  // avoid cancellation in q + s
    Complex r1 = (q + s) / (2.0 * abar);
    Complex r2 = (eta * a / abar) / r1;  // product of the roots is eta a / conj(a)

    for (Complex root : {r1, r2}) {
        if (std::abs(root) < 1.0 - kUnitTol) {
            return {MoebiusClass::Kind::elliptic, {root}, std::arg(derivative(phi, root))};
        }
    }

    // Two distinct boundary fixed points; the map is hyperbolic.  The
    // derivative at a boundary fixed point is a positive real; the attracting
    // one has derivative below 1 and is listed first.
    r1 /= std::abs(r1);
    r2 /= std::abs(r2);
    double l1 = std::abs(derivative(phi, r1));
    double l2 = std::abs(derivative(phi, r2));
    if (l1 <= l2) {
        return {MoebiusClass::Kind::hyperbolic, {r1, r2}, l1};
    }
    return {MoebiusClass::Kind::hyperbolic, {r2, r1}, l2};
}

std::optional<DiscAutomorphism> solve_interior_pair(Complex a1, Complex b1,
                                                    Complex a2, Complex b2) {
    for (Complex p : {a1, b1, a2, b2}) {
        if (!finite(p) || !(std::abs(p) < 1.0)) {
            throw Error("invalid-datum", "pair constraints must lie inside the unit disc");
        }
    }
    if (std::abs(a1 - a2) < 1e-12 || std::abs(b1 - b2) < 1e-12) {
        throw Error("degenerate-input", "pair constraints must use distinct points");
    }
    if (std::abs(pseudo_hyperbolic(a1, a2) - pseudo_hyperbolic(b1, b2)) > 1e-9) {
        return std::nullopt;
    }

    // tau_{a1} sends a1 to 0 and a2 to u; tau_{b1} sends b1 to 0 and b2 to v.
    // A rotation aligning u with v finishes the construction.
    const DiscAutomorphism ta = DiscAutomorphism::tau(a1);
    const DiscAutomorphism tb = DiscAutomorphism::tau(b1);
    const Complex u = eval(ta, a2);
    const Complex v = eval(tb, b2);
    const Complex m = (v / std::abs(v)) * (std::abs(u) / u);
    DiscAutomorphism phi = compose(tb, compose(DiscAutomorphism::rotation_by(m), ta));

    if (std::abs(eval(phi, a1) - b1) > 1e-9 || std::abs(eval(phi, a2) - b2) > 1e-9) {
        return std::nullopt;
    }
    return phi;
}

std::optional<DiscAutomorphism> solve_interior_boundary(Complex a, Complex b,
                                                        Complex w, Complex w_image) {
    for (Complex p : {a, b}) {
        if (!finite(p) || !(std::abs(p) < 1.0)) {
            throw Error("invalid-datum", "interior constraints must lie inside the unit disc");
        }
    }
    w = project_to_circle(w);
    w_image = project_to_circle(w_image);

    const DiscAutomorphism ta = DiscAutomorphism::tau(a);
    const DiscAutomorphism tb = DiscAutomorphism::tau(b);
    const Complex u = eval(ta, w);        // unimodular
    const Complex v = eval(tb, w_image);  // unimodular
    const Complex m = v / u;
    DiscAutomorphism phi =
        compose(tb, compose(DiscAutomorphism::rotation_by(m / std::abs(m)), ta));

    if (std::abs(eval(phi, a) - b) > 1e-9 || std::abs(eval(phi, w) - w_image) > 1e-9) {
        return std::nullopt;
    }
    return phi;
}

namespace {

// Matrix sending (z1, z2, z3) to (0, 1, infinity).
Mat2 to_zero_one_inf(Complex z1, Complex z2, Complex z3) {
    return {z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
}

}  // namespace

std::optional<DiscAutomorphism> solve_boundary_triple(Complex w1, Complex w1_image,
                                                      Complex w2, Complex w2_image,
                                                      Complex w3, Complex w3_image) {
    const std::array<Complex, 3> src = {w1, w2, w3};
    const std::array<Complex, 3> dst = {w1_image, w2_image, w3_image};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (std::abs(src[i] - src[j]) < 1e-9 || std::abs(dst[i] - dst[j]) < 1e-9) {
                throw Error("degenerate-input", "triple constraints must use distinct points");
            }
        }
    }

    const Mat2 m = mul(adjugate(to_zero_one_inf(w1_image, w2_image, w3_image)),
                       to_zero_one_inf(w1, w2, w3));
    const double scale = std::max(std::max(std::abs(m.a), std::abs(m.b)),
                                  std::max(std::abs(m.c), std::abs(m.d)));
    if (!(scale > 0.0) || !std::isfinite(scale)) return std::nullopt;
    // A vanishing leading entry puts the zero of the map at infinity, a
    // vanishing trailing entry puts its pole at the origin; neither belongs
    // to a disc automorphism.
    if (std::abs(m.a) < 1e-12 * scale || std::abs(m.d) < 1e-12 * scale) {
        return std::nullopt;
    }

    const Complex a_cand = -m.b / m.a;
    if (!(std::abs(a_cand) < 1.0)) return std::nullopt;
    const Complex eta_cand = -m.a / m.d;
    if (std::abs(std::abs(eta_cand) - 1.0) > kUnitTol) return std::nullopt;

    DiscAutomorphism phi(eta_cand / std::abs(eta_cand), a_cand);
    for (int i = 0; i < 3; ++i) {
        if (std::abs(eval(phi, src[i]) - dst[i]) > 1e-9) return std::nullopt;
    }
    return phi;
}

}  // namespace psiaut
