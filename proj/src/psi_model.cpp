#include "psiaut/psi_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace psiaut {

namespace {

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool lex_less(Complex p, Complex q) {
    if (p.real() != q.real()) return p.real() < q.real();
    return p.imag() < q.imag();
}

void check_separation(const std::vector<Complex>& pts, const char* what) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (std::abs(pts[i] - pts[j]) <= kMatchTol) {
                throw Error("duplicate-point",
                            std::string(what) + " entries closer than the matching tolerance");
            }
        }
    }
}

}  // namespace

PsiSpec validate(const PsiSpec& raw) {
    PsiSpec out = raw;

    for (InteriorZero& z : out.interior) {
        if (!finite(z.a)) throw Error("invalid-datum", "interior zero location must be finite");
        if (z.mult < 1) throw Error("invalid-datum", "interior zero multiplicity must be >= 1");
        if (!(std::abs(z.a) < 1.0 - 1e-12)) {
            throw Error("modulus-out-of-range",
                        "interior zero must lie strictly inside the unit disc");
        }
    }
    for (BoundaryRoot& r : out.boundary) {
        if (r.mult < 1) throw Error("invalid-datum", "boundary root multiplicity must be >= 1");
        r.w = project_to_circle(r.w);
    }
    for (SingularAtom& s : out.atoms) {
        if (!std::isfinite(s.alpha) || !(s.alpha > 0.0)) {
            throw Error("invalid-datum", "atom weight must be a positive finite real");
        }
        s.w = project_to_circle(s.w);
    }

    std::sort(out.interior.begin(), out.interior.end(),
              [](const InteriorZero& x, const InteriorZero& y) { return lex_less(x.a, y.a); });
    std::sort(out.boundary.begin(), out.boundary.end(),
              [](const BoundaryRoot& x, const BoundaryRoot& y) { return lex_less(x.w, y.w); });
    std::sort(out.atoms.begin(), out.atoms.end(),
              [](const SingularAtom& x, const SingularAtom& y) { return lex_less(x.w, y.w); });

    std::vector<Complex> pts;
    for (const InteriorZero& z : out.interior) pts.push_back(z.a);
    check_separation(pts, "interior zero");
    pts.clear();
    for (const BoundaryRoot& r : out.boundary) pts.push_back(r.w);
    check_separation(pts, "boundary root");
    pts.clear();
    for (const SingularAtom& s : out.atoms) pts.push_back(s.w);
    check_separation(pts, "atom");

    return out;
}

Complex eval_psi(const PsiSpec& spec, Complex z) {
    if (!(std::abs(z) < 1.0)) {
        throw Error("invalid-datum", "evaluation point must lie in the open unit disc");
    }
    for (const SingularAtom& s : spec.atoms) {
        if (std::abs(z - s.w) < 1e-12) {
            throw Error("singularity-proximity", "evaluation point sits on an atom");
        }
    }

    Complex out(1.0, 0.0);
    for (const InteriorZero& zero : spec.interior) {
        Complex factor;
        if (std::abs(zero.a) < 1e-300) {
            factor = z;
        } else {
            factor = (std::abs(zero.a) / zero.a) * (zero.a - z) / (1.0 - std::conj(zero.a) * z);
        }
        for (int k = 0; k < zero.mult; ++k) out *= factor;
    }
    for (const BoundaryRoot& root : spec.boundary) {
        Complex factor = z - root.w;
        for (int k = 0; k < root.mult; ++k) out *= factor;
    }
    for (const SingularAtom& s : spec.atoms) {
        out *= std::exp(s.alpha * (z + s.w) / (z - s.w));
    }
    return out;
}

double log_abs_psi(const PsiSpec& spec, Complex z) {
    double out = 0.0;
    for (const InteriorZero& zero : spec.interior) {
        if (std::abs(zero.a) < 1e-300) {
            out += zero.mult * std::log(std::abs(z));
        } else {
            out += zero.mult * (std::log(std::abs(zero.a - z)) -
                                std::log(std::abs(1.0 - std::conj(zero.a) * z)));
        }
    }
    for (const BoundaryRoot& root : spec.boundary) {
        out += root.mult * std::log(std::abs(z - root.w));
    }
    for (const SingularAtom& s : spec.atoms) {
        // Re((z + w)/(z - w)) = (|z|^2 - 1)/|z - w|^2.
        out += s.alpha * (std::norm(z) - 1.0) / std::norm(z - s.w);
    }
    return out;
}

Complex log_derivative(const PsiSpec& spec, Complex z) {
    for (const InteriorZero& zero : spec.interior) {
        if (std::abs(z - zero.a) < kMatchTol) {
            throw Error("singularity-proximity", "log-derivative requested at an interior zero");
        }
    }
    for (const BoundaryRoot& root : spec.boundary) {
        if (std::abs(z - root.w) < kMatchTol) {
            throw Error("singularity-proximity", "log-derivative requested at a boundary root");
        }
    }
    for (const SingularAtom& s : spec.atoms) {
        if (std::abs(z - s.w) < kMatchTol) {
            throw Error("singularity-proximity", "log-derivative requested at an atom");
        }
    }

    Complex out(0.0, 0.0);
    for (const InteriorZero& zero : spec.interior) {
        // Covers the origin case as well: (0 - 1)/((0 - z) * 1) = 1/z.
        out += double(zero.mult) * (std::norm(zero.a) - 1.0) /
               ((zero.a - z) * (1.0 - std::conj(zero.a) * z));
    }
    for (const BoundaryRoot& root : spec.boundary) {
        out += double(root.mult) / (z - root.w);
    }
    for (const SingularAtom& s : spec.atoms) {
        Complex d = z - s.w;
        out += -2.0 * s.alpha * s.w / (d * d);
    }
    return out;
}

PsiSpec conjugate_spec(const PsiSpec& spec, const DiscAutomorphism& rot) {
    if (std::abs(rot.a()) > 1e-12) {
        throw Error("non-rotation-conjugator", "conjugation is only defined for rotations");
    }
    // rot: z -> lambda z with lambda = -eta; composing psi with rot moves the
    // datum at p to rot^{-1}(p) = conj(lambda) p and preserves weights.
    const Complex back = std::conj(-rot.eta());
    PsiSpec out = spec;
    for (InteriorZero& z : out.interior) z.a *= back;
    for (BoundaryRoot& r : out.boundary) r.w *= back;
    for (SingularAtom& s : out.atoms) s.w *= back;
    return validate(out);
}

const char* to_string(RefutationReason reason) {
    switch (reason) {
        case RefutationReason::not_an_automorphism: return "not-an-automorphism";
        case RefutationReason::zero_set_not_permuted: return "zero-set-not-permuted";
        case RefutationReason::multiplicity_mismatch: return "multiplicity-mismatch";
        case RefutationReason::boundary_root_mismatch: return "boundary-root-mismatch";
        case RefutationReason::atom_weight_equation_failed: return "atom-weight-equation-failed";
    }
    return "unknown";
}

}  // namespace psiaut
