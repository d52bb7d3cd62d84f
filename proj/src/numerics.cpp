#include "psiaut/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace psiaut {

namespace {

constexpr double kZeroExclusion = 1e-6;
constexpr double kAtomExclusion = 1e-4;
// Band-growth gate between radius 0.9 and radius 0.999: an invertible ratio
// extends continuously to the closed disc and cannot gain this factor, while
// a single mismatched boundary root alone gains ~100x.
const double kGrowthGateLog = std::log(40.0);

std::vector<Complex> singular_points(const PsiSpec& spec) {
    std::vector<Complex> pts;
    for (const InteriorZero& z : spec.interior) pts.push_back(z.a);
    for (const BoundaryRoot& r : spec.boundary) pts.push_back(r.w);
    for (const SingularAtom& s : spec.atoms) pts.push_back(s.w);
    return pts;
}

void check_contour(const ContourSpec& contour, const std::vector<Complex>& singularities) {
    if (!(contour.radius > 0.0) || contour.samples < 16) {
        throw Error("invalid-datum", "contour needs a positive radius and at least 16 samples");
    }
    if (std::abs(contour.center) + contour.radius > 1.0 - kMatchTol) {
        throw Error("ill-conditioned-contour", "contour must stay inside the open unit disc");
    }
    for (Complex s : singularities) {
        if (std::abs(std::abs(s - contour.center) - contour.radius) < kZeroExclusion) {
            throw Error("ill-conditioned-contour", "contour passes too close to a singularity");
        }
    }
}

// (1/2 pi i) * contour integral of f, via the trapezoid rule on the circle.
Complex circle_integral(const ContourSpec& contour,
                        const std::function<Complex(Complex)>& f) {
    Complex acc(0.0, 0.0);
    const int n = contour.samples;
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * M_PI * k / n;
        const Complex offset = std::polar(contour.radius, t);
        acc += f(contour.center + offset) * offset;
    }
    return acc / double(n);
}

int rounded_winding(Complex integral, const char* what) {
    const double re = std::real(integral);
    const int n = int(std::lround(re));
    if (std::abs(integral - Complex(double(n), 0.0)) > kWindingResidualTol) {
        throw Error("ill-conditioned-contour", what);
    }
    return n;
}

}  // namespace

int count_zeros(const PsiSpec& spec, const ContourSpec& contour) {
    check_contour(contour, singular_points(spec));
    Complex integral =
        circle_integral(contour, [&](Complex z) { return log_derivative(spec, z); });
    return rounded_winding(integral, "zero count did not converge to an integer");
}

int count_zeros_composed(const PsiSpec& spec, const DiscAutomorphism& phi,
                         const ContourSpec& contour) {
    const DiscAutomorphism inv = inverse(phi);
    std::vector<Complex> pre;
    for (Complex s : singular_points(spec)) pre.push_back(eval(inv, s));
    check_contour(contour, pre);
    Complex integral = circle_integral(contour, [&](Complex z) {
        return log_derivative(spec, eval(phi, z)) * derivative(phi, z);
    });
    return rounded_winding(integral, "composed zero count did not converge to an integer");
}

namespace {

struct GridAccumulator {
    double sup_log = -std::numeric_limits<double>::infinity();
    double inf_log = std::numeric_limits<double>::infinity();
    long points = 0;
    long excluded = 0;

    void add(double value) {
        sup_log = std::max(sup_log, value);
        inf_log = std::min(inf_log, value);
        ++points;
    }
};

bool near_any(Complex z, const std::vector<Complex>& pts, double tol) {
    for (Complex p : pts) {
        if (std::abs(z - p) < tol) return true;
    }
    return false;
}

double clamp_exp(double x) { return std::exp(std::clamp(x, -700.0, 700.0)); }

}  // namespace

RatioReport ratio_bounds(const PsiSpec& spec, const DiscAutomorphism& phi,
                         std::vector<double> radii, int angular) {
    if (radii.empty()) radii = {0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999};
    if (angular < 8) throw Error("invalid-datum", "angular resolution must be at least 8");
    for (double r : radii) {
        if (!(r > 0.0) || !(r < 1.0)) {
            throw Error("invalid-datum", "grid radii must lie strictly between 0 and 1");
        }
    }
    std::sort(radii.begin(), radii.end());

    const DiscAutomorphism inv = inverse(phi);

    std::vector<Complex> zeros, zeros_pull, atoms, atoms_pull;
    std::vector<Complex> ray_directions;
    for (const InteriorZero& z : spec.interior) {
        zeros.push_back(z.a);
        zeros_pull.push_back(eval(inv, z.a));
    }
    for (const SingularAtom& s : spec.atoms) {
        atoms.push_back(s.w);
        atoms_pull.push_back(eval(inv, s.w));
        ray_directions.push_back(s.w);
        ray_directions.push_back(eval(inv, s.w));
    }
    for (const BoundaryRoot& r : spec.boundary) {
        ray_directions.push_back(r.w);
        ray_directions.push_back(eval(inv, r.w));
    }
    for (Complex& d : ray_directions) d /= std::abs(d);

    std::vector<Complex> zero_exclusions = zeros;
    zero_exclusions.insert(zero_exclusions.end(), zeros_pull.begin(), zeros_pull.end());
    std::vector<Complex> atom_exclusions = atoms;
    atom_exclusions.insert(atom_exclusions.end(), atoms_pull.begin(), atoms_pull.end());

    const auto excluded = [&](Complex z) {
        return near_any(z, zero_exclusions, kZeroExclusion) ||
               near_any(z, atom_exclusions, kAtomExclusion);
    };
    const auto log_ratio = [&](Complex z) {
        return log_abs_psi(spec, eval(phi, z)) - log_abs_psi(spec, z);
    };

    GridAccumulator total;
    // Per-radius extrema for the base grid and the radial probes, used by the
    // band-stability gate.
    std::vector<GridAccumulator> per_radius(radii.size());

    const auto add_at_radius = [&](std::size_t radius_index, Complex z) {
        if (excluded(z)) {
            ++total.excluded;
            return;
        }
        const double v = log_ratio(z);
        if (!std::isfinite(v)) {
            ++total.excluded;
            return;
        }
        total.add(v);
        per_radius[radius_index].add(v);
    };

    for (std::size_t i = 0; i < radii.size(); ++i) {
        for (int k = 0; k < angular; ++k) {
            add_at_radius(i, std::polar(radii[i], 2.0 * M_PI * k / angular));
        }
        for (Complex d : ray_directions) {
            add_at_radius(i, radii[i] * d);
        }
    }

    // Rings hugging each interior zero of psi and of the pullback: the ratio
    // has a zero or pole there exactly when the symbolic data mismatch, and
    // the base grid is far too coarse to see it.
    long ring_points = 0;
    for (Complex c : zero_exclusions) {
        for (double d : {1e-2, 1e-3, 1e-4, 1e-5}) {
            for (int k = 0; k < 16; ++k) {
                const Complex z = c + std::polar(d, 2.0 * M_PI * k / 16);
                if (std::abs(z) >= 1.0 - kMatchTol) continue;
                if (excluded(z)) {
                    ++total.excluded;
                    continue;
                }
                const double v = log_ratio(z);
                if (!std::isfinite(v)) {
                    ++total.excluded;
                    continue;
                }
                total.add(v);
                ++ring_points;
            }
        }
    }

    if (total.points == 0) {
        throw Error("empty-grid", "every grid point fell inside an exclusion zone");
    }

    // Winding of g = (psi o phi)/psi around each interior zero on either
    // side; any nonzero value certifies a zero or pole of g inside the disc.
    bool windings_clean = true;
    int contours = 0;
    {
        std::vector<Complex> centers;
        for (Complex c : zero_exclusions) {
            bool seen = false;
            for (Complex p : centers) {
                if (std::abs(c - p) <= kMatchTol) {
                    seen = true;
                    break;
                }
            }
            if (!seen) centers.push_back(c);
        }
        std::vector<Complex> all_singular = singular_points(spec);
        all_singular.insert(all_singular.end(), zeros_pull.begin(), zeros_pull.end());
        all_singular.insert(all_singular.end(), atoms_pull.begin(), atoms_pull.end());
        for (const BoundaryRoot& r : spec.boundary) {
            all_singular.push_back(eval(inv, r.w));
        }

        for (Complex c : centers) {
            double clearance = 1.0 - std::abs(c);
            for (Complex s : all_singular) {
                const double d = std::abs(s - c);
                if (d > kMatchTol) clearance = std::min(clearance, d);
            }
            ContourSpec contour{c, std::min(0.05, 0.45 * clearance), 2048};
            try {
                Complex integral = circle_integral(contour, [&](Complex z) {
                    return log_derivative(spec, eval(phi, z)) * derivative(phi, z) -
                           log_derivative(spec, z);
                });
                if (rounded_winding(integral, "ratio winding did not converge") != 0) {
                    windings_clean = false;
                }
            } catch (const Error&) {
                // A contour that cannot be certified counts against
                // invertibility rather than crashing the screen.
                windings_clean = false;
            }
            ++contours;
        }
    }

    // Band stability: compare the extrema near radius 0.9 with those near
    // 0.999 when both are part of the grid.
    bool stable = true;
    {
        auto band = [&](double target) -> const GridAccumulator* {
            for (std::size_t i = 0; i < radii.size(); ++i) {
                if (std::abs(radii[i] - target) < 1e-12 && per_radius[i].points > 0) {
                    return &per_radius[i];
                }
            }
            return nullptr;
        };
        const GridAccumulator* lo = band(0.9);
        const GridAccumulator* hi = band(0.999);
        if (lo && hi) {
            if (hi->sup_log - lo->sup_log > kGrowthGateLog) stable = false;
            if (lo->inf_log - hi->inf_log > kGrowthGateLog) stable = false;
        }
    }

    const double bound_log = std::log(kRatioBound);
    RatioReport report;
    report.sup_estimate = clamp_exp(total.sup_log);
    report.inf_estimate = clamp_exp(total.inf_log);
    report.invertible_verdict = total.sup_log <= bound_log && total.inf_log >= -bound_log &&
                                stable && windings_clean;
    std::ostringstream grid;
    grid << "radii=" << radii.size() << " angular=" << angular
         << " rays=" << ray_directions.size() << " rings=" << ring_points
         << " excluded=" << total.excluded << " contours=" << contours
         << " stable=" << (stable ? "yes" : "no")
         << " windings=" << (windings_clean ? "clean" : "nonzero");
    report.grid = grid.str();
    return report;
}

std::vector<double> find_parameter_roots(const std::function<double(double)>& f,
                                         double lo, double hi, double tol) {
    if (!(tol >= 1e-12)) throw Error("invalid-datum", "root tolerance must be at least 1e-12");
    if (!(hi > lo)) throw Error("invalid-datum", "root interval must be nonempty");

    const double step = 1e-3;
    const int cells = std::max(1, int(std::ceil((hi - lo) / step)));
    std::vector<double> roots;

    double x_prev = lo;
    double f_prev = f(x_prev);
    for (int k = 1; k <= cells; ++k) {
        const double x = (k == cells) ? hi : lo + k * (hi - lo) / cells;
        const double fx = f(x);
        if (f_prev == 0.0) {
            roots.push_back(x_prev);
        } else if (std::isfinite(f_prev) && std::isfinite(fx) && f_prev * fx < 0.0) {
            double a = x_prev, b = x, fa = f_prev;
            for (int it = 0; it < 200 && b - a > tol; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = f(m);
                if (fm == 0.0) {
                    a = b = m;
                    break;
                }
                if (fa * fm < 0.0) {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        x_prev = x;
        f_prev = fx;
    }
    if (f_prev == 0.0) roots.push_back(x_prev);

    std::sort(roots.begin(), roots.end());
    std::vector<double> merged;
    for (double r : roots) {
        if (merged.empty() || r - merged.back() > 10.0 * tol) {
            merged.push_back(r);
        }
    }
    return merged;
}

}  // namespace psiaut
