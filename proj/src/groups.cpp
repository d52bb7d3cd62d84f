#include "psiaut/groups.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "psiaut/decision.hpp"
#include "psiaut/numerics.hpp"

namespace psiaut {

namespace {

constexpr unsigned long long kPermutationCap = 3628800;  // 10!

// A boundary location with everything the spec attaches to it.  Roots and
// atoms sitting on the same point (within kMatchTol) are merged, since a
// candidate map moves the location as a whole.
struct BoundaryLocation {
    Complex w;
    int root_mult = 0;   // 0: no root here
    double alpha = 0.0;  // 0: no atom here

    bool has_atom() const { return alpha > 0.0; }
};

std::vector<BoundaryLocation> boundary_locations(const PsiSpec& spec) {
    std::vector<BoundaryLocation> locs;
    for (const BoundaryRoot& r : spec.boundary) {
        locs.push_back({r.w, r.mult, 0.0});
    }
    for (const SingularAtom& s : spec.atoms) {
        bool merged = false;
        for (BoundaryLocation& l : locs) {
            if (std::abs(l.w - s.w) <= kMatchTol) {
                l.alpha = s.alpha;
                merged = true;
                break;
            }
        }
        if (!merged) locs.push_back({s.w, 0, s.alpha});
    }
    std::sort(locs.begin(), locs.end(), [](const BoundaryLocation& x, const BoundaryLocation& y) {
        if (x.w.real() != y.w.real()) return x.w.real() < y.w.real();
        return x.w.imag() < y.w.imag();
    });
    return locs;
}

bool element_less(const DiscAutomorphism& x, const DiscAutomorphism& y) {
    if (x.eta().real() != y.eta().real()) return x.eta().real() < y.eta().real();
    if (x.eta().imag() != y.eta().imag()) return x.eta().imag() < y.eta().imag();
    if (x.a().real() != y.a().real()) return x.a().real() < y.a().real();
    return x.a().imag() < y.a().imag();
}

bool element_close(const DiscAutomorphism& x, const DiscAutomorphism& y) {
    return std::abs(x.eta() - y.eta()) <= kMatchTol && std::abs(x.a() - y.a()) <= kMatchTol;
}

DiscAutomorphism snap(const DiscAutomorphism& phi) {
    // Root-refined candidates land an epsilon away from the exact identity;
    // report the exact one.
    if (is_identity(phi)) return DiscAutomorphism();
    return phi;
}

void collect_element(std::vector<DiscAutomorphism>& elements, const DiscAutomorphism& phi) {
    const DiscAutomorphism snapped = snap(phi);
    for (const DiscAutomorphism& e : elements) {
        if (element_close(e, snapped)) return;
    }
    elements.push_back(snapped);
}

// Lazily iterates every permutation of {0..n-1} that maps each index inside
// its own class (classes given as groups of indices).
class ClassPermutations {
public:
    explicit ClassPermutations(std::vector<std::vector<int>> classes)
        : classes_(std::move(classes)), images_(classes_) {}

    unsigned long long count(unsigned long long cap) const {
        unsigned long long total = 1;
        for (const std::vector<int>& c : classes_) {
            for (unsigned long long k = 2; k <= c.size(); ++k) {
                total *= k;
                if (total > cap) return cap + 1;
            }
        }
        return total;
    }

    // Writes the current permutation into perm (perm[src] = dst) and
    // advances the internal state; returns false once all have been seen.
    bool next(std::vector<int>& perm) {
        if (done_) return false;
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            for (std::size_t i = 0; i < classes_[c].size(); ++i) {
                perm[classes_[c][i]] = images_[c][i];
            }
        }
        for (std::size_t c = classes_.size(); c-- > 0;) {
            if (std::next_permutation(images_[c].begin(), images_[c].end())) return true;
        }
        done_ = true;
        return true;
    }

private:
    std::vector<std::vector<int>> classes_;
    std::vector<std::vector<int>> images_;
    bool done_ = false;
};

template <typename Key>
std::vector<std::vector<int>> group_by_key(const std::vector<Key>& keys) {
    std::vector<std::vector<int>> classes;
    std::vector<bool> used(keys.size(), false);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (used[i]) continue;
        std::vector<int> cls{int(i)};
        for (std::size_t j = i + 1; j < keys.size(); ++j) {
            if (!used[j] && keys[j] == keys[i]) {
                cls.push_back(int(j));
                used[j] = true;
            }
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

// Normal-form translation along the axis through 1 and -1:
// h_t(z) = (z + t)/(1 + t z), i.e. (eta, a) = (-1, -t).
DiscAutomorphism axis_translation(double t) {
    return DiscAutomorphism(Complex(-1.0, 0.0), Complex(-t, 0.0));
}

FamilyDescriptor make_family(FamilyName name, std::vector<Complex> anchors) {
    FamilyDescriptor fam;
    fam.name = name;
    fam.anchors = std::move(anchors);
    fam.param_count = (name == FamilyName::boundary_stabilizer) ? 2 : 1;
    return fam;
}

void finalize_finite(GroupDescriptor& out) {
    std::sort(out.elements.begin(), out.elements.end(), element_less);
    if (out.elements.size() == 1 && is_identity(out.elements[0])) {
        out.kind = GroupKind::identity_only;
    } else {
        out.kind = GroupKind::finite;
    }
}

}  // namespace

const char* to_string(FamilyName name) {
    switch (name) {
        case FamilyName::rotation_conjugate: return "rotation_conjugate";
        case FamilyName::boundary_stabilizer: return "boundary_stabilizer";
        case FamilyName::boundary_pair_fixing: return "boundary_pair_fixing";
        case FamilyName::boundary_pair_swapping: return "boundary_pair_swapping";
        case FamilyName::parabolic_at: return "parabolic_at";
    }
    return "unknown";
}

const char* to_string(GroupKind kind) {
    switch (kind) {
        case GroupKind::all_of_aut_d: return "all_of_aut_d";
        case GroupKind::identity_only: return "identity_only";
        case GroupKind::finite: return "finite";
        case GroupKind::family_union: return "family_union";
    }
    return "unknown";
}

DiscAutomorphism pair_normalizer(Complex w1, Complex w2) {
    w1 = project_to_circle(w1);
    w2 = project_to_circle(w2);
    double delta = std::arg(w2 / w1);
    if (delta <= 0.0) delta += 2.0 * M_PI;
    // Counterclockwise order is (w1, mid, w2) and (1, i, -1); orientations
    // agree, so the three-point solve yields a disc automorphism.
    const Complex mid = w1 * std::polar(1.0, 0.5 * delta);
    auto sigma = solve_boundary_triple(w1, Complex(1.0, 0.0), w2, Complex(-1.0, 0.0), mid,
                                       Complex(0.0, 1.0));
    if (!sigma) {
        throw Error("degenerate-input", "boundary pair is too close to normalize");
    }
    return *sigma;
}

DiscAutomorphism sample_family(const FamilyDescriptor& family,
                               const std::vector<double>& params) {
    if (int(params.size()) != family.param_count) {
        throw Error("invalid-datum", "wrong number of family parameters");
    }
    for (double p : params) {
        if (!std::isfinite(p)) throw Error("out-of-range-parameter", "parameters must be finite");
    }

    switch (family.name) {
        case FamilyName::rotation_conjugate: {
            const Complex c = family.anchors.at(0);
            const DiscAutomorphism t = DiscAutomorphism::tau(c);
            return compose(t, compose(DiscAutomorphism::rotation(params[0]), t));
        }
        case FamilyName::boundary_stabilizer: {
            const Complex w = family.anchors.at(0);
            const Complex a(params[0], params[1]);
            if (!(std::abs(a) < 1.0)) {
                throw Error("out-of-range-parameter",
                            "stabilizer parameter must lie inside the unit disc");
            }
            const Complex eta = w * (1.0 - std::conj(a) * w) / (a - w);
            return DiscAutomorphism(eta, a);
        }
        case FamilyName::boundary_pair_fixing:
        case FamilyName::boundary_pair_swapping: {
            const double t = params[0];
            if (!(t > -1.0 && t < 1.0)) {
                throw Error("out-of-range-parameter", "pair parameter must lie in (-1, 1)");
            }
            const DiscAutomorphism sigma =
                pair_normalizer(family.anchors.at(0), family.anchors.at(1));
            DiscAutomorphism core = axis_translation(t);
            if (family.name == FamilyName::boundary_pair_swapping) {
                core = compose(DiscAutomorphism::rotation(M_PI), core);
            }
            return compose(inverse(sigma), compose(core, sigma));
        }
        case FamilyName::parabolic_at: {
            const double zeta = params[0];
            if (!(std::abs(zeta) <= 1e8)) {
                throw Error("out-of-range-parameter", "parabolic parameter is too large");
            }
            const Complex i(0.0, 1.0);
            const Complex num = 2.0 + i * zeta;
            const Complex den = 2.0 - i * zeta;
            const DiscAutomorphism base(-num / den, i * zeta / num);
            const Complex w = family.anchors.at(0);
            const DiscAutomorphism rot = DiscAutomorphism::rotation_by(w);
            return compose(rot, compose(base, inverse(rot)));
        }
    }
    throw Error("invalid-datum", "unknown family");
}

GroupDescriptor enumerate_group(const PsiSpec& spec) {
    const std::vector<BoundaryLocation> blocs = boundary_locations(spec);
    const int ni = int(spec.interior.size());
    const int nb = int(blocs.size());

    GroupDescriptor out;
    out.derived_rule = !spec.atoms.empty() && !spec.boundary.empty();

    if (ni == 0 && nb == 0) {
        out.kind = GroupKind::all_of_aut_d;
        return out;
    }

    if (ni == 1 && nb == 0) {
        out.kind = GroupKind::family_union;
        out.families.push_back(
            make_family(FamilyName::rotation_conjugate, {spec.interior[0].a}));
        return out;
    }

    if (ni == 0 && nb == 1) {
        out.kind = GroupKind::family_union;
        // An atom pins the boundary derivative to 1 (its weight must
        // reproduce itself), which cuts the two-parameter stabilizer down to
        // the parabolic one-parameter subfamily.
        if (blocs[0].has_atom()) {
            out.families.push_back(make_family(FamilyName::parabolic_at, {blocs[0].w}));
        } else {
            out.families.push_back(make_family(FamilyName::boundary_stabilizer, {blocs[0].w}));
        }
        return out;
    }

    if (ni == 0 && nb == 2) {
        const bool swappable = blocs[0].root_mult == blocs[1].root_mult &&
                               blocs[0].has_atom() == blocs[1].has_atom();
        const bool atoms_here = blocs[0].has_atom() || blocs[1].has_atom();
        const FamilyDescriptor fixing =
            make_family(FamilyName::boundary_pair_fixing, {blocs[0].w, blocs[1].w});
        const FamilyDescriptor swapping =
            make_family(FamilyName::boundary_pair_swapping, {blocs[0].w, blocs[1].w});

        if (!atoms_here) {
            out.kind = GroupKind::family_union;
            out.families.push_back(fixing);
            if (swappable) out.families.push_back(swapping);
            return out;
        }

        // Atom weights cut each one-parameter family to finitely many
        // members: solve the first weight equation along the family, then let
        // the full decision filter the candidates.
        const int src = blocs[0].has_atom() ? 0 : 1;
        for (int which = 0; which < 2; ++which) {
            const bool is_swap = which == 1;
            if (is_swap && !swappable) continue;
            const FamilyDescriptor& fam = is_swap ? swapping : fixing;
            const int dst = is_swap ? 1 - src : src;
            if (!blocs[dst].has_atom()) continue;
            const double ratio = blocs[dst].alpha / blocs[src].alpha;
            const auto weight_gap = [&](double t) {
                return boundary_derivative_modulus(sample_family(fam, {t}), blocs[src].w) -
                       ratio;
            };
            for (double t : find_parameter_roots(weight_gap, -1.0 + 1e-6, 1.0 - 1e-6, 1e-12)) {
                const DiscAutomorphism candidate = sample_family(fam, {t});
                if (decide(spec, candidate).accepted) collect_element(out.elements, candidate);
            }
        }
        finalize_finite(out);
        return out;
    }

    // Pinned regime: at least two interior locations, one interior plus
    // boundary, or at least three boundary locations.  Enumerate the
    // admissible (class-preserving) location permutations and solve each one
    // from a pinning subset; the decision filters the candidates.
    std::vector<int> interior_keys;
    for (const InteriorZero& z : spec.interior) interior_keys.push_back(z.mult);
    std::vector<std::pair<int, bool>> boundary_keys;
    for (const BoundaryLocation& b : blocs) boundary_keys.push_back({b.root_mult, b.has_atom()});

    ClassPermutations interior_perms(group_by_key(interior_keys));
    ClassPermutations boundary_perms(group_by_key(boundary_keys));
    const unsigned long long total =
        interior_perms.count(kPermutationCap) * boundary_perms.count(kPermutationCap);
    if (total > kPermutationCap) {
        std::ostringstream msg;
        msg << "candidate permutations exceed the cap (" << ni << " interior, " << nb
            << " boundary locations)";
        throw Error("permutation-explosion", msg.str());
    }

    std::vector<int> iperm(ni), bperm(nb);
    while (interior_perms.next(iperm)) {
        ClassPermutations inner(group_by_key(boundary_keys));
        while (inner.next(bperm)) {
            std::optional<DiscAutomorphism> candidate;
            if (ni >= 2) {
                candidate = solve_interior_pair(
                    spec.interior[0].a, spec.interior[iperm[0]].a, spec.interior[1].a,
                    spec.interior[iperm[1]].a);
            } else if (ni == 1) {
                candidate = solve_interior_boundary(spec.interior[0].a,
                                                    spec.interior[iperm[0]].a, blocs[0].w,
                                                    blocs[bperm[0]].w);
            } else {
                candidate =
                    solve_boundary_triple(blocs[0].w, blocs[bperm[0]].w, blocs[1].w,
                                          blocs[bperm[1]].w, blocs[2].w, blocs[bperm[2]].w);
            }
            if (candidate && decide(spec, *candidate).accepted) {
                collect_element(out.elements, *candidate);
            }
        }
    }
    finalize_finite(out);
    return out;
}

namespace {

DiscAutomorphism draw_member(const GroupDescriptor& group, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto angle = [&] { return 2.0 * M_PI * unit(rng); };

    switch (group.kind) {
        case GroupKind::all_of_aut_d: {
            return DiscAutomorphism(std::polar(1.0, angle()),
                                    std::polar(0.9 * unit(rng), angle()));
        }
        case GroupKind::identity_only:
        case GroupKind::finite: {
            std::uniform_int_distribution<std::size_t> pick(0, group.elements.size() - 1);
            return group.elements[pick(rng)];
        }
        case GroupKind::family_union: {
            std::uniform_int_distribution<std::size_t> pick(0, group.families.size() - 1);
            const FamilyDescriptor& fam = group.families[pick(rng)];
            switch (fam.name) {
                case FamilyName::rotation_conjugate:
                    return sample_family(fam, {angle()});
                case FamilyName::boundary_stabilizer: {
                    const double r = 0.85 * unit(rng);
                    const double t = angle();
                    return sample_family(fam, {r * std::cos(t), r * std::sin(t)});
                }
                case FamilyName::boundary_pair_fixing:
                case FamilyName::boundary_pair_swapping:
                    return sample_family(fam, {-0.85 + 1.7 * unit(rng)});
                case FamilyName::parabolic_at:
                    return sample_family(fam, {-15.0 + 30.0 * unit(rng)});
            }
            break;
        }
    }
    throw Error("invalid-datum", "cannot sample from this group description");
}

}  // namespace

bool group_closure_check(const GroupDescriptor& group, const PsiSpec& spec, int samples) {
    if ((group.kind == GroupKind::finite || group.kind == GroupKind::identity_only) &&
        group.elements.empty()) {
        return false;
    }
    if (group.kind == GroupKind::family_union && group.families.empty()) return false;

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    const bool listed = group.kind == GroupKind::finite || group.kind == GroupKind::identity_only;

    for (int i = 0; i < samples; ++i) {
        const DiscAutomorphism f = draw_member(group, rng);
        const DiscAutomorphism g = draw_member(group, rng);
        const DiscAutomorphism fg = compose(f, g);
        const DiscAutomorphism finv = inverse(f);
        if (!decide(spec, fg).accepted || !decide(spec, finv).accepted) return false;
        if (listed) {
            // The explicit list must itself be closed.
            const auto in_list = [&](const DiscAutomorphism& x) {
                for (const DiscAutomorphism& e : group.elements) {
                    if (element_close(e, x)) return true;
                }
                return false;
            };
            if (!in_list(fg) || !in_list(finv)) return false;
        }
    }
    return true;
}

}  // namespace psiaut
