#include "psiaut/decision.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace psiaut {

namespace {

// Index of the unique spec point within kMatchTol of image, or -1 when the
// image is unmatched, -2 when two spec points compete for it.
int match_point(Complex image, const std::vector<Complex>& targets) {
    int found = -1;
    for (std::size_t j = 0; j < targets.size(); ++j) {
        if (std::abs(image - targets[j]) <= kMatchTol) {
            if (found >= 0) return -2;
            found = int(j);
        }
    }
    return found;
}

std::string describe_point(Complex p) {
    std::ostringstream out;
    out << "(" << p.real() << ", " << p.imag() << ")";
    return out.str();
}

bool has_colocated_root_and_atom(const PsiSpec& spec) {
    for (const BoundaryRoot& r : spec.boundary) {
        for (const SingularAtom& s : spec.atoms) {
            if (std::abs(r.w - s.w) <= kMatchTol) return true;
        }
    }
    return false;
}

}  // namespace

Verdict decide(const PsiSpec& spec, const DiscAutomorphism& phi) {
    Verdict verdict;
    verdict.derived_rule = has_colocated_root_and_atom(spec);

    // Defensive re-validation; the type normally guarantees this.
    if (std::abs(std::abs(phi.eta()) - 1.0) > kUnitTol || !(std::abs(phi.a()) < 1.0)) {
        verdict.reason = RefutationReason::not_an_automorphism;
        verdict.detail = "candidate map is not a disc automorphism";
        return verdict;
    }

    // Interior zeros.
    {
        std::vector<Complex> targets;
        for (const InteriorZero& z : spec.interior) targets.push_back(z.a);
        std::vector<bool> claimed(targets.size(), false);
        for (std::size_t i = 0; i < spec.interior.size(); ++i) {
            const Complex image = eval(phi, spec.interior[i].a);
            const int j = match_point(image, targets);
            if (j < 0 || claimed[j]) {
                verdict.reason = RefutationReason::zero_set_not_permuted;
                verdict.detail = "image of interior zero " +
                                 describe_point(spec.interior[i].a) +
                                 (j == -2 ? " is ambiguous" : " matches no interior zero");
                return verdict;
            }
            if (spec.interior[i].mult != spec.interior[j].mult) {
                verdict.reason = RefutationReason::multiplicity_mismatch;
                verdict.detail = "interior zero " + describe_point(spec.interior[i].a) +
                                 " maps across distinct multiplicities";
                return verdict;
            }
            claimed[j] = true;
            verdict.interior_map.emplace_back(int(i), j);
        }
    }

    // Boundary roots.
    {
        std::vector<Complex> targets;
        for (const BoundaryRoot& r : spec.boundary) targets.push_back(r.w);
        std::vector<bool> claimed(targets.size(), false);
        for (std::size_t i = 0; i < spec.boundary.size(); ++i) {
            const Complex image = eval(phi, spec.boundary[i].w);
            const int j = match_point(image, targets);
            if (j < 0 || claimed[j]) {
                verdict.reason = RefutationReason::boundary_root_mismatch;
                verdict.detail = "image of boundary root " +
                                 describe_point(spec.boundary[i].w) +
                                 (j == -2 ? " is ambiguous" : " matches no boundary root");
                return verdict;
            }
            if (spec.boundary[i].mult != spec.boundary[j].mult) {
                verdict.reason = RefutationReason::multiplicity_mismatch;
                verdict.detail = "boundary root " + describe_point(spec.boundary[i].w) +
                                 " maps across distinct multiplicities";
                return verdict;
            }
            claimed[j] = true;
            verdict.boundary_map.emplace_back(int(i), j);
        }
    }

    // Atoms: bijection on locations plus the weight equation
    // alpha_target = alpha_source * |phi'(source)|.
    {
        std::vector<Complex> targets;
        for (const SingularAtom& s : spec.atoms) targets.push_back(s.w);
        std::vector<bool> claimed(targets.size(), false);
        for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
            const Complex image = eval(phi, spec.atoms[i].w);
            const int j = match_point(image, targets);
            if (j < 0 || claimed[j]) {
                verdict.reason = RefutationReason::atom_weight_equation_failed;
                verdict.detail = "image of atom " + describe_point(spec.atoms[i].w) +
                                 (j == -2 ? " is ambiguous" : " matches no atom");
                return verdict;
            }
            const double lhs = spec.atoms[j].alpha;
            const double rhs =
                spec.atoms[i].alpha * boundary_derivative_modulus(phi, spec.atoms[i].w);
            if (std::abs(lhs - rhs) > kMatchTol * std::max(lhs, rhs)) {
                verdict.reason = RefutationReason::atom_weight_equation_failed;
                verdict.detail = "atom " + describe_point(spec.atoms[i].w) +
                                 " violates the weight equation";
                return verdict;
            }
            claimed[j] = true;
            verdict.atom_map.emplace_back(int(i), j);
        }
    }

    verdict.accepted = true;
    return verdict;
}

bool decide_derivative_algebra(Complex a, int n, const DiscAutomorphism& phi) {
    if (!(std::abs(a) < 1.0)) {
        throw Error("invalid-datum", "the pinned point must lie inside the unit disc");
    }
    if (n < 1) {
        throw Error("invalid-datum", "the derivative order must be at least 1");
    }
    // For every order the automorphisms are exactly the compositions with
    // maps fixing the pinned point.
    return std::abs(eval(phi, a) - a) <= kMatchTol;
}

bool check_conjugation_transfer(const PsiSpec& spec, const DiscAutomorphism& phi,
                                const DiscAutomorphism& rot) {
    const Verdict direct = decide(spec, phi);
    const PsiSpec moved = conjugate_spec(spec, rot);
    const DiscAutomorphism transported = compose(inverse(rot), compose(phi, rot));
    const Verdict conjugated = decide(moved, transported);
    return direct.accepted == conjugated.accepted;
}

}  // namespace psiaut
