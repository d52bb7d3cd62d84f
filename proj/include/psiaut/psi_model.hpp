#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psiaut/moebius.hpp"

namespace psiaut {

// Matching tolerance for locations and for relative weight comparisons.
inline constexpr double kMatchTol = 1e-9;

// One interior zero of psi with its multiplicity.  A zero at the origin
// contributes the factor z^mult; elsewhere the normalized factor
// (|a|/a (a - z)/(1 - conj(a) z))^mult.
struct InteriorZero {
    Complex a;
    int mult = 1;
};

// Boundary root: the polynomial factor (z - w)^mult with |w| = 1.
struct BoundaryRoot {
    Complex w;
    int mult = 1;
};

// Point-mass singular factor exp(alpha (z + w)/(z - w)) with |w| = 1 and
// alpha > 0.  Its modulus is exp(alpha (|z|^2 - 1)/|z - w|^2) < 1 inside
// the disc.
struct SingularAtom {
    Complex w;
    double alpha = 1.0;
};

// Finite symbolic description of psi as the product of the three factor
// families above.  A boundary point may carry both a root and an atom; the
// empty description denotes psi == 1.
struct PsiSpec {
    std::vector<InteriorZero> interior;
    std::vector<BoundaryRoot> boundary;
    std::vector<SingularAtom> atoms;

    bool empty() const {
        return interior.empty() && boundary.empty() && atoms.empty();
    }
};

// Checks multiplicities/weights, projects boundary data onto the exact unit
// circle (rejecting points further than kUnitTol from it), sorts every list
// lexicographically by (re, im) and rejects near-duplicate points within a
// category.  All other operations expect a validated spec.
PsiSpec validate(const PsiSpec& raw);

// psi(z) for z in the open disc, away from atoms by at least 1e-12.
Complex eval_psi(const PsiSpec& spec, Complex z);

// log |psi(z)| as a sum of per-factor terms.  Stable where eval_psi would
// underflow: the atom factors enter as alpha (|z|^2 - 1)/|z - w|^2 without
// exponentiation.  Returns -infinity at a zero of psi.
double log_abs_psi(const PsiSpec& spec, Complex z);

// psi'(z)/psi(z), valid away from all zeros, roots and atoms by at least
// kMatchTol.  Interior zeros contribute mult (|a|^2 - 1)/((a - z)(1 - conj(a) z)),
// boundary roots mult/(z - w), atoms -2 alpha w/(z - w)^2.
Complex log_derivative(const PsiSpec& spec, Complex z);

// The spec of psi composed with a rotation: every location p moves to
// rot^{-1}(p); multiplicities and weights are unchanged.  Conjugators with
// |a| > 1e-12 are rejected ("non-rotation-conjugator").
PsiSpec conjugate_spec(const PsiSpec& spec, const DiscAutomorphism& rot);

// Refutation codes for a rejected composition map.
enum class RefutationReason {
    not_an_automorphism,
    zero_set_not_permuted,
    multiplicity_mismatch,
    boundary_root_mismatch,
    atom_weight_equation_failed,
};

const char* to_string(RefutationReason reason);

// Outcome of the symbolic decision for one candidate map.  When accepted, the
// three index maps record the induced permutation of each data category
// (source index -> matched spec index).  numeric_witness, when attached by a
// caller, holds the (sup, inf) estimates of |psi o phi / psi| from the
// numeric screen.  derived_rule marks configurations decided by rules that
// extend the directly catalogued ones (a boundary point carrying both a root
// and an atom).
struct Verdict {
    bool accepted = false;
    std::vector<std::pair<int, int>> interior_map;
    std::vector<std::pair<int, int>> boundary_map;
    std::vector<std::pair<int, int>> atom_map;
    std::optional<RefutationReason> reason;
    std::string detail;
    std::optional<std::pair<double, double>> numeric_witness;
    bool derived_rule = false;
};

}  // namespace psiaut
