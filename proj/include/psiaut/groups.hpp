#pragma once

#include <vector>

#include "psiaut/decision.hpp"

namespace psiaut {

// Named one- or two-parameter families of disc automorphisms.  anchors holds
// the defining points:
//   rotation_conjugate(c)      maps fixing the interior point c; parameter
//                              theta in [0, 2 pi) -> tau_c o rotation(theta) o tau_c
//   boundary_stabilizer(w)     maps fixing the boundary point w; parameters
//                              (re a, im a) with |a| < 1
//   boundary_pair_fixing(w1,w2)   maps fixing both boundary points;
//                              parameter t in (-1, 1) through the normal form
//                              h_t(z) = (z + t)/(1 + t z) conjugated so that
//                              (w1, w2) sits at (1, -1)
//   boundary_pair_swapping(w1,w2) maps exchanging the two boundary points;
//                              parameter t in (-1, 1), normal form -h_t
//   parabolic_at(w)            maps fixing w with derivative 1 there;
//                              parameter zeta real, the ray-translation speed
enum class FamilyName {
    rotation_conjugate,
    boundary_stabilizer,
    boundary_pair_fixing,
    boundary_pair_swapping,
    parabolic_at,
};

const char* to_string(FamilyName name);

struct FamilyDescriptor {
    FamilyName name;
    std::vector<Complex> anchors;
    int param_count = 1;
};

enum class GroupKind { all_of_aut_d, identity_only, finite, family_union };

const char* to_string(GroupKind kind);

// The full automorphism group of the algebra described by a spec: either all
// of Aut(D), just the identity, an explicit finite list (closed under
// composition and inverse, identity included, sorted lexicographically by
// (eta, a)), or a union of parametric families.  derived_rule marks outputs
// that relied on the weight-equation rules for atoms mixed with boundary
// roots.
struct GroupDescriptor {
    GroupKind kind = GroupKind::identity_only;
    std::vector<DiscAutomorphism> elements;
    std::vector<FamilyDescriptor> families;
    bool derived_rule = false;
};

// Enumerates the group by case analysis on the constraint locations:
// under-determined configurations yield families, pinned ones yield finite
// candidate sets (one solve per admissible location permutation, each
// verified by decide), and atom weights cut one-parameter families down to
// finitely many members via root finding.  Configurations whose admissible
// permutations would exceed 10! candidates raise "permutation-explosion".
GroupDescriptor enumerate_group(const PsiSpec& spec);

// A concrete member of a family; params.size() must equal param_count and
// each parameter must lie in the family's domain ("out-of-range-parameter").
DiscAutomorphism sample_family(const FamilyDescriptor& family,
                               const std::vector<double>& params);

// Draws members of the described group (elements or family samples) and
// checks that compositions and inverses are again accepted by decide.
bool group_closure_check(const GroupDescriptor& group, const PsiSpec& spec, int samples);

// The canonical automorphism sending (w1, w2) to (1, -1), pinned by sending
// the counterclockwise arc midpoint of (w1, w2) to i.  Shared by the pair
// families; exposed for tests.
DiscAutomorphism pair_normalizer(Complex w1, Complex w2);

}  // namespace psiaut
