#pragma once

#include "psiaut/psi_model.hpp"

namespace psiaut {

// Symbolic decision: is the composition with phi an algebra automorphism of
// the multiplier-ideal algebra described by spec?  Accepts exactly when phi
// permutes each data category of the spec onto itself:
//   - interior zeros map bijectively onto interior zeros with equal
//     multiplicities,
//   - boundary roots likewise,
//   - atoms map bijectively onto atoms and every weight satisfies
//     alpha_at(phi(p)) = alpha_at(p) * |phi'(p)|.
// Categories never mix.  Point images are matched to spec points within
// kMatchTol; an ambiguous or non-injective match rejects.  The first failed
// rule is recorded as the refutation reason.
Verdict decide(const PsiSpec& spec, const DiscAutomorphism& phi);

// Decision for the derivative-constraint algebras pinned at an interior
// point a (functions whose first n derivatives vanish at a, with or without
// the value itself): the composition is an automorphism iff phi fixes a.
bool decide_derivative_algebra(Complex a, int n, const DiscAutomorphism& phi);

// Consistency of the decision under rotation conjugation: decide(spec, phi)
// and decide(conjugate_spec(spec, rot), rot^{-1} o phi o rot) must agree.
// Returns true when they do.
bool check_conjugation_transfer(const PsiSpec& spec, const DiscAutomorphism& phi,
                                const DiscAutomorphism& rot);

}  // namespace psiaut
