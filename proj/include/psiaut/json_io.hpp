#pragma once

#include <string>

#include "json.hpp"
#include "psiaut/groups.hpp"
#include "psiaut/moebius.hpp"
#include "psiaut/numerics.hpp"
#include "psiaut/psi_model.hpp"

namespace psiaut {

// Key order is preserved so serialized output is stable run to run.
using Json = nlohmann::ordered_json;

// Rounds through the shortest 15-significant-digit decimal form, so a value
// prints identically no matter which code path produced it.
double canonical_double(double x);

// Model data from JSON.  A structural problem raises Error("parse-error");
// semantic validation errors keep their own codes.
//
// Data file shape:
//   {"interior": [{"a": [re, im], "mult": n}, ...],
//    "boundary": [{"w": [re, im], "mult": n}, ...],
//    "atoms":    [{"w": [re, im], "alpha": x}, ...]}
// Absent keys mean empty lists; "mult" defaults to 1 and "alpha" to 1.
PsiSpec psi_from_json(const Json& j);

// Map shape: {"eta": [re, im], "a": [re, im]}, or one of the shorthands
// {"rotation_theta": t}, {"tau": [re, im]},
// {"parabolic": {"w": [re, im], "zeta": x}}.
DiscAutomorphism phi_from_json(const Json& j);

PsiSpec load_psi_file(const std::string& path);
DiscAutomorphism load_phi_file(const std::string& path);

Json json_of(Complex z);
Json json_of(const DiscAutomorphism& phi);
Json json_of(const MoebiusClass& cls);
Json json_of(const Verdict& verdict);
Json json_of(const FamilyDescriptor& family);
Json json_of(const GroupDescriptor& group);
Json json_of(const RatioReport& report);

}  // namespace psiaut
