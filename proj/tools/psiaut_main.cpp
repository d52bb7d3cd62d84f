// Command-line front end: decides whether a disc automorphism is compatible
// with a finitely described inner/singular function, enumerates the full
// compatibility group, classifies maps, and re-checks decisions numerically.
//
// Exit codes: 0 accepted / true / success, 1 rejected / false, 2 error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "psiaut/decision.hpp"
#include "psiaut/groups.hpp"
#include "psiaut/json_io.hpp"
#include "psiaut/moebius.hpp"
#include "psiaut/numerics.hpp"
#include "psiaut/psi_model.hpp"

using namespace psiaut;

namespace {

const char* kUsage =
    "usage: psiaut <command> [options]\n"
    "\n"
    "commands:\n"
    "  decide    --psi FILE --phi FILE [--format json|text]\n"
    "            accept or refute the map against the model data (exit 0/1)\n"
    "  group     --psi FILE [--format json|text]\n"
    "            enumerate every compatible disc automorphism\n"
    "  classify  --phi FILE [--format json|text]\n"
    "            fixed points and multiplier of the map\n"
    "  verify    --psi FILE --phi FILE [--radii r1,r2,..] [--angular N]\n"
    "            numeric invertibility check of the induced ratio (exit 0/1)\n"
    "  mult      --psi FILE --center re,im --radius R [--samples N] [--phi FILE]\n"
    "            zero count inside a circle, by contour winding\n"
    "  selftest  run the built-in catalogue of known answers\n";

struct Args {
    std::string command;
    std::map<std::string, std::string> options;

    bool has(const std::string& key) const { return options.count(key) != 0; }

    const std::string& need(const std::string& key) const {
        auto it = options.find(key);
        if (it == options.end()) {
            throw Error("usage-error", "missing required option --" + key);
        }
        return it->second;
    }

    std::string get(const std::string& key, const std::string& fallback) const {
        auto it = options.find(key);
        return it == options.end() ? fallback : it->second;
    }
};

Args parse_args(int argc, char** argv, const std::set<std::string>& allowed) {
    Args args;
    args.command = argv[1];
    for (int i = 2; i < argc; ++i) {
        std::string token = argv[i];
        if (token.rfind("--", 0) != 0) {
            throw Error("usage-error", "unexpected argument: " + token);
        }
        std::string key = token.substr(2);
        if (!allowed.count(key)) {
            throw Error("usage-error", "unknown option --" + key);
        }
        if (i + 1 >= argc) {
            throw Error("usage-error", "option --" + key + " needs a value");
        }
        args.options[key] = argv[++i];
    }
    return args;
}

double parse_double(const std::string& text, const std::string& what) {
    char* end = nullptr;
    double value = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') {
        throw Error("usage-error", "cannot parse " + what + ": " + text);
    }
    return value;
}

int parse_int(const std::string& text, const std::string& what) {
    double value = parse_double(text, what);
    if (value != int(value)) throw Error("usage-error", what + " must be an integer");
    return int(value);
}

Complex parse_point(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw Error("usage-error", "expected re,im but got: " + text);
    }
    return Complex(parse_double(text.substr(0, comma), "point"),
                   parse_double(text.substr(comma + 1), "point"));
}

std::vector<double> parse_radii(const std::string& text) {
    std::vector<double> radii;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        radii.push_back(parse_double(part, "radius"));
    }
    if (radii.empty()) throw Error("usage-error", "empty radius list");
    return radii;
}

std::string format_of(const Args& args) {
    std::string format = args.get("format", "json");
    if (format != "json" && format != "text") {
        throw Error("usage-error", "--format must be json or text");
    }
    return format;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string point_text(Complex z) {
    std::ostringstream out;
    out << canonical_double(z.real()) << (z.imag() < 0 ? "" : "+") << canonical_double(z.imag())
        << "i";
    return out.str();
}

int run_decide(const Args& args) {
    const PsiSpec spec = load_psi_file(args.need("psi"));
    const DiscAutomorphism phi = load_phi_file(args.need("phi"));
    const std::string format = format_of(args);

    Verdict verdict = decide(spec, phi);
    if (verdict.accepted) {
        // Attach the independent numeric cross-check to accepted verdicts.
        RatioReport report = ratio_bounds(spec, phi);
        verdict.numeric_witness = {report.sup_estimate, report.inf_estimate};
    }

    if (format == "json") {
        emit(json_of(verdict));
    } else {
        if (verdict.accepted) {
            std::cout << "accepted\n";
        } else {
            std::cout << "rejected: " << to_string(*verdict.reason) << "\n";
            if (!verdict.detail.empty()) std::cout << "  " << verdict.detail << "\n";
        }
    }
    return verdict.accepted ? 0 : 1;
}

int run_group(const Args& args) {
    const PsiSpec spec = load_psi_file(args.need("psi"));
    const std::string format = format_of(args);
    const GroupDescriptor group = enumerate_group(spec);

    if (format == "json") {
        emit(json_of(group));
    } else {
        std::cout << "kind: " << to_string(group.kind) << "\n";
        for (const DiscAutomorphism& e : group.elements) {
            std::cout << "  element eta=" << point_text(e.eta()) << " a=" << point_text(e.a())
                      << "\n";
        }
        for (const FamilyDescriptor& f : group.families) {
            std::cout << "  family " << to_string(f.name) << " anchors";
            for (Complex a : f.anchors) std::cout << " " << point_text(a);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_classify(const Args& args) {
    const DiscAutomorphism phi = load_phi_file(args.need("phi"));
    const std::string format = format_of(args);
    const MoebiusClass cls = classify(phi);

    if (format == "json") {
        emit(json_of(cls));
    } else {
        std::cout << "kind: " << to_string(cls.kind) << "\n";
        for (Complex fp : cls.fixed_points) {
            std::cout << "  fixed point " << point_text(fp) << "\n";
        }
        std::cout << "multiplier: " << canonical_double(cls.multiplier) << "\n";
    }
    return 0;
}

int run_verify(const Args& args) {
    const PsiSpec spec = load_psi_file(args.need("psi"));
    const DiscAutomorphism phi = load_phi_file(args.need("phi"));
    std::vector<double> radii;
    if (args.has("radii")) radii = parse_radii(args.need("radii"));
    int angular = args.has("angular") ? parse_int(args.need("angular"), "--angular") : 720;

    const RatioReport report = ratio_bounds(spec, phi, radii, angular);
    emit(json_of(report));
    return report.invertible_verdict ? 0 : 1;
}

int run_mult(const Args& args) {
    const PsiSpec spec = load_psi_file(args.need("psi"));
    ContourSpec contour;
    contour.center = parse_point(args.need("center"));
    contour.radius = parse_double(args.need("radius"), "--radius");
    if (args.has("samples")) contour.samples = parse_int(args.need("samples"), "--samples");

    int count = 0;
    if (args.has("phi")) {
        const DiscAutomorphism phi = load_phi_file(args.need("phi"));
        count = count_zeros_composed(spec, phi, contour);
    } else {
        count = count_zeros(spec, contour);
    }
    Json j;
    j["count"] = count;
    emit(j);
    return 0;
}

// ---------------------------------------------------------------------------
// selftest: a catalogue of hand-checkable configurations.

struct SelfCase {
    std::string name;
    bool (*check)();
};

bool selftest_unconstrained() {
    return enumerate_group(PsiSpec{}).kind == GroupKind::all_of_aut_d;
}

bool selftest_single_zero_origin() {
    PsiSpec spec;
    spec.interior.push_back({Complex(0, 0), 1});
    validate(spec);
    GroupDescriptor g = enumerate_group(spec);
    if (g.kind != GroupKind::family_union || g.families.size() != 1) return false;
    if (g.families[0].name != FamilyName::rotation_conjugate) return false;
    return decide(spec, DiscAutomorphism::rotation(1.234)).accepted &&
           !decide(spec, DiscAutomorphism::tau(Complex(0.3, 0))).accepted;
}

bool selftest_cubed_zero() {
    PsiSpec spec;
    spec.interior.push_back({Complex(0, 0), 3});
    validate(spec);
    return decide(spec, DiscAutomorphism::rotation(2.5)).accepted;
}

bool selftest_double_boundary_root() {
    PsiSpec spec;
    spec.boundary.push_back({Complex(1, 0), 2});
    validate(spec);
    GroupDescriptor g = enumerate_group(spec);
    if (g.kind != GroupKind::family_union || g.families.size() != 1) return false;
    if (g.families[0].name != FamilyName::boundary_stabilizer) return false;
    // (z + 1/3)/(1 + z/3) fixes 1; a quarter rotation does not.
    DiscAutomorphism fixes_one(Complex(-1, 0), Complex(-1.0 / 3.0, 0));
    return decide(spec, fixes_one).accepted &&
           !decide(spec, DiscAutomorphism::rotation(M_PI / 2)).accepted;
}

bool selftest_boundary_pair() {
    PsiSpec spec;
    spec.boundary.push_back({Complex(1, 0), 2});
    spec.boundary.push_back({Complex(-1, 0), 2});
    validate(spec);
    GroupDescriptor g = enumerate_group(spec);
    if (g.kind != GroupKind::family_union || g.families.size() != 2) return false;
    // Swapping the two roots is allowed because their multiplicities agree.
    return decide(spec, DiscAutomorphism::tau(Complex(0.5, 0))).accepted;
}

bool selftest_symmetric_atoms() {
    PsiSpec spec;
    spec.atoms.push_back({Complex(1, 0), 1.0});
    spec.atoms.push_back({Complex(-1, 0), 1.0});
    validate(spec);
    GroupDescriptor g = enumerate_group(spec);
    if (g.kind != GroupKind::finite || g.elements.size() != 2) return false;
    if (!is_identity(g.elements[0]) && !is_identity(g.elements[1])) return false;
    for (const DiscAutomorphism& e : g.elements) {
        if (is_identity(e)) continue;
        // The other element must be z -> -z.
        if (std::abs(eval(e, Complex(0.25, 0.1)) - Complex(-0.25, -0.1)) > 1e-9) return false;
    }
    return true;
}

bool selftest_single_atom() {
    PsiSpec spec;
    spec.atoms.push_back({Complex(1, 0), 1.0});
    validate(spec);
    GroupDescriptor g = enumerate_group(spec);
    if (g.kind != GroupKind::family_union || g.families.size() != 1) return false;
    if (g.families[0].name != FamilyName::parabolic_at) return false;
    DiscAutomorphism member = sample_family(g.families[0], {3.0});
    DiscAutomorphism shrinks(Complex(-1, 0), Complex(-1.0 / 3.0, 0));  // derivative 1/2 at 1
    return decide(spec, member).accepted && !decide(spec, shrinks).accepted;
}

bool selftest_two_interior_zeros() {
    PsiSpec spec;
    spec.interior.push_back({Complex(0.3, 0), 2});
    spec.interior.push_back({Complex(-0.2, 0.4), 2});
    validate(spec);
    GroupDescriptor g = enumerate_group(spec);
    return g.kind == GroupKind::finite && g.elements.size() == 2;
}

bool selftest_weighted_atoms() {
    PsiSpec spec;
    spec.atoms.push_back({Complex(1, 0), 1.0});
    spec.atoms.push_back({Complex(-1, 0), 3.0});
    validate(spec);
    GroupDescriptor g = enumerate_group(spec);
    if (g.kind != GroupKind::finite || g.elements.size() != 2) return false;
    for (const DiscAutomorphism& e : g.elements) {
        if (is_identity(e)) continue;
        // The swap must be z -> (1/2 - z)/(1 - z/2).
        if (std::abs(e.a() - Complex(0.5, 0)) > 1e-9) return false;
        if (std::abs(e.eta() - Complex(1, 0)) > 1e-9) return false;
    }
    return true;
}

int run_selftest() {
    const std::vector<SelfCase> cases = {
        {"unconstrained-model", selftest_unconstrained},
        {"single-zero-at-origin", selftest_single_zero_origin},
        {"triple-zero-at-origin", selftest_cubed_zero},
        {"double-root-at-one", selftest_double_boundary_root},
        {"double-roots-at-plus-minus-one", selftest_boundary_pair},
        {"matched-atoms-at-plus-minus-one", selftest_symmetric_atoms},
        {"single-atom-at-one", selftest_single_atom},
        {"two-double-interior-zeros", selftest_two_interior_zeros},
        {"atoms-with-weights-one-and-three", selftest_weighted_atoms},
    };
    int failures = 0;
    for (const SelfCase& c : cases) {
        bool ok = false;
        try {
            ok = c.check();
        } catch (const std::exception& e) {
            std::cout << "[fail] " << c.name << " (exception: " << e.what() << ")\n";
            ++failures;
            continue;
        }
        std::cout << (ok ? "[pass] " : "[fail] ") << c.name << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "selftest: all passed\n" : "selftest: FAILURES\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << kUsage;
        return 2;
    }
    const std::string command = argv[1];
    if (command == "help" || command == "--help" || command == "-h") {
        std::cout << kUsage;
        return 0;
    }

    try {
        if (command == "decide") {
            return run_decide(parse_args(argc, argv, {"psi", "phi", "format"}));
        }
        if (command == "group") {
            return run_group(parse_args(argc, argv, {"psi", "format"}));
        }
        if (command == "classify") {
            return run_classify(parse_args(argc, argv, {"phi", "format"}));
        }
        if (command == "verify") {
            return run_verify(parse_args(argc, argv, {"psi", "phi", "radii", "angular"}));
        }
        if (command == "mult") {
            return run_mult(
                parse_args(argc, argv, {"psi", "phi", "center", "radius", "samples"}));
        }
        if (command == "selftest") {
            return run_selftest();
        }
        throw Error("usage-error", "unknown command: " + command);
    } catch (const Error& e) {
        Json j;
        Json detail;
        detail["code"] = e.code();
        detail["message"] = e.what();
        j["error"] = detail;
        std::cout << j.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json j;
        Json detail;
        detail["code"] = "internal-error";
        detail["message"] = e.what();
        j["error"] = detail;
        std::cout << j.dump(2) << "\n";
        return 2;
    }
}
