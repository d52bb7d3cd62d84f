#include "psiaut/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace psiaut {

namespace {

double number_at(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw Error("parse-error", std::string("expected a number at \"") + key + "\"");
    }
    return j.at(key).get<double>();
}

Complex as_complex(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error("parse-error",
                    std::string(what) + " must be a two-element array [re, im]");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Complex complex_at(const Json& j, const char* key) {
    if (!j.contains(key)) {
        throw Error("parse-error", std::string("missing \"") + key + "\"");
    }
    return as_complex(j.at(key), key);
}

int mult_at(const Json& j) {
    if (!j.contains("mult")) return 1;
    if (!j.at("mult").is_number_integer()) {
        throw Error("parse-error", "\"mult\" must be an integer");
    }
    return j.at("mult").get<int>();
}

const Json& list_at(const Json& j, const char* key, const Json& empty) {
    if (!j.contains(key)) return empty;
    if (!j.at(key).is_array()) {
        throw Error("parse-error", std::string("\"") + key + "\" must be an array");
    }
    return j.at(key);
}

}  // namespace

double canonical_double(double x) {
    if (x == 0.0) return 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

PsiSpec psi_from_json(const Json& j) {
    if (!j.is_object()) throw Error("parse-error", "model data must be a JSON object");
    static const Json empty = Json::array();
    PsiSpec spec;
    for (const Json& e : list_at(j, "interior", empty)) {
        if (!e.is_object()) throw Error("parse-error", "interior entries must be objects");
        spec.interior.push_back({complex_at(e, "a"), mult_at(e)});
    }
    for (const Json& e : list_at(j, "boundary", empty)) {
        if (!e.is_object()) throw Error("parse-error", "boundary entries must be objects");
        spec.boundary.push_back({complex_at(e, "w"), mult_at(e)});
    }
    for (const Json& e : list_at(j, "atoms", empty)) {
        if (!e.is_object()) throw Error("parse-error", "atom entries must be objects");
        double alpha = e.contains("alpha") ? number_at(e, "alpha") : 1.0;
        spec.atoms.push_back({complex_at(e, "w"), alpha});
    }
    validate(spec);
    return spec;
}

DiscAutomorphism phi_from_json(const Json& j) {
    if (!j.is_object()) throw Error("parse-error", "map data must be a JSON object");
    if (j.contains("rotation_theta")) {
        return DiscAutomorphism::rotation(number_at(j, "rotation_theta"));
    }
    if (j.contains("tau")) {
        return DiscAutomorphism::tau(complex_at(j, "tau"));
    }
    if (j.contains("parabolic")) {
        const Json& p = j.at("parabolic");
        if (!p.is_object()) throw Error("parse-error", "\"parabolic\" must be an object");
        FamilyDescriptor fam;
        fam.name = FamilyName::parabolic_at;
        fam.anchors = {complex_at(p, "w")};
        fam.param_count = 1;
        return sample_family(fam, {number_at(p, "zeta")});
    }
    if (j.contains("eta") || j.contains("a")) {
        return DiscAutomorphism(complex_at(j, "eta"), complex_at(j, "a"));
    }
    throw Error("parse-error",
                "map data needs \"eta\"/\"a\", \"rotation_theta\", \"tau\", or \"parabolic\"");
}

namespace {

Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io-error", "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("parse-error", path + ": " + e.what());
    }
}

}  // namespace

PsiSpec load_psi_file(const std::string& path) { return psi_from_json(parse_file(path)); }

DiscAutomorphism load_phi_file(const std::string& path) {
    return phi_from_json(parse_file(path));
}

Json json_of(Complex z) {
    return Json::array({canonical_double(z.real()), canonical_double(z.imag())});
}

Json json_of(const DiscAutomorphism& phi) {
    Json j;
    j["eta"] = json_of(phi.eta());
    j["a"] = json_of(phi.a());
    return j;
}

Json json_of(const MoebiusClass& cls) {
    Json j;
    j["kind"] = to_string(cls.kind);
    Json fps = Json::array();
    for (Complex fp : cls.fixed_points) fps.push_back(json_of(fp));
    j["fixed_points"] = fps;
    j["multiplier"] = canonical_double(cls.multiplier);
    return j;
}

Json json_of(const Verdict& verdict) {
    Json j;
    j["accepted"] = verdict.accepted;
    const auto pairs = [](const std::vector<std::pair<int, int>>& m) {
        Json out = Json::array();
        for (auto [src, dst] : m) out.push_back(Json::array({src, dst}));
        return out;
    };
    j["interior_map"] = pairs(verdict.interior_map);
    j["boundary_map"] = pairs(verdict.boundary_map);
    j["atom_map"] = pairs(verdict.atom_map);
    if (verdict.reason) j["reason"] = to_string(*verdict.reason);
    if (!verdict.detail.empty()) j["detail"] = verdict.detail;
    if (verdict.numeric_witness) {
        Json w;
        w["sup"] = canonical_double(verdict.numeric_witness->first);
        w["inf"] = canonical_double(verdict.numeric_witness->second);
        j["numeric_witness"] = w;
    }
    j["derived_rule"] = verdict.derived_rule;
    return j;
}

Json json_of(const FamilyDescriptor& family) {
    Json j;
    j["name"] = to_string(family.name);
    Json anchors = Json::array();
    for (Complex a : family.anchors) anchors.push_back(json_of(a));
    j["anchors"] = anchors;
    j["param_count"] = family.param_count;
    return j;
}

Json json_of(const GroupDescriptor& group) {
    Json j;
    j["kind"] = to_string(group.kind);
    Json elements = Json::array();
    for (const DiscAutomorphism& e : group.elements) elements.push_back(json_of(e));
    j["elements"] = elements;
    Json families = Json::array();
    for (const FamilyDescriptor& f : group.families) families.push_back(json_of(f));
    j["families"] = families;
    j["derived_rule"] = group.derived_rule;
    return j;
}

Json json_of(const RatioReport& report) {
    Json j;
    j["sup"] = canonical_double(report.sup_estimate);
    j["inf"] = canonical_double(report.inf_estimate);
    j["invertible"] = report.invertible_verdict;
    j["grid"] = report.grid;
    return j;
}

}  // namespace psiaut
