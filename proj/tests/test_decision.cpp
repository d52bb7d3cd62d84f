#include "test_support.hpp"

using namespace psiaut;
using support::expect_error;
using support::random_map;
using support::random_spec;

namespace {

PsiSpec spec_of(std::vector<InteriorZero> interior, std::vector<BoundaryRoot> boundary = {},
                std::vector<SingularAtom> atoms = {}) {
    PsiSpec s;
    s.interior = std::move(interior);
    s.boundary = std::move(boundary);
    s.atoms = std::move(atoms);
    return validate(s);
}

}  // namespace

TEST_CASE("the empty model accepts every map") {
    std::mt19937_64 g(51);
    for (int i = 0; i < 20; ++i) {
        Verdict v = decide(PsiSpec{}, random_map(g));
        CHECK(v.accepted);
        CHECK(v.interior_map.empty());
        CHECK_FALSE(v.derived_rule);
    }
}

TEST_CASE("interior zeros must be permuted with multiplicities") {
    PsiSpec origin = spec_of({{Complex(0, 0), 1}});
    Verdict ok = decide(origin, DiscAutomorphism::rotation(2.1));
    CHECK(ok.accepted);
    REQUIRE(ok.interior_map.size() == 1);
    CHECK(ok.interior_map[0] == std::pair<int, int>(0, 0));

    Verdict moved = decide(origin, DiscAutomorphism::tau(Complex(0.3, 0)));
    CHECK_FALSE(moved.accepted);
    CHECK(*moved.reason == RefutationReason::zero_set_not_permuted);

    // Swapping two zeros of distinct multiplicities is a multiplicity clash.
    PsiSpec pair = spec_of({{Complex(0.3, 0), 1}, {Complex(-0.3, 0), 2}});
    Verdict swapped = decide(pair, DiscAutomorphism::rotation(M_PI));
    CHECK_FALSE(swapped.accepted);
    CHECK(*swapped.reason == RefutationReason::multiplicity_mismatch);

    // With equal multiplicities the same map is fine.
    PsiSpec balanced = spec_of({{Complex(0.3, 0), 2}, {Complex(-0.3, 0), 2}});
    Verdict fine = decide(balanced, DiscAutomorphism::rotation(M_PI));
    CHECK(fine.accepted);
    CHECK(fine.interior_map == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
}

TEST_CASE("boundary roots must be permuted with multiplicities") {
    PsiSpec one = spec_of({}, {{Complex(1, 0), 1}});
    DiscAutomorphism fixes_one(Complex(-1, 0), Complex(-1.0 / 3.0, 0));
    CHECK(decide(one, fixes_one).accepted);

    Verdict off = decide(one, DiscAutomorphism::rotation(M_PI));
    CHECK_FALSE(off.accepted);
    CHECK(*off.reason == RefutationReason::boundary_root_mismatch);

    PsiSpec uneven = spec_of({}, {{Complex(1, 0), 1}, {Complex(-1, 0), 2}});
    Verdict swap = decide(uneven, DiscAutomorphism::tau(Complex(0.5, 0)));
    CHECK_FALSE(swap.accepted);
    CHECK(*swap.reason == RefutationReason::multiplicity_mismatch);
    // Fixing both points instead is compatible: -tau_a keeps +/-1 in place.
    DiscAutomorphism fix_both = compose(DiscAutomorphism::rotation(M_PI),
                                        DiscAutomorphism::tau(Complex(-0.5, 0)));
    CHECK(decide(uneven, fix_both).accepted);
}

TEST_CASE("atom locations and weights obey the derivative rule") {
    // Weights 1 at +1 and 3 at -1: the involution through 1/2 transports
    // them onto each other because |phi'(1)| = 3 and |phi'(-1)| = 1/3.
    PsiSpec atoms = spec_of({}, {}, {{Complex(1, 0), 1.0}, {Complex(-1, 0), 3.0}});
    DiscAutomorphism swap = DiscAutomorphism::tau(Complex(0.5, 0));
    Verdict ok = decide(atoms, swap);
    CHECK(ok.accepted);
    CHECK(ok.atom_map == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});

    // The map fixing +/-1 with derivative 1/2 at 1 breaks both weight
    // equations even though the locations are fixed.
    PsiSpec equal = spec_of({}, {}, {{Complex(1, 0), 1.0}, {Complex(-1, 0), 1.0}});
    DiscAutomorphism slide(Complex(-1, 0), Complex(-1.0 / 3.0, 0));
    Verdict broken = decide(equal, slide);
    CHECK_FALSE(broken.accepted);
    CHECK(*broken.reason == RefutationReason::atom_weight_equation_failed);

    // Moving an atom to a non-atom point is also a weight-rule failure.
    Verdict lost = decide(equal, DiscAutomorphism::rotation(M_PI / 3));
    CHECK_FALSE(lost.accepted);
    CHECK(*lost.reason == RefutationReason::atom_weight_equation_failed);
}

TEST_CASE("categories never stand in for each other") {
    // A boundary root moved onto an atom location refutes, and vice versa.
    PsiSpec mixed = spec_of({}, {{Complex(1, 0), 1}}, {{Complex(-1, 0), 1.0}});
    Verdict v = decide(mixed, DiscAutomorphism::rotation(M_PI));
    CHECK_FALSE(v.accepted);
    CHECK(*v.reason == RefutationReason::boundary_root_mismatch);
    CHECK(v.derived_rule == false);
}

TEST_CASE("a shared root and atom location sets the derived-rule flag") {
    PsiSpec shared = spec_of({}, {{Complex(1, 0), 2}}, {{Complex(1, 0), 1.0}});
    Verdict v = decide(shared, DiscAutomorphism());
    CHECK(v.accepted);
    CHECK(v.derived_rule);
}

TEST_CASE("identity is accepted by every validated model") {
    std::mt19937_64 g(52);
    for (int i = 0; i < 30; ++i) {
        PsiSpec spec = random_spec(g);
        Verdict v = decide(spec, DiscAutomorphism());
        CHECK(v.accepted);
        CHECK(v.interior_map.size() == spec.interior.size());
        CHECK(v.boundary_map.size() == spec.boundary.size());
        CHECK(v.atom_map.size() == spec.atoms.size());
    }
}

TEST_CASE("acceptance is closed under inverse") {
    // If phi is accepted, its inverse permutes the same finite data
    // backwards, so it must be accepted too.
    PsiSpec atoms = spec_of({}, {}, {{Complex(1, 0), 1.0}, {Complex(-1, 0), 3.0}});
    DiscAutomorphism swap = DiscAutomorphism::tau(Complex(0.5, 0));
    CHECK(decide(atoms, swap).accepted);
    CHECK(decide(atoms, inverse(swap)).accepted);

    PsiSpec zeros = spec_of({{Complex(0.3, 0), 2}, {Complex(-0.3, 0), 2}});
    CHECK(decide(zeros, DiscAutomorphism::rotation(M_PI)).accepted);
    CHECK(decide(zeros, inverse(DiscAutomorphism::rotation(M_PI))).accepted);
}

TEST_CASE("derivative-constraint algebras accept exactly the point stabilizer") {
    const Complex p(0.3, -0.1);
    DiscAutomorphism fixes = compose(
        DiscAutomorphism::tau(p), compose(DiscAutomorphism::rotation(1.3),
                                          DiscAutomorphism::tau(p)));
    for (int n = 1; n <= 4; ++n) {
        CHECK(decide_derivative_algebra(p, n, fixes));
        CHECK_FALSE(decide_derivative_algebra(p, n, DiscAutomorphism::rotation(0.4)));
    }
    expect_error("invalid-datum", [&] { decide_derivative_algebra(p, 0, fixes); });
    expect_error("invalid-datum", [&] {
        decide_derivative_algebra(Complex(1.2, 0), 1, fixes);
    });
}

TEST_CASE("decisions transfer across rotation conjugation") {
    std::mt19937_64 g(53);
    for (int i = 0; i < 25; ++i) {
        PsiSpec spec = random_spec(g);
        DiscAutomorphism phi =
            (i % 3 == 0) ? DiscAutomorphism() : random_map(g, 0.85);
        DiscAutomorphism rot = DiscAutomorphism::rotation(support::uniform(g, 0.0, 2.0 * M_PI));
        CHECK(check_conjugation_transfer(spec, phi, rot));
    }
    expect_error("non-rotation-conjugator", [&] {
        check_conjugation_transfer(random_spec(g), DiscAutomorphism(),
                                   DiscAutomorphism::tau(Complex(0.4, 0)));
    });
}
