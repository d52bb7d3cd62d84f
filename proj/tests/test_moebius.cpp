#include "test_support.hpp"

using namespace psiaut;
using support::expect_error;
using support::in_disc;
using support::on_circle;
using support::random_map;
using support::same_map;
using support::uniform;

TEST_CASE("identity has the canonical parameters and acts trivially") {
    DiscAutomorphism id;
    CHECK(id.eta() == Complex(-1.0, 0.0));
    CHECK(id.a() == Complex(0.0, 0.0));
    CHECK(is_identity(id));
    Complex z(0.31, -0.2);
    CHECK(std::abs(eval(id, z) - z) < 1e-15);
}

TEST_CASE("rotation and involution act as advertised") {
    DiscAutomorphism quarter = DiscAutomorphism::rotation(M_PI / 2);
    CHECK(std::abs(eval(quarter, Complex(0.5, 0)) - Complex(0, 0.5)) < 1e-15);
    CHECK_FALSE(is_identity(quarter));

    DiscAutomorphism t = DiscAutomorphism::tau(Complex(0.5, 0));
    CHECK(std::abs(eval(t, Complex(0, 0)) - Complex(0.5, 0)) < 1e-15);
    CHECK(std::abs(eval(t, Complex(0.5, 0))) < 1e-15);
    CHECK(std::abs(eval(t, Complex(1, 0)) - Complex(-1, 0)) < 1e-15);
    CHECK(std::abs(eval(t, Complex(-1, 0)) - Complex(1, 0)) < 1e-15);
    CHECK(is_identity(compose(t, t)));
}

TEST_CASE("constructor rejects bad parameters") {
    expect_error("invalid-datum", [] { DiscAutomorphism(Complex(1.5, 0), Complex(0, 0)); });
    expect_error("invalid-datum", [] { DiscAutomorphism(Complex(1, 0), Complex(1.0, 0)); });
    expect_error("invalid-datum", [] {
        DiscAutomorphism(Complex(std::nan(""), 0), Complex(0, 0));
    });
    // A multiplier within the unit tolerance is renormalized to exact modulus 1.
    DiscAutomorphism ok(Complex(1.0 + 5e-10, 0), Complex(0.2, 0));
    CHECK(std::abs(std::abs(ok.eta()) - 1.0) < 1e-15);
}

TEST_CASE("evaluation near the pole is rejected") {
    DiscAutomorphism t = DiscAutomorphism::tau(Complex(0.5, 0));
    expect_error("pole-proximity", [&] { eval(t, Complex(2.0, 0)); });
}

TEST_CASE("composition matches pointwise application") {
    std::mt19937_64 g(11);
    for (int i = 0; i < 100; ++i) {
        DiscAutomorphism f = random_map(g), h = random_map(g);
        DiscAutomorphism fh = compose(f, h);
        for (int k = 0; k < 3; ++k) {
            Complex z = in_disc(g, 0.9);
            CHECK(std::abs(eval(fh, z) - eval(f, eval(h, z))) < 1e-12);
        }
    }
}

TEST_CASE("composition is associative in canonical form") {
    std::mt19937_64 g(12);
    for (int i = 0; i < 100; ++i) {
        DiscAutomorphism f = random_map(g), h = random_map(g), k = random_map(g);
        DiscAutomorphism left = compose(compose(f, h), k);
        DiscAutomorphism right = compose(f, compose(h, k));
        CHECK(same_map(left, right, 1e-11));
    }
}

TEST_CASE("inverse is two-sided and in closed form") {
    std::mt19937_64 g(13);
    for (int i = 0; i < 100; ++i) {
        DiscAutomorphism f = random_map(g);
        CHECK(is_identity(compose(f, inverse(f))));
        CHECK(is_identity(compose(inverse(f), f)));
        DiscAutomorphism round = compose(f, inverse(f));
        CHECK(std::abs(round.eta() - Complex(-1, 0)) < 1e-12);
        CHECK(std::abs(round.a()) < 1e-12);
        Complex z = in_disc(g, 0.8);
        CHECK(std::abs(eval(inverse(f), eval(f, z)) - z) < 1e-11);
    }
}

TEST_CASE("long composition chains stay canonical") {
    std::mt19937_64 g(14);
    DiscAutomorphism acc;
    for (int i = 0; i < 50; ++i) acc = compose(acc, random_map(g));
    CHECK(std::abs(std::abs(acc.eta()) - 1.0) < 1e-12);
    CHECK(std::abs(acc.a()) < 1.0);
}

TEST_CASE("derivative agrees with a finite difference") {
    std::mt19937_64 g(15);
    const double h = 1e-5;
    for (int i = 0; i < 50; ++i) {
        DiscAutomorphism f = random_map(g);
        Complex z = in_disc(g, 0.8);
        Complex fd = (eval(f, z + h) - eval(f, z - h)) / (2.0 * h);
        CHECK(std::abs(fd - derivative(f, z)) < 1e-5);
    }
}

TEST_CASE("derivative of the halving involution at the boundary") {
    DiscAutomorphism t = DiscAutomorphism::tau(Complex(0.5, 0));
    CHECK(std::abs(derivative(t, Complex(1, 0)) - Complex(-3, 0)) < 1e-12);
    CHECK(boundary_derivative_modulus(t, Complex(1, 0)) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(boundary_derivative_modulus(t, Complex(-1, 0)) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("boundary derivative modulus matches the derivative on the circle") {
    std::mt19937_64 g(16);
    for (int i = 0; i < 50; ++i) {
        DiscAutomorphism f = random_map(g);
        Complex w = on_circle(g);
        CHECK(boundary_derivative_modulus(f, w) ==
              doctest::Approx(std::abs(derivative(f, w))).epsilon(1e-11));
    }
}

TEST_CASE("maps preserve the unit circle and the invariant distance") {
    std::mt19937_64 g(17);
    CHECK(pseudo_hyperbolic(Complex(0.5, 0), Complex(-0.5, 0)) ==
          doctest::Approx(0.8).epsilon(1e-15));
    for (int i = 0; i < 100; ++i) {
        DiscAutomorphism f = random_map(g);
        Complex w = on_circle(g);
        CHECK(std::abs(std::abs(eval(f, w)) - 1.0) < 1e-11);
        Complex z1 = in_disc(g, 0.9), z2 = in_disc(g, 0.9);
        CHECK(std::abs(pseudo_hyperbolic(eval(f, z1), eval(f, z2)) -
                       pseudo_hyperbolic(z1, z2)) < 1e-11);
    }
}

TEST_CASE("classification of the catalogue maps") {
    CHECK(classify(DiscAutomorphism()).kind == MoebiusClass::Kind::identity);

    MoebiusClass rot = classify(DiscAutomorphism::rotation(0.7));
    CHECK(rot.kind == MoebiusClass::Kind::elliptic);
    CHECK(std::abs(rot.fixed_points.at(0)) < 1e-12);
    CHECK(rot.multiplier == doctest::Approx(0.7).epsilon(1e-12));

    // The involution exchanging 0 and 1/2 rotates by pi about its interior
    // fixed point 2 - sqrt(3).
    MoebiusClass inv = classify(DiscAutomorphism::tau(Complex(0.5, 0)));
    CHECK(inv.kind == MoebiusClass::Kind::elliptic);
    CHECK(std::abs(inv.fixed_points.at(0) - Complex(2.0 - std::sqrt(3.0), 0)) < 1e-12);
    CHECK(std::abs(std::abs(inv.multiplier) - M_PI) < 1e-9);

    // (z + t)/(1 + t z) attracts to +1 with rate (1 - t)/(1 + t).
    MoebiusClass hyp = classify(DiscAutomorphism(Complex(-1, 0), Complex(-1.0 / 3.0, 0)));
    CHECK(hyp.kind == MoebiusClass::Kind::hyperbolic);
    CHECK(std::abs(hyp.fixed_points.at(0) - Complex(1, 0)) < 1e-9);
    CHECK(std::abs(hyp.fixed_points.at(1) - Complex(-1, 0)) < 1e-9);
    CHECK(hyp.multiplier == doctest::Approx(0.5).epsilon(1e-9));

    // Unit-speed boundary translation fixing 1: parabolic.
    const Complex i3(0, 3);
    DiscAutomorphism para(-(2.0 + i3) / (2.0 - i3), i3 / (2.0 + i3));
    MoebiusClass par = classify(para);
    CHECK(par.kind == MoebiusClass::Kind::parabolic);
    CHECK(std::abs(par.fixed_points.at(0) - Complex(1, 0)) < 1e-9);
    CHECK(par.multiplier == doctest::Approx(1.0));
    CHECK(boundary_derivative_modulus(para, Complex(1, 0)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("iteration converges to the attracting fixed point") {
    // Hyperbolic with contraction 1/2 per step.
    DiscAutomorphism hyp(Complex(-1, 0), Complex(-1.0 / 3.0, 0));
    Complex z(0, 0);
    for (int i = 0; i < 200; ++i) z = eval(hyp, z);
    CHECK(std::abs(z - classify(hyp).fixed_points.at(0)) < 1e-3);

    // Parabolic, fast enough translation to converge at the O(1/n) rate.
    const Complex iz(0, 30);
    DiscAutomorphism par(-(2.0 + iz) / (2.0 - iz), iz / (2.0 + iz));
    z = Complex(0, 0);
    for (int i = 0; i < 200; ++i) z = eval(par, z);
    CHECK(std::abs(z - classify(par).fixed_points.at(0)) < 1e-3);
}

TEST_CASE("interior pair solver recovers the generating map") {
    std::mt19937_64 g(18);
    for (int i = 0; i < 50; ++i) {
        DiscAutomorphism f = random_map(g, 0.8);
        Complex a1 = in_disc(g, 0.7), a2 = in_disc(g, 0.7);
        if (std::abs(a1 - a2) < 0.1) continue;
        auto got = solve_interior_pair(a1, eval(f, a1), a2, eval(f, a2));
        REQUIRE(got.has_value());
        CHECK(std::abs(eval(*got, a1) - eval(f, a1)) < 1e-10);
        CHECK(std::abs(eval(*got, a2) - eval(f, a2)) < 1e-10);
        CHECK(same_map(*got, f, 1e-9));
    }
}

TEST_CASE("interior pair solver rejects incompatible distances") {
    CHECK_FALSE(solve_interior_pair(Complex(0, 0), Complex(0, 0), Complex(0.5, 0),
                                    Complex(0.6, 0))
                    .has_value());
    expect_error("degenerate-input", [] {
        solve_interior_pair(Complex(0.1, 0), Complex(0, 0), Complex(0.1, 0), Complex(0.2, 0));
    });
    expect_error("invalid-datum", [] {
        solve_interior_pair(Complex(1.2, 0), Complex(0, 0), Complex(0.1, 0), Complex(0.2, 0));
    });
}

TEST_CASE("interior-boundary solver recovers the generating map") {
    std::mt19937_64 g(19);
    for (int i = 0; i < 50; ++i) {
        DiscAutomorphism f = random_map(g, 0.8);
        Complex a = in_disc(g, 0.7);
        Complex w = on_circle(g);
        auto got = solve_interior_boundary(a, eval(f, a), w, eval(f, w));
        REQUIRE(got.has_value());
        CHECK(same_map(*got, f, 1e-9));
    }
}

TEST_CASE("boundary triple solver handles the catalogue cases") {
    auto id = solve_boundary_triple(Complex(1, 0), Complex(1, 0), Complex(-1, 0),
                                    Complex(-1, 0), Complex(0, 1), Complex(0, 1));
    REQUIRE(id.has_value());
    CHECK(is_identity(*id));

    auto neg = solve_boundary_triple(Complex(1, 0), Complex(-1, 0), Complex(-1, 0),
                                     Complex(1, 0), Complex(0, 1), Complex(0, -1));
    REQUIRE(neg.has_value());
    CHECK(std::abs(eval(*neg, Complex(0.5, 0)) - Complex(-0.5, 0)) < 1e-12);

    // Orientation-reversing assignment: the Moebius map through these pairs
    // is z -> 1/z, which does not map the disc to itself.
    auto rev = solve_boundary_triple(Complex(1, 0), Complex(1, 0), Complex(-1, 0),
                                     Complex(-1, 0), Complex(0, 1), Complex(0, -1));
    CHECK_FALSE(rev.has_value());

    expect_error("degenerate-input", [] {
        solve_boundary_triple(Complex(1, 0), Complex(1, 0), Complex(1, 0), Complex(-1, 0),
                              Complex(0, 1), Complex(0, 1));
    });
}

TEST_CASE("boundary triple solver recovers random maps") {
    std::mt19937_64 g(20);
    for (int i = 0; i < 50; ++i) {
        DiscAutomorphism f = random_map(g, 0.8);
        Complex w1 = on_circle(g);
        Complex w2 = w1 * std::polar(1.0, uniform(g, 0.3, 2.0));
        Complex w3 = w2 * std::polar(1.0, uniform(g, 0.3, 2.0));
        auto got = solve_boundary_triple(w1, eval(f, w1), w2, eval(f, w2), w3, eval(f, w3));
        REQUIRE(got.has_value());
        CHECK(same_map(*got, f, 1e-9));
    }
}

TEST_CASE("circle projection is exact and guarded") {
    Complex w = project_to_circle(Complex(1.0 + 5e-10, 0));
    CHECK(std::abs(w) == doctest::Approx(1.0).epsilon(1e-16));
    expect_error("modulus-out-of-range", [] { project_to_circle(Complex(0.9, 0)); });
    expect_error("modulus-out-of-range", [] { project_to_circle(Complex(1.1, 0)); });
}
