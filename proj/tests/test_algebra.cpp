#include <doctest.h>

#include <numbers>
#include <random>

#include "spanpoly/algebra.hpp"
#include "spanpoly/error.hpp"
#include "spanpoly/roots.hpp"
#include "test_util.hpp"

using namespace spanpoly;
using testutil::random_rational;
using testutil::random_rational_poly;

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(24, 12) == BigInt("2704156"));
}

TEST_CASE("elem_sym examples") {
    std::vector<Scalar> vals{Scalar(7), Scalar(8), Scalar(9)};
    CHECK(elem_sym(0, vals) == Scalar(1));
    std::vector<Scalar> abc{Scalar(2), Scalar(3), Scalar(5)};
    CHECK(elem_sym(3, abc) == Scalar(30));  // product
    std::vector<Scalar> v123{Scalar(1), Scalar(2), Scalar(3)};
    CHECK(elem_sym(2, v123) == Scalar(11));
    CHECK_THROWS_AS(elem_sym(4, v123), Error);
}

TEST_CASE("polarize examples") {
    SUBCASE("z^2 at d=2 is z1 z2") {
        MultiPoly p = polarize(UniPoly{Scalar(0), Scalar(0), Scalar(1)}, 2);
        CHECK(p.terms().size() == 1);
        CHECK(p.coeff(DegreeVector::single(0, 1).incremented(1, 1)) == Scalar(1));
    }
    SUBCASE("(1+z)^2 polarization has unit coefficients") {
        MultiPoly p = polarize(UniPoly{Scalar(1), Scalar(2), Scalar(1)}, 2);
        CHECK(p.terms().size() == 4);
        for (const auto& t : p.terms()) CHECK(t.coeff == Scalar(1));
    }
    SUBCASE("1+3z at d=3: binom(3,1) cancels") {
        MultiPoly p = polarize(UniPoly{Scalar(1), Scalar(3)}, 3);
        CHECK(p.terms().size() == 4);
        CHECK(p.coeff(DegreeVector{}) == Scalar(1));
        for (unsigned v = 0; v < 3; ++v) CHECK(p.coeff(DegreeVector::single(v, 1)) == Scalar(1));
    }
    SUBCASE("degree above d errors") {
        CHECK_THROWS_AS(polarize(UniPoly{Scalar(1), Scalar(0), Scalar(1)}, 1), Error);
    }
    SUBCASE("d above the cap errors") {
        CHECK_THROWS_AS(polarize(UniPoly{Scalar(1)}, 21), Error);
    }
}

TEST_CASE("polarization round-trips exactly on random rational polynomials") {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned d = 1 + static_cast<unsigned>(rng() % 8);
        unsigned deg = static_cast<unsigned>(rng() % (d + 1));
        UniPoly p = random_rational_poly(rng, deg);
        MultiPoly tilde = polarize(p, d);
        // set all variables equal: substitute one by one with z symbolic is
        // equivalent to grading by total degree with all x_v = z
        std::vector<Scalar> diag(d + 1, Scalar(0));
        for (const auto& t : tilde.terms()) diag[t.exp.total_degree()] += t.coeff;
        CHECK(UniPoly(std::move(diag)) == p);
    }
}

TEST_CASE("polarization output is multiaffine and symmetric") {
    std::mt19937_64 rng(7002);
    UniPoly p = random_rational_poly(rng, 5);
    unsigned d = 6;
    MultiPoly tilde = polarize(p, d);
    for (const auto& t : tilde.terms())
        for (const auto& [v, e] : t.exp.entries()) CHECK(e == 1);

    // symmetry: permuting variables fixes the polynomial
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<VertexId> perm(d);
        for (unsigned i = 0; i < d; ++i) perm[i] = i;
        for (unsigned i = d; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
        TermAccumulator acc;
        for (const auto& t : tilde.terms()) {
            DegreeVector moved;
            for (const auto& [v, e] : t.exp.entries()) moved = moved.incremented(perm[v], e);
            acc.emplace(std::move(moved), t.coeff);
        }
        MultiPoly permuted = MultiPoly::from_accumulator(tilde.vars(), std::move(acc));
        CHECK(permuted == tilde);
    }
}

TEST_CASE("Grace-Szego-Walsh sampling: polarization preserves S[pi/2]-nonvanishing") {
    std::mt19937_64 rng(7003);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int instances = 0, points_checked = 0;
    while (instances < 30) {
        unsigned d = 2 + static_cast<unsigned>(rng() % 5);
        // roots with |arg| >= pi/2 (closed left half plane, conjugate pairs)
        std::vector<Complex> roots;
        while (roots.size() < d) {
            double re = -3.0 * unit(rng);
            double im = 2.0 * unit(rng) - 1.0;
            if (roots.size() + 2 <= d && std::abs(im) > 1e-3) {
                roots.emplace_back(re, im);
                roots.emplace_back(re, -im);
            } else {
                roots.emplace_back(re, 0.0);
            }
        }
        UniPoly p = testutil::to_unipoly(testutil::poly_from_roots(roots));
        MultiPoly tilde = polarize(p, d);
        ++instances;
        for (int k = 0; k < 200; ++k) {
            std::unordered_map<VertexId, Complex> point;
            for (unsigned v = 0; v < d; ++v) {
                double r = std::pow(10.0, -1.0 + 2.0 * unit(rng));
                double a = (std::numbers::pi / 2.0) * (2.0 * unit(rng) - 1.0) * 0.999;
                point[v] = std::polar(r, a);
            }
            auto ev = tilde.eval(point);
            CHECK(std::abs(ev.value) > 1e-12 * ev.max_term_magnitude);
            ++points_checked;
        }
    }
    CHECK(points_checked == instances * 200);
}

TEST_CASE("schur_szego examples") {
    SUBCASE("all-ones activities are the identity") {
        UniPoly p{Scalar(1), Scalar(1)};
        std::vector<Scalar> u(3, Scalar(1));
        CHECK(schur_szego(p, u, 2) == p);
    }
    SUBCASE("zero activities truncate (1+y)^3") {
        UniPoly p{Scalar(1), Scalar(3), Scalar(3), Scalar(1)};
        std::vector<Scalar> u{Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
        CHECK(schur_szego(p, u, 3) == UniPoly{Scalar(1), Scalar(3)});
    }
    SUBCASE("two-edge star, matching activities at the center") {
        // star u - c - w with weights 3 and 1; omega as a polynomial in the
        // center variable with the leaves set to 1 is 1 + (3+1) z + 3 z^2.
        // Oracle: enumerate the 4 subgraphs under Eq-style weights with the
        // center constrained to degree <= 1: {} -> 1, {e1} -> 3, {e2} -> 1,
        // {e1,e2} killed. So the composition must be 1 + 4z.
        UniPoly p{Scalar(1), Scalar(4), Scalar(3)};
        std::vector<Scalar> u{Scalar(1), Scalar(1), Scalar(0)};
        UniPoly q = schur_szego(p, u, 2);
        CHECK(q == UniPoly{Scalar(1), Scalar(4)});
    }
    SUBCASE("length mismatch and degree overflow error") {
        UniPoly p{Scalar(1), Scalar(1), Scalar(1)};
        std::vector<Scalar> u{Scalar(1), Scalar(1)};
        CHECK_THROWS_AS(schur_szego(p, u, 2), Error);
        CHECK_THROWS_AS(schur_szego(p, std::vector<Scalar>(2, Scalar(1)), 1), Error);
    }
}

TEST_CASE("schur_szego region containment via roots (sector clause)") {
    std::mt19937_64 rng(7004);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        unsigned d = 2 + static_cast<unsigned>(rng() % 4);
        // P: S[pi/2]-nonvanishing (roots in the closed left half plane)
        std::vector<Complex> proots;
        while (proots.size() < d) {
            double re = -2.0 * unit(rng) - 0.01;
            double im = unit(rng);
            if (proots.size() + 2 <= d && im > 1e-3) {
                proots.emplace_back(re, im);
                proots.emplace_back(re, -im);
            } else {
                proots.emplace_back(re, 0.0);
            }
        }
        UniPoly p = testutil::to_unipoly(testutil::poly_from_roots(proots));
        // K: S[pi]-nonvanishing with nonnegative coefficients: prod(1 + t_i z)
        std::vector<Scalar> kcoeffs{Scalar(1)};
        {
            UniPoly k{Scalar(1)};
            for (unsigned i = 0; i < d; ++i) {
                double t = 2.0 * unit(rng);
                k = k * UniPoly{Scalar(1), Scalar(t)};
            }
            kcoeffs = k.coeffs();
        }
        std::vector<Scalar> u(d + 1, Scalar(0));
        for (unsigned j = 0; j <= d; ++j)
            u[j] = Scalar(kcoeffs[j].to_complex().real() /
                          static_cast<double>(binomial(d, j).convert_to<double>()));
        UniPoly q = schur_szego(p, u, d);
        if (q.degree() < 1) continue;
        RootSet roots = find_roots(q);
        for (const auto& root : roots.roots)
            CHECK(std::abs(std::arg(root.value)) >= std::numbers::pi / 2.0 - 1e-8);
    }
}
