#include "k3fib/mpoly.hpp"
#include "k3fib/upoly.hpp"

#include <doctest.h>

#include <random>

using namespace k3fib;

namespace {

UPoly up(std::vector<long> coeffs) {
    std::vector<Rat> c;
    for (auto x : coeffs) c.emplace_back(x);
    return UPoly(std::move(c));
}

UPoly random_upoly(std::mt19937_64& rng, int deg) {
    std::vector<Rat> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 19) - 9);
    if (c.back().is_zero()) c.back() = Rat(1);
    return UPoly(std::move(c));
}

// 3x3 determinant by explicit cofactor expansion: the hand oracle for the
// resultant of a quadratic and a linear polynomial
Rat det3(const Rat m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST_CASE("resultant of x^2-1 and x-2 against the Sylvester oracle") {
    // Sylvester matrix of (x^2 - 1, x - 2): one row of p, two rows of q
    const Rat syl[3][3] = {{Rat(1), Rat(0), Rat(-1)},
                           {Rat(1), Rat(-2), Rat(0)},
                           {Rat(0), Rat(1), Rat(-2)}};
    Rat oracle = det3(syl);
    CHECK(oracle == Rat(3));
    CHECK(resultant(up({-1, 0, 1}), up({-2, 1})) == oracle);
}

TEST_CASE("resultant vanishes iff there is a common factor") {
    UPoly p = up({-1, 1}) * up({2, 1});   // (x-1)(x+2)
    UPoly q = up({-1, 1}) * up({-5, 1});  // (x-1)(x-5)
    CHECK(resultant(p, q) == Rat(0));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        UPoly a = random_upoly(rng, 3), b = random_upoly(rng, 4);
        bool res_zero = resultant(a, b).is_zero();
        bool common = gcd(a, b).deg() > 0;
        CHECK(res_zero == common);
    }
}

TEST_CASE("Res_t(t-a, t-b) = a - b in this sign convention") {
    // 2x2 determinant oracle: det [[1, -a], [1, -b]] = a - b
    MPoly t = MPoly::var("t"), a = MPoly::var("a1"), b = MPoly::var("b1");
    MPoly r = resultant(t - a, t - b, "t");
    CHECK(r == a - b);
}

TEST_CASE("discriminant formulas") {
    MPoly x = MPoly::var("x"), b = MPoly::var("b"), c = MPoly::var("c");
    CHECK(discriminant(x * x + b * x + c, "x") == b * b - MPoly(Rat(4)) * c);
    UPoly sq = up({1, -1}) * up({1, -1});
    CHECK(discriminant(sq) == Rat(0));
    CHECK(discriminant(up({-1, 0, 1})) == Rat(4));  // x^2 - 1
}

TEST_CASE("disc(pq) = disc(p) disc(q) Res(p,q)^2 exactly") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        UPoly p = random_upoly(rng, 2 + static_cast<int>(rng() % 3));
        UPoly q = random_upoly(rng, 2 + static_cast<int>(rng() % 3));
        Rat lhs = discriminant(p * q);
        Rat rhs = discriminant(p) * discriminant(q) * resultant(p, q).pow(2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("squarefree decomposition") {
    MPoly t = MPoly::var("t");
    MPoly p = (t - MPoly(Rat(1))).pow(2) * (t + MPoly(Rat(2)));
    auto f = squarefree_factor(p, "t");
    REQUIRE(f.factors.size() == 2);
    CHECK(f.expand() == p);
    bool saw1 = false, saw2 = false;
    for (auto& [fac, m] : f.factors) {
        if (m == 2) {
            saw2 = true;
            CHECK(fac == t - MPoly(Rat(1)));
        }
        if (m == 1) {
            saw1 = true;
            CHECK(fac == t + MPoly(Rat(2)));
        }
    }
    CHECK(saw1);
    CHECK(saw2);

    // squarefree input comes back in one multiplicity-1 block
    MPoly q = t.pow(3) - t + MPoly(Rat(5));
    auto g = squarefree_factor(q, "t");
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].second == 1);
    CHECK(g.expand() == q);
}

TEST_CASE("rational factorization basics") {
    MPoly t = MPoly::var("t");
    auto f = factor_rational(t * t - MPoly(Rat(1)), "t");
    REQUIRE(f.factors.size() == 2);
    CHECK(f.expand() == t * t - MPoly(Rat(1)));

    auto g = factor_rational(t * t + MPoly(Rat(1)), "t");
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].second == 1);
    CHECK(g.factors[0].first.degree_in("t") == 2);
}

TEST_CASE("factorization reassembles random products") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
        UPoly prod(Rat(1));
        int k = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < k; ++j) {
            UPoly f = random_upoly(rng, 1 + static_cast<int>(rng() % 3));
            int mult = 1 + static_cast<int>(rng() % 2);
            prod = prod * f.pow(static_cast<unsigned>(mult));
        }
        auto fac = factor(prod);
        UPoly re(fac.unit);
        for (auto& [f, m] : fac.factors) {
            re = re * f.pow(static_cast<unsigned>(m));
            // primitive integer factors, positive leading coefficient
            CHECK(f.lc() > Rat(0));
            for (auto& c : f.coeffs()) CHECK(c.is_integer());
        }
        CHECK(re == prod);
        // irreducibility spot check: no factor splits further at degree 1
        for (auto& [f, m] : fac.factors) {
            (void)m;
            if (f.deg() >= 2) CHECK(rational_roots(f).empty());
        }
    }
}

TEST_CASE("interpolation matches evaluation") {
    std::vector<std::pair<Rat, Rat>> pts = {
        {Rat(0), Rat(1)}, {Rat(1), Rat(2)}, {Rat(2), Rat(9)}, {Rat(-1), Rat(0)}};
    UPoly p = interpolate(pts);
    for (auto& [x, y] : pts) CHECK(p.eval(x) == y);
    CHECK(p.deg() <= 3);
}

TEST_CASE("valuation and exact division") {
    UPoly t = UPoly::x();
    UPoly p = t.pow(3) * up({1, 1});
    CHECK(p.valuation(t) == 3);
    CHECK(p.valuation(up({1, 1})) == 1);
    CHECK(p.exact_div(t.pow(3)) == up({1, 1}));
    CHECK_THROWS_AS(up({1, 1}).exact_div(t), internal_error);
}
