#include "k3fib/mpoly.hpp"

#include <doctest.h>

#include <random>

using namespace k3fib;

namespace {

MPoly X() { return MPoly::var("x"); }
MPoly Y() { return MPoly::var("y"); }

MPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms,
                  uint32_t maxexp) {
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        ExpVec e;
        for (size_t v = 0; v < vars.size(); ++v)
            e.push_back(static_cast<uint32_t>(rng() % (maxexp + 1)));
        long num = static_cast<long>(rng() % 21) - 10;
        ts.push_back({e, Rat(num, static_cast<long>(rng() % 5) + 1)});
    }
    return MPoly::make(vars, ts);
}

}  // namespace

TEST_CASE("difference of squares") {
    CHECK((X() + Y()) * (X() - Y()) == X() * X() - Y() * Y());
}

TEST_CASE("zero absorbs") {
    MPoly p = X() * Y() + MPoly(Rat(3));
    CHECK((p * MPoly(Rat(0))).is_zero());
}

TEST_CASE("binomial cube against a repeated-multiplication oracle") {
    MPoly base = X() + MPoly(Rat(1));
    MPoly oracle = base * base * base;  // independent route
    CHECK(base.pow(3) == oracle);
    MPoly expect = MPoly::make(
        {"x"}, {{{3}, Rat(1)}, {{2}, Rat(3)}, {{1}, Rat(3)}, {{0}, Rat(1)}});
    CHECK(oracle == expect);
}

TEST_CASE("substitution examples") {
    MPoly p = MPoly::var("x", 2);
    MPoly uv = MPoly::var("u") * MPoly::var("v");
    CHECK(p.substitute({{"x", uv}}) == uv * uv);

    // chart restriction (u, v) -> (t, 1)
    MPoly f = MPoly::var("u", 2) * MPoly::var("v") + MPoly::var("v", 3);
    MPoly ft = f.substitute({{"u", MPoly::var("t")}, {"v", MPoly(Rat(1))}});
    CHECK(ft == MPoly::var("t", 2) + MPoly(Rat(1)));

    // unbound variables pass through
    MPoly g = X() * Y();
    CHECK(g.substitute({{"x", MPoly(Rat(2))}}) == Y() * Rat(2));
    CHECK_THROWS_AS(g.substitute({{"q", X()}}), std::invalid_argument);
}

TEST_CASE("variable sets auto-extend to the union") {
    MPoly p = X();
    MPoly q = Y();
    MPoly s = p + q;
    CHECK(s.vars() == std::vector<std::string>{"x", "y"});
    CHECK(s.degree_in("x") == 1);
    CHECK(s.degree_in("y") == 1);
}

TEST_CASE("exponent overflow is a hard error") {
    MPoly p = MPoly::var("x", 3000000000u);
    CHECK_THROWS_AS(p * p, std::overflow_error);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 30; ++i) {
        MPoly p = random_poly(rng, {"x", "y"}, 4, 3);
        MPoly q = random_poly(rng, {"y", "z"}, 4, 3);
        MPoly r = random_poly(rng, {"x", "z"}, 4, 3);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("substitute is a ring homomorphism") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        MPoly p = random_poly(rng, {"x", "y"}, 4, 3);
        MPoly q = random_poly(rng, {"x", "y"}, 4, 3);
        std::map<std::string, MPoly> b = {{"x", random_poly(rng, {"u"}, 3, 2)},
                                          {"y", random_poly(rng, {"u", "x"}, 3, 2)}};
        CHECK((p * q).substitute(b) == p.substitute(b) * q.substitute(b));
        CHECK((p + q).substitute(b) == p.substitute(b) + q.substitute(b));
    }
}

TEST_CASE("exact division") {
    MPoly p = (X() + Y()).pow(3);
    auto q = p.try_divide(X() + Y());
    REQUIRE(q.has_value());
    CHECK(*q == (X() + Y()).pow(2));
    CHECK(!p.try_divide(X() - Y()).has_value());
}

TEST_CASE("string form uses graded-lex descending order") {
    MPoly p = X() * X() - Y() * Rat(2) + MPoly(Rat(1));
    CHECK(p.str() == "x^2 - 2*y + 1");
}
