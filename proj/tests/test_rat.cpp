#include "k3fib/rat.hpp"

#include <doctest.h>

using namespace k3fib;

TEST_CASE("rationals stay canonical") {
    Rat a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    Rat b(3, -6);
    CHECK(b == Rat(-1, 2));
    CHECK(b.den() == 2);
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("exact arithmetic never rounds") {
    // (a/b) + (c/d) reconstructed from integers
    Rat a(1, 3), b(1, 6);
    Rat s = a + b;
    CHECK(s == Rat(1, 2));
    CHECK(s.num() * 6 == s.den() * 3);
    Rat big = Rat(1, 1000000007) * Rat(1, 998244353);
    CHECK(big.den() == mpz_class("998244353") * 1000000007);
}

TEST_CASE("parse and print round trip") {
    CHECK(Rat::parse("3/2").str() == "3/2");
    CHECK(Rat::parse("-7").str() == "-7");
    CHECK(Rat::parse("4/8").str() == "1/2");
    CHECK_THROWS(Rat::parse("x"));
    CHECK(Rat(5).str() == "5");
    CHECK(Rat(-5, 10).str() == "-1/2");
}

TEST_CASE("pow and inverse") {
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(0).pow(0) == Rat(1));
    CHECK_THROWS_AS(Rat(0).inv(), std::domain_error);
}

TEST_CASE("exact k-th roots") {
    CHECK(*rat_kth_root(Rat(8, 27), 3) == Rat(2, 3));
    CHECK(*rat_kth_root(Rat(-8), 3) == Rat(-2));
    CHECK(!rat_kth_root(Rat(-4), 2));
    CHECK(!rat_kth_root(Rat(2), 2));
    CHECK(*rat_kth_root(Rat(729, 64), 6) == Rat(3, 2));
}
