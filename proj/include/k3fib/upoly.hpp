#pragma once

#include "k3fib/mpoly.hpp"
#include "k3fib/rat.hpp"

#include <utility>
#include <vector>

namespace k3fib {

// Dense univariate polynomial over Rat; c[k] is the coefficient of x^k.
// Trailing zeros are always trimmed.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit UPoly(const Rat& c0) : c_{c0} { trim(); }
    static UPoly x(uint32_t power = 1);

    const std::vector<Rat>& coeffs() const { return c_; }
    long deg() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }
    Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    void set_coeff(size_t k, const Rat& v);

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator*(const Rat& s) const;
    UPoly operator/(const Rat& s) const;
    UPoly pow(unsigned e) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly derivative() const;
    Rat eval(const Rat& x) const;
    // p(s*x) and x^N * p(s/x)
    UPoly scale_arg(const Rat& s) const;
    UPoly reverse_scale(uint32_t N, const Rat& s) const;
    UPoly shift_up(uint32_t k) const;  // * x^k

    // Field division: returns (quotient, remainder).
    std::pair<UPoly, UPoly> divrem(const UPoly& d) const;
    UPoly exact_div(const UPoly& d) const;  // throws internal_error on remainder
    bool divides(const UPoly& d) const;

    // Multiplicity of d in *this (d non-constant); 0 if no division.
    int valuation(const UPoly& d) const;

    MPoly to_mpoly(const std::string& var) const;
    // All variables of p other than var must be absent.
    static UPoly from_mpoly(const MPoly& p, const std::string& var);

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Rat> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// Monic gcd over Q (primitive-PRS over Z internally).
UPoly gcd(const UPoly& a, const UPoly& b);

// Yun squarefree decomposition: list of (factor, multiplicity) with factors
// pairwise coprime and squarefree, product*unit == input.
struct USquarefree {
    Rat unit;
    std::vector<std::pair<UPoly, int>> parts;
};
USquarefree squarefree_decompose(const UPoly& p);

// Resultant via Sylvester + fraction-free Bareiss over Z after clearing
// denominators. Requires deg p, deg q >= 1.
Rat resultant(const UPoly& p, const UPoly& q);
// (-1)^(n(n-1)/2) Res(p,p')/lc(p), n = deg p >= 2.
Rat discriminant(const UPoly& p);

// Full factorization into Q-irreducibles (Zassenhaus). Factors are primitive
// integer polynomials with positive leading coefficient.
struct UFactorization {
    Rat unit;
    std::vector<std::pair<UPoly, int>> factors;
};
UFactorization factor(const UPoly& p);

// Rational roots (from the linear factors of the factorization).
std::vector<Rat> rational_roots(const UPoly& p);

// Unique interpolating polynomial of degree < points.size().
UPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

}  // namespace k3fib
