#pragma once

#include "k3fib/rat.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace k3fib {

// Signals a broken internal invariant (failed exact division, a valuation
// triple outside the Kodaira table, ...) as opposed to bad user input.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& m) : std::runtime_error(m) {}
};

using ExpVec = std::vector<uint32_t>;

struct Term {
    ExpVec exp;
    Rat coef;
};

// Sparse multivariate polynomial over Rat with a named, sorted variable set.
// Terms are kept in graded-lexicographic descending order and never carry a
// zero coefficient. Arithmetic between polynomials with different variable
// sets auto-extends both to the union.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(const Rat& c);
    explicit MPoly(long c) : MPoly(Rat(c)) {}

    static MPoly var(const std::string& name, uint32_t power = 1);
    static MPoly constant(const Rat& c, std::vector<std::string> vars);
    // Terms need not be sorted or combined; normalization happens here.
    static MPoly make(std::vector<std::string> vars, std::vector<Term> terms);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // throws unless constant

    long total_degree() const;  // -1 for the zero polynomial
    long degree_in(const std::string& v) const;
    bool depends_on(const std::string& v) const { return degree_in(v) > 0; }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly operator*(const Rat& c) const;
    MPoly operator/(const Rat& c) const;
    MPoly pow(unsigned e) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly derivative(const std::string& v) const;
    // Coefficient of v^k, as a polynomial in the remaining variables (the
    // variable list keeps v with exponent 0).
    MPoly coeff_in(const std::string& v, uint32_t k) const;
    std::vector<MPoly> coeffs_in(const std::string& v) const;

    // Every bound variable must occur in the variable list; unbound
    // variables pass through.
    MPoly substitute(const std::map<std::string, MPoly>& bindings) const;
    MPoly specialize(const std::map<std::string, Rat>& values) const;
    Rat eval(const std::map<std::string, Rat>& values) const;

    // v^N * p(s/v): exponent flip used by the t -> J6/t chart maps.
    // Requires N >= deg_v(p).
    MPoly reverse_scale(const std::string& v, uint32_t N, const MPoly& s) const;

    // Exact division; nullopt when the divisor does not divide exactly.
    std::optional<MPoly> try_divide(const MPoly& d) const;

    Rat content() const;            // positive gcd of coefficients (0 for 0)
    MPoly primitive_part() const;   // integer coefficients, content 1, lc > 0

    MPoly with_vars(const std::vector<std::string>& vs) const;
    static void unify(MPoly& a, MPoly& b);

    std::string str() const;

private:
    std::vector<std::string> vars_;      // sorted, unique
    std::vector<Term> terms_;            // graded-lex descending, no zeros
    void normalize();
};

inline std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

struct Factorization {
    Rat unit;
    std::vector<std::pair<MPoly, int>> factors;  // irreducible, multiplicity
    MPoly expand() const;
};

// Determinant of the Sylvester matrix in v, by fraction-free (Bareiss)
// elimination; both inputs must have positive degree in v.
MPoly resultant(const MPoly& p, const MPoly& q, const std::string& v);

// (-1)^(n(n-1)/2) Res_v(p, p') / lc_v(p) with n = deg_v(p) >= 2; the exact
// division is checked.
MPoly discriminant(const MPoly& p, const std::string& v);

// Squarefree decomposition in v (gcd-based); input must be univariate in v
// over Rat, as must factor_rational.
Factorization squarefree_factor(const MPoly& p, const std::string& v);
Factorization factor_rational(const MPoly& p, const std::string& v);

}  // namespace k3fib
