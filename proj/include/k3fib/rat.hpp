#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace k3fib {

// Exact rational number backed by GMP; always in lowest terms with a
// positive denominator (mpq canonical form).
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<long int>(n)) {}
    Rat(long n, long d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        q_ = mpq_class(mpz_class(n), mpz_class(d));
        q_.canonicalize();
    }
    explicit Rat(const mpz_class& z) : q_(z) {}
    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p", "p/q", optional leading '-'.
    static Rat parse(const std::string& s);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(1) / q_);
    }
    Rat pow(long e) const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    // "p/q", or "p" when the denominator is 1.
    std::string str() const;
    size_t hash() const;

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

// Exact k-th root when one exists in Q (k >= 1).
std::optional<Rat> rat_kth_root(const Rat& x, unsigned k);

}  // namespace k3fib
