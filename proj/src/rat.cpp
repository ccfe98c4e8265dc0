#include "k3fib/rat.hpp"

namespace k3fib {

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(mpz_class(s));
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
    }
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rat::pow: 0 to negative power");
        return Rat(0);
    }
    Rat base = e < 0 ? inv() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    return Rat(n, d);
}

std::string Rat::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

size_t Rat::hash() const {
    auto h = static_cast<size_t>(mpz_get_si(q_.get_num().get_mpz_t()));
    auto h2 = static_cast<size_t>(mpz_get_si(q_.get_den().get_mpz_t()));
    return h * 0x9e3779b97f4a7c15ULL + h2;
}

std::optional<Rat> rat_kth_root(const Rat& x, unsigned k) {
    if (k == 0) throw std::invalid_argument("rat_kth_root: k = 0");
    if (k == 1) return x;
    if (x.is_zero()) return Rat(0);
    if (x.sign() < 0 && k % 2 == 0) return std::nullopt;
    mpz_class n = x.num(), d = x.den();
    bool neg = n < 0;
    if (neg) n = -n;
    mpz_class rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k);
    int exact_d = mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k);
    if (!exact_n || !exact_d) return std::nullopt;
    if (neg) rn = -rn;
    return Rat(rn, rd);
}

}  // namespace k3fib
