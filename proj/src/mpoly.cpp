#include "k3fib/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace k3fib {

namespace {

uint64_t total_deg(const ExpVec& e) {
    uint64_t s = 0;
    for (auto x : e) s += x;
    return s;
}

// graded-lex: higher total degree first, ties broken lexicographically on
// the exponent vector (earlier variable wins).
bool grlex_greater(const ExpVec& a, const ExpVec& b) {
    uint64_t da = total_deg(a), db = total_deg(b);
    if (da != db) return da > db;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

struct ExpHash {
    size_t operator()(const ExpVec& e) const {
        size_t h = 1469598103934665603ULL;
        for (auto x : e) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

ExpVec add_exp(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t s = static_cast<uint64_t>(a[i]) + b[i];
        if (s > 0xffffffffULL) throw std::overflow_error("MPoly: exponent overflow");
        r[i] = static_cast<uint32_t>(s);
    }
    return r;
}

}  // namespace

MPoly::MPoly(const Rat& c) {
    if (!c.is_zero()) terms_.push_back({{}, c});
}

MPoly MPoly::var(const std::string& name, uint32_t power) {
    MPoly p;
    p.vars_ = {name};
    if (power == 0) return MPoly(Rat(1));
    p.terms_.push_back({{power}, Rat(1)});
    return p;
}

MPoly MPoly::constant(const Rat& c, std::vector<std::string> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    MPoly p;
    p.vars_ = std::move(vars);
    if (!c.is_zero()) p.terms_.push_back({ExpVec(p.vars_.size(), 0), c});
    return p;
}

MPoly MPoly::make(std::vector<std::string> vars, std::vector<Term> terms) {
    MPoly p;
    std::vector<std::string> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != vars.size()) throw std::invalid_argument("MPoly::make: duplicate variable");
    // remap exponents to the sorted order
    std::vector<size_t> pos(vars.size());
    for (size_t i = 0; i < vars.size(); ++i)
        pos[i] = std::lower_bound(sorted.begin(), sorted.end(), vars[i]) - sorted.begin();
    p.vars_ = std::move(sorted);
    for (auto& t : terms) {
        if (t.exp.size() != vars.size()) throw std::invalid_argument("MPoly::make: exponent arity");
        ExpVec e(p.vars_.size(), 0);
        for (size_t i = 0; i < vars.size(); ++i) e[pos[i]] = t.exp[i];
        p.terms_.push_back({std::move(e), t.coef});
    }
    p.normalize();
    return p;
}

void MPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_greater(a.exp, b.exp); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exp == t.exp)
            out.back().coef += t.coef;
        else
            out.push_back(t);
        if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_deg(terms_[0].exp) == 0);
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::invalid_argument("MPoly: not a constant");
    return terms_[0].coef;
}

long MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(total_deg(terms_[0].exp));
}

long MPoly::degree_in(const std::string& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return terms_.empty() ? -1 : 0;
    size_t idx = it - vars_.begin();
    long d = -1;
    for (auto& t : terms_) d = std::max(d, static_cast<long>(t.exp[idx]));
    return d;
}

MPoly MPoly::with_vars(const std::vector<std::string>& vs) const {
    // vs must be a sorted superset of vars_
    MPoly r;
    r.vars_ = vs;
    std::vector<size_t> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(vs.begin(), vs.end(), vars_[i]);
        if (it == vs.end() || *it != vars_[i])
            throw std::invalid_argument("MPoly::with_vars: missing variable " + vars_[i]);
        pos[i] = it - vs.begin();
    }
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) {
        ExpVec e(vs.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i) e[pos[i]] = t.exp[i];
        r.terms_.push_back({std::move(e), t.coef});
    }
    r.normalize();
    return r;
}

void MPoly::unify(MPoly& a, MPoly& b) {
    if (a.vars_ == b.vars_) return;
    std::vector<std::string> u;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(u));
    a = a.with_vars(u);
    b = b.with_vars(u);
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    MPoly rhs = o;
    unify(*this, rhs);
    terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    normalize();
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        MPoly z;
        MPoly a2 = a, b2 = b;
        MPoly::unify(a2, b2);
        return MPoly::constant(Rat(0), a2.vars());
    }
    MPoly x = a, y = b;
    MPoly::unify(x, y);
    std::unordered_map<ExpVec, Rat, ExpHash> acc;
    acc.reserve(x.size() * 2);
    for (auto& ta : x.terms())
        for (auto& tb : y.terms()) {
            ExpVec e = add_exp(ta.exp, tb.exp);
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(std::move(e), ta.coef * tb.coef);
            else
                it->second += ta.coef * tb.coef;
        }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) ts.push_back({e, c});
    MPoly r;
    r = MPoly::constant(Rat(0), x.vars());
    r.terms_ = std::move(ts);
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& s, const Term& t) { return grlex_greater(s.exp, t.exp); });
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    if (c.is_zero()) return MPoly::constant(Rat(0), vars_);
    MPoly r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

MPoly MPoly::operator/(const Rat& c) const {
    if (c.is_zero()) throw std::domain_error("MPoly: division by zero scalar");
    return *this * c.inv();
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = MPoly::constant(Rat(1), vars_);
    MPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    MPoly a = *this, b = o;
    unify(a, b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coef != b.terms_[i].coef)
            return false;
    return true;
}

MPoly MPoly::derivative(const std::string& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return MPoly::constant(Rat(0), vars_);
    size_t idx = it - vars_.begin();
    MPoly r;
    r.vars_ = vars_;
    for (auto& t : terms_) {
        if (t.exp[idx] == 0) continue;
        Term nt = t;
        nt.coef *= Rat(static_cast<long>(t.exp[idx]));
        nt.exp[idx] -= 1;
        r.terms_.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

MPoly MPoly::coeff_in(const std::string& v, uint32_t k) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v)
        return k == 0 ? *this : MPoly::constant(Rat(0), vars_);
    size_t idx = it - vars_.begin();
    MPoly r;
    r.vars_ = vars_;
    for (auto& t : terms_) {
        if (t.exp[idx] != k) continue;
        Term nt = t;
        nt.exp[idx] = 0;
        r.terms_.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

std::vector<MPoly> MPoly::coeffs_in(const std::string& v) const {
    long d = degree_in(v);
    std::vector<MPoly> out;
    for (long k = 0; k <= std::max(d, 0L); ++k)
        out.push_back(coeff_in(v, static_cast<uint32_t>(k)));
    return out;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& bindings) const {
    for (auto& [v, _] : bindings)
        if (!std::binary_search(vars_.begin(), vars_.end(), v))
            throw std::invalid_argument("substitute: variable " + v + " not present");
    // power cache per bound variable
    std::vector<std::vector<MPoly>> powers(vars_.size());
    std::vector<const MPoly*> bound(vars_.size(), nullptr);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = bindings.find(vars_[i]);
        if (it != bindings.end()) bound[i] = &it->second;
    }

    MPoly acc;
    for (auto& t : terms_) {
        MPoly term_poly(t.coef);
        ExpVec residual(vars_.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (t.exp[i] == 0) continue;
            if (!bound[i]) {
                residual[i] = t.exp[i];
                continue;
            }
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(MPoly(Rat(1)));
            while (pw.size() <= t.exp[i]) pw.push_back(pw.back() * (*bound[i]));
            term_poly = term_poly * pw[t.exp[i]];
        }
        if (total_deg(residual) > 0) {
            MPoly mono;
            mono.vars_ = vars_;
            mono.terms_.push_back({residual, Rat(1)});
            term_poly = term_poly * mono;
        }
        acc += term_poly;
    }
    return acc;
}

MPoly MPoly::specialize(const std::map<std::string, Rat>& values) const {
    std::map<std::string, MPoly> b;
    for (auto& [v, r] : values)
        if (std::binary_search(vars_.begin(), vars_.end(), v)) b.emplace(v, MPoly(r));
    if (b.empty()) return *this;
    return substitute(b);
}

Rat MPoly::eval(const std::map<std::string, Rat>& values) const {
    for (auto& v : vars_)
        if (!values.count(v) && depends_on(v))
            throw std::invalid_argument("eval: unbound variable " + v);
    Rat acc(0);
    std::vector<std::vector<Rat>> powers(vars_.size());
    for (auto& t : terms_) {
        Rat c = t.coef;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (t.exp[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Rat(1));
            while (pw.size() <= t.exp[i]) pw.push_back(pw.back() * values.at(vars_[i]));
            c *= pw[t.exp[i]];
        }
        acc += c;
    }
    return acc;
}

MPoly MPoly::reverse_scale(const std::string& v, uint32_t N, const MPoly& s) const {
    long d = degree_in(v);
    if (d > static_cast<long>(N))
        throw std::invalid_argument("reverse_scale: N below degree");
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) {
        // no occurrence of v: result is p * v^N
        return *this * MPoly::var(v, N);
    }
    size_t idx = it - vars_.begin();
    MPoly acc = MPoly::constant(Rat(0), vars_);
    std::vector<MPoly> spow{MPoly(Rat(1))};
    for (auto& t : terms_) {
        uint32_t k = t.exp[idx];
        while (spow.size() <= k) spow.push_back(spow.back() * s);
        MPoly mono;
        mono.vars_ = vars_;
        Term nt = t;
        nt.exp[idx] = N - k;
        mono.terms_.push_back(nt);
        acc += mono * spow[k];
    }
    return acc;
}

std::optional<MPoly> MPoly::try_divide(const MPoly& d) const {
    if (d.is_zero()) throw std::domain_error("MPoly: division by zero");
    MPoly num = *this, den = d;
    unify(num, den);
    if (num.is_zero()) return MPoly::constant(Rat(0), num.vars_);

    const Term& dl = den.terms_[0];
    std::map<ExpVec, Rat, bool (*)(const ExpVec&, const ExpVec&)> rem(grlex_greater);
    for (auto& t : num.terms_) rem.emplace(t.exp, t.coef);

    MPoly quot = MPoly::constant(Rat(0), num.vars_);
    std::vector<Term> qterms;
    while (!rem.empty()) {
        auto lead = rem.begin();
        ExpVec qe(lead->first.size());
        for (size_t i = 0; i < qe.size(); ++i) {
            if (lead->first[i] < dl.exp[i]) return std::nullopt;
            qe[i] = lead->first[i] - dl.exp[i];
        }
        Rat qc = lead->second / dl.coef;
        qterms.push_back({qe, qc});
        // rem -= qterm * den
        for (auto& t : den.terms_) {
            ExpVec e = add_exp(qe, t.exp);
            Rat delta = qc * t.coef;
            auto it = rem.find(e);
            if (it == rem.end()) {
                if (!delta.is_zero()) rem.emplace(std::move(e), -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    quot.terms_ = std::move(qterms);
    quot.normalize();
    return quot;
}

Rat MPoly::content() const {
    if (terms_.empty()) return Rat(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& t : terms_) {
        mpz_class n = t.coef.num();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_class d = t.coef.den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    return Rat(num_gcd, den_lcm);
}

MPoly MPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    Rat c = content();
    MPoly r = *this / c;
    if (r.terms_[0].coef.sign() < 0) r = -r;
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        Rat c = t.coef;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        bool has_var = total_deg(t.exp) > 0;
        if (!has_var || !c.is_one()) os << c.str();
        bool star = !c.is_one();
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (t.exp[i] == 0) continue;
            if (star || !has_var) os << "*";
            os << vars_[i];
            if (t.exp[i] > 1) os << "^" << t.exp[i];
            star = true;
        }
    }
    return os.str();
}

MPoly Factorization::expand() const {
    MPoly r(unit);
    for (auto& [f, m] : factors) r = r * f.pow(static_cast<unsigned>(m));
    return r;
}

}  // namespace k3fib
