#include "k3fib/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace k3fib {

UPoly UPoly::x(uint32_t power) {
    std::vector<Rat> c(power + 1, Rat(0));
    c[power] = Rat(1);
    return UPoly(std::move(c));
}

void UPoly::set_coeff(size_t k, const Rat& v) {
    if (c_.size() <= k) c_.resize(k + 1, Rat(0));
    c_[k] = v;
    trim();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
}

UPoly UPoly::operator*(const Rat& s) const {
    if (s.is_zero()) return UPoly();
    UPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

UPoly UPoly::operator/(const Rat& s) const { return *this * s.inv(); }

UPoly UPoly::pow(unsigned e) const {
    UPoly r(Rat(1)), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UPoly(std::move(c));
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UPoly UPoly::scale_arg(const Rat& s) const {
    UPoly r = *this;
    Rat p(1);
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] *= p;
        p *= s;
    }
    r.trim();
    return r;
}

UPoly UPoly::reverse_scale(uint32_t N, const Rat& s) const {
    if (deg() > static_cast<long>(N)) throw std::invalid_argument("reverse_scale: N below degree");
    std::vector<Rat> c(N + 1, Rat(0));
    Rat p(1);
    for (size_t k = 0; k < c_.size(); ++k) {
        c[N - k] = c_[k] * p;
        p *= s;
    }
    return UPoly(std::move(c));
}

UPoly UPoly::shift_up(uint32_t k) const {
    if (is_zero()) return UPoly();
    std::vector<Rat> c(c_.size() + k, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly: division by zero");
    UPoly r = *this;
    if (r.deg() < d.deg()) return {UPoly(), r};
    std::vector<Rat> q(r.deg() - d.deg() + 1, Rat(0));
    Rat dlc = d.lc();
    while (!r.is_zero() && r.deg() >= d.deg()) {
        long k = r.deg() - d.deg();
        Rat f = r.lc() / dlc;
        q[k] = f;
        for (long i = 0; i <= d.deg(); ++i) r.c_[i + k] -= f * d.c_[i];
        r.trim();
    }
    return {UPoly(std::move(q)), r};
}

UPoly UPoly::exact_div(const UPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw internal_error("UPoly: exact division left a remainder");
    return q;
}

bool UPoly::divides(const UPoly& d) const { return divrem(d).second.is_zero(); }

int UPoly::valuation(const UPoly& d) const {
    if (d.deg() < 1) throw std::invalid_argument("valuation: constant uniformizer");
    if (is_zero()) throw std::invalid_argument("valuation: zero polynomial");
    int v = 0;
    UPoly cur = *this;
    while (true) {
        auto [q, r] = cur.divrem(d);
        if (!r.is_zero()) return v;
        cur = q;
        ++v;
    }
}

MPoly UPoly::to_mpoly(const std::string& var) const {
    std::vector<Term> ts;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) ts.push_back({{static_cast<uint32_t>(i)}, c_[i]});
    return MPoly::make({var}, std::move(ts));
}

UPoly UPoly::from_mpoly(const MPoly& p, const std::string& var) {
    std::vector<Rat> c;
    auto& vs = p.vars();
    size_t idx = vs.size();
    for (size_t i = 0; i < vs.size(); ++i)
        if (vs[i] == var) idx = i;
    for (auto& t : p.terms()) {
        uint32_t e = 0;
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i == idx) {
                e = t.exp[i];
            } else if (t.exp[i] != 0) {
                throw std::invalid_argument("from_mpoly: polynomial is not univariate in " + var);
            }
        }
        if (c.size() <= e) c.resize(e + 1, Rat(0));
        c[e] += t.coef;
    }
    return UPoly(std::move(c));
}

std::string UPoly::str(const std::string& var) const { return to_mpoly(var).str(); }

// ---------------------------------------------------------------------------
// Z-polynomial helpers (dense, primitive computations)

namespace zp {

using ZPoly = std::vector<mpz_class>;  // z[k] = coeff of x^k, trailing nonzero

void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

mpz_class content(const ZPoly& a) {
    mpz_class g = 0;
    for (auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

void divexact_scalar(ZPoly& a, const mpz_class& s) {
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
}

ZPoly primitive(const ZPoly& a) {
    ZPoly r = a;
    mpz_class c = content(r);
    if (c != 0) divexact_scalar(r, c);
    if (!r.empty() && r.back() < 0)
        for (auto& x : r) x = -x;
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b
ZPoly prem(ZPoly a, const ZPoly& b) {
    long db = deg(b);
    const mpz_class& lb = b.back();
    while (deg(a) >= db) {
        long da = deg(a);
        mpz_class la = a.back();
        for (auto& x : a) x *= lb;
        for (long i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

ZPoly gcd_primitive(ZPoly a, ZPoly b) {
    a = primitive(a);
    b = primitive(b);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = prem(a, b);
        a = std::move(b);
        b = primitive(r);
    }
    return primitive(a);
}

// true division when exact, nullopt otherwise
std::optional<ZPoly> try_div(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw std::domain_error("z-poly division by zero");
    if (a.empty()) return ZPoly{};
    if (deg(a) < deg(b)) return std::nullopt;
    ZPoly r = a, q(deg(a) - deg(b) + 1, mpz_class(0));
    const mpz_class& lb = b.back();
    while (!r.empty() && deg(r) >= deg(b)) {
        mpz_class f, rem;
        mpz_fdiv_qr(f.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
        if (rem != 0) return std::nullopt;
        long k = deg(r) - deg(b);
        q[k] = f;
        for (long i = 0; i <= deg(b); ++i) r[k + i] -= f * b[i];
        trim(r);
    }
    if (!r.empty()) return std::nullopt;
    return q;
}

}  // namespace zp

namespace {

// Clear denominators: returns (z, s) with p = z * s, z integer-primitive-ish.
std::pair<zp::ZPoly, Rat> to_z(const UPoly& p) {
    mpz_class den_lcm = 1;
    for (auto& c : p.coeffs()) {
        mpz_class d = c.den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    zp::ZPoly z;
    z.reserve(p.coeffs().size());
    for (auto& c : p.coeffs()) z.push_back(c.num() * (den_lcm / c.den()));
    return {std::move(z), Rat(mpz_class(1), den_lcm)};
}

UPoly from_z(const zp::ZPoly& z) {
    std::vector<Rat> c;
    c.reserve(z.size());
    for (auto& x : z) c.emplace_back(x);
    return UPoly(std::move(c));
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero() && b.is_zero()) return UPoly();
    if (a.is_zero()) return b / b.lc();
    if (b.is_zero()) return a / a.lc();
    auto [za, _sa] = to_z(a);
    auto [zb, _sb] = to_z(b);
    UPoly g = from_z(zp::gcd_primitive(za, zb));
    return g / g.lc();
}

USquarefree squarefree_decompose(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
    USquarefree out;
    out.unit = p.lc();
    UPoly f = p / p.lc();
    if (f.deg() == 0) return out;
    // Yun's algorithm
    UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = f.exact_div(a);
    UPoly c = fp.exact_div(a);
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.deg() > 0) {
        UPoly t = gcd(b, d);
        if (t.deg() > 0) out.parts.push_back({t, i});
        b = b.exact_div(t);
        c = d.exact_div(t);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

// Bareiss fraction-free determinant of an integer matrix (destructive).
mpz_class bareiss_det(std::vector<std::vector<mpz_class>>& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Rat resultant(const UPoly& p, const UPoly& q) {
    long m = p.deg(), n = q.deg();
    if (m < 1 || n < 1) throw std::invalid_argument("resultant: degree 0 input");
    auto [zp_, sp] = to_z(p);
    auto [zq_, sq] = to_z(q);
    size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<mpz_class>> syl(N, std::vector<mpz_class>(N, mpz_class(0)));
    // n rows of p's coefficients, m rows of q's
    for (long r = 0; r < n; ++r)
        for (long i = 0; i <= m; ++i) syl[r][r + i] = zp_[m - i];
    for (long r = 0; r < m; ++r)
        for (long i = 0; i <= n; ++i) syl[n + r][r + i] = zq_[n - i];
    mpz_class det = bareiss_det(syl);
    // Res(sp^-1 * zp, sq^-1 * zq) scaling: Res(p,q) = sp^n sq^m Res(zp,zq)
    return Rat(det) * sp.pow(n) * sq.pow(m);
}

Rat discriminant(const UPoly& p) {
    long n = p.deg();
    if (n < 2) throw std::invalid_argument("discriminant: degree below 2");
    Rat r = resultant(p, p.derivative());
    Rat d = r / p.lc();
    long e = (n * (n - 1)) / 2;
    return (e % 2 == 0) ? d : -d;
}

std::vector<Rat> rational_roots(const UPoly& p) {
    std::vector<Rat> roots;
    for (auto& [f, m] : factor(p).factors) {
        (void)m;
        if (f.deg() == 1) roots.push_back(-f.coeff(0) / f.coeff(1));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

UPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    UPoly acc;
    for (size_t i = 0; i < points.size(); ++i) {
        UPoly basis(Rat(1));
        Rat denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * (UPoly::x() - UPoly(points[j].first));
            denom *= points[i].first - points[j].first;
        }
        acc = acc + basis * (points[i].second / denom);
    }
    return acc;
}

}  // namespace k3fib
