// Univariate factorization over Q: squarefree split (Yun), then Zassenhaus
// on each squarefree part -- factor mod p by distinct/equal-degree splitting,
// Hensel lift to a Mignotte-sized modulus, recombine subsets.

#include "k3fib/upoly.hpp"

#include <algorithm>
#include <random>

namespace k3fib {

namespace {

using u64 = uint64_t;

// --- F_p arithmetic, p an odd prime < 2^31 ---------------------------------

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((__uint128_t)a * b % p); }

u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

using FpPoly = std::vector<u64>;  // f[k] = coeff of x^k

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long fp_deg(const FpPoly& f) { return static_cast<long>(f.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + (__uint128_t)a[i] * b[j]) % p;
    }
    fp_trim(c);
    return c;
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, u64 p) {
    u64 linv = invm(b.back(), p);
    while (fp_deg(a) >= fp_deg(b)) {
        u64 f = mulm(a.back(), linv, p);
        long k = fp_deg(a) - fp_deg(b);
        for (long i = 0; i <= fp_deg(b); ++i) {
            u64 sub = mulm(f, b[i], p);
            a[k + i] = (a[k + i] + p - sub) % p;
        }
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

FpPoly fp_monic(FpPoly f, u64 p) {
    if (f.empty()) return f;
    u64 s = invm(f.back(), p);
    for (auto& c : f) c = mulm(c, s, p);
    return f;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    fp_trim(a);
    return a;
}

FpPoly fp_derivative(const FpPoly& f, u64 p) {
    FpPoly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(mulm(f[i], i % p, p));
    fp_trim(d);
    return d;
}

// base^e mod f, with e an arbitrary-precision exponent
FpPoly fp_powmod(FpPoly base, const mpz_class& e, const FpPoly& f, u64 p) {
    FpPoly r{1};
    base = fp_rem(std::move(base), f, p);
    for (long bit = mpz_sizeinbase(e.get_mpz_t(), 2) - 1; bit >= 0; --bit) {
        r = fp_rem(fp_mul(r, r, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), bit)) r = fp_rem(fp_mul(r, base, p), f, p);
    }
    return r;
}

// distinct-degree decomposition of monic squarefree f: list of (product, d)
std::vector<std::pair<FpPoly, long>> fp_ddf(FpPoly f, u64 p) {
    std::vector<std::pair<FpPoly, long>> out;
    FpPoly h{0, 1};  // x
    long d = 0;
    while (fp_deg(f) > 0) {
        ++d;
        if (2 * d > fp_deg(f)) {
            out.push_back({f, fp_deg(f)});
            break;
        }
        h = fp_powmod(h, mpz_class(static_cast<unsigned long>(p)), f, p);
        FpPoly g = fp_gcd(fp_sub(h, FpPoly{0, 1}, p), f, p);
        if (fp_deg(g) > 0) {
            out.push_back({g, d});
            // f /= g
            FpPoly quot;
            {
                FpPoly a = f;
                u64 linv = invm(g.back(), p);
                quot.assign(fp_deg(f) - fp_deg(g) + 1, 0);
                while (fp_deg(a) >= fp_deg(g)) {
                    u64 c = mulm(a.back(), linv, p);
                    long k = fp_deg(a) - fp_deg(g);
                    quot[k] = c;
                    for (long i = 0; i <= fp_deg(g); ++i) {
                        u64 sub = mulm(c, g[i], p);
                        a[k + i] = (a[k + i] + p - sub) % p;
                    }
                    fp_trim(a);
                    if (a.empty()) break;
                }
            }
            f = fp_monic(std::move(quot), p);
            h = fp_rem(h, f, p);
        }
    }
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus) of monic g, all factors deg d
void fp_edf(const FpPoly& g, long d, u64 p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (fp_deg(g) == d) {
        out.push_back(fp_monic(g, p));
        return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (true) {
        FpPoly a(fp_deg(g), 0);
        for (auto& c : a) c = rng() % p;
        a.push_back(1);
        FpPoly b = fp_powmod(a, e, g, p);
        b = fp_sub(b, FpPoly{1}, p);
        FpPoly h = fp_gcd(b, g, p);
        if (fp_deg(h) > 0 && fp_deg(h) < fp_deg(g)) {
            // split
            FpPoly q;
            {
                FpPoly rest = g;
                u64 linv = invm(h.back(), p);
                q.assign(fp_deg(g) - fp_deg(h) + 1, 0);
                while (fp_deg(rest) >= fp_deg(h)) {
                    u64 c = mulm(rest.back(), linv, p);
                    long k = fp_deg(rest) - fp_deg(h);
                    q[k] = c;
                    for (long i = 0; i <= fp_deg(h); ++i) {
                        u64 sub = mulm(c, h[i], p);
                        rest[k + i] = (rest[k + i] + p - sub) % p;
                    }
                    fp_trim(rest);
                    if (rest.empty()) break;
                }
            }
            fp_edf(h, d, p, rng, out);
            fp_edf(fp_monic(q, p), d, p, rng, out);
            return;
        }
    }
}

// --- Z[x] mod m helpers (m = p^k) ------------------------------------------

using ZPoly = std::vector<mpz_class>;

void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long z_deg(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

ZPoly z_mod(ZPoly a, const mpz_class& m) {
    for (auto& c : a) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    z_trim(a);
    return a;
}

ZPoly z_symmetric(ZPoly a, const mpz_class& m) {
    mpz_class half = m / 2;
    for (auto& c : a) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    z_trim(a);
    return a;
}

ZPoly z_mul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return z_mod(std::move(c), m);
}

ZPoly z_add_mod(ZPoly a, const ZPoly& b, const mpz_class& m) {
    if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return z_mod(std::move(a), m);
}

ZPoly z_sub_mod(ZPoly a, const ZPoly& b, const mpz_class& m) {
    if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return z_mod(std::move(a), m);
}

// division by MONIC divisor, coefficients mod m
std::pair<ZPoly, ZPoly> z_divrem_monic(ZPoly a, const ZPoly& d, const mpz_class& m) {
    if (d.empty() || d.back() != 1) throw internal_error("z_divrem_monic: divisor not monic");
    a = z_mod(std::move(a), m);
    if (z_deg(a) < z_deg(d)) return {{}, a};
    ZPoly q(z_deg(a) - z_deg(d) + 1, mpz_class(0));
    while (z_deg(a) >= z_deg(d)) {
        long k = z_deg(a) - z_deg(d);
        mpz_class c = a.back();
        q[k] = c;
        for (long i = 0; i <= z_deg(d); ++i) {
            a[k + i] -= c * d[i];
            mpz_mod(a[k + i].get_mpz_t(), a[k + i].get_mpz_t(), m.get_mpz_t());
        }
        z_trim(a);
    }
    return {z_mod(std::move(q), m), a};
}

// one quadratic Hensel step (m -> m^2); h monic, f == g*h (mod m),
// s*g + t*h == 1 (mod m), deg s < deg h, deg t < deg g
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m) {
    mpz_class m2 = m * m;
    ZPoly e = z_sub_mod(z_mod(f, m2), z_mul_mod(g, h, m2), m2);
    auto [q, r] = z_divrem_monic(z_mul_mod(s, e, m2), h, m2);
    ZPoly gstar = z_add_mod(z_add_mod(g, z_mul_mod(t, e, m2), m2), z_mul_mod(q, g, m2), m2);
    ZPoly hstar = z_add_mod(h, r, m2);
    ZPoly b = z_sub_mod(z_add_mod(z_mul_mod(s, gstar, m2), z_mul_mod(t, hstar, m2), m2),
                        ZPoly{mpz_class(1)}, m2);
    auto [c, d] = z_divrem_monic(z_mul_mod(s, b, m2), hstar, m2);
    ZPoly sstar = z_sub_mod(s, d, m2);
    ZPoly tstar = z_sub_mod(z_sub_mod(t, z_mul_mod(t, b, m2), m2), z_mul_mod(c, gstar, m2), m2);
    g = std::move(gstar);
    h = std::move(hstar);
    s = std::move(sstar);
    t = std::move(tstar);
}

// extended Euclid in F_p[x]: s*a + t*b == 1 with deg s < deg b, deg t < deg a
void fp_bezout(const FpPoly& a, const FpPoly& b, u64 p, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        FpPoly q(std::max<long>(fp_deg(r0) - fp_deg(r1) + 1, 1), 0);
        FpPoly rem = r0;
        u64 linv = invm(r1.back(), p);
        while (fp_deg(rem) >= fp_deg(r1) && !rem.empty()) {
            u64 c = mulm(rem.back(), linv, p);
            long k = fp_deg(rem) - fp_deg(r1);
            q[k] = c;
            for (long i = 0; i <= fp_deg(r1); ++i) {
                u64 sub = mulm(c, r1[i], p);
                rem[k + i] = (rem[k + i] + p - sub) % p;
            }
            fp_trim(rem);
        }
        fp_trim(q);
        auto step = [&](FpPoly& u0, FpPoly& u1) {
            FpPoly nu = fp_sub(u0, fp_mul(q, u1, p), p);
            u0 = std::move(u1);
            u1 = std::move(nu);
        };
        r0 = std::move(r1);
        r1 = std::move(rem);
        step(s0, s1);
        step(t0, t1);
    }
    if (fp_deg(r0) != 0) throw internal_error("fp_bezout: inputs not coprime");
    u64 inv = invm(r0[0], p);
    for (auto& c : s0) c = mulm(c, inv, p);
    for (auto& c : t0) c = mulm(c, inv, p);
    s = std::move(s0);
    t = std::move(t0);
}

ZPoly fp_to_z(const FpPoly& f) {
    ZPoly r;
    r.reserve(f.size());
    for (auto c : f) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

FpPoly z_to_fp(const ZPoly& f, u64 p) {
    FpPoly r;
    r.reserve(f.size());
    mpz_class pz(static_cast<unsigned long>(p));
    for (auto& c : f) {
        mpz_class m;
        mpz_mod(m.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
        r.push_back(m.get_ui());
    }
    fp_trim(r);
    return r;
}

// lift the monic factorization of F mod p to mod >= target; returns the
// final modulus through `modulus`
std::vector<ZPoly> hensel_lift_list(const ZPoly& F, std::vector<FpPoly> fac, u64 p,
                                    const mpz_class& target, mpz_class& modulus) {
    // final modulus: p^(2^k) >= target, shared by all levels
    mpz_class M(static_cast<unsigned long>(p));
    while (M < target) M = M * M;
    modulus = M;

    std::vector<ZPoly> out;
    ZPoly cur = F;
    for (size_t i = 0; i + 1 < fac.size(); ++i) {
        // peel fac[i] off cur: g = lc(cur)*fac[i], h = product of the rest
        FpPoly g0 = fac[i];
        FpPoly rest{1};
        for (size_t j = i + 1; j < fac.size(); ++j) rest = fp_mul(rest, fac[j], p);
        mpz_class pz(static_cast<unsigned long>(p));
        mpz_class lcmod;
        mpz_mod(lcmod.get_mpz_t(), cur.back().get_mpz_t(), pz.get_mpz_t());
        u64 lcu = lcmod.get_ui();
        FpPoly g0l = g0;
        for (auto& c : g0l) c = mulm(c, lcu, p);
        FpPoly s, t;
        fp_bezout(g0l, rest, p, s, t);

        ZPoly G = fp_to_z(g0l), H = fp_to_z(rest), S = fp_to_z(s), T = fp_to_z(t);
        mpz_class m(static_cast<unsigned long>(p));
        while (m < M) {
            hensel_step(cur, G, H, S, T, m);
            m = m * m;
        }
        // monic copy of G: divide by its leading coefficient mod M
        mpz_class linv;
        if (mpz_invert(linv.get_mpz_t(), G.back().get_mpz_t(), M.get_mpz_t()) == 0)
            throw internal_error("hensel: leading coefficient not invertible");
        ZPoly Gm = G;
        for (auto& c : Gm) {
            c *= linv;
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
        }
        out.push_back(std::move(Gm));
        cur = H;  // monic, == product of remaining factors mod M
    }
    out.push_back(cur);
    return out;
}

mpz_class height(const ZPoly& f) {
    mpz_class h = 0;
    for (auto& c : f) {
        mpz_class a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

std::optional<ZPoly> z_try_div(const ZPoly& a, const ZPoly& b);

ZPoly z_primitive(const ZPoly& a) {
    mpz_class g = 0;
    for (auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    ZPoly r = a;
    if (g != 0)
        for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (!r.empty() && r.back() < 0)
        for (auto& x : r) x = -x;
    return r;
}

std::optional<ZPoly> z_try_div(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw std::domain_error("division by zero");
    if (a.empty()) return ZPoly{};
    if (z_deg(a) < z_deg(b)) return std::nullopt;
    ZPoly r = a, q(z_deg(a) - z_deg(b) + 1, mpz_class(0));
    const mpz_class& lb = b.back();
    while (!r.empty() && z_deg(r) >= z_deg(b)) {
        mpz_class f, rem;
        mpz_fdiv_qr(f.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
        if (rem != 0) return std::nullopt;
        long k = z_deg(r) - z_deg(b);
        q[k] = f;
        for (long i = 0; i <= z_deg(b); ++i) r[k + i] -= f * b[i];
        z_trim(r);
    }
    if (!r.empty()) return std::nullopt;
    return q;
}

// factor a primitive squarefree integer polynomial with positive lc
std::vector<ZPoly> zassenhaus_squarefree(const ZPoly& F) {
    long n = z_deg(F);
    if (n <= 0) return {};
    if (n == 1) return {F};

    // pick a prime keeping F squarefree, preferring few modular factors
    u64 best_p = 0;
    std::vector<FpPoly> best_factors;
    mpz_class prime(10007);
    int tried = 0;
    while (tried < 5) {
        u64 p = prime.get_ui();
        FpPoly fp = z_to_fp(F, p);
        if (fp_deg(fp) == n) {
            FpPoly d = fp_derivative(fp, p);
            FpPoly g = fp_gcd(fp, d, p);
            if (fp_deg(g) == 0) {
                ++tried;
                std::mt19937_64 rng(0x5eedF00dULL ^ p);
                std::vector<FpPoly> irr;
                for (auto& [block, dd] : fp_ddf(fp_monic(fp, p), p)) fp_edf(block, dd, p, rng, irr);
                if (best_p == 0 || irr.size() < best_factors.size()) {
                    best_p = p;
                    best_factors = std::move(irr);
                    if (best_factors.size() == 1) break;
                }
            }
        }
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    }
    if (best_p == 0) throw internal_error("zassenhaus: no usable prime found");
    if (best_factors.size() == 1) return {F};

    // lift
    mpz_class H = height(F);
    mpz_class bound = (mpz_class(n + 1) << n) * H * abs(F.back()) * 2 + 1;
    mpz_class M;
    std::vector<ZPoly> lifted = hensel_lift_list(F, best_factors, best_p, bound, M);

    // recombination
    std::vector<ZPoly> result;
    std::vector<size_t> active(lifted.size());
    for (size_t i = 0; i < active.size(); ++i) active[i] = i;
    ZPoly rest = F;

    auto try_subset = [&](const std::vector<size_t>& subset) -> bool {
        ZPoly prod{rest.back()};
        for (auto i : subset) prod = z_mul_mod(prod, lifted[i], M);
        prod = z_symmetric(std::move(prod), M);
        ZPoly cand = z_primitive(prod);
        auto q = z_try_div(rest, cand);
        if (!q) return false;
        result.push_back(cand);
        rest = z_primitive(*q);
        return true;
    };

    size_t s = 1;
    while (2 * s <= active.size()) {
        bool found = false;
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            std::vector<size_t> subset(s);
            for (size_t i = 0; i < s; ++i) subset[i] = active[idx[i]];
            if (try_subset(subset)) {
                std::vector<size_t> na;
                for (auto a : active)
                    if (std::find(subset.begin(), subset.end(), a) == subset.end())
                        na.push_back(a);
                active = std::move(na);
                found = true;
                break;
            }
            // next combination
            long i = static_cast<long>(s) - 1;
            while (i >= 0 && idx[i] == active.size() - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (z_deg(rest) > 0) result.push_back(z_primitive(rest));
    return result;
}

UPoly z_to_upoly(const ZPoly& z) {
    std::vector<Rat> c;
    c.reserve(z.size());
    for (auto& x : z) c.emplace_back(x);
    return UPoly(std::move(c));
}

ZPoly upoly_to_z_primitive(const UPoly& p) {
    mpz_class den_lcm = 1;
    for (auto& c : p.coeffs()) {
        mpz_class d = c.den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    ZPoly z;
    for (auto& c : p.coeffs()) z.push_back(c.num() * (den_lcm / c.den()));
    return z_primitive(z);
}

}  // namespace

UFactorization factor(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    UFactorization out;
    out.unit = p.lc();
    if (p.deg() == 0) return out;

    USquarefree sq = squarefree_decompose(p);
    Rat unit_acc = sq.unit;
    for (auto& [part, mult] : sq.parts) {
        ZPoly Fz = upoly_to_z_primitive(part);
        Rat part_unit = part.lc();  // part is monic from Yun; keep exactness anyway
        std::vector<ZPoly> irr = zassenhaus_squarefree(Fz);
        UPoly check(Rat(1));
        for (auto& f : irr) {
            UPoly uf = z_to_upoly(f);
            out.factors.push_back({uf, mult});
            check = check * uf;
        }
        // fold the constant connecting the primitive factors back to `part`
        Rat scale = part.lc() / check.lc();
        (void)part_unit;
        unit_acc *= scale.pow(mult);
        if (!(check * scale == part)) throw internal_error("factor: product check failed");
    }
    out.unit = unit_acc;
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first.deg() < b.first.deg(); });
    return out;
}

}  // namespace k3fib
