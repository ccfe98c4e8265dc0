// MPoly-level resultants and factorization fronts. Constant-coefficient
// inputs go through the dense integer Bareiss path; genuinely multivariate
// resultants run Bareiss directly over MPoly entries (exact divisions).

#include "k3fib/mpoly.hpp"
#include "k3fib/upoly.hpp"

namespace k3fib {

namespace {

bool univariate_in(const MPoly& p, const std::string& v) {
    for (auto& w : p.vars())
        if (w != v && p.depends_on(w)) return false;
    return true;
}

MPoly bareiss_det_mpoly(std::vector<std::vector<MPoly>>& m) {
    size_t n = m.size();
    if (n == 0) return MPoly(Rat(1));
    MPoly prev(Rat(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return MPoly(Rat(0));
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                MPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = t.try_divide(prev);
                if (!q) throw internal_error("bareiss: exact division failed");
                m[i][j] = std::move(*q);
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

MPoly resultant(const MPoly& p, const MPoly& q, const std::string& v) {
    long m = p.degree_in(v), n = q.degree_in(v);
    if (m < 1 || n < 1)
        throw std::invalid_argument("resultant: inputs must have positive degree in " + v);
    if (univariate_in(p, v) && univariate_in(q, v)) {
        Rat r = resultant(UPoly::from_mpoly(p, v), UPoly::from_mpoly(q, v));
        return MPoly(r);
    }
    auto pc = p.coeffs_in(v);
    auto qc = q.coeffs_in(v);
    size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<MPoly>> syl(N, std::vector<MPoly>(N, MPoly(Rat(0))));
    for (long r = 0; r < n; ++r)
        for (long i = 0; i <= m; ++i) syl[r][r + i] = pc[m - i];
    for (long r = 0; r < m; ++r)
        for (long i = 0; i <= n; ++i) syl[n + r][r + i] = qc[n - i];
    return bareiss_det_mpoly(syl);
}

MPoly discriminant(const MPoly& p, const std::string& v) {
    long n = p.degree_in(v);
    if (n < 2) throw std::invalid_argument("discriminant: degree below 2 in " + v);
    MPoly res = resultant(p, p.derivative(v), v);
    MPoly lc = p.coeff_in(v, static_cast<uint32_t>(n));
    auto q = res.try_divide(lc);
    if (!q) throw internal_error("discriminant: division by the leading coefficient failed");
    long e = (n * (n - 1)) / 2;
    return (e % 2 == 0) ? *q : -*q;
}

Factorization squarefree_factor(const MPoly& p, const std::string& v) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_factor: zero polynomial");
    if (!univariate_in(p, v))
        throw std::invalid_argument("squarefree_factor: input not univariate in " + v);
    auto sq = squarefree_decompose(UPoly::from_mpoly(p, v));
    Factorization out;
    out.unit = sq.unit;
    for (auto& [f, mult] : sq.parts) {
        MPoly fi = f.to_mpoly(v).primitive_part();
        // fold the normalization constant into the unit
        MPoly raw = f.to_mpoly(v);
        Rat scale = raw.terms()[0].coef / fi.terms()[0].coef;
        out.unit *= scale.pow(mult);
        out.factors.push_back({fi, mult});
    }
    return out;
}

Factorization factor_rational(const MPoly& p, const std::string& v) {
    if (p.is_zero()) throw std::invalid_argument("factor_rational: zero polynomial");
    if (!univariate_in(p, v))
        throw std::invalid_argument("factor_rational: input not univariate in " + v);
    auto fz = factor(UPoly::from_mpoly(p, v));
    Factorization out;
    out.unit = fz.unit;
    for (auto& [f, mult] : fz.factors) out.factors.push_back({f.to_mpoly(v), mult});
    return out;
}

}  // namespace k3fib
