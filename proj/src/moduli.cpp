#include "k3fib/moduli.hpp"

#include <numeric>
#include <sstream>

namespace k3fib {

bool ParamPoint::admissible() const {
    if (gamma.is_zero() && delta.is_zero()) return false;
    if (epsilon.is_zero() && zeta.is_zero()) return false;
    return true;
}

std::string ParamPoint::str() const {
    std::ostringstream os;
    os << "(" << alpha << ", " << beta << ", " << gamma << ", " << delta << ", " << epsilon
       << ", " << zeta << ")";
    return os.str();
}

bool InvariantPoint::admissible() const {
    if (J4.is_zero() && J5.is_zero() && J6.is_zero()) return false;
    if (a && !((*a) * (*a) == a_squared())) return false;
    return true;
}

std::string InvariantPoint::str() const {
    std::ostringstream os;
    os << "(" << J2 << " : " << J3 << " : " << J4 << " : " << J5 << " : " << J6 << ")";
    if (a) os << " a=" << a->str();
    return os.str();
}

InvariantPoint invariants(const ParamPoint& p) {
    if (!p.admissible()) throw std::invalid_argument("invariants: inadmissible parameter point");
    InvariantPoint J;
    J.J2 = p.alpha;
    J.J3 = p.beta;
    J.J4 = p.gamma * p.epsilon;
    J.J5 = p.gamma * p.zeta + p.delta * p.epsilon;
    J.J6 = p.delta * p.zeta;
    J.a = p.gamma * p.zeta - p.delta * p.epsilon;
    return J;
}

ParamPoint act_scale(const ParamPoint& p, const Rat& t) {
    if (t.is_zero()) throw std::invalid_argument("act_scale: t = 0");
    return {p.alpha * t.pow(2), p.beta * t.pow(3),    p.gamma * t.pow(5),
            p.delta * t.pow(6), p.epsilon * t.pow(-1), p.zeta};
}

ParamPoint act_swap(const ParamPoint& p) {
    return {p.alpha, p.beta, p.epsilon, p.zeta, p.gamma, p.delta};
}

ParamPoint act_scale2(const ParamPoint& p, const Rat& s, const Rat& t) {
    // act_scale(s) composed with swap . act_scale(t) . swap
    if (s.is_zero() || t.is_zero()) throw std::invalid_argument("act_scale2: zero parameter");
    Rat st = s * t;
    return {p.alpha * st.pow(2),  p.beta * st.pow(3), p.gamma * s.pow(5) / t,
            p.delta * s.pow(6),   p.epsilon * t.pow(5) / s, p.zeta * t.pow(6)};
}

std::string OrbitWitness::str() const {
    std::ostringstream os;
    if (swapped) os << "swap, ";
    if (t.is_one())
        os << "scale t=" << s;  // act_scale2(s, 1) is the plain scaling
    else
        os << "scale2 s=" << s << " t=" << t;
    return os.str();
}

namespace {

const int kWeights[5] = {2, 3, 4, 5, 6};

std::vector<Rat> as_vec(const InvariantPoint& J) { return {J.J2, J.J3, J.J4, J.J5, J.J6}; }

// try to find a rational witness mapping p to q (no swap applied here)
std::optional<OrbitWitness> rational_witness(const ParamPoint& p, const ParamPoint& q) {
    InvariantPoint Jp = invariants(p), Jq = invariants(q);
    auto vp = as_vec(Jp), vq = as_vec(Jq);
    // candidate values of sigma = s*t from the first index with Jp != 0
    std::vector<Rat> sigmas;
    for (int i = 0; i < 5; ++i) {
        if (vp[i].is_zero() || vq[i].is_zero()) {
            if (vp[i].is_zero() != vq[i].is_zero()) return std::nullopt;
            continue;
        }
        Rat ratio = vq[i] / vp[i];
        auto root = rat_kth_root(ratio, static_cast<unsigned>(kWeights[i]));
        if (!root) return std::nullopt;
        sigmas.push_back(*root);
        if (kWeights[i] % 2 == 0) sigmas.push_back(-*root);
        break;
    }
    for (auto& sigma : sigmas) {
        // s^6 from the delta slot (or via gamma when delta = 0)
        std::vector<Rat> scands;
        if (!p.delta.is_zero()) {
            if (q.delta.is_zero()) continue;
            auto s6 = rat_kth_root(q.delta / p.delta, 6);
            if (!s6) continue;
            scands = {*s6, -*s6};
        } else if (!p.gamma.is_zero()) {
            if (q.gamma.is_zero()) continue;
            // gamma scales by s^5/t = s^6/sigma
            auto s6 = rat_kth_root(q.gamma / p.gamma * sigma, 6);
            if (!s6) continue;
            scands = {*s6, -*s6};
        } else {
            continue;  // inadmissible
        }
        for (auto& s : scands) {
            if (s.is_zero()) continue;
            Rat t = sigma / s;
            if (t.is_zero()) continue;
            if (act_scale2(p, s, t) == q) return OrbitWitness{s, t, false};
        }
    }
    return std::nullopt;
}

}  // namespace

IsoResult isomorphic(const ParamPoint& p, const ParamPoint& q) {
    if (!p.admissible() || !q.admissible())
        throw std::invalid_argument("isomorphic: inadmissible parameter point");
    // rational witness first (plain, then swapped)
    if (auto w = rational_witness(p, q)) return {Equiv::OverQ, w};
    if (auto w = rational_witness(p, act_swap(q))) {
        w->swapped = true;
        return {Equiv::OverQ, w};
    }
    // equivalence over an extension: equality in weighted projective space
    if (wp_normalize(invariants(p)) == wp_normalize(invariants(q)))
        return {Equiv::OverExtension, std::nullopt};
    return {Equiv::No, std::nullopt};
}

WPLabel wp_normalize(const InvariantPoint& J) {
    if (!J.admissible()) throw std::invalid_argument("wp_normalize: inadmissible point");
    auto v = as_vec(J);
    bool all_zero = true;
    for (auto& x : v) all_zero = all_zero && x.is_zero();
    if (all_zero) throw std::invalid_argument("wp_normalize: zero tuple");
    WPLabel lab;
    for (int i = 0; i < 5; ++i) lab.zero_pattern += v[i].is_zero() ? '0' : '1';
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            if (v[i].is_zero() || v[j].is_zero()) continue;
            int g = std::gcd(kWeights[i], kWeights[j]);
            Rat ratio = v[i].pow(kWeights[j] / g) / v[j].pow(kWeights[i] / g);
            lab.ratios.push_back({kWeights[i], kWeights[j], ratio});
        }
    return lab;
}

std::string WPLabel::str() const {
    std::ostringstream os;
    os << "[" << zero_pattern;
    for (auto& [a, b, r] : ratios) os << "; J" << a << "^" << b / std::gcd(a, b) << "/J" << b
                                      << "^" << a / std::gcd(a, b) << "=" << r;
    os << "]";
    return os.str();
}

}  // namespace k3fib
