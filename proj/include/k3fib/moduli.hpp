#pragma once

#include "k3fib/rat.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace k3fib {

// Coefficient sextuple of the quartic family.
struct ParamPoint {
    Rat alpha, beta, gamma, delta, epsilon, zeta;
    // (gamma, delta) != (0,0) and (epsilon, zeta) != (0,0)
    bool admissible() const;
    friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
    std::string str() const;
};

// Weighted moduli coordinates (J2, J3, J4, J5, J6) with an optional square
// root a of J5^2 - 4 J4 J6.
struct InvariantPoint {
    Rat J2, J3, J4, J5, J6;
    std::optional<Rat> a;

    Rat a_squared() const { return J5 * J5 - J4 * J6 * Rat(4); }
    bool admissible() const;  // (J4, J5, J6) != (0,0,0) and a consistency
    friend bool operator==(const InvariantPoint&, const InvariantPoint&) = default;
    std::string str() const;
};

// J2 = alpha, J3 = beta, J4 = gamma eps, J5 = gamma zeta + delta eps,
// J6 = delta zeta; a = gamma zeta - delta eps.
InvariantPoint invariants(const ParamPoint& p);

// Group action on the sextuple: the one-parameter scaling and the swap.
ParamPoint act_scale(const ParamPoint& p, const Rat& t);
ParamPoint act_swap(const ParamPoint& p);
// Element of the closure of the generators: scaling conjugated by the swap
// composed with a plain scaling (two independent scale parameters).
ParamPoint act_scale2(const ParamPoint& p, const Rat& s, const Rat& t);

struct OrbitWitness {
    Rat s, t;  // act_scale2 parameters; t == 1 is the plain scaling
    bool swapped = false;
    std::string str() const;
};

enum class Equiv { No, OverExtension, OverQ };

struct IsoResult {
    Equiv kind = Equiv::No;
    std::optional<OrbitWitness> witness;
    bool equivalent() const { return kind != Equiv::No; }
};

// Same orbit over an algebraically closed field iff the invariant points
// agree in weighted projective space; a rational witness upgrades the
// verdict to equivalence over Q.
IsoResult isomorphic(const ParamPoint& p, const ParamPoint& q);

// Canonical orbit label under J_k -> lambda^(2k) J_k: the zero pattern plus
// all gcd-reduced weighted cross-ratios over nonzero pairs.
struct WPLabel {
    std::string zero_pattern;                      // e.g. "11010"
    std::vector<std::tuple<int, int, Rat>> ratios;  // (a, b, Ja^(wb/g)/Jb^(wa/g))
    friend bool operator==(const WPLabel&, const WPLabel&) = default;
    std::string str() const;
};

WPLabel wp_normalize(const InvariantPoint& J);

}  // namespace k3fib
