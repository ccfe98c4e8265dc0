#pragma once

#include "k3fib/fibrations.hpp"
#include "k3fib/moduli.hpp"
#include "k3fib/wmodel.hpp"

#include <set>
#include <string>
#include <vector>

namespace k3fib {

struct GaugeAlgebra {
    std::vector<std::string> summands;  // canonical: sorted labels
    static GaugeAlgebra of(std::vector<std::string> parts);
    int rank() const;
    std::string str() const;  // "e8 + so(12)"
    friend bool operator==(const GaugeAlgebra&, const GaugeAlgebra&) = default;
};

// ADE dictionary applied to the reducible fibers of a configuration
// (E8 -> e8, E7 -> e7, E6 -> e6, D_n -> so(2n), A_n -> su(n+1)).
GaugeAlgebra gauge_from_config(const FiberConfig& cfg);

enum class HetBranch { E8SO12, E7E7, SO24SU2SU2, SO28 };
std::string branch_name(HetBranch b);
HetBranch branch_of(FibClass c);

// exact membership in the codimension-one enhancement loci
std::set<std::string> detect_loci(const InvariantPoint& J);  // "a=0","J30=0","J4=0","J4=J5=0"

struct BranchReport {
    HetBranch branch;
    GaugeAlgebra gauge;                // derived from the fiber configuration
    GaugeAlgebra expected;             // catalog value for the detected locus
    std::vector<std::pair<std::string, GaugeAlgebra>> enhancements;  // locus -> algebra
    bool flux = false;                 // nonzero B-flux (two-torsion section)
    std::vector<std::string> annotations;
    FiberConfig config;
    bool consistent() const { return gauge == expected; }
};

BranchReport classify_branch(FibClass c, const InvariantPoint& J);

// the catalog of gauge algebras per branch and locus ("" = generic)
GaugeAlgebra catalog_gauge(HetBranch b, const std::string& locus);

struct BundleWeightReport {
    int m = 0, ell = 0;  // M = Lambda^m, L|Sigma0 = Lambda^ell
    bool consistent = false;
    std::vector<std::string> checks;
    std::vector<std::pair<std::string, int>> section_weights;  // c,d,e,f,g -> Lambda powers
};

// Solves the exponent relations among the line bundles restricted to the
// zero section and cross-checks every chain member.
BundleWeightReport check_bundle_weights();

}  // namespace k3fib
