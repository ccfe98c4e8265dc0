#pragma once

#include "k3fib/moduli.hpp"
#include "k3fib/mpoly.hpp"
#include "k3fib/upoly.hpp"
#include "k3fib/wmodel.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace k3fib {

enum class FibClass { Standard, Alternate, BFD, Maximal };
std::string class_name(FibClass c);
std::optional<FibClass> class_from_name(const std::string& s);

enum class Branch { Plus, Minus };

// --- deterministic sampling -------------------------------------------------

struct RunConfig {
    uint64_t seed = 20260811;
    int points = 20;
    long budget = 2'000'000;  // symbolic term-count budget
};

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    // numerator uniform in [-50, 50] \ {0}, denominator in [1, 50]
    Rat rat();
    Rat nonzero_rat();
    long integer(long lo, long hi);
    ParamPoint param_point();          // admissible, all slots nonzero
    InvariantPoint invariant_point();  // generic guards, rational a
    // a guarded sextuple together with its invariants
    std::pair<ParamPoint, InvariantPoint> admissible_pair();
    std::mt19937_64& raw() { return eng_; }

private:
    std::mt19937_64 eng_;
};

// --- builders ----------------------------------------------------------------

// Homogeneous (u, v) data of the four fibrations on the quartic's minimal
// resolution, with symbolic alpha..zeta coefficients.
struct RawModelUV {
    MPoly a2, a4, a6;  // in u, v and the parameter variables
};
RawModelUV build_raw_uv(FibClass c);

// Affine chart v = 1, t = u; symbolic in alpha..zeta unless a point is given.
WModel build_raw_symbolic(FibClass c);
WModel build_raw(FibClass c, const ParamPoint& p);

// Modular-coordinate models, symbolic in J2..J6 (and the square root "a" for
// the standard fibration) or specialized at a point. The standard builder
// with J6 != 0 needs a consistent rational a and a branch sign.
WModel build_mod_symbolic(FibClass c, Branch b = Branch::Plus);
WModel build_mod(FibClass c, const InvariantPoint& J, Branch b = Branch::Plus);

// The two affine charts of the standard fibration on the J6 = 0 locus.
WModel build_std_j6zero_symbolic(int chart);
WModel build_std_j6zero(const InvariantPoint& J, int chart);

// Quartic hypersurface polynomial in X, Y, Z, W (symbolic parameters).
MPoly quartic_poly();

// reduce even powers of "a" by a^2 = J5^2 - 4 J4 J6
MPoly reduce_a(const MPoly& p);

// --- J30 and the degeneration loci -------------------------------------------

UPoly alt_A(const InvariantPoint& J);
UPoly alt_B(const InvariantPoint& J);
UPoly alt_D(const InvariantPoint& J);  // A^2 - 4B, the degree-6 cofactor
Rat j30_value(const InvariantPoint& J);

enum class Locus { Generic, Res, A0, J30, J4, J4J5 };
std::string locus_name(Locus l);

// A rational point on the requested locus, generic otherwise; the on-locus
// identity is verified exactly and failed draws are retried.
InvariantPoint construct_point(FibClass c, Locus l, Rng& rng);

std::pair<WModel, FiberConfig> specialize(FibClass c, Locus l, Rng& rng);

// --- identity-verification suite ----------------------------------------------

enum class IdStatus { VerifiedSymbolic, VerifiedAtPoints, Failed };

struct IdentityReport {
    std::string name;
    IdStatus status = IdStatus::Failed;
    int points = 0;                    // sample count for point-based checks
    std::vector<std::string> witnesses;
    std::optional<Rat> constant_ratio;
    std::string notes;
    bool failed() const { return status == IdStatus::Failed; }
    std::string status_str() const;
};

IdentityReport verify_substitution(FibClass c, const RunConfig& cfg);
IdentityReport verify_fplus_fminus();
IdentityReport verify_j6zero_charts();
IdentityReport verify_j30(const RunConfig& cfg);
IdentityReport verify_reduction(FibClass c);  // BFD, Alternate or Maximal
IdentityReport verify_convergence_std_bfd();
IdentityReport verify_convergence_alt_max();
IdentityReport verify_delta_shape(FibClass c, const RunConfig& cfg);
IdentityReport verify_branch_configs(const RunConfig& cfg);

// All checks whose name contains `filter`, sorted by name.
std::vector<IdentityReport> run_identity_suite(const RunConfig& cfg,
                                               const std::string& filter = "");

// --- Figure-style confluence tables -------------------------------------------

struct TableRow {
    FibClass cls;
    Locus locus;
    const char* fibers;
    const char* torsion;
    int picard;
    const char* lattice;
    const char* dgroup;
};

const std::vector<TableRow>& confluence_rows();

struct TableResult {
    const TableRow* row;
    FiberConfig got;
    bool ok;
    std::string point;
};

std::vector<TableResult> reproduce_table(uint64_t seed);

}  // namespace k3fib
