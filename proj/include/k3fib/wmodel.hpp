#pragma once

#include "k3fib/mpoly.hpp"
#include "k3fib/upoly.hpp"

#include <string>
#include <vector>

namespace k3fib {

// Kodaira symbol of a (potentially) singular fiber.
struct KodairaType {
    enum Sym { In, InStar, II, III, IV, IVStar, IIIStar, IIStar } sym;
    int n = 0;  // the index for In / In*

    static KodairaType make_In(int n) { return {In, n}; }
    static KodairaType make_InStar(int n) { return {InStar, n}; }

    int euler() const;
    int ade_rank() const;
    std::string label() const;  // "I1", "I8*", "III*", ...

    friend bool operator==(const KodairaType& a, const KodairaType& b) {
        return a.sym == b.sym && a.n == b.n;
    }
    friend bool operator<(const KodairaType& a, const KodairaType& b) {
        if (a.sym != b.sym) return a.sym < b.sym;
        return a.n < b.n;
    }
};

// A place of Q(t): a finite place given by a monic irreducible uniformizer,
// or the place at infinity (v = 0 on the homogenized model).
struct Place {
    bool infinite = false;
    UPoly uniformizer;  // monic irreducible over Q, finite case
    int degree = 1;
    std::string label() const;
    static Place at_infinity() { return {true, UPoly(), 1}; }
    static Place finite(UPoly pi);
};

struct LocalData {
    long ordf = 0, ordg = 0, ordd = 0;
    friend bool operator==(const LocalData&, const LocalData&) = default;
};

enum class Torsion { Trivial, Z2, Z2xZ2, Undetermined };
std::string torsion_label(Torsion t);

// Long Weierstrass model y^2 = x^3 + a2 x^2 + a4 x + a6 over Q[t] (with
// optional symbolic parameter variables).
struct WModel {
    MPoly a2, a4, a6;
    std::string tvar = "t";

    // completion of the cube: (f, g) with y^2 = x^3 + f x + g
    std::pair<MPoly, MPoly> depress() const;
    MPoly discriminant_poly() const;  // 4 f^3 + 27 g^2
    bool is_specialized() const;      // no variables other than tvar
};

// Valuations (ord f, ord g, ord Delta) at a place, after local
// minimalization (while ordf >= 4 and ordg >= 6, drop (4,6,12)). At
// infinity, computed on the degree-(8,12) homogenization. Delta = 4f^3+27g^2
// must not vanish identically.
LocalData local_data(const MPoly& f, const MPoly& g, const Place& place,
                     const std::string& tvar = "t");

// The characteristic-zero Kodaira table on a minimal valuation triple.
KodairaType kodaira_classify(long ordf, long ordg, long ordd);

struct FiberConfig {
    std::vector<std::pair<KodairaType, int>> fibers;  // canonical order
    Torsion mw_torsion = Torsion::Trivial;
    int ade_total = 0;
    int euler_total = 0;
    std::string lattice;     // polarization label, from the catalog
    std::string disc_group;  // discriminant group D(Lambda), from the catalog

    int picard() const { return 2 + ade_total; }
    std::string fibers_str() const;  // "2 III* + 6 I1"
    bool same_fibers(const FiberConfig& o) const;
};

struct PlaceFiber {
    std::string place;
    int degree = 1;
    LocalData ord;
    KodairaType type;
};

struct ClassifyResult {
    FiberConfig config;
    std::vector<PlaceFiber> places;  // singular places only
};

// Full Kodaira inventory of a specialized model: iterate the irreducible
// factors of Delta plus the place at infinity; enforces Euler sum 24.
ClassifyResult classify_fibration(const WModel& m);

// Screening for 2-torsion sections: rational roots of the cubic at sample
// values of t, interpolation to degree <= 4, exact verification.
Torsion two_torsion_sections(const WModel& m);

int shioda_tate_rank(const FiberConfig& cfg);

// (lattice, discriminant group) for the root-lattice/torsion combinations in
// this family's catalog; synthesized generic label otherwise.
std::pair<std::string, std::string> lattice_lookup(
    const std::vector<std::pair<KodairaType, int>>& fibers, Torsion torsion);

}  // namespace k3fib
