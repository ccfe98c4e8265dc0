#include "k3fib/heterotic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace k3fib {

GaugeAlgebra GaugeAlgebra::of(std::vector<std::string> parts) {
    std::sort(parts.begin(), parts.end());
    return {std::move(parts)};
}

namespace {

int summand_rank(const std::string& s) {
    if (s == "e8") return 8;
    if (s == "e7") return 7;
    if (s == "e6") return 6;
    if (s.rfind("so(", 0) == 0) return std::stoi(s.substr(3)) / 2;
    if (s.rfind("su(", 0) == 0) return std::stoi(s.substr(3)) - 1;
    throw std::invalid_argument("unknown algebra summand " + s);
}

}  // namespace

int GaugeAlgebra::rank() const {
    int r = 0;
    for (auto& s : summands) r += summand_rank(s);
    return r;
}

std::string GaugeAlgebra::str() const {
    if (summands.empty()) return "(none)";
    std::string out;
    for (size_t i = 0; i < summands.size(); ++i) {
        if (i) out += " + ";
        out += summands[i];
    }
    return out;
}

GaugeAlgebra gauge_from_config(const FiberConfig& cfg) {
    std::vector<std::string> parts;
    for (auto& [t, c] : cfg.fibers) {
        std::string s;
        switch (t.sym) {
            case KodairaType::In:
                if (t.n >= 2) s = "su(" + std::to_string(t.n) + ")";
                break;
            case KodairaType::InStar: s = "so(" + std::to_string(2 * t.n + 8) + ")"; break;
            case KodairaType::III: s = "su(2)"; break;
            case KodairaType::IV: s = "su(3)"; break;
            case KodairaType::IVStar: s = "e6"; break;
            case KodairaType::IIIStar: s = "e7"; break;
            case KodairaType::IIStar: s = "e8"; break;
            default: break;
        }
        if (!s.empty())
            for (int i = 0; i < c; ++i) parts.push_back(s);
    }
    return GaugeAlgebra::of(std::move(parts));
}

std::string branch_name(HetBranch b) {
    switch (b) {
        case HetBranch::E8SO12: return "e8-so12";
        case HetBranch::E7E7: return "e7-e7";
        case HetBranch::SO24SU2SU2: return "so24-su2su2";
        case HetBranch::SO28: return "so28";
    }
    return "?";
}

HetBranch branch_of(FibClass c) {
    switch (c) {
        case FibClass::BFD: return HetBranch::E8SO12;
        case FibClass::Standard: return HetBranch::E7E7;
        case FibClass::Alternate: return HetBranch::SO24SU2SU2;
        case FibClass::Maximal: return HetBranch::SO28;
    }
    throw std::invalid_argument("branch_of: bad class");
}

std::set<std::string> detect_loci(const InvariantPoint& J) {
    if (!J.admissible()) throw std::invalid_argument("detect_loci: inadmissible point");
    std::set<std::string> out;
    if (J.a_squared().is_zero()) out.insert("a=0");
    if (j30_value(J).is_zero()) out.insert("J30=0");
    if (J.J4.is_zero()) {
        out.insert("J4=0");
        if (J.J5.is_zero()) out.insert("J4=J5=0");
    }
    return out;
}

GaugeAlgebra catalog_gauge(HetBranch b, const std::string& locus) {
    using GA = GaugeAlgebra;
    static const std::map<std::pair<HetBranch, std::string>, std::vector<std::string>> table = {
        {{HetBranch::E8SO12, ""}, {"e8", "so(12)"}},
        {{HetBranch::E8SO12, "J30=0"}, {"e8", "so(12)", "su(2)"}},
        {{HetBranch::E8SO12, "a=0"}, {"e8", "so(14)"}},
        {{HetBranch::E8SO12, "J4=0"}, {"e8", "e7"}},
        {{HetBranch::E8SO12, "J4=J5=0"}, {"e8", "e8"}},
        {{HetBranch::E7E7, ""}, {"e7", "e7"}},
        {{HetBranch::E7E7, "J30=0"}, {"e7", "e7", "su(2)"}},
        {{HetBranch::E7E7, "J4=0"}, {"e8", "e7"}},
        {{HetBranch::E7E7, "J4=J5=0"}, {"e8", "e8"}},
        {{HetBranch::SO24SU2SU2, ""}, {"so(24)", "su(2)", "su(2)"}},
        {{HetBranch::SO24SU2SU2, "J30=0"}, {"so(24)", "su(2)", "su(2)", "su(2)"}},
        {{HetBranch::SO24SU2SU2, "a=0"}, {"so(24)", "su(4)"}},
        {{HetBranch::SO24SU2SU2, "J4=0"}, {"so(28)", "su(2)"}},
        {{HetBranch::SO24SU2SU2, "J4=J5=0"}, {"so(32)"}},
        {{HetBranch::SO28, ""}, {"so(28)"}},
        {{HetBranch::SO28, "J30=0"}, {"so(28)", "su(2)"}},
        {{HetBranch::SO28, "a=0"}, {"so(30)"}},
        {{HetBranch::SO28, "J4=0"}, {"so(28)", "su(2)"}},
        {{HetBranch::SO28, "J4=J5=0"}, {"so(32)"}},
    };
    auto it = table.find({b, locus});
    if (it == table.end())
        throw std::invalid_argument("catalog_gauge: no entry for " + branch_name(b) + " / " +
                                    (locus.empty() ? "generic" : locus));
    return GA::of(it->second);
}

BranchReport classify_branch(FibClass c, const InvariantPoint& J) {
    if (!J.admissible()) throw std::invalid_argument("classify_branch: inadmissible point");
    BranchReport rep;
    rep.branch = branch_of(c);

    InvariantPoint Jb = J;
    if (c == FibClass::Standard && !Jb.a) {
        auto root = rat_kth_root(Jb.a_squared(), 2);
        if (!root)
            throw std::invalid_argument(
                "classify_branch: standard branch needs a rational square root a");
        Jb.a = *root;
    }
    WModel m = build_mod(c, Jb, Branch::Plus);
    rep.config = classify_fibration(m).config;
    rep.gauge = gauge_from_config(rep.config);

    auto loci = detect_loci(J);
    // most specific catalog locus that applies (a = 0 does not degenerate the
    // standard fibration; it is the branch locus of its double cover)
    std::string key;
    for (const char* cand : {"J4=J5=0", "J4=0", "a=0", "J30=0"}) {
        if (c == FibClass::Standard && std::string(cand) == "a=0") continue;
        if (key.empty() && loci.count(cand)) key = cand;
    }
    rep.expected = catalog_gauge(rep.branch, key);

    for (auto& l : loci) {
        if (c == FibClass::Standard && l == "a=0") continue;
        if (l == "J4=0" && loci.count("J4=J5=0")) continue;
        rep.enhancements.push_back({l, catalog_gauge(rep.branch, l)});
    }

    bool torsion =
        rep.config.mw_torsion == Torsion::Z2 || rep.config.mw_torsion == Torsion::Z2xZ2;
    rep.flux = c == FibClass::Alternate ? true : (c == FibClass::Maximal && torsion);
    if (rep.flux != torsion)
        throw internal_error("classify_branch: flux flag disagrees with the torsion section");

    switch (rep.branch) {
        case HetBranch::E7E7:
            rep.annotations.push_back(
                "double-cover parameter space branched along a^2 = J5^2 - 4 J4 J6 = 0");
            if (J.J6.is_zero()) rep.annotations.push_back("pointlike instanton locus (J6 = 0)");
            break;
        case HetBranch::SO24SU2SU2:
            rep.annotations.push_back("nonzero B-flux generated by the two-torsion section");
            if (loci.count("J4=J5=0"))
                rep.annotations.push_back("global gauge group Spin(32)/Z2");
            else
                rep.annotations.push_back("global gauge group (Spin(24) x SU(2) x SU(2))/Z2");
            break;
        case HetBranch::SO28:
            if (loci.count("J4=J5=0")) rep.annotations.push_back("global gauge group Spin(32)/Z2");
            if (loci.count("J4=0"))
                rep.annotations.push_back("two-torsion section appears on J4 = 0");
            break;
        case HetBranch::E8SO12:
            break;
    }
    return rep;
}

BundleWeightReport check_bundle_weights() {
    // (L|S0)^4 = L^4 M^4 = L^10 M^3 = L^16 M^2 and
    // (L|S0)^6 = M^7 = L^6 M^6 = L^12 M^5 = L^18 M^4 = L^24 M^3,
    // as exponent equations 4 ell = a + b m, 6 ell = a' + b' m in (m, ell)
    BundleWeightReport rep;
    struct Rel {
        int lhs_mult;  // 4 or 6 (power of L|S0)
        int lam, mm;   // Lambda and M exponents
    };
    std::vector<Rel> rels = {{4, 4, 4},  {4, 10, 3}, {4, 16, 2}, {6, 0, 7},
                             {6, 6, 6},  {6, 12, 5}, {6, 18, 4}, {6, 24, 3}};
    // solve from the first two weight-4 relations: 4+4m = 10+3m -> m = 6
    rep.m = rels[1].lam - rels[0].lam;  // (10-4)/(4-3)
    rep.ell = (rels[0].lam + rels[0].mm * rep.m) / 4;
    rep.consistent = true;
    for (auto& r : rels) {
        int lhs = r.lhs_mult * rep.ell;
        int rhs = r.lam + r.mm * rep.m;
        std::ostringstream os;
        os << r.lhs_mult << "*ell = " << r.lam << " + " << r.mm << "*m: " << lhs
           << (lhs == rhs ? " == " : " != ") << rhs;
        rep.checks.push_back(os.str());
        rep.consistent = rep.consistent && lhs == rhs;
    }
    rep.section_weights = {{"c", 10}, {"d", 8}, {"e", 4}, {"f", 12}, {"g", 6}};
    // the general-form coefficients must make every term a section of
    // (L|S0)^4 (X-terms) or (L|S0)^6 (X^0-terms): a t^2, c t^3, e t^4 and
    // b t^3, cd t^4, (de+f) t^5, g t^6, t^7 with a = -3d^2, b = -2d^3
    std::map<std::string, int> w(rep.section_weights.begin(), rep.section_weights.end());
    std::vector<std::pair<int, int>> terms4 = {
        {2 * w["d"], 2}, {w["c"], 3}, {w["e"], 4}};  // a = -3 d^2
    std::vector<std::pair<int, int>> terms6 = {{3 * w["d"], 3},        // b = -2 d^3
                                               {w["c"] + w["d"], 4},
                                               {w["d"] + w["e"], 5},   // d e t^5
                                               {w["f"], 5},            // f t^5
                                               {w["g"], 6},
                                               {0, 7}};
    for (auto& [lw, tp] : terms4) {
        bool ok = lw + tp * rep.m == 4 * rep.ell;
        rep.consistent = rep.consistent && ok;
        std::ostringstream os;
        os << "Lambda^" << lw << " M^" << tp << " in (L|S0)^4: " << (ok ? "ok" : "FAIL");
        rep.checks.push_back(os.str());
    }
    for (auto& [lw, tp] : terms6) {
        bool ok = lw + tp * rep.m == 6 * rep.ell;
        rep.consistent = rep.consistent && ok;
        std::ostringstream os;
        os << "Lambda^" << lw << " M^" << tp << " in (L|S0)^6: " << (ok ? "ok" : "FAIL");
        rep.checks.push_back(os.str());
    }
    return rep;
}

}  // namespace k3fib
