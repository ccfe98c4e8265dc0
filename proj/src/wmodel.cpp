#include "k3fib/wmodel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace k3fib {

int KodairaType::euler() const {
    switch (sym) {
        case In: return n;
        case InStar: return n + 6;
        case II: return 2;
        case III: return 3;
        case IV: return 4;
        case IVStar: return 8;
        case IIIStar: return 9;
        case IIStar: return 10;
    }
    return 0;
}

int KodairaType::ade_rank() const {
    switch (sym) {
        case In: return n >= 2 ? n - 1 : 0;
        case InStar: return n + 4;
        case II: return 0;
        case III: return 1;
        case IV: return 2;
        case IVStar: return 6;
        case IIIStar: return 7;
        case IIStar: return 8;
    }
    return 0;
}

std::string KodairaType::label() const {
    switch (sym) {
        case In: return "I" + std::to_string(n);
        case InStar: return "I" + std::to_string(n) + "*";
        case II: return "II";
        case III: return "III";
        case IV: return "IV";
        case IVStar: return "IV*";
        case IIIStar: return "III*";
        case IIStar: return "II*";
    }
    return "?";
}

Place Place::finite(UPoly pi) {
    if (pi.deg() < 1) throw std::invalid_argument("Place: constant uniformizer");
    pi = pi / pi.lc();
    return {false, pi, static_cast<int>(pi.deg())};
}

std::string Place::label() const {
    if (infinite) return "t=inf";
    if (uniformizer.deg() == 1) return "t=" + (-uniformizer.coeff(0)).str();
    return uniformizer.str() + "=0";
}

std::string torsion_label(Torsion t) {
    switch (t) {
        case Torsion::Trivial: return "trivial";
        case Torsion::Z2: return "Z/2Z";
        case Torsion::Z2xZ2: return "Z/2Z x Z/2Z";
        case Torsion::Undetermined: return "undetermined";
    }
    return "?";
}

std::pair<MPoly, MPoly> WModel::depress() const {
    Rat third(1, 3), two27(2, 27);
    MPoly f = a4 - a2 * a2 * third;
    MPoly g = a6 - a2 * a4 * third + a2 * a2 * a2 * two27;
    return {f, g};
}

MPoly WModel::discriminant_poly() const {
    auto [f, g] = depress();
    return f.pow(3) * Rat(4) + g.pow(2) * Rat(27);
}

bool WModel::is_specialized() const {
    for (auto* p : {&a2, &a4, &a6})
        for (auto& v : p->vars())
            if (v != tvar && p->depends_on(v)) return false;
    return true;
}

LocalData local_data(const MPoly& f, const MPoly& g, const Place& place,
                     const std::string& tvar) {
    UPoly fu = UPoly::from_mpoly(f, tvar);
    UPoly gu = UPoly::from_mpoly(g, tvar);
    UPoly delta = fu.pow(3) * Rat(4) + gu.pow(2) * Rat(27);
    if (delta.is_zero()) throw std::invalid_argument("local_data: identically zero discriminant");

    long vf, vg, vd;
    if (place.infinite) {
        // orders of v on the homogenization with deg f = 8, deg g = 12
        if (fu.deg() > 8 || gu.deg() > 12)
            throw std::invalid_argument("local_data: degrees exceed the K3 bound (8, 12)");
        vf = fu.is_zero() ? 1000 : 8 - fu.deg();
        vg = gu.is_zero() ? 1000 : 12 - gu.deg();
        vd = 24 - delta.deg();
    } else {
        vf = fu.is_zero() ? 1000 : fu.valuation(place.uniformizer);
        vg = gu.is_zero() ? 1000 : gu.valuation(place.uniformizer);
        vd = delta.valuation(place.uniformizer);
    }
    while (vf >= 4 && vg >= 6) {
        vf -= 4;
        vg -= 6;
        vd -= 12;
    }
    return {vf, vg, vd};
}

KodairaType kodaira_classify(long a, long b, long c) {
    // a = ord f, b = ord g, c = ord Delta, minimal model assumed
    if (c <= 0) return KodairaType::make_In(0);
    if (a == 0 && b == 0) return KodairaType::make_In(static_cast<int>(c));
    if (a >= 1 && b == 1 && c == 2) return {KodairaType::II, 0};
    if (a == 1 && b >= 2 && c == 3) return {KodairaType::III, 0};
    if (a >= 2 && b == 2 && c == 4) return {KodairaType::IV, 0};
    if (c == 6 && ((a == 2 && b >= 3) || (a >= 2 && b == 3))) return KodairaType::make_InStar(0);
    if (a == 2 && b == 3 && c >= 7) return KodairaType::make_InStar(static_cast<int>(c - 6));
    if (a >= 3 && b == 4 && c == 8) return {KodairaType::IVStar, 0};
    if (a == 3 && b >= 5 && c == 9) return {KodairaType::IIIStar, 0};
    if (a >= 4 && b == 5 && c == 10) return {KodairaType::IIStar, 0};
    throw internal_error("kodaira_classify: triple (" + std::to_string(a) + "," +
                         std::to_string(b) + "," + std::to_string(c) +
                         ") is outside the table (non-minimal or inconsistent)");
}

namespace {

// order of fibers in printed configurations: big fibers first, I1 last
bool fiber_order(const KodairaType& a, const KodairaType& b) {
    if (a.euler() != b.euler()) return a.euler() > b.euler();
    return a.label() < b.label();
}

void push_fiber(std::vector<std::pair<KodairaType, int>>& fs, KodairaType t, int count) {
    for (auto& [ft, c] : fs)
        if (ft == t) {
            c += count;
            return;
        }
    fs.push_back({t, count});
}

}  // namespace

std::string FiberConfig::fibers_str() const {
    if (fibers.empty()) return "none";
    std::ostringstream os;
    bool first = true;
    for (auto& [t, c] : fibers) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c << " ";
        os << t.label();
    }
    return os.str();
}

bool FiberConfig::same_fibers(const FiberConfig& o) const {
    return fibers == o.fibers;
}

ClassifyResult classify_fibration(const WModel& m) {
    if (!m.is_specialized())
        throw std::invalid_argument("classify_fibration: unbound parameter variables");
    const std::string& tv = m.tvar;
    auto [fm, gm] = m.depress();
    UPoly f = UPoly::from_mpoly(fm, tv);
    UPoly g = UPoly::from_mpoly(gm, tv);
    UPoly delta = f.pow(3) * Rat(4) + g.pow(2) * Rat(27);
    if (delta.is_zero())
        throw std::invalid_argument("classify_fibration: identically zero discriminant");

    // global minimalization: strip pi^4 | f, pi^6 | g
    if (!f.is_zero() && !g.is_zero()) {
        UPoly h = gcd(f, g);
        if (h.deg() > 0)
            for (auto& [pi, mult] : factor(h).factors) {
                (void)mult;
                while (f.valuation(pi) >= 4 && g.valuation(pi) >= 6) {
                    f = f.exact_div(pi.pow(4));
                    g = g.exact_div(pi.pow(6));
                }
            }
    } else if (f.is_zero() && !g.is_zero()) {
        for (auto& [pi, mult] : factor(g).factors) {
            (void)mult;
            while (g.valuation(pi) >= 6) g = g.exact_div(pi.pow(6));
        }
    } else if (g.is_zero() && !f.is_zero()) {
        for (auto& [pi, mult] : factor(f).factors) {
            (void)mult;
            while (f.valuation(pi) >= 4) f = f.exact_div(pi.pow(4));
        }
    }
    delta = f.pow(3) * Rat(4) + g.pow(2) * Rat(27);
    if (f.deg() > 8 || g.deg() > 12)
        throw std::invalid_argument("classify_fibration: not a K3 model (deg f > 8 or deg g > 12)");

    ClassifyResult res;
    auto& cfg = res.config;

    for (auto& [pi, mult] : factor(delta).factors) {
        Place pl = Place::finite(pi);
        long vf = f.is_zero() ? 1000 : f.valuation(pl.uniformizer);
        long vg = g.is_zero() ? 1000 : g.valuation(pl.uniformizer);
        long vd = mult;
        while (vf >= 4 && vg >= 6) {
            vf -= 4;
            vg -= 6;
            vd -= 12;
        }
        if (vd <= 0) continue;
        KodairaType t = kodaira_classify(vf, vg, vd);
        push_fiber(cfg.fibers, t, pl.degree);
        res.places.push_back({pl.label(), pl.degree, {vf, vg, vd}, t});
    }

    // place at infinity
    {
        long vf = f.is_zero() ? 1000 : 8 - f.deg();
        long vg = g.is_zero() ? 1000 : 12 - g.deg();
        long vd = 24 - delta.deg();
        while (vf >= 4 && vg >= 6) {
            vf -= 4;
            vg -= 6;
            vd -= 12;
        }
        if (vd > 0) {
            KodairaType t = kodaira_classify(vf, vg, vd);
            push_fiber(cfg.fibers, t, 1);
            res.places.push_back({"t=inf", 1, {vf, vg, vd}, t});
        }
    }

    std::sort(cfg.fibers.begin(), cfg.fibers.end(),
              [](const auto& a, const auto& b) { return fiber_order(a.first, b.first); });
    for (auto& [t, c] : cfg.fibers) {
        cfg.euler_total += t.euler() * c;
        cfg.ade_total += t.ade_rank() * c;
    }
    if (cfg.euler_total != 24)
        throw internal_error("classify_fibration: Euler sum " +
                             std::to_string(cfg.euler_total) + " != 24 (minimalization bug?)");

    WModel minimal{MPoly(Rat(0)), f.to_mpoly(m.tvar), g.to_mpoly(m.tvar), m.tvar};
    cfg.mw_torsion = two_torsion_sections(minimal);
    auto [lat, dg] = lattice_lookup(cfg.fibers, cfg.mw_torsion);
    cfg.lattice = lat;
    cfg.disc_group = dg;
    return res;
}

Torsion two_torsion_sections(const WModel& m) {
    if (!m.is_specialized())
        throw std::invalid_argument("two_torsion_sections: unbound parameter variables");
    auto [fm, gm] = m.depress();
    UPoly f = UPoly::from_mpoly(fm, m.tvar);
    UPoly g = UPoly::from_mpoly(gm, m.tvar);
    UPoly delta = f.pow(3) * Rat(4) + g.pow(2) * Rat(27);
    if (delta.is_zero())
        throw std::invalid_argument("two_torsion_sections: degenerate model");

    // sample rational t avoiding Delta(t) = 0
    std::vector<Rat> samples;
    for (long v : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 5L, 7L, -5L, 11L, -7L}) {
        Rat tv(v);
        if (!delta.eval(tv).is_zero()) samples.push_back(tv);
        if (samples.size() == 8) break;
    }
    if (samples.size() < 6) throw internal_error("two_torsion_sections: sampling failed");

    std::vector<std::vector<Rat>> roots;
    for (auto& tv : samples) {
        UPoly cubic(std::vector<Rat>{g.eval(tv), f.eval(tv), Rat(0), Rat(1)});
        auto rs = rational_roots(cubic);
        if (rs.empty()) return Torsion::Trivial;  // sound disproof at one fiber
        roots.push_back(rs);
    }

    // interpolate a degree <= 4 section through the first 5 sample points,
    // filter on the remaining ones, confirm exactly
    std::vector<UPoly> sections;
    size_t combos = 1;
    for (size_t i = 0; i < 5; ++i) combos *= roots[i].size();
    for (size_t code = 0; code < combos; ++code) {
        size_t c = code;
        std::vector<std::pair<Rat, Rat>> pts;
        for (size_t i = 0; i < 5; ++i) {
            pts.push_back({samples[i], roots[i][c % roots[i].size()]});
            c /= roots[i].size();
        }
        UPoly cand = interpolate(pts);
        if (cand.deg() > 4) continue;
        bool consistent = true;
        for (size_t i = 5; i < samples.size() && consistent; ++i) {
            Rat val = cand.eval(samples[i]);
            consistent = std::find(roots[i].begin(), roots[i].end(), val) != roots[i].end();
        }
        if (!consistent) continue;
        UPoly check = cand.pow(3) + f * cand + g;
        if (!check.is_zero()) continue;
        if (std::find(sections.begin(), sections.end(), cand) == sections.end())
            sections.push_back(cand);
        if (sections.size() >= 2) return Torsion::Z2xZ2;
    }
    if (sections.size() == 1) return Torsion::Z2;
    return Torsion::Undetermined;  // roots exist pointwise, no global section found
}

int shioda_tate_rank(const FiberConfig& cfg) {
    int r = 2;
    for (auto& [t, c] : cfg.fibers) r += t.ade_rank() * c;
    return r;
}

std::pair<std::string, std::string> lattice_lookup(
    const std::vector<std::pair<KodairaType, int>>& fibers, Torsion torsion) {
    // key: sorted ADE root summands of the reducible fibers
    std::vector<std::string> roots;
    for (auto& [t, c] : fibers) {
        std::string r;
        switch (t.sym) {
            case KodairaType::In: if (t.n >= 2) r = "A" + std::to_string(t.n - 1); break;
            case KodairaType::InStar: r = "D" + std::to_string(t.n + 4); break;
            case KodairaType::III: r = "A1"; break;
            case KodairaType::IV: r = "A2"; break;
            case KodairaType::IVStar: r = "E6"; break;
            case KodairaType::IIIStar: r = "E7"; break;
            case KodairaType::IIStar: r = "E8"; break;
            default: break;
        }
        if (!r.empty())
            for (int i = 0; i < c; ++i) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    std::string key;
    for (auto& r : roots) key += r + ",";
    bool tor = torsion == Torsion::Z2 || torsion == Torsion::Z2xZ2;
    key += tor ? "Z2" : "1";

    static const std::map<std::string, std::pair<std::string, std::string>> catalog = {
        {"E7,E7,1", {"H + E7(-1) + E7(-1)", "Z2^2"}},
        {"A1,E7,E7,1", {"H + E7(-1) + E7(-1) + A1(-1)", "Z2^3"}},
        {"E7,E8,1", {"H + E8(-1) + E7(-1)", "Z2"}},
        {"E8,E8,1", {"H + E8(-1) + E8(-1)", "0"}},
        {"A1,A1,D12,Z2", {"H + E7(-1) + E7(-1)", "Z2^2"}},
        {"A3,D12,Z2", {"H + E8(-1) + D7(-1)", "Z4"}},
        {"A1,A1,A1,D12,Z2", {"H + E7(-1) + E7(-1) + A1(-1)", "Z2^3"}},
        {"A1,D14,Z2", {"H + E8(-1) + E7(-1)", "Z2"}},
        {"D16,Z2", {"H + E8(-1) + E8(-1)", "0"}},
        {"D6,E8,1", {"H + E8(-1) + D6(-1)", "Z2^2"}},
        {"D7,E8,1", {"H + E8(-1) + D7(-1)", "Z4"}},
        {"A1,D6,E8,1", {"H + E8(-1) + D6(-1) + A1(-1)", "Z2^3"}},
        {"D14,1", {"H + D14(-1)", "Z2^2"}},
        {"D15,1", {"H + D15(-1)", "Z4"}},
        {"A1,D14,1", {"H + D14(-1) + A1(-1)", "Z2^3"}},
    };
    auto it = catalog.find(key);
    if (it != catalog.end()) return it->second;

    // outside the catalog: synthesize the trivial-glue label
    std::string lat = "H";
    for (auto& r : roots) lat += " + " + r + "(-1)";
    if (tor) lat += " (2-torsion overlattice)";
    return {lat, "?"};
}

}  // namespace k3fib
