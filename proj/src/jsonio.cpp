#include "k3fib/jsonio.hpp"

namespace k3fib {

json to_json(const Rat& r) { return r.str(); }

json to_json(const MPoly& p) {
    json terms = json::array();
    for (auto& t : p.terms()) {
        json e = json::array();
        for (auto x : t.exp) e.push_back(x);
        terms.push_back({{"exp", e}, {"coef", t.coef.str()}});
    }
    return {{"vars", p.vars()}, {"terms", terms}, {"str", p.str()}};
}

MPoly mpoly_from_json(const json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<Term> terms;
    for (auto& t : j.at("terms")) {
        ExpVec e;
        for (auto& x : t.at("exp")) e.push_back(x.get<uint32_t>());
        terms.push_back({e, Rat::parse(t.at("coef").get<std::string>())});
    }
    return MPoly::make(vars, terms);
}

json to_json(const ParamPoint& p) {
    return {{"alpha", p.alpha.str()}, {"beta", p.beta.str()},   {"gamma", p.gamma.str()},
            {"delta", p.delta.str()}, {"epsilon", p.epsilon.str()}, {"zeta", p.zeta.str()}};
}

ParamPoint param_from_json(const json& j) {
    auto g = [&](const char* k) { return Rat::parse(j.at(k).get<std::string>()); };
    return {g("alpha"), g("beta"), g("gamma"), g("delta"), g("epsilon"), g("zeta")};
}

json to_json(const InvariantPoint& J) {
    json out = {{"J2", J.J2.str()},
                {"J3", J.J3.str()},
                {"J4", J.J4.str()},
                {"J5", J.J5.str()},
                {"J6", J.J6.str()}};
    if (J.a) out["a"] = J.a->str();
    return out;
}

InvariantPoint invariant_from_json(const json& j) {
    auto g = [&](const char* k) { return Rat::parse(j.at(k).get<std::string>()); };
    InvariantPoint J;
    J.J2 = g("J2");
    J.J3 = g("J3");
    J.J4 = g("J4");
    J.J5 = g("J5");
    J.J6 = g("J6");
    if (j.contains("a")) J.a = Rat::parse(j.at("a").get<std::string>());
    return J;
}

json to_json(const FiberConfig& cfg) {
    json fibers = json::array();
    for (auto& [t, c] : cfg.fibers) fibers.push_back({{"type", t.label()}, {"count", c}});
    return {{"fibers", fibers},
            {"mw_torsion", torsion_label(cfg.mw_torsion)},
            {"picard", cfg.picard()},
            {"euler", cfg.euler_total},
            {"lattice", cfg.lattice},
            {"disc_group", cfg.disc_group}};
}

json to_json(const WModel& m) {
    return {{"a2", to_json(m.a2)}, {"a4", to_json(m.a4)}, {"a6", to_json(m.a6)},
            {"chart", m.tvar}};
}

json to_json(const IdentityReport& r) {
    json out = {{"name", r.name}, {"status", r.status_str()}, {"notes", r.notes}};
    if (r.points > 0) out["points"] = r.points;
    if (r.constant_ratio) out["constant_ratio"] = r.constant_ratio->str();
    if (!r.witnesses.empty()) out["witnesses"] = r.witnesses;
    return out;
}

json to_json(const BranchReport& r) {
    json enh = json::array();
    for (auto& [l, g] : r.enhancements) enh.push_back({{"locus", l}, {"gauge", g.summands}});
    return {{"branch", branch_name(r.branch)},
            {"gauge", r.gauge.summands},
            {"catalog", r.expected.summands},
            {"consistent", r.consistent()},
            {"enhancements", enh},
            {"flux", r.flux},
            {"annotations", r.annotations},
            {"config", to_json(r.config)}};
}

}  // namespace k3fib
