// k3fib command-line front end: build | classify | invariants | table |
// verify | heterotic. All values are exact rationals; JSON output under a
// fixed seed is byte-stable.

#include "k3fib/fibrations.hpp"
#include "k3fib/heterotic.hpp"
#include "k3fib/jsonio.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace k3fib;

namespace {

std::vector<Rat> parse_rats(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rat::parse(item));
    return out;
}

ParamPoint parse_params(const std::string& csv) {
    auto v = parse_rats(csv);
    if (v.size() != 6) throw CLI::ValidationError("--params needs six rationals");
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

InvariantPoint parse_J(const std::string& csv, const std::string& a) {
    auto v = parse_rats(csv);
    if (v.size() != 5) throw CLI::ValidationError("--J needs five rationals");
    InvariantPoint J;
    J.J2 = v[0];
    J.J3 = v[1];
    J.J4 = v[2];
    J.J5 = v[3];
    J.J6 = v[4];
    if (!a.empty()) J.a = Rat::parse(a);
    return J;
}

struct Out {
    std::string path;
    std::ostringstream buf;
    int flush() {
        if (path.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(path);
            f << buf.str();
        }
        return 0;
    }
};

std::string delta_shape_line(const WModel& m) {
    auto [f, g] = m.depress();
    MPoly delta = m.discriminant_poly();
    if (m.is_specialized()) {
        UPoly d = UPoly::from_mpoly(delta, m.tvar);
        std::ostringstream os;
        os << "Delta factors:";
        auto fac = factor(d);
        os << " " << fac.unit.str();
        for (auto& [p, mult] : fac.factors) {
            os << " * (" << p.str(m.tvar) << ")";
            if (mult > 1) os << "^" << mult;
        }
        return os.str();
    }
    return "Delta = " + delta.str();
}

int run_build(FibClass cls, bool symbolic, const std::string& jset, const std::string& aval,
              const std::string& params, const std::string& branch, Out& out, bool as_json) {
    Branch b = branch == "-" ? Branch::Minus : Branch::Plus;
    WModel m;
    if (symbolic) {
        m = build_mod_symbolic(cls, b);
    } else if (!params.empty()) {
        m = build_raw(cls, parse_params(params));
    } else if (!jset.empty()) {
        m = build_mod(cls, parse_J(jset, aval), b);
    } else {
        throw CLI::ValidationError("build needs --symbolic, --J or --params");
    }
    if (as_json) {
        out.buf << to_json(m).dump(2) << "\n";
        return 0;
    }
    out.buf << "fibration: " << class_name(cls) << "\n";
    if (!m.a2.is_zero()) out.buf << "a2 = " << m.a2.str() << "\n";
    out.buf << "a4 = " << m.a4.str() << "\n";
    out.buf << "a6 = " << m.a6.str() << "\n";
    out.buf << delta_shape_line(m) << "\n";
    return 0;
}

int run_classify(FibClass cls, const std::string& jset, const std::string& aval,
                 const std::string& params, const std::string& branch, Out& out, bool as_json) {
    Branch b = branch == "-" ? Branch::Minus : Branch::Plus;
    WModel m;
    if (!params.empty()) {
        m = build_raw(cls, parse_params(params));
    } else if (!jset.empty()) {
        m = build_mod(cls, parse_J(jset, aval), b);
    } else {
        throw CLI::ValidationError("classify needs --J or --params");
    }
    auto res = classify_fibration(m);
    if (as_json) {
        json j = to_json(res.config);
        json places = json::array();
        for (auto& p : res.places)
            places.push_back({{"place", p.place},
                              {"degree", p.degree},
                              {"ord", {p.ord.ordf, p.ord.ordg, p.ord.ordd}},
                              {"type", p.type.label()}});
        j["places"] = places;
        out.buf << j.dump(2) << "\n";
        return 0;
    }
    out.buf << "fibers: " << res.config.fibers_str() << "\n";
    out.buf << "MW torsion: " << torsion_label(res.config.mw_torsion) << "\n";
    out.buf << "picard: " << res.config.picard()
            << "  lattice: " << res.config.lattice << "  D(Lambda): " << res.config.disc_group
            << "\n";
    for (auto& p : res.places)
        out.buf << "  " << p.type.label() << "  at " << p.place << "  (ord f,g,D) = ("
                << p.ord.ordf << "," << p.ord.ordg << "," << p.ord.ordd << ")"
                << (p.degree > 1 ? "  x" + std::to_string(p.degree) + " conjugate places" : "")
                << "\n";
    return 0;
}

int run_table(uint64_t seed, Out& out, bool as_json) {
    auto results = reproduce_table(seed);
    bool all_ok = true;
    if (as_json) {
        json rows = json::array();
        for (auto& r : results) {
            all_ok = all_ok && r.ok;
            rows.push_back({{"fibration", class_name(r.row->cls)},
                            {"locus", locus_name(r.row->locus)},
                            {"expected", r.row->fibers},
                            {"got", r.got.fibers_str()},
                            {"ok", r.ok},
                            {"point", r.point}});
        }
        out.buf << json{{"rows", rows}, {"all_ok", all_ok}}.dump(2) << "\n";
        return all_ok ? 0 : 1;
    }
    FibClass last = FibClass::Maximal;
    bool first = true;
    for (auto& r : results) {
        if (first || r.row->cls != last) {
            out.buf << "--- " << class_name(r.row->cls) << " fibration\n";
            out.buf << "  " << std::left << std::setw(10) << "locus" << std::setw(4) << "p"
                    << std::setw(26) << "singular fibers" << std::setw(13) << "MW"
                    << std::setw(32) << "lattice" << std::setw(6) << "D(L)" << "status\n";
            last = r.row->cls;
            first = false;
        }
        all_ok = all_ok && r.ok;
        out.buf << "  " << std::left << std::setw(10) << locus_name(r.row->locus) << std::setw(4)
                << r.row->picard << std::setw(26) << r.row->fibers << std::setw(13)
                << r.row->torsion << std::setw(32) << r.row->lattice << std::setw(6)
                << r.row->dgroup << (r.ok ? "ok" : "MISMATCH got " + r.got.fibers_str()) << "\n";
    }
    out.buf << (all_ok ? "all rows reproduced\n" : "TABLE MISMATCH\n");
    return all_ok ? 0 : 1;
}

int run_verify(const RunConfig& cfg, const std::string& filter, Out& out, bool as_json) {
    auto reports = run_identity_suite(cfg, filter);
    bool all_ok = true;
    json arr = json::array();
    for (auto& r : reports) {
        all_ok = all_ok && !r.failed();
        if (as_json) {
            arr.push_back(to_json(r));
        } else {
            out.buf << std::left << std::setw(28) << r.name << std::setw(24) << r.status_str();
            if (!r.notes.empty()) out.buf << " " << r.notes;
            out.buf << "\n";
        }
    }
    if (as_json) out.buf << json{{"reports", arr}, {"all_ok", all_ok}}.dump(2) << "\n";
    else out.buf << (all_ok ? "all checks passed\n" : "CHECKS FAILED\n");
    return all_ok ? 0 : 1;
}

int run_invariants(const std::string& params, Out& out, bool as_json) {
    ParamPoint p = parse_params(params);
    InvariantPoint J = invariants(p);
    if (as_json) {
        out.buf << to_json(J).dump(2) << "\n";
    } else {
        out.buf << "J = " << J.str() << "\n";
    }
    return 0;
}

int run_heterotic(const std::string& jset, const std::string& aval, const std::string& params,
                  const std::string& clsname, Out& out, bool as_json) {
    InvariantPoint J;
    if (!params.empty()) {
        J = invariants(parse_params(params));
    } else if (!jset.empty()) {
        J = parse_J(jset, aval);
    } else {
        throw CLI::ValidationError("heterotic needs --J or --params");
    }
    std::vector<FibClass> classes;
    if (clsname.empty()) {
        classes = {FibClass::Standard, FibClass::Alternate, FibClass::BFD, FibClass::Maximal};
    } else {
        auto c = class_from_name(clsname);
        if (!c) throw CLI::ValidationError("unknown fibration class " + clsname);
        classes = {*c};
    }
    bool consistent = true;
    json arr = json::array();
    for (auto c : classes) {
        BranchReport r = classify_branch(c, J);
        consistent = consistent && r.consistent();
        if (as_json) {
            arr.push_back(to_json(r));
        } else {
            out.buf << branch_name(r.branch) << ": " << r.gauge.str()
                    << (r.consistent() ? "" : "  [catalog: " + r.expected.str() + "]")
                    << (r.flux ? "  [B-flux]" : "") << "\n";
            for (auto& [l, g] : r.enhancements)
                out.buf << "  enhancement at " << l << ": " << g.str() << "\n";
            for (auto& a : r.annotations) out.buf << "  note: " << a << "\n";
        }
    }
    if (as_json) out.buf << arr.dump(2) << "\n";
    return consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classifier for the Jacobian elliptic fibrations of a family of "
                 "lattice-polarized K3 surfaces"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    RunConfig cfg;
    std::string format = "text", outfile;
    app.add_option("--seed", cfg.seed, "sampling seed");
    app.add_option("--points", cfg.points, "sample count for point-based checks");
    app.add_option("--budget", cfg.budget, "symbolic term budget");
    app.add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", outfile, "write output to a file");

    std::string clsname, jset, aval, params, branch = "+", filter;
    bool symbolic = false;

    auto* build = app.add_subcommand("build", "print a Weierstrass model");
    build->add_option("class", clsname)->required();
    build->add_flag("--symbolic", symbolic);
    build->add_option("--J", jset, "J2,J3,J4,J5,J6");
    build->add_option("--a", aval, "square root of J5^2 - 4 J4 J6");
    build->add_option("--params", params, "alpha,beta,gamma,delta,epsilon,zeta");
    build->add_option("--branch", branch)->check(CLI::IsMember({"+", "-"}));

    auto* classify = app.add_subcommand("classify", "Kodaira fiber inventory");
    classify->add_option("class", clsname)->required();
    classify->add_option("--J", jset);
    classify->add_option("--a", aval);
    classify->add_option("--params", params);
    classify->add_option("--branch", branch)->check(CLI::IsMember({"+", "-"}));

    auto* table = app.add_subcommand("table", "reproduce the confluence tables");
    auto* verify = app.add_subcommand("verify", "run the identity suite");
    verify->add_option("filter", filter, "substring filter on check names");
    auto* inv = app.add_subcommand("invariants", "sextuple -> J-invariants");
    inv->add_option("--params", params)->required();
    auto* het = app.add_subcommand("heterotic", "dual gauge algebra per branch");
    het->add_option("--J", jset);
    het->add_option("--a", aval);
    het->add_option("--params", params);
    het->add_option("--class", clsname);

    CLI11_PARSE(app, argc, argv);

    Out out{outfile, {}};
    bool as_json = format == "json";
    int rc = 0;
    try {
        if (build->parsed() || classify->parsed()) {
            auto c = class_from_name(clsname);
            if (!c) throw CLI::ValidationError("unknown fibration class " + clsname);
            rc = build->parsed()
                     ? run_build(*c, symbolic, jset, aval, params, branch, out, as_json)
                     : run_classify(*c, jset, aval, params, branch, out, as_json);
        } else if (table->parsed()) {
            rc = run_table(cfg.seed, out, as_json);
        } else if (verify->parsed()) {
            rc = run_verify(cfg, filter, out, as_json);
        } else if (inv->parsed()) {
            rc = run_invariants(params, out, as_json);
        } else if (het->parsed()) {
            rc = run_heterotic(jset, aval, params, clsname, out, as_json);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    out.flush();
    return rc;
}
