#include <atomic>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lycas/json_io.hpp"
#include "lycas/random_reps.hpp"

namespace lycas {
namespace {

struct Options {
    bool json = false;
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    int jobs = 1;
    bool sufficient = false;
    bool list = false;
};

OJson load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error(path + ": cannot open file");
    try {
        return OJson::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw format_error(path + ": " + e.what());
    }
}

void write_payload(const std::string& path, const OJson& payload) {
    std::ofstream f(path);
    if (!f) throw format_error(path + ": cannot open for writing");
    f << payload.dump(2) << "\n";
}

int exit_code(const Report& r) {
    if (r.status == "pass") return 0;
    return r.status == "fail" ? 1 : 2;
}

int emit(const Report& r, const Options& opt) {
    if (opt.json)
        std::cout << report_json(r).dump(2) << "\n";
    else
        std::cout << report_text(r);
    if (r.status == "error")
        for (const auto& f : r.findings)
            if (f.verdict != "pass") std::cerr << "error: " << f.witness << "\n";
    if (!opt.out.empty() && !r.artifacts.empty()) write_payload(opt.out, r.artifacts.front().second);
    return exit_code(r);
}

std::string tight_witness(const TightReport& tr) {
    if (tr.tight) return "";
    std::string s;
    for (size_t i = 0; i < tr.rel_pairs.size(); ++i) {
        if (i) s += " + ";
        if (tr.rel_coeffs[i] != 1) s += "(" + rat_str(tr.rel_coeffs[i]) + ")*";
        s += "D[" + std::to_string(tr.rel_pairs[i].first) + "," +
             std::to_string(tr.rel_pairs[i].second) + "]";
    }
    return s + " = 0 but the matching combination of delta is nonzero";
}

// Cross-checks an optional leading algebra file against the algebra
// embedded in a representation file.
void cross_check_algebra(const std::string& path, const LYAlgebra& T) {
    OJson j = load_file(path);
    const std::string kind = kind_of(j);
    LYAlgebra Tf;
    if (kind == "ly")
        Tf = ly_from_json(j);
    else if (kind == "ism")
        Tf = ism_from_json(j).T;
    else
        throw format_error(path + ": expected an algebra file (format ly or ism), got \"" +
                           kind + "\"");
    if (!Tf.same_structure(T))
        throw format_error(path + ": algebra does not match the one embedded in the "
                           "representation file");
}

Report validate_one(const std::string& path) {
    Report rep;
    rep.command = "validate";
    rep.path = path;
    try {
        OJson j = load_file(path);
        const std::string kind = kind_of(j);
        if (kind == "ly") {
            rep.add(check_ly_axioms(ly_from_json(j)));
        } else if (kind == "lie") {
            rep.add(check_jacobi(lie_from_json(j)));
        } else if (kind == "triple") {
            ReductiveTriple rt = triple_from_json(j);
            rep.add(check_jacobi(rt.g));
            rep.add(check_reductive_triple(rt));
        } else if (kind == "spair") {
            LocalRegularSPair p = spair_from_json(j);
            rep.add(check_jacobi(p.g));
            rep.add(check_lrsp(p));
        } else if (kind == "ism") {
            InfSManifold S = ism_from_json(j);
            rep.add(check_ly_axioms(S.T));
            rep.add(check_ism(S));
        } else if (kind == "lyrep") {
            LYRep r = lyrep_from_json(j);
            rep.add(check_ly_axioms(r.T));
            rep.add(check_rly(r));
        } else if (kind == "triplerep") {
            TripleRep M = triplerep_from_json(j);
            AxiomReport a = check_jacobi(M.rt.g);
            rep.add(a);
            if (a.pass()) rep.add(check_triple_rep(M));
        } else if (kind == "ismrep") {
            auto [ir, S] = ismrep_from_json(j);
            rep.add(check_ly_axioms(S.T));
            rep.add(check_ism(S));
            rep.add(check_rly(ir.rep));
            rep.add(check_rism(ir, S));
        } else if (kind == "spairrep") {
            auto [sr, p] = spairrep_from_json(j);
            AxiomReport a = check_jacobi(p.g), b = check_lrsp(p);
            rep.add(a);
            rep.add(b);
            if (a.pass() && b.pass()) rep.add(check_spair_rep(sr, p));
        } else {
            throw format_error(path + ": unknown format \"" + kind + "\"");
        }
        rep.finalize();
    } catch (const std::exception& e) {
        rep.status = "error";
        rep.add("error", false, e.what());
    }
    return rep;
}

int cmd_validate(const std::vector<std::string>& paths, const Options& opt) {
    std::vector<Report> reports(paths.size());
    const size_t jobs = std::min<size_t>(std::max(1, opt.jobs), paths.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < paths.size(); ++i) reports[i] = validate_one(paths[i]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i; (i = next.fetch_add(1)) < paths.size();)
                reports[i] = validate_one(paths[i]);
        };
        std::vector<std::thread> pool;
        for (size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (opt.json) {
        if (reports.size() == 1) {
            std::cout << report_json(reports[0]).dump(2) << "\n";
        } else {
            OJson arr = OJson::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            std::cout << arr.dump(2) << "\n";
        }
    } else {
        for (const auto& r : reports) std::cout << report_text(r);
    }
    int code = 0;
    for (const auto& r : reports) code = std::max(code, exit_code(r));
    return code;
}

int cmd_envelope(const std::string& path, const Options& opt) {
    Report rep;
    rep.command = "envelope";
    rep.path = path;
    OJson j = load_file(path);
    if (kind_of(j) != "ly")
        throw format_error(path + ": envelope expects an algebra file (format ly)");
    LYAlgebra T = ly_from_json(j);
    AxiomReport ar = check_ly_axioms(T);
    rep.add(ar);
    if (!ar.pass()) {
        rep.finalize();
        return emit(rep, opt);
    }
    Enveloping env = enveloping(T);
    LSemisimpleReport s = l_semisimple_report(T);
    rep.add("envelope", true,
            "dim L = " + std::to_string(s.l_dim) + ", semisimple = " +
                (s.semisimple ? "true" : "false"));
    rep.add("minimal", is_minimal_triple(env.triple));
    rep.add("effective", is_effective_triple(env.triple));
    rep.artifacts.emplace_back("envelope", triple_json(env.triple));
    rep.finalize();
    return emit(rep, opt);
}

int cmd_semisimple(const std::string& path, const Options& opt) {
    Report rep;
    rep.command = "semisimple";
    rep.path = path;
    OJson j = load_file(path);
    const std::string kind = kind_of(j);
    if (kind == "ly") {
        LYAlgebra T = ly_from_json(j);
        AxiomReport ar = check_ly_axioms(T);
        rep.add(ar);
        if (ar.pass()) {
            LSemisimpleReport s = l_semisimple_report(T);
            rep.add("L-semisimple", s.semisimple,
                    "dim L = " + std::to_string(s.l_dim) +
                        ", Killing rank = " + std::to_string(s.killing_rank) +
                        ", center dim = " + std::to_string(s.center_dim) +
                        ", derived dim = " + std::to_string(s.derived_dim));
        }
    } else if (kind == "lie") {
        LieAlgebra g = lie_from_json(j);
        AxiomReport ar = check_jacobi(g);
        rep.add(ar);
        if (ar.pass())
            rep.add("semisimple", is_semisimple(g),
                    "dim = " + std::to_string(g.dim()) +
                        ", Killing rank = " + std::to_string(rref(killing_form(g)).rank));
    } else {
        throw format_error(path + ": semisimple expects a ly or lie file, got \"" + kind + "\"");
    }
    rep.finalize();
    return emit(rep, opt);
}

int cmd_tight(const std::vector<std::string>& paths, const Options& opt) {
    Report rep;
    rep.command = "tight";
    rep.path = paths.back();
    OJson j = load_file(paths.back());
    const std::string kind = kind_of(j);
    LYRep r;
    ISMRep ir;
    InfSManifold S;
    bool has_ism = false;
    if (kind == "lyrep") {
        r = lyrep_from_json(j);
    } else if (kind == "ismrep") {
        auto pr = ismrep_from_json(j);
        ir = std::move(pr.first);
        S = std::move(pr.second);
        r = ir.rep;
        has_ism = true;
    } else {
        throw format_error(paths.back() + ": tight expects a lyrep or ismrep file, got \"" +
                           kind + "\"");
    }
    if (paths.size() == 2) cross_check_algebra(paths.front(), r.T);
    AxiomReport a1 = check_ly_axioms(r.T), a2 = check_rly(r);
    rep.add(a1);
    rep.add(a2);
    if (!a1.pass() || !a2.pass()) {
        rep.finalize();
        return emit(rep, opt);
    }
    r.T.mark_validated(true);
    r.validated = true;
    if (has_ism) {
        ir.rep.T.mark_validated(true);
        ir.rep.validated = true;
    }
    TightReport tr = is_tight(r);
    rep.add("tight", tr.tight, tight_witness(tr));
    if (opt.sufficient) {
        SufficientReport s = tight_sufficient(r, "ttt");
        rep.add("sufficient-ttt", s.implication_ok,
                s.hypothesis ? "[T,T,T] = T holds" : "[T,T,T] = T does not hold; no conclusion");
        if (has_ism) {
            SufficientReport s2 = tight_sufficient_ism(ir, S);
            rep.add("sufficient-perfect-ism", s2.implication_ok,
                    s2.hypothesis ? "[L,L] = L and the representation respects sigma"
                                  : "hypothesis does not hold; no conclusion");
        }
    }
    rep.finalize();
    return emit(rep, opt);
}

int cmd_functor(const std::string& direction, const std::string& path, const Options& opt) {
    Report rep;
    rep.command = "functor " + direction;
    rep.path = path;
    OJson j = load_file(path);
    const std::string kind = kind_of(j);
    if (direction == "rly") {
        if (kind != "triplerep")
            throw format_error(path + ": functor rly expects a triplerep file, got \"" + kind +
                               "\"");
        TripleRep M = triplerep_from_json(j);
        AxiomReport a = check_jacobi(M.rt.g);
        rep.add(a);
        if (a.pass()) {
            M.rt.g.mark_validated(true);
            AxiomReport c = check_triple_rep(M);
            rep.add(c);
            if (c.pass()) {
                M.validated = true;
                LYRep out = functor_rly(M);
                rep.add(check_rly(out));
                rep.artifacts.emplace_back("rep", lyrep_json(out));
            }
        }
    } else if (direction == "rrt") {
        if (kind != "lyrep")
            throw format_error(path + ": functor rrt expects a lyrep file, got \"" + kind +
                               "\"");
        LYRep r = lyrep_from_json(j);
        AxiomReport a = check_ly_axioms(r.T);
        rep.add(a);
        if (a.pass()) r.T.mark_validated(true);
        AxiomReport b = check_rly(r);
        rep.add(b);
        if (a.pass() && b.pass()) {
            r.validated = true;
            RrtResult rr = functor_rrt(r);
            if (!rr.ok) {
                rep.add("tight", false, tight_witness(rr.tight_report));
            } else {
                rep.add("tight", true);
                rep.add("effective", is_effective_rep(rr.tr));
                rep.add("minimal", is_minimal_rep(rr.tr));
                rep.artifacts.emplace_back("module", triplerep_json(rr.tr));
            }
        }
    } else if (direction == "rism") {
        if (kind != "spairrep")
            throw format_error(path + ": functor rism expects a spairrep file, got \"" + kind +
                               "\"");
        auto [sr, p] = spairrep_from_json(j);
        AxiomReport a = check_jacobi(p.g), b = check_lrsp(p), c = check_spair_rep(sr, p);
        rep.add(a);
        rep.add(b);
        rep.add(c);
        if (a.pass() && b.pass() && c.pass()) {
            sr.rep.rt.g.mark_validated(true);
            sr.rep.validated = true;
            InfSManifold Sm = associated_triple(p).ism;
            ISMRep out = functor_rism(sr, p);
            rep.add(check_rism(out, Sm));
            rep.artifacts.emplace_back("rep", ismrep_json(out, Sm));
        }
    } else {  // rlrs
        if (kind != "ismrep")
            throw format_error(path + ": functor rlrs expects an ismrep file, got \"" + kind +
                               "\"");
        auto [ir, S] = ismrep_from_json(j);
        AxiomReport a = check_ly_axioms(S.T), b = check_ism(S), c = check_rly(ir.rep),
                    d = check_rism(ir, S);
        rep.add(a);
        rep.add(b);
        rep.add(c);
        rep.add(d);
        if (a.pass() && b.pass() && c.pass() && d.pass()) {
            ir.rep.T.mark_validated(true);
            ir.rep.validated = true;
            RlrsResult rr = functor_rlrs(ir, S);
            if (!rr.ok) {
                rep.add("rlrs", false, rr.detail);
            } else {
                rep.add("effective", is_effective_rep(rr.sr.rep));
                rep.add("minimal", is_minimal_rep(rr.sr.rep));
                rep.artifacts.emplace_back("module", spairrep_json(rr.sr, rr.ls.pair));
            }
        }
    }
    rep.finalize();
    return emit(rep, opt);
}

int cmd_roundtrip(const std::vector<std::string>& paths, const Options& opt) {
    Report rep;
    rep.command = "roundtrip";
    rep.path = paths.back();
    OJson j = load_file(paths.back());
    const std::string kind = kind_of(j);
    if (kind == "lyrep") {
        LYRep r = lyrep_from_json(j);
        if (paths.size() == 2) cross_check_algebra(paths.front(), r.T);
        AxiomReport a = check_ly_axioms(r.T), b = check_rly(r);
        rep.add(a);
        rep.add(b);
        if (a.pass() && b.pass()) {
            r.T.mark_validated(true);
            r.validated = true;
            AlphaReport al = roundtrip_alpha(r);
            if (!al.rrt.ok)
                rep.add("tight", false, tight_witness(al.rrt.tight_report));
            else
                rep.add("alpha", al.ok, al.detail);
        }
    } else if (kind == "ismrep") {
        auto [ir, S] = ismrep_from_json(j);
        if (paths.size() == 2) cross_check_algebra(paths.front(), S.T);
        AxiomReport a = check_ly_axioms(S.T), b = check_ism(S), c = check_rly(ir.rep),
                    d = check_rism(ir, S);
        rep.add(a);
        rep.add(b);
        rep.add(c);
        rep.add(d);
        if (a.pass() && b.pass() && c.pass() && d.pass()) {
            ir.rep.T.mark_validated(true);
            ir.rep.validated = true;
            IsmAlphaReport al = roundtrip_alpha_ism(ir, S);
            if (!al.rlrs.ok)
                rep.add("precondition", false, al.rlrs.detail);
            else
                rep.add("alpha", al.ok, al.detail);
        }
    } else if (kind == "triplerep") {
        TripleRep M = triplerep_from_json(j);
        AxiomReport a = check_jacobi(M.rt.g);
        rep.add(a);
        if (a.pass()) {
            M.rt.g.mark_validated(true);
            AxiomReport c = check_triple_rep(M);
            rep.add(c);
            if (c.pass()) {
                M.validated = true;
                BetaReport bt = roundtrip_beta(M);
                if (!bt.em_input)
                    rep.add("effective+minimal", false, bt.detail);
                else
                    rep.add("beta", bt.ok, bt.detail);
            }
        }
    } else if (kind == "spairrep") {
        auto [sr, p] = spairrep_from_json(j);
        AxiomReport a = check_jacobi(p.g), b = check_lrsp(p), c = check_spair_rep(sr, p);
        rep.add(a);
        rep.add(b);
        rep.add(c);
        if (a.pass() && b.pass() && c.pass()) {
            sr.rep.rt.g.mark_validated(true);
            sr.rep.validated = true;
            IsmBetaReport bt = roundtrip_beta_ism(sr, p);
            if (!bt.base.em_input)
                rep.add("effective+minimal", false, bt.base.detail);
            else {
                rep.add("beta", bt.base.ok, bt.base.detail);
                rep.add("psi-intertwined", bt.psi_intertwined);
            }
        }
    } else {
        throw format_error(paths.back() + ": roundtrip expects a representation file, got \"" +
                           kind + "\"");
    }
    rep.finalize();
    return emit(rep, opt);
}

int cmd_catalog(const std::vector<std::string>& args, const Options& opt) {
    if (opt.list) {
        if (opt.json) {
            OJson arr = OJson::array();
            for (const auto& e : catalog_list()) {
                OJson o;
                o["name"] = e.name;
                o["params"] = e.params;
                o["summary"] = e.summary;
                o["kind"] = e.kind;
                arr.push_back(std::move(o));
            }
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& e : catalog_list()) {
                std::cout << e.name;
                if (!e.params.empty()) std::cout << " " << e.params;
                std::cout << "  [" << e.kind << "]\n    " << e.summary << "\n";
            }
        }
        return 0;
    }
    if (args.empty()) throw format_error("catalog: no entry name given (try --list)");
    OJson payload;
    try {
        payload = catalog_build(args, opt.seed);
    } catch (const std::invalid_argument& e) {
        throw format_error(e.what());
    }
    std::string spec = args[0];
    for (size_t i = 1; i < args.size(); ++i) spec += " " + args[i];
    if (opt.json) {
        Report rep;
        rep.command = "catalog";
        rep.add("entry", true, spec);
        rep.artifacts.emplace_back("entry", payload);
        rep.finalize();
        return emit(rep, opt);
    }
    if (!opt.out.empty()) {
        write_payload(opt.out, payload);
        std::cout << "catalog: pass\n  " << spec << ": written to " << opt.out << "\n";
    } else {
        std::cout << payload.dump(2) << "\n";
    }
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"Lie-Yamaguti algebras, enveloping Lie algebras, reductive triples and the "
                 "category equivalences between their representations, over exact rationals"};
    app.require_subcommand(1);
    Options opt;
    std::vector<std::string> paths, cargs;
    std::string direction;

    auto common = [&opt](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "emit the report as JSON on stdout");
        sub->add_option("--out", opt.out, "write the constructed object to this file");
        sub->add_option("--seed", opt.seed,
                        "seed for randomized constructions (default " +
                            std::to_string(kDefaultSeed) + ")");
        return sub;
    };

    auto* sv = common(app.add_subcommand("validate", "run the axiom checks of a file's kind"));
    sv->add_option("paths", paths, "input files")->required();
    sv->add_option("--jobs", opt.jobs, "validate this many files in parallel");

    auto* se = common(app.add_subcommand(
        "envelope", "construct the standard enveloping triple (L(T), T, D(T))"));
    se->add_option("path", paths, "algebra file (format ly)")->required()->expected(1);

    auto* ss = common(app.add_subcommand(
        "semisimple", "semisimplicity of L(T) for a ly file, or of a lie file directly"));
    ss->add_option("path", paths, "input file")->required()->expected(1);

    auto* st = common(app.add_subcommand("tight", "tightness of a representation"));
    st->add_option("paths", paths, "[algebra.json] rep.json")->required()->expected(1, 2);
    st->add_flag("--sufficient", opt.sufficient,
                 "also evaluate the sufficient tightness criteria");

    auto* sf = common(app.add_subcommand("functor", "apply a functor to a representation"));
    sf->add_option("direction", direction, "rly | rrt | rism | rlrs")
        ->required()
        ->check(CLI::IsMember({"rly", "rrt", "rism", "rlrs"}));
    sf->add_option("path", paths, "input file")->required()->expected(1);

    auto* sr = common(
        app.add_subcommand("roundtrip", "verify the functor round trips on a representation"));
    sr->add_option("paths", paths, "[base.json] rep.json")->required()->expected(1, 2);

    auto* sc = common(app.add_subcommand("catalog", "emit a built-in example object"));
    sc->add_option("entry", cargs, "entry name and positional parameters");
    sc->add_flag("--list", opt.list, "list the available entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (sv->parsed()) return cmd_validate(paths, opt);
        if (se->parsed()) return cmd_envelope(paths.front(), opt);
        if (ss->parsed()) return cmd_semisimple(paths.front(), opt);
        if (st->parsed()) return cmd_tight(paths, opt);
        if (sf->parsed()) return cmd_functor(direction, paths.front(), opt);
        if (sr->parsed()) return cmd_roundtrip(paths, opt);
        if (sc->parsed()) return cmd_catalog(cargs, opt);
    } catch (const std::exception& e) {
        Report rep;
        rep.command = command;
        rep.status = "error";
        rep.add("error", false, e.what());
        return emit(rep, opt);
    }
    return 2;
}

}  // namespace
}  // namespace lycas

int main(int argc, char** argv) { return lycas::run(argc, argv); }
