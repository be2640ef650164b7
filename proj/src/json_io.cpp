#include "lycas/json_io.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

#include "lycas/random_reps.hpp"

namespace lycas {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw format_error(where.empty() ? what : where + ": " + what);
}

void require_keys(const OJson& j, const std::string& where,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
    if (!j.is_object()) fail(where, "expected an object");
    for (const char* k : required)
        if (!j.contains(k)) fail(where, std::string("missing key \"") + k + "\"");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : required)
            if (it.key() == k) known = true;
        for (const char* k : optional)
            if (it.key() == k) known = true;
        if (!known) fail(where, "unexpected key \"" + it.key() + "\"");
    }
}

void check_format(const OJson& j, const char* kind, const std::string& where) {
    if (!j.is_object() || !j.contains("format") || !j["format"].is_string())
        fail(where, "missing \"format\" key");
    if (j["format"].get<std::string>() != kind)
        fail(where, std::string("expected format \"") + kind + "\", got \"" +
                        j["format"].get<std::string>() + "\"");
}

int int_field(const OJson& v, const std::string& where) {
    if (!v.is_number_integer() && !v.is_number_unsigned()) fail(where, "expected an integer");
    long long x = v.get<long long>();
    if (x < 0 || x > 1000000) fail(where, "integer out of range");
    return static_cast<int>(x);
}

int idx_field(const OJson& v, int n, const std::string& where) {
    int i = int_field(v, where);
    if (i >= n)
        fail(where, "index " + std::to_string(i) + " out of range for dimension " +
                        std::to_string(n));
    return i;
}

Rat rat_field(const OJson& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a rational string");
    try {
        return parse_rat(v.get<std::string>());
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

std::string label_field(const OJson& j, const std::string& where) {
    if (!j.contains("label")) return "";
    if (!j["label"].is_string()) fail(where + ".label", "expected a string");
    return j["label"].get<std::string>();
}

Mat mat_from(const OJson& j, int rows, int cols, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a matrix (array of rows)");
    const int r = static_cast<int>(j.size());
    if (rows >= 0 && r != rows)
        fail(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(r));
    Mat m(r, cols);
    for (int ri = 0; ri < r; ++ri) {
        const OJson& row = j[ri];
        const std::string wr = where + "[" + std::to_string(ri) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            fail(wr, "expected a row of length " + std::to_string(cols));
        for (int ci = 0; ci < cols; ++ci)
            m(ri, ci) = rat_field(row[ci], wr + "[" + std::to_string(ci) + "]");
    }
    return m;
}

std::vector<Mat> mats_from(const OJson& j, size_t count, int rows, int cols,
                           const std::string& where) {
    if (!j.is_array() || j.size() != count)
        fail(where, "expected " + std::to_string(count) + " matrices");
    std::vector<Mat> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i)
        out.push_back(mat_from(j[i], rows, cols, where + "[" + std::to_string(i) + "]"));
    return out;
}

OJson mats_json(const std::vector<Mat>& ms) {
    OJson arr = OJson::array();
    for (const auto& m : ms) arr.push_back(mat_json(m));
    return arr;
}

// Emits the diagonal and upper part (nonzero, or any value where the mirror
// is inconsistent) followed by inconsistent lower entries, so that loading
// reproduces the table exactly.
OJson table3(int n, const std::function<const Rat&(int, int, int)>& g) {
    OJson arr = OJson::array();
    auto emit = [&](int i, int j, int k) {
        arr.push_back(OJson::array({i, j, k, rat_str(g(i, j, k))}));
    };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || g(i, j, k) == -g(j, i, k)) {
                    if (g(i, j, k) != 0) emit(i, j, k);
                } else {
                    emit(i, j, k);
                }
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            for (int k = 0; k < n; ++k)
                if (g(i, j, k) != -g(j, i, k)) emit(i, j, k);
    return arr;
}

OJson table4(int n, const std::function<const Rat&(int, int, int, int)>& g) {
    OJson arr = OJson::array();
    auto emit = [&](int i, int j, int k, int l) {
        arr.push_back(OJson::array({i, j, k, l, rat_str(g(i, j, k, l))}));
    };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (i == j || g(i, j, k, l) == -g(j, i, k, l)) {
                        if (g(i, j, k, l) != 0) emit(i, j, k, l);
                    } else {
                        emit(i, j, k, l);
                    }
                }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (g(i, j, k, l) != -g(j, i, k, l)) emit(i, j, k, l);
    return arr;
}

void load3(const OJson& arr, int n, const std::string& where,
           const std::function<Rat&(int, int, int)>& at) {
    if (!arr.is_array()) fail(where, "expected an array of [i, j, k, value] entries");
    std::vector<char> seen(static_cast<size_t>(n) * n * n, 0);
    for (size_t e = 0; e < arr.size(); ++e) {
        const std::string w = where + "[" + std::to_string(e) + "]";
        const OJson& row = arr[e];
        if (!row.is_array() || row.size() != 4) fail(w, "expected [i, j, k, value]");
        int i = idx_field(row[0], n, w), j = idx_field(row[1], n, w),
            k = idx_field(row[2], n, w);
        size_t off = (static_cast<size_t>(i) * n + j) * n + k;
        if (seen[off]) fail(w, "duplicate entry");
        at(i, j, k) = rat_field(row[3], w);
        seen[off] = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k) {
                size_t off = (static_cast<size_t>(i) * n + j) * n + k;
                size_t mirror = (static_cast<size_t>(j) * n + i) * n + k;
                if (!seen[off] && seen[mirror]) at(i, j, k) = -at(j, i, k);
            }
        }
}

void load4(const OJson& arr, int n, const std::string& where,
           const std::function<Rat&(int, int, int, int)>& at) {
    if (!arr.is_array()) fail(where, "expected an array of [i, j, k, l, value] entries");
    std::vector<char> seen(static_cast<size_t>(n) * n * n * n, 0);
    for (size_t e = 0; e < arr.size(); ++e) {
        const std::string w = where + "[" + std::to_string(e) + "]";
        const OJson& row = arr[e];
        if (!row.is_array() || row.size() != 5) fail(w, "expected [i, j, k, l, value]");
        int i = idx_field(row[0], n, w), j = idx_field(row[1], n, w),
            k = idx_field(row[2], n, w), l = idx_field(row[3], n, w);
        size_t off = ((static_cast<size_t>(i) * n + j) * n + k) * n + l;
        if (seen[off]) fail(w, "duplicate entry");
        at(i, j, k, l) = rat_field(row[4], w);
        seen[off] = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    size_t off = ((static_cast<size_t>(i) * n + j) * n + k) * n + l;
                    size_t mirror = ((static_cast<size_t>(j) * n + i) * n + k) * n + l;
                    if (!seen[off] && seen[mirror]) at(i, j, k, l) = -at(j, i, k, l);
                }
        }
}

LYAlgebra ly_from(const OJson& j, const std::string& where) {
    check_format(j, "ly", where);
    require_keys(j, where, {"format", "dim", "b", "t"}, {"label"});
    const int n = int_field(j["dim"], where + ".dim");
    LYAlgebra T(n, label_field(j, where));
    load3(j["b"], n, where + ".b", [&T](int a, int b, int c) -> Rat& { return T.b(a, b, c); });
    load4(j["t"], n, where + ".t",
          [&T](int a, int b, int c, int d) -> Rat& { return T.t(a, b, c, d); });
    return T;
}

LieAlgebra lie_from(const OJson& j, const std::string& where) {
    check_format(j, "lie", where);
    require_keys(j, where, {"format", "dim", "c"}, {"label"});
    const int n = int_field(j["dim"], where + ".dim");
    LieAlgebra g(n, label_field(j, where));
    load3(j["c"], n, where + ".c", [&g](int a, int b, int c) -> Rat& { return g.c(a, b, c); });
    return g;
}

ReductiveTriple triple_from(const OJson& j, const std::string& where) {
    check_format(j, "triple", where);
    require_keys(j, where, {"format", "g", "m_basis", "h_basis"});
    LieAlgebra g = lie_from(j["g"], where + ".g");
    const int d = g.dim();
    Subspace m = Subspace::span(mat_from(j["m_basis"], -1, d, where + ".m_basis"));
    Subspace h = Subspace::span(mat_from(j["h_basis"], -1, d, where + ".h_basis"));
    return ReductiveTriple{std::move(g), std::move(m), std::move(h)};
}

LocalRegularSPair spair_from(const OJson& j, const std::string& where) {
    check_format(j, "spair", where);
    require_keys(j, where, {"format", "g", "phi"});
    LieAlgebra g = lie_from(j["g"], where + ".g");
    const int d = g.dim();
    Mat phi = mat_from(j["phi"], d, d, where + ".phi");
    return LocalRegularSPair{std::move(g), std::move(phi)};
}

InfSManifold ism_from(const OJson& j, const std::string& where) {
    check_format(j, "ism", where);
    require_keys(j, where, {"format", "algebra", "sigma"});
    LYAlgebra T = ly_from(j["algebra"], where + ".algebra");
    const int d = T.dim();
    Mat sigma = mat_from(j["sigma"], d, d, where + ".sigma");
    return InfSManifold{std::move(T), std::move(sigma)};
}

LYRep lyrep_body(const OJson& j, LYAlgebra T, int v, const std::string& where) {
    const size_t n = static_cast<size_t>(T.dim());
    LYRep r;
    r.v_dim = v;
    r.rho = mats_from(j["rho"], n, v, v, where + ".rho");
    r.theta = mats_from(j["theta"], n * n, v, v, where + ".theta");
    if (j.contains("delta"))
        r.delta = mats_from(j["delta"], n * n, v, v, where + ".delta");
    else
        r.delta = delta_default(T, r.rho, r.theta);
    r.T = std::move(T);
    return r;
}

LYRep lyrep_from(const OJson& j, const std::string& where) {
    check_format(j, "lyrep", where);
    require_keys(j, where, {"format", "algebra", "v_dim", "rho", "theta"}, {"delta"});
    LYAlgebra T = ly_from(j["algebra"], where + ".algebra");
    const int v = int_field(j["v_dim"], where + ".v_dim");
    return lyrep_body(j, std::move(T), v, where);
}

TripleRep triplerep_body(const OJson& j, ReductiveTriple rt, const std::string& where) {
    const int p = int_field(j["p"], where + ".p");
    const int nd = int_field(j["n_dim"], where + ".n_dim");
    if (nd > p) fail(where + ".n_dim", "n_dim exceeds p");
    TripleRep M;
    M.p = p;
    M.n_dim = nd;
    M.action = mats_from(j["action"], static_cast<size_t>(rt.g.dim()), p, p, where + ".action");
    M.rt = std::move(rt);
    return M;
}

TripleRep triplerep_from(const OJson& j, const std::string& where) {
    check_format(j, "triplerep", where);
    require_keys(j, where, {"format", "triple", "p", "n_dim", "action"});
    return triplerep_body(j, triple_from(j["triple"], where + ".triple"), where);
}

OJson lyrep_fields(const LYRep& r) {
    OJson j;
    j["v_dim"] = r.v_dim;
    j["rho"] = mats_json(r.rho);
    j["theta"] = mats_json(r.theta);
    j["delta"] = mats_json(r.delta);
    return j;
}

}  // namespace

std::string kind_of(const OJson& j) {
    if (!j.is_object() || !j.contains("format") || !j["format"].is_string())
        throw format_error("missing \"format\" key");
    return j["format"].get<std::string>();
}

OJson mat_json(const Mat& m) {
    OJson rows = OJson::array();
    for (int i = 0; i < m.rows(); ++i) {
        OJson row = OJson::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rat_str(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const OJson& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a matrix (array of rows)");
    int cols = 0;
    if (!j.empty()) {
        if (!j[0].is_array()) fail(where + "[0]", "expected a row");
        cols = static_cast<int>(j[0].size());
    }
    return mat_from(j, -1, cols, where);
}

OJson ly_json(const LYAlgebra& T) {
    OJson j;
    j["format"] = "ly";
    j["dim"] = T.dim();
    if (!T.label().empty()) j["label"] = T.label();
    j["b"] = table3(T.dim(), [&T](int a, int b, int c) -> const Rat& { return T.b(a, b, c); });
    j["t"] = table4(T.dim(),
                    [&T](int a, int b, int c, int d) -> const Rat& { return T.t(a, b, c, d); });
    return j;
}

LYAlgebra ly_from_json(const OJson& j) { return ly_from(j, "ly"); }

OJson lie_json(const LieAlgebra& g) {
    OJson j;
    j["format"] = "lie";
    j["dim"] = g.dim();
    if (!g.label().empty()) j["label"] = g.label();
    j["c"] = table3(g.dim(), [&g](int a, int b, int c) -> const Rat& { return g.c(a, b, c); });
    return j;
}

LieAlgebra lie_from_json(const OJson& j) { return lie_from(j, "lie"); }

OJson triple_json(const ReductiveTriple& rt) {
    OJson j;
    j["format"] = "triple";
    j["g"] = lie_json(rt.g);
    j["m_basis"] = mat_json(rt.m.basis());
    j["h_basis"] = mat_json(rt.h.basis());
    return j;
}

ReductiveTriple triple_from_json(const OJson& j) { return triple_from(j, "triple"); }

OJson spair_json(const LocalRegularSPair& p) {
    OJson j;
    j["format"] = "spair";
    j["g"] = lie_json(p.g);
    j["phi"] = mat_json(p.phi);
    return j;
}

LocalRegularSPair spair_from_json(const OJson& j) { return spair_from(j, "spair"); }

OJson ism_json(const InfSManifold& S) {
    OJson j;
    j["format"] = "ism";
    j["algebra"] = ly_json(S.T);
    j["sigma"] = mat_json(S.sigma);
    return j;
}

InfSManifold ism_from_json(const OJson& j) { return ism_from(j, "ism"); }

OJson lyrep_json(const LYRep& r) {
    OJson j;
    j["format"] = "lyrep";
    j["algebra"] = ly_json(r.T);
    OJson fields = lyrep_fields(r);
    for (auto& [k, v] : fields.items()) j[k] = std::move(v);
    return j;
}

LYRep lyrep_from_json(const OJson& j) { return lyrep_from(j, "lyrep"); }

OJson triplerep_json(const TripleRep& M) {
    OJson j;
    j["format"] = "triplerep";
    j["triple"] = triple_json(M.rt);
    j["p"] = M.p;
    j["n_dim"] = M.n_dim;
    j["action"] = mats_json(M.action);
    return j;
}

TripleRep triplerep_from_json(const OJson& j) { return triplerep_from(j, "triplerep"); }

OJson ismrep_json(const ISMRep& ir, const InfSManifold& S) {
    OJson j;
    j["format"] = "ismrep";
    j["manifold"] = ism_json(S);
    OJson fields = lyrep_fields(ir.rep);
    for (auto& [k, v] : fields.items()) j[k] = std::move(v);
    j["psi"] = mat_json(ir.psi);
    return j;
}

std::pair<ISMRep, InfSManifold> ismrep_from_json(const OJson& j) {
    const std::string where = "ismrep";
    check_format(j, "ismrep", where);
    require_keys(j, where, {"format", "manifold", "v_dim", "rho", "theta", "psi"}, {"delta"});
    InfSManifold S = ism_from(j["manifold"], where + ".manifold");
    const int v = int_field(j["v_dim"], where + ".v_dim");
    LYRep r = lyrep_body(j, S.T, v, where);
    Mat psi = mat_from(j["psi"], v, v, where + ".psi");
    return {ISMRep{std::move(r), std::move(psi)}, std::move(S)};
}

OJson spairrep_json(const SPairRep& sr, const LocalRegularSPair& p) {
    OJson j;
    j["format"] = "spairrep";
    j["pair"] = spair_json(p);
    j["p"] = sr.rep.p;
    j["n_dim"] = sr.rep.n_dim;
    j["action"] = mats_json(sr.rep.action);
    j["psi_tilde"] = mat_json(sr.psi_tilde);
    return j;
}

std::pair<SPairRep, LocalRegularSPair> spairrep_from_json(const OJson& j) {
    const std::string where = "spairrep";
    check_format(j, "spairrep", where);
    require_keys(j, where, {"format", "pair", "p", "n_dim", "action", "psi_tilde"});
    LocalRegularSPair p = spair_from(j["pair"], where + ".pair");
    ReductiveTriple rt;
    try {
        rt = associated_triple(p).rt;
    } catch (const std::exception& e) {
        fail(where + ".pair", e.what());
    }
    TripleRep M = triplerep_body(j, std::move(rt), where);
    Mat psi = mat_from(j["psi_tilde"], M.p, M.p, where + ".psi_tilde");
    return {SPairRep{std::move(M), std::move(psi)}, std::move(p)};
}

namespace {

int count_param(const std::string& s, const std::string& what) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || v < 0)
        throw std::invalid_argument(what + ": expected a count, got \"" + s + "\"");
    return v;
}

Rat rat_param(const std::string& s, const std::string& what) {
    try {
        return parse_rat(s);
    } catch (const std::exception& e) {
        throw std::invalid_argument(what + ": " + e.what());
    }
}

bool sl_token(const std::string& tok, int& n) {
    if (tok.size() < 3 || tok.compare(0, 2, "sl") != 0) return false;
    for (size_t i = 2; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    n = count_param(tok.substr(2), "base");
    return true;
}

LieAlgebra base_param(const std::string& tok) {
    int n = 0;
    if (!sl_token(tok, n))
        throw std::invalid_argument("unknown base algebra \"" + tok + "\" (expected sl<n>)");
    return make_sl(n);
}

}  // namespace

OJson catalog_build(const std::vector<std::string>& args, std::uint64_t seed) {
    if (args.empty()) throw std::invalid_argument("catalog: no entry name given");
    const std::string& name = args[0];
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    auto want = [&](size_t lo, size_t hi, const char* help) {
        if (rest.size() < lo || rest.size() > hi)
            throw std::invalid_argument("catalog entry \"" + name + "\" takes parameters: " +
                                        (*help ? help : "(none)"));
    };
    auto nested = [&](const char* kind) {
        if (rest.empty())
            throw std::invalid_argument("catalog entry \"" + name +
                                        "\" takes a nested entry producing format \"" +
                                        kind + "\"");
        OJson sub = catalog_build(rest, seed);
        if (kind_of(sub) != kind)
            throw std::invalid_argument("catalog entry \"" + name + "\" needs a nested \"" +
                                        kind + "\" entry, got \"" + kind_of(sub) + "\"");
        return sub;
    };

    int n = 0;
    if (name == "sl") {
        want(1, 1, "<n>");
        return lie_json(make_sl(count_param(rest[0], "n")));
    }
    if (sl_token(name, n) && rest.empty()) return lie_json(make_sl(n));
    if (name == "g-alpha-beta") {
        want(3, 3, "<base> <alpha> <beta>");
        return ly_json(make_g_alpha_beta(base_param(rest[0]), rat_param(rest[1], "alpha"),
                                         rat_param(rest[2], "beta")));
    }
    if (name == "sl2-ef-triple") {
        want(0, 0, "");
        return triple_json(make_sl2_ef_triple());
    }
    if (name == "sln-diag-split") {
        want(1, 1, "<n>");
        return triple_json(make_sln_diag_split(count_param(rest[0], "n")));
    }
    if (name == "nontight-rep" || name == "rank2-nontight-rep") {
        LieAlgebra g = make_sl(2);
        LinearFunctional lam{{Rat(0), Rat(0), Rat(1)}};
        if (!rest.empty()) {
            want(3, 3, "[c1 c2 c3]");
            lam.coeffs = {rat_param(rest[0], "c1"), rat_param(rest[1], "c2"),
                          rat_param(rest[2], "c3")};
        }
        return lyrep_json(name == "nontight-rep" ? make_nontight_rep(g, lam)
                                                 : make_rank2_nontight_rep(g, lam));
    }
    if (name == "matrix-example") {
        want(0, 1, "[m|m1|m2|mod-m1|mod-m2]");
        MatrixExample ex = make_matrix_example();
        const std::string which = rest.empty() ? "m" : rest[0];
        const TripleRep* M = which == "m"        ? &ex.M
                             : which == "m1"     ? &ex.M1
                             : which == "m2"     ? &ex.M2
                             : which == "mod-m1" ? &ex.M_mod_M1
                             : which == "mod-m2" ? &ex.M_mod_M2
                                                 : nullptr;
        if (!M)
            throw std::invalid_argument("matrix-example: unknown part \"" + which +
                                        "\" (expected m, m1, m2, mod-m1 or mod-m2)");
        return triplerep_json(*M);
    }
    if (name == "core-quandle") {
        want(1, 1, "<base>");
        return spair_json(make_core_quandle_pair(base_param(rest[0])));
    }
    if (name == "core-quandle-ism") {
        want(1, 1, "<base>");
        return ism_json(associated_triple(make_core_quandle_pair(base_param(rest[0]))).ism);
    }
    if (name == "sl2-ad-pair") {
        want(0, 0, "");
        return spair_json(make_sl2_ad_pair());
    }
    if (name == "trivial-line") {
        want(1, 1, "<a>");
        return ism_json(make_trivial_line(rat_param(rest[0], "a")));
    }
    if (name == "random-triple-rep" || name == "random-module") {
        Enveloping env = enveloping(ly_from_json(nested("ly")));
        return triplerep_json(random_triple_rep(env, seed, name == "random-triple-rep"));
    }
    if (name == "random-ly-rep") return lyrep_json(random_ly_rep(ly_from_json(nested("ly")), seed));
    if (name == "random-ism-rep") {
        InfSManifold S = ism_from_json(nested("ism"));
        return ismrep_json(random_ism_rep(S, seed), S);
    }
    if (name == "random-spair-rep") {
        LocalRegularSPair p = spair_from_json(nested("spair"));
        return spairrep_json(random_spair_rep(p, seed), p);
    }
    throw std::invalid_argument("unknown catalog entry \"" + name + "\" (see catalog --list)");
}

void Report::add(const std::string& check, bool pass, const std::string& witness) {
    findings.push_back(Finding{check, pass ? "pass" : "fail", witness});
}

void Report::add(const AxiomReport& ar) {
    for (const auto& c : ar.checks) add(c.axiom, c.pass, witness_str(c));
}

void Report::add(const CheckResult& cr) {
    AxiomCheck c{cr.check, cr.pass, cr.witness, cr.detail};
    add(cr.check, cr.pass, witness_str(c));
}

void Report::finalize() {
    if (status == "error") return;
    status = "pass";
    for (const auto& f : findings)
        if (f.verdict != "pass") {
            status = "fail";
            break;
        }
}

std::string witness_str(const AxiomCheck& c) {
    if (c.pass) return "";
    std::string s;
    if (!c.witness.empty()) {
        s = "(";
        for (size_t i = 0; i < c.witness.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c.witness[i]);
        }
        s += ")";
    }
    if (!c.detail.empty()) {
        if (!s.empty()) s += " ";
        s += c.detail;
    }
    return s;
}

OJson report_json(const Report& r) {
    OJson j;
    j["command"] = r.command;
    if (!r.path.empty()) j["path"] = r.path;
    j["status"] = r.status;
    j["findings"] = OJson::array();
    for (const auto& f : r.findings) {
        OJson e;
        e["check"] = f.check;
        e["verdict"] = f.verdict;
        if (!f.witness.empty()) e["witness"] = f.witness;
        j["findings"].push_back(std::move(e));
    }
    if (!r.artifacts.empty()) {
        OJson a;
        for (const auto& [name, payload] : r.artifacts) a[name] = payload;
        j["artifacts"] = std::move(a);
    }
    return j;
}

std::string report_text(const Report& r) {
    std::string out = r.command;
    if (!r.path.empty()) out += " " + r.path;
    out += ": " + r.status + "\n";
    for (const auto& f : r.findings) {
        out += "  " + f.check + ": " + f.verdict;
        if (!f.witness.empty()) out += "  " + f.witness;
        out += "\n";
    }
    return out;
}

}  // namespace lycas
