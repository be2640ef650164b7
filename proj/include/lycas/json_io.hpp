#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lycas/catalog.hpp"
#include "lycas/liealg.hpp"
#include "lycas/lyalg.hpp"
#include "lycas/reps.hpp"

namespace lycas {

using OJson = nlohmann::ordered_json;

// Raised by every loader on malformed input; the message names the offending
// field and, for rationals, the offending literal.
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Value of the "format" key: ly, lie, triple, spair, ism, lyrep, triplerep,
// ismrep, spairrep.
std::string kind_of(const OJson& j);

// Structure-constant tables are stored sparsely as [i, j, k(, l), "value"]
// rows, 0-based, values in canonical rational form. An omitted entry whose
// mirror (indices 0 and 1 swapped) is present loads as the negated mirror;
// otherwise it is zero. Emitters write the i < j part plus whatever extra
// entries are needed to reproduce the table bit for bit, so ill-formed
// (non-antisymmetric) tables survive a round trip and can be fed to the
// validators.
OJson ly_json(const LYAlgebra& T);
LYAlgebra ly_from_json(const OJson& j);

OJson lie_json(const LieAlgebra& g);
LieAlgebra lie_from_json(const OJson& j);

// {"g": lie, "m_basis": rows, "h_basis": rows}; bases are dense row lists.
OJson triple_json(const ReductiveTriple& rt);
ReductiveTriple triple_from_json(const OJson& j);

// {"g": lie, "phi": matrix}
OJson spair_json(const LocalRegularSPair& p);
LocalRegularSPair spair_from_json(const OJson& j);

// {"algebra": ly, "sigma": matrix}
OJson ism_json(const InfSManifold& S);
InfSManifold ism_from_json(const OJson& j);

// {"algebra": ly, "v_dim": k, "rho": [mat per basis vector],
//  "theta": [mat per ordered pair, row-major], "delta": [likewise]}.
// "delta" may be omitted on input; it then defaults to the value forced by
// the first representation axiom.
OJson lyrep_json(const LYRep& r);
LYRep lyrep_from_json(const OJson& j);

// {"triple": triple, "p": total dim, "n_dim": dim Mn,
//  "action": [mat per g basis vector]}
OJson triplerep_json(const TripleRep& M);
TripleRep triplerep_from_json(const OJson& j);

// lyrep fields with "manifold" in place of "algebra", plus "psi".
OJson ismrep_json(const ISMRep& ir, const InfSManifold& S);
std::pair<ISMRep, InfSManifold> ismrep_from_json(const OJson& j);

// triplerep fields with "pair" in place of "triple", plus "psi_tilde".
OJson spairrep_json(const SPairRep& sr, const LocalRegularSPair& p);
std::pair<SPairRep, LocalRegularSPair> spairrep_from_json(const OJson& j);

OJson mat_json(const Mat& m);
Mat mat_from_json(const OJson& j, const std::string& where);

// Builds a catalog entry from its CLI name and positional parameters and
// serializes it in the entry's format. Random entries consume the seed and
// take a nested entry spec as their parameters. Throws std::invalid_argument
// on unknown names or bad parameters.
OJson catalog_build(const std::vector<std::string>& args, std::uint64_t seed);

struct Finding {
    std::string check;
    std::string verdict;  // pass | fail
    std::string witness;  // optional
};

struct Report {
    std::string command;
    std::string path;  // input file, when the command reads one
    std::string status = "pass";  // pass | fail | error
    std::vector<Finding> findings;
    std::vector<std::pair<std::string, OJson>> artifacts;

    void add(const std::string& check, bool pass, const std::string& witness = "");
    void add(const AxiomReport& ar);
    void add(const CheckResult& cr);
    // pass iff every finding passes; an existing error status sticks.
    void finalize();
};

// "(0,1,2)" plus the failing check's detail text, empty when passing.
std::string witness_str(const AxiomCheck& c);

OJson report_json(const Report& r);
std::string report_text(const Report& r);

}  // namespace lycas
