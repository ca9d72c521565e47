#pragma once

// JSON encodings. Numbers are exact: JSON integers, or strings "p", "p/q".

#include <optional>
#include <string>
#include <vector>

#include "hkmod/fujiki.hpp"
#include "hkmod/mukai.hpp"
#include "hkmod/nl_search.hpp"
#include "hkmod/reduction.hpp"
#include "hkmod/report.hpp"
#include "hkmod/walls.hpp"

namespace hkmod {

/// Reads `arg` as a file if one exists at that path, otherwise parses it as
/// inline JSON.
Json load_json_arg(const std::string& arg);

Rational rational_from_json(const Json& j, const std::string& what = "number");
Integer integer_from_json(const Json& j, const std::string& what = "integer");
LatVec latvec_from_json(const Json& j);

/// {"rank": n, "gram": [[...]], "label": "..."}; "rank" is optional.
IntLattice lattice_from_json(const Json& j);

/// {"r": r, "l": [...], "s": s}.
MukaiVector mukai_from_json(const Json& j);

/// A K3 Neron-Severi lattice with its fiber class. Either {"e": E, "d": D}
/// for the elliptic rank-2 lattice, or a lattice object with an optional
/// "f" (defaulting to (0, 1) for a rank-2 gram with gram[1][1] = 0).
struct NSInput {
  IntLattice lattice;
  LatVec f;
  std::optional<EllipticNS> elliptic;
};

NSInput ns_from_json(const Json& j);

/// {"type": "K3n", "n": 2, "lattice": {...}} or {"n": 2, "c_X": "3", "lattice": {...}}.
FujikiSetup setup_from_json(const Json& j);

/// Array whose entries are vectors or {"class": [...], "power": k}.
std::vector<LatVec> classes_from_json(const Json& j);

/// [{"r_B": 1, "deg_B": 0}, ...].
std::vector<ModificationStep> steps_from_json(const Json& j);

Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const LatVec& v);
Json to_json(const MukaiVector& v);
Json to_json(const WallClass& w);

/// One check per gating condition; the e | d report goes into info.
TheoremReport verdict_report(const std::string& name, const Verdict& v);

/// Runs every pipeline named in a scenario file. See README for the schema.
std::vector<TheoremReport> run_scenario(const Json& scenario);

}  // namespace hkmod
