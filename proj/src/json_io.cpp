#include "hkmod/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "hkmod/hilb2.hpp"
#include "hkmod/nl_search.hpp"
#include "hkmod/pipelines.hpp"

namespace hkmod {

Json load_json_arg(const std::string& arg) {
  std::error_code ec;
  try {
    if (std::filesystem::is_regular_file(arg, ec)) {
      std::ifstream in(arg);
      if (!in) throw InvalidInput("cannot open " + arg);
      return Json::parse(in);
    }
    return Json::parse(arg);
  } catch (const Json::parse_error& ex) {
    throw InvalidInput("malformed JSON in '" + arg + "': " + ex.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput(what + " must be an integer or a \"p/q\" string, got " + j.dump());
}

Integer integer_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InvalidInput(what + " must be an integer, got " + j.dump());
}

LatVec latvec_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("vector must be an array, got " + j.dump());
  std::vector<Rational> coords;
  for (const auto& x : j) coords.push_back(rational_from_json(x, "coordinate"));
  return LatVec(std::move(coords));
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int small_int(const Json& j, const std::string& what) {
  const Integer z = integer_from_json(j, what);
  if (!z.fits_sint_p()) throw InvalidInput(what + " out of range");
  return static_cast<int>(z.get_si());
}

bool is_elliptic_gram(const IntLattice& L) {
  return L.rank() == 2 && L.entry(1, 1) == 0 && L.entry(0, 1) > 0;
}

}  // namespace

IntLattice lattice_from_json(const Json& j) {
  const Json& g = field(j, "gram");
  if (!g.is_array()) throw InvalidInput("gram must be an array of arrays");
  std::vector<std::vector<Integer>> gram;
  for (const auto& row : g) {
    if (!row.is_array()) throw InvalidInput("gram must be an array of arrays");
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(integer_from_json(x, "gram entry"));
    gram.push_back(std::move(r));
  }
  if (j.contains("rank") && integer_from_json(j.at("rank"), "rank") != Integer(static_cast<long>(gram.size()))) {
    throw InvalidInput("rank does not match the gram matrix");
  }
  return IntLattice(std::move(gram), j.value("label", std::string()));
}

MukaiVector mukai_from_json(const Json& j) {
  return {integer_from_json(field(j, "r"), "r"), latvec_from_json(field(j, "l")), integer_from_json(field(j, "s"), "s")};
}

NSInput ns_from_json(const Json& j) {
  if (j.is_object() && j.contains("e") && j.contains("d") && !j.contains("gram")) {
    EllipticNS ns(integer_from_json(j.at("e"), "e"), integer_from_json(j.at("d"), "d"));
    return {ns.lattice(), ns.f(), ns};
  }
  IntLattice L = lattice_from_json(j);
  LatVec f;
  if (j.contains("f")) {
    f = latvec_from_json(j.at("f"));
  } else if (is_elliptic_gram(L)) {
    f = LatVec{0, 1};
  } else {
    throw InvalidInput("NS lattice needs a fiber class \"f\"");
  }
  if (f.size() != L.rank()) throw InvalidInput("fiber class has wrong length");
  std::optional<EllipticNS> ell;
  if (is_elliptic_gram(L) && f == LatVec{0, 1}) ell.emplace(L.entry(0, 0), L.entry(0, 1));
  return {std::move(L), std::move(f), std::move(ell)};
}

FujikiSetup setup_from_json(const Json& j) {
  const Json& lat = j.contains("lattice") ? j.at("lattice") : j;
  IntLattice L = lattice_from_json(lat);
  const int n = small_int(field(j, "n"), "n");
  if (j.contains("c_X")) {
    return FujikiSetup(n, rational_from_json(j.at("c_X"), "c_X"), std::move(L));
  }
  if (!j.contains("type")) throw InvalidInput("setup needs \"type\" or \"c_X\"");
  return FujikiSetup::builtin(parse_hk_type(j.at("type").get<std::string>()), n, std::move(L));
}

std::vector<LatVec> classes_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("classes") ? j.at("classes") : j;
  if (!arr.is_array()) throw InvalidInput("classes must be an array");
  std::vector<LatVec> out;
  for (const auto& item : arr) {
    if (item.is_object()) {
      const LatVec v = latvec_from_json(field(item, "class"));
      const int power = small_int(item.value("power", Json(1)), "power");
      if (power < 0) throw InvalidInput("power must be non-negative");
      for (int k = 0; k < power; ++k) out.push_back(v);
    } else {
      out.push_back(latvec_from_json(item));
    }
  }
  return out;
}

std::vector<ModificationStep> steps_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("steps") ? j.at("steps") : j;
  if (!arr.is_array()) throw InvalidInput("steps must be an array");
  std::vector<ModificationStep> out;
  for (const auto& s : arr) {
    out.push_back({integer_from_json(field(s, "r_B"), "r_B"), integer_from_json(field(s, "deg_B"), "deg_B")});
  }
  return out;
}

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const LatVec& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) {
    if (is_integer(c)) {
      out.push_back(to_json(c.get_num()));
    } else {
      out.push_back(to_string(c));
    }
  }
  return out;
}

Json to_json(const MukaiVector& v) { return {{"r", to_json(v.r)}, {"l", to_json(v.l)}, {"s", to_json(v.s)}}; }

Json to_json(const WallClass& w) {
  return {{"lambda", to_json(w.lambda)}, {"norm", to_json(w.norm)}, {"pair_h", to_json(w.pair_h)},
          {"pair_f", to_json(w.pair_f)}};
}

TheoremReport verdict_report(const std::string& name, const Verdict& v) {
  TheoremReport rep(name);
  for (const auto& c : v.conditions) {
    if (c.name == "e_not_divides_d") {
      rep.info()["e_not_divides_d"] = c.holds;
      continue;
    }
    rep.add(c.name, c.holds, {{"detail", c.detail}});
  }
  return rep;
}

namespace {

struct ScenarioState {
  std::map<std::string, NSInput> lattices;
  std::map<std::string, std::pair<std::string, MukaiVector>> vectors;  // label -> (lattice label, v)

  const NSInput& ns(const Json& p) const {
    const std::string label = field(p, "ns").get<std::string>();
    auto it = lattices.find(label);
    if (it == lattices.end()) throw InvalidInput("unknown lattice label '" + label + "'");
    return it->second;
  }

  const MukaiVector& vec(const Json& p, const std::string& ns_label) const {
    const std::string label = field(p, "v").get<std::string>();
    auto it = vectors.find(label);
    if (it == vectors.end()) throw InvalidInput("unknown vector label '" + label + "'");
    if (!it->second.first.empty() && it->second.first != ns_label) {
      throw InvalidInput("vector '" + label + "' belongs to lattice '" + it->second.first + "'");
    }
    return it->second.second;
  }
};

const EllipticNS& elliptic(const NSInput& ns) {
  if (!ns.elliptic) throw InvalidInput("pipeline needs an elliptic rank-2 lattice");
  return *ns.elliptic;
}

}  // namespace

std::vector<TheoremReport> run_scenario(const Json& scenario) {
  ScenarioState st;
  for (const auto& l : scenario.value("lattices", Json::array())) {
    const std::string label = field(l, "label").get<std::string>();
    if (!st.lattices.emplace(label, ns_from_json(l)).second) throw InvalidInput("duplicate lattice label '" + label + "'");
  }
  for (const auto& v : scenario.value("vectors", Json::array())) {
    const std::string label = field(v, "label").get<std::string>();
    const std::string lat = v.value("lattice", std::string());
    if (!lat.empty() && !st.lattices.count(lat)) throw InvalidInput("unknown lattice label '" + lat + "'");
    if (!st.vectors.emplace(label, std::make_pair(lat, mukai_from_json(v))).second) {
      throw InvalidInput("duplicate vector label '" + label + "'");
    }
  }
  std::vector<TheoremReport> out;
  const Json& pipes = field(scenario, "pipelines");
  if (!pipes.is_array()) throw InvalidInput("pipelines must be an array");
  for (const auto& p : pipes) {
    const std::string name = field(p, "name").get<std::string>();
    if (name == "vbk3ell" || name == "casoprim" || name == "rigid" || name == "reduce") {
      const std::string ns_label = field(p, "ns").get<std::string>();
      const NSInput& ns = st.ns(p);
      const MukaiVector& v = st.vec(p, ns_label);
      if (name == "vbk3ell") {
        std::optional<LatVec> h;
        if (p.contains("h")) h = latvec_from_json(p.at("h"));
        out.push_back(vbk3ell_pipeline(elliptic(ns), v, h));
      } else if (name == "casoprim") {
        out.push_back(casoprim_pipeline(elliptic(ns), v, latvec_from_json(field(p, "h"))));
      } else if (name == "rigid") {
        TheoremReport rep("rigid");
        const MukaiVector w = rigid_vector(ns.lattice, v, ns.f);
        rep.add("w_square_minus_two", mukai_square(ns.lattice, w) == -2, {{"w", to_json(w)}});
        out.push_back(std::move(rep));
      } else {
        TheoremReport rep("reduce");
        const ReductionTrace t = reduction_trace(ns.lattice, v, steps_from_json(field(p, "steps")), ns.f);
        Json sq = Json::array();
        for (const auto& s : t.squares) sq.push_back(to_json(s));
        rep.add("trace_valid", true, {{"squares", sq}});
        out.push_back(std::move(rep));
      }
    } else if (name == "unicita") {
      out.push_back(unicita_report(small_int(field(p, "i"), "i"), integer_from_json(field(p, "r0")),
                                   integer_from_json(field(p, "e"))));
    } else if (name == "nl_k3") {
      out.push_back(verdict_report("nl_k3", nl_k3_admissible(integer_from_json(field(p, "e")), integer_from_json(field(p, "d")),
                                                             integer_from_json(field(p, "r")),
                                                             integer_from_json(field(p, "v_square")))));
    } else if (name == "nl_hk") {
      out.push_back(verdict_report("nl_hk", nl_hk_admissible(integer_from_json(field(p, "e")), integer_from_json(field(p, "d")),
                                                             small_int(field(p, "i"), "i"))));
    } else {
      throw InvalidInput("unknown pipeline '" + name + "'");
    }
  }
  return out;
}

}  // namespace hkmod
