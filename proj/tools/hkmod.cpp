// hkmod: command-line front end.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 malformed
// input, 3 search cap exhausted.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iostream>
#include <map>

#include "hkmod/hilb2.hpp"
#include "hkmod/json_io.hpp"
#include "hkmod/kernels.hpp"
#include "hkmod/nl_search.hpp"
#include "hkmod/pipelines.hpp"
#include "hkmod/verify.hpp"

using namespace hkmod;

namespace {

struct Globals {
  bool json = false;
  bool no_timestamp = false;
  std::string cap = "10000000";
};

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void render_text(const Json& j, const std::string& indent, std::ostream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : std::string("-");
    const Json& v = it.value();
    if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()))) {
      os << indent << key << ":\n";
      render_text(v, indent + "  ", os);
    } else {
      os << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void emit(const Globals& g, Json out) {
  if (!g.no_timestamp) out["timestamp"] = utc_now();
  if (g.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    render_text(out, "", std::cout);
  }
}

int report_exit(const TheoremReport& rep) { return rep.overall() ? 0 : 1; }

SearchOptions search_options(const Globals& g) { return {parse_integer(g.cap)}; }

Json walls_json(const EllipticNS& ns, const std::vector<WallClass>& walls, bool with_rays) {
  Json arr = Json::array();
  for (const auto& w : walls) {
    Json item = to_json(w);
    if (with_rays) item["ray"] = to_json(wall_ray(ns, w));
    arr.push_back(std::move(item));
  }
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice, Mukai-vector and modular-sheaf numerics"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_flag("--no-timestamp", g.no_timestamp, "Omit the timestamp and timing fields");
  app.add_option("--cap", g.cap, "Candidate cap for minimal-parameter searches");

  std::function<int()> action;

  // fujiki
  auto* fuj = app.add_subcommand("fujiki", "Top intersection by the Fujiki relation");
  std::string setup_arg, classes_arg;
  fuj->add_option("--setup", setup_arg, "Setup JSON (file or inline)")->required();
  fuj->add_option("--classes", classes_arg, "Classes JSON (file or inline)")->required();
  fuj->callback([&] {
    action = [&] {
      const FujikiSetup s = setup_from_json(load_json_arg(setup_arg));
      const std::vector<LatVec> cls = classes_from_json(load_json_arg(classes_arg));
      const MatchingSum m = top_intersection(s, cls);
      emit(g, {{"value", to_json(m.value)}, {"matchings", to_json(m.matchings)}});
      return 0;
    };
  });

  // mukai
  auto* muk = app.add_subcommand("mukai", "Mukai vector numerics");
  std::string ns_arg, v_arg, twist_arg;
  muk->add_option("--ns", ns_arg, "NS lattice JSON")->required();
  muk->add_option("--v", v_arg, "Mukai vector JSON")->required();
  muk->add_option("--twist", twist_arg, "Also twist by exp(m f)");
  muk->callback([&] {
    action = [&] {
      const NSInput ns = ns_from_json(load_json_arg(ns_arg));
      const MukaiVector v = mukai_from_json(load_json_arg(v_arg));
      const MukaiNumerics num = numerics(ns.lattice, v);
      Json out{{"v", to_json(v)},
               {"v_square", to_json(num.v_square)},
               {"n", to_json(num.n_v)},
               {"a", to_json(num.a_v)},
               {"delta", to_json(num.delta)},
               {"expected_dim", to_json(expected_dim_surface(num.delta, v.r, 2, 0))}};
      if (!twist_arg.empty()) out["twist"] = to_json(twist_by_mf(ns.lattice, v, parse_integer(twist_arg), ns.f));
      emit(g, out);
      return 0;
    };
  });

  // walls
  auto* wal = app.add_subcommand("walls", "a-walls of the lattice [[e, d], [d, 0]]");
  std::string e_arg, d_arg, a_arg;
  bool suitability = false;
  wal->add_option("--e", e_arg, "q(h)")->required();
  wal->add_option("--d", d_arg, "q(h, f)")->required();
  wal->add_option("--a", a_arg, "Wall parameter a (integer or p/q)")->required();
  wal->add_flag("--suitability", suitability, "Report suitability and genericity of h");
  wal->callback([&] {
    action = [&] {
      const EllipticNS ns(parse_integer(e_arg), parse_integer(d_arg));
      const Rational a = parse_rational(a_arg);
      const auto walls = enumerate_wall_classes(ns, a);
      Json out{{"e", to_json(ns.e())}, {"d", to_json(ns.d())}, {"a", to_json(a)}, {"walls", walls_json(ns, walls, true)}};
      if (ns.e() >= 0) {
        out["min_negative_norm"] = to_json(min_negative_norm(ns));
        out["has_minus_two_class"] = has_minus_two_class(ns);
      }
      if (!suitability) {
        emit(g, out);
        return 0;
      }
      const SuitabilityReport s = is_suitable(ns, a);
      out["suitable"] = s.suitable;
      out["generic"] = s.generic;
      out["witnesses"] = walls_json(ns, s.witnesses, false);
      out["on_wall"] = walls_json(ns, s.on_wall, false);
      emit(g, out);
      return s.suitable ? 0 : 1;
    };
  });

  // reduce
  auto* red = app.add_subcommand("reduce", "Semistable-reduction trace by elementary modifications");
  std::string steps_arg;
  bool equal_slope = false;
  red->add_option("--ns", ns_arg, "NS lattice JSON")->required();
  red->add_option("--v", v_arg, "Starting Mukai vector JSON")->required();
  red->add_option("--steps", steps_arg, "Steps JSON")->required();
  red->add_flag("--allow-equal-slope", equal_slope, "Accept semistable-boundary steps");
  red->callback([&] {
    action = [&] {
      const NSInput ns = ns_from_json(load_json_arg(ns_arg));
      const MukaiVector v = mukai_from_json(load_json_arg(v_arg));
      const ReductionTrace t =
          reduction_trace(ns.lattice, v, steps_from_json(load_json_arg(steps_arg)), ns.f, {equal_slope});
      Json vecs = Json::array(), sq = Json::array();
      for (const auto& w : t.vectors) vecs.push_back(to_json(w));
      for (const auto& s : t.squares) sq.push_back(to_json(s));
      emit(g, {{"vectors", vecs}, {"squares", sq}});
      return 0;
    };
  });

  // rigid
  auto* rig = app.add_subcommand("rigid", "Rigid Mukai vector attached to v");
  rig->add_option("--ns", ns_arg, "NS lattice JSON")->required();
  rig->add_option("--v", v_arg, "Mukai vector JSON")->required();
  rig->callback([&] {
    action = [&] {
      const NSInput ns = ns_from_json(load_json_arg(ns_arg));
      const MukaiVector v = mukai_from_json(load_json_arg(v_arg));
      const Integer k = pair_int(ns.lattice, ns.f, v.l);
      const BezoutPair b = bezout_r0_d0(v.r, k);
      const MukaiVector w = rigid_vector(ns.lattice, v, ns.f);
      emit(g, {{"k", to_json(k)},
               {"r0", to_json(b.r0)},
               {"d0", to_json(b.d0)},
               {"n", to_json(numerics(ns.lattice, v).n_v)},
               {"w", to_json(w)},
               {"w_square", to_json(mukai_square(ns.lattice, w))}});
      return 0;
    };
  });

  // nl
  auto* nl = app.add_subcommand("nl", "Noether-Lefschetz admissibility");
  std::string kind = "hk", i_arg = "1", r_arg, v2_arg, r0_arg, m_arg = "1";
  nl->add_option("--kind", kind, "k3 or hk")->check(CLI::IsMember({"k3", "hk"}));
  nl->add_option("--e", e_arg, "q(h)")->required();
  nl->add_option("--d", d_arg, "q(h, f)")->required();
  nl->add_option("--i", i_arg, "Divisibility of h (hk)");
  nl->add_option("--r", r_arg, "Rank of v (k3)");
  nl->add_option("--v2", v2_arg, "Mukai square of v (k3)");
  nl->add_option("--r0", r0_arg, "Also test the stability bound with a0 = a_mod(r0) (hk)");
  nl->add_option("--m", m_arg, "Multiplier m in gcd(m i, d / i) = 1");
  nl->callback([&] {
    action = [&] {
      const Integer e = parse_integer(e_arg), d = parse_integer(d_arg);
      std::vector<TheoremReport> reps;
      if (kind == "k3") {
        if (r_arg.empty() || v2_arg.empty()) throw InvalidInput("--kind k3 needs --r and --v2");
        reps.push_back(verdict_report("nl_k3", nl_k3_admissible(e, d, parse_integer(r_arg), parse_integer(v2_arg))));
      } else {
        const int i = static_cast<int>(parse_integer(i_arg).get_si());
        reps.push_back(verdict_report("nl_hk", nl_hk_admissible(e, d, i)));
        if (!r0_arg.empty()) {
          const F2Invariants inv = f2_invariants(parse_integer(r0_arg));
          TheoremReport p = verdict_report("propriostab", propriostab_admissible(e, d, i, inv.a_mod, parse_integer(m_arg)));
          p.info()["a0"] = to_json(inv.a_mod);
          reps.push_back(std::move(p));
        }
      }
      if (kind == "k3" || divides(2, e)) {
        const NefIsotropicReport nef = nef_isotropic_classes(e, d);
        Json rays = Json::array();
        for (const auto& c : nef.classes) rays.push_back({{"ray", to_json(c.ray)}, {"pairing_with_h", to_json(c.pairing_with_h)}});
        reps.front().info()["nef_isotropic"] = rays;
        reps.front().info()["nef_isotropic_unique"] = nef.unique;
      }
      Json arr = Json::array();
      int code = 0;
      for (const auto& r : reps) {
        arr.push_back(r.to_json());
        code = std::max(code, report_exit(r));
      }
      emit(g, {{"reports", arr}});
      return code;
    };
  });

  // nl-search
  auto* nls = app.add_subcommand("nl-search", "Minimal admissible d for given r0, e, i");
  nls->add_option("--r0", r0_arg, "r0")->required();
  nls->add_option("--e", e_arg, "q(h)")->required();
  nls->add_option("--i", i_arg, "Divisibility of h")->required();
  nls->callback([&] {
    action = [&] {
      const Integer r0 = parse_integer(r0_arg), e = parse_integer(e_arg);
      const int i = static_cast<int>(parse_integer(i_arg).get_si());
      Json out{{"r0", to_json(r0)}, {"e", to_json(e)}, {"i", i}, {"pazienza_bound", to_json(pazienza_bound(r0, e))}};
      out["min_d"] = to_json(buonacompt_min_d(r0, e, i, search_options(g)));
      if (econ_check(r0, e)) {
        const M0S0 ms = m0_s0(r0, e);
        out["m0"] = to_json(ms.m0);
        out["digrande_bound"] = to_json(digrande_bound(ms.m0, r0));
        out["min_d0"] = to_json(rigsuk_min_d0(ms.m0, r0, search_options(g)));
      }
      emit(g, out);
      return 0;
    };
  });

  // unicita
  auto* uni = app.add_subcommand("unicita", "Hypothesis pipeline for the K3^[2] uniqueness theorem");
  uni->add_option("--i", i_arg, "Divisibility of h")->required();
  uni->add_option("--r0", r0_arg, "r0")->required();
  uni->add_option("--e", e_arg, "q(h)")->required();
  uni->callback([&] {
    action = [&] {
      const TheoremReport rep = unicita_report(static_cast<int>(parse_integer(i_arg).get_si()), parse_integer(r0_arg),
                                               parse_integer(e_arg), search_options(g));
      emit(g, rep.to_json());
      return report_exit(rep);
    };
  });

  // vbk3ell / casoprim
  std::string h_arg;
  auto* vbk = app.add_subcommand("vbk3ell", "Hypotheses for stable vector bundles on elliptic K3s");
  vbk->add_option("--ns", ns_arg, "NS lattice JSON")->required();
  vbk->add_option("--v", v_arg, "Mukai vector JSON")->required();
  vbk->add_option("--polarization", h_arg, "Polarization (defaults to the basis class h)");
  vbk->callback([&] {
    action = [&] {
      const NSInput ns = ns_from_json(load_json_arg(ns_arg));
      if (!ns.elliptic) throw InvalidInput("vbk3ell needs an elliptic rank-2 lattice");
      std::optional<LatVec> h;
      if (!h_arg.empty()) h = latvec_from_json(load_json_arg(h_arg));
      const TheoremReport rep = vbk3ell_pipeline(*ns.elliptic, mukai_from_json(load_json_arg(v_arg)), h);
      emit(g, rep.to_json());
      return report_exit(rep);
    };
  });
  auto* cas = app.add_subcommand("casoprim", "Hypotheses for the primitive case");
  cas->add_option("--ns", ns_arg, "NS lattice JSON")->required();
  cas->add_option("--v", v_arg, "Mukai vector JSON")->required();
  cas->add_option("--polarization", h_arg, "Polarization")->required();
  cas->callback([&] {
    action = [&] {
      const NSInput ns = ns_from_json(load_json_arg(ns_arg));
      if (!ns.elliptic) throw InvalidInput("casoprim needs an elliptic rank-2 lattice");
      const TheoremReport rep =
          casoprim_pipeline(*ns.elliptic, mukai_from_json(load_json_arg(v_arg)), latvec_from_json(load_json_arg(h_arg)));
      emit(g, rep.to_json());
      return report_exit(rep);
    };
  });

  // sweep-econ
  auto* swe = app.add_subcommand("sweep-econ", "Integrality sweep of m0 and s0");
  long r0max = 12, emax = 2000;
  bool serial = false;
  swe->add_option("--r0max", r0max, "Largest r0");
  swe->add_option("--emax", emax, "Largest e");
  swe->add_flag("--serial", serial, "Use the serial reference sweep");
  swe->callback([&] {
    action = [&] {
      const EconSweep s = serial ? reference::sweep_econ(r0max, emax) : sweep_econ(r0max, emax);
      emit(g, {{"candidates", s.candidates}, {"admissible", s.admissible}, {"failures", s.failures},
               {"failure_samples", s.failure_samples}});
      return s.failures == 0 ? 0 : 1;
    };
  });

  // verify-all
  auto* ver = app.add_subcommand("verify-all", "Run the property suites");
  std::string filter;
  std::vector<std::string> overrides;
  int effort = 1;
  ver->add_option("--filter", filter, "Suite name or substring of suite.property");
  ver->add_option("--fujiki-override", overrides, "Replace a Fujiki table entry, TYPE=VALUE (testing)");
  ver->add_option("--effort", effort, "Scale randomized case counts")->check(CLI::PositiveNumber);
  ver->callback([&] {
    action = [&] {
      VerifyOptions opt;
      opt.filter = filter;
      opt.effort = effort;
      std::map<HkType, Rational> table;
      for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw InvalidInput("override must be TYPE=VALUE, got " + o);
        table[parse_hk_type(o.substr(0, eq))] = parse_rational(o.substr(eq + 1));
      }
      if (!table.empty()) {
        opt.fujiki_table = [table](HkType t, int n) {
          auto it = table.find(t);
          return it != table.end() ? it->second : builtin_fujiki_constant(t, n);
        };
      }
      const auto results = verify_all(opt);
      if (results.empty()) throw InvalidInput("filter '" + filter + "' selects no properties");
      Json arr = Json::array();
      Json failing = Json::array();
      for (const auto& r : results) {
        Json item{{"property", r.suite + "." + r.name}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}};
        // wall-clock fields go with the timestamp
        if (!g.no_timestamp) item["seconds"] = r.seconds;
        arr.push_back(std::move(item));
        if (!r.pass) failing.push_back(r.suite + "." + r.name);
      }
      emit(g, {{"results", arr}, {"failing", failing}, {"overall", failing.empty() ? "pass" : "fail"}});
      return failing.empty() ? 0 : 1;
    };
  });

  // run
  auto* run = app.add_subcommand("run", "Run the pipelines of a scenario file");
  std::string scenario_arg;
  run->add_option("--scenario", scenario_arg, "Scenario JSON")->required();
  run->callback([&] {
    action = [&] {
      const auto reps = run_scenario(load_json_arg(scenario_arg));
      Json arr = Json::array();
      int code = 0;
      for (const auto& r : reps) {
        arr.push_back(r.to_json());
        code = std::max(code, report_exit(r));
      }
      emit(g, {{"reports", arr}});
      return code;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const InvalidInput& ex) {
    std::cerr << "invalid input: " << ex.what() << "\n";
    return 2;
  } catch (const SearchCapExhausted& ex) {
    std::cerr << "search cap exhausted: " << ex.what() << "\n";
    return 3;
  } catch (const MathFailure& ex) {
    std::cerr << "check failed: " << ex.what() << "\n";
    return 1;
  } catch (const InternalError& ex) {
    std::cerr << "internal identity violated: " << ex.what() << "\n";
    return 1;
  }
}
