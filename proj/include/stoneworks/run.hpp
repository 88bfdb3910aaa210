#pragma once

// The batch engine behind the CLI: executes manifest commands in order and
// assembles a deterministic JSON report. Reports never carry timestamps or
// machine state, so identical inputs give byte-identical output.

#include <string>
#include <utility>
#include <vector>

#include "stoneworks/crossed.hpp"
#include "stoneworks/dot.hpp"
#include "stoneworks/io.hpp"
#include "stoneworks/spectrum.hpp"

namespace stoneworks {

struct RunOutcome {
  json report;
  int exit_status = 0;
};

namespace detail {

inline bool is_refusal(ErrorKind k) {
  switch (k) {
    case ErrorKind::precondition_unmet:
    case ErrorKind::not_additive:
    case ErrorKind::not_disjoint:
    case ErrorKind::not_spectral:
    case ErrorKind::not_t0:
    case ErrorKind::not_distributive:
    case ErrorKind::not_a_frame:
      return true;
    default:
      return false;
  }
}

struct CommandOutcome {
  json payload;
  bool passing = true;
};

inline json lattice_summary(const Lattice& l) {
  json j;
  j["elements"] = l.names();
  j["distributive"] = is_distributive(l);
  return j;
}

inline CommandOutcome run_validate(const Manifest& m, const std::string& target) {
  CommandOutcome out;
  json records = json::array();
  auto applies = [&](const std::string& name) { return target.empty() || target == name; };
  for (const auto& [name, l] : m.lattices)
    if (applies(name)) {
      json r = {{"name", name}, {"kind", "lattice"}, {"ok", true}};
      r["distributive"] = is_distributive(l);
      r["frame"] = is_frame(l);
      records.push_back(r);
    }
  for (const auto& [name, x] : m.spaces)
    if (applies(name)) {
      json r = {{"name", name}, {"kind", "space"}, {"ok", true}};
      r["t0"] = is_t0(x);
      r["sober"] = is_sober(x);
      r["spectral"] = is_spectral(x);
      r["opens"] = static_cast<int>(x.opens.size());
      records.push_back(r);
    }
  for (const auto& [name, ts] : m.systems)
    if (applies(name)) {
      SystemValidation v = validate(ts);
      json r = {{"name", name}, {"kind", "tensor_system"}, {"ok", v.ok}, {"additive", v.additive}};
      if (!v.ok) {
        r["violation"] = v.violation;
        r["witness"] = v.witness;
        out.passing = false;
      }
      records.push_back(r);
    }
  for (const auto& [name, a] : m.actions)
    if (applies(name)) {
      records.push_back({{"name", name}, {"kind", "action"}, {"ok", true}});
      (void)a;
    }
  for (const auto& [name, d] : m.open_data)
    if (applies(name)) {
      DatumValidation v = validate(d);
      json r = {{"name", name}, {"kind", "open_support_datum"}, {"ok", v.ok}};
      if (!v.ok) {
        r["clause"] = v.clause;
        r["witness"] = v.witness;
        out.passing = false;
      }
      records.push_back(r);
    }
  for (const auto& [name, e] : m.closed_data)
    if (applies(name)) {
      DatumValidation v = validate(e.datum);
      json r = {{"name", name}, {"kind", "closed_support_datum"}, {"ok", v.ok}};
      if (!v.ok) out.passing = false;
      records.push_back(r);
    }
  out.payload["records"] = records;
  return out;
}

template <class Fn>
void over_lattices(const Manifest& m, const std::string& target, json& arr, Fn fn) {
  for (const auto& [name, l] : m.lattices)
    if (target.empty() || target == name) {
      json r = fn(l);
      r["name"] = name;
      arr.push_back(r);
    }
}

template <class Fn>
void over_systems(const Manifest& m, const std::string& target, json& arr, Fn fn) {
  for (const auto& [name, ts] : m.systems)
    if (target.empty() || target == name) {
      require_valid(ts);  // broken systems stop here, not deep in a verifier
      json r = fn(ts);
      r["name"] = name;
      arr.push_back(r);
    }
}

inline CommandOutcome run_ideals(const Manifest& m, const std::string& target) {
  CommandOutcome out;
  json arr = json::array();
  over_lattices(m, target, arr, [](const Lattice& l) {
    IdealLattice id = all_ideals(l);
    json r;
    json names = json::array();
    for (Mask i : id.ideals) names.push_back(mask_name(i, l.names()));
    r["ideals"] = names;
    r["count"] = static_cast<int>(id.ideals.size());
    return r;
  });
  over_systems(m, target, arr, [](const TensorSystem& ts) {
    json r;
    json tnames = json::array();
    for (Mask i : all_ideal_masks(ts)) tnames.push_back(mask_name(i, ts.elements));
    r["thick_ideals"] = tnames;
    json snames = json::array();
    for (Mask i : semiprime_ideals(ts)) snames.push_back(mask_name(i, ts.elements));
    r["semiprime_ideals"] = snames;
    return r;
  });
  out.payload["records"] = arr;
  return out;
}

inline CommandOutcome run_spectrum(const Manifest& m, const std::string& target) {
  CommandOutcome out;
  json arr = json::array();
  over_lattices(m, target, arr, [](const Lattice& l) {
    LatticeSpectrum s = spc_of_lattice(l);
    json r;
    r["points"] = s.space.points;
    json supp;
    for (int x = 0; x < l.size(); ++x)
      supp[l.name(x)] = names_of_mask(s.supp[static_cast<std::size_t>(x)], s.space.points);
    r["supp"] = supp;
    return r;
  });
  over_systems(m, target, arr, [](const TensorSystem& ts) {
    SystemSpectrum closed = spc(ts);
    SystemSpectrum open = spc_nu(ts);
    json r;
    r["points"] = closed.space.points;
    json supp;
    for (int x = 0; x < ts.size(); ++x)
      supp[ts.name(x)] = names_of_mask(closed.supp[static_cast<std::size_t>(x)], closed.space.points);
    r["supp"] = supp;
    json spc_opens = json::array();
    for (Mask u : closed.space.opens) spc_opens.push_back(names_of_mask(u, closed.space.points));
    r["spc_opens"] = spc_opens;
    json nu_opens = json::array();
    for (Mask u : open.space.opens) nu_opens.push_back(names_of_mask(u, open.space.points));
    r["spc_nu_opens"] = nu_opens;
    return r;
  });
  out.payload["records"] = arr;
  return out;
}

inline CommandOutcome run_dual(const Manifest& m, const std::string& target) {
  CommandOutcome out;
  json arr = json::array();
  for (const auto& [name, x] : m.spaces)
    if (target.empty() || target == name) {
      Space d = hochster_dual(x);
      json opens = json::array();
      for (Mask u : d.opens) opens.push_back(names_of_mask(u, d.points));
      arr.push_back({{"name", name}, {"dual_opens", opens}});
    }
  over_lattices(m, target, arr, [](const Lattice& l) {
    LatticeSpectrum s = spc_of_lattice(l);
    Space d = spc_dual_of_lattice(s);
    json opens = json::array();
    for (Mask u : d.opens) opens.push_back(names_of_mask(u, d.points));
    return json{{"spc_dual_opens", opens}};
  });
  out.payload["records"] = arr;
  return out;
}

inline CommandOutcome run_support_check(const Manifest& m, const std::string& target) {
  CommandOutcome out;
  json arr = json::array();
  for (const auto& [name, d] : m.open_data) {
    if (!target.empty() && target != name) continue;
    json r = {{"name", name}};
    DatumValidation v = validate(d);
    r["valid"] = v.ok;
    if (!v.ok) {
      r["clause"] = v.clause;
      r["witness"] = v.witness;
      out.passing = false;
      arr.push_back(r);
      continue;
    }
    DatumProperties p = properties(d);
    r["injective"] = p.injective;
    r["faithful"] = p.faithful;
    r["order_reflecting"] = p.order_reflecting;
    r["realizing"] = p.realizing;
    r["noetherian_realizing"] = p.noetherian_realizing;
    ClassifyingVerdict c = is_classifying(d);
    r["classifying"] = c.classifying;
    if (!c.classifying) r["classifying_witness"] = c.witness;
    classifying_iff_check(d);
    r["classifying_iff_injective_and_realizing"] = true;
    UniversalMap u = universal_map(d);
    json map;
    for (int x = 0; x < d.target.size(); ++x)
      map[d.target.points[static_cast<std::size_t>(x)]] =
          u.spectrum.space.points[static_cast<std::size_t>(u.point_map[static_cast<std::size_t>(x)])];
    r["universal_map"] = map;
    arr.push_back(r);
  }
  out.payload["records"] = arr;
  return out;
}

inline CommandOutcome run_classify(const Manifest& m, const std::string& target) {
  CommandOutcome out;
  json arr = json::array();
  for (const auto& [name, ts] : m.systems) {
    if (!target.empty() && target != name) continue;
    require_valid(ts);
    json r = {{"name", name}};
    try {
      ClassificationTable table = classify(ts);
      SystemSpectrum s = spc(ts);
      json rows = json::array();
      for (const ClassificationRow& row : table.rows)
        rows.push_back({{"ideal", mask_name(row.ideal, ts.elements)},
                        {"thomason", mask_name(row.thomason, s.space.points)}});
      r["ok"] = true;
      r["rows"] = rows;
    } catch (const ContractError& e) {
      if (e.kind() != ErrorKind::precondition_unmet) throw;
      r["ok"] = false;
      r["refusal"] = e.what();
      out.passing = false;
    }
    arr.push_back(r);
  }
  out.payload["records"] = arr;
  return out;
}

inline CommandOutcome run_theorem_a(const Manifest& m, const std::string& target) {
  CommandOutcome out;
  json arr = json::array();
  over_systems(m, target, arr, [](const TensorSystem& ts) {
    TheoremAVerdict v = theorem_a_check(ts);
    return json{{"ok", true}, {"semiprimes", v.semiprime_count}, {"opens", v.open_count}};
  });
  out.payload["records"] = arr;
  return out;
}

inline CommandOutcome run_theorem_b(const Manifest& m, const std::string& target) {
  CommandOutcome out;
  json arr = json::array();
  bool all = true;
  over_systems(m, target, arr, [&](const TensorSystem& ts) {
    TheoremBVerdict v = theorem_b_check(ts);
    json r;
    r["principal_closure"] = v.principal_closure;
    r["compact_detection_lattice"] = v.compact_detection_lattice;
    r["clause_conditions"] = v.clause_conditions;
    r["clause_coherent"] = v.clause_coherent;
    r["clause_spectral"] = v.clause_spectral;
    r["all_true"] = v.all_true;
    if (!v.witness_open.empty()) r["witness_open"] = v.witness_open;
    r["table1"] = emit_table1(ts);
    if (!v.all_true) all = false;
    return r;
  });
  out.passing = all;
  out.payload["records"] = arr;
  return out;
}

inline CommandOutcome run_theorem_c1(const Manifest& m, const std::string& target) {
  CommandOutcome out;
  json arr = json::array();
  for (const auto& [name, entry] : m.closed_data) {
    if (!target.empty() && target != name) continue;
    json r = {{"name", name}, {"system", entry.system}};
    try {
      TheoremC1Verdict v = theorem_c1_check(m.systems.at(entry.system), entry.datum);
      r["injective"] = v.injective;
      r["realizing"] = v.realizing;
      r["applicable"] = v.applicable;
      r["homeomorphism"] = v.homeomorphism;
      if (!v.applicable || !v.homeomorphism) out.passing = false;
    } catch (const ContractError& e) {
      if (e.kind() != ErrorKind::precondition_unmet) throw;
      r["refusal"] = e.what();
      out.passing = false;
    }
    arr.push_back(r);
  }
  out.payload["records"] = arr;
  return out;
}

inline CommandOutcome run_barthel(const Manifest& m, const std::string& target) {
  CommandOutcome out;
  json arr = json::array();
  bool all = true;
  over_lattices(m, target, arr, [&](const Lattice& l) {
    BarthelVerdict v = barthel_verdict(l);
    bool pass = v.all_ideals_principal && v.all_primes_principal && v.spc_dual_weakly_noetherian &&
                v.spc_dual_finite && v.spc_noetherian;
    if (!pass) all = false;
    return json{{"all_ideals_principal", v.all_ideals_principal},
                {"all_primes_principal", v.all_primes_principal},
                {"spc_dual_weakly_noetherian", v.spc_dual_weakly_noetherian},
                {"spc_dual_finite", v.spc_dual_finite},
                {"spc_noetherian", v.spc_noetherian}};
  });
  out.passing = all;
  out.payload["records"] = arr;
  return out;
}

inline CommandOutcome run_crossed(const Manifest& m, const std::string& target) {
  CommandOutcome out;
  json arr = json::array();
  for (const auto& [name, a] : m.actions) {
    if (!target.empty() && target != name) continue;
    json r = {{"name", name}};
    json gp = json::array();
    for (Mask p : g_primes(a)) gp.push_back(mask_name(p, a.system.elements));
    r["g_primes"] = gp;
    r["g_ideals"] = static_cast<int>(g_ideal_masks(a).size());
    HvBijectionVerdict hv = hv_bijection_check(a);
    r["hv_ideal_bijection"] = hv.ideal_bijection;
    r["hv_spc_homeomorphism"] = hv.spc_homeomorphism;
    RespSemiprimeVerdict rs = resp_semiprime_check(a);
    r["all_g_primes_semiprime"] = rs.all_g_primes_semiprime;
    r["bijection_restricts_to_semiprimes"] = rs.bijection_restricts;
    try {
      cd_inheritance_check(a);
      r["compact_detection_inherited"] = true;
    } catch (const ContractError& e) {
      if (e.kind() != ErrorKind::precondition_unmet) throw;
      r["compact_detection_inherited"] = e.what();
      out.passing = false;
    }
    try {
      pc_finite_g_check(a);
      r["principal_closure_inherited"] = true;
    } catch (const ContractError& e) {
      if (e.kind() != ErrorKind::precondition_unmet) throw;
      r["principal_closure_inherited"] = e.what();
      out.passing = false;
    }
    arr.push_back(r);
  }
  out.payload["records"] = arr;
  return out;
}

}  // namespace detail

inline RunOutcome run(const Manifest& m, const std::vector<Command>& commands, bool assert_mode) {
  RunOutcome out;
  out.report["tool"] = "stoneworks";
  out.report["format"] = 1;
  out.report["environment"] = {{"carrier_cap", max_elements},
                               {"ordering", "canonical declaration order, unseeded"}};
  json results = json::array();

  bool violation = false, invalid = false, failed_verdict = false;
  for (const Command& cmd : commands) {
    json entry = {{"op", cmd.op}};
    if (!cmd.target.empty()) entry["target"] = cmd.target;
    try {
      detail::CommandOutcome co;
      if (cmd.op == "validate") co = detail::run_validate(m, cmd.target);
      else if (cmd.op == "ideals") co = detail::run_ideals(m, cmd.target);
      else if (cmd.op == "spectrum") co = detail::run_spectrum(m, cmd.target);
      else if (cmd.op == "dual") co = detail::run_dual(m, cmd.target);
      else if (cmd.op == "support-check") co = detail::run_support_check(m, cmd.target);
      else if (cmd.op == "classify") co = detail::run_classify(m, cmd.target);
      else if (cmd.op == "theorem-a") co = detail::run_theorem_a(m, cmd.target);
      else if (cmd.op == "theorem-b") co = detail::run_theorem_b(m, cmd.target);
      else if (cmd.op == "theorem-c1") co = detail::run_theorem_c1(m, cmd.target);
      else if (cmd.op == "barthel") co = detail::run_barthel(m, cmd.target);
      else if (cmd.op == "crossed") co = detail::run_crossed(m, cmd.target);
      else
        fail(ErrorKind::parse_error, "unknown command '" + cmd.op + "'");
      entry["status"] = "ok";
      entry["result"] = co.payload;
      if (!co.passing) failed_verdict = true;
    } catch (const EquivalenceViolation& e) {
      entry["status"] = "equivalence-violation";
      entry["message"] = e.what();
      violation = true;
    } catch (const ContractError& e) {
      if (detail::is_refusal(e.kind())) {
        entry["status"] = "refused";
        failed_verdict = true;
      } else {
        entry["status"] = "invalid";
        invalid = true;
      }
      entry["message"] = e.what();
    }
    results.push_back(entry);
  }
  out.report["results"] = results;
  out.exit_status = violation ? 3 : invalid ? 2 : (assert_mode && failed_verdict) ? 1 : 0;
  out.report["exit_status"] = out.exit_status;
  return out;
}

// Manifest-driven batch mode (the `report` command).
inline RunOutcome run(const Manifest& m, bool assert_mode = false) {
  return run(m, m.commands, assert_mode);
}

// DOT bundle: Hasse diagrams for lattices, specialization orders for spaces
// and system spectra.
inline std::vector<std::pair<std::string, std::string>> dot_bundle(const Manifest& m) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, l] : m.lattices)
    out.emplace_back("lattice_" + name + ".dot", emit_dot(l, name));
  for (const auto& [name, x] : m.spaces)
    if (is_t0(x)) out.emplace_back("space_" + name + ".dot", emit_dot(x, name));
  for (const auto& [name, ts] : m.systems)
    out.emplace_back("spc_" + name + ".dot", emit_dot(spc(ts).space, "spc_" + name));
  return out;
}

}  // namespace stoneworks
