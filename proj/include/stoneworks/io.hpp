#pragma once

// Manifest parsing and structure serialization. One JSON document holds the
// named inputs (lattices by covers, spaces by open basis, tensor systems by
// tables and rules, actions by permutations, support data) plus a command
// list. Parsing reports line/column positions; unresolved names are
// reference errors.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stoneworks/classification.hpp"
#include "stoneworks/crossed.hpp"
#include "stoneworks/errors.hpp"
#include "stoneworks/lattice.hpp"
#include "stoneworks/space.hpp"
#include "stoneworks/support.hpp"
#include "stoneworks/tensor_system.hpp"

namespace stoneworks {

using json = nlohmann::json;

struct Command {
  std::string op;
  std::string target;  // empty: every applicable input
};

struct ClosedDatumEntry {
  std::string system;
  ClosedSupportDatum datum;
};

struct Manifest {
  std::map<std::string, Lattice> lattices;
  std::map<std::string, Space> spaces;
  std::map<std::string, TensorSystem> systems;
  std::map<std::string, GroupAction> actions;
  std::map<std::string, OpenSupportDatum> open_data;
  std::map<std::string, ClosedDatumEntry> closed_data;
  std::vector<Command> commands;
};

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what) {
  throw ContractError(ErrorKind::parse_error, what);
}

inline const json& expect(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where + ": missing key '" + key + "'");
  return *it;
}

inline std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const json& e : j) {
    if (!e.is_string()) parse_fail(where + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline int element_index(const std::vector<std::string>& names, const std::string& name,
                         const std::string& where) {
  for (int i = 0; i < static_cast<int>(names.size()); ++i)
    if (names[static_cast<std::size_t>(i)] == name) return i;
  throw ContractError(ErrorKind::reference_error, where + ": unknown element '" + name + "'");
}

inline Mask mask_of(const json& j, const std::vector<std::string>& names, const std::string& where) {
  Mask m = 0;
  for (const std::string& n : string_list(j, where)) m |= bit(element_index(names, n, where));
  return m;
}

inline Lattice parse_lattice(const json& j, const std::string& where) {
  std::vector<std::string> elements = string_list(expect(j, "elements", where), where);
  std::vector<std::pair<std::string, std::string>> covers;
  for (const json& c : expect(j, "covers", where)) {
    if (!c.is_array() || c.size() != 2) parse_fail(where + ": covers must be pairs");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return lattice_from_covers(std::move(elements), covers);
}

inline Space parse_space(const json& j, const std::string& where) {
  std::vector<std::string> points = string_list(expect(j, "points", where), where);
  std::vector<Mask> basis;
  for (const json& b : expect(j, "open_basis", where)) basis.push_back(mask_of(b, points, where));
  return from_open_basis(std::move(points), basis);
}

inline std::vector<std::vector<int>> parse_table(const json& j, const std::vector<std::string>& names,
                                                 const std::string& where) {
  if (!j.is_array() || j.size() != names.size()) parse_fail(where + ": table must have one row per element");
  std::vector<std::vector<int>> table;
  for (const json& row : j) {
    if (!row.is_array() || row.size() != names.size())
      parse_fail(where + ": table row has the wrong length");
    std::vector<int> r;
    for (const json& cell : row) {
      if (!cell.is_string()) parse_fail(where + ": table cell must name an element");
      r.push_back(element_index(names, cell.get<std::string>(), where));
    }
    table.push_back(std::move(r));
  }
  return table;
}

inline TensorSystem parse_system(const json& j, const std::string& where) {
  TensorSystem ts;
  ts.elements = string_list(expect(j, "elements", where), where);
  ts.zero = element_index(ts.elements, expect(j, "zero", where).get<std::string>(), where);
  ts.unit = element_index(ts.elements, expect(j, "unit", where).get<std::string>(), where);
  ts.tensor = parse_table(expect(j, "tensor", where), ts.elements, where);
  for (const json& r : expect(j, "rules", where)) {
    Rule rule;
    rule.premises = mask_of(expect(r, "if", where), ts.elements, where);
    rule.conclusion = element_index(ts.elements, expect(r, "then", where).get<std::string>(), where);
    ts.rules.push_back(rule);
  }
  if (j.contains("sum")) ts.sum = parse_table(j["sum"], ts.elements, where);
  return ts;
}

inline GroupAction parse_action(const json& j, const Manifest& m, const std::string& where) {
  GroupAction a;
  const json& g = expect(j, "group", where);
  std::vector<std::string> gnames = string_list(expect(g, "elements", where), where);
  a.group = make_group(gnames, parse_table(expect(g, "table", where), gnames, where));
  std::string sysname = expect(j, "system", where).get<std::string>();
  auto it = m.systems.find(sysname);
  if (it == m.systems.end())
    throw ContractError(ErrorKind::reference_error, where + ": unknown tensor system '" + sysname + "'");
  a.system = it->second;
  const json& act = expect(j, "act", where);
  for (const std::string& gname : gnames) {
    if (!act.contains(gname)) parse_fail(where + ": action missing for group element '" + gname + "'");
    std::vector<std::string> images = string_list(act[gname], where);
    if (images.size() != a.system.elements.size())
      parse_fail(where + ": action of '" + gname + "' must list one image per element");
    std::vector<int> row;
    for (const std::string& img : images)
      row.push_back(element_index(a.system.elements, img, where));
    a.act.push_back(std::move(row));
  }
  require_valid(a);
  return a;
}

}  // namespace detail

inline Manifest parse_manifest(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // recover line/column from the byte offset
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ContractError(ErrorKind::parse_error, "line " + std::to_string(line) + " column " +
                                                    std::to_string(col) + ": " + e.what());
  }
  Manifest m;
  if (doc.contains("lattices"))
    for (auto& [name, j] : doc["lattices"].items())
      m.lattices.emplace(name, detail::parse_lattice(j, "lattice '" + name + "'"));
  if (doc.contains("spaces"))
    for (auto& [name, j] : doc["spaces"].items())
      m.spaces.emplace(name, detail::parse_space(j, "space '" + name + "'"));
  if (doc.contains("tensor_systems"))
    for (auto& [name, j] : doc["tensor_systems"].items())
      m.systems.emplace(name, detail::parse_system(j, "tensor system '" + name + "'"));
  if (doc.contains("actions"))
    for (auto& [name, j] : doc["actions"].items())
      m.actions.emplace(name, detail::parse_action(j, m, "action '" + name + "'"));
  if (doc.contains("data"))
    for (auto& [name, j] : doc["data"].items()) {
      const std::string where = "datum '" + name + "'";
      std::string kind = detail::expect(j, "kind", where).get<std::string>();
      if (kind == "open") {
        OpenSupportDatum d;
        std::string base = detail::expect(j, "base", where).get<std::string>();
        auto lit = m.lattices.find(base);
        if (lit == m.lattices.end())
          throw ContractError(ErrorKind::reference_error, where + ": unknown lattice '" + base + "'");
        d.base = lit->second;
        std::string target = detail::expect(j, "target", where).get<std::string>();
        auto sit = m.spaces.find(target);
        if (sit == m.spaces.end())
          throw ContractError(ErrorKind::reference_error, where + ": unknown space '" + target + "'");
        d.target = sit->second;
        const json& sigma = detail::expect(j, "sigma", where);
        d.sigma.assign(static_cast<std::size_t>(d.base.size()), 0);
        for (int x = 0; x < d.base.size(); ++x) {
          const std::string& n = d.base.name(x);
          if (!sigma.contains(n)) detail::parse_fail(where + ": sigma missing for '" + n + "'");
          d.sigma[static_cast<std::size_t>(x)] = detail::mask_of(sigma[n], d.target.points, where);
        }
        m.open_data.emplace(name, std::move(d));
      } else if (kind == "closed") {
        std::string base = detail::expect(j, "base_system", where).get<std::string>();
        auto sit = m.systems.find(base);
        if (sit == m.systems.end())
          throw ContractError(ErrorKind::reference_error, where + ": unknown tensor system '" + base + "'");
        if (!j.value("canonical", false))
          detail::parse_fail(where + ": closed data are built with \"canonical\": true");
        m.closed_data.emplace(name, ClosedDatumEntry{base, canonical_closed_datum(sit->second)});
      } else {
        detail::parse_fail(where + ": kind must be 'open' or 'closed'");
      }
    }
  if (doc.contains("commands"))
    for (const json& c : doc["commands"]) {
      Command cmd;
      cmd.op = detail::expect(c, "op", "command").get<std::string>();
      cmd.target = c.value("target", std::string{});
      m.commands.push_back(std::move(cmd));
    }
  return m;
}

inline Manifest parse_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse_error, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

// --- serialization -----------------------------------------------------------

inline json to_json(const Lattice& l) {
  json j;
  j["elements"] = l.names();
  json covers = json::array();
  for (auto [a, b] : l.poset.covers()) covers.push_back({l.name(a), l.name(b)});
  j["covers"] = covers;
  return j;
}

inline json names_of_mask(Mask m, const std::vector<std::string>& names) {
  json out = json::array();
  for_each_bit(m, [&](int i) { out.push_back(names[static_cast<std::size_t>(i)]); });
  return out;
}

inline json to_json(const Space& x) {
  json j;
  j["points"] = x.points;
  json basis = json::array();
  for (Mask u : x.opens) basis.push_back(names_of_mask(u, x.points));
  j["open_basis"] = basis;
  return j;
}

inline json to_json(const TensorSystem& ts) {
  json j;
  j["elements"] = ts.elements;
  j["zero"] = ts.name(ts.zero);
  j["unit"] = ts.name(ts.unit);
  auto table = [&](const std::vector<std::vector<int>>& t) {
    json rows = json::array();
    for (const auto& row : t) {
      json r = json::array();
      for (int c : row) r.push_back(ts.name(c));
      rows.push_back(r);
    }
    return rows;
  };
  j["tensor"] = table(ts.tensor);
  json rules = json::array();
  for (const Rule& r : ts.rules)
    rules.push_back({{"if", names_of_mask(r.premises, ts.elements)}, {"then", ts.name(r.conclusion)}});
  j["rules"] = rules;
  if (ts.additive()) j["sum"] = table(*ts.sum);
  return j;
}

inline json to_json(const GroupAction& a) {
  json j;
  json group;
  group["elements"] = a.group.elements;
  json table = json::array();
  for (int g = 0; g < a.group.size(); ++g) {
    json row = json::array();
    for (int h = 0; h < a.group.size(); ++h)
      row.push_back(a.group.elements[static_cast<std::size_t>(a.group.times(g, h))]);
    table.push_back(row);
  }
  group["table"] = table;
  j["group"] = group;
  json act;
  for (int g = 0; g < a.group.size(); ++g) {
    json row = json::array();
    for (int x = 0; x < a.system.size(); ++x)
      row.push_back(a.system.name(a.apply(g, x)));
    act[a.group.elements[static_cast<std::size_t>(g)]] = row;
  }
  j["act"] = act;
  return j;
}

}  // namespace stoneworks
