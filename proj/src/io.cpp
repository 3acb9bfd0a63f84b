#include "specht/io.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "specht/errors.hpp"

namespace specht::io {

namespace {

/// Line and column (1-based) of a byte offset.
std::pair<int, int> locate(const std::string& text, std::size_t offset) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, col);
  }
}

bool looks_like_json(const std::string& text) {
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) return ch == '{';
  return false;
}

Cell cell_of(const Json& j) {
  if (!j.is_array() || j.size() < 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("expected a cell [row, col]", 1, 1);
  return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<Cell> cells_of(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field) || !j[field].is_array())
    throw ParseError(std::string("expected an object with a \"") + field + "\" array", 1, 1);
  std::vector<Cell> out;
  for (const Json& c : j[field]) out.push_back(cell_of(c));
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Diagram parse_diagram_any(const std::string& text) {
  if (!looks_like_json(text)) return parse_diagram(text);
  return Diagram(cells_of(parse_json(text), "cells"));
}

BoxSet parse_boxset(const std::string& text) { return sorted_boxes(cells_of(parse_json(text), "boxes")); }

GarnirDatum parse_datum(const std::string& text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("columns") || !j.contains("sets")) throw ParseError("expected columns and sets", 1, 1);
  GarnirDatum g;
  for (const Json& c : j["columns"]) {
    if (!c.is_number_integer()) throw ParseError("column indices must be integers", 1, 1);
    g.columns.push_back(c.get<int>());
  }
  for (const Json& s : j["sets"]) {
    BoxSet b;
    for (const Json& c : s) b.push_back(cell_of(c));
    g.sets.push_back(sorted_boxes(b));
  }
  return g;
}

namespace {

std::vector<std::pair<Cell, int>> parse_entries(const std::string& text) {
  std::vector<std::pair<Cell, int>> out;
  if (looks_like_json(text)) {
    const Json j = parse_json(text);
    if (!j.is_object() || !j.contains("entries")) throw ParseError("expected an \"entries\" array", 1, 1);
    for (const Json& e : j["entries"]) {
      if (!e.is_array() || e.size() != 3) throw ParseError("entries are [row, col, label]", 1, 1);
      out.push_back({{e[0].get<int>(), e[1].get<int>()}, e[2].get<int>()});
    }
    return out;
  }
  std::string rows = text;
  for (char& ch : rows)
    if (ch == '/') ch = '\n';
  std::istringstream in(rows);
  std::string line;
  int r = 0;
  while (std::getline(in, line)) {
    ++r;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const bool tokens = line.find_first_of(" \t") != std::string::npos;
    int c = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      const char ch = line[i];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      ++c;
      const int at = static_cast<int>(i) + 1;
      if (ch == '.') {
        ++i;
        continue;
      }
      std::string digits;
      if (ch == '{') {
        const std::size_t close = line.find('}', i);
        if (close == std::string::npos) throw ParseError("unclosed '{'", r, at);
        digits = line.substr(i + 1, close - i - 1);
        i = close + 1;
      } else if (tokens) {
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) digits += line[i++];
      } else {
        digits = std::string(1, ch);
        ++i;
      }
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("illegal label '" + digits + "'", r, at);
      out.push_back({{r, c}, std::stoi(digits)});
    }
  }
  return out;
}

}  // namespace

Tableau parse_tableau(const Diagram& shape, const std::string& text) {
  const auto entries = parse_entries(text);
  std::vector<Cell> cells;
  for (const auto& [c, l] : entries) cells.push_back(c);
  if (!(Diagram(cells) == shape)) throw DomainError("tableau cells do not match the diagram");
  return Tableau::from_cells(shape, entries);
}

Tableau parse_tableau(const std::string& text) {
  const auto entries = parse_entries(text);
  std::vector<Cell> cells;
  for (const auto& [c, l] : entries) cells.push_back(c);
  return Tableau::from_cells(Diagram(cells), entries);
}

Json to_json(const Cell& c) { return Json::array({c.row, c.col}); }

Json to_json(const Diagram& d) {
  Json cells = Json::array();
  for (const Cell& c : d.cells()) cells.push_back(to_json(c));
  return Json{{"cells", cells}};
}

Json boxes_json(const BoxSet& b) {
  Json out = Json::array();
  for (const Cell& c : b) out.push_back(to_json(c));
  return out;
}

Json to_json(const GarnirDatum& g) {
  Json sets = Json::array();
  for (const BoxSet& s : g.sets) sets.push_back(boxes_json(s));
  return Json{{"columns", g.columns}, {"sets", sets}};
}

Json to_json(const MultiplicityVector& m) {
  Json out = Json::object();
  // Largest partitions first, as in dominance-style listings.
  for (auto it = m.rbegin(); it != m.rend(); ++it) out[to_string(it->first)] = it->second;
  return out;
}

Json to_json(const AlgebraElement& e) {
  Json out = Json::array();
  for (const auto& [p, c] : e.terms()) out.push_back({{"perm", p.images()}, {"coeff", to_string(c)}});
  return out;
}

Json to_json(const Tableau& t) {
  Json entries = Json::array();
  for (std::size_t k = 0; k < t.shape().size(); ++k) {
    const Cell& c = t.shape().cells()[k];
    entries.push_back({c.row, c.col, t.labels()[k]});
  }
  return Json{{"text", to_string(t)}, {"entries", entries}};
}

Json to_json(const TransversalResult& r) {
  Json out{{"accepted", r.accepted}};
  if (r.accepted)
    out["order"] = boxes_json(r.order);
  else
    out["reason"] = r.reason;
  return out;
}

Json to_json(const CertificateNode& root) {
  std::map<const CertificateNode*, int> ids;
  std::function<Json(const CertificateNode&)> emit = [&](const CertificateNode& node) {
    auto it = ids.find(&node);
    if (it != ids.end()) return Json{{"ref", it->second}};
    const int id = static_cast<int>(ids.size());
    ids.emplace(&node, id);
    Json children = Json::object();
    for (const auto& [b, child] : node.children)
      children["(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")"] = emit(*child);
    return Json{{"id", id},
                {"diagram", to_json(node.diagram)},
                {"branching_set", boxes_json(node.branching_set)},
                {"children", children}};
  };
  return emit(root);
}

Json to_json(const Refutation& r) {
  Json failures = Json::array();
  for (const CandidateFailure& f : r.failures)
    failures.push_back({{"candidate", boxes_json(f.candidate)}, {"failing_box", to_json(f.failing_box)}});
  Json candidates = Json::array();
  for (const BoxSet& b : r.candidates) candidates.push_back(boxes_json(b));
  Json out{{"diagram", to_json(r.diagram)},
           {"exact_hitting_sets", r.exact_hitting_sets},
           {"candidates", candidates},
           {"failures", failures}};
  if (r.child) out["child"] = to_json(*r.child);
  return out;
}

Json to_json(const Verdict& v) {
  Json out{{"answer", to_string(v.answer)}};
  if (v.certificate) out["certificate"] = to_json(*v.certificate);
  if (v.refutation) out["refuted"] = to_json(*v.refutation);
  return out;
}

Json to_json(const FiltrationReport& r) {
  Json out{{"order", boxes_json(r.order)},
           {"subspace_dims", r.subspace_dims},
           {"quotient_dims", r.quotient_dims},
           {"child_dims", r.child_dims},
           {"module_dim", r.module_dim},
           {"spans", r.spans},
           {"quotient_equal", r.quotient_equal},
           {"all_hold", r.all_hold},
           {"certified_by", r.certified_by}};
  if (r.first_failure) out["first_failure"] = *r.first_failure;
  return out;
}

namespace {

Json terms_json(const std::vector<TraceTerm>& terms) {
  Json out = Json::array();
  for (const TraceTerm& t : terms) {
    Json x{{"coeff", to_string(t.coef)}, {"tableau", to_string(t.tableau)}};
    if (t.stab) x["datum"] = to_json(*t.stab);
    out.push_back(std::move(x));
  }
  return out;
}

Json step_json(const TraceStep& s) {
  Json out{{"kind", to_string(s.kind)}};
  if (s.placement > 0) out["placement"] = s.placement;
  out["lhs"] = terms_json(s.lhs);
  out["rhs"] = terms_json(s.rhs);
  out["garnir"] = terms_json(s.garnir);
  if (!s.details.empty()) {
    Json d = Json::array();
    for (const TraceStep& x : s.details) d.push_back(step_json(x));
    out["details"] = d;
  }
  if (s.child) out["child"] = to_json(*s.child);
  return out;
}

}  // namespace

Json to_json(const StraighteningTrace& t) {
  Json steps = Json::array();
  for (const TraceStep& s : t.steps) steps.push_back(step_json(s));
  Json coords = Json::array();
  for (const auto& [tab, c] : t.coordinates) coords.push_back({{"tableau", to_string(tab)}, {"coeff", to_string(c)}});
  return Json{{"diagram", to_json(t.diagram)},
              {"choice", t.choice},
              {"method", t.method},
              {"branching", boxes_json(t.branching)},
              {"input", terms_json(t.input)},
              {"coordinates", coords},
              {"steps", steps}};
}

Json to_json(const TraceCheck& c) {
  Json out{{"ok", c.ok}};
  if (!c.ok) {
    out["failing_step"] = c.failing_step;
    out["reason"] = c.reason;
  }
  return out;
}

}  // namespace specht::io
