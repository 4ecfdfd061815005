#include "heegaard/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "heegaard/errors.hpp"

namespace heegaard {
namespace {

constexpr const char* kLayout = "a-then-b";

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw InputError(what + " is out of range");
  }
  return static_cast<int>(v);
}

std::vector<int> as_int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(as_int(x, what + " entry"));
  return out;
}

std::vector<std::vector<int>> as_int_rows(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) out.push_back(as_int_list(row, what + " row"));
  return out;
}

int read_genus(const Json& j) {
  const int g = as_int(field(j, "genus"), "genus");
  if (g < 2 || g > kMaxGenus) {
    throw InputError("genus must be in [2, " + std::to_string(kMaxGenus) + "], got " + std::to_string(g));
  }
  return g;
}

DiskSystem read_system(const Json& j, const char* key, int genus) {
  DiskSystem s{genus, {}};
  const auto rows = as_int_rows(field(j, key), key);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].size() != 2 * static_cast<std::size_t>(genus)) {
      std::ostringstream msg;
      msg << key << " curve " << k + 1 << " has " << rows[k].size() << " bits, expected " << 2 * genus;
      throw InputError(msg.str());
    }
    s.curves.push_back(Gf2Vector::from_bits(rows[k]));
  }
  return s;
}

Json system_to_json(const DiskSystem& s) {
  Json rows = Json::array();
  for (const auto& c : s.curves) rows.push_back(c.to_bits());
  return rows;
}

bool holds_object(const Json& j) {
  if (j.is_object()) return true;
  if (j.is_array()) return std::any_of(j.begin(), j.end(), holds_object);
  return false;
}

// Objects whose members are all scalars or flat arrays stay on one line.
bool is_flat_object(const Json& j) {
  return j.is_object() && std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_object() || (v.is_array() && holds_object(v)); });
}

void emit(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object() && !j.empty() && (indent == 0 || !is_flat_object(j))) {
    out += "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += pad + Json(it.key()).dump() + ": ";
      emit(it.value(), indent + 2, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close_pad + "}";
  } else if (j.is_array() && holds_object(j)) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      emit(j[k], indent + 2, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close_pad + "]";
  } else {
    out += j.dump();
  }
}

const char* color_name(EdgeColor c) { return c == EdgeColor::Red ? "red" : "blue"; }

Json id_list(const Coloring& c, EdgeColor which) {
  Json ids = Json::array();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == which) ids.push_back(e + 1);
  }
  return ids;
}

}  // namespace

Json diagram_to_json(const HeegaardDiagram& d) {
  Json j;
  j["genus"] = d.genus();
  j["layout"] = kLayout;
  j["d_curves"] = system_to_json(d.d_system());
  j["e_curves"] = system_to_json(d.e_system());
  return j;
}

Json matrix_only_to_json(const MatrixOnlyDiagram& m) {
  Json j;
  j["genus"] = m.genus;
  j["parity_matrix"] = matrix_to_json(m.parity);
  return j;
}

Json document_to_json(const DiagramDocument& doc) {
  return std::visit(
      [](const auto& x) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, HeegaardDiagram>) {
          return diagram_to_json(x);
        } else {
          return matrix_only_to_json(x);
        }
      },
      doc);
}

DiagramDocument diagram_document_from_json(const Json& j) {
  const int g = read_genus(j);
  if (j.contains("parity_matrix")) {
    if (j.contains("d_curves") || j.contains("e_curves")) {
      throw InputError("a diagram gives either curves or a parity matrix, not both");
    }
    auto m = Gf2Matrix::from_rows(as_int_rows(j["parity_matrix"], "parity_matrix"));
    if (m.rows() != static_cast<std::size_t>(g) || m.cols() != static_cast<std::size_t>(g)) {
      throw InputError("parity_matrix must be " + std::to_string(g) + "x" + std::to_string(g));
    }
    return MatrixOnlyDiagram{g, std::move(m)};
  }
  if (j.contains("layout")) {
    const auto& layout = j["layout"];
    if (!layout.is_string() || layout.get<std::string>() != kLayout) {
      throw InputError(std::string("unsupported layout; only \"") + kLayout + "\" is defined");
    }
  }
  return HeegaardDiagram(read_system(j, "d_curves", g), read_system(j, "e_curves", g));
}

HeegaardDiagram diagram_from_json(const Json& j) {
  auto doc = diagram_document_from_json(j);
  if (std::holds_alternative<MatrixOnlyDiagram>(doc)) {
    throw InputError("this operation needs curve classes; a parity matrix alone is not enough");
  }
  return std::get<HeegaardDiagram>(std::move(doc));
}

Json matrix_to_json(const Gf2Matrix& m) { return m.to_rows(); }

std::string certificate_message(const ParityCertificate& cert) {
  if (cert.certified()) return "unstabilized: certified by even parity condition";
  std::ostringstream out;
  out << "odd pair: |D_" << cert.witness->first + 1 << " cap E_" << cert.witness->second + 1
      << "| is odd; the even parity condition does not apply";
  return out.str();
}

Json certificate_to_json(const ParityCertificate& cert, const Gf2Matrix& matrix) {
  Json j;
  j["verdict"] = cert.certified() ? "EvenParityCertified" : "OddPairFound";
  j["witness"] = cert.witness ? Json{cert.witness->first + 1, cert.witness->second + 1} : Json(nullptr);
  j["message"] = certificate_message(cert);
  j["genus"] = matrix.rows();
  j["parity_matrix"] = matrix_to_json(matrix);
  return j;
}

Json sequence_to_json(const TwistSequence& s, bool include_trajectory) {
  Json steps = Json::array();
  for (const auto& step : s.steps) {
    Json js;
    js["stage"] = step.stage;
    js["pivot"] = {step.pivot.first + 1, step.pivot.second + 1};
    js["gamma"] = step.gamma.to_bits();
    steps.push_back(std::move(js));
  }
  Json j;
  j["steps"] = std::move(steps);
  j["initial_matrix"] = matrix_to_json(s.initial_matrix);
  j["final_matrix"] = matrix_to_json(s.final_matrix);
  if (include_trajectory) {
    Json traj = Json::array();
    for (const auto& m : s.trajectory) traj.push_back(matrix_to_json(m));
    j["trajectory"] = std::move(traj);
  }
  return j;
}

TwistSequence sequence_from_json(const Json& j) {
  TwistSequence s;
  const auto& steps = field(j, "steps");
  if (!steps.is_array()) throw InputError("steps must be an array");
  for (const auto& js : steps) {
    TwistStep step;
    step.stage = as_int(field(js, "stage"), "stage");
    const auto pivot = as_int_list(field(js, "pivot"), "pivot");
    if (pivot.size() != 2 || pivot[0] < 1 || pivot[1] < 1) {
      throw InputError("pivot must be a pair of 1-based indices");
    }
    step.pivot = {pivot[0] - 1, pivot[1] - 1};
    step.gamma = Gf2Vector::from_bits(as_int_list(field(js, "gamma"), "gamma"));
    s.steps.push_back(std::move(step));
  }
  s.initial_matrix = Gf2Matrix::from_rows(as_int_rows(field(j, "initial_matrix"), "initial_matrix"));
  s.final_matrix = Gf2Matrix::from_rows(as_int_rows(field(j, "final_matrix"), "final_matrix"));
  if (j.contains("trajectory")) {
    for (const auto& m : j["trajectory"]) s.trajectory.push_back(Gf2Matrix::from_rows(as_int_rows(m, "trajectory")));
  }
  return s;
}

Json pants_to_json(const PantsDocument& doc) {
  Json edges = Json::array();
  for (std::size_t e = 0; e < doc.graph.edges.size(); ++e) {
    Json je;
    je["id"] = e + 1;
    je["ends"] = {doc.graph.edges[e].u + 1, doc.graph.edges[e].v + 1};
    edges.push_back(std::move(je));
  }
  Json j;
  j["genus"] = doc.graph.genus;
  j["edges"] = std::move(edges);
  j["red"] = id_list(doc.coloring, EdgeColor::Red);
  if (doc.red_parities) {
    Json parities = Json::array();
    for (std::size_t e = 0; e < doc.red_parities->size(); ++e) {
      if (const auto& p = (*doc.red_parities)[e]) parities.push_back({{"id", e + 1}, {"parity", *p}});
    }
    j["red_parities"] = std::move(parities);
  }
  return j;
}

PantsDocument pants_from_json(const Json& j) {
  PantsDocument doc;
  doc.graph.genus = as_int(field(j, "genus"), "genus");
  if (doc.graph.genus < 2 || doc.graph.genus > kMaxGenus) {
    throw InputError("genus must be in [2, " + std::to_string(kMaxGenus) + "]");
  }
  const auto& edges = field(j, "edges");
  if (!edges.is_array()) throw InputError("edges must be an array");
  const std::size_t count = edges.size();
  std::vector<std::optional<PantsEdge>> slots(count);
  for (const auto& je : edges) {
    const int id = as_int(field(je, "id"), "edge id");
    if (id < 1 || static_cast<std::size_t>(id) > count) {
      throw InputError("edge ids must be 1.." + std::to_string(count) + ", got " + std::to_string(id));
    }
    if (slots[id - 1]) throw InputError("duplicate edge id " + std::to_string(id));
    const auto ends = as_int_list(field(je, "ends"), "edge ends");
    if (ends.size() != 2) throw InputError("edge " + std::to_string(id) + " needs exactly two ends");
    slots[id - 1] = PantsEdge{ends[0] - 1, ends[1] - 1};
  }
  for (auto& s : slots) doc.graph.edges.push_back(*s);

  doc.coloring.assign(count, EdgeColor::Blue);
  std::set<int> seen;
  for (int id : as_int_list(field(j, "red"), "red")) {
    if (id < 1 || static_cast<std::size_t>(id) > count) throw InputError("red id " + std::to_string(id) + " is not an edge");
    if (!seen.insert(id).second) throw InputError("red id " + std::to_string(id) + " listed twice");
    doc.coloring[id - 1] = EdgeColor::Red;
  }

  if (j.contains("red_parities")) {
    const auto& list = j["red_parities"];
    if (!list.is_array()) throw InputError("red_parities must be an array");
    PartialParityAssignment parities(count);
    for (const auto& jp : list) {
      const int id = as_int(field(jp, "id"), "parity id");
      if (id < 1 || static_cast<std::size_t>(id) > count) throw InputError("parity id " + std::to_string(id) + " is not an edge");
      if (parities[id - 1]) throw InputError("parity for edge " + std::to_string(id) + " given twice");
      const int bit = as_int(field(jp, "parity"), "parity");
      if (bit != 0 && bit != 1) throw InputError("parity must be 0 or 1");
      parities[id - 1] = bit;
    }
    doc.red_parities = std::move(parities);
  }
  return doc;
}

Json propagation_to_json(const PantsGraph& p, const Coloring& initial, const PropagationResult& r) {
  Json violations = Json::array();
  for (const auto& v : validate_pants_graph(p, initial)) violations.push_back(to_string(v.kind) + ": " + v.detail);
  Json trace = Json::array();
  for (const auto& f : r.trace) {
    trace.push_back({{"stage", f.stage}, {"edge", f.edge + 1}, {"vertex", f.vertex + 1}});
  }
  Json j;
  j["genus"] = p.genus;
  j["all_red"] = r.all_red();
  j["initial_coloring_valid"] = violations.empty();
  j["violations"] = std::move(violations);
  j["firings"] = r.trace.size();
  j["trace"] = std::move(trace);
  j["coloring"] = {{"red", id_list(r.coloring, EdgeColor::Red)}, {"blue", id_list(r.coloring, EdgeColor::Blue)}};
  return j;
}

Json completion_to_json(const PantsGraph& p, const Coloring& c, const ParityAssignment& parities) {
  Json list = Json::array();
  for (std::size_t e = 0; e < parities.size(); ++e) {
    list.push_back({{"id", e + 1}, {"color", color_name(c[e])}, {"parity", parities[e]}});
  }
  Json j;
  j["genus"] = p.genus;
  j["parities"] = std::move(list);
  return j;
}

std::string pants_to_dot(const PantsGraph& p, const Coloring& initial, const PropagationResult& r) {
  std::vector<int> stage(p.edges.size(), 0);
  for (const auto& f : r.trace) stage[f.edge] = f.stage;

  std::ostringstream out;
  out << "graph pants {\n  node [shape=circle];\n";
  for (int v = 0; v < p.vertex_count(); ++v) out << "  P" << v + 1 << ";\n";
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    const bool red = initial[e] == EdgeColor::Red;
    out << "  P" << p.edges[e].u + 1 << " -- P" << p.edges[e].v + 1 << " [label=\"" << e + 1;
    if (stage[e]) out << " (stage " << stage[e] << ")";
    out << "\", style=" << (red ? "solid" : "dashed") << ", color=" << (red ? "red" : "blue") << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json report_to_json(const OracleReport& report) {
  Json counters = Json::array();
  for (const auto& c : report.counters) {
    counters.push_back({{"name", c.name}, {"runs", c.runs}, {"failures", c.failures}});
  }
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"check", f.check}, {"counterexample", Json::parse(f.counterexample)}});
  }
  Json j;
  j["passed"] = report.passed();
  j["checks_run"] = report.checks_run();
  j["counters"] = std::move(counters);
  j["failures"] = std::move(failures);
  return j;
}

std::string format_json(const Json& j) {
  std::string out;
  emit(j, 0, out);
  out += "\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << contents;
}

}  // namespace heegaard
