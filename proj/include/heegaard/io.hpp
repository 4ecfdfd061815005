#pragma once

// JSON file formats. Curve and edge indices are 1-based in every document.
//
// Diagram:   {"genus": g, "layout": "a-then-b", "d_curves": [[2g bits]...], "e_curves": [[2g bits]...]}
// Matrix:    {"genus": g, "parity_matrix": [[g bits]...]}
// Sequence:  {"steps": [{"stage": k, "pivot": [i, j], "gamma": [bits]}...],
//             "initial_matrix": [[...]], "final_matrix": [[...]]}
// Graph:     {"genus": g, "edges": [{"id": n, "ends": [v, w]}...], "red": [ids],
//             "red_parities": [{"id": n, "parity": b}...]}   (red_parities optional)

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "heegaard/diagram.hpp"
#include "heegaard/oracle.hpp"
#include "heegaard/pants.hpp"
#include "heegaard/twist.hpp"

namespace heegaard {

using Json = nlohmann::ordered_json;

/// Diagram given only through its parity matrix; supports matrix-level operations.
struct MatrixOnlyDiagram {
  int genus = 0;
  Gf2Matrix parity;
};

using DiagramDocument = std::variant<HeegaardDiagram, MatrixOnlyDiagram>;

Json diagram_to_json(const HeegaardDiagram& d);
Json matrix_only_to_json(const MatrixOnlyDiagram& m);
Json document_to_json(const DiagramDocument& doc);
/// Throws InputError on schema violations or invalid disk systems.
DiagramDocument diagram_document_from_json(const Json& j);
/// Like diagram_document_from_json but rejects the matrix-only form.
HeegaardDiagram diagram_from_json(const Json& j);

Json matrix_to_json(const Gf2Matrix& m);
Json certificate_to_json(const ParityCertificate& cert, const Gf2Matrix& matrix);
std::string certificate_message(const ParityCertificate& cert);

Json sequence_to_json(const TwistSequence& s, bool include_trajectory = false);
TwistSequence sequence_from_json(const Json& j);

struct PantsDocument {
  PantsGraph graph;
  Coloring coloring;
  std::optional<PartialParityAssignment> red_parities;
};

Json pants_to_json(const PantsDocument& doc);
/// Throws InputError on schema violations. Structural validity of the graph is
/// checked later by the pants operations.
PantsDocument pants_from_json(const Json& j);

Json propagation_to_json(const PantsGraph& p, const Coloring& initial, const PropagationResult& r);
Json completion_to_json(const PantsGraph& p, const Coloring& c, const ParityAssignment& parities);
/// Red edges solid, blue dashed; recolored edges labeled with their firing stage.
std::string pants_to_dot(const PantsGraph& p, const Coloring& initial, const PropagationResult& r);

Json report_to_json(const OracleReport& report);

/// Objects are indented; arrays holding no objects are printed on one line.
/// Output ends with a newline.
std::string format_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace heegaard
