#pragma once

#include "rap/circuits.hpp"
#include "rap/polyhedron.hpp"
#include "rap/reduction.hpp"

#include <json.hpp>

#include <string>

namespace rap {

using Json = nlohmann::ordered_json;

inline constexpr const char* kPolyhedronFormat = "rap-polyhedron/1";
inline constexpr const char* kTraceFormat = "rap-trace/1";

/// Faces sorted by id, each cycle rotated to start at its smallest vertex.
Json polyhedron_to_json(const Polyhedron& p, const std::string& name = "");
/// Throws ParseError on a bad document, or the build error of the faces.
Polyhedron polyhedron_from_json(const Json& doc);

Polyhedron read_polyhedron(const std::string& path);
void write_polyhedron(const std::string& path, const Polyhedron& p, const std::string& name = "");

/// {"faces": [...], "crossed_edges": [[u,v],...], "edge_ids": [...], "id": "3,8,..."}
Json circuit_to_json(const Polyhedron& p, const PrismaticCircuit& c);
/// Comma-separated sorted crossed-edge ids, the CLI's circuit ID.
std::string circuit_id(const PrismaticCircuit& c);
/// Throws ParseError, InvalidCircuit.
PrismaticCircuit parse_circuit_id(const Polyhedron& p, const std::string& id);

Json trace_to_json(const ReductionTrace& t);
/// Throws ParseError.
ReductionTrace trace_from_json(const Json& doc);

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

/// 12 significant digits, the output precision everywhere.
std::string format_real(double x);

} // namespace rap
