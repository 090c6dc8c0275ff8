#include "rap/io.hpp"

#include "rap/error.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rap {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorKind::ParseError, msg); }

const Json& field(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key))
        bad(std::string("missing field '") + key + "'");
    return doc.at(key);
}

template <class T>
T get(const Json& j, const char* what)
{
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        bad(std::string("field '") + what + "' has the wrong type");
    }
}

} // namespace

Json polyhedron_to_json(const Polyhedron& p, const std::string& name)
{
    Json doc;
    doc["format"] = kPolyhedronFormat;
    if (!name.empty())
        doc["name"] = name;
    Json faces = Json::array();
    for (const auto& f : p.faces()) {
        std::vector<VertexId> cycle = f;
        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
        faces.push_back(cycle);
    }
    doc["faces"] = std::move(faces);
    return doc;
}

Polyhedron polyhedron_from_json(const Json& doc)
{
    if (get<std::string>(field(doc, "format"), "format") != kPolyhedronFormat)
        bad(std::string("expected format ") + kPolyhedronFormat);
    const Json& faces = field(doc, "faces");
    if (!faces.is_array())
        bad("'faces' must be an array");
    FaceList list;
    for (const auto& f : faces) {
        if (!f.is_array())
            bad("each face must be an array of vertex ids");
        std::vector<VertexId> cycle;
        for (const auto& v : f) {
            if (!v.is_number_integer())
                bad("vertex ids must be integers");
            cycle.push_back(v.get<VertexId>());
        }
        list.push_back(std::move(cycle));
    }
    return Polyhedron::build(std::move(list));
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        bad("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        bad("cannot write '" + path + "'");
    out << text;
}

Polyhedron read_polyhedron(const std::string& path)
{
    Json doc;
    try {
        doc = Json::parse(read_text(path));
    } catch (const nlohmann::json::parse_error& e) {
        bad(path + ": " + e.what());
    }
    return polyhedron_from_json(doc);
}

void write_polyhedron(const std::string& path, const Polyhedron& p, const std::string& name)
{
    write_text(path, polyhedron_to_json(p, name).dump(2) + "\n");
}

std::string circuit_id(const PrismaticCircuit& c)
{
    std::string out;
    for (EdgeId e : c.key()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(e);
    }
    return out;
}

PrismaticCircuit parse_circuit_id(const Polyhedron& p, const std::string& id)
{
    std::vector<EdgeId> edges;
    std::istringstream in(id);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            edges.push_back(std::stoi(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            bad("bad circuit id '" + id + "'");
        }
    }
    for (EdgeId e : edges)
        if (!p.valid_edge(e))
            fail(ErrorKind::NoSuchEdge, "no edge " + std::to_string(e));
    return circuit_from_edges(p, std::move(edges));
}

Json circuit_to_json(const Polyhedron& p, const PrismaticCircuit& c)
{
    Json j;
    j["id"] = circuit_id(c);
    j["faces"] = c.faces;
    j["edge_ids"] = c.crossed_edges;
    Json pairs = Json::array();
    for (EdgeId e : c.crossed_edges)
        pairs.push_back({p.edge(e).u, p.edge(e).v});
    j["crossed_edges"] = std::move(pairs);
    return j;
}

Json trace_to_json(const ReductionTrace& t)
{
    Json doc;
    doc["format"] = kTraceFormat;
    doc["policy"] = to_string(t.policy);
    doc["input"] = t.input;
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json j;
        j["component"] = s.component;
        j["move"] = to_string(s.move);
        if (s.move == MoveKind::Surgery) {
            j["edge"] = s.edge;
        } else {
            j["circuit"] = {{"edge_ids", s.circuit_edges}, {"faces", s.circuit_faces}};
        }
        j["children"] = s.children;
        j["input_hash"] = s.input_hash;
        j["output_hashes"] = s.output_hashes;
        j["chain"] = s.strict ? "strict" : "non-strict";
        steps.push_back(std::move(j));
    }
    doc["steps"] = std::move(steps);
    doc["terminal"] = t.terminal;
    doc["bound"] = std::stod(format_real(t.bound.value));
    doc["bound_error"] = std::stod(format_real(t.bound.error_bound));
    doc["complete"] = t.complete;
    return doc;
}

ReductionTrace trace_from_json(const Json& doc)
{
    if (get<std::string>(field(doc, "format"), "format") != kTraceFormat)
        bad(std::string("expected format ") + kTraceFormat);
    ReductionTrace t;
    t.policy = parse_policy(get<std::string>(field(doc, "policy"), "policy"));
    t.input = get<FaceList>(field(doc, "input"), "input");
    for (const auto& j : field(doc, "steps")) {
        TraceStep s;
        s.component = get<int>(field(j, "component"), "component");
        const auto move = get<std::string>(field(j, "move"), "move");
        if (move == "surgery") {
            s.move = MoveKind::Surgery;
            s.edge = get<EdgeId>(field(j, "edge"), "edge");
            s.strict = true;
        } else if (move == "decompose") {
            s.move = MoveKind::Decompose;
            const Json& c = field(j, "circuit");
            s.circuit_edges = get<std::vector<EdgeId>>(field(c, "edge_ids"), "edge_ids");
            s.circuit_faces = get<std::vector<FaceId>>(field(c, "faces"), "faces");
        } else {
            bad("unknown move '" + move + "'");
        }
        s.children = get<std::vector<int>>(field(j, "children"), "children");
        s.input_hash = get<std::string>(field(j, "input_hash"), "input_hash");
        s.output_hashes = get<std::vector<std::string>>(field(j, "output_hashes"), "output_hashes");
        t.steps.push_back(std::move(s));
    }
    t.terminal = get<std::vector<int>>(field(doc, "terminal"), "terminal");
    t.bound.value = get<double>(field(doc, "bound"), "bound");
    t.bound.error_bound = get<double>(field(doc, "bound_error"), "bound_error");
    t.complete = get<bool>(field(doc, "complete"), "complete");
    return t;
}

std::string format_real(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace rap
