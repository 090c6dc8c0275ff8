// rap: command-line front end for the right-angled polyhedra library.

#include "rap/canonical.hpp"
#include "rap/circuits.hpp"
#include "rap/construct.hpp"
#include "rap/covers.hpp"
#include "rap/error.hpp"
#include "rap/io.hpp"
#include "rap/lobell.hpp"
#include "rap/polar.hpp"
#include "rap/reduction.hpp"
#include "rap/volumes.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace rap;

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kInternal = 3 };

struct Globals {
    bool json = false;
    bool quiet = false;
};

// Collects the human report and the JSON document of one command.
struct Report {
    const Globals& g;
    std::ostringstream text;
    Json doc = Json::object();

    void emit() const
    {
        if (g.quiet)
            return;
        if (g.json)
            std::cout << doc.dump(2) << '\n';
        else
            std::cout << text.str();
    }
};

// Every real leaves the program rounded to 12 significant digits.
double real(double x) { return std::stod(format_real(x)); }

Json histogram_json(const std::map<int, int>& h)
{
    Json j = Json::object();
    for (auto [size, count] : h)
        j[std::to_string(size)] = count;
    return j;
}

std::string histogram_text(const std::map<int, int>& h)
{
    std::string out = "{";
    for (auto [size, count] : h) {
        if (out.size() > 1)
            out += ", ";
        out += std::to_string(size) + ":" + std::to_string(count);
    }
    return out + "}";
}

Json verdict_json(const Polyhedron& p, const AdmissibilityVerdict& v)
{
    Json j;
    j["admissible"] = v.admissible;
    switch (v.failure) {
    case AdmissibilityFailure::None:
        break;
    case AdmissibilityFailure::NotTrivalent:
        j["failure"] = "not-trivalent";
        j["vertex"] = *v.vertex;
        break;
    case AdmissibilityFailure::PrismaticCircuit:
        j["failure"] = "prismatic-circuit";
        j["circuit"] = circuit_to_json(p, *v.circuit);
        break;
    case AdmissibilityFailure::ExcludedType:
        j["failure"] = "excluded-type";
        j["type"] = v.excluded_type;
        break;
    }
    if (!v.admissible)
        j["witness"] = v.describe(p);
    return j;
}

// Writes p to `out` when given, otherwise embeds it in the report.
void deliver(Report& r, const std::string& out, const Polyhedron& p, const std::string& key,
             const std::string& name = "")
{
    if (!out.empty()) {
        write_polyhedron(out, p, name);
        r.text << "wrote " << out << '\n';
        r.doc[key + "_file"] = out;
    } else {
        r.text << polyhedron_to_json(p, name).dump() << '\n';
    }
    r.doc[key] = polyhedron_to_json(p, name);
}

void counts_line(Report& r, const Polyhedron& p)
{
    const Counts c = counts(p);
    r.text << "(v,e,f) = (" << c.vertices << ',' << c.edges << ',' << c.faces << ")  faces "
           << histogram_text(c.face_sizes) << '\n';
}

int cmd_validate(Report& r, const std::string& file)
{
    const Polyhedron p = read_polyhedron(file);
    const auto v = admissible(p);
    r.doc = verdict_json(p, v);
    r.text << (v.admissible ? "admissible" : "not admissible: " + v.describe(p)) << '\n';
    return v.admissible ? kOk : kNegative;
}

int cmd_info(Report& r, const std::string& file)
{
    const Polyhedron p = read_polyhedron(file);
    const Counts c = counts(p);
    r.doc["vertices"] = c.vertices;
    r.doc["edges"] = c.edges;
    r.doc["faces"] = c.faces;
    r.doc["face_sizes"] = histogram_json(c.face_sizes);
    counts_line(r, p);
    r.doc["trivalent"] = p.is_trivalent();
    if (p.is_trivalent()) {
        const auto pe = pentagon_excess(p);
        r.doc["pentagons"] = pe.pentagons;
        r.doc["excess"] = pe.excess;
        r.text << "pentagons " << pe.pentagons << "  excess " << pe.excess << '\n';
    } else {
        r.text << "not trivalent\n";
    }
    const auto v = admissible(p);
    r.doc["admissible"] = v.admissible;
    r.text << (v.admissible ? "admissible" : "not admissible: " + v.describe(p)) << '\n';
    const auto n = recognize_lobell(p);
    r.doc["lobell"] = n ? Json(*n) : Json(nullptr);
    if (n)
        r.text << "isomorphic to L(" << *n << ")\n";
    r.doc["canonical_digest"] = canonical_form(p).digest();
    r.text << "canonical digest " << r.doc["canonical_digest"].get<std::string>() << '\n';
    return kOk;
}

int cmd_circuits(Report& r, const std::string& file, int k)
{
    const Polyhedron p = read_polyhedron(file);
    if (k < 3 || k > p.num_faces())
        throw CLI::ValidationError("--k", "k must lie in [3, " + std::to_string(p.num_faces()) + "]");
    const auto list = prismatic_circuits(p, k);
    r.doc["k"] = k;
    r.doc["circuits"] = Json::array();
    r.text << list.size() << " prismatic " << k << "-circuit" << (list.size() == 1 ? "" : "s") << '\n';
    for (const auto& c : list) {
        r.doc["circuits"].push_back(circuit_to_json(p, c));
        r.text << "  " << circuit_id(c) << "  faces";
        for (FaceId f : c.faces)
            r.text << ' ' << f;
        r.text << '\n';
    }
    return kOk;
}

int cmd_profile(Report& r, const std::string& file, const std::string& id)
{
    const Polyhedron p = read_polyhedron(file);
    const PrismaticCircuit c = parse_circuit_id(p, id);
    r.doc["circuit"] = circuit_to_json(p, c);
    r.doc["prismatic"] = is_prismatic(p, c);
    const SideProfile prof = side_profile(p, c);
    r.doc["faces"] = Json::array();
    r.text << "face  side0  side1\n";
    for (const auto& fs : prof.faces) {
        auto tag = [&](int s) {
            return std::to_string(fs.arc_edges[s]) + (fs.flat(s) ? " flat" : fs.roof(s) ? " roof" : "");
        };
        r.text << fs.face << "  " << tag(0) << "  " << tag(1) << '\n';
        Json j;
        j["face"] = fs.face;
        j["arc_edges"] = fs.arc_edges;
        j["flat"] = {fs.flat(0), fs.flat(1)};
        j["roof"] = {fs.roof(0), fs.roof(1)};
        r.doc["faces"].push_back(j);
    }
    r.doc["has_flat"] = prof.has_flat();
    r.text << (is_prismatic(p, c) ? "prismatic" : "not prismatic")
           << (prof.has_flat() ? ", has flats" : ", no flats") << '\n';
    return kOk;
}

int cmd_lobell(Report& r, int n, const std::string& out)
{
    const Polyhedron p = build_lobell(n);
    deliver(r, out, p, "polyhedron", "L(" + std::to_string(n) + ")");
    return kOk;
}

int cmd_recognize(Report& r, const std::string& file)
{
    const auto n = recognize_lobell(read_polyhedron(file));
    r.doc["lobell"] = n ? Json(*n) : Json(nullptr);
    r.text << (n ? "L(" + std::to_string(*n) + ")" : std::string("not a Löbell polyhedron")) << '\n';
    return n ? kOk : kNegative;
}

int cmd_lvol(Report& r, std::optional<int> n, const std::string& table)
{
    if (!table.empty()) {
        const auto dots = table.find("..");
        int a = 0, b = 0;
        try {
            if (dots == std::string::npos)
                throw std::invalid_argument(table);
            a = std::stoi(table.substr(0, dots));
            b = std::stoi(table.substr(dots + 2));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--table", "expected A..B, got '" + table + "'");
        }
        if (a > b)
            throw CLI::ValidationError("--table", "empty range " + table);
        r.doc["table"] = Json::array();
        r.text << "n   vol(L(n))\n";
        for (int i = a; i <= b; ++i) {
            const Volume v = lobell_volume(i);
            r.text << i << (i < 10 ? "   " : "  ") << format_real(v.value) << '\n';
            r.doc["table"].push_back({{"n", i}, {"volume", real(v.value)},
                                      {"error_bound", real(v.error_bound)}});
        }
        return kOk;
    }
    if (!n)
        throw CLI::RequiredError("n or --table");
    const Volume v = lobell_volume(*n);
    r.doc["n"] = *n;
    r.doc["volume"] = real(v.value);
    r.doc["error_bound"] = real(v.error_bound);
    r.text << format_real(v.value) << '\n';
    return kOk;
}

int cmd_compose(Report& r, const std::string& f1, int face1, const std::string& f2, int face2,
                int offset, bool flip, const std::string& out)
{
    const Composition c = compose(read_polyhedron(f1), face1, read_polyhedron(f2), face2, {offset, flip});
    counts_line(r, c.polyhedron);
    r.text << "distinguished circuit " << circuit_id(c.circuit) << '\n';
    r.doc["circuit"] = circuit_to_json(c.polyhedron, c.circuit);
    deliver(r, out, c.polyhedron, "polyhedron");
    return kOk;
}

int cmd_double(Report& r, const std::string& file, int face, const std::string& out)
{
    const Polyhedron d = double_across(read_polyhedron(file), face);
    counts_line(r, d);
    deliver(r, out, d, "polyhedron");
    return kOk;
}

int cmd_surgery(Report& r, const std::string& file, int edge, bool force, const std::string& out)
{
    const Polyhedron p = read_polyhedron(file);
    const SurgeryResult s = edge_surgery(p, edge, force);
    r.doc["edge"] = edge;
    r.doc["edge_status"] = to_string(s.status);
    r.doc["forced"] = force;
    r.doc["result"] = verdict_json(s.polyhedron, s.verdict);
    r.text << "edge " << edge << " (" << to_string(s.status) << ")\n";
    counts_line(r, s.polyhedron);
    r.text << (s.verdict.admissible ? "result admissible"
                                    : "result not admissible: " + s.verdict.describe(s.polyhedron))
           << '\n';
    deliver(r, out, s.polyhedron, "polyhedron");
    return s.verdict.admissible ? kOk : kNegative;
}

int cmd_decompose(Report& r, const std::string& file, const std::string& id, const std::string& out)
{
    const Polyhedron p = read_polyhedron(file);
    const auto halves = decompose(p, parse_circuit_id(p, id));
    int i = 1;
    for (const Polyhedron* h : {&halves.first, &halves.second}) {
        const std::string key = "half" + std::to_string(i);
        r.text << key << ": ";
        counts_line(r, *h);
        deliver(r, out.empty() ? "" : out + "-" + std::to_string(i) + ".json", *h, key);
        ++i;
    }
    return kOk;
}

int cmd_reduce(Report& r, const std::string& file, const std::string& policy, const std::string& trace_out)
{
    const ReductionTrace t = reduce(read_polyhedron(file), parse_policy(policy));
    r.doc = trace_to_json(t);
    r.text << "policy " << policy << ", " << t.steps.size() << " step" << (t.steps.size() == 1 ? "" : "s")
           << '\n';
    for (const auto& s : t.steps) {
        r.text << "  component " << s.component << ": " << to_string(s.move) << ' ';
        if (s.move == MoveKind::Surgery) {
            r.text << "edge " << s.edge;
        } else {
            r.text << "circuit";
            for (EdgeId e : s.circuit_edges)
                r.text << ' ' << e;
        }
        r.text << " ->";
        for (int c : s.children)
            r.text << ' ' << c;
        r.text << '\n';
    }
    r.text << "terminal {";
    for (std::size_t i = 0; i < t.terminal.size(); ++i)
        r.text << (i ? "," : "") << t.terminal[i];
    r.text << "}\nbound " << format_real(t.bound.value) << " (error <= " << format_real(t.bound.error_bound)
           << ")\n";
    if (!trace_out.empty()) {
        write_text(trace_out, trace_to_json(t).dump(2) + "\n");
        r.text << "wrote " << trace_out << '\n';
    }
    return kOk;
}

int cmd_bound(Report& r, const std::string& file)
{
    Json doc;
    try {
        doc = Json::parse(read_text(file));
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, file + ": " + e.what());
    }
    const ReductionTrace t = trace_from_json(doc);
    const auto terminal = replay(t);
    const Volume v = volume_lower_bound(t);
    r.doc["terminal"] = terminal;
    r.doc["bound"] = real(v.value);
    r.doc["bound_error"] = real(v.error_bound);
    r.doc["replayed"] = true;
    r.text << "replayed " << t.steps.size() << " steps\nbound " << format_real(v.value) << '\n';
    return kOk;
}

int cmd_cover(Report& r, const std::string& file, std::optional<int> boundary, const std::string& export_path)
{
    const Polyhedron p = read_polyhedron(file);
    const FaceColoring fc = face_four_coloring(p, boundary);
    const EdgeColoring ec = edge_coloring(p, fc);
    const Presentations pr = presentations(p, fc);
    r.doc["face_coloring"] = fc.colors;
    if (boundary)
        r.doc["boundary_face"] = *boundary;
    r.doc["edge_coloring"] = ec.colors;
    r.doc["edge_coloring_proper"] = ec.proper;
    auto pres = [](const GroupPresentation& g) {
        return Json{{"group", g.group}, {"generators", g.generators}, {"relators", g.relators}};
    };
    r.doc["presentations"] = {{"gamma", pres(pr.gamma)}, {"g", pres(pr.g)}};
    r.doc["h_certificate"] = {{"images", pr.h.images},
                              {"relator_images", pr.h.relator_images},
                              {"relators_trivial", pr.h.relators_trivial},
                              {"surjective", pr.h.surjective},
                              {"index", {{"parity", pr.h.parity_index}, {"coloring", pr.h.coloring_index}}},
                              {"cover_degree", pr.h.cover_degree}};
    r.text << "face colours";
    for (int c : fc.colors)
        r.text << ' ' << c;
    r.text << "\nedge colouring " << (ec.proper ? "proper" : "IMPROPER") << '\n';
    r.text << pr.gamma.group << ": " << pr.gamma.generators.size() << " generators, "
           << pr.gamma.relators.size() << " relators\n";
    r.text << pr.g.group << ": " << pr.g.generators.size() << " generators, " << pr.g.relators.size()
           << " relators\n";
    r.text << "h: relators " << (pr.h.relators_trivial ? "trivial" : "NOT trivial") << ", "
           << (pr.h.surjective ? "onto" : "not onto") << ", cover degree " << pr.h.cover_degree << '\n';
    if (!export_path.empty()) {
        write_text(export_path, export_presentation(pr.gamma) + export_presentation(pr.g));
        r.text << "wrote " << export_path << '\n';
    }
    return pr.h.relators_trivial ? kOk : kInternal;
}

int cmd_polar(Report& r, const std::string& file, std::optional<int> edge, std::optional<double> t)
{
    const Polyhedron p = read_polyhedron(file);
    if (edge.has_value() != t.has_value())
        throw CLI::ValidationError("--edge/--t", "give both --edge and --t, or neither");
    std::optional<Deformation> d;
    if (edge)
        d = Deformation{*edge, *t};
    const ConeAngleReport rep = cone_angles(p, d);
    r.doc["check"] = "partial Rivin check (cone angles only)";
    if (d)
        r.doc["deformation"] = {{"edge", d->edge}, {"t", d->t}};
    r.doc["faces"] = Json::array();
    r.text << "partial Rivin check (cone angles only)\nface  size  cone angle\n";
    for (const auto& f : rep.faces) {
        r.text << f.face << "  " << f.size << "  " << format_real(f.cone_angle) << (f.touched ? "  *" : "")
               << '\n';
        r.doc["faces"].push_back({{"face", f.face},
                                  {"size", f.size},
                                  {"cone_angle", real(f.cone_angle)},
                                  {"deformed", f.touched}});
    }
    r.doc["all_exceed_2pi"] = rep.all_exceed_2pi;
    r.text << "all cone angles > 2 pi: " << (rep.all_exceed_2pi ? "yes" : "no") << '\n';
    return rep.all_exceed_2pi ? kOk : kNegative;
}

int cmd_canon(Report& r, const std::string& file)
{
    const CanonicalCode c = canonical_form(read_polyhedron(file));
    r.doc["digest"] = c.digest();
    r.doc["code"] = c.code;
    r.text << c.digest() << '\n';
    return kOk;
}

int cmd_iso(Report& r, const std::string& a, const std::string& b)
{
    const bool same = isomorphic(read_polyhedron(a), read_polyhedron(b));
    r.doc["isomorphic"] = same;
    r.text << (same ? "isomorphic" : "not isomorphic") << '\n';
    return same ? kOk : kNegative;
}

} // namespace

int main(int argc, char** argv)
{
    Globals g;
    CLI::App app{"Right-angled hyperbolic polyhedra: admissibility, constructions, reduction to "
                 "Löbell polyhedra and volume bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    app.add_flag("--quiet", g.quiet, "No output; exit code only");

    std::function<int(Report&)> run;
    std::string file, file2, out, circuit, policy = "decompose-first", trace_out, table, export_path;
    int n = 0, face = 0, face2 = 0, k = 5, offset = 0, edge = 0;
    bool flip = false, force = false;
    std::optional<int> opt_n, boundary, opt_edge;
    std::optional<double> opt_t;

    auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

    auto* validate = sub("validate", "Check right-angled admissibility");
    validate->add_option("file", file)->required();
    validate->callback([&] { run = [&](Report& r) { return cmd_validate(r, file); }; });

    auto* info = sub("info", "Counts, pentagons, admissibility, recognition");
    info->add_option("file", file)->required();
    info->callback([&] { run = [&](Report& r) { return cmd_info(r, file); }; });

    auto* circuits = sub("circuits", "List prismatic k-circuits");
    circuits->add_option("file", file)->required();
    circuits->add_option("--k", k, "Circuit length")->required();
    circuits->callback([&] { run = [&](Report& r) { return cmd_circuits(r, file, k); }; });

    auto* profile = sub("profile", "Flat/roof profile of a circuit");
    profile->add_option("file", file)->required();
    profile->add_option("--circuit", circuit, "Comma-separated crossed edge ids")->required();
    profile->callback([&] { run = [&](Report& r) { return cmd_profile(r, file, circuit); }; });

    auto* lobell = sub("lobell", "Build L(n)");
    lobell->add_option("n", n)->required();
    lobell->add_option("-o,--output", out);
    lobell->callback([&] { run = [&](Report& r) { return cmd_lobell(r, n, out); }; });

    auto* recognize = sub("recognize", "Identify a Löbell polyhedron");
    recognize->add_option("file", file)->required();
    recognize->callback([&] { run = [&](Report& r) { return cmd_recognize(r, file); }; });

    auto* lvol = sub("lvol", "Volume of L(n)");
    lvol->add_option("n", opt_n);
    lvol->add_option("--table", table, "Range A..B");
    lvol->callback([&] { run = [&](Report& r) { return cmd_lvol(r, opt_n, table); }; });

    auto* comp = sub("compose", "Glue two polyhedra along faces");
    comp->add_option("file1", file)->required();
    comp->add_option("face1", face)->required();
    comp->add_option("file2", file2)->required();
    comp->add_option("face2", face2)->required();
    comp->add_option("--offset", offset);
    comp->add_flag("--flip", flip);
    comp->add_option("-o,--output", out);
    comp->callback([&] {
        run = [&](Report& r) { return cmd_compose(r, file, face, file2, face2, offset, flip, out); };
    });

    auto* dbl = sub("double", "Double across a face");
    dbl->add_option("file", file)->required();
    dbl->add_option("face", face)->required();
    dbl->add_option("-o,--output", out);
    dbl->callback([&] { run = [&](Report& r) { return cmd_double(r, file, face, out); }; });

    auto* surg = sub("surgery", "Edge surgery");
    surg->add_option("file", file)->required();
    surg->add_option("edge", edge)->required();
    surg->add_flag("--force", force, "Allow edges that are not very good; report admissibility");
    surg->add_option("-o,--output", out);
    surg->callback([&] { run = [&](Report& r) { return cmd_surgery(r, file, edge, force, out); }; });

    auto* dec = sub("decompose", "Split along a prismatic circuit");
    dec->add_option("file", file)->required();
    dec->add_option("--circuit", circuit)->required();
    dec->add_option("-o,--output", out, "Prefix; writes PREFIX-1.json and PREFIX-2.json");
    dec->callback([&] { run = [&](Report& r) { return cmd_decompose(r, file, circuit, out); }; });

    auto* red = sub("reduce", "Reduce to Löbell polyhedra and bound the volume");
    red->add_option("file", file)->required();
    red->add_option("--policy", policy)->check(CLI::IsMember({"decompose-first", "surgery-first"}));
    red->add_option("--trace", trace_out);
    red->callback([&] { run = [&](Report& r) { return cmd_reduce(r, file, policy, trace_out); }; });

    auto* bnd = sub("bound", "Replay a trace and print its volume bound");
    bnd->add_option("trace", file)->required();
    bnd->callback([&] { run = [&](Report& r) { return cmd_bound(r, file); }; });

    auto* cov = sub("cover", "Colourings, presentations and the cover homomorphism");
    cov->add_option("file", file)->required();
    cov->add_option("--boundary-face", boundary);
    cov->add_option("--export-presentation", export_path);
    cov->callback([&] { run = [&](Report& r) { return cmd_cover(r, file, boundary, export_path); }; });

    auto* pol = sub("polar", "Cone angles of the spherical polar");
    pol->add_option("file", file)->required();
    pol->add_option("--edge", opt_edge);
    pol->add_option("--t", opt_t);
    pol->callback([&] { run = [&](Report& r) { return cmd_polar(r, file, opt_edge, opt_t); }; });

    auto* canon = sub("canon", "Canonical code");
    canon->add_option("file", file)->required();
    canon->callback([&] { run = [&](Report& r) { return cmd_canon(r, file); }; });

    auto* iso = sub("iso", "Isomorphism test");
    iso->add_option("file1", file)->required();
    iso->add_option("file2", file2)->required();
    iso->callback([&] { run = [&](Report& r) { return cmd_iso(r, file, file2); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "rap: " << e.what() << '\n';
        return kInput;
    }

    Report report{g};
    try {
        const int code = run(report);
        report.emit();
        return code;
    } catch (const CLI::Error& e) {
        std::cerr << "rap: " << e.what() << '\n';
        return kInput;
    } catch (const Error& e) {
        std::cerr << "rap: " << e.what() << '\n';
        const bool internal = e.kind() == ErrorKind::InternalError || e.kind() == ErrorKind::TheoremViolation;
        return internal ? kInternal : kInput;
    } catch (const std::exception& e) {
        std::cerr << "rap: internal error: " << e.what() << '\n';
        return kInternal;
    }
}
