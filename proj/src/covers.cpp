#include "rap/covers.hpp"

#include "rap/circuits.hpp"
#include "rap/error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <sstream>

namespace rap {

namespace {

bool colored(const FaceColoring& fc, FaceId f) { return fc.colors.at(f) >= 0; }

std::string word(std::initializer_list<std::string> letters)
{
    std::string out;
    for (const auto& l : letters) {
        if (!out.empty())
            out += '*';
        out += l;
    }
    return out;
}

} // namespace

FaceColoring face_four_coloring(const Polyhedron& p, std::optional<FaceId> boundary_face)
{
    if (boundary_face && !p.valid_face(*boundary_face))
        fail(ErrorKind::NoSuchFace, "no face " + std::to_string(*boundary_face));
    const int f = p.num_faces();
    std::vector<std::vector<FaceId>> earlier(f);
    for (FaceId a = 0; a < f; ++a)
        for (FaceId b : p.face_neighbors(a))
            if (b < a)
                earlier[a].push_back(b);

    FaceColoring fc;
    fc.boundary_face = boundary_face;
    fc.colors.assign(f, -1);
    auto skip = [&](FaceId a) { return boundary_face && *boundary_face == a; };
    // Iterative backtracking; colors[a] holds the value being tried.
    FaceId a = 0;
    while (a >= 0 && a < f) {
        if (skip(a)) {
            ++a;
            continue;
        }
        int c = fc.colors[a] + 1;
        for (; c < 4; ++c) {
            bool clash = false;
            for (FaceId b : earlier[a])
                if (!skip(b) && fc.colors[b] == c) {
                    clash = true;
                    break;
                }
            if (!clash)
                break;
        }
        if (c < 4) {
            fc.colors[a] = c;
            ++a;
        } else {
            fc.colors[a] = -1;
            do
                --a;
            while (a >= 0 && skip(a));
        }
    }
    ensure(a == f, "no proper face 4-colouring found");
    return fc;
}

bool is_proper(const Polyhedron& p, const FaceColoring& fc)
{
    if (static_cast<int>(fc.colors.size()) != p.num_faces())
        return false;
    for (FaceId a = 0; a < p.num_faces(); ++a) {
        const bool boundary = fc.boundary_face && *fc.boundary_face == a;
        if (boundary != (fc.colors[a] < 0) || fc.colors[a] > 3)
            return false;
    }
    for (const Edge& e : p.edges())
        if (colored(fc, e.faces[0]) && fc.colors[e.faces[0]] == fc.colors[e.faces[1]])
            return false;
    return true;
}

EdgeColoring edge_coloring(const Polyhedron& p, const FaceColoring& fc)
{
    if (!is_proper(p, fc))
        fail(ErrorKind::ImproperFaceColoring, "face colouring is not proper");
    if (!p.is_trivalent())
        fail(ErrorKind::NotTrivalent, "edge colouring needs a trivalent polyhedron");
    EdgeColoring ec;
    ec.colors.assign(p.num_edges(), -1);
    for (EdgeId e = 0; e < p.num_edges(); ++e) {
        const Edge& edge = p.edge(e);
        if (colored(fc, edge.faces[0]) && colored(fc, edge.faces[1]))
            ec.colors[e] = klein_add(fc.colors[edge.faces[0]], fc.colors[edge.faces[1]]);
    }
    ec.proper = true;
    for (VertexId v = 0; v < p.num_vertices(); ++v) {
        std::vector<int> seen;
        for (EdgeId e : p.vertex_edges(v)) {
            const int c = ec.colors[e];
            if (c < 0)
                continue;
            if (c == 0 || std::find(seen.begin(), seen.end(), c) != seen.end())
                ec.proper = false;
            seen.push_back(c);
        }
    }
    ensure(ec.proper, "edge colouring derived from a proper face colouring is improper");
    return ec;
}

std::vector<Letter> parse_word(const std::string& w)
{
    std::vector<Letter> out;
    std::istringstream in(w);
    std::string token;
    while (std::getline(in, token, '*')) {
        Letter l;
        if (token.size() > 3 && token.compare(token.size() - 3, 3, "^-1") == 0) {
            l.exponent = -1;
            token.resize(token.size() - 3);
        }
        if (token.empty() || !std::isalpha(static_cast<unsigned char>(token[0])))
            fail(ErrorKind::ParseError, "malformed word '" + w + "'");
        for (char ch : token)
            if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                fail(ErrorKind::ParseError, "malformed word '" + w + "'");
        l.generator = token;
        out.push_back(std::move(l));
    }
    if (out.empty())
        fail(ErrorKind::ParseError, "empty word");
    return out;
}

bool well_formed(const GroupPresentation& g)
{
    std::vector<std::string> gens = g.generators;
    std::sort(gens.begin(), gens.end());
    for (const auto& r : g.relators)
        for (const auto& l : parse_word(r))
            if (!std::binary_search(gens.begin(), gens.end(), l.generator))
                return false;
    return true;
}

Presentations presentations(const Polyhedron& p, const FaceColoring& fc)
{
    require_admissible(p, "polyhedron");
    const EdgeColoring ec = edge_coloring(p, fc);
    const bool bounded = fc.boundary_face.has_value();
    const std::string suffix = bounded ? "_(P,F)" : "_P";
    auto r = [](FaceId f) { return "r" + std::to_string(f); };
    auto a = [](EdgeId e) { return "a" + std::to_string(e); };

    Presentations out;
    out.gamma.group = "Gamma" + suffix;
    for (FaceId f = 0; f < p.num_faces(); ++f) {
        if (!colored(fc, f))
            continue;
        out.gamma.generators.push_back(r(f));
        out.gamma.generator_cells.push_back(f);
        out.gamma.relators.push_back(word({r(f), r(f)}));
    }
    for (const Edge& e : p.edges()) {
        const FaceId i = std::min(e.faces[0], e.faces[1]);
        const FaceId j = std::max(e.faces[0], e.faces[1]);
        if (colored(fc, i) && colored(fc, j))
            out.gamma.relators.push_back(word({r(i), r(j), r(i), r(j)}));
    }

    out.g.group = "G" + suffix;
    std::map<std::string, int> image;
    for (EdgeId e = 0; e < p.num_edges(); ++e) {
        if (ec.colors[e] < 0)
            continue;
        out.g.generators.push_back(a(e));
        out.g.generator_cells.push_back(e);
        out.g.relators.push_back(word({a(e), a(e)}));
        image[a(e)] = ec.colors[e];
    }
    for (VertexId v = 0; v < p.num_vertices(); ++v) {
        const auto vf = p.vertex_faces(v);
        if (std::any_of(vf.begin(), vf.end(), [&](FaceId f) { return !colored(fc, f); }))
            continue;
        std::vector<FaceId> f(vf.begin(), vf.end());
        std::sort(f.begin(), f.end());
        // a_ij a_jk = a_ik
        const EdgeId ij = *p.shared_edge(f[0], f[1]);
        const EdgeId jk = *p.shared_edge(f[1], f[2]);
        const EdgeId ik = *p.shared_edge(f[0], f[2]);
        out.g.relators.push_back(word({a(ij), a(jk), a(ik) + "^-1"}));
    }

    HomomorphismCertificate& h = out.h;
    int span = 0;
    for (const auto& gen : out.g.generators) {
        h.images.push_back(image.at(gen));
        span |= 1 << image.at(gen);
    }
    // Two distinct nonzero elements generate (Z/2)^2.
    h.surjective = std::popcount(static_cast<unsigned>(span & 0b1110)) >= 2;
    h.relators_trivial = true;
    for (const auto& rel : out.g.relators) {
        int value = 0;
        for (const auto& l : parse_word(rel))
            value = klein_add(value, image.at(l.generator)); // inverses are themselves
        h.relator_images.push_back(value);
        h.relators_trivial = h.relators_trivial && value == 0;
    }
    h.cover_degree = h.parity_index * h.coloring_index;
    return out;
}

GroupPresentation amalgam_presentation(const Polyhedron& p1, FaceId f1, const Polyhedron& p2,
                                       FaceId f2, Gluing gluing)
{
    const Composition comp = compose(p1, f1, p2, f2, gluing);
    GroupPresentation out;
    out.group = "amalgam";
    auto factor = [&](const Polyhedron& p, FaceId glued, const std::vector<FaceId>& map,
                      const std::string& letter) {
        auto gen = [&](FaceId f) { return letter + std::to_string(f); };
        for (FaceId f = 0; f < p.num_faces(); ++f) {
            if (f == glued)
                continue;
            out.generators.push_back(gen(f));
            out.generator_cells.push_back(map[f]);
            out.relators.push_back(word({gen(f), gen(f)}));
        }
        for (const Edge& e : p.edges()) {
            const FaceId i = std::min(e.faces[0], e.faces[1]);
            const FaceId j = std::max(e.faces[0], e.faces[1]);
            if (i != glued && j != glued)
                out.relators.push_back(word({gen(i), gen(j), gen(i), gen(j)}));
        }
    };
    factor(p1, f1, comp.first_faces, "s");
    factor(p2, f2, comp.second_faces, "t");
    // s_a = t_b whenever both land in the same face of the composition,
    // listed along the distinguished circuit.
    for (FaceId c : comp.circuit.faces) {
        FaceId sa = -1;
        FaceId tb = -1;
        for (FaceId f = 0; f < p1.num_faces(); ++f)
            if (comp.first_faces[f] == c)
                sa = f;
        for (FaceId f = 0; f < p2.num_faces(); ++f)
            if (comp.second_faces[f] == c)
                tb = f;
        ensure(sa >= 0 && tb >= 0, "merged face without both preimages");
        out.relators.push_back(word({"s" + std::to_string(sa), "t" + std::to_string(tb) + "^-1"}));
    }
    return out;
}

std::string export_presentation(const GroupPresentation& g)
{
    std::ostringstream os;
    os << "group " << g.group << '\n';
    os << "generators " << g.generators.size() << '\n';
    for (const auto& gen : g.generators)
        os << gen << '\n';
    os << "relators " << g.relators.size() << '\n';
    for (const auto& rel : g.relators)
        os << rel << '\n';
    return os.str();
}

} // namespace rap
