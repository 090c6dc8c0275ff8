#include "rap/construct.hpp"

#include "rap/error.hpp"

#include <algorithm>

namespace rap {

namespace {

void require_face(const Polyhedron& p, FaceId f, const char* which)
{
    if (!p.valid_face(f))
        fail(ErrorKind::NoSuchFace, std::string(which) + " has no face " + std::to_string(f));
}

// Vertices of face g strictly between `after` and `before`, walking forward.
std::vector<VertexId> open_path(const Polyhedron& p, FaceId g, VertexId after, VertexId before)
{
    auto cycle = p.face(g);
    const int n = static_cast<int>(cycle.size());
    int i = p.position_in_face(g, after);
    std::vector<VertexId> out;
    for (int j = (i + 1) % n; cycle[j] != before; j = (j + 1) % n)
        out.push_back(cycle[j]);
    return out;
}

} // namespace

std::vector<VertexId> face_from_lowest_edge(const Polyhedron& p, FaceId f)
{
    auto fe = p.face_edges(f);
    const int j = static_cast<int>(std::min_element(fe.begin(), fe.end()) - fe.begin());
    std::vector<VertexId> cycle(p.face(f).begin(), p.face(f).end());
    std::rotate(cycle.begin(), cycle.begin() + j, cycle.end());
    return cycle;
}

Composition compose(const Polyhedron& p1, FaceId f1, const Polyhedron& p2, FaceId f2,
                    Gluing gluing)
{
    require_face(p1, f1, "first polyhedron");
    require_face(p2, f2, "second polyhedron");
    const int k = p1.face_size(f1);
    if (p2.face_size(f2) != k)
        fail(ErrorKind::FaceSizeMismatch, "glued faces have " + std::to_string(k) + " and " +
                                              std::to_string(p2.face_size(f2)) + " edges");
    require_admissible(p1, "first polyhedron");
    require_admissible(p2, "second polyhedron");

    const Polyhedron q = gluing.flip ? p2.mirrored() : p2;
    const auto u = face_from_lowest_edge(p1, f1);
    const auto w = face_from_lowest_edge(p2, f2);
    auto mod = [k](int i) { return ((i % k) + k) % k; };
    const int offset = mod(gluing.offset);
    // partner[i]: vertex of q glued to u_i
    std::vector<VertexId> partner(k);
    for (int i = 0; i < k; ++i)
        partner[i] = w[gluing.flip ? mod(offset + i) : mod(offset - i)];

    const int shift = p1.num_vertices();
    auto lift = [shift](VertexId x) { return x + shift; };

    FaceList faces;
    std::vector<FaceId> first_faces(p1.num_faces(), -1);
    std::vector<FaceId> second_faces(q.num_faces(), -1);
    std::vector<FaceId> merged_of_edge(k, -1); // F1 edge u_i u_{i+1} -> merged face

    // Faces of P1, merging those that touch F1 with their partners in q.
    std::vector<int> edge_slot(p1.num_faces(), -1);
    for (int i = 0; i < k; ++i) {
        FaceId a = *p1.dart_face(u[mod(i + 1)], u[i]);
        edge_slot[a] = i;
    }
    for (FaceId g = 0; g < p1.num_faces(); ++g) {
        if (g == f1)
            continue;
        const FaceId id = static_cast<FaceId>(faces.size());
        first_faces[g] = id;
        if (edge_slot[g] < 0) {
            faces.emplace_back(p1.face(g).begin(), p1.face(g).end());
            continue;
        }
        const int i = edge_slot[g];
        const VertexId ui = u[i];
        const VertexId ui1 = u[mod(i + 1)];
        // g = (..., p, u_{i+1}, u_i, q, ...): keep q .. p
        std::vector<VertexId> cycle = open_path(p1, g, ui, ui1);
        // partner face traverses partner[i] -> partner[i+1]; keep s .. r
        const FaceId b = *q.dart_face(partner[i], partner[mod(i + 1)]);
        for (VertexId x : open_path(q, b, partner[mod(i + 1)], partner[i]))
            cycle.push_back(lift(x));
        second_faces[b] = id;
        merged_of_edge[i] = id;
        faces.push_back(std::move(cycle));
    }
    for (FaceId g = 0; g < q.num_faces(); ++g) {
        if (g == f2 || second_faces[g] >= 0)
            continue;
        second_faces[g] = static_cast<FaceId>(faces.size());
        std::vector<VertexId> cycle;
        for (VertexId x : q.face(g))
            cycle.push_back(lift(x));
        faces.push_back(std::move(cycle));
    }

    Polyhedron glued = Polyhedron::build(std::move(faces));
    PrismaticCircuit circuit = make_circuit(glued, merged_of_edge);
    Composition out{std::move(glued), std::move(circuit), std::move(first_faces),
                    std::move(second_faces)};
    ensure(is_prismatic(out.polyhedron, out.circuit), "distinguished circuit is not prismatic");
    auto verdict = admissible(out.polyhedron);
    ensure(verdict.admissible, "composition of admissible polyhedra is not admissible: " +
                                   verdict.describe(out.polyhedron));
    return out;
}

Polyhedron double_across(const Polyhedron& p, FaceId f)
{
    require_face(p, f, "polyhedron");
    require_admissible(p, "polyhedron");
    const int shift = p.num_vertices();
    auto mirror = [shift](VertexId x) { return x + shift; };

    FaceList faces;
    FaceList mirrored;
    auto cycle_f = p.face(f);
    const int k = static_cast<int>(cycle_f.size());
    for (FaceId g = 0; g < p.num_faces(); ++g) {
        if (g == f)
            continue;
        // Does g run along an edge a->b of f (as b->a)?
        int slot = -1;
        for (int i = 0; i < k; ++i) {
            if (p.dart_face(cycle_f[(i + 1) % k], cycle_f[i]) == g) {
                slot = i;
                break;
            }
        }
        if (slot < 0) {
            faces.emplace_back(p.face(g).begin(), p.face(g).end());
            std::vector<VertexId> image;
            for (auto it = p.face(g).rbegin(); it != p.face(g).rend(); ++it)
                image.push_back(mirror(*it));
            mirrored.push_back(std::move(image));
            continue;
        }
        // g = (a, q, ..., p, b) read from a; merged = q..p followed by the
        // mirror images p'..q'.
        const VertexId a = cycle_f[slot];
        const VertexId b = cycle_f[(slot + 1) % k];
        std::vector<VertexId> path = open_path(p, g, a, b);
        std::vector<VertexId> cycle = path;
        for (auto it = path.rbegin(); it != path.rend(); ++it)
            cycle.push_back(mirror(*it));
        faces.push_back(std::move(cycle));
    }
    for (auto& cycle : mirrored)
        faces.push_back(std::move(cycle));
    Polyhedron out = Polyhedron::build(std::move(faces));
    auto verdict = admissible(out);
    ensure(verdict.admissible, "double is not admissible: " + verdict.describe(out));
    return out;
}

} // namespace rap
