#include "rap/polyhedron.hpp"

#include "rap/error.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace rap {

namespace {

std::uint64_t pair_key(int a, int b)
{
    if (a > b)
        std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

std::uint64_t dart_key(int a, int b)
{
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

std::string face_name(std::size_t f) { return "face " + std::to_string(f); }

std::string edge_name(int a, int b)
{
    return "edge {" + std::to_string(a) + "," + std::to_string(b) + "}";
}

} // namespace

Polyhedron Polyhedron::build(FaceList faces)
{
    if (faces.size() < 4)
        fail(ErrorKind::TooFewFaces,
             "a polyhedron needs at least 4 faces, got " + std::to_string(faces.size()));

    // Dense, order-preserving relabelling of vertex ids.
    std::vector<int> ids;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& cycle = faces[f];
        if (cycle.size() < 3)
            fail(ErrorKind::MalformedFace, face_name(f) + " has fewer than 3 vertices");
        for (int v : cycle) {
            if (v < 0)
                fail(ErrorKind::MalformedFace,
                     face_name(f) + " has negative vertex id " + std::to_string(v));
            ids.push_back(v);
        }
        std::vector<int> sorted(cycle);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(ErrorKind::MalformedFace, face_name(f) + " repeats a vertex");
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.back() != static_cast<int>(ids.size()) - 1) {
        for (auto& cycle : faces)
            for (int& v : cycle)
                v = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    }
    const int nv = static_cast<int>(ids.size());

    // Darts: each directed edge may be used by exactly one face.
    std::unordered_map<std::uint64_t, FaceId> darts;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& cycle = faces[f];
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int a = cycle[i];
            int b = cycle[(i + 1) % cycle.size()];
            auto [it, inserted] = darts.emplace(dart_key(a, b), static_cast<FaceId>(f));
            if (!inserted)
                fail(ErrorKind::OrientationMismatch,
                     edge_name(a, b) + " is traversed in the same direction by " +
                         face_name(it->second) + " and " + face_name(f));
        }
    }

    std::vector<std::pair<int, int>> undirected;
    undirected.reserve(darts.size() / 2);
    for (const auto& [key, f] : darts) {
        int a = static_cast<int>(key >> 32);
        int b = static_cast<int>(key & 0xffffffffu);
        if (!darts.count(dart_key(b, a)))
            fail(ErrorKind::EdgeNotSharedByTwoFaces,
                 edge_name(a, b) + " belongs only to " + face_name(f));
        if (a < b)
            undirected.emplace_back(a, b);
    }
    std::sort(undirected.begin(), undirected.end());

    Polyhedron p;
    p.edges_.reserve(undirected.size());
    p.vertex_edges_.assign(nv, {});
    p.vertex_faces_.assign(nv, {});
    for (const auto& [a, b] : undirected) {
        EdgeId id = static_cast<EdgeId>(p.edges_.size());
        Edge e;
        e.u = a;
        e.v = b;
        e.faces = {darts.at(dart_key(a, b)), darts.at(dart_key(b, a))};
        if (e.faces[0] == e.faces[1])
            fail(ErrorKind::MalformedFace,
                 face_name(e.faces[0]) + " traverses " + edge_name(a, b) + " twice");
        p.edges_.push_back(e);
        p.edge_index_.emplace(pair_key(a, b), id);
        p.vertex_edges_[a].push_back(id);
        p.vertex_edges_[b].push_back(id);
        auto [it, inserted] = p.face_pair_index_.emplace(pair_key(e.faces[0], e.faces[1]), id);
        (void)it;
        (void)inserted; // faces meeting along several edges keep their first shared edge
    }

    const int ne = static_cast<int>(p.edges_.size());
    const int nf = static_cast<int>(faces.size());
    if (nv - ne + nf != 2)
        fail(ErrorKind::EulerViolation, "v - e + f = " + std::to_string(nv) + " - " +
                                            std::to_string(ne) + " + " + std::to_string(nf) +
                                            " = " + std::to_string(nv - ne + nf) + ", expected 2");

    // Connectivity of the 1-skeleton.
    std::vector<char> seen(nv, 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (EdgeId e : p.vertex_edges_[v]) {
            int w = p.edges_[e].other(v);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push(w);
            }
        }
    }
    if (reached != nv) {
        int missing = static_cast<int>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
        fail(ErrorKind::DisconnectedSkeleton,
             "vertex " + std::to_string(missing) + " is not connected to vertex 0");
    }

    p.face_edges_.resize(nf);
    for (int f = 0; f < nf; ++f) {
        const auto& cycle = faces[f];
        auto& fe = p.face_edges_[f];
        fe.reserve(cycle.size());
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int a = cycle[i];
            int b = cycle[(i + 1) % cycle.size()];
            fe.push_back(p.edge_index_.at(pair_key(a, b)));
            p.vertex_faces_[a].push_back(f);
        }
    }
    p.faces_ = std::move(faces);
    return p;
}

bool Polyhedron::is_trivalent() const
{
    return std::all_of(vertex_edges_.begin(), vertex_edges_.end(),
                       [](const auto& es) { return es.size() == 3; });
}

std::optional<EdgeId> Polyhedron::find_edge(VertexId a, VertexId b) const
{
    auto it = edge_index_.find(pair_key(a, b));
    if (it == edge_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<FaceId> Polyhedron::dart_face(VertexId a, VertexId b) const
{
    auto e = find_edge(a, b);
    if (!e)
        return std::nullopt;
    const Edge& ed = edges_[*e];
    return a == ed.u ? ed.faces[0] : ed.faces[1];
}

std::optional<EdgeId> Polyhedron::shared_edge(FaceId a, FaceId b) const
{
    if (a == b)
        return std::nullopt;
    auto it = face_pair_index_.find(pair_key(a, b));
    if (it == face_pair_index_.end())
        return std::nullopt;
    return it->second;
}

bool Polyhedron::face_has_vertex(FaceId f, VertexId v) const
{
    return position_in_face(f, v) >= 0;
}

int Polyhedron::position_in_face(FaceId f, VertexId v) const
{
    const auto& cycle = faces_.at(f);
    auto it = std::find(cycle.begin(), cycle.end(), v);
    return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

std::vector<FaceId> Polyhedron::face_neighbors(FaceId f) const
{
    std::vector<FaceId> out;
    for (EdgeId e : face_edges_.at(f))
        out.push_back(edges_[e].other_face(f));
    return out;
}

Polyhedron Polyhedron::mirrored() const
{
    FaceList reversed = faces_;
    for (auto& cycle : reversed)
        std::reverse(cycle.begin(), cycle.end());
    return build(std::move(reversed));
}

Counts counts(const Polyhedron& p)
{
    Counts c;
    c.vertices = p.num_vertices();
    c.edges = p.num_edges();
    c.faces = p.num_faces();
    for (FaceId f = 0; f < p.num_faces(); ++f)
        ++c.face_sizes[p.face_size(f)];
    return c;
}

PentagonExcess pentagon_excess(const Polyhedron& p)
{
    for (VertexId v = 0; v < p.num_vertices(); ++v)
        if (p.degree(v) != 3)
            fail(ErrorKind::NotTrivalent, "vertex " + std::to_string(v) + " has degree " +
                                              std::to_string(p.degree(v)));
    PentagonExcess out;
    int min_size = p.face_size(0);
    for (FaceId f = 0; f < p.num_faces(); ++f) {
        int k = p.face_size(f);
        min_size = std::min(min_size, k);
        if (k == 5)
            ++out.pentagons;
        out.excess += k - 5;
    }
    ensure(out.excess == 2 * p.num_edges() - 5 * p.num_faces(), "excess bookkeeping");
    ensure(p.num_faces() - out.excess == 12, "f - c(P) = 12 fails for a trivalent polyhedron");
    // With every face at least a pentagon, c >= number of non-pentagons.
    if (min_size >= 5)
        ensure(out.pentagons >= 12, "fewer than 12 pentagons with all faces >= 5 edges");
    return out;
}

Polyhedron tetrahedron()
{
    return Polyhedron::build({{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}});
}

Polyhedron prism(int n)
{
    if (n < 3)
        fail(ErrorKind::MalformedFace, "prism needs n >= 3");
    FaceList faces;
    std::vector<int> bottom, top;
    for (int i = n - 1; i >= 0; --i)
        bottom.push_back(i);
    for (int i = 0; i < n; ++i)
        top.push_back(n + i);
    faces.push_back(bottom);
    faces.push_back(top);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        faces.push_back({i, j, n + j, n + i});
    }
    return Polyhedron::build(std::move(faces));
}

Polyhedron cube() { return prism(4); }

Polyhedron triangular_prism() { return prism(3); }

Polyhedron dodecahedron()
{
    // top pentagon 0..4, upper ring 5..9, lower ring 10..14, bottom 15..19
    FaceList faces;
    faces.push_back({0, 1, 2, 3, 4});
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        faces.push_back({j, i, 5 + i, 10 + i, 5 + j});
    }
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        faces.push_back({10 + j, 5 + j, 10 + i, 15 + i, 15 + j});
    }
    faces.push_back({15, 19, 18, 17, 16});
    return Polyhedron::build(std::move(faces));
}

} // namespace rap
