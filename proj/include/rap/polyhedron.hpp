#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace rap {

using VertexId = int;
using EdgeId = int;
using FaceId = int;

using FaceList = std::vector<std::vector<VertexId>>;

struct Edge {
    VertexId u = 0; // u < v
    VertexId v = 0;
    // faces[0] traverses u->v, faces[1] traverses v->u.
    std::array<FaceId, 2> faces{-1, -1};

    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool has_vertex(VertexId w) const { return w == u || w == v; }
    FaceId other_face(FaceId f) const { return f == faces[0] ? faces[1] : faces[0]; }
};

struct Counts {
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    std::map<int, int> face_sizes; // face size -> number of faces

    bool operator==(const Counts&) const = default;
};

struct PentagonExcess {
    int pentagons = 0;
    int excess = 0; // sum over faces of (size - 5) = 2e - 5f
};

/// Oriented cell decomposition of the 2-sphere, given by its face cycles.
///
/// Faces are counterclockwise seen from outside, so every edge is traversed
/// once in each direction. Vertex ids are dense (0..v-1); `build` relabels
/// sparse input ids monotonically. Edge ids follow lexicographic order of
/// (min vertex, max vertex); face ids follow input order. Immutable.
class Polyhedron {
public:
    /// Validates and derives incidences. Throws rap::Error naming the
    /// offending cell on malformed input.
    static Polyhedron build(FaceList faces);

    int num_vertices() const { return static_cast<int>(vertex_edges_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    const FaceList& faces() const { return faces_; }
    std::span<const VertexId> face(FaceId f) const { return faces_.at(f); }
    int face_size(FaceId f) const { return static_cast<int>(faces_.at(f).size()); }
    /// face_edges(f)[i] joins face(f)[i] and face(f)[i+1].
    std::span<const EdgeId> face_edges(FaceId f) const { return face_edges_.at(f); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    std::span<const EdgeId> vertex_edges(VertexId v) const { return vertex_edges_.at(v); }
    std::span<const FaceId> vertex_faces(VertexId v) const { return vertex_faces_.at(v); }
    int degree(VertexId v) const { return static_cast<int>(vertex_edges_.at(v).size()); }
    bool is_trivalent() const;

    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
    /// Face traversing the directed edge a->b.
    std::optional<FaceId> dart_face(VertexId a, VertexId b) const;
    /// Edge shared by two faces, if they are adjacent.
    std::optional<EdgeId> shared_edge(FaceId a, FaceId b) const;
    bool adjacent(FaceId a, FaceId b) const { return shared_edge(a, b).has_value(); }
    bool face_has_vertex(FaceId f, VertexId v) const;
    /// Position of v in the cycle of f, or -1.
    int position_in_face(FaceId f, VertexId v) const;
    /// Faces sharing an edge with f, in cycle order of f's edges.
    std::vector<FaceId> face_neighbors(FaceId f) const;

    bool valid_face(FaceId f) const { return f >= 0 && f < num_faces(); }
    bool valid_edge(EdgeId e) const { return e >= 0 && e < num_edges(); }

    /// Same complex with every face cycle reversed.
    Polyhedron mirrored() const;

private:
    Polyhedron() = default;

    FaceList faces_;
    std::vector<std::vector<EdgeId>> face_edges_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> vertex_edges_;
    std::vector<std::vector<FaceId>> vertex_faces_;
    std::unordered_map<std::uint64_t, EdgeId> edge_index_;
    std::unordered_map<std::uint64_t, EdgeId> face_pair_index_;
};

Counts counts(const Polyhedron& p);

/// Pentagon count and excess c = sum (size - 5). Requires trivalence.
PentagonExcess pentagon_excess(const Polyhedron& p);

/// Classical solids used as fixtures and as excluded types.
Polyhedron tetrahedron();
Polyhedron cube();
Polyhedron triangular_prism();
/// n-gonal prism, n >= 3.
Polyhedron prism(int n);
Polyhedron dodecahedron();

} // namespace rap
