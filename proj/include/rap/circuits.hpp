#pragma once

#include "rap/polyhedron.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rap {

/// Closed dual path through distinct faces. crossed_edges[i] is the edge
/// between faces[i-1] and faces[i] (indices mod k).
///
/// Normal form: faces[0] is the smallest face id and faces[1] < faces[k-1].
/// Side 0 of the circuit is the side on the right when walking
/// faces[0] -> faces[1] -> ... seen from outside.
struct PrismaticCircuit {
    std::vector<FaceId> faces;
    std::vector<EdgeId> crossed_edges;

    int size() const { return static_cast<int>(faces.size()); }
    /// Sorted crossed edge ids; the identity of the circuit.
    std::vector<EdgeId> key() const;
    bool operator==(const PrismaticCircuit&) const = default;
};

/// Brings a cyclic face sequence to normal form and derives crossed edges.
/// Throws InvalidCircuit unless the faces are distinct, k >= 3, and
/// consecutive faces are adjacent.
PrismaticCircuit make_circuit(const Polyhedron& p, std::vector<FaceId> cycle);

/// The circuit crossing exactly the given edges. Throws InvalidCircuit when
/// the edges do not chain into a single cycle of distinct faces.
PrismaticCircuit circuit_from_edges(const Polyhedron& p, std::vector<EdgeId> edges);

/// Crossed edges have pairwise distinct endpoints.
bool is_prismatic(const Polyhedron& p, const PrismaticCircuit& c);

/// Every prismatic k-circuit, ordered by key(). Search is split over the
/// starting face and runs in parallel when OpenMP is available.
std::vector<PrismaticCircuit> prismatic_circuits(const Polyhedron& p, int k);

/// Single-threaded reference for prismatic_circuits; same output.
std::vector<PrismaticCircuit> prismatic_circuits_serial(const Polyhedron& p, int k);

/// One crossed face seen from both sides of the circuit.
struct FaceSides {
    FaceId face = -1;
    // Boundary vertices of the face strictly on each side, in face order,
    // from the endpoint of the entering edge to the endpoint of the leaving one.
    std::array<std::vector<VertexId>, 2> arc;
    std::array<int, 2> arc_edges{0, 0};

    bool flat(int side) const { return arc_edges[side] == 1; }
    bool roof(int side) const { return arc_edges[side] == 2; }
};

struct SideProfile {
    std::vector<FaceSides> faces; // aligned with circuit.faces

    bool has_flat() const;
    int flat_count(int side) const;
    int roof_count(int side) const;
};

SideProfile side_profile(const Polyhedron& p, const PrismaticCircuit& c);

enum class AdmissibilityFailure { None, NotTrivalent, PrismaticCircuit, ExcludedType };

struct AdmissibilityVerdict {
    bool admissible = false;
    AdmissibilityFailure failure = AdmissibilityFailure::None;
    std::optional<VertexId> vertex;           // NotTrivalent
    std::optional<PrismaticCircuit> circuit;  // PrismaticCircuit
    std::string excluded_type;                // ExcludedType

    /// One-line human-readable witness.
    std::string describe(const Polyhedron& p) const;
};

/// Right-angled hyperbolic admissibility: trivalent, no prismatic 3- or
/// 4-circuit, not a tetrahedron or triangular prism. A YES verdict also
/// asserts every face has >= 5 edges and there are >= 12 pentagons.
AdmissibilityVerdict admissible(const Polyhedron& p);

/// Throws NotAdmissible with the witness unless p is admissible.
void require_admissible(const Polyhedron& p, const std::string& what);

} // namespace rap
