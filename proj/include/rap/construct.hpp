#pragma once

#include "rap/circuits.hpp"
#include "rap/polyhedron.hpp"

#include <vector>

namespace rap {

/// Edge correspondence between the glued faces. Each face is read from its
/// lowest-id edge, u_0 u_1 ... in P1 and w_0 w_1 ... in P2. Without flip,
/// u_i is glued to w_(offset - i); with flip, P2 is mirrored first and u_i
/// is glued to w_(offset + i). Indices mod k; all 2k gluings are reachable.
struct Gluing {
    int offset = 0;
    bool flip = false;
};

struct Composition {
    Polyhedron polyhedron;
    /// Made of the merged transverse edges at the former vertices of the
    /// glued face; crosses the k merged faces.
    PrismaticCircuit circuit;
    /// Face of P1 (resp. P2) -> face of the composition; -1 for the glued face.
    std::vector<FaceId> first_faces;
    std::vector<FaceId> second_faces;
};

/// Cycle of face f starting at the tail of its lowest-id edge.
std::vector<VertexId> face_from_lowest_edge(const Polyhedron& p, FaceId f);

/// Glues P1 and P2 along F1 and F2, deletes the glued edges and demotes their
/// endpoints. Throws NoSuchFace, FaceSizeMismatch, NotAdmissible.
Composition compose(const Polyhedron& p1, FaceId f1, const Polyhedron& p2, FaceId f2,
                    Gluing gluing = {});

/// P united with its mirror image across face f. Built directly (not via
/// compose). Throws NoSuchFace, NotAdmissible.
Polyhedron double_across(const Polyhedron& p, FaceId f);

} // namespace rap
