#pragma once

#include "rap/construct.hpp"
#include "rap/polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rap {

/// Elements of (Z/2)^2 are encoded 0..3; the group law is XOR.
inline int klein_add(int a, int b) { return a ^ b; }

struct FaceColoring {
    std::vector<int> colors; // by face id; -1 on the boundary face
    std::optional<FaceId> boundary_face;
};

struct EdgeColoring {
    std::vector<int> colors; // by edge id, 1..3; -1 on edges of the boundary face
    /// No two equally coloured edges share an endpoint.
    bool proper = false;
};

/// Proper colouring of the face adjacency graph, skipping boundary_face.
/// Backtracking over faces in id order, colours tried 0..3.
FaceColoring face_four_coloring(const Polyhedron& p, std::optional<FaceId> boundary_face = {});

/// True when adjacent coloured faces differ and every colour is in 0..3.
bool is_proper(const Polyhedron& p, const FaceColoring& fc);

/// Edge colour = sum of the colours of its two faces. Throws
/// ImproperFaceColoring, NotTrivalent.
EdgeColoring edge_coloring(const Polyhedron& p, const FaceColoring& fc);

struct GroupPresentation {
    std::string group; // "Gamma_P", "G_P", "Gamma_(P,F)", "G_(P,F)", "amalgam"
    std::vector<std::string> generators;
    /// Words like "r3*r7*r3*r7" or "a2*a5*a9^-1".
    std::vector<std::string> relators;
    /// Face (Gamma, amalgam) or edge (G) behind each generator. For the
    /// amalgam this is the face of the composition.
    std::vector<int> generator_cells;
};

/// Generators of `word` in order; throws ParseError on malformed words.
struct Letter {
    std::string generator;
    int exponent = 1; // +1 or -1
};
std::vector<Letter> parse_word(const std::string& word);

/// Every relator only uses declared generators.
bool well_formed(const GroupPresentation& g);

struct HomomorphismCertificate {
    std::vector<int> images;         // h(generator i) in (Z/2)^2, aligned with G's generators
    std::vector<int> relator_images; // h(relator j), all 0 when h is well defined
    bool relators_trivial = false;
    bool surjective = false;         // images span (Z/2)^2
    int parity_index = 2;            // [Gamma : G]
    int coloring_index = 4;          // [G : ker h]
    int cover_degree = 8;
};

struct Presentations {
    GroupPresentation gamma;
    GroupPresentation g;
    HomomorphismCertificate h;
};

/// Standard presentation of the reflection group, the Wirtinger-style
/// presentation of its even subgroup, and the colouring map G -> (Z/2)^2
/// checked relator by relator. The boundary face (from fc) drops its
/// generator, its edges and its vertices. Throws ImproperFaceColoring,
/// NotAdmissible.
Presentations presentations(const Polyhedron& p, const FaceColoring& fc);

/// Reflection group of compose(p1, f1, p2, f2, gluing) as an amalgam: s<f>
/// for faces of p1 other than f1, t<f> likewise for p2, involutions,
/// commuting squares, and s_a = t_b for the k faces merged across the glue.
/// Throws FaceSizeMismatch, NoSuchFace, NotAdmissible.
GroupPresentation amalgam_presentation(const Polyhedron& p1, FaceId f1, const Polyhedron& p2,
                                       FaceId f2, Gluing gluing = {});

/// Plain text: group name, one generator per line, one relator per line.
std::string export_presentation(const GroupPresentation& g);

} // namespace rap
