#pragma once

#include "rap/circuits.hpp"
#include "rap/polyhedron.hpp"
#include "rap/volumes.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace rap {

enum class EdgeStatus { Plain, Good, VeryGood };

std::string to_string(EdgeStatus s);

struct EdgeClass {
    EdgeId edge = -1;
    std::array<FaceId, 2> containing{-1, -1}; // faces[0] / faces[1] of the edge
    std::array<FaceId, 2> connected{-1, -1};  // third face at edge.u / edge.v
    EdgeStatus status = EdgeStatus::Plain;
};

/// Indexed by edge id.
using EdgeClassification = std::vector<EdgeClass>;

/// Throws NotAdmissible.
EdgeClassification classify_edges(const Polyhedron& p);

struct SurgeryResult {
    Polyhedron polyhedron;
    AdmissibilityVerdict verdict; // of the result
    EdgeStatus status;            // of the edge in the input
};

/// Deletes edge e and demotes its endpoints. The two containing faces merge
/// (a + b - 4 edges); each connected face loses an edge. Without `force` the
/// edge must be very good and the result is guaranteed admissible; with it the
/// input only needs trivalent endpoints and the verdict is just reported.
/// Throws NoSuchEdge, NotVeryGood, NotAdmissible, or a build error when a
/// forced surgery does not even produce a polyhedron.
SurgeryResult edge_surgery(const Polyhedron& p, EdgeId e, bool force = false);

/// Splits p along c. The first half holds side 0 of the circuit (see
/// side_profile), the second half side 1; each is capped with a k-gon whose
/// vertices are the cut points of the crossed edges.
/// Throws CircuitTooShort (k < 5), InvalidCircuit (not prismatic), HasFlat,
/// DecompositionInvalid (k >= 6 and a half is not admissible).
std::pair<Polyhedron, Polyhedron> decompose(const Polyhedron& p, const PrismaticCircuit& c);

enum class Policy { DecomposeFirst, SurgeryFirst };

std::string to_string(Policy p);
/// Throws ParseError.
Policy parse_policy(const std::string& s);

enum class MoveKind { Terminal, Decompose, Surgery, TheoremViolation };

std::string to_string(MoveKind m);

struct Move {
    MoveKind kind = MoveKind::TheoremViolation;
    int lobell = 0;           // Terminal
    PrismaticCircuit circuit; // Decompose
    EdgeId edge = -1;         // Surgery
};

/// Largest circuit size tried by the decomposition fallback. A decomposition
/// along a k-circuit changes sum(f - 12) by k - 10, so only k <= 9 shrinks it.
inline constexpr int kMaxFallbackCircuit = 9;

/// Throws NotAdmissible.
Move find_move(const Polyhedron& p, Policy policy = Policy::DecomposeFirst);

struct TraceStep {
    int component = -1;
    MoveKind move = MoveKind::Surgery;
    EdgeId edge = -1;                  // surgery
    std::vector<EdgeId> circuit_edges; // decompose: crossed edges, circuit order
    std::vector<FaceId> circuit_faces;
    std::vector<int> children;
    std::string input_hash;
    std::vector<std::string> output_hashes;
    /// Surgery strictly loses volume; a decomposition splits it with a
    /// non-strict inequality.
    bool strict = false;
};

struct ReductionTrace {
    Policy policy = Policy::DecomposeFirst;
    FaceList input;
    std::vector<TraceStep> steps;
    /// Löbell index of every terminal component, sorted.
    std::vector<int> terminal;
    Volume bound;
    bool complete = false;
};

/// Reduces p to Löbell polyhedra. Components are processed in creation order;
/// children get the next free indices. Throws NotAdmissible, TheoremViolation.
ReductionTrace reduce(const Polyhedron& p, Policy policy = Policy::DecomposeFirst);

/// Sum of Löbell volumes over the terminal multiset. Throws IncompleteTrace.
Volume volume_lower_bound(const ReductionTrace& trace);

/// Re-runs the recorded moves on the recorded input, checking every hash.
/// Returns the terminal multiset. Throws IncompleteTrace on any mismatch.
std::vector<int> replay(const ReductionTrace& trace);

/// sum over components of (f - 12); the termination measure of reduce.
int reduction_measure(const std::vector<Polyhedron>& components);

} // namespace rap
