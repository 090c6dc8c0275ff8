#pragma once

#include "rap/polyhedron.hpp"

#include <optional>
#include <vector>

namespace rap {

/// Unbending of edge `edge` with parameter t in (0,1); the dihedral angle
/// there is deformation_angle(t).
struct Deformation {
    EdgeId edge = -1;
    double t = 0.5;
};

struct FaceConeAngle {
    FaceId face = -1;
    int size = 0;
    double cone_angle = 0.0;
    bool touched = false; // contains exactly one endpoint of the deformed edge
};

/// Partial Rivin check: cone angles at the dual points of the spherical polar
/// (conditions on the angles only; the closed-geodesic condition is not
/// examined).
struct ConeAngleReport {
    std::vector<FaceConeAngle> faces;
    bool all_exceed_2pi = false;
    std::optional<Deformation> deformation;
};

/// k pi/2 for a k-gon; a face holding exactly one endpoint of the deformed
/// edge gets (k-1) pi/2 + pi - theta_t instead. Throws NotAdmissible,
/// NoSuchEdge, NotVeryGood, TOutOfRange.
ConeAngleReport cone_angles(const Polyhedron& p, std::optional<Deformation> deformation = {});

} // namespace rap
