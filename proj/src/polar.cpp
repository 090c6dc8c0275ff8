#include "rap/polar.hpp"

#include "rap/circuits.hpp"
#include "rap/error.hpp"
#include "rap/reduction.hpp"
#include "rap/volumes.hpp"

#include <cmath>
#include <numbers>

namespace rap {

ConeAngleReport cone_angles(const Polyhedron& p, std::optional<Deformation> deformation)
{
    constexpr double kPi = std::numbers::pi;
    require_admissible(p, "polyhedron");
    ConeAngleReport report;
    report.deformation = deformation;

    std::array<FaceId, 2> touched{-1, -1};
    double bent = 0.0; // pi - theta_t
    if (deformation) {
        const double t = deformation->t;
        if (!(t > 0.0 && t < 1.0))
            fail(ErrorKind::TOutOfRange, "t must lie in (0,1), got " + std::to_string(t));
        if (!p.valid_edge(deformation->edge))
            fail(ErrorKind::NoSuchEdge, "no edge " + std::to_string(deformation->edge));
        const EdgeClass ec = classify_edges(p)[deformation->edge];
        if (ec.status != EdgeStatus::VeryGood)
            fail(ErrorKind::NotVeryGood, "edge " + std::to_string(ec.edge) + " is " +
                                             to_string(ec.status) + ", not very good");
        touched = ec.connected;
        bent = kPi - deformation_angle(t).radians;
    }

    report.all_exceed_2pi = true;
    for (FaceId f = 0; f < p.num_faces(); ++f) {
        FaceConeAngle a;
        a.face = f;
        a.size = p.face_size(f);
        a.touched = f == touched[0] || f == touched[1];
        a.cone_angle = a.touched ? (a.size - 1) * 0.5 * kPi + bent : a.size * 0.5 * kPi;
        report.all_exceed_2pi = report.all_exceed_2pi && a.cone_angle > 2.0 * kPi;
        report.faces.push_back(a);
    }
    ensure(report.all_exceed_2pi, "cone angle <= 2 pi on an admissible polyhedron");
    return report;
}

} // namespace rap
