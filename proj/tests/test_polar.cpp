#include "rap/corpus.hpp"
#include "rap/error.hpp"
#include "rap/lobell.hpp"
#include "rap/polar.hpp"
#include "rap/reduction.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace rap;
using std::numbers::pi;

namespace {

template <class F>
ErrorKind kind_of(F&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalError;
}

EdgeId first_very_good(const Polyhedron& p)
{
    for (const auto& c : classify_edges(p))
        if (c.status == EdgeStatus::VeryGood)
            return c.edge;
    return -1;
}

} // namespace

TEST_CASE("undeformed cone angles are k pi/2")
{
    for (const auto& [name, p] : standard_corpus()) {
        CAPTURE(name);
        const ConeAngleReport r = cone_angles(p);
        CHECK(r.all_exceed_2pi);
        CHECK_FALSE(r.deformation.has_value());
        REQUIRE(r.faces.size() == static_cast<std::size_t>(p.num_faces()));
        for (const auto& f : r.faces) {
            CHECK(f.cone_angle == p.face_size(f.face) * pi / 2);
            CHECK(f.cone_angle > 2 * pi);
            CHECK_FALSE(f.touched);
        }
    }
    CHECK(cone_angles(build_lobell(5)).faces[3].cone_angle == doctest::Approx(5 * pi / 2));
}

TEST_CASE("deformed cone angles")
{
    for (const auto& [name, p] : standard_corpus()) {
        CAPTURE(name);
        for (const auto& c : classify_edges(p)) {
            if (c.status != EdgeStatus::VeryGood)
                continue;
            for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) {
                const ConeAngleReport r = cone_angles(p, Deformation{c.edge, t});
                CHECK(r.all_exceed_2pi);
                int touched = 0;
                for (const auto& f : r.faces) {
                    CHECK(f.cone_angle > 2 * pi);
                    if (f.touched) {
                        ++touched;
                        const double theta = (1 - t) * pi / 2 + t * pi;
                        CHECK(std::abs(f.cone_angle - ((f.size - 1) * pi / 2 + pi - theta)) < 1e-12);
                        CHECK((f.face == c.connected[0] || f.face == c.connected[1]));
                    } else {
                        CHECK(f.cone_angle == f.size * pi / 2);
                    }
                }
                CHECK(touched == 2);
            }
        }
    }
}

TEST_CASE("hexagon touching the edge at t = 1/2 gets 11 pi/4")
{
    const auto corpus = standard_corpus();
    const Polyhedron& p = corpus[5].polyhedron;
    const EdgeId e = first_very_good(p);
    REQUIRE(e >= 0);
    bool seen = false;
    for (const auto& f : cone_angles(p, Deformation{e, 0.5}).faces)
        if (f.touched && f.size == 6) {
            CHECK(f.cone_angle == doctest::Approx(11 * pi / 4).epsilon(1e-14));
            seen = true;
        }
    CHECK(seen);
}

TEST_CASE("monotone in t and continuous at 0")
{
    const auto corpus = standard_corpus();
    for (const auto& [name, p] : corpus) {
        const EdgeId e = first_very_good(p);
        if (e < 0)
            continue;
        CAPTURE(name);
        const ConeAngleReport base = cone_angles(p);
        double prev = INFINITY;
        for (int i = 1; i < 100; ++i) {
            const double t = i / 100.0;
            const auto r = cone_angles(p, Deformation{e, t});
            for (const auto& f : r.faces)
                if (f.touched) {
                    CHECK(f.cone_angle <= prev + 1e-15);
                    prev = f.cone_angle;
                    break;
                }
        }
        // the gap to the undeformed value is exactly t pi/2
        for (double t : {1e-9, 1e-6, 1e-3}) {
            const auto r = cone_angles(p, Deformation{e, t});
            for (std::size_t i = 0; i < r.faces.size(); ++i) {
                const double gap = base.faces[i].cone_angle - r.faces[i].cone_angle;
                CHECK(std::abs(gap - (r.faces[i].touched ? t * pi / 2 : 0.0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("preconditions")
{
    const Polyhedron l5 = build_lobell(5);
    CHECK(kind_of([&] { cone_angles(l5, Deformation{0, 0.5}); }) == ErrorKind::NotVeryGood);
    CHECK(kind_of([&] { cone_angles(l5, Deformation{99, 0.5}); }) == ErrorKind::NoSuchEdge);
    CHECK(kind_of([] { cone_angles(cube()); }) == ErrorKind::NotAdmissible);
    const auto corpus = standard_corpus();
    const Polyhedron& p = corpus[5].polyhedron;
    const EdgeId e = first_very_good(p);
    REQUIRE(e >= 0);
    for (double t : {0.0, 1.0, -0.2, 1.5, std::nan("")})
        CHECK(kind_of([&] { cone_angles(p, Deformation{e, t}); }) == ErrorKind::TOutOfRange);
}
