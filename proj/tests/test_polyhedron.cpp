#include "oracles.hpp"

#include "rap/canonical.hpp"
#include "rap/construct.hpp"
#include "rap/corpus.hpp"
#include "rap/error.hpp"
#include "rap/io.hpp"
#include "rap/lobell.hpp"

#include <doctest.h>

using namespace rap;

namespace {

ErrorKind kind_of(const FaceList& faces)
{
    try {
        (void)Polyhedron::build(faces);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalError;
}

const FaceList kCube{{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};

} // namespace

TEST_CASE("build derives incidences of a cube")
{
    const Polyhedron p = Polyhedron::build(kCube);
    CHECK(p.num_vertices() == 8);
    CHECK(p.num_edges() == 12);
    CHECK(p.num_faces() == 6);
    CHECK(p.is_trivalent());
    // lexicographic edge ids
    CHECK(p.edge(0).u == 0);
    CHECK(p.edge(0).v == 1);
    for (EdgeId e = 1; e < p.num_edges(); ++e)
        CHECK(std::pair(p.edge(e - 1).u, p.edge(e - 1).v) < std::pair(p.edge(e).u, p.edge(e).v));
    for (const Edge& e : p.edges()) {
        CHECK(p.dart_face(e.u, e.v) == e.faces[0]);
        CHECK(p.dart_face(e.v, e.u) == e.faces[1]);
    }
    CHECK(p.shared_edge(0, 1) == std::nullopt);
    CHECK(p.adjacent(0, 2));
}

TEST_CASE("build rejects malformed complexes with the offending cell")
{
    CHECK(kind_of({{0, 1, 2}, {0, 1, 3}, {1, 3, 2}, {2, 3, 0}}) == ErrorKind::OrientationMismatch);
    CHECK(kind_of({{0, 1, 2}, {0, 3, 1}, {1, 3, 2}}) == ErrorKind::TooFewFaces);
    CHECK(kind_of({{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 4}}) == ErrorKind::EdgeNotSharedByTwoFaces);
    CHECK(kind_of({{0, 1}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}}) == ErrorKind::MalformedFace);
    CHECK(kind_of({{0, 1, 1}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}}) == ErrorKind::MalformedFace);
    CHECK(kind_of({{0, -1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}}) == ErrorKind::MalformedFace);
    // Two disjoint tetrahedra: every edge fine, Euler characteristic 4.
    FaceList two{{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}, {4, 5, 6}, {4, 7, 5}, {5, 7, 6}, {6, 7, 4}};
    CHECK(kind_of(two) == ErrorKind::EulerViolation);
    // A torus-like cell structure breaks Euler as well.
    FaceList torus;
    auto id = [](int i, int j) { return ((i + 3) % 3) * 3 + (j + 3) % 3; };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            torus.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    CHECK(kind_of(torus) == ErrorKind::EulerViolation);
}

TEST_CASE("error messages name the cell")
{
    try {
        (void)Polyhedron::build({{0, 1, 2}, {0, 1, 3}, {1, 3, 2}, {2, 3, 0}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("{0,1}") != std::string::npos);
    }
}

TEST_CASE("sparse vertex ids are relabelled monotonically")
{
    const Polyhedron p = Polyhedron::build({{10, 30, 20}, {10, 40, 30}, {30, 40, 20}, {20, 40, 10}});
    CHECK(p.num_vertices() == 4);
    CHECK(p.face(0)[0] == 0);
    CHECK(p.face(0)[1] == 2);
}

TEST_CASE("counts and pentagon excess")
{
    CHECK(counts(dodecahedron()) == Counts{20, 30, 12, {{5, 12}}});
    CHECK(counts(cube()) == Counts{8, 12, 6, {{4, 6}}});
    CHECK(counts(build_lobell(6)) == Counts{24, 36, 14, {{5, 12}, {6, 2}}});
    CHECK(counts(build_lobell(8)) == Counts{32, 48, 18, {{5, 16}, {8, 2}}});

    auto pe = pentagon_excess(dodecahedron());
    CHECK(pe.pentagons == 12);
    CHECK(pe.excess == 0);
    pe = pentagon_excess(build_lobell(6));
    CHECK(pe.pentagons == 12);
    CHECK(pe.excess == 2);
    pe = pentagon_excess(build_lobell(7));
    CHECK(pe.pentagons == 14);
    CHECK(pe.excess == 4);
    pe = pentagon_excess(build_lobell(8));
    CHECK(pe.pentagons == 16);
    CHECK(pe.excess == 6);
}

TEST_CASE("trivalent complexes satisfy e = 3v/2 and f - c = 12")
{
    auto check = [](const Polyhedron& p) {
        CHECK(2 * p.num_edges() == 3 * p.num_vertices());
        CHECK(p.num_faces() - (2 * p.num_edges() - 5 * p.num_faces()) == 12);
        CHECK(p.num_vertices() - p.num_edges() + p.num_faces() == 2);
    };
    for (const auto& [name, p] : standard_corpus()) {
        CAPTURE(name);
        check(p);
    }
    for (const auto& [name, p] : classical_solids()) {
        CAPTURE(name);
        check(p);
    }
}

TEST_CASE("pentagon_excess needs trivalence")
{
    const Polyhedron octahedron = Polyhedron::build(
        {{0, 2, 4}, {0, 4, 3}, {0, 3, 5}, {0, 5, 2}, {1, 4, 2}, {1, 3, 4}, {1, 5, 3}, {1, 2, 5}});
    CHECK_THROWS_AS(pentagon_excess(octahedron), Error);
}

TEST_CASE("canonical form is invariant under relabelling, reordering and mirroring")
{
    for (int n = 5; n <= 9; ++n) {
        const Polyhedron p = build_lobell(n);
        const CanonicalCode code = canonical_form(p);
        for (unsigned seed = 1; seed <= 4; ++seed) {
            CHECK(canonical_form(oracle::scramble(p, seed, false)) == code);
            CHECK(canonical_form(oracle::scramble(p, seed, true)) == code);
        }
        CHECK(canonical_form(p.mirrored()) == code);
    }
    CHECK(canonical_form(build_lobell(6)) != canonical_form(build_lobell(7)));
}

TEST_CASE("parallel canonical form matches the serial reference")
{
    for (const auto& [name, p] : standard_corpus()) {
        CAPTURE(name);
        CHECK(canonical_form(p) == canonical_form_serial(p));
    }
}

TEST_CASE("canonical codes agree with the brute-force isomorphism oracle")
{
    std::vector<CorpusEntry> small;
    for (auto& e : standard_corpus())
        if (e.polyhedron.num_faces() <= 20)
            small.push_back(std::move(e));
    for (auto& e : classical_solids())
        small.push_back(std::move(e));
    // scrambled copies make positive pairs across different labellings
    const std::size_t base = small.size();
    for (std::size_t i = 0; i < base; i += 2)
        small.push_back({small[i].name + " scrambled", oracle::scramble(small[i].polyhedron, 17 + i, i % 4 == 0)});
    int positives = 0;
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i + 1; j < small.size(); ++j) {
            CAPTURE(small[i].name);
            CAPTURE(small[j].name);
            const bool code_eq = canonical_form(small[i].polyhedron) == canonical_form(small[j].polyhedron);
            const bool iso = oracle::isomorphic(small[i].polyhedron, small[j].polyhedron);
            CHECK(code_eq == iso);
            positives += iso;
        }
    CHECK(positives >= 6);
}

TEST_CASE("double of L(5)")
{
    const Polyhedron l5 = build_lobell(5);
    const Polyhedron d = double_across(l5, 0);
    CHECK(counts(d) == Counts{30, 45, 17, {{5, 12}, {6, 5}}});
    CHECK(admissible(d).admissible);
    // dodecahedral symmetry: every face gives the same double
    const CanonicalCode code = canonical_form(d);
    for (FaceId f = 1; f < l5.num_faces(); ++f)
        CHECK(canonical_form(double_across(l5, f)) == code);
}

TEST_CASE("double is self-composition with the mirror gluing")
{
    for (int n : {5, 6}) {
        const Polyhedron p = build_lobell(n);
        for (FaceId f = 0; f < p.num_faces(); ++f) {
            CAPTURE(n);
            CAPTURE(f);
            CHECK(isomorphic(double_across(p, f), compose(p, f, p, f, {0, true}).polyhedron));
        }
    }
}

TEST_CASE("composition of two dodecahedra")
{
    const Polyhedron l5 = build_lobell(5);
    for (int offset = 0; offset < 5; ++offset)
        for (bool flip : {false, true}) {
            const Composition c = compose(l5, 0, l5, 0, {offset, flip});
            CHECK(counts(c.polyhedron) == Counts{30, 45, 17, {{5, 12}, {6, 5}}});
            REQUIRE(c.circuit.size() == 5);
            for (FaceId f : c.circuit.faces)
                CHECK(c.polyhedron.face_size(f) == 6);
            // crossed edges join two hexagons
            for (EdgeId e : c.circuit.crossed_edges) {
                const Edge& edge = c.polyhedron.edge(e);
                CHECK(c.polyhedron.face_size(edge.faces[0]) == 6);
                CHECK(c.polyhedron.face_size(edge.faces[1]) == 6);
            }
            CHECK(is_prismatic(c.polyhedron, c.circuit));
            CHECK(c.first_faces[0] == -1);
            CHECK(c.second_faces[0] == -1);
        }
}

TEST_CASE("composition bookkeeping")
{
    const Polyhedron l5 = build_lobell(5);
    const Polyhedron l6 = build_lobell(6);
    for (int offset = 0; offset < 6; ++offset) {
        const Composition c = compose(l6, 0, l6, 13, {offset, offset % 2 == 1});
        CHECK(c.polyhedron.num_vertices() == 24 + 24 - 12);
        CHECK(c.polyhedron.num_edges() == 36 + 36 - 18);
        CHECK(c.polyhedron.num_faces() == 14 + 14 - 2 - 6);
    }
    const Composition mixed = compose(l5, 1, l6, 1);
    CHECK(admissible(mixed.polyhedron).admissible);
    CHECK(pentagon_excess(mixed.polyhedron).pentagons >= 12);
    // merged faces: each keeps a + b - 4 edges
    for (FaceId f = 0; f < l5.num_faces(); ++f) {
        const FaceId m = mixed.first_faces[f];
        if (m < 0)
            continue;
        const auto it = std::find(mixed.second_faces.begin(), mixed.second_faces.end(), m);
        if (it == mixed.second_faces.end())
            CHECK(mixed.polyhedron.face_size(m) == l5.face_size(f));
        else
            CHECK(mixed.polyhedron.face_size(m) ==
                  l5.face_size(f) + l6.face_size(static_cast<FaceId>(it - mixed.second_faces.begin())) - 4);
    }
}

TEST_CASE("compose and double reject bad input")
{
    const Polyhedron l5 = build_lobell(5);
    const Polyhedron l6 = build_lobell(6);
    auto kind = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InternalError;
    };
    CHECK(kind([&] { compose(l5, 0, l6, 0); }) == ErrorKind::FaceSizeMismatch);
    CHECK(kind([&] { compose(l5, 0, l6, 99); }) == ErrorKind::NoSuchFace);
    CHECK(kind([&] { compose(cube(), 0, cube(), 0); }) == ErrorKind::NotAdmissible);
    CHECK(kind([&] { double_across(prism(5), 0); }) == ErrorKind::NotAdmissible);
    CHECK(kind([&] { double_across(l5, -1); }) == ErrorKind::NoSuchFace);
}

TEST_CASE("different offsets need not give isomorphic compositions")
{
    // L(6) glued to itself along a pentagon: record how many classes appear.
    const Polyhedron l6 = build_lobell(6);
    std::vector<Polyhedron> all;
    std::set<CanonicalCode> classes;
    for (int offset = 0; offset < 5; ++offset)
        for (bool flip : {false, true}) {
            all.push_back(compose(l6, 1, l6, 1, {offset, flip}).polyhedron);
            classes.insert(canonical_form(all.back()));
        }
    // class count by the oracle alone
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (std::none_of(reps.begin(), reps.end(), [&](std::size_t r) { return oracle::isomorphic(all[r], all[i]); }))
            reps.push_back(i);
    CHECK(classes.size() == reps.size());
    CHECK(reps.size() > 1);
}

TEST_CASE("JSON round trip preserves the isomorphism class")
{
    for (const auto& [name, p] : standard_corpus()) {
        const Json doc = polyhedron_to_json(p, name);
        CHECK(doc["format"] == "rap-polyhedron/1");
        for (const auto& f : doc["faces"]) {
            const auto cycle = f.get<std::vector<int>>();
            CHECK(cycle.front() == *std::min_element(cycle.begin(), cycle.end()));
        }
        const Polyhedron back = polyhedron_from_json(Json::parse(doc.dump()));
        CHECK(canonical_form(back) == canonical_form(p));
        CHECK(back.faces().size() == p.faces().size());
    }
    CHECK_THROWS_AS(polyhedron_from_json(Json::parse(R"({"format":"other","faces":[]})")), Error);
    CHECK_THROWS_AS(polyhedron_from_json(Json::parse(R"({"format":"rap-polyhedron/1"})")), Error);
    CHECK_THROWS_AS(polyhedron_from_json(Json::parse(R"({"format":"rap-polyhedron/1","faces":[[0,"x"]]})")),
                    Error);
}
