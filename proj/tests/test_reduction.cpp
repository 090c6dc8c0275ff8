#include "oracles.hpp"

#include "rap/canonical.hpp"
#include "rap/construct.hpp"
#include "rap/corpus.hpp"
#include "rap/error.hpp"
#include "rap/io.hpp"
#include "rap/lobell.hpp"
#include "rap/reduction.hpp"

#include <doctest.h>

#include <cmath>

using namespace rap;

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

const Polyhedron& corpus_entry(const std::string& name)
{
    static const std::vector<CorpusEntry> corpus = standard_corpus();
    for (const auto& e : corpus)
        if (e.name == name)
            return e.polyhedron;
    FAIL("no corpus entry " << name);
    throw;
}

// Components of a trace in creation order, rebuilt from the recorded moves.
std::vector<Polyhedron> rebuild(const ReductionTrace& t)
{
    std::vector<Polyhedron> comps{Polyhedron::build(t.input)};
    for (const auto& s : t.steps) {
        const Polyhedron cur = comps[s.component];
        if (s.move == MoveKind::Surgery) {
            comps.push_back(edge_surgery(cur, s.edge).polyhedron);
        } else {
            auto [a, b] = decompose(cur, circuit_from_edges(cur, s.circuit_edges));
            comps.push_back(std::move(a));
            comps.push_back(std::move(b));
        }
    }
    return comps;
}

} // namespace

TEST_CASE("edge classes")
{
    for (int n = 5; n <= 10; ++n) {
        const auto ec = classify_edges(build_lobell(n));
        CHECK(std::none_of(ec.begin(), ec.end(), [](const EdgeClass& c) { return c.status != EdgeStatus::Plain; }));
    }
    const Polyhedron d = corpus_entry("double L(6)#0");
    const auto ec = classify_edges(d);
    int very_good = 0;
    for (const auto& c : ec) {
        const Edge& e = d.edge(c.edge);
        CHECK(c.containing == e.faces);
        CHECK(d.face_has_vertex(c.connected[0], e.u));
        CHECK(d.face_has_vertex(c.connected[1], e.v));
        CHECK_FALSE(d.adjacent(c.connected[0], c.connected[1]));
        if (c.status != EdgeStatus::Plain) {
            CHECK(d.face_size(c.connected[0]) >= 6);
            CHECK(d.face_size(c.connected[1]) >= 6);
        }
        very_good += c.status == EdgeStatus::VeryGood;
    }
    CHECK(very_good > 0);
    CHECK(kind_of([] { classify_edges(cube()); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("very good edges are off every prismatic 5-circuit")
{
    for (const auto& [name, p] : standard_corpus()) {
        CAPTURE(name);
        std::set<EdgeId> on5;
        for (const auto& c : prismatic_circuits(p, 5))
            on5.insert(c.crossed_edges.begin(), c.crossed_edges.end());
        for (const auto& c : classify_edges(p))
            if (c.status == EdgeStatus::VeryGood)
                CHECK(on5.count(c.edge) == 0);
            else if (c.status == EdgeStatus::Good)
                CHECK(on5.count(c.edge) == 1);
    }
}

TEST_CASE("surgery on every very good edge of the corpus")
{
    int performed = 0;
    for (const auto& [name, p] : standard_corpus()) {
        CAPTURE(name);
        for (const auto& c : classify_edges(p)) {
            if (c.status != EdgeStatus::VeryGood)
                continue;
            const SurgeryResult r = edge_surgery(p, c.edge);
            ++performed;
            CHECK(r.verdict.admissible);
            CHECK(r.status == EdgeStatus::VeryGood);
            CHECK(r.polyhedron.num_vertices() == p.num_vertices() - 2);
            CHECK(r.polyhedron.num_edges() == p.num_edges() - 3);
            CHECK(r.polyhedron.num_faces() == p.num_faces() - 1);
            // face sizes: a + b - 4 for the merged face, -1 for each connected face
            std::map<int, int> expect = counts(p).face_sizes;
            auto move = [&](int from, int to) {
                if (--expect[from] == 0)
                    expect.erase(from);
                ++expect[to];
            };
            const int a = p.face_size(c.containing[0]);
            const int b = p.face_size(c.containing[1]);
            if (--expect[a] == 0)
                expect.erase(a);
            move(b, a + b - 4);
            move(p.face_size(c.connected[0]), p.face_size(c.connected[0]) - 1);
            move(p.face_size(c.connected[1]), p.face_size(c.connected[1]) - 1);
            CHECK(counts(r.polyhedron).face_sizes == expect);
        }
    }
    CHECK(performed >= 20);
}

TEST_CASE("surgery preconditions")
{
    const Polyhedron l5 = build_lobell(5);
    CHECK(kind_of([&] { edge_surgery(l5, 0); }) == ErrorKind::NotVeryGood);
    CHECK(kind_of([&] { edge_surgery(l5, 30); }) == ErrorKind::NoSuchEdge);
    CHECK(kind_of([&] { edge_surgery(cube(), 0); }) == ErrorKind::NotAdmissible);

    // forced on a plain edge of L(6): a pentagon drops to a quadrilateral
    const Polyhedron l6 = build_lobell(6);
    const SurgeryResult r = edge_surgery(l6, 0, true);
    CHECK(r.status == EdgeStatus::Plain);
    CHECK_FALSE(r.verdict.admissible);
    CHECK(r.polyhedron.num_faces() == 13);
}

TEST_CASE("good edges on a prismatic 5-circuit are refused")
{
    bool seen = false;
    for (const auto& [name, p] : standard_corpus())
        for (const auto& c : classify_edges(p))
            if (c.status == EdgeStatus::Good) {
                seen = true;
                CHECK(kind_of([&] { edge_surgery(p, c.edge); }) == ErrorKind::NotVeryGood);
                CHECK(edge_surgery(p, c.edge, true).status == EdgeStatus::Good);
            }
    CHECK(seen);
}

TEST_CASE("decomposition inverts composition")
{
    for (int n1 = 5; n1 <= 7; ++n1)
        for (int n2 = 5; n2 <= 7; ++n2) {
            const Polyhedron p1 = build_lobell(n1);
            const Polyhedron p2 = build_lobell(n2);
            for (int offset = 0; offset < 5; ++offset)
                for (bool flip : {false, true}) {
                    CAPTURE(n1);
                    CAPTURE(n2);
                    CAPTURE(offset);
                    CAPTURE(flip);
                    const Composition c = compose(p1, 1, p2, 1, {offset, flip});
                    const auto [a, b] = decompose(c.polyhedron, c.circuit);
                    const bool straight = isomorphic(a, p1) && isomorphic(b, p2);
                    const bool crossed = isomorphic(a, p2) && isomorphic(b, p1);
                    CHECK((straight || crossed));
                    CHECK(a.num_faces() + b.num_faces() == c.polyhedron.num_faces() + 2 + 5);
                }
        }
}

TEST_CASE("decomposition along a hexagonal circuit")
{
    const Polyhedron l6 = build_lobell(6);
    const Composition c = compose(l6, 0, l6, 13, {2, false});
    const auto [a, b] = decompose(c.polyhedron, c.circuit);
    CHECK(isomorphic(a, l6));
    CHECK(isomorphic(b, l6));
}

TEST_CASE("decomposition preconditions")
{
    const Polyhedron l5 = build_lobell(5);
    const PrismaticCircuit spoke = make_circuit(l5, l5.face_neighbors(0));
    CHECK(kind_of([&] { decompose(l5, spoke); }) == ErrorKind::HasFlat);

    const Polyhedron c = cube();
    CHECK(kind_of([&] { decompose(c, prismatic_circuits(c, 4)[0]); }) == ErrorKind::CircuitTooShort);

    // the five edges leaving a two-edge path: a 5-circuit whose edges share endpoints
    const Edge& e = l5.edge(0);
    const VertexId mid = e.v;
    EdgeId second = -1;
    for (EdgeId f : l5.vertex_edges(mid))
        if (f != 0)
            second = f;
    std::set<VertexId> path{e.u, e.v, l5.edge(second).other(mid)};
    std::vector<EdgeId> leaving;
    for (VertexId x : path)
        for (EdgeId f : l5.vertex_edges(x))
            if (f != 0 && f != second)
                leaving.push_back(f);
    REQUIRE(leaving.size() == 5);
    const PrismaticCircuit bad = circuit_from_edges(l5, leaving);
    CHECK_FALSE(is_prismatic(l5, bad));
    CHECK(kind_of([&] { decompose(l5, bad); }) == ErrorKind::InvalidCircuit);
}

TEST_CASE("every flat-free prismatic 5-circuit of the corpus splits into admissible halves")
{
    int splits = 0;
    for (const auto& [name, p] : standard_corpus()) {
        CAPTURE(name);
        for (const auto& c : prismatic_circuits(p, 5)) {
            if (side_profile(p, c).has_flat())
                continue;
            const auto [a, b] = decompose(p, c);
            CHECK(admissible(a).admissible);
            CHECK(admissible(b).admissible);
            CHECK(a.num_faces() + b.num_faces() == p.num_faces() + 7);
            ++splits;
        }
    }
    CHECK(splits >= 10);
}

TEST_CASE("find_move")
{
    for (int n = 5; n <= 10; ++n) {
        const Move m = find_move(build_lobell(n));
        CHECK(m.kind == MoveKind::Terminal);
        CHECK(m.lobell == n);
    }
    const Polyhedron l5 = build_lobell(5);
    const Composition c = compose(l5, 0, l5, 0);
    const Move m = find_move(c.polyhedron);
    REQUIRE(m.kind == MoveKind::Decompose);
    CHECK(m.circuit.key() == c.circuit.key());
    CHECK(kind_of([] { find_move(cube()); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("policies")
{
    CHECK(parse_policy("decompose-first") == Policy::DecomposeFirst);
    CHECK(parse_policy("surgery-first") == Policy::SurgeryFirst);
    CHECK(to_string(Policy::SurgeryFirst) == "surgery-first");
    CHECK(kind_of([] { parse_policy("greedy"); }) == ErrorKind::ParseError);
    // the terminal multiset depends on the policy
    const Polyhedron& d = corpus_entry("double L(6)#1");
    CHECK(reduce(d, Policy::DecomposeFirst).terminal == std::vector<int>{6, 6});
    CHECK(reduce(d, Policy::SurgeryFirst).terminal == std::vector<int>{5, 5});
}

TEST_CASE("reduction of two glued dodecahedra")
{
    const Polyhedron l5 = build_lobell(5);
    const ReductionTrace t = reduce(compose(l5, 0, l5, 0).polyhedron);
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].move == MoveKind::Decompose);
    CHECK(t.steps[0].children == std::vector<int>{1, 2});
    CHECK_FALSE(t.steps[0].strict);
    CHECK(t.terminal == std::vector<int>{5, 5});
    CHECK(std::abs(t.bound.value - 8.61241520146) < 1e-10);
    CHECK(t.complete);
}

TEST_CASE("Lobell polyhedra reduce in zero steps")
{
    for (int n = 5; n <= 10; ++n) {
        const ReductionTrace t = reduce(build_lobell(n));
        CHECK(t.steps.empty());
        CHECK(t.terminal == std::vector<int>{n});
        CHECK(t.bound.value == lobell_volume(n).value);
    }
}

TEST_CASE("double of L(6) across a hexagon peels off six edges")
{
    const ReductionTrace t = reduce(corpus_entry("double L(6)#0"));
    CHECK(t.steps.size() == 6);
    for (const auto& s : t.steps) {
        CHECK(s.move == MoveKind::Surgery);
        CHECK(s.strict);
    }
    CHECK(t.terminal == std::vector<int>{6});
}

TEST_CASE("corpus reductions: measure decreases, components keep 12 pentagons, traces replay")
{
    for (const auto& [name, p] : standard_corpus())
        for (Policy policy : {Policy::DecomposeFirst, Policy::SurgeryFirst}) {
            CAPTURE(name);
            CAPTURE(to_string(policy));
            const ReductionTrace t = reduce(p, policy);
            const auto comps = rebuild(t);
            std::vector<bool> live(comps.size(), false);
            live[0] = true;
            auto measure = [&] {
                std::vector<Polyhedron> alive;
                for (std::size_t i = 0; i < comps.size(); ++i)
                    if (live[i])
                        alive.push_back(comps[i]);
                return reduction_measure(alive);
            };
            int m = measure();
            for (const auto& s : t.steps) {
                live[s.component] = false;
                for (int c : s.children)
                    live[c] = true;
                const int next = measure();
                CHECK(next < m);
                m = next;
            }
            for (const auto& c : comps)
                CHECK(pentagon_excess(c).pentagons >= 12);
            CHECK(replay(t) == t.terminal);
            // every component is at least a dodecahedron's worth
            CHECK(t.bound.value >= t.terminal.size() * lobell_volume(5).value - 1e-12);
        }
}

TEST_CASE("trace JSON round trip and tamper detection")
{
    const ReductionTrace t = reduce(corpus_entry("double L(6)#0"));
    const Json doc = trace_to_json(t);
    CHECK(doc["format"] == "rap-trace/1");
    const ReductionTrace back = trace_from_json(Json::parse(doc.dump()));
    CHECK(back.steps.size() == t.steps.size());
    CHECK(replay(back) == t.terminal);
    CHECK(std::abs(volume_lower_bound(back).value - t.bound.value) < 1e-12);

    ReductionTrace bad = back;
    bad.steps[2].input_hash = "0000000000000000";
    CHECK(kind_of([&] { replay(bad); }) == ErrorKind::IncompleteTrace);

    bad = back;
    bad.terminal = {5};
    CHECK(kind_of([&] { replay(bad); }) == ErrorKind::IncompleteTrace);

    bad = back;
    bad.steps.pop_back();
    CHECK(kind_of([&] { replay(bad); }) == ErrorKind::IncompleteTrace);

    bad = back;
    bad.steps[0].edge = 0; // an edge that is not very good
    CHECK(kind_of([&] { replay(bad); }) == ErrorKind::IncompleteTrace);

    bad = back;
    bad.complete = false;
    CHECK(kind_of([&] { replay(bad); }) == ErrorKind::IncompleteTrace);
    CHECK(kind_of([&] { volume_lower_bound(bad); }) == ErrorKind::IncompleteTrace);

    Json broken = doc;
    broken["steps"][0]["move"] = "twist";
    CHECK(kind_of([&] { trace_from_json(broken); }) == ErrorKind::ParseError);
    broken = doc;
    broken.erase("terminal");
    CHECK(kind_of([&] { trace_from_json(broken); }) == ErrorKind::ParseError);
}
