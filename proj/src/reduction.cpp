#include "rap/reduction.hpp"

#include "rap/canonical.hpp"
#include "rap/error.hpp"
#include "rap/lobell.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace rap {

namespace {

std::vector<VertexId> open_path(const Polyhedron& p, FaceId g, VertexId after, VertexId before)
{
    auto cycle = p.face(g);
    const int n = static_cast<int>(cycle.size());
    std::vector<VertexId> out;
    for (int j = (p.position_in_face(g, after) + 1) % n; cycle[j] != before; j = (j + 1) % n)
        out.push_back(cycle[j]);
    return out;
}

FaceId third_face(const Polyhedron& p, VertexId x, const Edge& e)
{
    for (FaceId f : p.vertex_faces(x))
        if (f != e.faces[0] && f != e.faces[1])
            return f;
    fail(ErrorKind::InternalError, "vertex " + std::to_string(x) + " has no third face");
}

std::string hash_of(const Polyhedron& p) { return canonical_form(p).digest(); }

} // namespace

std::string to_string(EdgeStatus s)
{
    switch (s) {
    case EdgeStatus::Plain:
        return "plain";
    case EdgeStatus::Good:
        return "good";
    case EdgeStatus::VeryGood:
        return "very_good";
    }
    return "?";
}

std::string to_string(Policy p)
{
    return p == Policy::DecomposeFirst ? "decompose-first" : "surgery-first";
}

Policy parse_policy(const std::string& s)
{
    if (s == "decompose-first")
        return Policy::DecomposeFirst;
    if (s == "surgery-first")
        return Policy::SurgeryFirst;
    fail(ErrorKind::ParseError, "unknown policy '" + s + "'");
}

std::string to_string(MoveKind m)
{
    switch (m) {
    case MoveKind::Terminal:
        return "terminal";
    case MoveKind::Decompose:
        return "decompose";
    case MoveKind::Surgery:
        return "surgery";
    case MoveKind::TheoremViolation:
        return "theorem-violation";
    }
    return "?";
}

EdgeClassification classify_edges(const Polyhedron& p)
{
    require_admissible(p, "polyhedron");
    std::set<EdgeId> on_five;
    for (const auto& c : prismatic_circuits(p, 5))
        on_five.insert(c.crossed_edges.begin(), c.crossed_edges.end());

    EdgeClassification out(p.num_edges());
    for (EdgeId e = 0; e < p.num_edges(); ++e) {
        const Edge& edge = p.edge(e);
        EdgeClass& ec = out[e];
        ec.edge = e;
        ec.containing = edge.faces;
        ec.connected = {third_face(p, edge.u, edge), third_face(p, edge.v, edge)};
        ensure(!p.adjacent(ec.connected[0], ec.connected[1]),
               "edge " + std::to_string(e) + " connects adjacent faces");
        const bool good = p.face_size(ec.connected[0]) >= 6 && p.face_size(ec.connected[1]) >= 6;
        if (good)
            ec.status = on_five.count(e) ? EdgeStatus::Good : EdgeStatus::VeryGood;
    }
    return out;
}

SurgeryResult edge_surgery(const Polyhedron& p, EdgeId e, bool force)
{
    if (!p.valid_edge(e))
        fail(ErrorKind::NoSuchEdge, "no edge " + std::to_string(e));
    const Edge& edge = p.edge(e);
    EdgeStatus status = EdgeStatus::Plain;
    if (!force) {
        status = classify_edges(p)[e].status;
        if (status != EdgeStatus::VeryGood)
            fail(ErrorKind::NotVeryGood, "edge " + std::to_string(e) + " is " + to_string(status) +
                                             ", not very good");
    } else {
        for (VertexId x : {edge.u, edge.v})
            if (p.degree(x) != 3)
                fail(ErrorKind::NotTrivalent, "endpoint " + std::to_string(x) + " of edge " +
                                                  std::to_string(e) + " is not trivalent");
        if (admissible(p).admissible)
            status = classify_edges(p)[e].status;
    }

    const VertexId u = edge.u;
    const VertexId w = edge.v;
    const FaceId a = edge.faces[0]; // traverses u -> w
    const FaceId b = edge.faces[1]; // traverses w -> u
    const FaceId c = third_face(p, u, edge);
    const FaceId d = third_face(p, w, edge);

    // a = (.., x, u, w, y, ..), b = (.., y', w, u, x', ..): merged = y..x x'..y'
    std::vector<VertexId> merged = open_path(p, a, w, u);
    for (VertexId x : open_path(p, b, u, w))
        merged.push_back(x);

    FaceList faces;
    for (FaceId g = 0; g < p.num_faces(); ++g) {
        if (g == a) {
            faces.push_back(merged);
        } else if (g == b) {
            continue;
        } else if (g == c || g == d) {
            std::vector<VertexId> cycle;
            for (VertexId x : p.face(g))
                if (x != u && x != w)
                    cycle.push_back(x);
            faces.push_back(std::move(cycle));
        } else {
            faces.emplace_back(p.face(g).begin(), p.face(g).end());
        }
    }
    Polyhedron out = Polyhedron::build(std::move(faces));
    AdmissibilityVerdict verdict = admissible(out);
    if (!force)
        ensure(verdict.admissible, "surgery on a very good edge lost admissibility: " +
                                       verdict.describe(out));
    return {std::move(out), std::move(verdict), status};
}

std::pair<Polyhedron, Polyhedron> decompose(const Polyhedron& p, const PrismaticCircuit& c)
{
    const int k = c.size();
    if (k < 5)
        fail(ErrorKind::CircuitTooShort,
             "decomposition needs a circuit of length >= 5, got " + std::to_string(k));
    if (!is_prismatic(p, c))
        fail(ErrorKind::InvalidCircuit, "circuit is not prismatic");
    const SideProfile profile = side_profile(p, c);
    for (int i = 0; i < k; ++i)
        for (int s = 0; s < 2; ++s)
            if (profile.faces[i].flat(s))
                fail(ErrorKind::HasFlat, "face " + std::to_string(c.faces[i]) + " has a flat on side " +
                                             std::to_string(s));

    // Side of every vertex: seed with the arcs, then flood without crossing c.
    std::vector<int> side(p.num_vertices(), -1);
    std::deque<VertexId> queue;
    for (const auto& fs : profile.faces)
        for (int s = 0; s < 2; ++s)
            for (VertexId x : fs.arc[s]) {
                ensure(side[x] < 0 || side[x] == s, "vertex on both sides of a circuit");
                if (side[x] < 0) {
                    side[x] = s;
                    queue.push_back(x);
                }
            }
    const std::set<EdgeId> crossed(c.crossed_edges.begin(), c.crossed_edges.end());
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (EdgeId e : p.vertex_edges(x)) {
            if (crossed.count(e))
                continue;
            VertexId y = p.edge(e).other(x);
            ensure(side[y] < 0 || side[y] == side[x], "circuit does not separate");
            if (side[y] < 0) {
                side[y] = side[x];
                queue.push_back(y);
            }
        }
    }

    std::vector<int> slot(p.num_faces(), -1);
    for (int i = 0; i < k; ++i)
        slot[c.faces[i]] = i;
    const int base = p.num_vertices();
    auto cut = [base, k](int i) { return base + ((i % k) + k) % k; };

    std::array<FaceList, 2> halves;
    for (FaceId g = 0; g < p.num_faces(); ++g) {
        if (slot[g] < 0) {
            const int s = side[p.face(g)[0]];
            for (VertexId x : p.face(g))
                ensure(side[x] == s, "uncrossed face straddles the circuit");
            halves[s].emplace_back(p.face(g).begin(), p.face(g).end());
            continue;
        }
        const int i = slot[g];
        const auto& fs = profile.faces[i];
        std::vector<VertexId> lower = fs.arc[0];
        lower.push_back(cut(i + 1));
        lower.push_back(cut(i));
        halves[0].push_back(std::move(lower));
        std::vector<VertexId> upper = fs.arc[1];
        upper.push_back(cut(i));
        upper.push_back(cut(i + 1));
        halves[1].push_back(std::move(upper));
    }
    std::vector<VertexId> cap;
    for (int i = 0; i < k; ++i)
        cap.push_back(cut(i));
    halves[0].push_back(cap);
    std::reverse(cap.begin(), cap.end());
    halves[1].push_back(cap);

    Polyhedron first = Polyhedron::build(std::move(halves[0]));
    Polyhedron second = Polyhedron::build(std::move(halves[1]));
    const bool guaranteed = k == 5 && admissible(p).admissible;
    for (const Polyhedron* half : {&first, &second}) {
        auto verdict = admissible(*half);
        if (verdict.admissible)
            continue;
        ensure(!guaranteed, "flat-free 5-circuit split into an inadmissible half: " +
                                verdict.describe(*half));
        fail(ErrorKind::DecompositionInvalid, std::string(half == &first ? "first" : "second") +
                                                  " half is not admissible: " +
                                                  verdict.describe(*half));
    }
    return {std::move(first), std::move(second)};
}

Move find_move(const Polyhedron& p, Policy policy)
{
    require_admissible(p, "polyhedron");
    Move move;
    if (auto n = recognize_lobell(p)) {
        move.kind = MoveKind::Terminal;
        move.lobell = *n;
        return move;
    }

    auto try_decompose = [&]() {
        for (auto& c : prismatic_circuits(p, 5)) {
            if (side_profile(p, c).has_flat())
                continue;
            move.kind = MoveKind::Decompose;
            move.circuit = std::move(c);
            return true;
        }
        return false;
    };
    auto try_surgery = [&]() {
        for (const auto& ec : classify_edges(p)) {
            if (ec.status == EdgeStatus::VeryGood) {
                move.kind = MoveKind::Surgery;
                move.edge = ec.edge;
                return true;
            }
        }
        return false;
    };
    const bool found = policy == Policy::DecomposeFirst ? (try_decompose() || try_surgery())
                                                        : (try_surgery() || try_decompose());
    if (found)
        return move;

    for (int k = 6; k <= std::min(kMaxFallbackCircuit, p.num_faces()); ++k) {
        for (auto& c : prismatic_circuits(p, k)) {
            if (side_profile(p, c).has_flat())
                continue;
            try {
                (void)decompose(p, c);
            } catch (const Error& err) {
                if (err.kind() == ErrorKind::DecompositionInvalid)
                    continue;
                throw;
            }
            move.kind = MoveKind::Decompose;
            move.circuit = std::move(c);
            return move;
        }
    }
    move.kind = MoveKind::TheoremViolation;
    return move;
}

int reduction_measure(const std::vector<Polyhedron>& components)
{
    int m = 0;
    for (const auto& c : components)
        m += c.num_faces() - 12;
    return m;
}

ReductionTrace reduce(const Polyhedron& p, Policy policy)
{
    require_admissible(p, "polyhedron");
    ReductionTrace trace;
    trace.policy = policy;
    trace.input = p.faces();

    std::vector<Polyhedron> components{p};
    std::vector<std::string> hashes{hash_of(p)};
    int measure = p.num_faces() - 12;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const Polyhedron& current = components[i];
        ensure(pentagon_excess(current).pentagons >= 12, "component with fewer than 12 pentagons");
        Move move = find_move(current, policy);
        if (move.kind == MoveKind::Terminal) {
            trace.terminal.push_back(move.lobell);
            continue;
        }
        if (move.kind == MoveKind::TheoremViolation)
            fail(ErrorKind::TheoremViolation,
                 "component " + std::to_string(i) + " (" + hashes[i] +
                     ") is not Löbell, has no very good edge and no valid decomposition");

        TraceStep step;
        step.component = static_cast<int>(i);
        step.move = move.kind;
        step.input_hash = hashes[i];
        std::vector<Polyhedron> children;
        if (move.kind == MoveKind::Surgery) {
            step.edge = move.edge;
            step.strict = true;
            children.push_back(edge_surgery(current, move.edge).polyhedron);
        } else {
            step.circuit_edges = move.circuit.crossed_edges;
            step.circuit_faces = move.circuit.faces;
            auto halves = decompose(current, move.circuit);
            children.push_back(std::move(halves.first));
            children.push_back(std::move(halves.second));
        }
        int next = measure - (current.num_faces() - 12);
        for (const auto& child : children)
            next += child.num_faces() - 12;
        ensure(next < measure, "reduction measure did not decrease");
        measure = next;
        for (auto& child : children) {
            step.children.push_back(static_cast<int>(components.size()));
            hashes.push_back(hash_of(child));
            step.output_hashes.push_back(hashes.back());
            components.push_back(std::move(child));
        }
        trace.steps.push_back(std::move(step));
    }
    std::sort(trace.terminal.begin(), trace.terminal.end());
    trace.complete = true;
    trace.bound = volume_lower_bound(trace);
    if (verification_enabled())
        ensure(replay(trace) == trace.terminal, "trace does not replay");
    return trace;
}

Volume volume_lower_bound(const ReductionTrace& trace)
{
    if (!trace.complete || trace.terminal.empty())
        fail(ErrorKind::IncompleteTrace, "trace has no complete terminal multiset");
    Volume total;
    for (int n : trace.terminal) {
        Volume v = lobell_volume(n);
        total.value += v.value;
        total.error_bound += v.error_bound;
    }
    return total;
}

std::vector<int> replay(const ReductionTrace& trace)
{
    if (!trace.complete)
        fail(ErrorKind::IncompleteTrace, "trace is marked incomplete");
    auto mismatch = [](const std::string& what) {
        fail(ErrorKind::IncompleteTrace, "trace does not replay: " + what);
    };
    std::vector<Polyhedron> components{Polyhedron::build(trace.input)};
    std::vector<bool> expanded{false};
    for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        const TraceStep& step = trace.steps[s];
        const std::string where = "step " + std::to_string(s);
        if (step.component < 0 || step.component >= static_cast<int>(components.size()) ||
            expanded[step.component])
            mismatch(where + " names an unavailable component");
        const Polyhedron current = components[step.component];
        if (hash_of(current) != step.input_hash)
            mismatch(where + " input hash differs");
        expanded[step.component] = true;
        std::vector<Polyhedron> children;
        if (step.move != MoveKind::Surgery && step.move != MoveKind::Decompose)
            mismatch(where + " has move " + to_string(step.move));
        try {
            if (step.move == MoveKind::Surgery) {
                children.push_back(edge_surgery(current, step.edge).polyhedron);
            } else {
                auto halves = decompose(current, circuit_from_edges(current, step.circuit_edges));
                children.push_back(std::move(halves.first));
                children.push_back(std::move(halves.second));
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::InternalError)
                throw;
            mismatch(where + " cannot be applied (" + e.what() + ")");
        }
        if (children.size() != step.children.size() || children.size() != step.output_hashes.size())
            mismatch(where + " has the wrong number of children");
        for (std::size_t j = 0; j < children.size(); ++j) {
            if (step.children[j] != static_cast<int>(components.size()))
                mismatch(where + " child index out of order");
            if (hash_of(children[j]) != step.output_hashes[j])
                mismatch(where + " output hash differs");
            components.push_back(std::move(children[j]));
            expanded.push_back(false);
        }
    }
    std::vector<int> terminal;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (expanded[i])
            continue;
        auto n = recognize_lobell(components[i]);
        if (!n)
            mismatch("leaf component " + std::to_string(i) + " is not Löbell");
        terminal.push_back(*n);
    }
    std::sort(terminal.begin(), terminal.end());
    if (terminal != trace.terminal)
        mismatch("terminal multiset differs");
    return terminal;
}

} // namespace rap
