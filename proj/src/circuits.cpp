#include "rap/circuits.hpp"

#include "rap/canonical.hpp"
#include "rap/error.hpp"
#include "rap/volumes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rap {

namespace {

// faces/edges in the convention of PrismaticCircuit, brought to normal form.
PrismaticCircuit normalize(const std::vector<FaceId>& faces, const std::vector<EdgeId>& edges)
{
    const int k = static_cast<int>(faces.size());
    const int m = static_cast<int>(std::min_element(faces.begin(), faces.end()) - faces.begin());
    auto at = [k](int i) { return ((i % k) + k) % k; };
    PrismaticCircuit c;
    c.faces.resize(k);
    c.crossed_edges.resize(k);
    const bool forward = faces[at(m + 1)] < faces[at(m - 1)];
    for (int i = 0; i < k; ++i) {
        if (forward) {
            c.faces[i] = faces[at(m + i)];
            c.crossed_edges[i] = edges[at(m + i)];
        } else {
            c.faces[i] = faces[at(m - i)];
            c.crossed_edges[i] = edges[at(m - i + 1)];
        }
    }
    return c;
}

class CircuitSearch {
public:
    CircuitSearch(const Polyhedron& p, int k)
        : p_(p), k_(k), on_path_(p.num_faces(), 0), used_(p.num_vertices(), 0)
    {
    }

    // All prismatic k-circuits whose smallest face is `start`.
    std::vector<PrismaticCircuit> from(FaceId start)
    {
        found_.clear();
        faces_.assign(1, start);
        edges_.clear();
        on_path_[start] = 1;
        extend(start);
        on_path_[start] = 0;
        return std::move(found_);
    }

private:
    bool free(const Edge& e) const { return !used_[e.u] && !used_[e.v]; }

    void mark(const Edge& e, char value)
    {
        used_[e.u] = value;
        used_[e.v] = value;
    }

    void extend(FaceId current)
    {
        const FaceId start = faces_.front();
        const int depth = static_cast<int>(faces_.size());
        for (EdgeId e : p_.face_edges(current)) {
            const Edge& edge = p_.edge(e);
            const FaceId next = edge.other_face(current);
            if (depth == k_) {
                // faces_[1] < faces_.back() keeps one of the two directions.
                if (next == start && faces_[1] < faces_.back() && free(edge)) {
                    std::vector<EdgeId> crossed(k_);
                    crossed[0] = e;
                    std::copy(edges_.begin(), edges_.end(), crossed.begin() + 1);
                    found_.push_back(normalize(faces_, crossed));
                }
                continue;
            }
            if (next <= start || on_path_[next] || !free(edge))
                continue;
            faces_.push_back(next);
            edges_.push_back(e);
            on_path_[next] = 1;
            mark(edge, 1);
            extend(next);
            mark(edge, 0);
            on_path_[next] = 0;
            edges_.pop_back();
            faces_.pop_back();
        }
    }

    const Polyhedron& p_;
    int k_;
    std::vector<char> on_path_;
    std::vector<char> used_;
    std::vector<FaceId> faces_;
    std::vector<EdgeId> edges_;
    std::vector<PrismaticCircuit> found_;
};

void sort_circuits(std::vector<PrismaticCircuit>& out)
{
    std::vector<std::pair<std::vector<EdgeId>, std::size_t>> keyed;
    keyed.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        keyed.emplace_back(out[i].key(), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<PrismaticCircuit> sorted;
    sorted.reserve(out.size());
    for (const auto& [key, i] : keyed)
        sorted.push_back(std::move(out[i]));
    out = std::move(sorted);
}

} // namespace

std::vector<EdgeId> PrismaticCircuit::key() const
{
    std::vector<EdgeId> k = crossed_edges;
    std::sort(k.begin(), k.end());
    return k;
}

PrismaticCircuit make_circuit(const Polyhedron& p, std::vector<FaceId> cycle)
{
    const int k = static_cast<int>(cycle.size());
    if (k < 3)
        fail(ErrorKind::InvalidCircuit, "a circuit needs at least 3 faces");
    std::vector<FaceId> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorKind::InvalidCircuit, "circuit faces are not distinct");
    std::vector<EdgeId> edges(k);
    for (int i = 0; i < k; ++i) {
        FaceId a = cycle[(i + k - 1) % k];
        FaceId b = cycle[i];
        if (!p.valid_face(a) || !p.valid_face(b))
            fail(ErrorKind::NoSuchFace, "circuit names a face outside the polyhedron");
        auto e = p.shared_edge(a, b);
        if (!e)
            fail(ErrorKind::InvalidCircuit, "faces " + std::to_string(a) + " and " +
                                                std::to_string(b) + " are not adjacent");
        edges[i] = *e;
    }
    return normalize(cycle, edges);
}

PrismaticCircuit circuit_from_edges(const Polyhedron& p, std::vector<EdgeId> edges)
{
    const int k = static_cast<int>(edges.size());
    if (k < 3)
        fail(ErrorKind::InvalidCircuit, "a circuit crosses at least 3 edges");
    for (EdgeId e : edges)
        if (!p.valid_edge(e))
            fail(ErrorKind::NoSuchEdge, "edge " + std::to_string(e) + " does not exist");
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail(ErrorKind::InvalidCircuit, "repeated edge");

    // Walk face -> edge -> face; every face must meet exactly two of the edges.
    std::vector<FaceId> faces;
    std::vector<EdgeId> order;
    std::vector<char> taken(k, 0);
    FaceId current = p.edge(edges[0]).faces[1];
    EdgeId via = edges[0];
    taken[0] = 1;
    order.push_back(via);
    faces.push_back(p.edge(via).faces[0]);
    for (int step = 1; step < k; ++step) {
        FaceId f = faces.back();
        int pick = -1;
        for (int j = 0; j < k; ++j) {
            if (taken[j])
                continue;
            const Edge& e = p.edge(edges[j]);
            if (e.faces[0] == f || e.faces[1] == f) {
                if (pick >= 0)
                    fail(ErrorKind::InvalidCircuit,
                         "face " + std::to_string(f) + " meets more than two circuit edges");
                pick = j;
            }
        }
        if (pick < 0)
            fail(ErrorKind::InvalidCircuit, "edges do not close into a circuit");
        taken[pick] = 1;
        order.push_back(edges[pick]);
        faces.push_back(p.edge(edges[pick]).other_face(f));
    }
    if (faces.back() != current)
        fail(ErrorKind::InvalidCircuit, "edges do not close into a single circuit");
    // faces[i] is entered through order[i], matching crossed[i] = faces[i-1] | faces[i].
    std::vector<FaceId> check = faces;
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end())
        fail(ErrorKind::InvalidCircuit, "circuit passes a face twice");
    return normalize(faces, order);
}

bool is_prismatic(const Polyhedron& p, const PrismaticCircuit& c)
{
    std::vector<VertexId> ends;
    for (EdgeId e : c.crossed_edges) {
        ends.push_back(p.edge(e).u);
        ends.push_back(p.edge(e).v);
    }
    std::sort(ends.begin(), ends.end());
    return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

std::vector<PrismaticCircuit> prismatic_circuits_serial(const Polyhedron& p, int k)
{
    std::vector<PrismaticCircuit> out;
    if (k < 3 || k > p.num_faces())
        return out;
    CircuitSearch search(p, k);
    for (FaceId s = 0; s < p.num_faces(); ++s) {
        auto found = search.from(s);
        std::move(found.begin(), found.end(), std::back_inserter(out));
    }
    sort_circuits(out);
    return out;
}

static std::vector<PrismaticCircuit> prismatic_circuits_omp(const Polyhedron& p, int k)
{
#ifdef RAP_HAVE_OPENMP
    if (k < 3 || k > p.num_faces())
        return {};
    const int nf = p.num_faces();
    std::vector<std::vector<PrismaticCircuit>> per_start(nf);
#pragma omp parallel
    {
        CircuitSearch search(p, k);
#pragma omp for schedule(dynamic, 1)
        for (FaceId s = 0; s < nf; ++s)
            per_start[s] = search.from(s);
    }
    std::vector<PrismaticCircuit> out;
    for (auto& part : per_start)
        std::move(part.begin(), part.end(), std::back_inserter(out));
    sort_circuits(out);
    return out;
#else
    return prismatic_circuits_serial(p, k);
#endif
}

std::vector<PrismaticCircuit> prismatic_circuits(const Polyhedron& p, int k)
{
    auto out = prismatic_circuits_omp(p, k);
    if (verification_enabled())
        ensure(out == prismatic_circuits_serial(p, k), "parallel circuit search differs from the serial one");
    return out;
}

bool SideProfile::has_flat() const
{
    return flat_count(0) + flat_count(1) > 0;
}

int SideProfile::flat_count(int side) const
{
    return static_cast<int>(
        std::count_if(faces.begin(), faces.end(), [side](const FaceSides& f) { return f.flat(side); }));
}

int SideProfile::roof_count(int side) const
{
    return static_cast<int>(
        std::count_if(faces.begin(), faces.end(), [side](const FaceSides& f) { return f.roof(side); }));
}

SideProfile side_profile(const Polyhedron& p, const PrismaticCircuit& c)
{
    const int k = c.size();
    SideProfile profile;
    profile.faces.reserve(k);
    for (int i = 0; i < k; ++i) {
        const FaceId f = c.faces[i];
        const EdgeId enter = c.crossed_edges[i];
        const EdgeId leave = c.crossed_edges[(i + 1) % k];
        auto fe = p.face_edges(f);
        auto cycle = p.face(f);
        const int n = static_cast<int>(cycle.size());
        const int pe = static_cast<int>(std::find(fe.begin(), fe.end(), enter) - fe.begin());
        const int pl = static_cast<int>(std::find(fe.begin(), fe.end(), leave) - fe.begin());
        ensure(pe < n && pl < n, "circuit edge missing from its face");

        FaceSides sides;
        sides.face = f;
        // Side 0: head of the entering edge up to the tail of the leaving edge.
        for (int j = (pe + 1) % n;; j = (j + 1) % n) {
            sides.arc[0].push_back(cycle[j]);
            if (j == pl)
                break;
        }
        // Side 1: head of the leaving edge up to the tail of the entering edge.
        for (int j = (pl + 1) % n;; j = (j + 1) % n) {
            sides.arc[1].push_back(cycle[j]);
            if (j == pe)
                break;
        }
        for (int s = 0; s < 2; ++s)
            sides.arc_edges[s] = static_cast<int>(sides.arc[s].size()) - 1;
        profile.faces.push_back(std::move(sides));
    }
    return profile;
}

std::string AdmissibilityVerdict::describe(const Polyhedron& p) const
{
    std::ostringstream os;
    switch (failure) {
    case AdmissibilityFailure::None:
        os << "admissible";
        break;
    case AdmissibilityFailure::NotTrivalent:
        os << "vertex " << *vertex << " has degree " << p.degree(*vertex) << " (not trivalent)";
        break;
    case AdmissibilityFailure::ExcludedType:
        os << "excluded type: " << excluded_type;
        break;
    case AdmissibilityFailure::PrismaticCircuit: {
        os << "prismatic " << circuit->size() << "-circuit through faces";
        for (FaceId f : circuit->faces)
            os << ' ' << f;
        os << " crossing edges";
        for (EdgeId e : circuit->crossed_edges)
            os << " {" << p.edge(e).u << ',' << p.edge(e).v << '}';
        break;
    }
    }
    return os.str();
}

AdmissibilityVerdict admissible(const Polyhedron& p)
{
    AdmissibilityVerdict verdict;
    for (VertexId v = 0; v < p.num_vertices(); ++v) {
        if (p.degree(v) != 3) {
            verdict.failure = AdmissibilityFailure::NotTrivalent;
            verdict.vertex = v;
            return verdict;
        }
    }
    for (int k : {3, 4}) {
        auto found = prismatic_circuits(p, k);
        if (!found.empty()) {
            verdict.failure = AdmissibilityFailure::PrismaticCircuit;
            verdict.circuit = std::move(found.front());
            return verdict;
        }
    }
    if (p.num_faces() <= 5) {
        if (isomorphic(p, tetrahedron()))
            verdict.excluded_type = "tetrahedron";
        else if (isomorphic(p, triangular_prism()))
            verdict.excluded_type = "triangular prism";
        if (!verdict.excluded_type.empty()) {
            verdict.failure = AdmissibilityFailure::ExcludedType;
            return verdict;
        }
    }
    verdict.admissible = true;

    for (FaceId f = 0; f < p.num_faces(); ++f)
        ensure(p.face_size(f) >= 5, "admissible polyhedron has face " + std::to_string(f) +
                                        " with " + std::to_string(p.face_size(f)) + " edges");
    ensure(pentagon_excess(p).pentagons >= 12, "admissible polyhedron has fewer than 12 pentagons");
    return verdict;
}

void require_admissible(const Polyhedron& p, const std::string& what)
{
    auto verdict = admissible(p);
    if (!verdict.admissible)
        fail(ErrorKind::NotAdmissible, what + ": " + verdict.describe(p));
}

} // namespace rap
