#include "rap/canonical.hpp"

#include "rap/error.hpp"
#include "rap/volumes.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

#ifdef RAP_HAVE_OPENMP
#include <omp.h>
#endif

namespace rap {

namespace {

// Neighbours of each vertex in rotation order: the successor of dart v->w is
// v->x where the face traversing w->v continues to x.
struct Rotation {
    std::vector<std::vector<VertexId>> around;

    explicit Rotation(const Polyhedron& p) : around(p.num_vertices())
    {
        for (VertexId v = 0; v < p.num_vertices(); ++v) {
            const int deg = p.degree(v);
            const VertexId first = p.edge(p.vertex_edges(v)[0]).other(v);
            VertexId w = first;
            auto& ring = around[v];
            ring.reserve(deg);
            do {
                ring.push_back(w);
                FaceId f = *p.dart_face(w, v);
                auto cycle = p.face(f);
                int pos = p.position_in_face(f, v);
                w = cycle[(pos + 1) % cycle.size()];
            } while (w != first && static_cast<int>(ring.size()) <= deg);
            ensure(static_cast<int>(ring.size()) == deg,
                   "vertex " + std::to_string(v) + " link is not a single cycle");
        }
    }

    int index_of(VertexId v, VertexId w) const
    {
        const auto& ring = around[v];
        return static_cast<int>(std::find(ring.begin(), ring.end(), w) - ring.begin());
    }
};

// Builds the code from dart start->next in direction dir (+1 or -1). When
// `bound` is non-empty the traversal stops as soon as the partial code is
// lexicographically larger than it; returns false in that case.
bool encode(const Polyhedron& p, const Rotation& rot, VertexId start, VertexId next, int dir,
            const std::vector<int>& bound, std::vector<int>& out,
            std::vector<int>& number, std::vector<VertexId>& entry, std::vector<VertexId>& queue)
{
    const int nv = p.num_vertices();
    out.clear();
    std::fill(number.begin(), number.end(), 0);
    out.push_back(nv);
    out.push_back(p.num_edges());
    out.push_back(p.num_faces());
    bool tied = !bound.empty();
    auto emit = [&](int x) {
        if (tied) {
            int b = bound[out.size()];
            if (x > b)
                return false;
            if (x < b)
                tied = false;
        }
        out.push_back(x);
        return true;
    };
    if (tied && !std::equal(out.begin(), out.end(), bound.begin()))
        tied = false;

    int counter = 1;
    number[start] = counter++;
    entry[start] = next;
    queue.clear();
    queue.push_back(start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        const auto& ring = rot.around[v];
        const int deg = static_cast<int>(ring.size());
        const int base = rot.index_of(v, entry[v]);
        for (int j = 0; j < deg; ++j) {
            VertexId w = ring[((base + dir * j) % deg + deg) % deg];
            if (number[w] == 0) {
                number[w] = counter++;
                entry[w] = v;
                queue.push_back(w);
            }
            if (!emit(number[w]))
                return false;
        }
        if (!emit(0))
            return false;
    }
    return true;
}

struct Darts {
    std::vector<std::pair<VertexId, VertexId>> list;

    explicit Darts(const Polyhedron& p)
    {
        for (const Edge& e : p.edges()) {
            list.emplace_back(e.u, e.v);
            list.emplace_back(e.v, e.u);
        }
    }
};

} // namespace

std::string CanonicalCode::digest() const
{
    std::uint64_t h = 1469598103934665603ull;
    for (int x : code) {
        auto ux = static_cast<std::uint32_t>(x);
        for (int i = 0; i < 4; ++i) {
            h ^= (ux >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CanonicalCode canonical_form_serial(const Polyhedron& p)
{
    const Rotation rot(p);
    const Darts darts(p);
    std::vector<int> best, scratch;
    std::vector<int> number(p.num_vertices());
    std::vector<VertexId> entry(p.num_vertices()), queue;
    for (const auto& [a, b] : darts.list) {
        for (int dir : {1, -1}) {
            if (encode(p, rot, a, b, dir, best, scratch, number, entry, queue))
                best.swap(scratch);
        }
    }
    return CanonicalCode{std::move(best)};
}

static CanonicalCode canonical_form_omp(const Polyhedron& p)
{
#ifdef RAP_HAVE_OPENMP
    const Rotation rot(p);
    const Darts darts(p);
    const int total = static_cast<int>(darts.list.size()) * 2;
    std::vector<int> best;
#pragma omp parallel
    {
        std::vector<int> local, scratch;
        std::vector<int> number(p.num_vertices());
        std::vector<VertexId> entry(p.num_vertices()), queue;
#pragma omp for schedule(static)
        for (int i = 0; i < total; ++i) {
            const auto& [a, b] = darts.list[i / 2];
            int dir = (i % 2 == 0) ? 1 : -1;
            if (encode(p, rot, a, b, dir, local, scratch, number, entry, queue))
                local.swap(scratch);
        }
#pragma omp critical(rap_canonical_min)
        {
            if (!local.empty() && (best.empty() || local < best))
                best = std::move(local);
        }
    }
    return CanonicalCode{std::move(best)};
#else
    return canonical_form_serial(p);
#endif
}

bool isomorphic(const Polyhedron& a, const Polyhedron& b)
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
        a.num_faces() != b.num_faces())
        return false;
    return canonical_form(a) == canonical_form(b);
}

CanonicalCode canonical_form(const Polyhedron& p)
{
    CanonicalCode code = canonical_form_omp(p);
    if (verification_enabled())
        ensure(code == canonical_form_serial(p), "parallel canonical form differs from the serial one");
    return code;
}

} // namespace rap
