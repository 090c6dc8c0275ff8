#pragma once

// Independent reference implementations used only by tests. They share
// nothing with the library beyond Polyhedron's incidence accessors.

#include "rap/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using rap::EdgeId;
using rap::FaceId;
using rap::Polyhedron;
using rap::VertexId;

/// Every prismatic k-circuit as a sorted crossed-edge set, found by choosing
/// k edges with pairwise disjoint endpoints and keeping the choices whose
/// faces form one dual cycle through k distinct faces.
inline std::set<std::vector<EdgeId>> prismatic_edge_sets(const Polyhedron& p, int k)
{
    std::set<std::vector<EdgeId>> out;
    std::vector<EdgeId> chosen;
    std::vector<int> vertex_used(p.num_vertices(), 0);
    std::vector<int> face_uses(p.num_faces(), 0);

    auto is_single_cycle = [&]() {
        // Each face met exactly twice already holds (checked while choosing);
        // connectivity of the chosen edges through shared faces remains.
        std::vector<bool> seen(chosen.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const auto i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < chosen.size(); ++j) {
                if (seen[j])
                    continue;
                const auto& a = p.edge(chosen[i]).faces;
                const auto& b = p.edge(chosen[j]).faces;
                if (a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1]) {
                    seen[j] = true;
                    ++reached;
                    stack.push_back(j);
                }
            }
        }
        return reached == chosen.size();
    };

    auto rec = [&](auto&& self, EdgeId from) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            for (EdgeId e : chosen)
                for (FaceId f : p.edge(e).faces)
                    if (face_uses[f] != 2)
                        return;
            if (is_single_cycle())
                out.insert(chosen);
            return;
        }
        for (EdgeId e = from; e < p.num_edges(); ++e) {
            const auto& edge = p.edge(e);
            if (vertex_used[edge.u] || vertex_used[edge.v])
                continue;
            if (face_uses[edge.faces[0]] == 2 || face_uses[edge.faces[1]] == 2)
                continue;
            vertex_used[edge.u] = vertex_used[edge.v] = 1;
            ++face_uses[edge.faces[0]];
            ++face_uses[edge.faces[1]];
            chosen.push_back(e);
            self(self, e + 1);
            chosen.pop_back();
            --face_uses[edge.faces[0]];
            --face_uses[edge.faces[1]];
            vertex_used[edge.u] = vertex_used[edge.v] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

/// Combinatorial isomorphism (orientation-preserving or reversing) by
/// backtracking over vertex bijections that preserve adjacency, accepting a
/// full map only if it carries the face set onto the face set.
inline bool isomorphic(const Polyhedron& a, const Polyhedron& b)
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
        a.num_faces() != b.num_faces())
        return false;
    const int n = a.num_vertices();
    auto neighbours = [](const Polyhedron& p) {
        std::vector<std::vector<VertexId>> nb(p.num_vertices());
        for (const auto& e : p.edges()) {
            nb[e.u].push_back(e.v);
            nb[e.v].push_back(e.u);
        }
        return nb;
    };
    const auto na = neighbours(a);
    const auto nb = neighbours(b);
    std::vector<std::vector<bool>> adj_b(n, std::vector<bool>(n, false));
    for (const auto& e : b.edges())
        adj_b[e.u][e.v] = adj_b[e.v][e.u] = true;

    // Visit a's vertices in BFS order so each new vertex has a mapped neighbour.
    std::vector<VertexId> order;
    std::vector<bool> queued(n, false);
    for (VertexId s = 0; s < n; ++s) {
        if (queued[s])
            continue;
        queued[s] = true;
        order.push_back(s);
        for (std::size_t i = order.size() - 1; i < order.size(); ++i)
            for (VertexId w : na[order[i]])
                if (!queued[w]) {
                    queued[w] = true;
                    order.push_back(w);
                }
    }

    auto cycle_key = [](std::vector<VertexId> c) {
        std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
        return c;
    };
    std::set<std::vector<VertexId>> faces_b, faces_b_rev;
    for (const auto& f : b.faces()) {
        faces_b.insert(cycle_key(f));
        faces_b_rev.insert(cycle_key(std::vector<VertexId>(f.rbegin(), f.rend())));
    }

    std::vector<VertexId> map(n, -1);
    std::vector<bool> used(n, false);
    auto faces_match = [&]() {
        bool same = true, reversed = true;
        for (const auto& f : a.faces()) {
            std::vector<VertexId> image;
            for (VertexId x : f)
                image.push_back(map[x]);
            auto key = cycle_key(image);
            same = same && faces_b.count(key);
            reversed = reversed && faces_b_rev.count(key);
            if (!same && !reversed)
                return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == order.size())
            return faces_match();
        const VertexId x = order[i];
        for (VertexId y = 0; y < n; ++y) {
            if (used[y] || nb[y].size() != na[x].size())
                continue;
            bool ok = true;
            for (VertexId w : na[x])
                if (map[w] >= 0 && !adj_b[y][map[w]]) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            map[x] = y;
            used[y] = true;
            if (self(self, i + 1))
                return true;
            map[x] = -1;
            used[y] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Same polyhedron with vertices permuted, faces shuffled, cycles rotated,
/// and optionally every cycle reversed.
inline Polyhedron scramble(const Polyhedron& p, unsigned seed, bool mirror)
{
    std::mt19937 rng(seed);
    std::vector<VertexId> perm(p.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    rap::FaceList faces;
    for (const auto& f : p.faces()) {
        std::vector<VertexId> c;
        for (VertexId x : f)
            c.push_back(perm[x] * 3 + 7); // sparse ids on purpose
        if (mirror)
            std::reverse(c.begin(), c.end());
        std::rotate(c.begin(), c.begin() + rng() % c.size(), c.end());
        faces.push_back(std::move(c));
    }
    std::shuffle(faces.begin(), faces.end(), rng);
    return Polyhedron::build(std::move(faces));
}

} // namespace oracle
