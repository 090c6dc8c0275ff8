#include "rap/lobell.hpp"

#include "rap/canonical.hpp"
#include "rap/error.hpp"

namespace rap {

Polyhedron build_lobell(int n)
{
    if (n < 5)
        fail(ErrorKind::NTooSmall, "Lobell polyhedra need n >= 5, got " + std::to_string(n));
    auto a = [n](int i) { return ((i % n) + n) % n; };
    auto b = [n, &a](int i) { return n + a(i); };
    auto c = [n, &a](int i) { return 2 * n + a(i); };
    auto d = [n, &a](int i) { return 3 * n + a(i); };

    FaceList faces;
    std::vector<int> centre;
    for (int i = 0; i < n; ++i)
        centre.push_back(a(i));
    faces.push_back(centre);
    // First flower: petal i sits on centre edge a_i a_{i+1}; its outer path
    // b_i -> c_i -> b_{i+1} is half of the gluing circle.
    for (int i = 0; i < n; ++i)
        faces.push_back({a(i + 1), a(i), b(i), c(i), b(i + 1)});
    // Second flower: petal j covers the circle path c_j -> b_j -> c_{j-1},
    // shifted half a petal against the first flower.
    for (int j = 0; j < n; ++j)
        faces.push_back({c(j), b(j), c(j - 1), d(j - 1), d(j)});
    std::vector<int> other;
    for (int i = n - 1; i >= 0; --i)
        other.push_back(d(i));
    faces.push_back(other);

    Polyhedron p = Polyhedron::build(std::move(faces));
    ensure(p.is_trivalent(), "L(n) gluing is not trivalent");
    return p;
}

std::optional<int> recognize_lobell(const Polyhedron& p)
{
    const Counts c = counts(p);
    int candidate = 0;
    if (c.faces == 12 && c.face_sizes == std::map<int, int>{{5, 12}}) {
        candidate = 5;
    } else if (c.faces % 2 == 0 && c.faces >= 14) {
        const int n = (c.faces - 2) / 2;
        if (c.face_sizes == std::map<int, int>{{5, 2 * n}, {n, 2}})
            candidate = n;
    }
    if (candidate == 0)
        return std::nullopt;
    if (canonical_form(p) == canonical_form(build_lobell(candidate)))
        return candidate;
    return std::nullopt;
}

} // namespace rap
