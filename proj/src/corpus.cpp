#include "rap/corpus.hpp"

#include "rap/construct.hpp"
#include "rap/lobell.hpp"

namespace rap {

std::vector<CorpusEntry> standard_corpus()
{
    std::vector<CorpusEntry> out;
    std::vector<Polyhedron> lobell;
    for (int n = 5; n <= 8; ++n) {
        lobell.push_back(build_lobell(n));
        out.push_back({"L(" + std::to_string(n) + ")", lobell.back()});
    }
    auto L = [&](int n) -> const Polyhedron& { return lobell.at(n - 5); };
    // Face 0 is the first centre, 1 a petal of the first flower, n+1 a petal
    // of the second.
    auto label = [](int n, FaceId f) { return "L(" + std::to_string(n) + ")#" + std::to_string(f); };

    for (int n = 5; n <= 8; ++n) {
        out.push_back({"double " + label(n, 1), double_across(L(n), 1)});
        if (n > 5)
            out.push_back({"double " + label(n, 0), double_across(L(n), 0)});
    }
    out.push_back({"double " + label(7, 8), double_across(L(7), 8)});

    struct Spec {
        int n1;
        FaceId f1;
        int n2;
        FaceId f2;
        Gluing g;
    };
    const Spec specs[] = {
        {5, 0, 5, 0, {0, false}}, {5, 1, 6, 1, {0, false}}, {5, 1, 6, 7, {2, true}},
        {5, 3, 7, 1, {1, false}}, {5, 1, 8, 10, {4, true}}, {6, 1, 6, 1, {0, false}},
        {6, 0, 6, 0, {1, false}}, {6, 0, 6, 13, {3, true}}, {6, 2, 7, 9, {0, true}},
        {7, 0, 7, 0, {2, false}}, {7, 1, 8, 1, {3, false}}, {8, 0, 8, 17, {5, true}},
        {6, 4, 8, 2, {1, true}},
    };
    for (const auto& s : specs) {
        std::string name = "compose " + label(s.n1, s.f1) + " " + label(s.n2, s.f2) + " offset " +
                           std::to_string(s.g.offset) + (s.g.flip ? " flip" : "");
        out.push_back({std::move(name), compose(L(s.n1), s.f1, L(s.n2), s.f2, s.g).polyhedron});
    }
    // One composition of a composition.
    Polyhedron twice = compose(L(5), 0, L(5), 0).polyhedron;
    FaceId pentagon = 0;
    while (twice.face_size(pentagon) != 5)
        ++pentagon;
    out.push_back({"compose (L(5)+L(5))#" + std::to_string(pentagon) + " L(5)#0",
                   compose(twice, pentagon, L(5), 0).polyhedron});
    return out;
}

std::vector<CorpusEntry> classical_solids()
{
    return {{"tetrahedron", tetrahedron()},
            {"cube", cube()},
            {"triangular prism", triangular_prism()},
            {"pentagonal prism", prism(5)},
            {"hexagonal prism", prism(6)},
            {"dodecahedron", dodecahedron()}};
}

} // namespace rap
