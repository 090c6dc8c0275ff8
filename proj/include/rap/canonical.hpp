#pragma once

#include "rap/polyhedron.hpp"

#include <compare>
#include <string>
#include <vector>

namespace rap {

/// Canonical code of an oriented map, minimized over every starting dart and
/// both orientations, so mirror images share a code. Layout: v, e, f, then for
/// each vertex in discovery order its neighbours' discovery numbers in
/// rotation order followed by 0.
struct CanonicalCode {
    std::vector<int> code;

    auto operator<=>(const CanonicalCode&) const = default;
    bool operator==(const CanonicalCode&) const = default;

    /// 64-bit FNV-1a digest of the code, as 16 hex digits.
    std::string digest() const;
};

/// Parallel over starting darts (OpenMP when available).
CanonicalCode canonical_form(const Polyhedron& p);

/// Single-threaded reference.
CanonicalCode canonical_form_serial(const Polyhedron& p);

bool isomorphic(const Polyhedron& a, const Polyhedron& b);

} // namespace rap
