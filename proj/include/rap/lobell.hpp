#pragma once

#include "rap/polyhedron.hpp"

#include <optional>

namespace rap {

/// L(n): two pentagonal flowers (an n-gon ringed by n pentagons) glued along
/// their boundary circles with a half-petal offset, the only gluing that
/// leaves every vertex trivalent. Throws NTooSmall for n < 5.
///
/// Vertex layout: centre of the first flower 0..n-1, its spoke ends n..2n-1,
/// spoke ends of the second flower 2n..3n-1, second centre 3n..4n-1.
/// Face layout: first centre, its n petals, the n petals of the second
/// flower, second centre.
Polyhedron build_lobell(int n);

/// n such that p is isomorphic to L(n), if any.
std::optional<int> recognize_lobell(const Polyhedron& p);

} // namespace rap
