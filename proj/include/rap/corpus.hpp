#pragma once

#include "rap/polyhedron.hpp"

#include <string>
#include <vector>

namespace rap {

struct CorpusEntry {
    std::string name;
    Polyhedron polyhedron;
};

/// Admissible test polyhedra: L(5..8) plus doubles and compositions of them
/// along pentagons and along their n-gons, with assorted offsets and flips.
std::vector<CorpusEntry> standard_corpus();

/// Small classical solids (all inadmissible), for oracles that also want
/// negative instances.
std::vector<CorpusEntry> classical_solids();

} // namespace rap
