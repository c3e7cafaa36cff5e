#ifndef KOP_GENERATOR_HPP
#define KOP_GENERATOR_HPP

#include <cstdint>
#include <string>

#include "kop/embedding.hpp"

namespace kop {

struct GenSpec {
    int k = 1;
    int n_target = 30;
    uint64_t seed = 1;
    double chord_density = 0.3; // [0,1]
    double spoke_density = 0.25; // (0,1]
};

// Seeded k-outerplanar instance: k nested cycles, non-crossing spokes between
// consecutive rings, laminar chords hugging each ring. Deterministic per spec;
// the outerplanarity index of the result is verified to equal spec.k, with a
// bounded number of reseeded retries.
Embedding generate(const GenSpec& spec);

// Fixed fixtures: c{n} cycles, k4, grid{r}x{c}, fig2 (two wheels joined by a
// branch with an inner tree, exercising the alpha/beta/gamma classification).
Embedding canned(const std::string& name);

} // namespace kop

#endif
