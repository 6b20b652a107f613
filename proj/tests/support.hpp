#pragma once

// Shared fixtures for the test suites.
//
// toy complex: maximal {[0,1,2],[2,3],[3,4],[2,4]} -- a filled triangle
// sharing vertex 2 with an empty triangle {2,3,4}.
//
// motif complex: maximal {[1,2,3,7],[2,6],[2,7],[6,7],[2,4],[2,5],[4,5]} --
// a solid tetrahedron plus two empty triangles hanging off vertex 2.
//
// motif simplet: filled triangle [0,1,2] sharing vertex 2 with the empty
// triangle {2,3,4}; occurs in the toy complex only with label 2 on vertex 2.

#include <memory>
#include <vector>

#include "fresco/complex_store.hpp"
#include "fresco/generator.hpp"
#include "fresco/simplet.hpp"

namespace testsupport {

using namespace fresco;

inline ComplexStore toy_complex() {
    return ComplexStore::from_simplices({{0, 1, 2}, {2, 3}, {3, 4}, {2, 4}});
}

inline ComplexStore motif_complex() {
    return ComplexStore::from_simplices(
        {{1, 2, 3, 7}, {2, 6}, {2, 7}, {6, 7}, {2, 4}, {2, 5}, {4, 5}});
}

inline std::shared_ptr<const Simplet> make_simplet(
    std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& simplices) {
    std::vector<LabelMask> masks;
    for (const auto& s : simplices) masks.push_back(labels_to_mask(s));
    return Simplet::create(n, downward_closure(masks));
}

inline std::shared_ptr<const Simplet> edge_simplet() { return make_simplet(2, {{0, 1}}); }

inline std::shared_ptr<const Simplet> wedge_simplet() {
    return make_simplet(3, {{0, 1}, {1, 2}});
}

inline std::shared_ptr<const Simplet> open_triangle() {
    return make_simplet(3, {{0, 1}, {0, 2}, {1, 2}});
}

inline std::shared_ptr<const Simplet> closed_triangle() {
    return make_simplet(3, {{0, 1, 2}});
}

inline std::shared_ptr<const Simplet> motif_simplet() {
    return make_simplet(5, {{0, 1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Small seeded complex for randomized cross-checks: <= 12 vertices, <= 15
// maximal simplices, dimension <= 3.
inline ComplexStore random_complex(std::uint64_t seed) {
    GenConfig cfg;
    cfg.vertices = 4 + static_cast<std::uint32_t>(seed % 9);        // 4..12
    cfg.maximal = 3 + static_cast<std::uint32_t>((seed / 7) % 13);  // 3..15
    cfg.max_dim = 1 + static_cast<std::uint32_t>((seed / 3) % 3);   // 1..3
    cfg.seed = seed;
    return ComplexStore::from_simplices(generate_complex(cfg));
}

// Seeded simple graph (dimension <= 1) with <= 12 vertices.
inline ComplexStore random_graph(std::uint64_t seed) {
    GenConfig cfg;
    cfg.vertices = 4 + static_cast<std::uint32_t>(seed % 9);
    cfg.maximal = 4 + static_cast<std::uint32_t>((seed / 5) % 14);
    cfg.max_dim = 1;
    cfg.seed = seed;
    return ComplexStore::from_simplices(generate_complex(cfg));
}

}  // namespace testsupport
