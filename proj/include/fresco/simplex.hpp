#pragma once

// Shared primitives for simplices over complex vertices (VertexId) and over
// simplet labels (LabelMask).  A simplex is stored as a strictly ascending
// vertex list; a label simplex is a bitmask because simplets never exceed a
// handful of labels.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace fresco {

using VertexId = std::uint32_t;

// Strictly ascending, duplicate-free vertex list; dimension = size() - 1.
using Simplex = std::vector<VertexId>;

inline Simplex make_simplex(std::vector<VertexId> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

inline bool simplex_subset(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---- label masks -----------------------------------------------------------

// Bit i set <=> simplet label i belongs to the simplex.
using LabelMask = std::uint32_t;

constexpr std::uint32_t kMaxSimpletVertices = 16;

inline int mask_size(LabelMask m) { return std::popcount(m); }

inline bool mask_subset(LabelMask a, LabelMask b) { return (a & ~b) == 0; }

inline std::vector<std::uint32_t> mask_labels(LabelMask m) {
    std::vector<std::uint32_t> out;
    while (m) {
        out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

inline LabelMask labels_to_mask(const std::vector<std::uint32_t>& labels) {
    LabelMask m = 0;
    for (auto l : labels) m |= LabelMask{1} << l;
    return m;
}

// Lexicographic order of the ascending label sequences the masks denote,
// e.g. [0,1,2] < [0,2] < [1,2].
inline bool mask_lex_less(LabelMask a, LabelMask b) {
    while (a && b) {
        int x = std::countr_zero(a), y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return b != 0;  // shorter prefix sorts first
}

}  // namespace fresco
