#pragma once

// Read-only host complex.  Only the maximal simplices are materialized; every
// face-membership query resolves against them through per-vertex posting
// lists.  This keeps huge-dimension inputs tractable (a single 60-vertex
// maximal simplex would otherwise expand to 2^60 faces).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fresco/simplex.hpp"

namespace fresco {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComplexStats {
    std::size_t vertices = 0;
    std::size_t edges = 0;      // distinct 1-simplices
    std::size_t triangles = 0;  // distinct 2-simplices
    std::size_t maximal = 0;
    int dimension = -1;
};

class ComplexStore {
public:
    // Builds a store from arbitrary vertex sets: sets are deduplicated, sets
    // contained in others are absorbed, and vertex ids are remapped densely
    // (ascending original id -> ascending dense id).  An empty collection
    // yields an empty store.
    static ComplexStore from_simplices(std::vector<Simplex> sets);

    ComplexStore() = default;

    std::size_t num_vertices() const { return neighbors_.size(); }
    int dimension() const { return stats_.dimension; }
    const ComplexStats& stats() const { return stats_; }

    // Maximal simplices in dense ids, sorted by (size ascending, lex); the
    // index into this vector is the simplex id used by the posting lists.
    const std::vector<Simplex>& maximal_simplices() const { return maximal_; }

    // True iff the given vertices span a face of some maximal simplex.
    // Unknown ids make it false.  The _sorted variant requires strictly
    // ascending input and is the hot path for the matcher.
    bool is_simplex(std::vector<VertexId> verts) const;
    bool is_simplex_sorted(std::span<const VertexId> verts) const;

    const std::vector<VertexId>& neighbors(VertexId u) const { return neighbors_[u]; }
    std::size_t degree(VertexId u) const { return neighbors_[u].size(); }

    // All vertices lying in a maximal simplex with at least d vertices.
    std::vector<VertexId> seed_vertices(std::size_t d) const;

    // Subcomplex of all faces with dimension <= n (as its maximal elements).
    ComplexStore skeleton(std::size_t n) const;

    VertexId original_id(VertexId dense) const { return dense_to_orig_[dense]; }
    std::optional<VertexId> dense_id(VertexId original) const;

private:
    void build_indexes();  // posting lists, neighbor sets, stats

    std::vector<Simplex> maximal_;                    // dense ids, (size, lex) order
    std::vector<std::vector<std::uint32_t>> posting_; // vertex -> maximal ids, ascending
    std::vector<std::vector<VertexId>> neighbors_;    // vertex -> sorted neighbor set
    std::vector<VertexId> dense_to_orig_;
    std::unordered_map<VertexId, VertexId> orig_to_dense_;
    ComplexStats stats_;
};

// Parses the one-simplex-per-line text format: base-10 vertex ids separated
// by spaces/tabs; blank lines and lines starting with '#' are ignored.
// Malformed lines and inputs with no simplices raise ParseError with the
// line number.
ComplexStore load_complex(std::istream& in);
ComplexStore load_complex_file(const std::string& path);

// One maximal simplex per line under original ids; load_complex() of this
// output reproduces the store.
void write_complex(const ComplexStore& store, std::ostream& out);

}  // namespace fresco
