#pragma once

// Seeded synthetic complexes for benchmarks and tests.  Output is a raw list
// of vertex sets in original ids (the loader absorbs duplicates/subsets);
// identical parameters always produce identical sets.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fresco/simplex.hpp"

namespace fresco {

struct GenConfig {
    std::uint32_t vertices = 0;     // background vertex pool 0..vertices-1
    std::uint32_t maximal = 0;      // background simplex count
    std::uint32_t max_dim = 1;      // background sizes drawn uniformly from [2, max_dim+1]
    std::uint64_t seed = 0;
    std::string plant;              // optional simplet ("0,1,2;2,3")
    std::uint32_t copies = 0;       // vertex-disjoint planted copies, ids beyond `vertices`

    void validate() const;  // throws std::invalid_argument on infeasible parameters
};

// Planting appends `copies` disjoint copies of the simplet's maximal
// simplices on fresh vertices, so every label keeps at least `copies`
// distinct image vertices no matter what the background contains.
std::vector<Simplex> generate_complex(const GenConfig& config);

void write_sets(const std::vector<Simplex>& sets, std::ostream& out);

}  // namespace fresco
