#pragma once

// Top-level mining loop: breadth of the lattice is discovered on the fly by
// expanding every frequent simplet; the anti-monotone support makes pruning
// at infrequent nodes safe.  Fresh sibling classes are examined by a worker
// pool; the registry serializes deduplication.

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fresco/complex_store.hpp"
#include "fresco/simplet.hpp"

namespace fresco {

enum class MiningMode { Decision, Exact };

struct MiningConfig {
    std::size_t tau = 1;                                  // absolute support threshold
    std::uint32_t max_size = 5;                           // vertex cap per simplet
    std::uint32_t min_dim = 1;                            // output filter only
    MiningMode mode = MiningMode::Decision;
    std::optional<std::chrono::milliseconds> budget{std::chrono::milliseconds(500)};
    std::uint32_t workers = 0;                            // 0 = hardware concurrency
    // Joists of max_size simplets are still closed by default: inflation never
    // grows the vertex set, so gating it by size would leave dense classes at
    // the cap unreachable and break completeness against the brute-force
    // enumeration.  Turn off to size-gate every expansion rule.
    bool inflate_at_cap = true;
    bool record_lineage = false;  // fill MiningResult::lineage (tests)

    void validate() const;  // throws std::invalid_argument
};

struct ResultRow {
    std::string canon_hex;                // canonical form bytes, hex
    std::string simplet;                  // canonical serialization
    std::uint32_t size = 0;               // label count
    std::uint32_t dim = 0;
    std::optional<std::size_t> support;   // exact SUP; empty in decision mode
};

struct LevelStats {
    std::uint32_t size = 0;       // simplet vertex count at this level
    std::uint64_t examined = 0;
    std::uint64_t frequent = 0;
    double millis = 0.0;
};

struct MiningStats {
    std::uint64_t examined = 0;
    std::uint64_t frequent = 0;
    std::uint64_t pruned = 0;             // examined - frequent
    std::uint64_t registered_classes = 0;
    std::uint64_t duplicate_children = 0; // expansions dropped by the registry
    std::uint64_t canonization_calls = 0;
    double wall_ms = 0.0;
    std::vector<LevelStats> levels;
};

struct LineageEdge {
    std::string parent;  // canonical serializations
    std::string child;
    bool child_frequent = false;
    std::optional<std::size_t> parent_support;  // exact mode only
    std::optional<std::size_t> child_support;
};

struct MiningResult {
    std::vector<ResultRow> rows;  // (dim desc, support desc, canon bytes asc)
    MiningStats stats;
    std::vector<std::string> registered_classes;  // canonical serializations
    std::vector<LineageEdge> lineage;             // when record_lineage
    MiningConfig config;
};

// Runs the whole pipeline on a loaded store.  An empty store or tau greater
// than the vertex count yields an empty row set.  The row set, supports and
// verdicts do not depend on the worker count.
MiningResult mine(const ComplexStore& store, const MiningConfig& config);

// TSV rows "canon_hex simplet size dim support" (header line included);
// decision mode prints the lower bound ">=tau".  Output is byte-stable for a
// given result set.
void write_tsv(const MiningResult& result, std::ostream& out);

}  // namespace fresco
