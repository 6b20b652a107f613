#pragma once

// Bottom-up simplet lattice: widen attaches a pendant vertex through a new
// 1-simplex, inflate closes a joist (a missing simplex all of whose
// one-dimension-down cofaces are present).  Starting from the single vertex,
// the two rules reach every simplet class; the registry drops duplicates.

#include <memory>
#include <unordered_map>
#include <vector>

#include "fresco/canonizer.hpp"
#include "fresco/simplet.hpp"

namespace fresco {

// Inverted index face -> member simplices having that face (one dimension
// up).  Accelerates joist candidate generation: two members sharing a face
// suggest the union simplex.
using JoistIndex = std::unordered_map<LabelMask, std::vector<LabelMask>>;

JoistIndex build_joist_index(const Simplet& p);

// Every non-member simplex whose cofaces are all members, in lexicographic
// label order.  Missing 1-simplices between existing labels always qualify
// (their cofaces are the two singletons).
std::vector<LabelMask> find_joists(const Simplet& p);

// New label p->num_vertices() attached to `anchor` via a fresh 1-simplex.
std::shared_ptr<const Simplet> widen(const std::shared_ptr<const Simplet>& p,
                                     std::uint32_t anchor);

// Adds `joist`, which must come from find_joists(p) (std::logic_error if it
// is not a valid closure).
std::shared_ptr<const Simplet> inflate(const std::shared_ptr<const Simplet>& p,
                                       LabelMask joist);

struct Expansion {
    std::shared_ptr<const Simplet> child;  // child->parent() == expanded simplet
    ExpansionRule rule = ExpansionRule::Root;
    LabelMask added = 0;
};

struct ExpansionBatch {
    std::vector<Expansion> children;
};

// All widen children (one per label, ascending, only while the simplet is
// below max_size) then all inflate children (one per joist, lexicographic),
// filtered through the registry: only Fresh classes are returned.
ExpansionBatch expand_all(const std::shared_ptr<const Simplet>& p, Registry& registry,
                          std::uint32_t max_size);

}  // namespace fresco
