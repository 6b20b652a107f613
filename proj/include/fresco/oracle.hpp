#pragma once

// Brute-force reference implementations used by the test suites and the
// hidden CLI subcommand.  Nothing here shares search logic with the engine:
// membership is answered from an explicitly expanded set of all faces, and
// occurrences/isomorphisms are found by exhaustive enumeration.  Deliberately
// only usable at desk scale; guards throw std::runtime_error beyond it.

#include <cstdint>
#include <memory>
#include <vector>

#include "fresco/complex_store.hpp"
#include "fresco/simplet.hpp"

namespace fresco::oracle {

// Every injective label->vertex map under which all member simplices of p
// land on faces of the store (dense ids; embedding[label] = vertex).
// Guard: |V_K|^|V_P| must not exceed 1e8.
std::vector<std::vector<VertexId>> oracle_embeddings(const ComplexStore& store, const Simplet& p);

// min over labels of |{v : some embedding maps the label to v}|.
std::size_t oracle_sup(const ComplexStore& store, const Simplet& p);

// Exhaustive permutation search for a member-set-preserving bijection.
bool oracle_isomorphic(const Simplet& a, const Simplet& b);

// Every simplet class with at most max_size vertices (max_size <= 5): all
// labeled downward-closed connected families, deduplicated by
// oracle_isomorphic.  Order: vertex count, then member count, then lex.
std::vector<std::shared_ptr<const Simplet>> oracle_enumerate_simplets(std::uint32_t max_size);

// Relabeling by a permutation (perm[old] = new); for canonizer fuzzing.
std::shared_ptr<const Simplet> permute_simplet(const Simplet& p,
                                               const std::vector<std::uint32_t>& perm);

}  // namespace fresco::oracle
