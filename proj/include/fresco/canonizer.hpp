#pragma once

// Delayed canonization: cheap invariant filters first, a full canonical form
// only when they cannot separate two simplets.  The canonical form is the
// lexicographically smallest encoding of the colored bipartite incidence
// graph (labels on the left, maximal simplices on the right, right nodes
// colored by dimension), found by color refinement plus individualization.

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fresco/simplet.hpp"

namespace fresco {

struct BipartiteIncidence {
    std::uint32_t left_count = 0;     // simplet labels, all color 0
    std::vector<LabelMask> right;     // one node per maximal simplex, ascending mask
    int right_color(std::size_t i) const { return mask_size(right[i]) - 1; }  // dimension
    std::size_t edge_count() const;   // = sum of (dimension + 1) over right nodes
};

BipartiteIncidence to_bipartite(const Simplet& p);

struct CanonicalForm {
    // Byte layout (all u8; counts fit because simplets are tiny):
    //   [0]  version (1)
    //   [1]  L = label count          [2] R = maximal-simplex count
    //   [3]  K = distinct right colors, then K x (dimension, class size)
    //   then R adjacency rows in canonical right order, each
    //        (row length, canonical left labels ascending...)
    // Two simplets are isomorphic iff their bytes are equal.
    std::vector<std::uint8_t> bytes;
    std::vector<std::uint8_t> relabeling;  // original label -> canonical label

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes == b.bytes;  // relabeling is a witness, not identity
    }
};

CanonicalForm canonical_form(const Simplet& p);
std::string canonical_hex(const CanonicalForm& form);

// Maximal simplices under the canonical relabeling, in the parse_simplet()
// text format; equal exactly for isomorphic simplets.
std::string serialize_canonical(const Simplet& p);

enum class QuickCheck { Distinct, Possible };

// Invariant screen: dimension, member count, dimension sequence, sorted
// degree sequence.  Distinct is definitive; Possible is not.
QuickCheck quick_reject(const Simplet& a, const Simplet& b);

// Isomorphism of the 1-skeletons (canonical labeling of the two graphs).
bool skeleton_isomorphic(const Simplet& a, const Simplet& b);

enum class RegisterResult { Fresh, Duplicate };

// Isomorphism-class registry.  Buckets are keyed by (dimension sequence,
// sorted degree sequence); within a bucket candidates run the delayed
// pipeline quick_reject -> skeleton isomorphism -> canonical form, and forms
// are cached lazily on the stored entries.  Writes are serialized internally.
class Registry {
public:
    RegisterResult register_simplet(const std::shared_ptr<const Simplet>& p);

    std::size_t size() const;
    std::vector<std::shared_ptr<const Simplet>> all() const;
    std::uint64_t canonization_calls() const { return canon_calls_.load(); }

private:
    using Key = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
    struct Entry {
        std::shared_ptr<const Simplet> simplet;
        std::optional<CanonicalForm> full;
        std::optional<CanonicalForm> skeleton;
    };

    const CanonicalForm& full_form(Entry& e);
    const CanonicalForm& skeleton_form(Entry& e);

    mutable std::mutex mu_;
    std::map<Key, std::vector<Entry>> buckets_;
    std::size_t count_ = 0;
    std::atomic<std::uint64_t> canon_calls_{0};
};

}  // namespace fresco
