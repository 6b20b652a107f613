#pragma once

// Simplet = connected, downward-closed simplex pattern over labels 0..n-1.
// Member simplices are label bitmasks; the full closed family is stored (a
// simplet never has more than a handful of labels, so this stays tiny).
// Instances are immutable; every derived view (sequences, orbits, skeleton
// adjacency) is computed once at construction.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fresco/simplex.hpp"

namespace fresco {

enum class ExpansionRule { Root, Widen, Inflate };

// Automorphism orbits of the labels; labels in one orbit are interchangeable,
// so one complete match witnesses an image-set vertex for the whole orbit.
struct OrbitPartition {
    std::vector<std::uint32_t> orbit_of;              // label -> orbit id
    std::vector<std::vector<std::uint32_t>> members;  // orbit id -> labels, ascending
    std::vector<std::vector<std::uint8_t>> automorphisms;  // permutations, identity first
};

class Simplet {
public:
    static std::shared_ptr<const Simplet> single_vertex();

    // Validates: 1 <= n <= kMaxSimpletVertices, members downward closed,
    // every label used, connected through the 1-simplices.  Throws
    // std::invalid_argument otherwise.
    static std::shared_ptr<const Simplet> create(std::uint32_t num_vertices,
                                                 std::vector<LabelMask> members);

    // Same validation, plus records how the simplet was derived.  Inherited
    // labels keep their parent identity (0..parent->num_vertices()-1).
    static std::shared_ptr<const Simplet> expanded(std::shared_ptr<const Simplet> parent,
                                                   ExpansionRule rule, LabelMask added,
                                                   std::uint32_t num_vertices,
                                                   std::vector<LabelMask> members);

    std::uint32_t num_vertices() const { return n_; }
    int dimension() const { return static_cast<int>(dim_seq_.size()) - 1; }

    const std::vector<LabelMask>& members() const { return members_; }  // ascending mask
    const std::vector<LabelMask>& maximal() const { return maximal_; }  // ascending mask
    bool is_member(LabelMask m) const;

    // dim_sequence()[d] = number of d-dimensional members.
    const std::vector<std::uint32_t>& dim_sequence() const { return dim_seq_; }
    // Per-label member counts, reported sorted ascending.
    const std::vector<std::uint32_t>& degree_sequence() const { return degree_sorted_; }
    std::uint32_t degree_of(std::uint32_t label) const { return degree_by_label_[label]; }

    LabelMask skeleton_adjacency(std::uint32_t label) const { return skel_adj_[label]; }
    std::uint32_t skeleton_degree(std::uint32_t label) const {
        return static_cast<std::uint32_t>(mask_size(skel_adj_[label]));
    }
    const std::vector<LabelMask>& maximal_with(std::uint32_t label) const {
        return maximal_with_[label];
    }

    const OrbitPartition& orbits() const { return orbits_; }

    const std::shared_ptr<const Simplet>& parent() const { return parent_; }
    ExpansionRule rule() const { return rule_; }
    LabelMask added_simplex() const { return added_; }
    // Labels below this count carry their meaning over from the parent.
    std::uint32_t inherited_labels() const { return parent_ ? parent_->num_vertices() : 0; }

    bool same_members(const Simplet& other) const {
        return n_ == other.n_ && members_ == other.members_;
    }

private:
    Simplet() = default;
    void derive();  // fills every cached view; throws on invalid input

    std::uint32_t n_ = 0;
    std::vector<LabelMask> members_;
    std::vector<LabelMask> maximal_;
    std::vector<std::uint32_t> dim_seq_;
    std::vector<std::uint32_t> degree_by_label_;
    std::vector<std::uint32_t> degree_sorted_;
    std::vector<LabelMask> skel_adj_;
    std::vector<std::vector<LabelMask>> maximal_with_;
    OrbitPartition orbits_;

    std::shared_ptr<const Simplet> parent_;
    ExpansionRule rule_ = ExpansionRule::Root;
    LabelMask added_ = 0;
};

// Closure of the given simplices under taking faces (singletons included).
std::vector<LabelMask> downward_closure(const std::vector<LabelMask>& simplices);

// Parses "0,1,2;2,3": comma-separated labels per simplex, semicolons between
// simplices; the downward closure is added.  Throws std::invalid_argument on
// malformed text or labels violating the simplet contract.
std::shared_ptr<const Simplet> parse_simplet(const std::string& text);

// Maximal simplices under the current labels in the same textual format
// (lexicographic simplex order).  Not canonical: isomorphic simplets with
// different labelings stringify differently; see serialize_canonical().
std::string simplet_to_string(const Simplet& p);

}  // namespace fresco
