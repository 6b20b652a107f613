#pragma once

// Support computation.  SUP(P) = min over labels v of |I_P(v)|, where I_P(v)
// collects the complex vertices some occurrence assigns to v; occurrences map
// every member simplex of P onto a simplex of the complex (non-induced).
// Decision mode answers "SUP >= tau?" with truncated image sets, per-seed
// time budgets and non-candidate inheritance; exact mode computes complete
// image sets by narrowing candidates to the parent's image sets.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "fresco/complex_store.hpp"
#include "fresco/simplet.hpp"

namespace fresco {

// Fixed-universe vertex set over dense complex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe, bool full = false)
        : bits_(universe, full ? 1 : 0), count_(full ? universe : 0) {}

    bool insert(VertexId u) {
        if (bits_[u]) return false;
        bits_[u] = 1;
        ++count_;
        return true;
    }
    bool contains(VertexId u) const { return bits_[u] != 0; }
    std::size_t count() const { return count_; }
    std::size_t universe() const { return bits_.size(); }
    std::vector<VertexId> to_vector() const {
        std::vector<VertexId> out;
        out.reserve(count_);
        for (VertexId u = 0; u < bits_.size(); ++u)
            if (bits_[u]) out.push_back(u);
        return out;
    }

private:
    std::vector<char> bits_;
    std::size_t count_ = 0;
};

using ImageSets = std::vector<VertexSet>;      // simplet label -> image set
using NonCandidates = std::vector<VertexSet>;  // simplet label -> proven dead seeds

std::size_t min_image_count(const ImageSets& images);

// Partial injective assignment label -> complex vertex.
struct MatchState {
    explicit MatchState(std::uint32_t labels) : image(labels, 0) {}
    std::vector<VertexId> image;
    LabelMask assigned = 0;

    void assign(std::uint32_t label, VertexId u) {
        image[label] = u;
        assigned |= LabelMask{1} << label;
    }
    void unassign(std::uint32_t label) { assigned &= ~(LabelMask{1} << label); }
    bool has(std::uint32_t label) const { return assigned & (LabelMask{1} << label); }
    bool uses_vertex(VertexId u) const {
        for (LabelMask t = assigned; t; t &= t - 1)
            if (image[std::countr_zero(t)] == u) return true;
        return false;
    }
};

// Would extending m by x -> u keep every member simplex of P embeddable?  It
// suffices to check the maximal members containing x: the already-assigned
// part of each, plus u, must span a simplex of the complex.
bool satisfies_constraints(const ComplexStore& store, const Simplet& p, const MatchState& m,
                           std::uint32_t x, VertexId u);

// Depth-first order over P's 1-skeleton from `start`, neighbors ascending;
// every label after the first has an already-ordered skeleton neighbor.
std::vector<std::uint32_t> dfs_order(const Simplet& p, std::uint32_t start);

enum class MatchResult { Complete, Partial, TimedOut };

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

// Backtracking search completing m along `order` (whose first label must be
// the one already assigned).  Candidates for each label are the common
// complex-neighbors of its assigned skeleton neighbors, minus used vertices,
// optionally intersected with restrict[label] (exact mode).  Partial means
// exhaustively refuted; TimedOut means the deadline cut the search short.
MatchResult find_match(const ComplexStore& store, const Simplet& p, MatchState& m,
                       const std::vector<std::uint32_t>& order, Deadline deadline,
                       const ImageSets* restrict_to);

// Records a complete assignment in the image sets of every orbit-mate of
// each label (interchangeable labels share occurrences).
void propagate(ImageSets& images, const MatchState& complete, const OrbitPartition& orbits);

struct ExamineOutcome {
    bool frequent = false;
    ImageSets images;    // decision: possibly truncated at tau; exact: complete
    NonCandidates nc;    // decision mode only: refuted seeds, for the children
    std::size_t support = 0;  // exact mode: SUP(P); decision mode: 0
};

// Parent context under identity label inheritance; both pointers may be null
// (labels then count as fresh).  Decision mode reads images only as a
// candidate-ordering hint; exact mode requires them complete.
struct ParentContext {
    const ImageSets* images = nullptr;
    const NonCandidates* nc = nullptr;
};

// Decision mode: per-seed budget, inherited non-candidates, early Infrequent
// whenever some label can no longer reach tau.  Seeds that time out are
// retried after the candidate pass without a deadline, so the verdict is
// exact even though image sets may be truncated.
ExamineOutcome examine_decision(const ComplexStore& store, const Simplet& p,
                                const ParentContext& parent, std::size_t tau,
                                std::optional<std::chrono::milliseconds> budget);

// Exact mode: complete image sets, labels processed by ascending inherited
// image-set size, no deadline.
ExamineOutcome examine_exact(const ComplexStore& store, const Simplet& p,
                             const ParentContext& parent, std::size_t tau);

}  // namespace fresco
