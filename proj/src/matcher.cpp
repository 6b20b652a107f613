#include "fresco/matcher.hpp"

#include <algorithm>
#include <cassert>

namespace fresco {

std::size_t min_image_count(const ImageSets& images) {
    std::size_t best = images.empty() ? 0 : images[0].count();
    for (const auto& set : images) best = std::min(best, set.count());
    return best;
}

bool satisfies_constraints(const ComplexStore& store, const Simplet& p, const MatchState& m,
                           std::uint32_t x, VertexId u) {
    VertexId buf[kMaxSimpletVertices];
    for (LabelMask sigma : p.maximal_with(x)) {
        std::size_t k = 0;
        for (LabelMask t = sigma & m.assigned; t; t &= t - 1)
            buf[k++] = m.image[std::countr_zero(t)];
        buf[k++] = u;
        std::sort(buf, buf + k);
        if (!store.is_simplex_sorted({buf, k})) return false;
    }
    return true;
}

std::vector<std::uint32_t> dfs_order(const Simplet& p, std::uint32_t start) {
    std::vector<std::uint32_t> order;
    order.reserve(p.num_vertices());
    LabelMask visited = 0;
    // explicit stack; pushing neighbors in descending label pops them ascending
    std::vector<std::uint32_t> stack{start};
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        if (visited & (LabelMask{1} << v)) continue;
        visited |= LabelMask{1} << v;
        order.push_back(v);
        auto nbrs = mask_labels(p.skeleton_adjacency(v));
        for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it)
            if (!(visited & (LabelMask{1} << *it))) stack.push_back(*it);
    }
    assert(order.size() == p.num_vertices());
    return order;
}

namespace {

struct MatchSearch {
    const ComplexStore& store;
    const Simplet& p;
    MatchState& m;
    const std::vector<std::uint32_t>& order;
    Deadline deadline;
    const ImageSets* restrict_to;

    MatchResult run(std::size_t depth) {
        if (deadline && std::chrono::steady_clock::now() >= *deadline)
            return MatchResult::TimedOut;
        if (depth == order.size()) return MatchResult::Complete;

        const std::uint32_t x = order[depth];
        // Common complex-neighbors of the assigned skeleton neighbors of x.
        // The DFS order guarantees at least one, so candidates never fall
        // back to the whole vertex set.
        LabelMask anchors = p.skeleton_adjacency(x) & m.assigned;
        assert(anchors != 0);
        const std::vector<VertexId>* smallest = nullptr;
        for (LabelMask t = anchors; t; t &= t - 1) {
            const auto& nbr = store.neighbors(m.image[std::countr_zero(t)]);
            if (!smallest || nbr.size() < smallest->size()) smallest = &nbr;
        }
        for (VertexId u : *smallest) {
            bool ok = true;
            for (LabelMask t = anchors; t; t &= t - 1) {
                const auto& nbr = store.neighbors(m.image[std::countr_zero(t)]);
                if (&nbr == smallest) continue;
                if (!std::binary_search(nbr.begin(), nbr.end(), u)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (restrict_to && !(*restrict_to)[x].contains(u)) continue;
            if (m.uses_vertex(u)) continue;
            if (!satisfies_constraints(store, p, m, x, u)) continue;
            m.assign(x, u);
            MatchResult r = run(depth + 1);
            if (r == MatchResult::Complete) return r;  // keep the full assignment readable
            m.unassign(x);
            if (r == MatchResult::TimedOut) return r;
        }
        return MatchResult::Partial;
    }
};

}  // namespace

MatchResult find_match(const ComplexStore& store, const Simplet& p, MatchState& m,
                       const std::vector<std::uint32_t>& order, Deadline deadline,
                       const ImageSets* restrict_to) {
    assert(!order.empty() && m.has(order[0]));
    MatchSearch search{store, p, m, order, deadline, restrict_to};
    return search.run(1);
}

void propagate(ImageSets& images, const MatchState& complete, const OrbitPartition& orbits) {
    for (std::uint32_t v = 0; v < images.size(); ++v) {
        VertexId u = complete.image[v];
        for (std::uint32_t mate : orbits.members[orbits.orbit_of[v]]) images[mate].insert(u);
    }
}

namespace {

struct ExamineDriver {
    const ComplexStore& store;
    const Simplet& p;
    std::size_t tau;

    ImageSets images;
    std::vector<std::vector<std::uint32_t>> orders;  // per-label DFS order, lazy

    explicit ExamineDriver(const ComplexStore& s, const Simplet& simplet, std::size_t t)
        : store(s), p(simplet), tau(t) {
        // Seeding: every vertex of a maximal simplex with >= |V_P| vertices
        // hosts every label of P (all subsets of a simplex are simplices).
        VertexSet seeds(store.num_vertices());
        for (VertexId u : store.seed_vertices(p.num_vertices())) seeds.insert(u);
        images.assign(p.num_vertices(), seeds);
        orders.resize(p.num_vertices());
    }

    const std::vector<std::uint32_t>& order_for(std::uint32_t v) {
        if (orders[v].empty()) orders[v] = dfs_order(p, v);
        return orders[v];
    }

    // One seed attempt for label v; updates images/nc and reports a timeout
    // by returning false so the caller can queue u for the resume pass.
    bool try_seed(std::uint32_t v, VertexId u, Deadline deadline, const ImageSets* restrict_to,
                  NonCandidates* nc) {
        if (images[v].contains(u)) return true;  // witnessed meanwhile
        if (store.degree(u) < p.skeleton_degree(v)) return true;  // cannot host v
        MatchState m(p.num_vertices());
        m.assign(v, u);
        MatchResult r = find_match(store, p, m, order_for(v), deadline, restrict_to);
        if (r == MatchResult::TimedOut) return false;
        if (r == MatchResult::Complete) {
            propagate(images, m, p.orbits());
        } else if (nc) {
            (*nc)[v].insert(u);
        }
        return true;
    }
};

}  // namespace

ExamineOutcome examine_decision(const ComplexStore& store, const Simplet& p,
                                const ParentContext& parent, std::size_t tau,
                                std::optional<std::chrono::milliseconds> budget) {
    ExamineDriver driver(store, p, tau);
    const std::uint32_t n = p.num_vertices();
    const std::uint32_t inherited = parent.nc ? std::min(p.inherited_labels(), n) : 0;

    NonCandidates nc(n, VertexSet(store.num_vertices()));
    for (std::uint32_t v = 0; v < inherited; ++v) nc[v] = (*parent.nc)[v];

    ExamineOutcome out;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (driver.images[v].count() >= tau) continue;

        std::vector<VertexId> cands;
        for (VertexId u = 0; u < store.num_vertices(); ++u)
            if (!driver.images[v].contains(u) && !nc[v].contains(u)) cands.push_back(u);
        // Parent images first: vertices that hosted v in the parent are the
        // most likely to host it here.
        if (parent.images && v < p.inherited_labels()) {
            const VertexSet& hint = (*parent.images)[v];
            std::stable_partition(cands.begin(), cands.end(),
                                  [&](VertexId u) { return hint.contains(u); });
        }
        if (driver.images[v].count() + cands.size() < tau) return out;  // unreachable tau

        std::vector<VertexId> resume;
        bool enough = false;
        for (std::size_t i = 0; i < cands.size() && !enough; ++i) {
            Deadline deadline;
            if (budget) deadline = std::chrono::steady_clock::now() + *budget;
            if (!driver.try_seed(v, cands[i], deadline, nullptr, &nc))
                resume.push_back(cands[i]);
            if (driver.images[v].count() >= tau) {
                enough = true;
                break;
            }
            std::size_t remaining = cands.size() - i - 1 + resume.size();
            if (driver.images[v].count() + remaining < tau) return out;
        }
        // Seeds whose budget expired are retried without a deadline: the
        // verdict stays exact, only time is spent.
        for (std::size_t i = 0; i < resume.size() && !enough; ++i) {
            driver.try_seed(v, resume[i], std::nullopt, nullptr, &nc);
            if (driver.images[v].count() >= tau) {
                enough = true;
                break;
            }
            std::size_t remaining = resume.size() - i - 1;
            if (driver.images[v].count() + remaining < tau) return out;
        }
        if (driver.images[v].count() < tau) return out;
    }

    out.frequent = true;
    out.images = std::move(driver.images);
    out.nc = std::move(nc);
    return out;
}

ExamineOutcome examine_exact(const ComplexStore& store, const Simplet& p,
                             const ParentContext& parent, std::size_t tau) {
    ExamineDriver driver(store, p, tau);
    const std::uint32_t n = p.num_vertices();
    const std::uint32_t inherited = parent.images ? std::min(p.inherited_labels(), n) : 0;

    // Candidate universe per label: the parent's (complete) image set for
    // inherited labels, every vertex for fresh ones.
    ImageSets universe(n, VertexSet(store.num_vertices(), true));
    for (std::uint32_t v = 0; v < inherited; ++v) universe[v] = (*parent.images)[v];

    std::vector<std::uint32_t> label_order(n);
    for (std::uint32_t v = 0; v < n; ++v) label_order[v] = v;
    std::sort(label_order.begin(), label_order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (universe[a].count() != universe[b].count())
            return universe[a].count() < universe[b].count();
        return a < b;
    });

    ExamineOutcome out;
    for (std::uint32_t v : label_order) {
        std::vector<VertexId> cands;
        for (VertexId u : universe[v].to_vector())
            if (!driver.images[v].contains(u)) cands.push_back(u);
        if (driver.images[v].count() + cands.size() < tau) return out;
        // No early break at tau here: exact image sets must be complete.
        for (std::size_t i = 0; i < cands.size(); ++i) {
            driver.try_seed(v, cands[i], std::nullopt, &universe, nullptr);
            std::size_t remaining = cands.size() - i - 1;
            if (driver.images[v].count() + remaining < tau) return out;
        }
    }

    out.frequent = true;
    out.support = min_image_count(driver.images);
    out.images = std::move(driver.images);
    return out;
}

}  // namespace fresco
