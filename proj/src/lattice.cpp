#include "fresco/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace fresco {

JoistIndex build_joist_index(const Simplet& p) {
    JoistIndex index;
    for (LabelMask m : p.members()) {
        if (mask_size(m) < 2) continue;
        for (LabelMask t = m; t; t &= t - 1) index[m & ~(t & -t)].push_back(m);
    }
    return index;
}

namespace {

// tau qualifies as a joist: absent itself, every drop-one-label coface present.
bool is_joist(const Simplet& p, LabelMask tau) {
    if (p.is_member(tau)) return false;
    for (LabelMask t = tau; t; t &= t - 1)
        if (!p.is_member(tau & ~(t & -t))) return false;
    return true;
}

}  // namespace

std::vector<LabelMask> find_joists(const Simplet& p) {
    std::vector<LabelMask> out;

    // Open joists: label pairs without a connecting 1-simplex.
    const std::uint32_t n = p.num_vertices();
    for (std::uint32_t u = 0; u + 1 < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) {
            LabelMask pair = (LabelMask{1} << u) | (LabelMask{1} << v);
            if (!p.is_member(pair)) out.push_back(pair);
        }

    // Higher joists tau = sigma + w: any two cofaces of tau share a face, so
    // scanning face-sharing member pairs through the index reaches every
    // candidate; each one is then verified directly.
    JoistIndex index = build_joist_index(p);
    std::vector<LabelMask> cand;
    for (const auto& [face, sharers] : index) {
        if (sharers.size() < 2) continue;
        for (std::size_t i = 0; i < sharers.size(); ++i)
            for (std::size_t j = i + 1; j < sharers.size(); ++j)
                cand.push_back(sharers[i] | sharers[j]);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (LabelMask tau : cand)
        if (is_joist(p, tau)) out.push_back(tau);

    std::sort(out.begin(), out.end(), mask_lex_less);
    return out;
}

std::shared_ptr<const Simplet> widen(const std::shared_ptr<const Simplet>& p,
                                     std::uint32_t anchor) {
    const std::uint32_t fresh = p->num_vertices();
    LabelMask edge = (LabelMask{1} << anchor) | (LabelMask{1} << fresh);
    std::vector<LabelMask> members = p->members();
    members.push_back(LabelMask{1} << fresh);
    members.push_back(edge);
    return Simplet::expanded(p, ExpansionRule::Widen, edge, fresh + 1, std::move(members));
}

std::shared_ptr<const Simplet> inflate(const std::shared_ptr<const Simplet>& p,
                                       LabelMask joist) {
    if (!is_joist(*p, joist)) throw std::logic_error("inflate: not a joist of this simplet");
    std::vector<LabelMask> members = p->members();
    members.push_back(joist);
    return Simplet::expanded(p, ExpansionRule::Inflate, joist, p->num_vertices(),
                             std::move(members));
}

ExpansionBatch expand_all(const std::shared_ptr<const Simplet>& p, Registry& registry,
                          std::uint32_t max_size) {
    ExpansionBatch batch;
    if (p->num_vertices() < max_size) {
        for (std::uint32_t anchor = 0; anchor < p->num_vertices(); ++anchor) {
            auto child = widen(p, anchor);
            if (registry.register_simplet(child) == RegisterResult::Fresh)
                batch.children.push_back({child, ExpansionRule::Widen, child->added_simplex()});
        }
    }
    for (LabelMask joist : find_joists(*p)) {
        auto child = inflate(p, joist);
        if (registry.register_simplet(child) == RegisterResult::Fresh)
            batch.children.push_back({child, ExpansionRule::Inflate, joist});
    }
    return batch;
}

}  // namespace fresco
