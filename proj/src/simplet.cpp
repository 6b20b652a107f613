#include "fresco/simplet.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fresco {

namespace {

// Depth-first automorphism search assigning labels 0..n-1 in order.  Degrees
// prune candidates; members are verified as soon as their last label gets an
// image, so dead branches die early.
struct AutoSearch {
    const Simplet& p;
    std::uint32_t n;
    std::vector<std::vector<LabelMask>> members_by_max;  // grouped by highest label
    std::vector<std::uint8_t> perm;
    std::uint32_t used = 0;  // mask of taken image labels
    std::vector<std::vector<std::uint8_t>> found;

    explicit AutoSearch(const Simplet& simplet) : p(simplet), n(simplet.num_vertices()) {
        members_by_max.resize(n);
        for (LabelMask m : p.members())
            members_by_max[31 - std::countl_zero(m)].push_back(m);
        perm.resize(n);
        dfs(0);
    }

    LabelMask apply(LabelMask m) const {
        LabelMask out = 0;
        for (LabelMask t = m; t; t &= t - 1) out |= LabelMask{1} << perm[std::countr_zero(t)];
        return out;
    }

    void dfs(std::uint32_t next) {
        if (next == n) {
            found.emplace_back(perm);
            return;
        }
        for (std::uint32_t img = 0; img < n; ++img) {
            if (used & (LabelMask{1} << img)) continue;
            if (p.degree_of(img) != p.degree_of(next)) continue;
            if (p.skeleton_degree(img) != p.skeleton_degree(next)) continue;
            perm[next] = img;
            used |= LabelMask{1} << img;
            bool ok = true;
            for (LabelMask m : members_by_max[next]) {
                if (!p.is_member(apply(m))) {
                    ok = false;
                    break;
                }
            }
            if (ok) dfs(next + 1);
            used &= ~(LabelMask{1} << img);
        }
    }
};

}  // namespace

std::vector<LabelMask> downward_closure(const std::vector<LabelMask>& simplices) {
    std::vector<LabelMask> out = simplices;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // Repeatedly add every drop-one-label face until stable; sorted-vector
    // membership keeps this simple at simplet scale.
    std::vector<LabelMask> frontier = out;
    while (!frontier.empty()) {
        std::vector<LabelMask> next;
        for (LabelMask m : frontier) {
            if (mask_size(m) < 2) continue;
            for (LabelMask t = m; t; t &= t - 1) {
                LabelMask face = m & ~(t & -t);
                if (!std::binary_search(out.begin(), out.end(), face)) next.push_back(face);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<LabelMask> merged;
        std::merge(out.begin(), out.end(), next.begin(), next.end(), std::back_inserter(merged));
        out = std::move(merged);
        frontier = std::move(next);
    }
    return out;
}

std::shared_ptr<const Simplet> Simplet::single_vertex() {
    return create(1, {LabelMask{1}});
}

std::shared_ptr<const Simplet> Simplet::create(std::uint32_t num_vertices,
                                               std::vector<LabelMask> members) {
    auto p = std::shared_ptr<Simplet>(new Simplet());
    p->n_ = num_vertices;
    p->members_ = std::move(members);
    p->derive();
    return p;
}

std::shared_ptr<const Simplet> Simplet::expanded(std::shared_ptr<const Simplet> parent,
                                                 ExpansionRule rule, LabelMask added,
                                                 std::uint32_t num_vertices,
                                                 std::vector<LabelMask> members) {
    auto p = std::shared_ptr<Simplet>(new Simplet());
    p->n_ = num_vertices;
    p->members_ = std::move(members);
    p->parent_ = std::move(parent);
    p->rule_ = rule;
    p->added_ = added;
    p->derive();
    return p;
}

bool Simplet::is_member(LabelMask m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
}

void Simplet::derive() {
    if (n_ < 1 || n_ > kMaxSimpletVertices)
        throw std::invalid_argument("simplet: vertex count out of range");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty()) throw std::invalid_argument("simplet: no member simplices");

    const LabelMask all = (n_ == 32) ? ~LabelMask{0} : (LabelMask{1} << n_) - 1;
    LabelMask covered = 0;
    for (LabelMask m : members_) {
        if (m == 0 || (m & ~all)) throw std::invalid_argument("simplet: member uses unknown label");
        covered |= m;
    }
    if (covered != all) throw std::invalid_argument("simplet: unused label");

    for (LabelMask m : members_) {
        if (mask_size(m) < 2) continue;
        for (LabelMask t = m; t; t &= t - 1) {
            if (!is_member(m & ~(t & -t)))
                throw std::invalid_argument("simplet: not downward closed");
        }
    }

    // Connectivity through 1-simplices.
    skel_adj_.assign(n_, 0);
    for (LabelMask m : members_) {
        if (mask_size(m) != 2) continue;
        auto l = mask_labels(m);
        skel_adj_[l[0]] |= LabelMask{1} << l[1];
        skel_adj_[l[1]] |= LabelMask{1} << l[0];
    }
    LabelMask reach = 1;
    while (true) {
        LabelMask next = reach;
        for (LabelMask t = reach; t; t &= t - 1) next |= skel_adj_[std::countr_zero(t)];
        if (next == reach) break;
        reach = next;
    }
    if (reach != all) throw std::invalid_argument("simplet: not connected");

    int dim = 0;
    for (LabelMask m : members_) dim = std::max(dim, mask_size(m) - 1);
    dim_seq_.assign(dim + 1, 0);
    for (LabelMask m : members_) ++dim_seq_[mask_size(m) - 1];

    degree_by_label_.assign(n_, 0);
    for (LabelMask m : members_)
        for (LabelMask t = m; t; t &= t - 1) ++degree_by_label_[std::countr_zero(t)];
    degree_sorted_ = degree_by_label_;
    std::sort(degree_sorted_.begin(), degree_sorted_.end());

    maximal_.clear();
    for (LabelMask m : members_) {
        bool strict_subset = false;
        for (LabelMask o : members_) {
            if (o != m && mask_subset(m, o)) {
                strict_subset = true;
                break;
            }
        }
        if (!strict_subset) maximal_.push_back(m);
    }

    maximal_with_.assign(n_, {});
    for (LabelMask m : maximal_)
        for (LabelMask t = m; t; t &= t - 1) maximal_with_[std::countr_zero(t)].push_back(m);

    AutoSearch search(*this);
    orbits_.automorphisms = std::move(search.found);
    orbits_.orbit_of.resize(n_);
    std::vector<std::uint32_t> rep(n_);  // union-find, path halving
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](std::uint32_t x) {
        while (rep[x] != x) x = rep[x] = rep[rep[x]];
        return x;
    };
    for (const auto& perm : orbits_.automorphisms)
        for (std::uint32_t l = 0; l < n_; ++l) rep[find(l)] = find(perm[l]);
    std::vector<std::int32_t> orbit_id(n_, -1);
    std::uint32_t orbit_count = 0;
    for (std::uint32_t l = 0; l < n_; ++l) {
        std::uint32_t r = find(l);
        if (orbit_id[r] < 0) orbit_id[r] = static_cast<std::int32_t>(orbit_count++);
        orbits_.orbit_of[l] = static_cast<std::uint32_t>(orbit_id[r]);
    }
    orbits_.members.assign(orbit_count, {});
    for (std::uint32_t l = 0; l < n_; ++l) orbits_.members[orbits_.orbit_of[l]].push_back(l);
}

std::shared_ptr<const Simplet> parse_simplet(const std::string& text) {
    std::vector<LabelMask> simplices;
    std::uint32_t max_label = 0;
    std::string chunk;
    std::stringstream ss(text);
    bool any = false;
    while (std::getline(ss, chunk, ';')) {
        std::vector<std::uint32_t> labels;
        std::stringstream cs(chunk);
        std::string tok;
        while (std::getline(cs, tok, ',')) {
            std::size_t pos = tok.find_first_not_of(" \t");
            std::size_t last = tok.find_last_not_of(" \t");
            if (pos == std::string::npos) throw std::invalid_argument("simplet: empty label");
            tok = tok.substr(pos, last - pos + 1);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("simplet: bad label '" + tok + "'");
            std::uint32_t l = static_cast<std::uint32_t>(std::stoul(tok));
            if (l >= kMaxSimpletVertices) throw std::invalid_argument("simplet: label too large");
            labels.push_back(l);
            max_label = std::max(max_label, l);
        }
        if (labels.empty()) throw std::invalid_argument("simplet: empty simplex");
        simplices.push_back(labels_to_mask(labels));
        any = true;
    }
    if (!any) throw std::invalid_argument("simplet: empty description");
    return Simplet::create(max_label + 1, downward_closure(simplices));
}

std::string simplet_to_string(const Simplet& p) {
    std::vector<LabelMask> maximal = p.maximal();
    std::sort(maximal.begin(), maximal.end(), mask_lex_less);
    std::string out;
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        if (i) out += ';';
        auto labels = mask_labels(maximal[i]);
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(labels[j]);
        }
    }
    return out;
}

}  // namespace fresco
