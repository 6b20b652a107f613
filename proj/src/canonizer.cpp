#include "fresco/canonizer.hpp"

#include <algorithm>

namespace fresco {

namespace {

// Individualization-refinement over the bipartite incidence graph.  Nodes
// 0..L-1 are labels, L..L+R-1 maximal simplices.  The ordered partition
// starts from (side, dimension, degree) classes; refinement splits cells by
// the multiset of neighbor cells; when a cell stays ambiguous we branch on
// each of its members and keep the smallest complete encoding.  Branching
// always targets the first smallest ambiguous cell, so the explored tree --
// and hence the minimum -- depends only on the isomorphism class.
struct Canonizer {
    std::uint32_t left = 0;
    std::uint32_t total = 0;
    std::vector<std::vector<std::uint32_t>> adj;  // neighbor node ids, ascending
    std::vector<LabelMask> right;

    std::vector<std::uint8_t> best;
    std::vector<std::uint8_t> best_relabel;
    bool have_best = false;

    using Partition = std::vector<std::vector<std::uint32_t>>;  // ordered cells

    explicit Canonizer(const BipartiteIncidence& b) : left(b.left_count), right(b.right) {
        total = left + static_cast<std::uint32_t>(right.size());
        adj.assign(total, {});
        for (std::uint32_t r = 0; r < right.size(); ++r) {
            for (LabelMask t = right[r]; t; t &= t - 1) {
                std::uint32_t l = static_cast<std::uint32_t>(std::countr_zero(t));
                adj[l].push_back(left + r);
                adj[left + r].push_back(l);
            }
        }

        Partition cells = initial_partition();
        refine(cells);
        descend(cells);
    }

    Partition initial_partition() const {
        // key = (side, dimension, degree); left nodes have dimension 0.
        std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed(total);
        for (std::uint32_t v = 0; v < total; ++v) {
            std::uint64_t side = v >= left;
            std::uint64_t dim = side ? static_cast<std::uint64_t>(mask_size(right[v - left]) - 1) : 0;
            keyed[v] = {(side << 40) | (dim << 20) | adj[v].size(), v};
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        Partition cells;
        for (std::uint32_t i = 0; i < total; ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) cells.emplace_back();
            cells.back().push_back(keyed[i].second);
        }
        return cells;
    }

    void refine(Partition& cells) const {
        std::vector<std::uint32_t> cell_of(total);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (auto v : cells[c]) cell_of[v] = static_cast<std::uint32_t>(c);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() < 2) continue;
                // signature = sorted multiset of neighbor cell indices
                std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> sig;
                sig.reserve(cells[c].size());
                for (auto v : cells[c]) {
                    std::vector<std::uint32_t> s;
                    s.reserve(adj[v].size());
                    for (auto w : adj[v]) s.push_back(cell_of[w]);
                    std::sort(s.begin(), s.end());
                    sig.emplace_back(std::move(s), v);
                }
                std::stable_sort(sig.begin(), sig.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                bool split = false;
                for (std::size_t i = 1; i < sig.size(); ++i)
                    if (sig[i].first != sig[i - 1].first) split = true;
                if (!split) continue;
                Partition replaced;
                for (std::size_t i = 0; i < sig.size(); ++i) {
                    if (i == 0 || sig[i].first != sig[i - 1].first) replaced.emplace_back();
                    replaced.back().push_back(sig[i].second);
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c),
                             replaced.begin(), replaced.end());
                changed = true;
                break;  // restart with fresh cell indices
            }
        }
    }

    void descend(Partition& cells) {
        // first smallest ambiguous cell, if any
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() > 1 &&
                (target == cells.size() || cells[c].size() < cells[target].size()))
                target = c;
        }
        if (target == cells.size()) {
            consider(cells);
            return;
        }
        std::vector<std::uint32_t> candidates = cells[target];
        std::sort(candidates.begin(), candidates.end());
        for (auto v : candidates) {
            Partition next;
            next.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    next.push_back(cells[c]);
                    continue;
                }
                next.push_back({v});
                std::vector<std::uint32_t> rest;
                for (auto w : cells[c])
                    if (w != v) rest.push_back(w);
                next.push_back(std::move(rest));
            }
            refine(next);
            descend(next);
        }
    }

    void consider(const Partition& cells) {
        // discrete partition -> candidate node order -> candidate encoding
        std::vector<std::uint32_t> order;
        order.reserve(total);
        for (const auto& c : cells) order.push_back(c[0]);

        std::vector<std::uint8_t> relabel(left, 0);
        std::vector<std::uint32_t> right_order;
        std::uint8_t next_left = 0;
        for (auto v : order) {
            if (v < left)
                relabel[v] = next_left++;
            else
                right_order.push_back(v - left);
        }

        std::vector<std::uint8_t> bytes;
        bytes.push_back(1);
        bytes.push_back(static_cast<std::uint8_t>(left));
        bytes.push_back(static_cast<std::uint8_t>(right.size()));
        std::map<int, std::uint8_t> dim_counts;
        for (std::size_t r = 0; r < right.size(); ++r) ++dim_counts[mask_size(right[r]) - 1];
        bytes.push_back(static_cast<std::uint8_t>(dim_counts.size()));
        for (auto [dim, count] : dim_counts) {
            bytes.push_back(static_cast<std::uint8_t>(dim));
            bytes.push_back(count);
        }
        for (auto r : right_order) {
            std::vector<std::uint8_t> row;
            for (LabelMask t = right[r]; t; t &= t - 1)
                row.push_back(relabel[std::countr_zero(t)]);
            std::sort(row.begin(), row.end());
            bytes.push_back(static_cast<std::uint8_t>(row.size()));
            bytes.insert(bytes.end(), row.begin(), row.end());
        }

        if (!have_best || bytes < best) {
            best = std::move(bytes);
            best_relabel = std::move(relabel);
            have_best = true;
        }
    }
};

std::shared_ptr<const Simplet> skeleton_simplet(const Simplet& p) {
    std::vector<LabelMask> members;
    for (LabelMask m : p.members())
        if (mask_size(m) <= 2) members.push_back(m);
    return Simplet::create(p.num_vertices(), std::move(members));
}

}  // namespace

std::size_t BipartiteIncidence::edge_count() const {
    std::size_t n = 0;
    for (LabelMask m : right) n += static_cast<std::size_t>(mask_size(m));
    return n;
}

BipartiteIncidence to_bipartite(const Simplet& p) {
    BipartiteIncidence b;
    b.left_count = p.num_vertices();
    b.right = p.maximal();
    return b;
}

CanonicalForm canonical_form(const Simplet& p) {
    if (p.maximal().size() > 255)
        throw std::invalid_argument("simplet too large to canonize");
    Canonizer c(to_bipartite(p));
    return CanonicalForm{std::move(c.best), std::move(c.best_relabel)};
}

std::string canonical_hex(const CanonicalForm& form) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(form.bytes.size() * 2);
    for (auto b : form.bytes) {
        out += digits[b >> 4];
        out += digits[b & 0xf];
    }
    return out;
}

std::string serialize_canonical(const Simplet& p) {
    CanonicalForm form = canonical_form(p);
    std::vector<LabelMask> maximal;
    for (LabelMask m : p.maximal()) {
        LabelMask mapped = 0;
        for (LabelMask t = m; t; t &= t - 1)
            mapped |= LabelMask{1} << form.relabeling[std::countr_zero(t)];
        maximal.push_back(mapped);
    }
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

QuickCheck quick_reject(const Simplet& a, const Simplet& b) {
    if (a.dimension() != b.dimension()) return QuickCheck::Distinct;
    if (a.members().size() != b.members().size()) return QuickCheck::Distinct;
    if (a.dim_sequence() != b.dim_sequence()) return QuickCheck::Distinct;
    if (a.degree_sequence() != b.degree_sequence()) return QuickCheck::Distinct;
    return QuickCheck::Possible;
}

bool skeleton_isomorphic(const Simplet& a, const Simplet& b) {
    if (a.num_vertices() != b.num_vertices()) return false;
    return canonical_form(*skeleton_simplet(a)) == canonical_form(*skeleton_simplet(b));
}

const CanonicalForm& Registry::full_form(Entry& e) {
    if (!e.full) {
        e.full = canonical_form(*e.simplet);
        canon_calls_.fetch_add(1, std::memory_order_relaxed);
    }
    return *e.full;
}

const CanonicalForm& Registry::skeleton_form(Entry& e) {
    if (!e.skeleton) {
        e.skeleton = canonical_form(*skeleton_simplet(*e.simplet));
        canon_calls_.fetch_add(1, std::memory_order_relaxed);
    }
    return *e.skeleton;
}

RegisterResult Registry::register_simplet(const std::shared_ptr<const Simplet>& p) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& bucket = buckets_[Key{p->dim_sequence(), p->degree_sequence()}];
    Entry candidate{p, std::nullopt, std::nullopt};
    for (auto& entry : bucket) {
        if (quick_reject(*entry.simplet, *p) == QuickCheck::Distinct) continue;
        if (!(skeleton_form(candidate) == skeleton_form(entry))) continue;
        if (full_form(candidate) == full_form(entry)) return RegisterResult::Duplicate;
    }
    bucket.push_back(std::move(candidate));
    ++count_;
    return RegisterResult::Fresh;
}

std::size_t Registry::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return count_;
}

std::vector<std::shared_ptr<const Simplet>> Registry::all() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<std::shared_ptr<const Simplet>> out;
    out.reserve(count_);
    for (const auto& [key, bucket] : buckets_)
        for (const auto& entry : bucket) out.push_back(entry.simplet);
    return out;
}

}  // namespace fresco
