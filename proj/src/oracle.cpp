#include "fresco/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fresco::oracle {

namespace {

// All faces of the complex, expanded outright.  Quadratic-ish and memory
// hungry by design: the point is to share nothing with the posting-list path.
std::set<Simplex> all_faces(const ComplexStore& store) {
    std::set<Simplex> faces;
    for (const auto& m : store.maximal_simplices()) {
        if (m.size() > 20) throw std::runtime_error("oracle: maximal simplex too large to expand");
        const std::size_t subsets = std::size_t{1} << m.size();
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            Simplex f;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (mask & (std::size_t{1} << i)) f.push_back(m[i]);
            faces.insert(std::move(f));
        }
    }
    return faces;
}

struct EmbeddingSearch {
    const Simplet& p;
    std::size_t num_vertices;
    const std::set<Simplex>& faces;
    std::vector<VertexId> image;
    std::vector<std::vector<VertexId>> found;

    void dfs(std::uint32_t label) {
        if (label == p.num_vertices()) {
            found.push_back(image);
            return;
        }
        for (VertexId u = 0; u < num_vertices; ++u) {
            bool used = false;
            for (std::uint32_t l = 0; l < label; ++l)
                if (image[l] == u) used = true;
            if (used) continue;
            image[label] = u;
            // check every member simplex fully assigned at this point
            bool ok = true;
            for (LabelMask m : p.members()) {
                if ((m >> (label + 1)) != 0) continue;  // not fully assigned yet
                if (!(m & (LabelMask{1} << label))) continue;  // checked earlier
                Simplex s;
                for (LabelMask t = m; t; t &= t - 1) s.push_back(image[std::countr_zero(t)]);
                std::sort(s.begin(), s.end());
                if (!faces.count(s)) {
                    ok = false;
                    break;
                }
            }
            if (ok) dfs(label + 1);
        }
    }
};

}  // namespace

std::vector<std::vector<VertexId>> oracle_embeddings(const ComplexStore& store,
                                                     const Simplet& p) {
    if (std::pow(static_cast<double>(store.num_vertices()),
                 static_cast<double>(p.num_vertices())) > 1e8)
        throw std::runtime_error("oracle: embedding space too large");
    auto faces = all_faces(store);
    EmbeddingSearch search{p, store.num_vertices(), faces, std::vector<VertexId>(p.num_vertices()), {}};
    search.dfs(0);
    return search.found;
}

std::size_t oracle_sup(const ComplexStore& store, const Simplet& p) {
    auto embeddings = oracle_embeddings(store, p);
    std::size_t best = 0;
    for (std::uint32_t v = 0; v < p.num_vertices(); ++v) {
        std::set<VertexId> image;
        for (const auto& e : embeddings) image.insert(e[v]);
        if (v == 0 || image.size() < best) best = image.size();
    }
    return best;
}

bool oracle_isomorphic(const Simplet& a, const Simplet& b) {
    if (a.num_vertices() != b.num_vertices()) return false;
    if (a.members().size() != b.members().size()) return false;
    const std::uint32_t n = a.num_vertices();
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (LabelMask m : a.members()) {
            LabelMask mapped = 0;
            for (LabelMask t = m; t; t &= t - 1) mapped |= LabelMask{1} << perm[std::countr_zero(t)];
            if (!b.is_member(mapped)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;  // equal counts make the injection a bijection
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

// Connected labeled graphs on exactly n vertices, as edge-mask lists.
std::vector<std::vector<LabelMask>> connected_graphs(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t u = 0; u + 1 < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<std::vector<LabelMask>> out;
    const std::size_t total = std::size_t{1} << pairs.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<LabelMask> edges;
        std::vector<LabelMask> adj(n, 0);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (!(mask & (std::size_t{1} << i))) continue;
            auto [u, v] = pairs[i];
            edges.push_back((LabelMask{1} << u) | (LabelMask{1} << v));
            adj[u] |= LabelMask{1} << v;
            adj[v] |= LabelMask{1} << u;
        }
        LabelMask reach = 1, all = (LabelMask{1} << n) - 1;
        while (true) {
            LabelMask next = reach;
            for (LabelMask t = reach; t; t &= t - 1) next |= adj[std::countr_zero(t)];
            if (next == reach) break;
            reach = next;
        }
        if (n == 1 || reach == all) out.push_back(std::move(edges));
    }
    return out;
}

// All label subsets of size >= 3 spanning cliques of the given edge set.
std::vector<LabelMask> cliques_of(std::uint32_t n, const std::vector<LabelMask>& edges) {
    auto has_edge = [&](std::uint32_t u, std::uint32_t v) {
        LabelMask e = (LabelMask{1} << u) | (LabelMask{1} << v);
        return std::find(edges.begin(), edges.end(), e) != edges.end();
    };
    std::vector<LabelMask> out;
    for (LabelMask m = 0; m < (LabelMask{1} << n); ++m) {
        if (mask_size(m) < 3) continue;
        auto labels = mask_labels(m);
        bool clique = true;
        for (std::size_t i = 0; i < labels.size() && clique; ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                if (!has_edge(labels[i], labels[j])) {
                    clique = false;
                    break;
                }
        if (clique) out.push_back(m);
    }
    return out;
}

}  // namespace

std::vector<std::shared_ptr<const Simplet>> oracle_enumerate_simplets(std::uint32_t max_size) {
    if (max_size < 1 || max_size > 5)
        throw std::runtime_error("oracle: enumeration supported up to 5 vertices");
    std::vector<std::shared_ptr<const Simplet>> classes;

    for (std::uint32_t n = 1; n <= max_size; ++n) {
        std::vector<std::shared_ptr<const Simplet>> level;
        for (const auto& edges : connected_graphs(n)) {
            // A labeled family over this graph = base (vertices + edges) plus
            // any subset of its >=3 cliques closed under taking faces of its
            // own members.
            std::vector<LabelMask> cliques = cliques_of(n, edges);
            const std::size_t total = std::size_t{1} << cliques.size();
            for (std::size_t pick = 0; pick < total; ++pick) {
                std::vector<LabelMask> chosen;
                for (std::size_t i = 0; i < cliques.size(); ++i)
                    if (pick & (std::size_t{1} << i)) chosen.push_back(cliques[i]);
                bool closed = true;
                for (LabelMask m : chosen) {
                    if (mask_size(m) < 4) continue;
                    for (LabelMask t = m; t; t &= t - 1) {
                        LabelMask face = m & ~(t & -t);
                        if (std::find(chosen.begin(), chosen.end(), face) == chosen.end()) {
                            closed = false;
                            break;
                        }
                    }
                    if (!closed) break;
                }
                if (!closed) continue;
                std::vector<LabelMask> members;
                for (std::uint32_t v = 0; v < n; ++v) members.push_back(LabelMask{1} << v);
                members.insert(members.end(), edges.begin(), edges.end());
                members.insert(members.end(), chosen.begin(), chosen.end());
                auto p = Simplet::create(n, std::move(members));
                bool duplicate = false;
                for (const auto& seen : level)
                    if (oracle_isomorphic(*seen, *p)) {
                        duplicate = true;
                        break;
                    }
                if (!duplicate) level.push_back(std::move(p));
            }
        }
        std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) {
            if (a->members().size() != b->members().size())
                return a->members().size() < b->members().size();
            return a->members() < b->members();
        });
        classes.insert(classes.end(), level.begin(), level.end());
    }
    return classes;
}

std::shared_ptr<const Simplet> permute_simplet(const Simplet& p,
                                               const std::vector<std::uint32_t>& perm) {
    std::vector<LabelMask> members;
    for (LabelMask m : p.members()) {
        LabelMask mapped = 0;
        for (LabelMask t = m; t; t &= t - 1) mapped |= LabelMask{1} << perm[std::countr_zero(t)];
        members.push_back(mapped);
    }
    return Simplet::create(p.num_vertices(), std::move(members));
}

}  // namespace fresco::oracle
