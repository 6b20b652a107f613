#include "fresco/complex_store.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace fresco {

namespace {

// Sorts by size descending then lex so exact duplicates become adjacent and
// potential supersets always precede their subsets.
bool absorb_order(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

struct VectorHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 1469598103934665603ull;
        for (auto v : s) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

ComplexStore ComplexStore::from_simplices(std::vector<Simplex> sets) {
    ComplexStore store;
    if (sets.empty()) return store;

    for (auto& s : sets) s = make_simplex(std::move(s));

    // Dense remap preserving ascending original ids.
    std::vector<VertexId> ids;
    for (const auto& s : sets) ids.insert(ids.end(), s.begin(), s.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    store.dense_to_orig_ = ids;
    store.orig_to_dense_.reserve(ids.size());
    for (VertexId d = 0; d < ids.size(); ++d) store.orig_to_dense_[ids[d]] = d;
    for (auto& s : sets)
        for (auto& v : s) v = store.orig_to_dense_.at(v);

    // Drop duplicates and sets absorbed by a superset.  Kept sets are indexed
    // by posting lists as we go, so each subset probe is one intersection.
    std::sort(sets.begin(), sets.end(), absorb_order);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    std::vector<Simplex> kept;
    std::vector<std::vector<std::uint32_t>> posting(ids.size());
    for (const auto& s : sets) {
        // s is a subset of a kept set iff the posting lists of its vertices
        // intersect; only larger sets have been inserted so far.
        const std::vector<std::uint32_t>* shortest = &posting[s[0]];
        for (auto v : s)
            if (posting[v].size() < shortest->size()) shortest = &posting[v];
        bool absorbed = false;
        for (auto id : *shortest) {
            if (simplex_subset(s, kept[id])) {
                absorbed = true;
                break;
            }
        }
        if (absorbed) continue;
        std::uint32_t id = static_cast<std::uint32_t>(kept.size());
        kept.push_back(s);
        for (auto v : s) posting[v].push_back(id);
    }

    // Final ids ordered by (size ascending, lex): posting lists then run in
    // ascending simplex size, letting membership queries skip too-small hosts.
    std::sort(kept.begin(), kept.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    store.maximal_ = std::move(kept);
    store.build_indexes();
    return store;
}

void ComplexStore::build_indexes() {
    const std::size_t n = dense_to_orig_.size();
    posting_.assign(n, {});
    neighbors_.assign(n, {});
    for (std::uint32_t id = 0; id < maximal_.size(); ++id)
        for (auto v : maximal_[id]) posting_[v].push_back(id);
    for (const auto& m : maximal_) {
        for (auto u : m)
            for (auto v : m)
                if (u != v) neighbors_[u].push_back(v);
    }
    for (auto& nb : neighbors_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }

    stats_.vertices = n;
    stats_.maximal = maximal_.size();
    stats_.dimension = maximal_.empty() ? -1 : static_cast<int>(maximal_.back().size()) - 1;
    std::size_t degree_sum = 0;
    for (const auto& nb : neighbors_) degree_sum += nb.size();
    stats_.edges = degree_sum / 2;
    // Distinct 2-simplices: for each edge (u,v), count common neighbors w > v
    // that close a face.
    std::size_t triangles = 0;
    std::vector<VertexId> tri(3);
    for (VertexId u = 0; u < n; ++u) {
        for (auto v : neighbors_[u]) {
            if (v <= u) continue;
            const auto& nu = neighbors_[u];
            const auto& nv = neighbors_[v];
            auto iu = std::upper_bound(nu.begin(), nu.end(), v);
            auto iv = std::upper_bound(nv.begin(), nv.end(), v);
            while (iu != nu.end() && iv != nv.end()) {
                if (*iu < *iv) {
                    ++iu;
                } else if (*iv < *iu) {
                    ++iv;
                } else {
                    tri = {u, v, *iu};
                    if (is_simplex_sorted(tri)) ++triangles;
                    ++iu;
                    ++iv;
                }
            }
        }
    }
    stats_.triangles = triangles;
}

bool ComplexStore::is_simplex(std::vector<VertexId> verts) const {
    verts = make_simplex(std::move(verts));
    return is_simplex_sorted(verts);
}

bool ComplexStore::is_simplex_sorted(std::span<const VertexId> verts) const {
    if (verts.empty()) return false;
    if (verts.back() >= num_vertices()) return false;
    // Scan the rarest vertex's posting list; hosts smaller than the query
    // cannot contain it, and ids ascend with size.
    const std::vector<std::uint32_t>* shortest = &posting_[verts[0]];
    for (auto v : verts)
        if (posting_[v].size() < shortest->size()) shortest = &posting_[v];
    for (auto id : *shortest) {
        const Simplex& m = maximal_[id];
        if (m.size() < verts.size()) continue;
        if (std::includes(m.begin(), m.end(), verts.begin(), verts.end())) return true;
    }
    return false;
}

std::vector<VertexId> ComplexStore::seed_vertices(std::size_t d) const {
    std::vector<char> seen(num_vertices(), 0);
    // maximal_ ascends in size, so find the first big-enough host and take
    // everything from there.
    auto it = std::lower_bound(maximal_.begin(), maximal_.end(), d,
                               [](const Simplex& m, std::size_t k) { return m.size() < k; });
    for (; it != maximal_.end(); ++it)
        for (auto v : *it) seen[v] = 1;
    std::vector<VertexId> out;
    for (VertexId v = 0; v < seen.size(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

ComplexStore ComplexStore::skeleton(std::size_t n) const {
    const std::size_t cap = n + 1;
    std::vector<Simplex> cand;
    std::unordered_set<Simplex, VectorHash> dedup;
    for (const auto& m : maximal_) {
        if (m.size() <= cap) {
            if (dedup.insert(m).second) cand.push_back(m);
            continue;
        }
        // All cap-subsets of m, emitted via the standard combination walk.
        std::vector<std::uint32_t> idx(cap);
        for (std::uint32_t i = 0; i < cap; ++i) idx[i] = i;
        while (true) {
            Simplex s(cap);
            for (std::uint32_t i = 0; i < cap; ++i) s[i] = m[idx[i]];
            if (dedup.insert(s).second) cand.push_back(s);
            int i = static_cast<int>(cap) - 1;
            while (i >= 0 && idx[i] == m.size() - cap + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (std::uint32_t j = i + 1; j < cap; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // Rebuild under original ids so the skeleton keeps the same id maps.
    for (auto& s : cand)
        for (auto& v : s) v = dense_to_orig_[v];
    return from_simplices(std::move(cand));
}

std::optional<VertexId> ComplexStore::dense_id(VertexId original) const {
    auto it = orig_to_dense_.find(original);
    if (it == orig_to_dense_.end()) return std::nullopt;
    return it->second;
}

ComplexStore load_complex(std::istream& in) {
    std::vector<Simplex> sets;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t at = line.find_first_not_of(" \t\r");
        if (at == std::string::npos || line[at] == '#') continue;
        Simplex s;
        const char* p = line.data() + at;
        const char* end = line.data() + line.size();
        while (p != end) {
            if (*p == ' ' || *p == '\t' || *p == '\r') {
                ++p;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(*p)))
                throw ParseError("line " + std::to_string(lineno) + ": expected a vertex id, got '" +
                                 std::string(1, *p) + "'");
            std::uint64_t v = 0;
            while (p != end && std::isdigit(static_cast<unsigned char>(*p))) {
                v = v * 10 + static_cast<std::uint64_t>(*p - '0');
                if (v > 0xffffffffull)
                    throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range");
                ++p;
            }
            s.push_back(static_cast<VertexId>(v));
        }
        if (!s.empty()) sets.push_back(std::move(s));
    }
    if (sets.empty()) throw ParseError("empty input: no simplices found");
    return ComplexStore::from_simplices(std::move(sets));
}

ComplexStore load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return load_complex(in);
}

void write_complex(const ComplexStore& store, std::ostream& out) {
    for (const auto& m : store.maximal_simplices()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i) out << ' ';
            out << store.original_id(m[i]);
        }
        out << '\n';
    }
}

}  // namespace fresco
