#include "fresco/generator.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <stdexcept>

#include "fresco/simplet.hpp"

namespace fresco {

void GenConfig::validate() const {
    if (vertices < 1) throw std::invalid_argument("gen: need at least one vertex");
    if (max_dim < 1) throw std::invalid_argument("gen: max-dim must be >= 1");
    if (max_dim + 1 > vertices)
        throw std::invalid_argument("gen: max-dim+1 exceeds the vertex count");
    if (copies > 0 && plant.empty())
        throw std::invalid_argument("gen: --copies requires --plant");
}

std::vector<Simplex> generate_complex(const GenConfig& config) {
    config.validate();
    std::mt19937_64 rng(config.seed);
    std::vector<Simplex> sets;
    sets.reserve(config.maximal + config.copies);

    for (std::uint32_t i = 0; i < config.maximal; ++i) {
        std::uint32_t size = 2 + static_cast<std::uint32_t>(rng() % config.max_dim);
        Simplex s;
        while (s.size() < size) {
            VertexId v = static_cast<VertexId>(rng() % config.vertices);
            if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
        }
        sets.push_back(make_simplex(std::move(s)));
    }

    if (!config.plant.empty() && config.copies > 0) {
        auto motif = parse_simplet(config.plant);
        VertexId base = config.vertices;
        for (std::uint32_t c = 0; c < config.copies; ++c) {
            for (LabelMask m : motif->maximal()) {
                Simplex s;
                for (auto l : mask_labels(m)) s.push_back(base + l);
                sets.push_back(std::move(s));
            }
            base += motif->num_vertices();
        }
    }
    return sets;
}

void write_sets(const std::vector<Simplex>& sets, std::ostream& out) {
    for (const auto& s : sets) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out << ' ';
            out << s[i];
        }
        out << '\n';
    }
}

}  // namespace fresco
