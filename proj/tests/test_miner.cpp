#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fresco/canonizer.hpp"
#include "fresco/miner.hpp"
#include "fresco/oracle.hpp"
#include "support.hpp"

using namespace fresco;
using namespace testsupport;

namespace {

MiningConfig exact_cfg(std::size_t tau, std::uint32_t max_size, std::uint32_t min_dim = 1) {
    MiningConfig cfg;
    cfg.tau = tau;
    cfg.max_size = max_size;
    cfg.min_dim = min_dim;
    cfg.mode = MiningMode::Exact;
    cfg.workers = 2;
    return cfg;
}

std::map<std::string, std::size_t> row_supports(const MiningResult& r) {
    std::map<std::string, std::size_t> out;
    for (const auto& row : r.rows) out[row.simplet] = row.support.value_or(0);
    return out;
}

std::set<std::string> row_set(const MiningResult& r) {
    std::set<std::string> out;
    for (const auto& row : r.rows) out.insert(row.simplet);
    return out;
}

std::string canon(const std::shared_ptr<const Simplet>& p) { return serialize_canonical(*p); }

// Reference result: every enumerable class within the size cap whose
// brute-force support clears tau.
std::map<std::string, std::size_t> oracle_rows(const ComplexStore& store, std::size_t tau,
                                               std::uint32_t max_size, std::uint32_t min_dim) {
    std::map<std::string, std::size_t> out;
    for (const auto& p : oracle::oracle_enumerate_simplets(max_size)) {
        if (static_cast<std::uint32_t>(p->dimension()) < min_dim) continue;
        std::size_t sup = oracle::oracle_sup(store, *p);
        if (sup >= tau) out[canon(p)] = sup;
    }
    return out;
}

}  // namespace

TEST_CASE("toy complex, tau 3, size cap 3") {
    auto store = toy_complex();
    auto result = mine(store, exact_cfg(3, 3));
    REQUIRE(result.rows.size() == 4);

    auto sup = row_supports(result);
    CHECK(sup[canon(edge_simplet())] == 5);
    CHECK(sup[canon(wedge_simplet())] == 5);
    CHECK(sup[canon(open_triangle())] == 5);
    CHECK(sup[canon(closed_triangle())] == 3);

    // Sort contract: dimension falls first, so the filled triangle leads.
    CHECK(result.rows[0].simplet == canon(closed_triangle()));
    CHECK(result.rows[0].dim == 2);
    CHECK(result.rows[0].size == 3);
    for (std::size_t i = 1; i < 4; ++i) CHECK(result.rows[i].dim == 1);

    CHECK(result.stats.frequent >= 4);
    CHECK(result.stats.examined >= result.stats.frequent);
    CHECK(result.registered_classes.size() == 5);  // plus vertex and nothing else
}

TEST_CASE("toy complex verdicts track tau") {
    auto store = toy_complex();
    CHECK(mine(store, exact_cfg(4, 3)).rows.size() == 3);   // closed triangle drops
    CHECK(mine(store, exact_cfg(4, 3, 2)).rows.empty());    // only dim-2 candidate is gone
    CHECK(mine(store, exact_cfg(3, 3, 2)).rows.size() == 1);
    CHECK(mine(store, exact_cfg(6, 3)).rows.empty());       // tau above |V_K|
    CHECK(mine(store, exact_cfg(1, 1)).rows.empty());       // bare vertex filtered by d*

    auto with_root = exact_cfg(3, 3, 0);
    auto result = mine(store, with_root);
    auto sup = row_supports(result);
    CHECK(sup[canon(Simplet::single_vertex())] == 5);
    CHECK(result.rows.size() == 5);
}

TEST_CASE("mining equals the oracle on every small complex") {
    for (std::uint64_t seed : {3ull, 8ull, 21ull}) {
        auto store = random_complex(seed);
        for (std::size_t tau : {std::size_t{1}, std::size_t{2}, std::size_t{4}}) {
            auto result = mine(store, exact_cfg(tau, 4));
            CHECK(row_supports(result) == oracle_rows(store, tau, 4, 1));
        }
    }
    auto toy = toy_complex();
    CHECK(row_supports(mine(toy, exact_cfg(1, 4))) == oracle_rows(toy, 1, 4, 1));
}

TEST_CASE("decision mode reports the same frequent set without supports") {
    auto store = toy_complex();
    auto exact = mine(store, exact_cfg(3, 3));
    auto cfg = exact_cfg(3, 3);
    cfg.mode = MiningMode::Decision;
    auto decision = mine(store, cfg);

    REQUIRE(decision.rows.size() == exact.rows.size());
    for (std::size_t i = 0; i < decision.rows.size(); ++i) {
        CHECK(decision.rows[i].simplet == exact.rows[i].simplet);
        CHECK(decision.rows[i].canon_hex == exact.rows[i].canon_hex);
        CHECK(decision.rows[i].dim == exact.rows[i].dim);
        CHECK(!decision.rows[i].support.has_value());
        CHECK(exact.rows[i].support.has_value());
    }
}

TEST_CASE("result set shrinks as tau grows") {
    auto store = toy_complex();
    std::set<std::string> previous;
    for (std::size_t tau = 5; tau >= 1; --tau) {
        auto rows = row_set(mine(store, exact_cfg(tau, 3)));
        for (const auto& s : previous) CHECK(rows.count(s));
        previous = rows;
    }
}

TEST_CASE("graph inputs reduce to subgraph pattern mining") {
    // 5-cycle: edge and wedge occur everywhere, triangles nowhere.
    auto c5 = ComplexStore::from_simplices({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto result = mine(c5, exact_cfg(5, 3));
    auto sup = row_supports(result);
    REQUIRE(result.rows.size() == 2);
    CHECK(sup[canon(edge_simplet())] == 5);
    CHECK(sup[canon(wedge_simplet())] == 5);

    // Star: every vertex serves as either endpoint of the edge.
    auto star = ComplexStore::from_simplices({{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto star_rows = mine(star, exact_cfg(4, 2));
    REQUIRE(star_rows.rows.size() == 1);
    CHECK(star_rows.rows[0].simplet == canon(edge_simplet()));
    CHECK(star_rows.rows[0].support == oracle::oracle_sup(star, *edge_simplet()));

    // Frequent patterns match the brute-force MNI answer on random graphs.
    for (std::uint64_t seed : {2ull, 9ull, 14ull}) {
        auto g = random_graph(seed);
        for (std::size_t tau : {std::size_t{1}, std::size_t{3}}) {
            CHECK(row_supports(mine(g, exact_cfg(tau, 4))) == oracle_rows(g, tau, 4, 1));
        }
    }
}

TEST_CASE("size-gating inflation shrinks reach at the cap") {
    auto store = toy_complex();
    auto cfg = exact_cfg(3, 3);
    cfg.inflate_at_cap = false;
    auto literal = mine(store, cfg);
    // Both triangles sit at the cap and are now reachable only through
    // inflation of capped simplets, so they vanish.
    auto rows = row_set(literal);
    CHECK(rows == std::set<std::string>{canon(edge_simplet()), canon(wedge_simplet())});

    // One size higher they reappear.
    cfg.max_size = 4;
    auto wider = row_set(mine(store, cfg));
    CHECK(wider.count(canon(open_triangle())));
    CHECK(wider.count(canon(closed_triangle())));
}

TEST_CASE("worker count never changes the bytes") {
    std::vector<ComplexStore> stores;
    stores.push_back(toy_complex());
    stores.push_back(random_complex(5));
    stores.push_back(random_complex(17));
    for (const auto& store : stores) {
        for (auto mode : {MiningMode::Exact, MiningMode::Decision}) {
            std::string reference;
            for (std::uint32_t workers : {1u, 4u, 8u}) {
                auto cfg = exact_cfg(2, 4);
                cfg.mode = mode;
                cfg.workers = workers;
                std::ostringstream tsv;
                write_tsv(mine(store, cfg), tsv);
                if (reference.empty())
                    reference = tsv.str();
                else
                    CHECK(tsv.str() == reference);
            }
            CHECK(!reference.empty());
        }
    }
}

TEST_CASE("lineage records anti-monotone supports") {
    auto store = toy_complex();
    auto cfg = exact_cfg(1, 4);
    cfg.record_lineage = true;
    auto result = mine(store, cfg);
    REQUIRE(!result.lineage.empty());
    std::size_t comparable = 0;
    for (const auto& e : result.lineage) {
        if (e.parent_support && e.child_support) {
            CHECK(*e.child_support <= *e.parent_support);
            ++comparable;
        }
    }
    CHECK(comparable > 0);
}

TEST_CASE("tsv output shape") {
    auto store = toy_complex();
    std::ostringstream exact_out;
    write_tsv(mine(store, exact_cfg(3, 3)), exact_out);
    auto text = exact_out.str();
    CHECK(text.find("canon_hex\tsimplet\tsize\tdim\tsupport\n") == 0);
    CHECK(text.find("\t3\n") != std::string::npos);  // the closed triangle's support

    auto cfg = exact_cfg(3, 3);
    cfg.mode = MiningMode::Decision;
    std::ostringstream decision_out;
    write_tsv(mine(store, cfg), decision_out);
    CHECK(decision_out.str().find(">=3") != std::string::npos);
}

TEST_CASE("config validation") {
    MiningConfig bad;
    bad.tau = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = MiningConfig{};
    bad.max_size = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = MiningConfig{};
    bad.max_size = 11;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    MiningConfig fine;
    CHECK_NOTHROW(fine.validate());
}
