#include <doctest.h>

#include <set>
#include <sstream>

#include "fresco/complex_store.hpp"
#include "support.hpp"

using namespace fresco;
using namespace testsupport;

TEST_CASE("parsing") {
    std::stringstream in(
        "# a comment\n"
        "\n"
        "1 2 3 7\n"
        "2\t6\n"
        "  # indented comment\n"
        "7 2\n"
        "6 7\n"
        "2 4\n2 5\n4 5\n");
    ComplexStore store = load_complex(in);
    CHECK(store.num_vertices() == 7);
    CHECK(store.dimension() == 3);
    // "7 2" is a face of [1,2,3,7] and gets absorbed, so 6 of the 7 lines survive
    CHECK(store.maximal_simplices().size() == 6);

    SUBCASE("errors carry line numbers") {
        std::stringstream bad("1 2\nx 3\n");
        CHECK_THROWS_WITH_AS(load_complex(bad), doctest::Contains("line 2"), ParseError);
        std::stringstream neg("1 -2\n");
        CHECK_THROWS_AS(load_complex(neg), ParseError);
        std::stringstream empty("# nothing\n\n");
        CHECK_THROWS_AS(load_complex(empty), ParseError);
    }
}

TEST_CASE("dedup, absorption, dense remap") {
    // duplicate sets collapse; [2,3] is a face of [2,3,9]; ids become dense
    ComplexStore store = ComplexStore::from_simplices({{9, 3, 2}, {2, 3}, {2, 3, 9}, {40}});
    CHECK(store.num_vertices() == 4);
    CHECK(store.maximal_simplices().size() == 2);
    CHECK(*store.dense_id(2) == 0);
    CHECK(*store.dense_id(3) == 1);
    CHECK(*store.dense_id(9) == 2);
    CHECK(*store.dense_id(40) == 3);
    CHECK(store.original_id(3) == 40);
    CHECK(!store.dense_id(7).has_value());
}

TEST_CASE("membership, neighbors, seeds on the motif complex") {
    ComplexStore k = motif_complex();
    auto dense = [&](std::vector<VertexId> orig) {
        for (auto& v : orig) v = *k.dense_id(v);
        return orig;
    };

    CHECK(k.is_simplex(dense({2, 3, 7})));      // face of the tetrahedron
    CHECK(k.is_simplex(dense({2, 6, 7})) == false);  // three edges, no filled triangle
    CHECK(k.is_simplex(dense({5})));
    CHECK(k.is_simplex({99}) == false);

    CHECK(k.neighbors(*k.dense_id(4)) == dense({2, 5}));
    CHECK(k.neighbors(*k.dense_id(1)) == dense({2, 3, 7}));

    CHECK(k.seed_vertices(4) == dense({1, 2, 3, 7}));
    CHECK(k.seed_vertices(1).size() == 7);
    CHECK(k.seed_vertices(5).empty());
}

TEST_CASE("skeleton") {
    ComplexStore k = motif_complex();
    ComplexStore graph = k.skeleton(1);
    CHECK(graph.dimension() == 1);
    CHECK(graph.num_vertices() == 7);
    // 6 edges inside the tetrahedron + 5 more ({2,7} is already inside)
    CHECK(graph.stats().edges == 11);
    CHECK(graph.maximal_simplices().size() == 11);
    // ids keep their meaning
    CHECK(graph.neighbors(*graph.dense_id(4)) ==
          std::vector<VertexId>{*graph.dense_id(2), *graph.dense_id(5)});

    ComplexStore two = k.skeleton(2);
    CHECK(two.dimension() == 2);
    CHECK(two.is_simplex({*two.dense_id(1), *two.dense_id(2), *two.dense_id(3)}));
    CHECK(!two.is_simplex(
        {*two.dense_id(1), *two.dense_id(2), *two.dense_id(3), *two.dense_id(7)}));
}

TEST_CASE("stats") {
    ComplexStore toy = toy_complex();
    CHECK(toy.stats().vertices == 5);
    CHECK(toy.stats().edges == 6);
    CHECK(toy.stats().triangles == 1);
    CHECK(toy.stats().maximal == 4);
    CHECK(toy.stats().dimension == 2);
}

TEST_CASE("write/load round trip") {
    ComplexStore k = motif_complex();
    std::stringstream buffer;
    write_complex(k, buffer);
    ComplexStore reloaded = load_complex(buffer);
    CHECK(reloaded.maximal_simplices() == k.maximal_simplices());
    CHECK(reloaded.num_vertices() == k.num_vertices());

    std::stringstream again;
    write_complex(reloaded, again);
    std::stringstream expected;
    write_complex(k, expected);
    CHECK(again.str() == expected.str());
}

TEST_CASE("membership agrees with explicit face expansion") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        ComplexStore store = random_complex(seed);
        // independent membership: expand every subset of every maximal simplex
        std::set<Simplex> faces;
        for (const auto& m : store.maximal_simplices()) {
            for (std::size_t mask = 1; mask < (std::size_t{1} << m.size()); ++mask) {
                Simplex f;
                for (std::size_t i = 0; i < m.size(); ++i)
                    if (mask & (std::size_t{1} << i)) f.push_back(m[i]);
                faces.insert(f);
            }
        }
        // no maximal simplex may absorb another
        for (const auto& a : store.maximal_simplices())
            for (const auto& b : store.maximal_simplices())
                if (&a != &b) CHECK(!simplex_subset(a, b));
        // probe all pairs and triples plus every face
        const std::size_t n = store.num_vertices();
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v) {
                CHECK(store.is_simplex({u, v}) == (faces.count({u, v}) > 0));
                for (VertexId w = v + 1; w < n; ++w)
                    CHECK(store.is_simplex({u, v, w}) == (faces.count({u, v, w}) > 0));
            }
        for (const auto& f : faces) CHECK(store.is_simplex(f));
    }
}
