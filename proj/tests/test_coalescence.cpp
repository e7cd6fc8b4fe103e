#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cospec/coalescence.hpp"
#include "cospec/error.hpp"
#include "cospec/tree_gen.hpp"
#include "oracles.hpp"

#include <random>

using namespace cospec;

namespace {

std::vector<RootedTree> attachments_up_to(int k) {
    std::vector<RootedTree> out;
    for (int m = 1; m <= k; ++m) {
        for (auto& rt : enumerate_rooted_trees(m)) out.push_back(rt);
    }
    return out;
}

// Non-isomorphic Laplacian cospectrally rooted trees on 17 vertices, found by
// exhaustive search.
constexpr const char* kLaplacianSeed17[][2] = {
    {"PhCGGO@O??_@_???_?G?A_??:0", "PhCGGG_?G?o??@??_?_?@_??:0"},
    {"PhCGGO@CA??@?@_???G?@??G:0", "PhCGGGOG??_@_???_?G?C??C:0"},
    {"PhCGGCC?H??@?@O???G?@??G:0", "PhCGGCAC??_@O???_?G?C??C:0"},
};

// The smallest Laplacian cospectrally rooted trees that are not adjacency
// cospectral (n = 21).
constexpr const char* kLaplacianSeed21[2] = {"ThCGGCAC??o??@??_?G?@??C??_??G?A??C?:4",
                                             "ThCGGCC?H?O??@??_?G?@??C??O?A??C???@:4"};

}  // namespace

TEST_CASE("coalesce examples") {
    const auto single = RootedTree::make(TreeGraph::from_edges(1, {}), 0);
    const auto p4 = RootedTree::make(oracle::path(4), 1);
    CHECK(coalesce(p4, single) == p4.tree);
    const auto swapped = coalesce_rooted(single, p4);
    CHECK(canonical_code(swapped.tree) == canonical_code(p4.tree));
    CHECK(rooted_level_sequence(swapped.tree, swapped.root) == rooted_level_sequence(p4.tree, p4.root));

    const auto p2 = RootedTree::make(oracle::path(2), 1);
    const auto merged = coalesce(p2, p2);
    CHECK(canonical_code(merged) == canonical_code(oracle::path(3)));

    const auto k13 = RootedTree::make(oracle::star(4), 0);
    const auto p3end = RootedTree::make(oracle::path(3), 0);
    const auto r = coalesce_rooted(k13, p3end);
    CHECK(r.tree.order() == 6);
    CHECK(r.root == 0);
    CHECK(r.tree.degree(0) == 4);
}

TEST_CASE("coalescence bookkeeping on random rooted trees") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int ng = 1 + trial % 8, nk = 1 + (trial / 8) % 8;
        const auto g = RootedTree::make(oracle::random_tree(ng, rng), std::uniform_int_distribution<int>(0, ng - 1)(rng));
        const auto k = RootedTree::make(oracle::random_tree(nk, rng), std::uniform_int_distribution<int>(0, nk - 1)(rng));
        const auto c = coalesce_rooted(g, k);
        REQUIRE(c.tree.order() == ng + nk - 1);
        REQUIRE(c.tree.edges().size() == static_cast<std::size_t>(ng + nk - 2));
        REQUIRE(c.tree.degree(c.root) == g.tree.degree(g.root) + k.tree.degree(k.root));
        for (auto [u, v] : g.tree.edges()) REQUIRE(c.tree.adjacent(u, v));
    }
}

TEST_CASE("cospectrally_rooted examples") {
    const auto p4 = oracle::path(4);
    const auto end = RootedTree::make(p4, 0), inner = RootedTree::make(p4, 1);
    CHECK(cospectrally_rooted(end, end, MatrixKind::Adjacency));
    CHECK_FALSE(cospectrally_rooted(end, inner, MatrixKind::Adjacency));
    CHECK(cospectrally_rooted(end, RootedTree::make(p4, 3), MatrixKind::Laplacian));
    CHECK_THROWS_AS(cospectrally_rooted(end, RootedTree::make(oracle::path(3), 0), MatrixKind::Laplacian), Error);
    for (const auto& [a, b] : kLaplacianSeed17) {
        CHECK(cospectrally_rooted(decode_rooted(a), decode_rooted(b), MatrixKind::Laplacian));
        CHECK(cospectrally_rooted(decode_rooted(a), decode_rooted(b), MatrixKind::SignlessLaplacian));
    }
}

TEST_CASE("find_cospectrally_rooted_pairs") {
    CHECK(find_cospectrally_rooted_pairs(4, MatrixKind::Laplacian).empty());
    CHECK(find_cospectrally_rooted_pairs(8, MatrixKind::Adjacency).empty());
    CHECK_THROWS(find_cospectrally_rooted_pairs(1, MatrixKind::Laplacian));
    const auto a9 = find_cospectrally_rooted_pairs(9, MatrixKind::Adjacency);
    CHECK(a9.size() == 1);
    const auto a10 = find_cospectrally_rooted_pairs(10, MatrixKind::Adjacency);
    CHECK(a10.size() == 3);
    for (const auto& p : a10) {
        CHECK(cospectrally_rooted(p.first, p.second, MatrixKind::Adjacency));
        CHECK_FALSE(oracle::isomorphic(p.first.tree, p.second.tree, p.first.root, p.second.root));
    }
    for (int n = 2; n <= 12; ++n) CHECK(find_cospectrally_rooted_pairs(n, MatrixKind::Laplacian).empty());
}

TEST_CASE("theorem conformance: adjacency seeds at n = 9, 10") {
    const auto ks = attachments_up_to(5);
    REQUIRE(ks.size() == 17);
    for (int n : {9, 10}) {
        for (const auto& p : find_cospectrally_rooted_pairs(n, MatrixKind::Adjacency)) {
            for (const auto& k : ks) {
                REQUIRE(char_poly(coalesce(p.first, k), MatrixKind::Adjacency) ==
                        char_poly(coalesce(p.second, k), MatrixKind::Adjacency));
            }
        }
    }
}

TEST_CASE("theorem conformance: Laplacian seeds at n = 17") {
    const auto ks = attachments_up_to(5);
    for (const auto& [a, b] : kLaplacianSeed17) {
        const auto g = decode_rooted(a), h = decode_rooted(b);
        for (MatrixKind kind : {MatrixKind::Laplacian, MatrixKind::SignlessLaplacian}) {
            for (const auto& k : ks) {
                REQUIRE(char_poly(coalesce(g, k), kind) == char_poly(coalesce(h, k), kind));
            }
        }
    }
}

TEST_CASE("generate_family") {
    const auto g = decode_rooted(kLaplacianSeed17[0][0]);
    const auto h = decode_rooted(kLaplacianSeed17[0][1]);
    const auto single = RootedTree::make(TreeGraph::from_edges(1, {}), 0);
    const std::vector<RootedTree> just_single{single};
    const auto seed = generate_family(g, h, MatrixKind::Laplacian, just_single);
    REQUIRE(seed.size() == 1);
    CHECK(seed[0].first == g.tree);
    CHECK(seed[0].second == h.tree);

    const auto ks = attachments_up_to(5);
    const auto family = generate_family(g, h, MatrixKind::Laplacian, ks);
    CHECK(family.size() == ks.size());
    for (const auto& pair : family) {
        CHECK(cospectral(pair.first, pair.second, MatrixKind::Laplacian));
        CHECK(canonical_code(pair.first) != canonical_code(pair.second));
    }

    const auto p4 = oracle::path(4);
    CHECK_THROWS_AS(generate_family(RootedTree::make(p4, 0), RootedTree::make(p4, 1), MatrixKind::Adjacency, ks),
                    Error);
    // isomorphic coalescences are filtered
    const auto end0 = RootedTree::make(p4, 0), end3 = RootedTree::make(p4, 3);
    CHECK(generate_family(end0, end3, MatrixKind::Laplacian, ks).empty());
}

TEST_CASE("adjacency-noncospectral Laplacian seed yields cj1 counterexamples") {
    const auto g = decode_rooted(kLaplacianSeed21[0]);
    const auto h = decode_rooted(kLaplacianSeed21[1]);
    REQUIRE(cospectrally_rooted(g, h, MatrixKind::Laplacian));
    REQUIRE_FALSE(cospectral(g.tree, h.tree, MatrixKind::Adjacency));
    const auto ks = attachments_up_to(4);
    const auto family = generate_family(g, h, MatrixKind::Laplacian, ks);
    // a pendant edge at the root makes the two coalescences isomorphic
    CHECK(family.size() == ks.size() - 1);
    const auto edge = RootedTree::make(oracle::path(2), 0);
    CHECK(canonical_code(coalesce(g, edge)) == canonical_code(coalesce(h, edge)));
    for (const auto& pair : family) {
        CHECK(cospectral(pair.first, pair.second, MatrixKind::Laplacian));
        CHECK(q1(pair.first) == q1(pair.second));
        const auto a = lambda1(pair.first), b = lambda1(pair.second);
        CHECK((a.hi < b.lo || b.hi < a.lo));
    }
}
