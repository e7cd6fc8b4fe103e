#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cospec/error.hpp"
#include "cospec/measures.hpp"
#include "cospec/tree_gen.hpp"
#include "oracles.hpp"

#include <cmath>
#include <optional>

using namespace cospec;

namespace {

// The two n = 6 trees with degree sequence (3, 2, 2, 1, 1, 1).
std::pair<TreeGraph, TreeGraph> f2_twenty_pair() {
    std::vector<TreeGraph> found;
    for (const auto& t : enumerate_free_trees(6)) {
        if (degree_sequence(t) == std::vector<int>{3, 2, 2, 1, 1, 1}) found.push_back(t);
    }
    REQUIRE(found.size() == 2);
    return {found[0], found[1]};
}

}  // namespace

TEST_CASE("degree_power") {
    CHECK(degree_power(oracle::star(6), 2) == 30);
    CHECK(degree_power(oracle::path(6), 2) == 18);
    CHECK(degree_power(oracle::path(6), 0) == 6);
    CHECK(degree_power(oracle::path(6), 1) == 10);
    auto [a, b] = f2_twenty_pair();
    CHECK(degree_power(a, 2) == 20);
    CHECK(degree_power(b, 2) == 20);
    for (int n = 3; n <= 10; ++n) {
        for (const auto& t : enumerate_free_trees(n)) {
            CHECK(degree_power(t, 1) == 2 * (n - 1));
            CHECK(degree_power(t, 2) > 2 * (n - 1));
        }
    }
    CHECK(degree_power(oracle::path(2), 2) == 2);
}

TEST_CASE("distance") {
    CHECK(distance(1.0, 0.0, 1.0) == doctest::Approx(0.6321206).epsilon(1e-7));
    CHECK(distance(0.0, 2.0, 1.0) == doctest::Approx(0.9816844).epsilon(1e-7));
    CHECK(distance(3.5, 3.5, 0.7) == 0.0);
    CHECK(distance(1.0, 0.0, 10.0) == doctest::Approx(-std::expm1(-0.01)));
    CHECK_THROWS_AS(distance(1.0, 0.0, 0.0), Error);
    CHECK_THROWS_AS(distance(1.0, 0.0, -2.0), Error);
    MeasureConfig bad;
    bad.sigma = 0.0;
    CHECK_THROWS_AS(bad.validate(), Error);
    // monotone in the gap
    double prev = -1.0;
    for (double gap = 0.0; gap < 4.0; gap += 0.25) {
        const double d = distance(gap, 0.0, 1.0);
        CHECK(d > prev);
        prev = d;
    }
}

TEST_CASE("conjecture parsing and sides") {
    CHECK(parse_conjecture("cj1") == ConjectureId::CJ1);
    CHECK(parse_conjecture("CJ2") == ConjectureId::CJ2);
    CHECK_THROWS(parse_conjecture("cj9"));
    CHECK(sides(ConjectureId::CJ1).larger == Invariant::Q1);
    CHECK(sides(ConjectureId::CJ1).smaller == Invariant::Lambda1);
    CHECK(sides(ConjectureId::CJ2).larger == Invariant::F2);
    CHECK(sides(ConjectureId::CJ2).smaller == Invariant::Q1);
    CHECK(sides(ConjectureId::CJ3).larger == Invariant::F2);
    CHECK(sides(ConjectureId::CJ3).smaller == Invariant::Lambda1);
}

TEST_CASE("self pairs hold with exact zero gaps") {
    MeasureConfig cfg;
    for (const auto& t : enumerate_free_trees(7)) {
        for (ConjectureId id : kAllConjectures) {
            auto v = conjecture_verdict(t, t, id, cfg);
            CHECK(v.holds);
            CHECK(v.decided_exactly);
            CHECK(v.lhs_gap.lo == 0);
            CHECK(v.rhs_gap.exact());
            CHECK(v.rhs_gap.hi == 0);
        }
    }
}

TEST_CASE("the n = 6 F2 = 20 pair is a CJ2 counterexample") {
    auto [a, b] = f2_twenty_pair();
    MeasureConfig cfg;
    const auto v = conjecture_verdict(a, b, ConjectureId::CJ2, cfg);
    CHECK_FALSE(v.holds);
    CHECK(v.lhs_gap.exact());
    CHECK(v.lhs_gap.lo == 0);
    CHECK(v.rhs_gap.lo > 0);
    const auto qa = q1(a), qb = q1(b);
    const double lo = std::min(qa.lo.get_d(), qb.lo.get_d());
    const double hi = std::max(qa.hi.get_d(), qb.hi.get_d());
    CHECK(lo == doctest::Approx(4.214320).epsilon(1e-6));
    CHECK(hi == doctest::Approx(4.302776).epsilon(1e-6));
}

TEST_CASE("n = 6: no CJ1 counterexamples, exactly one CJ2 counterexample") {
    MeasureConfig cfg;
    const auto trees = enumerate_free_trees(6);
    int cj1 = 0, cj2 = 0;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t j = i; j < trees.size(); ++j) {
            cj1 += !conjecture_verdict(trees[i], trees[j], ConjectureId::CJ1, cfg).holds;
            cj2 += !conjecture_verdict(trees[i], trees[j], ConjectureId::CJ2, cfg).holds;
        }
    }
    CHECK(cj1 == 0);
    CHECK(cj2 == 1);
}

TEST_CASE("verdicts do not depend on sigma") {
    const auto trees = enumerate_free_trees(8);
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t j = i; j < trees.size(); ++j) {
            for (ConjectureId id : kAllConjectures) {
                std::optional<bool> first;
                for (double sigma : {0.5, 1.0, 10.0}) {
                    MeasureConfig cfg;
                    cfg.sigma = sigma;
                    const bool holds = conjecture_verdict(trees[i], trees[j], id, cfg).holds;
                    if (!first) first = holds;
                    REQUIRE(*first == holds);
                }
            }
        }
    }
}

TEST_CASE("Laplacian-cospectral pairs have an exact zero q1 gap") {
    MeasureConfig cfg;
    const auto trees = enumerate_free_trees(11);
    int pairs = 0, counterexamples = 0;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t j = i + 1; j < trees.size(); ++j) {
            if (!cospectral(trees[i], trees[j], MatrixKind::Laplacian)) continue;
            ++pairs;
            const auto v = conjecture_verdict(trees[i], trees[j], ConjectureId::CJ1, cfg);
            CHECK(v.lhs_gap.exact());
            CHECK(v.lhs_gap.lo == 0);
            const bool adjacency_mates = cospectral(trees[i], trees[j], MatrixKind::Adjacency);
            CHECK(v.holds == adjacency_mates);
            if (!adjacency_mates) CHECK(v.rhs_gap.lo > 0);
            counterexamples += !v.holds;
        }
    }
    CHECK(pairs == 3);
    CHECK(counterexamples == 2);
}

TEST_CASE("compare_gaps agrees with plain numeric evaluation away from ties") {
    const auto trees = enumerate_free_trees(8);
    std::vector<TreeInvariants> inv;
    for (const auto& t : trees) inv.push_back(tree_invariants(t, kDefaultRootWidth));
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t j = i; j < trees.size(); ++j) {
            for (ConjectureId id : kAllConjectures) {
                const auto v = compare_gaps(inv[i], inv[j], id, kDefaultRootWidth);
                REQUIRE(v.has_value());
                auto value = [&](const TreeInvariants& x, Invariant w) {
                    switch (w) {
                    case Invariant::F2: return x.f2.get_d();
                    case Invariant::Q1: return oracle::eigenvalues(oracle::dense_matrix(trees[&x - inv.data()],
                                                                                        MatrixKind::Laplacian))
                        .maxCoeff();
                    case Invariant::Lambda1: return oracle::eigenvalues(oracle::dense_matrix(trees[&x - inv.data()],
                                                                                             MatrixKind::Adjacency))
                        .maxCoeff();
                    }
                    return 0.0;
                };
                const auto [larger, smaller] = sides(id);
                const double gl = std::fabs(value(inv[i], larger) - value(inv[j], larger));
                const double gs = std::fabs(value(inv[i], smaller) - value(inv[j], smaller));
                if (std::fabs(gl - gs) > 1e-6) REQUIRE(v->holds == (gl >= gs));
                REQUIRE(v->lhs_gap.lo <= v->lhs_gap.hi);
                REQUIRE(v->lhs_gap.lo.get_d() <= gl + 1e-9);
                REQUIRE(v->lhs_gap.hi.get_d() >= gl - 1e-9);
            }
        }
    }
}

TEST_CASE("size mismatch") {
    MeasureConfig cfg;
    CHECK_THROWS_AS(conjecture_verdict(oracle::path(5), oracle::path(6), ConjectureId::CJ1, cfg), Error);
}
