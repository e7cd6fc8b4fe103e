#pragma once

#include "cospec/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cospec {

/// Constant amortized time generator of free trees (one level sequence per
/// isomorphism class), following Wright, Richmond, Odlyzko and McKay.
/// Emission order is the generator's own; enumerate_free_trees sorts.
class FreeTreeGenerator {
public:
    explicit FreeTreeGenerator(int n);

    /// Next level sequence, or nullopt when exhausted.
    std::optional<LevelSequence> next();

private:
    int n_;
    bool started_ = false;
    bool done_ = false;
    LevelSequence layout_;
};

/// Beyer-Hedetniemi successor generator of rooted trees by canonical level
/// sequence, emitted in decreasing lexicographic order starting from the path.
class RootedTreeGenerator {
public:
    explicit RootedTreeGenerator(int n);
    std::optional<LevelSequence> next();

private:
    bool done_ = false;
    LevelSequence current_;
};

/// One tree per isomorphism class, sorted by ascending canonical code. Each
/// returned tree is labeled by its canonical level sequence, so vertex 0 is a
/// centroid and canonical_code(t).levels equals the labeling order.
std::vector<TreeGraph> enumerate_free_trees(int n);
std::vector<CanonicalCode> enumerate_free_tree_codes(int n);

/// One rooted tree per rooted-isomorphism class, rooted at vertex 0,
/// in ascending lexicographic order of level sequences.
std::vector<RootedTree> enumerate_rooted_trees(int n);

/// Number of unordered pairs of n-vertex trees, self-pairs included.
std::uint64_t pair_count(int n);
std::uint64_t free_tree_count(int n);

}  // namespace cospec
