#pragma once

#include <cstdint>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cospec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Connected acyclic simple graph on n >= 1 vertices.
///
/// Instances can only be obtained through validating factories, so every
/// TreeGraph in circulation has exactly n - 1 edges, is connected and has a
/// symmetric adjacency structure without loops or parallel edges.
class TreeGraph {
public:
    /// Validates and builds a tree. Throws Error{BadIndex, DuplicateEdge, NotATree}.
    static TreeGraph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    const std::vector<std::vector<Vertex>>& adjacency() const noexcept { return adjacency_; }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// Labeled equality (same vertex count, same edge set).
    friend bool operator==(const TreeGraph& a, const TreeGraph& b);

private:
    explicit TreeGraph(std::vector<std::vector<Vertex>> adjacency) : adjacency_(std::move(adjacency)) {}
    std::vector<std::vector<Vertex>> adjacency_;
};

struct RootedTree {
    TreeGraph tree;
    Vertex root = 0;

    /// Throws Error{BadIndex} when root is out of range.
    static RootedTree make(TreeGraph tree, Vertex root);
};

/// Depth sequence of a rooted tree in preorder (root depth 0).
using LevelSequence = std::vector<int>;

/// Isomorphism-invariant key of a free tree: the lexicographically maximal
/// level sequence over all centroid rootings and child orderings.
struct CanonicalCode {
    LevelSequence levels;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

    std::string to_string() const;
};

std::vector<int> degree_sequence(const TreeGraph& t);

/// Centroid vertices (one or two, adjacent when two).
std::vector<Vertex> centroids(const TreeGraph& t);

/// Maximal level sequence of t rooted at root.
LevelSequence rooted_level_sequence(const TreeGraph& t, Vertex root);

CanonicalCode canonical_code(const TreeGraph& t);

/// Tree whose preorder depth sequence is levels. Vertex i is the i-th entry.
TreeGraph tree_from_levels(std::span<const int> levels);
RootedTree rooted_tree_from_levels(std::span<const int> levels);

/// Relabels vertices: vertex v of t becomes perm[v].
TreeGraph relabel(const TreeGraph& t, std::span<const Vertex> perm);

std::string encode_graph6(const TreeGraph& t);
/// Throws Error{MalformedGraph6}; a well-formed graph6 string that is not a
/// tree yields Error{NotATree}.
TreeGraph decode_graph6(std::string_view bytes);

/// "<graph6>:<root>" as used by the command line.
std::string encode_rooted(const RootedTree& rt);
RootedTree decode_rooted(std::string_view text);

}  // namespace cospec
