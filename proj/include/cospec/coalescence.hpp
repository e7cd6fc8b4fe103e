#pragma once

#include "cospec/graph.hpp"
#include "cospec/spectra.hpp"

#include <span>
#include <vector>

namespace cospec {

/// Vertex amalgamation G.K identifying g.root with k.root. Vertices of g keep
/// their indices; the non-root vertices of k follow in their original order.
TreeGraph coalesce(const RootedTree& g, const RootedTree& k);

/// Same as coalesce, rooted at the merged vertex.
RootedTree coalesce_rooted(const RootedTree& g, const RootedTree& k);

/// Equal char polys of the whole matrix and of the root-deleted principal
/// submatrix. Throws Error{SizeMismatch}.
bool cospectrally_rooted(const RootedTree& g, const RootedTree& h, MatrixKind kind);

struct RootedPair {
    RootedTree first;
    RootedTree second;
};

struct TreePair {
    TreeGraph first;
    TreeGraph second;
};

/// All unordered pairs of distinct rooted trees on n vertices that are
/// cospectrally rooted for `kind`, ordered by the rooted enumeration order.
std::vector<RootedPair> find_cospectrally_rooted_pairs(int n, MatrixKind kind);

/// Coalesces each attachment onto both seeds and certifies every resulting
/// pair as exactly kind-cospectral. Pairs whose members are isomorphic are
/// dropped. Throws Error{NotCospectrallyRooted, CertificationFailure}.
std::vector<TreePair> generate_family(const RootedTree& g, const RootedTree& h, MatrixKind kind,
                                      std::span<const RootedTree> attachments);

}  // namespace cospec
