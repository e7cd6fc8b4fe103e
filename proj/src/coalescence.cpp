#include "cospec/coalescence.hpp"

#include "cospec/error.hpp"
#include "cospec/tree_gen.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace cospec {

RootedTree coalesce_rooted(const RootedTree& g, const RootedTree& k) {
    const int ng = g.tree.order();
    const int nk = k.tree.order();
    // k's root maps onto g's root, its other vertices to ng, ng + 1, ...
    std::vector<Vertex> image(nk);
    int next = ng;
    for (Vertex v = 0; v < nk; ++v) image[v] = v == k.root ? g.root : next++;
    std::vector<Edge> edges = g.tree.edges();
    for (auto [u, v] : k.tree.edges()) edges.emplace_back(image[u], image[v]);
    return RootedTree{TreeGraph::from_edges(ng + nk - 1, edges), g.root};
}

TreeGraph coalesce(const RootedTree& g, const RootedTree& k) { return coalesce_rooted(g, k).tree; }

bool cospectrally_rooted(const RootedTree& g, const RootedTree& h, MatrixKind kind) {
    if (g.tree.order() != h.tree.order()) {
        throw Error(ErrorCode::SizeMismatch, "rooted trees have " + std::to_string(g.tree.order()) + " and " +
                                                 std::to_string(h.tree.order()) + " vertices");
    }
    return char_poly(g.tree, kind) == char_poly(h.tree, kind) &&
           root_deleted_char_poly(g, kind) == root_deleted_char_poly(h, kind);
}

std::vector<RootedPair> find_cospectrally_rooted_pairs(int n, MatrixKind kind) {
    if (n < 2) throw std::invalid_argument("cospectrally rooted search needs n >= 2");
    const auto rooted = enumerate_rooted_trees(n);
    // Group by (full, root-deleted) polynomial coefficients.
    using Key = std::pair<std::vector<mpz_class>, std::vector<mpz_class>>;
    std::map<Key, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < rooted.size(); ++i) {
        Key key{char_poly(rooted[i].tree, kind).poly.coefficients(),
                root_deleted_char_poly(rooted[i], kind).poly.coefficients()};
        groups[std::move(key)].push_back(i);
    }
    std::vector<std::pair<std::size_t, std::size_t>> index_pairs;
    for (const auto& [key, members] : groups) {
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) index_pairs.emplace_back(members[a], members[b]);
        }
    }
    std::sort(index_pairs.begin(), index_pairs.end());
    std::vector<RootedPair> out;
    out.reserve(index_pairs.size());
    for (auto [a, b] : index_pairs) out.push_back({rooted[a], rooted[b]});
    return out;
}

std::vector<TreePair> generate_family(const RootedTree& g, const RootedTree& h, MatrixKind kind,
                                      std::span<const RootedTree> attachments) {
    if (!cospectrally_rooted(g, h, kind)) {
        throw Error(ErrorCode::NotCospectrallyRooted,
                    "seeds are not " + std::string(to_string(kind)) + " cospectrally rooted");
    }
    std::vector<TreePair> out;
    for (const auto& k : attachments) {
        TreePair pair{coalesce(g, k), coalesce(h, k)};
        if (char_poly(pair.first, kind) != char_poly(pair.second, kind)) {
            throw Error(ErrorCode::CertificationFailure,
                        "coalescence with " + encode_rooted(k) + " produced non-cospectral trees " +
                            encode_graph6(pair.first) + " and " + encode_graph6(pair.second));
        }
        if (canonical_code(pair.first) == canonical_code(pair.second)) continue;
        out.push_back(std::move(pair));
    }
    return out;
}

}  // namespace cospec
