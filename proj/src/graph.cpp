#include "cospec/graph.hpp"

#include "cospec/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cospec {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NonPositiveSigma: return "NonPositiveSigma";
    case ErrorCode::Undecidable: return "Undecidable";
    case ErrorCode::NotCospectrallyRooted: return "NotCospectrallyRooted";
    case ErrorCode::CertificationFailure: return "CertificationFailure";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::CacheVersionMismatch: return "CacheVersionMismatch";
    case ErrorCode::CorruptRecord: return "CorruptRecord";
    }
    return "Unknown";
}

TreeGraph TreeGraph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 1) {
        throw Error(ErrorCode::NotATree, "a tree needs at least one vertex");
    }
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw Error(ErrorCode::BadIndex,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                            std::to_string(n));
        }
        if (u == v) {
            throw Error(ErrorCode::NotATree, "self-loop at vertex " + std::to_string(u));
        }
        if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) {
            throw Error(ErrorCode::DuplicateEdge,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") given twice");
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    if (static_cast<int>(edges.size()) != n - 1) {
        throw Error(ErrorCode::NotATree, "expected " + std::to_string(n - 1) + " edges, got " +
                                             std::to_string(edges.size()));
    }
    // n - 1 edges plus connectivity rules out cycles.
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n) {
        throw Error(ErrorCode::NotATree, "graph is disconnected");
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
    }
    return TreeGraph(std::move(adj));
}

std::vector<Edge> TreeGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(adjacency_.size());
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool TreeGraph::adjacent(Vertex u, Vertex v) const {
    const auto& row = adjacency_.at(u);
    return std::binary_search(row.begin(), row.end(), v);
}

bool operator==(const TreeGraph& a, const TreeGraph& b) { return a.adjacency_ == b.adjacency_; }

RootedTree RootedTree::make(TreeGraph tree, Vertex root) {
    if (root < 0 || root >= tree.order()) {
        throw Error(ErrorCode::BadIndex, "root " + std::to_string(root) + " out of range");
    }
    return RootedTree{std::move(tree), root};
}

std::string CanonicalCode::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(levels[i]);
    }
    return out;
}

std::vector<int> degree_sequence(const TreeGraph& t) {
    std::vector<int> deg(t.order());
    for (Vertex v = 0; v < t.order(); ++v) deg[v] = t.degree(v);
    std::sort(deg.begin(), deg.end(), std::greater<>());
    return deg;
}

namespace {

// Preorder from root with parent links; iterative so deep paths are fine.
struct Traversal {
    std::vector<Vertex> order;
    std::vector<Vertex> parent;
};

Traversal traverse(const TreeGraph& t, Vertex root) {
    Traversal tr;
    tr.parent.assign(t.order(), -1);
    tr.order.reserve(t.order());
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        tr.order.push_back(v);
        for (Vertex w : t.neighbors(v)) {
            if (w != tr.parent[v]) {
                tr.parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    return tr;
}

}  // namespace

std::vector<Vertex> centroids(const TreeGraph& t) {
    const int n = t.order();
    auto tr = traverse(t, 0);
    std::vector<int> size(n, 1);
    for (auto it = tr.order.rbegin(); it != tr.order.rend(); ++it) {
        if (tr.parent[*it] >= 0) size[tr.parent[*it]] += size[*it];
    }
    std::vector<int> heaviest(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        int worst = n - size[v];
        for (Vertex w : t.neighbors(v)) {
            if (w != tr.parent[v]) worst = std::max(worst, size[w]);
        }
        heaviest[v] = worst;
    }
    const int best = *std::min_element(heaviest.begin(), heaviest.end());
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
        if (heaviest[v] == best) out.push_back(v);
    }
    return out;
}

LevelSequence rooted_level_sequence(const TreeGraph& t, Vertex root) {
    auto tr = traverse(t, root);
    std::vector<int> depth(t.order(), 0);
    for (Vertex v : tr.order) {
        if (tr.parent[v] >= 0) depth[v] = depth[tr.parent[v]] + 1;
    }
    // Bottom-up: each vertex's sequence is its depth followed by its
    // children's sequences in descending lexicographic order.
    std::vector<LevelSequence> seq(t.order());
    for (auto it = tr.order.rbegin(); it != tr.order.rend(); ++it) {
        Vertex v = *it;
        std::vector<LevelSequence*> kids;
        for (Vertex w : t.neighbors(v)) {
            if (w != tr.parent[v]) kids.push_back(&seq[w]);
        }
        std::sort(kids.begin(), kids.end(), [](auto* a, auto* b) { return *a > *b; });
        LevelSequence& mine = seq[v];
        mine.push_back(depth[v]);
        for (auto* k : kids) {
            mine.insert(mine.end(), k->begin(), k->end());
            LevelSequence().swap(*k);
        }
    }
    return std::move(seq[root]);
}

CanonicalCode canonical_code(const TreeGraph& t) {
    CanonicalCode best;
    for (Vertex c : centroids(t)) {
        auto seq = rooted_level_sequence(t, c);
        if (seq > best.levels) best.levels = std::move(seq);
    }
    return best;
}

namespace {

std::vector<Edge> edges_from_levels(std::span<const int> levels) {
    if (levels.empty() || levels[0] != 0) {
        throw Error(ErrorCode::NotATree, "level sequence must start with depth 0");
    }
    std::vector<Edge> edges;
    // last[d] = most recent vertex seen at depth d
    std::vector<Vertex> last{0};
    for (std::size_t i = 1; i < levels.size(); ++i) {
        int d = levels[i];
        if (d < 1 || d > levels[i - 1] + 1) {
            throw Error(ErrorCode::NotATree, "invalid depth " + std::to_string(d) + " at position " +
                                                 std::to_string(i));
        }
        edges.emplace_back(last[d - 1], static_cast<Vertex>(i));
        last.resize(d + 1);
        last[d] = static_cast<Vertex>(i);
    }
    return edges;
}

}  // namespace

TreeGraph tree_from_levels(std::span<const int> levels) {
    auto edges = edges_from_levels(levels);
    return TreeGraph::from_edges(static_cast<int>(levels.size()), edges);
}

RootedTree rooted_tree_from_levels(std::span<const int> levels) {
    return RootedTree{tree_from_levels(levels), 0};
}

TreeGraph relabel(const TreeGraph& t, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != t.order()) {
        throw Error(ErrorCode::SizeMismatch, "permutation length differs from vertex count");
    }
    std::vector<Edge> edges;
    for (auto [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
    return TreeGraph::from_edges(t.order(), edges);
}

// graph6: size header, then the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ...
// packed six bits per byte, most significant bit first, each byte offset by 63.
std::string encode_graph6(const TreeGraph& t) {
    const long n = t.order();
    std::string out;
    auto put6 = [&out](unsigned bits) { out.push_back(static_cast<char>(bits + 63)); };
    if (n <= 62) {
        put6(static_cast<unsigned>(n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) put6((n >> shift) & 63);
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) put6((n >> shift) & 63);
    }
    unsigned acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (t.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                put6(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) put6(acc << (6 - filled));
    return out;
}

TreeGraph decode_graph6(std::string_view bytes) {
    auto fail = [](const std::string& why) { return Error(ErrorCode::MalformedGraph6, why); };
    if (bytes.starts_with(">>graph6<<")) bytes.remove_prefix(10);
    while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r')) bytes.remove_suffix(1);
    if (bytes.empty()) throw fail("empty input");
    for (char c : bytes) {
        if (c < 63 || c > 126) throw fail("byte outside printable range 63..126");
    }
    std::size_t pos = 0;
    auto take6 = [&](int count) {
        long v = 0;
        for (int k = 0; k < count; ++k) {
            if (pos >= bytes.size()) throw fail("truncated size header");
            v = (v << 6) | (bytes[pos++] - 63);
        }
        return v;
    };
    long n = 0;
    if (bytes[0] != 126) {
        n = take6(1);
    } else if (bytes.size() > 1 && bytes[1] == 126) {
        pos = 2;
        n = take6(6);
    } else {
        pos = 1;
        n = take6(3);
    }
    const long bits = n * (n - 1) / 2;
    const long expected = (bits + 5) / 6;
    if (static_cast<long>(bytes.size() - pos) != expected) {
        throw fail("expected " + std::to_string(expected) + " data bytes for n=" + std::to_string(n) + ", got " +
                   std::to_string(bytes.size() - pos));
    }
    if (n == 0) throw Error(ErrorCode::NotATree, "graph has no vertices");
    std::vector<Edge> edges;
    long k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int byte = bytes[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (k % 6 != 0) {
        int byte = bytes[pos + k / 6] - 63;
        if (byte & ((1 << (6 - k % 6)) - 1)) throw fail("nonzero padding bits");
    }
    return TreeGraph::from_edges(static_cast<int>(n), edges);
}

std::string encode_rooted(const RootedTree& rt) {
    return encode_graph6(rt.tree) + ":" + std::to_string(rt.root);
}

RootedTree decode_rooted(std::string_view text) {
    auto colon = text.rfind(':');
    if (colon == std::string_view::npos) {
        return RootedTree{decode_graph6(text), 0};
    }
    auto tree = decode_graph6(text.substr(0, colon));
    auto digits = text.substr(colon + 1);
    int root = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), root);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw Error(ErrorCode::BadIndex, "bad root index '" + std::string(digits) + "'");
    }
    return RootedTree::make(std::move(tree), root);
}

}  // namespace cospec
