#include "cospec/tree_gen.hpp"

#include "cospec/error.hpp"

#include <algorithm>

namespace cospec {

namespace {

// Beyer-Hedetniemi successor, changing only positions >= p. Returns false when
// p reaches the root (no successor).
bool next_rooted_from(LevelSequence& seq, int p) {
    if (p <= 0) return false;
    int q = p - 1;
    while (seq[q] != seq[p] - 1) --q;
    const int shift = p - q;
    for (std::size_t i = p; i < seq.size(); ++i) seq[i] = seq[i - shift];
    return true;
}

bool next_rooted(LevelSequence& seq) {
    int p = static_cast<int>(seq.size()) - 1;
    while (p > 0 && seq[p] == 1) --p;
    return next_rooted_from(seq, p);
}

struct Split {
    LevelSequence left;  // first principal subtree, re-rooted at depth 0
    LevelSequence rest;  // root plus the remaining subtrees
};

Split split_tree(const LevelSequence& layout) {
    std::size_t m = layout.size();
    bool seen_one = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] == 1) {
            if (seen_one) {
                m = i;
                break;
            }
            seen_one = true;
        }
    }
    Split s;
    for (std::size_t i = 1; i < m; ++i) s.left.push_back(layout[i] - 1);
    s.rest.push_back(0);
    for (std::size_t i = m; i < layout.size(); ++i) s.rest.push_back(layout[i]);
    return s;
}

// Advances candidate to the next sequence that is a valid centroid-rooted free
// tree code, or returns false when the rooted successor runs out.
bool next_free(LevelSequence& candidate) {
    while (true) {
        auto [left, rest] = split_tree(candidate);
        const int left_height = *std::max_element(left.begin(), left.end());
        const int rest_height = *std::max_element(rest.begin(), rest.end());
        bool valid = rest_height >= left_height;
        if (valid && rest_height == left_height) {
            if (left.size() > rest.size()) {
                valid = false;
            } else if (left.size() == rest.size() && left > rest) {
                valid = false;
            }
        }
        if (valid) return true;

        const int p = static_cast<int>(left.size());
        const bool deep = candidate[p] > 2;
        if (!next_rooted_from(candidate, p)) return false;
        if (deep) {
            auto fresh = split_tree(candidate);
            const int h = *std::max_element(fresh.left.begin(), fresh.left.end());
            // Replace the tail with a path 1, 2, ..., h + 1.
            const int len = h + 1;
            for (int k = 0; k < len; ++k) candidate[candidate.size() - len + k] = k + 1;
        }
    }
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
    if (n < 1) throw Error(ErrorCode::NotATree, "vertex count must be positive");
    if (n >= 3) {
        for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
        for (int i = 1; i <= (n - 1) / 2; ++i) layout_.push_back(i);
    }
}

std::optional<LevelSequence> FreeTreeGenerator::next() {
    if (done_) return std::nullopt;
    if (n_ <= 2) {
        done_ = true;
        return n_ == 1 ? LevelSequence{0} : LevelSequence{0, 1};
    }
    if (started_ && !next_rooted(layout_)) {
        done_ = true;
        return std::nullopt;
    }
    started_ = true;
    if (!next_free(layout_)) {
        done_ = true;
        return std::nullopt;
    }
    return layout_;
}

RootedTreeGenerator::RootedTreeGenerator(int n) {
    if (n < 1) throw Error(ErrorCode::NotATree, "vertex count must be positive");
    for (int i = 0; i < n; ++i) current_.push_back(i);
}

std::optional<LevelSequence> RootedTreeGenerator::next() {
    if (done_) return std::nullopt;
    LevelSequence out = current_;
    if (!next_rooted(current_)) done_ = true;
    return out;
}

std::vector<CanonicalCode> enumerate_free_tree_codes(int n) {
    std::vector<CanonicalCode> codes;
    FreeTreeGenerator gen(n);
    while (auto seq = gen.next()) {
        codes.push_back(canonical_code(tree_from_levels(*seq)));
    }
    std::sort(codes.begin(), codes.end());
    return codes;
}

std::vector<TreeGraph> enumerate_free_trees(int n) {
    std::vector<TreeGraph> trees;
    for (const auto& code : enumerate_free_tree_codes(n)) {
        trees.push_back(tree_from_levels(code.levels));
    }
    return trees;
}

std::vector<RootedTree> enumerate_rooted_trees(int n) {
    std::vector<LevelSequence> seqs;
    RootedTreeGenerator gen(n);
    while (auto seq = gen.next()) seqs.push_back(std::move(*seq));
    std::reverse(seqs.begin(), seqs.end());
    std::vector<RootedTree> out;
    out.reserve(seqs.size());
    for (const auto& s : seqs) out.push_back(rooted_tree_from_levels(s));
    return out;
}

std::uint64_t free_tree_count(int n) {
    std::uint64_t count = 0;
    FreeTreeGenerator gen(n);
    while (gen.next()) ++count;
    return count;
}

std::uint64_t pair_count(int n) {
    const std::uint64_t t = free_tree_count(n);
    return t * (t + 1) / 2;
}

}  // namespace cospec
