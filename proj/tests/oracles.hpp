#pragma once

// Independent reference computations used only by the tests.

#include "cospec/graph.hpp"
#include "cospec/poly.hpp"
#include "cospec/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using cospec::Edge;
using cospec::MatrixKind;
using cospec::Poly;
using cospec::TreeGraph;
using cospec::Vertex;

// Every labeled tree on n vertices via Pruefer sequences, visiting each once.
inline void for_each_labeled_tree(int n, const std::function<void(const TreeGraph&)>& visit) {
    if (n == 1) {
        visit(TreeGraph::from_edges(1, {}));
        return;
    }
    if (n == 2) {
        std::vector<Edge> e{{0, 1}};
        visit(TreeGraph::from_edges(2, e));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        std::vector<int> degree(n, 1);
        for (int v : seq) ++degree[v];
        std::vector<Edge> edges;
        for (int v : seq) {
            int leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.emplace_back(leaf, v);
            --degree[leaf];
            --degree[v];
        }
        std::vector<int> rest;
        for (int v = 0; v < n; ++v) {
            if (degree[v] == 1) rest.push_back(v);
        }
        edges.emplace_back(rest[0], rest[1]);
        visit(TreeGraph::from_edges(n, edges));
        int k = n - 3;
        while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
        if (k < 0) break;
        ++seq[k];
    }
}

// Backtracking isomorphism test with degree pruning; fine for n <= 10.
inline bool isomorphic(const TreeGraph& a, const TreeGraph& b, Vertex root_a = -1, Vertex root_b = -1) {
    const int n = a.order();
    if (n != b.order()) return false;
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> extend = [&](int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || a.degree(v) != b.degree(w)) continue;
            if ((v == root_a) != (w == root_b)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(map[u], w);
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (extend(v + 1)) return true;
            used[w] = 0;
        }
        map[v] = -1;
        return false;
    };
    return extend(0);
}

inline Eigen::MatrixXd dense_matrix(const TreeGraph& t, MatrixKind kind) {
    const int n = t.order();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : t.edges()) {
        const double off = kind == MatrixKind::Laplacian ? -1.0 : 1.0;
        m(u, v) = m(v, u) = off;
    }
    if (kind != MatrixKind::Adjacency) {
        for (int v = 0; v < n; ++v) m(v, v) = t.degree(v);
    }
    return m;
}

inline Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& m) {
    if (m.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

// prod (x - lambda_i), coefficients ascending, from numeric eigenvalues.
inline std::vector<long double> numeric_char_poly(const Eigen::VectorXd& eig) {
    std::vector<long double> c{1.0L};
    for (Eigen::Index i = 0; i < eig.size(); ++i) {
        std::vector<long double> next(c.size() + 1, 0.0L);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= c[k] * static_cast<long double>(eig[i]);
        }
        c = std::move(next);
    }
    return c;
}

inline Eigen::MatrixXd delete_row_col(const Eigen::MatrixXd& m, int r) {
    const int n = static_cast<int>(m.rows());
    Eigen::MatrixXd out(n - 1, n - 1);
    for (int i = 0, ii = 0; i < n; ++i) {
        if (i == r) continue;
        for (int j = 0, jj = 0; j < n; ++j) {
            if (j == r) continue;
            out(ii, jj++) = m(i, j);
        }
        ++ii;
    }
    return out;
}

// det(xI - M) by fraction-free Bareiss elimination over Z[x]. Leading
// principal minors of xI - M are monic, so no pivoting is needed.
inline Poly bareiss_char_poly(const TreeGraph& t, MatrixKind kind) {
    const int n = t.order();
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i) {
        const long diag = kind == MatrixKind::Adjacency ? 0 : t.degree(i);
        a[i][i] = Poly{-diag, 1};
        for (int j : t.neighbors(i)) a[i][j] = Poly{kind == MatrixKind::Laplacian ? 1 : -1};
    }
    Poly prev{1};
    for (int k = 0; k + 1 < n; ++k) {
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = cospec::divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            }
        }
        prev = a[k][k];
    }
    return a[n - 1][n - 1];
}

inline TreeGraph random_relabel(const TreeGraph& t, std::mt19937& rng) {
    std::vector<Vertex> perm(t.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return cospec::relabel(t, perm);
}

inline TreeGraph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return TreeGraph::from_edges(n, e);
}

inline TreeGraph star(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return TreeGraph::from_edges(n, e);
}

// Random tree via a random Pruefer-like attachment process.
inline TreeGraph random_tree(int n, std::mt19937& rng) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    return random_relabel(TreeGraph::from_edges(n, e), rng);
}

}  // namespace oracle
