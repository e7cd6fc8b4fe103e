#include "cospec/spectra.hpp"

#include "cospec/error.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cospec {

std::string_view to_string(MatrixKind kind) noexcept {
    switch (kind) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::Laplacian: return "laplacian";
    case MatrixKind::SignlessLaplacian: return "signless";
    }
    return "unknown";
}

MatrixKind parse_matrix_kind(std::string_view text) {
    if (text == "adjacency" || text == "a") return MatrixKind::Adjacency;
    if (text == "laplacian" || text == "l") return MatrixKind::Laplacian;
    if (text == "signless" || text == "signless-laplacian" || text == "q") return MatrixKind::SignlessLaplacian;
    throw Error(ErrorCode::UnknownFormat, "unknown matrix kind '" + std::string(text) + "'");
}

namespace {

// det(xI - M) restricted to the subtree below each vertex, via expansion along
// the subtree root. For a tree-patterned symmetric matrix the off-diagonal
// entries only ever appear squared, so A, L and Q differ only on the diagonal.
//
// For vertex v with children c: B_v = prod A_c and
//   A_v = (x - M_vv) B_v - sum_c B_c prod_{c' != c} A_c'.
// Returns B_root when drop_root is set, otherwise A_root.
Poly tree_determinant(const TreeGraph& t, Vertex root, MatrixKind kind, bool drop_root) {
    const int n = t.order();
    std::vector<Vertex> order;
    std::vector<Vertex> parent(n, -1);
    order.reserve(n);
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (Vertex w : t.neighbors(v)) {
            if (w != parent[v]) {
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    std::vector<Poly> full(n);
    std::vector<Poly> below(n);
    const Poly one{1};
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        Poly prod = one;
        Poly mixed;
        for (Vertex c : t.neighbors(v)) {
            if (c == parent[v]) continue;
            mixed = mixed * full[c] + prod * below[c];
            prod = prod * full[c];
            // children are no longer needed
            full[c] = Poly();
            below[c] = Poly();
        }
        const long diag = kind == MatrixKind::Adjacency ? 0 : t.degree(v);
        const Poly linear{-diag, 1};
        full[v] = linear * prod - mixed;
        below[v] = std::move(prod);
    }
    return drop_root ? below[root] : full[root];
}

}  // namespace

CharPoly char_poly(const TreeGraph& t, MatrixKind kind) {
    return CharPoly{kind, tree_determinant(t, 0, kind, false)};
}

CharPoly root_deleted_char_poly(const RootedTree& rt, MatrixKind kind) {
    return CharPoly{kind, tree_determinant(rt.tree, rt.root, kind, true)};
}

namespace detail {

RootEnclosure largest_root_sturm(const Poly& p, const mpq_class& width) {
    const Poly s = squarefree_part(p);
    if (s.degree() < 1) throw std::domain_error("polynomial has no real roots");
    const SturmSequence sturm(s);
    if (sturm.count_real_roots() == 0) throw std::domain_error("polynomial has no real roots");

    mpq_class hi = root_bound(s) * 2;
    mpq_class lo = -hi;
    // Isolate: keep (lo, hi] holding the largest root until it is the only one.
    while (sturm.count_roots(lo, hi) > 1) {
        mpq_class mid = (lo + hi) / 2;
        if (sturm.count_roots(mid, hi) >= 1) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const int sign_hi = s.sign_at(hi);
    if (sign_hi == 0) return {hi, hi};
    while (hi - lo > width) {
        mpq_class mid = (lo + hi) / 2;
        const int sm = s.sign_at(mid);
        if (sm == 0) return {mid, mid};
        if (sm == sign_hi) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {lo, hi};
}

bool largest_root_guided(const Poly& p, const mpq_class& width, RootEnclosure& out) {
    if (p.degree() < 1) return false;
    // Newton from above the root bound decreases monotonically onto the
    // largest root when p is real-rooted; anything else is caught below.
    const Poly dp = p.derivative();
    long double x = root_bound(p).get_d();
    for (int iter = 0; iter < 500; ++iter) {
        const long double fx = p.evaluate(x);
        const long double dfx = dp.evaluate(x);
        if (fx == 0 || dfx == 0 || !std::isfinite(static_cast<double>(dfx))) break;
        const long double next = x - fx / dfx;
        if (!(next < x)) break;
        x = next;
    }
    if (!std::isfinite(static_cast<double>(x))) return false;

    // No root at or beyond `at` when every Taylor coefficient there shares one sign
    // (Descartes' rule with zero variations); `allow_root` tolerates p(at) == 0.
    auto nothing_above = [&p](const mpq_class& at, bool allow_root) {
        const Poly shifted = p.taylor_at(at);
        const auto& c = shifted.coefficients();
        if (c[0] == 0 && !allow_root) return false;
        const int lead = sgn(c.back());
        for (const auto& v : c) {
            if (v != 0 && sgn(v) != lead) return false;
        }
        return true;
    };

    const long double nearest = std::round(x);
    if (std::fabs(x - nearest) < 1e-9L) {
        const mpq_class k(static_cast<long>(nearest));
        if (p.sign_at(k) == 0 && nothing_above(k, true)) {
            out = {k, k};
            return true;
        }
    }

    // Grid step h = 2^-m with 3h <= width; bail out when h is below what
    // long double can resolve around x.
    mpq_class h(1);
    while (3 * h > width) h /= 2;
    const long double scale = std::fabs(x) + 1;
    if (h.get_d() < 64 * 1e-19 * static_cast<double>(scale)) return false;

    const long double hd = static_cast<long double>(h.get_d());
    const long double cell = std::floor(x / hd);
    mpq_class lo = mpq_class(mpz_class(static_cast<double>(cell - 1))) * h;
    mpq_class hi = lo + 3 * h;
    if (!nothing_above(hi, false)) return false;
    const int sign_hi = p.sign_at(hi);
    const int sign_lo = p.sign_at(lo);
    if (sign_lo == 0 || sign_lo == sign_hi) return false;
    out = {lo, hi};
    return true;
}

}  // namespace detail

RootEnclosure largest_root(const Poly& p, const mpq_class& width) {
    if (width <= 0) throw std::domain_error("enclosure width must be positive");
    RootEnclosure e;
    if (detail::largest_root_guided(p, width, e)) return e;
    return detail::largest_root_sturm(p, width);
}

RootEnclosure refine_largest_root(const Poly& p, const RootEnclosure& e, const mpq_class& width) {
    if (e.exact() || e.width() <= width) return e;
    const Poly s = squarefree_part(p);
    const SturmSequence sturm(s);
    mpq_class lo = e.lo;
    mpq_class hi = e.hi;
    if (sturm.count_roots_above(hi) != 0 || sturm.count_roots(lo, hi) != 1) {
        return detail::largest_root_sturm(p, width);
    }
    const int sign_hi = s.sign_at(hi);
    if (sign_hi == 0) return {hi, hi};
    while (hi - lo > width) {
        mpq_class mid = (lo + hi) / 2;
        const int sm = s.sign_at(mid);
        if (sm == 0) return {mid, mid};
        if (sm == sign_hi) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {lo, hi};
}

RootEnclosure lambda1(const TreeGraph& t, const mpq_class& width) {
    return largest_root(char_poly(t, MatrixKind::Adjacency), width);
}

RootEnclosure q1(const TreeGraph& t, const mpq_class& width) {
    return largest_root(char_poly(t, MatrixKind::Laplacian), width);
}

bool cospectral(const TreeGraph& a, const TreeGraph& b, MatrixKind kind) {
    if (a.order() != b.order()) {
        throw Error(ErrorCode::SizeMismatch, "trees have " + std::to_string(a.order()) + " and " +
                                                 std::to_string(b.order()) + " vertices");
    }
    return char_poly(a, kind) == char_poly(b, kind);
}

bool largest_roots_differ_by(const Poly& p, const Poly& q, const mpq_class& shift) {
    const Poly moved = q.shifted(shift);
    const Poly pp = p.primitive();
    if (pp == moved.primitive()) return true;
    const Poly g = gcd(pp, moved);
    if (g.degree() < 1) return false;

    const SturmSequence sp(squarefree_part(pp));
    const SturmSequence sg(squarefree_part(g));
    const SturmSequence sq(squarefree_part(moved));

    RootEnclosure e = largest_root(pp, mpq_class(1, 16));
    for (int iter = 0; iter < 4096; ++iter) {
        if (e.exact()) {
            return g.sign_at(e.lo) == 0 && sq.count_roots_above(e.lo) == 0;
        }
        // moved has a root beyond every candidate for maxroot(p).
        if (sq.count_roots_above(e.hi) >= 1) return false;
        if (sp.count_roots(e.lo, e.hi) == 1) {
            const int in_g = sg.count_roots(e.lo, e.hi);
            if (in_g == 0) return false;
            if (in_g == 1 && sq.count_roots(e.lo, e.hi) == 1) return true;
        }
        e = refine_largest_root(pp, e, e.width() / 2);
    }
    throw std::logic_error("largest_roots_differ_by did not converge");
}

}  // namespace cospec
