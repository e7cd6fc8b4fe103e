#pragma once

#include "cospec/graph.hpp"
#include "cospec/poly.hpp"

#include <gmpxx.h>

#include <string_view>

namespace cospec {

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian };

std::string_view to_string(MatrixKind kind) noexcept;
/// Accepts adjacency|laplacian|signless (and the short forms a|l|q).
MatrixKind parse_matrix_kind(std::string_view text);

/// Exact det(xI - M) for one of the supported matrix kinds.
struct CharPoly {
    MatrixKind kind = MatrixKind::Adjacency;
    Poly poly;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Closed interval [lo, hi] with exact rational endpoints holding a certified
/// real root. lo == hi means the root is known exactly.
struct RootEnclosure {
    mpq_class lo;
    mpq_class hi;

    mpq_class width() const { return hi - lo; }
    mpq_class midpoint() const { return (lo + hi) / 2; }
    bool exact() const { return lo == hi; }
    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }

    friend bool operator==(const RootEnclosure&, const RootEnclosure&) = default;
};

inline const mpq_class kDefaultRootWidth{1, 1000000000000};  // 1e-12

CharPoly char_poly(const TreeGraph& t, MatrixKind kind);

/// Characteristic polynomial of M with the root's row and column removed. The
/// remaining diagonal keeps the degrees of the full tree.
CharPoly root_deleted_char_poly(const RootedTree& rt, MatrixKind kind);

/// Certified enclosure of the largest real root, of width at most `width`.
/// Throws std::domain_error when p has no real root.
RootEnclosure largest_root(const Poly& p, const mpq_class& width = kDefaultRootWidth);
inline RootEnclosure largest_root(const CharPoly& p, const mpq_class& width = kDefaultRootWidth) {
    return largest_root(p.poly, width);
}

/// Tightens an enclosure previously returned by largest_root for the same p.
RootEnclosure refine_largest_root(const Poly& p, const RootEnclosure& e, const mpq_class& width);

RootEnclosure lambda1(const TreeGraph& t, const mpq_class& width = kDefaultRootWidth);
RootEnclosure q1(const TreeGraph& t, const mpq_class& width = kDefaultRootWidth);

/// Exact char-poly equality. Throws Error{SizeMismatch}.
bool cospectral(const TreeGraph& a, const TreeGraph& b, MatrixKind kind);

/// Decides exactly whether maxroot(p) == maxroot(q) + shift.
bool largest_roots_differ_by(const Poly& p, const Poly& q, const mpq_class& shift);

namespace detail {
/// Root isolation by Sturm bisection alone (no numeric guess). Exposed so the
/// fast path in largest_root can be cross-checked.
RootEnclosure largest_root_sturm(const Poly& p, const mpq_class& width);
/// Guess-and-certify path; returns false when the certificate does not hold.
bool largest_root_guided(const Poly& p, const mpq_class& width, RootEnclosure& out);
}  // namespace detail

}  // namespace cospec
