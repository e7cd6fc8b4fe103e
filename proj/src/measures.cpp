#include "cospec/measures.hpp"

#include "cospec/error.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cospec {

void MeasureConfig::validate() const {
    if (!(sigma > 0) || !std::isfinite(sigma)) {
        throw Error(ErrorCode::NonPositiveSigma, "sigma must be a positive finite number");
    }
    if (root_width <= 0) throw std::domain_error("root width must be positive");
}

std::string_view to_string(ConjectureId id) noexcept {
    switch (id) {
    case ConjectureId::CJ1: return "cj1";
    case ConjectureId::CJ2: return "cj2";
    case ConjectureId::CJ3: return "cj3";
    }
    return "unknown";
}

ConjectureId parse_conjecture(std::string_view text) {
    if (text == "cj1" || text == "CJ1") return ConjectureId::CJ1;
    if (text == "cj2" || text == "CJ2") return ConjectureId::CJ2;
    if (text == "cj3" || text == "CJ3") return ConjectureId::CJ3;
    throw Error(ErrorCode::UnknownFormat, "unknown conjecture '" + std::string(text) + "'");
}

std::string_view to_string(Invariant inv) noexcept {
    switch (inv) {
    case Invariant::F2: return "F2";
    case Invariant::Q1: return "q1";
    case Invariant::Lambda1: return "lambda1";
    }
    return "unknown";
}

ConjectureSides sides(ConjectureId id) noexcept {
    switch (id) {
    case ConjectureId::CJ1: return {Invariant::Q1, Invariant::Lambda1};
    case ConjectureId::CJ2: return {Invariant::F2, Invariant::Q1};
    case ConjectureId::CJ3: return {Invariant::F2, Invariant::Lambda1};
    }
    return {Invariant::F2, Invariant::F2};
}

mpz_class degree_power(const TreeGraph& t, unsigned k) {
    mpz_class total = 0;
    mpz_class term;
    for (Vertex v = 0; v < t.order(); ++v) {
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(t.degree(v)), k);
        total += term;
    }
    return total;
}

double distance(double iG, double iH, double sigma) {
    if (!(sigma > 0)) throw Error(ErrorCode::NonPositiveSigma, "sigma must be positive");
    const double z = (iG - iH) / sigma;
    return -std::expm1(-z * z);
}

TreeInvariants tree_invariants(const TreeGraph& t, const mpq_class& width) {
    TreeInvariants inv;
    inv.f2 = degree_power(t, 2);
    inv.charpoly_a = char_poly(t, MatrixKind::Adjacency);
    inv.charpoly_l = char_poly(t, MatrixKind::Laplacian);
    inv.lambda1 = largest_root(inv.charpoly_a, width);
    inv.q1 = largest_root(inv.charpoly_l, width);
    return inv;
}

namespace {

GapEnclosure abs_difference(const RootEnclosure& a, const RootEnclosure& b) {
    mpq_class lo = a.lo - b.hi;
    mpq_class hi = a.hi - b.lo;
    if (lo >= 0) return {lo, hi};
    if (hi <= 0) return {-hi, -lo};
    return {0, hi > -lo ? hi : mpq_class(-lo)};
}

// One side of the comparison: an exact integer gap (F2) or the gap between two
// certified spectral radii, possibly pinned to an exact value.
class GapSide {
public:
    GapSide(Invariant inv, const TreeInvariants& a, const TreeInvariants& b, const mpq_class& width)
        : inv_(inv), width_(width) {
        if (inv == Invariant::F2) {
            mpz_class d = a.f2 - b.f2;
            exact_ = mpq_class(abs(d));
            return;
        }
        const bool q = inv == Invariant::Q1;
        pa_ = q ? &a.charpoly_l.poly : &a.charpoly_a.poly;
        pb_ = q ? &b.charpoly_l.poly : &b.charpoly_a.poly;
        ea_ = q ? a.q1 : a.lambda1;
        eb_ = q ? b.q1 : b.lambda1;
        if (*pa_ == *pb_) {
            exact_ = mpq_class(0);
        } else if (ea_.exact() && eb_.exact()) {
            exact_ = abs(mpq_class(ea_.lo - eb_.lo));
        }
    }

    bool exact() const { return exact_.has_value(); }

    GapEnclosure interval() const {
        if (exact_) return {*exact_, *exact_};
        return abs_difference(ea_, eb_);
    }

    // Tries to prove the gap equals `value`; pins it on success. Each value is
    // attempted at most once.
    bool try_pin(const mpq_class& value) {
        if (exact_ || inv_ == Invariant::F2) return false;
        for (const auto& v : attempted_) {
            if (v == value) return false;
        }
        attempted_.push_back(value);
        const GapEnclosure gap = interval();
        if (value < gap.lo || value > gap.hi) return false;
        if (value == 0) {
            if (largest_roots_differ_by(*pa_, *pb_, 0)) {
                exact_ = mpq_class(0);
                return true;
            }
            return false;
        }
        // |ra - rb| = value: try the signs compatible with the enclosures.
        const mpq_class diff_lo = ea_.lo - eb_.hi;
        const mpq_class diff_hi = ea_.hi - eb_.lo;
        for (const mpq_class& signed_value : {mpq_class(value), mpq_class(-value)}) {
            if (signed_value < diff_lo || signed_value > diff_hi) continue;
            if (largest_roots_differ_by(*pa_, *pb_, signed_value)) {
                exact_ = value;
                return true;
            }
        }
        return false;
    }

    // Halves the enclosure widths; false once the floor is reached.
    bool refine() {
        if (exact_) return false;
        if (width_ <= kRefinementFloor) return false;
        width_ /= 2;
        if (width_ < kRefinementFloor) width_ = kRefinementFloor;
        ea_ = refine_largest_root(*pa_, ea_, width_);
        eb_ = refine_largest_root(*pb_, eb_, width_);
        if (ea_.exact() && eb_.exact()) exact_ = abs(mpq_class(ea_.lo - eb_.lo));
        return true;
    }

private:
    Invariant inv_;
    mpq_class width_;
    std::optional<mpq_class> exact_;
    const Poly* pa_ = nullptr;
    const Poly* pb_ = nullptr;
    RootEnclosure ea_;
    RootEnclosure eb_;
    std::vector<mpq_class> attempted_;
};

}  // namespace

std::optional<PairVerdict> compare_gaps(const TreeInvariants& a, const TreeInvariants& b, ConjectureId id,
                                        const mpq_class& width) {
    const auto [larger, smaller] = sides(id);
    GapSide lhs(larger, a, b, width);
    GapSide rhs(smaller, a, b, width);
    while (true) {
        const GapEnclosure l = lhs.interval();
        const GapEnclosure r = rhs.interval();
        PairVerdict v{true, l, r, lhs.exact() && rhs.exact()};
        // Counterexample iff the claimed-larger gap is certifiably smaller.
        if (l.hi < r.lo) {
            v.holds = false;
            return v;
        }
        if (l.lo >= r.hi) return v;

        bool pinned = lhs.try_pin(0) || rhs.try_pin(0);
        if (!pinned && lhs.exact()) pinned = rhs.try_pin(l.lo);
        if (!pinned && rhs.exact()) pinned = lhs.try_pin(r.lo);
        if (pinned) continue;

        const bool refined_l = lhs.refine();
        const bool refined_r = rhs.refine();
        if (!refined_l && !refined_r) return std::nullopt;
    }
}

PairVerdict conjecture_verdict(const TreeGraph& t1, const TreeGraph& t2, ConjectureId id, const MeasureConfig& cfg) {
    cfg.validate();
    if (t1.order() != t2.order()) {
        throw Error(ErrorCode::SizeMismatch, "trees have " + std::to_string(t1.order()) + " and " +
                                                 std::to_string(t2.order()) + " vertices");
    }
    const auto a = tree_invariants(t1, cfg.root_width);
    const auto b = tree_invariants(t2, cfg.root_width);
    auto verdict = compare_gaps(a, b, id, cfg.root_width);
    if (!verdict) {
        throw Error(ErrorCode::Undecidable, std::string("gap enclosures for ") + std::string(to_string(id)) +
                                                " still overlap at the refinement floor");
    }
    return *verdict;
}

}  // namespace cospec
