#pragma once

#include "cospec/graph.hpp"
#include "cospec/spectra.hpp"

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string_view>

namespace cospec {

struct MeasureConfig {
    double sigma = 1.0;
    mpq_class root_width = kDefaultRootWidth;

    /// Throws Error{NonPositiveSigma} / std::domain_error on a bad field.
    void validate() const;
};

/// CJ1: d_q1 >= d_lambda1, CJ2: d_F2 >= d_q1, CJ3: d_F2 >= d_lambda1.
enum class ConjectureId { CJ1, CJ2, CJ3 };

inline constexpr std::array<ConjectureId, 3> kAllConjectures{ConjectureId::CJ1, ConjectureId::CJ2, ConjectureId::CJ3};

std::string_view to_string(ConjectureId id) noexcept;
ConjectureId parse_conjecture(std::string_view text);

/// The invariant each side of a conjecture compares.
enum class Invariant { F2, Q1, Lambda1 };
std::string_view to_string(Invariant inv) noexcept;

struct ConjectureSides {
    Invariant larger;   // claimed-larger distance
    Invariant smaller;  // claimed-smaller distance
};
ConjectureSides sides(ConjectureId id) noexcept;

/// Certified enclosure of |I(T) - I(T')|.
struct GapEnclosure {
    mpq_class lo;
    mpq_class hi;
    bool exact() const { return lo == hi; }
};

struct PairVerdict {
    bool holds = true;
    GapEnclosure lhs_gap;  // gap of the claimed-larger side
    GapEnclosure rhs_gap;  // gap of the claimed-smaller side
    bool decided_exactly = false;
};

mpz_class degree_power(const TreeGraph& t, unsigned k);

/// 1 - exp(-((iG - iH) / sigma)^2). Throws Error{NonPositiveSigma}.
double distance(double iG, double iH, double sigma);

/// Invariant values of one tree as needed for gap comparisons.
struct TreeInvariants {
    mpz_class f2;
    CharPoly charpoly_a;
    CharPoly charpoly_l;
    RootEnclosure lambda1;
    RootEnclosure q1;
};

TreeInvariants tree_invariants(const TreeGraph& t, const mpq_class& width);

/// Outcome of a certified gap comparison; nullopt when undecidable.
std::optional<PairVerdict> compare_gaps(const TreeInvariants& a, const TreeInvariants& b, ConjectureId id,
                                        const mpq_class& width);

/// Throws Error{SizeMismatch} and Error{Undecidable}.
PairVerdict conjecture_verdict(const TreeGraph& t1, const TreeGraph& t2, ConjectureId id, const MeasureConfig& cfg);

/// Smallest enclosure width the comparison protocol refines to.
inline const mpq_class kRefinementFloor{mpz_class(1), mpz_class("1000000000000000000000000000000")};  // 1e-30

}  // namespace cospec
