#pragma once

#include "cospec/graph.hpp"
#include "cospec/measures.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cospec {

/// Per-tree invariant bundle reused across every pair the tree takes part in.
struct InvariantRecord : TreeInvariants {
    CanonicalCode code;
    int n = 0;

    friend bool operator==(const InvariantRecord& a, const InvariantRecord& b) {
        return a.code == b.code && a.n == b.n && a.f2 == b.f2 && a.charpoly_a == b.charpoly_a &&
               a.charpoly_l == b.charpoly_l && a.lambda1 == b.lambda1 && a.q1 == b.q1;
    }
};

struct SurveyRow {
    int n = 0;
    std::uint64_t pair_count = 0;
    std::map<ConjectureId, std::uint64_t> counterexamples;
    std::uint64_t undecidable = 0;

    friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

struct SurveyOptions {
    unsigned threads = 0;  // 0: hardware concurrency
    std::filesystem::path cache;  // empty: no cache
};

InvariantRecord compute_invariants(const TreeGraph& t, const MeasureConfig& cfg);

/// Records for every tree on n vertices in canonical order, computed in parallel.
std::vector<InvariantRecord> compute_all_invariants(int n, const MeasureConfig& cfg, unsigned threads);

/// Outcome of one pair under one conjecture.
enum class PairOutcome { Holds, Counterexample, Undecidable };

/// Decides one unordered pair, using the floating-point fast path when the gap
/// separation dwarfs the enclosure widths and the certified protocol otherwise.
PairOutcome classify_pair(const InvariantRecord& a, const InvariantRecord& b, ConjectureId id,
                          const MeasureConfig& cfg);

struct PairIndex {
    std::size_t first;
    std::size_t second;
    friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

/// Sweeps all pairs i <= j of one vertex count.
SurveyRow sweep(std::span<const InvariantRecord> records, std::span<const ConjectureId> conjectures,
                const MeasureConfig& cfg, unsigned threads);

/// Counterexample pairs for one conjecture, ascending.
std::vector<PairIndex> counterexample_pairs(std::span<const InvariantRecord> records, ConjectureId id,
                                            const MeasureConfig& cfg, unsigned threads);

std::vector<SurveyRow> survey(int n_from, int n_to, std::span<const ConjectureId> conjectures,
                              const MeasureConfig& cfg, const SurveyOptions& options = {});

enum class TableFormat { Csv, Json, Markdown };
/// Throws Error{UnknownFormat}.
TableFormat parse_table_format(std::string_view text);

/// Renders rows; `conjectures` picks the columns (empty: those present in rows,
/// or all three when rows is empty).
std::string emit_table(std::span<const SurveyRow> rows, TableFormat format,
                       std::span<const ConjectureId> conjectures = {});
/// Inverse of emit_table for the JSON format.
std::vector<SurveyRow> parse_table_json(std::string_view text);

inline constexpr int kCacheVersion = 1;

/// JSON-lines cache. Throws Error{CacheVersionMismatch, CorruptRecord}.
std::vector<InvariantRecord> load_cache(const std::filesystem::path& path);
void store_cache(const std::filesystem::path& path, std::span<const InvariantRecord> records);

unsigned resolve_threads(unsigned requested);

}  // namespace cospec
