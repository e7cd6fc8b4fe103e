#include "cospec/survey.hpp"

#include "cospec/error.hpp"
#include "cospec/tree_gen.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>
#include <tuple>

namespace cospec {

using json = nlohmann::json;

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

// Runs body(i) for i in [0, count) across workers pulling indices from a
// shared counter.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i, 0u);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = next++; i < count; i = next++) body(i, w);
        });
    }
    for (auto& th : pool) th.join();
}

// Midpoints and half-widths in double precision for the fast path.
struct Approx {
    double f2;
    double lambda1;
    double lambda1_radius;
    double q1;
    double q1_radius;
};

// Bound on rounding error for spectral radii below 2^6 plus subtraction.
constexpr double kRoundingSlack = 1e-12;

Approx approximate(const InvariantRecord& r) {
    auto mid = [](const RootEnclosure& e) { return e.midpoint().get_d(); };
    auto radius = [](const RootEnclosure& e) { return mpq_class(e.width() / 2).get_d(); };
    return {r.f2.get_d(), mid(r.lambda1), radius(r.lambda1), mid(r.q1), radius(r.q1)};
}

struct ApproxGap {
    double value;
    double radius;
};

ApproxGap approx_gap(Invariant inv, const Approx& a, const Approx& b) {
    switch (inv) {
    case Invariant::F2: return {std::fabs(a.f2 - b.f2), 0.0};
    case Invariant::Q1: return {std::fabs(a.q1 - b.q1), a.q1_radius + b.q1_radius};
    case Invariant::Lambda1: return {std::fabs(a.lambda1 - b.lambda1), a.lambda1_radius + b.lambda1_radius};
    }
    return {0.0, 0.0};
}

PairOutcome classify(const InvariantRecord& a, const Approx& aa, const InvariantRecord& b, const Approx& ab,
                     ConjectureId id, const MeasureConfig& cfg) {
    if (&a == &b) return PairOutcome::Holds;
    const auto [larger, smaller] = sides(id);
    const ApproxGap l = approx_gap(larger, aa, ab);
    const ApproxGap r = approx_gap(smaller, aa, ab);
    const double slack = l.radius + r.radius + kRoundingSlack;
    if (l.value + slack < r.value) return PairOutcome::Counterexample;
    if (l.value > r.value + slack) return PairOutcome::Holds;
    const auto verdict = compare_gaps(a, b, id, cfg.root_width);
    if (!verdict) return PairOutcome::Undecidable;
    return verdict->holds ? PairOutcome::Holds : PairOutcome::Counterexample;
}

}  // namespace

InvariantRecord compute_invariants(const TreeGraph& t, const MeasureConfig& cfg) {
    InvariantRecord rec;
    static_cast<TreeInvariants&>(rec) = tree_invariants(t, cfg.root_width);
    rec.code = canonical_code(t);
    rec.n = t.order();
    return rec;
}

std::vector<InvariantRecord> compute_all_invariants(int n, const MeasureConfig& cfg, unsigned threads) {
    const auto trees = enumerate_free_trees(n);
    std::vector<InvariantRecord> records(trees.size());
    parallel_for(trees.size(), resolve_threads(threads),
                 [&](std::size_t i, unsigned) { records[i] = compute_invariants(trees[i], cfg); });
    return records;
}

PairOutcome classify_pair(const InvariantRecord& a, const InvariantRecord& b, ConjectureId id,
                          const MeasureConfig& cfg) {
    if (a.n != b.n) throw Error(ErrorCode::SizeMismatch, "records have different vertex counts");
    if (a.code == b.code) return PairOutcome::Holds;
    return classify(a, approximate(a), b, approximate(b), id, cfg);
}

SurveyRow sweep(std::span<const InvariantRecord> records, std::span<const ConjectureId> conjectures,
                const MeasureConfig& cfg, unsigned threads) {
    threads = resolve_threads(threads);
    std::vector<Approx> approx(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) approx[i] = approximate(records[i]);

    const std::size_t k = conjectures.size();
    // per worker: k counterexample counters followed by one undecidable counter
    std::vector<std::vector<std::uint64_t>> counts(threads, std::vector<std::uint64_t>(k + 1, 0));
    parallel_for(records.size(), threads, [&](std::size_t i, unsigned w) {
        auto& mine = counts[w];
        for (std::size_t j = i + 1; j < records.size(); ++j) {
            bool undecided = false;
            for (std::size_t c = 0; c < k; ++c) {
                switch (classify(records[i], approx[i], records[j], approx[j], conjectures[c], cfg)) {
                case PairOutcome::Counterexample: ++mine[c]; break;
                case PairOutcome::Undecidable: undecided = true; break;
                case PairOutcome::Holds: break;
                }
            }
            if (undecided) ++mine[k];
        }
    });

    SurveyRow row;
    row.n = records.empty() ? 0 : records.front().n;
    row.pair_count = static_cast<std::uint64_t>(records.size()) * (records.size() + 1) / 2;
    for (std::size_t c = 0; c < k; ++c) {
        std::uint64_t total = 0;
        for (const auto& mine : counts) total += mine[c];
        row.counterexamples[conjectures[c]] = total;
    }
    for (const auto& mine : counts) row.undecidable += mine[k];
    return row;
}

std::vector<PairIndex> counterexample_pairs(std::span<const InvariantRecord> records, ConjectureId id,
                                            const MeasureConfig& cfg, unsigned threads) {
    threads = resolve_threads(threads);
    std::vector<Approx> approx(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) approx[i] = approximate(records[i]);
    std::vector<std::vector<PairIndex>> found(threads);
    parallel_for(records.size(), threads, [&](std::size_t i, unsigned w) {
        for (std::size_t j = i + 1; j < records.size(); ++j) {
            if (classify(records[i], approx[i], records[j], approx[j], id, cfg) == PairOutcome::Counterexample) {
                found[w].push_back({i, j});
            }
        }
    });
    std::vector<PairIndex> out;
    for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::map<std::pair<int, CanonicalCode>, InvariantRecord> index_records(std::vector<InvariantRecord> records) {
    std::map<std::pair<int, CanonicalCode>, InvariantRecord> out;
    for (auto& r : records) {
        auto key = std::make_pair(r.n, r.code);
        out.insert_or_assign(std::move(key), std::move(r));
    }
    return out;
}

}  // namespace

std::vector<SurveyRow> survey(int n_from, int n_to, std::span<const ConjectureId> conjectures,
                              const MeasureConfig& cfg, const SurveyOptions& options) {
    cfg.validate();
    if (n_from < 4 || n_to < n_from) {
        throw std::invalid_argument("survey range must satisfy 4 <= from <= to");
    }
    const unsigned threads = resolve_threads(options.threads);
    std::map<std::pair<int, CanonicalCode>, InvariantRecord> cache;
    const bool use_cache = !options.cache.empty();
    if (use_cache && std::filesystem::exists(options.cache)) cache = index_records(load_cache(options.cache));
    bool cache_dirty = false;

    std::vector<SurveyRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        const auto trees = enumerate_free_trees(n);
        std::vector<InvariantRecord> records(trees.size());
        std::vector<std::size_t> missing;
        for (std::size_t i = 0; i < trees.size(); ++i) {
            auto it = cache.find({n, canonical_code(trees[i])});
            if (it != cache.end() && it->second.lambda1.width() <= cfg.root_width &&
                it->second.q1.width() <= cfg.root_width) {
                records[i] = it->second;
            } else {
                missing.push_back(i);
            }
        }
        parallel_for(missing.size(), threads, [&](std::size_t k, unsigned) {
            records[missing[k]] = compute_invariants(trees[missing[k]], cfg);
        });
        if (use_cache && !missing.empty()) {
            for (std::size_t i : missing) cache.insert_or_assign({n, records[i].code}, records[i]);
            cache_dirty = true;
        }
        rows.push_back(sweep(records, conjectures, cfg, threads));
    }
    if (use_cache && cache_dirty) {
        std::vector<InvariantRecord> all;
        all.reserve(cache.size());
        for (auto& [key, rec] : cache) all.push_back(rec);
        store_cache(options.cache, all);
    }
    return rows;
}

TableFormat parse_table_format(std::string_view text) {
    if (text == "csv") return TableFormat::Csv;
    if (text == "json") return TableFormat::Json;
    if (text == "markdown" || text == "md") return TableFormat::Markdown;
    throw Error(ErrorCode::UnknownFormat, "unknown table format '" + std::string(text) + "'");
}

namespace {

std::vector<ConjectureId> table_columns(std::span<const SurveyRow> rows, std::span<const ConjectureId> requested) {
    if (!requested.empty()) return {requested.begin(), requested.end()};
    std::vector<ConjectureId> out;
    for (ConjectureId id : kAllConjectures) {
        const bool present =
            rows.empty() || std::any_of(rows.begin(), rows.end(), [id](const SurveyRow& r) {
                return r.counterexamples.contains(id);
            });
        if (present) out.push_back(id);
    }
    return out;
}

std::uint64_t count_for(const SurveyRow& row, ConjectureId id) {
    auto it = row.counterexamples.find(id);
    return it == row.counterexamples.end() ? 0 : it->second;
}

std::string markdown_title(ConjectureId id) {
    switch (id) {
    case ConjectureId::CJ1: return "cj1 counterexamples (d_q1 >= d_lambda1)";
    case ConjectureId::CJ2: return "cj2 counterexamples (d_F2 >= d_q1)";
    case ConjectureId::CJ3: return "cj3 counterexamples (d_F2 >= d_lambda1)";
    }
    return "";
}

}  // namespace

std::string emit_table(std::span<const SurveyRow> rows, TableFormat format,
                       std::span<const ConjectureId> conjectures) {
    const auto columns = table_columns(rows, conjectures);
    const bool any_undecidable =
        std::any_of(rows.begin(), rows.end(), [](const SurveyRow& r) { return r.undecidable > 0; });
    std::ostringstream out;
    switch (format) {
    case TableFormat::Csv: {
        out << "n,tree_pairs";
        for (auto id : columns) out << ',' << to_string(id);
        out << ",undecidable\n";
        for (const auto& r : rows) {
            out << r.n << ',' << r.pair_count;
            for (auto id : columns) out << ',' << count_for(r, id);
            out << ',' << r.undecidable << '\n';
        }
        break;
    }
    case TableFormat::Json: {
        json doc;
        doc["columns"] = json::array();
        for (auto id : columns) doc["columns"].push_back(std::string(to_string(id)));
        doc["rows"] = json::array();
        for (const auto& r : rows) {
            json row{{"n", r.n}, {"pair_count", r.pair_count}, {"undecidable", r.undecidable}};
            row["counterexamples"] = json::object();
            for (auto id : columns) row["counterexamples"][std::string(to_string(id))] = count_for(r, id);
            doc["rows"].push_back(std::move(row));
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case TableFormat::Markdown: {
        bool first = true;
        for (auto id : columns) {
            if (!first) out << '\n';
            first = false;
            out << "| n | tree pairs | " << markdown_title(id) << " |";
            if (any_undecidable) out << " undecidable |";
            out << "\n|--:|--:|--:|";
            if (any_undecidable) out << "--:|";
            out << '\n';
            for (const auto& r : rows) {
                out << "| " << r.n << " | " << r.pair_count << " | " << count_for(r, id) << " |";
                if (any_undecidable) out << ' ' << r.undecidable << " |";
                out << '\n';
            }
        }
        break;
    }
    }
    return out.str();
}

std::vector<SurveyRow> parse_table_json(std::string_view text) {
    std::vector<SurveyRow> rows;
    try {
        const json doc = json::parse(text);
        for (const auto& jr : doc.at("rows")) {
            SurveyRow r;
            r.n = jr.at("n").get<int>();
            r.pair_count = jr.at("pair_count").get<std::uint64_t>();
            r.undecidable = jr.at("undecidable").get<std::uint64_t>();
            for (const auto& [key, value] : jr.at("counterexamples").items()) {
                r.counterexamples[parse_conjecture(key)] = value.get<std::uint64_t>();
            }
            rows.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::UnknownFormat, std::string("malformed table json: ") + e.what());
    }
    return rows;
}

// Cache layout: a header line {"format": "cospec-invariants", "version": N}
// followed by one JSON object per record. Big integers and rationals are
// decimal strings.
namespace {

constexpr std::string_view kCacheFormat = "cospec-invariants";

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
    return arr;
}

Poly poly_from_json(const json& arr) {
    std::vector<mpz_class> c;
    for (const auto& v : arr) c.emplace_back(v.get<std::string>());
    return Poly(std::move(c));
}

json enclosure_to_json(const RootEnclosure& e) { return json::array({e.lo.get_str(), e.hi.get_str()}); }

RootEnclosure enclosure_from_json(const json& arr) {
    if (!arr.is_array() || arr.size() != 2) throw std::invalid_argument("enclosure must have two endpoints");
    mpq_class lo(arr[0].get<std::string>());
    mpq_class hi(arr[1].get<std::string>());
    lo.canonicalize();
    hi.canonicalize();
    if (hi < lo) throw std::invalid_argument("enclosure endpoints out of order");
    return {lo, hi};
}

}  // namespace

void store_cache(const std::filesystem::path& path, std::span<const InvariantRecord> records) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache " + path.string());
    out << json{{"format", kCacheFormat}, {"version", kCacheVersion}}.dump() << '\n';
    for (const auto& r : records) {
        json j{{"n", r.n},
               {"code", r.code.levels},
               {"f2", r.f2.get_str()},
               {"lambda1", enclosure_to_json(r.lambda1)},
               {"q1", enclosure_to_json(r.q1)},
               {"charpoly_a", poly_to_json(r.charpoly_a.poly)},
               {"charpoly_l", poly_to_json(r.charpoly_l.poly)}};
        out << j.dump() << '\n';
    }
}

std::vector<InvariantRecord> load_cache(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read cache " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::CacheVersionMismatch, "empty cache file");
    try {
        const json header = json::parse(line);
        if (header.at("format").get<std::string>() != kCacheFormat ||
            header.at("version").get<int>() != kCacheVersion) {
            throw Error(ErrorCode::CacheVersionMismatch, "cache header " + line + " does not match version " +
                                                             std::to_string(kCacheVersion));
        }
    } catch (const json::exception&) {
        throw Error(ErrorCode::CacheVersionMismatch, "unreadable cache header");
    }
    std::vector<InvariantRecord> records;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            const json j = json::parse(line);
            InvariantRecord r;
            r.n = j.at("n").get<int>();
            r.code.levels = j.at("code").get<std::vector<int>>();
            r.f2 = mpz_class(j.at("f2").get<std::string>());
            r.lambda1 = enclosure_from_json(j.at("lambda1"));
            r.q1 = enclosure_from_json(j.at("q1"));
            r.charpoly_a = CharPoly{MatrixKind::Adjacency, poly_from_json(j.at("charpoly_a"))};
            r.charpoly_l = CharPoly{MatrixKind::Laplacian, poly_from_json(j.at("charpoly_l"))};
            if (static_cast<int>(r.code.levels.size()) != r.n || r.charpoly_a.poly.degree() != r.n ||
                r.charpoly_l.poly.degree() != r.n) {
                throw std::invalid_argument("record sizes disagree with n");
            }
            records.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw Error(ErrorCode::CorruptRecord, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return records;
}

}  // namespace cospec
