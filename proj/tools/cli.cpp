#include "cli.hpp"

#include "cospec/coalescence.hpp"
#include "cospec/error.hpp"
#include "cospec/measures.hpp"
#include "cospec/spectra.hpp"
#include "cospec/survey.hpp"
#include "cospec/tree_gen.hpp"

#include "CLI11.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace cospec::cli {

namespace {

constexpr std::string_view kVersion = "cospec 1.0.0";

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kUndecidable = 3;

/// Exact rational from a decimal literal such as "1e-12" or "0.000001".
mpq_class parse_decimal(const std::string& text) {
    std::string mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        mantissa = text.substr(0, e);
        exponent = std::stol(text.substr(e + 1));
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
        negative = mantissa[0] == '-';
        mantissa.erase(0, 1);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char c : mantissa) {
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits += c;
            if (seen_point) ++frac_digits;
        } else {
            throw std::invalid_argument("not a decimal number: " + text);
        }
    }
    if (digits.empty()) throw std::invalid_argument("not a decimal number: " + text);
    mpq_class value{mpz_class(digits)};
    mpz_class ten_pow;
    const long shift = exponent - frac_digits;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift < 0) {
        value /= ten_pow;
    } else {
        value *= ten_pow;
    }
    value.canonicalize();
    return negative ? mpq_class(-value) : value;
}

/// Rounds to `digits` decimals, exactly.
std::string format_decimal(const mpq_class& x, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpq_class scaled = abs(x) * scale + mpq_class(1, 2);
    mpz_class rounded = scaled.get_num() / scaled.get_den();
    std::string s = rounded.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
    s.insert(s.size() - digits, ".");
    return (x < 0 && rounded != 0 ? "-" : "") + s;
}

std::string coefficient_list(const Poly& p) {
    std::string out = "[";
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += c[i].get_str();
    }
    return out + "]";
}

std::string levels_text(const LevelSequence& levels) {
    std::string out;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(levels[i]);
    }
    return out;
}

std::vector<ConjectureId> parse_conjecture_list(const std::string& text) {
    std::vector<ConjectureId> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto id = parse_conjecture(item);
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    }
    if (out.empty()) throw Error(ErrorCode::UnknownFormat, "no conjectures given");
    return out;
}

struct Globals {
    double sigma = 1.0;
    std::string precision = "1e-12";
    unsigned threads = 0;
    std::string format = "markdown";

    MeasureConfig config() const {
        MeasureConfig cfg;
        cfg.sigma = sigma;
        cfg.root_width = parse_decimal(precision);
        cfg.validate();
        return cfg;
    }
};

void print_invariants(std::ostream& out, const TreeGraph& t, const MeasureConfig& cfg) {
    const auto rec = compute_invariants(t, cfg);
    out << "code=" << levels_text(rec.code.levels) << "\tf2=" << rec.f2.get_str()
        << "\tlambda1=" << format_decimal(rec.lambda1.midpoint(), 10)
        << "\tq1=" << format_decimal(rec.q1.midpoint(), 10)
        << "\tcharpoly_a=" << coefficient_list(rec.charpoly_a.poly)
        << "\tcharpoly_l=" << coefficient_list(rec.charpoly_l.poly) << '\n';
}

std::string value_text(const TreeInvariants& inv, Invariant which) {
    switch (which) {
    case Invariant::F2: return inv.f2.get_str();
    case Invariant::Q1: return format_decimal(inv.q1.midpoint(), 10);
    case Invariant::Lambda1: return format_decimal(inv.lambda1.midpoint(), 10);
    }
    return "";
}

std::string gap_text(const GapEnclosure& g) {
    if (g.exact()) return format_decimal(g.lo, 10) + " (exact)";
    return format_decimal((g.lo + g.hi) / 2, 10) + " in [" + format_decimal(g.lo, 15) + ", " +
           format_decimal(g.hi, 15) + "]";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral-distance conjecture survey and cospectral tree construction", "cospec"};
    app.fallthrough();
    app.require_subcommand(0, 1);
    Globals g;
    app.add_option("--sigma", g.sigma, "Sigma in d_I = 1 - exp(-((I(G)-I(H))/sigma)^2)")->capture_default_str();
    app.add_option("--precision", g.precision, "Width of spectral-radius enclosures")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads (0: all cores)")->capture_default_str();
    app.add_option("--format", g.format, "Output format: markdown|csv|json (survey); graph6|levels (gen)");
    app.add_flag_callback("--version", [&] { err << kVersion << '\n'; }, "Print the version to stderr");

    // gen
    auto* gen = app.add_subcommand("gen", "Stream one tree per isomorphism class, one per line");
    int gen_n = 0;
    bool gen_rooted = false;
    gen->add_option("--n", gen_n, "Vertex count")->required()->check(CLI::Range(1, 62));
    gen->add_flag("--rooted", gen_rooted, "Enumerate rooted trees (root is vertex 0)");

    // invariants
    auto* inv = app.add_subcommand("invariants", "Print F2, lambda1, q1 and characteristic polynomials");
    int inv_n = 0;
    std::vector<std::string> inv_graph6;
    auto* inv_n_opt = inv->add_option("--n", inv_n, "All trees on n vertices")->check(CLI::Range(1, 62));
    auto* inv_g6_opt = inv->add_option("--graph6", inv_graph6, "Tree(s) in graph6");
    inv_n_opt->excludes(inv_g6_opt);

    // verify
    auto* verify = app.add_subcommand("verify", "Decide one conjecture on one pair of trees");
    std::vector<std::string> verify_graph6;
    std::string verify_conjecture;
    verify->add_option("--graph6", verify_graph6, "The two trees (give the flag twice)")->required()->expected(2);
    verify->add_option("--conjecture", verify_conjecture, "cj1|cj2|cj3")->required();

    // survey
    auto* surv = app.add_subcommand("survey", "Count counterexamples over all tree pairs");
    int survey_from = 4;
    int survey_to = 10;
    std::string survey_conjectures = "cj1,cj2,cj3";
    std::string survey_cache;
    surv->add_option("--from", survey_from, "Smallest n")->capture_default_str()->check(CLI::Range(4, 30));
    surv->add_option("--to", survey_to, "Largest n")->capture_default_str()->check(CLI::Range(4, 30));
    surv->add_option("--conjectures", survey_conjectures, "Comma list of cj1,cj2,cj3")->capture_default_str();
    surv->add_option("--cache", survey_cache, "JSON-lines invariant cache");

    // cospectral-search
    auto* search = app.add_subcommand("cospectral-search", "List cospectrally rooted pairs of rooted trees");
    int search_n = 0;
    std::string search_kind = "laplacian";
    search->add_option("--n", search_n, "Vertex count")->required()->check(CLI::Range(2, 62));
    search->add_option("--kind", search_kind, "adjacency|laplacian|signless")->capture_default_str();

    // coalesce
    auto* coal = app.add_subcommand("coalesce", "Coalesce attachments onto a cospectrally rooted seed pair");
    std::string seed_a;
    std::string seed_b;
    std::vector<std::string> attach;
    std::string coal_kind = "laplacian";
    coal->add_option("--seed-a", seed_a, "First seed as graph6:root")->required();
    coal->add_option("--seed-b", seed_b, "Second seed as graph6:root")->required();
    coal->add_option("--attach", attach, "Attachment(s) as graph6:root")->required();
    coal->add_option("--kind", coal_kind, "adjacency|laplacian|signless")->capture_default_str();

    if (argc <= 1) {
        err << app.help();
        return kUsage;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (app.get_subcommands().empty()) {
        if (app.count("--version")) return kOk;
        err << app.help();
        return kUsage;
    }

    try {
        const MeasureConfig cfg = g.config();
        if (gen->parsed()) {
            std::string fmt = app.count("--format") ? g.format : "graph6";
            if (fmt != "graph6" && fmt != "levels") throw Error(ErrorCode::UnknownFormat, "gen format " + fmt);
            if (gen_rooted) {
                for (const auto& rt : enumerate_rooted_trees(gen_n)) {
                    if (fmt == "graph6") {
                        out << encode_rooted(rt) << '\n';
                    } else {
                        out << levels_text(rooted_level_sequence(rt.tree, rt.root)) << '\n';
                    }
                }
            } else {
                for (const auto& code : enumerate_free_tree_codes(gen_n)) {
                    if (fmt == "graph6") {
                        out << encode_graph6(tree_from_levels(code.levels)) << '\n';
                    } else {
                        out << levels_text(code.levels) << '\n';
                    }
                }
            }
            return kOk;
        }
        if (inv->parsed()) {
            if (inv_graph6.empty() && inv_n == 0) {
                err << "error: invariants needs --n or --graph6\n";
                return kUsage;
            }
            if (inv_n > 0) {
                for (const auto& t : enumerate_free_trees(inv_n)) print_invariants(out, t, cfg);
            }
            for (const auto& code : inv_graph6) print_invariants(out, decode_graph6(code), cfg);
            return kOk;
        }
        if (verify->parsed()) {
            const auto id = parse_conjecture(verify_conjecture);
            const auto t1 = decode_graph6(verify_graph6[0]);
            const auto t2 = decode_graph6(verify_graph6[1]);
            const auto verdict = conjecture_verdict(t1, t2, id, cfg);
            const auto a = tree_invariants(t1, cfg.root_width);
            const auto b = tree_invariants(t2, cfg.root_width);
            const auto [larger, smaller] = sides(id);
            out << "conjecture: " << to_string(id) << " (d_" << to_string(larger) << " >= d_" << to_string(smaller)
                << ")\n";
            for (Invariant which : {larger, smaller}) {
                out << to_string(which) << ": " << value_text(a, which) << ' ' << value_text(b, which) << '\n';
            }
            out << "gap " << to_string(larger) << ": " << gap_text(verdict.lhs_gap) << '\n';
            out << "gap " << to_string(smaller) << ": " << gap_text(verdict.rhs_gap) << '\n';
            auto gap_mid = [](const GapEnclosure& gap) { return mpq_class((gap.lo + gap.hi) / 2).get_d(); };
            std::ostringstream d;
            d << std::fixed << std::setprecision(10);
            d << "d_" << to_string(larger) << ": " << distance(gap_mid(verdict.lhs_gap), 0.0, cfg.sigma) << '\n';
            d << "d_" << to_string(smaller) << ": " << distance(gap_mid(verdict.rhs_gap), 0.0, cfg.sigma) << '\n';
            out << d.str();
            out << "verdict: " << (verdict.holds ? "holds" : "counterexample") << '\n';
            return kOk;
        }
        if (surv->parsed()) {
            if (survey_to < survey_from) throw std::invalid_argument("--to must be at least --from");
            const auto format = parse_table_format(g.format);
            const auto conjectures = parse_conjecture_list(survey_conjectures);
            SurveyOptions options;
            options.threads = g.threads;
            options.cache = survey_cache;
            const auto rows = survey(survey_from, survey_to, conjectures, cfg, options);
            out << emit_table(rows, format, conjectures);
            std::uint64_t undecidable = 0;
            for (const auto& r : rows) undecidable += r.undecidable;
            if (undecidable > 0) {
                err << "warning: " << undecidable << " pair(s) undecidable at the refinement floor\n";
                return kUndecidable;
            }
            return kOk;
        }
        if (search->parsed()) {
            const auto kind = parse_matrix_kind(search_kind);
            for (const auto& p : find_cospectrally_rooted_pairs(search_n, kind)) {
                out << encode_rooted(p.first) << ' ' << encode_rooted(p.second) << '\n';
            }
            return kOk;
        }
        if (coal->parsed()) {
            const auto kind = parse_matrix_kind(coal_kind);
            const auto a = decode_rooted(seed_a);
            const auto b = decode_rooted(seed_b);
            std::vector<RootedTree> ks;
            for (const auto& s : attach) ks.push_back(decode_rooted(s));
            for (const auto& pair : generate_family(a, b, kind, ks)) {
                out << encode_graph6(pair.first) << ' ' << encode_graph6(pair.second) << '\n';
            }
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::Undecidable ? kUndecidable : kFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    err << app.help();
    return kUsage;
}

}  // namespace cospec::cli
