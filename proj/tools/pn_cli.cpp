// pn_cli.cpp -- command-line front end: membership testing, prefix normal
// forms and jumbled queries, enumeration/ratio tables as CSV, extension
// counts, game solvers, and bound evaluators.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "pn/enumeration.hpp"
#include "pn/games.hpp"
#include "pn/membership.hpp"
#include "pn/parikh_index.hpp"
#include "pn/word.hpp"

namespace {

unsigned default_budget() {
    if (const char* env = std::getenv("PN_ENUM_BUDGET")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return pn::kDefaultEnumBudget;
}

void print_outcome(const std::string& word, const pn::TestOutcome& out) {
    std::printf("%s: %s (%s)\n", word.c_str(),
                out.accepted ? "prefix normal" : "not prefix normal",
                pn::stage_name(out.decided_by));
    if (out.witness) {
        const auto& v = *out.witness;
        std::printf("witness: length=%zu start=%zu ones=%zu prefix_ones=%zu\n",
                    v.length, v.start + 1, v.substring_ones, v.prefix_ones);
    }
}

pn::TestOutcome run_method(const pn::BinaryWord& w, const std::string& method) {
    if (method == "naive") {
        pn::OracleResult r = pn::is_prefix_normal_naive(w);
        return {r.normal, r.violation, pn::Stage::Naive};
    }
    if (method == "vseq") return pn::test_vseq(w);
    if (method == "doubling") return pn::test_doubling(w);
    if (method == "member") return pn::member_pn(w);
    if (method == "gaps") {
        if (w.ones_count() == 0) return {true, std::nullopt, pn::Stage::TrivialCase};
        if (!w.bit(0))
            return {false, pn::is_prefix_normal_naive(w).violation,
                    pn::Stage::TrivialCase};
        const bool ok = pn::is_prefix_normal_gaps(pn::to_gap_form(w));
        return {ok, ok ? std::nullopt : pn::is_prefix_normal_naive(w).violation,
                pn::Stage::Naive};
    }
    if (method == "pnf-eq") {
        const bool ok = pn::is_prefix_normal_pnf(w);
        return {ok, ok ? std::nullopt : pn::is_prefix_normal_naive(w).violation,
                pn::Stage::Naive};
    }
    throw CLI::ValidationError("unknown method: " + method);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prefix normal word toolkit"};
    app.require_subcommand(1);
    unsigned budget = default_budget();
    app.add_option("--budget", budget, "enumeration budget cap (env PN_ENUM_BUDGET)");
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads for sweeps (0 = default)");

    // test
    std::string test_word, test_file, method = "member";
    auto* test = app.add_subcommand("test", "test prefix normality");
    test->add_option("word", test_word, "binary word");
    test->add_option("--file", test_file, "file with one word per line");
    test->add_option("--method", method,
                     "naive|vseq|doubling|member|gaps|pnf-eq");

    // pnf
    std::string pnf_word;
    auto* pnf = app.add_subcommand("pnf", "print both prefix normal forms");
    pnf->add_option("word", pnf_word)->required();

    // query
    std::string query_word;
    unsigned qx = 0, qy = 0;
    auto* query = app.add_subcommand("query", "jumbled query: substring with x ones and y zeros?");
    query->add_option("word", query_word)->required();
    query->add_option("x", qx, "number of ones")->required();
    query->add_option("y", qy, "number of zeros")->required();

    // enum
    unsigned enum_max_n = 0, list_n = 0;
    bool with_density = false;
    auto* enum_cmd = app.add_subcommand("enum", "count prefix normal words (CSV)");
    enum_cmd->add_option("--max-n", enum_max_n);
    enum_cmd->add_flag("--density", with_density, "add per-density columns");
    enum_cmd->add_option("--list", list_n, "list all prefix normal words of this length");

    // crit
    unsigned crit_max_n = 0;
    auto* crit = app.add_subcommand("crit", "extension-critical counts and ratios (CSV)");
    crit->add_option("--max-n", crit_max_n)->required();

    // ratios
    unsigned ratios_max_n = 0;
    auto* ratios = app.add_subcommand("ratios", "filter survivor ratios (CSV)");
    ratios->add_option("--max-n", ratios_max_n)->required();

    // ext
    std::string ext_word;
    unsigned ext_m = 0;
    int ext_d = -1;
    auto* ext = app.add_subcommand("ext", "count extensions keeping the word prefix normal");
    ext->add_option("word", ext_word)->required();
    ext->add_option("--m", ext_m, "extension length")->required();
    ext->add_option("--density", ext_d, "restrict to this total density");

    // game
    auto* game = app.add_subcommand("game", "prefix normal games");
    game->require_subcommand(1);
    unsigned game_n = 0, game_k = 1;
    auto* solve = game->add_subcommand("solve", "solve the free-placement game");
    solve->add_option("--n", game_n)->required();
    auto* blocks = game->add_subcommand("blocks", "block game: verify or count");
    blocks->add_option("--n", game_n)->required();
    blocks->add_option("--k", game_k)->required();
    bool do_verify = false, do_count = false;
    blocks->add_flag("--verify", do_verify);
    blocks->add_flag("--count", do_count);

    // bounds
    unsigned bounds_max_n = 0;
    auto* bounds = app.add_subcommand("bounds", "asymptotic bound evaluations (CSV)");
    bounds->add_option("--max-n", bounds_max_n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(static_cast<int>(threads));
#endif

    try {
        if (*test) {
            bool all_ok = true;
            if (!test_file.empty()) {
                std::ifstream in(test_file);
                if (!in) {
                    std::cerr << "cannot open " << test_file << "\n";
                    return 2;
                }
                std::string line;
                while (std::getline(in, line)) {
                    if (line.empty()) continue;
                    const auto out = run_method(pn::BinaryWord::parse(line), method);
                    print_outcome(line, out);
                    all_ok = all_ok && out.accepted;
                }
            } else if (test->count("word")) {
                const auto out = run_method(pn::BinaryWord::parse(test_word), method);
                print_outcome(test_word, out);
                all_ok = out.accepted;
            } else {
                std::cerr << "test needs a word or --file\n";
                return 2;
            }
            return all_ok ? 0 : 1;
        }
        if (*pnf) {
            const auto w = pn::BinaryWord::parse(pnf_word);
            const auto idx = pn::build_index(w);
            std::printf("%s\n%s\n%s\n", w.str().c_str(),
                        pn::pnf_one(idx).str().c_str(),
                        pn::pnf_zero(idx).str().c_str());
            return 0;
        }
        if (*query) {
            const auto w = pn::BinaryWord::parse(query_word);
            const auto idx = pn::build_index(w);
            const unsigned k = qx + qy;
            if (k > w.size()) {
                std::cerr << "x + y exceeds word length\n";
                return 2;
            }
            std::printf("%s %u %u\n", idx.query(qx, qy) ? "yes" : "no",
                        idx.min_ones[k], idx.max_ones[k]);
            return 0;
        }
        if (*enum_cmd) {
            if (enum_cmd->count("--list")) {
                pn::enumerate_pn(list_n, [](const pn::BinaryWord& w) {
                    std::printf("%s\n", w.str().c_str());
                });
                return 0;
            }
            std::printf("n,pnw");
            if (with_density)
                for (unsigned d = 0; d <= enum_max_n; ++d) std::printf(",d%u", d);
            std::printf("\n");
            for (unsigned n = 0; n <= enum_max_n; ++n) {
                if (with_density) {
                    const auto row = pn::pnw_density_row(n, budget);
                    uint64_t total = 0;
                    for (uint64_t v : row) total += v;
                    std::printf("%u,%llu", n, (unsigned long long)total);
                    for (unsigned d = 0; d <= enum_max_n; ++d)
                        std::printf(",%llu",
                                    d < row.size() ? (unsigned long long)row[d] : 0ull);
                    std::printf("\n");
                } else {
                    std::printf("%u,%llu\n", n,
                                (unsigned long long)pn::pnw_count(n, budget));
                }
                std::fflush(stdout);
            }
            return 0;
        }
        if (*crit) {
            std::printf("n,pnw,crit,ratio,scaled_ratio\n");
            for (const auto& r : pn::ratio_series(crit_max_n, budget))
                std::printf("%u,%llu,%llu,%.3f,%.3f\n", r.n,
                            (unsigned long long)r.pnw, (unsigned long long)r.crit,
                            r.ratio, r.scaled_ratio);
            return 0;
        }
        if (*ratios) {
            std::printf("n,M_trivial,ratio_trivial,M_both,ratio_both\n");
            for (unsigned n = 1; n <= ratios_max_n; ++n) {
                const auto a = pn::survivor_ratio(n, false);
                const auto b = pn::survivor_ratio(n, true);
                std::printf("%u,%llu,%.3f,%llu,%.3f\n", n,
                            (unsigned long long)a.survivors, a.ratio,
                            (unsigned long long)b.survivors, b.ratio);
                std::fflush(stdout);
                std::fprintf(stderr, "done n=%u\n", n);
            }
            return 0;
        }
        if (*ext) {
            const auto w = pn::BinaryWord::parse(ext_word);
            const uint64_t c =
                ext_d >= 0
                    ? pn::ext_count_density(w, ext_m, static_cast<unsigned>(ext_d), budget)
                    : pn::ext_count(w, ext_m, budget);
            std::printf("%llu\n", (unsigned long long)c);
            return 0;
        }
        if (*game) {
            if (*solve) {
                const auto result = pn::solve_game_v1(game_n);
                std::printf("winner: %s\n",
                            result.winner == pn::Player::Alice ? "Alice" : "Bob");
                if (result.winner == pn::Player::Alice &&
                    !result.principal_variation.empty()) {
                    const auto& m = result.principal_variation.front();
                    std::printf("first move: position %u <- %u\n", m.pos + 1,
                                m.value);
                }
                return 0;
            }
            if (*blocks) {
                const pn::BlockGameConfig config{game_n, game_k};
                if (do_count) {
                    std::printf("%llu\n",
                                (unsigned long long)pn::count_block_outcomes(config));
                } else {
                    std::printf("%s\n", pn::verify_block_lemma(config)
                                            ? "Alice wins every play"
                                            : "counterexample found");
                }
                return 0;
            }
        }
        if (*bounds) {
            std::printf("n,upper_ratio,lower_count_estimate\n");
            for (unsigned n = 2; n <= bounds_max_n; ++n) {
                const auto bv = pn::bound_values(n);
                std::printf("%u,%.6g,%.6g\n", n, bv.upper_ratio,
                            bv.lower_count_estimate);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
