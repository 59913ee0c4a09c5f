// Front end.  Subcommands:
//   build N          construct and verify a word of length N
//   verify WORD      check levelness and circular square-freeness
//   encode WORD      circular Pansiot code of the given representative
//   decode BITS|-s U Pansiot decode of a binary word or of expand_f(U)
//   count N          circular square-free necklaces of length N
//   search-short N   exhaustive search for a short encoding
//   search-link N    search for a linking word of expansion length N
//   table1           recompute the block decode table
//   table2           verify (or re-search) the linking-word table
//   table3           verify the short-encoding table
//   nonexist         confirm the six impossible lengths exhaustively
// Exit codes: 0 success, 1 verification failure, 2 no such length,
// 3 usage or domain error.
#include "csf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "csf/assemble.hpp"
#include "csf/morphism.hpp"
#include "csf/pansiot.hpp"
#include "csf/serialize.hpp"
#include "csf/shur.hpp"

namespace csf::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kNoSuchLength = 2;
constexpr int kUsage = 3;

struct Common {
    bool json = false;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::string data_dir;
};

Tables tables_for(const Common& c) {
    return load_tables(c.data_dir.empty() ? default_data_dir() : c.data_dir);
}

SearchOptions opts_for(const Common& c) { return SearchOptions{c.seed, c.workers}; }

void print_certificate(std::ostream& out, const BuildCertificate& cert, bool as_json) {
    if (as_json) {
        out << to_json(cert).dump() << "\n";
        return;
    }
    out << "n: " << cert.n << "\n";
    out << "word: " << cert.word.canonical() << "\n";
    switch (cert.recipe.kind) {
        case BuildRecipe::Kind::BruteForce:
            out << "recipe: brute-force\n";
            break;
        case BuildRecipe::Kind::TableEntry:
            out << "recipe: table-entry u=" << cert.recipe.u << "\n";
            break;
        case BuildRecipe::Kind::Composite:
            out << "recipe: composite v=" << cert.recipe.v << " s=" << cert.recipe.s << "\n";
            break;
    }
    out << "level: " << (cert.level ? "true" : "false") << "\n";
    out << "circular_square_free: " << (cert.circular_square_free ? "true" : "false") << "\n";
}

int cmd_build(std::ostream& out, const Common& c, std::size_t n) {
    const BuildCertificate cert = build(n, tables_for(c));
    print_certificate(out, cert, c.json);
    return kOk;
}

int cmd_verify(std::ostream& out, const Common& c, const std::string& word) {
    require_ternary(word);
    CircularWord cw(word);
    const bool level = is_level(word);
    const auto witness = find_circular_square(cw);
    const bool csf = !witness.has_value();
    if (c.json) {
        nlohmann::json j{{"word", word},
                         {"canonical", cw.canonical()},
                         {"level", level},
                         {"circular_square_free", csf}};
        if (witness) {
            j["square"] = {{"start", witness->start}, {"period", witness->period}};
        }
        out << j.dump() << "\n";
    } else {
        out << "level: " << (level ? "true" : "false") << "\n";
        out << "circular_square_free: " << (csf ? "true" : "false") << "\n";
        if (witness) {
            out << "square: start " << witness->start << ", period " << witness->period
                << "\n";
        }
    }
    return level && csf ? kOk : kVerifyFail;
}

int cmd_shur(std::ostream& out, const Common& c, const std::string& u) {
    const ShurReport rep = check_shur(u);
    if (c.json) {
        out << to_json(rep).dump() << "\n";
    } else {
        out << "closed_walk: " << (rep.closed_walk ? "true" : "false") << "\n";
        if (rep.forbidden_factor) {
            out << "forbidden_factor: " << rep.forbidden_factor->factor << " at "
                << rep.forbidden_factor->position << "\n";
        }
        if (rep.wxyw) {
            out << "wxyw: W=" << rep.wxyw->w << " x=" << rep.wxyw->x << " y=" << rep.wxyw->y
                << " at " << rep.wxyw->position << "\n";
        }
        out << "pass: " << (rep.pass() ? "true" : "false") << "\n";
    }
    return rep.pass() ? kOk : kVerifyFail;
}

int cmd_count(std::ostream& out, const Common& c, std::size_t n) {
    const std::size_t count = count_circular_square_free(n);
    if (c.json) {
        out << nlohmann::json{{"n", n}, {"count", count}}.dump() << "\n";
    } else {
        out << count << "\n";
    }
    return kOk;
}

int cmd_search_short(std::ostream& out, const Common& c, std::size_t n) {
    const auto u = search_short(n, opts_for(c));
    if (!u) {
        if (c.json) {
            out << nlohmann::json{{"n", n}, {"found", false}}.dump() << "\n";
        } else {
            out << "no level circular square-free word of length " << n << "\n";
        }
        return kNoSuchLength;
    }
    const CircularWord word = decode_entry(*u);
    if (c.json) {
        out << nlohmann::json{{"n", n}, {"found", true}, {"u", *u}, {"word", word.canonical()}}
                   .dump()
            << "\n";
    } else {
        out << "u: " << *u << "\n";
        out << "word: " << word.canonical() << "\n";
    }
    return kOk;
}

int cmd_search_link(std::ostream& out, const Common& c, std::size_t n) {
    const auto lw = search_link(n, opts_for(c));
    if (!lw) {
        if (c.json) {
            out << nlohmann::json{{"target", n}, {"found", false}}.dump() << "\n";
        } else {
            out << "no linking word of expansion length " << n << "\n";
        }
        return kNoSuchLength;
    }
    if (c.json) {
        nlohmann::json j{{"target", n}, {"found", true}, {"s", lw->s}};
        j["report"] = to_json(check_link_conditions(lw->s));
        out << j.dump() << "\n";
    } else {
        out << "s: " << lw->s << "\n";
        out << "psi: " << truncate2(delta(expand_f(lw->s))) << "\n";
    }
    return kOk;
}

int cmd_table1(std::ostream& out, const Common& c) {
    const auto rows = block_decode_table();
    bool ok = synchronization_check();
    for (const Block& b : rows) {
        ok = ok && b.decode.size() == 20 && b.decode.compare(18, 2, "ab") == 0;
        const std::string body = truncate2(b.decode);
        for (char letter : {'a', 'b', 'c'}) {
            ok = ok && std::count(body.begin(), body.end(), letter) == 6;
        }
    }
    if (c.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const Block& b : rows) {
            j.push_back({{"source", std::string(1, b.source)},
                         {"image", b.image},
                         {"decode", b.decode}});
        }
        out << nlohmann::json{{"rows", j}, {"pass", ok}}.dump() << "\n";
    } else {
        for (const Block& b : rows) {
            out << b.source << "\t" << b.image << "\t" << b.decode << "\n";
        }
        out << "pass: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? kOk : kVerifyFail;
}

int cmd_table2(std::ostream& out, const Common& c, bool research) {
    const Tables tables = tables_for(c);
    const Table2Report rep = verify_table2(tables.table2);
    bool ok = rep.pass();
    nlohmann::json found = nlohmann::json::array();
    if (research) {
        for (std::size_t target = 54; target <= 107 && ok; ++target) {
            const auto lw = search_link(target, opts_for(c));
            if (!lw || !check_link_conditions(lw->s).pass()) {
                ok = false;
                break;
            }
            if (c.json) {
                found.push_back({{"target", target}, {"s", lw->s}});
            } else {
                out << target << "\t" << lw->s << "\n";
            }
        }
    }
    if (c.json) {
        nlohmann::json j{{"rows", rep.rows}, {"failures", rep.failures}, {"pass", ok}};
        if (research) j["research"] = found;
        out << j.dump() << "\n";
    } else {
        for (const std::string& f : rep.failures) out << "fail: " << f << "\n";
        out << "rows: " << rep.rows << "\n";
        out << "pass: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? kOk : kVerifyFail;
}

int cmd_table3(std::ostream& out, const Common& c, bool research) {
    const Tables tables = tables_for(c);
    std::vector<std::string> failures;
    for (const auto& [n, u] : tables.table3) {
        const CircularWord word = decode_entry(u);
        if (word.size() != n || !is_level(word.canonical()) ||
            !is_circular_square_free(word)) {
            failures.push_back(u + " does not decode to a valid word of length " +
                               std::to_string(n));
        }
    }
    for (std::size_t n = 4; n <= 90; ++n) {
        if (!is_impossible_length(n) && !tables.table3.count(n)) {
            failures.push_back("no row for length " + std::to_string(n));
        }
    }
    bool ok = failures.empty();
    if (research && ok) {
        for (std::size_t n = 4; n <= 90 && ok; ++n) {
            if (is_impossible_length(n)) continue;
            const auto u = search_short(n, opts_for(c));
            if (!u) {
                ok = false;
                break;
            }
            if (!c.json) out << n << "\t" << *u << "\n";
        }
    }
    if (c.json) {
        out << nlohmann::json{{"rows", tables.table3.size()}, {"failures", failures}, {"pass", ok}}
                   .dump()
            << "\n";
    } else {
        for (const std::string& f : failures) out << "fail: " << f << "\n";
        out << "rows: " << tables.table3.size() << "\n";
        out << "pass: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? kOk : kVerifyFail;
}

int cmd_nonexist(std::ostream& out, const Common& c) {
    bool ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t n : {5u, 7u, 9u, 10u, 14u, 17u}) {
        const bool no_level = !brute_level_square_free(n).has_value();
        const bool no_any = count_circular_square_free(n) == 0;
        ok = ok && no_level && no_any;
        if (c.json) {
            rows.push_back({{"n", n}, {"no_level_word", no_level}, {"no_word_at_all", no_any}});
        } else {
            out << "n=" << n << ": level words none=" << (no_level ? "true" : "false")
                << ", any words none=" << (no_any ? "true" : "false") << "\n";
        }
    }
    if (c.json) {
        out << nlohmann::json{{"lengths", rows}, {"pass", ok}}.dump() << "\n";
    } else {
        out << "pass: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? kOk : kVerifyFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"level ternary circular square-free words", "csf"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Common common;
    app.add_flag("--json", common.json, "machine-readable output");
    app.add_option("--seed", common.seed, "search digit-order seed (0 = fixed order)");
    app.add_option("--workers", common.workers, "parallel search workers")
        ->check(CLI::Range(1u, 64u));
    app.add_option("--data-dir", common.data_dir, "directory with table2.tsv / table3.tsv");

    std::size_t n = 0;
    std::string word, bits, sword;
    bool truncate = false, research = false;

    auto* build_cmd = app.add_subcommand("build", "construct a verified word of length N");
    build_cmd->add_option("N", n, "length")->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "check a ternary word, or an S-word with --shur");
    auto* word_opt = verify_cmd->add_option("WORD", word, "ternary word");
    auto* shur_opt = verify_cmd->add_option("--shur", sword, "S-word for the walk conditions");
    word_opt->excludes(shur_opt);

    auto* encode_cmd = app.add_subcommand("encode", "circular Pansiot code of WORD");
    encode_cmd->add_option("WORD", word, "ternary word")->required();

    auto* decode_cmd = app.add_subcommand("decode", "Pansiot decode");
    auto* bits_opt = decode_cmd->add_option("BITS", bits, "binary word");
    auto* s_opt = decode_cmd->add_option("-s,--s", sword, "decode expand_f of this S-word");
    decode_cmd->add_flag("--truncate", truncate, "drop the last two letters");
    bits_opt->excludes(s_opt);

    auto* count_cmd = app.add_subcommand("count", "count circular square-free necklaces");
    count_cmd->add_option("N", n, "length")->required();

    auto* short_cmd = app.add_subcommand("search-short", "search a short encoding, 4 <= N <= 90");
    short_cmd->add_option("N", n, "length")->required();

    auto* link_cmd = app.add_subcommand("search-link", "search a linking word, target = |expand_f(s)|");
    link_cmd->add_option("N", n, "target expansion length")->required();

    bool verify_only = false;  // verification is the default; flag kept for symmetry
    app.add_subcommand("table1", "recompute the block decode table");
    auto* t2_cmd = app.add_subcommand("table2", "verify the linking-word table");
    t2_cmd->add_flag("--verify", verify_only, "verify the stored rows (default)");
    t2_cmd->add_flag("--research", research, "re-search every length 54..107");
    auto* t3_cmd = app.add_subcommand("table3", "verify the short-encoding table");
    t3_cmd->add_flag("--verify", verify_only, "verify the stored rows (default)");
    t3_cmd->add_flag("--research", research, "re-search every admissible length 4..90");
    app.add_subcommand("nonexist", "confirm the six impossible lengths");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (app.got_subcommand("build")) return cmd_build(out, common, n);
        if (app.got_subcommand("verify")) {
            if (!sword.empty()) return cmd_shur(out, common, sword);
            if (word.empty()) throw DomainError("verify needs WORD or --shur");
            return cmd_verify(out, common, word);
        }
        if (app.got_subcommand("encode")) {
            out << circular_code(word) << "\n";
            return kOk;
        }
        if (app.got_subcommand("decode")) {
            std::string decoded;
            if (!sword.empty()) {
                decoded = delta(expand_f(sword));
            } else if (bits_opt->count() > 0) {
                decoded = delta(bits);
            } else {
                throw DomainError("decode needs BITS or --s");
            }
            out << (truncate ? truncate2(decoded) : decoded) << "\n";
            return kOk;
        }
        if (app.got_subcommand("count")) return cmd_count(out, common, n);
        if (app.got_subcommand("search-short")) return cmd_search_short(out, common, n);
        if (app.got_subcommand("search-link")) return cmd_search_link(out, common, n);
        if (app.got_subcommand("table1")) return cmd_table1(out, common);
        if (app.got_subcommand("table2")) return cmd_table2(out, common, research);
        if (app.got_subcommand("table3")) return cmd_table3(out, common, research);
        if (app.got_subcommand("nonexist")) return cmd_nonexist(out, common);
        err << "no subcommand\n";
        return kUsage;
    } catch (const NoSuchLength& e) {
        err << e.what() << " (impossible lengths: 5, 7, 9, 10, 14, 17)\n";
        return kNoSuchLength;
    } catch (const CapacityError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace csf::cli
