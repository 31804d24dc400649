#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cbf/constructions.hpp"
#include "cbf/enumeration.hpp"
#include "cbf/errors.hpp"
#include "cbf/tables.hpp"
#include "cbf/text_format.hpp"
#include "cbf/verify.hpp"

namespace cbf::cli {

namespace {

struct CliConfig {
    int q = 2;
    std::vector<int> i_class{0};
    int n = 0;
    int k = 0;
    std::optional<int> m;
    std::string construction = "s";
    std::string method = "closed";
    std::string format;
    std::string checks = "cross";
    std::optional<std::uint64_t> guard_flag;
    std::optional<std::string> out_path;
    std::string in_path;
    unsigned threads = 1;
};

Bipartition make_bipartition(const CliConfig& cfg) {
    std::vector<Symbol> symbols;
    for (int s : cfg.i_class) {
        if (s < 0 || s >= cfg.q) throw InvalidInput("--I symbol " + std::to_string(s) + " is outside Z_" + std::to_string(cfg.q));
        symbols.push_back(static_cast<Symbol>(s));
    }
    return Bipartition(cfg.q, symbols);
}

ScanOptions scan_options(const CliConfig& cfg) {
    return ScanOptions{resolve_guard(cfg.guard_flag, std::getenv("CBF_GUARD")), std::max(1U, cfg.threads)};
}

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const CliConfig& cfg, std::ostream& out, const std::string& data) {
    if (!cfg.out_path) {
        out << data;
        return;
    }
    std::ofstream file(*cfg.out_path);
    if (!file) throw InvalidInput("cannot write '" + *cfg.out_path + "'");
    file << data;
}

std::string describe(const OverlapWitness& w, int q) {
    const bool x_first = w.direction == OverlapDirection::PrefixOfXIsSuffixOfV;
    const Word& prefix_owner = x_first ? w.x : w.v;
    const Word& suffix_owner = x_first ? w.v : w.x;
    return format_word(w.bifix(), q) + " (length " + std::to_string(w.length) + ": prefix of " +
           format_word(prefix_owner, q) + " = suffix of " + format_word(suffix_owner, q) + ")";
}

int cmd_gen(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto kind = parse_construction(cfg.construction);
    const auto options = scan_options(cfg);
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    if (format != "text" && format != "json") throw InvalidInput("gen supports --format text|json");

    std::optional<Code> code;
    switch (kind) {
    case ConstructionKind::S: code = build_S(make_bipartition(cfg), cfg.n, cfg.k, options); break;
    case ConstructionKind::SClassic: code = build_S_classic(cfg.q, cfg.n, cfg.k, options); break;
    case ConstructionKind::V:
        check_guard(cfg.q, static_cast<std::size_t>(cfg.m.value_or(cfg.n)), options);
        code = build_V(ExpansionParams(cfg.n, cfg.k), make_bipartition(cfg), cfg.m.value_or(cfg.n));
        break;
    case ConstructionKind::U:
        check_guard(cfg.q, static_cast<std::size_t>(cfg.m.value_or(cfg.n)), options);
        code = build_U(ExpansionParams(cfg.n, cfg.k), make_bipartition(cfg), cfg.m.value_or(cfg.n));
        break;
    case ConstructionKind::Expanded: code = build_expanded(make_bipartition(cfg), cfg.n, cfg.k, options); break;
    }

    const bool verified = !code->empty() && code->n() >= 2 && is_cross_bifix_free(*code).cross_bifix_free;
    emit(cfg, out, format == "json" ? code_to_json(*code, verified, std::nullopt) + "\n" : format_code_file(*code));
    err << "construction " << to_string(kind) << ": " << code->size() << " words, cross-bifix-free: "
        << (verified ? "yes" : "no") << '\n';
    return kSuccess;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    const Code code = parse_code_file(read_input(cfg.in_path), cfg.q);
    if (code.n() < 2) throw ParseError("verification needs words of length >= 2");
    const auto options = scan_options(cfg);

    bool want_bifix = false;
    bool want_cross = false;
    bool want_nonexp = false;
    std::istringstream list(cfg.checks);
    for (std::string item; std::getline(list, item, ',');) {
        if (item == "bifix") want_bifix = true;
        else if (item == "cross") want_cross = true;
        else if (item == "nonexpandable") want_nonexp = true;
        else throw InvalidInput("unknown check '" + item + "' (bifix, cross, nonexpandable)");
    }
    if (want_nonexp) check_guard(code.q(), code.n(), options);

    bool all_pass = true;
    const int q = code.q();
    if (want_bifix) {
        const Word* offender = nullptr;
        for (const Word& w : code) {
            if (!is_bifix_free(w)) {
                offender = &w;
                break;
            }
        }
        if (offender) {
            all_pass = false;
            const auto len = shortest_bifix(offender->view());
            out << "bifix: fail word " << format_word(*offender, q) << " bifix "
                << format_word(Word(offender->prefix(len)), q) << '\n';
        } else {
            out << "bifix: pass\n";
        }
    }
    const auto cross = is_cross_bifix_free(code);
    if (want_cross) {
        if (cross) {
            out << "cross: pass\n";
        } else {
            all_pass = false;
            out << "cross: fail witness " << describe(*cross.witness, q) << '\n';
        }
    }
    if (want_nonexp) {
        if (!cross) {
            all_pass = false;
            out << "nonexpandable: fail (code is not cross-bifix-free)\n";
        } else {
            const auto verdict = is_non_expandable(code, options);
            if (verdict.non_expandable) {
                out << "nonexpandable: pass (" << verdict.candidates_examined << " words examined)\n";
            } else {
                all_pass = false;
                out << "nonexpandable: fail witness " << format_word(*verdict.witness, q) << '\n';
            }
        }
    }
    return all_pass ? kSuccess : kCheckFailed;
}

CountMethod parse_method(const std::string& name) {
    if (name == "closed") return CountMethod::Closed;
    if (name == "enumerate") return CountMethod::Enumerate;
    if (name == "both") return CountMethod::Both;
    throw InvalidInput("unknown method '" + name + "' (closed, enumerate, both)");
}

int cmd_count(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    if (format != "text" && format != "json") throw InvalidInput("count supports --format text|json");
    const Bipartition bip = make_bipartition(cfg);
    const auto method = parse_method(cfg.method);
    const CountReport report = count_U(bip, cfg.n, cfg.k, method, scan_options(cfg));
    const Count s_size = size_S_closed(bip, cfg.n, cfg.k);
    const std::optional<Count> u_size = report.closed_form ? report.closed_form : report.enumerated;

    std::ostringstream body;
    if (format == "json") {
        auto count_json = [](const std::optional<Count>& c) {
            if (!c) return nlohmann::ordered_json(nullptr);
            if (*c <= Count(std::numeric_limits<std::int64_t>::max())) return nlohmann::ordered_json(c->convert_to<std::int64_t>());
            return nlohmann::ordered_json(c->str());
        };
        nlohmann::ordered_json doc;
        doc["n"] = report.n;
        doc["k"] = report.k;
        doc["q"] = report.q;
        doc["sizeI"] = report.size_i;
        doc["sizeJ"] = report.size_j;
        doc["closed_form"] = count_json(report.closed_form);
        doc["enumerated"] = count_json(report.enumerated);
        doc["branch"] = std::string(to_string(report.branch));
        doc["agree"] = report.agree ? nlohmann::ordered_json(*report.agree) : nlohmann::ordered_json(nullptr);
        doc["size_S"] = count_json(s_size);
        doc["size_expanded"] = count_json(u_size ? std::optional<Count>(s_size + *u_size) : std::nullopt);
        body << doc.dump(2) << '\n';
    } else {
        body << "n=" << report.n << " k=" << report.k << " q=" << report.q << " |I|=" << report.size_i
             << " |J|=" << report.size_j << '\n';
        body << "branch: " << to_string(report.branch) << '\n';
        if (report.closed_form) body << "closed: " << *report.closed_form << '\n';
        if (report.enumerated) body << "enumerated: " << *report.enumerated << '\n';
        if (report.agree) body << "agree: " << (*report.agree ? "yes" : "no") << '\n';
        body << "|S|: " << s_size << '\n';
        if (u_size) body << "|S u U|: " << s_size + *u_size << '\n';
    }
    emit(cfg, out, body.str());
    if (report.agree && !*report.agree) return kCheckFailed;
    return kSuccess;
}

int cmd_table(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::string format = cfg.format.empty() ? "markdown" : cfg.format;
    const auto tables = reproduce_tables(cfg.q, scan_options(cfg));
    std::string body;
    if (format == "markdown") body = render_markdown(tables);
    else if (format == "csv") body = render_csv(tables);
    else if (format == "json") body = render_json(tables);
    else throw InvalidInput("table supports --format markdown|csv|json");
    emit(cfg, out, body);
    const bool ok = tables.consistent();
    for (const auto* cells : {&tables.s_sizes, &tables.expanded_sizes}) {
        for (const auto& c : *cells) {
            if (!c.erratum.empty()) err << "cell (" << c.n << "," << c.k << ") erratum: " << c.erratum << '\n';
        }
    }
    if (!ok) err << "table cells disagree with the printed values\n";
    return ok ? kSuccess : kCheckFailed;
}

int cmd_saturate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const Code code = parse_code_file(read_input(cfg.in_path), cfg.q);
    if (code.n() < 2) throw ParseError("saturation needs words of length >= 2");
    const auto options = scan_options(cfg);
    check_guard(code.q(), code.n(), options);
    if (auto cross = is_cross_bifix_free(code); !cross) {
        err << "input is not cross-bifix-free: " << describe(*cross.witness, code.q()) << '\n';
        return kCheckFailed;
    }
    const Code saturated = greedy_saturate(code, options);
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    if (format == "json") emit(cfg, out, code_to_json(saturated, true, true) + "\n");
    else if (format == "text") emit(cfg, out, format_code_file(saturated));
    else throw InvalidInput("saturate supports --format text|json");
    err << "added " << saturated.size() - code.size() << " words\n";
    return kSuccess;
}

} // namespace

std::uint64_t resolve_guard(std::optional<std::uint64_t> flag, const char* env_value) {
    if (flag) return *flag;
    if (env_value && *env_value) {
        std::uint64_t value = 0;
        const std::string_view text(env_value);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            throw InvalidInput("CBF_GUARD must be a non-negative integer, got '" + std::string(text) + "'");
        }
        return value;
    }
    return kDefaultGuard;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Construct, verify, expand and count cross-bifix-free codes over Z_q", "cbf"};
    app.require_subcommand(1);

    auto add_alphabet = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "alphabet size")->check(CLI::Range(2, kMaxAlphabet));
        sub->add_option("--I", cfg.i_class, "symbols of class I (comma-separated)")->delimiter(',');
    };
    auto add_nk = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "word length")->required();
        sub->add_option("--k", cfg.k, "leading I-run length of S")->required();
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--guard", cfg.guard_flag, "maximum q^n for exhaustive operations");
        sub->add_option("--threads", cfg.threads, "worker threads for scans");
        sub->add_option("--format", cfg.format, "output format");
        sub->add_option("--out", cfg.out_path, "write data here instead of stdout");
    };

    auto* gen = app.add_subcommand("gen", "generate a construction");
    add_alphabet(gen);
    add_nk(gen);
    add_common(gen);
    gen->add_option("--construction", cfg.construction, "s, s-classic, v, u or expanded");
    gen->add_option("--m", cfg.m, "length of the V/U member to build (default n)");

    auto* verify = app.add_subcommand("verify", "check a code file");
    verify->add_option("input", cfg.in_path, "code file ('-' for stdin)")->required();
    verify->add_option("--q", cfg.q, "alphabet size when the file has no header")->check(CLI::Range(2, kMaxAlphabet));
    verify->add_option("--checks", cfg.checks, "comma list of bifix, cross, nonexpandable");
    add_common(verify);

    auto* count = app.add_subcommand("count", "closed-form and enumerated |U|");
    add_alphabet(count);
    add_nk(count);
    add_common(count);
    count->add_option("--method", cfg.method, "closed, enumerate or both");

    auto* table = app.add_subcommand("table", "reproduce the cardinality tables");
    table->add_option("--q", cfg.q, "alphabet size")->check(CLI::Range(2, kMaxAlphabet));
    add_common(table);

    auto* saturate = app.add_subcommand("saturate", "greedily extend a code until non-expandable");
    saturate->add_option("input", cfg.in_path, "code file ('-' for stdin)")->required();
    saturate->add_option("--q", cfg.q, "alphabet size when the file has no header")->check(CLI::Range(2, kMaxAlphabet));
    add_common(saturate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (*gen) return cmd_gen(cfg, out, err);
        if (*verify) return cmd_verify(cfg, out, err);
        if (*count) return cmd_count(cfg, out, err);
        if (*table) return cmd_table(cfg, out, err);
        if (*saturate) return cmd_saturate(cfg, out, err);
    } catch (const ResourceLimit& e) {
        err << "refused: " << e.what() << '\n';
        return kGuardRefused;
    } catch (const NotApplicable& e) {
        err << "not-applicable: " << e.what() << '\n';
        return kNotApplicable;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace cbf::cli
