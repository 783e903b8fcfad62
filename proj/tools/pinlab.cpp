#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinlab/admissibility.hpp"
#include "pinlab/conjecture.hpp"
#include "pinlab/enumeration.hpp"
#include "pinlab/oeis.hpp"
#include "pinlab/oracle.hpp"
#include "pinlab/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pinlab;

enum class Format { Plain, Csv, JsonLines, Markdown };

Format parse_format(const std::string& text) {
    if (text == "plain") return Format::Plain;
    if (text == "csv") return Format::Csv;
    if (text == "json-lines") return Format::JsonLines;
    if (text == "markdown") return Format::Markdown;
    throw CLI::ValidationError("--format", "unknown format '" + text + "'");
}

// Two-column integer table (the paper-table subcommand and counts).
void print_table(Format format, const std::string& col,
                 const std::vector<std::pair<int, BigCount>>& rows) {
    switch (format) {
    case Format::Plain:
        for (const auto& [n, v] : rows)
            std::cout << n << '\t' << v.str() << '\n';
        break;
    case Format::Csv:
        std::cout << "n," << col << '\n';
        for (const auto& [n, v] : rows)
            std::cout << n << ',' << v.str() << '\n';
        break;
    case Format::Markdown:
        std::cout << "| n | " << col << " |\n|---|---|\n";
        for (const auto& [n, v] : rows)
            std::cout << "| " << n << " | " << v.str() << " |\n";
        break;
    case Format::JsonLines:
        for (const auto& [n, v] : rows) {
            ordered_json j;
            j["n"] = n;
            j[col] = v.str();
            std::cout << j.dump() << '\n';
        }
        break;
    }
}

void print_report(Format format, const VerificationReport& report) {
    switch (format) {
    case Format::Csv:
        std::cout << report.render_csv();
        break;
    case Format::JsonLines:
        for (const auto& row : report.rows) {
            ordered_json j;
            j["label"] = row.label;
            j["lhs"] = row.lhs;
            j["rhs"] = row.rhs;
            j["ok"] = row.ok;
            std::cout << j.dump() << '\n';
        }
        break;
    default:
        std::cout << report.render_text();
        break;
    }
}

struct Options {
    Format format = Format::Plain;
    int threads = 0;

    // per-subcommand inputs
    std::string perm_text;
    std::string set_text;
    std::string class_text = "B";
    std::string family_text = "all";
    int n = 0;
    int which = 1;
    int max_n = 15;
    int oracle_cap = 9;
    long long limit = 0;
    std::string oeis_id;
    std::string oeis_file;
    bool oeis_fetch = false;
    std::string fixtures_dir = "data/oeis";
};

int cmd_pin(const Options& opt) {
    const auto w = SignedPermutation::parse(opt.perm_text);
    const SignedSet pins = pinnacle_set(w);
    if (opt.format == Format::JsonLines) {
        ordered_json j;
        j["permutation"] = w.entries();
        j["pinnacles"] = pins.values();
        j["peaks"] = peak_indices(w);
        j["vales"] = vale_set(w).values();
        j["valleys"] = valley_indices(w);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << pins.to_string() << '\n';
    }
    return 0;
}

int cmd_admissible(const Options& opt) {
    const auto s = SignedSet::parse(opt.set_text);
    const AmbientSpec ambient{opt.n, parse_group_kind(opt.class_text)};
    const bool answer = is_admissible(s, ambient);
    if (opt.format == Format::JsonLines) {
        ordered_json j;
        j["set"] = s.values();
        j["n"] = ambient.n;
        j["class"] = to_string(ambient.kind);
        j["admissible"] = answer;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << (answer ? "true" : "false") << '\n';
    }
    return 0; // a false answer is still a successful query
}

int cmd_witness(const Options& opt) {
    const auto s = SignedSet::parse(opt.set_text);
    const AmbientSpec ambient{opt.n, parse_group_kind(opt.class_text)};
    const auto w = canonical_witness(s, ambient);
    if (opt.format == Format::JsonLines) {
        ordered_json j;
        j["set"] = s.values();
        j["n"] = ambient.n;
        j["class"] = to_string(ambient.kind);
        j["witness"] = w.entries();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << w.to_string() << '\n';
    }
    return 0;
}

int cmd_count(const Options& opt) {
    const std::string& f = opt.family_text;
    BigCount value;
    if (f == "B" || f == "b")
        value = count_B(opt.n);
    else if (f == "D" || f == "d")
        value = count_D(opt.n);
    else if (f == "A" || f == "a")
        value = count_A(opt.n);
    else if (f == "B-D" || f == "b-d")
        value = count_B_minus_D(opt.n);
    else if (f == "plus")
        value = count_plus(opt.n);
    else if (f == "plus-A" || f == "plus-a")
        value = count_plus_minus_A(opt.n);
    else
        throw CLI::ValidationError(
            "--family", "expected one of B, D, A, B-D, plus, plus-A");
    if (opt.format == Format::JsonLines) {
        ordered_json j;
        j["n"] = opt.n;
        j["family"] = f;
        j["count"] = value.str();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << value.str() << '\n';
    }
    return 0;
}

int cmd_enumerate(const Options& opt) {
    const AmbientSpec ambient{opt.n, parse_group_kind(opt.class_text)};
    const Family family = parse_family(opt.family_text);
    AdmissibleStream stream(ambient, family);
    long long emitted = 0;
    while (auto s = stream.next()) {
        if (opt.limit > 0 && emitted >= opt.limit)
            break;
        ++emitted;
        if (opt.format == Format::JsonLines) {
            ordered_json j;
            j["set"] = s->values();
            std::cout << j.dump() << '\n';
        } else if (opt.format == Format::Csv) {
            std::cout << '"' << s->to_string() << "\"\n";
        } else if (opt.format == Format::Markdown) {
            std::cout << "| " << s->to_string() << " |\n";
        } else {
            std::cout << s->to_string() << '\n';
        }
    }
    return 0;
}

int cmd_tables(const Options& opt) {
    std::vector<std::pair<int, BigCount>> rows;
    std::string col;
    for (int n = 3; n <= opt.max_n; ++n) {
        switch (opt.which) {
        case 1: col = "aps_B"; rows.emplace_back(n, count_B(n)); break;
        case 2: col = "aps_D"; rows.emplace_back(n, count_D(n)); break;
        case 3: col = "aps_plus_minus_A"; rows.emplace_back(n, count_plus_minus_A(n)); break;
        default:
            throw CLI::ValidationError("--which", "expected 1, 2 or 3");
        }
    }
    print_table(opt.format, col, rows);
    return 0;
}

int cmd_verify(const Options& opt) {
    OracleConfig config;
    config.threads = opt.threads;
    config.max_n_signed = opt.oracle_cap;
    config.max_n_unsigned = std::max(config.max_n_unsigned, opt.oracle_cap);
    const VerificationReport report = run_triple_agreement(opt.max_n, config);
    print_report(opt.format, report);
    return report.all_ok() ? 0 : 1;
}

int cmd_conjecture(const Options& opt) {
    const VerificationReport report = check_conjecture(opt.max_n);
    print_report(opt.format, report);
    return report.all_ok() ? 0 : 1;
}

int cmd_oeis_compare(const Options& opt) {
    const oeis::SequenceMapping* mapping = oeis::find_mapping(opt.oeis_id);
    if (!mapping)
        throw std::invalid_argument(
            "no registered mapping for '" + opt.oeis_id +
            "' (known ids: A359066 A359067 A240721 A178792 A294175 A068551 "
            "A008549 A119258)");

    oeis::BFileSequence seq;
    std::string provenance;
    if (!opt.oeis_file.empty()) {
        std::ifstream in(opt.oeis_file);
        if (!in)
            throw std::runtime_error("cannot open " + opt.oeis_file);
        std::stringstream buf;
        buf << in.rdbuf();
        seq = oeis::parse_bfile(buf.str(), opt.oeis_id);
        provenance = "file:" + opt.oeis_file;
    } else if (opt.oeis_fetch) {
        seq = oeis::fetch(opt.oeis_id, {true, ""}, &provenance);
    } else {
        const auto cache_path = std::filesystem::path(oeis::default_cache_dir()) /
                                (opt.oeis_id + ".txt");
        const auto fixture_path =
            std::filesystem::path(opt.fixtures_dir) / (opt.oeis_id + ".txt");
        std::filesystem::path source;
        if (std::filesystem::exists(cache_path)) {
            source = cache_path;
            provenance = "cache:" + cache_path.string();
        } else if (std::filesystem::exists(fixture_path)) {
            source = fixture_path;
            provenance = "fixture:" + fixture_path.string();
        } else {
            throw std::runtime_error("offline, no fixture for " + opt.oeis_id +
                                     " (looked at " + cache_path.string() +
                                     " and " + fixture_path.string() +
                                     "; pass --file or --fetch)");
        }
        std::ifstream in(source);
        std::stringstream buf;
        buf << in.rdbuf();
        seq = oeis::parse_bfile(buf.str(), opt.oeis_id);
    }

    const oeis::ComparisonReport report = oeis::compare(seq, *mapping, provenance);
    if (opt.format == Format::JsonLines) {
        ordered_json j;
        j["id"] = report.id;
        j["mapping"] = report.mapping_description;
        j["provenance"] = report.provenance;
        j["compared"] = report.compared;
        j["skipped"] = report.skipped;
        j["all_match"] = report.all_match;
        if (!report.all_match) {
            j["first_mismatch_index"] = report.first_mismatch_index;
            j["file_value"] = report.mismatch_file_value;
            j["computed_value"] = report.mismatch_computed_value;
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << report.render_text();
    }
    return report.all_match ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pinnacle sets of signed permutations: admissibility, "
                 "witnesses, counting, enumeration, verification"};
    app.require_subcommand(1);

    Options opt;
    std::string format_text = "plain";
    app.add_option("--format", format_text,
                   "output format: plain, csv, json-lines, markdown")
        ->capture_default_str();
    app.add_option("--threads", opt.threads,
                   "cap on oracle worker threads (0 = hardware)");

    auto* pin = app.add_subcommand("pin", "pinnacle set of a signed permutation");
    pin->fallthrough();
    pin->add_option("permutation", opt.perm_text,
                    "one-line notation, e.g. \"-7 -4 -6 1 -5 2 -3\"")
        ->required();

    auto* adm = app.add_subcommand("admissible",
                                   "decide admissibility of a pinnacle set");
    adm->fallthrough();
    adm->add_option("--n", opt.n, "rank of the ambient group")->required();
    adm->add_option("--class", opt.class_text, "A, B or D")->required();
    adm->add_option("--set", opt.set_text, "e.g. \"{-4,1,2}\"")->required();

    auto* wit = app.add_subcommand("witness",
                                   "canonical witness of an admissible set");
    wit->fallthrough();
    wit->add_option("--n", opt.n, "rank of the ambient group")->required();
    wit->add_option("--class", opt.class_text, "A, B or D")->required();
    wit->add_option("--set", opt.set_text, "e.g. \"{-4,1,2}\"")->required();

    auto* cnt = app.add_subcommand("count", "closed-form family sizes");
    cnt->fallthrough();
    cnt->add_option("--n", opt.n, "rank")->required();
    cnt->add_option("--family", opt.family_text, "B, D, A, B-D, plus, plus-A")
        ->required();

    auto* enu = app.add_subcommand("enumerate",
                                   "stream every admissible pinnacle set");
    enu->fallthrough();
    enu->add_option("--n", opt.n, "rank")->required();
    enu->add_option("--class", opt.class_text, "A, B or D");
    enu->add_option("--family", opt.family_text,
                    "all, b-not-d, plus, plus-not-a");
    enu->add_option("--limit", opt.limit, "stop after this many sets");

    auto* tab = app.add_subcommand("tables", "reproduce the summary tables");
    tab->fallthrough();
    tab->add_option("--which", opt.which, "1 = type B, 2 = type D, 3 = plus\\A")
        ->required();
    tab->add_option("--max-n", opt.max_n, "largest rank (default 15)");

    auto* ver = app.add_subcommand(
        "verify", "exhaustive oracle vs decider vs generator cross-check");
    ver->fallthrough();
    ver->add_option("--max-n", opt.max_n, "largest rank to sweep")->required();
    ver->add_option("--oracle-cap", opt.oracle_cap,
                    "signed-group size cap (default 9)");

    auto* con = app.add_subcommand("conjecture",
                                   "compare |APS^B_n| with the triangle term");
    con->fallthrough();
    con->add_option("--max-n", opt.max_n, "largest rank (default 40)")
        ->default_val(40);

    auto* oeis_cmd = app.add_subcommand("oeis", "published-sequence checks");
    oeis_cmd->fallthrough();
    oeis_cmd->require_subcommand(1);
    auto* cmp = oeis_cmd->add_subcommand(
        "compare", "compare a computed sequence against b-file data");
    cmp->fallthrough();
    cmp->add_option("--id", opt.oeis_id, "OEIS id, e.g. A359066")->required();
    cmp->add_option("--file", opt.oeis_file, "explicit b-file path");
    cmp->add_flag("--fetch", opt.oeis_fetch, "allow a network fetch (cached)");
    cmp->add_option("--fixtures", opt.fixtures_dir,
                    "bundled fixture directory (default data/oeis)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\nRun with --help for usage.\n";
        return 2;
    }

    try {
        opt.format = parse_format(format_text);
        if (pin->parsed()) return cmd_pin(opt);
        if (adm->parsed()) return cmd_admissible(opt);
        if (wit->parsed()) return cmd_witness(opt);
        if (cnt->parsed()) return cmd_count(opt);
        if (enu->parsed()) return cmd_enumerate(opt);
        if (tab->parsed()) return cmd_tables(opt);
        if (ver->parsed()) return cmd_verify(opt);
        if (con->parsed()) return cmd_conjecture(opt);
        if (oeis_cmd->parsed()) return cmd_oeis_compare(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
