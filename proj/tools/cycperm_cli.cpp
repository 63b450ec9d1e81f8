// Command-line front end: exact triangles and polynomials, permutation
// statistics, and the verification suites, with json/csv/plain output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "cycperm/checks.hpp"
#include "cycperm/json_io.hpp"
#include "cycperm/oracle.hpp"
#include "cycperm/perm.hpp"
#include "cycperm/recurrences.hpp"

namespace {

using namespace cycperm;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void print_triangle(const Triangle& t, const std::string& format) {
    if (format == "json") {
        std::cout << json_of(t).dump() << "\n";
        return;
    }
    const char* sep = format == "csv" ? "," : " ";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) std::cout << sep;
            std::cout << row[i].to_string();
        }
        std::cout << "\n";
    }
}

MPoly poly_from_sequence(const PolySequence& seq, int n) {
    if (n < seq.start || n > seq.max_n()) {
        throw std::invalid_argument("n out of range for this family");
    }
    return seq.at(n);
}

MPoly named_polynomial(const std::string& family, int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (family == "P") return poly_from_sequence(pnqxy_sequence(n), n);
    if (family == "V") return poly_from_sequence(vnqxy_sequence(n), n);
    if (family == "Pder") return poly_from_sequence(derangement_p_sequence(n), n);
    if (family == "Vder") return poly_from_sequence(derangement_v_sequence(n), n);
    if (family == "W") return poly_from_sequence(w_sequences(n).first, n);
    if (family == "Wbar") return poly_from_sequence(w_sequences(n).second, n);
    if (family == "S") return poly_from_sequence(stirling_sequences(n).first, n);
    if (family == "T") return poly_from_sequence(stirling_sequences(n).second, n);
    if (family == "runs") return poly_from_sequence(runs_sequence(n), n);
    if (family == "combinedR") return poly_from_sequence(combined_sequences(n).first, n);
    if (family == "combinedI") return poly_from_sequence(combined_sequences(n).second, n);
    throw std::invalid_argument("unknown polynomial family: " + family);
}

int run_verify(const std::string& suite, const SuiteOptions& opts, const std::string& format) {
    std::vector<CheckReport> reports = run_suite(suite, opts);
    bool pass = all_pass(reports);
    if (format == "json") {
        Json checks = Json::array();
        for (const auto& r : reports) checks.push_back(json_of(r));
        std::cout << Json{{"suite", suite}, {"pass", pass}, {"checks", std::move(checks)}}.dump()
                  << "\n";
    } else if (format == "csv") {
        std::cout << "name,range,pass,mismatches,findings\n";
        for (const auto& r : reports) {
            std::cout << r.name << "," << r.range << "," << (r.pass() ? "pass" : "fail") << ","
                      << r.mismatches.size() << "," << r.findings.size() << "\n";
        }
    } else {
        bool single = reports.size() == 1;
        for (const auto& r : reports) {
            std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << " " << r.range << "\n";
            if (single) {
                for (const auto& line : r.details) std::cout << "  " << line << "\n";
            }
            for (const auto& m : r.mismatches) {
                std::cout << "  mismatch at " << m.location << ": expected " << m.expected
                          << ", actual " << m.actual << "\n";
            }
            for (const auto& f : r.findings) {
                std::cout << "  finding at " << f.location << ": " << f.detail << "\n";
            }
        }
        std::cout << (pass ? "PASS" : "FAIL") << " (" << reports.size() << " check"
                  << (reports.size() == 1 ? "" : "s") << ")\n";
    }
    return pass ? kExitPass : kExitCheckFailure;
}

int run_stats(const std::string& word_text, const std::string& cycles_text,
              const std::string& format) {
    if (word_text.empty() == cycles_text.empty()) {
        throw std::invalid_argument("exactly one of --word and --cycles is required");
    }
    CycleForm form;
    Permutation perm;
    if (!word_text.empty()) {
        perm = Permutation::parse(word_text);
        form = cycle_form(perm);
    } else {
        form = parse_cycle_form(cycles_text);
        perm = permutation_of(form);
    }
    CycleStats cs = cycle_stats(form);
    LinearStats ls = linear_stats(perm);
    bool standard = is_standard(form);
    if (format == "json") {
        std::cout << Json{{"word", perm.to_string()}, {"cycles", to_string(form)},
                          {"standard", standard},     {"cpk", cs.cpk},
                          {"cval", cs.cval},          {"cyc", cs.cyc},
                          {"fix", cs.fix},            {"pk", ls.pk},
                          {"val", ls.val},            {"lpk", ls.lpk},
                          {"runs", ls.runs}}
                         .dump()
                  << "\n";
    } else if (format == "csv") {
        std::cout << "cpk,cval,cyc,fix,pk,val,lpk,runs\n"
                  << cs.cpk << "," << cs.cval << "," << cs.cyc << "," << cs.fix << "," << ls.pk
                  << "," << ls.val << "," << ls.lpk << "," << ls.runs << "\n";
    } else {
        std::cout << "word=" << perm.to_string() << "\n"
                  << "cycles=" << to_string(form) << "\n"
                  << "standard=" << (standard ? "true" : "false") << "\n"
                  << "cpk=" << cs.cpk << " cval=" << cs.cval << " cyc=" << cs.cyc
                  << " fix=" << cs.fix << " pk=" << ls.pk << " val=" << ls.val
                  << " lpk=" << ls.lpk << " runs=" << ls.runs << "\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact permutation-statistic polynomials, triangles and identity checks"};
    app.require_subcommand(1);

    std::string format = "plain";

    auto* triangle_cmd = app.add_subcommand("triangle", "Print rows 1..max-n of a triangle");
    std::string tri_family;
    int tri_max_n = 0;
    triangle_cmd->add_option("--family", tri_family,
                             "M, Mbar, D, Dbar, runs, combinedR, combinedI, stirlingS, stirlingT")
        ->required();
    triangle_cmd->add_option("--max-n", tri_max_n, "largest row")->required();
    triangle_cmd->add_option("--format", format, "json, csv or plain");

    auto* poly_cmd = app.add_subcommand("poly", "Print one polynomial in canonical text form");
    std::string poly_family;
    int poly_n = 0;
    poly_cmd->add_option("--family", poly_family,
                         "P, V, Pder, Vder, W, Wbar, S, T, runs, combinedR, combinedI")
        ->required();
    poly_cmd->add_option("--n", poly_n, "index")->required();
    poly_cmd->add_option("--format", format, "json, csv or plain");

    auto* verify_cmd = app.add_subcommand("verify", "Run identity checks");
    std::string suite = "all";
    SuiteOptions opts;
    verify_cmd->add_option("--suite", suite,
                           "all, bell, pell, euler, stirling, degrees, xcoeff, logconcave, "
                           "egf, oracle");
    verify_cmd->add_option("--max-n", opts.max_n, "largest index for recurrence checks");
    verify_cmd->add_option("--oracle-cap", opts.oracle_cap, "largest n enumerated exhaustively");
    verify_cmd->add_option("--egf-order", opts.egf_order, "series truncation order");
    verify_cmd->add_option("--jobs", opts.jobs, "worker threads for the oracle");
    verify_cmd->add_option("--format", format, "json, csv or plain");

    auto* stats_cmd = app.add_subcommand("stats", "Statistics of one permutation");
    std::string word_text, cycles_text;
    stats_cmd->add_option("--word", word_text, "one-line notation, e.g. 64713258");
    stats_cmd->add_option("--cycles", cycles_text, "written cycle form, e.g. \"(1,6,2,4)(3,7,5)(8)\"");
    stats_cmd->add_option("--format", format, "json, csv or plain");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (format != "json" && format != "csv" && format != "plain") {
            throw std::invalid_argument("unknown format: " + format);
        }
        if (triangle_cmd->parsed()) {
            print_triangle(triangle(triangle_family_from_name(tri_family), tri_max_n), format);
            return kExitPass;
        }
        if (poly_cmd->parsed()) {
            MPoly p = named_polynomial(poly_family, poly_n);
            if (format == "json") {
                std::cout << Json{{"family", poly_family}, {"n", poly_n}, {"poly", p.to_string()}}
                                 .dump()
                          << "\n";
            } else if (format == "csv") {
                std::cout << poly_family << "," << poly_n << "," << p.to_string() << "\n";
            } else {
                std::cout << p.to_string() << "\n";
            }
            return kExitPass;
        }
        if (verify_cmd->parsed()) return run_verify(suite, opts, format);
        if (stats_cmd->parsed()) return run_stats(word_text, cycles_text, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
