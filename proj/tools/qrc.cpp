// qrc: exact q-rook / q-hit / chromatic symmetric function calculator.
//
// Subcommands compute q-rook numbers, q-hit numbers (four variants), hit
// polynomials, chromatic symmetric functions and unicellular LLT polynomials
// of abelian Dyck-path graphs, staircase change-of-basis matrices, q-Eulerian
// polynomials, and run the identity verification suites.
//
// Exit codes: 0 success / all identities hold, 1 identity failure,
// 2 usage or domain error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "qrc/checks.hpp"
#include "qrc/csf.hpp"
#include "qrc/jsonio.hpp"
#include "qrc/suites.hpp"

namespace {

using qrc::json;

std::string default_format() {
    const char* env = std::getenv("QRC_FORMAT");
    if (env != nullptr && std::string(env) == "json") return "json";
    return "text";
}

bool is_json(const std::string& fmt) { return fmt == "json"; }

void emit(const json& doc, const std::string& fmt, const std::string& text) {
    if (is_json(fmt))
        std::cout << doc.dump() << "\n";
    else
        std::cout << text;
}

std::string polys_text(const std::vector<std::pair<std::string, qrc::QPoly>>& rows) {
    std::string out;
    for (const auto& [label, p] : rows) out += label + ": " + p.str() + "\n";
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact q-rook / q-hit / chromatic symmetric function calculator"};
    app.require_subcommand(1);
    std::string format = default_format();
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string shape_str;
    int m = 0, n = 0, k = -1, j = -1;

    auto* cmd_qrook = app.add_subcommand("qrook", "q-rook numbers R_k of a shape");
    cmd_qrook->add_option("--shape", shape_str, "partition, e.g. 6,3,3,1 (empty for ∅)");
    cmd_qrook->add_option("--k", k, "rook count (all k when omitted)");

    std::string variant = "basis";
    auto* cmd_qhit = app.add_subcommand("qhit", "q-hit numbers H_j^{m,n} of a shape");
    cmd_qhit->add_option("--shape", shape_str, "partition inside the n×m board");
    cmd_qhit->add_option("--m", m, "columns")->required();
    cmd_qhit->add_option("--n", n, "rows")->required();
    cmd_qhit->add_option("--j", j, "hit count (all j when omitted)");
    cmd_qhit->add_option("--variant", variant, "stat | basis | delcon | gr")
        ->check(CLI::IsMember({"stat", "basis", "delcon", "gr"}));

    auto* cmd_hitpoly = app.add_subcommand("hitpoly", "hit polynomial P(x;λ) as a (t,q) object");
    cmd_hitpoly->add_option("--shape", shape_str, "partition inside the n×m board");
    cmd_hitpoly->add_option("--m", m, "columns")->required();
    cmd_hitpoly->add_option("--n", n, "rows")->required();

    std::string basis = "m";
    auto* cmd_csf = app.add_subcommand("csf", "chromatic symmetric function of G(λ)");
    cmd_csf->add_option("--shape", shape_str, "partition inside the n×m board");
    cmd_csf->add_option("--m", m, "columns")->required();
    cmd_csf->add_option("--n", n, "rows")->required();
    cmd_csf->add_option("--basis", basis, "m | e | s | rect | staircase")
        ->check(CLI::IsMember({"m", "e", "s", "rect", "staircase"}));

    std::string llt_basis = "m";
    auto* cmd_llt = app.add_subcommand("llt", "unicellular LLT polynomial of G(λ)");
    cmd_llt->add_option("--shape", shape_str, "partition inside the n×m board");
    cmd_llt->add_option("--m", m, "columns")->required();
    cmd_llt->add_option("--n", n, "rows")->required();
    cmd_llt->add_option("--basis", llt_basis, "m")->check(CLI::IsMember({"m"}));

    std::string kind = "staircase-hits";
    auto* cmd_matrix = app.add_subcommand("matrix", "staircase change-of-basis matrices");
    cmd_matrix->add_option("--m", m, "columns")->required();
    cmd_matrix->add_option("--n", n, "rows")->required();
    cmd_matrix->add_option("--kind", kind, "staircase-hits | staircase-coeffs")
        ->check(CLI::IsMember({"staircase-hits", "staircase-coeffs"}));

    auto* cmd_eulerian = app.add_subcommand("eulerian", "(maj,des) q-Eulerian polynomials");
    cmd_eulerian->add_option("--n", n, "symmetric group degree")->required();

    std::string suite = "all";
    int max_m = 3, jobs = 0;
    auto* cmd_verify = app.add_subcommand("verify", "run an identity verification suite");
    cmd_verify->add_option("--suite", suite, "suite name (see --help-suites)")->required();
    cmd_verify->add_option("--max-m", max_m,
                           "board bound: m for board suites, m+n for graph suites");
    cmd_verify->add_option("--jobs", jobs, "worker threads (default: hardware parallelism)");
    bool full_reports = false;
    cmd_verify->add_flag("--full", full_reports, "include passing reports in JSON output");

    auto* cmd_suites = app.add_subcommand("suites", "list verification suite names");

    CLI11_PARSE(app, argc, argv);

    const qrc::Partition shape = qrc::Partition::parse(shape_str);

    if (cmd_qrook->parsed()) {
        if (k >= 0) {
            if (k > shape.length()) {
                std::cerr << "qrook: k exceeds the number of rows of the shape\n";
                return 2;
            }
            emit(qrc::to_json(qrc::qrook(shape, k)), format,
                 polys_text({{"R_" + std::to_string(k), qrc::qrook(shape, k)}}));
        } else {
            json all = json::object();
            std::vector<std::pair<std::string, qrc::QPoly>> rows;
            for (int i = 0; i <= shape.length(); ++i) {
                all[std::to_string(i)] = qrc::to_json(qrc::qrook(shape, i));
                rows.emplace_back("R_" + std::to_string(i), qrc::qrook(shape, i));
            }
            emit(all, format, polys_text(rows));
        }
        return 0;
    }

    if (cmd_qhit->parsed()) {
        const qrc::Board board(m, n, shape);
        const qrc::HitVariant v = qrc::hit_variant_from_name(variant);
        if (j >= 0) {
            if (j > n) {
                std::cerr << "qhit: j exceeds n\n";
                return 2;
            }
            const qrc::QPoly h = qrc::qhit(board, j, v);
            emit(qrc::to_json(h), format, polys_text({{"H_" + std::to_string(j), h}}));
        } else {
            json values = json::object();
            std::vector<std::pair<std::string, qrc::QPoly>> rows;
            for (int i = 0; i <= n; ++i) {
                const qrc::QPoly h = qrc::qhit(board, i, v);
                values[std::to_string(i)] = qrc::to_json(h);
                rows.emplace_back("H_" + std::to_string(i), h);
            }
            emit(json{{"variant", variant}, {"values", values}}, format, polys_text(rows));
        }
        return 0;
    }

    if (cmd_hitpoly->parsed()) {
        const qrc::BiPoly p = qrc::hit_polynomial(qrc::Board(m, n, shape));
        emit(qrc::to_json(p), format, p.str() + "\n");
        return 0;
    }

    if (cmd_csf->parsed() || cmd_llt->parsed()) {
        const bool proper = cmd_csf->parsed();
        const std::string chosen = proper ? basis : llt_basis;
        if (shape.length() > n || shape.first_part() > m) {
            std::cerr << "shape does not fit inside the n×m board\n";
            return 2;
        }
        if (chosen == "m") {
            const qrc::SymPoly f = proper ? qrc::csf_abelian(shape, m, n)
                                          : qrc::llt(qrc::graph_abelian(shape, m, n));
            emit(qrc::to_json(f), format, f.str() + "\n");
            return 0;
        }
        const qrc::SymPoly f = qrc::csf_abelian(shape, m, n);
        if (chosen == "e" || chosen == "s") {
            const std::vector<qrc::QRat> coeffs = chosen == "e"
                                                      ? qrc::to_elementary_two_column(f)
                                                      : qrc::to_schur_two_column(f);
            json list = json::array();
            std::string text;
            for (size_t i = 0; i < coeffs.size(); ++i) {
                list.push_back(qrc::to_json(coeffs[i]));
                text += "c_" + std::to_string(i) + ": " + coeffs[i].str() + "\n";
            }
            emit(list, format, text);
            return 0;
        }
        if (chosen == "rect") {
            const qrc::Board board(m, n, shape);
            const qrc::QPoly den = qrc::q_falling(m, n);
            json list = json::array();
            std::string text;
            for (int i = 0; i <= n; ++i) {
                const qrc::QRat c(qrc::qhit_basis(board, i), den);
                list.push_back(qrc::to_json(c));
                text += "X[" + std::to_string(m) + "^" + std::to_string(i) + "]: " + c.str() + "\n";
            }
            emit(list, format, text);
            return 0;
        }
        // staircase
        const std::vector<qrc::QRat> a = qrc::staircase_coeffs(shape, m, n);
        json list = json::array();
        std::string text;
        for (size_t i = 0; i < a.size(); ++i) {
            list.push_back(qrc::to_json(a[i]));
            text += "a_" + std::to_string(i) + ": " + a[i].str() + "\n";
        }
        emit(list, format, text);
        return 0;
    }

    if (cmd_matrix->parsed()) {
        const auto [hits, coeffs] = qrc::staircase_matrices(m, n);
        if (kind == "staircase-hits") {
            std::string text = "denominator: " + hits.denominator.str() + "\n";
            for (const auto& row : hits.entries) {
                for (size_t c = 0; c < row.size(); ++c)
                    text += (c ? " | " : "") + row[c].str();
                text += "\n";
            }
            emit(qrc::to_json(hits), format, text);
        } else {
            std::string text;
            for (const auto& row : coeffs) {
                for (size_t c = 0; c < row.size(); ++c) text += (c ? " | " : "") + row[c].str();
                text += "\n";
            }
            emit(qrc::to_json(coeffs), format, text);
        }
        return 0;
    }

    if (cmd_eulerian->parsed()) {
        json values = json::object();
        std::string text;
        for (int d = 0; d < std::max(n, 1); ++d) {
            const qrc::QPoly p = qrc::q_eulerian(n, d);
            values[std::to_string(d)] = qrc::to_json(p);
            text += "A[des=" + std::to_string(d) + "]: " + p.str() + "\n";
        }
        emit(values, format, text);
        return 0;
    }

    if (cmd_suites->parsed()) {
        json list = json::array();
        std::string text;
        for (const std::string& name : qrc::suite_names()) {
            list.push_back(name);
            text += name + "\n";
        }
        emit(list, format, text);
        return 0;
    }

    if (cmd_verify->parsed()) {
        const qrc::SuiteResult result = qrc::run_suite(suite, max_m, jobs);
        json failures = json::array();
        for (const auto& r : result.reports)
            if (!r.holds) failures.push_back(qrc::to_json(r));
        json doc{{"suite", result.suite},
                 {"max_m", result.max_m},
                 {"identities_passed", result.identities_passed},
                 {"identities_failed", result.identities_failed},
                 {"conjectures_confirmed", result.conjectures_confirmed},
                 {"conjectures_refuted", result.conjectures_refuted},
                 {"failures", failures}};
        if (full_reports) {
            json all = json::array();
            for (const auto& r : result.reports) all.push_back(qrc::to_json(r));
            doc["reports"] = all;
        }
        std::string text = "suite " + result.suite + " (bound " + std::to_string(result.max_m) +
                           "): " + std::to_string(result.identities_passed) + " passed, " +
                           std::to_string(result.identities_failed) + " failed";
        if (result.conjectures_confirmed + result.conjectures_refuted > 0)
            text += "; conjectures: " + std::to_string(result.conjectures_confirmed) +
                    " CONFIRMED, " + std::to_string(result.conjectures_refuted) + " REFUTED";
        text += "\n";
        for (const auto& r : result.reports)
            if (!r.holds)
                text += "FAIL " + r.key() + ": " + r.witness + "\n";
        emit(doc, format, text);
        return result.ok() ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
