// Command-line front end: validate / analyze / ih / stalks / perverse /
// summands / ring / verify. Exit codes: 0 ok, 2 invalid input,
// 3 verification failure, 4 I/O error.

#include "schubert/decomposition.hpp"
#include "schubert/geometry.hpp"
#include "schubert/report.hpp"
#include "schubert/schur.hpp"
#include "schubert/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitIo = 4;

struct InputArgs {
    int i = 0, j = 0, k = 0, l = 0;
    schubert::SchubertInput validated() const { return schubert::validate(i, j, k, l); }
};

void add_input(CLI::App* cmd, InputArgs& args) {
    cmd->add_option("i", args.i, "dimension bound on the intersection")->required();
    cmd->add_option("j", args.j, "dimension of the fixed subspace")->required();
    cmd->add_option("k", args.k, "dimension of the moving subspace")->required();
    cmd->add_option("l", args.l, "dimension of the ambient space")->required();
}

int write_or_print(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kExitIo;
    }
    out << content;
    out.flush();
    if (!out) {
        std::cerr << "error: write to '" << out_path << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decomposition data of special Schubert varieties"};
    app.require_subcommand(1);

    InputArgs in_validate, in_analyze, in_ih, in_stalks, in_perverse, in_summands;

    auto* cmd_validate = app.add_subcommand("validate", "check an input tuple");
    add_input(cmd_validate, in_validate);

    auto* cmd_analyze = app.add_subcommand("analyze", "full report for one input");
    add_input(cmd_analyze, in_analyze);
    std::string format = "text";
    std::string out_path;
    cmd_analyze->add_option("--format", format, "text|json|latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    cmd_analyze->add_option("--out", out_path, "write the report to a file");

    auto* cmd_ih = app.add_subcommand("ih", "intersection cohomology Poincare polynomials");
    add_input(cmd_ih, in_ih);
    int ih_p = 0;
    cmd_ih->add_option("-p", ih_p, "stratum index (default: all)");

    auto* cmd_stalks = app.add_subcommand("stalks", "IC stalk polynomials along open strata");
    add_input(cmd_stalks, in_stalks);
    int stalk_p = 0, stalk_q = 0;
    cmd_stalks->add_option("-p", stalk_p, "stratum index");
    cmd_stalks->add_option("-q", stalk_q, "substratum index");

    auto* cmd_perverse = app.add_subcommand("perverse", "perverse summand table");
    add_input(cmd_perverse, in_perverse);

    auto* cmd_summands = app.add_subcommand("summands", "summand tables per stratum");
    add_input(cmd_summands, in_summands);
    int summand_p = 0;
    cmd_summands->add_option("-p", summand_p, "stratum index (default: all)");

    auto* cmd_ring = app.add_subcommand("ring", "Schur-basis products in a rectangle ring");
    int ring_rows = 0, ring_cols = 0;
    std::string ring_op, ring_a, ring_b;
    cmd_ring->add_option("--rows", ring_rows, "rectangle rows")->required();
    cmd_ring->add_option("--cols", ring_cols, "rectangle cols")->required();
    cmd_ring->add_option("op", ring_op, "operation: mult | pieri-row | pieri-col")->required();
    cmd_ring->add_option("a", ring_a, "partition, e.g. \"2,1\"")->required();
    cmd_ring->add_option("b", ring_b, "second partition (mult) or strip size (pieri)")
        ->required();

    auto* cmd_verify = app.add_subcommand("verify", "run every identity sweep");
    schubert::VerifyOptions verify_opts;
    std::string csv_path;
    cmd_verify->add_option("--max-l", verify_opts.max_l, "sweep bound on l (default 10)");
    cmd_verify->add_option("--jobs", verify_opts.jobs, "worker threads (default 1)");
    cmd_verify->add_option("--csv", csv_path, "write the failure log to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*cmd_validate) {
            schubert::SchubertInput in = in_validate.validated();
            std::cout << "valid: r=" << in.r << " c=" << in.c
                      << " regime=" << schubert::regime_name(in.regime) << "\n";
            return kExitOk;
        }

        if (*cmd_analyze) {
            schubert::AnalyzeData data = schubert::analyze(in_analyze.validated());
            std::string content;
            if (format == "json")
                content = schubert::to_json(data).dump(2) + "\n";
            else if (format == "latex")
                content = schubert::to_latex(data);
            else
                content = schubert::to_text(data);
            return write_or_print(content, out_path);
        }

        if (*cmd_ih) {
            schubert::SchubertInput in = in_ih.validated();
            schubert::IHTable table = schubert::ih_recursion(in);
            if (ih_p) {
                if (ih_p < 1 || ih_p > in.strata())
                    throw std::out_of_range("p outside 1.." + std::to_string(in.strata()));
                std::cout << table.ih(ih_p).str() << "\n";
            } else {
                for (int p = 1; p <= in.strata(); ++p)
                    std::cout << "I_" << p << " = " << table.ih(p).str() << "\n";
            }
            return kExitOk;
        }

        if (*cmd_stalks) {
            schubert::SchubertInput in = in_stalks.validated();
            if (stalk_p && stalk_q) {
                std::cout << schubert::stalk_table(in, stalk_p, stalk_q).str() << "\n";
            } else {
                for (const auto& pi : schubert::pair_invariants(in).pairs) {
                    if ((stalk_p && pi.p != stalk_p) || (stalk_q && pi.q != stalk_q)) continue;
                    std::cout << "(" << pi.p << "," << pi.q
                              << "): " << schubert::stalk_table(in, pi.p, pi.q).str() << "\n";
                }
            }
            return kExitOk;
        }

        if (*cmd_perverse) {
            schubert::SchubertInput in = in_perverse.validated();
            for (const auto& [shift, list] : schubert::perverse_table(in)) {
                std::cout << "i=" << (shift > 0 ? "+" : "") << shift << ": ";
                for (size_t idx = 0; idx < list.size(); ++idx) {
                    if (idx) std::cout << ", ";
                    if (list[idx].ic_top)
                        std::cout << "IC(S)";
                    else
                        std::cout << "IC(Delta_" << list[idx].q << ")";
                    if (list[idx].mult != 1) std::cout << " x " << list[idx].mult;
                }
                std::cout << "\n";
            }
            return kExitOk;
        }

        if (*cmd_summands) {
            schubert::SchubertInput in = in_summands.validated();
            if (summand_p && (summand_p < 1 || summand_p > in.strata()))
                throw std::out_of_range("p outside 1.." + std::to_string(in.strata()));
            for (int p = 1; p <= in.strata(); ++p) {
                if (summand_p && p != summand_p) continue;
                schubert::SummandTable table = schubert::summand_table(in, p);
                std::cout << "p=" << p << ": IC(Delta_" << p << ") at shift 0\n";
                for (const auto& entry : table.entries) {
                    std::cout << "  q=" << entry.q << ":";
                    if (entry.mults.empty()) std::cout << " (none)";
                    for (const auto& [shift, mult] : entry.mults)
                        std::cout << " [i=" << shift << "] x " << mult;
                    std::cout << "\n";
                }
            }
            return kExitOk;
        }

        if (*cmd_ring) {
            schubert::RingSpec spec{ring_rows, ring_cols};
            schubert::Partition lam = schubert::Partition::parse(ring_a);
            if (ring_op == "mult") {
                schubert::SchurVector u = schubert::SchurVector::basis_element(spec, lam);
                schubert::SchurVector v = schubert::SchurVector::basis_element(
                    spec, schubert::Partition::parse(ring_b));
                std::cout << schubert::lr_multiply(u, v).str() << "\n";
            } else if (ring_op == "pieri-row" || ring_op == "pieri-col") {
                int strip = std::stoi(ring_b);
                schubert::SchurVector product =
                    ring_op == "pieri-row" ? schubert::pieri_row(spec, lam, strip)
                                           : schubert::pieri_column(spec, lam, strip);
                std::cout << product.str() << "\n";
            } else {
                std::cerr << "error: unknown ring operation '" << ring_op << "'\n";
                return kExitInvalid;
            }
            return kExitOk;
        }

        if (*cmd_verify) {
            if (verify_opts.max_l < 1) {
                std::cerr << "error: --max-l must be at least 1\n";
                return kExitInvalid;
            }
            schubert::VerifyResult result = schubert::run_verify(verify_opts);
            std::cout << schubert::verify_summary(verify_opts, result);
            if (!csv_path.empty()) {
                int code = write_or_print(schubert::failures_csv(result), csv_path);
                if (code != kExitOk) return code;
            }
            if (!result.ok()) {
                for (const auto& row : result.failures)
                    std::cerr << row.i << "," << row.j << "," << row.k << "," << row.l << ","
                              << row.check << "," << row.status << "," << row.detail << "\n";
                return kExitVerifyFailed;
            }
            return kExitOk;
        }
    } catch (const schubert::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
