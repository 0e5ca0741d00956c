#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "intdecomp/decompose.hpp"
#include "intdecomp/graph.hpp"
#include "intdecomp/hermite.hpp"
#include "intdecomp/io.hpp"
#include "intdecomp/matrix.hpp"

#include "selftest.hpp"

using namespace intdecomp;

namespace {

// Exit code contract: 0 success (decomposable), 1 indecomposable,
// 2 parse error, 3 I/O error, 4 invalid input (zero column, non-symmetric,
// all rows zero), 5 rank deficient, 6 failed check or selftest.
constexpr int kOk = 0;
constexpr int kIndecomposable = 1;
constexpr int kParseError = 2;
constexpr int kIoError = 3;
constexpr int kInvalidInput = 4;
constexpr int kRankDeficient = 5;
constexpr int kCheckFailed = 6;

bool structured_format(const std::string &format) {
    return format == "structured";
}

std::optional<IntMatrix> load_input(const std::string &path, bool strip_rows,
                                    int &exit_code) {
    try {
        IntMatrix m = load_matrix_document(path).matrix;
        if (strip_rows)
            m = remove_zero_rows(m);
        return m;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what();
        if (e.line() > 0)
            std::cerr << " (line " << e.line() << ", column " << e.column()
                      << ")";
        std::cerr << "\n";
        exit_code = kParseError;
    } catch (const IoError &e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        exit_code = kIoError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        exit_code = kInvalidInput;
    }
    return std::nullopt;
}

std::string join_indices(const std::vector<std::size_t> &v, bool one_based) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(v[i] + (one_based ? 1 : 0));
    }
    return out;
}

int run_hnf(const std::string &path, const std::string &format,
            bool strip_rows) {
    int code = kOk;
    auto matrix = load_input(path, strip_rows, code);
    if (!matrix)
        return code;

    HnfResult r = hermite_normal_form(*matrix);
    if (structured_format(format)) {
        std::cout << hnf_to_json(r).dump(2) << "\n";
        return kOk;
    }
    std::cout << "rank: " << r.rank << "\n"
              << "pivot columns: " << join_indices(r.pivot_cols, true) << "\n"
              << "H:\n"
              << format_matrix(r.h) << "P:\n"
              << format_matrix(r.p) << "P_inverse:\n"
              << format_matrix(r.p_inverse);
    return kOk;
}

int run_decompose(const std::string &path, const std::string &format,
                  bool strip_rows, bool check) {
    int code = kOk;
    auto matrix = load_input(path, strip_rows, code);
    if (!matrix)
        return code;
    const IntMatrix &a = *matrix;

    Decomposition d{IntMatrix(1, 1), IntMatrix(1, 1), Permutation::identity(1),
                    {}, {}, {}, false, std::nullopt};
    HnfResult hr{IntMatrix(1, 1), IntMatrix(1, 1), IntMatrix(1, 1), {}, 0};
    try {
        d = hnf_decomposition(a);
        hr = hermite_normal_form(a);
    } catch (const ZeroColumnError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const RankDeficientError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRankDeficient;
    } catch (const ConnectivityMismatchError &e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kCheckFailed;
    }

    const ConnectivityCrossCheck &cc = *d.connectivity;

    nlohmann::json checks{{"connectivity_methods_agree", cc.agreed},
                          {"laplacian_rank_law", cc.rank_law_holds}};
    std::vector<std::string> failures;
    if (check) {
        VerificationReport report = verify_decomposition(a, d);
        checks["verified"] = report.ok;
        if (!report.ok)
            for (const std::string &reason : report.reasons)
                failures.push_back("verification: " + reason);

        if (hr.h.rows() <= 12 && hr.h.cols() <= 12) {
            bool agrees =
                decomposable_brute_force(hr.h).has_value() == d.decomposable;
            checks["enumeration_oracle_agrees"] = agrees;
            if (!agrees)
                failures.push_back("enumeration oracle disagrees");
        } else {
            checks["enumeration_oracle_agrees"] = nullptr;
        }
        if (hr.h.cols() <= 20) {
            bool agrees =
                reducibility_witness_brute_force(gram(hr.h)).has_value() ==
                d.decomposable;
            checks["reducibility_witness_agrees"] = agrees;
            if (!agrees)
                failures.push_back("reducibility witness disagrees");
        } else {
            checks["reducibility_witness_agrees"] = nullptr;
        }
    }

    if (structured_format(format)) {
        std::cout << decomposition_to_json(d, hr.rank, hr.pivot_cols, checks)
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "decomposable: " << (d.decomposable ? "yes" : "no")
                  << "\n"
                  << "rank: " << hr.rank << "\n"
                  << "pivot columns: " << join_indices(hr.pivot_cols, true)
                  << "\n"
                  << "Q (one-based): " << join_indices(d.q.one_based(), false)
                  << "\n"
                  << "column partition: "
                  << format_partition(d.column_partition) << "\n";
        std::cout << "row partition: "
                  << format_partition(ComponentPartition{d.row_partition})
                  << "\n";
        for (std::size_t k = 0; k < d.blocks.size(); ++k)
            std::cout << "block " << k + 1 << " (" << d.blocks[k].rows() << "x"
                      << d.blocks[k].cols() << "):\n"
                      << format_matrix(d.blocks[k]);
        std::cout << "P:\n"
                  << format_matrix(d.p) << "P_inverse:\n"
                  << format_matrix(d.p_inverse);
        if (!cc.rank_law_holds)
            std::cout << "note: Laplacian rank " << cc.laplacian_rank
                      << " differs from n - t = "
                      << a.cols() - cc.zero_pattern.count()
                      << "; zero-pattern components used\n";
        if (check)
            std::cout << "checks: "
                      << (failures.empty() ? "all passed" : "FAILED") << "\n";
    }

    if (!failures.empty()) {
        for (const std::string &f : failures)
            std::cerr << "check failed: " << f << "\n";
        return kCheckFailed;
    }
    return d.decomposable ? kOk : kIndecomposable;
}

int run_components(const std::string &path, const std::string &format,
                   const std::string &method) {
    int code = kOk;
    auto matrix = load_input(path, false, code);
    if (!matrix)
        return code;

    std::optional<WeightedGraph> g;
    try {
        g.emplace(*matrix);
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    IntMatrix l = laplacian(*g);

    if (method == "rref") {
        RatMatrix r = rref(RatMatrix(l));
        try {
            ComponentPartition p = components_via_rref(*g);
            if (structured_format(format)) {
                std::cout << nlohmann::json{{"method", method},
                                            {"laplacian", matrix_to_json(l)},
                                            {"rref", matrix_to_json(r)},
                                            {"components", partition_to_json(p)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "L:\n"
                          << format_matrix(l) << "rref(L):\n"
                          << format_matrix(r)
                          << "components: " << format_partition(p) << "\n";
            }
            return kOk;
        } catch (const ConnectivityMismatchError &e) {
            std::cerr << "error: " << e.what() << "\n"
                      << "zero-pattern components: "
                      << format_partition(e.zero_pattern_partition()) << "\n";
            return kCheckFailed;
        }
    }

    if (method == "zero-pattern") {
        ComponentPartition p = components_via_zero_pattern(*g);
        if (structured_format(format)) {
            std::cout << nlohmann::json{{"method", method},
                                        {"laplacian", matrix_to_json(l)},
                                        {"components", partition_to_json(p)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "L:\n"
                      << format_matrix(l)
                      << "components: " << format_partition(p) << "\n";
        }
        return kOk;
    }

    // both
    RatMatrix r = rref(RatMatrix(l));
    ConnectivityCrossCheck cc = cross_check_components(*g);
    if (structured_format(format)) {
        nlohmann::json doc{{"method", method},
                           {"laplacian", matrix_to_json(l)},
                           {"rref", matrix_to_json(r)},
                           {"components", partition_to_json(cc.zero_pattern)},
                           {"methods_agree", cc.agreed},
                           {"laplacian_rank_law", cc.rank_law_holds}};
        doc["rref_components"] =
            cc.via_rref ? partition_to_json(*cc.via_rref)
                        : nlohmann::json();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "L:\n"
                  << format_matrix(l) << "rref(L):\n"
                  << format_matrix(r)
                  << "components: " << format_partition(cc.zero_pattern)
                  << "\n";
        if (cc.agreed) {
            std::cout << "methods agree\n";
        } else {
            if (cc.via_rref)
                std::cout << "rref components: "
                          << format_partition(*cc.via_rref) << "\n";
            else
                std::cout << "rref components: not a partition\n";
            std::cout << "note: Laplacian rank " << cc.laplacian_rank
                      << " differs from n - t = "
                      << g->order() - cc.zero_pattern.count()
                      << "; zero-pattern components are authoritative\n";
        }
    }
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"integer matrix decomposition into direct sums via Hermite "
                 "normal forms"};
    app.require_subcommand(1);

    std::string hnf_input = "-", hnf_format = "text";
    bool hnf_strip = false;
    CLI::App *hnf_cmd =
        app.add_subcommand("hnf", "Hermite normal form with its witness");
    hnf_cmd->add_option("input", hnf_input,
                        "matrix file, or - for standard input");
    hnf_cmd->add_option("--format", hnf_format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    hnf_cmd->add_flag("--strip-zero-rows", hnf_strip,
                      "drop all-zero rows before computing");

    std::string dec_input = "-", dec_format = "text";
    bool dec_strip = false, dec_check = false;
    CLI::App *dec_cmd = app.add_subcommand(
        "decompose", "split a matrix into a direct sum if possible");
    dec_cmd->add_option("input", dec_input,
                        "matrix file, or - for standard input");
    dec_cmd->add_option("--format", dec_format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    dec_cmd->add_flag("--strip-zero-rows", dec_strip,
                      "drop all-zero rows before validation");
    dec_cmd->add_flag("--check", dec_check,
                      "verify the result and run the brute-force oracles");

    std::string comp_input = "-", comp_format = "text", comp_method = "both";
    CLI::App *comp_cmd = app.add_subcommand(
        "components", "connected components of a symmetric weight matrix");
    comp_cmd->add_option("input", comp_input,
                         "matrix file, or - for standard input");
    comp_cmd->add_option("--format", comp_format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    comp_cmd->add_option("--method", comp_method, "connectivity method")
        ->check(CLI::IsMember({"rref", "zero-pattern", "both"}));

    unsigned long seed = 0;
    CLI::App *self_cmd = app.add_subcommand(
        "selftest", "run the built-in reference vectors");
    self_cmd->add_option("--seed", seed, "seed for the randomized slice");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (app.got_subcommand(hnf_cmd))
            return run_hnf(hnf_input, hnf_format, hnf_strip);
        if (app.got_subcommand(dec_cmd))
            return run_decompose(dec_input, dec_format, dec_strip, dec_check);
        if (app.got_subcommand(comp_cmd))
            return run_components(comp_input, comp_format, comp_method);
        if (app.got_subcommand(self_cmd))
            return selftest::run(seed, std::cout) == 0 ? kOk : kCheckFailed;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kOk;
}
