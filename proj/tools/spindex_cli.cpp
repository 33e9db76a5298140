// Command-line front end: exact verification suites, descent-condition
// checks, and equivariant localization of fixed-point data files.
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spindex/fixed_point_io.hpp"
#include "spindex/verify.hpp"

namespace {

void apply_dimension_cap_from_env() {
    if (const char* cap = std::getenv("SPINDEX_MAX_DIM")) {
        try {
            spindex::config::set_max_dimension(std::stoi(cap));
        } catch (const std::exception& e) {
            throw CLI::ValidationError("SPINDEX_MAX_DIM", e.what());
        }
    }
}

void print_report(const spindex::Report& rep) {
    for (const auto& c : rep.checks) {
        std::cout << "[" << spindex::status_str(c.status) << "] " << c.name << " (" << c.anchor << ")";
        if (!c.witness.empty()) std::cout << " -- " << c.witness;
        std::cout << "\n";
    }
    std::cout << rep.count(spindex::CheckStatus::Pass) << " passed, "
              << rep.count(spindex::CheckStatus::Fail) << " failed, "
              << rep.count(spindex::CheckStatus::Skip) << " skipped\n";
}

int write_report_file(const spindex::Report& rep, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write report file '" << path << "'\n";
        return 2;
    }
    out << rep.serialize();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spin-representation, descent and localization checks"};
    app.require_subcommand(1);

    // verify
    std::string suite = "all";
    spindex::VerifyOptions vopt;
    std::string report_path;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "one of: clifford, spin, volume-table, kernels, torus-weights, "
                                       "structure-actions, twist-tables, lemma, all")
        ->check(CLI::IsMember(spindex::suite_names()));
    verify->add_option("--seed", vopt.seed, "random seed for the property suites")->capture_default_str();
    verify->add_option("--samples", vopt.samples, "sample count for the property suites")
        ->capture_default_str();
    verify->add_option("--report", report_path, "write a machine-readable JSON report to this path");
    int vr = 0, vm = 0, vm2 = 0;
    auto* opt_r = verify->add_option("--r", vr, "restrict descriptor sweeps to this rank");
    auto* opt_m = verify->add_option("--m", vm, "restrict descriptor sweeps to this multiplicity");
    auto* opt_m2 = verify->add_option("--m2", vm2, "restrict to this second multiplicity");

    // check-twist
    int ct_r = 0;
    int ct_m = 1, ct_m2 = -1;
    int ct_u = 0, ct_u2 = 0, ct_s = 0, ct_t = 0;
    bool ct_symmetric = false;
    std::string ct_mode = "both";
    auto* check = app.add_subcommand("check-twist", "descent condition for a twisted spin representation");
    check->add_option("--r", ct_r, "rank of the even-Clifford structure")->required();
    check->add_option("--m", ct_m, "multiplicity (first multiplicity for two-factor ranks)")
        ->capture_default_str();
    check->add_option("--m2", ct_m2, "second multiplicity (ranks divisible by 4)");
    check->add_option("--u", ct_u, "power on the first standard factor")->capture_default_str();
    check->add_option("--u2", ct_u2, "power on the second/conjugate factor")->capture_default_str();
    check->add_option("--s", ct_s, "spinor power (Delta or Delta+)")->capture_default_str();
    check->add_option("--t", ct_t, "Delta- power (even ranks)")->capture_default_str();
    check->add_flag("--symmetric", ct_symmetric, "use symmetric instead of exterior powers");
    check->add_option("--mode", ct_mode, "closed | oracle | both")
        ->check(CLI::IsMember({"closed", "oracle", "both"}))
        ->capture_default_str();

    // localize
    std::string input_path, output_path;
    auto* localize = app.add_subcommand("localize", "evaluate fixed-point data from a file");
    localize->add_option("input", input_path, "fixed-point data file (JSON)")->required();
    localize->add_option("--output", output_path, "write a machine-readable JSON report to this path");

    try {
        app.parse(argc, argv);
        apply_dimension_cap_from_env();
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            if (*opt_r) vopt.r = vr;
            if (*opt_m) vopt.m = vm;
            if (*opt_m2) vopt.m2 = vm2;
            auto rep = spindex::run_suite(suite, vopt);
            print_report(rep);
            if (!report_path.empty()) {
                int rc = write_report_file(rep, report_path);
                if (rc != 0) return rc;
            }
            return rep.all_pass() ? 0 : 1;
        }

        if (*check) {
            spindex::RepDescriptor desc = ct_m2 >= 0 ? spindex::RepDescriptor::two(ct_r, ct_m, ct_m2)
                                                     : (ct_r % 4 == 0)
                                                           ? spindex::RepDescriptor::two(ct_r, ct_m, ct_m)
                                                           : spindex::RepDescriptor::single(ct_r, ct_m);
            auto kind = ct_symmetric ? spindex::FactorKind::Symmetric : spindex::FactorKind::Exterior;
            spindex::PowerProfile prof =
                desc.two_factor() || desc.group_kind() == spindex::GroupKind::U
                    ? spindex::PowerProfile::pair(desc, kind, ct_u, ct_u2, ct_s, ct_t)
                    : spindex::PowerProfile::single(kind, ct_u, ct_s);
            std::cout << desc.str() << ", twist " << prof.str() << "\n";
            bool fail = false;
            std::optional<bool> closed, oracle;
            if (ct_mode != "oracle") {
                closed = spindex::closed_form_condition(desc, prof);
                std::cout << "closed form: " << (*closed ? "admissible" : "not admissible") << "\n";
            }
            if (ct_mode != "closed") {
                oracle = spindex::oracle_condition(desc, prof);
                std::cout << "oracle:      " << (*oracle ? "admissible" : "not admissible") << "\n";
            }
            if (closed && oracle) {
                bool agree = *closed == *oracle;
                std::cout << "agreement:   " << (agree ? "yes" : "NO") << "\n";
                fail = !agree;
            }
            return fail ? 1 : 0;
        }

        // localize
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "error: cannot open '" << input_path << "'\n";
            return 2;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        spindex::LocalizationInput data;
        try {
            data = spindex::parse_fixed_point_document(buffer.str());
        } catch (const spindex::ParseError& e) {
            std::cerr << "error: " << input_path << ": " << e.what() << "\n";
            return 2;
        }
        spindex::LocalizeOutcome outcome;
        try {
            outcome = spindex::localize(data);
        } catch (const spindex::LocalizationDataError& e) {
            std::cerr << "error: " << input_path << ": " << e.what() << "\n";
            return 2;
        }
        for (const auto& line : outcome.lines) std::cout << line << "\n";
        std::cout << "sum: "
                  << (outcome.index.laurent ? outcome.index.laurent->str_z()
                                            : outcome.index.sum.str())
                  << "\n";
        std::cout << "classification: " << spindex::classification_str(outcome.index.classification)
                  << "\n";
        std::cout << outcome.verdict << "\n";
        if (!output_path.empty()) {
            int rc = write_report_file(outcome.report, output_path);
            if (rc != 0) return rc;
        }
        return outcome.report.all_pass() ? 0 : 1;
    } catch (const spindex::UnsupportedCase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const spindex::GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
