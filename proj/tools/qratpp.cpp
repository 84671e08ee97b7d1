#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qratpp/harness.hpp"
#include "qratpp/session.hpp"

namespace {

using namespace qratpp;

constexpr int kExitSimplified = 0;
constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitError = 1;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_stats(std::ostream& os, const FormulaStats& before, const FormulaStats& after,
                 const Counters& counters) {
    auto line = [&](const char* tag, const FormulaStats& s) {
        os << "c " << tag << " clauses=" << s.clauses << " qblocks=" << s.qblocks
           << " exist-lits=" << s.existential_literals
           << " univ-lits=" << s.universal_literals << "\n";
    };
    line("input ", before);
    line("output", after);
    ReductionReport r = reduction_report(before, after);
    os << "c reduction cl=" << r.clauses_pct << "% qb=" << r.qblocks_pct
       << "% el=" << r.existential_pct << "% ul=" << r.universal_pct << "%\n";
    os << "c checks=" << counters.checks_performed
       << " clauses-removed=" << counters.clauses_removed
       << " universal-literals-removed=" << counters.universal_literals_removed
       << " rounds=" << counters.rounds << " timed-out=" << (counters.timed_out ? 1 : 0)
       << "\n";
}

int run_verify(const CorpusSpec& spec, uint64_t rule_checks, uint64_t episodes,
               bool classic) {
    Config config;
    if (classic)
        config.mode = CheckMode::QratClassic;

    TruthReport truth = check_truth_preserving(spec, config);
    for (const TruthViolation& v : truth.violations)
        std::cout << "violation truth instance=" << v.instance << " detail=" << v.detail
                  << "\n";

    DifferentialReport rules = differential_checks(spec, rule_checks);
    for (const std::string& v : rules.violations)
        std::cout << "violation rule " << v << "\n";

    PropagationDiffReport prop = propagation_differential(spec, episodes);
    for (const std::string& v : prop.mismatches)
        std::cout << "violation propagation " << v << "\n";

    uint64_t total_violations =
        truth.violations.size() + rules.violations.size() + prop.mismatches.size();
    std::cout << "summary instances=" << truth.instances
              << " truth-violations=" << truth.violations.size()
              << " rule-checks=" << rules.rule_checks
              << " rule-violations=" << rules.violations.size()
              << " separations=" << rules.strict_separations
              << " episodes=" << prop.episodes
              << " propagation-mismatches=" << prop.mismatches.size() << "\n";
    return total_violations == 0 ? 0 : kExitError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"QBF preprocessor: clause and universal-literal elimination "
                 "with QRAT/QRAT+ redundancy checking over QDIMACS"};
    app.set_help_flag("-h,--help", "print this help message");

    std::string input_path;
    std::string output_path;
    bool no_qbce = false, no_qat = false, no_qrate = false, no_ble = false,
         no_qratu = false;
    bool classic_mode = false;
    bool lax = false;
    bool show_stats = false;
    uint64_t seed = 0;
    bool seed_set = false;
    double soft_limit = 0.0;
    bool soft_limit_set = false;
    uint64_t max_rounds = 0;
    bool max_rounds_set = false;

    app.add_option("input", input_path, "input QDIMACS file ('-' or absent: stdin)");
    app.add_option("--out", output_path, "write the simplified formula to PATH");
    app.add_flag("--no-qbce", no_qbce, "disable blocked clause elimination");
    app.add_flag("--no-qat", no_qat, "disable asymmetric-tautology clause elimination");
    app.add_flag("--no-qrate", no_qrate, "disable QRAT+ clause elimination");
    app.add_flag("--no-ble", no_ble, "disable blocked literal elimination");
    app.add_flag("--no-qratu", no_qratu, "disable QRAT+ universal-literal elimination");
    app.add_flag("--qrat", classic_mode,
                 "use classic QRAT checks (full abstraction, plain unit propagation)");
    app.add_flag("--lax", lax, "grow the variable bound instead of rejecting overflows");
    app.add_flag("--stats", show_stats, "print statistics and reduction report to stderr");
    app.add_option("--seed", seed, "shuffle clause orders with this seed")
        ->check(CLI::NonNegativeNumber)
        ->trigger_on_parse()
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--soft-time-limit", soft_limit,
                   "stop after SECS seconds and print the current formula")
        ->each([&](const std::string&) { soft_limit_set = true; });
    app.add_option("--max-rounds", max_rounds, "limit the number of outer rounds")
        ->each([&](const std::string&) { max_rounds_set = true; });

    // Verification harness: random-corpus soundness and differential checks.
    CLI::App* verify = app.add_subcommand(
        "verify", "run the built-in brute-force and differential verification");
    CorpusSpec spec;
    uint64_t verify_rule_checks = 100000;
    uint64_t verify_episodes = 100000;
    bool verify_classic = false;
    verify->add_option("--instances", spec.count, "corpus size");
    verify->add_option("--max-vars", spec.max_vars, "variables per instance (<= 12)");
    verify->add_option("--max-blocks", spec.max_blocks, "quantifier blocks per instance");
    verify->add_option("--max-clauses", spec.max_clauses, "clauses per instance");
    verify->add_option("--max-clause-len", spec.max_clause_len, "literals per clause");
    verify->add_option("--corpus-seed", spec.seed, "corpus generator seed");
    verify->add_option("--rule-checks", verify_rule_checks,
                       "number of sampled redundancy checks");
    verify->add_option("--episodes", verify_episodes,
                       "number of sampled propagation episodes");
    verify->add_flag("--qrat", verify_classic, "verify with classic QRAT checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << "c error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (verify->parsed())
            return run_verify(spec, verify_rule_checks, verify_episodes, verify_classic);

        Session session;
        if (no_qbce)
            session.configure("qbce", "off");
        if (no_qat)
            session.configure("qat", "off");
        if (no_qrate)
            session.configure("qrate", "off");
        if (no_ble)
            session.configure("ble", "off");
        if (no_qratu)
            session.configure("qratu", "off");
        if (classic_mode)
            session.configure("mode", "qrat");
        if (lax)
            session.configure("strict", "off");
        if (seed_set)
            session.config().seed = seed;
        if (soft_limit_set)
            session.config().soft_time_limit_seconds = soft_limit;
        if (max_rounds_set)
            session.config().max_outer_rounds = max_rounds;

        SessionStatus status = session.import_qdimacs(read_input(input_path));
        if (!status.ok) {
            std::cerr << "c error: " << status.message << "\n";
            return kExitError;
        }
        for (const std::string& d : session.diagnostics())
            std::cerr << "c note: " << d << "\n";

        FormulaStats before = session.stats();
        PreprocessOutcome outcome = session.preprocess();

        std::string exported = session.export_qdimacs();
        if (outcome.status == SolveStatus::SolvedUnsat)
            exported.insert(0, "c solved: UNSAT\n");

        if (output_path.empty()) {
            std::cout << exported;
        } else {
            std::ofstream out(output_path, std::ios::binary);
            if (!out)
                throw std::runtime_error("cannot open '" + output_path + "'");
            out << exported;
        }

        if (show_stats)
            print_stats(std::cerr, before, session.stats(), outcome.counters);

        switch (outcome.status) {
        case SolveStatus::SolvedSat:
            return kExitSat;
        case SolveStatus::SolvedUnsat:
            return kExitUnsat;
        case SolveStatus::Simplified:
            return kExitSimplified;
        }
        return kExitSimplified;
    } catch (const std::exception& e) {
        std::cerr << "c error: " << e.what() << "\n";
        return kExitError;
    }
}
