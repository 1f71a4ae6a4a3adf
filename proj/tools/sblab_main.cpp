#include "sblab/betting.hpp"
#include "sblab/experiments.hpp"
#include "sblab/reports.hpp"
#include "sblab/simulate.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <string>

namespace {

struct CliConfig {
    std::string p_heads = "1/2";
    int tails_days = 2;
    std::uint64_t n_trials = 1'000'000;
    std::uint64_t seed = sblab::kDefaultSeed;
    std::string format = "table";
    std::string cost;
    std::string payoff;
    bool paper = false;
};

void add_spec_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--p-heads", cfg.p_heads, "coin bias as a rational, e.g. 1/2")
        ->capture_default_str();
    cmd->add_option("--tails-days", cfg.tails_days, "awakenings on Tails")
        ->capture_default_str();
    cmd->add_option("--format", cfg.format, "table|json|csv")->capture_default_str();
    cmd->add_flag("--paper", cfg.paper, "pin all parameters to the classic setup");
}

void add_run_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--n-trials", cfg.n_trials, "number of simulated trials")
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "rng seed")->capture_default_str();
}

sblab::ExperimentSpec spec_from(const CliConfig& cfg) {
    sblab::ExperimentSpec spec;
    if (cfg.paper)
        return spec; // defaults are the classic setup
    spec.p_heads = sblab::Rational::parse(cfg.p_heads);
    spec.tails_days = cfg.tails_days;
    spec.validate();
    return spec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and Monte Carlo laboratory for the Sleeping Beauty problem"};
    app.require_subcommand(1);

    CliConfig cfg;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "exact probabilities of both experiments");
    add_spec_options(analyze_cmd, cfg);

    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Monte Carlo frequency estimators with exact targets");
    add_spec_options(simulate_cmd, cfg);
    add_run_options(simulate_cmd, cfg);

    CLI::App* bet_cmd =
        app.add_subcommand("bet", "closed-form and simulated betting expectations");
    add_spec_options(bet_cmd, cfg);
    add_run_options(bet_cmd, cfg);
    bet_cmd->add_option("--cost", cfg.cost, "stake per offered bet, rational");
    bet_cmd->add_option("--payoff", cfg.payoff, "gross payoff on a win, rational");

    analyze_cmd->callback([&] {
        const auto format = sblab::parse_format(cfg.format);
        std::cout << sblab::render(sblab::analyze(spec_from(cfg), cfg.paper), format);
    });

    simulate_cmd->callback([&] {
        const auto format = sblab::parse_format(cfg.format);
        const auto spec = spec_from(cfg);
        const std::uint64_t n_trials = cfg.paper ? 1'000'000 : cfg.n_trials;
        const std::uint64_t seed = cfg.paper ? sblab::kDefaultSeed : cfg.seed;
        std::cout << sblab::render(sblab::run_simulation(spec, n_trials, seed), format);
    });

    bet_cmd->callback([&] {
        const auto format = sblab::parse_format(cfg.format);
        const auto spec = spec_from(cfg);
        sblab::BetSpec bet;
        if (cfg.paper) {
            bet = {sblab::Rational(10), sblab::Rational(60)};
        } else {
            if (cfg.cost.empty() || cfg.payoff.empty())
                throw sblab::InvalidSpecError("bet: --cost and --payoff are required "
                                              "(or use --paper)");
            bet = {sblab::Rational::parse(cfg.cost), sblab::Rational::parse(cfg.payoff)};
        }
        bet.validate();
        const std::uint64_t n_trials = cfg.paper ? 1'000'000 : cfg.n_trials;
        const std::uint64_t seed = cfg.paper ? sblab::kDefaultSeed : cfg.seed;
        std::cout << sblab::render(sblab::simulate_betting(spec, bet, n_trials, seed), format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
