// ekr: command-line front end.
//
// Exit status: 0 success, 1 usage or operational error, 2 a checked property did not hold.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ekr/ekr.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitHarness = 2;

/// Writes to stdout for "-" (or empty), otherwise to the named file.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw ekr::Error("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

ekr::SetFamily load(const std::string& path) {
    if (path == "-") return ekr::read_family(std::cin);
    return ekr::read_family(path);
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json trace_json(const ekr::LocalSearchResult& r) {
    json moves = json::array();
    for (const auto& mv : r.trace)
        moves.push_back({{"out", mv.out.elements()}, {"in", mv.in.elements()}, {"value", ekr::to_string(mv.value)}});
    return moves;
}

struct GenArgs {
    std::string order = "lex";
    int n = 0, k = 0;
    std::uint64_t m = 0;
    std::optional<std::uint64_t> seed;
    std::string out = "-";
};

struct CountArgs {
    std::string in;
    std::string csv = "-";
    std::optional<std::size_t> t_max;
    std::size_t cap = 64;
    std::string method = "ie";
};

struct ProbArgs {
    std::string in;
    std::string p;
    std::size_t cap = 64;
    std::uint64_t samples = 0;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
};

struct SearchArgs {
    int n = 0, k = 0;
    std::size_t m = 0;
    std::string objective;
    bool no_prune = false;
    bool timing = false;
    std::uint64_t budget = 50'000'000;
    std::size_t max_reported = 1000;
    unsigned threads = 1;
    std::string out = "-";
};

struct ShiftArgs {
    std::string in;
    int n = 0, k = 0;
    std::size_t m = 0;
    std::size_t starts = 0;
    std::optional<std::uint64_t> seed;
    std::string objective;
    std::size_t max_steps = 1000;
    bool compare_lex = false;
    std::string out;
};

struct VerifyArgs {
    int n = 0, k = 2;
    std::size_t t_max = 3;
    std::optional<std::size_t> m;
    bool no_prune = false;
    std::uint64_t budget = 50'000'000;
    unsigned threads = 1;
    std::string csv = "-";
};

struct ClassifyArgs {
    std::string in;
    int ell = 1;
    std::string epsilon = "1/10";
};

struct CounterArgs {
    int n = 0;
    std::optional<std::size_t> m_prime;
    int n_max = 0;
};

int run_gen(const GenArgs& a) {
    ekr::SetFamily f;
    if (a.order == "lex") f = ekr::lex_segment(a.n, a.k, a.m);
    else if (a.order == "colex") f = ekr::colex_segment(a.n, a.k, a.m);
    else if (a.order == "random") {
        if (!a.seed) throw ekr::InvalidArgument("--order random requires --seed");
        f = ekr::random_family(a.n, a.k, a.m, *a.seed);
    } else throw ekr::InvalidArgument("unknown order '" + a.order + "'");
    Output out(a.out);
    ekr::write_family(out.stream(), f);
    return kExitOk;
}

int run_count(const CountArgs& a) {
    const auto f = load(a.in);
    const auto p = a.t_max ? ekr::bounded_profile(f, *a.t_max) : ekr::inter_profile(f, {a.cap});
    Output out(a.csv);
    ekr::write_profile_csv(out.stream(), p);
    return kExitOk;
}

int run_split(const CountArgs& a) {
    const auto f = load(a.in);
    ekr::TrivialMethod method;
    if (a.method == "ie") method = ekr::TrivialMethod::inclusion_exclusion;
    else if (a.method == "direct") method = ekr::TrivialMethod::direct;
    else throw ekr::InvalidArgument("unknown split method '" + a.method + "' (ie or direct)");
    const auto s = a.t_max ? ekr::bounded_split(f, *a.t_max, method) : ekr::profile_split(f, {a.cap}, method);
    Output out(a.csv);
    ekr::write_split_csv(out.stream(), s);
    return kExitOk;
}

int run_prob(const ProbArgs& a) {
    const auto f = load(a.in);
    const ekr::ExactRatio p = ekr::parse_ratio(a.p);
    ekr::require_probability(p);
    if (a.samples > 0 && !a.seed) throw ekr::InvalidArgument("--samples requires --seed");
    const auto profile = ekr::inter_profile(f, {a.cap});
    const auto exact = ekr::prob_from_profile(profile, p);
    const long double approx = ekr::prob_from_profile_float(profile, ekr::to_long_double(p));
    std::optional<ekr::McEstimate> mc;
    if (a.samples > 0) mc = ekr::mc_estimate(f, static_cast<double>(p), a.samples, *a.seed, a.threads);
    print_json(std::cout, ekr::prob_json(p, exact, approx, mc ? &*mc : nullptr));
    return kExitOk;
}

int run_mc(const ProbArgs& a) {
    const auto f = load(a.in);
    const ekr::ExactRatio p = ekr::parse_ratio(a.p);
    ekr::require_probability(p);
    const auto est = ekr::mc_estimate(f, static_cast<double>(p), a.samples, *a.seed, a.threads);
    json j = ekr::mc_json(est);
    j["p"] = ekr::to_string(p);
    print_json(std::cout, j);
    return kExitOk;
}

int run_search(const SearchArgs& a) {
    ekr::SearchOptions opts;
    opts.enumeration.prune_isomorphic = !a.no_prune;
    opts.enumeration.budget = a.budget;
    opts.enumeration.threads = a.threads;
    opts.max_reported = a.max_reported;
    std::cerr << "searching n=" << a.n << " k=" << a.k << " m=" << a.m << (a.no_prune ? "" : " (pruned)") << '\n';
    const auto report = ekr::exhaustive_search(a.n, a.k, a.m, ekr::Objective::parse(a.objective), opts);
    std::cerr << "examined " << report.families_examined << " families in " << report.wall_time_seconds << "s\n";
    Output out(a.out);
    print_json(out.stream(), ekr::report_json(report, a.timing));
    return kExitOk;
}

int run_shift(const ShiftArgs& a) {
    const auto objective = ekr::Objective::parse(a.objective);
    if (!a.in.empty()) {
        const auto start = load(a.in);
        const auto r = ekr::shift_local_search(start, objective, a.max_steps);
        json j{{"objective", objective.name()},
               {"start_value", ekr::to_string(r.start_value)},
               {"value", ekr::to_string(r.value)},
               {"steps", r.trace.size()},
               {"trace", trace_json(r)},
               {"family", ekr::format_family(r.family)}};
        int status = kExitOk;
        if (a.compare_lex) {
            const auto lex = objective.evaluate(ekr::lex_segment(start.n(), start.k(), start.size()));
            j["lex_value"] = ekr::to_string(lex);
            if (objective.better(r.value, lex)) status = kExitHarness;
        }
        if (!a.out.empty()) {
            Output out(a.out);
            ekr::write_family(out.stream(), r.family);
        }
        print_json(std::cout, j);
        return status;
    }
    if (a.starts == 0 || a.n == 0 || a.k == 0) throw ekr::InvalidArgument("shift needs --in, or -n -k -m --starts --seed");
    if (!a.seed) throw ekr::InvalidArgument("random starts require --seed");
    const auto lex = objective.evaluate(ekr::lex_segment(a.n, a.k, a.m));
    std::mt19937_64 rng(*a.seed);
    ekr::ExactRatio best;
    std::size_t exceeded = 0;
    json runs = json::array();
    for (std::size_t s = 0; s < a.starts; ++s) {
        const auto start = ekr::random_family(a.n, a.k, a.m, rng);
        const auto r = ekr::shift_local_search(start, objective, a.max_steps);
        if (s == 0 || objective.better(r.value, best)) best = r.value;
        const bool over = objective.better(r.value, lex);
        if (over) ++exceeded;
        runs.push_back({{"start_value", ekr::to_string(r.start_value)},
                        {"value", ekr::to_string(r.value)},
                        {"steps", r.trace.size()},
                        {"exceeds_lex", over}});
        if ((s + 1) % 50 == 0) std::cerr << "  " << (s + 1) << "/" << a.starts << " starts\n";
    }
    json j{{"objective", objective.name()}, {"n", a.n},         {"k", a.k},
           {"m", a.m},                      {"seed", *a.seed},  {"starts", a.starts},
           {"lex_value", ekr::to_string(lex)}, {"best_value", ekr::to_string(best)},
           {"exceeding_lex", exceeded},     {"runs", runs}};
    print_json(std::cout, j);
    return a.compare_lex && exceeded > 0 ? kExitHarness : kExitOk;
}

int finish_table(const ekr::VerificationTable& t, const std::string& csv) {
    Output out(csv);
    ekr::write_verification_csv(out.stream(), t);
    std::cerr << t.kind << " n=" << t.n << ": " << t.families_examined << " families examined\n";
    for (const auto& f : t.failures) std::cerr << "FAILED: " << f << '\n';
    return t.passed() ? kExitOk : kExitHarness;
}

int run_verify_ak(const VerifyArgs& a) {
    ekr::EnumerationOptions opts{!a.no_prune, a.budget, a.threads};
    return finish_table(ekr::verify_ahlswede_katona(a.n, opts), a.csv);
}

int run_verify_lex(const VerifyArgs& a) {
    ekr::EnumerationOptions opts{!a.no_prune, a.budget, a.threads};
    return finish_table(ekr::verify_lex_counting(a.n, a.k, a.t_max, opts, a.m), a.csv);
}

int run_classify(const ClassifyArgs& a) {
    const auto f = load(a.in);
    const auto c = ekr::classify_structure(f, a.ell, ekr::parse_ratio(a.epsilon));
    json j{{"ell", c.ell},
           {"epsilon", ekr::to_string(c.epsilon)},
           {"full_star_centres", c.full_star_centres},
           {"cover", c.cover},
           {"classification", ekr::to_string(c.classification)},
           {"alpha", ekr::to_string(c.alpha)}};
    print_json(std::cout, j);
    return kExitOk;
}

json counter_json(const ekr::CounterexampleReport& r) {
    return {{"n", r.n},
            {"m_prime", r.m_prime},
            {"m", r.m},
            {"lex_inter3", r.lex_value.str()},
            {"rival_inter3", r.rival_value.str()},
            {"rival_wins", r.rival_wins},
            {"above_threshold", r.above_threshold}};
}

int run_counterexample(const CounterArgs& a) {
    if (a.m_prime) {
        print_json(std::cout, counter_json(ekr::star_colex_counterexample(a.n, *a.m_prime)));
        return kExitOk;
    }
    // Sweep: for each n, the smallest m' strictly above binom(n-2,2)/2 + (n-2)/2.
    const int hi = std::max(a.n, a.n_max);
    json rows = json::array();
    bool any = false;
    for (int n = a.n; n <= hi; ++n) {
        const std::uint64_t room = ekr::small_binom(n - 2, 2);
        const std::uint64_t m_prime = (room + static_cast<std::uint64_t>(n - 2)) / 2 + 1;
        if (m_prime > room) continue;
        const auto r = ekr::star_colex_counterexample(n, m_prime);
        any = any || r.rival_wins;
        rows.push_back(counter_json(r));
        std::cerr << "  n=" << n << " m'=" << m_prime << (r.rival_wins ? " rival wins" : "") << '\n';
    }
    print_json(std::cout, rows);
    return any ? kExitOk : kExitHarness;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intersecting subfamilies of k-uniform set families: counting, probability and search."};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a lex, colex or random family in .fam format");
    gen_cmd->add_option("--order", gen.order, "lex, colex or random")->capture_default_str();
    gen_cmd->add_option("-n", gen.n, "Ground set size")->required();
    gen_cmd->add_option("-k", gen.k, "Set size")->required();
    gen_cmd->add_option("-m", gen.m, "Number of sets")->required();
    gen_cmd->add_option("--seed", gen.seed, "Seed (random order only)");
    gen_cmd->add_option("-o,--out", gen.out, "Output file, - for stdout")->capture_default_str();

    CountArgs count;
    auto* count_cmd = app.add_subcommand("count", "Profile CSV t,count of intersecting subfamilies");
    count_cmd->add_option("--in", count.in, ".fam input, - for stdin")->required();
    count_cmd->add_option("--csv", count.csv, "Output CSV, - for stdout")->capture_default_str();
    count_cmd->add_option("--t-max", count.t_max, "Only sizes 0..T (no member cap)");
    count_cmd->add_option("--cap", count.cap, "Member cap for the full profile")->capture_default_str();

    CountArgs split;
    auto* split_cmd = app.add_subcommand("split", "CSV t,trivial,nontrivial");
    split_cmd->add_option("--in", split.in, ".fam input, - for stdin")->required();
    split_cmd->add_option("--csv", split.csv, "Output CSV, - for stdout")->capture_default_str();
    split_cmd->add_option("--t-max", split.t_max, "Only sizes 0..T (no member cap)");
    split_cmd->add_option("--cap", split.cap, "Member cap for the full profile")->capture_default_str();
    split_cmd->add_option("--method", split.method, "ie (inclusion-exclusion) or direct")->capture_default_str();

    ProbArgs prob;
    auto* prob_cmd = app.add_subcommand("prob", "Exact and float P(F_p intersecting) as JSON");
    prob_cmd->add_option("--in", prob.in, ".fam input, - for stdin")->required();
    prob_cmd->add_option("-p", prob.p, "Probability, a/b or decimal")->required();
    prob_cmd->add_option("--cap", prob.cap, "Member cap")->capture_default_str();
    prob_cmd->add_option("--samples", prob.samples, "Also run Monte Carlo with this many samples");
    prob_cmd->add_option("--seed", prob.seed, "Monte Carlo seed");
    prob_cmd->add_option("--threads", prob.threads, "Worker hint")->capture_default_str();

    ProbArgs mc;
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate with a Wilson 95% interval");
    mc_cmd->add_option("--in", mc.in, ".fam input, - for stdin")->required();
    mc_cmd->add_option("-p", mc.p, "Probability, a/b or decimal")->required();
    mc_cmd->add_option("--samples", mc.samples, "Sample count")->required()->check(CLI::PositiveNumber);
    mc_cmd->add_option("--seed", mc.seed, "Seed")->required();
    mc_cmd->add_option("--threads", mc.threads, "Worker hint")->capture_default_str();

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive search for the best families of size m");
    search_cmd->add_option("-n", search.n, "Ground set size")->required();
    search_cmd->add_option("-k", search.k, "Set size")->required();
    search_cmd->add_option("-m", search.m, "Number of sets")->required();
    search_cmd->add_option("--objective", search.objective, "inter:T, prob:P or disjoint")->required();
    search_cmd->add_flag("--no-prune", search.no_prune, "Visit every family instead of one per isomorphism class");
    search_cmd->add_flag("--timing", search.timing, "Include wall time in the report");
    search_cmd->add_option("--budget", search.budget, "Maximum families to visit")->capture_default_str();
    search_cmd->add_option("--max-reported", search.max_reported, "Maximizers listed in the report")->capture_default_str();
    search_cmd->add_option("--threads", search.threads, "Worker hint")->capture_default_str();
    search_cmd->add_option("-o,--out", search.out, "Report file, - for stdout")->capture_default_str();

    ShiftArgs shift;
    auto* shift_cmd = app.add_subcommand("shift", "Hill climbing over single-set replacements");
    shift_cmd->add_option("--in", shift.in, "Start family (.fam)");
    shift_cmd->add_option("-n", shift.n, "Ground set size (random starts)");
    shift_cmd->add_option("-k", shift.k, "Set size (random starts)");
    shift_cmd->add_option("-m", shift.m, "Number of sets (random starts)");
    shift_cmd->add_option("--starts", shift.starts, "Number of random starts");
    shift_cmd->add_option("--seed", shift.seed, "Seed for random starts");
    shift_cmd->add_option("--objective", shift.objective, "inter:T, prob:P or disjoint")->required();
    shift_cmd->add_option("--max-steps", shift.max_steps, "Move limit per run")->capture_default_str();
    shift_cmd->add_flag("--compare-lex", shift.compare_lex, "Exit 2 if a result beats the lex segment");
    shift_cmd->add_option("-o,--out", shift.out, "Write the final family (single start)");

    VerifyArgs ak;
    auto* ak_cmd = app.add_subcommand("verify-ak", "Disjoint-pair minimum against lex and colex graphs, every m");
    ak_cmd->add_option("-n", ak.n, "Number of vertices (2..8)")->required();
    ak_cmd->add_flag("--no-prune", ak.no_prune, "Visit every graph");
    ak_cmd->add_option("--budget", ak.budget, "Maximum families to visit")->capture_default_str();
    ak_cmd->add_option("--threads", ak.threads, "Worker hint")->capture_default_str();
    ak_cmd->add_option("--csv", ak.csv, "Output CSV, - for stdout")->capture_default_str();

    VerifyArgs vl;
    auto* vl_cmd = app.add_subcommand("verify-lex", "Exhaustive max of inter(F,t) against the lex segment");
    vl_cmd->add_option("-n", vl.n, "Ground set size")->required();
    vl_cmd->add_option("-k", vl.k, "Set size")->capture_default_str();
    vl_cmd->add_option("--t-max", vl.t_max, "Largest subfamily size")->capture_default_str();
    vl_cmd->add_option("-m", vl.m, "Only this family size");
    vl_cmd->add_flag("--no-prune", vl.no_prune, "Visit every family");
    vl_cmd->add_option("--budget", vl.budget, "Maximum families to visit")->capture_default_str();
    vl_cmd->add_option("--threads", vl.threads, "Worker hint")->capture_default_str();
    vl_cmd->add_option("--csv", vl.csv, "Output CSV, - for stdout")->capture_default_str();

    ClassifyArgs cls;
    auto* cls_cmd = app.add_subcommand("classify", "Full-star / almost-full-star structure of a family");
    cls_cmd->add_option("--in", cls.in, ".fam input, - for stdin")->required();
    cls_cmd->add_option("--ell", cls.ell, "Number of stars")->capture_default_str();
    cls_cmd->add_option("--epsilon", cls.epsilon, "Almost-full slack, a/b or decimal")->capture_default_str();

    CounterArgs ce;
    auto* ce_cmd = app.add_subcommand("counterexample", "Lex segment vs full star plus lifted colex graph, inter(F,3)");
    ce_cmd->add_option("-n", ce.n, "Ground set size (first n of a sweep)")->required();
    ce_cmd->add_option("--m-prime", ce.m_prime, "Sets beyond the full star; omit to sweep");
    ce_cmd->add_option("--n-max", ce.n_max, "Last n of the sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (count_cmd->parsed()) return run_count(count);
        if (split_cmd->parsed()) return run_split(split);
        if (prob_cmd->parsed()) return run_prob(prob);
        if (mc_cmd->parsed()) return run_mc(mc);
        if (search_cmd->parsed()) return run_search(search);
        if (shift_cmd->parsed()) return run_shift(shift);
        if (ak_cmd->parsed()) return run_verify_ak(ak);
        if (vl_cmd->parsed()) return run_verify_lex(vl);
        if (cls_cmd->parsed()) return run_classify(cls);
        if (ce_cmd->parsed()) return run_counterexample(ce);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
