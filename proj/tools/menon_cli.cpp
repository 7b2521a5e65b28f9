// Command-line front end: batch verification sweeps, single-identity
// evaluation, naive-vs-closed-form benchmarking, and character tables.
//
// Exit codes: 0 success, 1 mismatch found, 2 usage error.

#include <atomic>
#include <charconv>
#include <chrono>
#include <condition_variable>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "menon/identities.hpp"

using namespace menon;

namespace {

struct VerifyConfig {
    std::vector<std::string> identity_tags;
    std::string n_range = "1..1";
    std::string s_spec = "all";
    std::uint64_t seed = 0;
    std::string f_spec;
    unsigned jobs = 0;
    std::string format = "csv";
    std::uint64_t budget = EvenFunction::kDefaultBudget;
    bool no_timings = false;
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            if (start < text.size())
                out.push_back(text.substr(start));
            break;
        }
        if (comma > start)
            out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    auto parse_u64 = [](const std::string& part) {
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size())
            throw std::invalid_argument("bad integer '" + part + "' in range");
        return value;
    };
    std::uint64_t lo, hi;
    if (dots == std::string::npos) {
        lo = hi = parse_u64(text);
    } else {
        lo = parse_u64(text.substr(0, dots));
        hi = parse_u64(text.substr(dots + 2));
    }
    if (lo < 1 || hi < lo)
        throw std::invalid_argument("bad n range '" + text + "' (want a..b with 1 <= a <= b)");
    return {lo, hi};
}

SPolicy parse_s_policy(const std::string& spec, std::uint64_t seed) {
    SPolicy policy;
    policy.seed = seed;
    if (spec == "all") {
        policy.kind = SPolicy::Kind::All;
        return policy;
    }
    if (spec.starts_with("sample:")) {
        policy.kind = SPolicy::Kind::Sample;
        const std::string count = spec.substr(7);
        std::uint32_t value = 0;
        const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), value);
        if (ec != std::errc() || ptr != count.data() + count.size() || value == 0)
            throw std::invalid_argument("bad sample count in '" + spec + "'");
        policy.sample_count = value;
        return policy;
    }
    policy.kind = SPolicy::Kind::List;
    for (const auto& part : split_commas(spec)) {
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size())
            throw std::invalid_argument("bad s value '" + part + "'");
        policy.list.push_back(value);
    }
    if (policy.list.empty())
        throw std::invalid_argument("empty s list");
    return policy;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string report_to_csv(const IdentityReport& rep, bool with_timings) {
    std::string row = to_string(rep.id);
    row += ',' + std::to_string(rep.params.n);
    row += ',' + csv_quote(rep.chi_label);
    row += ',' + (rep.params.d ? std::to_string(*rep.params.d) : std::string());
    row += ',' + (rep.params.r ? std::to_string(*rep.params.r) : std::string());
    row += ',' + (rep.params.s ? std::to_string(*rep.params.s) : std::string());
    row += ',' + csv_quote(rep.params.f_name);
    row += ',' + rep.lhs.to_string();
    row += ',' + rep.rhs.to_string();
    row += ',' + std::string(rep.equal ? "true" : "false");
    row += ',' + std::to_string(with_timings ? rep.lhs_micros : 0);
    row += ',' + std::to_string(with_timings ? rep.rhs_micros : 0);
    return row;
}

std::string report_to_json(const IdentityReport& rep, bool with_timings) {
    nlohmann::ordered_json j;
    j["identity"] = to_string(rep.id);
    j["n"] = rep.params.n;
    if (rep.chi_label.empty())
        j["chi"] = nullptr;
    else
        j["chi"] = rep.chi_label;
    if (rep.params.d)
        j["d"] = *rep.params.d;
    else
        j["d"] = nullptr;
    if (rep.params.r)
        j["r"] = *rep.params.r;
    else
        j["r"] = nullptr;
    if (rep.params.s)
        j["s"] = *rep.params.s;
    else
        j["s"] = nullptr;
    j["f"] = rep.params.f_name;
    j["lhs"] = rep.lhs.to_string();
    j["rhs"] = rep.rhs.to_string();
    j["equal"] = rep.equal;
    j["lhs_us"] = with_timings ? rep.lhs_micros : 0;
    j["rhs_us"] = with_timings ? rep.rhs_micros : 0;
    return j.dump();
}

constexpr const char* kCsvHeader = "identity,n,chi,d,r,s,f,lhs,rhs,equal,lhs_us,rhs_us";

int run_verify(const VerifyConfig& cfg) {
    const auto [n_min, n_max] = parse_range(cfg.n_range);
    SweepOptions options;
    options.n_min = n_min;
    options.n_max = n_max;
    options.s_policy = parse_s_policy(cfg.s_spec, cfg.seed);
    options.f_names = split_commas(cfg.f_spec);
    options.budget = cfg.budget;

    std::vector<std::pair<IdentityId, IdentityParams>> tuples;
    for (const auto& tag : cfg.identity_tags) {
        const IdentityId id = identity_from_string(tag);
        for (auto& params : enumerate_sweep(id, options))
            tuples.emplace_back(id, std::move(params));
    }

    const bool json = cfg.format == "json";
    const bool with_timings = !cfg.no_timings;
    if (json) {
        if (options.s_policy.kind == SPolicy::Kind::Sample)
            std::cout << nlohmann::ordered_json{{"seed", cfg.seed}}.dump() << '\n';
    } else {
        if (options.s_policy.kind == SPolicy::Kind::Sample)
            std::cout << "# seed=" << cfg.seed << '\n';
        std::cout << kCsvHeader << '\n';
    }

    const auto started = std::chrono::steady_clock::now();
    std::atomic<std::size_t> mismatches{0};

    auto render = [&](std::size_t i) {
        const auto rep = verify(tuples[i].first, tuples[i].second);
        if (!rep.equal) {
            mismatches.fetch_add(1, std::memory_order_relaxed);
            std::cerr << ("MISMATCH " + report_to_csv(rep, with_timings) + "\n");
        }
        return json ? report_to_json(rep, with_timings) : report_to_csv(rep, with_timings);
    };

    unsigned jobs = cfg.jobs != 0 ? cfg.jobs : std::thread::hardware_concurrency();
    if (jobs == 0)
        jobs = 1;

    if (tuples.empty()) {
        std::cerr << "warning: 0 checks matched the sweep configuration\n";
    } else if (jobs == 1 || tuples.size() < 4) {
        for (std::size_t i = 0; i < tuples.size(); ++i)
            std::cout << render(i) << '\n';
    } else {
        // Workers race over indices; emission stays in parameter order.
        std::vector<std::string> lines(tuples.size());
        std::vector<unsigned char> done(tuples.size(), 0);
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex mutex;
        std::condition_variable cv;

        auto worker = [&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= tuples.size())
                    return;
                try {
                    std::string line = render(i);
                    std::lock_guard lock(mutex);
                    lines[i] = std::move(line);
                    done[i] = 1;
                } catch (...) {
                    std::lock_guard lock(mutex);
                    if (!error)
                        error = std::current_exception();
                    failed = true;
                }
                cv.notify_all();
            }
        };

        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        {
            std::unique_lock lock(mutex);
            for (std::size_t i = 0; i < tuples.size(); ++i) {
                cv.wait(lock, [&] { return done[i] || failed; });
                if (failed)
                    break;
                std::cout << lines[i] << '\n';
                lines[i].clear();
                lines[i].shrink_to_fit();
            }
        }
        for (auto& t : pool)
            t.join();
        if (error)
            std::rethrow_exception(error);
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    std::cerr << "checks=" << tuples.size() << " mismatches=" << mismatches.load()
              << " elapsed_ms=" << elapsed << '\n';
    return mismatches.load() == 0 ? 0 : 1;
}

struct EvalConfig {
    std::string identity_tag;
    std::uint64_t n = 1;
    std::int64_t chi = -1;
    std::int64_t d = -1;
    std::int64_t n2 = -1;
    std::optional<std::int64_t> r;
    std::optional<std::int64_t> s;
    std::string f_name;
    std::uint64_t budget = EvenFunction::kDefaultBudget;
};

int run_eval(const EvalConfig& cfg) {
    const IdentityId id = identity_from_string(cfg.identity_tag);
    IdentityParams params;
    params.n = cfg.n;
    if (cfg.chi >= 0)
        params.chi = static_cast<std::size_t>(cfg.chi);
    if (cfg.d >= 0)
        params.d = static_cast<std::uint64_t>(cfg.d);
    if (cfg.n2 >= 0)
        params.d = static_cast<std::uint64_t>(cfg.n2); // MULT_REMARK: second modulus
    params.r = cfg.r;
    params.s = cfg.s;
    params.f_name = cfg.f_name;
    params.budget = cfg.budget;

    const auto rep = verify(id, params);

    auto approx = [](const CyclotomicInteger& z) {
        const auto [re, im] = z.to_complex();
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f%+.6fi", re, im);
        return std::string(buf);
    };

    std::cout << "identity: " << to_string(rep.id) << '\n';
    std::cout << "params:   n=" << rep.params.n;
    if (!rep.chi_label.empty())
        std::cout << " chi=" << rep.chi_label;
    if (rep.params.d)
        std::cout << (id == IdentityId::MULT_REMARK ? " n2=" : " d=") << *rep.params.d;
    if (rep.params.r)
        std::cout << " r=" << *rep.params.r;
    if (rep.params.s)
        std::cout << " s=" << *rep.params.s;
    if (!rep.params.f_name.empty())
        std::cout << " f=" << rep.params.f_name;
    std::cout << '\n';
    std::cout << "lhs:      " << rep.lhs.to_string() << "  (~ " << approx(rep.lhs) << ")\n";
    std::cout << "rhs:      " << rep.rhs.to_string() << "  (~ " << approx(rep.rhs) << ")\n";
    std::cout << "equal:    " << (rep.equal ? "true" : "false") << '\n';
    std::cout << "time:     lhs_us=" << rep.lhs_micros << " rhs_us=" << rep.rhs_micros << '\n';
    return rep.equal ? 0 : 1;
}

int run_bench(const std::string& n_spec, std::int64_t s, unsigned reps) {
    std::cout << "n,naive_us,fast_us,speedup,equal\n";
    bool all_equal = true;
    for (const auto& part : split_commas(n_spec)) {
        std::uint64_t n = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), n);
        if (ec != std::errc() || ptr != part.data() + part.size() || n == 0)
            throw std::invalid_argument("bad n value '" + part + "'");

        Int naive_value, fast_value;
        std::int64_t naive_us = 0, fast_us = 0;
        for (unsigned rep = 0; rep < reps; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            naive_value = naive_gcd_sum(n, s);
            auto t1 = std::chrono::steady_clock::now();
            fast_value = menon_gcd_sum_fast(n, s);
            auto t2 = std::chrono::steady_clock::now();
            const auto nu = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
            const auto fu = std::chrono::duration_cast<std::chrono::microseconds>(t2 - t1).count();
            if (rep == 0 || nu < naive_us)
                naive_us = nu;
            if (rep == 0 || fu < fast_us)
                fast_us = fu;
        }
        const bool equal = naive_value == fast_value;
        all_equal = all_equal && equal;
        const double speedup =
            static_cast<double>(naive_us) / static_cast<double>(std::max<std::int64_t>(fast_us, 1));
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.1f", speedup);
        std::cout << n << ',' << naive_us << ',' << fast_us << ',' << buf << ','
                  << (equal ? "true" : "false") << '\n';
    }
    return all_equal ? 0 : 1;
}

int run_chartable(std::uint64_t n) {
    const auto chars = characters(n);
    std::cout << "index,chi,order,conductor,primitive\n";
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const std::uint64_t d = conductor(chars[i]);
        std::cout << i << ',' << csv_quote(chars[i].serialize()) << ',' << chars[i].order() << ','
                  << d << ',' << (d == n ? "true" : "false") << '\n';
    }
    std::cerr << "characters=" << chars.size() << " modulus=" << n << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Menon-type identities twisted by Dirichlet characters"};
    app.require_subcommand(1);

    VerifyConfig vcfg;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->add_option("--identity", vcfg.identity_tags, "identity ids (repeatable)")
        ->required()
        ->delimiter(',');
    verify_cmd->add_option("--n", vcfg.n_range, "modulus range a..b")->required();
    verify_cmd->add_option("--s", vcfg.s_spec, "s policy: all | s1,s2,... | sample:<count>");
    verify_cmd->add_option("--seed", vcfg.seed, "seed for sample policy");
    verify_cmd->add_option("--f", vcfg.f_spec, "even-function names, comma separated");
    verify_cmd->add_option("--jobs", vcfg.jobs, "worker count (default: hardware)");
    verify_cmd->add_option("--format", vcfg.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    verify_cmd->add_option("--budget", vcfg.budget, "enumeration budget for nsolutions");
    verify_cmd->add_flag("--no-timings", vcfg.no_timings,
                         "zero the timing columns for byte-identical output");

    EvalConfig ecfg;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a single identity instance");
    eval_cmd->add_option("identity", ecfg.identity_tag, "identity id")->required();
    eval_cmd->add_option("--n", ecfg.n, "modulus")->required();
    eval_cmd->add_option("--chi", ecfg.chi, "character index");
    eval_cmd->add_option("--d", ecfg.d, "congruence modulus d | n");
    eval_cmd->add_option("--n2", ecfg.n2, "second modulus (MULT_REMARK)");
    eval_cmd->add_option("--r", ecfg.r, "residue class r");
    eval_cmd->add_option("--s", ecfg.s, "shift s");
    eval_cmd->add_option("--f", ecfg.f_name, "even-function name");
    eval_cmd->add_option("--budget", ecfg.budget, "enumeration budget for nsolutions");

    std::string bench_n = "1,100,10000,1000000";
    std::int64_t bench_s = 1;
    unsigned bench_reps = 3;
    auto* bench_cmd = app.add_subcommand("bench", "naive vs closed-form gcd sums");
    bench_cmd->add_option("--n", bench_n, "comma-separated moduli");
    bench_cmd->add_option("--s", bench_s, "shift s");
    bench_cmd->add_option("--reps", bench_reps, "repetitions, best time wins")
        ->check(CLI::PositiveNumber);

    std::uint64_t chartable_n = 1;
    auto* chartable_cmd = app.add_subcommand("chartable", "list all characters mod n");
    chartable_cmd->add_option("--n", chartable_n, "modulus")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify_cmd->parsed())
            return run_verify(vcfg);
        if (eval_cmd->parsed())
            return run_eval(ecfg);
        if (bench_cmd->parsed())
            return run_bench(bench_n, bench_s, bench_reps);
        if (chartable_cmd->parsed())
            return run_chartable(chartable_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
