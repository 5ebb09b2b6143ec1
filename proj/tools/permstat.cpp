#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permstat/cosine.hpp"
#include "permstat/distributions.hpp"
#include "permstat/polynomial.hpp"
#include "permstat/statistics.hpp"
#include "permstat/verify.hpp"

namespace {

using nlohmann::json;
using namespace permstat;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerifyFail = 3;

std::string coeffs_field(const IntPoly& p) {
    std::string out;
    for (const auto& c : p.coeffs()) {
        if (!out.empty()) out += ' ';
        out += c.str();
    }
    return out;
}

json coeffs_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

struct StatArgs {
    std::string perm;
    std::string name;
    std::optional<int> k, k2, d;
    std::optional<std::string> variant;
};

struct DistArgs {
    std::string name;
    int n = 1;
    std::optional<int> k, k2, d;
    std::optional<std::string> variant;
    std::string method = "auto";
    std::string format = "pretty";
    int jobs = 1;
};

struct TableRow {
    std::vector<std::pair<std::string, long long>> params;  // ordered columns
    IntPoly poly;
};

void print_table(const std::string& format, const std::vector<std::string>& columns,
                 const std::vector<TableRow>& rows) {
    if (format == "csv") {
        std::string header;
        for (const auto& c : columns) header += c + ",";
        std::cout << header << "coeffs_ascending\n";
        for (const auto& r : rows) {
            for (const auto& [_, v] : r.params) std::cout << v << ',';
            std::cout << '"' << coeffs_field(r.poly) << "\"\n";
        }
        return;
    }
    json out = json::array();
    for (const auto& r : rows) {
        json obj;
        for (const auto& [name, v] : r.params) obj[name] = v;
        obj["coeffs"] = coeffs_json(r.poly);
        out.push_back(obj);
    }
    std::cout << out.dump() << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"Exact permutation-statistic computations: single statistics, "
                 "distribution polynomials, table reproduction, witness "
                 "construction, and invariant verification."};
    app.require_subcommand(1);

    // stat
    StatArgs sa;
    auto* stat_cmd = app.add_subcommand("stat", "Evaluate one statistic on one permutation");
    stat_cmd->add_option("--perm", sa.perm, "Permutation in one-line notation")->required();
    stat_cmd->add_option("--stat", sa.name, "Statistic name")->required();
    stat_cmd->add_option("--k", sa.k, "Step size");
    stat_cmd->add_option("--k2", sa.k2, "Value gap (inv_k1k2)");
    stat_cmd->add_option("--d", sa.d, "Divisor (modinv_dk)");
    stat_cmd->add_option("--variant", sa.variant, "lbsum variant: base|ge_k|le_k|eq_k");

    // dist
    DistArgs da;
    auto* dist_cmd = app.add_subcommand("dist", "Distribution polynomial of a statistic over S_n");
    dist_cmd->add_option("--stat", da.name, "Statistic name")->required();
    dist_cmd->add_option("--n", da.n, "Rank")->required()->check(CLI::PositiveNumber);
    dist_cmd->add_option("--k", da.k, "Step size");
    dist_cmd->add_option("--k2", da.k2, "Value gap (inv_k1k2)");
    dist_cmd->add_option("--d", da.d, "Divisor (modinv_dk)");
    dist_cmd->add_option("--variant", da.variant, "lbsum variant");
    dist_cmd->add_option("--method", da.method, "brute|closed|recurrence|auto")
        ->check(CLI::IsMember({"brute", "closed", "recurrence", "auto"}));
    dist_cmd->add_option("--format", da.format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    dist_cmd->add_option("--jobs", da.jobs, "Worker count for brute sweeps")
        ->check(CLI::PositiveNumber);

    // cosine
    auto* cos_cmd = app.add_subcommand("cosine", "Dot products with the identity");
    cos_cmd->require_subcommand(1);
    long long cos_k = 0;
    int cos_max_rank = 6;
    std::string parity_perm;
    auto* cons_cmd = cos_cmd->add_subcommand("construct", "Find a permutation with dot product k");
    cons_cmd->add_option("--k", cos_k, "Target dot product")->required();
    auto* count_cmd = cos_cmd->add_subcommand("count", "Count permutations with dot product k");
    count_cmd->add_option("--k", cos_k, "Target dot product")->required();
    count_cmd->add_option("--max-rank", cos_max_rank, "Largest rank to enumerate");
    auto* parity_cmd =
        cos_cmd->add_subcommand("parity", "Exploratory: odd values in odd positions");
    parity_cmd->add_option("--perm", parity_perm, "Permutation in one-line notation")->required();

    // verify
    std::string suite = "all", verify_format = "text";
    int verify_max_n = 8, verify_jobs = 1;
    bool verify_force = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
    verify_cmd->add_option("--suite", suite, "Suite name or 'all'");
    verify_cmd->add_option("--max-n", verify_max_n, "Largest rank swept")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--jobs", verify_jobs, "Worker count")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", verify_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_flag("--force", verify_force, "Allow --max-n of 10 or more");

    // tables
    std::string table, table_format = "csv";
    std::optional<int> n_max;
    int table_jobs = 1;
    auto* tables_cmd = app.add_subcommand("tables", "Reproduce the reference tables");
    tables_cmd->add_option("--table", table, "N|H|Hk1k2|J|L|K")
        ->required()
        ->check(CLI::IsMember({"N", "H", "Hk1k2", "J", "L", "K"}));
    tables_cmd->add_option("--n-max", n_max, "Largest rank (default depends on table)");
    tables_cmd->add_option("--format", table_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    tables_cmd->add_option("--jobs", table_jobs, "Worker count for brute sweeps")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (stat_cmd->parsed()) {
        const Permutation p = Permutation::parse(sa.perm);
        const StatisticSpec spec = StatisticSpec::parse(sa.name, sa.k, sa.k2, sa.d, sa.variant);
        std::cout << evaluate(spec, p) << '\n';
        return kExitOk;
    }

    if (dist_cmd->parsed()) {
        DistributionRequest req;
        req.stat = StatisticSpec::parse(da.name, da.k, da.k2, da.d, da.variant);
        req.n = da.n;
        req.jobs = da.jobs;
        const std::map<std::string, DistMethod> methods = {{"brute", DistMethod::Brute},
                                                           {"closed", DistMethod::Closed},
                                                           {"recurrence", DistMethod::Recurrence},
                                                           {"auto", DistMethod::Auto}};
        req.method = methods.at(da.method);
        const IntPoly poly = distribution(req);
        if (da.format == "pretty") {
            std::cout << poly.pretty() << '\n';
        } else if (da.format == "json") {
            std::cout << poly.to_json() << '\n';
        } else {
            std::cout << "n,stat,coeffs_ascending\n"
                      << da.n << ',' << req.stat.name() << ",\"" << coeffs_field(poly) << "\"\n";
        }
        return kExitOk;
    }

    if (cons_cmd->parsed()) {
        std::cout << construct(cos_k).str() << '\n';
        return kExitOk;
    }
    if (count_cmd->parsed()) {
        std::cout << count_with_cosine(cos_k, cos_max_rank) << '\n';
        return kExitOk;
    }
    if (parity_cmd->parsed()) {
        const Permutation p = Permutation::parse(parity_perm);
        int odd = 0;
        for (int i = 1; i <= p.rank(); i += 2) odd += p(i) % 2;
        std::cout << odd << '\n';
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        if (verify_max_n >= 10 && !verify_force) {
            std::cerr << "verify: --max-n " << verify_max_n
                      << " sweeps more than 9! permutations; pass --force to proceed\n";
            return kExitUsage;
        }
        std::vector<VerificationReport> reports;
        if (suite == "all") {
            reports = run_all_suites(verify_max_n, verify_jobs);
        } else {
            reports.push_back(run_suite(suite, verify_max_n, verify_jobs));
        }
        bool all_pass = true;
        if (verify_format == "json") {
            json out = json::array();
            for (const auto& r : reports) {
                all_pass = all_pass && r.passed;
                json obj = {{"suite", r.suite}, {"range", r.range},
                            {"status", r.passed ? "pass" : "fail"}};
                if (!r.passed) obj["counterexample"] = r.counterexample;
                out.push_back(obj);
            }
            std::cout << out.dump() << '\n';
        } else {
            for (const auto& r : reports) {
                all_pass = all_pass && r.passed;
                std::cout << r.suite << " [" << r.range << "]: "
                          << (r.passed ? "PASS" : "FAIL — " + r.counterexample) << '\n';
            }
        }
        return all_pass ? kExitOk : kExitVerifyFail;
    }

    // tables
    auto brute = [&](StatisticSpec::Tag tag, int n, std::optional<int> k = {},
                     std::optional<int> k2 = {}, std::optional<int> d = {}) {
        StatisticSpec s;
        s.tag = tag;
        s.k = k;
        s.k2 = k2;
        s.d = d;
        return dist_brute(s, n, table_jobs);
    };
    std::vector<std::string> columns;
    std::vector<TableRow> rows;
    using Tag = StatisticSpec::Tag;
    if (table == "N") {
        const int nm = n_max.value_or(8);
        columns = {"n"};
        for (int n = 1; n <= nm; ++n) rows.push_back({{{"n", n}}, N_recurrence(n)});
    } else if (table == "H") {
        const int nm = n_max.value_or(9);
        columns = {"n", "k"};
        for (int n = 1; n <= nm; ++n)
            for (int k = 1; k <= n; ++k) rows.push_back({{{"n", n}, {"k", k}}, H_closed(n, k)});
    } else if (table == "Hk1k2") {
        const int nm = n_max.value_or(5);
        columns = {"n", "k1", "k2"};
        for (int n = 1; n <= nm; ++n)
            for (int k1 = 1; k1 <= n; ++k1)
                for (int k2 = 1; k2 <= std::max(1, n - 1); ++k2)
                    rows.push_back({{{"n", n}, {"k1", k1}, {"k2", k2}},
                                    brute(Tag::InvK1K2, n, k1, k2)});
    } else if (table == "J") {
        const int nm = n_max.value_or(7);
        columns = {"n", "k"};
        for (int n = 1; n <= nm; ++n)
            for (int k = 1; k <= std::max(1, n - 1); ++k)
                rows.push_back({{{"n", n}, {"k", k}}, brute(Tag::InvLeK, n, k)});
    } else if (table == "L") {
        const int nm = n_max.value_or(7);
        columns = {"n", "d", "k"};
        for (int n = 1; n <= nm; ++n)
            for (int k = 1; k <= n; ++k)
                rows.push_back({{{"n", n}, {"d", 2}, {"k", k}},
                                brute(Tag::ModinvDK, n, k, {}, 2)});
    } else {  // K
        const int nm = n_max.value_or(8);
        columns = {"n", "k"};
        for (int n = 1; n <= nm; ++n)
            for (int k = 1; k <= n; ++k)
                rows.push_back({{{"n", n}, {"k", k}}, brute(Tag::IpcniK, n, k)});
    }
    print_table(table_format, columns, rows);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const NotAPermutation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RankMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NotAchievable&) {
        std::cerr << "not achievable\n";
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}
