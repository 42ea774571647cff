// Command-line front end for the exact Bloch-Okounkov n-point function
// library: closed theta-determinant formula, inverse-Kostka formula, and the
// Fock-space trace oracle, plus the identity verification battery.
//
// Exit codes: 0 success / all equal, 1 usage error, 2 violated mathematical
// precondition, 3 verification mismatch.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bo/fock.hpp"
#include "bo/formulas.hpp"
#include "bo/json_io.hpp"
#include "bo/qseries.hpp"
#include "bo/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitMismatch = 3;

struct Options {
    int level = 1;
    std::vector<int> lambda;
    std::vector<std::string> s_values;
    int order = 8;
    int threads = 1;
    bool json = false;
    bool csv = false;
    std::string method = "theta";
    std::string id = "all";
    int charge = 1;
    int size = 2;
    int lo = 0;
    int hi = 2;
    bool inverse = false;
};

bo::GenPartition lambda_of(const Options& opt) {
    if (opt.lambda.empty()) return bo::GenPartition::zeros(opt.level);
    if (static_cast<int>(opt.lambda.size()) != opt.level)
        throw std::domain_error("lambda: expected " + std::to_string(opt.level) +
                                " entries, got " + std::to_string(opt.lambda.size()));
    try {
        return bo::GenPartition(opt.lambda);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("lambda: entries must be weakly decreasing");
    }
}

std::vector<bo::TPoint> points_of(const Options& opt) {
    std::vector<bo::TPoint> pts;
    for (const auto& text : opt.s_values) {
        try {
            pts.emplace_back(bo::parse_rational(text));
        } catch (const std::invalid_argument&) {
            throw std::domain_error("s: cannot parse '" + text + "' as a rational");
        }
    }
    return pts;
}

int order8_of(const Options& opt) {
    if (opt.order < 1) throw std::domain_error("order: must be a positive number of q powers");
    return 8 * opt.order;
}

void print_series(const Options& opt, const std::string& method, const bo::QSeries& qs) {
    if (opt.json) {
        nlohmann::ordered_json j;
        j["method"] = method;
        j["level"] = opt.level;
        j["lambda"] = lambda_of(opt).entries();
        auto s = nlohmann::ordered_json::array();
        for (const auto& text : opt.s_values) s.push_back(bo::to_string(bo::parse_rational(text)));
        j["s"] = std::move(s);
        j["order"] = opt.order;
        j["series"] = bo::series_json(qs);
        std::cout << j.dump(2) << "\n";
    } else if (opt.csv) {
        std::cout << bo::series_csv(qs);
    } else {
        std::cout << bo::to_string(qs) << "\n";
    }
}

int run_npoint(const Options& opt) {
    const auto la = lambda_of(opt);
    const auto pts = points_of(opt);
    const int n8 = order8_of(opt);

    if (opt.method == "theta") {
        print_series(opt, "theta", bo::npoint_theta(opt.level, la, pts, n8));
        return kExitOk;
    }
    if (opt.method == "kostka") {
        print_series(opt, "kostka", bo::npoint_kostka(opt.level, la, pts, n8));
        return kExitOk;
    }
    if (opt.method == "oracle") {
        print_series(opt, "oracle", bo::oracle_npoint(opt.level, la, pts, n8, opt.threads));
        return kExitOk;
    }
    if (opt.method != "all") throw std::domain_error("method: must be theta, kostka, oracle or all");

    const bo::QSeries theta = bo::npoint_theta(opt.level, la, pts, n8);
    const bo::QSeries kostka = bo::npoint_kostka(opt.level, la, pts, n8);
    std::optional<bo::QSeries> oracle;
    bool charge_in_range = true;
    for (int e : la.entries()) charge_in_range &= 4LL * e * e < n8;
    if (charge_in_range) oracle = bo::oracle_npoint(opt.level, la, pts, n8, opt.threads);

    print_series(opt, "theta", theta);
    bool all_equal = true;
    auto report = [&](const std::string& pair, const std::optional<int>& diff) {
        if (diff) {
            all_equal = false;
            std::cout << pair << ": DIFFER first at q^(" << *diff << "/8)\n";
        } else {
            std::cout << pair << ": EQUAL\n";
        }
    };
    report("theta vs kostka", theta.first_difference(kostka, n8));
    if (oracle) {
        report("theta vs oracle", theta.first_difference(*oracle, n8));
        report("kostka vs oracle", kostka.first_difference(*oracle, n8));
    } else {
        std::cout << "oracle skipped: --order " << opt.order
                  << " cannot resolve the charge sector of lambda " << la.str() << "\n";
    }
    return all_equal ? kExitOk : kExitMismatch;
}

int run_bo(const Options& opt) {
    print_series(opt, "bo", bo::bo_npoint(points_of(opt), order8_of(opt)));
    return kExitOk;
}

int run_qdim(const Options& opt) {
    print_series(opt, "qdim", bo::qdim(opt.level, lambda_of(opt), order8_of(opt)));
    return kExitOk;
}

int run_oracle(const Options& opt) {
    print_series(opt, "oracle",
                 bo::oracle_npoint(opt.level, lambda_of(opt), points_of(opt), order8_of(opt),
                                   opt.threads));
    return kExitOk;
}

int run_kostka(const Options& opt) {
    const auto table = bo::kostka_table(opt.size, opt.level, opt.lo, opt.hi);
    const auto& m = opt.inverse ? table.kinv : table.k;
    std::cout << (opt.inverse ? "\"Kinv\"" : "\"K\"");
    for (const auto& mu : table.index) std::cout << ",\"" << mu.str() << "\"";
    std::cout << "\n";
    for (size_t i = 0; i < table.index.size(); ++i) {
        std::cout << "\"" << table.index[i].str() << "\"";
        for (size_t j = 0; j < table.index.size(); ++j) std::cout << "," << m[i][j];
        std::cout << "\n";
    }
    return kExitOk;
}

int run_verify(const Options& opt, bool order_given, bool level_given) {
    std::vector<bo::VerifyReport> reports;
    if (opt.id == "all") {
        reports = bo::verify_battery(order_given ? std::optional<int>(opt.order) : std::nullopt);
    } else {
        bo::VerifyOptions vopts;
        if (level_given) vopts.level = opt.level;
        if (!opt.lambda.empty()) {
            if (level_given && static_cast<int>(opt.lambda.size()) != opt.level)
                throw std::domain_error("lambda: expected " + std::to_string(opt.level) +
                                        " entries, got " + std::to_string(opt.lambda.size()));
            try {
                vopts.lambda = bo::GenPartition(opt.lambda);
            } catch (const std::invalid_argument&) {
                throw std::domain_error("lambda: entries must be weakly decreasing");
            }
            if (!level_given) vopts.level = static_cast<int>(opt.lambda.size());
        }
        vopts.pts = points_of(opt);
        if (order_given) vopts.order_q = opt.order;
        vopts.charge = opt.charge;
        reports.push_back(bo::verify(opt.id, vopts));
    }
    bool all_equal = true;
    for (const auto& r : reports) all_equal &= r.equal;
    if (opt.json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            nlohmann::ordered_json j;
            j["id"] = r.id;
            j["params"] = r.params;
            j["order8"] = r.order8;
            j["equal"] = r.equal;
            if (r.first_diff_exp8) j["first_diff_exp8"] = *r.first_diff_exp8;
            arr.push_back(std::move(j));
        }
        nlohmann::ordered_json doc;
        doc["reports"] = std::move(arr);
        doc["all_equal"] = all_equal;
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << bo::to_string(r) << "\n";
        std::cout << (all_equal ? "all identities hold" : "verification FAILED") << "\n";
    }
    return all_equal ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact level-l Bloch-Okounkov n-point correlation functions: theta-determinant "
                 "formula, inverse-Kostka formula, and a Fock-space trace oracle.\n"
                 "Points are entered through s = t^(1/2); the operator argument is t = s^2."};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_points) {
        sub->add_option("--order", opt.order,
                        "truncation: coefficients of q^e for e < order are exact")
            ->capture_default_str();
        sub->add_flag("--json", opt.json, "emit JSON (series schema plus metadata envelope)");
        sub->add_flag("--csv", opt.csv, "emit CSV");
        sub->add_option("--threads", opt.threads, "worker threads for trace summation")
            ->capture_default_str();
        if (with_points)
            sub->add_option("--s", opt.s_values,
                            "comma-separated rational square roots s_i = t_i^(1/2), e.g. 2,3/2 "
                            "(note: t_i = s_i^2)")
                ->delimiter(',');
    };

    auto* npoint = app.add_subcommand("npoint", "n-point function of a level-l module");
    npoint->add_option("--level", opt.level, "positive integral level")->capture_default_str();
    npoint->add_option("--lambda", opt.lambda, "weakly decreasing integer entries, e.g. 1,0,-1")
        ->delimiter(',');
    npoint->add_option("--method", opt.method, "theta | kostka | oracle | all")
        ->capture_default_str();
    add_common(npoint, true);

    auto* bo_cmd = app.add_subcommand("bo", "level-1 charge-0 n-point function");
    add_common(bo_cmd, true);

    auto* qdim_cmd = app.add_subcommand("qdim", "graded dimension of a level-l module");
    qdim_cmd->add_option("--level", opt.level, "positive integral level")->capture_default_str();
    qdim_cmd->add_option("--lambda", opt.lambda, "weakly decreasing integer entries")
        ->delimiter(',');
    add_common(qdim_cmd, false);

    auto* oracle_cmd = app.add_subcommand("oracle", "n-point function by Fock-space trace");
    oracle_cmd->add_option("--level", opt.level, "positive integral level")->capture_default_str();
    oracle_cmd->add_option("--lambda", opt.lambda, "weakly decreasing integer entries")
        ->delimiter(',');
    add_common(oracle_cmd, true);

    auto* kostka_cmd = app.add_subcommand("kostka", "dump a Kostka table (CSV with index headers)");
    kostka_cmd->add_option("--size", opt.size, "common size of the indexing partitions")
        ->capture_default_str();
    kostka_cmd->add_option("--level", opt.level, "tuple length")->capture_default_str();
    kostka_cmd->add_option("--lo", opt.lo, "smallest allowed entry")->capture_default_str();
    kostka_cmd->add_option("--hi", opt.hi, "largest allowed entry")->capture_default_str();
    kostka_cmd->add_flag("--inverse", opt.inverse, "dump the inverse matrix instead");

    auto* verify_cmd = app.add_subcommand("verify", "check combinatorial identities exactly");
    verify_cmd->add_option("--id", opt.id, "identity id or 'all'")->capture_default_str();
    auto* verify_level = verify_cmd->add_option("--level", opt.level, "level/tuple length");
    verify_cmd->add_option("--lambda", opt.lambda, "weakly decreasing integer entries")
        ->delimiter(',');
    verify_cmd->add_option("--k", opt.charge, "charge for ok-shift")->capture_default_str();
    auto* verify_order = verify_cmd->add_option("--order", opt.order, "check through q^order");
    verify_cmd->add_option("--s", opt.s_values, "rational square roots s_i = t_i^(1/2)")
        ->delimiter(',');
    verify_cmd->add_flag("--json", opt.json, "emit reports as JSON");
    verify_cmd->add_option("--threads", opt.threads, "worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (opt.level < 1) throw std::domain_error("level: must be a positive integer");
        if (opt.threads < 1) throw std::domain_error("threads: must be a positive integer");
        if (npoint->parsed()) return run_npoint(opt);
        if (bo_cmd->parsed()) return run_bo(opt);
        if (qdim_cmd->parsed()) return run_qdim(opt);
        if (oracle_cmd->parsed()) return run_oracle(opt);
        if (kostka_cmd->parsed()) return run_kostka(opt);
        if (verify_cmd->parsed())
            return run_verify(opt, verify_order->count() > 0, verify_level->count() > 0);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitUsage;
}
