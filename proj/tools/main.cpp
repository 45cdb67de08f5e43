#include <algorithm>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symq/config.hpp"
#include "symq/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitContradiction = 1;
constexpr int kExitUsage = 2;

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_kv_text(const json& j) {
    for (auto it = j.begin(); it != j.end(); ++it)
        std::cout << it.key() << ": " << it.value().dump() << "\n";
}

int cmd_info(const std::string& config_path, const std::string& output) {
    symq::LoadedInstance inst = symq::load_instance_file(config_path);
    json j;
    if (inst.symplectic) {
        const symq::SymplecticQuandle& sq = *inst.symplectic;
        const symq::Ring& ring = sq.module.ring();
        j["ring_order"] = ring.size();
        j["characteristic"] = ring.characteristic();
        j["integral_domain"] = ring.is_integral_domain();
        j["nondegenerate"] = symq::is_nondegenerate(sq.module, sq.form);
        j["unimodular"] = symq::is_unimodular(sq.module, sq.form);
        auto pair = symq::find_hyperbolic_pair(sq.module, sq.form);
        j["hyperbolic_pair"] =
            pair ? json::array({sq.module.label(pair->first), sq.module.label(pair->second)})
                 : json(nullptr);
        j["trivial"] = symq::is_trivial_symplectic(sq.module, sq.form);
    } else {
        j["trivial"] = inst.quandle.is_trivial();
    }
    j["quandle_size"] = inst.quandle.size();
    j["kei"] = inst.quandle.is_kei();

    if (output == "json")
        print_json(j);
    else
        print_kv_text(j);
    return kExitOk;
}

int cmd_enumerate(const std::string& config_path, const std::string& output, long long limit,
                  int threads) {
    symq::LoadedInstance inst = symq::load_instance_file(config_path);
    symq::EnumerationResult res =
        symq::enumerate_good_involutions(inst.quandle, {.limit = limit, .threads = threads});

    json involutions = json::array();
    for (const auto& p : res.involutions)
        involutions.push_back(symq::cycle_notation(p, inst.quandle.labels()));

    if (output == "json") {
        json j;
        j["complete"] = res.complete;
        j["count"] = res.total;
        j["involutions"] = involutions;
        print_json(j);
    } else {
        std::cout << "count: " << res.total << "\n";
        std::cout << "complete: " << (res.complete ? "true" : "false") << "\n";
        for (const auto& s : involutions) std::cout << s.get<std::string>() << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& name, const std::string& output,
               const symq::VerifyOptions& opts) {
    std::vector<std::string> names;
    if (name == "all") {
        names = symq::check_names();
    } else {
        const auto& known = symq::check_names();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            std::cerr << "error: unknown check \"" << name << "\"\n";
            return kExitUsage;
        }
        names.push_back(name);
    }

    std::vector<symq::CheckReport> reports = symq::run_checks(names, opts);
    if (output == "json")
        print_json(symq::reports_to_json(reports));
    else
        std::cout << symq::reports_to_text(reports);
    return symq::any_contradiction(reports) ? kExitContradiction : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symplectic quandles over finite rings: construction, good-involution "
                 "enumeration, and claim verification"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output = "json";
    long long limit = 0;
    symq::VerifyOptions vopts;
    std::string check_name;

    auto* info = app.add_subcommand("info", "ring, form and quandle facts for a config");
    info->add_option("--config", config_path, "JSON config file")->required();
    info->add_option("--output", output, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* enumerate = app.add_subcommand("enumerate", "enumerate all good involutions");
    enumerate->add_option("--config", config_path, "JSON config file")->required();
    enumerate->add_option("--output", output, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    enumerate->add_option("--limit", limit, "return at most N involutions (0 = all)");
    enumerate->add_option("--threads", vopts.threads, "worker threads");

    auto* verify = app.add_subcommand("verify", "run named verification checks");
    verify->add_option("name", check_name, "check name or \"all\"")->required();
    verify->add_option("--output", output, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--threads", vopts.threads, "worker threads");
    verify->add_option("--samples", vopts.samples, "sample count for the gaussian check");
    verify->add_option("--coeff-bound", vopts.coeff_bound, "coefficient box for sampling");
    verify->add_option("--seed", vopts.seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*info) return cmd_info(config_path, output);
        if (*enumerate) return cmd_enumerate(config_path, output, limit, vopts.threads);
        if (*verify) return cmd_verify(check_name, output, vopts);
    } catch (const symq::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
