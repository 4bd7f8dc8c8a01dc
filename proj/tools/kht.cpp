// kht: tables, criterion verdicts and verification runs for K-homogeneous
// multiplication tuples on the classical domains.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "kht/criteria.hpp"
#include "kht/oracle/report.hpp"
#include "kht/table.hpp"

namespace {

using kht::Execution;
using nlohmann::ordered_json;

struct Options {
    std::string domain;
    std::string weights;
    std::string weights2;
    int max_weight = 4;
    double tol = 1e-8;
    std::string seed = "1,2";
    std::string format = "pretty";
    std::string out;
    std::string config;
    bool trust_envelope = false;
    bool serial = false;
};

kht::oracle::SeedPair parse_seed(const std::string& text) {
    kht::oracle::SeedPair seed;
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            seed.hi = std::stoull(text);
            seed.lo = 1;
        } else {
            seed.hi = std::stoull(text.substr(0, comma));
            seed.lo = std::stoull(text.substr(comma + 1));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--seed", "expected 'n' or 'hi,lo', got '" + text + "'");
    }
    return seed;
}

// Flat key=value defaults; any flag given on the command line wins.
void apply_config(const CLI::App& cmd, Options& opt) {
    if (opt.config.empty()) return;
    std::ifstream in(opt.config);
    if (!in) throw CLI::ValidationError("--config", "cannot read " + opt.config);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", opt.config + ":" + std::to_string(lineno) +
                                                       ": expected key=value");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto take = [&](const char* key, const char* flag, auto& slot) {
        auto it = kv.find(key);
        if (it == kv.end() || cmd.count(flag) > 0) return;
        std::istringstream text(it->second);
        text >> slot;
        if (text.fail()) throw CLI::ValidationError("--config", std::string("bad ") + key);
    };
    take("domain", "--domain", opt.domain);
    take("weights", "--weights", opt.weights);
    take("weights2", "--weights2", opt.weights2);
    take("max-weight", "--max-weight", opt.max_weight);
    take("tol", "--tol", opt.tol);
    take("seed", "--seed", opt.seed);
    take("format", "--format", opt.format);
    take("out", "--out", opt.out);
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::string path = opt.out;
    const char* dir = std::getenv("KHT_OUT_DIR");
    if (dir && *dir && path.front() != '/') path = std::string(dir) + "/" + path;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path);
    file << text;
    std::cerr << "wrote " << path << "\n";
}

int run_invariants(const Options& opt) {
    const kht::DomainSpec spec = kht::parse_domain(opt.domain);
    const auto coords = kht::ambient_coordinates(spec);
    if (opt.format == "json") {
        ordered_json j;
        j["domain"] = kht::to_string(spec);
        j["r"] = spec.rank;
        j["a"] = kht::to_fraction_string(spec.a);
        j["b"] = spec.b;
        j["d"] = spec.dim;
        ordered_json cs = ordered_json::array();
        for (const auto& c : coords) cs.push_back(c.label);
        j["coordinates"] = std::move(cs);
        emit(opt, j.dump(2) + "\n");
    } else {
        std::ostringstream text;
        text << kht::to_string(spec) << ": r=" << spec.rank
             << " a=" << kht::to_fraction_string(spec.a) << " b=" << spec.b
             << " d=" << spec.dim << "\ncoordinates:";
        for (const auto& c : coords) text << " " << c.label;
        text << "\n";
        emit(opt, text.str());
    }
    return 0;
}

void require_weights(const Options& opt) {
    if (opt.weights.empty())
        throw CLI::ValidationError("--weights", "required (flag or config file)");
}

int run_table(const Options& opt) {
    const kht::DomainSpec spec = kht::parse_domain(opt.domain);
    require_weights(opt);
    const kht::WeightSequence w = kht::parse_weights(spec, opt.weights);
    const auto rows = kht::spectral_table(
        w, opt.max_weight, opt.serial ? Execution::Serial : Execution::Parallel);
    if (opt.format == "csv")
        emit(opt, kht::table_to_csv(rows, spec.rank));
    else if (opt.format == "json")
        emit(opt, kht::table_to_json(rows).dump(2) + "\n");
    else
        emit(opt, kht::table_to_pretty(rows));
    return 0;
}

int run_check(const Options& opt, const std::string& name) {
    const kht::DomainSpec spec = kht::parse_domain(opt.domain);
    if (name != "hardy-identity" && opt.weights.empty())
        throw CLI::ValidationError("--weights", "required for " + name);
    kht::Verdict verdict;
    if (name == "bounded") {
        verdict = kht::boundedness_sup(kht::parse_weights(spec, opt.weights), opt.max_weight);
    } else if (name == "closed-range") {
        verdict = kht::closed_range_inf(kht::parse_weights(spec, opt.weights), opt.max_weight);
    } else if (name == "ess-normal") {
        const kht::WeightSequence w = kht::parse_weights(spec, opt.weights);
        verdict = kht::essential_normality(w.nu(), spec);
    } else if (name == "hardy-identity") {
        verdict = kht::hardy_identity_check(spec, opt.max_weight);
    } else if (name == "unitary-equiv" || name == "similar") {
        if (opt.weights2.empty())
            throw CLI::ValidationError("--weights2", "required for " + name);
        const kht::WeightSequence w1 = kht::parse_weights(spec, opt.weights);
        const kht::WeightSequence w2 = kht::parse_weights(spec, opt.weights2);
        verdict = (name == "unitary-equiv")
                      ? kht::unitary_equivalence(w1, w2, opt.max_weight)
                      : kht::similarity(w1, w2, opt.max_weight, opt.trust_envelope);
    } else {
        throw CLI::ValidationError("criterion", "unknown criterion '" + name + "'");
    }
    emit(opt, verdict.to_json().dump(2) + "\n");
    return verdict.exit_code();
}

int run_verify(const Options& opt) {
    const kht::DomainSpec spec = kht::parse_domain(opt.domain);
    require_weights(opt);
    const kht::WeightSequence w = kht::parse_weights(spec, opt.weights);
    const auto report = kht::oracle::verify_run(
        spec, w, opt.max_weight, opt.tol, parse_seed(opt.seed),
        opt.serial ? Execution::Serial : Execution::Parallel);
    emit(opt, report.to_json().dump(2) + "\n");
    return report.passed ? 0 : 1;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--domain", opt.domain, "domain, e.g. I:2,2 / II:3 / III:4 / IV:6")
        ->required();
    // Not marked required at the parser level so a config file can supply it;
    // run_* functions validate after the config merge.
    cmd->add_option(
        "--weights", opt.weights,
        "weights: bergman:<nu> | hardy | classical-bergman | table:<csv> | rule:<name>");
    cmd->add_option("--weights2", opt.weights2, "second weight sequence (comparisons)");
    cmd->add_option("--max-weight", opt.max_weight, "signature weight truncation");
    cmd->add_option("--tol", opt.tol, "verification tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "RNG seed 'n' or 'hi,lo'");
    cmd->add_option("--format", opt.format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--out", opt.out, "output path (relative paths join KHT_OUT_DIR)");
    cmd->add_option("--config", opt.config, "flat key=value config file");
    cmd->add_flag("--serial", opt.serial, "disable parallel execution");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral tables and verdicts for K-homogeneous operator tuples"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* invariants = app.add_subcommand("invariants", "domain invariants (r,a,b,d)");
    add_common(invariants, opt);

    CLI::App* table = app.add_subcommand("table", "tau/delta/eta table over |s| <= max-weight");
    add_common(table, opt);

    CLI::App* check = app.add_subcommand("check", "run one decision criterion");
    std::string criterion;
    check->add_option("criterion", criterion,
                      "bounded | closed-range | ess-normal | hardy-identity | "
                      "unitary-equiv | similar")
        ->required();
    add_common(check, opt);
    check->add_flag("--trust-envelope", opt.trust_envelope,
                    "accept a bounded truncated envelope as Holds for rule weights");

    CLI::App* verify = app.add_subcommand("verify", "brute-force oracle verification run");
    add_common(verify, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (invariants->parsed()) {
            apply_config(*invariants, opt);
            return run_invariants(opt);
        }
        if (table->parsed()) {
            apply_config(*table, opt);
            return run_table(opt);
        }
        if (check->parsed()) {
            apply_config(*check, opt);
            return run_check(opt, criterion);
        }
        apply_config(*verify, opt);
        return run_verify(opt);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
