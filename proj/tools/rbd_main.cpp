// Command-line front end: verify a configuration end to end, search for
// disjoint Wahl chain pairs, or search the chain-orthogonal lattice for a
// Seiberg-Witten chamber certificate.

#include "rbd/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParseError = 1;
constexpr int kExitValidationFailure = 2;
constexpr int kExitCheckFailure = 3;
constexpr int kExitNoCertificate = 4;

void emit(const rbd::Json& j, const std::string& text, const std::string& json_path) {
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << j.dump(2) << "\n";
    }
    std::cout << text;
}

int cmd_verify(const std::string& path, const std::string& json_path, bool approx) {
    rbd::ConfigFile cf = rbd::load_config(path);
    rbd::VerifyOutcome outcome = rbd::run_verify(cf, approx);
    emit(outcome.json, outcome.text, json_path);
    return outcome.exit_code;
}

int cmd_search_chains(const std::string& path, const std::string& json_path,
                      std::size_t max_pairs) {
    rbd::ConfigFile cf = rbd::load_config(path);
    rbd::Configuration cfg = cf.build();
    rbd::SubchainSearchResult res = rbd::find_wahl_subchains(cfg, max_pairs);

    rbd::Json j;
    std::ostringstream text;
    if (res.aborted) {
        j["aborted"] = true;
        text << "search aborted: too many candidate curves\n";
    }
    rbd::Json chains = rbd::Json::array();
    for (const auto& c : res.chains) {
        rbd::Json a = rbd::Json::array();
        for (const auto& x : c.descriptor.a) a.push_back(x.str());
        chains.push_back({{"curves", c.curves},
                          {"hj", a},
                          {"p", c.descriptor.p.str()},
                          {"q", c.descriptor.q.str()}});
    }
    j["chains"] = chains;
    rbd::Json pairs = rbd::Json::array();
    for (const auto& [i, k] : res.pairs) {
        pairs.push_back({{"first", res.chains[i].curves}, {"second", res.chains[k].curves}});
        text << "pair: (";
        for (const auto& n : res.chains[i].curves) text << n << " ";
        text << "| ";
        for (const auto& n : res.chains[k].curves) text << n << " ";
        text << ")\n";
    }
    j["pairs"] = pairs;
    j["truncated"] = res.truncated;
    text << res.chains.size() << " Wahl chains, " << res.pairs.size() << " disjoint pairs"
         << (res.truncated ? " (truncated)" : "") << "\n";
    emit(j, text.str(), json_path);
    return kExitOk;
}

int cmd_find_certificate(const std::string& path, const std::string& json_path, long bound) {
    rbd::ConfigFile cf = rbd::load_config(path);
    rbd::Configuration cfg = cf.build();

    rbd::Json j;
    std::ostringstream text;
    bool declared_ok = true;
    if (cf.has_alpha) {
        rbd::ChamberCertificate cert =
            rbd::verify_certificate(cfg, cf.alpha(cfg.basis_size()));
        j["declared"] = {{"alpha_squared", cert.alpha_sq.str()},
                         {"k_dot_alpha", cert.k_dot_alpha.str()},
                         {"h_dot_alpha", cert.h_dot_alpha.str()},
                         {"accepted", cert.accepted}};
        declared_ok = cert.accepted;
        text << "declared alpha: alpha^2=" << cert.alpha_sq << " K.alpha=" << cert.k_dot_alpha
             << " h.alpha=" << cert.h_dot_alpha << " -> "
             << (cert.accepted ? "accepted" : "rejected") << "\n";
    }
    auto found = rbd::search_certificate(cfg, bound);
    if (found) {
        j["found"] = {{"alpha", rbd::divisor_json(found->alpha)},
                      {"alpha_squared", found->alpha_sq.str()},
                      {"k_dot_alpha", found->k_dot_alpha.str()},
                      {"h_dot_alpha", found->h_dot_alpha.str()},
                      {"bound", bound}};
        text << "search (bound " << bound << "): found alpha with alpha^2="
             << found->alpha_sq << " K.alpha=" << found->k_dot_alpha << "\n";
    } else {
        j["found"] = nullptr;
        text << "search (bound " << bound << "): no certificate in the box\n";
    }
    emit(j, text.str(), json_path);
    if (!found) return kExitNoCertificate;
    return declared_ok ? kExitOk : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational blow-down verifier for exotic 4-manifold constructions"};
    app.require_subcommand(1);

    std::string path, json_path;
    bool approx = false;
    std::size_t max_pairs = 50;
    long bound = 6;

    auto* verify = app.add_subcommand("verify", "run every declared check on a configuration");
    verify->add_option("file", path, "configuration file")->required();
    verify->add_option("--json", json_path, "write the machine-readable report here");
    verify->add_flag("--approx", approx, "add decimal renderings next to exact rationals");

    auto* search = app.add_subcommand("search-chains", "enumerate disjoint Wahl chain pairs");
    search->add_option("file", path, "configuration file")->required();
    search->add_option("--max-pairs", max_pairs, "cap on reported pairs");
    search->add_option("--json", json_path, "write the machine-readable report here");

    auto* cert = app.add_subcommand("find-certificate", "search for a chamber certificate");
    cert->add_option("file", path, "configuration file")->required();
    cert->add_option("--bound", bound, "coefficient box bound on the orthogonal complement");
    cert->add_option("--json", json_path, "write the machine-readable report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(path, json_path, approx);
        if (search->parsed()) return cmd_search_chains(path, json_path, max_pairs);
        return cmd_find_certificate(path, json_path, bound);
    } catch (const rbd::ConfigError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
