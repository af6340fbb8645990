#pragma once

#include <json.hpp>

#include "quiverlie/suites.hpp"

namespace quiverlie {

using Json = nlohmann::ordered_json;

// Everything a verification run depends on.  Reports are pure functions of
// this struct, byte for byte.
struct RunConfig {
    int n = 2;
    ModuleParams params = ModuleParams::from_geometry(2, Geometry{0, 1, {0, 0}});
    long long max_degree = 4;
    long long pmax = 2;
    uint64_t seed = 20240;
    long long trials = 200;
    std::vector<std::string> suites = {"serre",     "commlemmas", "crosscheck",
                                       "heisenberg", "pn",        "intertwine",
                                       "semismall",  "dims",      "recovery"};
    int workers = 1;
};

inline const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> s = {"serre",     "commlemmas", "crosscheck",
                                               "heisenberg", "pn",        "intertwine",
                                               "semismall",  "dims",      "recovery"};
    return s;
}

struct Report {
    RunConfig config;
    std::vector<SuiteResult> suites;

    bool pass() const {
        for (const auto& s : suites)
            if (!s.pass) return false;
        return true;
    }
};

inline Json params_json(const ModuleParams& p) {
    Json j;
    Json c = Json::array();
    for (const auto& x : p.all()) c.push_back(rat_str(x));
    j["c"] = c;
    if (p.geometry()) {
        j["genus"] = p.geometry()->genus;
        j["d"] = p.geometry()->d;
        j["degL"] = p.geometry()->degL;
    }
    return j;
}

inline Json report_json(const Report& r) {
    Json j;
    j["tool"] = "quiverlie";
    Json cfg;
    cfg["n"] = r.config.n;
    cfg["params"] = params_json(r.config.params);
    cfg["max_degree"] = r.config.max_degree;
    cfg["pmax"] = r.config.pmax;
    cfg["seed"] = r.config.seed;
    cfg["trials"] = r.config.trials;
    cfg["suites"] = r.config.suites;
    j["config"] = cfg;
    Json suites = Json::array();
    for (const auto& s : r.suites) {
        Json e;
        e["name"] = s.name;
        e["status"] = s.pass ? "pass" : "fail";
        e["identities"] = s.checks;
        e["pieces"] = s.pieces;
        if (s.failure) {
            Json f;
            f["relation"] = s.failure->relation;
            f["piece"] = s.failure->piece;
            f["monomial"] = s.failure->monomial;
            f["expected"] = s.failure->expected;
            f["actual"] = s.failure->actual;
            e["failure"] = f;
        } else {
            e["failure"] = nullptr;
        }
        suites.push_back(e);
    }
    j["suites"] = suites;
    j["status"] = r.pass() ? "pass" : "fail";
    return j;
}

inline std::string report_csv(const Report& r) {
    std::string out = "suite,status,identities,pieces,failure\n";
    for (const auto& s : r.suites) {
        out += s.name;
        out += s.pass ? ",pass," : ",fail,";
        out += std::to_string(s.checks) + "," + std::to_string(s.pieces) + ",";
        if (s.failure) out += "\"" + s.failure->relation + "\"";
        out += "\n";
    }
    return out;
}

inline std::string report_text(const Report& r) {
    std::string out;
    for (const auto& s : r.suites) {
        out += s.name + ": " + (s.pass ? "PASS" : "FAIL") + " (" + std::to_string(s.checks) +
               " identities, " + std::to_string(s.pieces) + " pieces)\n";
        if (s.failure) {
            out += "  first failure: " + s.failure->relation + "\n";
            out += "    piece:    " + s.failure->piece + "\n";
            out += "    monomial: " + s.failure->monomial + "\n";
            out += "    expected: " + s.failure->expected + "\n";
            out += "    actual:   " + s.failure->actual + "\n";
        }
    }
    out += std::string("overall: ") + (r.pass() ? "PASS" : "FAIL") + "\n";
    return out;
}

// Runs the selected suites.  Degrees for the heavier suites are derived from
// max_degree (and capped where enumeration cost explodes) so that a single
// knob scales the whole run.
inline Report run_suites(const RunConfig& cfg) {
    Report rep{cfg, {}};
    long long D = cfg.max_degree;
    for (const auto& name : cfg.suites) {
        if (name == "serre") {
            rep.suites.push_back(serre_suite(cfg.params, D, cfg.workers));
        } else if (name == "commlemmas") {
            rep.suites.push_back(commlemma_suite(cfg.params, std::min<long long>(D, 4), cfg.workers));
        } else if (name == "crosscheck") {
            rep.suites.push_back(crosscheck_suite(cfg.params, std::min<long long>(D, 4), cfg.workers));
        } else if (name == "heisenberg") {
            rep.suites.push_back(heisenberg_suite(cfg.params, D, cfg.pmax, cfg.workers));
        } else if (name == "pn") {
            rep.suites.push_back(pn_suite(6, cfg.workers));
        } else if (name == "intertwine") {
            rep.suites.push_back(
                intertwine_suite(RankPair(cfg.n, 2, cfg.params), 3, cfg.workers));
        } else if (name == "semismall") {
            rep.suites.push_back(semismall_suite(cfg.n, std::min<long long>(D, 4), cfg.workers));
        } else if (name == "dims") {
            rep.suites.push_back(dims_suite(cfg.n, D, std::min<long long>(D, 6),
                                            std::min<long long>(D, 6), cfg.workers));
        } else if (name == "recovery") {
            rep.suites.push_back(
                recovery_suite(cfg.n, cfg.trials, cfg.seed, 6, cfg.workers));
        } else {
            throw std::invalid_argument("unknown suite '" + name + "'");
        }
    }
    return rep;
}

inline ModuleParams params_from_json(int n, const Json& j) {
    bool has_c = j.contains("c");
    bool has_geom = j.contains("genus") || j.contains("d") || j.contains("degL");
    if (has_c && has_geom)
        throw std::invalid_argument("params: raw constants and geometry are mutually exclusive");
    if (has_c) {
        std::vector<Rat> c;
        for (const auto& e : j.at("c")) c.push_back(rat_parse(e.get<std::string>()));
        return ModuleParams(n, std::move(c));
    }
    if (has_geom) {
        Geometry g;
        g.genus = j.at("genus").get<long long>();
        g.d = j.at("d").get<long long>();
        g.degL = j.at("degL").get<std::vector<long long>>();
        return ModuleParams::from_geometry(n, g);
    }
    throw std::invalid_argument("params file needs either \"c\" or {genus,d,degL}");
}

}  // namespace quiverlie
