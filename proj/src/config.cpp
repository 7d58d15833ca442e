#include "tricycle/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>

#include "tricycle/curves.hpp"
#include "tricycle/sim.hpp"

namespace tricycle {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw ConfigError("config: unknown key '" + it.key() + "' in " + where);
        }
    }
}

double finite_number(const json& v, const std::string& name) {
    if (!v.is_number()) throw ConfigError("config: " + name + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError("config: " + name + " must be finite");
    return x;
}

double length_value(const json& v, const std::string& name) {
    if (v.is_string()) {
        const double x = parse_rational_or_decimal(v.get<std::string>());
        if (!(x > 0.0)) throw ConfigError("config: " + name + " must be positive");
        return x;
    }
    const double x = finite_number(v, name);
    if (!(x > 0.0)) throw ConfigError("config: " + name + " must be positive");
    return x;
}

}  // namespace

double parse_rational_or_decimal(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const double v = std::stod(text, &used);
            if (used != text.size() || !std::isfinite(v)) throw ConfigError("bad number");
            return v;
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        const double n = std::stod(num, &used);
        if (used != num.size()) throw ConfigError("bad numerator");
        const double d = std::stod(den, &used);
        if (used != den.size() || d == 0.0) throw ConfigError("bad denominator");
        const double v = n / d;
        if (!std::isfinite(v)) throw ConfigError("bad value");
        return v;
    } catch (const ConfigError&) {
        throw ConfigError("cannot parse '" + text + "' as a rational or decimal");
    } catch (const std::exception&) {
        throw ConfigError("cannot parse '" + text + "' as a rational or decimal");
    }
}

RunConfig parse_config_text(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    require_keys(doc,
                 {"schema", "lengths", "initial", "t_span", "integrator", "sample_dt", "out"},
                 "top level");
    if (!doc.contains("schema") || !doc["schema"].is_number_integer() ||
        doc["schema"].get<int>() != 1) {
        throw ConfigError("config: schema field must be the integer 1");
    }

    RunConfig cfg;
    if (doc.contains("lengths")) {
        const auto& L = doc["lengths"];
        require_keys(L, {"l1", "l2"}, "lengths");
        if (L.contains("l1")) cfg.lengths.l1 = length_value(L["l1"], "lengths.l1");
        if (L.contains("l2")) cfg.lengths.l2 = length_value(L["l2"], "lengths.l2");
    }
    if (doc.contains("initial")) {
        const auto& I = doc["initial"];
        require_keys(I, {"type", "k", "state"}, "initial");
        const std::string type = I.value("type", "circle");
        if (type == "circle") {
            cfg.initial.kind = InitialSpec::Kind::circle;
        } else if (type == "inflectional") {
            cfg.initial.kind = InitialSpec::Kind::inflectional;
            if (I.contains("k")) cfg.initial.k = finite_number(I["k"], "initial.k");
        } else if (type == "explicit") {
            cfg.initial.kind = InitialSpec::Kind::explicit_state;
            if (!I.contains("state")) throw ConfigError("config: explicit initial needs state");
            const auto& S = I["state"];
            require_keys(S, {"x1", "x2", "alpha1", "alpha2", "p1", "p2", "eta1", "eta2"},
                         "initial.state");
            auto g = [&](const char* k) {
                return S.contains(k) ? finite_number(S[k], std::string("state.") + k) : 0.0;
            };
            cfg.initial.state = PhaseState{{g("x1"), g("x2"), g("alpha1"), g("alpha2")},
                                           g("p1"), g("p2"), g("eta1"), g("eta2")};
        } else {
            throw ConfigError("config: initial.type must be circle|inflectional|explicit");
        }
    }
    if (doc.contains("t_span")) {
        const auto& T = doc["t_span"];
        if (!T.is_array() || T.size() != 2) throw ConfigError("config: t_span must be [t0, t1]");
        cfg.t0 = finite_number(T[0], "t_span[0]");
        cfg.t1 = finite_number(T[1], "t_span[1]");
        if (!(cfg.t1 > cfg.t0)) throw ConfigError("config: t_span must be increasing");
    }
    if (doc.contains("integrator")) {
        const auto& G = doc["integrator"];
        require_keys(G, {"method", "step", "rel_tol", "abs_tol", "max_step", "max_steps"},
                     "integrator");
        const std::string method = G.value("method", "dopri45");
        if (method == "dopri45") {
            cfg.integrator.method = IntegratorSpec::Method::dopri45;
        } else if (method == "rk4") {
            cfg.integrator.method = IntegratorSpec::Method::rk4_fixed;
        } else {
            throw ConfigError("config: integrator.method must be dopri45|rk4");
        }
        if (G.contains("step")) cfg.integrator.step = finite_number(G["step"], "step");
        if (G.contains("rel_tol")) cfg.integrator.rel_tol = finite_number(G["rel_tol"], "rel_tol");
        if (G.contains("abs_tol")) cfg.integrator.abs_tol = finite_number(G["abs_tol"], "abs_tol");
        if (G.contains("max_step")) {
            cfg.integrator.max_step = finite_number(G["max_step"], "max_step");
        }
        if (G.contains("max_steps")) {
            if (!G["max_steps"].is_number_integer()) {
                throw ConfigError("config: max_steps must be an integer");
            }
            cfg.integrator.max_steps = G["max_steps"].get<long>();
        }
        if (cfg.integrator.step <= 0 || cfg.integrator.rel_tol <= 0 ||
            cfg.integrator.abs_tol <= 0 || cfg.integrator.max_step <= 0 ||
            cfg.integrator.max_steps <= 0) {
            throw ConfigError("config: integrator settings must be positive");
        }
    }
    if (doc.contains("sample_dt")) {
        cfg.sample_dt = finite_number(doc["sample_dt"], "sample_dt");
        if (!(cfg.sample_dt > 0.0)) throw ConfigError("config: sample_dt must be positive");
    }
    if (doc.contains("out")) {
        if (!doc["out"].is_string()) throw ConfigError("config: out must be a string");
        cfg.out_prefix = doc["out"].get<std::string>();
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("config: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return parse_config_text(text);
}

PhaseState resolve_initial_state(const RunConfig& cfg) {
    switch (cfg.initial.kind) {
        case InitialSpec::Kind::circle: return circle_example_ic();
        case InitialSpec::Kind::inflectional: return inflectional_ic(cfg.initial.k);
        case InitialSpec::Kind::explicit_state: return cfg.initial.state;
    }
    throw ConfigError("config: unreachable initial kind");
}

}  // namespace tricycle
