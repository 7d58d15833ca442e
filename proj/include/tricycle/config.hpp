#pragma once

#include <optional>
#include <string>

#include "tricycle/ode.hpp"
#include "tricycle/types.hpp"

namespace tricycle {

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct InitialSpec {
    enum class Kind { explicit_state, circle, inflectional };
    Kind kind{Kind::circle};
    double k{0.707};       // inflectional modulus
    PhaseState state;      // explicit_state
};

struct RunConfig {
    Params lengths;
    InitialSpec initial;
    double t0{0.0};
    double t1{20.0};
    IntegratorSpec integrator;
    double sample_dt{0.01};
    std::string out_prefix{"run"};
};

/// Parse a JSON config document (schema 1). Unknown keys are rejected;
/// every numeric field must be finite. Lengths accept numbers or exact
/// fraction strings like "1/2".
RunConfig parse_config_text(const std::string& json_text);
RunConfig load_config_file(const std::string& path);

/// "3/4" -> 0.75, "0.5" -> 0.5; throws ConfigError on malformed input.
double parse_rational_or_decimal(const std::string& text);

/// Resolve the configured initial state (may throw for bad moduli).
PhaseState resolve_initial_state(const RunConfig& cfg);

}  // namespace tricycle
