#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqs/field.hpp"

namespace cqs {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n = 2;
    int r = 2;
    std::vector<int> m;  // empty: m_i = n
    FieldSpec field;
    std::string poset = "ptilde";  // or "partitions-only"
    std::uint64_t seed = 1;
    std::string cache_dir;
    std::string out;
    std::vector<std::string> checks;  // empty: every suite that applies
    std::size_t samples = 300;        // products per check when not exhaustive
    int exhaustive_up_to = 2;         // exhaustive checks for n at most this
    std::size_t max_schur_dim = 40000;
    std::size_t max_pairs = 2000000;
    std::size_t max_module_bytes = std::size_t(2) << 30;
    bool timings = false;
};

// Known suites, in the order verify runs them.
const std::vector<std::string>& suite_ids();

// n2r2 (F_5, q=2, Q=(1,3)), n3r2 (F_7, q=3, Q=(1,2)), n3r1 (F_5, q=2),
// and rational variants n2r2q, n3r2q, n3r1q with q=2.
RunConfig preset(const std::string& name);
std::vector<std::string> preset_names();

// key = value lines; '#' starts a comment; arrays are [a, b, ...].
// Keys: preset n r m field p q Q s poset seed cache_dir out checks samples
// exhaustive_up_to max_schur_dim max_pairs max_module_bytes timings. A preset key resets
// the configuration before later keys apply.
void apply_key(RunConfig& c, const std::string& key, const std::string& value);
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

// Fills defaults (m, Q count) and checks consistency. Throws ConfigError.
void validate(RunConfig& c);

// Q_i - Q_j invertible for i != j, as strings evaluated in the field.
bool separated(const RunConfig& c);
bool flat_applicable(const RunConfig& c);  // separated and m_i >= n, ptilde

nlohmann::json to_json(const RunConfig& c);

}  // namespace cqs
