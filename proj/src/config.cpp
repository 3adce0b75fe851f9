#include "cqs/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cqs/multicomb.hpp"

namespace cqs {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> parse_array(const std::string& v) {
    std::string s = trim(v);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

long long parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        long long x = std::stoll(trim(v), &pos);
        if (pos != trim(v).size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    auto s = trim(v);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ConfigError("key '" + key + "': expected a boolean, got '" + v + "'");
}

template <class K>
bool separated_in(const FieldSpec& f) {
    auto par = make_params<K>(f);
    for (int i = 0; i < par.r(); ++i)
        for (int j = i + 1; j < par.r(); ++j)
            if ((par.Q[i] - par.Q[j]).is_zero()) return false;
    return true;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {"relations", "schur",   "s0",      "bar",     "z",
                                                 "tensor",    "flat",    "decomp",  "product", "semisimple"};
    return ids;
}

std::vector<std::string> preset_names() { return {"n2r2", "n3r2", "n3r1", "n2r2q", "n3r2q", "n3r1q"}; }

RunConfig preset(const std::string& name) {
    RunConfig c;
    auto fp = [](std::uint32_t p, std::string q, std::vector<std::string> Q) {
        FieldSpec f;
        f.kind = FieldSpec::Kind::Prime;
        f.p = p;
        f.q = std::move(q);
        f.Q = std::move(Q);
        return f;
    };
    auto rat = [](std::vector<std::string> Q) {
        FieldSpec f;
        f.kind = FieldSpec::Kind::Rational;
        f.q = "2";
        f.Q = std::move(Q);
        return f;
    };
    if (name == "n2r2") {
        c.n = 2, c.r = 2, c.field = fp(5, "2", {"1", "3"});
    } else if (name == "n3r2") {
        c.n = 3, c.r = 2, c.field = fp(7, "3", {"1", "2"});
    } else if (name == "n3r1") {
        c.n = 3, c.r = 1, c.field = fp(5, "2", {"1"});
    } else if (name == "n2r2q") {
        c.n = 2, c.r = 2, c.field = rat({"1", "3"});
    } else if (name == "n3r2q") {
        c.n = 3, c.r = 2, c.field = rat({"1", "3"});
    } else if (name == "n3r1q") {
        c.n = 3, c.r = 1, c.field = rat({"1"});
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }
    c.m.assign(c.r, c.n);
    return c;
}

void apply_key(RunConfig& c, const std::string& key, const std::string& raw) {
    const std::string v = trim(raw);
    if (key == "preset") {
        c = preset(v);
    } else if (key == "n") {
        c.n = static_cast<int>(parse_int(key, v));
    } else if (key == "r") {
        c.r = static_cast<int>(parse_int(key, v));
    } else if (key == "m") {
        c.m.clear();
        for (const auto& x : parse_array(v)) c.m.push_back(static_cast<int>(parse_int(key, x)));
    } else if (key == "field") {
        if (v == "Fp" || v == "fp" || v == "prime")
            c.field.kind = FieldSpec::Kind::Prime;
        else if (v == "Q" || v == "rational")
            c.field.kind = FieldSpec::Kind::Rational;
        else
            throw ConfigError("key 'field': expected Fp or Q, got '" + v + "'");
    } else if (key == "p") {
        auto p = parse_int(key, v);
        if (p < 2 || p > 65521) throw ConfigError("key 'p': out of range");
        c.field.p = static_cast<std::uint32_t>(p);
    } else if (key == "q") {
        c.field.q = v;
    } else if (key == "Q") {
        c.field.Q = parse_array(v);
    } else if (key == "s") {
        c.field.Q.clear();
        for (const auto& x : parse_array(v)) c.field.Q.push_back("q^" + std::to_string(parse_int(key, x)));
    } else if (key == "poset") {
        c.poset = v;
    } else if (key == "seed") {
        c.seed = static_cast<std::uint64_t>(parse_int(key, v));
    } else if (key == "cache_dir") {
        c.cache_dir = v;
    } else if (key == "out") {
        c.out = v;
    } else if (key == "checks") {
        c.checks = parse_array(v);
    } else if (key == "samples") {
        c.samples = static_cast<std::size_t>(parse_int(key, v));
    } else if (key == "exhaustive_up_to") {
        c.exhaustive_up_to = static_cast<int>(parse_int(key, v));
    } else if (key == "max_schur_dim") {
        c.max_schur_dim = static_cast<std::size_t>(parse_int(key, v));
    } else if (key == "max_pairs") {
        c.max_pairs = static_cast<std::size_t>(parse_int(key, v));
    } else if (key == "max_module_bytes") {
        c.max_module_bytes = static_cast<std::size_t>(parse_int(key, v));
    } else if (key == "timings") {
        c.timings = parse_bool(key, v);
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

RunConfig parse_config(const std::string& text, RunConfig base) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        apply_key(base, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
    return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

bool separated(const RunConfig& c) {
    return c.field.prime() ? separated_in<Fp>(c.field) : separated_in<Rational>(c.field);
}

bool flat_applicable(const RunConfig& c) {
    if (c.poset != "ptilde") return false;
    for (int mi : c.m)
        if (mi < c.n) return false;
    return separated(c);
}

void validate(RunConfig& c) {
    if (c.n < 1 || c.n > 4) throw ConfigError("n must be between 1 and 4");
    if (c.r < 1 || c.r > 4) throw ConfigError("r must be between 1 and 4");
    if (c.m.empty()) c.m.assign(c.r, c.n);
    if (static_cast<int>(c.m.size()) != c.r) throw ConfigError("m must have r entries");
    for (int mi : c.m)
        if (mi < 1) throw ConfigError("m entries must be positive");
    if (static_cast<int>(c.field.Q.size()) != c.r) throw ConfigError("Q must have r entries");
    if (c.field.prime() && !is_prime(c.field.p)) throw ConfigError("p must be prime");
    if (c.poset != "ptilde" && c.poset != "partitions-only")
        throw ConfigError("poset must be ptilde or partitions-only");
    if (c.poset == "ptilde" && !Poset::ptilde(c.n, c.r, c.m).is_saturated())
        throw ConfigError("the poset for this m is not saturated; raise the m_i");
    try {
        if (c.field.prime()) {
            Fp::ModulusScope scope(c.field.p);
            make_params<Fp>(c.field);
        } else {
            make_params<Rational>(c.field);
        }
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad parameters: ") + e.what());
    }
    for (const auto& id : c.checks) {
        const auto& ids = suite_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw ConfigError("unknown check id '" + id + "'");
        if (id == "flat" || id == "product") {
            bool sep = false;
            if (c.field.prime()) {
                Fp::ModulusScope scope(c.field.p);
                sep = flat_applicable(c);
            } else {
                sep = flat_applicable(c);
            }
            if (!sep) throw ConfigError("check '" + id + "' needs distinct Q_i, m_i >= n and the ptilde poset");
        }
    }
}

nlohmann::json to_json(const RunConfig& c) {
    nlohmann::json j;
    j["n"] = c.n;
    j["r"] = c.r;
    j["m"] = c.m;
    j["field"] = c.field.field_name();
    if (c.field.prime()) j["p"] = c.field.p;
    j["q"] = c.field.q;
    j["Q"] = c.field.Q;
    j["poset"] = c.poset;
    j["seed"] = c.seed;
    j["checks"] = c.checks;
    j["samples"] = c.samples;
    j["exhaustive_up_to"] = c.exhaustive_up_to;
    return j;
}

}  // namespace cqs
