#include <iostream>

#include <CLI11.hpp>

#include "cqs/cache.hpp"
#include "cqs/driver.hpp"

namespace {

struct Flags {
    std::string config, preset;
    std::optional<int> n, r;
    std::vector<int> m;
    std::string field, q, poset, cache_dir, out;
    std::optional<std::uint32_t> p;
    std::vector<std::string> Q, checks;
    std::vector<int> s;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    bool timings = false;
};

void add_run_flags(CLI::App* app, Flags& f) {
    app->add_option("--config", f.config, "key = value configuration file");
    app->add_option("--preset", f.preset, "n2r2, n3r2, n3r1, n2r2q, n3r2q, n3r1q");
    app->add_option("--n", f.n, "size n");
    app->add_option("--r", f.r, "level r");
    app->add_option("--m", f.m, "component lengths m_1 .. m_r")->delimiter(',');
    app->add_option("--field", f.field, "Fp or Q");
    app->add_option("--p", f.p, "prime");
    app->add_option("--q", f.q, "parameter q");
    app->add_option("--Q", f.Q, "Q_1 .. Q_r (values or q^s)")->delimiter(',');
    app->add_option("--s", f.s, "exponents s with Q_i = q^s_i")->delimiter(',');
    app->add_option("--poset", f.poset, "ptilde or partitions-only");
    app->add_option("--seed", f.seed, "random seed");
    app->add_option("--samples", f.samples, "sampled products per check");
    app->add_option("--checks", f.checks, "suites to run")->delimiter(',');
    app->add_option("--out", f.out, "output directory for report.json and CSV files");
    app->add_option("--cache-dir", f.cache_dir, "product cache directory");
    app->add_flag("--timings", f.timings, "include wall-clock timings in the report");
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        if constexpr (std::is_same_v<T, std::string>)
            s += v[i];
        else
            s += std::to_string(v[i]);
    }
    return s + "]";
}

cqs::RunConfig build_config(const Flags& f) {
    cqs::RunConfig c = cqs::preset("n2r2");
    if (!f.config.empty()) c = cqs::load_config(f.config, c);
    auto set = [&](const char* key, const std::string& v) { cqs::apply_key(c, key, v); };
    if (!f.preset.empty()) set("preset", f.preset);
    if (f.n) set("n", std::to_string(*f.n));
    if (f.r) set("r", std::to_string(*f.r));
    if (!f.m.empty()) set("m", join(f.m));
    if (!f.field.empty()) set("field", f.field);
    if (f.p) set("p", std::to_string(*f.p));
    if (!f.q.empty()) set("q", f.q);
    if (!f.Q.empty()) set("Q", join(f.Q));
    if (!f.s.empty()) set("s", join(f.s));
    if (!f.poset.empty()) set("poset", f.poset);
    if (f.seed) set("seed", std::to_string(*f.seed));
    if (f.samples) set("samples", std::to_string(*f.samples));
    if (!f.checks.empty()) set("checks", join(f.checks));
    if (!f.out.empty()) set("out", f.out);
    if (!f.cache_dir.empty()) set("cache_dir", f.cache_dir);
    if (f.timings) set("timings", "true");
    // m defaults to n when n or r changed without m
    if ((f.n || f.r) && f.m.empty() && f.config.empty()) c.m.clear();
    return c;
}

int run(const std::string& cmd, const Flags& f) {
    cqs::RunConfig cfg;
    try {
        cfg = build_config(f);
    } catch (const cqs::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cqs::kExitConfig;
    }
    auto res = cqs::run_command(cmd, cfg);
    if (cfg.out.empty()) {
        std::cout << cqs::report_text(res);
    } else {
        cqs::write_outputs(res, cfg.out);
        std::size_t failed = 0;
        for (const auto& c : res.report.value("checks", nlohmann::json::array()))
            failed += !c["pass"].get<bool>();
        std::cout << cmd << ": " << res.report["status"].get<std::string>() << ", " << failed
                  << " failed checks, report in " << cfg.out << "\n";
    }
    if (res.report.contains("error")) std::cerr << res.report["error"]["message"].get<std::string>() << "\n";
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclotomic q-Schur algebra computations"};
    app.require_subcommand(1);
    Flags f;
    int code = 0;
    for (const char* name : {"basis", "structconst", "gram", "decomp", "verify"}) {
        auto* sub = app.add_subcommand(name);
        add_run_flags(sub, f);
        sub->callback([&, name] { code = run(name, f); });
    }
    auto* cache = app.add_subcommand("cache", "inspect or clear the product cache");
    cache->require_subcommand(1);
    std::string dir;
    auto* clear = cache->add_subcommand("clear");
    auto* stat = cache->add_subcommand("stat");
    for (auto* s : {clear, stat}) s->add_option("--cache-dir", dir, "cache directory")->required();
    clear->callback([&] { std::cout << "removed " << cqs::ComposeCache(dir).clear() << " files\n"; });
    stat->callback([&] {
        auto st = cqs::ComposeCache(dir).stat();
        std::cout << st.files << " files, " << st.bytes << " bytes\n";
    });
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : cqs::kExitConfig;
    }
    return code;
}
