// Runs the presets through the driver and prints one line per acceptance
// criterion. Exit status is nonzero when any criterion fails.
#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <unistd.h>

#include "cqs/driver.hpp"

using namespace cqs;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    std::string name;
    RunConfig cfg;
    CommandResult res;
    double seconds = 0;
};

Run run(const std::string& name, const std::string& cmd, RunConfig cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Run r{name, cfg, run_command(cmd, cfg)};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "  ran " << cmd << " " << name << " in " << r.seconds << " s, exit " << r.res.exit_code << "\n";
    return r;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// Result of a criterion: pass flag and a one-line summary (first problem, or counts).
struct Verdict {
    bool pass = true;
    std::size_t checks = 0;
    std::string note;
    void fail(const std::string& why) {
        if (pass) note = why;
        pass = false;
    }
};

// Every check of the run whose id starts with one of the prefixes must be
// present and pass.
void require(Verdict& v, const Run& r, const std::vector<std::string>& prefixes) {
    if (r.res.report.contains("error")) {
        v.fail(r.name + ": " + r.res.report["error"]["message"].get<std::string>());
        return;
    }
    for (const auto& p : prefixes) {
        bool seen = false;
        for (const auto& c : r.res.report["checks"]) {
            std::string id = c["id"];
            if (!starts_with(id, p)) continue;
            seen = true;
            ++v.checks;
            if (!c["pass"].get<bool>()) v.fail(r.name + " " + id + ": " + c["witness"].get<std::string>());
        }
        if (!seen) v.fail(r.name + ": no check " + p);
    }
}

std::string witness(const Run& r, const std::string& id) {
    for (const auto& c : r.res.report["checks"])
        if (c["id"] == id) return c["witness"];
    return "";
}

bool is_identity(const json& m) {
    const auto& d = m["d"];
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d[i].size(); ++j)
            if (d[i][j].get<int>() != (i == j ? 1 : 0)) return false;
    return true;
}

RunConfig with_checks(RunConfig c, std::vector<std::string> checks) {
    c.checks = std::move(checks);
    return c;
}

}  // namespace

int main() {
    RunConfig n2r2 = preset("n2r2"), n3r2 = preset("n3r2"), n3r1 = preset("n3r1");
    RunConfig n2r2po = n2r2;
    n2r2po.poset = "partitions-only";
    // n = 2, r = 3 over F_7 with Q = (1, q^2, q^4)
    RunConfig n2r3 = parse_config("n = 2\nr = 3\nfield = Fp\np = 7\nq = 3\ns = [0, 2, 4]\nchecks = [relations]\n");

    std::cerr << "acceptance: running presets\n";
    std::vector<Run> fp = {run("n2r2", "verify", n2r2), run("n2r2/partitions-only", "verify", n2r2po),
                           run("n3r2", "verify", n3r2), run("n3r1", "verify", n3r1)};
    std::vector<Run> rat = {run("n2r2q", "verify", preset("n2r2q")), run("n3r2q", "verify", preset("n3r2q")),
                            run("n3r1q", "verify", preset("n3r1q"))};
    Run r3 = run("n2r3", "verify", n2r3);
    const Run& big = fp[2];

    std::map<int, Verdict> v;

    // 1. relations and Murphy ranks
    for (const auto* rs : {&fp, &rat})
        for (const auto& r : *rs) require(v[1], r, {"relations."});
    require(v[1], r3, {"relations."});
    auto rank_is = [&](const Run& r, const std::string& id, int k) {
        auto w = witness(r, id);
        if (!starts_with(w, "rank " + std::to_string(k) + " of")) v[1].fail(r.name + " " + id + ": " + w);
    };
    rank_is(fp[0], "relations.murphy_rank", 8);
    rank_is(fp[0], "relations.flat_murphy_rank", 8);
    rank_is(big, "relations.murphy_rank", 48);
    rank_is(big, "relations.flat_murphy_rank", 48);
    rank_is(r3, "relations.murphy_rank", 18);
    rank_is(r3, "relations.flat_murphy_rank", 18);
    v[1].note = v[1].pass ? std::to_string(v[1].checks) + " checks; ranks 8, 48, 18" : v[1].note;

    // 2. cellular basis, S0 closure and standard basis; exhaustive at n = 2, sampled at n = 3
    for (int i : {0, 1, 2})
        require(v[2], fp[i],
                {"schur.factorization", "schur.triangularity", "schur.identity", "schur.star", "schur.associativity",
                 "schur.cell_rows", "s0.c0_partition", "s0.unit", "s0.closure", "s0.standardly_based",
                 "s0.s00_ideal", "s0.f_antihom"});
    if (v[2].pass) v[2].note = std::to_string(v[2].checks) + " checks over n2r2 (both posets) and n3r2";

    // 3. forms and modules over the prime-field presets
    for (const auto& r : fp)
        require(v[3], r, {"z.gram0_matches_weyl", "z.gram_top_unit", "z.radical_stable", "z.head_nonzero",
                          "z.cross_gram_zero"});
    if (v[3].pass) v[3].note = std::to_string(v[3].checks) + " checks over " + std::to_string(fp.size()) + " runs";

    // 4. tensor theorem at n = 2, r = 2
    require(v[4], fp[0], {"s0.tensor_theorem"});
    require(v[4], fp[1], {"s0.tensor_theorem"});
    if (v[4].pass) v[4].note = witness(fp[0], "s0.tensor_theorem");

    // 5. decomposition identities, with a non-semisimple instance
    bool nonsemisimple = false;
    for (const auto& r : fp) {
        require(v[5], r, {"decomp.routes_", "decomp.seeds_", "decomp.bar_equals_z", "decomp.z_le_s",
                          "decomp.alpha_equal", "decomp.alpha_vanishing", "decomp.unitriangular"});
        auto d = run(r.name, "decomp", r.cfg);
        if (d.res.exit_code != 0) v[5].fail(r.name + ": decomp exit " + std::to_string(d.res.exit_code));
        else if (!is_identity(d.res.report["results"]["matrices"]["S"])) nonsemisimple = true;
    }
    if (!nonsemisimple) v[5].fail("every D_S is the identity");
    if (big.seconds > 600) v[5].fail("n3r2 took " + std::to_string(big.seconds) + " s");
    if (v[5].pass)
        v[5].note = std::to_string(v[5].checks) + " checks; non-semisimple D_S present; n3r2 verify " +
                    std::to_string(static_cast<int>(big.seconds)) + " s";

    // 6. product formula at n <= 3, r = 2
    for (int i : {0, 2}) require(v[6], fp[i], {"decomp.product_formula"});
    if (v[6].pass) v[6].note = witness(big, "decomp.product_formula");

    // 7. flat isomorphism at n = 2, r = 2, m = (2,2)
    require(v[7], fp[0], {"flat.isomorphism"});
    if (v[7].pass) v[7].note = witness(fp[0], "flat.isomorphism");

    // 8. semisimple rational parameters
    for (const auto& r : rat) require(v[8], r, {"semisimple."});
    if (v[8].pass) v[8].note = std::to_string(v[8].checks) + " checks over n2r2q, n3r2q, n3r1q";

    // 9. reproducibility: seeds and warm/cold cache
    for (auto base : {n2r2, n3r2}) {
        auto a = base, b = base;
        b.seed = base.seed + 1000;
        auto ra = run("seed", "decomp", a), rb = run("seed+1000", "decomp", b);
        if (ra.res.exit_code != 0 || rb.res.exit_code != 0) v[9].fail("decomp failed");
        if (ra.res.report["results"] != rb.res.report["results"]) v[9].fail("matrices differ between seeds");
    }
    auto dir = fs::temp_directory_path() / ("cqs-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    for (auto base : {with_checks(n2r2, {}), with_checks(n3r1, {})}) {
        base.cache_dir = dir.string();
        auto cold = run("cold", "verify", base);
        auto warm = run("warm", "verify", base);
        if (report_text(cold.res) != report_text(warm.res)) v[9].fail("warm and cold reports differ");
        if (cold.res.exit_code != 0) v[9].fail("cached verify failed");
    }
    fs::remove_all(dir);
    if (v[9].pass) v[9].note = "decomp matrices equal across seeds; warm and cold reports byte-identical";

    bool all = true;
    for (int k = 1; k <= 9; ++k) {
        std::cout << "criterion " << k << ": " << (v[k].pass ? "PASS" : "FAIL") << " - " << v[k].note << "\n";
        all = all && v[k].pass;
    }
    return all ? 0 : 1;
}
