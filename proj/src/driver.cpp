#include "cqs/driver.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "cqs/cache.hpp"
#include "cqs/decomp.hpp"
#include "cqs/murphy.hpp"
#include "cqs/relations.hpp"

namespace cqs {

namespace {

using json = nlohmann::json;

json check_json(const Check& c) { return json{{"id", c.id}, {"pass", c.pass}, {"witness", c.witness}}; }

json matrix_json(const DecompMatrix& D) { return json{{"labels", D.labels}, {"d", D.d}}; }

template <class K>
std::string matrix_csv(const Matrix<K>& M) {
    std::ostringstream os;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) os << (j ? "," : "") << M(i, j).str();
        os << '\n';
    }
    return os.str();
}

template <class K>
bool nonsingular(const Matrix<K>& G) {
    return G.rows() == G.cols() && rank(G) == G.rows();
}

bool is_identity(const DecompMatrix& D) {
    for (std::size_t i = 0; i < D.size(); ++i)
        for (std::size_t j = 0; j < D.size(); ++j)
            if (D.d[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

// Everything one run needs over a fixed field, built lazily.
template <class K>
class Session {
public:
    explicit Session(const RunConfig& c)
        : cfg_(c),
          par_(make_params<K>(c.field)),
          P_(c.poset == "ptilde" ? Poset::ptilde(c.n, c.r, c.m) : Poset::partitions_only(c.n, c.r)),
          A_(c.n, par_),
          S_(A_, P_, Flavor::Full),
          cache_(c.cache_dir) {
        if (S_.dim() > c.max_schur_dim)
            throw ResourceError("S(Lambda) has dimension " + std::to_string(S_.dim()) + " above max_schur_dim");
        loadedS_ = load(S_, header("ak", "full"));
        budget_.exhaustive = c.n <= c.exhaustive_up_to;
        budget_.samples = c.samples;
        budget_.seed = c.seed;
    }

    const RunConfig& cfg() const { return cfg_; }
    const Params<K>& par() const { return par_; }
    const Poset& poset() const { return P_; }
    const AKAlgebra<K>& hecke() const { return A_; }
    const AKSchur<K>& schur() const { return S_; }
    const Budget& budget() const { return budget_; }
    std::vector<Check>& cache_checks() { return cache_checks_; }

    // Rough peak for the Z-module suite: a few dense action matrices per
    // S^0 generator at the largest cell.
    std::size_t z_suite_bytes() {
        std::size_t big = 0;
        for (const auto& c : S_.cells()) big = std::max(big, c.size());
        const std::size_t entry = std::is_same_v<K, Fp> ? sizeof(Fp) : 96;
        return s0().s0_generators().size() * big * big * entry * 3;
    }

    const S0Data<K>& s0() {
        if (!D_) D_ = std::make_unique<S0Data<K>>(S_);
        return *D_;
    }
    const FlatAlgebra<K>& flat_hecke() {
        if (!FA_) FA_ = std::make_unique<FlatAlgebra<K>>(cfg_.n, par_);
        return *FA_;
    }
    const FlatSchur<K>& flat() {
        if (!F_) {
            F_ = std::make_unique<FlatSchur<K>>(flat_hecke(), P_, Flavor::Plus);
            loadedF_ = load(*F_, header("flat", "plus"));
        }
        return *F_;
    }

    void save() {
        cache_.save(S_, header("ak", "full"), loadedS_);
        if (F_) cache_.save(*F_, header("flat", "plus"), loadedF_);
    }

private:
    const RunConfig& cfg_;
    Params<K> par_;
    Poset P_;
    AKAlgebra<K> A_;
    AKSchur<K> S_;
    ComposeCache cache_;
    std::size_t loadedS_ = 0, loadedF_ = 0;
    Budget budget_;
    std::unique_ptr<S0Data<K>> D_;
    std::unique_ptr<FlatAlgebra<K>> FA_;
    std::unique_ptr<FlatSchur<K>> F_;
    std::vector<Check> cache_checks_;

    std::string header(const char* alg, const char* flavor) const {
        std::ostringstream os;
        os << "n=" << cfg_.n << " r=" << cfg_.r << " field=" << cfg_.field.describe() << " poset=" << P_.hash()
           << " algebra=" << alg << " flavor=" << flavor;
        return os.str();
    }

    template <class Alg>
    std::size_t load(SchurAlgebra<Alg>& S, const std::string& head) {
        auto res = cache_.load(S, head);
        if (res.status == CacheLoad::Status::Corrupt) cache_checks_.push_back({"cache.integrity", false, res.detail});
        return res.status == CacheLoad::Status::Loaded ? res.records : 0;
    }
};

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

struct Collector {
    CommandResult& out;
    json checks = json::array();
    json timings = json::object();
    bool fail = false;

    void add(const Check& c) {
        checks.push_back(check_json(c));
        fail = fail || !c.pass;
    }
    void add(const std::vector<Check>& cs) {
        for (const auto& c : cs) add(c);
    }
};

// ------------------------------------------------------------------ commands

template <class K>
void cmd_basis(Session<K>& s, Collector& col) {
    const auto& S = s.schur();
    const auto& D = s.s0();
    std::size_t bar_dim = 0;
    for (std::size_t k = 0; k < S.dim(); ++k) bar_dim += D.eps(static_cast<std::uint32_t>(k)) == 0;
    json r;
    r["hecke_dim"] = s.hecke().dim();
    r["poset_size"] = s.poset().size();
    r["multipartitions"] = s.poset().plus().size();
    r["schur_dim"] = S.dim();
    r["c0_size"] = D.c0().size();
    r["bar_dim"] = bar_dim;
    r["omega_size"] = D.omega().size();
    col.out.report["results"] = r;
}

template <class K>
void cmd_structconst(Session<K>& s, Collector& col) {
    const auto& S = s.schur();
    const auto& D = s.s0();
    std::map<int, std::vector<std::uint32_t>> by_mu, by_nu;
    for (std::uint32_t k = 0; k < S.dim(); ++k) {
        by_mu[S.mu_of(k)].push_back(k);
        by_nu[S.nu_of(k)].push_back(k);
    }
    std::size_t pairs = 0;
    for (const auto& [nu, left] : by_nu) pairs += left.size() * by_mu[nu].size();
    if (pairs > s.cfg().max_pairs)
        throw ResourceError(std::to_string(pairs) + " products exceed max_pairs");
    std::ostringstream full, bar;
    full << "i,j,k,coeff\n";
    bar << "i,j,k,coeff\n";
    std::size_t nz = 0, nzbar = 0;
    for (const auto& [nu, left] : by_nu)
        for (auto i : left)
            for (auto j : by_mu[nu]) {
                auto v = S.compose(i, j);
                std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                for (const auto& [k, c] : v) {
                    full << i << ',' << j << ',' << k << ',' << c.str() << '\n';
                    ++nz;
                }
                if (D.eps(i) != 0 || D.eps(j) != 0) continue;
                for (const auto& [k, c] : v) {
                    if (D.eps(k) != 0) continue;
                    bar << i << ',' << j << ',' << k << ',' << c.str() << '\n';
                    ++nzbar;
                }
            }
    json r;
    r["schur_dim"] = S.dim();
    r["products"] = pairs;
    r["nonzero_constants"] = nz;
    r["bar_nonzero_constants"] = nzbar;
    col.out.files["structconst_schur.csv"] = full.str();
    col.out.files["structconst_bar.csv"] = bar.str();
    col.out.report["results"] = r;
}

template <class K>
void cmd_gram(Session<K>& s, Collector& col) {
    const auto& S = s.schur();
    const auto& P = s.poset();
    json cells = json::array();
    auto record = [&](json& entry, const std::string& fam, std::size_t cid, const Matrix<K>& G) {
        entry[fam] = json{{"dim", G.rows()}, {"rank", rank(G)}};
        col.out.files["gram_" + fam + "_" + std::to_string(cid) + ".csv"] = matrix_csv(G);
    };
    const bool flat = flat_applicable(s.cfg());
    for (std::size_t c = 0; c < S.cells().size(); ++c) {
        json e;
        e["cell"] = c;
        e["lambda"] = P.at(S.cells()[c].lambda).str();
        record(e, "W", c, *weyl_module(S, static_cast<int>(c)).rep.gram);
        record(e, "Z0", c, *z0_module(s.s0(), static_cast<int>(c), -1, false).rep.gram);
        record(e, "Zbar", c, *zbar_module(s.s0(), static_cast<int>(c)).rep.gram);
        if (flat) record(e, "Wflat", c, *flat_weyl_module(s.flat(), static_cast<int>(c)).rep.gram);
        cells.push_back(e);
    }
    std::vector<Multicomp> shapes;
    for (int l : P.plus()) shapes.push_back(P.at(l));
    json specht = json::array();
    auto sp = specht_modules(s.hecke(), shapes);
    for (std::size_t i = 0; i < sp.size(); ++i) {
        specht.push_back(json{{"lambda", shapes[i].str()}, {"dim", sp[i].dim()}, {"rank", rank(sp[i].gram)}});
        col.out.files["gram_Specht_" + std::to_string(i) + ".csv"] = matrix_csv(sp[i].gram);
    }
    col.out.report["results"] = json{{"cells", cells}, {"specht", specht}};
}

// Decomposition matrices for every family, with both routes and a second
// seed; returns the character-route matrices.
template <class K>
std::map<std::string, DecompMatrix> decomp_suite(Session<K>& s, Collector& col, json* results) {
    const auto& P = s.poset();
    const bool flat = flat_applicable(s.cfg());
    const bool prime = std::is_same_v<K, Fp>;
    const auto seed = s.cfg().seed;
    std::map<std::string, DecompMatrix> out;
    auto run = [&](const std::string& name, auto family) {
        auto d1 = decompose(family(), P, seed);
        auto d2 = decompose(family(), P, seed + 7919);
        Check routes{"decomp.routes_" + name, true, ""};
        if (d1.chopping) {
            routes.pass = d1.routes_agree();
            routes.witness = routes.pass ? "chopping and characters agree" : "chopping and characters differ";
        } else {
            routes.pass = !prime;
            routes.witness = d1.note;
        }
        col.add(routes);
        Check seeds{"decomp.seeds_" + name, d1.chopping == d2.chopping && d1.characters == d2.characters,
                    "two seeds"};
        col.add(seeds);
        if (results) {
            (*results)[name] = matrix_json(d1.characters);
            col.out.files["decomp_" + name + ".csv"] = d1.characters.csv();
        }
        out[name] = d1.characters;
    };
    run("S", [&] { return weyl_family(s.schur()); });
    run("Z", [&] { return z0_family(s.s0()); });
    run("bar", [&] { return zbar_family(s.s0()); });
    if (flat) run("flat", [&] { return flat_family(s.flat()); });
    col.add(check_decomp_relations(P, out["S"], out["Z"], out["bar"], flat ? &out["flat"] : nullptr));
    return out;
}

template <class K>
void product_suite(Session<K>& s, Collector& col, const std::map<std::string, DecompMatrix>& D) {
    auto c = check_product_formula(s.poset(), s.par(), D.at("S"), s.cfg().seed, false);
    col.add(c);
    if (D.count("flat")) {
        auto f = check_product_formula(s.poset(), s.par(), D.at("flat"), s.cfg().seed, true);
        f.id = "decomp.product_formula_flat";
        col.add(f);
    }
}

template <class K>
void semisimple_suite(Session<K>& s, Collector& col) {
    const auto& P = s.poset();
    const auto& S = s.schur();
    auto pn = pn_value(s.par(), s.cfg().n), pq = pn_value_qsq(s.par(), s.cfg().n);
    col.add(Check{"semisimple.certified", !pn.is_zero() && !pq.is_zero(),
                  "P_n(q) = " + pn.str() + ", with q^2 Hecke factor " + pq.str()});
    std::vector<Multicomp> shapes;
    for (int l : P.plus()) shapes.push_back(P.at(l));
    Check sp{"semisimple.specht_grams", true, ""};
    for (const auto& m : specht_modules(s.hecke(), shapes))
        if (!nonsingular(m.gram)) {
            sp.pass = false;
            sp.witness = "singular at " + m.shape.str();
            break;
        }
    if (sp.pass) sp.witness = std::to_string(shapes.size()) + " nonsingular";
    col.add(sp);
    auto grams = [&](const std::string& id, auto make) {
        Check c{id, true, ""};
        for (std::size_t i = 0; i < S.cells().size() && c.pass; ++i) {
            auto m = make(static_cast<int>(i));
            if (!nonsingular(*m.rep.gram)) {
                c.pass = false;
                c.witness = "singular at " + m.label;
            }
        }
        if (c.pass) c.witness = std::to_string(S.cells().size()) + " nonsingular";
        col.add(c);
    };
    grams("semisimple.weyl_grams", [&](int c) { return weyl_module(S, c); });
    grams("semisimple.z_grams", [&](int c) { return z0_module(s.s0(), c, -1, false); });
    grams("semisimple.zbar_grams", [&](int c) { return zbar_module(s.s0(), c); });
    if (flat_applicable(s.cfg())) grams("semisimple.flat_grams", [&](int c) { return flat_weyl_module(s.flat(), c); });
    Check id{"semisimple.identity_matrices", true, ""};
    auto fam = [&](const std::string& name, auto family) {
        auto d = decompose(family, P, s.cfg().seed);
        bool ok = is_identity(d.characters) && (!d.chopping || is_identity(*d.chopping));
        if (!ok && id.pass) {
            id.pass = false;
            id.witness = "D_" + name + " is not the identity";
        }
    };
    fam("S", weyl_family(S));
    fam("Z", z0_family(s.s0()));
    fam("bar", zbar_family(s.s0()));
    if (flat_applicable(s.cfg())) fam("flat", flat_family(s.flat()));
    if (id.pass) id.witness = "all identity";
    col.add(id);
}

std::vector<std::string> default_suites(const RunConfig& c, bool certified) {
    std::vector<std::string> out = {"relations", "schur", "s0", "bar", "z"};
    if (c.n <= 2) out.push_back("tensor");
    if (flat_applicable(c)) out.push_back("flat");
    if (c.field.prime()) out.push_back("decomp");
    if (c.field.prime() && flat_applicable(c)) out.push_back("product");
    if (certified) out.push_back("semisimple");
    return out;
}

template <class K>
void cmd_verify(Session<K>& s, Collector& col) {
    const auto& cfg = s.cfg();
    const auto& b = s.budget();
    bool certified = !pn_value(s.par(), cfg.n).is_zero() && !pn_value_qsq(s.par(), cfg.n).is_zero();
    json skipped = json::array();
    auto suites = cfg.checks;
    if (suites.empty()) {
        suites = default_suites(cfg, certified);
        if (s.z_suite_bytes() > cfg.max_module_bytes) {
            suites.erase(std::find(suites.begin(), suites.end(), "z"));
            skipped.push_back(json{{"suite", "z"}, {"reason", "estimated memory above max_module_bytes"}});
        }
    }
    auto want = [&](const char* id) { return std::find(suites.begin(), suites.end(), id) != suites.end(); };
    std::map<std::string, DecompMatrix> D;
    json ran = json::array();
    for (const auto& id : suite_ids()) {
        if (!want(id.c_str())) continue;
        ran.push_back(id);
        Timer t;
        try {
            if (id == "relations") {
                col.add(check_ak_relations(s.hecke()));
                col.add(check_murphy_rank(s.hecke()));
                if (separated(cfg)) {
                    col.add(check_flat_relations(s.flat_hecke()));
                    col.add(check_flat_murphy_rank(s.flat_hecke()));
                }
            } else if (id == "schur") {
                const auto& S = s.schur();
                col.add(check_factorization(S));
                col.add(check_cellular_triangularity(S, b));
                col.add(check_identity(S, b));
                col.add(check_star_antihom(S, b));
                col.add(check_associativity(S, b));
                col.add(check_cell_rows(S, b));
            } else if (id == "s0") {
                const auto& D0 = s.s0();
                col.add(check_c0_partition(D0));
                col.add(check_unit_in_s0(D0));
                col.add(check_closure(D0, b));
                col.add(check_standardly_based(D0, b));
                col.add(check_full_based_witness(D0));
                col.add(check_s00_ideal(D0, b));
                col.add(check_f_antihom(D0, b));
                if (b.exhaustive) col.add(check_s0_spans(D0));
            } else if (id == "bar") {
                col.add(check_bar_cellular(s.s0(), b));
            } else if (id == "z") {
                auto need = s.z_suite_bytes();
                if (need > cfg.max_module_bytes)
                    throw ResourceError("Z-module suite needs about " + std::to_string(need >> 20) +
                                        " MiB, above max_module_bytes");
                col.add(check_z_modules(s.s0(), b));
            } else if (id == "tensor") {
                col.add(check_tensor_theorem(s.s0()));
            } else if (id == "flat") {
                col.add(check_flat_blocks(s.flat()));
                col.add(check_flat_isomorphism(s.s0(), s.flat(), b));
            } else if (id == "decomp") {
                D = decomp_suite(s, col, nullptr);
            } else if (id == "product") {
                if (D.empty()) D = decomp_suite(s, col, nullptr);
                product_suite(s, col, D);
            } else if (id == "semisimple") {
                semisimple_suite(s, col);
            }
        } catch (const ResourceError&) {
            throw;
        } catch (const std::exception& e) {
            col.add(Check{id + ".error", false, e.what()});
        }
        col.timings[id] = t.seconds();
    }
    col.out.report["results"] = json{{"suites", ran}, {"skipped", skipped}};
}

template <class K>
void cmd_decomp(Session<K>& s, Collector& col) {
    json res;
    auto D = decomp_suite(s, col, &res);
    if (flat_applicable(s.cfg())) product_suite(s, col, D);
    col.out.report["results"] = json{{"matrices", res}};
}

template <class K>
void dispatch(const std::string& cmd, const RunConfig& cfg, CommandResult& out) {
    Timer total;
    Collector col{out};
    Session<K> s(cfg);
    if (cmd == "basis")
        cmd_basis(s, col);
    else if (cmd == "structconst")
        cmd_structconst(s, col);
    else if (cmd == "gram")
        cmd_gram(s, col);
    else if (cmd == "decomp")
        cmd_decomp(s, col);
    else
        cmd_verify(s, col);
    for (const auto& c : s.cache_checks()) col.add(c);
    s.save();
    out.report["checks"] = col.checks;
    if (cfg.timings) {
        col.timings["total"] = total.seconds();
        col.timings["composes"] = s.schur().composes_computed();
        out.report["timings"] = col.timings;
    }
    out.exit_code = col.fail ? kExitCheckFailed : kExitOk;
}

}  // namespace

CommandResult run_command(const std::string& command, RunConfig cfg) {
    CommandResult out;
    out.report["schema"] = kReportSchema;
    out.report["command"] = command;
    try {
        static const std::vector<std::string> cmds = {"basis", "structconst", "gram", "decomp", "verify"};
        if (std::find(cmds.begin(), cmds.end(), command) == cmds.end())
            throw ConfigError("unknown command '" + command + "'");
        validate(cfg);
        out.report["config"] = to_json(cfg);
        if (command == "decomp" && !cfg.field.prime()) throw ConfigError("decomp needs a prime field");
        if (cfg.field.prime()) {
            Fp::ModulusScope scope(cfg.field.p);
            dispatch<Fp>(command, cfg, out);
        } else {
            dispatch<Rational>(command, cfg, out);
        }
    } catch (const ConfigError& e) {
        out.report["error"] = json{{"kind", "config"}, {"message", e.what()}};
        out.exit_code = kExitConfig;
    } catch (const ResourceError& e) {
        out.report["error"] = json{{"kind", "resource"}, {"message", e.what()}};
        out.exit_code = kExitResource;
    } catch (const std::exception& e) {
        out.report["error"] = json{{"kind", "internal"}, {"message", e.what()}};
        out.exit_code = kExitCheckFailed;
    }
    out.report["status"] = out.exit_code == kExitOk ? "ok" : "fail";
    out.report["exit_code"] = out.exit_code;
    return out;
}

std::string report_text(const CommandResult& r) { return r.report.dump(2) + "\n"; }

void write_outputs(const CommandResult& r, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::ofstream(fs::path(dir) / "report.json", std::ios::binary) << report_text(r);
    for (const auto& [name, body] : r.files) std::ofstream(fs::path(dir) / name, std::ios::binary) << body;
}

}  // namespace cqs
