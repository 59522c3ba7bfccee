#include <algorithm>
#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "hilie/characters.hpp"
#include "hilie/higher_lie.hpp"
#include "hilie/parallel.hpp"
#include "hilie/report.hpp"
#include "hilie/sampling.hpp"
#include "hilie/tableaux.hpp"
#include "hilie/verify.hpp"

using namespace hilie;

namespace {

struct GlobalOpts {
    std::string cache_dir;
    uint64_t seed = 42;
    int jobs = 0;
    std::string format = "csv";
    std::string balance_c = "3";
};

Rat parse_rat_flag(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational '" + s + "' (expected a or a/b)");
    }
}

// Lower quantile on a sorted vector: element at index floor(p * (L-1)).
Rat quantile(const std::vector<Rat>& sorted, double p) {
    if (sorted.empty()) return 0;
    size_t idx = static_cast<size_t>(p * static_cast<double>(sorted.size() - 1));
    return sorted[idx];
}

std::vector<std::string> residual_row(const std::string& kind, const std::string& tag,
                                      const Residual& res) {
    return {kind,
            tag,
            res.lambda.to_string(),
            res.nu.to_string(),
            to_decimal(res.multiplicity),
            to_fraction_string(res.r),
            format_double(to_double(res.r))};
}

std::chrono::steady_clock::time_point g_started;

int emit(ExperimentReport& report, const GlobalOpts& g) {
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - g_started).count();
    report.write(std::cout, g.format);
    std::cerr << "wall-time: " << format_double(report.wall_seconds) << " s\n";
    return 0;
}

int cmd_decompose(const GlobalOpts& g, const std::string& lambda_text, long long twist) {
    ExperimentReport rep;
    rep.command = "decompose";
    rep.params = {{"lambda", lambda_text}, {"twist", std::to_string(twist)}};
    rep.columns = {"nu", "mult"};
    Partition lambda = parse_partition(lambda_text);
    SymFunc L = higher_lie({lambda, twist});
    for (const auto& [nu, c] : L.coeffs())
        rep.add_row({nu.to_string(), to_decimal(rat_num(c))});
    return emit(rep, g);
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, int nmax) {
    ExperimentReport rep;
    rep.command = "verify";
    rep.params = {{"suite", suite}, {"nmax", std::to_string(nmax)}};
    rep.columns = {"suite", "check", "status", "detail"};

    std::vector<std::pair<std::string, std::vector<CheckResult>>> groups;
    auto want = [&](const char* name) { return suite == name || suite == "all"; };
    if (want("regular-sum")) groups.emplace_back("regular-sum", verify_regular_sum(nmax));
    if (want("kw-witt")) groups.emplace_back("kw-witt", verify_kw_witt(nmax));
    if (want("swanson")) groups.emplace_back("swanson", verify_swanson(nmax));
    if (want("gluing")) {
        rep.seed = g.seed;
        groups.emplace_back("gluing", verify_gluing(std::min(nmax, 12), g.seed, 50));
    }
    if (want("lr-oracle")) groups.emplace_back("lr-oracle", verify_lr_oracle(std::min(nmax, 8)));
    if (want("mn-oracle")) groups.emplace_back("mn-oracle", verify_mn_oracle(std::min(nmax, 6)));
    if (groups.empty())
        throw ParseError("unknown suite '" + suite +
                         "' (regular-sum, kw-witt, swanson, gluing, lr-oracle, mn-oracle, all)");

    bool ok = true;
    for (const auto& [name, results] : groups) {
        for (const auto& r : results) {
            ok = ok && r.pass;
            rep.add_row({name, r.name, r.pass ? "pass" : "FAIL", r.detail});
        }
    }
    emit(rep, g);
    return ok ? 0 : 1;
}

int cmd_regularity(const GlobalOpts& g, long long n, long long trials, bool all_pairs,
                   long long twist) {
    ExperimentReport rep;
    rep.command = "regularity";
    rep.params = {{"n", std::to_string(n)},
                  {"trials", all_pairs ? "all-pairs" : std::to_string(trials)},
                  {"twist", std::to_string(twist)}};
    rep.columns = {"kind", "trial", "lambda", "nu", "mult", "R", "R_float"};

    std::vector<Residual> rows;
    if (all_pairs) {
        for (const auto& lam : all_partitions(n))
            for (const auto& nu : all_partitions(n))
                rows.push_back(regularity_residual({lam, twist}, nu));
    } else {
        rep.seed = g.seed;
        rows.resize(static_cast<size_t>(trials));
        parallel_for(static_cast<size_t>(trials), g.jobs, [&](size_t t) {
            Rng rng(Rng::child_seed(g.seed, t));
            Partition lam = cycle_type(uniform_perm(static_cast<int>(n), rng));
            Partition nu = rsk_shape(uniform_perm(static_cast<int>(n), rng));
            rows[t] = regularity_residual({lam, twist}, nu);
        });
    }
    std::vector<Rat> abs_r;
    abs_r.reserve(rows.size());
    for (size_t t = 0; t < rows.size(); ++t) {
        rep.add_row(residual_row(all_pairs ? "pair" : "sample", std::to_string(t), rows[t]));
        abs_r.push_back(abs(rows[t].r));
    }
    std::sort(abs_r.begin(), abs_r.end());
    for (auto [name, p] : {std::pair<const char*, double>{"min", 0.0},
                           {"q25", 0.25},
                           {"median", 0.5},
                           {"q75", 0.75},
                           {"max", 1.0}}) {
        Rat q = quantile(abs_r, p);
        rep.add_row({"summary", name, "", "", "", to_fraction_string(q),
                     format_double(to_double(q))});
    }
    return emit(rep, g);
}

int cmd_sweep_rect(const GlobalOpts& g, long long k, const std::vector<long long>& mlist) {
    ExperimentReport rep;
    rep.command = "sweep-rect";
    std::string ms;
    for (size_t i = 0; i < mlist.size(); ++i) ms += (i ? "," : "") + std::to_string(mlist[i]);
    rep.params = {{"k", std::to_string(k)}, {"mlist", ms}, {"balance-c", g.balance_c}};
    rep.columns = {"k",       "m",           "lambda",        "balanced_count",
                   "max_R",   "max_R_float", "R_modal",       "R_modal_float",
                   "nu_modal", "note"};
    Rat c = parse_rat_flag(g.balance_c);

    for (long long m : mlist) {
        std::vector<int> parts(static_cast<size_t>(k), static_cast<int>(m));
        Partition lam(parts);
        long long n = lam.n();
        SymFunc L = higher_lie({lam, 1});
        BigInt zl = z_of(lam);
        Rat max_r = 0;
        long long balanced = 0;
        for (const auto& nu : all_partitions(n)) {
            if (!is_balanced(nu, c)) continue;
            ++balanced;
            Rat r = abs(Rat(zl) * L.coeff(nu) / Rat(f_hook(nu)) - 1);
            if (r > max_r) max_r = r;
        }
        Partition modal = plancherel_modal(n);
        Rat r_modal = Rat(zl) * L.coeff(modal) / Rat(f_hook(modal)) - 1;
        rep.add_row({std::to_string(k), std::to_string(m), lam.to_string(),
                     std::to_string(balanced), to_fraction_string(max_r),
                     format_double(to_double(max_r)), to_fraction_string(r_modal),
                     format_double(to_double(r_modal)), modal.to_string(),
                     m == 2 ? "multiplicity-free regime: support = even-column diagrams" : ""});
    }
    return emit(rep, g);
}

int cmd_sweep_hooks(const GlobalOpts& g, long long n, const std::vector<long long>& klist) {
    ExperimentReport rep;
    rep.command = "sweep-hooks";
    std::string ks;
    for (size_t i = 0; i < klist.size(); ++i) ks += (i ? "," : "") + std::to_string(klist[i]);
    rep.params = {{"n", std::to_string(n)}, {"klist", ks}};
    rep.columns = {"n",       "k",       "lambda",        "R_modal",
                   "R_modal_float", "nu_modal", "vanishing_ok"};

    for (long long k : klist) {
        if (k < 0 || k >= n) throw ParseError("sweep-hooks: need 0 <= k < n");
        std::vector<int> parts{static_cast<int>(n - k)};
        parts.insert(parts.end(), static_cast<size_t>(k), 1);
        Partition lam(parts);
        SymFunc L = higher_lie({lam, 1});
        bool vanish_ok = true;
        for (const auto& [nu, c] : L.coeffs())
            if (nu.first_part() < k) vanish_ok = false;
        Partition modal = plancherel_modal(n);
        Rat r_modal = Rat(z_of(lam)) * L.coeff(modal) / Rat(f_hook(modal)) - 1;
        rep.add_row({std::to_string(n), std::to_string(k), lam.to_string(),
                     to_fraction_string(r_modal), format_double(to_double(r_modal)),
                     modal.to_string(), vanish_ok ? "true" : "false"});
    }
    return emit(rep, g);
}

const Rat kInvE(BigInt("36787944117144232160"), boost::multiprecision::pow(BigInt(10), 20));

int cmd_derangement(const GlobalOpts& g, long long nmax) {
    ExperimentReport rep;
    rep.command = "derangement";
    rep.params = {{"nmax", std::to_string(nmax)}};
    rep.columns = {"n",     "dim",       "d_n",           "dim_ok",  "nu_modal",
                   "ratio", "deviation", "deviation_float"};
    for (long long n = 1; n <= nmax; ++n) {
        SymFunc D = derangement_char(n);
        Rat dim = inner(D, h1_power(n));
        BigInt dn = derangement_count(n);
        Partition modal = plancherel_modal(n);
        Rat ratio = D.coeff(modal) / Rat(f_hook(modal));
        Rat dev = abs(ratio - kInvE);
        rep.add_row({std::to_string(n), to_fraction_string(dim), to_decimal(dn),
                     dim == Rat(dn) ? "true" : "false", modal.to_string(),
                     to_fraction_string(ratio), to_fraction_string(dev),
                     format_double(to_double(dev))});
    }
    return emit(rep, g);
}

int cmd_conjugacy(const GlobalOpts& g, long long nmax) {
    ExperimentReport rep;
    rep.command = "conjugacy";
    rep.params = {{"nmax", std::to_string(nmax)}};
    rep.columns = {"n",     "dim",       "n_factorial",    "dim_ok",         "nu_modal",
                   "ratio", "deviation", "deviation_float", "missing_support"};
    for (long long n = 1; n <= nmax; ++n) {
        SymFunc C = conjugacy_char_total(n);
        Rat dim = inner(C, h1_power(n));
        BigInt nf = factorial(n);
        Partition modal = plancherel_modal(n);
        Rat ratio = C.coeff(modal) / Rat(f_hook(modal));
        Rat dev = abs(ratio - 1);
        long long missing = 0;
        for (const auto& nu : all_partitions(n))
            if (C.coeff(nu) == 0) ++missing;
        rep.add_row({std::to_string(n), to_fraction_string(dim), to_decimal(nf),
                     dim == Rat(nf) ? "true" : "false", modal.to_string(),
                     to_fraction_string(ratio), to_fraction_string(dev),
                     format_double(to_double(dev)), std::to_string(missing)});
    }
    return emit(rep, g);
}

int cmd_virtual(const GlobalOpts& g, const std::vector<long long>& checkpoints,
                long long chains) {
    for (size_t i = 1; i < checkpoints.size(); ++i)
        if (checkpoints[i] <= checkpoints[i - 1])
            throw ParseError("virtual: checkpoints must be strictly increasing");
    if (checkpoints.empty() || checkpoints.front() < 1)
        throw ParseError("virtual: need at least one checkpoint >= 1");

    ExperimentReport rep;
    rep.command = "virtual";
    std::string cs;
    for (size_t i = 0; i < checkpoints.size(); ++i)
        cs += (i ? "," : "") + std::to_string(checkpoints[i]);
    rep.params = {{"checkpoints", cs}, {"chains", std::to_string(chains)}};
    rep.seed = g.seed;
    rep.columns = {"kind", "chain_ckpt", "lambda", "nu", "mult", "R", "R_float"};

    long long top = checkpoints.back();
    std::vector<std::vector<Residual>> rows(static_cast<size_t>(chains));
    parallel_for(static_cast<size_t>(chains), g.jobs, [&](size_t c) {
        Rng rng(Rng::child_seed(g.seed, c));
        Perm sigma = identity_perm(0);
        size_t next_ckpt = 0;
        for (long long n = 1; n <= top; ++n) {
            sigma = virtual_step(sigma, rng);
            if (next_ckpt < checkpoints.size() && checkpoints[next_ckpt] == n) {
                Partition lam = cycle_type(sigma);
                Partition modal = plancherel_modal(n);
                rows[c].push_back(regularity_residual({lam, 1}, modal));
                ++next_ckpt;
            }
        }
    });
    for (size_t c = 0; c < rows.size(); ++c) {
        for (size_t i = 0; i < rows[c].size(); ++i) {
            std::string tag = std::to_string(c) + ":" + std::to_string(checkpoints[i]);
            rep.add_row(residual_row("chain", tag, rows[c][i]));
        }
    }
    return emit(rep, g);
}

int cmd_sample(const GlobalOpts& g, const std::string& what, long long n, long long count) {
    ExperimentReport rep;
    rep.command = "sample";
    rep.params = {{"what", what}, {"n", std::to_string(n)}, {"count", std::to_string(count)}};
    rep.seed = g.seed;
    rep.columns = {"index", "value"};
    for (long long i = 0; i < count; ++i) {
        Rng rng(Rng::child_seed(g.seed, static_cast<uint64_t>(i)));
        std::string value;
        if (what == "perm") {
            Perm p = uniform_perm(static_cast<int>(n), rng);
            for (int j = 0; j < p.n(); ++j)
                value += (j ? " " : "") + std::to_string(p.images[static_cast<size_t>(j)] + 1);
        } else if (what == "cycle-type") {
            value = cycle_type(uniform_perm(static_cast<int>(n), rng)).to_string();
        } else if (what == "rsk-shape") {
            value = rsk_shape(uniform_perm(static_cast<int>(n), rng)).to_string();
        } else {
            throw ParseError("sample: unknown kind '" + what +
                             "' (perm, cycle-type, rsk-shape)");
        }
        rep.add_row({std::to_string(i), value});
    }
    return emit(rep, g);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hilie: exact decompositions and regularity experiments for higher Lie characters"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--cache-dir", g.cache_dir, "character table cache directory (overrides HILIE_CACHE_DIR)");
    app.add_option("--seed", g.seed, "master seed for randomized commands")->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--balance-c", g.balance_c, "constant c in the balanced filter max(nu1,nu'1) <= c*sqrt(n)")
        ->capture_default_str();

    std::string lambda_text;
    long long twist = 1;
    auto* dec = app.add_subcommand("decompose", "Schur expansion of a higher Lie character");
    dec->fallthrough();
    dec->add_option("--lambda", lambda_text, "partition, e.g. 3,2,1 or 2^3,1")->required();
    dec->add_option("--twist", twist, "cyclic twist r (1 = higher Lie, 0 = conjugacy)")
        ->capture_default_str();

    std::string suite = "all";
    int nmax = 8;
    auto* ver = app.add_subcommand("verify", "identity and cross-oracle suites");
    ver->fallthrough();
    ver->add_option("--suite", suite,
                    "regular-sum | kw-witt | swanson | gluing | lr-oracle | mn-oracle | all")
        ->capture_default_str();
    ver->add_option("--nmax", nmax, "size ceiling")->capture_default_str();

    long long reg_n = 6, reg_trials = 100, reg_twist = 1;
    bool all_pairs = false;
    auto* reg = app.add_subcommand("regularity", "residuals for random lambda and Plancherel nu");
    reg->fallthrough();
    reg->add_option("--n", reg_n, "symmetric group degree")->capture_default_str();
    reg->add_option("--trials", reg_trials, "number of sampled (lambda, nu) pairs")
        ->capture_default_str();
    reg->add_flag("--all-pairs", all_pairs, "exhaustive table over all (lambda, nu)");
    reg->add_option("--twist", reg_twist, "cyclic twist r")->capture_default_str();

    long long rect_k = 2;
    std::vector<long long> mlist;
    auto* rect = app.add_subcommand("sweep-rect", "residuals for rectangular diagrams (m^k)");
    rect->fallthrough();
    rect->add_option("--k", rect_k, "number of rows")->capture_default_str();
    rect->add_option("--mlist", mlist, "row lengths to sweep")->required()->delimiter(',');

    long long hooks_n = 9;
    std::vector<long long> klist;
    auto* hooks = app.add_subcommand("sweep-hooks", "residuals for hook diagrams (n-k,1^k)");
    hooks->fallthrough();
    hooks->add_option("--n", hooks_n, "total size")->capture_default_str();
    hooks->add_option("--klist", klist, "leg lengths to sweep")->required()->delimiter(',');

    long long der_nmax = 10;
    auto* der = app.add_subcommand("derangement", "derangement character dimensions and 1/e deviations");
    der->fallthrough();
    der->add_option("--nmax", der_nmax, "size ceiling")->capture_default_str();

    long long conj_nmax = 8;
    auto* conj = app.add_subcommand("conjugacy", "total conjugacy character dimensions and deviations");
    conj->fallthrough();
    conj->add_option("--nmax", conj_nmax, "size ceiling")->capture_default_str();

    std::vector<long long> checkpoints;
    long long chains = 50;
    auto* virt = app.add_subcommand("virtual", "coherent virtual-permutation chains");
    virt->fallthrough();
    virt->add_option("--checkpoints", checkpoints, "increasing sizes to report at")
        ->required()
        ->delimiter(',');
    virt->add_option("--chains", chains, "number of independent chains")->capture_default_str();

    std::string sample_what = "cycle-type";
    long long sample_n = 10, sample_count = 10;
    auto* smp = app.add_subcommand("sample", "draw permutations, cycle types, or RSK shapes");
    smp->fallthrough();
    smp->add_option("--what", sample_what, "perm | cycle-type | rsk-shape")->capture_default_str();
    smp->add_option("--n", sample_n, "symmetric group degree")->capture_default_str();
    smp->add_option("--count", sample_count, "number of samples")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (!g.cache_dir.empty()) set_cache_directory(std::filesystem::path(g.cache_dir));
    set_char_table_jobs(g.jobs);

    g_started = std::chrono::steady_clock::now();
    try {
        int rc = 1;
        if (*dec) rc = cmd_decompose(g, lambda_text, twist);
        else if (*ver) rc = cmd_verify(g, suite, nmax);
        else if (*reg) rc = cmd_regularity(g, reg_n, reg_trials, all_pairs, reg_twist);
        else if (*rect) rc = cmd_sweep_rect(g, rect_k, mlist);
        else if (*hooks) rc = cmd_sweep_hooks(g, hooks_n, klist);
        else if (*der) rc = cmd_derangement(g, der_nmax);
        else if (*conj) rc = cmd_conjugacy(g, conj_nmax);
        else if (*virt) rc = cmd_virtual(g, checkpoints, chains);
        else if (*smp) rc = cmd_sample(g, sample_what, sample_n, sample_count);
        return rc;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
