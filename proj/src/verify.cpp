#include "hilie/verify.hpp"

#include <set>

#include "hilie/characters.hpp"
#include "hilie/higher_lie.hpp"
#include "hilie/sampling.hpp"
#include "hilie/tableaux.hpp"

namespace hilie {

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::vector<CheckResult> verify_regular_sum(int nmax) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= nmax; ++n) {
        bool ok = regular_sum(n) == h1_power(n);
        out.push_back({"regular-sum n=" + std::to_string(n), ok,
                       ok ? "sum_lambda L_lambda == h_1^n" : "mismatch"});
    }
    return out;
}

std::vector<CheckResult> verify_kw_witt(int nmax) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= nmax; ++n) {
        bool ok = power_to_schur(lie_witt_oracle(n)) == lie_r(n, 1);
        out.push_back({"kw-witt n=" + std::to_string(n), ok,
                       ok ? "maj-count expansion == Witt expansion" : "mismatch"});
    }
    return out;
}

std::vector<CheckResult> verify_swanson(int nmax) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= nmax; ++n) {
        std::string bad;
        for_each_partition(n, [&](const Partition& nu) {
            if (!bad.empty()) return;
            MajProfile prof = maj_mod_profile(nu, n);
            for (long long r = 0; r < n; ++r) {
                if (!swanson_check(prof, r).holds) {
                    bad = "violated at nu=" + nu.to_string() + " r=" + std::to_string(r);
                    return;
                }
            }
        });
        out.push_back({"swanson n=" + std::to_string(n), bad.empty(),
                       bad.empty() ? "all residues within 2n^{3/2}/sqrt(f)" : bad});
    }
    return out;
}

std::vector<CheckResult> verify_gluing(int max_total, uint64_t seed, int pairs) {
    std::vector<CheckResult> out;
    Rng rng(seed);
    int accepted = 0;
    while (accepted < pairs) {
        int n = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(max_total) - 1));
        int k = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n) - 1));
        auto left = all_partitions(k);
        auto right = all_partitions(n - k);
        const Partition& mu = left[rng.below(left.size())];
        const Partition& tau = right[rng.below(right.size())];
        std::set<int> shared(mu.parts().begin(), mu.parts().end());
        bool disjoint = true;
        for (int p : tau.parts())
            if (shared.count(p)) disjoint = false;
        if (!disjoint) continue;
        ++accepted;
        bool ok = gluing_check(mu, tau);
        out.push_back({"gluing " + mu.to_string() + " u " + tau.to_string(), ok,
                       ok ? "L_{mu u tau} == L_mu * L_tau" : "product mismatch"});
    }
    return out;
}

std::vector<CheckResult> verify_lr_oracle(int max_total) {
    std::vector<CheckResult> out;
    for (int a = 1; a < max_total; ++a) {
        for (int b = a; a + b <= max_total; ++b) {
            std::string bad;
            for_each_partition(a, [&](const Partition& lam) {
                for_each_partition(b, [&](const Partition& mu) {
                    if (!bad.empty()) return;
                    SymFunc direct = mul(SymFunc::schur(lam), SymFunc::schur(mu));
                    SymFunc via_power = power_to_schur(
                        mul(schur_to_power(SymFunc::schur(lam)), schur_to_power(SymFunc::schur(mu))));
                    if (direct != via_power)
                        bad = "s_" + lam.to_string() + " * s_" + mu.to_string();
                });
            });
            out.push_back({"lr-oracle |lambda|=" + std::to_string(a) + " |mu|=" + std::to_string(b),
                           bad.empty(),
                           bad.empty() ? "tableau counting == power-basis route" : bad});
        }
    }
    return out;
}

std::vector<CheckResult> verify_mn_oracle(int nmax) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= nmax; ++n) {
        std::string bad;
        auto parts = all_partitions(n);
        for (const auto& nu : parts) {
            for (const auto& mu : parts) {
                if (mn_char(nu, mu) != frobenius_char_oracle(nu, mu)) {
                    bad = "chi^" + nu.to_string() + mu.to_string();
                    break;
                }
            }
            if (!bad.empty()) break;
        }
        out.push_back({"mn-oracle n=" + std::to_string(n), bad.empty(),
                       bad.empty() ? "Murnaghan-Nakayama == Frobenius coefficient" : bad});
    }
    return out;
}

} // namespace hilie
