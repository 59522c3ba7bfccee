#include "hilie/higher_lie.hpp"

#include <map>
#include <mutex>
#include <set>

#include "hilie/tableaux.hpp"

namespace hilie {

namespace {

long long mod_reduce(long long r, long long m) { return ((r % m) + m) % m; }

// Power-basis forms of lie_r(i, r mod i), shared across higher Lie assemblies.
const SymFunc& lie_power_cached(long long i, long long r) {
    static std::mutex mtx;
    static std::map<std::pair<long long, long long>, SymFunc> cache;
    std::pair<long long, long long> key{i, mod_reduce(r, i)};
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, schur_to_power(lie_r(key.first, key.second))).first;
    return it->second;
}

} // namespace

nlohmann::json Residual::to_json() const {
    nlohmann::json j;
    j["lambda"] = lambda.parts();
    j["nu"] = nu.parts();
    j["multiplicity"] = multiplicity.str();
    j["R"] = {{"num", rat_num(r).str()}, {"den", rat_den(r).str()}};
    return j;
}

SymFunc lie_r(long long n, long long r) {
    if (n < 1) throw std::invalid_argument("lie_r: n must be >= 1");
    long long rr = mod_reduce(r, n);
    SymFunc out = SymFunc::zero(n, Basis::Schur);
    for_each_partition(n, [&](const Partition& nu) {
        MajProfile prof = maj_mod_profile(nu, static_cast<int>(n));
        const BigInt& c = prof.counts[static_cast<size_t>(rr)];
        if (c != 0) out.set_coeff(nu, Rat(c));
    });
    return out;
}

SymFunc lie_witt_oracle(long long n) {
    if (n < 1) throw std::invalid_argument("lie_witt_oracle: n must be >= 1");
    SymFunc out = SymFunc::zero(n, Basis::Power);
    for (long long d = 1; d <= n; ++d) {
        if (n % d) continue;
        // Moebius function of d by trial factorization.
        long long x = d;
        int mu = 1;
        bool squarefree = true;
        for (long long p = 2; p * p <= x && squarefree; ++p) {
            if (x % p) continue;
            x /= p;
            mu = -mu;
            if (x % p == 0) squarefree = false;
        }
        if (!squarefree) continue;
        if (x > 1) mu = -mu;
        std::vector<int> parts(static_cast<size_t>(n / d), static_cast<int>(d));
        out.set_coeff(Partition(std::move(parts)), Rat(mu, n));
    }
    return out;
}

SymFunc higher_lie(const LieSpec& spec) {
    SymFunc acc = SymFunc::unit(Basis::Power);
    const auto& parts = spec.lambda.parts();
    // Factors in increasing part-size order.
    size_t i = parts.size();
    while (i > 0) {
        size_t j = i;
        int v = parts[i - 1];
        while (i > 0 && parts[i - 1] == v) --i;
        long long mult = static_cast<long long>(j - i);
        acc = mul(acc, plethysm_h(mult, lie_power_cached(v, spec.twist)));
    }
    SymFunc schur = power_to_schur(acc);
    for (const auto& [nu, c] : schur.coeffs()) {
        if (!is_integer(c) || c < 0)
            throw InternalError("higher_lie: non-integral or negative Schur coefficient at " +
                                nu.to_string());
    }
    return schur;
}

SymFunc regular_sum(long long n) {
    if (n < 1) throw std::invalid_argument("regular_sum: n must be >= 1");
    SymFunc total = SymFunc::zero(n, Basis::Schur);
    for_each_partition(n, [&](const Partition& lam) {
        total += higher_lie({lam, 1});
    });
    return total;
}

SymFunc derangement_char(long long n) {
    if (n < 0) throw std::invalid_argument("derangement_char: n must be >= 0");
    SymFunc total = SymFunc::zero(n, Basis::Schur);
    for_each_partition(n, [&](const Partition& lam) {
        if (lam.multiplicity(1) > 0) return;
        total += higher_lie({lam, 1});
    });
    return total;
}

SymFunc conjugacy_char_total(long long n) {
    if (n < 1) throw std::invalid_argument("conjugacy_char_total: n must be >= 1");
    SymFunc total = SymFunc::zero(n, Basis::Schur);
    for_each_partition(n, [&](const Partition& lam) {
        total += higher_lie({lam, 0});
    });
    return total;
}

SymFunc top_cohomology_char(long long n) {
    if (n < 1) throw std::invalid_argument("top_cohomology_char: n must be >= 1");
    return omega(lie_r(n, 1));
}

Residual regularity_residual(const LieSpec& spec, const Partition& nu) {
    if (spec.lambda.n() != nu.n())
        throw std::invalid_argument("regularity_residual: |lambda| != |nu|");
    SymFunc L = higher_lie(spec);
    Rat mult = L.coeff(nu);
    Residual out;
    out.lambda = spec.lambda;
    out.nu = nu;
    out.multiplicity = rat_num(mult);
    out.r = Rat(z_of(spec.lambda)) * mult / Rat(f_hook(nu)) - 1;
    return out;
}

bool gluing_check(const Partition& mu, const Partition& tau) {
    std::set<int> a(mu.parts().begin(), mu.parts().end());
    for (int p : tau.parts()) {
        if (a.count(p))
            throw std::invalid_argument("gluing_check: mu and tau share the part " +
                                        std::to_string(p));
    }
    SymFunc glued = higher_lie({disjoint_union(mu, tau), 1});
    SymFunc product = mul(higher_lie({mu, 1}), higher_lie({tau, 1}));
    return glued == product;
}

bool hook_support_check(long long n, long long k) {
    if (k < 0 || k >= n) throw std::invalid_argument("hook_support_check: need 0 <= k < n");
    std::vector<int> parts{static_cast<int>(n - k)};
    parts.insert(parts.end(), static_cast<size_t>(k), 1);
    SymFunc L = higher_lie({Partition(std::move(parts)), 1});
    for (const auto& [nu, c] : L.coeffs()) {
        if (nu.first_part() < k) return false;
    }
    return true;
}

} // namespace hilie
