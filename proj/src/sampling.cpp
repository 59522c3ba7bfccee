#include "hilie/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "hilie/tableaux.hpp"

namespace hilie {

Perm identity_perm(int n) {
    Perm p;
    p.images.resize(static_cast<size_t>(n));
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

Perm uniform_perm(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("uniform_perm: n must be >= 1");
    Perm p = identity_perm(n);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<uint64_t>(i) + 1));
        std::swap(p.images[static_cast<size_t>(i)], p.images[static_cast<size_t>(j)]);
    }
    return p;
}

Partition cycle_type(const Perm& sigma) {
    int n = sigma.n();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> lengths;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        int j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            j = sigma.images[static_cast<size_t>(j)];
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

Partition rsk_shape(const Perm& sigma) {
    std::vector<std::vector<int>> rows;
    for (int x : sigma.images) {
        int carry = x;
        for (auto& row : rows) {
            auto it = std::upper_bound(row.begin(), row.end(), carry);
            if (it == row.end()) {
                row.push_back(carry);
                carry = -1;
                break;
            }
            std::swap(*it, carry);
        }
        if (carry >= 0) rows.push_back({carry});
    }
    std::vector<int> shape;
    shape.reserve(rows.size());
    for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
    return Partition(std::move(shape));
}

std::map<Partition, Rat, CanonLess> plancherel_exact(long long n) {
    if (n < 1) throw std::invalid_argument("plancherel_exact: n must be >= 1");
    std::map<Partition, Rat, CanonLess> out;
    BigInt nf = factorial(n);
    for_each_partition(n, [&](const Partition& nu) {
        BigInt f = f_hook(nu);
        out.emplace(nu, Rat(f * f, nf));
    });
    return out;
}

Partition plancherel_modal(long long n) {
    Partition best;
    BigInt best_f = -1;
    for_each_partition(n, [&](const Partition& nu) {
        BigInt f = f_hook(nu);
        if (f > best_f) {
            best_f = f;
            best = nu;
        }
    });
    return best;
}

Perm virtual_step(const Perm& sigma, Rng& rng) {
    int n = sigma.n();
    uint64_t u = rng.below(static_cast<uint64_t>(n) + 1);
    Perm next;
    next.images = sigma.images;
    next.images.push_back(n);
    if (u < static_cast<uint64_t>(n)) {
        // Insert n (0-based name of the new element) right after j in j's cycle.
        int j = static_cast<int>(u);
        next.images[static_cast<size_t>(n)] = next.images[static_cast<size_t>(j)];
        next.images[static_cast<size_t>(j)] = n;
    }
    return next;
}

BigInt derangement_count(long long n) {
    if (n < 0) throw std::invalid_argument("derangement_count: n must be >= 0");
    if (n == 0) return 1;
    if (n == 1) return 0;
    BigInt prev2 = 1, prev1 = 0;
    for (long long k = 2; k <= n; ++k) {
        BigInt cur = (k - 1) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

BigInt rencontres(long long k, long long i) {
    if (i < 0 || i > k) throw std::invalid_argument("rencontres: need 0 <= i <= k");
    return binomial(k, i) * derangement_count(k - i);
}

} // namespace hilie
