#pragma once

#include <cstdint>
#include <map>

#include "hilie/partition.hpp"

namespace hilie {

/// Deterministic splitmix64 generator. The full algorithm is the state
/// update s += 0x9E3779B97F4A7C15 followed by the xor-shift finalizer below,
/// so identical seeds give identical streams on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), state_(seed) {}

    uint64_t seed() const { return seed_; }

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased value in [0, bound) by rejection.
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        uint64_t min = (-bound) % bound; // 2^64 mod bound
        uint64_t x;
        do {
            x = next_u64();
        } while (x < min);
        return x % bound;
    }

    // Stream splitting: child streams for task indices are decorrelated from
    // the master stream and from each other.
    static uint64_t child_seed(uint64_t master, uint64_t task) {
        return mix(mix(master) + task + 1);
    }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t seed_;
    uint64_t state_;
};

/// A permutation of {0..n-1}: images[i] is the image of i.
struct Perm {
    std::vector<int> images;

    int n() const { return static_cast<int>(images.size()); }
    bool operator==(const Perm& o) const { return images == o.images; }
};

Perm identity_perm(int n);

// Fisher-Yates shuffle; consumes exactly n-1 bounded draws.
Perm uniform_perm(int n, Rng& rng);

Partition cycle_type(const Perm& sigma);

// Common shape of the RSK insertion pair; Plancherel-distributed for
// uniform input.
Partition rsk_shape(const Perm& sigma);

// Exact Plancherel law {nu: (f^nu)^2 / n!}; sums to 1.
std::map<Partition, Rat, CanonLess> plancherel_exact(long long n);

// argmax of f^nu (first in canonical order on ties).
Partition plancherel_modal(long long n);

// One step of the coherent virtual-permutation chain: n+1 becomes a fixed
// point with probability 1/(n+1), else it is inserted into the cycle of a
// uniformly chosen element j, directly after j. Marginals stay uniform.
Perm virtual_step(const Perm& sigma, Rng& rng);

// d_n by the recurrence d_n = (n-1)(d_{n-1} + d_{n-2}).
BigInt derangement_count(long long n);

// D_{k,i} = C(k,i) * d_{k-i}, permutations of S_k with exactly i fixed points.
BigInt rencontres(long long k, long long i);

} // namespace hilie
