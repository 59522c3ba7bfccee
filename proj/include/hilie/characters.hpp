#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include "hilie/partition.hpp"

namespace hilie {

// Irreducible character value chi^nu(mu) of S_n by the Murnaghan-Nakayama
// recursion. Throws std::invalid_argument when |nu| != |mu|.
BigInt mn_char(const Partition& nu, const Partition& mu);

// Independent oracle: chi^nu(mu) as the coefficient of x^{nu+delta} in
// p_mu * prod_{i<j}(x_i - x_j), extracted by exact arithmetic in n variables.
// Exponential in n; refuses n > 8.
BigInt frobenius_char_oracle(const Partition& nu, const Partition& mu);

/// Complete character table of S_n. Rows and columns are both indexed by
/// the canonical partition order of partitions_of(n).
class CharTable {
public:
    long long n() const { return n_; }
    const std::vector<Partition>& order() const { return order_; }
    size_t index_of(const Partition& p) const;

    const BigInt& at(size_t nu_idx, size_t mu_idx) const { return values_[nu_idx][mu_idx]; }
    const BigInt& value(const Partition& nu, const Partition& mu) const;

    // chi^nu at the identity class (1^n), i.e. f^nu.
    const BigInt& dim(const Partition& nu) const;

    bool from_cache() const { return from_cache_; }

    static CharTable build(long long n, int jobs = 0);
    static std::optional<CharTable> load(const std::filesystem::path& file);
    void save(const std::filesystem::path& file) const; // write-temp-then-rename

private:
    long long n_ = 0;
    std::vector<Partition> order_;
    std::vector<std::vector<BigInt>> values_;
    bool from_cache_ = false;
};

// Cache directory resolution: explicit override > HILIE_CACHE_DIR > ~/.cache/hilie.
void set_cache_directory(std::optional<std::filesystem::path> dir);
std::filesystem::path cache_directory();

// Number of threads used when tables are built (0 = hardware concurrency).
void set_char_table_jobs(int jobs);

// Shared table for S_n: in-process registry first, then the file cache
// (chartab-v1-n{N}.json), else built and persisted. A corrupt cache file is
// recomputed and overwritten with a warning on stderr. Practical up to
// n around 25; the p(n) x p(n) table stops fitting in time/memory beyond.
std::shared_ptr<const CharTable> char_table(long long n);

// Drops the in-process registry (test hook for exercising the file cache).
void clear_char_table_registry();

} // namespace hilie
