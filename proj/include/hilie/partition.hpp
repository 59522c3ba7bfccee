#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilie/numeric.hpp"

namespace hilie {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contract violations that indicate a bug rather than bad input
// (e.g. a character expansion coming out non-integral).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// An integer partition in canonical form: weakly decreasing positive parts,
/// no trailing zeros. Immutable after construction.
class Partition {
public:
    Partition() = default;

    // Sorts and validates; throws std::invalid_argument on non-positive parts.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    long long n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 0-based; rows past the end read as 0.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    int first_part() const { return part(0); }

    // Multiplicity of the part value v.
    int multiplicity(int v) const;

    // inner fits inside *this row by row.
    bool contains(const Partition& inner) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    long long n_ = 0;
};

// Canonical order: by size, then reverse-lexicographic ((n) first, (1^n) last).
bool canonical_less(const Partition& a, const Partition& b);

struct CanonLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return canonical_less(a, b);
    }
};

// Comma-separated parts with optional exponent notation, e.g. "5,3,1" or "2^3,1^2".
// Throws ParseError naming the offending token.
Partition parse_partition(const std::string& text);

Partition conjugate(const Partition& lambda);

// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of cycle type lambda.
BigInt z_of(const Partition& lambda);

// max(lambda_1, lambda'_1) <= c*sqrt(n), decided exactly by squaring.
bool is_balanced(const Partition& lambda, const Rat& c);

Partition disjoint_union(const Partition& mu, const Partition& tau);

/// Streams the partitions of n in canonical (reverse-lexicographic) order.
/// Single-consumer.
class PartitionCursor {
public:
    explicit PartitionCursor(long long n);
    std::optional<Partition> next();

private:
    long long n_;
    std::vector<int> cur_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Partition> all_partitions(long long n);

template <class F>
void for_each_partition(long long n, F&& fn) {
    PartitionCursor cur(n);
    while (auto p = cur.next()) fn(*p);
}

struct SkewShape {
    Partition outer;
    Partition inner;

    // Throws std::invalid_argument unless inner fits inside outer.
    SkewShape(Partition outer_, Partition inner_);

    long long size() const { return outer.n() - inner.n(); }
};

} // namespace hilie
