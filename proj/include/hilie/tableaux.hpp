#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "hilie/partition.hpp"

namespace hilie {

/// A standard Young tableau, stored as the row index receiving each entry:
/// row_of[k] is the 0-based row of entry k+1.
struct Tableau {
    Partition shape;
    std::vector<int> row_of;
};

struct DescentStats {
    std::vector<int> descents; // subset of {1..n-1}
    long long maj = 0;
};

// i is a descent iff entry i+1 sits in a lower row than entry i.
DescentStats descent_maj(const Tableau& t);

// f^lambda by the hook length formula.
BigInt f_hook(const Partition& lambda);

// Skew tableau count by the Aitken determinant
// f^{lambda/mu} = m! * det[ 1/(lambda_i - mu_j - i + j)! ].
BigInt f_skew(const SkewShape& shape);

/// Enumerates SYT of a shape in lexicographic order of the row_of sequence.
/// Single-consumer.
class SytCursor {
public:
    explicit SytCursor(Partition shape);
    std::optional<Tableau> next();

private:
    bool extend_from(size_t pos);

    Partition shape_;
    std::vector<int> row_of_;
    std::vector<int> fill_;
    size_t n_;
    bool started_ = false;
    bool done_ = false;
};

// Visits every row_of sequence of SYT(shape) once, in the SytCursor order.
template <class F>
void for_each_syt(const Partition& shape, F&& fn) {
    const auto& s = shape.parts();
    size_t n = static_cast<size_t>(shape.n());
    std::vector<int> fill(s.size(), 0);
    std::vector<int> row_of(n, 0);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == n) {
            fn(row_of);
            return;
        }
        for (size_t r = 0; r < s.size(); ++r) {
            if (fill[r] < s[r] && (r == 0 || fill[r - 1] > fill[r])) {
                fill[r]++;
                row_of[k] = static_cast<int>(r);
                rec(k + 1);
                fill[r]--;
            }
        }
    };
    rec(0);
}

struct MajProfile {
    Partition shape;
    int modulus = 1;
    std::vector<BigInt> counts; // counts[r] = #{T : maj(T) = r mod modulus}

    BigInt total() const;
    nlohmann::json to_json() const; // {shape, modulus, counts: [decimal strings]}
};

MajProfile maj_mod_profile(const Partition& lambda, int modulus);

struct SwansonCheck {
    Rat gap;      // |counts[r]/f - 1/n|
    Rat bound_sq; // (2 n^{3/2} / sqrt(f))^2 = 4 n^3 / f, kept squared to stay rational
    bool holds;   // gap^2 <= bound_sq, compared exactly
};

SwansonCheck swanson_check(const MajProfile& profile, long long r);
SwansonCheck swanson_check(const Partition& lambda, long long r);

struct SkewRatio {
    Rat lhs; // f^{nu/beta} / f^nu  (0 when beta does not fit)
    Rat rhs; // f^beta / m!
};

SkewRatio skew_ratio_report(const Partition& nu, const Partition& beta);

} // namespace hilie
