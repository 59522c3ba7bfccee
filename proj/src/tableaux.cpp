#include "hilie/tableaux.hpp"

#include <algorithm>

namespace hilie {

DescentStats descent_maj(const Tableau& t) {
    DescentStats out;
    for (size_t i = 1; i < t.row_of.size(); ++i) {
        if (t.row_of[i] > t.row_of[i - 1]) {
            out.descents.push_back(static_cast<int>(i));
            out.maj += static_cast<long long>(i);
        }
    }
    return out;
}

BigInt f_hook(const Partition& lambda) {
    if (lambda.empty()) return 1;
    Partition conj = conjugate(lambda);
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.part(i); ++j) {
            hooks *= (lambda.part(i) - j) + (conj.part(j) - i) - 1;
        }
    }
    return factorial(lambda.n()) / hooks;
}

BigInt f_skew(const SkewShape& shape) {
    const Partition& lam = shape.outer;
    const Partition& mu = shape.inner;
    int l = lam.length();
    if (l == 0) return 1;
    long long m = shape.size();

    // Matrix of 1/(lam_i - mu_j - i + j)! over rationals, determinant by
    // Gaussian elimination.
    std::vector<std::vector<Rat>> a(static_cast<size_t>(l), std::vector<Rat>(static_cast<size_t>(l)));
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            long long arg = static_cast<long long>(lam.part(i)) - mu.part(j) - i + j;
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                arg < 0 ? Rat(0) : Rat(1, factorial(arg));
        }
    }
    Rat det = 1;
    for (int c = 0; c < l; ++c) {
        int piv = -1;
        for (int r = c; r < l; ++r) {
            if (a[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(c)]);
            det = -det;
        }
        const Rat& pv = a[static_cast<size_t>(c)][static_cast<size_t>(c)];
        det *= pv;
        for (int r = c + 1; r < l; ++r) {
            Rat factor = a[static_cast<size_t>(r)][static_cast<size_t>(c)] / pv;
            if (factor == 0) continue;
            for (int k = c; k < l; ++k) {
                a[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
                    factor * a[static_cast<size_t>(c)][static_cast<size_t>(k)];
            }
        }
    }
    Rat count = det * factorial(m);
    if (!is_integer(count) || count < 0)
        throw InternalError("skew determinant did not produce a non-negative integer");
    return rat_num(count);
}

SytCursor::SytCursor(Partition shape)
    : shape_(std::move(shape)),
      fill_(static_cast<size_t>(shape_.length()), 0),
      n_(static_cast<size_t>(shape_.n())) {
    row_of_.resize(n_);
}

// Greedily fills positions pos..n-1 with the smallest feasible rows.
bool SytCursor::extend_from(size_t pos) {
    const auto& s = shape_.parts();
    for (size_t k = pos; k < n_; ++k) {
        int chosen = -1;
        for (size_t r = 0; r < s.size(); ++r) {
            if (fill_[r] < s[r] && (r == 0 || fill_[r - 1] > fill_[r])) {
                chosen = static_cast<int>(r);
                break;
            }
        }
        if (chosen < 0) return false;
        fill_[static_cast<size_t>(chosen)]++;
        row_of_[k] = chosen;
    }
    return true;
}

std::optional<Tableau> SytCursor::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (!extend_from(0)) {
            done_ = true;
            return std::nullopt;
        }
        return Tableau{shape_, row_of_};
    }
    if (n_ == 0) {
        done_ = true;
        return std::nullopt;
    }
    const auto& s = shape_.parts();
    size_t pos = n_;
    while (pos > 0) {
        --pos;
        int old = row_of_[pos];
        fill_[static_cast<size_t>(old)]--;
        for (size_t r = static_cast<size_t>(old) + 1; r < s.size(); ++r) {
            if (fill_[r] < s[r] && (r == 0 || fill_[r - 1] > fill_[r])) {
                fill_[r]++;
                row_of_[pos] = static_cast<int>(r);
                if (extend_from(pos + 1)) return Tableau{shape_, row_of_};
                fill_[r]--;
            }
        }
    }
    done_ = true;
    return std::nullopt;
}

BigInt MajProfile::total() const {
    BigInt t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

nlohmann::json MajProfile::to_json() const {
    nlohmann::json j;
    j["shape"] = shape.parts();
    j["modulus"] = modulus;
    auto arr = nlohmann::json::array();
    for (const auto& c : counts) arr.push_back(c.str());
    j["counts"] = std::move(arr);
    return j;
}

MajProfile maj_mod_profile(const Partition& lambda, int modulus) {
    if (modulus < 1) throw std::invalid_argument("maj_mod_profile: modulus must be >= 1");
    MajProfile out;
    out.shape = lambda;
    out.modulus = modulus;
    out.counts.assign(static_cast<size_t>(modulus), BigInt(0));
    for_each_syt(lambda, [&](const std::vector<int>& row_of) {
        long long maj = 0;
        for (size_t i = 1; i < row_of.size(); ++i) {
            if (row_of[i] > row_of[i - 1]) maj += static_cast<long long>(i);
        }
        out.counts[static_cast<size_t>(maj % modulus)] += 1;
    });
    return out;
}

SwansonCheck swanson_check(const MajProfile& profile, long long r) {
    long long n = profile.shape.n();
    if (n < 1) throw std::invalid_argument("swanson_check: need |lambda| >= 1");
    if (profile.modulus != static_cast<int>(n))
        throw std::invalid_argument("swanson_check: profile modulus must equal n");
    BigInt f = profile.total();
    long long rr = ((r % n) + n) % n;
    Rat gap = Rat(profile.counts[static_cast<size_t>(rr)]) / Rat(f) - Rat(1, n);
    gap = abs(gap);
    Rat bound_sq = Rat(BigInt(4) * n * n * n, f);
    return SwansonCheck{gap, bound_sq, gap * gap <= bound_sq};
}

SwansonCheck swanson_check(const Partition& lambda, long long r) {
    return swanson_check(maj_mod_profile(lambda, static_cast<int>(lambda.n())), r);
}

SkewRatio skew_ratio_report(const Partition& nu, const Partition& beta) {
    SkewRatio out;
    long long m = beta.n();
    out.rhs = Rat(f_hook(beta), factorial(m));
    if (!nu.contains(beta)) {
        out.lhs = 0;
        return out;
    }
    out.lhs = Rat(f_skew(SkewShape(nu, beta)), f_hook(nu));
    return out;
}

} // namespace hilie
