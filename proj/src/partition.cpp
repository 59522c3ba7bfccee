#include "hilie/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace hilie {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(parts_.rbegin(), parts_.rend());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::multiplicity(int v) const {
    int m = 0;
    for (int p : parts_) m += (p == v);
    return m;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i) {
        if (inner.parts_[static_cast<size_t>(i)] > parts_[static_cast<size_t>(i)]) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

Partition parse_partition(const std::string& text) {
    auto trim = [](std::string s) {
        size_t b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        size_t e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    auto parse_int = [&](const std::string& tok, const std::string& digits) -> long long {
        if (digits.empty() || digits.size() > 9 ||
            !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("malformed partition token '" + tok + "'");
        return std::stoll(digits);
    };

    std::vector<int> parts;
    std::string body = trim(text);
    if (body.empty()) return Partition();

    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::string t = trim(tok);
        if (t.empty()) throw ParseError("malformed partition token '" + tok + "'");
        size_t caret = t.find('^');
        long long value, count = 1;
        if (caret == std::string::npos) {
            value = parse_int(t, t);
        } else {
            value = parse_int(t, trim(t.substr(0, caret)));
            count = parse_int(t, trim(t.substr(caret + 1)));
            if (count <= 0) throw ParseError("non-positive exponent in token '" + t + "'");
        }
        if (value <= 0) throw ParseError("non-positive part in token '" + t + "'");
        if (count > 100000 || parts.size() + static_cast<size_t>(count) > 100000)
            throw ParseError("partition too large in token '" + t + "'");
        for (long long k = 0; k < count; ++k) parts.push_back(static_cast<int>(value));
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return Partition();
    std::vector<int> cols(static_cast<size_t>(lambda.first_part()));
    for (size_t j = 0; j < cols.size(); ++j) {
        int c = 0;
        for (int p : lambda.parts()) c += (p > static_cast<int>(j));
        cols[j] = c;
    }
    return Partition(std::move(cols));
}

BigInt z_of(const Partition& lambda) {
    BigInt z = 1;
    const auto& ps = lambda.parts();
    size_t i = 0;
    while (i < ps.size()) {
        size_t j = i;
        while (j < ps.size() && ps[j] == ps[i]) ++j;
        size_t m = j - i;
        for (size_t k = 0; k < m; ++k) z *= ps[i];
        z *= factorial(static_cast<long long>(m));
        i = j;
    }
    return z;
}

bool is_balanced(const Partition& lambda, const Rat& c) {
    if (c <= 0) throw std::invalid_argument("is_balanced: c must be positive");
    long long m = std::max(lambda.first_part(), lambda.length());
    return Rat(m) * m <= c * c * lambda.n();
}

Partition disjoint_union(const Partition& mu, const Partition& tau) {
    std::vector<int> parts = mu.parts();
    parts.insert(parts.end(), tau.parts().begin(), tau.parts().end());
    return Partition(std::move(parts));
}

PartitionCursor::PartitionCursor(long long n) : n_(n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
}

std::optional<Partition> PartitionCursor::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (n_ > 0) cur_.assign(1, static_cast<int>(n_));
        Partition out;
        if (!cur_.empty()) out = Partition(cur_);
        if (n_ == 0) done_ = true;
        return out;
    }
    // Successor in reverse-lex order: shrink the last part > 1 and
    // redistribute the tail greedily.
    int i = static_cast<int>(cur_.size()) - 1;
    while (i >= 0 && cur_[static_cast<size_t>(i)] == 1) --i;
    if (i < 0) {
        done_ = true;
        return std::nullopt;
    }
    long long rem = cur_[static_cast<size_t>(i)] + (static_cast<long long>(cur_.size()) - i - 1);
    int x = cur_[static_cast<size_t>(i)] - 1;
    cur_.resize(static_cast<size_t>(i));
    while (rem >= x) {
        cur_.push_back(x);
        rem -= x;
    }
    if (rem > 0) cur_.push_back(static_cast<int>(rem));
    return Partition(cur_);
}

std::vector<Partition> all_partitions(long long n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("skew shape: inner does not fit inside outer");
}

} // namespace hilie
