#include "hilie/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hilie/parallel.hpp"

namespace hilie {

namespace {

// Border-strip removals via beta-sets (first-column hook lengths).
// For B = {parts[i] + l-1-i}, removing a strip of length t means replacing
// some b in B by b-t (if absent and >= 0); the sign is (-1)^{#B in (b-t, b)}.
std::vector<std::pair<std::vector<int>, int>> remove_border_strips(const std::vector<int>& parts,
                                                                   int t) {
    std::vector<std::pair<std::vector<int>, int>> out;
    int l = static_cast<int>(parts.size());
    std::vector<int> beta(parts.begin(), parts.end());
    for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] += l - 1 - i;

    for (int i = 0; i < l; ++i) {
        int nb = beta[static_cast<size_t>(i)] - t;
        if (nb < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            int bj = beta[static_cast<size_t>(j)];
            if (bj == nb) {
                clash = true;
                break;
            }
            if (bj > nb && bj < beta[static_cast<size_t>(i)]) ++height;
        }
        if (clash) continue;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nparts;
        nparts.reserve(static_cast<size_t>(l));
        for (int k = 0; k < l; ++k) {
            int p = nbeta[static_cast<size_t>(k)] - (l - 1 - k);
            if (p > 0) nparts.push_back(p);
        }
        out.emplace_back(std::move(nparts), (height % 2) ? -1 : 1);
    }
    return out;
}

using MemoKey = std::vector<int>;

MemoKey make_key(const std::vector<int>& shape, const std::vector<int>& mu, size_t k) {
    MemoKey key = shape;
    key.push_back(-1);
    key.insert(key.end(), mu.begin() + static_cast<long>(k), mu.end());
    return key;
}

// Consumes mu parts largest-first (mu is canonically sorted already).
BigInt mn_rec(const std::vector<int>& shape, const std::vector<int>& mu, size_t k,
              std::map<MemoKey, BigInt>& memo) {
    if (k == mu.size()) return shape.empty() ? 1 : 0;
    MemoKey key = make_key(shape, mu, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    for (auto& [nshape, sign] : remove_border_strips(shape, mu[k])) {
        BigInt sub = mn_rec(nshape, mu, k + 1, memo);
        if (sign > 0)
            total += sub;
        else
            total -= sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

BigInt mn_char(const Partition& nu, const Partition& mu) {
    if (nu.n() != mu.n()) throw std::invalid_argument("mn_char: |nu| != |mu|");
    std::map<MemoKey, BigInt> memo;
    return mn_rec(nu.parts(), mu.parts(), 0, memo);
}

BigInt frobenius_char_oracle(const Partition& nu, const Partition& mu) {
    if (nu.n() != mu.n()) throw std::invalid_argument("frobenius_char_oracle: |nu| != |mu|");
    long long n = nu.n();
    if (n > 8) throw std::invalid_argument("frobenius_char_oracle: refuses n > 8");
    if (n == 0) return 1;

    // Target exponent vector nu + delta with delta = (n-1, n-2, ..., 0).
    std::vector<long long> target(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i)
        target[static_cast<size_t>(i)] = nu.part(static_cast<int>(i)) + (n - 1 - i);

    const auto& parts = mu.parts();
    BigInt total = 0;

    // Assign each power-sum part to a variable; what remains of the target
    // must be sgn(w) * w(delta) for a permutation w.
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == parts.size()) {
            unsigned mask = 0;
            for (long long v : target) {
                if (v < 0 || v >= n) return;
                unsigned bit = 1u << v;
                if (mask & bit) return;
                mask |= bit;
            }
            int inversions = 0;
            for (size_t i = 0; i < target.size(); ++i)
                for (size_t j = i + 1; j < target.size(); ++j)
                    if (target[i] < target[j]) ++inversions;
            if (inversions % 2)
                total -= 1;
            else
                total += 1;
            return;
        }
        for (size_t v = 0; v < static_cast<size_t>(n); ++v) {
            if (target[v] < parts[k]) continue;
            target[v] -= parts[k];
            rec(k + 1);
            target[v] += parts[k];
        }
    };
    rec(0);
    return total;
}

size_t CharTable::index_of(const Partition& p) const {
    auto it = std::lower_bound(order_.begin(), order_.end(), p, CanonLess{});
    if (it == order_.end() || !(*it == p))
        throw std::invalid_argument("CharTable: partition not of size n");
    return static_cast<size_t>(it - order_.begin());
}

const BigInt& CharTable::value(const Partition& nu, const Partition& mu) const {
    return values_[index_of(nu)][index_of(mu)];
}

const BigInt& CharTable::dim(const Partition& nu) const {
    // (1^n) is last in canonical order.
    return values_[index_of(nu)][order_.size() - 1];
}

CharTable CharTable::build(long long n, int jobs) {
    if (n < 1) throw std::invalid_argument("char_table: n must be >= 1");
    CharTable t;
    t.n_ = n;
    t.order_ = all_partitions(n);
    size_t p = t.order_.size();
    t.values_.assign(p, std::vector<BigInt>(p));
    parallel_for(p, jobs, [&](size_t i) {
        // One memo per row: distinct mu share suffix states.
        std::map<MemoKey, BigInt> memo;
        for (size_t j = 0; j < p; ++j) {
            t.values_[i][j] = mn_rec(t.order_[i].parts(), t.order_[j].parts(), 0, memo);
        }
    });
    return t;
}

namespace {

std::string table_digest_input(long long n, const std::vector<Partition>& order,
                               const std::vector<std::vector<BigInt>>& values) {
    std::ostringstream os;
    os << "chartab-v1|n=" << n << '|';
    for (const auto& p : order) {
        for (size_t i = 0; i < p.parts().size(); ++i) {
            if (i) os << ',';
            os << p.parts()[i];
        }
        os << ';';
    }
    os << '|';
    for (const auto& row : values) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ',';
            os << row[j];
        }
        os << ';';
    }
    return os.str();
}

std::string hex64(uint64_t v) {
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

std::optional<CharTable> CharTable::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("version").get<int>() != 1) return std::nullopt;
        CharTable t;
        t.n_ = j.at("n").get<long long>();
        for (const auto& arr : j.at("order")) {
            std::vector<int> parts;
            for (const auto& x : arr) parts.push_back(x.get<int>());
            t.order_.emplace_back(std::move(parts));
        }
        if (t.order_ != all_partitions(t.n_)) return std::nullopt;
        size_t p = t.order_.size();
        for (const auto& row : j.at("values")) {
            std::vector<BigInt> r;
            for (const auto& s : row) r.emplace_back(s.get<std::string>());
            if (r.size() != p) return std::nullopt;
            t.values_.push_back(std::move(r));
        }
        if (t.values_.size() != p) return std::nullopt;
        std::string digest = hex64(fnv1a64(table_digest_input(t.n_, t.order_, t.values_)));
        if (digest != j.at("checksum").get<std::string>()) return std::nullopt;
        t.from_cache_ = true;
        return t;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void CharTable::save(const std::filesystem::path& file) const {
    nlohmann::json j;
    j["version"] = 1;
    j["n"] = n_;
    auto order = nlohmann::json::array();
    for (const auto& p : order_) order.push_back(p.parts());
    j["order"] = std::move(order);
    auto values = nlohmann::json::array();
    for (const auto& row : values_) {
        auto r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(v.str());
        values.push_back(std::move(r));
    }
    j["values"] = std::move(values);
    j["checksum"] = hex64(fnv1a64(table_digest_input(n_, order_, values_)));

    std::filesystem::create_directories(file.parent_path());
    std::random_device rd;
    std::filesystem::path tmp =
        file.parent_path() / (file.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << j.dump();
    }
    std::filesystem::rename(tmp, file);
}

namespace {

std::mutex g_cache_mutex;
std::optional<std::filesystem::path> g_cache_override;
int g_table_jobs = 0;
std::map<long long, std::shared_ptr<const CharTable>> g_registry;

} // namespace

void set_cache_directory(std::optional<std::filesystem::path> dir) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache_override = std::move(dir);
}

std::filesystem::path cache_directory() {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        if (g_cache_override) return *g_cache_override;
    }
    if (const char* env = std::getenv("HILIE_CACHE_DIR")) return env;
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "hilie";
    return std::filesystem::temp_directory_path() / "hilie-cache";
}

void set_char_table_jobs(int jobs) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_table_jobs = jobs;
}

void clear_char_table_registry() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_registry.clear();
}

std::shared_ptr<const CharTable> char_table(long long n) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_registry.find(n);
        if (it != g_registry.end()) return it->second;
    }
    std::filesystem::path file =
        cache_directory() / ("chartab-v1-n" + std::to_string(n) + ".json");
    std::shared_ptr<const CharTable> table;
    if (std::filesystem::exists(file)) {
        auto loaded = CharTable::load(file);
        if (loaded && loaded->n() == n) {
            table = std::make_shared<const CharTable>(std::move(*loaded));
        } else {
            std::cerr << "warning: corrupt character-table cache " << file
                      << ", recomputing\n";
        }
    }
    if (!table) {
        int jobs;
        {
            std::lock_guard<std::mutex> lock(g_cache_mutex);
            jobs = g_table_jobs;
        }
        auto built = CharTable::build(n, jobs);
        try {
            built.save(file);
        } catch (const std::exception& e) {
            std::cerr << "warning: could not persist character table: " << e.what() << '\n';
        }
        table = std::make_shared<const CharTable>(std::move(built));
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto [it, inserted] = g_registry.emplace(n, table);
    return it->second;
}

} // namespace hilie
