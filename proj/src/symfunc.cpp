#include "hilie/symfunc.hpp"

#include <functional>

#include "hilie/characters.hpp"
#include "hilie/tableaux.hpp"

namespace hilie {

const char* basis_name(Basis b) { return b == Basis::Schur ? "schur" : "power"; }

SymFunc SymFunc::zero(long long degree, Basis b) { return SymFunc(degree, b); }

SymFunc SymFunc::unit(Basis b) {
    SymFunc f(0, b);
    f.coeffs_.emplace(Partition(), Rat(1));
    return f;
}

SymFunc SymFunc::schur(Partition lambda) {
    SymFunc f(lambda.n(), Basis::Schur);
    f.coeffs_.emplace(std::move(lambda), Rat(1));
    return f;
}

SymFunc SymFunc::power(Partition mu) {
    SymFunc f(mu.n(), Basis::Power);
    f.coeffs_.emplace(std::move(mu), Rat(1));
    return f;
}

SymFunc SymFunc::complete_h(long long k) {
    SymFunc f(k, Basis::Power);
    for_each_partition(k, [&](const Partition& mu) {
        f.coeffs_.emplace(mu, Rat(1, z_of(mu)));
    });
    return f;
}

SymFunc SymFunc::elementary_e(long long k) {
    SymFunc f(k, Basis::Power);
    for_each_partition(k, [&](const Partition& mu) {
        Rat c(1, z_of(mu));
        if ((k - mu.length()) % 2) c = -c;
        f.coeffs_.emplace(mu, c);
    });
    return f;
}

Rat SymFunc::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void SymFunc::set_coeff(Partition p, Rat c) {
    if (p.n() != degree_)
        throw std::invalid_argument("SymFunc: coefficient key of wrong degree");
    if (c == 0)
        coeffs_.erase(p);
    else
        coeffs_[std::move(p)] = std::move(c);
}

void SymFunc::add_coeff(const Partition& p, const Rat& c) {
    if (p.n() != degree_)
        throw std::invalid_argument("SymFunc: coefficient key of wrong degree");
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
        if (c != 0) coeffs_.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
}

bool SymFunc::operator==(const SymFunc& o) const {
    return degree_ == o.degree_ && basis_ == o.basis_ && coeffs_ == o.coeffs_;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (basis_ != o.basis_ || degree_ != o.degree_)
        throw std::invalid_argument("SymFunc::operator+=: basis/degree mismatch");
    for (const auto& [p, c] : o.coeffs_) add_coeff(p, c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [p, c] : coeffs_) c *= scalar;
    return *this;
}

SymFunc operator+(SymFunc a, const SymFunc& b) {
    a += b;
    return a;
}

SymFunc operator*(SymFunc a, const Rat& scalar) {
    a *= scalar;
    return a;
}

nlohmann::json SymFunc::to_json() const {
    nlohmann::json j;
    j["degree"] = degree_;
    j["basis"] = basis_name(basis_);
    auto terms = nlohmann::json::array();
    for (const auto& [p, c] : coeffs_) {
        nlohmann::json t;
        t["partition"] = p.parts();
        t["num"] = rat_num(c).str();
        t["den"] = rat_den(c).str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

SymFunc schur_to_power(const SymFunc& f) {
    if (f.basis() != Basis::Schur)
        throw std::invalid_argument("schur_to_power: input not in Schur basis");
    SymFunc out = SymFunc::zero(f.degree(), Basis::Power);
    if (f.is_zero()) return out;
    if (f.degree() == 0) {
        out.add_coeff(Partition(), f.coeff(Partition()));
        return out;
    }
    auto table = char_table(f.degree());
    for (const auto& mu : table->order()) {
        Rat total = 0;
        for (const auto& [nu, c] : f.coeffs()) total += c * Rat(table->value(nu, mu));
        if (total != 0) out.set_coeff(mu, total / Rat(z_of(mu)));
    }
    return out;
}

SymFunc power_to_schur(const SymFunc& f) {
    if (f.basis() != Basis::Power)
        throw std::invalid_argument("power_to_schur: input not in Power basis");
    SymFunc out = SymFunc::zero(f.degree(), Basis::Schur);
    if (f.is_zero()) return out;
    if (f.degree() == 0) {
        out.add_coeff(Partition(), f.coeff(Partition()));
        return out;
    }
    auto table = char_table(f.degree());
    for (const auto& nu : table->order()) {
        Rat total = 0;
        for (const auto& [mu, c] : f.coeffs()) total += c * Rat(table->value(nu, mu));
        if (total != 0) out.set_coeff(nu, total);
    }
    return out;
}

SymFunc to_basis(const SymFunc& f, Basis b) {
    if (f.basis() == b) return f;
    return b == Basis::Power ? schur_to_power(f) : power_to_schur(f);
}

BigInt lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.n() + mu.n() != nu.n())
        throw std::invalid_argument("lr_coeff: |lambda| + |mu| != |nu|");
    if (!nu.contains(lambda)) return 0;
    if (mu.empty()) return 1;

    // Count semistandard fillings of nu/lambda with content mu whose reverse
    // reading word is a ballot word. Cells are filled rows top to bottom,
    // right to left, so the right neighbor and the cell above are both known.
    int rows = nu.length();
    int letters = mu.length();
    std::vector<std::vector<int>> grid(static_cast<size_t>(rows),
                                       std::vector<int>(static_cast<size_t>(nu.first_part()), 0));
    std::vector<int> count(static_cast<size_t>(letters) + 1, 0);

    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int i = 0; i < rows; ++i)
        for (int j = nu.part(i) - 1; j >= lambda.part(i); --j) cells.push_back({i, j});

    BigInt total = 0;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            total += 1;
            return;
        }
        auto [i, j] = cells[k];
        int lo = 1, hi = letters;
        if (i > 0 && j >= lambda.part(i - 1))
            lo = std::max(lo, grid[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + 1);
        if (j + 1 < nu.part(i))
            hi = std::min(hi, grid[static_cast<size_t>(i)][static_cast<size_t>(j + 1)]);
        for (int t = lo; t <= hi; ++t) {
            if (count[static_cast<size_t>(t)] >= mu.part(t - 1)) continue;
            if (t > 1 && count[static_cast<size_t>(t)] >= count[static_cast<size_t>(t - 1)])
                continue;
            count[static_cast<size_t>(t)]++;
            grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
            rec(k + 1);
            count[static_cast<size_t>(t)]--;
        }
    };
    rec(0);
    return total;
}

namespace {

SymFunc mul_power(const SymFunc& f, const SymFunc& g) {
    SymFunc out = SymFunc::zero(f.degree() + g.degree(), Basis::Power);
    for (const auto& [a, ca] : f.coeffs())
        for (const auto& [b, cb] : g.coeffs()) out.add_coeff(disjoint_union(a, b), ca * cb);
    return out;
}

SymFunc mul_schur(const SymFunc& f, const SymFunc& g) {
    long long total = f.degree() + g.degree();
    SymFunc out = SymFunc::zero(total, Basis::Schur);
    std::vector<Partition> targets = all_partitions(total);
    for (const auto& [a, ca] : f.coeffs()) {
        for (const auto& [b, cb] : g.coeffs()) {
            Rat w = ca * cb;
            for (const auto& nu : targets) {
                if (!nu.contains(a)) continue;
                BigInt c = lr_coeff(a, b, nu);
                if (c != 0) out.add_coeff(nu, w * Rat(c));
            }
        }
    }
    return out;
}

} // namespace

SymFunc mul(const SymFunc& f, const SymFunc& g) {
    if (f.basis() == Basis::Power && g.basis() == Basis::Power) return mul_power(f, g);
    if (f.basis() == Basis::Schur && g.basis() == Basis::Schur) return mul_schur(f, g);
    return mul_power(to_basis(f, Basis::Power), to_basis(g, Basis::Power));
}

SymFunc operator*(const SymFunc& f, const SymFunc& g) { return mul(f, g); }

SymFunc plethysm_p(long long m, const SymFunc& f) {
    if (m < 1) throw std::invalid_argument("plethysm_p: m must be >= 1");
    SymFunc fp = to_basis(f, Basis::Power);
    SymFunc out = SymFunc::zero(fp.degree() * m, Basis::Power);
    for (const auto& [mu, c] : fp.coeffs()) {
        std::vector<int> scaled = mu.parts();
        for (int& x : scaled) x = static_cast<int>(x * m);
        out.add_coeff(Partition(std::move(scaled)), c);
    }
    return out;
}

namespace {

SymFunc plethysm_zsum(long long k, const SymFunc& f, bool signed_e) {
    if (k < 0) throw std::invalid_argument("plethysm: k must be >= 0");
    if (k == 0) return SymFunc::unit(Basis::Power);
    SymFunc fp = to_basis(f, Basis::Power);
    SymFunc out = SymFunc::zero(fp.degree() * k, Basis::Power);
    for_each_partition(k, [&](const Partition& mu) {
        SymFunc term = SymFunc::unit(Basis::Power);
        for (int part : mu.parts()) term = mul(term, plethysm_p(part, fp));
        Rat scale(1, z_of(mu));
        if (signed_e && (k - mu.length()) % 2) scale = -scale;
        term *= scale;
        out += term;
    });
    return out;
}

} // namespace

SymFunc plethysm_h(long long k, const SymFunc& f) { return plethysm_zsum(k, f, false); }

SymFunc plethysm_e(long long k, const SymFunc& f) { return plethysm_zsum(k, f, true); }

SymFunc omega(const SymFunc& f) {
    SymFunc out = SymFunc::zero(f.degree(), f.basis());
    for (const auto& [p, c] : f.coeffs()) {
        if (f.basis() == Basis::Power) {
            Rat v = c;
            if ((p.n() - p.length()) % 2) v = -v;
            out.set_coeff(p, v);
        } else {
            out.set_coeff(conjugate(p), c);
        }
    }
    return out;
}

SymFunc h1_power(long long n) {
    if (n < 0) throw std::invalid_argument("h1_power: n must be >= 0");
    if (n == 0) return SymFunc::unit(Basis::Schur);
    SymFunc out = SymFunc::zero(n, Basis::Schur);
    // f^lambda via the hook length formula; this route must stay independent
    // of the character table.
    for_each_partition(n, [&](const Partition& lam) { out.set_coeff(lam, Rat(f_hook(lam))); });
    return out;
}

Rat inner(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("inner: degree mismatch");
    const SymFunc* a = &f;
    const SymFunc* b = &g;
    SymFunc conv;
    if (f.basis() != g.basis()) {
        conv = to_basis(g, f.basis());
        b = &conv;
    }
    Rat total = 0;
    if (a->basis() == Basis::Schur) {
        for (const auto& [p, c] : a->coeffs()) {
            Rat d = b->coeff(p);
            if (d != 0) total += c * d;
        }
    } else {
        for (const auto& [p, c] : a->coeffs()) {
            Rat d = b->coeff(p);
            if (d != 0) total += c * d * Rat(z_of(p));
        }
    }
    return total;
}

} // namespace hilie
