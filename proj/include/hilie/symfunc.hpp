#pragma once

#include <map>

#include <json.hpp>

#include "hilie/partition.hpp"

namespace hilie {

enum class Basis { Schur, Power };

const char* basis_name(Basis b);

/// Homogeneous symmetric function of one degree, as a sparse map from
/// partitions of that degree to exact rationals. Zero coefficients are
/// never stored; iteration follows the canonical partition order.
class SymFunc {
public:
    SymFunc() = default;

    static SymFunc zero(long long degree, Basis b);
    static SymFunc unit(Basis b); // degree 0, coefficient 1 at the empty partition
    static SymFunc schur(Partition lambda);
    static SymFunc power(Partition mu);
    static SymFunc complete_h(long long k);   // h_k = sum_{mu |- k} p_mu / z_mu
    static SymFunc elementary_e(long long k); // e_k with signs (-1)^{k - l(mu)}

    long long degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const std::map<Partition, Rat, CanonLess>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rat coeff(const Partition& p) const;
    void set_coeff(Partition p, Rat c); // enforces homogeneity, drops zeros
    void add_coeff(const Partition& p, const Rat& c);

    bool operator==(const SymFunc& o) const;
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    SymFunc& operator+=(const SymFunc& o); // same basis and degree
    SymFunc& operator*=(const Rat& scalar);

    nlohmann::json to_json() const;

private:
    SymFunc(long long degree, Basis b) : degree_(degree), basis_(b) {}

    long long degree_ = 0;
    Basis basis_ = Basis::Schur;
    std::map<Partition, Rat, CanonLess> coeffs_;
};

SymFunc operator+(SymFunc a, const SymFunc& b);
SymFunc operator*(SymFunc a, const Rat& scalar);

// Basis changes through the character table: s_nu = sum chi^nu(mu) p_mu / z_mu
// and p_mu = sum chi^nu(mu) s_nu. Throw std::invalid_argument on a wrong
// input basis.
SymFunc schur_to_power(const SymFunc& f);
SymFunc power_to_schur(const SymFunc& f);
SymFunc to_basis(const SymFunc& f, Basis b);

// Littlewood-Richardson coefficient c^nu_{lambda,mu} by direct counting of
// ballot-word skew tableaux. Throws on |lambda| + |mu| != |nu|.
BigInt lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

// Product. Power x Power multiplies by part-multiset union; Schur x Schur
// goes through LR coefficients; mixed inputs are converted to the power basis.
SymFunc mul(const SymFunc& f, const SymFunc& g);
SymFunc operator*(const SymFunc& f, const SymFunc& g);

// Plethysms. p_m[f] substitutes p_i -> p_{i*m}; h_k and e_k expand through
// the power basis: h_k[f] = sum_{mu |- k} (prod_j p_{mu_j}[f]) / z_mu, and
// e_k with signs (-1)^{k - l(mu)}. Results are in the power basis.
SymFunc plethysm_p(long long m, const SymFunc& f);
SymFunc plethysm_h(long long k, const SymFunc& f);
SymFunc plethysm_e(long long k, const SymFunc& f);

// The classical involution: negates p_mu by (-1)^{|mu| - l(mu)}, transposes
// Schur indices.
SymFunc omega(const SymFunc& f);

// h_1^n = sum_{lambda |- n} f^lambda s_lambda, in the Schur basis.
SymFunc h1_power(long long n);

// Hall inner product; basis-independent. Throws on degree mismatch.
Rat inner(const SymFunc& f, const SymFunc& g);

} // namespace hilie
