#pragma once

#include "hilie/symfunc.hpp"

namespace hilie {

/// Selects a higher Lie character: the diagram lambda and the cyclic twist r.
/// r = 1 is the higher Lie character itself, r = 0 the conjugacy character.
struct LieSpec {
    Partition lambda;
    long long twist = 1;
};

struct Residual {
    Partition lambda;
    Partition nu;
    BigInt multiplicity;
    Rat r; // multiplicity = (f^nu / z_lambda) * (1 + r), exactly

    nlohmann::json to_json() const;
};

// Frobenius image of the twisted one-row Lie character: the coefficient of
// s_nu counts SYT of shape nu with maj = r (mod n). r = 1 gives Lie_n.
SymFunc lie_r(long long n, long long r);

// Independent cross-check for lie_r(n, 1): the Witt-style expansion
// Lie_n = (1/n) sum_{d | n} moebius(d) p_d^{n/d}, in the power basis.
SymFunc lie_witt_oracle(long long n);

// L_lambda = prod_i h_{m_i}[lie_r(i, r)] for lambda = (1^{m_1} 2^{m_2} ...),
// returned in the Schur basis. Coefficients are checked to be non-negative
// integers; a violation raises InternalError.
SymFunc higher_lie(const LieSpec& spec);

// sum_{lambda |- n} L_lambda; equals h1_power(n).
SymFunc regular_sum(long long n);

// Sum of L_lambda over lambda with no part equal to 1.
SymFunc derangement_char(long long n);

// sum_lambda of the twist-0 characters; the full conjugacy character.
SymFunc conjugacy_char_total(long long n);

// omega(Lie_n): the top-cohomology / sign-twisted Lie character.
SymFunc top_cohomology_char(long long n);

// Exact multiplicity <L_lambda, s_nu> and relative residual
// R = z_lambda * mult / f^nu - 1.
Residual regularity_residual(const LieSpec& spec, const Partition& nu);

// Checks L_{mu u tau} = L_mu * L_tau. Requires the parts of mu and tau to be
// disjoint; a shared part raises std::invalid_argument.
bool gluing_check(const Partition& mu, const Partition& tau);

// Every nu in the support of L_{(n-k,1^k)} has nu_1 >= k.
bool hook_support_check(long long n, long long k);

} // namespace hilie
