#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "menon/chargroup.hpp"
#include "menon/cyclotomic.hpp"
#include "menon/evenfn.hpp"

namespace menon {

enum class IdentityId {
    T2_1,
    C2_2,
    C2_3,
    BRAUER_RADEMACHER,
    T2_4,
    C2_5,
    EQ_MENON_S,
    C2_6,
    T2_7,
    C2_8_SIGMA,
    C2_8_TAU,
    ZHAO_CAO_1_1,
    MENON_1_2,
    PRIMITIVE_1_3,
    MULT_REMARK,
};

std::string to_string(IdentityId id);
IdentityId identity_from_string(const std::string& tag);
const std::vector<IdentityId>& all_identities();

// Parameter tuple for one verification instance. Only the fields an
// identity consumes are meaningful; for MULT_REMARK the second modulus
// travels in d.
struct IdentityParams {
    std::uint64_t n = 1;
    std::optional<std::size_t> chi; // index into characters(n)
    std::optional<std::uint64_t> d;
    std::optional<std::int64_t> r;
    std::optional<std::int64_t> s;
    std::string f_name;
    std::uint64_t budget = EvenFunction::kDefaultBudget;
};

struct IdentityReport {
    IdentityId id;
    IdentityParams params;
    std::string chi_label; // serialized character, empty if none
    CyclotomicInteger lhs;
    CyclotomicInteger rhs;
    bool equal = false;
    std::int64_t lhs_micros = 0;
    std::int64_t rhs_micros = 0;
};

// --- Restricted-congruence sums (no characters) ---------------------------

// sum over k in [1, n], (k, n) = 1, k == r (mod d), of f(k - s); requires d | n.
Int lhs_restricted(std::uint64_t n, std::uint64_t d, std::int64_t r, std::int64_t s,
                   const EvenFunction& f);

// Closed form: 0 if (r, d) > 1, else
// (phi(n)/phi(d)) * sum over e | n, (e, s) = 1, (e, d) | r - s,
// of (mu*f)(e)/phi(e) * phi((e, d)). Exact rational accumulation, asserted integral.
Int rhs_theorem_2_1(std::uint64_t n, std::uint64_t d, std::int64_t r, std::int64_t s,
                    const EvenFunction& f);

// Specialization (mu*f)(e) = phi(e), i.e. f(k) = (k, n).
Int rhs_cor_2_2(std::uint64_t n, std::uint64_t d, std::int64_t r, std::int64_t s);

// Specialization (mu*f)(e) = e mu(n/e), i.e. f(k) = c_n(k).
Int rhs_cor_2_3(std::uint64_t n, std::uint64_t d, std::int64_t r, std::int64_t s);

// lhs = sum over (k, n) = 1 of c_n(k - s) by enumeration; rhs = mu(n) c_n(s).
std::pair<Int, Int> brauer_rademacher(std::uint64_t n, std::int64_t s);

// --- Character-twisted sums ------------------------------------------------

// sum over k in [1, n] of f(k - s) chi(k), exact in Z[zeta_L].
CyclotomicInteger lhs_char_sum(std::uint64_t n, const DirichletCharacter& chi, std::int64_t s,
                               const EvenFunction& f);

// phi(n) chi*(s) sum over delta | n/d, (delta, s) = 1, of (mu*f)(delta d)/phi(delta d),
// with d = conductor(chi) and chi* the inducing primitive character.
CyclotomicInteger rhs_theorem_2_4(std::uint64_t n, const DirichletCharacter& chi, std::int64_t s,
                                  const EvenFunction& f);

// phi(n) chi*(s) * #{delta | n/d : (delta, s) = 1}.
CyclotomicInteger rhs_cor_2_5(std::uint64_t n, const DirichletCharacter& chi, std::int64_t s);

// d phi(n) chi*(s) sum over delta | n/d, (delta, s) = 1, of delta mu(n/(delta d))/phi(delta d).
CyclotomicInteger rhs_cor_2_6(std::uint64_t n, const DirichletCharacter& chi, std::int64_t s);

// (mu*f)(n) chi(s); requires chi primitive.
CyclotomicInteger rhs_theorem_2_7(std::uint64_t n, const DirichletCharacter& chi, std::int64_t s,
                                  const EvenFunction& f);

enum class ArithFnTag { Tau, Sigma, Phi, Id };
std::string to_string(ArithFnTag tag);
ArithFnTag arith_fn_from_string(const std::string& name);

// (mu*F)(n) chi(s) for f(k) = F((k, n)); requires chi primitive.
// For F = sigma this is n chi(s); for F = tau it is chi(s).
CyclotomicInteger rhs_cor_2_8(std::uint64_t n, const DirichletCharacter& chi, std::int64_t s,
                              ArithFnTag big_f);

// (mu*F)(n), computed by Dirichlet convolution over the divisors of n.
Int mu_star_of(ArithFnTag big_f, std::uint64_t n);

// Checks (mu*F)(n1 n2) = (mu*F)(n1) (mu*F)(n2); requires (n1, n2) = 1.
bool multiplicativity_check(ArithFnTag big_f, std::uint64_t n1, std::uint64_t n2);

// --- Gcd-sum fast path ------------------------------------------------------

// phi(n) * #{delta | n : (delta, s) = 1}, O(tau(n)) after factorization.
Int menon_gcd_sum_fast(std::uint64_t n, std::int64_t s);

// The O(n) oracle: sum over (k, n) = 1 of (k - s, n).
Int naive_gcd_sum(std::uint64_t n, std::int64_t s);

// --- Verification -----------------------------------------------------------

// Computes the identity's LHS by brute-force enumeration and its RHS by
// closed form, compares exactly, and times both sides. A mismatch is a
// report outcome, never an error.
IdentityReport verify(IdentityId id, const IdentityParams& params);

// --- Sweep enumeration --------------------------------------------------------

struct SPolicy {
    enum class Kind { All, List, Sample };
    Kind kind = Kind::All;
    std::vector<std::int64_t> list;   // Kind::List
    std::uint32_t sample_count = 16;  // Kind::Sample
    std::uint64_t seed = 0;           // Kind::Sample
};

struct SweepOptions {
    std::uint64_t n_min = 1;
    std::uint64_t n_max = 1;
    SPolicy s_policy;
    std::vector<std::string> f_names; // empty: identity-specific default
    std::uint64_t budget = EvenFunction::kDefaultBudget;
};

// Deterministic parameter enumeration for an identity sweep. Identities
// that need primitive characters skip moduli without one.
std::vector<IdentityParams> enumerate_sweep(IdentityId id, const SweepOptions& options);

// The s values the policy yields for modulus n (sorted, deduplicated,
// canonicalized into [0, n)). Sampling is seeded per modulus so results do
// not depend on sweep order.
std::vector<std::int64_t> s_values_for(const SPolicy& policy, std::uint64_t n);

} // namespace menon
