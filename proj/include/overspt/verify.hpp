#ifndef OVERSPT_VERIFY_HPP
#define OVERSPT_VERIFY_HPP

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "overspt/genfun.hpp"
#include "overspt/series.hpp"

namespace overspt {

enum class IdentityId {
	ThmSptk,              // definitional Sptk vs assembled right-hand side
	ThmSptkClosed,        // pbar recurrence vs closed form
	ThmSptkSigned,        // definitional SptkSigned vs right-hand side
	ThmSptko,             // definitional SptkOdd vs right-hand side
	ThmSptkoClosed,       // vbar and wbar recurrences vs closed forms
	ThmSptkoSigned,       // definitional SptkOddSigned vs right-hand side
	ThmSptkoSignedClosed, // tbar recurrence vs closed form
	CorSptk,              // spt1(n) + spt1(n-1) = no-non-overlined-1 count
	CorSptko,             // spt1_o(n) + spt1_o(n-2) = 2 pbar_e(n-1) + pbar_oex(n-1)
	CorSptkoSigned,       // spt1_o'(n) + spt1_o'(n-2) = -pbar_oex'(n-1)
	QBinom,               // q-binomial theorem at a = -q, z = q^k
	Asv,                  // Andrews-Subbarao-Vidyasagar at fixed specializations
	OracleCrosscheck,     // series coefficients vs exhaustive enumeration
};

struct Mismatch {
	int index;
	Coeff lhs;
	Coeff rhs;
};

struct VerificationReport {
	IdentityId identity;
	std::optional<int> k;
	int order = 0;
	bool passed = false;
	std::optional<Mismatch> first_mismatch;
	/* Extra diagnostics, e.g. which Pochhammer index variant held or
	 * which route (series/oracle) produced the mismatch. */
	std::string note;
	std::chrono::duration<double, std::milli> elapsed{0};
};

inline constexpr int kDefaultOracleBound = 24;

/* Runs one identity check. k selects the family member where the
 * identity is k-parameterized (theorems, QBinom), the specialization
 * index for Asv, and the spt multiplicity for OracleCrosscheck; it is
 * ignored by the corollary checks. Failures are reported, not thrown. */
VerificationReport verify_identity(IdentityId id, int k, int order,
                                   int oracle_bound = kDefaultOracleBound);

/* Every identity over k = 1..kmax (where applicable), the classical
 * identities over their fixed specializations, in deterministic order. */
std::vector<VerificationReport> verify_all(int kmax, int order, int oracle_bound);

/* Parameter sets for the Andrews-Subbarao-Vidyasagar checks: the first
 * three are the specializations the proofs quote directly, the last two
 * are the companion sums used alongside them. */
struct AsvSpecialization {
	Monomial a;
	Monomial b;
	int base;
	std::string_view origin;
};
std::span<const AsvSpecialization> asv_specializations();

/* True when the identity takes a k parameter in verify_all. */
bool identity_is_k_parameterized(IdentityId id);

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);
std::span<const IdentityId> all_identities();

}  // namespace overspt

#endif
