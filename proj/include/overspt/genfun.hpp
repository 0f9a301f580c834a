#ifndef OVERSPT_GENFUN_HPP
#define OVERSPT_GENFUN_HPP

#include <stdexcept>
#include <string_view>
#include <utility>

#include "overspt/qproducts.hpp"
#include "overspt/series.hpp"

namespace overspt {

struct UnknownAuxName : std::invalid_argument {
	explicit UnknownAuxName(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedSpecialization : std::invalid_argument {
	explicit UnsupportedSpecialization(const std::string& what) : std::invalid_argument(what) {}
};

/* The four families of smallest-non-overlined-part statistics. Sptk
 * counts overpartitions whose smallest non-overlined part s appears
 * exactly k times with every overlined part above s; Signed weights
 * members by the parity of the number of parts above s; Odd restricts
 * every other part to the opposite parity of s. */
enum class SptKind {
	Sptk,
	SptkSigned,
	SptkOdd,
	SptkOddSigned,
};

/* Definitional sum for the chosen statistic:
 *   sum_{n>=1} q^{kn} (-+q^{n+1}; q^m)_inf / (+-q^{n+1}; q^m)_inf
 * with m = 1 for the plain kinds and m = 2 for the odd-restricted ones;
 * the signed kinds swap numerator and denominator. */
Series gf_definitional(SptKind kind, int k, int order);

/* Polynomial-family series: each recurrence iterates from its k = 1
 * base case, each closed form assembles the explicit finite sum. The
 * two routes are independent on purpose -- the verifier compares them. */
Series pbar_recurrence(int k, int order);
Series pbar_closed(int k, int order);
Series vbar_recurrence(int k, int order);
Series vbar_closed(int k, int order);
Series wbar_recurrence(int k, int order);
Series wbar_closed(int k, int order);
Series tbar_recurrence(int k, int order);
Series tbar_closed(int k, int order);

/* The non-definitional side of the four main identities, assembled from
 * the polynomial families and Pochhammer products. */
Series rhs_theorem(SptKind kind, int k, int order);

/* Variant of the SptkOddSigned right-hand side whose trailing Pochhammer
 * denominator has index k-1 instead of k. Checked only as a fallback
 * diagnostic when the primary form fails. */
Series rhs_sptko_signed_index_variant(int k, int order);

/* Auxiliary overpartition generating functions. */
enum class AuxGf {
	Pbar,               // all overpartitions
	PbarEven,           // all parts even
	PbarOdd,            // all parts odd
	NoUnoverlinedOnes,  // no non-overlined 1's
	PbarOddEx,          // all parts odd, no non-overlined 1's
	PbarOddExSigned,    // same class, weighted (-1)^{number of parts}
};

Series aux_gf(AuxGf name, int order);

/* Name <-> enum mapping used by the CLI; throws UnknownAuxName. */
AuxGf aux_gf_from_name(std::string_view name);
std::string_view aux_gf_name(AuxGf name);

/* Checks sum_{n>=0} (a;q)_n / (q;q)_n z^n = (az;q)_inf / (z;q)_inf with
 * q -> q^base, coefficientwise to the given order. Monomial exponents
 * are powers of the underlying q, not of q^base. Requires z.exponent
 * >= 1 so the sum truncates by valuation. */
bool check_q_binomial(Monomial a, Monomial z, int base, int order);

/* Checks
 *   sum_{n>=0} (a;q)_n / (b;q)_n q^n
 *     = q (a;q)_inf / (b (b;q)_inf (1 - aq/b)) + (1 - q/b) / (1 - aq/b)
 * with q -> q^base. Supported specializations: a.exponent >= 1 and
 * 1 <= b.exponent <= base, so q^base/b and a*q^base/b stay monomials of
 * non-negative exponent and 1 - a*q^base/b is a unit series; anything
 * else throws UnsupportedSpecialization. */
bool check_asv(Monomial a, Monomial b, int base, int order);

/* The two sides of each classical identity, for callers that need to
 * localize a mismatch rather than just detect one. */
std::pair<Series, Series> q_binomial_sides(Monomial a, Monomial z, int base, int order);
std::pair<Series, Series> asv_sides(Monomial a, Monomial b, int base, int order);

}  // namespace overspt

#endif
