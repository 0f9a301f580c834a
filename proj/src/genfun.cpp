#include "overspt/genfun.hpp"

#include <array>
#include <utility>

namespace overspt {

namespace {

void check_k(int k) {
	if (k < 1) throw std::invalid_argument("k must be >= 1");
}

/* 1 + q^e as a series. */
Series one_plus_q_pow(int e, int order) {
	return add(one(order), monomial(+1, e, order));
}

/* 1 - sign*q^e as a series. */
Series one_minus(Monomial a, int order) {
	return sub(one(order), monomial(a.sign, a.exponent, order));
}

/* (-q^{n+1}; q^m)_inf / (q^{n+1}; q^m)_inf, or its reciprocal shape for
 * the signed kinds. */
Series tail_ratio(int n, int base, bool swapped, int order) {
	Series num = pochhammer_infinite({-1, n + 1}, base, order);
	Series den = pochhammer_infinite({+1, n + 1}, base, order);
	if (swapped) std::swap(num, den);
	return div(num, den);
}

}  // namespace

Series gf_definitional(SptKind kind, int k, int order) {
	check_k(k);
	if (order < 1) throw std::invalid_argument("gf_definitional: order must be >= 1");
	const int base = (kind == SptKind::SptkOdd || kind == SptKind::SptkOddSigned) ? 2 : 1;
	const bool swapped = (kind == SptKind::SptkSigned || kind == SptKind::SptkOddSigned);
	SeriesBuilder acc(order);
	/* Term n has valuation kn, so n ranges over 1..floor(order/k). Each
	 * tail ratio is built fresh at full order; the factor-reuse shortcut
	 * between consecutive n is deliberately not taken. */
	for (int n = 1; static_cast<long long>(k) * n <= order; ++n) {
		const Series term = mul(monomial(+1, k * n, order), tail_ratio(n, base, swapped, order));
		for (int i = k * n; i <= order; ++i) acc[i] += term[i];
	}
	return std::move(acc).build();
}

Series pbar_recurrence(int k, int order) {
	check_k(k);
	Series p = one(order);
	for (int j = 2; j <= k; ++j) {
		/* ((q^{j-1} - 1) P_{j-1} + q^{j-1}(1 + q)) / (1 + q^j) */
		const Series num = add(mul(sub(monomial(+1, j - 1, order), one(order)), p),
		                       add(monomial(+1, j - 1, order), monomial(+1, j, order)));
		p = div(num, one_plus_q_pow(j, order));
	}
	return p;
}

Series pbar_closed(int k, int order) {
	check_k(k);
	/* q^{k-1}(1+q)/(1+q^k)
	 *   - (q;q)_{k-1}/(-q^2;q)_{k-1}
	 *     * sum_{j=0}^{k-2} (-1)^j q^{k-j-2} (-q;q)_{k-j-2}/(q;q)_{k-j-2} */
	const Series lead = div(add(monomial(+1, k - 1, order), monomial(+1, k, order)),
	                        one_plus_q_pow(k, order));
	if (k == 1) return lead;
	const Series prefix = div(pochhammer_finite({+1, 1}, 1, k - 1, order),
	                          pochhammer_finite({-1, 2}, 1, k - 1, order));
	Series sum = zero(order);
	for (int j = 0; j <= k - 2; ++j) {
		const int len = k - j - 2;
		Series term = mul(monomial(+1, len, order),
		                  div(pochhammer_finite({-1, 1}, 1, len, order),
		                      pochhammer_finite({+1, 1}, 1, len, order)));
		if (j % 2 == 1) term = negate(term);
		sum = add(sum, term);
	}
	return sub(lead, mul(prefix, sum));
}

Series vbar_recurrence(int k, int order) {
	check_k(k);
	Series v = scale(monomial(+1, 1, order), 2);
	for (int j = 2; j <= k; ++j) {
		/* ((q^{2j-1} - q) V_{j-1} + 2q^j(1 + q^2)) / (1 + q^{2j}) */
		const Series num =
		    add(mul(sub(monomial(+1, 2 * j - 1, order), monomial(+1, 1, order)), v),
		        scale(add(monomial(+1, j, order), monomial(+1, j + 2, order)), 2));
		v = div(num, one_plus_q_pow(2 * j, order));
	}
	return v;
}

Series wbar_recurrence(int k, int order) {
	check_k(k);
	Series w = div(monomial(+1, 1, order), one_plus_q_pow(2, order));
	for (int j = 2; j <= k; ++j) {
		/* ((q^{2j-1} - q) W_{j-1} + q^{2j-1}) / (1 + q^{2j}) */
		const Series num =
		    add(mul(sub(monomial(+1, 2 * j - 1, order), monomial(+1, 1, order)), w),
		        monomial(+1, 2 * j - 1, order));
		w = div(num, one_plus_q_pow(2 * j, order));
	}
	return w;
}

Series tbar_recurrence(int k, int order) {
	check_k(k);
	Series t = negate(div(add(monomial(+1, 1, order), monomial(+1, 2, order)),
	                      one_plus_q_pow(2, order)));
	for (int j = 2; j <= k; ++j) {
		/* ((q - q^{2j-1}) T_{j-1} - q^{2j-1}(1 + q)) / (1 + q^{2j}) */
		const Series num =
		    sub(mul(sub(monomial(+1, 1, order), monomial(+1, 2 * j - 1, order)), t),
		        add(monomial(+1, 2 * j - 1, order), monomial(+1, 2 * j, order)));
		t = div(num, one_plus_q_pow(2 * j, order));
	}
	return t;
}

namespace {

/* (-q^2;q^2)_{len}/(q^2;q^2)_{len} -- the ratio appearing inside every
 * base-q^2 closed-form sum. */
Series even_poch_ratio(int len, int order) {
	return div(pochhammer_finite({-1, 2}, 2, len, order),
	           pochhammer_finite({+1, 2}, 2, len, order));
}

/* (q^2;q^2)_{k-1}/(-q^2;q^2)_k -- the shared closed-form prefix. */
Series even_poch_prefix(int k, int order) {
	return div(pochhammer_finite({+1, 2}, 2, k - 1, order),
	           pochhammer_finite({-1, 2}, 2, k, order));
}

}  // namespace

Series vbar_closed(int k, int order) {
	check_k(k);
	/* (1+q^2) (2q^k/(1+q^{2k})
	 *          + 2q^k (q^2;q^2)_{k-1}/(-q^2;q^2)_k
	 *            sum_{j=0}^{k-2} (-1)^{j+1} (-q^2;q^2)_{k-j-2}/(q^2;q^2)_{k-j-2}) */
	Series inner = div(scale(monomial(+1, k, order), 2), one_plus_q_pow(2 * k, order));
	if (k > 1) {
		Series sum = zero(order);
		for (int j = 0; j <= k - 2; ++j) {
			Series term = even_poch_ratio(k - j - 2, order);
			if (j % 2 == 0) term = negate(term);  // (-1)^{j+1}
			sum = add(sum, term);
		}
		inner = add(inner, mul(scale(monomial(+1, k, order), 2),
		                       mul(even_poch_prefix(k, order), sum)));
	}
	return mul(one_plus_q_pow(2, order), inner);
}

Series wbar_closed(int k, int order) {
	check_k(k);
	/* q^{2k-1}/(1+q^{2k})
	 *   + q^{2k-2} (q^2;q^2)_{k-1}/(-q^2;q^2)_k
	 *     sum_{j=0}^{k-2} (-1)^{j+1} q^{-j} (-q^2;q^2)_{k-j-2}/(q^2;q^2)_{k-j-2}
	 * The q^{2k-2} prefix and the q^{-j} inside the sum fold into one
	 * monomial q^{2k-2-j}, whose exponent stays >= k for j <= k-2, so no
	 * negative powers ever materialize. */
	Series result = div(monomial(+1, 2 * k - 1, order), one_plus_q_pow(2 * k, order));
	if (k > 1) {
		Series sum = zero(order);
		for (int j = 0; j <= k - 2; ++j) {
			Series term = mul(monomial(+1, 2 * k - 2 - j, order),
			                  even_poch_ratio(k - j - 2, order));
			if (j % 2 == 0) term = negate(term);  // (-1)^{j+1}
			sum = add(sum, term);
		}
		result = add(result, mul(even_poch_prefix(k, order), sum));
	}
	return result;
}

Series tbar_closed(int k, int order) {
	check_k(k);
	/* -q^{2k-1}(1+q)/(1+q^{2k})
	 *   - (1+q) (q^2;q^2)_{k-1}/(-q^2;q^2)_k
	 *     sum_{j=0}^{k-2} q^{2k-j-2} (-q^2;q^2)_{k-j-2}/(q^2;q^2)_{k-j-2} */
	Series result = negate(div(add(monomial(+1, 2 * k - 1, order), monomial(+1, 2 * k, order)),
	                           one_plus_q_pow(2 * k, order)));
	if (k > 1) {
		Series sum = zero(order);
		for (int j = 0; j <= k - 2; ++j) {
			sum = add(sum, mul(monomial(+1, 2 * k - j - 2, order),
			                   even_poch_ratio(k - j - 2, order)));
		}
		result = sub(result, mul(one_plus_q_pow(1, order),
		                         mul(even_poch_prefix(k, order), sum)));
	}
	return result;
}

namespace {

Series rhs_sptko_signed(int k, int order, int trailing_denominator_index) {
	const Series main = mul(tbar_recurrence(k, order),
	                        div(pochhammer_infinite({+1, 1}, 2, order),
	                            pochhammer_infinite({-1, 1}, 2, order)));
	const Series trail =
	    mul(monomial(+1, k, order),
	        div(pochhammer_finite({+1, 2}, 2, k - 1, order),
	            pochhammer_finite({-1, 2}, 2, trailing_denominator_index, order)));
	return add(main, scale(trail, 2));
}

}  // namespace

Series rhs_theorem(SptKind kind, int k, int order) {
	check_k(k);
	switch (kind) {
	case SptKind::Sptk: {
		/* P_k (-q^2;q)_inf/(q^2;q)_inf + (-1)^k (q;q)_{k-1}/(-q;q)_k */
		const Series main = mul(pbar_recurrence(k, order),
		                        div(pochhammer_infinite({-1, 2}, 1, order),
		                            pochhammer_infinite({+1, 2}, 1, order)));
		Series trail = div(pochhammer_finite({+1, 1}, 1, k - 1, order),
		                   pochhammer_finite({-1, 1}, 1, k, order));
		if (k % 2 == 1) trail = negate(trail);
		return add(main, trail);
	}
	case SptKind::SptkSigned:
		/* (q;q)_{k-1}/(-q;q)_k - (q;q)_inf/(-q;q)_inf */
		return sub(div(pochhammer_finite({+1, 1}, 1, k - 1, order),
		               pochhammer_finite({-1, 1}, 1, k, order)),
		           div(pochhammer_infinite({+1, 1}, 1, order),
		               pochhammer_infinite({-1, 1}, 1, order)));
	case SptKind::SptkOdd: {
		/* V_k (-q^4;q^2)_inf/(q^2;q^2)_inf + W_k (-q;q^2)_inf/(q^3;q^2)_inf
		 *   + 2(-q)^k (q^2;q^2)_{k-1}/(-q^2;q^2)_k */
		const Series even_part = mul(vbar_recurrence(k, order),
		                             div(pochhammer_infinite({-1, 4}, 2, order),
		                                 pochhammer_infinite({+1, 2}, 2, order)));
		const Series odd_part = mul(wbar_recurrence(k, order),
		                            div(pochhammer_infinite({-1, 1}, 2, order),
		                                pochhammer_infinite({+1, 3}, 2, order)));
		Series trail = mul(monomial(+1, k, order),
		                   div(pochhammer_finite({+1, 2}, 2, k - 1, order),
		                       pochhammer_finite({-1, 2}, 2, k, order)));
		trail = scale(trail, k % 2 == 0 ? 2 : -2);  // 2(-q)^k
		return add(add(even_part, odd_part), trail);
	}
	case SptKind::SptkOddSigned:
		/* T_k (q;q^2)_inf/(-q;q^2)_inf + 2q^k (q^2;q^2)_{k-1}/(-q^2;q^2)_k */
		return rhs_sptko_signed(k, order, k);
	}
	throw std::invalid_argument("rhs_theorem: bad kind");
}

Series rhs_sptko_signed_index_variant(int k, int order) {
	check_k(k);
	return rhs_sptko_signed(k, order, k - 1);
}

Series aux_gf(AuxGf name, int order) {
	switch (name) {
	case AuxGf::Pbar:
		return div(pochhammer_infinite({-1, 1}, 1, order),
		           pochhammer_infinite({+1, 1}, 1, order));
	case AuxGf::PbarEven:
		return div(pochhammer_infinite({-1, 2}, 2, order),
		           pochhammer_infinite({+1, 2}, 2, order));
	case AuxGf::PbarOdd:
		return div(pochhammer_infinite({-1, 1}, 2, order),
		           pochhammer_infinite({+1, 1}, 2, order));
	case AuxGf::NoUnoverlinedOnes:
		return div(pochhammer_infinite({-1, 1}, 1, order),
		           pochhammer_infinite({+1, 2}, 1, order));
	case AuxGf::PbarOddEx:
		return div(pochhammer_infinite({-1, 1}, 2, order),
		           pochhammer_infinite({+1, 3}, 2, order));
	case AuxGf::PbarOddExSigned:
		return div(pochhammer_infinite({+1, 1}, 2, order),
		           pochhammer_infinite({-1, 3}, 2, order));
	}
	throw UnknownAuxName("aux_gf: unknown series");
}

namespace {

constexpr std::array<std::pair<std::string_view, AuxGf>, 6> kAuxNames{{
    {"pbar", AuxGf::Pbar},
    {"pbar-e", AuxGf::PbarEven},
    {"pbar-o", AuxGf::PbarOdd},
    {"no-unoverlined-ones", AuxGf::NoUnoverlinedOnes},
    {"pbar-oex", AuxGf::PbarOddEx},
    {"pbar-oex-signed", AuxGf::PbarOddExSigned},
}};

}  // namespace

AuxGf aux_gf_from_name(std::string_view name) {
	for (const auto& [text, value] : kAuxNames) {
		if (text == name) return value;
	}
	throw UnknownAuxName("aux_gf: unknown series name '" + std::string(name) + "'");
}

std::string_view aux_gf_name(AuxGf name) {
	for (const auto& [text, value] : kAuxNames) {
		if (value == name) return text;
	}
	throw UnknownAuxName("aux_gf: unknown series enum value");
}

std::pair<Series, Series> q_binomial_sides(Monomial a, Monomial z, int base, int order) {
	if (z.exponent < 1)
		throw UnsupportedSpecialization("q_binomial: z must have exponent >= 1");
	if (a.exponent < 0)
		throw UnsupportedSpecialization("q_binomial: a must have exponent >= 0");
	if (base < 1) throw std::invalid_argument("q_binomial: base must be >= 1");
	/* Left side: term n carries z^n = sign^n q^{n e_z}, valuation n e_z,
	 * so the sum truncates once n e_z exceeds the order. */
	Series lhs = zero(order);
	for (int n = 0; static_cast<long long>(n) * z.exponent <= order; ++n) {
		Series term = mul(monomial(+1, n * z.exponent, order),
		                  div(pochhammer_finite(a, base, n, order),
		                      pochhammer_finite({+1, base}, base, n, order)));
		if (z.sign < 0 && n % 2 == 1) term = negate(term);
		lhs = add(lhs, term);
	}
	const Monomial az{a.sign * z.sign, a.exponent + z.exponent};
	const Series rhs = div(pochhammer_infinite(az, base, order),
	                       pochhammer_infinite(z, base, order));
	return {std::move(lhs), rhs};
}

std::pair<Series, Series> asv_sides(Monomial a, Monomial b, int base, int order) {
	if (base < 1) throw std::invalid_argument("asv: base must be >= 1");
	if (a.exponent < 1 || b.exponent < 1 || b.exponent > base)
		throw UnsupportedSpecialization(
		    "asv: supported shapes need a.exponent >= 1 and 1 <= b.exponent <= base");
	Series lhs = zero(order);
	for (int n = 0; static_cast<long long>(n) * base <= order; ++n) {
		lhs = add(lhs, mul(monomial(+1, n * base, order),
		                   div(pochhammer_finite(a, base, n, order),
		                       pochhammer_finite(b, base, n, order))));
	}
	/* aq/b and q/b (with q -> q^base) are the monomials below; both have
	 * non-negative exponent under the precondition, so the right side
	 * never leaves the power-series ring. */
	const Monomial aq_over_b{a.sign * b.sign, a.exponent + base - b.exponent};
	const Monomial q_over_b{b.sign, base - b.exponent};
	const Series unit_denom = one_minus(aq_over_b, order);
	const Series term1 = mul(mul(monomial(q_over_b.sign, q_over_b.exponent, order),
	                             pochhammer_infinite(a, base, order)),
	                         invert(mul(pochhammer_infinite(b, base, order), unit_denom)));
	const Series term2 = div(one_minus(q_over_b, order), unit_denom);
	return {std::move(lhs), add(term1, term2)};
}

bool check_q_binomial(Monomial a, Monomial z, int base, int order) {
	const auto [lhs, rhs] = q_binomial_sides(a, z, base, order);
	return equal(lhs, rhs, order);
}

bool check_asv(Monomial a, Monomial b, int base, int order) {
	const auto [lhs, rhs] = asv_sides(a, b, base, order);
	return equal(lhs, rhs, order);
}

}  // namespace overspt
