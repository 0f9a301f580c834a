#include "overspt/qproducts.hpp"

namespace overspt {

namespace {

void check_monomial(Monomial a) {
	if (a.sign != 1 && a.sign != -1)
		throw std::invalid_argument("pochhammer: monomial sign must be +-1");
	if (a.exponent < 0) throw std::invalid_argument("pochhammer: negative exponent");
}

/* In-place multiply of the accumulated product by 1 - sign*q^shift:
 * subtract a shifted, sign-adjusted copy. Cheaper than a full Cauchy
 * product for two-term factors. */
void mul_factor(SeriesBuilder& acc, int sign, int shift) {
	const int n = acc.order();
	if (shift > n) return;
	if (shift == 0) {
		/* 1 - sign*q^0 is the constant 1 - sign. */
		const Coeff c = 1 - sign;
		for (int i = 0; i <= n; ++i) acc[i] *= c;
		return;
	}
	for (int i = n; i >= shift; --i) acc[i] -= sign * acc[i - shift];
}

}  // namespace

Series pochhammer_finite(Monomial a, int base, int length, int order) {
	check_monomial(a);
	if (base < 1) throw std::invalid_argument("pochhammer_finite: base must be >= 1");
	if (length < 0) throw std::invalid_argument("pochhammer_finite: negative length");
	SeriesBuilder acc(order);
	acc[0] = 1;
	for (int k = 0; k < length; ++k) {
		const long long shift = a.exponent + static_cast<long long>(base) * k;
		if (shift > order) break;  // this and all later factors are 1 mod q^{order+1}
		mul_factor(acc, a.sign, static_cast<int>(shift));
	}
	return std::move(acc).build();
}

Series pochhammer_infinite(Monomial a, int base, int order) {
	check_monomial(a);
	if (base < 1) throw std::invalid_argument("pochhammer_infinite: base must be >= 1");
	if (a.exponent == 0)
		throw DivergentProduct("pochhammer_infinite: argument exponent must be >= 1");
	/* Factors 1 - a*q^{base*k} with a.exponent + base*k > order are
	 * congruent to 1 and drop out, so the product below is exact. */
	SeriesBuilder acc(order);
	acc[0] = 1;
	for (long long shift = a.exponent; shift <= order; shift += base)
		mul_factor(acc, a.sign, static_cast<int>(shift));
	return std::move(acc).build();
}

Series overpartition_gf(int order) {
	return div(pochhammer_infinite({-1, 1}, 1, order), pochhammer_infinite({+1, 1}, 1, order));
}

}  // namespace overspt
