#include "overspt/series.hpp"

#include <algorithm>
#include <sstream>

namespace overspt {

namespace {

int min_order(const Series& a, const Series& b) {
	return std::min(a.order(), b.order());
}

}  // namespace

bool Series::is_zero() const {
	return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c == 0; });
}

Series zero(int order) {
	return Series(order);
}

Series one(int order) {
	return monomial(+1, 0, order);
}

Series monomial(int sign, int e, int order) {
	if (sign != 1 && sign != -1) throw std::invalid_argument("monomial: sign must be +-1");
	if (e < 0) throw std::invalid_argument("monomial: negative exponent");
	SeriesBuilder b(order);
	if (e <= order) b[e] = sign;
	return std::move(b).build();
}

Series add(const Series& a, const Series& b) {
	const int n = min_order(a, b);
	SeriesBuilder r(n);
	for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
	return std::move(r).build();
}

Series sub(const Series& a, const Series& b) {
	const int n = min_order(a, b);
	SeriesBuilder r(n);
	for (int i = 0; i <= n; ++i) r[i] = a[i] - b[i];
	return std::move(r).build();
}

Series negate(const Series& a) {
	SeriesBuilder r(a.order());
	for (int i = 0; i <= a.order(); ++i) r[i] = -a[i];
	return std::move(r).build();
}

Series scale(const Series& a, const Coeff& c) {
	SeriesBuilder r(a.order());
	for (int i = 0; i <= a.order(); ++i) r[i] = c * a[i];
	return std::move(r).build();
}

Series mul(const Series& a, const Series& b) {
	const int n = min_order(a, b);
	SeriesBuilder r(n);
	for (int i = 0; i <= n; ++i) {
		if (a[i] == 0) continue;
		for (int j = 0; i + j <= n; ++j) {
			if (b[j] != 0) r[i + j] += a[i] * b[j];
		}
	}
	return std::move(r).build();
}

Series invert(const Series& a) {
	const Coeff& c0 = a[0];
	if (c0 != 1 && c0 != -1)
		throw NonUnitConstantTerm("invert: constant term must be +-1, got " + c0.get_str());
	const int n = a.order();
	SeriesBuilder b(n);
	b[0] = c0;  // 1/c0 = c0 for c0 = +-1
	/* If a*b = 1 then sum_{k=0..m} a_k b_{m-k} = 0 for m >= 1, giving
	 * b_m = -(1/a_0) sum_{k=1..m} a_k b_{m-k}. */
	for (int m = 1; m <= n; ++m) {
		Coeff s = 0;
		for (int k = 1; k <= m; ++k) {
			if (a[k] != 0) s += a[k] * b[m - k];
		}
		b[m] = -c0 * s;
	}
	return std::move(b).build();
}

Series div(const Series& a, const Series& b) {
	return mul(a, invert(b));
}

Series substitute_q_power(const Series& a, int m) {
	if (m < 1) throw std::invalid_argument("substitute_q_power: m must be >= 1");
	const int n = a.order();
	SeriesBuilder r(n);
	for (int i = 0; static_cast<long long>(i) * m <= n; ++i) r[i * m] = a[i];
	return std::move(r).build();
}

Series truncate(const Series& a, int new_order) {
	if (new_order > a.order())
		throw IndexBeyondOrder("truncate: cannot extend order " + std::to_string(a.order()) +
		                       " to " + std::to_string(new_order));
	SeriesBuilder r(new_order);
	for (int i = 0; i <= new_order; ++i) r[i] = a[i];
	return std::move(r).build();
}

const Coeff& coeff(const Series& a, int i) {
	if (i < 0 || i > a.order())
		throw IndexBeyondOrder("coeff: index " + std::to_string(i) + " beyond order " +
		                       std::to_string(a.order()));
	return a[i];
}

bool equal(const Series& a, const Series& b, int up_to) {
	return !first_mismatch(a, b, up_to).has_value();
}

std::optional<int> first_mismatch(const Series& a, const Series& b, int up_to) {
	if (up_to < 0 || up_to > min_order(a, b))
		throw IndexBeyondOrder("first_mismatch: bound " + std::to_string(up_to) +
		                       " beyond order " + std::to_string(min_order(a, b)));
	for (int i = 0; i <= up_to; ++i) {
		if (a[i] != b[i]) return i;
	}
	return std::nullopt;
}

bool operator==(const Series& a, const Series& b) {
	return a.order() == b.order() && a.coeffs() == b.coeffs();
}

std::string to_string(const Series& a) {
	std::ostringstream out;
	bool first = true;
	for (int i = 0; i <= a.order(); ++i) {
		const Coeff& c = a[i];
		if (c == 0) continue;
		Coeff mag = abs(c);
		if (first) {
			if (c < 0) out << "-";
			first = false;
		} else {
			out << (c < 0 ? " - " : " + ");
		}
		if (i == 0) {
			out << mag.get_str();
		} else {
			if (mag != 1) out << mag.get_str() << "*";
			out << "q";
			if (i > 1) out << "^" << i;
		}
	}
	if (first) out << "0";
	out << " + O(q^" << a.order() + 1 << ")";
	return out.str();
}

}  // namespace overspt
