#ifndef OVERSPT_SERIES_HPP
#define OVERSPT_SERIES_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace overspt {

/* Coefficients are exact arbitrary-precision integers. Overpartition
 * counts leave the 64-bit range near n ~ 200, and every division in
 * scope is by a unit series (constant term +-1), so the integers are
 * closed under all operations used here. */
using Coeff = mpz_class;

struct NonUnitConstantTerm : std::domain_error {
	explicit NonUnitConstantTerm(const std::string& what) : std::domain_error(what) {}
};

struct IndexBeyondOrder : std::out_of_range {
	explicit IndexBeyondOrder(const std::string& what) : std::out_of_range(what) {}
};

/* A truncated formal power series in q: the class of a series modulo
 * q^{order+1}, held as order+1 exact integer coefficients. Values are
 * immutable after construction; all operations below are pure. */
class Series {
public:
	explicit Series(int order) : coeffs_(check_order(order) + 1) {}

	Series(int order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
		check_order(order);
		if (static_cast<int>(coeffs_.size()) != order + 1)
			throw std::invalid_argument("Series: coefficient count must be order+1");
	}

	int order() const { return static_cast<int>(coeffs_.size()) - 1; }

	/* Unchecked access for indices known to be in range; use coeff() for
	 * the checked variant. */
	const Coeff& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

	const std::vector<Coeff>& coeffs() const { return coeffs_; }

	bool is_zero() const;

private:
	static int check_order(int order) {
		if (order < 0) throw std::invalid_argument("Series: negative order");
		return order;
	}

	friend class SeriesBuilder;

	std::vector<Coeff> coeffs_;
};

/* Mutable staging area for a series under construction. Keeps Series
 * itself immutable without paying a copy per arithmetic step. */
class SeriesBuilder {
public:
	explicit SeriesBuilder(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
	explicit SeriesBuilder(const Series& s) : coeffs_(s.coeffs()) {}

	int order() const { return static_cast<int>(coeffs_.size()) - 1; }
	Coeff& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
	const Coeff& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

	Series build() && {
		Series s(0);
		s.coeffs_ = std::move(coeffs_);
		return s;
	}

private:
	std::vector<Coeff> coeffs_;
};

Series zero(int order);
Series one(int order);

/* sign * q^e at the given order; exponents beyond the order fall off
 * the truncation and yield the zero series. */
Series monomial(int sign, int e, int order);

/* Coefficientwise sum/difference at order min(a.order, b.order). The
 * result order is never extended past what both operands certify. */
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Series& a, const Coeff& c);

/* Cauchy product truncated at min(a.order, b.order). */
Series mul(const Series& a, const Series& b);

/* Multiplicative inverse at a.order. Requires constant term +-1; a
 * constant term of -1 is handled by negating, inverting, negating. */
Series invert(const Series& a);

/* mul(a, invert(b)); b must have unit constant term. */
Series div(const Series& a, const Series& b);

/* q -> q^m: coefficient of q^{m*i} in the result is a.coeffs[i]; input
 * coefficients beyond floor(order/m) fall off the truncation. */
Series substitute_q_power(const Series& a, int m);

/* Restriction to a lower order M <= a.order (dropping the tail). */
Series truncate(const Series& a, int new_order);

/* Checked coefficient access; throws IndexBeyondOrder past the order. */
const Coeff& coeff(const Series& a, int i);

/* Exact equality of coefficients 0..up_to; up_to must not exceed either
 * operand's order. */
bool equal(const Series& a, const Series& b, int up_to);
std::optional<int> first_mismatch(const Series& a, const Series& b, int up_to);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return negate(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

bool operator==(const Series& a, const Series& b);

/* Human-readable rendering, e.g. "1 - q + 2*q^3 + O(q^5)". */
std::string to_string(const Series& a);

}  // namespace overspt

#endif
