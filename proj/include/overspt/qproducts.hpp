#ifndef OVERSPT_QPRODUCTS_HPP
#define OVERSPT_QPRODUCTS_HPP

#include <stdexcept>

#include "overspt/series.hpp"

namespace overspt {

struct DivergentProduct : std::domain_error {
	explicit DivergentProduct(const std::string& what) : std::domain_error(what) {}
};

/* sign * q^exponent -- the only argument shape the Pochhammer builders
 * need. Infinite products additionally require exponent >= 1 so that
 * the factors tend to 1 formally. */
struct Monomial {
	int sign;      // +1 or -1
	int exponent;  // >= 0
};

/* (a; q^base)_length = prod_{k=0}^{length-1} (1 - a*q^{base*k}),
 * truncated at the given order. length 0 is the empty product 1. */
Series pochhammer_finite(Monomial a, int base, int length, int order);

/* (a; q^base)_infinity. Factors with a.exponent + base*k > order are
 * congruent to 1 modulo q^{order+1} and are omitted, so the truncated
 * result is exact. Throws DivergentProduct when a.exponent = 0. */
Series pochhammer_infinite(Monomial a, int base, int order);

/* (-q;q)_inf / (q;q)_inf: coefficient of q^n counts the overpartitions
 * of n. */
Series overpartition_gf(int order);

}  // namespace overspt

#endif
