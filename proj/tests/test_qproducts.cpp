#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "overspt/enumerate.hpp"
#include "overspt/qproducts.hpp"

using namespace overspt;

namespace {

Series from_ints(std::initializer_list<int> values) {
	std::vector<Coeff> coeffs;
	for (int v : values) coeffs.emplace_back(v);
	const int order = static_cast<int>(coeffs.size()) - 1;
	return Series(order, std::move(coeffs));
}

/* Independent oracle for (q;q)_inf and (-q;q)_inf: enumerate partitions
 * into distinct parts by descent and accumulate +-1 per partition. The
 * signed sum reproduces the Euler-product coefficients, the unsigned sum
 * the distinct-part partition counts. */
void distinct_partitions(int remaining, int max_part, int parts_so_far, long& signed_total,
                         long& unsigned_total) {
	if (remaining == 0) {
		signed_total += parts_so_far % 2 == 0 ? 1 : -1;
		unsigned_total += 1;
		return;
	}
	for (int v = std::min(max_part, remaining); v >= 1; --v)
		distinct_partitions(remaining - v, v - 1, parts_so_far + 1, signed_total, unsigned_total);
}

}  // namespace

TEST_CASE("finite products") {
	CHECK(pochhammer_finite({+1, 1}, 1, 2, 3) == from_ints({1, -1, -1, 1}));
	CHECK(pochhammer_finite({-1, 1}, 1, 2, 3) == from_ints({1, 1, 1, 1}));
	CHECK(pochhammer_finite({-1, 3}, 1, 0, 5) == one(5));  // empty product
	// exponent 0 with positive sign: the k=0 factor vanishes
	CHECK(pochhammer_finite({+1, 0}, 1, 3, 4).is_zero());
	// (-1;q)_2 = 2(1+q)
	CHECK(pochhammer_finite({-1, 0}, 1, 2, 2) == from_ints({2, 2, 0}));
	CHECK_THROWS_AS(pochhammer_finite({+1, -1}, 1, 1, 3), std::invalid_argument);
	CHECK_THROWS_AS(pochhammer_finite({+1, 1}, 0, 1, 3), std::invalid_argument);
}

TEST_CASE("incremental factor identity") {
	std::mt19937 rng(77001);
	for (int i = 0; i < 250; ++i) {
		const Monomial a{rng() % 2 == 0 ? 1 : -1, static_cast<int>(rng() % 5)};
		const int base = 1 + static_cast<int>(rng() % 3);
		const int len = static_cast<int>(rng() % 7);
		const int order = 4 + static_cast<int>(rng() % 24);
		const Series longer = pochhammer_finite(a, base, len + 1, order);
		const Series shorter = pochhammer_finite(a, base, len, order);
		const Series factor = sub(one(order), monomial(a.sign, a.exponent + base * len, order));
		CHECK(longer == mul(shorter, factor));
	}
}

TEST_CASE("infinite products: Euler product and distinct parts") {
	// pentagonal-number pattern: 1 - q - q^2 + q^5 + q^7
	CHECK(pochhammer_infinite({+1, 1}, 1, 8) == from_ints({1, -1, -1, 0, 0, 1, 0, 1, 0}));
	// distinct-part partition counts
	CHECK(pochhammer_infinite({-1, 1}, 1, 7) == from_ints({1, 1, 1, 2, 2, 3, 4, 5}));

	const Series euler = pochhammer_infinite({+1, 1}, 1, 20);
	const Series distinct = pochhammer_infinite({-1, 1}, 1, 20);
	for (int n = 0; n <= 20; ++n) {
		long signed_total = 0, unsigned_total = 0;
		distinct_partitions(n, n, 0, signed_total, unsigned_total);
		CHECK(euler[n] == signed_total);
		CHECK(distinct[n] == unsigned_total);
	}
}

TEST_CASE("infinite products: truncation edge and divergence") {
	CHECK(pochhammer_infinite({+1, 6}, 1, 5) == one(5));  // no factor contributes
	CHECK(pochhammer_infinite({-1, 1}, 2, 4) == from_ints({1, 1, 0, 1, 1}));  // (1+q)(1+q^3)
	CHECK_THROWS_AS(pochhammer_infinite({+1, 0}, 1, 6), DivergentProduct);
	CHECK_THROWS_AS(pochhammer_infinite({-1, 0}, 1, 6), DivergentProduct);
}

TEST_CASE("infinite equals finite once the tail is cut") {
	std::mt19937 rng(88221);
	for (int i = 0; i < 200; ++i) {
		const Monomial a{rng() % 2 == 0 ? 1 : -1, 1 + static_cast<int>(rng() % 4)};
		const int base = 1 + static_cast<int>(rng() % 3);
		const int order = 4 + static_cast<int>(rng() % 28);
		// any K with a.exponent + base*K > order gives the same series
		const int big_enough = (order - a.exponent) / base + 1;
		CHECK(pochhammer_infinite(a, base, order) ==
		      pochhammer_finite(a, base, big_enough, order));
		CHECK(pochhammer_infinite(a, base, order) ==
		      pochhammer_finite(a, base, big_enough + 3, order));
	}
}

TEST_CASE("overpartition generating function matches the oracle") {
	const Series gf = overpartition_gf(20);
	CHECK(gf[0] == 1);
	CHECK(gf[4] == 14);
	for (int n = 0; n <= 20; ++n) {
		CHECK(gf[n] == static_cast<long>(enumerate_overpartitions(n).size()));
	}
}
