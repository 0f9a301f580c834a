#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "overspt/enumerate.hpp"

using namespace overspt;

namespace {

/* Shorthand: op({{3, 1, true}, {1, 1, false}}) is 3~+3+1. */
Overpartition op(std::vector<PartGroup> groups) {
	return Overpartition{std::move(groups)};
}

}  // namespace

TEST_CASE("enumeration counts and basic shape") {
	CHECK(enumerate_overpartitions(0).size() == 1);
	CHECK(enumerate_overpartitions(0)[0].groups.empty());
	CHECK(enumerate_overpartitions(1).size() == 2);
	CHECK(enumerate_overpartitions(4).size() == 14);

	const long pbar[] = {1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232};
	for (int n = 0; n <= 10; ++n)
		CHECK(static_cast<long>(enumerate_overpartitions(n).size()) == pbar[n]);
}

TEST_CASE("enumeration is duplicate-free and well-formed") {
	for (int n = 0; n <= 12; ++n) {
		std::set<std::string> seen;
		for (const Overpartition& p : enumerate_overpartitions(n)) {
			CHECK(p.weight() == n);
			CHECK(seen.insert(p.to_text()).second);
			for (std::size_t i = 0; i < p.groups.size(); ++i) {
				const PartGroup& g = p.groups[i];
				CHECK(g.value >= 1);
				CHECK(g.copies() >= 1);  // empty groups never materialize
				if (i + 1 < p.groups.size()) CHECK(g.value > p.groups[i + 1].value);
			}
		}
	}
}

TEST_CASE("rendering") {
	CHECK(op({}).to_text() == "0");
	CHECK(op({{3, 1, true}, {1, 2, false}}).to_text() == "3~+3+1+1");
	CHECK(op({{2, 1, true}}).to_text() == "2~+2");
}

TEST_CASE("smallest non-overlined part") {
	CHECK(smallest_nonoverlined(op({{3, 1, true}, {1, 1, false}})) == 1);   // 3~+1
	CHECK_FALSE(smallest_nonoverlined(op({{2, 0, true}, {1, 0, true}})));   // 2~+1~
	CHECK(smallest_nonoverlined(op({{2, 2, false}, {1, 1, false}})) == 1);  // 2+2+1
	CHECK(smallest_nonoverlined(op({{3, 2, false}, {2, 0, true}})) == 3);   // 3+3+2~
	CHECK_FALSE(smallest_nonoverlined(op({})));
}

TEST_CASE("classification") {
	// 2~+2: the overlined 2 is not above s = 2
	CHECK_FALSE(classify(op({{2, 1, true}}), 1).in_sptk);

	// 3+1: in the k = 1 class, parity fails (3 and 1 both odd), one part above
	const auto c31 = classify(op({{3, 1, false}, {1, 1, false}}), 1);
	CHECK(c31.in_sptk);
	CHECK_FALSE(c31.in_sptk_odd);
	CHECK(c31.parts_above_s == 1);

	// 4~+1: odd-restricted member with one part above s
	const auto c41 = classify(op({{4, 0, true}, {1, 1, false}}), 1);
	CHECK(c41.in_sptk);
	CHECK(c41.in_sptk_odd);
	CHECK(c41.parts_above_s == 1);

	// 2~+2+1: above-count includes overlined copies and multiplicity
	const auto c221 = classify(op({{2, 1, true}, {1, 1, false}}), 1);
	CHECK(c221.in_sptk_odd);
	CHECK(c221.parts_above_s == 2);

	// 1~+1+1+1: overlined copy of s itself disqualifies
	CHECK_FALSE(classify(op({{1, 3, true}}), 3).in_sptk);
	// multiplicity must match k exactly
	CHECK_FALSE(classify(op({{1, 2, false}}), 1).in_sptk);
	CHECK(classify(op({{1, 2, false}}), 2).in_sptk);
	// all-overlined overpartitions belong to no class
	CHECK_FALSE(classify(op({{2, 0, true}, {1, 0, true}}), 1).in_sptk);
}

TEST_CASE("counts: spt statistics") {
	// columns n = 0..12, frozen from the enumeration oracle
	const long sptk1[] = {0, 1, 1, 3, 3, 7, 9, 15, 21, 33, 45, 67, 93};
	const long sptk2[] = {0, 0, 1, 0, 3, 2, 5, 8, 13, 16, 29, 40, 57};
	const long sptk3[] = {0, 0, 0, 1, 0, 2, 3, 4, 6, 13, 16, 24, 37};
	const long sptk1s[] = {0, 1, 1, -1, -1, -1, 1, -1, 1, 1, 1, -1, 1};
	const long sptk1o[] = {0, 1, 1, 3, 1, 7, 1, 13, 3, 21, 5, 37, 7};
	const long sptk1os[] = {0, 1, 1, -1, 1, -1, 1, -3, 3, -3, 5, -7, 7};
	for (int n = 0; n <= 12; ++n) {
		CHECK(count({CountKind::Sptk, 1}, n) == sptk1[n]);
		CHECK(count({CountKind::Sptk, 2}, n) == sptk2[n]);
		CHECK(count({CountKind::Sptk, 3}, n) == sptk3[n]);
		CHECK(count({CountKind::SptkSigned, 1}, n) == sptk1s[n]);
		CHECK(count({CountKind::SptkOdd, 1}, n) == sptk1o[n]);
		CHECK(count({CountKind::SptkOddSigned, 1}, n) == sptk1os[n]);
	}
}

TEST_CASE("counts: worked spot values") {
	CHECK(count({CountKind::Sptk, 1}, 4) == 3);
	CHECK(count({CountKind::Sptk, 1}, 3) == 3);
	CHECK(count({CountKind::NoUnoverlinedOnes, 1}, 4) == 6);

	CHECK(count({CountKind::SptkOdd, 1}, 5) == 7);
	CHECK(count({CountKind::SptkOdd, 1}, 3) == 3);
	CHECK(2 * count({CountKind::PbarEven, 1}, 4) + count({CountKind::PbarOddEx, 1}, 4) == 10);

	CHECK(count({CountKind::SptkOddSigned, 1}, 5) == -1);
	CHECK(count({CountKind::SptkOddSigned, 1}, 3) == -1);
	CHECK(count({CountKind::PbarOddExSigned, 1}, 4) == 2);
}

TEST_CASE("counts: pbar family") {
	const long pbar_e[] = {1, 0, 2, 0, 4, 0, 8, 0, 14, 0, 24, 0, 40};
	const long pbar_o[] = {1, 2, 2, 4, 6, 8, 12, 16, 22, 30, 40, 52, 68};
	const long pbar_oex[] = {1, 1, 0, 2, 2, 2, 4, 4, 6, 8, 10, 12, 16};
	const long pbar_oexs[] = {1, -1, 0, -2, 2, -2, 4, -4, 6, -8, 10, -12, 16};
	const long no_ones[] = {1, 1, 2, 4, 6, 10, 16, 24, 36, 54, 78, 112, 160};
	for (int n = 0; n <= 12; ++n) {
		CHECK(count({CountKind::PbarEven, 1}, n) == pbar_e[n]);
		CHECK(count({CountKind::PbarOdd, 1}, n) == pbar_o[n]);
		CHECK(count({CountKind::PbarOddEx, 1}, n) == pbar_oex[n]);
		CHECK(count({CountKind::PbarOddExSigned, 1}, n) == pbar_oexs[n]);
		CHECK(count({CountKind::NoUnoverlinedOnes, 1}, n) == no_ones[n]);
		CHECK(count({CountKind::Pbar, 1}, n) ==
		      static_cast<long>(enumerate_overpartitions(n).size()));
	}
}

TEST_CASE("even/odd split of the classes") {
	for (int k = 1; k <= 3; ++k) {
		for (int n = 0; n <= 14; ++n) {
			long even_above = 0, odd_above = 0, even_above_o = 0, odd_above_o = 0;
			for (const Overpartition& p : enumerate_overpartitions(n)) {
				const auto c = classify(p, k);
				if (c.in_sptk) (c.parts_above_s % 2 == 0 ? even_above : odd_above) += 1;
				if (c.in_sptk_odd)
					(c.parts_above_s % 2 == 0 ? even_above_o : odd_above_o) += 1;
			}
			CHECK(even_above + odd_above == count({CountKind::Sptk, k}, n));
			CHECK(even_above - odd_above == count({CountKind::SptkSigned, k}, n));
			CHECK(even_above_o + odd_above_o == count({CountKind::SptkOdd, k}, n));
			CHECK(even_above_o - odd_above_o == count({CountKind::SptkOddSigned, k}, n));
		}
	}
}

TEST_CASE("odd-restricted membership implies the base conditions") {
	for (int n = 0; n <= 14; ++n) {
		for (const Overpartition& p : enumerate_overpartitions(n)) {
			for (int k = 1; k <= 3; ++k) {
				const auto c = classify(p, k);
				if (!c.in_sptk_odd) continue;
				const auto s = smallest_nonoverlined(p);
				REQUIRE(s.has_value());
				int plain_s = 0;
				for (const PartGroup& g : p.groups) {
					if (g.value == *s) plain_s = g.plain;
					if (g.overlined) CHECK(g.value > *s);
				}
				CHECK(plain_s == k);
			}
		}
	}
}

TEST_CASE("class members listing") {
	const auto members = class_members({CountKind::Sptk, 1}, 4);
	REQUIRE(members.size() == 3);
	CHECK(members[0].to_text() == "4");
	CHECK(members[1].to_text() == "3+1");
	CHECK(members[2].to_text() == "3~+1");

	// B-type classes at n = 5: 5, 4+1, 4~+1, 3+2, 3~+2, 2+2+1, 2~+2+1
	const auto odd5 = class_members({CountKind::SptkOdd, 1}, 5);
	CHECK(odd5.size() == 7);

	// signed statistics list the same underlying class
	CHECK(class_members({CountKind::SptkOddSigned, 1}, 5).size() == 7);
}

TEST_CASE("name mapping") {
	CHECK(count_kind_from_name("sptk") == CountKind::Sptk);
	CHECK(count_kind_from_name("pbar-oex-signed") == CountKind::PbarOddExSigned);
	CHECK_FALSE(count_kind_from_name("nope").has_value());
	CHECK(count_kind_name(CountKind::NoUnoverlinedOnes) == "no-unoverlined-ones");
}
