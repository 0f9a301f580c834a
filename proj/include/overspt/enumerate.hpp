#ifndef OVERSPT_ENUMERATE_HPP
#define OVERSPT_ENUMERATE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace overspt {

/* One distinct part value inside an overpartition: `plain` non-overlined
 * copies plus at most one overlined copy. A group exists only if it
 * contributes at least one copy (plain >= 1 or overlined). */
struct PartGroup {
	int value;
	int plain;
	bool overlined;

	int copies() const { return plain + (overlined ? 1 : 0); }
};

/* A partition in which the first occurrence of a value may be overlined.
 * Groups are kept strictly descending by value. */
struct Overpartition {
	std::vector<PartGroup> groups;

	int weight() const;
	int total_parts() const;

	/* Paper-style ASCII rendering, overline as a trailing tilde:
	 * 3~+2+1 means overlined 3, plain 2, plain 1. */
	std::string to_text() const;
};

bool operator==(const Overpartition& a, const Overpartition& b);

/* Descending-lexicographic listing order on the expanded copies (value
 * first, overline flags as tiebreak). */
bool operator<(const Overpartition& a, const Overpartition& b);

/* All overpartitions of n, each exactly once, by recursive descent over
 * the largest part with an overline choice at the first use of each
 * value. n = 0 yields exactly the empty overpartition. Practical bound
 * n <= 40 or so. */
std::vector<Overpartition> enumerate_overpartitions(int n);

/* Least value carrying a non-overlined copy; absent when every part is
 * overlined (such overpartitions belong to no Spt class). */
std::optional<int> smallest_nonoverlined(const Overpartition& p);

struct SptClassification {
	bool in_sptk = false;
	bool in_sptk_odd = false;
	/* Copies (overlined and plain, with multiplicity) of values strictly
	 * greater than the smallest non-overlined part. */
	int parts_above_s = 0;
};

/* Membership tests for the smallest-part classes at a given k:
 *  - in_sptk: s exists, its non-overlined multiplicity is exactly k, it
 *    is itself not overlined, and every overlined value exceeds s;
 *  - in_sptk_odd: additionally every value other than s (overlined or
 *    not) has parity opposite to s. */
SptClassification classify(const Overpartition& p, int k);

enum class CountKind {
	Sptk,
	SptkSigned,
	SptkOdd,
	SptkOddSigned,
	Pbar,
	PbarEven,
	PbarOdd,
	PbarOddEx,
	PbarOddExSigned,
	NoUnoverlinedOnes,
};

struct CountFunction {
	CountKind kind;
	int k = 1;  // ignored for the Pbar family
};

/* Exact count (or signed count, for the Signed kinds) of the statistic
 * at n, by exhaustive enumeration. Signed spt kinds weight members by
 * (-1)^{parts above s}; PbarOddExSigned weights by (-1)^{total parts}. */
long count(CountFunction fn, int n);

/* True when p lies in the class underlying fn (signed statistics share
 * their unsigned class). */
bool in_counted_class(const Overpartition& p, CountFunction fn);

/* The class members at n in listing order; for signed statistics these
 * are the members of the underlying unsigned class. */
std::vector<Overpartition> class_members(CountFunction fn, int n);

/* Name <-> enum mapping shared with the CLI ("sptk", "pbar-e", ...). */
std::optional<CountKind> count_kind_from_name(std::string_view name);
std::string_view count_kind_name(CountKind kind);

}  // namespace overspt

#endif
