#include "overspt/enumerate.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace overspt {

int Overpartition::weight() const {
	int w = 0;
	for (const PartGroup& g : groups) w += g.value * g.copies();
	return w;
}

int Overpartition::total_parts() const {
	int n = 0;
	for (const PartGroup& g : groups) n += g.copies();
	return n;
}

std::string Overpartition::to_text() const {
	if (groups.empty()) return "0";
	std::ostringstream out;
	bool first = true;
	for (const PartGroup& g : groups) {
		if (g.overlined) {
			out << (first ? "" : "+") << g.value << "~";
			first = false;
		}
		for (int i = 0; i < g.plain; ++i) {
			out << (first ? "" : "+") << g.value;
			first = false;
		}
	}
	return out.str();
}

bool operator==(const Overpartition& a, const Overpartition& b) {
	if (a.groups.size() != b.groups.size()) return false;
	for (std::size_t i = 0; i < a.groups.size(); ++i) {
		const PartGroup &x = a.groups[i], &y = b.groups[i];
		if (x.value != y.value || x.plain != y.plain || x.overlined != y.overlined) return false;
	}
	return true;
}

namespace {

/* Expanded copy list: (value, overlined) per part, descending by value,
 * overlined copy first within its value. */
std::vector<std::pair<int, bool>> expand(const Overpartition& p) {
	std::vector<std::pair<int, bool>> out;
	for (const PartGroup& g : p.groups) {
		if (g.overlined) out.emplace_back(g.value, true);
		for (int i = 0; i < g.plain; ++i) out.emplace_back(g.value, false);
	}
	return out;
}

}  // namespace

bool operator<(const Overpartition& a, const Overpartition& b) {
	const auto ea = expand(a);
	const auto eb = expand(b);
	for (std::size_t i = 0; i < std::min(ea.size(), eb.size()); ++i) {
		if (ea[i].first != eb[i].first) return ea[i].first > eb[i].first;
	}
	if (ea.size() != eb.size()) return ea.size() < eb.size();
	for (std::size_t i = 0; i < ea.size(); ++i) {
		if (ea[i].second != eb[i].second) return !ea[i].second;
	}
	return false;
}

namespace {

/* Descend over the largest part value; at the first use of a value,
 * branch on whether one of its copies is overlined. Every overpartition
 * is reached exactly once, so no dedup set is needed. */
template <typename Visitor>
void visit_rec(int remaining, int max_value, std::vector<PartGroup>& acc, Visitor& visit) {
	if (remaining == 0) {
		visit(acc);
		return;
	}
	for (int v = std::min(max_value, remaining); v >= 1; --v) {
		for (int c = 1; v * c <= remaining; ++c) {
			acc.push_back({v, c, false});
			visit_rec(remaining - v * c, v - 1, acc, visit);
			acc.back() = {v, c - 1, true};
			visit_rec(remaining - v * c, v - 1, acc, visit);
			acc.pop_back();
		}
	}
}

template <typename Visitor>
void for_each_overpartition(int n, Visitor visit) {
	if (n < 0) throw std::invalid_argument("enumerate_overpartitions: negative n");
	std::vector<PartGroup> acc;
	visit_rec(n, n, acc, visit);
}

}  // namespace

std::vector<Overpartition> enumerate_overpartitions(int n) {
	std::vector<Overpartition> out;
	for_each_overpartition(n, [&](const std::vector<PartGroup>& groups) {
		out.push_back(Overpartition{groups});
	});
	return out;
}

std::optional<int> smallest_nonoverlined(const Overpartition& p) {
	std::optional<int> s;
	for (const PartGroup& g : p.groups) {
		if (g.plain >= 1 && (!s || g.value < *s)) s = g.value;
	}
	return s;
}

SptClassification classify(const Overpartition& p, int k) {
	if (k < 1) throw std::invalid_argument("classify: k must be >= 1");
	SptClassification c;
	const std::optional<int> s = smallest_nonoverlined(p);
	if (!s) return c;
	bool multiplicity_k = false;
	bool overlines_above = true;
	bool parity_opposite = true;
	for (const PartGroup& g : p.groups) {
		if (g.value == s) {
			/* The overline condition forbids an overlined copy of s, so
			 * all copies of s are the k non-overlined ones. */
			multiplicity_k = (g.plain == k);
			if (g.overlined) overlines_above = false;
		} else {
			if (g.overlined && g.value < *s) overlines_above = false;
			if ((g.value - *s) % 2 == 0) parity_opposite = false;
			if (g.value > *s) c.parts_above_s += g.copies();
		}
	}
	c.in_sptk = multiplicity_k && overlines_above;
	c.in_sptk_odd = c.in_sptk && parity_opposite;
	return c;
}

namespace {

bool all_values_even(const Overpartition& p) {
	return std::all_of(p.groups.begin(), p.groups.end(),
	                   [](const PartGroup& g) { return g.value % 2 == 0; });
}

bool all_values_odd(const Overpartition& p) {
	return std::all_of(p.groups.begin(), p.groups.end(),
	                   [](const PartGroup& g) { return g.value % 2 == 1; });
}

bool no_plain_ones(const Overpartition& p) {
	return std::none_of(p.groups.begin(), p.groups.end(),
	                    [](const PartGroup& g) { return g.value == 1 && g.plain >= 1; });
}

}  // namespace

bool in_counted_class(const Overpartition& p, CountFunction fn) {
	switch (fn.kind) {
	case CountKind::Sptk:
	case CountKind::SptkSigned:
		return classify(p, fn.k).in_sptk;
	case CountKind::SptkOdd:
	case CountKind::SptkOddSigned:
		return classify(p, fn.k).in_sptk_odd;
	case CountKind::Pbar:
		return true;
	case CountKind::PbarEven:
		return all_values_even(p);
	case CountKind::PbarOdd:
		return all_values_odd(p);
	case CountKind::PbarOddEx:
	case CountKind::PbarOddExSigned:
		return all_values_odd(p) && no_plain_ones(p);
	case CountKind::NoUnoverlinedOnes:
		return no_plain_ones(p);
	}
	throw std::invalid_argument("in_counted_class: bad kind");
}

long count(CountFunction fn, int n) {
	long total = 0;
	for_each_overpartition(n, [&](const std::vector<PartGroup>& groups) {
		const Overpartition p{groups};
		if (!in_counted_class(p, fn)) return;
		switch (fn.kind) {
		case CountKind::SptkSigned:
		case CountKind::SptkOddSigned:
			total += classify(p, fn.k).parts_above_s % 2 == 0 ? 1 : -1;
			break;
		case CountKind::PbarOddExSigned:
			total += p.total_parts() % 2 == 0 ? 1 : -1;
			break;
		default:
			total += 1;
		}
	});
	return total;
}

std::vector<Overpartition> class_members(CountFunction fn, int n) {
	std::vector<Overpartition> out;
	for_each_overpartition(n, [&](const std::vector<PartGroup>& groups) {
		Overpartition p{groups};
		if (in_counted_class(p, fn)) out.push_back(std::move(p));
	});
	std::sort(out.begin(), out.end());
	return out;
}

namespace {

constexpr std::array<std::pair<std::string_view, CountKind>, 10> kCountNames{{
    {"sptk", CountKind::Sptk},
    {"sptk-signed", CountKind::SptkSigned},
    {"sptk-odd", CountKind::SptkOdd},
    {"sptk-odd-signed", CountKind::SptkOddSigned},
    {"pbar", CountKind::Pbar},
    {"pbar-e", CountKind::PbarEven},
    {"pbar-o", CountKind::PbarOdd},
    {"pbar-oex", CountKind::PbarOddEx},
    {"pbar-oex-signed", CountKind::PbarOddExSigned},
    {"no-unoverlined-ones", CountKind::NoUnoverlinedOnes},
}};

}  // namespace

std::optional<CountKind> count_kind_from_name(std::string_view name) {
	for (const auto& [text, value] : kCountNames) {
		if (text == name) return value;
	}
	return std::nullopt;
}

std::string_view count_kind_name(CountKind kind) {
	for (const auto& [text, value] : kCountNames) {
		if (value == kind) return text;
	}
	return "?";
}

}  // namespace overspt
