#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "overspt/enumerate.hpp"
#include "overspt/genfun.hpp"
#include "overspt/qproducts.hpp"
#include "overspt/series.hpp"
#include "overspt/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace overspt;

constexpr int kExitUsage = 2;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name) {
	if (name == "text") return Format::Text;
	if (name == "json") return Format::Json;
	if (name == "csv") return Format::Csv;
	throw CLI::ValidationError("--format", "expected text, json or csv");
}

json report_to_json(const VerificationReport& r) {
	json j;
	j["identity"] = std::string(identity_name(r.identity));
	j["k"] = r.k ? json(*r.k) : json(nullptr);
	j["order"] = r.order;
	j["passed"] = r.passed;
	if (r.first_mismatch) {
		j["first_mismatch"] = {{"index", r.first_mismatch->index},
		                       {"lhs", r.first_mismatch->lhs.get_str()},
		                       {"rhs", r.first_mismatch->rhs.get_str()}};
	} else {
		j["first_mismatch"] = nullptr;
	}
	if (!r.note.empty()) j["note"] = r.note;
	j["elapsed_ms"] = r.elapsed.count();
	return j;
}

void print_report_text(const VerificationReport& r) {
	const std::string k_text = r.k ? ("k=" + std::to_string(*r.k)) : "";
	std::printf("[%s] %-24s %-5s order=%-4d %8.1f ms", r.passed ? "PASS" : "FAIL",
	            std::string(identity_name(r.identity)).c_str(), k_text.c_str(), r.order,
	            r.elapsed.count());
	if (r.first_mismatch) {
		std::printf("  first mismatch at q^%d: lhs=%s rhs=%s", r.first_mismatch->index,
		            r.first_mismatch->lhs.get_str().c_str(),
		            r.first_mismatch->rhs.get_str().c_str());
	}
	if (!r.note.empty()) std::printf("  (%s)", r.note.c_str());
	std::printf("\n");
}

int emit_reports(const std::vector<VerificationReport>& reports, Format format) {
	bool all_passed = true;
	for (const auto& r : reports) all_passed = all_passed && r.passed;
	switch (format) {
	case Format::Text: {
		for (const auto& r : reports) print_report_text(r);
		std::size_t passed = 0;
		for (const auto& r : reports) passed += r.passed ? 1 : 0;
		std::printf("%zu/%zu identity checks passed\n", passed, reports.size());
		break;
	}
	case Format::Json: {
		json j = json::array();
		for (const auto& r : reports) j.push_back(report_to_json(r));
		std::cout << j.dump(2) << "\n";
		break;
	}
	case Format::Csv: {
		std::cout << "identity,k,order,passed,mismatch_index,mismatch_lhs,mismatch_rhs,"
		             "elapsed_ms\n";
		for (const auto& r : reports) {
			std::cout << identity_name(r.identity) << ","
			          << (r.k ? std::to_string(*r.k) : "") << "," << r.order << ","
			          << (r.passed ? "true" : "false") << ",";
			if (r.first_mismatch) {
				std::cout << r.first_mismatch->index << "," << r.first_mismatch->lhs.get_str()
				          << "," << r.first_mismatch->rhs.get_str();
			} else {
				std::cout << ",,";
			}
			std::cout << "," << r.elapsed.count() << "\n";
		}
		break;
	}
	}
	return all_passed ? 0 : 1;
}

/* The series whose coefficients tabulate the named statistic. */
Series series_for(CountKind kind, int k, int order) {
	switch (kind) {
	case CountKind::Sptk: return gf_definitional(SptKind::Sptk, k, order);
	case CountKind::SptkSigned: return gf_definitional(SptKind::SptkSigned, k, order);
	case CountKind::SptkOdd: return gf_definitional(SptKind::SptkOdd, k, order);
	case CountKind::SptkOddSigned: return gf_definitional(SptKind::SptkOddSigned, k, order);
	case CountKind::Pbar: return aux_gf(AuxGf::Pbar, order);
	case CountKind::PbarEven: return aux_gf(AuxGf::PbarEven, order);
	case CountKind::PbarOdd: return aux_gf(AuxGf::PbarOdd, order);
	case CountKind::PbarOddEx: return aux_gf(AuxGf::PbarOddEx, order);
	case CountKind::PbarOddExSigned: return aux_gf(AuxGf::PbarOddExSigned, order);
	case CountKind::NoUnoverlinedOnes: return aux_gf(AuxGf::NoUnoverlinedOnes, order);
	}
	throw std::invalid_argument("series_for: bad kind");
}

json overpartition_to_json(const Overpartition& p) {
	json parts = json::array();
	for (const PartGroup& g : p.groups) {
		if (g.overlined) parts.push_back({{"value", g.value}, {"overlined", true}});
		for (int i = 0; i < g.plain; ++i)
			parts.push_back({{"value", g.value}, {"overlined", false}});
	}
	return parts;
}

struct VerifyArgs {
	std::vector<std::string> ids;
	int kmax = 8;
	int order = 80;
	int oracle_bound = kDefaultOracleBound;
	std::string format = "text";
};

struct TableArgs {
	std::string name;
	int k = 1;
	int nmax = 20;
	std::string format = "text";
};

struct OracleArgs {
	std::string name;
	int n = 0;
	int k = 1;
	int oracle_bound = kDefaultOracleBound;
	bool list = false;
	std::string format = "text";
};

struct CrosscheckArgs {
	int kmax = 8;
	int nmax = kDefaultOracleBound;
	int order = 80;
	std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
	const Format format = parse_format(args.format);
	std::vector<VerificationReport> reports;
	if (args.ids.empty() || (args.ids.size() == 1 && args.ids[0] == "all")) {
		reports = verify_all(args.kmax, args.order, args.oracle_bound);
	} else {
		for (const std::string& name : args.ids) {
			const auto id = identity_from_name(name);
			if (!id) {
				std::cerr << "overspt: unknown identity '" << name << "'\n";
				return kExitUsage;
			}
			int krange = 1;
			if (identity_is_k_parameterized(*id)) {
				krange = (*id == IdentityId::Asv)
				             ? static_cast<int>(asv_specializations().size())
				             : args.kmax;
			}
			for (int k = 1; k <= krange; ++k)
				reports.push_back(verify_identity(*id, k, args.order, args.oracle_bound));
		}
	}
	return emit_reports(reports, format);
}

int run_table(const TableArgs& args) {
	const Format format = parse_format(args.format);
	const auto kind = count_kind_from_name(args.name);
	if (!kind) {
		std::cerr << "overspt: unknown function '" << args.name << "'\n";
		return kExitUsage;
	}
	const Series s = series_for(*kind, args.k, args.nmax);
	switch (format) {
	case Format::Text:
		std::printf("%-6s %s\n", "n", args.name.c_str());
		for (int n = 0; n <= args.nmax; ++n)
			std::printf("%-6d %s\n", n, s[n].get_str().c_str());
		break;
	case Format::Json: {
		json rows = json::array();
		for (int n = 0; n <= args.nmax; ++n)
			rows.push_back({{"n", n}, {"value", s[n].get_str()}});
		json j{{"function", args.name}, {"k", args.k}, {"rows", rows}};
		std::cout << j.dump(2) << "\n";
		break;
	}
	case Format::Csv:
		std::cout << "n,value\n";
		for (int n = 0; n <= args.nmax; ++n) std::cout << n << "," << s[n].get_str() << "\n";
		break;
	}
	return 0;
}

int run_oracle(const OracleArgs& args) {
	const Format format = parse_format(args.format);
	const auto kind = count_kind_from_name(args.name);
	if (!kind) {
		std::cerr << "overspt: unknown function '" << args.name << "'\n";
		return kExitUsage;
	}
	if (args.n > args.oracle_bound) {
		std::cerr << "overspt: n=" << args.n << " beyond oracle bound " << args.oracle_bound
		          << " (raise --oracle-bound to override)\n";
		return kExitUsage;
	}
	const CountFunction fn{*kind, args.k};
	const long value = count(fn, args.n);
	std::vector<Overpartition> members;
	if (args.list) members = class_members(fn, args.n);
	switch (format) {
	case Format::Text:
		std::printf("%s(k=%d, n=%d) = %ld\n", args.name.c_str(), args.k, args.n, value);
		for (const auto& p : members) std::printf("  %s\n", p.to_text().c_str());
		break;
	case Format::Json: {
		json j{{"function", args.name}, {"k", args.k}, {"n", args.n}, {"count", value}};
		if (args.list) {
			json m = json::array();
			for (const auto& p : members) m.push_back(overpartition_to_json(p));
			j["members"] = m;
		}
		std::cout << j.dump(2) << "\n";
		break;
	}
	case Format::Csv:
		std::cout << "function,k,n,count\n";
		std::cout << args.name << "," << args.k << "," << args.n << "," << value << "\n";
		for (const auto& p : members) std::cout << "member," << p.to_text() << ",,\n";
		break;
	}
	return 0;
}

int run_crosscheck(const CrosscheckArgs& args) {
	const Format format = parse_format(args.format);
	std::vector<VerificationReport> reports;
	for (int k = 1; k <= args.kmax; ++k)
		reports.push_back(
		    verify_identity(IdentityId::OracleCrosscheck, k, args.order, args.nmax));
	return emit_reports(reports, format);
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"Exact q-series engine and overpartition oracle for "
	             "smallest-non-overlined-part statistics"};
	app.require_subcommand(1);

	VerifyArgs verify_args;
	CLI::App* verify_cmd =
	    app.add_subcommand("verify", "Run identity checks and report pass/fail");
	verify_cmd->add_option("ids", verify_args.ids,
	                       "Identity names (default: all); see --list-identities");
	verify_cmd->add_option("--kmax", verify_args.kmax, "Largest k to verify")
	    ->check(CLI::PositiveNumber);
	verify_cmd->add_option("--order", verify_args.order, "Truncation order (>= 4)")
	    ->check(CLI::Range(4, 1 << 20));
	verify_cmd->add_option("--oracle-bound", verify_args.oracle_bound,
	                       "Largest n for enumeration routes")
	    ->check(CLI::PositiveNumber);
	verify_cmd->add_option("--format", verify_args.format, "text, json or csv");

	bool list_identities = false;
	verify_cmd->add_flag("--list-identities", list_identities, "Print identity names and exit");

	TableArgs table_args;
	CLI::App* table_cmd =
	    app.add_subcommand("table", "Print n, coefficient rows from the series route");
	table_cmd->add_option("function", table_args.name, "Statistic name, e.g. sptk or pbar-e")
	    ->required();
	table_cmd->add_option("--k", table_args.k, "Part multiplicity (spt statistics)")
	    ->check(CLI::PositiveNumber);
	table_cmd->add_option("--nmax", table_args.nmax, "Largest n to print")
	    ->check(CLI::PositiveNumber);
	table_cmd->add_option("--format", table_args.format, "text, json or csv");

	OracleArgs oracle_args;
	CLI::App* oracle_cmd =
	    app.add_subcommand("oracle", "Count a statistic at n by exhaustive enumeration");
	oracle_cmd->add_option("function", oracle_args.name, "Statistic name")->required();
	oracle_cmd->add_option("n", oracle_args.n, "Weight to enumerate")
	    ->required()
	    ->check(CLI::NonNegativeNumber);
	oracle_cmd->add_option("--k", oracle_args.k, "Part multiplicity (spt statistics)")
	    ->check(CLI::PositiveNumber);
	oracle_cmd->add_option("--oracle-bound", oracle_args.oracle_bound,
	                       "Refuse n beyond this bound");
	oracle_cmd->add_flag("--list", oracle_args.list, "List the class members");
	oracle_cmd->add_option("--format", oracle_args.format, "text, json or csv");

	CrosscheckArgs crosscheck_args;
	CLI::App* crosscheck_cmd = app.add_subcommand(
	    "crosscheck", "Compare series coefficients against the enumeration oracle");
	crosscheck_cmd->add_option("--kmax", crosscheck_args.kmax, "Largest k to check")
	    ->check(CLI::PositiveNumber);
	crosscheck_cmd->add_option("--nmax", crosscheck_args.nmax, "Largest n to enumerate")
	    ->check(CLI::PositiveNumber);
	crosscheck_cmd->add_option("--order", crosscheck_args.order, "Truncation order (>= 4)")
	    ->check(CLI::Range(4, 1 << 20));
	crosscheck_cmd->add_option("--format", crosscheck_args.format, "text, json or csv");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? 0 : kExitUsage;
	}

	try {
		if (verify_cmd->parsed()) {
			if (list_identities) {
				for (IdentityId id : all_identities())
					std::cout << identity_name(id) << "\n";
				return 0;
			}
			return run_verify(verify_args);
		}
		if (table_cmd->parsed()) return run_table(table_args);
		if (oracle_cmd->parsed()) return run_oracle(oracle_args);
		if (crosscheck_cmd->parsed()) return run_crosscheck(crosscheck_args);
	} catch (const std::exception& e) {
		std::cerr << "overspt: " << e.what() << "\n";
		return kExitUsage;
	}
	return kExitUsage;
}
