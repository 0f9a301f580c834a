#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "overspt/enumerate.hpp"
#include "overspt/verify.hpp"

using namespace overspt;

TEST_CASE("theorem checks pass") {
	CHECK(verify_identity(IdentityId::ThmSptk, 1, 60).passed);
	CHECK(verify_identity(IdentityId::ThmSptkSigned, 2, 40).passed);
	CHECK(verify_identity(IdentityId::ThmSptko, 3, 40).passed);
	const auto r = verify_identity(IdentityId::ThmSptkoSigned, 2, 40);
	CHECK(r.passed);
	CHECK(r.note.empty());  // the stated Pochhammer index holds as written
}

TEST_CASE("closed-form checks pass") {
	for (int k = 1; k <= 5; ++k) {
		CHECK(verify_identity(IdentityId::ThmSptkClosed, k, 40).passed);
		CHECK(verify_identity(IdentityId::ThmSptkoClosed, k, 40).passed);
		CHECK(verify_identity(IdentityId::ThmSptkoSignedClosed, k, 40).passed);
	}
}

TEST_CASE("corollary checks pass, both routes") {
	const auto r1 = verify_identity(IdentityId::CorSptk, 1, 40, 12);
	CHECK(r1.passed);
	CHECK_FALSE(r1.k.has_value());

	// the worked n = 4 instance: both sides equal 6
	const Series spt1 = gf_definitional(SptKind::Sptk, 1, 10);
	CHECK(spt1[4] + spt1[3] == 6);
	CHECK(aux_gf(AuxGf::NoUnoverlinedOnes, 10)[4] == 6);
	CHECK(count({CountKind::Sptk, 1}, 4) + count({CountKind::Sptk, 1}, 3) == 6);

	CHECK(verify_identity(IdentityId::CorSptko, 1, 40, 12).passed);
	CHECK(verify_identity(IdentityId::CorSptkoSigned, 1, 40, 12).passed);
}

TEST_CASE("classical identity checks pass") {
	for (int k = 1; k <= 4; ++k) CHECK(verify_identity(IdentityId::QBinom, k, 40).passed);
	for (int i = 1; i <= static_cast<int>(asv_specializations().size()); ++i)
		CHECK(verify_identity(IdentityId::Asv, i, 40).passed);
	CHECK_THROWS_AS(verify_identity(IdentityId::Asv, 9, 40), std::invalid_argument);
}

TEST_CASE("oracle crosscheck passes") {
	const auto r = verify_identity(IdentityId::OracleCrosscheck, 3, 20, 14);
	CHECK(r.passed);
	CHECK_FALSE(r.first_mismatch.has_value());
}

TEST_CASE("report invariants and determinism") {
	const auto reports = verify_all(2, 24, 8);
	const auto again = verify_all(2, 24, 8);
	REQUIRE(reports.size() == again.size());
	for (std::size_t i = 0; i < reports.size(); ++i) {
		const auto& r = reports[i];
		CHECK(r.passed == !r.first_mismatch.has_value());
		CHECK(r.identity == again[i].identity);
		CHECK(r.k == again[i].k);
		CHECK(r.order == again[i].order);
		CHECK(r.passed == again[i].passed);
		CHECK(r.note == again[i].note);
	}
	// 10 k-parameterized identities at kmax 2, 5 ASV specializations,
	// 3 corollaries
	CHECK(reports.size() == 9 * 2 + 5 + 3);
	for (const auto& r : reports) CHECK(r.passed);
}

TEST_CASE("the full default sweep passes") {
	for (const auto& r : verify_all(8, 80, 24)) {
		CHECK(r.passed);
	}
}

TEST_CASE("precondition validation") {
	CHECK_THROWS_AS(verify_identity(IdentityId::ThmSptk, 1, 3), std::invalid_argument);
	CHECK_THROWS_AS(verify_identity(IdentityId::ThmSptk, 0, 20), std::invalid_argument);
	CHECK_THROWS_AS(verify_all(0, 20, 8), std::invalid_argument);
}

TEST_CASE("identity names round-trip") {
	for (IdentityId id : all_identities()) {
		const auto name = identity_name(id);
		CHECK(identity_from_name(name) == id);
	}
	CHECK_FALSE(identity_from_name("thm-nope").has_value());
	CHECK(identity_is_k_parameterized(IdentityId::ThmSptk));
	CHECK_FALSE(identity_is_k_parameterized(IdentityId::CorSptk));
}
