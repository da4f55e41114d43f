#include <qcurv/catalog.hpp>
#include <qcurv/io/report.hpp>

#include <catch_amalgamated.hpp>

#include <stdexcept>

using qcurv::HopfFamily;
using qcurv::HopfId;
using qcurv::Integer;
using qcurv::LaurentPoly;
using qcurv::LimitSign;
using qcurv::Rational;
using qcurv::SubmersionData;

namespace {

Rational r(long long p, long long q = 1) { return Rational(Integer(p), Integer(q)); }

int max_q(HopfId id) { return id == HopfId::iv ? 1 : 50; }

} // namespace

TEST_CASE("hopf_data", "[catalog]") {
    CHECK(qcurv::hopf_data(HopfFamily(HopfId::ii, 1)) == SubmersionData{7, 3, r(3), r(4), r(2), r(12)});
    CHECK(qcurv::hopf_data(HopfFamily(HopfId::iv)) == SubmersionData{15, 7, r(7), r(8), r(6), r(28)});
    CHECK(qcurv::hopf_data(HopfFamily(HopfId::i, 2)) == SubmersionData{5, 1, r(1), r(4), r(0), r(6)});
    CHECK(qcurv::hopf_data(HopfFamily(HopfId::iii, 3)) == SubmersionData{14, 2, r(2), r(12), r(4), r(20)});
    CHECK(HopfFamily(HopfId::iv, 9).q == 1);
    CHECK_THROWS_AS(HopfFamily(HopfId::i, 1), std::domain_error);
    CHECK_THROWS_AS(HopfFamily(HopfId::ii, 0), std::domain_error);
    CHECK(qcurv::parse_hopf_id("iii") == HopfId::iii);
    CHECK_THROWS_AS(qcurv::parse_hopf_id("v"), std::invalid_argument);
    for (HopfId id : qcurv::all_hopf_ids) {
        for (int q = qcurv::min_q(id); q <= max_q(id); ++q) {
            CHECK(qcurv::validate(qcurv::hopf_data(HopfFamily(id, q))).empty());
        }
    }
}

TEST_CASE("closed-form Q polynomials", "[catalog]") {
    const LaurentPoly s15{{-2, r(20259, 1352)}, {-1, r(32388, 169)}, {0, r(64383, 169)}, {1, r(-30640, 169)},
                          {2, r(1366, 169)}};
    CHECK(qcurv::appendix_q_poly(HopfFamily(HopfId::iv)) == s15);

    // family (i) at q = 2, coefficient by coefficient
    CHECK(r(64 - 272 - 212 - 3, 72) == r(-47, 8));
    const LaurentPoly s5{{2, r(-47, 8)}, {1, r(13, 2)}, {0, r(25, 2)}};
    CHECK(qcurv::appendix_q_poly(HopfFamily(HopfId::i, 2)) == s5);
    CHECK(eval(s5, r(1)) == r(105, 8));

    const LaurentPoly s7{{-2, r(51, 200)}, {-1, r(486, 25)}, {0, r(1149, 50)}, {1, r(36, 5)}, {2, r(-21, 2)}};
    CHECK(qcurv::appendix_q_poly(HopfFamily(HopfId::ii, 1)) == s7);
    CHECK(eval(s7, r(1)) == r(315, 8));
}

TEST_CASE("closed forms agree with the canonical variation", "[catalog][property]") {
    for (HopfId id : qcurv::all_hopf_ids) {
        for (int q = qcurv::min_q(id); q <= max_q(id); ++q) {
            const HopfFamily f(id, q);
            const SubmersionData d = qcurv::hopf_data(f);
            const auto pkg = qcurv::curvature_package(d);
            const auto cf = qcurv::berger_closed_form(f);
            INFO(f.label());
            CHECK(cf.q_curv == pkg.q_curv);
            CHECK(cf.scal == pkg.scal);
            CHECK(cf.ric_norm_sq == pkg.ric_norm_sq);
            CHECK(cf.vertical.value == pkg.ric_vertical);
            CHECK(cf.vertical.multiplicity == d.l);
            CHECK(cf.horizontal.value == pkg.ric_horizontal);
            CHECK(cf.horizontal.multiplicity == d.n - d.l);
            if (id != HopfId::iii) {
                CHECK(eval(cf.vertical.value, r(1)) == r(d.n - 1));
                CHECK(eval(cf.horizontal.value, r(1)) == r(d.n - 1));
            }
        }
    }
    // quaternionic Ricci eigenvalues at q = 5
    const auto cf = qcurv::berger_closed_form(HopfFamily(HopfId::ii, 5));
    CHECK(cf.vertical.value == LaurentPoly{{-1, r(2)}, {1, r(20)}});
    CHECK(cf.vertical.multiplicity == 3);
    CHECK(cf.horizontal.value == LaurentPoly{{0, r(28)}, {1, r(-6)}});
    CHECK(cf.horizontal.multiplicity == 20);
}

TEST_CASE("base spectra", "[catalog]") {
    const auto s8 = qcurv::base_spectrum(HopfFamily(HopfId::iv));
    CHECK(s8.first(3) == std::vector<Rational>{r(32), r(72), r(120)});
    CHECK(qcurv::base_spectrum(HopfFamily(HopfId::ii, 1)).eigenvalue(1) == r(16));
    CHECK(qcurv::base_spectrum(HopfFamily(HopfId::iii, 2)).eigenvalue(1) == r(24));
    CHECK(qcurv::base_spectrum(HopfFamily(HopfId::i, 3)).eigenvalue(2) == r(40));
}

TEST_CASE("Lichnerowicz-Obata bound on the base spectra", "[catalog][property]") {
    for (HopfId id : qcurv::all_hopf_ids) {
        for (int q = qcurv::min_q(id); q <= max_q(id); ++q) {
            const HopfFamily f(id, q);
            const SubmersionData d = qcurv::hopf_data(f);
            const int m = qcurv::base_dimension(f);
            const Rational bound = Rational(m) * d.lambda_B / Rational(m - 1);
            const Rational first = qcurv::base_spectrum(f).eigenvalue(1);
            INFO(f.label());
            CHECK(first >= bound);
            // equality exactly for the round-sphere bases HP^1 and S^8(1/2)
            const bool round = id == HopfId::iv || ((id == HopfId::ii || id == HopfId::iii) && q == 1);
            CHECK((first == bound) == round);
            const auto eigs = qcurv::base_spectrum(f).first(30);
            for (std::size_t k = 1; k < eigs.size(); ++k) {
                CHECK(eigs[k - 1] < eigs[k]);
            }
        }
    }
}

TEST_CASE("limit signs of Q on the Berger families", "[catalog][property]") {
    for (HopfId id : qcurv::all_hopf_ids) {
        for (int q = qcurv::min_q(id); q <= max_q(id); ++q) {
            const HopfFamily f(id, q);
            const auto s = qcurv::q_limit_signs(qcurv::appendix_q_poly(f));
            INFO(f.label());
            switch (id) {
            case HopfId::i:
                CHECK(s.at_zero != LimitSign::pos_infinity);
                CHECK(s.at_zero != LimitSign::neg_infinity);
                CHECK(s.at_infinity == (q <= 9 ? LimitSign::neg_infinity : LimitSign::pos_infinity));
                break;
            case HopfId::ii:
                CHECK(s.at_zero == LimitSign::pos_infinity);
                CHECK(s.at_infinity == (q <= 2 ? LimitSign::neg_infinity : LimitSign::pos_infinity));
                break;
            case HopfId::iii:
                CHECK(s.at_zero == (q == 1 ? LimitSign::neg_infinity : LimitSign::pos_infinity));
                CHECK(s.at_infinity == (q <= 3 ? LimitSign::neg_infinity : LimitSign::pos_infinity));
                break;
            case HopfId::iv:
                CHECK(s.at_zero == LimitSign::pos_infinity);
                CHECK(s.at_infinity == LimitSign::pos_infinity);
                break;
            }
        }
    }
}

TEST_CASE("bifurcation table rows", "[catalog]") {
    const auto row6 = qcurv::theorem_a_row(HopfFamily(HopfId::i, 6));
    CHECK_FALSE(row6.collapse());
    CHECK(row6.expansion());
    const auto row_s7 = qcurv::theorem_a_row(HopfFamily(HopfId::ii, 1));
    CHECK(row_s7.collapse());
    CHECK_FALSE(row_s7.expansion());
    const auto row_s15 = qcurv::theorem_a_row(HopfFamily(HopfId::iv));
    CHECK(row_s15.collapse());
    CHECK(row_s15.expansion());

    const auto table = qcurv::theorem_a_table(12);
    CHECK(table.size() == 11 + 12 + 12 + 1);
    for (const auto& row : table) {
        INFO(row.family.label());
        CHECK(row.matches());
    }
    CHECK_THROWS_AS(qcurv::theorem_a_table(0), std::domain_error);
}

TEST_CASE("markdown summary", "[catalog][report]") {
    const std::string md = qcurv::theorem_a_markdown(qcurv::theorem_a_table(12));
    CHECK(md.find("| (i) S^1 -> S^(2q+1) -> CP^q | no | if q >= 6 |") != std::string::npos);
    CHECK(md.find("| (ii) S^3 -> S^(4q+3) -> HP^q | if q >= 1 | if q >= 2 |") != std::string::npos);
    CHECK(md.find("| (iii) CP^1 -> CP^(2q+1) -> HP^q | if q >= 2 | if q >= 3 |") != std::string::npos);
    CHECK(md.find("| (iv) S^7 -> S^15 -> S^8(1/2) | yes | yes |") != std::string::npos);
    CHECK(md.find("MISMATCH") == std::string::npos);

    CHECK(qcurv::threshold_summary({{1, false}, {2, false}}, false) == "no");
    CHECK(qcurv::threshold_summary({{1, true}, {2, true}}, false) == "if q >= 1");
    CHECK(qcurv::threshold_summary({{1, true}}, true) == "yes");
    CHECK(qcurv::threshold_summary({{1, false}, {2, true}, {3, true}}, false) == "if q >= 2");
}
