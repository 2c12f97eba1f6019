#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "pir/fixtures.hpp"
#include "pir/pircode.hpp"

using pir::Error;
using pir::ErrorKind;
namespace code = pir::code;
namespace packing = pir::packing;
namespace fixtures = pir::fixtures;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a pir::Error");
    return ErrorKind::InvalidParameter;
}

code::PirCode grid_code() {
    return code::code_from_subsets(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
}

} // namespace

TEST_CASE("code_from_subsets basics") {
    code::PirCode grid = grid_code();
    CHECK(grid.s == 4);
    CHECK(grid.m == 8);
    CHECK(grid.declared_k == 3);
    CHECK(code::verify_recovery_plan(grid).ok());

    code::PirCode single = code::code_from_subsets(3, {{0, 1, 2}});
    CHECK(single.m == 4);
    CHECK(single.declared_k == 2);
    CHECK(code::verify_recovery_plan(single).ok());

    code::PirCode k6 = code::code_from_subsets(12, fixtures::k6_minus_matching().blocks);
    CHECK(k6.m == 18);
    CHECK(k6.declared_k == 3);
    CHECK(code::verify_recovery_plan(k6).ok());

    CHECK(kind_of([] { code::code_from_subsets(3, {{0, 1}, {}}); }) == ErrorKind::EmptySubset);
    CHECK(kind_of([] { code::code_from_subsets(4, {{0, 1}, {0, 1}}); }) ==
          ErrorKind::IntersectionViolation);
}

TEST_CASE("code_from_packing") {
    code::PirCode p36 = code::code_from_packing(packing::direct_product_packing({3, 6}, 2));
    CHECK(p36.s == 18);
    CHECK(p36.m == 27);
    CHECK(p36.declared_k == 3);
    CHECK(code::verify_recovery_plan(p36).ok());

    code::PirCode ag = code::code_from_packing(packing::affine_packing(2, 3, 5));
    CHECK(ag.s == 9);
    CHECK(ag.m == 21);
    CHECK(ag.declared_k == 5);
    CHECK(code::verify_recovery_plan(ag).ok());

    code::PirCode conic = code::code_from_packing(packing::conic_pencil_packing(5, 3));
    CHECK(conic.s == 10);
    CHECK(conic.m == 18);
    CHECK(conic.declared_k == 3);
    CHECK(code::verify_recovery_plan(conic).ok());
}

TEST_CASE("code_from_configuration") {
    code::PirCode sym = code::code_from_configuration(fixtures::sym_15_4(), code::Side::Primal);
    CHECK(sym.s == 15);
    CHECK(sym.m == 30);
    CHECK(sym.declared_k == 5);
    CHECK(code::verify_recovery_plan(sym).ok());

    code::PirCode sts = code::code_from_configuration(fixtures::sts_13(), code::Side::Primal);
    CHECK(sts.s == 13);
    CHECK(sts.m == 39);
    CHECK(sts.declared_k == 7);
    CHECK(code::verify_recovery_plan(sts).ok());

    code::PirCode cfg = code::code_from_configuration(fixtures::config_20_4_16_5(),
                                                      code::Side::Primal);
    CHECK(cfg.s == 20);
    CHECK(cfg.m == 36);
    CHECK(cfg.declared_k == 5);
    CHECK(code::verify_recovery_plan(cfg).ok());

    // dual route equals the dual structure's primal route
    pir::design::IncidenceStructure inc = fixtures::k6_minus_matching();
    code::PirCode via_dual = code::code_from_configuration(inc, code::Side::Dual);
    code::PirCode via_primal =
        code::code_from_configuration(pir::design::dual(inc), code::Side::Primal);
    CHECK(via_dual.parity_columns == via_primal.parity_columns);
    CHECK(via_dual.declared_k == via_primal.declared_k);
    CHECK(via_dual.s == 6);
    CHECK(via_dual.m == 18);
    CHECK(via_dual.declared_k == 5); // z+1
}

TEST_CASE("verify_recovery_plan catches mutations") {
    code::PirCode grid = grid_code();
    REQUIRE(code::verify_recovery_plan(grid).ok());

    code::PirCode flipped = grid;
    flipped.parity_columns[0] = {0, 2}; // was {0,1}: plan sets now sum wrong
    code::PlanVerdict v1 = code::verify_recovery_plan(flipped);
    CHECK(v1.kind == code::PlanVerdict::Kind::SumMismatch);

    code::PirCode overlapping = grid;
    overlapping.recovery_plan[0][1] = overlapping.recovery_plan[0][0]; // reuse column 0
    code::PlanVerdict v2 = code::verify_recovery_plan(overlapping);
    CHECK(v2.kind == code::PlanVerdict::Kind::DisjointnessViolation);

    code::PirCode overdeclared = grid;
    overdeclared.declared_k = 4;
    code::PlanVerdict v3 = code::verify_recovery_plan(overdeclared);
    CHECK(v3.kind == code::PlanVerdict::Kind::TooFewSets);
}

TEST_CASE("brute-force oracle") {
    code::PirCode grid = grid_code();
    for (int i = 0; i < 4; ++i) CHECK(code::max_disjoint_recovery(grid, i, 10) == 3);

    code::PirCode single = code::code_from_subsets(3, {{0, 1, 2}});
    for (int i = 0; i < 3; ++i) CHECK(code::max_disjoint_recovery(single, i, 10) == 2);

    code::PirCode k6 = code::code_from_subsets(12, fixtures::k6_minus_matching().blocks);
    for (int i = 0; i < 12; ++i) CHECK(code::max_disjoint_recovery(k6, i, 10) >= 3);

    code::PirCode big = code::code_from_configuration(fixtures::sym_15_4(), code::Side::Primal);
    big.m = 49; // force the guard
    CHECK(kind_of([&] { code::max_disjoint_recovery(big, 0, 5); }) == ErrorKind::ResourceGuard);
}

TEST_CASE("oracle agrees on the STS(13) code via the bounded-depth branch") {
    code::PirCode sts = code::code_from_configuration(fixtures::sts_13(), code::Side::Primal);
    REQUIRE(sts.m - sts.s == 26); // exercises the DFS regime
    CHECK(code::max_disjoint_recovery(sts, 0, 8) >= 7);
}

TEST_CASE("combine_codes") {
    code::PirCode single = code::code_from_subsets(3, {{0, 1, 2}});
    code::PirCode doubled = code::combine_codes(single, single);
    CHECK(doubled.s == 3);
    CHECK(doubled.m == 8);
    CHECK(doubled.declared_k == 4);
    CHECK(code::verify_recovery_plan(doubled).ok());
    for (int i = 0; i < 3; ++i) CHECK(code::max_disjoint_recovery(doubled, i, 10) >= 4);

    // adding an identity-only (1-server) code appends s singleton columns
    code::PirCode identity_only = code::code_from_subsets(4, {});
    CHECK(identity_only.declared_k == 1);
    code::PirCode grid = grid_code();
    code::PirCode plus = code::combine_codes(grid, identity_only);
    CHECK(plus.m == 12);
    CHECK(plus.declared_k == 4);
    CHECK(code::verify_recovery_plan(plus).ok());

    code::PirCode two_grids = code::combine_codes(grid, grid);
    CHECK(two_grids.m == 16);
    CHECK(two_grids.declared_k == 6);
    CHECK(code::verify_recovery_plan(two_grids).ok());
    for (int i = 0; i < 4; ++i) CHECK(code::max_disjoint_recovery(two_grids, i, 7) == 6);

    code::PirCode other = code::code_from_subsets(5, {{0, 1, 2, 3, 4}});
    CHECK(kind_of([&] { code::combine_codes(grid, other); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("combine_subpackings and the m3 = m1+m2-s identity") {
    packing::PartialPacking grid_packing =
        packing::validate_packing(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
    code::PirCode c = code::combine_subpackings(grid_packing, 2, 2);
    CHECK(c.s == 4);
    CHECK(c.m == 8); // 6 + 6 - 4
    CHECK(c.declared_k == 3);

    packing::PartialPacking ag = packing::affine_packing(2, 3, 5);
    code::PirCode full = code::combine_subpackings(ag, 3, 3);
    code::PirCode direct = code::code_from_packing(ag);
    CHECK(full.parity_columns == direct.parity_columns);
    CHECK(full.declared_k == 5);
    CHECK(full.m == 21);

    CHECK(kind_of([&] { code::combine_subpackings(grid_packing, 3, 2); }) ==
          ErrorKind::HOutOfRange);

    // the identity against the actual range code lengths, every admissible split
    for (const packing::PartialPacking& p :
         {packing::affine_packing(2, 3, 5), packing::projective_packing(3, 2, 8),
          packing::direct_product_packing({2, 3, 4}, 3)}) {
        for (int h1 = 2; h1 <= p.k(); ++h1) {
            for (int h2 = 2; h1 + h2 <= p.k() + 1; ++h2) {
                code::PirCode combined = code::combine_subpackings(p, h1, h2);
                std::vector<std::vector<std::vector<int>>> raw1, raw2;
                for (int i = 0; i < h1 - 1; ++i) raw1.push_back(p.partitions[i].parts);
                for (int i = h1 - 1; i < h1 + h2 - 2; ++i) raw2.push_back(p.partitions[i].parts);
                int m1 = code::code_from_packing(packing::validate_packing(p.ground_size, raw1)).m;
                int m2 = code::code_from_packing(packing::validate_packing(p.ground_size, raw2)).m;
                CHECK(combined.m == m1 + m2 - p.ground_size);
                CHECK(code::verify_recovery_plan(combined).ok());
            }
        }
    }
}

TEST_CASE("lrc params") {
    code::LrcParams grid = code::lrc_params(grid_code());
    CHECK(grid.locality == 2);
    CHECK(grid.availability == 2);

    code::LrcParams sym =
        code::lrc_params(code::code_from_configuration(fixtures::sym_15_4(), code::Side::Primal));
    CHECK(sym.locality == 4);
    CHECK(sym.availability == 4);

    code::LrcParams single = code::lrc_params(code::code_from_subsets(3, {{0, 1, 2}}));
    CHECK(single.locality == 3);
    CHECK(single.availability == 1);
}

TEST_CASE("matrix export/import round-trip") {
    std::vector<code::PirCode> codes = {
        grid_code(),
        code::code_from_packing(packing::affine_packing(2, 3, 5)),
        code::code_from_configuration(fixtures::sym_15_4(), code::Side::Primal),
        code::code_from_packing(packing::conic_pencil_packing(5, 3)),
        code::combine_codes(grid_code(), grid_code()),
    };
    for (const auto& c : codes) {
        std::string text = code::export_matrix(c);
        code::PirCode back = code::import_matrix(text);
        CHECK(back.s == c.s);
        CHECK(back.m == c.m);
        CHECK(back.parity_columns == c.parity_columns);
        CHECK(back.recovery_plan == c.recovery_plan);
        CHECK(back.declared_k == c.declared_k);
        CHECK(code::export_matrix(back) == text);
    }

    CHECK(kind_of([] { code::import_matrix("3 4\n100\n010\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { code::import_matrix("2 3\n10x\n011\n"); }) == ErrorKind::ParseError);

    // flipping a bit inside the identity block must be detected
    std::string good = code::export_matrix(grid_code());
    std::string bad = good;
    size_t pos = good.find('\n') + 1; // row 0, column 0
    bad[pos] = '0';
    CHECK(kind_of([&] { code::import_matrix(bad); }) == ErrorKind::VerificationFailed);
}

TEST_CASE("plan export format") {
    code::PirCode single = code::code_from_subsets(3, {{0, 1, 2}});
    CHECK(code::export_plan(single) == "0: {0} {1,2,3}\n1: {1} {0,2,3}\n2: {2} {0,1,3}\n");
}
