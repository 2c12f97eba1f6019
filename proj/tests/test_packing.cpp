#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "pir/packing.hpp"

using pir::Error;
using pir::ErrorKind;
namespace packing = pir::packing;

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

// re-validate a packing from its raw parts (the unconditional check the spec
// asks for on every constructor output)
void revalidate(const packing::PartialPacking& p) {
    std::vector<std::vector<std::vector<int>>> raw;
    for (const auto& part : p.partitions) raw.push_back(part.parts);
    packing::PartialPacking again = packing::validate_packing(p.ground_size, raw);
    CHECK(again.order() == p.order());
}

} // namespace

TEST_CASE("validate_packing accepts the 2x2 grid") {
    packing::PartialPacking grid =
        packing::validate_packing(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
    CHECK(grid.k() == 3);
    CHECK(grid.order() == 4);
    CHECK(grid.homogeneous());
    CHECK(grid.code_length() == 8);
}

TEST_CASE("validate_packing violations") {
    CHECK(kind_of([] {
              packing::validate_packing(4, {{{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}});
          }) == ErrorKind::CrossIntersectionTooLarge);
    CHECK(kind_of([] {
              packing::validate_packing(5, {{{0, 1, 2, 3}, {4}}});
          }) == ErrorKind::PartSizeOne);
    CHECK(kind_of([] {
              packing::validate_packing(4, {{{0, 1}, {1, 2}, {2, 3}}});
          }) == ErrorKind::NotAPartition);
    CHECK(kind_of([] {
              packing::validate_packing(4, {{{0, 1}}});
          }) == ErrorKind::NotAPartition);
}

TEST_CASE("direct product packings") {
    packing::PartialPacking p36 = packing::direct_product_packing({3, 6}, 2);
    CHECK(p36.ground_size == 18);
    CHECK(p36.k() == 3);
    CHECK(p36.order() == 9); // 6 + 3
    CHECK(p36.code_length() == 27);
    revalidate(p36);

    packing::PartialPacking p45 = packing::direct_product_packing({4, 5}, 2);
    CHECK(p45.ground_size == 20);
    CHECK(p45.order() == 9);
    CHECK(p45.code_length() == 29);
    revalidate(p45);

    // s = h^(k-1) specialization: order = w * h^(w-1) ... with all factors h
    packing::PartialPacking cube = packing::direct_product_packing({3, 3, 3}, 3);
    CHECK(cube.ground_size == 27);
    CHECK(cube.order() == 27); // 3 * 9
    CHECK(cube.homogeneous());
    revalidate(cube);

    CHECK(kind_of([] { packing::direct_product_packing({3, 1}, 2); }) ==
          ErrorKind::FactorTooSmall);
}

TEST_CASE("best_factorization reproduces the bold product entries") {
    auto [f18, m18] = packing::best_factorization(18, 3);
    CHECK(f18 == std::vector<int>{3, 6});
    CHECK(m18 == 27);
    auto [f28, m28] = packing::best_factorization(28, 3);
    CHECK(f28 == std::vector<int>{4, 7});
    CHECK(m28 == 39);
    auto [f30, m30] = packing::best_factorization(30, 3);
    CHECK(f30 == std::vector<int>{5, 6});
    CHECK(m30 == 41);
    CHECK(kind_of([] { packing::best_factorization(13, 3); }) == ErrorKind::NoFactorization);
    // exhaustive oracle for a handful of cases: try all factor pairs directly
    for (long long s : {12, 16, 24, 36}) {
        long long best = 1'000'000;
        for (long long a = 2; a * a <= s; ++a)
            if (s % a == 0) best = std::min(best, s / a + a);
        CHECK(packing::best_factorization(s, 3).second == s + best);
    }
}

TEST_CASE("affine packings") {
    packing::PartialPacking a235 = packing::affine_packing(2, 3, 5);
    CHECK(a235.ground_size == 9);
    CHECK(a235.partitions.size() == 4);
    for (const auto& part : a235.partitions) CHECK(part.parts.size() == 3);
    CHECK(a235.code_length() == 21);
    CHECK(a235.homogeneous());
    revalidate(a235);

    packing::PartialPacking grid = packing::affine_packing(2, 2, 3);
    CHECK(grid.ground_size == 4);
    CHECK(grid.order() == 4);

    packing::PartialPacking a246 = packing::affine_packing(2, 4, 6);
    CHECK(a246.ground_size == 16);
    CHECK(a246.partitions.size() == 5);
    CHECK(a246.code_length() == 36);
    revalidate(a246);

    CHECK(kind_of([] { packing::affine_packing(2, 3, 6); }) == ErrorKind::KTooLarge);
}

TEST_CASE("slab packings") {
    packing::PartialPacking s245 = packing::affine_slab_packing(2, 4, 2, 5);
    CHECK(s245.ground_size == 8);
    CHECK(s245.partitions.size() == 4);
    for (const auto& part : s245.partitions) {
        CHECK(part.parts.size() == 4);
        for (const auto& pp : part.parts) CHECK(pp.size() == 2);
    }
    CHECK(s245.code_length() == 24); // (2+5-1)*4
    revalidate(s245);

    // h = q reduces to a full-plane transversal packing with the affine m
    packing::PartialPacking s233 = packing::affine_slab_packing(2, 3, 3, 4);
    packing::PartialPacking a234 = packing::affine_packing(2, 3, 4);
    CHECK(s233.ground_size == a234.ground_size);
    CHECK(s233.order() == a234.order());
    CHECK(s233.code_length() == a234.code_length());
    revalidate(s233);

    packing::PartialPacking s256 = packing::affine_slab_packing(2, 5, 2, 6);
    CHECK(s256.ground_size == 10);
    CHECK(s256.code_length() == 35); // (2+6-1)*5
    revalidate(s256);

    CHECK(kind_of([] { packing::affine_slab_packing(2, 4, 1, 3); }) == ErrorKind::HOutOfRange);
    CHECK(kind_of([] { packing::affine_slab_packing(2, 4, 5, 3); }) == ErrorKind::HOutOfRange);
    CHECK(kind_of([] { packing::affine_slab_packing(2, 4, 2, 6); }) == ErrorKind::KTooLarge);
}

TEST_CASE("projective packing of PG(3,2)") {
    packing::PartialPacking full = packing::projective_packing(3, 2, 8);
    CHECK(full.ground_size == 15);
    CHECK(full.partitions.size() == 7);
    CHECK(full.order() == 35);
    CHECK(full.code_length() == 50);
    revalidate(full);

    packing::PartialPacking k3 = packing::projective_packing(3, 2, 3);
    CHECK(k3.code_length() == 25);

    CHECK(kind_of([] { packing::projective_packing(2, 2, 3); }) ==
          ErrorKind::ParametersInadmissible);
    CHECK(kind_of([] { packing::projective_packing(3, 3, 3); }) ==
          ErrorKind::NotConstructedAtDeskScale);
    CHECK(kind_of([] { packing::projective_packing(5, 2, 3); }) ==
          ErrorKind::NotConstructedAtDeskScale);
    CHECK(kind_of([] { packing::projective_packing(3, 2, 9); }) == ErrorKind::KTooLarge);
}

TEST_CASE("arc pencil packings") {
    packing::PartialPacking a213 = packing::arc_pencil_packing(2, 1, 3);
    CHECK(a213.ground_size == 6);
    CHECK(a213.code_length() == 12);
    for (const auto& part : a213.partitions) {
        CHECK(part.parts.size() == 3);
        for (const auto& pp : part.parts) CHECK(pp.size() == 2);
    }
    revalidate(a213);

    CHECK(packing::arc_pencil_packing(2, 1, 6).code_length() == 21);
    packing::PartialPacking a313 = packing::arc_pencil_packing(3, 1, 3);
    CHECK(a313.ground_size == 10);
    CHECK(a313.code_length() == 20);
    revalidate(a313);

    CHECK(kind_of([] { packing::arc_pencil_packing(2, 1, 7); }) == ErrorKind::KTooLarge);
}

TEST_CASE("unital pencil packings") {
    packing::PartialPacking u25 = packing::unital_pencil_packing(2, 5);
    CHECK(u25.ground_size == 9);
    CHECK(u25.partitions.size() == 4);
    for (const auto& part : u25.partitions) {
        CHECK(part.parts.size() == 3);
        for (const auto& pp : part.parts) CHECK(pp.size() == 3);
    }
    CHECK(u25.code_length() == 21);
    CHECK(u25.homogeneous());
    revalidate(u25);

    CHECK(packing::unital_pencil_packing(2, 3).code_length() == 15);

    packing::PartialPacking u34 = packing::unital_pencil_packing(3, 4);
    CHECK(u34.ground_size == 28);
    CHECK(u34.code_length() == 49);
    for (const auto& part : u34.partitions)
        for (const auto& pp : part.parts) CHECK(pp.size() == 4);
    revalidate(u34);

    CHECK(kind_of([] { packing::unital_pencil_packing(2, 6); }) == ErrorKind::KTooLarge);
}

TEST_CASE("conic pencil packings") {
    packing::PartialPacking c53 = packing::conic_pencil_packing(5, 3);
    CHECK(c53.ground_size == 10);
    CHECK(c53.code_length() == 18); // 10 + 2*(5-1)
    CHECK(!c53.homogeneous());
    CHECK(c53.homogeneous_per_partition() == false);
    for (const auto& part : c53.partitions) {
        REQUIRE(part.parts.size() == 4);
        std::multiset<size_t> sizes;
        for (const auto& pp : part.parts) sizes.insert(pp.size());
        CHECK(sizes == std::multiset<size_t>{2, 2, 3, 3});
    }
    revalidate(c53);

    CHECK(packing::conic_pencil_packing(5, 6).code_length() == 30);
    packing::PartialPacking c73 = packing::conic_pencil_packing(7, 3);
    CHECK(c73.ground_size == 21);
    CHECK(c73.code_length() == 33);
    revalidate(c73);

    CHECK(kind_of([] { packing::conic_pencil_packing(4, 3); }) == ErrorKind::QEven);
    CHECK(kind_of([] { packing::conic_pencil_packing(3, 3); }) == ErrorKind::QEven);
    CHECK(kind_of([] { packing::conic_pencil_packing(5, 7); }) == ErrorKind::KTooLarge);
}

TEST_CASE("restrict_packing") {
    packing::PartialPacking grid =
        packing::validate_packing(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
    packing::PartialPacking same = packing::restrict_packing(grid, {0, 1, 2, 3});
    CHECK(same.order() == grid.order());

    // AG(2,3) restricted to the complement of one line of the first class
    packing::PartialPacking ag = packing::affine_packing(2, 3, 5);
    std::vector<int> removed = ag.partitions[0].parts[0];
    std::vector<int> Y;
    for (int e = 0; e < 9; ++e)
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) Y.push_back(e);
    packing::PartialPacking restricted = packing::restrict_packing(ag, Y);
    CHECK(restricted.ground_size == 6);
    CHECK(restricted.partitions[0].parts.size() == 2); // surviving lines of class 0
    for (size_t i = 1; i < 4; ++i) {
        CHECK(restricted.partitions[i].parts.size() == 3);
        for (const auto& part : restricted.partitions[i].parts) CHECK(part.size() == 2);
    }
    CHECK(restricted.order() <= ag.order());
    revalidate(restricted);

    CHECK(kind_of([&] { packing::restrict_packing(grid, {0, 1, 2}); }) ==
          ErrorKind::SingletonTrace);

    // restricting twice equals restricting once to the smaller set
    std::vector<int> Y2 = {Y[0], Y[1], Y[2], Y[3]}; // may fail; pick a working subset below
    packing::PartialPacking direct = packing::restrict_packing(ag, {3, 4, 5, 6, 7, 8});
    // map {3,...,8} into restricted's index space via positions in Y
    // (here Y == {3,...,8} already when the removed line is {0,1,2})
    if (removed == std::vector<int>{0, 1, 2}) {
        packing::PartialPacking second = packing::restrict_packing(restricted, {0, 1, 2, 3, 4, 5});
        CHECK(second.order() == direct.order());
    }
    (void)Y2;
}

TEST_CASE("general length packing") {
    packing::GeneralLengthPacking g83 = packing::general_length_packing(8, 3);
    CHECK(g83.q == 3);
    CHECK(g83.N == 2);
    CHECK(g83.packing.ground_size == 8);
    CHECK(g83.packing.code_length() == 14); // 8 + 2*3
    revalidate(g83.packing);

    // s = q^N exactly reduces to the transversal affine packing
    packing::GeneralLengthPacking g93 = packing::general_length_packing(9, 3);
    CHECK(g93.q == 3);
    CHECK(g93.packing.ground_size == 9);
    CHECK(g93.packing.order() == 6);

    // regression fixture for the scan outcome
    packing::GeneralLengthPacking g104 = packing::general_length_packing(10, 4);
    CHECK(g104.q == 4);
    CHECK(g104.N == 2);
    CHECK(g104.packing.code_length() == 22); // 10 + 3*4
    revalidate(g104.packing);

    CHECK(kind_of([] { packing::general_length_packing(5, 30); }) ==
          ErrorKind::NoParameterFound);
}

TEST_CASE("subpacking") {
    packing::PartialPacking p36 = packing::direct_product_packing({3, 6}, 2);
    packing::PartialPacking identity = packing::subpacking(p36, 3);
    CHECK(identity.order() == p36.order());
    packing::PartialPacking first = packing::subpacking(p36, 2);
    CHECK(first.partitions.size() == 1);
    CHECK(first.partitions[0].parts.size() == 6);
    for (const auto& part : first.partitions[0].parts) CHECK(part.size() == 3);

    packing::PartialPacking proj = packing::projective_packing(3, 2, 8);
    packing::PartialPacking h3 = packing::subpacking(proj, 3);
    CHECK(h3.partitions.size() == 2);
    CHECK(h3.order() == 10);
    revalidate(h3);

    CHECK(kind_of([&] { packing::subpacking(p36, 4); }) == ErrorKind::HOutOfRange);
    CHECK(kind_of([&] { packing::subpacking(p36, 1); }) == ErrorKind::HOutOfRange);
}

TEST_CASE("packing text format round-trips") {
    for (packing::PartialPacking p :
         {packing::direct_product_packing({3, 6}, 2), packing::affine_packing(2, 3, 5),
          packing::conic_pencil_packing(5, 3)}) {
        std::string text = packing::export_packing(p);
        packing::PartialPacking back = packing::import_packing(text);
        CHECK(back.ground_size == p.ground_size);
        CHECK(back.order() == p.order());
        CHECK(packing::export_packing(back) == text);
    }
    CHECK(kind_of([] { packing::import_packing("junk"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { packing::import_packing("4 3 4\n0: 0 1\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("order identity r = (k-1) s/z for homogeneous packings") {
    for (const packing::PartialPacking& p :
         {packing::affine_packing(2, 3, 5), packing::affine_packing(2, 4, 4),
          packing::unital_pencil_packing(2, 4), packing::affine_slab_packing(2, 4, 2, 5)}) {
        REQUIRE(p.homogeneous());
        int z = static_cast<int>(p.partitions[0].parts[0].size());
        CHECK(p.order() * z == (p.k() - 1) * p.ground_size);
    }
}
