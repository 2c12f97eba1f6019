#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "pir/geometry.hpp"

using pir::Error;
using pir::ErrorKind;
namespace geom = pir::geom;
namespace gf = pir::gf;

namespace {

// Independent collinearity oracle: R lies on the line through P and Q iff
// the 3 x (N+1) coordinate matrix has rank <= 2 (Gaussian elimination).
int rank_over_gf(std::vector<std::vector<int>> rows, const gf::Field& F) {
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c] != 0) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        int inv = F.inv(rows[rank][c]);
        for (size_t j = 0; j < cols; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
            int factor = rows[r][c];
            for (size_t j = 0; j < cols; ++j)
                rows[r][j] = F.sub(rows[r][j], F.mul(factor, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

std::set<std::vector<int>> brute_force_lines(const geom::ProjectiveSpace& ps) {
    std::set<std::vector<int>> result;
    int n = ps.point_count();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            std::vector<int> line;
            for (int r = 0; r < n; ++r) {
                if (rank_over_gf({ps.point(a), ps.point(b), ps.point(r)}, ps.field()) <= 2)
                    line.push_back(r);
            }
            result.insert(line);
        }
    }
    return result;
}

} // namespace

TEST_CASE("pg point counts") {
    CHECK(geom::ProjectiveSpace::make(3, 2).point_count() == 15);
    CHECK(geom::ProjectiveSpace::make(1, 2).point_count() == 3);
    CHECK(geom::ProjectiveSpace::make(2, 4).point_count() == 21); // (4^3-1)/3
    CHECK(geom::pg_point_count(2, 4) == 21);
    CHECK_THROWS_AS(geom::ProjectiveSpace::make(2, 6), Error);
}

TEST_CASE("pg points are normalized, distinct, in lex order") {
    for (auto [N, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        geom::ProjectiveSpace ps = geom::ProjectiveSpace::make(N, q);
        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> pts = ps.points();
        for (int i = 0; i < ps.point_count(); ++i) {
            const auto& pt = ps.point(i);
            CHECK(ps.normalized(pt) == pt);
            CHECK(ps.point_index(pt) == i);
            seen.insert(pt);
        }
        CHECK(static_cast<long long>(seen.size()) == geom::pg_point_count(N, q));
        CHECK(std::is_sorted(pts.begin(), pts.end()));
    }
}

TEST_CASE("pg lines match the closed form and the rank oracle") {
    // (3,2): 35 lines; (2,2): Fano with 7 lines of 3; (2,3): 13 lines of 4
    geom::ProjectiveSpace pg32 = geom::ProjectiveSpace::make(3, 2);
    CHECK(pg32.lines().size() == 35);
    for (const auto& l : pg32.lines()) CHECK(l.points.size() == 3);

    geom::ProjectiveSpace fano = geom::ProjectiveSpace::make(2, 2);
    CHECK(fano.lines().size() == 7);
    std::set<std::vector<int>> oracle = brute_force_lines(fano);
    std::set<std::vector<int>> got;
    for (const auto& l : fano.lines()) got.insert(l.points);
    CHECK(got == oracle);

    geom::ProjectiveSpace pg23 = geom::ProjectiveSpace::make(2, 3);
    CHECK(pg23.lines().size() == 13);
    for (const auto& l : pg23.lines()) CHECK(l.points.size() == 4);
    CHECK(brute_force_lines(pg23).size() == 13);
}

TEST_CASE("two distinct points lie on exactly one common line") {
    for (auto [N, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        geom::ProjectiveSpace ps = geom::ProjectiveSpace::make(N, q);
        int n = ps.point_count();
        std::vector<std::vector<int>> count(n, std::vector<int>(n, 0));
        for (const auto& l : ps.lines())
            for (size_t i = 0; i < l.points.size(); ++i)
                for (size_t j = i + 1; j < l.points.size(); ++j)
                    count[l.points[i]][l.points[j]]++;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) CHECK(count[a][b] == 1);
    }
}

TEST_CASE("affine parallel classes partition the points") {
    struct Case {
        int N, q, classes, lines_per_class;
    };
    for (auto c : {Case{2, 3, 4, 3}, Case{2, 2, 3, 2}, Case{2, 4, 5, 4}}) {
        geom::AffineSpace as = geom::AffineSpace::make(c.N, c.q);
        auto classes = as.parallel_classes();
        REQUIRE(static_cast<int>(classes.size()) == c.classes);
        for (const auto& cls : classes) {
            CHECK(static_cast<int>(cls.size()) == c.lines_per_class);
            std::set<int> covered;
            for (const auto& line : cls) {
                CHECK(static_cast<int>(line.points.size()) == c.q);
                covered.insert(line.points.begin(), line.points.end());
            }
            CHECK(static_cast<int>(covered.size()) == as.point_count());
        }
        // lines from distinct classes meet in at most one point
        for (size_t i = 0; i < classes.size(); ++i)
            for (size_t j = i + 1; j < classes.size(); ++j)
                for (const auto& la : classes[i])
                    for (const auto& lb : classes[j]) {
                        std::vector<int> common;
                        std::set_intersection(la.points.begin(), la.points.end(),
                                              lb.points.begin(), lb.points.end(),
                                              std::back_inserter(common));
                        CHECK(common.size() <= 1);
                    }
    }
}

TEST_CASE("denniston arcs") {
    // (2,1): hyperoval in PG(2,4), 6 points, lines meet in 0 or 2
    geom::PlanePointSet h = geom::denniston_arc(2, 1);
    CHECK(h.members.size() == 6);
    // (3,1): 10 points in PG(2,8); (2,2): the full affine plane, 16 points
    CHECK(geom::denniston_arc(3, 1).members.size() == 10);
    CHECK(geom::denniston_arc(2, 2).members.size() == 16);
    CHECK(geom::denniston_arc(3, 2).members.size() == 28);

    // independent line census for the hyperoval
    std::set<int> in(h.members.begin(), h.members.end());
    for (const auto& l : h.plane.lines()) {
        int hits = 0;
        for (int p : l.points) hits += in.count(p) ? 1 : 0;
        CHECK((hits == 0 || hits == 2));
    }
    CHECK_THROWS_AS(geom::denniston_arc(2, 3), Error);
}

TEST_CASE("hermitian unitals") {
    geom::PlanePointSet u2 = geom::hermitian_unital(2);
    CHECK(u2.members.size() == 9);
    geom::PlanePointSet u3 = geom::hermitian_unital(3);
    CHECK(u3.members.size() == 28);
    // every line meets the unital in 1 or q+1 points
    for (const geom::PlanePointSet* u : {&u2, &u3}) {
        int q = u == &u2 ? 2 : 3;
        std::set<int> in(u->members.begin(), u->members.end());
        for (const auto& l : u->plane.lines()) {
            int hits = 0;
            for (int p : l.points) hits += in.count(p) ? 1 : 0;
            CHECK((hits == 1 || hits == q + 1));
        }
    }
}

TEST_CASE("conic interior points") {
    CHECK(geom::conic_interior(5).interior.size() == 10);
    CHECK(geom::conic_interior(7).interior.size() == 21);
    CHECK(geom::conic_interior(3).interior.size() == 3);
    CHECK_THROWS_AS(geom::conic_interior(4), Error);
    try {
        geom::conic_interior(8);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::QEven);
    }

    // brute-force tangent census for q=3: interior points lie on no tangent
    geom::ConicSplit split = geom::conic_interior(3);
    std::set<int> conic(split.conic.begin(), split.conic.end());
    std::set<int> interior(split.interior.begin(), split.interior.end());
    for (const auto& l : split.plane.lines()) {
        int hits = 0;
        for (int p : l.points) hits += conic.count(p) ? 1 : 0;
        if (hits == 1)
            for (int p : l.points) CHECK(!interior.count(p));
    }

    // a secant line through an external point carries (q-1)/2 internal points
    // (the evidently intended reading; checked by brute force for q=5)
    geom::ConicSplit s5 = geom::conic_interior(5);
    std::set<int> conic5(s5.conic.begin(), s5.conic.end());
    std::set<int> interior5(s5.interior.begin(), s5.interior.end());
    for (const auto& l : s5.plane.lines()) {
        int hits = 0, internal = 0;
        for (int p : l.points) {
            hits += conic5.count(p) ? 1 : 0;
            internal += interior5.count(p) ? 1 : 0;
        }
        if (hits == 2) CHECK(internal == 2);  // (5-1)/2
        if (hits == 0) CHECK(internal == 3);  // (5+1)/2
    }
}

TEST_CASE("point set export format") {
    geom::AffineSpace as = geom::AffineSpace::make(2, 2);
    std::string text = geom::export_point_set(as.points());
    CHECK(text == "4\n0 0\n0 1\n1 0\n1 1\n");
}
