#include "pir/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pir::geom {

namespace {

constexpr long long kLineGuard = 1'000'000;

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

long long pg_point_count(int N, long long q) {
    return (ipow(q, N + 1) - 1) / (q - 1);
}

long long pg_line_count(int N, long long q) {
    if (N < 1) return 0;
    return (ipow(q, N + 1) - 1) / (q - 1) * ((ipow(q, N) - 1) / (q - 1)) / (q + 1);
}

ProjectiveSpace ProjectiveSpace::make(int N, long long q) {
    if (N < 1) fail(ErrorKind::InvalidParameter, "projective dimension must be >= 1");
    ProjectiveSpace ps;
    ps.N_ = N;
    ps.field_ = gf::Field::make(q);
    long long count = pg_point_count(N, q);
    if (count > kLineGuard)
        fail(ErrorKind::ResourceGuard, "PG(" + std::to_string(N) + "," + std::to_string(q) +
                                           ") exceeds the point guard");
    // Normalized vectors in lexicographic order: leading 1 in position lead,
    // zeros before it, free suffix counted up lexicographically.
    const int qi = ps.field_.q();
    for (int lead = N; lead >= 0; --lead) {
        int free = N - lead;
        long long total = ipow(qi, free);
        for (long long t = 0; t < total; ++t) {
            std::vector<int> v(N + 1, 0);
            v[lead] = 1;
            long long rest = t;
            for (int i = N; i > lead; --i) {
                v[i] = static_cast<int>(rest % qi);
                rest /= qi;
            }
            ps.points_.push_back(std::move(v));
        }
    }
    return ps;
}

std::vector<int> ProjectiveSpace::normalized(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != N_ + 1)
        fail(ErrorKind::InvalidParameter, "coordinate length mismatch");
    int lead = -1;
    for (int i = 0; i <= N_; ++i) {
        if (coords[i] != 0) {
            lead = i;
            break;
        }
    }
    if (lead < 0) fail(ErrorKind::InvalidParameter, "zero vector is not a projective point");
    std::vector<int> v(coords);
    int scale = field_.inv(v[lead]);
    for (int& c : v) c = field_.mul(c, scale);
    return v;
}

int ProjectiveSpace::point_index(const std::vector<int>& coords) const {
    std::vector<int> v = normalized(coords);
    // Same ordering the constructor used: later lead position sorts first.
    int lead = 0;
    while (v[lead] == 0) ++lead;
    const int qi = field_.q();
    long long offset = 0;
    for (int l = N_; l > lead; --l) offset += ipow(qi, N_ - l);
    long long t = 0;
    for (int i = lead + 1; i <= N_; ++i) t = t * qi + v[i];
    return static_cast<int>(offset + t);
}

std::vector<int> ProjectiveSpace::line_through(int a, int b) const {
    if (a == b) fail(ErrorKind::InvalidParameter, "line needs two distinct points");
    const auto& pa = points_[a];
    const auto& pb = points_[b];
    std::vector<int> result;
    result.push_back(a);
    // a + t*b for all t, plus b itself
    for (int t = 0; t < field_.q(); ++t) {
        std::vector<int> v(N_ + 1);
        for (int i = 0; i <= N_; ++i) v[i] = field_.add(pa[i], field_.mul(t, pb[i]));
        if (t == 0) continue;
        result.push_back(point_index(v));
    }
    result.push_back(b);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

const std::vector<Line>& ProjectiveSpace::lines() const {
    if (lines_built_) return lines_;
    long long expected = pg_line_count(N_, field_.q());
    if (expected > kLineGuard)
        fail(ErrorKind::ResourceGuard, "line count " + std::to_string(expected) +
                                           " exceeds the resource guard");
    const int n = point_count();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            std::vector<int> pts = line_through(a, b);
            // emit each line once: when (a,b) are its two least points
            if (pts[0] == a && pts[1] == b) lines_.push_back(Line{std::move(pts), -1});
        }
    }
    if (static_cast<long long>(lines_.size()) != expected)
        fail(ErrorKind::ConstructionFailed, "line enumeration does not match the closed form");
    lines_built_ = true;
    return lines_;
}

AffineSpace AffineSpace::make(int N, long long q) {
    if (N < 1) fail(ErrorKind::InvalidParameter, "affine dimension must be >= 1");
    AffineSpace as;
    as.N_ = N;
    as.field_ = gf::Field::make(q);
    long long count = ipow(q, N);
    if (count > kLineGuard) fail(ErrorKind::ResourceGuard, "AG point count exceeds guard");
    const int qi = as.field_.q();
    for (long long t = 0; t < count; ++t) {
        std::vector<int> v(N, 0);
        long long rest = t;
        for (int i = N - 1; i >= 0; --i) {
            v[i] = static_cast<int>(rest % qi);
            rest /= qi;
        }
        as.points_.push_back(std::move(v));
    }
    return as;
}

int AffineSpace::point_index(const std::vector<int>& coords) const {
    long long t = 0;
    for (int i = 0; i < N_; ++i) t = t * field_.q() + coords[i];
    return static_cast<int>(t);
}

std::vector<Line> AffineSpace::lines_with_direction(const std::vector<int>& dir,
                                                    int class_id) const {
    std::vector<Line> lines;
    std::vector<char> seen(points_.size(), 0);
    for (size_t start = 0; start < points_.size(); ++start) {
        if (seen[start]) continue;
        Line line;
        line.direction_id = class_id;
        for (int t = 0; t < field_.q(); ++t) {
            std::vector<int> v(N_);
            for (int i = 0; i < N_; ++i)
                v[i] = field_.add(points_[start][i], field_.mul(t, dir[i]));
            int idx = point_index(v);
            seen[idx] = 1;
            line.points.push_back(idx);
        }
        std::sort(line.points.begin(), line.points.end());
        lines.push_back(std::move(line));
    }
    return lines;
}

std::vector<std::vector<Line>> AffineSpace::parallel_classes() const {
    if (N_ < 2) fail(ErrorKind::InvalidParameter, "parallel classes need N >= 2");
    ProjectiveSpace dirs = ProjectiveSpace::make(N_ - 1, field_.q());
    std::vector<std::vector<Line>> classes;
    for (int d = 0; d < dirs.point_count(); ++d)
        classes.push_back(lines_with_direction(dirs.point(d), d));
    return classes;
}

std::vector<std::vector<int>> AffineSpace::transversal_directions() const {
    std::vector<std::vector<int>> dirs;
    long long total = ipow(field_.q(), N_ - 1);
    for (long long t = 0; t < total; ++t) {
        std::vector<int> v(N_, 0);
        long long rest = t;
        for (int i = N_ - 2; i >= 0; --i) {
            v[i] = static_cast<int>(rest % field_.q());
            rest /= field_.q();
        }
        v[N_ - 1] = 1;
        dirs.push_back(std::move(v));
    }
    return dirs;
}

namespace {

// Census of |line ∩ set| over every line of the plane.
std::map<int, int> line_intersection_census(const ProjectiveSpace& plane,
                                            const std::vector<int>& members) {
    std::set<int> in(members.begin(), members.end());
    std::map<int, int> census;
    for (const Line& l : plane.lines()) {
        int hits = 0;
        for (int p : l.points) hits += in.count(p) ? 1 : 0;
        census[hits]++;
    }
    return census;
}

std::vector<int> standard_conic(const ProjectiveSpace& plane) {
    // x1^2 = x0 * x2, parameterized as (1, t, t^2) plus (0,0,1)
    const gf::Field& F = plane.field();
    std::vector<int> pts;
    for (int t = 0; t < F.q(); ++t)
        pts.push_back(plane.point_index({1, t, F.mul(t, t)}));
    pts.push_back(plane.point_index({0, 0, 1}));
    std::sort(pts.begin(), pts.end());
    return pts;
}

} // namespace

PlanePointSet denniston_arc(int n, int nprime) {
    if (n < 1 || nprime < 1 || nprime > n)
        fail(ErrorKind::InvalidParameter, "need 1 <= n' <= n");
    const int q = static_cast<int>(ipow(2, n));
    const int z = static_cast<int>(ipow(2, nprime));
    ProjectiveSpace plane = ProjectiveSpace::make(2, q);
    const gf::Field& F = plane.field();
    std::vector<int> members;
    if (nprime == 1) {
        // hyperoval: the standard conic plus its nucleus (0,1,0)
        members = standard_conic(plane);
        members.push_back(plane.point_index({0, 1, 0}));
        std::sort(members.begin(), members.end());
    } else {
        // Pencil construction: fix h with t^2 + h t + 1 irreducible over
        // GF(q), i.e. without roots. The arc is the set of affine points
        // (1, x, y) whose quadratic form value x^2 + h x y + y^2 lies in the
        // additive subgroup {0, ..., z-1} (an F_2-subspace in the canonical
        // element encoding).
        int h = -1;
        for (int cand = 1; cand < F.q(); ++cand) {
            bool has_root = false;
            for (int t = 0; t < F.q(); ++t) {
                int val = F.add(F.add(F.mul(t, t), F.mul(cand, t)), 1);
                if (val == 0) {
                    has_root = true;
                    break;
                }
            }
            if (!has_root) {
                h = cand;
                break;
            }
        }
        if (h < 0) fail(ErrorKind::ConstructionFailed, "no anisotropic quadratic form found");
        for (int x = 0; x < F.q(); ++x) {
            for (int y = 0; y < F.q(); ++y) {
                int val = F.add(F.add(F.mul(x, x), F.mul(h, F.mul(x, y))), F.mul(y, y));
                if (val < z) members.push_back(plane.point_index({1, x, y}));
            }
        }
        std::sort(members.begin(), members.end());
    }
    const long long expected = static_cast<long long>(z) * q - q + z;
    if (static_cast<long long>(members.size()) != expected)
        fail(ErrorKind::ConstructionFailed, "arc size mismatch");
    // Mandatory gate: every line meets the arc in 0 or z points.
    for (auto [hits, cnt] : line_intersection_census(plane, members))
        if (hits != 0 && hits != z)
            fail(ErrorKind::ConstructionFailed,
                 "line meets arc in " + std::to_string(hits) + " points");
    return PlanePointSet{std::move(plane), std::move(members)};
}

PlanePointSet hermitian_unital(int q) {
    long long q2 = static_cast<long long>(q) * q;
    ProjectiveSpace plane = ProjectiveSpace::make(2, q2);
    const gf::Field& F = plane.field();
    std::vector<int> members;
    for (int i = 0; i < plane.point_count(); ++i) {
        const auto& pt = plane.point(i);
        int sum = 0;
        for (int c : pt) sum = F.add(sum, F.pow(c, q + 1));
        if (sum == 0) members.push_back(i);
    }
    const long long expected = static_cast<long long>(q) * q * q + 1;
    if (static_cast<long long>(members.size()) != expected)
        fail(ErrorKind::ConstructionFailed, "unital size mismatch");
    return PlanePointSet{std::move(plane), std::move(members)};
}

ConicSplit conic_interior(int q) {
    long long p = 0;
    if (!gf::is_prime_power(q, &p) || p == 2)
        fail(ErrorKind::QEven, "conic interior needs odd q");
    ConicSplit split{ProjectiveSpace::make(2, q), {}, {}, {}};
    split.conic = standard_conic(split.plane);
    std::set<int> conic_set(split.conic.begin(), split.conic.end());
    // tangent lines = lines meeting the conic in exactly one point
    std::set<int> on_tangent;
    for (const Line& l : split.plane.lines()) {
        int hits = 0;
        for (int pt : l.points) hits += conic_set.count(pt) ? 1 : 0;
        if (hits == 1)
            for (int pt : l.points) on_tangent.insert(pt);
    }
    for (int i = 0; i < split.plane.point_count(); ++i) {
        if (conic_set.count(i)) continue;
        if (on_tangent.count(i))
            split.exterior.push_back(i);
        else
            split.interior.push_back(i);
    }
    const long long qi = q;
    if (static_cast<long long>(split.interior.size()) != qi * (qi - 1) / 2 ||
        static_cast<long long>(split.exterior.size()) != qi * (qi + 1) / 2)
        fail(ErrorKind::ConstructionFailed, "interior/exterior split has wrong sizes");
    return split;
}

std::string export_point_set(const std::vector<std::vector<int>>& coords) {
    std::ostringstream out;
    out << coords.size() << "\n";
    for (const auto& pt : coords) {
        for (size_t i = 0; i < pt.size(); ++i) out << (i ? " " : "") << pt[i];
        out << "\n";
    }
    return out.str();
}

} // namespace pir::geom
