#include "pir/packing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pir/geometry.hpp"

namespace pir::packing {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::string part_to_string(const std::vector<int>& part) {
    std::string s = "{";
    for (size_t i = 0; i < part.size(); ++i) s += (i ? "," : "") + std::to_string(part[i]);
    return s + "}";
}

} // namespace

int PartialPacking::order() const {
    int r = 0;
    for (const auto& p : partitions) r += static_cast<int>(p.parts.size());
    return r;
}

bool PartialPacking::homogeneous() const {
    int size = -1;
    for (const auto& p : partitions)
        for (const auto& part : p.parts) {
            if (size < 0) size = static_cast<int>(part.size());
            if (static_cast<int>(part.size()) != size) return false;
        }
    return true;
}

bool PartialPacking::homogeneous_per_partition() const {
    for (const auto& p : partitions) {
        int size = -1;
        for (const auto& part : p.parts) {
            if (size < 0) size = static_cast<int>(part.size());
            if (static_cast<int>(part.size()) != size) return false;
        }
    }
    return true;
}

PartialPacking validate_packing(int ground_size,
                                const std::vector<std::vector<std::vector<int>>>& raw_partitions) {
    if (ground_size < 2) fail(ErrorKind::InvalidParameter, "ground set needs >= 2 elements");
    PartialPacking packing;
    packing.ground_size = ground_size;
    for (size_t pi = 0; pi < raw_partitions.size(); ++pi) {
        Partition partition;
        partition.ground_size = ground_size;
        std::vector<int> coverage(ground_size, 0);
        for (const auto& raw_part : raw_partitions[pi]) {
            std::vector<int> part = raw_part;
            std::sort(part.begin(), part.end());
            if (part.size() < 2)
                fail(ErrorKind::PartSizeOne, "partition " + std::to_string(pi) + " has part " +
                                                 part_to_string(part) + " of size < 2");
            for (size_t i = 0; i < part.size(); ++i) {
                if (part[i] < 0 || part[i] >= ground_size)
                    fail(ErrorKind::NotAPartition,
                         "partition " + std::to_string(pi) + ": element out of range");
                if (i > 0 && part[i] == part[i - 1])
                    fail(ErrorKind::NotAPartition,
                         "partition " + std::to_string(pi) + ": repeated element " +
                             std::to_string(part[i]));
                coverage[part[i]]++;
            }
            partition.parts.push_back(std::move(part));
        }
        for (int e = 0; e < ground_size; ++e)
            if (coverage[e] != 1)
                fail(ErrorKind::NotAPartition, "partition " + std::to_string(pi) + ": element " +
                                                   std::to_string(e) + " covered " +
                                                   std::to_string(coverage[e]) + " times");
        packing.partitions.push_back(std::move(partition));
    }
    // Definition axiom (ii): parts from distinct partitions share at most one
    // element.
    for (size_t a = 0; a < packing.partitions.size(); ++a) {
        for (size_t b = a + 1; b < packing.partitions.size(); ++b) {
            for (const auto& pa : packing.partitions[a].parts) {
                for (const auto& pb : packing.partitions[b].parts) {
                    std::vector<int> common;
                    std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                                          std::back_inserter(common));
                    if (common.size() > 1)
                        fail(ErrorKind::CrossIntersectionTooLarge,
                             "parts " + part_to_string(pa) + " (partition " + std::to_string(a) +
                                 ") and " + part_to_string(pb) + " (partition " +
                                 std::to_string(b) + ") share " + part_to_string(common));
                }
            }
        }
    }
    return packing;
}

PartialPacking direct_product_packing(const std::vector<int>& factors, int w) {
    if (factors.empty()) fail(ErrorKind::InvalidParameter, "need at least one factor");
    if (w < 1 || w > static_cast<int>(factors.size()))
        fail(ErrorKind::InvalidParameter, "w out of range");
    long long s = 1;
    for (int a : factors) {
        if (a < 2) fail(ErrorKind::FactorTooSmall, "factor " + std::to_string(a) + " < 2");
        s *= a;
        if (s > 1'000'000) fail(ErrorKind::ResourceGuard, "product ground set too large");
    }
    std::vector<long long> stride(factors.size());
    long long acc = 1;
    for (size_t i = 0; i < factors.size(); ++i) {
        stride[i] = acc;
        acc *= factors[i];
    }
    std::vector<std::vector<std::vector<int>>> raw(w);
    for (int i = 0; i < w; ++i) {
        for (long long base = 0; base < s; ++base) {
            long long coord = (base / stride[i]) % factors[i];
            if (coord != 0) continue; // one representative per coset
            std::vector<int> part;
            for (int t = 0; t < factors[i]; ++t)
                part.push_back(static_cast<int>(base + t * stride[i]));
            raw[i].push_back(std::move(part));
        }
    }
    return validate_packing(static_cast<int>(s), raw);
}

namespace {

void factorization_search(long long remaining, int slots, long long min_factor, long long s,
                          std::vector<int>& current, long long& best_order,
                          std::vector<int>& best) {
    if (slots == 0) {
        if (remaining != 1) return;
        long long order = 0;
        for (int a : current) order += s / a;
        if (best.empty() || order < best_order) {
            best_order = order;
            best = current;
        }
        return;
    }
    auto fits = [&](long long a) { // a^slots <= remaining, overflow-safe
        long long acc = 1;
        for (int i = 0; i < slots; ++i) {
            if (acc > remaining / a) return false;
            acc *= a;
        }
        return acc <= remaining;
    };
    for (long long a = min_factor; fits(a); ++a) {
        if (remaining % a != 0) continue;
        current.push_back(static_cast<int>(a));
        factorization_search(remaining / a, slots - 1, a, s, current, best_order, best);
        current.pop_back();
    }
}

} // namespace

std::pair<std::vector<int>, long long> best_factorization(long long s, int k) {
    if (s < 4 || k < 3) fail(ErrorKind::InvalidParameter, "need s >= 4 and k >= 3");
    std::vector<int> current, best;
    long long best_order = 0;
    factorization_search(s, k - 1, 2, s, current, best_order, best);
    if (best.empty())
        fail(ErrorKind::NoFactorization, std::to_string(s) + " has no factorization into " +
                                             std::to_string(k - 1) + " factors >= 2");
    return {best, s + best_order};
}

PartialPacking affine_packing(int N, int q, int k) {
    if (N < 2) fail(ErrorKind::InvalidParameter, "need N >= 2");
    long long class_count = geom::pg_point_count(N - 1, q);
    if (k < 3 || k > 1 + class_count)
        fail(ErrorKind::KTooLarge, "need 3 <= k <= " + std::to_string(1 + class_count));
    geom::AffineSpace space = geom::AffineSpace::make(N, q);
    auto classes = space.parallel_classes();
    std::vector<std::vector<std::vector<int>>> raw;
    for (int i = 0; i < k - 1; ++i) {
        std::vector<std::vector<int>> parts;
        for (const auto& line : classes[i]) parts.push_back(line.points);
        raw.push_back(std::move(parts));
    }
    return validate_packing(space.point_count(), raw);
}

PartialPacking affine_slab_packing(int N, int q, int h, int k) {
    if (N < 2) fail(ErrorKind::InvalidParameter, "need N >= 2");
    if (h < 2 || h > q) fail(ErrorKind::HOutOfRange, "need 2 <= h <= q");
    long long transversals = ipow(q, N - 1);
    if (k < 3 || k > 1 + transversals)
        fail(ErrorKind::KTooLarge, "need 3 <= k <= " + std::to_string(1 + transversals));
    geom::AffineSpace space = geom::AffineSpace::make(N, q);
    // slab membership and re-indexing (ascending affine index)
    std::vector<int> slab_index(space.point_count(), -1);
    int s = 0;
    for (int i = 0; i < space.point_count(); ++i)
        if (space.points()[i][N - 1] < h) slab_index[i] = s++;
    auto dirs = space.transversal_directions();
    std::vector<std::vector<std::vector<int>>> raw;
    for (int d = 0; d < k - 1; ++d) {
        std::vector<std::vector<int>> parts;
        for (const auto& line : space.lines_with_direction(dirs[d], d)) {
            std::vector<int> trace;
            for (int p : line.points)
                if (slab_index[p] >= 0) trace.push_back(slab_index[p]);
            if (!trace.empty()) {
                std::sort(trace.begin(), trace.end());
                parts.push_back(std::move(trace));
            }
        }
        raw.push_back(std::move(parts));
    }
    return validate_packing(s, raw);
}

namespace {

bool projective_packing_admissible(int N, int q) {
    long long p = 0;
    if (!gf::is_prime_power(q, &p)) return false;
    if (q == 2 && N >= 3 && N % 2 == 1) return true; // N = 2z+1, q = 2
    for (long long m = 4; m - 1 <= N; m *= 2)        // N = 2^(i+1) - 1, i >= 1
        if (m - 1 == N) return true;
    return false;
}

} // namespace

const std::vector<std::vector<std::vector<int>>>& pg32_spread_fixture() {
    // Frozen from the first resolve() run over the PG(3,2) line set; the
    // design module tests rediscover exactly this resolution.
    static const std::vector<std::vector<std::vector<int>>> spreads = {
        {{0, 1, 2}, {3, 7, 11}, {4, 9, 14}, {5, 10, 12}, {6, 8, 13}},
        {{0, 3, 4}, {1, 7, 9}, {2, 12, 13}, {5, 8, 14}, {6, 10, 11}},
        {{0, 5, 6}, {1, 8, 10}, {2, 11, 14}, {3, 9, 13}, {4, 7, 12}},
        {{0, 7, 8}, {1, 11, 13}, {2, 4, 5}, {3, 10, 14}, {6, 9, 12}},
        {{0, 9, 10}, {1, 12, 14}, {2, 3, 6}, {4, 8, 11}, {5, 7, 13}},
        {{0, 11, 12}, {1, 3, 5}, {2, 8, 9}, {4, 10, 13}, {6, 7, 14}},
        {{0, 13, 14}, {1, 4, 6}, {2, 7, 10}, {3, 8, 12}, {5, 9, 11}},
    };
    return spreads;
}

PartialPacking projective_packing(int N, int q, int k) {
    if (!projective_packing_admissible(N, q))
        fail(ErrorKind::ParametersInadmissible,
             "PG(" + std::to_string(N) + "," + std::to_string(q) +
                 ") has no line packing by the classical existence results");
    long long class_count = (ipow(q, N) - 1) / (q - 1);
    if (k < 3 || k > 1 + class_count)
        fail(ErrorKind::KTooLarge, "need 3 <= k <= " + std::to_string(1 + class_count));
    if (!(N == 3 && q == 2))
        fail(ErrorKind::NotConstructedAtDeskScale,
             "only the PG(3,2) packing is constructed explicitly");
    const auto& spreads = pg32_spread_fixture();
    std::vector<std::vector<std::vector<int>>> raw(spreads.begin(), spreads.begin() + (k - 1));
    return validate_packing(15, raw);
}

PartialPacking arc_pencil_packing(int n, int nprime, int k) {
    if (k < 3 || k > ipow(2, n) + 2)
        fail(ErrorKind::KTooLarge, "need 3 <= k <= 2^n + 2");
    geom::PlanePointSet arc = geom::denniston_arc(n, nprime);
    std::set<int> members(arc.members.begin(), arc.members.end());
    std::vector<int> arc_index(arc.plane.point_count(), -1);
    for (size_t i = 0; i < arc.members.size(); ++i) arc_index[arc.members[i]] = static_cast<int>(i);
    const auto& lines = arc.plane.lines();
    // lowest-index line disjoint from the arc
    int pencil_line = -1;
    for (size_t li = 0; li < lines.size(); ++li) {
        bool hits = false;
        for (int p : lines[li].points)
            if (members.count(p)) {
                hits = true;
                break;
            }
        if (!hits) {
            pencil_line = static_cast<int>(li);
            break;
        }
    }
    if (pencil_line < 0) fail(ErrorKind::NoValidPencilLine, "no external line to the arc");
    const auto& carriers = lines[pencil_line].points; // all off the arc
    if (k - 1 > static_cast<int>(carriers.size()))
        fail(ErrorKind::KTooLarge, "pencil line carries too few points");
    std::vector<std::vector<std::vector<int>>> raw;
    for (int ci = 0; ci < k - 1; ++ci) {
        int P = carriers[ci];
        std::vector<std::vector<int>> parts;
        for (size_t li = 0; li < lines.size(); ++li) {
            if (static_cast<int>(li) == pencil_line) continue;
            const auto& lp = lines[li].points;
            if (!std::binary_search(lp.begin(), lp.end(), P)) continue;
            std::vector<int> trace;
            for (int p : lp)
                if (arc_index[p] >= 0) trace.push_back(arc_index[p]);
            if (!trace.empty()) parts.push_back(std::move(trace));
        }
        raw.push_back(std::move(parts));
    }
    return validate_packing(static_cast<int>(arc.members.size()), raw);
}

PartialPacking unital_pencil_packing(int q, int k) {
    if (k < 3 || k > static_cast<long long>(q) * q + 1)
        fail(ErrorKind::KTooLarge, "need 3 <= k <= q^2 + 1");
    geom::PlanePointSet unital = geom::hermitian_unital(q);
    std::set<int> members(unital.members.begin(), unital.members.end());
    std::vector<int> u_index(unital.plane.point_count(), -1);
    for (size_t i = 0; i < unital.members.size(); ++i)
        u_index[unital.members[i]] = static_cast<int>(i);
    const auto& lines = unital.plane.lines();
    // lowest-index tangent line
    int tangent = -1, tangency = -1;
    for (size_t li = 0; li < lines.size() && tangent < 0; ++li) {
        int hits = 0, foot = -1;
        for (int p : lines[li].points)
            if (members.count(p)) {
                ++hits;
                foot = p;
            }
        if (hits == 1) {
            tangent = static_cast<int>(li);
            tangency = foot;
        }
    }
    if (tangent < 0) fail(ErrorKind::ConstructionFailed, "unital has no tangent line");
    std::vector<int> carriers;
    for (int p : lines[tangent].points)
        if (p != tangency) carriers.push_back(p);
    if (k - 1 > static_cast<int>(carriers.size()))
        fail(ErrorKind::KTooLarge, "tangent line carries too few points");
    std::vector<std::vector<std::vector<int>>> raw;
    for (int ci = 0; ci < k - 1; ++ci) {
        int R = carriers[ci];
        std::vector<std::vector<int>> parts;
        std::vector<char> in_secant(unital.members.size(), 0);
        for (size_t li = 0; li < lines.size(); ++li) {
            const auto& lp = lines[li].points;
            if (!std::binary_search(lp.begin(), lp.end(), R)) continue;
            std::vector<int> trace;
            for (int p : lp)
                if (u_index[p] >= 0) trace.push_back(u_index[p]);
            if (static_cast<int>(trace.size()) == q + 1) {
                for (int e : trace) in_secant[e] = 1;
                parts.push_back(std::move(trace));
            }
        }
        // the tangency feet of the q+1 tangents through R form the last part
        std::vector<int> feet;
        for (size_t e = 0; e < unital.members.size(); ++e)
            if (!in_secant[e]) feet.push_back(static_cast<int>(e));
        if (static_cast<int>(feet.size()) != q + 1)
            fail(ErrorKind::ConstructionFailed, "tangency feet do not form a (q+1)-set");
        parts.push_back(std::move(feet));
        raw.push_back(std::move(parts));
    }
    return validate_packing(static_cast<int>(unital.members.size()), raw);
}

PartialPacking conic_pencil_packing(int q, int k) {
    long long p = 0;
    if (!gf::is_prime_power(q, &p) || p == 2 || q <= 3)
        fail(ErrorKind::QEven, "need an odd prime power q > 3");
    if (k < 3 || k > q + 1) fail(ErrorKind::KTooLarge, "need 3 <= k <= q + 1");
    geom::ConicSplit split = geom::conic_interior(q);
    std::set<int> conic(split.conic.begin(), split.conic.end());
    std::vector<int> int_index(split.plane.point_count(), -1);
    for (size_t i = 0; i < split.interior.size(); ++i)
        int_index[split.interior[i]] = static_cast<int>(i);
    const auto& lines = split.plane.lines();
    auto conic_hits = [&](const geom::Line& l) {
        int hits = 0;
        for (int pt : l.points) hits += conic.count(pt) ? 1 : 0;
        return hits;
    };
    int tangent = -1, tangency = -1;
    for (size_t li = 0; li < lines.size() && tangent < 0; ++li) {
        if (conic_hits(lines[li]) == 1) {
            tangent = static_cast<int>(li);
            for (int pt : lines[li].points)
                if (conic.count(pt)) tangency = pt;
        }
    }
    if (tangent < 0) fail(ErrorKind::ConstructionFailed, "conic has no tangent line");
    std::vector<int> carriers; // external points on the tangent line
    for (int pt : lines[tangent].points)
        if (pt != tangency) carriers.push_back(pt);
    if (k - 1 > static_cast<int>(carriers.size()))
        fail(ErrorKind::KTooLarge, "tangent line carries too few external points");
    std::vector<std::vector<std::vector<int>>> raw;
    for (int ci = 0; ci < k - 1; ++ci) {
        int P = carriers[ci];
        std::vector<std::vector<int>> parts;
        for (size_t li = 0; li < lines.size(); ++li) {
            const auto& lp = lines[li].points;
            if (!std::binary_search(lp.begin(), lp.end(), P)) continue;
            if (conic_hits(lines[li]) == 1) continue; // tangents carry no interior points
            std::vector<int> trace;
            for (int pt : lp)
                if (int_index[pt] >= 0) trace.push_back(int_index[pt]);
            if (!trace.empty()) parts.push_back(std::move(trace));
        }
        raw.push_back(std::move(parts));
    }
    return validate_packing(static_cast<int>(split.interior.size()), raw);
}

PartialPacking restrict_packing(const PartialPacking& packing, const std::vector<int>& Y) {
    if (Y.size() < 2) fail(ErrorKind::InvalidParameter, "restriction needs |Y| >= 2");
    std::vector<int> sortedY = Y;
    std::sort(sortedY.begin(), sortedY.end());
    sortedY.erase(std::unique(sortedY.begin(), sortedY.end()), sortedY.end());
    std::vector<int> new_index(packing.ground_size, -1);
    for (size_t i = 0; i < sortedY.size(); ++i) {
        if (sortedY[i] < 0 || sortedY[i] >= packing.ground_size)
            fail(ErrorKind::InvalidParameter, "Y element out of range");
        new_index[sortedY[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<std::vector<int>>> raw;
    for (size_t pi = 0; pi < packing.partitions.size(); ++pi) {
        std::vector<std::vector<int>> parts;
        for (const auto& part : packing.partitions[pi].parts) {
            std::vector<int> trace;
            for (int e : part)
                if (new_index[e] >= 0) trace.push_back(new_index[e]);
            if (trace.size() == 1)
                fail(ErrorKind::SingletonTrace,
                     "partition " + std::to_string(pi) + ", part " + part_to_string(part) +
                         " meets Y only in element " + std::to_string(sortedY[trace[0]]));
            if (!trace.empty()) parts.push_back(std::move(trace));
        }
        raw.push_back(std::move(parts));
    }
    return validate_packing(static_cast<int>(sortedY.size()), raw);
}

GeneralLengthPacking general_length_packing(int s, int k) {
    if (s < 4 || k < 3) fail(ErrorKind::InvalidParameter, "need s >= 4 and k >= 3");
    // Candidates (q, N) with 2 q^(N-1) <= s <= q^N and k <= 1 + q^(N-1),
    // ranked by the redundancy factor q^(N-1) (which fixes the resulting
    // length m = s + (k-1) q^(N-1)), then by q^N and q.
    struct Candidate {
        long long redundancy, size;
        int q, N;
    };
    std::vector<Candidate> candidates;
    for (int q = 2; q <= s; ++q) {
        if (!gf::is_prime_power(q)) continue;
        for (int N = 2;; ++N) {
            long long red = ipow(q, N - 1);
            if (red > s) break;
            long long size = red * q;
            if (2 * red <= s && s <= size && k <= 1 + red)
                candidates.push_back({red, size, q, N});
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.redundancy, a.size, a.q) < std::tie(b.redundancy, b.size, b.q);
    });
    if (candidates.empty())
        fail(ErrorKind::NoParameterFound, "no affine parameters admit s=" + std::to_string(s) +
                                              ", k=" + std::to_string(k));
    const Candidate& c = candidates.front();
    geom::AffineSpace space = geom::AffineSpace::make(c.N, c.q);
    auto dirs = space.transversal_directions();
    std::vector<std::vector<std::vector<int>>> raw;
    for (int d = 0; d < k - 1; ++d) {
        std::vector<std::vector<int>> parts;
        for (const auto& line : space.lines_with_direction(dirs[d], d))
            parts.push_back(line.points);
        raw.push_back(std::move(parts));
    }
    PartialPacking full = validate_packing(space.point_count(), raw);
    // Y: the two hyperplanes with last coordinate 0 or 1, then the
    // lexicographically first leftover points.
    std::vector<int> Y, rest;
    for (int i = 0; i < space.point_count(); ++i) {
        if (space.points()[i][c.N - 1] <= 1)
            Y.push_back(i);
        else
            rest.push_back(i);
    }
    int extra = s - static_cast<int>(Y.size());
    Y.insert(Y.end(), rest.begin(), rest.begin() + extra);
    return GeneralLengthPacking{restrict_packing(full, Y), c.q, c.N};
}

PartialPacking subpacking(const PartialPacking& packing, int h) {
    if (h < 2 || h > packing.k())
        fail(ErrorKind::HOutOfRange, "need 2 <= h <= k");
    PartialPacking sub;
    sub.ground_size = packing.ground_size;
    sub.partitions.assign(packing.partitions.begin(), packing.partitions.begin() + (h - 1));
    return sub;
}

std::string export_packing(const PartialPacking& packing) {
    std::ostringstream out;
    out << packing.ground_size << " " << packing.k() << " " << packing.order() << "\n";
    for (size_t pi = 0; pi < packing.partitions.size(); ++pi)
        for (const auto& part : packing.partitions[pi].parts) {
            out << pi << ":";
            for (int e : part) out << " " << e;
            out << "\n";
        }
    return out.str();
}

PartialPacking import_packing(const std::string& text) {
    std::istringstream in(text);
    int s = 0, k = 0, r = 0;
    if (!(in >> s >> k >> r)) fail(ErrorKind::ParseError, "bad packing header");
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<std::vector<int>>> raw(k - 1);
    int parts_read = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos) fail(ErrorKind::ParseError, "part line without ':'");
        int pi = -1;
        try {
            pi = std::stoi(line.substr(0, colon));
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "bad partition index");
        }
        if (pi < 0 || pi >= k - 1) fail(ErrorKind::ParseError, "partition index out of range");
        std::istringstream rest(line.substr(colon + 1));
        std::vector<int> part;
        int e;
        while (rest >> e) part.push_back(e);
        raw[pi].push_back(std::move(part));
        ++parts_read;
    }
    if (parts_read != r) fail(ErrorKind::ParseError, "part count does not match header");
    return validate_packing(s, raw);
}

} // namespace pir::packing
