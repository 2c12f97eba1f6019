#include "pir/design.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "pir/gf.hpp"

namespace pir::design {

namespace {

std::string set_to_string(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

} // namespace

ClassifyResult classify(const IncidenceStructure& inc) {
    ClassifyResult result;
    auto violate = [&](const std::string& what) { result.violations.push_back({what}); };
    if (inc.v < 1) {
        violate("no points");
        return result;
    }
    if (inc.blocks.empty()) {
        violate("no blocks");
        return result;
    }
    std::set<std::vector<int>> seen;
    for (size_t bi = 0; bi < inc.blocks.size(); ++bi) {
        const auto& block = inc.blocks[bi];
        if (block.empty()) violate("block " + std::to_string(bi) + " is empty");
        for (size_t i = 0; i < block.size(); ++i) {
            if (block[i] < 0 || block[i] >= inc.v) {
                violate("block " + std::to_string(bi) + " has an out-of-range point");
                return result;
            }
            if (i > 0 && block[i] <= block[i - 1]) {
                violate("block " + std::to_string(bi) + " is not a sorted set");
                return result;
            }
        }
        if (!seen.insert(block).second)
            violate("repeated block " + set_to_string(block));
    }
    int z = static_cast<int>(inc.blocks[0].size());
    for (size_t bi = 0; bi < inc.blocks.size(); ++bi)
        if (static_cast<int>(inc.blocks[bi].size()) != z) {
            violate("block sizes are not uniform (block " + std::to_string(bi) + ")");
            z = -1;
            break;
        }
    std::vector<int> replication(inc.v, 0);
    std::map<std::pair<int, int>, int> pair_coverage;
    for (const auto& block : inc.blocks) {
        for (size_t i = 0; i < block.size(); ++i) {
            replication[block[i]]++;
            for (size_t j = i + 1; j < block.size(); ++j) {
                int& c = pair_coverage[{block[i], block[j]}];
                if (++c == 2)
                    violate("points " + std::to_string(block[i]) + "," +
                            std::to_string(block[j]) + " lie on two blocks");
            }
        }
    }
    int t = replication[0];
    for (int p = 0; p < inc.v; ++p)
        if (replication[p] != t) {
            violate("replication is not uniform (point " + std::to_string(p) + " lies on " +
                    std::to_string(replication[p]) + " blocks, point 0 on " + std::to_string(t) +
                    ")");
            t = -1;
            break;
        }
    if (!result.violations.empty()) return result;
    ConfigurationProfile profile;
    profile.v = inc.v;
    profile.b = inc.b();
    profile.t = t;
    profile.z = z;
    profile.symmetric = profile.v == profile.b;
    profile.bibd =
        static_cast<long long>(pair_coverage.size()) ==
        static_cast<long long>(inc.v) * (inc.v - 1) / 2;
    result.profile = profile;
    return result;
}

IncidenceStructure dual(const IncidenceStructure& inc) {
    ClassifyResult check = classify(inc);
    if (!check.ok())
        fail(ErrorKind::NotAConfiguration,
             "dual of a non-configuration: " + check.violations.front().what);
    IncidenceStructure d;
    d.v = inc.b();
    d.blocks.assign(inc.v, {});
    for (int bi = 0; bi < inc.b(); ++bi)
        for (int p : inc.blocks[bi]) d.blocks[p].push_back(bi);
    return d;
}

IncidenceStructure cyclic_configuration(int v, const std::vector<std::vector<int>>& base_blocks) {
    if (v < 2) fail(ErrorKind::InvalidParameter, "need v >= 2");
    if (base_blocks.empty()) fail(ErrorKind::InvalidParameter, "need a base block");
    // distinct-difference gate: every nonzero difference at most once overall
    std::map<int, std::pair<size_t, std::pair<int, int>>> first_use;
    for (size_t bi = 0; bi < base_blocks.size(); ++bi) {
        const auto& base = base_blocks[bi];
        std::set<int> reduced;
        for (int x : base) reduced.insert(((x % v) + v) % v);
        if (reduced.size() != base.size())
            fail(ErrorKind::InvalidParameter, "base block has repeated residues");
        for (int x : reduced)
            for (int y : reduced) {
                if (x == y) continue;
                int d = ((x - y) % v + v) % v;
                auto [it, fresh] = first_use.insert({d, {bi, {x, y}}});
                if (!fresh)
                    fail(ErrorKind::RepeatedDifference,
                         "difference " + std::to_string(d) + " arises from base " +
                             std::to_string(it->second.first) + " (" +
                             std::to_string(it->second.second.first) + "-" +
                             std::to_string(it->second.second.second) + ") and base " +
                             std::to_string(bi) + " (" + std::to_string(x) + "-" +
                             std::to_string(y) + ")");
            }
    }
    IncidenceStructure inc;
    inc.v = v;
    for (const auto& base : base_blocks) {
        for (int g = 0; g < v; ++g) {
            std::vector<int> block;
            for (int x : base) block.push_back((((x + g) % v) + v) % v);
            std::sort(block.begin(), block.end());
            inc.blocks.push_back(std::move(block));
        }
    }
    std::sort(inc.blocks.begin(), inc.blocks.end());
    ClassifyResult check = classify(inc);
    if (!check.ok())
        fail(ErrorKind::NotAConfiguration,
             "development is not a configuration: " + check.violations.front().what);
    return inc;
}

namespace {

// Deterministic configuration search. Blocks are produced as a
// lexicographically increasing sequence; the active point is always the
// least one with unmet replication, so every solution is generated exactly
// once (in its sorted block order).
struct ConfigSearch {
    int v, t, b, z;
    long long budget;
    long long nodes = 0;
    int best_depth = 0;
    bool out_of_budget = false;
    std::vector<int> rem;
    std::vector<uint64_t> pair_used;
    uint64_t unsat = 0;
    std::vector<std::vector<int>> blocks;

    bool feasible() const {
        for (int x = 0; x < v; ++x) {
            if (rem[x] == 0) continue;
            uint64_t avail = unsat & ~pair_used[x] & ~(1ull << x);
            if (std::popcount(avail) < rem[x] * (z - 1)) return false;
        }
        return true;
    }

    bool solve() {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        best_depth = std::max(best_depth, static_cast<int>(blocks.size()));
        if (unsat == 0) return true;
        if (!feasible()) return false;
        int p = std::countr_zero(unsat);
        const std::vector<int>* prev =
            (!blocks.empty() && blocks.back()[0] == p) ? &blocks.back() : nullptr;
        std::vector<int> chosen{p};
        return extend(chosen, prev, prev != nullptr, p + 1);
    }

    bool extend(std::vector<int>& chosen, const std::vector<int>* prev, bool tight, int from) {
        if (static_cast<int>(chosen.size()) == z) return place(chosen);
        size_t pos = chosen.size();
        int lb = from;
        if (tight) lb = std::max(lb, (*prev)[pos]);
        for (int u = lb; u < v; ++u) {
            if (!(unsat >> u & 1)) continue;
            bool conflict = false;
            for (int c : chosen)
                if (pair_used[u] >> c & 1) {
                    conflict = true;
                    break;
                }
            if (conflict) continue;
            chosen.push_back(u);
            bool still_tight = tight && u == (*prev)[pos];
            if (extend(chosen, prev, still_tight, u + 1)) return true;
            chosen.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    }

    bool place(const std::vector<int>& block) {
        for (int x : block) {
            if (--rem[x] == 0) unsat &= ~(1ull << x);
        }
        for (int x : block)
            for (int y : block)
                if (x != y) pair_used[x] |= 1ull << y;
        blocks.push_back(block);
        bool found = solve();
        if (!found) {
            blocks.pop_back();
            for (int x : block)
                for (int y : block)
                    if (x != y) pair_used[x] &= ~(1ull << y);
            for (int x : block) {
                if (rem[x]++ == 0) unsat |= 1ull << x;
            }
        }
        return found;
    }
};

} // namespace

SearchResult search_configuration(int v, int t, int b, int z, long long node_budget) {
    if (v < 1 || t < 1 || b < 1 || z < 2)
        fail(ErrorKind::InvalidParameter, "need v,t,b >= 1 and z >= 2");
    if (static_cast<long long>(v) * t != static_cast<long long>(b) * z)
        fail(ErrorKind::InvalidParameter, "need v*t == b*z");
    if (v > 64) fail(ErrorKind::ResourceGuard, "search supports v <= 64");
    ConfigSearch search;
    search.v = v;
    search.t = t;
    search.b = b;
    search.z = z;
    search.budget = node_budget;
    search.rem.assign(v, t);
    search.pair_used.assign(v, 0);
    search.unsat = (v == 64) ? ~0ull : ((1ull << v) - 1);
    SearchResult result;
    bool found = search.solve();
    result.nodes = search.nodes;
    result.best_depth = search.best_depth;
    if (found) {
        result.status = SearchStatus::Found;
        result.structure.v = v;
        result.structure.blocks = search.blocks;
        std::sort(result.structure.blocks.begin(), result.structure.blocks.end());
    } else if (search.out_of_budget) {
        result.status = SearchStatus::Timeout;
    } else {
        result.status = SearchStatus::Unsat;
    }
    return result;
}

namespace {

struct ResolveSearch {
    int v, b, class_count;
    uint64_t full = 0;
    std::vector<uint64_t> block_masks;
    std::vector<char> used;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;
    uint64_t covered = 0;
    std::vector<int> current;
    std::vector<std::vector<int>> classes;

    bool solve(int used_count) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (used_count == b) return covered == 0;
        if (covered == 0) {
            // The least-index unused block must belong to some class; since
            // classes are unordered it can open the next one. Forced move.
            int first = -1;
            for (int i = 0; i < b; ++i)
                if (!used[i]) {
                    first = i;
                    break;
                }
            return try_block(first, used_count);
        }
        int pt = std::countr_zero(~covered & full);
        for (int i = 0; i < b; ++i) {
            if (used[i]) continue;
            if (!(block_masks[i] >> pt & 1)) continue;
            if (block_masks[i] & covered) continue;
            if (try_block(i, used_count)) return true;
            if (out_of_budget) return false;
        }
        return false;
    }

    bool try_block(int i, int used_count) {
        used[i] = 1;
        covered |= block_masks[i];
        current.push_back(i);
        bool found;
        if (covered == full) {
            classes.push_back(current);
            uint64_t saved_cover = covered;
            std::vector<int> saved_current = std::move(current);
            covered = 0;
            current.clear();
            found = solve(used_count + 1);
            if (!found) {
                classes.pop_back();
                covered = saved_cover;
                current = std::move(saved_current);
            }
        } else {
            found = solve(used_count + 1);
        }
        if (!found) {
            current.pop_back();
            covered &= ~block_masks[i];
            used[i] = 0;
        }
        return found;
    }
};

} // namespace

ResolveResult resolve(const IncidenceStructure& inc, long long node_budget) {
    ClassifyResult check = classify(inc);
    if (!check.ok())
        fail(ErrorKind::NotAConfiguration,
             "resolve needs a configuration: " + check.violations.front().what);
    if (inc.v > 64) fail(ErrorKind::ResourceGuard, "resolve supports v <= 64");
    ResolveResult result;
    const ConfigurationProfile& profile = *check.profile;
    if (inc.v % profile.z != 0) return result; // no parallel class can exist
    ResolveSearch search;
    search.v = inc.v;
    search.b = inc.b();
    search.class_count = profile.t;
    search.full = (inc.v == 64) ? ~0ull : ((1ull << inc.v) - 1);
    for (const auto& block : inc.blocks) {
        uint64_t mask = 0;
        for (int p : block) mask |= 1ull << p;
        search.block_masks.push_back(mask);
    }
    search.used.assign(inc.b(), 0);
    search.budget = node_budget;
    bool found = search.solve(0);
    result.nodes = search.nodes;
    if (found) {
        result.status = SearchStatus::Found;
        result.resolution.classes = search.classes;
        // a resolved BIBD must have exactly (v-1)/(z-1) classes
        if (check.profile->bibd &&
            static_cast<int>(search.classes.size()) != (inc.v - 1) / (profile.z - 1))
            fail(ErrorKind::ConstructionFailed, "BIBD resolution has the wrong class count");
    } else if (search.out_of_budget) {
        result.status = SearchStatus::Timeout;
    }
    return result;
}

CatalogAnswer rbibd_catalog(int v, int z) {
    if (v < 2 || z < 2) fail(ErrorKind::InvalidParameter, "need v, z >= 2");
    bool excluded = false;
    std::string exclusion;
    if (z == 3 && v % 6 == 3) return {CatalogVerdict::Exists, "z=3, v == 3 (mod 6)"};
    if (z == 4 && v % 12 == 4) return {CatalogVerdict::Exists, "z=4, v == 4 (mod 12)"};
    if (z == 5 && v % 20 == 5) {
        if (v == 45 || v == 345 || v == 465 || v == 645) {
            excluded = true;
            exclusion = "z=5 row excludes v in {45,345,465,645}";
        } else {
            return {CatalogVerdict::Exists, "z=5, v == 5 (mod 20), v not in {45,345,465,645}"};
        }
    }
    if (z == 7 && v % 42 == 7 && v > 294427)
        return {CatalogVerdict::Exists, "z=7, v == 7 (mod 42), v > 294427"};
    if (z == 8 && v % 56 == 8 && v > 24480)
        return {CatalogVerdict::Exists, "z=8, v == 8 (mod 56), v > 24480"};
    long long pv = 0, pz = 0;
    if ((v - 1) % (z - 1) == 0 && gf::is_prime_power(v, &pv) && gf::is_prime_power(z, &pz) &&
        pv == pz)
        return {CatalogVerdict::Exists, "v and z powers of the same prime, z-1 | v-1"};
    if (excluded) return {CatalogVerdict::ExcludedException, exclusion};
    return {CatalogVerdict::Unknown, ""};
}

namespace {

bool is_prime(int p) {
    long long pp = 0;
    int n = 0;
    return gf::is_prime_power(p, &pp, &n) && n == 1;
}

int int_sqrt(int x) {
    int r = static_cast<int>(std::max(0.0, std::floor(std::sqrt(static_cast<double>(x)))));
    while ((r + 1) * (r + 1) <= x) ++r;
    while (r * r > x) --r;
    return r;
}

} // namespace

std::vector<SymmetricCatalogRow> symmetric_catalog(int v, int z) {
    std::vector<SymmetricCatalogRow> rows;
    auto add = [&](const std::string& family) { rows.push_back({family}); };
    if (z == 4 && v >= 13) add("v >= 13, z = 4");
    // families parameterized by a prime power q (or prime p)
    for (int q = 2; q <= v + 2; ++q) {
        if (!gf::is_prime_power(q)) continue;
        if (v == q * q - 1 && z == q) add("v = q^2-1, z = q (q=" + std::to_string(q) + ")");
        for (int s = 0; s < q; ++s) {
            if (v == q * q - q * s && z == q - s)
                add("v = q^2-qs, z = q-s (q=" + std::to_string(q) + ", s=" + std::to_string(s) +
                    ")");
            if (v == q * q - (q - 1) * s - 1 && z == q - s)
                add("v = q^2-(q-1)s-1, z = q-s (q=" + std::to_string(q) + ", s=" +
                    std::to_string(s) + ")");
        }
        int root = int_sqrt(q);
        if (root * root == q && root >= 2) {
            for (int c = 2; c <= q - root; ++c)
                if (v == c * (q + root + 1) && z == root + c)
                    add("v = c(q+sqrt(q)+1), z = sqrt(q)+c (q=" + std::to_string(q) + ", c=" +
                        std::to_string(c) + ")");
            if (v == q * q + q - q * root && z == q - root)
                add("v = q^2+q-q*sqrt(q), z = q-sqrt(q) (q=" + std::to_string(q) + ")");
        }
        for (int delta = 0; delta <= q; ++delta) {
            int c = z + delta;
            int bound = delta >= 1 ? q : (q + 1) / 2;
            if (c >= delta && c <= bound && v == c * (q - 1))
                add("v = c(q-1), z = c-delta (q=" + std::to_string(q) + ", c=" +
                    std::to_string(c) + ", delta=" + std::to_string(delta) + ")");
        }
        if (q % 2 == 1) {
            if (v == q * (q - 1) / 2 && z == (q + 1) / 2)
                add("v = q(q-1)/2, z = (q+1)/2 (q=" + std::to_string(q) + ")");
            if (v == q * (q + 1) / 2 && z == (q - 1) / 2)
                add("v = q(q+1)/2, z = (q-1)/2 (q=" + std::to_string(q) + ")");
        }
        for (int r = 0; r <= q - 3; ++r)
            if (v == q * q - r * q - 1 && z == q - r)
                add("v = q^2-rq-1, z = q-r (q=" + std::to_string(q) + ", r=" + std::to_string(r) +
                    ")");
        if (q >= 3 && v == q * q - q - 2 && z == q - 1)
            add("v = q^2-q-2, z = q-1 (q=" + std::to_string(q) + ")");
        for (int r = 3; r < q; ++r) {
            if (v == r * q - 1 && z == r)
                add("v = rq-1, z = r (q=" + std::to_string(q) + ", r=" + std::to_string(r) + ")");
            if (v == r * q - 2 && z == r)
                add("v = rq-2, z = r (q=" + std::to_string(q) + ", r=" + std::to_string(r) + ")");
        }
    }
    for (int p = 2; p <= v + 1; ++p) {
        if (!is_prime(p)) continue;
        if (v == p * p - p && z == p - 1)
            add("v = p^2-p, z = p-1 (p=" + std::to_string(p) + ")");
        if (v == 2 * p * p) {
            // 2p^2 row: z = p+s with a prime power q, 0 < s <= q+1, q^2+q+1 <= p
            int s = z - p;
            for (int q = 2; q * q + q + 1 <= p; ++q) {
                if (!gf::is_prime_power(q)) continue;
                if (s > 0 && s <= q + 1) {
                    add("v = 2p^2, z = p+s (p=" + std::to_string(p) + ", s=" + std::to_string(s) +
                        ")");
                    break;
                }
            }
        }
    }
    // sporadic small parameters
    static const std::map<int, std::vector<int>> sporadic = {
        {5, {21, 23, 24, 25, 26, 27, 28}}, {6, {31, 34, 35, 36, 37, 38}},
        {7, {45, 48, 49, 50}},             {8, {57, 63, 64}},
        {9, {73, 78, 80}},                 {10, {91, 98}},
        {12, {133, 135}},
    };
    auto it = sporadic.find(z);
    if (it != sporadic.end() &&
        std::find(it->second.begin(), it->second.end(), v) != it->second.end())
        add("sporadic v=" + std::to_string(v) + ", z=" + std::to_string(z));
    return rows;
}

bool asym3_exists(int v, int t, long long b) {
    return static_cast<long long>(v) * t == 3 * b && v >= 2 * t + 1;
}

bool asym4_exists(int v, int t, long long b) {
    if (static_cast<long long>(v) * t != 4 * b) return false;
    static const std::set<int> E4 = {84,  120, 132, 180, 216, 264, 312, 324,
                                     372, 456, 552, 648, 660, 804, 852, 888};
    if (v % 12 == 4 && v > 3 * t + 1) return true;
    if (v % 12 == 0 && v >= 3 * t + 1 && !E4.count(v)) return true;
    if (v % 12 == 0 && v == 3 * t + 3) return true;
    if (t % 4 == 0 && t / 4 >= 1 && t / 4 <= 15 && v >= 3 * t + 1 && !(t / 4 == 3 && v == 38))
        return true;
    if (t == 6 && v >= 20 && v % 2 == 0) return true;
    return false;
}

bool asym5_exists(int v, int t, long long b) {
    if (static_cast<long long>(v) * t != 5 * b) return false;
    if (v == 4 * t + 4 && v % 20 == 0) return true;
    if (v % 20 == 5 && v >= 4 * t + 1 && v >= 7865) return true;
    // exceptions are listed as (s, v) pairs for t = 5s
    static const std::set<std::pair<int, int>> E5 = {
        {1, 22},  {2, 42},  {2, 43},  {3, 62},  {3, 63},  {4, 82},
        {5, 102}, {7, 142}, {9, 182}, {9, 183}, {9, 185}, {9, 186},
        {9, 187}, {9, 188}, {9, 189}, {9, 190}, {9, 191}, {9, 192}};
    if (t % 5 == 0 && t / 5 >= 1 && t / 5 <= 10 && v >= 4 * t + 1 && !E5.count({t / 5, v}))
        return true;
    return false;
}

ResolvedConfiguration packing_to_configuration(const packing::PartialPacking& packing) {
    if (!packing.homogeneous())
        fail(ErrorKind::NotHomogeneous, "configuration needs a homogeneous packing");
    ResolvedConfiguration out;
    out.inc.v = packing.ground_size;
    for (const auto& partition : packing.partitions) {
        std::vector<int> cls;
        for (const auto& part : partition.parts) {
            cls.push_back(out.inc.b());
            out.inc.blocks.push_back(part);
        }
        out.resolution.classes.push_back(std::move(cls));
    }
    ClassifyResult check = classify(out.inc);
    if (!check.ok())
        fail(ErrorKind::NotAConfiguration,
             "packing does not induce a configuration: " + check.violations.front().what);
    return out;
}

std::string export_incidence(const IncidenceStructure& inc, const Resolution* resolution) {
    std::ostringstream out;
    out << inc.v << " " << inc.b() << "\n";
    for (const auto& block : inc.blocks) {
        for (size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
        out << "\n";
    }
    if (resolution) {
        for (size_t c = 0; c < resolution->classes.size(); ++c) {
            out << "#class " << c << ":";
            for (int bi : resolution->classes[c]) out << " " << bi;
            out << "\n";
        }
    }
    return out.str();
}

IncidenceStructure import_incidence(const std::string& text, Resolution* resolution_out) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) fail(ErrorKind::ParseError, "empty incidence file");
    std::istringstream header(line);
    int v = 0, b = 0;
    if (!(header >> v >> b)) fail(ErrorKind::ParseError, "bad incidence header");
    IncidenceStructure inc;
    inc.v = v;
    if (resolution_out) resolution_out->classes.clear();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (!resolution_out) continue;
            size_t colon = line.find(':');
            if (colon == std::string::npos) fail(ErrorKind::ParseError, "bad class line");
            std::istringstream rest(line.substr(colon + 1));
            std::vector<int> cls;
            int bi;
            while (rest >> bi) cls.push_back(bi);
            resolution_out->classes.push_back(std::move(cls));
            continue;
        }
        std::istringstream row(line);
        std::vector<int> block;
        int p;
        while (row >> p) block.push_back(p);
        if (block.empty()) fail(ErrorKind::ParseError, "empty block line");
        inc.blocks.push_back(std::move(block));
    }
    if (inc.b() != b) fail(ErrorKind::ParseError, "block count does not match header");
    return inc;
}

} // namespace pir::design
