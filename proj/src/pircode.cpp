#include "pir/pircode.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

namespace pir::code {

namespace {

using Bits = boost::dynamic_bitset<>;

// Canonical plan construction shared by the constructors and import: for each
// bit, the identity singleton first, then one set per parity column through
// the bit (in column order), closing each with spare copies of the other
// subset elements; leftover singleton parity columns become singleton sets.
void build_plan(PirCode& code) {
    const int s = code.s;
    code.recovery_plan.assign(s, {});
    code.declared_k = 0;
    // columns that equal a unit vector, per row: the identity column plus any
    // singleton parity columns
    std::vector<std::vector<int>> unit_columns(s);
    for (int r = 0; r < s; ++r) unit_columns[r].push_back(r);
    for (size_t j = 0; j < code.parity_columns.size(); ++j)
        if (code.parity_columns[j].size() == 1)
            unit_columns[code.parity_columns[j][0]].push_back(s + static_cast<int>(j));
    for (int i = 0; i < s; ++i) {
        auto& plan = code.recovery_plan[i];
        std::set<int> used;
        plan.push_back({i});
        used.insert(i);
        for (size_t j = 0; j < code.parity_columns.size(); ++j) {
            const auto& subset = code.parity_columns[j];
            if (subset.size() < 2) continue;
            if (!std::binary_search(subset.begin(), subset.end(), i)) continue;
            std::vector<int> set{s + static_cast<int>(j)};
            bool complete = true;
            for (int e : subset) {
                if (e == i) continue;
                int spare = -1;
                for (int c : unit_columns[e])
                    if (!used.count(c)) {
                        spare = c;
                        break;
                    }
                if (spare < 0) {
                    complete = false;
                    break;
                }
                set.push_back(spare);
            }
            if (!complete) continue;
            std::sort(set.begin(), set.end());
            used.insert(set.begin(), set.end());
            plan.push_back(std::move(set));
        }
        for (size_t j = 0; j < code.parity_columns.size(); ++j) {
            const auto& subset = code.parity_columns[j];
            if (subset.size() == 1 && subset[0] == i && !used.count(s + static_cast<int>(j))) {
                plan.push_back({s + static_cast<int>(j)});
                used.insert(s + static_cast<int>(j));
            }
        }
        int count = static_cast<int>(plan.size());
        if (i == 0 || count < code.declared_k) code.declared_k = count;
    }
}

Bits column_bits(const PirCode& code, int col) {
    Bits b(code.s);
    if (col < 0 || col >= code.m) fail(ErrorKind::InvalidParameter, "column out of range");
    if (col < code.s) {
        b.set(col);
    } else {
        for (int r : code.parity_columns[col - code.s]) b.set(r);
    }
    return b;
}

} // namespace

PirCode code_from_subsets(int s, const std::vector<std::vector<int>>& subsets) {
    if (s < 1) fail(ErrorKind::InvalidParameter, "need s >= 1");
    PirCode code;
    code.s = s;
    for (size_t j = 0; j < subsets.size(); ++j) {
        std::vector<int> subset = subsets[j];
        if (subset.empty()) fail(ErrorKind::EmptySubset, "subset " + std::to_string(j));
        std::sort(subset.begin(), subset.end());
        for (size_t i = 0; i < subset.size(); ++i) {
            if (subset[i] < 0 || subset[i] >= s)
                fail(ErrorKind::InvalidParameter, "subset element out of range");
            if (i > 0 && subset[i] == subset[i - 1])
                fail(ErrorKind::InvalidParameter, "subset with a repeated element");
        }
        code.parity_columns.push_back(std::move(subset));
    }
    for (size_t a = 0; a < code.parity_columns.size(); ++a)
        for (size_t b = a + 1; b < code.parity_columns.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(code.parity_columns[a].begin(), code.parity_columns[a].end(),
                                  code.parity_columns[b].begin(), code.parity_columns[b].end(),
                                  std::back_inserter(common));
            if (common.size() > 1)
                fail(ErrorKind::IntersectionViolation,
                     "subsets " + std::to_string(a) + " and " + std::to_string(b) +
                         " share more than one element");
        }
    code.m = s + static_cast<int>(code.parity_columns.size());
    build_plan(code);
    return code;
}

PirCode code_from_packing(const packing::PartialPacking& packing) {
    std::vector<std::vector<int>> subsets;
    for (const auto& partition : packing.partitions)
        for (const auto& part : partition.parts) subsets.push_back(part);
    PirCode code = code_from_subsets(packing.ground_size, subsets);
    // coverage is exactly one part per partition, so this is the packing's k
    if (code.declared_k != packing.k())
        fail(ErrorKind::ConstructionFailed, "packing coverage does not match its k");
    return code;
}

PirCode code_from_configuration(const design::IncidenceStructure& inc, Side side) {
    design::ClassifyResult check = design::classify(inc);
    if (!check.ok())
        fail(ErrorKind::NotAConfiguration,
             "code needs a configuration: " + check.violations.front().what);
    if (side == Side::Primal) return code_from_subsets(inc.v, inc.blocks);
    return code_from_subsets(inc.b(), design::dual(inc).blocks);
}

PlanVerdict verify_recovery_plan(const PirCode& code) {
    PlanVerdict verdict;
    if (static_cast<int>(code.recovery_plan.size()) != code.s) {
        verdict.kind = PlanVerdict::Kind::TooFewSets;
        verdict.message = "plan does not cover every bit";
        return verdict;
    }
    for (int i = 0; i < code.s; ++i) {
        const auto& plan = code.recovery_plan[i];
        std::set<int> used;
        for (size_t si = 0; si < plan.size(); ++si) {
            Bits sum(code.s);
            for (int col : plan[si]) {
                if (col < 0 || col >= code.m) {
                    verdict.kind = PlanVerdict::Kind::BadColumn;
                    verdict.bit = i;
                    verdict.set_index = static_cast<int>(si);
                    verdict.message = "column index out of range";
                    return verdict;
                }
                if (!used.insert(col).second) {
                    verdict.kind = PlanVerdict::Kind::DisjointnessViolation;
                    verdict.bit = i;
                    verdict.set_index = static_cast<int>(si);
                    verdict.message = "column " + std::to_string(col) + " reused for bit " +
                                      std::to_string(i);
                    return verdict;
                }
                sum ^= column_bits(code, col);
            }
            Bits expected(code.s);
            expected.set(i);
            if (sum != expected) {
                verdict.kind = PlanVerdict::Kind::SumMismatch;
                verdict.bit = i;
                verdict.set_index = static_cast<int>(si);
                verdict.message = "set " + std::to_string(si) + " for bit " + std::to_string(i) +
                                  " does not sum to e_i";
                return verdict;
            }
        }
        if (static_cast<int>(plan.size()) < code.declared_k) {
            verdict.kind = PlanVerdict::Kind::TooFewSets;
            verdict.bit = i;
            verdict.message = "bit " + std::to_string(i) + " has " +
                              std::to_string(plan.size()) + " sets, declared k is " +
                              std::to_string(code.declared_k);
            return verdict;
        }
    }
    return verdict;
}

namespace {

// exact maximum pairwise-disjoint subfamily, capped at limit
int max_disjoint(const std::vector<uint64_t>& sets, int limit) {
    int best = 0;
    std::function<void(size_t, uint64_t, int)> rec = [&](size_t idx, uint64_t used, int count) {
        best = std::max(best, count);
        if (best >= limit) return;
        if (idx >= sets.size()) return;
        if (count + static_cast<int>(sets.size() - idx) <= best) return;
        if (!(sets[idx] & used)) rec(idx + 1, used | sets[idx], count + 1);
        if (best >= limit) return;
        rec(idx + 1, used, count);
    };
    rec(0, 0, 0);
    return std::min(best, limit);
}

std::vector<uint64_t> filter_minimal(std::vector<uint64_t> sols) {
    std::sort(sols.begin(), sols.end(), [](uint64_t a, uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
    std::vector<uint64_t> minimal;
    for (uint64_t x : sols) {
        bool dominated = false;
        for (uint64_t k : minimal) {
            if ((k & x) == k) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(x);
    }
    return minimal;
}

} // namespace

int max_disjoint_recovery(const PirCode& code, int bit, int limit) {
    if (code.m > 48)
        fail(ErrorKind::ResourceGuard, "oracle supports m <= 48");
    if (bit < 0 || bit >= code.s) fail(ErrorKind::InvalidParameter, "bit out of range");
    if (limit <= 0) return 0;
    const int s = code.s, m = code.m, d = m - s;
    std::vector<uint64_t> sols;
    if (d <= 20) {
        // full coset: particular solution {bit} plus the kernel span, walked
        // with a Gray code (one basis flip per step)
        std::vector<uint64_t> kernel(d);
        for (int j = 0; j < d; ++j) {
            uint64_t v = 1ull << (s + j);
            for (int r : code.parity_columns[j]) v |= 1ull << r;
            kernel[j] = v;
        }
        uint64_t cur = 1ull << bit;
        sols.reserve(1ull << d);
        sols.push_back(cur);
        for (uint64_t g = 1; g < (1ull << d); ++g) {
            cur ^= kernel[std::countr_zero(g)];
            sols.push_back(cur);
        }
    } else {
        // bounded-depth DFS over column combinations
        size_t max_weight = 1;
        for (const auto& pc : code.parity_columns) max_weight = std::max(max_weight, pc.size());
        const int depth = static_cast<int>(max_weight) + 1;
        std::vector<uint64_t> col_bits(m);
        for (int c = 0; c < m; ++c) {
            if (c < s) {
                col_bits[c] = 1ull << c;
            } else {
                for (int r : code.parity_columns[c - s]) col_bits[c] |= 1ull << r;
            }
        }
        const uint64_t target = 1ull << bit;
        std::function<void(int, uint64_t, uint64_t, int)> dfs = [&](int from, uint64_t acc,
                                                                    uint64_t support, int left) {
            if (acc == target && support != 0) sols.push_back(support);
            if (left == 0) return;
            for (int c = from; c < m; ++c)
                dfs(c + 1, acc ^ col_bits[c], support | (1ull << c), left - 1);
        };
        dfs(0, 0, 0, depth);
    }
    std::vector<uint64_t> minimal = filter_minimal(std::move(sols));
    return max_disjoint(minimal, limit);
}

PirCode combine_codes(const PirCode& c1, const PirCode& c2) {
    if (c1.s != c2.s) fail(ErrorKind::DimensionMismatch, "codes have different dimensions");
    PirCode code;
    code.s = c1.s;
    code.parity_columns = c1.parity_columns;
    for (int r = 0; r < c1.s; ++r) code.parity_columns.push_back({r}); // second identity block
    for (const auto& pc : c2.parity_columns) code.parity_columns.push_back(pc);
    code.m = code.s + static_cast<int>(code.parity_columns.size());
    build_plan(code);
    // the canonical plan realizes one recovery set per coverage unit of both
    // sides, so the counts add
    if (code.declared_k < c1.declared_k + c2.declared_k)
        fail(ErrorKind::ConstructionFailed, "combined plan lost recovery sets");
    code.declared_k = c1.declared_k + c2.declared_k;
    return code;
}

PirCode combine_subpackings(const packing::PartialPacking& packing, int h1, int h2) {
    if (h1 < 2 || h2 < 2) fail(ErrorKind::HOutOfRange, "need h1, h2 >= 2");
    if (h1 + h2 > packing.k() + 1)
        fail(ErrorKind::HOutOfRange, "need h1 + h2 <= k + 1");
    std::vector<std::vector<std::vector<int>>> raw;
    for (int i = 0; i < h1 + h2 - 2; ++i) raw.push_back(packing.partitions[i].parts);
    packing::PartialPacking merged = packing::validate_packing(packing.ground_size, raw);
    return code_from_packing(merged);
}

LrcParams lrc_params(const PirCode& code) {
    if (code.declared_k < 2)
        fail(ErrorKind::InvalidParameter, "LRC parameters need k >= 2");
    LrcParams params;
    params.availability = code.declared_k - 1;
    for (const auto& plan : code.recovery_plan)
        for (const auto& set : plan)
            if (set.size() > 1)
                params.locality = std::max(params.locality, static_cast<int>(set.size()));
    return params;
}

std::string export_matrix(const PirCode& code) {
    std::ostringstream out;
    out << code.s << " " << code.m << "\n";
    for (int r = 0; r < code.s; ++r) {
        std::string row(code.m, '0');
        row[r] = '1';
        for (size_t j = 0; j < code.parity_columns.size(); ++j)
            if (std::binary_search(code.parity_columns[j].begin(), code.parity_columns[j].end(),
                                   r))
                row[code.s + j] = '1';
        out << row << "\n";
    }
    return out.str();
}

PirCode import_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) fail(ErrorKind::ParseError, "empty matrix file");
    std::istringstream header(line);
    int s = 0, m = 0;
    if (!(header >> s >> m) || s < 1 || m < s)
        fail(ErrorKind::ParseError, "bad matrix header");
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        rows.push_back(line);
    }
    if (static_cast<int>(rows.size()) != s) fail(ErrorKind::ParseError, "row count mismatch");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m) fail(ErrorKind::ParseError, "row length mismatch");
        for (char c : row)
            if (c != '0' && c != '1') fail(ErrorKind::ParseError, "matrix entries must be 0/1");
    }
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c)
            if ((rows[r][c] == '1') != (r == c))
                fail(ErrorKind::VerificationFailed, "identity block is corrupted");
    PirCode code;
    code.s = s;
    code.m = m;
    code.parity_columns.assign(m - s, {});
    for (int j = 0; j < m - s; ++j)
        for (int r = 0; r < s; ++r)
            if (rows[r][s + j] == '1') code.parity_columns[j].push_back(r);
    for (const auto& pc : code.parity_columns)
        if (pc.empty()) fail(ErrorKind::VerificationFailed, "zero parity column");
    build_plan(code);
    PlanVerdict verdict = verify_recovery_plan(code);
    if (!verdict.ok()) fail(ErrorKind::VerificationFailed, verdict.message);
    return code;
}

std::string export_plan(const PirCode& code) {
    std::ostringstream out;
    for (int i = 0; i < code.s; ++i) {
        out << i << ":";
        for (const auto& set : code.recovery_plan[i]) {
            out << " {";
            for (size_t c = 0; c < set.size(); ++c) out << (c ? "," : "") << set[c];
            out << "}";
        }
        out << "\n";
    }
    return out.str();
}

} // namespace pir::code
