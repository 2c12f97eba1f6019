#pragma once

#include <string>
#include <vector>

#include "pir/design.hpp"
#include "pir/errors.hpp"
#include "pir/packing.hpp"

namespace pir::code {

// Systematic binary [m,s] code G = [I_s | A] together with an explicit
// recovery plan: for each information bit i, a list of pairwise-disjoint
// column sets each summing to e_i over GF(2). Column indices 0..s-1 are the
// identity block, s..m-1 the parity columns.
struct PirCode {
    int s = 0;
    int m = 0;
    int declared_k = 0;
    std::vector<std::vector<int>> parity_columns;            // sorted row sets
    std::vector<std::vector<std::vector<int>>> recovery_plan; // [bit][set][column]
};

// Lemma-7 style assembly: one parity column per subset; the plan for bit i is
// the identity singleton {i} plus, per subset S containing i, the parity
// column together with one spare copy of each element of S\{i} (the identity
// column when free, else a singleton parity column). declared_k becomes the
// minimum per-bit set count, i.e. 1 + min coverage. Subsets must be nonempty
// and pairwise intersect in at most one element.
PirCode code_from_subsets(int s, const std::vector<std::vector<int>>& subsets);

// All parts of the packing as subsets; declared_k equals the packing's k.
PirCode code_from_packing(const packing::PartialPacking& packing);

enum class Side { Primal, Dual };

// Primal: s = v, subsets = blocks, k = t+1. Dual: s = b, subsets transposed,
// k = z+1. Both have length v + b.
PirCode code_from_configuration(const design::IncidenceStructure& inc, Side side);

struct PlanVerdict {
    enum class Kind { Ok, BadColumn, SumMismatch, DisjointnessViolation, TooFewSets };
    Kind kind = Kind::Ok;
    int bit = -1;
    int set_index = -1;
    std::string message;

    bool ok() const { return kind == Kind::Ok; }
};

// Independent check of the stored plan: every set sums to e_i, sets for one
// bit are pairwise disjoint, and each bit has at least declared_k sets.
PlanVerdict verify_recovery_plan(const PirCode& code);

// Brute-force ground truth for the server count: enumerates minimal column
// subsets summing to e_bit and computes the maximum number of pairwise
// disjoint ones by exact backtracking, capped at limit. Guarded to m <= 48.
// When m - s <= 20 the full solution coset is enumerated, so the result is
// exact; beyond that only subsets up to one more than the widest column are
// enumerated and the result is a certified lower bound.
int max_disjoint_recovery(const PirCode& code, int bit, int limit);

// Column concatenation: [m1+m2, s] code with declared_k = k1 + k2. The second
// identity block is kept as singleton parity columns, so m is exactly m1+m2.
PirCode combine_codes(const PirCode& c1, const PirCode& c2);

// Code of the (h1+h2-1)-partial subpacking built from the first h1-1 and the
// next h2-1 partitions; its length satisfies m3 = m1 + m2 - s where m1, m2
// are the code lengths of those two partition ranges.
PirCode combine_subpackings(const packing::PartialPacking& packing, int h1, int h2);

struct LrcParams {
    int locality = 0;     // max size of a non-singleton recovery set
    int availability = 0; // declared_k - 1
};

LrcParams lrc_params(const PirCode& code);

// Matrix format: line 1 "s m", then s lines of m characters over {0,1}
// (identity block first). Import recomputes the recovery plan from the
// parity columns and re-verifies it.
std::string export_matrix(const PirCode& code);
PirCode import_matrix(const std::string& text);

// One line per bit: "i: {c,c,...} {c,...} ...".
std::string export_plan(const PirCode& code);

} // namespace pir::code
