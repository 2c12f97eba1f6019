#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pir/errors.hpp"

namespace pir::packing {

struct Partition {
    int ground_size = 0;
    std::vector<std::vector<int>> parts; // disjoint sorted index sets covering [0, ground_size)
};

// k-1 partitions of [0,s) with parts of size >= 2 where parts from distinct
// partitions meet in at most one element.
struct PartialPacking {
    int ground_size = 0;
    std::vector<Partition> partitions;

    int k() const { return static_cast<int>(partitions.size()) + 1; }
    int order() const;                     // total number of parts
    bool homogeneous() const;              // all parts across all partitions equal size
    bool homogeneous_per_partition() const; // equal sizes within each partition
    int code_length() const { return ground_size + order(); } // m = s + r
};

// Validates the two packing axioms plus partition-ness; throws PartSizeOne /
// CrossIntersectionTooLarge / NotAPartition with witnesses in the message.
PartialPacking validate_packing(int ground_size,
                                const std::vector<std::vector<std::vector<int>>>& raw_partitions);

// Cosets of the cyclic factors of C_{a_1} x ... x C_{a_{k-1}}; the first w
// factors' coset partitions form a (w+1)-partial packing of order
// s/a_1 + ... + s/a_w.
PartialPacking direct_product_packing(const std::vector<int>& factors, int w);

// Exhaustive search over multisets of k-1 factors >= 2 with product s,
// minimizing the order sum(s/a_i); ties broken by lexicographically smallest
// sorted factor list. Returns the factors and the resulting code length m.
std::pair<std::vector<int>, long long> best_factorization(long long s, int k);

// First k-1 parallel classes of AG(N,q) in canonical direction order.
PartialPacking affine_packing(int N, int q, int k);

// Ground set: h parallel hyperplanes (last coordinate among the first h field
// elements); partitions: traces of k-1 transversal directions (last direction
// coordinate 1). Homogeneous with part size h; m = (h+k-1) q^(N-1).
PartialPacking affine_slab_packing(int N, int q, int h, int k);

// Spread-based packing of PG(N,q). Only (3,2) is constructed explicitly (a
// frozen full packing of the 35 lines into 7 spreads); other parameters
// admissible per the classical existence results raise
// NotConstructedAtDeskScale, inadmissible ones ParametersInadmissible.
PartialPacking projective_packing(int N, int q, int k);

// The frozen 7-spread resolution of the PG(3,2) line set (5 lines each, given
// as sorted point triples). Exposed for tests and the design-search fixture.
const std::vector<std::vector<std::vector<int>>>& pg32_spread_fixture();

// Pencil partitions of a Denniston arc from k-1 points on the lowest-index
// external line.
PartialPacking arc_pencil_packing(int n, int nprime, int k);

// Pencil partitions of the Hermitian unital from k-1 points of a tangent
// line (tangency point excluded). Part size q+1.
PartialPacking unital_pencil_packing(int q, int k);

// Pencil partitions of the conic interior from k-1 external points on the
// lowest-index tangent line; each partition has q-1 parts of sizes (q-1)/2
// and (q+1)/2. Non-homogeneous.
PartialPacking conic_pencil_packing(int q, int k);

// Induced packing on Y (indices into the ground set; result re-indexed in
// Y's sorted order). Fails with SingletonTrace if any part meets Y in
// exactly one element; empty traces are dropped.
PartialPacking restrict_packing(const PartialPacking& packing, const std::vector<int>& Y);

struct GeneralLengthPacking {
    PartialPacking packing;
    int q = 0;
    int N = 0;
};

// Arbitrary-length construction: pick (q,N), N >= 2, minimizing the resulting
// length m = s + (k-1) q^(N-1) subject to 2 q^(N-1) <= s <= q^N and
// k <= 1 + q^(N-1), build the transversal AG(N,q) packing and restrict it to
// two full hyperplanes plus the lexicographically first remaining points.
GeneralLengthPacking general_length_packing(int s, int k);

// First h-1 partitions.
PartialPacking subpacking(const PartialPacking& packing, int h);

// Packing file format: line 1 "s k r", then one line per part:
// "partition-index: e1 e2 ...".
std::string export_packing(const PartialPacking& packing);
PartialPacking import_packing(const std::string& text);

} // namespace pir::packing
