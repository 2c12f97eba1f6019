#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pir/errors.hpp"
#include "pir/packing.hpp"

namespace pir::design {

struct IncidenceStructure {
    int v = 0;
    std::vector<std::vector<int>> blocks; // sorted point-index sets

    int b() const { return static_cast<int>(blocks.size()); }
};

struct ConfigurationProfile {
    int v = 0;
    int t = 0; // replication number
    int b = 0;
    int z = 0; // block size
    bool symmetric = false;
    bool bibd = false; // every point pair covered exactly once
};

struct Violation {
    std::string what;
};

// Checks the configuration axioms (uniform replication, uniform block size,
// pairwise block intersections <= 1) and reports BIBD status. Collects
// violations instead of throwing.
struct ClassifyResult {
    std::optional<ConfigurationProfile> profile;
    std::vector<Violation> violations;

    bool ok() const { return profile.has_value(); }
};

ClassifyResult classify(const IncidenceStructure& inc);

// Transposed incidence; throws NotAConfiguration unless classify succeeds.
IncidenceStructure dual(const IncidenceStructure& inc);

// Develops base blocks through Z_v. Requires every nonzero difference to
// arise at most once across all base blocks (RepeatedDifference otherwise).
IncidenceStructure cyclic_configuration(int v, const std::vector<std::vector<int>>& base_blocks);

enum class SearchStatus { Found, Unsat, Timeout };

struct SearchResult {
    SearchStatus status = SearchStatus::Unsat;
    IncidenceStructure structure; // valid when Found
    long long nodes = 0;
    int best_depth = 0; // deepest block count reached (Timeout diagnostics)
};

// Backtracking search for a (v_t, b_z)-configuration. Deterministic: blocks
// are generated as a lexicographically increasing sequence, always extending
// the least unsaturated point, so the first block is forced to {0,...,z-1}.
// node_budget bounds the explored nodes (no wall-clock dependence).
SearchResult search_configuration(int v, int t, int b, int z,
                                  long long node_budget = 50'000'000);

struct Resolution {
    std::vector<std::vector<int>> classes; // block indices per parallel class
};

struct ResolveResult {
    SearchStatus status = SearchStatus::Unsat;
    Resolution resolution;
    long long nodes = 0;
};

// Partitions the block set into parallel classes (each class partitioning
// the points) by exact-cover backtracking. Unsat when impossible (e.g. when
// the block size does not divide v).
ResolveResult resolve(const IncidenceStructure& inc, long long node_budget = 50'000'000);

enum class CatalogVerdict { Exists, ExcludedException, Unknown };

struct CatalogAnswer {
    CatalogVerdict verdict = CatalogVerdict::Unknown;
    std::string citation; // matching family row
};

// Parameter gate for resolvable 2-(v,z,1) designs, per the published
// congruence lists plus the same-prime-power rule. A verdict of Exists does
// not promise desk-scale constructibility.
CatalogAnswer rbibd_catalog(int v, int z);

struct SymmetricCatalogRow {
    std::string family;
};

// Every known-existence family row matching a symmetric v_z configuration.
std::vector<SymmetricCatalogRow> symmetric_catalog(int v, int z);

// Existence gates for (v_t, b_z)-configurations with z = 3, 4, 5 per the
// published case lists. Preconditions v*t == b*z are checked by the caller.
bool asym3_exists(int v, int t, long long b);
bool asym4_exists(int v, int t, long long b);
bool asym5_exists(int v, int t, long long b);

struct ResolvedConfiguration {
    IncidenceStructure inc;
    Resolution resolution;
};

// Points = ground set, blocks = parts, classes = partitions. Requires a
// homogeneous packing (NotHomogeneous otherwise); yields an (s_{k-1}, r_z)
// configuration with its resolution.
ResolvedConfiguration packing_to_configuration(const packing::PartialPacking& packing);

// Incidence file format: line 1 "v b", then b lines of space-separated point
// indices; an optional resolution is appended as "#class i: b_j b_k ..."
// comment lines.
std::string export_incidence(const IncidenceStructure& inc, const Resolution* resolution = nullptr);
IncidenceStructure import_incidence(const std::string& text, Resolution* resolution_out = nullptr);

} // namespace pir::design
