#pragma once

#include "pir/design.hpp"

namespace pir::fixtures {

// (12_2, 6_4): edge/vertex incidence of K6 minus a perfect matching.
// Points are the 12 surviving edges in lexicographic order, blocks the six
// vertices' edge sets.
design::IncidenceStructure k6_minus_matching();

// Symmetric 15_4 configuration developed from the base block {0,1,3,7} mod 15.
design::IncidenceStructure sym_15_4();

// STS(13) = (13_6, 26_3): bases {0,1,4} and {0,2,8} mod 13.
design::IncidenceStructure sts_13();

// AG(2,q) as a resolvable 2-(q^2, q, 1) design; blocks sorted
// lexicographically, classes in canonical direction order.
design::ResolvedConfiguration ag_design(int q);

// (20_4, 16_5): the dual of the AG(2,4) design. search_configuration finds
// such a configuration from scratch; this fixture avoids re-running it.
design::IncidenceStructure config_20_4_16_5();

// The 35 lines of PG(3,2) as an incidence structure (a 2-(15,3,1) design).
design::IncidenceStructure pg32_line_design();

} // namespace pir::fixtures
