#include "pir/fixtures.hpp"

#include <algorithm>
#include <map>

#include "pir/geometry.hpp"

namespace pir::fixtures {

design::IncidenceStructure k6_minus_matching() {
    // remove the matching {0-1, 2-3, 4-5} from K6
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            bool matched = (a == 0 && b == 1) || (a == 2 && b == 3) || (a == 4 && b == 5);
            if (!matched) edges.push_back({a, b});
        }
    design::IncidenceStructure inc;
    inc.v = static_cast<int>(edges.size());
    inc.blocks.assign(6, {});
    for (int e = 0; e < inc.v; ++e) {
        inc.blocks[edges[e].first].push_back(e);
        inc.blocks[edges[e].second].push_back(e);
    }
    return inc;
}

design::IncidenceStructure sym_15_4() {
    return design::cyclic_configuration(15, {{0, 1, 3, 7}});
}

design::IncidenceStructure sts_13() {
    return design::cyclic_configuration(13, {{0, 1, 4}, {0, 2, 8}});
}

design::ResolvedConfiguration ag_design(int q) {
    geom::AffineSpace space = geom::AffineSpace::make(2, q);
    auto classes = space.parallel_classes();
    design::ResolvedConfiguration out;
    out.inc.v = space.point_count();
    std::vector<std::pair<std::vector<int>, int>> tagged; // (block, class)
    for (size_t c = 0; c < classes.size(); ++c)
        for (const auto& line : classes[c]) tagged.push_back({line.points, static_cast<int>(c)});
    std::sort(tagged.begin(), tagged.end());
    out.resolution.classes.assign(classes.size(), {});
    for (size_t i = 0; i < tagged.size(); ++i) {
        out.inc.blocks.push_back(tagged[i].first);
        out.resolution.classes[tagged[i].second].push_back(static_cast<int>(i));
    }
    return out;
}

design::IncidenceStructure config_20_4_16_5() {
    return design::dual(ag_design(4).inc);
}

design::IncidenceStructure pg32_line_design() {
    geom::ProjectiveSpace pg = geom::ProjectiveSpace::make(3, 2);
    design::IncidenceStructure inc;
    inc.v = pg.point_count();
    for (const auto& line : pg.lines()) inc.blocks.push_back(line.points);
    std::sort(inc.blocks.begin(), inc.blocks.end());
    return inc;
}

} // namespace pir::fixtures
