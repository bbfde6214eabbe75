// Regenerates the fixtures/ directory: named graphs and the planted
// pipeline-branch instances, written as sorted edge lists.

#include <cstdio>
#include <string>

#include "chibound/gen.hpp"
#include "chibound/graph.hpp"
#include "chibound/io.hpp"

using namespace chibound;

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";
    auto put = [&](const std::string& name, const Graph& g) {
        std::string path = dir + "/" + name + ".edges";
        io::write_file(g, path);
        std::printf("%s: n=%d m=%lld\n", path.c_str(), g.vertex_count(), g.edge_count());
    };
    put("bull", named::bull());
    put("diamond", named::diamond());
    put("paw", named::paw());
    put("grotzsch", named::grotzsch());
    put("c5", named::cycle(5));
    put("c7", named::cycle(7));
    put("k4", named::complete(4));
    put("prism3", named::prism(3));
    put("prism4", named::prism(4));
    put("prism5", named::prism(5));
    put("k33", named::complete_bipartite(3, 3));
    for (PlantKind kind : {PlantKind::lemma31_two_part, PlantKind::lemma31_single_part,
                           PlantKind::lemma31_prism, PlantKind::extension_branch, PlantKind::p6_case1,
                           PlantKind::p6_case2, PlantKind::p7_layers})
        put("planted_" + plant_name(kind), planted_instance(kind));
    return 0;
}
