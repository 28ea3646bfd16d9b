// Regenerates the committed fixtures. The toy hypersimplex comes out of the
// deterministic search, so rerunning this tool reproduces the files exactly.

#include <cstdio>
#include <string>

#include "plhyp/fixtures.hpp"
#include "plhyp/hypersimplex.hpp"
#include "plhyp/io.hpp"

using namespace plhyp;

namespace {

void write(const std::string& dir, const std::string& name, const json& j) {
    save_text_file(dir + "/" + name, j.dump(2) + "\n");
    std::printf("wrote %s/%s\n", dir.c_str(), name.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";

    write(dir, "k_delta1.json", complex_to_json(*delta_complex(1)));
    write(dir, "k_boundary_delta2.json", complex_to_json(*boundary_delta(2)));
    write(dir, "k_boundary_delta3.json", complex_to_json(*boundary_delta(3)));
    write(dir, "k_torus7.json", complex_to_json(*torus7()));
    write(dir, "k_rp2_6.json", complex_to_json(*rp2_6()));

    // spines inside the boundary of the tetrahedron (names match k_* fixtures)
    write(dir, "l_vertex.json",
          json{{"vertices", {0}}, {"simplices", json::array({json::array({0})})}});
    write(dir, "l_edge.json", json{{"vertices", {0, 1}}, {"simplices", {{0, 1}}}});
    write(dir, "l_cycle3.json",
          json{{"vertices", {0, 1, 2}}, {"simplices", {{0, 1}, {0, 2}, {1, 2}}}});

    for (int n = 0; n <= 3; ++n) {
        write(dir, "hx_id_" + std::to_string(n) + ".json",
              hypersimplex_to_json(identity_hypersimplex(n)));
    }
    write(dir, "hx_zigzag.json", hypersimplex_to_json(zigzag_fixture()));
    write(dir, "hx_doubled_triangle.json", hypersimplex_to_json(doubled_triangle_fixture()));

    SearchResult toy = search_toy_hypersimplex(2, 11, barycentric_triangulation(2));
    if (!toy.found) {
        std::fprintf(stderr, "toy hypersimplex search came up empty\n");
        return 1;
    }
    auto fv = toy.found->x->f_vector();
    std::printf("toy hypersimplex: %d vertices, %d edges, %d triangles\n", fv[0], fv[1],
                fv[2]);
    write(dir, "hx_toy2.json", hypersimplex_to_json(*toy.found));
    return 0;
}
