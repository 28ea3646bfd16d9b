#include "plhyp/fixtures.hpp"

#include <stdexcept>
#include <string>

namespace plhyp {

namespace {

std::vector<std::string> numeric_names(int count) {
    std::vector<std::string> names;
    for (int i = 0; i < count; ++i) names.push_back(std::to_string(i));
    return names;
}

}  // namespace

ComplexPtr delta_complex(int n) {
    if (n < 0) throw std::invalid_argument("delta_complex: negative dimension");
    Simplex top;
    for (int i = 0; i <= n; ++i) top.push_back(VertexId(i));
    return std::make_shared<Complex>(Complex::from_simplices(numeric_names(n + 1), {top}));
}

ComplexPtr boundary_delta(int n) {
    if (n < 1) throw std::invalid_argument("boundary_delta: dimension must be >= 1");
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= n; ++skip) {
        Simplex f;
        for (int i = 0; i <= n; ++i) {
            if (i != skip) f.push_back(VertexId(i));
        }
        facets.push_back(f);
    }
    return std::make_shared<Complex>(Complex::from_simplices(numeric_names(n + 1), facets));
}

ComplexPtr torus7() {
    std::vector<Simplex> tris;
    for (VertexId i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return std::make_shared<Complex>(Complex::from_simplices(numeric_names(7), tris));
}

ComplexPtr rp2_6() {
    // the hemi-icosahedron
    std::vector<std::vector<std::string>> tris = {
        {"1", "2", "5"}, {"1", "2", "6"}, {"1", "3", "4"}, {"1", "3", "6"},
        {"1", "4", "5"}, {"2", "3", "4"}, {"2", "3", "5"}, {"2", "4", "6"},
        {"3", "5", "6"}, {"4", "5", "6"}};
    return std::make_shared<Complex>(Complex::from_named_simplices(tris));
}

ComplexPtr two_triangles_wedge() {
    return std::make_shared<Complex>(Complex::from_named_simplices(
        {{"a", "b", "w"}, {"c", "d", "w"}}));
}

ComplexPtr two_disjoint_triangles() {
    return std::make_shared<Complex>(Complex::from_named_simplices(
        {{"a", "b", "c"}, {"p", "q", "r"}}));
}

}  // namespace plhyp
