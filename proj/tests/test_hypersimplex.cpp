#include <doctest.h>

#include "plhyp/fixtures.hpp"
#include "plhyp/homology.hpp"
#include "plhyp/hypersimplex.hpp"
#include "plhyp/io.hpp"

using namespace plhyp;

TEST_CASE("identity hypersimplices validate in every dimension up to four") {
    for (int n = 0; n <= 4; ++n) {
        ValidationReport r = validate(identity_hypersimplex(n));
        CAPTURE(n);
        CHECK(r.overall() == CheckResult::pass);
        CHECK(r.valid());
    }
}

TEST_CASE("face preimages of the identity are the faces themselves") {
    HyperbolizedSimplex h = identity_hypersimplex(2);
    for (const auto& alpha : all_faces(2)) {
        Subcomplex xa = face_preimage(h, alpha);
        Subcomplex ta = h.t.face_restriction(alpha);
        CHECK(xa.as_complex().same_as(ta.as_complex()));
    }
}

TEST_CASE("zigzag: passes C0-C2, fails properness at the interior folds") {
    HyperbolizedSimplex z = zigzag_fixture();
    ValidationReport r = validate(z);
    CHECK(r.c0 == CheckResult::pass);
    CHECK(r.c1 == CheckResult::pass);
    CHECK(r.c2 == CheckResult::pass);
    CHECK(r.proper == CheckResult::fail);
    REQUIRE(r.proper_witness.has_value());
    // the first witness in enumeration order is the vertex b
    REQUIRE(r.proper_witness->size() == 1);
    CHECK(z.x->name((*r.proper_witness)[0]) == "b");

    CHECK(degree_mod2(z.f, true) == 1);

    Subcomplex e2 = face_preimage(z, {2});
    std::vector<VertexId> verts = e2.vertices();
    REQUIRE(verts.size() == 2);
    CHECK(z.x->name(verts[0]) == "b");
    CHECK(z.x->name(verts[1]) == "d");
    CHECK(e2.size() == 2);  // two isolated points
}

TEST_CASE("zigzag face recursion still holds at the degree level") {
    CHECK(check_face_recursion(zigzag_fixture()));
    CHECK(check_face_recursion(identity_hypersimplex(2)));
}

TEST_CASE("doubled triangle color pattern fails degree and properness") {
    ValidationReport r = validate(doubled_triangle_fixture());
    CHECK(r.c0 == CheckResult::pass);
    CHECK(r.c1 == CheckResult::fail);
    CHECK(r.proper == CheckResult::fail);
    // the properness failure already shows at a vertex
    REQUIRE(r.proper_witness.has_value());
    CHECK(r.proper_witness->size() == 1);
}

TEST_CASE("the folding map itself is not a hyperbolized simplex") {
    // six rainbow triangles fold onto the triangle: degree 6 = 0 mod 2
    FoldingMap fm = folding_map(delta_complex(2));
    HyperbolizedSimplex h;
    h.n = 2;
    h.t = fm.target;
    h.x = fm.kprime.complex;
    h.f = fm.underlying;
    ValidationReport r = validate(h);
    CHECK(r.c1 == CheckResult::fail);
    CHECK_FALSE(r.valid());
}

TEST_CASE("degree is rejected when the preimage parity is not constant") {
    // one triangle into the subdivided base covers one cell once, others never
    TriangulationOfDelta t = barycentric_triangulation(2);
    auto x = std::make_shared<Complex>(Complex::from_named_simplices({{"u", "v", "w"}}));
    Simplex cell = t.complex->simplices(2)[0];
    SimplicialMap f(x, t.complex, {cell[0], cell[1], cell[2]});
    CHECK_THROWS_AS((void)degree_mod2(f, true), std::runtime_error);
}

TEST_CASE("degenerate maps are rejected with a diagnostic") {
    TriangulationOfDelta t = trivial_triangulation(1);
    auto x = std::make_shared<Complex>(Complex::from_named_simplices({{"a", "b"}}));
    SimplicialMap degenerate(x, t.complex, {0, 0});
    CHECK_FALSE(degenerate.nondegenerate());
    HyperbolizedSimplex bad;
    bad.n = 1;
    bad.t = t;
    bad.x = x;
    bad.f = degenerate;
    ValidationReport r = validate(bad);
    CHECK_FALSE(r.valid());
    REQUIRE(!r.messages.empty());
    CHECK(r.messages[0].find("degenerate") != std::string::npos);
}

TEST_CASE("search over the trivial triangle finds nothing beyond the identity") {
    SearchResult r = search_toy_hypersimplex(2, 4, trivial_triangulation(2));
    CHECK_FALSE(r.found.has_value());
    CHECK_THROWS_AS((void)search_toy_hypersimplex(1, 4, trivial_triangulation(1)),
                    std::invalid_argument);
}

TEST_CASE("search over the barycentric triangle finds the 11-vertex fold disk") {
    TriangulationOfDelta t = barycentric_triangulation(2);
    SearchResult r = search_toy_hypersimplex(2, 11, t);
    REQUIRE(r.found.has_value());
    const HyperbolizedSimplex& h = *r.found;
    auto fv = h.x->f_vector();
    CHECK(fv == std::vector<int>{11, 20, 10});
    CHECK(euler_characteristic(*h.x) == 1);
    CHECK(is_disk2(*h.x));

    ValidationReport rep = validate(h);
    CHECK(rep.valid());                 // all of C0-C2 and properness
    CHECK_FALSE(h.f.is_isomorphism());  // genuinely not the identity

    // the fold makes it an honest degree-one map, not a covering
    OrientResult ox = orient(*h.x);
    OrientResult ot = orient(*h.t.complex);
    REQUIRE(ox.orientable);
    long long deg = degree_int(h.f, ox.orientation, ot.orientation);
    CHECK((deg == 1 || deg == -1));

    // below eleven vertices there is nothing
    CHECK_FALSE(search_toy_hypersimplex(2, 10, t).found.has_value());

    // deterministic: a second run reproduces the same complex
    SearchResult again = search_toy_hypersimplex(2, 11, t);
    REQUIRE(again.found.has_value());
    CHECK(hypersimplex_to_json(*again.found) == hypersimplex_to_json(h));

    // and it matches the committed fixture
    json frozen = load_json_file(std::string(PLHYP_FIXTURES_DIR) + "/hx_toy2.json");
    CHECK(frozen == hypersimplex_to_json(h));
}

TEST_CASE("the fold disk breaks the face-component recursion knowingly") {
    // its folded boundary arcs are not hyperbolized 1-simplices, so the
    // recursion diagnostic reports false even though the fixture is proper
    json frozen = load_json_file(std::string(PLHYP_FIXTURES_DIR) + "/hx_toy2.json");
    HyperbolizedSimplex h = hypersimplex_from_json(frozen);
    CHECK(validate(h).valid());
    CHECK_FALSE(check_face_recursion(h));
}

TEST_CASE("face components of the identity are hyperbolized simplices") {
    HyperbolizedSimplex h = identity_hypersimplex(2);
    for (const auto& alpha : all_faces(2)) {
        auto comps = face_components(h, alpha);
        REQUIRE(comps.size() == 1);
        HyperbolizedSimplex sub = face_component_restriction(h, alpha, 0);
        CHECK(sub.n == int(alpha.size()) - 1);
        CHECK(validate(sub).valid());
    }
}

TEST_CASE("improper search mode stays empty at tiny sizes") {
    // over the trivial triangle every improper candidate also breaks C0-C2
    SearchResult r = search_toy_hypersimplex(2, 4, trivial_triangulation(2), true);
    CHECK_FALSE(r.found.has_value());
}
