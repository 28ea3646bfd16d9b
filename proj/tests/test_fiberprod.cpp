#include <doctest.h>

#include "plhyp/fiberprod.hpp"
#include "plhyp/fixtures.hpp"
#include "plhyp/homology.hpp"
#include "plhyp/io.hpp"

using namespace plhyp;

namespace {

// the identity hyperbolization is canonically the barycentric subdivision:
// send each bK vertex through its provenance to the K' vertex it renames
bool identity_oracle_holds(const HyperbolizationResult& r) {
    const Complex& bk = *r.bK;
    const Complex& kp = *r.fold.kprime.complex;
    if (bk.vertex_count() != kp.vertex_count()) return false;
    std::vector<VertexId> vmap(bk.vertex_count());
    for (VertexId v = 0; v < bk.vertex_count(); ++v) {
        const Simplex& rho = r.base.kpp.carrier[r.h(v)];
        if (rho.size() != 1) return false;
        vmap[v] = rho[0];
    }
    if (!is_isomorphism_via(bk, kp, vmap)) return false;
    // h itself must be an isomorphism onto the refined base
    return r.h.is_isomorphism();
}

HyperbolizedSimplex load_toy2() {
    return hypersimplex_from_json(
        load_json_file(std::string(PLHYP_FIXTURES_DIR) + "/hx_toy2.json"));
}

}  // namespace

TEST_CASE("fiber product with the identity recovers the subdivision") {
    FoldingMap p = folding_map(delta_complex(1));
    HyperbolizedSimplex id1 = identity_hypersimplex(1);
    PullbackRefinement pr = pullback_refinement(p, id1.t);
    FiberProduct fp = fiber_product(pr.ppp, id1.f);
    CHECK(fp.complex->vertex_count() == 3);
    CHECK(fp.complex->simplices(1).size() == 2);
    CHECK(fp.proj_a.is_isomorphism());

    FoldingMap p2 = folding_map(boundary_delta(2));
    PullbackRefinement pr2 = pullback_refinement(p2, id1.t);
    FiberProduct fp2 = fiber_product(pr2.ppp, id1.f);
    CHECK(is_circle(*fp2.complex));
    CHECK(fp2.complex->vertex_count() == 6);
}

TEST_CASE("fiber product against the zigzag over the segment") {
    FoldingMap p = folding_map(delta_complex(1));
    HyperbolizedSimplex z = zigzag_fixture();
    PullbackRefinement pr = pullback_refinement(p, z.t);
    FiberProduct fp = fiber_product(pr.ppp, z.f);
    // two base vertices over e1 pair with {a, c}, one over e2 with {b, d}
    CHECK(fp.complex->vertex_count() == 6);
    CHECK(fp.complex->simplices(1).size() == 6);
}

TEST_CASE("bucketed fiber product agrees with the brute-force pair scan") {
    std::vector<std::pair<SimplicialMap, SimplicialMap>> cases;
    {
        FoldingMap p = folding_map(boundary_delta(2));
        HyperbolizedSimplex z = zigzag_fixture();
        PullbackRefinement pr = pullback_refinement(p, z.t);
        cases.push_back({pr.ppp, z.f});
    }
    {
        FoldingMap p = folding_map(torus7());
        HyperbolizedSimplex id2 = identity_hypersimplex(2);
        PullbackRefinement pr = pullback_refinement(p, id2.t);
        cases.push_back({pr.ppp, id2.f});
    }
    {
        FoldingMap p = folding_map(boundary_delta(3));
        HyperbolizedSimplex toy = load_toy2();
        PullbackRefinement pr = pullback_refinement(p, toy.t);
        cases.push_back({pr.ppp, toy.f});
    }
    for (const auto& [pa, pb] : cases) {
        FiberProduct fast = fiber_product(pa, pb);
        FiberProduct slow = reference::fiber_product_serial(pa, pb);
        CHECK(fast.complex->same_as(*slow.complex));
        CHECK(fast.proj_a.vertex_map() == slow.proj_a.vertex_map());
        CHECK(fast.proj_b.vertex_map() == slow.proj_b.vertex_map());
    }
}

TEST_CASE("local product count: top cells multiply over each base cell") {
    FoldingMap p = folding_map(boundary_delta(3));
    HyperbolizedSimplex toy = load_toy2();
    PullbackRefinement pr = pullback_refinement(p, toy.t);
    FiberProduct fp = fiber_product(pr.ppp, toy.f);
    const int n = 2;
    std::size_t expected = 0;
    for (const Simplex& cell : toy.t.complex->simplices(n)) {
        std::size_t over_a = 0, over_b = 0;
        for (const Simplex& s : pr.kpp.complex->simplices(n)) {
            over_a += pr.ppp.image(s) == cell;
        }
        for (const Simplex& s : toy.x->simplices(n)) {
            over_b += toy.f.image(s) == cell;
        }
        expected += over_a * over_b;
    }
    CHECK(fp.complex->simplices(n).size() == expected);
}

TEST_CASE("identity hyperbolization oracle on all fixtures") {
    for (ComplexPtr k :
         {delta_complex(1), boundary_delta(2), boundary_delta(3), torus7(), rp2_6()}) {
        HyperbolizationResult r = hyperbolize(k, identity_hypersimplex(k->dim()));
        CAPTURE(k->vertex_count());
        CHECK(identity_oracle_holds(r));
        CHECK(verify_pi0(r));
        CHECK(verify_one_skeleton(r));
    }
}

TEST_CASE("hyperbolize refuses invalid input unless forced") {
    ComplexPtr circle = boundary_delta(2);
    CHECK_THROWS_AS((void)hyperbolize(circle, zigzag_fixture()), ValidationRefused);
    CHECK_THROWS_AS((void)hyperbolize(circle, identity_hypersimplex(2)),
                    std::invalid_argument);  // dimension mismatch
    CHECK_NOTHROW((void)hyperbolize(circle, zigzag_fixture(), true));
}

TEST_CASE("forced zigzag hyperbolization exhibits the failure") {
    HyperbolizationResult r = hyperbolize(boundary_delta(2), zigzag_fixture(), true);
    auto fv = r.bK->f_vector();
    CHECK(fv == std::vector<int>{12, 18});
    CHECK(r.bK->component_count() == 1);
    CHECK(is_manifold(*r.bK) == Trivalent::no);
    CHECK_FALSE(verify_one_skeleton(r));
    std::vector<int> deg(r.bK->vertex_count(), 0);
    for (const Simplex& e : r.bK->simplices(1)) {
        ++deg[e[0]];
        ++deg[e[1]];
    }
    int deg2 = 0, deg4 = 0;
    for (int d : deg) {
        deg2 += d == 2;
        deg4 += d == 4;
    }
    CHECK(deg2 == 6);
    CHECK(deg4 == 6);  // six branch vertices instead of a circle
}

TEST_CASE("forced doubled-triangle hyperbolization is not a manifold") {
    HyperbolizationResult r =
        hyperbolize(boundary_delta(3), doubled_triangle_fixture(), true);
    CHECK(is_manifold(*r.bK) == Trivalent::no);
    // a witness vertex with a non-circle link exists
    bool witness = false;
    for (VertexId v = 0; v < r.bK->vertex_count() && !witness; ++v) {
        Complex lk = link(r.bK, {v});
        witness = !is_circle(lk) && !is_arc(lk);
    }
    CHECK(witness);
    LinkReport links = verify_links(r);
    CHECK_FALSE(links.all_match);
    CHECK(links.failures.size() > 0);
}

TEST_CASE("toy2 hyperbolization of the 2-sphere is a genus-8 surface") {
    HyperbolizationResult r = hyperbolize(boundary_delta(3), load_toy2());
    auto fv = r.bK->f_vector();
    CHECK(fv == std::vector<int>{106, 360, 240});
    CHECK(euler_characteristic(*r.bK) == -14);
    CHECK(is_manifold(*r.bK) == Trivalent::yes);
    CHECK(verify_pi0(r));
    // edge preimages of the fold disk are not single arcs, so the one-skeleton
    // is a genuine covering rather than an isomorphism
    CHECK_FALSE(verify_one_skeleton(r));
    HomologyGroups h = homology(*r.bK, Coeff::Z);
    CHECK(h.betti == std::vector<int>{1, 16, 1});
    CHECK(h.torsion[1].empty());
    CHECK(is_surjective_on_homology(r.h, Coeff::Z));
    CHECK(is_surjective_on_homology(r.h, Coeff::Z2));
    CHECK(is_surjective_on_homology(r.h, Coeff::Q));
    LinkReport links = verify_links(r);
    CHECK(links.all_match);
    CHECK_FALSE(links.full_isomorphism_mode);
}

TEST_CASE("restriction over a full subcomplex") {
    ComplexPtr k = boundary_delta(3);
    HyperbolizationResult r = hyperbolize(k, identity_hypersimplex(2));

    SUBCASE("the whole complex restricts to everything") {
        Restriction whole = restrict_over_subcomplex(r, Subcomplex::whole(k));
        CHECK(whole.bL.size() == r.bK->size());
    }
    SUBCASE("a vertex restricts to a single vertex") {
        Subcomplex v(k, std::vector<Simplex>{{0}});
        Restriction rv = restrict_over_subcomplex(r, v);
        CHECK(rv.bL_complex->size() == 1);
        CHECK(rv.bL_complex->vertex_count() == 1);
    }
    SUBCASE("non-full subcomplexes are rejected") {
        Subcomplex cyc(k, std::vector<Simplex>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
        CHECK_THROWS_AS((void)restrict_over_subcomplex(r, cyc), std::invalid_argument);
    }
}

TEST_CASE("restriction is exactly the preimage of the refined subcomplex") {
    ComplexPtr k = boundary_delta(3);
    HyperbolizationResult r = hyperbolize(k, load_toy2());
    Subcomplex edge(k, std::vector<Simplex>{{0}, {1}, {0, 1}});
    Restriction restr = restrict_over_subcomplex(r, edge);
    for (const Simplex& s : r.bK->all_simplices()) {
        CHECK(restr.bL.contains(s) == restr.refined_l.contains(r.h.image(s)));
    }
}

TEST_CASE("restriction equals the union of component hyperbolizations") {
    // hyperbolize the derived sphere so the 12-gon spine is full, then compare
    // h^{-1}(L) with the direct hyperbolization of L by the edge components
    DerivedComplex kd = barycentric(boundary_delta(3));
    ComplexPtr k1 = kd.complex;
    Subcomplex cyc(kd.parent, std::vector<Simplex>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
    Subcomplex l = derived_image(kd, cyc);
    REQUIRE(is_full(*k1, l));

    HyperbolizedSimplex toy = load_toy2();
    HyperbolizationResult r = hyperbolize(k1, toy);
    Restriction restr = restrict_over_subcomplex(r, l);

    // the spine is one-dimensional: it lives over the e1-e2 edge of Delta
    auto comps = face_components(toy, {1, 2});
    REQUIRE(comps.size() == 1);  // a single clean arc over this edge
    HyperbolizedSimplex edge_part = face_component_restriction(toy, {1, 2}, 0);
    CHECK(validate(edge_part).valid());

    auto l_complex = std::make_shared<Complex>(l.as_complex());
    HyperbolizationResult direct = hyperbolize(l_complex, edge_part);
    CHECK(restr.bL_complex->same_as(*direct.bK));
}

TEST_CASE("closed three-manifolds hyperbolize to closed three-manifolds") {
    // identity hyperbolization of the boundary 4-sphere: a 120-cell subdivision
    HyperbolizationResult r = hyperbolize(boundary_delta(4), identity_hypersimplex(3));
    CHECK(r.bK->simplices(3).size() == 120);
    CHECK(is_manifold(*r.bK) == Trivalent::yes);
    CHECK(verify_pi0(r));
    CHECK(verify_one_skeleton(r));
}

TEST_CASE("pi0 matches over disconnected complexes") {
    HyperbolizationResult r =
        hyperbolize(two_disjoint_triangles(), identity_hypersimplex(2));
    CHECK(r.bK->component_count() == 2);
    CHECK(verify_pi0(r));
}

TEST_CASE("link battery in identity mode demands isomorphisms") {
    for (ComplexPtr k : {boundary_delta(3), torus7()}) {
        HyperbolizationResult r = hyperbolize(k, identity_hypersimplex(2));
        LinkReport links = verify_links(r);
        CHECK(links.full_isomorphism_mode);
        CHECK(links.all_match);
        CHECK(links.vertices_checked == r.bK->vertex_count());
    }
}
