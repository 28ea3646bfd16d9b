#include "plhyp/regneigh.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "plhyp/homology.hpp"

namespace plhyp {

Subcomplex closed_star(const ComplexPtr& ambient, const std::vector<VertexId>& verts) {
    std::vector<char> in(ambient->vertex_count(), 0);
    for (VertexId v : verts) in[v] = 1;
    SimplexSet set;
    for (const Simplex& s : ambient->all_simplices()) {
        bool meets = false;
        for (VertexId v : s) {
            if (in[v]) { meets = true; break; }
        }
        if (!meets) continue;
        const std::size_t n = s.size();
        for (std::uint32_t sub = 1; sub < (1u << n); ++sub) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i) {
                if (sub & (1u << i)) face.push_back(s[i]);
            }
            set.insert(std::move(face));
        }
    }
    return Subcomplex(ambient, set);
}

RegularNeighborhood regular_neighborhood_in(const SecondDerived& derived,
                                            const Subcomplex& l) {
    RegularNeighborhood rn;
    rn.derived = derived;
    const ComplexPtr& k = derived.first.parent;
    if (l.ambient() != k) {
        throw std::invalid_argument("regular_neighborhood: subcomplex not over the ambient complex");
    }
    if (l.size() == 0) {
        throw std::invalid_argument("regular_neighborhood: empty core");
    }
    Trivalent m = is_manifold(*k);
    if (m == Trivalent::no) {
        throw std::invalid_argument("regular_neighborhood: ambient complex is not a manifold");
    }
    if (m == Trivalent::unknown) {
        rn.warnings.push_back("ambient manifold status unknown; neighborhood is uncertified");
    }
    rn.core = derived_image(rn.derived.second, derived_image(rn.derived.first, l));
    rn.nbhd = closed_star(rn.derived.second.complex, rn.core.vertices());
    Subcomplex nbhd_bd = boundary_of(rn.nbhd);
    Subcomplex ambient_bd = boundary_subcomplex(rn.derived.second.complex);
    rn.frontier = subcomplex_difference(nbhd_bd, ambient_bd);
    return rn;
}

RegularNeighborhood regular_neighborhood(const ComplexPtr& k, const Subcomplex& l) {
    return regular_neighborhood_in(second_derived(k), l);
}

// ------------------------------------------------------------------ collapse

namespace {

struct LexDimLess {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

}  // namespace

CollapseCertificate greedy_collapse_to(const Subcomplex& nbhd, const Subcomplex& core) {
    CollapseCertificate cert;
    std::vector<Simplex> simplices = nbhd.simplices();
    SimplexSet current(simplices.begin(), simplices.end());
    SimplexSet core_set;
    for (const Simplex& s : core.simplices()) {
        if (!current.count(s)) {
            throw std::invalid_argument("greedy_collapse_to: core is not inside the subcomplex");
        }
        core_set.insert(s);
    }

    // number of proper cofaces inside `current`, per simplex
    std::unordered_map<Simplex, int, SimplexHash> coface_count;
    for (const Simplex& s : current) coface_count[s] = 0;
    for (const Simplex& s : current) {
        const std::size_t n = s.size();
        if (n < 2) continue;
        for (std::uint32_t sub = 1; sub + 1 < (1u << n); ++sub) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i) {
                if (sub & (1u << i)) face.push_back(s[i]);
            }
            ++coface_count[face];
        }
    }

    auto unique_top_coface = [&](const Simplex& s) -> Simplex {
        // the unique proper coface of a free face is one dimension up
        for (std::uint32_t k : nbhd.ambient()->star_of_vertex(s[0])) {
            const Simplex& t = nbhd.ambient()->all_simplices()[k];
            if (t.size() == s.size() + 1 && current.count(t) && is_face(s, t)) return t;
        }
        throw std::logic_error("free face without coface");
    };

    std::set<Simplex, LexDimLess> candidates;
    for (const Simplex& s : current) {
        if (coface_count[s] == 1 && !core_set.count(s)) candidates.insert(s);
    }

    auto decrement_faces = [&](const Simplex& t) {
        const std::size_t n = t.size();
        if (n < 2) return;
        for (std::uint32_t sub = 1; sub + 1 < (1u << n); ++sub) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i) {
                if (sub & (1u << i)) face.push_back(t[i]);
            }
            auto it = coface_count.find(face);
            if (it == coface_count.end() || !current.count(face)) continue;
            --it->second;
            if (it->second == 1 && !core_set.count(face)) candidates.insert(face);
            else candidates.erase(face);
        }
    };

    while (!candidates.empty()) {
        Simplex sigma = *candidates.begin();
        candidates.erase(candidates.begin());
        if (!current.count(sigma) || coface_count[sigma] != 1) continue;
        Simplex tau = unique_top_coface(sigma);
        current.erase(sigma);
        current.erase(tau);
        decrement_faces(tau);
        decrement_faces(sigma);
        cert.steps.push_back({sigma, tau});
    }
    cert.complete = current.size() == core_set.size();
    return cert;
}

bool replay_collapse(const Subcomplex& nbhd, const Subcomplex& core,
                     const CollapseCertificate& cert) {
    std::vector<Simplex> simplices = nbhd.simplices();
    SimplexSet current(simplices.begin(), simplices.end());
    SimplexSet core_set;
    for (const Simplex& s : core.simplices()) core_set.insert(s);
    for (const auto& [sigma, tau] : cert.steps) {
        if (!current.count(sigma) || !current.count(tau)) return false;
        if (core_set.count(sigma) || core_set.count(tau)) return false;
        if (tau.size() != sigma.size() + 1 || !is_face(sigma, tau)) return false;
        // sigma must be free: tau is its only proper coface at this step
        int cofaces = 0;
        for (const Simplex& t : current) {
            if (t.size() > sigma.size() && is_face(sigma, t)) ++cofaces;
        }
        if (cofaces != 1) return false;
        current.erase(sigma);
        current.erase(tau);
    }
    if (!cert.complete) return true;
    if (current.size() != core_set.size()) return false;
    for (const Simplex& s : current) {
        if (!core_set.count(s)) return false;
    }
    return true;
}

// ------------------------------------------------------------ pullback check

namespace {

void push_check(PullbackReport& r, const std::string& name, bool ok,
                const std::string& note = "") {
    r.checks.push_back({name, ok, note});
    if (!ok && r.failed_at.empty()) r.failed_at = name;
}

HomologyGroups subcomplex_homology(const Subcomplex& s) {
    return homology(s.as_complex(), Coeff::Z);
}

}  // namespace

PullbackReport verify_pullback(const ComplexPtr& k_in, const Subcomplex& l_in,
                               const HyperbolizedSimplex& hs, bool force) {
    PullbackReport report;
    ComplexPtr k = k_in;
    Subcomplex l = l_in;

    if (!is_full(*k, l)) {
        // fullification: one barycentric subdivision makes any subcomplex full
        DerivedComplex kd = barycentric(k);
        l = derived_image(kd, l);
        k = kd.complex;
        report.fullified = true;
    }

    push_check(report, "K is a closed manifold",
               is_manifold(*k) != Trivalent::no && boundary_subcomplex(k).size() == 0);
    Complex lc = l.as_complex();
    bool l_boundaryless = boundary_of(l).size() == 0;
    push_check(report, "L is a submanifold",
               !lc.empty() && is_manifold(lc) != Trivalent::no,
               l_boundaryless ? "" : "L has boundary: running the battery anyway");
    push_check(report, "dimension match", k->dim() == hs.n);
    ValidationReport hs_report = validate(hs);
    push_check(report, "hyperbolized simplex valid",
               hs_report.valid() || force,
               hs_report.valid() ? "" : "forced run with an invalid hyperbolized simplex");
    if (!report.failed_at.empty()) return report;

    HyperbolizationResult r = hyperbolize(k, hs, force);
    Restriction restriction = restrict_over_subcomplex(r, l);

    push_check(report, "bK is a manifold", is_manifold(*r.bK) != Trivalent::no);
    bool bl_boundaryless = boundary_of(restriction.bL).size() == 0;
    push_check(report, "bL is a submanifold",
               restriction.bL.size() > 0 &&
                   is_manifold(*restriction.bL_complex) != Trivalent::no,
               bl_boundaryless ? "" : "bL has boundary");
    if (!report.failed_at.empty()) return report;

    // regular neighborhood of L downstairs, in the refined base K''
    RegularNeighborhood n_base = regular_neighborhood(r.base.kpp.complex, restriction.refined_l);

    // pull it back through the second-derived subdivisions via h
    SecondDerived bk_derived = second_derived(r.bK);
    SimplicialMap h_prime = derived_map(r.h, bk_derived.first, n_base.derived.first);
    SimplicialMap h_second = derived_map(h_prime, bk_derived.second, n_base.derived.second);

    SimplexSet pullback_set;
    for (const Simplex& s : bk_derived.second.complex->all_simplices()) {
        if (n_base.nbhd.contains(h_second.image(s))) pullback_set.insert(s);
    }
    Subcomplex pullback(bk_derived.second.complex, pullback_set);
    report.pullback_size = pullback.size();

    Subcomplex spine = derived_image(bk_derived.second,
                                     derived_image(bk_derived.first, restriction.bL));

    // (a) the pullback contains the hyperbolized spine
    bool contains_spine = true;
    for (const Simplex& s : spine.simplices()) {
        if (!pullback.contains(s)) { contains_spine = false; break; }
    }
    push_check(report, "pullback contains the hyperbolized spine", contains_spine);

    // (b) pure manifold-with-boundary of full dimension
    Complex pc = pullback.as_complex();
    report.pullback_euler = euler_characteristic(pc);
    push_check(report, "pullback is a pure manifold with boundary",
               pc.dim() == r.bK->dim() && pc.is_pure() && is_manifold(pc) != Trivalent::no);

    // (c) collapses onto the spine
    CollapseCertificate collapse = greedy_collapse_to(pullback, spine);
    push_check(report, "pullback collapses to the spine", collapse.complete);

    // (d) invariants match the directly computed regular neighborhood of bL
    RegularNeighborhood n_direct = regular_neighborhood_in(bk_derived, restriction.bL);
    HomologyGroups h_pullback = subcomplex_homology(pullback);
    HomologyGroups h_direct = subcomplex_homology(n_direct.nbhd);
    push_check(report, "homology matches the direct regular neighborhood",
               h_pullback == h_direct);
    HomologyGroups h_spine = subcomplex_homology(spine);
    push_check(report, "neighborhood has the homology of its spine", h_pullback == h_spine);

    Complex frontier_p = subcomplex_difference(boundary_of(pullback),
                                               boundary_subcomplex(bk_derived.second.complex))
                              .as_complex();
    Complex frontier_d = n_direct.frontier.as_complex();
    report.frontier_components = frontier_p.component_count();
    bool frontier_ok = frontier_p.component_count() == frontier_d.component_count() &&
                       euler_characteristic(frontier_p) == euler_characteristic(frontier_d) &&
                       homology(frontier_p, Coeff::Z) == homology(frontier_d, Coeff::Z);
    push_check(report, "frontier invariants match", frontier_ok);

    report.ok = report.failed_at.empty();
    return report;
}

}  // namespace plhyp
