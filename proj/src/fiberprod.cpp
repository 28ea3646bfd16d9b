#include "plhyp/fiberprod.hpp"

#include <algorithm>
#include <stdexcept>

#include "plhyp/homology.hpp"
#include "plhyp/names.hpp"
#include "plhyp/parallel.hpp"

namespace plhyp {

namespace {

void check_factors(const SimplicialMap& pa, const SimplicialMap& pb) {
    if (!pa.nondegenerate() || !pb.nondegenerate()) {
        throw std::invalid_argument("fiber product: both factors must be nondegenerate");
    }
    if (pa.target() != pb.target()) {
        const Complex& ta = *pa.target();
        const Complex& tb = *pb.target();
        if (!(ta.vertex_names() == tb.vertex_names() && ta.same_as(tb))) {
            throw std::invalid_argument("fiber product: factors map into different bases");
        }
    }
}

struct PairTable {
    // matched vertex pairs (a, b) with pa(a) = pb(b), created in deterministic
    // order: base vertex ascending, then a, then b
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::vector<std::string> names;
    std::unordered_map<std::uint64_t, VertexId> index;

    static std::uint64_t key(VertexId a, VertexId b) {
        return (std::uint64_t(a) << 32) | b;
    }

    VertexId at(VertexId a, VertexId b) const { return index.at(key(a, b)); }
};

PairTable build_pairs(const SimplicialMap& pa, const SimplicialMap& pb) {
    const Complex& a = *pa.source();
    const Complex& b = *pb.source();
    const Complex& t = *pa.target();
    std::vector<std::vector<VertexId>> over_a(t.vertex_count()), over_b(t.vertex_count());
    for (VertexId v = 0; v < a.vertex_count(); ++v) over_a[pa(v)].push_back(v);
    for (VertexId v = 0; v < b.vertex_count(); ++v) over_b[pb(v)].push_back(v);
    PairTable table;
    for (VertexId w = 0; w < t.vertex_count(); ++w) {
        for (VertexId va : over_a[w]) {
            for (VertexId vb : over_b[w]) {
                table.index.emplace(PairTable::key(va, vb), VertexId(table.pairs.size()));
                table.pairs.push_back({va, vb});
                table.names.push_back(mint_pair(a.name(va), b.name(vb)));
            }
        }
    }
    return table;
}

FiberProduct assemble(const SimplicialMap& pa, const SimplicialMap& pb,
                      PairTable table, SimplexSet simplices) {
    FiberProduct fp;
    fp.complex = std::make_shared<Complex>(
        Complex::from_closed_set(std::move(table.names), std::move(simplices)));
    std::vector<VertexId> va(table.pairs.size()), vb(table.pairs.size());
    for (VertexId v = 0; v < table.pairs.size(); ++v) {
        va[v] = table.pairs[v].first;
        vb[v] = table.pairs[v].second;
    }
    fp.proj_a = SimplicialMap(fp.complex, pa.source(), std::move(va));
    fp.proj_b = SimplicialMap(fp.complex, pb.source(), std::move(vb));
    return fp;
}

// matched simplex over a base cell from sigma in A and tau in B, both mapping
// isomorphically onto the cell
Simplex matched_simplex(const SimplicialMap& pa, const SimplicialMap& pb,
                        const PairTable& table, const Simplex& sigma,
                        const Simplex& tau) {
    Simplex out;
    out.reserve(sigma.size());
    // invert both restrictions through the base cell
    for (VertexId va : sigma) {
        VertexId w = pa(va);
        for (VertexId vb : tau) {
            if (pb(vb) == w) {
                out.push_back(table.at(va, vb));
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

namespace reference {

FiberProduct fiber_product_serial(const SimplicialMap& pa, const SimplicialMap& pb) {
    check_factors(pa, pb);
    PairTable table = build_pairs(pa, pb);
    const Complex& a = *pa.source();
    const Complex& b = *pb.source();
    SimplexSet simplices;
    for (const Simplex& sigma : a.all_simplices()) {
        Simplex ia = pa.image(sigma);
        for (const Simplex& tau : b.all_simplices()) {
            if (tau.size() != sigma.size()) continue;
            if (pb.image(tau) != ia) continue;
            simplices.insert(matched_simplex(pa, pb, table, sigma, tau));
        }
    }
    return assemble(pa, pb, std::move(table), std::move(simplices));
}

}  // namespace reference

FiberProduct fiber_product(const SimplicialMap& pa, const SimplicialMap& pb) {
    check_factors(pa, pb);
    PairTable table = build_pairs(pa, pb);
    const Complex& a = *pa.source();
    const Complex& b = *pb.source();
    const Complex& t = *pa.target();

    // bucket the factor simplices by their base cell
    std::unordered_map<Simplex, std::pair<std::vector<const Simplex*>,
                                          std::vector<const Simplex*>>, SimplexHash>
        buckets;
    for (const Simplex& sigma : a.all_simplices()) buckets[pa.image(sigma)].first.push_back(&sigma);
    for (const Simplex& tau : b.all_simplices()) buckets[pb.image(tau)].second.push_back(&tau);

    const auto& cells = t.all_simplices();
    const int threads = thread_count();
    std::vector<SimplexSet> partial;
    partial.resize(std::size_t(threads));

#pragma omp parallel num_threads(threads)
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        SimplexSet& mine = partial[std::size_t(tid)];
#pragma omp for schedule(dynamic, 8)
        for (std::int64_t i = 0; i < std::int64_t(cells.size()); ++i) {
            auto it = buckets.find(cells[std::size_t(i)]);
            if (it == buckets.end()) continue;
            for (const Simplex* sigma : it->second.first) {
                for (const Simplex* tau : it->second.second) {
                    mine.insert(matched_simplex(pa, pb, table, *sigma, *tau));
                }
            }
        }
    }
    SimplexSet simplices = std::move(partial[0]);
    for (std::size_t k = 1; k < partial.size(); ++k) simplices.merge(partial[k]);
    return assemble(pa, pb, std::move(table), std::move(simplices));
}

// ---------------------------------------------------------------- hyperbolize

HyperbolizationResult hyperbolize(const ComplexPtr& k, const HyperbolizedSimplex& hs,
                                  bool force) {
    if (k->dim() != hs.n) {
        throw std::invalid_argument("hyperbolize: dim K must equal the hypersimplex dimension");
    }
    HyperbolizationResult r;
    r.hs = hs;
    r.hs_report = validate(hs);
    if (!r.hs_report.valid() && !force) {
        std::string why = "hyperbolized simplex failed validation";
        for (const auto& m : r.hs_report.messages) why += "; " + m;
        throw ValidationRefused(why);
    }
    r.fold = folding_map(k);
    r.base = pullback_refinement(r.fold, hs.t);
    FiberProduct fp = fiber_product(r.base.ppp, hs.f);
    r.bK = fp.complex;
    r.h = fp.proj_a;
    r.proj_x = fp.proj_b;
    return r;
}

Restriction restrict_over_subcomplex(const HyperbolizationResult& r, const Subcomplex& l) {
    if (l.ambient() != r.fold.kprime.parent) {
        throw std::invalid_argument("restrict: subcomplex is not over the hyperbolized complex");
    }
    if (!is_full(*l.ambient(), l)) {
        throw std::invalid_argument("restrict: subcomplex must be full");
    }
    Restriction out;
    Subcomplex l_prime = derived_image(r.fold.kprime, l);

    // refined copy of L in K'': vertices whose K'-carrier lies in L'
    std::vector<VertexId> kpp_verts;
    for (VertexId v = 0; v < r.base.kpp.carrier.size(); ++v) {
        if (l_prime.contains(r.base.kpp.carrier[v])) kpp_verts.push_back(v);
    }
    out.refined_l = Subcomplex::full_on_vertices(r.base.kpp.complex, kpp_verts);

    std::vector<VertexId> bk_verts;
    for (VertexId v = 0; v < r.bK->vertex_count(); ++v) {
        if (out.refined_l.contains({r.h(v)})) bk_verts.push_back(v);
    }
    out.bL = Subcomplex::full_on_vertices(r.bK, bk_verts);
    out.bL_complex = std::make_shared<Complex>(out.bL.as_complex());
    return out;
}

bool verify_one_skeleton(const HyperbolizationResult& r) {
    const Complex& bk = *r.bK;
    const Complex& base = *r.base.kpp.complex;
    if (bk.vertex_count() != base.vertex_count()) return false;
    std::vector<char> hit(base.vertex_count(), 0);
    for (VertexId v = 0; v < bk.vertex_count(); ++v) {
        VertexId w = r.h(v);
        if (hit[w]) return false;
        hit[w] = 1;
    }
    return bk.simplices(1).size() == base.simplices(1).size();
}

bool verify_pi0(const HyperbolizationResult& r) {
    const Complex& bk = *r.bK;
    const Complex& base = *r.base.kpp.complex;
    auto cb = bk.vertex_components();
    auto ck = base.vertex_components();
    const int nb = bk.component_count();
    const int nk = base.component_count();
    if (nb != nk) return false;
    std::vector<int> image(std::size_t(nb), -1);
    for (VertexId v = 0; v < bk.vertex_count(); ++v) {
        int from = cb[v];
        int to = ck[r.h(v)];
        if (image[std::size_t(from)] < 0) image[std::size_t(from)] = to;
        else if (image[std::size_t(from)] != to) return false;
    }
    std::vector<char> hit(std::size_t(nk), 0);
    for (int to : image) {
        if (to < 0 || hit[std::size_t(to)]) return false;
        hit[std::size_t(to)] = 1;
    }
    return true;
}

namespace {

bool links_equivalent(const Complex& lx, const Complex& ly, std::string* note) {
    if (lx.component_count() != ly.component_count()) {
        *note = "component counts differ";
        return false;
    }
    if (euler_characteristic(lx) != euler_characteristic(ly)) {
        *note = "Euler characteristics differ";
        return false;
    }
    if (lx.dim() != ly.dim()) {
        *note = "dimensions differ";
        return false;
    }
    if (!(homology(lx, Coeff::Z) == homology(ly, Coeff::Z))) {
        *note = "integral homology differs";
        return false;
    }
    if (lx.dim() <= 1) {
        if (is_circle(lx) != is_circle(ly) || is_arc(lx) != is_arc(ly)) {
            *note = "curve classification differs";
            return false;
        }
    } else if (lx.dim() == 2) {
        if (is_sphere2(lx) != is_sphere2(ly) || is_disk2(lx) != is_disk2(ly)) {
            *note = "surface classification differs";
            return false;
        }
        if (is_pseudomanifold(lx) && is_pseudomanifold(ly)) {
            if (orient(lx).orientable != orient(ly).orientable) {
                *note = "orientability differs";
                return false;
            }
        }
    }
    return true;
}

}  // namespace

LinkReport verify_links(const HyperbolizationResult& r) {
    LinkReport report;
    report.full_isomorphism_mode = r.hs.f.is_isomorphism();
    const Complex& bk = *r.bK;
    const Complex& base = *r.base.kpp.complex;
    report.all_match = true;
    for (VertexId v = 0; v < bk.vertex_count(); ++v) {
        VertexId w = r.h(v);
        Complex lv = link(r.bK, {v});
        Complex lw = link(r.base.kpp.complex, {w});
        ++report.vertices_checked;
        VertexLinkCheck check;
        check.bk_vertex = bk.name(v);
        check.base_vertex = base.name(w);
        if (report.full_isomorphism_mode) {
            // h restricts to a candidate isomorphism between the links
            std::vector<VertexId> vmap(lv.vertex_count());
            bool built = true;
            for (VertexId u = 0; u < lv.vertex_count(); ++u) {
                auto target = lw.find_vertex(base.name(r.h(*bk.find_vertex(lv.name(u)))));
                if (!target) { built = false; break; }
                vmap[u] = *target;
            }
            check.ok = built && is_isomorphism_via(lv, lw, vmap);
            if (!check.ok) check.note = "links are not isomorphic under h";
        } else {
            check.ok = links_equivalent(lv, lw, &check.note);
        }
        if (!check.ok) {
            report.all_match = false;
            report.failures.push_back(std::move(check));
        }
    }
    return report;
}

}  // namespace plhyp
