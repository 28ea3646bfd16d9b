#include "plhyp/subdivision.hpp"

#include <algorithm>
#include <stdexcept>

#include "plhyp/homology.hpp"
#include "plhyp/names.hpp"
#include "plhyp/parallel.hpp"

namespace plhyp {

namespace {

// Shared scaffolding: derived vertex per parent simplex, in the parent's
// (dim, lex) simplex order, so indices line up with flat_index.
DerivedComplex derived_skeleton(const ComplexPtr& parent) {
    DerivedComplex dc;
    dc.parent = parent;
    const auto& all = parent->all_simplices();
    dc.carrier.reserve(all.size());
    for (const Simplex& s : all) dc.carrier.push_back(s);
    for (VertexId v = 0; v < all.size(); ++v) dc.carrier_index.emplace(all[v], v);
    dc.base_vertex.assign(all.size(), std::nullopt);
    return dc;
}

std::vector<std::string> derived_names(const Complex& parent) {
    std::vector<std::string> names;
    names.reserve(parent.size());
    for (const Simplex& s : parent.all_simplices()) {
        std::vector<std::string> parts;
        parts.reserve(s.size());
        for (VertexId v : s) parts.push_back(parent.name(v));
        names.push_back(mint_barycenter(parts));
    }
    return names;
}

// All flags (chains of prefixes) inside one maximal simplex, as derived
// simplices; the face closure over flags is the whole subdivision.
void emit_flags(const Complex& parent, const Simplex& maximal, SimplexSet& out) {
    Simplex perm = maximal;
    std::sort(perm.begin(), perm.end());
    do {
        Simplex flag(perm.size());
        Simplex prefix;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            prefix.push_back(perm[i]);
            Simplex sorted = prefix;
            std::sort(sorted.begin(), sorted.end());
            flag[i] = parent.flat_index(sorted);
        }
        std::sort(flag.begin(), flag.end());
        const std::size_t n = flag.size();
        for (std::uint32_t sub = 1; sub < (1u << n); ++sub) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i) {
                if (sub & (1u << i)) face.push_back(flag[i]);
            }
            out.insert(std::move(face));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

namespace reference {

DerivedComplex barycentric_serial(const ComplexPtr& c) {
    DerivedComplex dc = derived_skeleton(c);
    SimplexSet closed;
    for (const Simplex& m : c->maximal_simplices()) emit_flags(*c, m, closed);
    dc.complex = std::make_shared<Complex>(
        Complex::from_closed_set(derived_names(*c), std::move(closed)));
    return dc;
}

}  // namespace reference

// The derived simplices are the chains in the face poset. Every chain with
// more than one element has a unique maximal element and a unique
// second-largest, so enumerating "chains ending at sigma" by extending the
// chains of sigma's proper faces produces each chain exactly once: no
// deduplication is needed, and the per-simplex extension step parallelizes
// within each dimension level.
DerivedComplex barycentric(const ComplexPtr& c) {
    DerivedComplex dc = derived_skeleton(c);
    const auto& all = c->all_simplices();
    std::vector<std::vector<Simplex>> chains_at(all.size());
    const int threads = thread_count();
    for (int d = 0; d <= c->dim(); ++d) {
        auto level = c->simplices(d);
        const std::int64_t begin = level.begin() - all.data();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
        for (std::int64_t k = 0; k < std::int64_t(level.size()); ++k) {
            const std::uint32_t i = std::uint32_t(begin + k);
            const Simplex& sigma = all[i];
            auto& mine = chains_at[i];
            mine.push_back({i});
            const std::size_t n = sigma.size();
            Simplex face;
            for (std::uint32_t sub = 1; sub + 1 < (1u << n); ++sub) {
                face.clear();
                for (std::size_t b = 0; b < n; ++b) {
                    if (sub & (1u << b)) face.push_back(sigma[b]);
                }
                const std::uint32_t j = c->flat_index(face);
                for (const Simplex& chain : chains_at[j]) {
                    Simplex extended = chain;
                    extended.push_back(i);
                    mine.push_back(std::move(extended));
                }
            }
        }
    }
    std::vector<Simplex> simplices;
    std::size_t total = 0;
    for (const auto& v : chains_at) total += v.size();
    simplices.reserve(total);
    for (auto& v : chains_at) {
        for (Simplex& s : v) simplices.push_back(std::move(s));
        v.clear();
        v.shrink_to_fit();
    }
    dc.complex = std::make_shared<Complex>(
        Complex::from_closed_vector(derived_names(*c), std::move(simplices)));
    return dc;
}

SecondDerived second_derived(const ComplexPtr& c) {
    SecondDerived sd;
    sd.first = barycentric(c);
    sd.second = barycentric(sd.first.complex);
    return sd;
}

Subcomplex derived_image(const DerivedComplex& dc, const Subcomplex& l) {
    if (l.ambient() != dc.parent) {
        throw std::invalid_argument("derived_image: subcomplex not over the parent complex");
    }
    std::vector<VertexId> verts;
    for (VertexId v = 0; v < dc.carrier.size(); ++v) {
        if (l.contains(dc.carrier[v])) verts.push_back(v);
    }
    return Subcomplex::full_on_vertices(dc.complex, verts);
}

SimplicialMap derived_map(const SimplicialMap& g, const DerivedComplex& da,
                          const DerivedComplex& db) {
    if (da.parent != g.source() || db.parent != g.target()) {
        throw std::invalid_argument("derived_map: subdivisions do not match the map");
    }
    std::vector<VertexId> vmap(da.carrier.size());
    for (VertexId v = 0; v < da.carrier.size(); ++v) {
        vmap[v] = db.vertex_over(g.image(da.carrier[v]));
    }
    return SimplicialMap(da.complex, db.complex, std::move(vmap));
}

// ------------------------------------------------------ triangulations of Delta

std::vector<std::vector<int>> all_faces(int n) {
    std::vector<std::vector<int>> faces;
    for (std::uint32_t sub = 1; sub < (1u << (n + 1)); ++sub) {
        std::vector<int> f;
        for (int i = 0; i <= n; ++i) {
            if (sub & (1u << i)) f.push_back(i + 1);
        }
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return faces;
}

std::vector<std::vector<int>> proper_faces(const std::vector<int>& alpha) {
    std::vector<std::vector<int>> out;
    const std::size_t n = alpha.size();
    for (std::uint32_t sub = 1; sub + 1 < (1u << n); ++sub) {
        std::vector<int> f;
        for (std::size_t i = 0; i < n; ++i) {
            if (sub & (1u << i)) f.push_back(alpha[i]);
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<int> TriangulationOfDelta::carrier_face(const Simplex& s) const {
    std::vector<int> face;
    for (VertexId v : s) {
        for (int l : vertex_face[v]) face.push_back(l);
    }
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    return face;
}

Subcomplex TriangulationOfDelta::face_restriction(const std::vector<int>& alpha) const {
    std::vector<VertexId> verts;
    for (VertexId v = 0; v < complex->vertex_count(); ++v) {
        if (std::includes(alpha.begin(), alpha.end(), vertex_face[v].begin(),
                          vertex_face[v].end())) {
            verts.push_back(v);
        }
    }
    return Subcomplex::full_on_vertices(complex, verts);
}

bool TriangulationOfDelta::is_trivial() const {
    return complex->vertex_count() == std::size_t(n + 1) &&
           complex->size() == (std::size_t(1) << (n + 1)) - 1;
}

void TriangulationOfDelta::validate() const {
    if (!complex || complex->empty()) {
        throw std::invalid_argument("triangulation of Delta: empty complex");
    }
    if (complex->dim() != n || !complex->is_pure()) {
        throw std::invalid_argument("triangulation of Delta: not pure of the right dimension");
    }
    if (vertex_face.size() != complex->vertex_count()) {
        throw std::invalid_argument("triangulation of Delta: missing face labels");
    }
    for (const auto& f : vertex_face) {
        if (f.empty() || !std::is_sorted(f.begin(), f.end())) {
            throw std::invalid_argument("triangulation of Delta: bad face label");
        }
        for (int l : f) {
            if (l < 1 || l > n + 1) throw std::invalid_argument("triangulation of Delta: label out of range");
        }
    }
    for (const auto& alpha : all_faces(n)) {
        Subcomplex ta = face_restriction(alpha);
        Complex tac = ta.as_complex();
        const int d = int(alpha.size()) - 1;
        if (tac.empty() || tac.dim() != d || !tac.is_pure() || tac.component_count() != 1) {
            throw std::invalid_argument("triangulation does not restrict to a triangulation of a face");
        }
        if (euler_characteristic(tac) != 1) {
            throw std::invalid_argument("face restriction is not a ball (Euler characteristic)");
        }
        if (d <= 3 && is_manifold(tac) == Trivalent::no) {
            throw std::invalid_argument("face restriction is not a manifold");
        }
        // the boundary of T_alpha must be the union of the facet restrictions
        SimplexSet facet_union;
        for (const auto& beta : proper_faces(alpha)) {
            if (beta.size() + 1 != alpha.size()) continue;
            for (const Simplex& s : face_restriction(beta).simplices()) facet_union.insert(s);
        }
        if (d >= 1) {
            auto tap = std::make_shared<Complex>(tac);
            SimplexSet bd;
            // map boundary simplices back to ambient vertex ids
            std::vector<VertexId> back;
            for (VertexId v : ta.vertices()) back.push_back(v);
            for (const Simplex& s : boundary_subcomplex(tap).simplices()) {
                Simplex amb;
                for (VertexId v : s) amb.push_back(back[v]);
                std::sort(amb.begin(), amb.end());
                bd.insert(amb);
            }
            if (bd != facet_union) {
                throw std::invalid_argument("boundary of a face restriction mismatches the facets");
            }
        }
    }
}

TriangulationOfDelta trivial_triangulation(int n) {
    if (n < 0) throw std::invalid_argument("trivial_triangulation: negative dimension");
    std::vector<std::string> names;
    for (int i = 1; i <= n + 1; ++i) names.push_back("e" + std::to_string(i));
    Simplex top(std::size_t(n + 1));
    for (int i = 0; i <= n; ++i) top[std::size_t(i)] = VertexId(i);
    TriangulationOfDelta t;
    t.n = n;
    t.complex = std::make_shared<Complex>(Complex::from_simplices(std::move(names), {top}));
    for (int i = 1; i <= n + 1; ++i) t.vertex_face.push_back({i});
    return t;
}

TriangulationOfDelta refine_triangulation(const TriangulationOfDelta& t) {
    DerivedComplex dc = barycentric(t.complex);
    TriangulationOfDelta out;
    out.n = t.n;
    out.complex = dc.complex;
    out.vertex_face.reserve(dc.carrier.size());
    for (const Simplex& carrier : dc.carrier) {
        out.vertex_face.push_back(t.carrier_face(carrier));
    }
    return out;
}

TriangulationOfDelta barycentric_triangulation(int n) {
    return refine_triangulation(trivial_triangulation(n));
}

// ---------------------------------------------------------------- folding map

FoldingMap folding_map(const ComplexPtr& k) {
    FoldingMap fm;
    fm.kprime = barycentric(k);
    const int dim = k->dim();
    fm.target = trivial_triangulation(dim);
    std::vector<VertexId> vmap(fm.kprime.carrier.size());
    for (VertexId v = 0; v < fm.kprime.carrier.size(); ++v) {
        vmap[v] = VertexId(fm.kprime.carrier[v].size() - 1);  // dim i -> e_{i+1}
    }
    fm.underlying = SimplicialMap(fm.kprime.complex, fm.target.complex, std::move(vmap));
    if (!fm.underlying.nondegenerate()) {
        throw std::logic_error("folding map must be injective on every simplex");
    }
    return fm;
}

// --------------------------------------------------------- pullback refinement

PullbackRefinement pullback_refinement(const FoldingMap& p,
                                       const TriangulationOfDelta& t) {
    t.validate();
    if (t.n != p.target.n) {
        throw std::invalid_argument("pullback_refinement: dimension mismatch with folding target");
    }
    const Complex& kp = *p.kprime.complex;
    const Complex& tc = *t.complex;

    // K'' vertices are pairs (rho, t-vertex) with p(rho) spanning the carrier
    // face of the t-vertex; they are shared between overlapping copies.
    struct PairKey {
        Simplex rho;
        VertexId tv;
        bool operator==(const PairKey& o) const { return tv == o.tv && rho == o.rho; }
    };
    struct PairKeyHash {
        std::size_t operator()(const PairKey& k) const {
            return SimplexHash()(k.rho) * 1000003u ^ k.tv;
        }
    };
    std::unordered_map<PairKey, VertexId, PairKeyHash> pair_index;
    std::vector<std::string> names;
    std::vector<Simplex> carriers;
    std::vector<std::optional<VertexId>> bases;

    auto vertex_for = [&](Simplex rho, VertexId tv) -> VertexId {
        PairKey key{std::move(rho), tv};
        auto it = pair_index.find(key);
        if (it != pair_index.end()) return it->second;
        VertexId id = VertexId(names.size());
        std::vector<std::string> parts;
        for (VertexId v : key.rho) parts.push_back(kp.name(v));
        names.push_back(mint_pair(mint_tuple(parts, '[', '|', ']'), tc.name(tv)));
        carriers.push_back(key.rho);
        bases.push_back(tv);
        pair_index.emplace(std::move(key), id);
        return id;
    };

    // cache T_alpha simplex lists per face
    std::unordered_map<std::string, std::vector<Simplex>> t_alpha_cache;
    auto face_key = [](const std::vector<int>& f) {
        std::string k;
        for (int l : f) {
            k += std::to_string(l);
            k.push_back(',');
        }
        return k;
    };

    SimplexSet kpp_simplices;
    for (const Simplex& sigma : kp.maximal_simplices()) {
        // p maps sigma isomorphically onto the face alpha spanned by the labels
        std::vector<int> alpha;
        std::vector<VertexId> label_to_vertex(std::size_t(t.n + 2), VertexId(0));
        for (VertexId v : sigma) {
            int label = int(p.underlying(v)) + 1;
            alpha.push_back(label);
            label_to_vertex[std::size_t(label)] = v;
        }
        std::sort(alpha.begin(), alpha.end());
        auto key = face_key(alpha);
        auto it = t_alpha_cache.find(key);
        if (it == t_alpha_cache.end()) {
            it = t_alpha_cache.emplace(key, t.face_restriction(alpha).simplices()).first;
        }
        for (const Simplex& tau : it->second) {
            Simplex copy;
            copy.reserve(tau.size());
            for (VertexId tv : tau) {
                Simplex rho;
                for (int l : t.vertex_face[tv]) rho.push_back(label_to_vertex[std::size_t(l)]);
                std::sort(rho.begin(), rho.end());
                copy.push_back(vertex_for(std::move(rho), tv));
            }
            std::sort(copy.begin(), copy.end());
            kpp_simplices.insert(std::move(copy));
        }
    }

    PullbackRefinement out;
    out.kpp.parent = p.kprime.complex;
    out.kpp.complex = std::make_shared<Complex>(
        Complex::from_closed_set(std::move(names), std::move(kpp_simplices)));
    out.kpp.carrier = std::move(carriers);
    out.kpp.base_vertex = std::move(bases);
    // carrier_index stays empty: carriers are not unique across base vertices
    std::vector<VertexId> vmap(out.kpp.base_vertex.size());
    for (VertexId v = 0; v < vmap.size(); ++v) vmap[v] = *out.kpp.base_vertex[v];
    out.ppp = SimplicialMap(out.kpp.complex, t.complex, std::move(vmap));
    if (!out.ppp.nondegenerate()) {
        throw std::logic_error("pullback refinement: p'' must be nondegenerate");
    }
    return out;
}

}  // namespace plhyp
