#include "plhyp/complex.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace plhyp {

Simplex sorted_simplex(Simplex s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool is_face(const Simplex& face, const Simplex& of) {
    return std::includes(of.begin(), of.end(), face.begin(), face.end());
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
    Simplex out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool simplices_disjoint(const Simplex& a, const Simplex& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return false;
        if (*ia < *ib) ++ia; else ++ib;
    }
    return true;
}

Complex Complex::from_simplices(std::vector<std::string> names,
                                const std::vector<Simplex>& simplices) {
    Complex c;
    c.names_ = std::move(names);
    SimplexSet closed;
    // Close under faces: every nonempty subset of an input simplex.
    for (const Simplex& raw : simplices) {
        Simplex s = sorted_simplex(raw);
        for (VertexId v : s) {
            if (v >= c.names_.size()) throw std::invalid_argument("simplex references unknown vertex");
        }
        if (s.empty()) continue;
        const std::size_t n = s.size();
        for (std::uint32_t sub = 1; sub < (1u << n); ++sub) {
            Simplex face;
            face.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (sub & (1u << i)) face.push_back(s[i]);
            }
            closed.insert(std::move(face));
        }
    }
    for (VertexId v = 0; v < c.names_.size(); ++v) closed.insert(Simplex{v});
    c.simplices_.assign(closed.begin(), closed.end());
    c.build_indices();
    return c;
}

Complex Complex::from_closed_set(std::vector<std::string> names, SimplexSet set) {
    Complex c;
    c.names_ = std::move(names);
    for (VertexId v = 0; v < c.names_.size(); ++v) set.insert(Simplex{v});
    c.simplices_.assign(set.begin(), set.end());
    c.build_indices();
    return c;
}

Complex Complex::from_closed_vector(std::vector<std::string> names,
                                    std::vector<Simplex> simplices) {
    Complex c;
    c.names_ = std::move(names);
    c.simplices_ = std::move(simplices);
    c.build_indices();
    return c;
}

Complex Complex::from_named_simplices(
    const std::vector<std::vector<std::string>>& simplices) {
    std::vector<std::string> names;
    std::unordered_map<std::string, VertexId> idx;
    std::vector<Simplex> sims;
    for (const auto& s : simplices) {
        Simplex t;
        for (const auto& n : s) {
            auto it = idx.find(n);
            if (it == idx.end()) {
                it = idx.emplace(n, static_cast<VertexId>(names.size())).first;
                names.push_back(n);
            }
            t.push_back(it->second);
        }
        sims.push_back(sorted_simplex(std::move(t)));
    }
    return from_simplices(std::move(names), sims);
}

void Complex::build_indices() {
    std::sort(simplices_.begin(), simplices_.end(),
              [](const Simplex& a, const Simplex& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    dim_ = -1;
    for (const Simplex& s : simplices_) dim_ = std::max<int>(dim_, int(s.size()) - 1);
    dim_ranges_.assign(std::size_t(dim_ + 1), {0, 0});
    index_.clear();
    index_.reserve(simplices_.size() * 2);
    name_index_.clear();
    for (VertexId v = 0; v < names_.size(); ++v) name_index_.emplace(names_[v], v);
    vertex_star_.assign(names_.size(), {});
    std::size_t i = 0;
    for (int d = 0; d <= dim_; ++d) {
        std::size_t begin = i;
        while (i < simplices_.size() && int(simplices_[i].size()) == d + 1) ++i;
        dim_ranges_[std::size_t(d)] = {begin, i};
    }
    for (std::uint32_t k = 0; k < simplices_.size(); ++k) {
        index_.emplace(simplices_[k], k);
        for (VertexId v : simplices_[k]) vertex_star_[v].push_back(k);
    }
}

std::optional<VertexId> Complex::find_vertex(std::string_view name) const {
    auto it = name_index_.find(std::string(name));
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
}

Complex::SimplexRange Complex::simplices(int d) const {
    if (d < 0 || d > dim_) return {};
    auto [b, e] = dim_ranges_[std::size_t(d)];
    return {simplices_.data() + b, simplices_.data() + e};
}

std::vector<Simplex> Complex::maximal_simplices() const {
    std::vector<char> has_coface(simplices_.size(), 0);
    for (const Simplex& s : simplices_) {
        if (s.size() < 2) continue;
        Simplex facet;
        facet.reserve(s.size() - 1);
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            facet.clear();
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i != skip) facet.push_back(s[i]);
            }
            has_coface[index_.at(facet)] = 1;
        }
    }
    std::vector<Simplex> out;
    for (std::size_t k = 0; k < simplices_.size(); ++k) {
        if (!has_coface[k]) out.push_back(simplices_[k]);
    }
    return out;
}

std::vector<Simplex> Complex::cofaces(const Simplex& tau) const {
    if (!contains(tau)) throw std::invalid_argument("cofaces: simplex not in complex");
    std::vector<Simplex> out;
    for (std::uint32_t k : vertex_star_[tau[0]]) {
        if (is_face(tau, simplices_[k])) out.push_back(simplices_[k]);
    }
    return out;
}

bool Complex::is_pure() const {
    for (const Simplex& m : maximal_simplices()) {
        if (int(m.size()) - 1 != dim_) return false;
    }
    return true;
}

std::vector<int> Complex::f_vector() const {
    std::vector<int> f(std::size_t(dim_ + 1), 0);
    for (int d = 0; d <= dim_; ++d) {
        auto [b, e] = dim_ranges_[std::size_t(d)];
        f[std::size_t(d)] = int(e - b);
    }
    return f;
}

std::vector<int> Complex::vertex_components() const {
    std::vector<int> parent(names_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[std::size_t(x)] != x) {
            parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
            x = parent[std::size_t(x)];
        }
        return x;
    };
    if (dim_ >= 1) {
        auto [b, e] = dim_ranges_[1];
        for (std::size_t k = b; k < e; ++k) {
            int ra = find(int(simplices_[k][0]));
            int rb = find(int(simplices_[k][1]));
            if (ra != rb) parent[std::size_t(ra)] = rb;
        }
    }
    std::vector<int> comp(names_.size(), -1);
    int next = 0;
    for (std::size_t v = 0; v < names_.size(); ++v) {
        int r = find(int(v));
        if (comp[std::size_t(r)] < 0) comp[std::size_t(r)] = next++;
        comp[v] = comp[std::size_t(r)];
    }
    return comp;
}

int Complex::component_count() const {
    if (names_.empty()) return 0;
    auto comp = vertex_components();
    return *std::max_element(comp.begin(), comp.end()) + 1;
}

bool Complex::same_as(const Complex& other) const {
    if (names_.size() != other.names_.size()) return false;
    if (simplices_.size() != other.simplices_.size()) return false;
    if (names_ == other.names_) return simplices_ == other.simplices_;
    std::unordered_map<std::string, VertexId> remap;
    for (VertexId v = 0; v < other.names_.size(); ++v) remap[other.names_[v]] = v;
    std::vector<VertexId> vmap(names_.size());
    for (VertexId v = 0; v < names_.size(); ++v) {
        auto it = remap.find(names_[v]);
        if (it == remap.end()) return false;
        vmap[v] = it->second;
    }
    for (const Simplex& s : simplices_) {
        Simplex t;
        t.reserve(s.size());
        for (VertexId v : s) t.push_back(vmap[v]);
        std::sort(t.begin(), t.end());
        if (!other.contains(t)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- Subcomplex

Subcomplex::Subcomplex(ComplexPtr ambient, const SimplexSet& simplices)
    : ambient_(std::move(ambient)) {
    mask_.assign(ambient_->all_simplices().size(), 0);
    const auto& all = ambient_->all_simplices();
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (simplices.count(all[k])) {
            mask_[k] = 1;
            ++count_;
        }
    }
    if (count_ != simplices.size()) {
        throw std::invalid_argument("subcomplex: simplex not in ambient complex");
    }
}

Subcomplex::Subcomplex(ComplexPtr ambient, const std::vector<Simplex>& simplices)
    : Subcomplex(std::move(ambient), SimplexSet(simplices.begin(), simplices.end())) {}

Subcomplex Subcomplex::whole(ComplexPtr ambient) {
    Subcomplex s;
    s.ambient_ = std::move(ambient);
    s.mask_.assign(s.ambient_->all_simplices().size(), 1);
    s.count_ = s.mask_.size();
    return s;
}

Subcomplex Subcomplex::empty(ComplexPtr ambient) {
    Subcomplex s;
    s.ambient_ = std::move(ambient);
    s.mask_.assign(s.ambient_->all_simplices().size(), 0);
    s.count_ = 0;
    return s;
}

Subcomplex Subcomplex::full_on_vertices(ComplexPtr ambient,
                                        const std::vector<VertexId>& vertices) {
    std::vector<char> in(ambient->vertex_count(), 0);
    for (VertexId v : vertices) in[v] = 1;
    Subcomplex s;
    s.ambient_ = std::move(ambient);
    const auto& all = s.ambient_->all_simplices();
    s.mask_.assign(all.size(), 0);
    for (std::size_t k = 0; k < all.size(); ++k) {
        bool ok = true;
        for (VertexId v : all[k]) {
            if (!in[v]) { ok = false; break; }
        }
        if (ok) {
            s.mask_[k] = 1;
            ++s.count_;
        }
    }
    return s;
}

bool Subcomplex::contains(const Simplex& s) const {
    const auto& all = ambient_->all_simplices();
    if (!ambient_->contains(s)) return false;
    auto it = std::lower_bound(all.begin(), all.end(), s,
                               [](const Simplex& a, const Simplex& b) {
                                   if (a.size() != b.size()) return a.size() < b.size();
                                   return a < b;
                               });
    return mask_[std::size_t(it - all.begin())] != 0;
}

std::vector<Simplex> Subcomplex::simplices() const {
    std::vector<Simplex> out;
    out.reserve(count_);
    const auto& all = ambient_->all_simplices();
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (mask_[k]) out.push_back(all[k]);
    }
    return out;
}

int Subcomplex::dim() const {
    int d = -1;
    const auto& all = ambient_->all_simplices();
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (mask_[k]) d = std::max<int>(d, int(all[k].size()) - 1);
    }
    return d;
}

std::vector<VertexId> Subcomplex::vertices() const {
    std::vector<VertexId> out;
    const auto& all = ambient_->all_simplices();
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (mask_[k] && all[k].size() == 1) out.push_back(all[k][0]);
    }
    return out;
}

Complex Subcomplex::as_complex() const {
    std::vector<VertexId> verts = vertices();
    std::vector<std::string> names;
    names.reserve(verts.size());
    std::vector<VertexId> reindex(ambient_->vertex_count(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        reindex[verts[i]] = VertexId(i);
        names.push_back(ambient_->name(verts[i]));
    }
    std::vector<Simplex> sims;
    const auto& all = ambient_->all_simplices();
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (!mask_[k]) continue;
        Simplex t;
        t.reserve(all[k].size());
        for (VertexId v : all[k]) t.push_back(reindex[v]);
        std::sort(t.begin(), t.end());
        sims.push_back(std::move(t));
    }
    return Complex::from_simplices(std::move(names), sims);
}

bool Subcomplex::operator==(const Subcomplex& other) const {
    return ambient_ == other.ambient_ && mask_ == other.mask_;
}

Subcomplex subcomplex_difference(const Subcomplex& a, const Subcomplex& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("difference: ambient mismatch");
    Subcomplex out;
    out.ambient_ = a.ambient_;
    out.mask_.assign(a.mask_.size(), 0);
    for (std::size_t k = 0; k < a.mask_.size(); ++k) {
        if (a.mask_[k] && !b.mask_[k]) {
            out.mask_[k] = 1;
            ++out.count_;
        }
    }
    return out;
}

// ------------------------------------------------------------- SimplicialMap

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target,
                             std::vector<VertexId> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vmap_(std::move(vertex_map)) {
    if (vmap_.size() != source_->vertex_count()) {
        throw std::invalid_argument("simplicial map: vertex map size mismatch");
    }
    for (VertexId w : vmap_) {
        if (w >= target_->vertex_count()) {
            throw std::invalid_argument("simplicial map: image vertex out of range");
        }
    }
    nondegenerate_ = true;
    for (const Simplex& s : source_->all_simplices()) {
        Simplex im = image(s);
        if (!target_->contains(im)) {
            throw std::invalid_argument("simplicial map: image of a simplex is not a simplex");
        }
        if (im.size() != s.size()) nondegenerate_ = false;
    }
}

SimplicialMap SimplicialMap::identity(ComplexPtr c) {
    std::vector<VertexId> v(c->vertex_count());
    std::iota(v.begin(), v.end(), 0);
    return SimplicialMap(c, c, std::move(v));
}

Simplex SimplicialMap::image(const Simplex& s) const {
    Simplex im;
    im.reserve(s.size());
    for (VertexId v : s) im.push_back(vmap_[v]);
    return sorted_simplex(std::move(im));
}

SimplicialMap SimplicialMap::compose_with(const SimplicialMap& then) const {
    if (target_ != then.source_) {
        throw std::invalid_argument("compose: target/source mismatch");
    }
    std::vector<VertexId> v(vmap_.size());
    for (std::size_t i = 0; i < vmap_.size(); ++i) v[i] = then.vmap_[vmap_[i]];
    return SimplicialMap(source_, then.target_, std::move(v));
}

bool SimplicialMap::is_isomorphism() const {
    return is_isomorphism_via(*source_, *target_, vmap_);
}

bool is_isomorphism_via(const Complex& source, const Complex& target,
                        const std::vector<VertexId>& vmap) {
    if (source.vertex_count() != target.vertex_count()) return false;
    if (vmap.size() != source.vertex_count()) return false;
    std::vector<char> hit(target.vertex_count(), 0);
    for (VertexId w : vmap) {
        if (w >= target.vertex_count() || hit[w]) return false;
        hit[w] = 1;
    }
    if (source.size() != target.size()) return false;
    for (const Simplex& s : source.all_simplices()) {
        Simplex t;
        t.reserve(s.size());
        for (VertexId v : s) t.push_back(vmap[v]);
        std::sort(t.begin(), t.end());
        if (!target.contains(t)) return false;
    }
    return true;
}

// -------------------------------------------------------------- operations

const char* to_string(Trivalent t) {
    switch (t) {
        case Trivalent::yes: return "yes";
        case Trivalent::no: return "no";
        default: return "unknown";
    }
}

Subcomplex star(const ComplexPtr& c, const Simplex& tau) {
    if (!c->contains(tau)) throw std::invalid_argument("star: simplex not in complex");
    SimplexSet set;
    for (const Simplex& s : c->cofaces(tau)) {
        const std::size_t n = s.size();
        for (std::uint32_t sub = 1; sub < (1u << n); ++sub) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i) {
                if (sub & (1u << i)) face.push_back(s[i]);
            }
            set.insert(std::move(face));
        }
    }
    return Subcomplex(c, set);
}

Complex link(const ComplexPtr& c, const Simplex& tau) {
    if (!c->contains(tau)) throw std::invalid_argument("link: simplex not in complex");
    std::vector<Simplex> rhos;
    std::vector<char> used(c->vertex_count(), 0);
    for (const Simplex& s : c->cofaces(tau)) {
        Simplex rho;
        std::set_difference(s.begin(), s.end(), tau.begin(), tau.end(),
                            std::back_inserter(rho));
        if (!rho.empty()) {
            for (VertexId v : rho) used[v] = 1;
            rhos.push_back(std::move(rho));
        }
    }
    std::vector<std::string> names;
    std::vector<VertexId> reindex(c->vertex_count(), 0);
    for (VertexId v = 0; v < c->vertex_count(); ++v) {
        if (used[v]) {
            reindex[v] = VertexId(names.size());
            names.push_back(c->name(v));
        }
    }
    for (Simplex& rho : rhos) {
        for (VertexId& v : rho) v = reindex[v];
    }
    return Complex::from_simplices(std::move(names), rhos);
}

Complex link_in(const Subcomplex& sub, const Simplex& tau) {
    const ComplexPtr& amb = sub.ambient();
    if (!sub.contains(tau)) throw std::invalid_argument("link_in: simplex not in subcomplex");
    std::vector<Simplex> rhos;
    std::vector<char> used(amb->vertex_count(), 0);
    for (const Simplex& s : amb->cofaces(tau)) {
        if (!sub.contains(s)) continue;
        Simplex rho;
        std::set_difference(s.begin(), s.end(), tau.begin(), tau.end(),
                            std::back_inserter(rho));
        if (!rho.empty()) {
            for (VertexId v : rho) used[v] = 1;
            rhos.push_back(std::move(rho));
        }
    }
    std::vector<std::string> names;
    std::vector<VertexId> reindex(amb->vertex_count(), 0);
    for (VertexId v = 0; v < amb->vertex_count(); ++v) {
        if (used[v]) {
            reindex[v] = VertexId(names.size());
            names.push_back(amb->name(v));
        }
    }
    for (Simplex& rho : rhos) {
        for (VertexId& v : rho) v = reindex[v];
    }
    return Complex::from_simplices(std::move(names), rhos);
}

Complex skeleton(const Complex& c, int k) {
    if (k < 0) throw std::invalid_argument("skeleton: negative dimension");
    std::vector<Simplex> keep;
    for (const Simplex& s : c.all_simplices()) {
        if (int(s.size()) - 1 <= k) keep.push_back(s);
    }
    std::vector<std::string> names = c.vertex_names();
    return Complex::from_simplices(std::move(names), keep);
}

Subcomplex boundary_subcomplex(const ComplexPtr& c) {
    if (c->empty()) return Subcomplex::empty(c);
    if (!c->is_pure()) throw std::invalid_argument("boundary_subcomplex: complex is not pure");
    const int d = c->dim();
    if (d == 0) return Subcomplex::empty(c);
    std::unordered_map<Simplex, int, SimplexHash> top_count;
    for (const Simplex& t : c->simplices(d)) {
        for (std::size_t skip = 0; skip < t.size(); ++skip) {
            Simplex facet;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (i != skip) facet.push_back(t[i]);
            }
            ++top_count[facet];
        }
    }
    SimplexSet set;
    for (const auto& [facet, count] : top_count) {
        if (count != 1) continue;
        const std::size_t n = facet.size();
        for (std::uint32_t sub = 1; sub < (1u << n); ++sub) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i) {
                if (sub & (1u << i)) face.push_back(facet[i]);
            }
            set.insert(std::move(face));
        }
    }
    return Subcomplex(c, set);
}

Subcomplex boundary_of(const Subcomplex& sub) {
    const int d = sub.dim();
    if (d <= 0) return Subcomplex::empty(sub.ambient());
    std::unordered_map<Simplex, int, SimplexHash> top_count;
    for (const Simplex& s : sub.simplices()) {
        if (int(s.size()) - 1 != d) continue;
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            Simplex facet;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i != skip) facet.push_back(s[i]);
            }
            ++top_count[facet];
        }
    }
    SimplexSet set;
    for (const auto& [facet, count] : top_count) {
        if (count != 1) continue;
        const std::size_t n = facet.size();
        for (std::uint32_t subm = 1; subm < (1u << n); ++subm) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i) {
                if (subm & (1u << i)) face.push_back(facet[i]);
            }
            set.insert(std::move(face));
        }
    }
    return Subcomplex(sub.ambient(), set);
}

bool is_full(const Complex& c, const Subcomplex& sub) {
    std::vector<char> in(c.vertex_count(), 0);
    for (VertexId v : sub.vertices()) in[v] = 1;
    for (const Simplex& s : c.all_simplices()) {
        bool all_in = true;
        for (VertexId v : s) {
            if (!in[v]) { all_in = false; break; }
        }
        if (all_in && !sub.contains(s)) return false;
    }
    return true;
}

bool is_pseudomanifold(const Complex& c) {
    if (c.empty()) return false;
    if (!c.is_pure()) return false;
    const int d = c.dim();
    if (d == 0) return true;
    std::unordered_map<Simplex, std::vector<std::uint32_t>, SimplexHash> facet_tops;
    const auto tops = c.simplices(d);
    for (std::uint32_t k = 0; k < tops.size(); ++k) {
        const Simplex& t = tops[k];
        for (std::size_t skip = 0; skip < t.size(); ++skip) {
            Simplex facet;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (i != skip) facet.push_back(t[i]);
            }
            facet_tops[facet].push_back(k);
        }
    }
    for (const auto& [facet, ts] : facet_tops) {
        if (ts.size() > 2) return false;
    }
    // strong connectivity through codim-1 faces
    std::vector<int> comp(tops.size(), -1);
    std::deque<std::uint32_t> queue;
    comp[0] = 0;
    queue.push_back(0);
    std::size_t seen = 1;
    while (!queue.empty()) {
        std::uint32_t k = queue.front();
        queue.pop_front();
        const Simplex& t = tops[k];
        for (std::size_t skip = 0; skip < t.size(); ++skip) {
            Simplex facet;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (i != skip) facet.push_back(t[i]);
            }
            for (std::uint32_t other : facet_tops[facet]) {
                if (comp[other] < 0) {
                    comp[other] = 0;
                    queue.push_back(other);
                    ++seen;
                }
            }
        }
    }
    return seen == tops.size();
}

OrientResult orient(const Complex& c) {
    if (!is_pseudomanifold(c)) {
        throw std::invalid_argument("orient: complex is not a pseudomanifold");
    }
    const int d = c.dim();
    const auto tops = c.simplices(d);
    OrientResult result;
    if (d == 0) {
        result.orientable = true;
        for (const Simplex& t : tops) result.orientation.sign[t] = 1;
        return result;
    }
    std::unordered_map<Simplex, std::vector<std::uint32_t>, SimplexHash> facet_tops;
    for (std::uint32_t k = 0; k < tops.size(); ++k) {
        const Simplex& t = tops[k];
        for (std::size_t skip = 0; skip < t.size(); ++skip) {
            Simplex facet;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (i != skip) facet.push_back(t[i]);
            }
            facet_tops[facet].push_back(k);
        }
    }
    auto missing_index = [&](std::uint32_t k, const Simplex& facet) -> int {
        const Simplex& t = tops[k];
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (!std::binary_search(facet.begin(), facet.end(), t[i])) return int(i);
        }
        return -1;
    };
    std::vector<int> sign(tops.size(), 0);
    std::vector<std::int64_t> parent(tops.size(), -1);
    sign[0] = 1;
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        std::uint32_t k = queue.front();
        queue.pop_front();
        const Simplex& t = tops[k];
        for (std::size_t skip = 0; skip < t.size(); ++skip) {
            Simplex facet;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (i != skip) facet.push_back(t[i]);
            }
            for (std::uint32_t other : facet_tops[facet]) {
                if (other == k) continue;
                // coherence: induced signs on the shared facet cancel
                int needed = -sign[k] * ((missing_index(k, facet) + missing_index(other, facet)) % 2 == 0 ? 1 : -1);
                if (sign[other] == 0) {
                    sign[other] = needed;
                    parent[other] = k;
                    queue.push_back(other);
                } else if (sign[other] != needed) {
                    // odd cycle of sign constraints: walk both tops to the root
                    result.orientable = false;
                    std::vector<Simplex> cycle;
                    for (std::int64_t x = k; x >= 0; x = parent[std::size_t(x)]) {
                        cycle.push_back(tops[std::size_t(x)]);
                    }
                    std::vector<Simplex> other_path;
                    for (std::int64_t x = other; x >= 0; x = parent[std::size_t(x)]) {
                        other_path.push_back(tops[std::size_t(x)]);
                    }
                    cycle.insert(cycle.end(), other_path.rbegin(), other_path.rend());
                    result.odd_cycle = std::move(cycle);
                    return result;
                }
            }
        }
    }
    result.orientable = true;
    for (std::uint32_t k = 0; k < tops.size(); ++k) result.orientation.sign[tops[k]] = sign[k];
    return result;
}

Complex join_complexes(const Complex& a, const Complex& b) {
    std::vector<std::string> names = a.vertex_names();
    std::unordered_set<std::string> seen(names.begin(), names.end());
    for (const auto& n : b.vertex_names()) {
        if (seen.count(n)) throw std::invalid_argument("join: vertex name clash: " + n);
        names.push_back(n);
    }
    const VertexId offset = VertexId(a.vertex_count());
    std::vector<Simplex> sims;
    for (const Simplex& s : a.all_simplices()) sims.push_back(s);
    for (const Simplex& t : b.all_simplices()) {
        Simplex shifted;
        shifted.reserve(t.size());
        for (VertexId v : t) shifted.push_back(v + offset);
        sims.push_back(shifted);
        for (const Simplex& s : a.all_simplices()) {
            sims.push_back(simplex_union(s, shifted));
        }
    }
    return Complex::from_simplices(std::move(names), sims);
}

}  // namespace plhyp
