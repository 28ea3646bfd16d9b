#include "plhyp/homology.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "plhyp/parallel.hpp"

namespace plhyp {

const char* to_string(Coeff c) {
    switch (c) {
        case Coeff::Z: return "Z";
        case Coeff::Z2: return "Z2";
        default: return "Q";
    }
}

namespace {

template <typename R>
struct ring_traits;

template <>
struct ring_traits<Int> {
    static constexpr bool is_field = false;
    static bool is_unit(const Int& x) { return x == 1 || x == -1; }
    static Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }
};

template <>
struct ring_traits<Rational> {
    static constexpr bool is_field = true;
    static bool is_unit(const Rational& x) { return x != 0; }
};

template <>
struct ring_traits<GF2> {
    static constexpr bool is_field = true;
    static bool is_unit(GF2 x) { return x.v != 0; }
};

// ---------------------------------------------------------------- dense SNF

template <typename R>
SnfResult<R> snf_dense(const DenseMatrix<R>& input) {
    SnfResult<R> res;
    DenseMatrix<R>& m = res.d;
    m = input;
    res.u = DenseMatrix<R>::identity(m.rows);
    res.u_inv = DenseMatrix<R>::identity(m.rows);
    res.v = DenseMatrix<R>::identity(m.cols);
    res.v_inv = DenseMatrix<R>::identity(m.cols);

    // the multiplier is taken by value: callers pass matrix elements that the
    // update itself overwrites; zero entries are skipped since the matrices
    // stay sparse through most of the elimination
    auto row_sub = [&](std::size_t r, std::size_t t, R q) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (m.at(t, j) != R(0)) m.at(r, j) -= q * m.at(t, j);
        }
        for (std::size_t j = 0; j < m.rows; ++j) {
            if (res.u.at(t, j) != R(0)) res.u.at(r, j) -= q * res.u.at(t, j);
        }
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (res.u_inv.at(i, r) != R(0)) res.u_inv.at(i, t) += q * res.u_inv.at(i, r);
        }
    };
    auto col_sub = [&](std::size_t c, std::size_t t, R q) {
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (m.at(i, t) != R(0)) m.at(i, c) -= q * m.at(i, t);
        }
        for (std::size_t i = 0; i < m.cols; ++i) {
            if (res.v.at(i, t) != R(0)) res.v.at(i, c) -= q * res.v.at(i, t);
        }
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (res.v_inv.at(c, j) != R(0)) res.v_inv.at(t, j) += q * res.v_inv.at(c, j);
        }
    };
    auto row_swap = [&](std::size_t r, std::size_t t) {
        if (r == t) return;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(t, j));
        for (std::size_t j = 0; j < m.rows; ++j) std::swap(res.u.at(r, j), res.u.at(t, j));
        for (std::size_t i = 0; i < m.rows; ++i) std::swap(res.u_inv.at(i, r), res.u_inv.at(i, t));
    };
    auto col_swap = [&](std::size_t c, std::size_t t) {
        if (c == t) return;
        for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, c), m.at(i, t));
        for (std::size_t i = 0; i < m.cols; ++i) std::swap(res.v.at(i, c), res.v.at(i, t));
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(res.v_inv.at(c, j), res.v_inv.at(t, j));
    };
    auto row_scale = [&](std::size_t r, const R& s, const R& s_inv) {
        for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) *= s;
        for (std::size_t j = 0; j < m.rows; ++j) res.u.at(r, j) *= s;
        for (std::size_t i = 0; i < m.rows; ++i) res.u_inv.at(i, r) *= s_inv;
    };

    const std::size_t steps = std::min(m.rows, m.cols);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        // pivot search in the trailing submatrix
        std::size_t pr = m.rows, pc = m.cols;
        if constexpr (ring_traits<R>::is_field) {
            for (std::size_t i = t; i < m.rows && pr == m.rows; ++i) {
                for (std::size_t j = t; j < m.cols; ++j) {
                    if (m.at(i, j) != R(0)) { pr = i; pc = j; break; }
                }
            }
        } else {
            Int best = 0;
            for (std::size_t i = t; i < m.rows; ++i) {
                for (std::size_t j = t; j < m.cols; ++j) {
                    if (m.at(i, j) == 0) continue;
                    Int a = ring_traits<Int>::abs(m.at(i, j));
                    if (pr == m.rows || a < best) { best = a; pr = i; pc = j; }
                }
            }
        }
        if (pr == m.rows) break;
        row_swap(pr, t);
        col_swap(pc, t);

        if constexpr (ring_traits<R>::is_field) {
            R p = m.at(t, t);
            row_scale(t, R(1) / p, p);
            for (std::size_t i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t) != R(0)) row_sub(i, t, m.at(i, t));
            }
            for (std::size_t j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j) != R(0)) col_sub(j, t, m.at(t, j));
            }
        } else {
            for (;;) {
                // shrink column t by remainders
                bool col_dirty = false;
                for (std::size_t i = t + 1; i < m.rows; ++i) {
                    if (m.at(i, t) == 0) continue;
                    Int q = m.at(i, t) / m.at(t, t);
                    if (q != 0) row_sub(i, t, q);
                    if (m.at(i, t) != 0) col_dirty = true;
                }
                if (col_dirty) {
                    std::size_t br = t;
                    Int best = ring_traits<Int>::abs(m.at(t, t));
                    for (std::size_t i = t + 1; i < m.rows; ++i) {
                        if (m.at(i, t) != 0 && ring_traits<Int>::abs(m.at(i, t)) < best) {
                            best = ring_traits<Int>::abs(m.at(i, t));
                            br = i;
                        }
                    }
                    row_swap(br, t);
                    continue;
                }
                bool row_dirty = false;
                for (std::size_t j = t + 1; j < m.cols; ++j) {
                    if (m.at(t, j) == 0) continue;
                    Int q = m.at(t, j) / m.at(t, t);
                    if (q != 0) col_sub(j, t, q);
                    if (m.at(t, j) != 0) row_dirty = true;
                }
                if (row_dirty) {
                    std::size_t bc = t;
                    Int best = ring_traits<Int>::abs(m.at(t, t));
                    for (std::size_t j = t + 1; j < m.cols; ++j) {
                        if (m.at(t, j) != 0 && ring_traits<Int>::abs(m.at(t, j)) < best) {
                            best = ring_traits<Int>::abs(m.at(t, j));
                            bc = j;
                        }
                    }
                    col_swap(bc, t);
                    continue;
                }
                // divisibility over the rest of the submatrix
                bool fixed = false;
                for (std::size_t i = t + 1; i < m.rows && !fixed; ++i) {
                    for (std::size_t j = t + 1; j < m.cols; ++j) {
                        if (m.at(i, j) % m.at(t, t) != 0) {
                            row_sub(t, i, Int(-1));  // row_t += row_i
                            fixed = true;
                            break;
                        }
                    }
                }
                if (!fixed) break;
            }
            if (m.at(t, t) < 0) {
                // flip the sign of the pivot row
                for (std::size_t j = 0; j < m.cols; ++j) m.at(t, j) = -m.at(t, j);
                for (std::size_t j = 0; j < m.rows; ++j) res.u.at(t, j) = -res.u.at(t, j);
                for (std::size_t i = 0; i < m.rows; ++i) res.u_inv.at(i, t) = -res.u_inv.at(i, t);
            }
        }
    }
    res.rank = t;
    for (std::size_t i = 0; i < t; ++i) res.diagonal.push_back(m.at(i, i));
    return res;
}

// --------------------------------------------------- sparse rank + divisors

// Transform-free elimination for big boundary matrices. Unit pivots clear a
// row/column pair exactly; if no unit entry remains the small leftover core
// goes through the dense routine.
template <typename R>
struct SparseElim {
    std::vector<std::unordered_map<std::uint32_t, R>> row;
    std::vector<std::unordered_set<std::uint32_t>> col_rows;
    std::vector<char> row_active, col_active;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> unit_stack;
    std::size_t active_rows = 0, active_cols = 0;

    SparseElim(std::size_t rows, std::size_t cols)
        : row(rows), col_rows(cols), row_active(rows, 1), col_active(cols, 1),
          active_rows(rows), active_cols(cols) {}

    void set(std::uint32_t r, std::uint32_t c, R val) {
        if (val == R(0)) return;
        row[r][c] = val;
        col_rows[c].insert(r);
        if (ring_traits<R>::is_unit(val)) unit_stack.push_back({r, c});
    }

    void deactivate(std::uint32_t r, std::uint32_t c) {
        row_active[r] = 0;
        col_active[c] = 0;
        --active_rows;
        --active_cols;
        for (const auto& [cc, vv] : row[r]) col_rows[cc].erase(r);
        row[r].clear();
        for (std::uint32_t rr : std::vector<std::uint32_t>(col_rows[c].begin(), col_rows[c].end())) {
            row[rr].erase(c);
            col_rows[c].erase(rr);
        }
    }

    // row r' -= q * row r (both active); maintains indices and unit stack
    void row_op(std::uint32_t rp, std::uint32_t r, const R& q) {
        for (const auto& [c, v] : row[r]) {
            auto it = row[rp].find(c);
            if (it == row[rp].end()) {
                R nv = -q * v;
                if (nv != R(0)) {
                    row[rp].emplace(c, nv);
                    col_rows[c].insert(rp);
                    if (ring_traits<R>::is_unit(nv)) unit_stack.push_back({rp, c});
                }
            } else {
                it->second -= q * v;
                if (it->second == R(0)) {
                    row[rp].erase(it);
                    col_rows[c].erase(rp);
                } else if (ring_traits<R>::is_unit(it->second)) {
                    unit_stack.push_back({rp, c});
                }
            }
        }
    }

    struct Outcome {
        std::size_t rank = 0;
        std::vector<Int> divisors;  // raw diagonal values, |.|, unordered
    };

    Outcome run() {
        Outcome out;
        for (;;) {
            // pick a unit pivot, mildly Markowitz-greedy
            std::uint32_t pr = 0, pc = 0;
            bool found = false;
            std::size_t best_cost = 0;
            int scanned = 0;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> stash;
            while (!unit_stack.empty() && scanned < 24) {
                auto [r, c] = unit_stack.back();
                unit_stack.pop_back();
                if (!row_active[r] || !col_active[c]) continue;
                auto it = row[r].find(c);
                if (it == row[r].end() || !ring_traits<R>::is_unit(it->second)) continue;
                std::size_t cost = (row[r].size() - 1) * (col_rows[c].size() - 1);
                ++scanned;
                if (!found || cost < best_cost) {
                    if (found) stash.push_back({pr, pc});
                    best_cost = cost;
                    pr = r;
                    pc = c;
                    found = true;
                } else {
                    stash.push_back({r, c});
                }
                if (cost == 0) break;
            }
            for (auto& p : stash) unit_stack.push_back(p);
            if (!found) break;

            R pivot = row[pr].at(pc);
            std::vector<std::uint32_t> rows_in_col(col_rows[pc].begin(), col_rows[pc].end());
            for (std::uint32_t rp : rows_in_col) {
                if (rp == pr) continue;
                R q = row[rp].at(pc) / pivot;
                row_op(rp, pr, q);
            }
            deactivate(pr, pc);
            out.divisors.push_back(1);
            ++out.rank;
        }
        // leftover core without unit entries: hand it to the dense routine
        std::vector<std::uint32_t> rs, cs;
        for (std::uint32_t r = 0; r < row.size(); ++r) {
            if (row_active[r] && !row[r].empty()) rs.push_back(r);
        }
        if (!rs.empty()) {
            std::unordered_map<std::uint32_t, std::size_t> cmap;
            for (std::uint32_t r : rs) {
                for (const auto& [c, v] : row[r]) {
                    if (!cmap.count(c)) {
                        cmap.emplace(c, cs.size());
                        cs.push_back(c);
                    }
                }
            }
            if (rs.size() * cs.size() > std::size_t(16) * 1024 * 1024) {
                throw std::runtime_error("sparse elimination: leftover core too large");
            }
            if constexpr (ring_traits<R>::is_field) {
                DenseMatrix<R> core(rs.size(), cs.size());
                for (std::size_t i = 0; i < rs.size(); ++i) {
                    for (const auto& [c, v] : row[rs[i]]) core.at(i, cmap.at(c)) = v;
                }
                auto snf = snf_dense(core);
                out.rank += snf.rank;
                for (std::size_t i = 0; i < snf.rank; ++i) out.divisors.push_back(1);
            } else {
                DenseMatrix<Int> core(rs.size(), cs.size());
                for (std::size_t i = 0; i < rs.size(); ++i) {
                    for (const auto& [c, v] : row[rs[i]]) core.at(i, cmap.at(c)) = v;
                }
                auto snf = snf_dense(core);
                out.rank += snf.rank;
                for (const Int& d : snf.diagonal) out.divisors.push_back(ring_traits<Int>::abs(d));
            }
        }
        return out;
    }
};

// Elementary divisors of a diagonal multiset: pairwise gcd/lcm until chained.
std::vector<Int> divisor_chain(std::vector<Int> d) {
    d.erase(std::remove(d.begin(), d.end(), Int(0)), d.end());
    for (Int& x : d) x = ring_traits<Int>::abs(x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < d.size(); ++i) {
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] == 0) continue;
                Int g = boost::multiprecision::gcd(d[i], d[j]);
                Int l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
                changed = true;
            }
        }
        std::sort(d.begin(), d.end());
    }
    return d;
}

template <typename R>
typename SparseElim<R>::Outcome eliminate_boundary(const ChainComplex& cc, int d) {
    const std::size_t rows = d >= 1 ? cc.dims[std::size_t(d - 1)] : 0;
    const std::size_t cols = d <= int(cc.dims.size()) - 1 && d >= 0 ? cc.dims[std::size_t(d)] : 0;
    SparseElim<R> elim(rows, cols);
    if (d >= 1 && std::size_t(d) < cc.boundary.size()) {
        const auto& cols_list = cc.boundary[std::size_t(d)];
        for (std::uint32_t j = 0; j < cols_list.size(); ++j) {
            for (const auto& [r, s] : cols_list[j]) elim.set(r, j, R(s));
        }
    }
    return elim.run();
}

}  // namespace

SnfResult<Int> smith_normal_form(const IntMatrix& m) { return snf_dense(m); }
SnfResult<Rational> smith_normal_form_q(const DenseMatrix<Rational>& m) { return snf_dense(m); }
SnfResult<GF2> smith_normal_form_z2(const DenseMatrix<GF2>& m) { return snf_dense(m); }

// ------------------------------------------------------------- ChainComplex

ChainComplex ChainComplex::from_complex(const Complex& c) {
    ChainComplex cc;
    const int dim = c.dim();
    if (dim < 0) return cc;
    cc.dims.resize(std::size_t(dim + 1));
    cc.boundary.resize(std::size_t(dim + 1));
    for (int d = 0; d <= dim; ++d) cc.dims[std::size_t(d)] = c.simplices(d).size();

#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (int d = 1; d <= dim; ++d) {
        auto lower = c.simplices(d - 1);
        std::unordered_map<Simplex, std::uint32_t, SimplexHash> lower_index;
        lower_index.reserve(lower.size() * 2);
        for (std::uint32_t i = 0; i < lower.size(); ++i) lower_index.emplace(lower[i], i);
        auto here = c.simplices(d);
        auto& cols = cc.boundary[std::size_t(d)];
        cols.resize(here.size());
        for (std::uint32_t j = 0; j < here.size(); ++j) {
            const Simplex& s = here[j];
            Simplex face;
            face.reserve(s.size() - 1);
            int sign = 1;
            for (std::size_t skip = 0; skip < s.size(); ++skip) {
                face.clear();
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (i != skip) face.push_back(s[i]);
                }
                cols[j].push_back({lower_index.at(face), sign});
                sign = -sign;
            }
        }
    }
    return cc;
}

IntMatrix ChainComplex::boundary_matrix(int d) const {
    const std::size_t rows = d >= 1 && std::size_t(d) <= dims.size() ? dims[std::size_t(d - 1)] : 0;
    const std::size_t cols = d >= 0 && std::size_t(d) < dims.size() ? dims[std::size_t(d)] : 0;
    IntMatrix m(rows, cols);
    if (d >= 1 && std::size_t(d) < boundary.size()) {
        for (std::uint32_t j = 0; j < boundary[std::size_t(d)].size(); ++j) {
            for (const auto& [r, s] : boundary[std::size_t(d)][j]) m.at(r, j) = s;
        }
    }
    return m;
}

bool ChainComplex::boundary_squares_to_zero() const {
    for (std::size_t d = 2; d < boundary.size(); ++d) {
        std::vector<Int> acc(dims[d - 2], 0);
        for (const auto& col : boundary[d]) {
            std::fill(acc.begin(), acc.end(), Int(0));
            for (const auto& [r1, s1] : col) {
                for (const auto& [r2, s2] : boundary[d - 1][r1]) acc[r2] += Int(s1) * s2;
            }
            for (const Int& x : acc) {
                if (x != 0) return false;
            }
        }
    }
    return true;
}

// ----------------------------------------------------------------- homology

HomologyGroups homology(const Complex& c, Coeff coeff) {
    HomologyGroups h;
    const int dim = c.dim();
    if (dim < 0) return h;
    ChainComplex cc = ChainComplex::from_complex(c);
    h.betti.assign(std::size_t(dim + 1), 0);
    h.torsion.assign(std::size_t(dim + 1), {});

    std::vector<std::size_t> rank(std::size_t(dim + 2), 0);
    std::vector<std::vector<Int>> divisors(std::size_t(dim + 2));

    if (coeff == Coeff::Z2) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
        for (int d = 1; d <= dim; ++d) {
            auto out = eliminate_boundary<GF2>(cc, d);
            rank[std::size_t(d)] = out.rank;
        }
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
        for (int d = 1; d <= dim; ++d) {
            auto out = eliminate_boundary<Int>(cc, d);
            rank[std::size_t(d)] = out.rank;
            divisors[std::size_t(d)] = std::move(out.divisors);
        }
    }

    for (int k = 0; k <= dim; ++k) {
        std::size_t n = cc.dims[std::size_t(k)];
        h.betti[std::size_t(k)] =
            int(n - rank[std::size_t(k)] - rank[std::size_t(k + 1)]);
        if (coeff == Coeff::Z) {
            for (const Int& t : divisor_chain(divisors[std::size_t(k + 1)])) {
                if (t > 1) h.torsion[std::size_t(k)].push_back(t);
            }
        }
    }
    return h;
}

// --------------------------------------------------- homology with generators

template <typename R>
std::vector<R> HomologyDimBasis<R>::reduce_cycle(const std::vector<R>& chain) const {
    if (chain.size() != n) throw std::invalid_argument("reduce_cycle: chain size mismatch");
    std::vector<R> y(z, R(0));
    for (std::size_t i = 0; i < z; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (kernel_coords.at(i, j) != R(0) && chain[j] != R(0)) {
                y[i] += kernel_coords.at(i, j) * chain[j];
            }
        }
    }
    std::vector<R> g(z, R(0));
    for (std::size_t i = 0; i < z; ++i) {
        for (std::size_t j = 0; j < z; ++j) {
            if (quotient_u.at(i, j) != R(0) && y[j] != R(0)) g[i] += quotient_u.at(i, j) * y[j];
        }
    }
    std::vector<R> out;
    for (std::size_t i = 0; i < z; ++i) {
        if (orders[i] == 1) continue;
        if (orders[i] > 1) {
            if constexpr (std::is_same_v<R, Int>) {
                Int v = g[i] % orders[i];
                if (v < 0) v += orders[i];
                out.push_back(v);
            } else {
                out.push_back(g[i]);
            }
        } else {
            out.push_back(g[i]);
        }
    }
    return out;
}

template <typename R>
std::vector<std::size_t> HomologyDimBasis<R>::nontrivial_gens() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < z; ++i) {
        if (orders[i] != 1) out.push_back(i);
    }
    return out;
}

template struct HomologyDimBasis<Int>;
template struct HomologyDimBasis<Rational>;
template struct HomologyDimBasis<GF2>;

namespace {

template <typename R>
HomologyBasis<R> hwg_impl(const Complex& c) {
    HomologyBasis<R> out;
    const int dim = c.dim();
    if (dim < 0) return out;
    ChainComplex cc = ChainComplex::from_complex(c);
    out.dims.resize(std::size_t(dim + 1));

    std::vector<SnfResult<R>> snf(std::size_t(dim + 2));
    for (int d = 0; d <= dim; ++d) {
        IntMatrix bi = cc.boundary_matrix(d);
        DenseMatrix<R> b(bi.rows, bi.cols);
        for (std::size_t i = 0; i < bi.a.size(); ++i) b.a[i] = R(bi.a[i]);
        snf[std::size_t(d)] = snf_dense(b);
    }

    for (int k = 0; k <= dim; ++k) {
        HomologyDimBasis<R>& hb = out.dims[std::size_t(k)];
        const auto& s = snf[std::size_t(k)];
        hb.n = cc.dims[std::size_t(k)];
        hb.rank_lower = s.rank;
        hb.z = hb.n - s.rank;

        // kernel coordinates: trailing rows of V^-1, kernel basis: trailing V cols
        hb.kernel_coords = DenseMatrix<R>(hb.z, hb.n);
        for (std::size_t i = 0; i < hb.z; ++i) {
            for (std::size_t j = 0; j < hb.n; ++j) {
                hb.kernel_coords.at(i, j) = s.v_inv.at(s.rank + i, j);
            }
        }
        DenseMatrix<R> kernel(hb.n, hb.z);
        for (std::size_t i = 0; i < hb.n; ++i) {
            for (std::size_t j = 0; j < hb.z; ++j) kernel.at(i, j) = s.v.at(i, s.rank + j);
        }

        // boundaries from above, in kernel coordinates
        DenseMatrix<R> bcoords;
        if (k + 1 <= dim) {
            IntMatrix bi = cc.boundary_matrix(k + 1);
            DenseMatrix<R> b(bi.rows, bi.cols);
            for (std::size_t i = 0; i < bi.a.size(); ++i) b.a[i] = R(bi.a[i]);
            bcoords = hb.kernel_coords.mul(b);
        } else {
            bcoords = DenseMatrix<R>(hb.z, 0);
        }
        auto sq = snf_dense(bcoords);
        hb.quotient_u = sq.u;
        hb.orders.assign(hb.z, Int(0));
        for (std::size_t i = 0; i < sq.rank; ++i) {
            if constexpr (std::is_same_v<R, Int>) {
                hb.orders[i] = ring_traits<Int>::abs(sq.diagonal[i]);
            } else {
                hb.orders[i] = 1;
            }
        }
        hb.gens = kernel.mul(sq.u_inv);
    }
    return out;
}

}  // namespace

HomologyBasis<Int> homology_with_generators(const Complex& c) { return hwg_impl<Int>(c); }
HomologyBasis<Rational> homology_with_generators_q(const Complex& c) { return hwg_impl<Rational>(c); }
HomologyBasis<GF2> homology_with_generators_z2(const Complex& c) { return hwg_impl<GF2>(c); }

// ------------------------------------------------------------- induced maps

namespace {

int sort_parity(std::vector<VertexId> w) {
    int parity = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] > w[j]) parity = -parity;
        }
    }
    return parity;
}

// chain image of one source-basis chain vector under the chain map of phi
template <typename R>
std::vector<R> push_chain(const SimplicialMap& phi, int k,
                          const std::vector<R>& chain,
                          const std::unordered_map<Simplex, std::uint32_t, SimplexHash>& target_index,
                          std::size_t target_n) {
    std::vector<R> out(target_n, R(0));
    auto source_k = phi.source()->simplices(k);
    for (std::size_t j = 0; j < source_k.size(); ++j) {
        if (chain[j] == R(0)) continue;
        const Simplex& s = source_k[j];
        std::vector<VertexId> w;
        w.reserve(s.size());
        for (VertexId v : s) w.push_back(phi(v));
        Simplex im = sorted_simplex(Simplex(w));
        if (im.size() != s.size()) continue;  // degenerate image contributes zero
        int sign = sort_parity(w);
        out[target_index.at(im)] += chain[j] * R(sign);
    }
    return out;
}

template <typename R>
std::vector<DenseMatrix<R>> induced_from_bases(const SimplicialMap& phi,
                                               const HomologyBasis<R>& hx,
                                               const HomologyBasis<R>& hy) {
    const int kmax = std::max(phi.source()->dim(), phi.target()->dim());
    std::vector<DenseMatrix<R>> out;
    for (int k = 0; k <= kmax; ++k) {
        std::vector<std::size_t> gx, gy;
        if (k < int(hx.dims.size())) gx = hx.dims[std::size_t(k)].nontrivial_gens();
        if (k < int(hy.dims.size())) gy = hy.dims[std::size_t(k)].nontrivial_gens();
        DenseMatrix<R> m(gy.size(), gx.size());
        if (!gx.empty() && !gy.empty()) {
            auto target_k = phi.target()->simplices(k);
            std::unordered_map<Simplex, std::uint32_t, SimplexHash> tindex;
            for (std::uint32_t i = 0; i < target_k.size(); ++i) tindex.emplace(target_k[i], i);
            const auto& bx = hx.dims[std::size_t(k)];
            const auto& by = hy.dims[std::size_t(k)];
            for (std::size_t jj = 0; jj < gx.size(); ++jj) {
                std::vector<R> chain(bx.n, R(0));
                for (std::size_t i = 0; i < bx.n; ++i) chain[i] = bx.gens.at(i, gx[jj]);
                std::vector<R> pushed = push_chain<R>(phi, k, chain, tindex, by.n);
                std::vector<R> coords = by.reduce_cycle(pushed);
                for (std::size_t i = 0; i < coords.size(); ++i) m.at(i, jj) = coords[i];
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

template <typename R>
std::vector<DenseMatrix<R>> induced_impl(const SimplicialMap& phi) {
    HomologyBasis<R> hx = hwg_impl<R>(*phi.source());
    HomologyBasis<R> hy = hwg_impl<R>(*phi.target());
    return induced_from_bases(phi, hx, hy);
}

}  // namespace

std::vector<DenseMatrix<Rational>> induced_map(const SimplicialMap& phi, Coeff coeff) {
    std::vector<DenseMatrix<Rational>> out;
    if (coeff == Coeff::Q) return induced_impl<Rational>(phi);
    if (coeff == Coeff::Z) {
        for (const auto& m : induced_impl<Int>(phi)) {
            DenseMatrix<Rational> q(m.rows, m.cols);
            for (std::size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rational(m.a[i]);
            out.push_back(std::move(q));
        }
        return out;
    }
    for (const auto& m : induced_impl<GF2>(phi)) {
        DenseMatrix<Rational> q(m.rows, m.cols);
        for (std::size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rational(int(m.a[i].v));
        out.push_back(std::move(q));
    }
    return out;
}

bool is_surjective_on_homology(const SimplicialMap& phi, Coeff coeff) {
    const int kmax = phi.target()->dim();
    if (kmax < 0) return true;
    if (coeff == Coeff::Z) {
        HomologyBasis<Int> hx = hwg_impl<Int>(*phi.source());
        HomologyBasis<Int> hy = hwg_impl<Int>(*phi.target());
        auto maps = induced_from_bases(phi, hx, hy);
        for (int k = 0; k <= kmax; ++k) {
            const auto& by = hy.dims[std::size_t(k)];
            auto gens = by.nontrivial_gens();
            if (gens.empty()) continue;
            const IntMatrix& m = maps[std::size_t(k)];
            // adjoin the target relations: order * e_i for torsion generators
            std::size_t torsion = 0;
            for (std::size_t g : gens) torsion += (by.orders[g] > 1);
            IntMatrix a(gens.size(), m.cols + torsion);
            for (std::size_t i = 0; i < m.rows; ++i) {
                for (std::size_t j = 0; j < m.cols; ++j) a.at(i, j) = m.at(i, j);
            }
            std::size_t col = m.cols;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (by.orders[gens[i]] > 1) a.at(i, col++) = by.orders[gens[i]];
            }
            auto snf = snf_dense(a);
            if (snf.rank != gens.size()) return false;
            for (const Int& d : snf.diagonal) {
                if (d != 1 && d != -1) return false;
            }
        }
        return true;
    }
    // field case: rank of the induced matrix must reach the target betti
    auto ranks_ok = [&](const auto& maps, const auto& hy) {
        for (int k = 0; k <= kmax; ++k) {
            int betti = hy.dims[std::size_t(k)].betti();
            if (betti == 0) continue;
            if (std::size_t(k) >= maps.size()) return false;
            auto snf = snf_dense(maps[std::size_t(k)]);
            if (int(snf.rank) < betti) return false;
        }
        return true;
    };
    if (coeff == Coeff::Q) {
        HomologyBasis<Rational> hx = hwg_impl<Rational>(*phi.source());
        HomologyBasis<Rational> hy = hwg_impl<Rational>(*phi.target());
        return ranks_ok(induced_from_bases(phi, hx, hy), hy);
    }
    HomologyBasis<GF2> hx = hwg_impl<GF2>(*phi.source());
    HomologyBasis<GF2> hy = hwg_impl<GF2>(*phi.target());
    return ranks_ok(induced_from_bases(phi, hx, hy), hy);
}

// ------------------------------------------------------------------ degrees

int degree_mod2(const SimplicialMap& phi, bool relative) {
    const Complex& x = *phi.source();
    const Complex& t = *phi.target();
    const int n = x.dim();
    if (t.dim() != n) throw std::invalid_argument("degree_mod2: dimension mismatch");
    if (!x.is_pure() || !t.is_pure()) throw std::invalid_argument("degree_mod2: complexes must be pure");
    if (!relative) {
        if (boundary_subcomplex(phi.source()).size() != 0 ||
            boundary_subcomplex(phi.target()).size() != 0) {
            throw std::invalid_argument("degree_mod2: absolute degree needs closed complexes");
        }
    }
    std::unordered_map<Simplex, long long, SimplexHash> count;
    for (const Simplex& c : t.simplices(n)) count.emplace(c, 0);
    for (const Simplex& s : x.simplices(n)) {
        Simplex im = phi.image(s);
        if (int(im.size()) - 1 == n) ++count.at(im);
    }
    int parity = -1;
    for (const auto& [c, k] : count) {
        int p = int(k % 2);
        if (parity < 0) parity = p;
        else if (parity != p) {
            throw std::runtime_error("degree_mod2: preimage count parity is not constant across top cells");
        }
    }
    return parity < 0 ? 0 : parity;
}

long long degree_int(const SimplicialMap& phi, const Orientation& src,
                     const Orientation& dst) {
    const Complex& x = *phi.source();
    const Complex& t = *phi.target();
    const int n = x.dim();
    if (t.dim() != n) throw std::invalid_argument("degree_int: dimension mismatch");
    std::unordered_map<Simplex, long long, SimplexHash> sum;
    for (const Simplex& c : t.simplices(n)) sum.emplace(c, 0);
    for (const Simplex& s : x.simplices(n)) {
        std::vector<VertexId> w;
        w.reserve(s.size());
        for (VertexId v : s) w.push_back(phi(v));
        Simplex im = sorted_simplex(Simplex(w));
        if (int(im.size()) - 1 != n) continue;
        sum.at(im) += (long long)(src.sign.at(s)) * dst.sign.at(im) * sort_parity(w);
    }
    bool first = true;
    long long deg = 0;
    for (const auto& [c, v] : sum) {
        if (first) { deg = v; first = false; }
        else if (v != deg) {
            throw std::runtime_error("degree_int: signed count is not constant across top cells");
        }
    }
    return deg;
}

long long euler_characteristic(const Complex& c) {
    long long chi = 0;
    int sign = 1;
    for (int f : c.f_vector()) {
        chi += sign * (long long)f;
        sign = -sign;
    }
    return chi;
}

}  // namespace plhyp
