#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "plhyp/complex.hpp"

namespace plhyp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Coeff { Z, Z2, Q };

const char* to_string(Coeff c);

/// GF(2) scalar, so the elimination machinery can run unchanged over a field.
struct GF2 {
    std::uint8_t v = 0;
    GF2() = default;
    GF2(int x) : v(std::uint8_t(((x % 2) + 2) % 2)) {}
    GF2(const Int& x) : v(std::uint8_t(x % 2 != 0)) {}
    friend GF2 operator+(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
    friend GF2 operator-(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
    friend GF2 operator*(GF2 a, GF2 b) { return GF2(a.v & b.v); }
    friend GF2 operator/(GF2 a, GF2 b) { return b.v ? a : GF2(0); }
    GF2 operator-() const { return *this; }
    GF2& operator+=(GF2 o) { v ^= o.v; return *this; }
    GF2& operator-=(GF2 o) { v ^= o.v; return *this; }
    GF2& operator*=(GF2 o) { v &= o.v; return *this; }
    friend bool operator==(GF2 a, GF2 b) { return a.v == b.v; }
    friend bool operator!=(GF2 a, GF2 b) { return a.v != b.v; }
};

template <typename R>
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<R> a;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, R(0)) {}

    R& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const R& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = R(1);
        return m;
    }

    DenseMatrix mul(const DenseMatrix& other) const {
        DenseMatrix out(rows, other.cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t k = 0; k < cols; ++k) {
                const R& x = at(i, k);
                if (x == R(0)) continue;
                for (std::size_t j = 0; j < other.cols; ++j) {
                    if (other.at(k, j) != R(0)) out.at(i, j) += x * other.at(k, j);
                }
            }
        }
        return out;
    }

    bool operator==(const DenseMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

using IntMatrix = DenseMatrix<Int>;

/// d = u * m * v with u, v unimodular and the diagonal of d a divisibility
/// chain d1 | d2 | ... Transform inverses are carried along for solving.
template <typename R>
struct SnfResult {
    DenseMatrix<R> d, u, v, u_inv, v_inv;
    std::vector<R> diagonal;  // nonzero entries, in chain order
    std::size_t rank = 0;
};

SnfResult<Int> smith_normal_form(const IntMatrix& m);
SnfResult<Rational> smith_normal_form_q(const DenseMatrix<Rational>& m);
SnfResult<GF2> smith_normal_form_z2(const DenseMatrix<GF2>& m);

/// Simplicial chain complex with the sorted-vertex sign convention:
/// d[v0..vk] = sum_i (-1)^i [v0..^vi..vk].
struct ChainComplex {
    // column j of boundary[d] lists (row, sign) pairs for the j-th d-simplex
    std::vector<std::vector<std::vector<std::pair<std::uint32_t, int>>>> boundary;
    std::vector<std::size_t> dims;  // chain group ranks per dimension

    static ChainComplex from_complex(const Complex& c);
    IntMatrix boundary_matrix(int d) const;  // dense copy
    bool boundary_squares_to_zero() const;
};

struct HomologyGroups {
    std::vector<int> betti;                // per dim, 0..dim
    std::vector<std::vector<Int>> torsion; // divisibility chains, entries > 1

    // equality pads with trivial groups, so complexes of different dimension
    // compare by their actual homology
    bool operator==(const HomologyGroups& o) const {
        const std::size_t n = betti.size() > o.betti.size() ? betti.size() : o.betti.size();
        for (std::size_t i = 0; i < n; ++i) {
            int a = i < betti.size() ? betti[i] : 0;
            int b = i < o.betti.size() ? o.betti[i] : 0;
            if (a != b) return false;
            static const std::vector<Int> kEmpty;
            const auto& ta = i < torsion.size() ? torsion[i] : kEmpty;
            const auto& tb = i < o.torsion.size() ? o.torsion[i] : kEmpty;
            if (ta != tb) return false;
        }
        return true;
    }
};

HomologyGroups homology(const Complex& c, Coeff coeff);

/// Per-dimension homology presentation with explicit generating cycles,
/// retained transforms for coordinatizing arbitrary cycles. Heavier than
/// homology(); intended for desk-scale complexes.
template <typename R>
struct HomologyDimBasis {
    std::size_t n = 0;          // chain rank
    std::size_t z = 0;          // cycle rank
    std::size_t rank_lower = 0; // rank of the boundary out of this dimension
    DenseMatrix<R> kernel_coords;  // z x n: rows of V^-1 picking kernel coordinates
    DenseMatrix<R> quotient_u;     // z x z: U of the presentation SNF
    DenseMatrix<R> gens;           // n x z cycle matrix
    std::vector<Int> orders;       // per generator: 0 free, 1 trivial, d>1 torsion

    int betti() const {
        int b = 0;
        for (const Int& o : orders) b += (o == 0);
        return b;
    }
    /// Coordinates of an arbitrary cycle in the generator basis, reduced
    /// modulo orders; entries for order-1 generators dropped.
    std::vector<R> reduce_cycle(const std::vector<R>& chain) const;
    std::vector<std::size_t> nontrivial_gens() const;
};

template <typename R>
struct HomologyBasis {
    std::vector<HomologyDimBasis<R>> dims;  // 0..dim
};

HomologyBasis<Int> homology_with_generators(const Complex& c);
HomologyBasis<Rational> homology_with_generators_q(const Complex& c);
HomologyBasis<GF2> homology_with_generators_z2(const Complex& c);

/// Matrices of the induced map on homology in the computed bases, one per
/// dimension 0..max(dim source, dim target). Degenerate simplex images
/// contribute zero. Entries are exact; integral for Z and Z2 coefficients.
std::vector<DenseMatrix<Rational>> induced_map(const SimplicialMap& phi, Coeff coeff);

bool is_surjective_on_homology(const SimplicialMap& phi, Coeff coeff);

/// Mod-2 degree: per top cell of the target, the parity of the number of top
/// simplices mapping isomorphically onto it; must be constant across cells.
/// With relative=false both complexes must be closed (empty boundary).
int degree_mod2(const SimplicialMap& phi, bool relative = true);

/// Signed degree for oriented pseudomanifolds; constant across top cells.
long long degree_int(const SimplicialMap& phi, const Orientation& src,
                     const Orientation& dst);

long long euler_characteristic(const Complex& c);

}  // namespace plhyp
