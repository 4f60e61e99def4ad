#pragma once

// Linear systems over Z/e, streamed.
//
// A condition system "W x = 0 in a product of cyclic groups" is scaled into
// (Z/e)^w with e the exponent. Rows are folded one at a time into an echelon
// generating set of the same Z/e-submodule, so memory stays O(w^2) no matter
// how many condition instances there are. Kernels and preimages are then read
// off a Smith form of the (at most w x w) echelon matrix.

#include "anncat/integer.hpp"
#include "anncat/matrix.hpp"
#include "anncat/smith.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace anncat {

class ModularRowReducer {
public:
    ModularRowReducer(std::size_t width, std::int64_t modulus) : width_(width), e_(modulus), basis_(width) {
        if (modulus < 1) throw std::invalid_argument("modulus must be positive");
        if (modulus > (std::int64_t{1} << 62)) throw OverflowError("modulus too large for the row reducer");
    }

    [[nodiscard]] std::size_t width() const { return width_; }
    [[nodiscard]] std::int64_t modulus() const { return e_; }

    /// Fold in one row; entries are interpreted mod e.
    void add_row(std::vector<std::int64_t> r) {
        if (r.size() != width_) throw std::invalid_argument("row width mismatch");
        for (auto& v : r) v = mod_floor(v, e_);
        for (std::size_t c = 0; c < width_; ++c) {
            if (r[c] == 0) continue;
            auto& b = basis_[c];
            if (b.empty()) {
                b = std::move(r);
                ++rank_;
                return;
            }
            if (r[c] % b[c] == 0) {
                const std::int64_t q = r[c] / b[c];
                for (std::size_t j = c; j < width_; ++j) r[j] = combine(1, r[j], -q, b[j]);
                continue;
            }
            auto [g, s, t] = xgcd(b[c], r[c]);
            const std::int64_t p = b[c] / g, q = r[c] / g;
            // [[s, t], [q, -p]] has determinant -1.
            for (std::size_t j = c; j < width_; ++j) {
                const std::int64_t bj = b[j], rj = r[j];
                b[j] = combine(s, bj, t, rj);
                r[j] = combine(q, bj, -p, rj);
            }
        }
    }

    [[nodiscard]] std::size_t row_count() const { return rank_; }

    /// The echelon rows as an integer matrix (entries in [0, e)).
    [[nodiscard]] IntMatrix<BigInt> matrix() const {
        IntMatrix<BigInt> m(rank_, width_);
        std::size_t i = 0;
        for (const auto& b : basis_) {
            if (b.empty()) continue;
            for (std::size_t j = 0; j < width_; ++j) m(i, j) = b[j];
            ++i;
        }
        return m;
    }

private:
    [[nodiscard]] std::int64_t combine(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) const {
        if (small_) {
            std::int64_t v = (a % e_) * x + (b % e_) * y;
            v %= e_;
            return v < 0 ? v + e_ : v;
        }
        __int128 v = static_cast<__int128>(a) * x + static_cast<__int128>(b) * y;
        v %= e_;
        if (v < 0) v += e_;
        return static_cast<std::int64_t>(v);
    }

    std::size_t width_;
    std::int64_t e_;
    bool small_ = e_ < (std::int64_t{1} << 30);
    std::vector<std::vector<std::int64_t>> basis_;
    std::size_t rank_ = 0;
};

/// { x in Z^w : B x = 0 mod e } = V * diag(f) Z^w, with the transforms kept
/// for coordinate changes.
struct ModularKernel {
    std::int64_t modulus = 1;
    IntMatrix<BigInt> V, V_inv;
    std::vector<BigInt> scale;  // f_i = e / gcd(s_i, e)

    [[nodiscard]] std::size_t width() const { return scale.size(); }

    /// Basis of the kernel lattice as columns.
    [[nodiscard]] IntMatrix<BigInt> basis() const {
        IntMatrix<BigInt> b = V;
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t i = 0; i < b.rows(); ++i) b(i, j) *= scale[j];
        return b;
    }
    /// det of the kernel lattice, i.e. its index in Z^w.
    [[nodiscard]] BigInt index() const {
        BigInt p = 1;
        for (const auto& f : scale) p *= f;
        return p;
    }
    /// Coordinates of a lattice vector in the basis; nullopt if x is not in the lattice.
    [[nodiscard]] std::optional<std::vector<BigInt>> coordinates(const std::vector<BigInt>& x) const {
        auto y = V_inv.apply(x);
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (y[i] % scale[i] != 0) return std::nullopt;
            y[i] /= scale[i];
        }
        return y;
    }
};

inline ModularKernel modular_kernel(const ModularRowReducer& red) {
    const BigInt e = red.modulus();
    auto snf = smith_normal_form(red.matrix());
    ModularKernel k;
    k.modulus = red.modulus();
    k.V = std::move(snf.V);
    k.V_inv = std::move(snf.V_inv);
    k.scale.resize(red.width());
    for (std::size_t i = 0; i < red.width(); ++i) {
        BigInt s = i < snf.rank ? snf.S(i, i) : BigInt(0);
        k.scale[i] = e / gcd_value(s, e);
    }
    return k;
}

/// Row lattice rowspan(B) + e Z^w, as a basis of rows diag(g) * V_inv.
struct ModularRowLattice {
    IntMatrix<BigInt> V, V_inv;
    std::vector<BigInt> scale;  // g_i = gcd(s_i, e)

    [[nodiscard]] BigInt index() const {
        BigInt p = 1;
        for (const auto& g : scale) p *= g;
        return p;
    }
    [[nodiscard]] std::vector<BigInt> basis_vector(std::size_t i) const {
        auto r = V_inv.row(i);
        for (auto& v : r) v *= scale[i];
        return r;
    }
};

inline ModularRowLattice modular_row_lattice(const ModularRowReducer& red) {
    const BigInt e = red.modulus();
    auto snf = smith_normal_form(red.matrix());
    ModularRowLattice l;
    l.V = std::move(snf.V);
    l.V_inv = std::move(snf.V_inv);
    l.scale.resize(red.width());
    for (std::size_t i = 0; i < red.width(); ++i) {
        BigInt s = i < snf.rank ? snf.S(i, i) : BigInt(0);
        l.scale[i] = gcd_value(s, e);
    }
    return l;
}

/// Solve A x = t (mod e) for augmented rows [A | t] folded into a reducer of
/// width w+1. Returns some solution with entries in [0, e), or nullopt.
inline std::optional<std::vector<BigInt>> modular_solve(const ModularRowReducer& augmented) {
    const std::size_t w = augmented.width() - 1;
    const BigInt e = augmented.modulus();
    auto full = augmented.matrix();
    auto a = full.block(0, 0, full.rows(), w);
    auto snf = smith_normal_form(a);
    std::vector<BigInt> t(full.rows());
    for (std::size_t i = 0; i < full.rows(); ++i) t[i] = full(i, w);
    auto c = snf.U.apply(t);
    std::vector<BigInt> y(w, BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        BigInt ci = mod_floor(c[i], e);
        BigInt s = i < snf.rank ? snf.S(i, i) : BigInt(0);
        BigInt g = gcd_value(s, e);
        if (ci % g != 0) return std::nullopt;
        if (i >= w || s == 0) continue;
        // s y = c (mod e)  <=>  (s/g) y = c/g (mod e/g)
        BigInt m = e / g;
        if (m == 1) continue;
        auto inv = xgcd(BigInt(mod_floor(BigInt(s / g), m)), m);
        y[i] = mod_floor(BigInt((ci / g) * inv.s), m);
    }
    auto x = snf.V.apply(y);
    for (auto& v : x) v = mod_floor(v, e);
    return x;
}

}  // namespace anncat
