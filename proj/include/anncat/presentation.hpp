#pragma once

// Finitely generated abelian groups Z^g / col(Rel) and homomorphisms between
// them, with kernels, images and preimages computed through Smith forms.

#include "anncat/integer.hpp"
#include "anncat/matrix.hpp"
#include "anncat/smith.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace anncat {

using BigVec = std::vector<BigInt>;

class GroupPresentation {
public:
    GroupPresentation() = default;
    GroupPresentation(std::size_t rank, IntMatrix<BigInt> relations) : rank_(rank), rel_(std::move(relations)) {
        if (rel_.rows() != rank_) throw std::invalid_argument("relation matrix must have one row per generator");
    }

    /// Z/d_1 x ... x Z/d_k with a diagonal relation matrix.
    static GroupPresentation cyclic_product(const std::vector<BigInt>& orders) {
        IntMatrix<BigInt> rel(orders.size(), orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = orders[i];
        return {orders.size(), std::move(rel)};
    }

    [[nodiscard]] std::size_t rank() const { return rank_; }
    [[nodiscard]] const IntMatrix<BigInt>& relations() const { return rel_; }

    /// Nonunit invariant factors; a 0 entry marks a free Z summand.
    [[nodiscard]] std::vector<BigInt> invariant_factors() const {
        auto snf = smith_normal_form(rel_);
        std::vector<BigInt> out;
        for (std::size_t i = 0; i < rank_; ++i) {
            BigInt d = i < snf.rank ? snf.S(i, i) : BigInt(0);
            if (d != 1) out.push_back(d);
        }
        return out;
    }

    /// Group order, or nullopt when infinite.
    [[nodiscard]] std::optional<BigInt> order() const {
        BigInt p = 1;
        for (const auto& d : invariant_factors()) {
            if (d == 0) return std::nullopt;
            p *= d;
        }
        return p;
    }

    /// True when x lies in the relation lattice (x represents 0).
    [[nodiscard]] bool is_zero(const BigVec& x) const { return solve_lattice(rel_, x).has_value(); }
    [[nodiscard]] bool equal(const BigVec& a, const BigVec& b) const {
        BigVec d(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
        return is_zero(d);
    }

    /// Some z with A z = x, if one exists.
    static std::optional<BigVec> solve_lattice(const IntMatrix<BigInt>& a, const BigVec& x);

private:
    std::size_t rank_ = 0;
    IntMatrix<BigInt> rel_;
};

/// Solves A z = x for many right-hand sides against one Smith form.
class LatticeSolver {
public:
    explicit LatticeSolver(const IntMatrix<BigInt>& a) : cols_(a.cols()) {
        if (cols_ > 0) snf_ = smith_normal_form(a);
    }

    [[nodiscard]] std::optional<BigVec> solve(const BigVec& x) const {
        if (cols_ == 0) {
            for (const auto& v : x)
                if (v != 0) return std::nullopt;
            return BigVec{};
        }
        auto c = snf_.U.apply(x);
        BigVec y(cols_, BigInt(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < snf_.rank) {
                if (c[i] % snf_.S(i, i) != 0) return std::nullopt;
                y[i] = c[i] / snf_.S(i, i);
            } else if (c[i] != 0) {
                return std::nullopt;
            }
        }
        return snf_.V.apply(y);
    }

private:
    std::size_t cols_;
    SmithResult<BigInt> snf_;
};

inline std::optional<BigVec> GroupPresentation::solve_lattice(const IntMatrix<BigInt>& a, const BigVec& x) {
    return LatticeSolver(a).solve(x);
}

class Homomorphism {
public:
    /// Throws std::invalid_argument unless the matrix maps domain relations
    /// into the codomain relation lattice.
    Homomorphism(GroupPresentation domain, GroupPresentation codomain, IntMatrix<BigInt> matrix)
        : dom_(std::move(domain)), cod_(std::move(codomain)), m_(std::move(matrix)) {
        if (m_.rows() != cod_.rank() || m_.cols() != dom_.rank())
            throw std::invalid_argument("homomorphism matrix has the wrong shape");
        auto image_of_rel = m_ * dom_.relations();
        for (std::size_t j = 0; j < image_of_rel.cols(); ++j)
            if (!cod_.is_zero(image_of_rel.column(j)))
                throw std::invalid_argument("matrix does not respect the domain relations");
    }

    [[nodiscard]] const GroupPresentation& domain() const { return dom_; }
    [[nodiscard]] const GroupPresentation& codomain() const { return cod_; }
    [[nodiscard]] const IntMatrix<BigInt>& matrix() const { return m_; }
    [[nodiscard]] BigVec apply(const BigVec& x) const { return m_.apply(x); }

private:
    GroupPresentation dom_, cod_;
    IntMatrix<BigInt> m_;
};

/// A subgroup together with its embedding: generator j of `group` maps to
/// column j of `embedding` in the ambient generators.
struct Subgroup {
    GroupPresentation group;
    IntMatrix<BigInt> embedding;
};

struct KernelImage {
    Subgroup kernel;
    Subgroup image;
};

namespace detail {

struct LatticeBasis {
    IntMatrix<BigInt> basis;  // columns
};

// Basis of the span of the columns of P: col(P) = U_inv * col(S).
inline LatticeBasis column_lattice(const IntMatrix<BigInt>& p) {
    auto snf = smith_normal_form(p);
    const std::size_t g = p.rows(), r = snf.rank;
    LatticeBasis lb{IntMatrix<BigInt>(g, r)};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < g; ++k) lb.basis(k, i) = snf.U_inv(k, i) * snf.S(i, i);
    return lb;
}

}  // namespace detail

/// Kernel and image of h. The kernel is the subgroup of the domain; the image
/// is presented as Z^g / K (K the preimage lattice of the codomain relations)
/// and embedded into the codomain through h's matrix.
inline KernelImage kernel_image(const Homomorphism& h) {
    const auto& dom = h.domain();
    const auto& cod = h.codomain();
    const std::size_t g = dom.rank();
    // x in preimage lattice K  <=>  H x in col(Rel_cod)  <=>  [H | -Rel_cod] (x; y) = 0
    auto neg_rel = cod.relations();
    for (std::size_t i = 0; i < neg_rel.rows(); ++i) neg_rel.negate_row(i);
    auto n = h.matrix().hconcat(neg_rel);
    auto snf = smith_normal_form(n);
    IntMatrix<BigInt> proj(g, n.cols() - snf.rank);
    for (std::size_t j = snf.rank; j < n.cols(); ++j)
        for (std::size_t i = 0; i < g; ++i) proj(i, j - snf.rank) = snf.V(i, j);
    auto k = detail::column_lattice(proj);

    KernelImage out;
    // Domain relations inside K, in K's basis coordinates (exact division).
    IntMatrix<BigInt> rel_coords(k.basis.cols(), dom.relations().cols());
    for (std::size_t j = 0; j < dom.relations().cols(); ++j) {
        auto z = GroupPresentation::solve_lattice(k.basis, dom.relations().column(j));
        if (!z) throw std::logic_error("domain relations escape the kernel lattice");
        for (std::size_t i = 0; i < z->size(); ++i) rel_coords(i, j) = (*z)[i];
    }
    out.kernel = Subgroup{GroupPresentation(k.basis.cols(), rel_coords), k.basis};
    out.image = Subgroup{GroupPresentation(g, k.basis), h.matrix()};
    return out;
}

/// Preimages under a fixed homomorphism: some x with h(x) = target modulo
/// the codomain relations. Coordinates are reduced against diagonal domain
/// relations.
class PreimageSolver {
public:
    explicit PreimageSolver(const Homomorphism& h)
        : dom_rank_(h.domain().rank()), solver_(h.matrix().hconcat(h.codomain().relations())) {
        const auto& rel = h.domain().relations();
        if (rel.rows() != rel.cols()) return;
        for (std::size_t i = 0; i < rel.rows(); ++i)
            for (std::size_t j = 0; j < rel.cols(); ++j)
                if (i != j && rel(i, j) != 0) return;
        for (std::size_t i = 0; i < rel.rows(); ++i) diag_.push_back(rel(i, i));
    }

    [[nodiscard]] std::optional<BigVec> solve(const BigVec& target) const {
        auto z = solver_.solve(target);
        if (!z) return std::nullopt;
        BigVec x(z->begin(), z->begin() + static_cast<std::ptrdiff_t>(dom_rank_));
        for (std::size_t i = 0; i < diag_.size(); ++i)
            if (diag_[i] != 0) x[i] = mod_floor(x[i], diag_[i]);
        return x;
    }

private:
    std::size_t dom_rank_;
    LatticeSolver solver_;
    std::vector<BigInt> diag_;
};

inline std::optional<BigVec> solve_preimage(const Homomorphism& h, const BigVec& target) {
    return PreimageSolver(h).solve(target);
}

}  // namespace anncat
