#pragma once

// Finite abelian groups given by an element-indexed addition table, with an
// explicit isomorphism onto a product of cyclic groups Z/d_1 x ... x Z/d_k
// (d_1 | d_2 | ... | d_k). The coordinates feed the integer linear algebra.

#include "anncat/integer.hpp"
#include "anncat/matrix.hpp"
#include "anncat/smith.hpp"
#include "anncat/validation.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace anncat {

using Coords = std::vector<std::int64_t>;

/// Check the abelian group axioms of a square table with identity index 0.
/// Law names: "closure", "identity", "commutative", "associative", "inverse".
inline ValidationReport validate_group_table(const std::vector<std::vector<long long>>& add, const std::string& prefix = "") {
    ValidationReport rep;
    const std::size_t n = add.size();
    if (n == 0) throw FormatError("group table is empty");
    for (std::size_t i = 0; i < n; ++i) {
        if (add[i].size() != n)
            throw FormatError("table row " + std::to_string(i) + " has " + std::to_string(add[i].size()) +
                              " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j)
            if (add[i][j] < 0 || static_cast<std::size_t>(add[i][j]) >= n)
                throw FormatError("table entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                  std::to_string(add[i][j]) + " out of range [0," + std::to_string(n) + ")");
    }
    auto A = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(add[a][b]); };
    auto I = [](std::size_t v) { return static_cast<Index>(v); };
    for (std::size_t x = 0; x < n; ++x)
        if (A(0, x) != x || A(x, 0) != x)
            rep.record(prefix + "identity", "0 is not an additive identity for " + std::to_string(x), {I(x)});
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (A(x, y) != A(y, x)) rep.record(prefix + "commutative", "addition is not commutative", {I(x), I(y)});
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (A(A(x, y), z) != A(x, A(y, z)))
                    rep.record(prefix + "associative", "addition is not associative", {I(x), I(y), I(z)});
    for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (std::size_t y = 0; y < n && !found; ++y) found = A(x, y) == 0 && A(y, x) == 0;
        if (!found) rep.record(prefix + "inverse", "no additive inverse for " + std::to_string(x), {I(x)});
    }
    return rep;
}

class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<std::int64_t>{}) {}

    /// Product Z/d_1 x ... x Z/d_k; elements are tuples flattened with the
    /// first coordinate most significant. Factors must satisfy d_i | d_{i+1}
    /// and d_i >= 2; the empty list is the trivial group.
    static FiniteAbelianGroup from_invariant_factors(const std::vector<std::int64_t>& factors) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i] < 2) throw FormatError("invariant factor " + std::to_string(factors[i]) + " must be >= 2");
            if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
                throw FormatError("invariant factors must form a divisibility chain");
        }
        return FiniteAbelianGroup(factors);
    }

    /// Group from a validated addition table; throws AxiomError otherwise.
    static FiniteAbelianGroup from_table(const std::vector<std::vector<long long>>& add) {
        auto rep = validate_group_table(add);
        if (!rep.ok()) throw AxiomError("not an abelian group", rep);
        return FiniteAbelianGroup(add);
    }

    [[nodiscard]] std::size_t order() const { return order_; }
    [[nodiscard]] const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
    [[nodiscard]] std::size_t coord_count() const { return factors_.size(); }
    [[nodiscard]] std::int64_t exponent() const {
        return factors_.empty() ? 1 : factors_.back();
    }

    [[nodiscard]] Index add(Index a, Index b) const { return add_[a * order_ + b]; }
    [[nodiscard]] Index neg(Index a) const { return neg_[a]; }
    [[nodiscard]] Index sub(Index a, Index b) const { return add(a, neg(b)); }
    [[nodiscard]] Index times(std::int64_t k, Index a) const {
        Index acc = 0;
        Index base = k < 0 ? neg(a) : a;
        for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) acc = add(acc, base);
        return acc;
    }

    [[nodiscard]] const Coords& coords(Index a) const { return coords_[a]; }
    [[nodiscard]] Index from_coords(const Coords& c) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * static_cast<std::size_t>(factors_[i]) +
                                                               static_cast<std::size_t>(mod_floor<std::int64_t>(c[i], factors_[i]));
        return by_coords_[idx];
    }
    // Element whose coordinates are the j-th unit vector.
    [[nodiscard]] Index generator(std::size_t j) const {
        Coords c(factors_.size(), 0);
        c[j] = 1;
        return from_coords(c);
    }

    /// The element-indexed addition table (for serialization).
    [[nodiscard]] std::vector<std::vector<long long>> table() const {
        std::vector<std::vector<long long>> t(order_, std::vector<long long>(order_));
        for (std::size_t a = 0; a < order_; ++a)
            for (std::size_t b = 0; b < order_; ++b) t[a][b] = add_[a * order_ + b];
        return t;
    }
    [[nodiscard]] bool built_from_factors() const { return from_factors_; }

private:
    explicit FiniteAbelianGroup(const std::vector<std::int64_t>& factors) : factors_(factors), from_factors_(true) {
        order_ = 1;
        for (auto d : factors_) order_ *= static_cast<std::size_t>(d);
        coords_.resize(order_);
        by_coords_.resize(order_);
        for (std::size_t idx = 0; idx < order_; ++idx) {
            Coords c(factors_.size());
            std::size_t rest = idx;
            for (std::size_t i = factors_.size(); i-- > 0;) {
                c[i] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(factors_[i]));
                rest /= static_cast<std::size_t>(factors_[i]);
            }
            coords_[idx] = c;
            by_coords_[idx] = static_cast<Index>(idx);
        }
        add_.resize(order_ * order_);
        neg_.resize(order_);
        for (std::size_t a = 0; a < order_; ++a) {
            Coords nc(factors_.size());
            for (std::size_t i = 0; i < factors_.size(); ++i) nc[i] = -coords_[a][i];
            neg_[a] = from_coords(nc);
            for (std::size_t b = 0; b < order_; ++b) {
                Coords s(factors_.size());
                for (std::size_t i = 0; i < factors_.size(); ++i) s[i] = coords_[a][i] + coords_[b][i];
                add_[a * order_ + b] = from_coords(s);
            }
        }
    }

    // Decompose a table-given group: present it on all elements with
    // relations e_a + e_b - e_{a+b}, then read coordinates off the Smith form.
    explicit FiniteAbelianGroup(const std::vector<std::vector<long long>>& add) : from_factors_(false) {
        order_ = add.size();
        add_.resize(order_ * order_);
        for (std::size_t a = 0; a < order_; ++a)
            for (std::size_t b = 0; b < order_; ++b) add_[a * order_ + b] = static_cast<Index>(add[a][b]);
        neg_.resize(order_);
        for (std::size_t a = 0; a < order_; ++a)
            for (std::size_t b = 0; b < order_; ++b)
                if (add_[a * order_ + b] == 0) neg_[a] = static_cast<Index>(b);

        // Relations as columns; e_0 itself is a relation.
        std::vector<std::vector<std::int64_t>> rels;
        rels.push_back(std::vector<std::int64_t>(order_, 0));
        rels.back()[0] = 1;
        for (std::size_t a = 1; a < order_; ++a)
            for (std::size_t b = a; b < order_; ++b) {
                std::vector<std::int64_t> r(order_, 0);
                r[a] += 1;
                r[b] += 1;
                r[add_[a * order_ + b]] -= 1;
                rels.push_back(std::move(r));
            }
        IntMatrix<BigInt> rel(order_, rels.size());
        for (std::size_t j = 0; j < rels.size(); ++j)
            for (std::size_t i = 0; i < order_; ++i) rel(i, j) = rels[j][i];
        auto snf = smith_normal_form(rel);
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < order_; ++i) {
            BigInt d = i < snf.rank ? snf.S(i, i) : BigInt(0);
            if (d == 0) throw FormatError("table does not describe a finite group");
            if (d != 1) {
                kept.push_back(i);
                factors_.push_back(to_int64(d));
            }
        }
        coords_.resize(order_);
        for (std::size_t a = 0; a < order_; ++a) {
            Coords c;
            for (std::size_t k = 0; k < kept.size(); ++k)
                c.push_back(to_int64(mod_floor<BigInt>(snf.U(kept[k], a), BigInt(factors_[k]))));
            coords_[a] = std::move(c);
        }
        by_coords_.assign(order_, 0);
        for (std::size_t a = 0; a < order_; ++a) {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(coords_[a][i]);
            by_coords_[idx] = static_cast<Index>(a);
        }
    }

    std::size_t order_ = 1;
    std::vector<std::int64_t> factors_;
    std::vector<Index> add_{0};
    std::vector<Index> neg_{0};
    std::vector<Coords> coords_;
    std::vector<Index> by_coords_;
    bool from_factors_ = true;
};

}  // namespace anncat
