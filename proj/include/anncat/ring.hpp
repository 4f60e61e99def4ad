#pragma once

#include "anncat/abelian_group.hpp"
#include "anncat/validation.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace anncat {

/// Unvalidated ring tables, as parsed from input.
struct RawRing {
    std::vector<std::vector<long long>> add;
    std::vector<std::vector<long long>> mul;
    long long one = 1;
};

/// Checks every unital ring axiom exhaustively. Zero is index 0. Malformed
/// tables throw FormatError; axiom failures go into the report.
inline ValidationReport validate_ring(const RawRing& raw) {
    const std::size_t n = raw.add.size();
    if (n < 2) throw FormatError("ring order must be at least 2, got " + std::to_string(n));
    if (raw.mul.size() != n)
        throw FormatError("mul table has " + std::to_string(raw.mul.size()) + " rows, expected " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (raw.mul[i].size() != n)
            throw FormatError("mul row " + std::to_string(i) + " has " + std::to_string(raw.mul[i].size()) +
                              " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j)
            if (raw.mul[i][j] < 0 || static_cast<std::size_t>(raw.mul[i][j]) >= n)
                throw FormatError("mul entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    if (raw.one < 0 || static_cast<std::size_t>(raw.one) >= n) throw FormatError("one index out of range");

    ValidationReport rep = validate_group_table(raw.add, "add-");
    auto A = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(raw.add[a][b]); };
    auto M = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(raw.mul[a][b]); };
    auto I = [](std::size_t v) { return static_cast<Index>(v); };
    const auto one = static_cast<std::size_t>(raw.one);

    if (one == 0) rep.record("zero-ne-one", "zero and one coincide", {0});
    for (std::size_t x = 0; x < n; ++x)
        if (M(one, x) != x || M(x, one) != x)
            rep.record("mul-identity", "unit axiom violated: 1*x = x*1 = x fails for x = " + std::to_string(x), {I(x)});
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (M(M(x, y), z) != M(x, M(y, z)))
                    rep.record("mul-associative", "multiplication is not associative", {I(x), I(y), I(z)});
                if (M(x, A(y, z)) != A(M(x, y), M(x, z)))
                    rep.record("left-distributive", "x(y+z) = xy+xz fails", {I(x), I(y), I(z)});
                if (M(A(x, y), z) != A(M(x, z), M(y, z)))
                    rep.record("right-distributive", "(x+y)z = xz+yz fails", {I(x), I(y), I(z)});
            }
    return rep;
}

class FiniteRing {
public:
    /// Throws FormatError or AxiomError unless `raw` is a unital ring.
    explicit FiniteRing(const RawRing& raw) {
        auto rep = validate_ring(raw);
        if (!rep.ok()) throw AxiomError("not a unital ring", rep);
        n_ = raw.add.size();
        one_ = static_cast<Index>(raw.one);
        add_.resize(n_ * n_);
        mul_.resize(n_ * n_);
        neg_.resize(n_);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) {
                add_[a * n_ + b] = static_cast<Index>(raw.add[a][b]);
                mul_[a * n_ + b] = static_cast<Index>(raw.mul[a][b]);
                if (raw.add[a][b] == 0) neg_[a] = static_cast<Index>(b);
            }
    }

    [[nodiscard]] std::size_t order() const { return n_; }
    [[nodiscard]] Index zero() const { return 0; }
    [[nodiscard]] Index one() const { return one_; }
    [[nodiscard]] Index add(Index a, Index b) const { return add_[a * n_ + b]; }
    [[nodiscard]] Index mul(Index a, Index b) const { return mul_[a * n_ + b]; }
    [[nodiscard]] Index neg(Index a) const { return neg_[a]; }

    [[nodiscard]] RawRing raw() const {
        RawRing r;
        r.one = one_;
        r.add.assign(n_, std::vector<long long>(n_));
        r.mul.assign(n_, std::vector<long long>(n_));
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) {
                r.add[a][b] = add(static_cast<Index>(a), static_cast<Index>(b));
                r.mul[a][b] = mul(static_cast<Index>(a), static_cast<Index>(b));
            }
        return r;
    }

    friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
        return a.n_ == b.n_ && a.one_ == b.one_ && a.add_ == b.add_ && a.mul_ == b.mul_;
    }

private:
    std::size_t n_ = 0;
    Index one_ = 1;
    std::vector<Index> add_, mul_, neg_;
};

/// Z/n.
inline FiniteRing make_cyclic_ring(long long n) {
    if (n < 2) throw std::invalid_argument("invalid ring order " + std::to_string(n) + ": need n >= 2");
    RawRing r;
    const auto un = static_cast<std::size_t>(n);
    r.add.assign(un, std::vector<long long>(un));
    r.mul.assign(un, std::vector<long long>(un));
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) {
            r.add[a][b] = (a + b) % n;
            r.mul[a][b] = (a * b) % n;
        }
    return FiniteRing(r);
}

/// r1 x r2 with (a, b) stored at index a * |r2| + b. The unit is (1, 1).
inline FiniteRing make_product_ring(const FiniteRing& r1, const FiniteRing& r2) {
    const std::size_t n1 = r1.order(), n2 = r2.order(), n = n1 * n2;
    RawRing r;
    r.add.assign(n, std::vector<long long>(n));
    r.mul.assign(n, std::vector<long long>(n));
    auto flat = [n2](std::size_t a, std::size_t b) { return static_cast<long long>(a * n2 + b); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto a1 = static_cast<Index>(i / n2), b1 = static_cast<Index>(i % n2);
            const auto a2 = static_cast<Index>(j / n2), b2 = static_cast<Index>(j % n2);
            r.add[i][j] = flat(r1.add(a1, a2), r2.add(b1, b2));
            r.mul[i][j] = flat(r1.mul(a1, a2), r2.mul(b1, b2));
        }
    r.one = flat(r1.one(), r2.one());
    return FiniteRing(r);
}

}  // namespace anncat
