#pragma once

#include "anncat/abelian_group.hpp"
#include "anncat/ring.hpp"
#include "anncat/validation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace anncat {

/// Unvalidated bimodule data. Exactly one of invariant_factors / group_add is set.
struct RawBimodule {
    std::optional<std::vector<std::int64_t>> invariant_factors;
    std::optional<std::vector<std::vector<long long>>> group_add;
    std::vector<std::vector<long long>> left_action;   // n x m: (r, u) -> ru
    std::vector<std::vector<long long>> right_action;  // m x n: (u, r) -> ur
};

struct BimoduleLaw {
    const char* label;
    const char* formula;
};

inline constexpr BimoduleLaw kBimoduleLaws[] = {
    {"a", "s(u1+u2)=su1+su2"}, {"a'", "(u1+u2)s=u1s+u2s"}, {"b", "(s1+s2)u=s1u+s2u"},
    {"b'", "u(s1+s2)=us1+us2"}, {"c", "s1(s2u)=(s1s2)u"},   {"c'", "(us1)s2=u(s1s2)"},
    {"d", "1u=u"},              {"d'", "u1=u"},             {"e", "(ru)s=r(us)"},
};

namespace detail {

inline FiniteAbelianGroup group_of(const RawBimodule& raw) {
    if (raw.invariant_factors.has_value() == raw.group_add.has_value())
        throw FormatError("bimodule needs exactly one of invariant_factors or group_add");
    if (raw.invariant_factors) return FiniteAbelianGroup::from_invariant_factors(*raw.invariant_factors);
    auto rep = validate_group_table(*raw.group_add, "group-");
    if (!rep.ok()) throw AxiomError("bimodule group is not an abelian group", rep);
    return FiniteAbelianGroup::from_table(*raw.group_add);
}

inline void check_action_shape(const std::vector<std::vector<long long>>& t, std::size_t rows, std::size_t cols,
                               std::size_t range, const char* name) {
    if (t.size() != rows)
        throw FormatError(std::string(name) + " has " + std::to_string(t.size()) + " rows, expected " + std::to_string(rows));
    for (std::size_t i = 0; i < rows; ++i) {
        if (t[i].size() != cols)
            throw FormatError(std::string(name) + " row " + std::to_string(i) + " has " + std::to_string(t[i].size()) +
                              " entries, expected " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j)
            if (t[i][j] < 0 || static_cast<std::size_t>(t[i][j]) >= range)
                throw FormatError(std::string(name) + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") out of range");
    }
}

}  // namespace detail

/// Checks laws a..e and a'..d' exhaustively. A group table that is not an
/// abelian group is reported under "group-*" labels.
inline ValidationReport validate_bimodule(const FiniteRing& ring, const RawBimodule& raw) {
    if (raw.invariant_factors.has_value() == raw.group_add.has_value())
        throw FormatError("bimodule needs exactly one of invariant_factors or group_add");
    if (raw.group_add) {
        auto rep = validate_group_table(*raw.group_add, "group-");
        if (!rep.ok()) return rep;
    }
    const FiniteAbelianGroup g = detail::group_of(raw);
    const std::size_t n = ring.order(), m = g.order();
    detail::check_action_shape(raw.left_action, n, m, m, "left_action");
    detail::check_action_shape(raw.right_action, m, n, m, "right_action");

    auto L = [&](Index r, Index u) { return static_cast<Index>(raw.left_action[r][u]); };
    auto R = [&](Index u, Index r) { return static_cast<Index>(raw.right_action[u][r]); };
    ValidationReport rep;
    auto fail = [&](const BimoduleLaw& law, std::vector<Index> w) {
        rep.record(law.label, std::string("law ") + law.label + ") " + law.formula + " violated", std::move(w));
    };
    const auto& laws = kBimoduleLaws;
    const auto N = static_cast<Index>(n), Mo = static_cast<Index>(m);
    for (Index s = 0; s < N; ++s)
        for (Index u1 = 0; u1 < Mo; ++u1)
            for (Index u2 = 0; u2 < Mo; ++u2) {
                if (L(s, g.add(u1, u2)) != g.add(L(s, u1), L(s, u2))) fail(laws[0], {s, u1, u2});
                if (R(g.add(u1, u2), s) != g.add(R(u1, s), R(u2, s))) fail(laws[1], {u1, u2, s});
            }
    for (Index s1 = 0; s1 < N; ++s1)
        for (Index s2 = 0; s2 < N; ++s2)
            for (Index u = 0; u < Mo; ++u) {
                if (L(ring.add(s1, s2), u) != g.add(L(s1, u), L(s2, u))) fail(laws[2], {s1, s2, u});
                if (R(u, ring.add(s1, s2)) != g.add(R(u, s1), R(u, s2))) fail(laws[3], {u, s1, s2});
                if (L(s1, L(s2, u)) != L(ring.mul(s1, s2), u)) fail(laws[4], {s1, s2, u});
                if (R(R(u, s1), s2) != R(u, ring.mul(s1, s2))) fail(laws[5], {u, s1, s2});
                if (R(L(s1, u), s2) != L(s1, R(u, s2))) fail(laws[8], {s1, u, s2});
            }
    for (Index u = 0; u < Mo; ++u) {
        if (L(ring.one(), u) != u) fail(laws[6], {u});
        if (R(u, ring.one()) != u) fail(laws[7], {u});
    }
    return rep;
}

/// A validated R-bimodule M. Also carries the actions as integer matrices on
/// the cyclic coordinates of M, for the linear algebra.
class Bimodule {
public:
    Bimodule(FiniteRing ring, const RawBimodule& raw) : ring_(std::move(ring)) {
        auto rep = validate_bimodule(ring_, raw);
        if (!rep.ok()) throw AxiomError("not an R-bimodule", rep);
        group_ = detail::group_of(raw);
        const std::size_t n = ring_.order(), m = group_.order();
        left_.resize(n * m);
        right_.resize(n * m);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t u = 0; u < m; ++u) {
                left_[r * m + u] = static_cast<Index>(raw.left_action[r][u]);
                right_[u * n + r] = static_cast<Index>(raw.right_action[u][r]);
            }
        build_matrices();
    }

    [[nodiscard]] const FiniteRing& ring() const { return ring_; }
    [[nodiscard]] const FiniteAbelianGroup& group() const { return group_; }
    [[nodiscard]] std::size_t ring_order() const { return ring_.order(); }
    [[nodiscard]] std::size_t order() const { return group_.order(); }

    [[nodiscard]] Index left(Index r, Index u) const { return left_[r * group_.order() + u]; }
    [[nodiscard]] Index right(Index u, Index r) const { return right_[u * ring_.order() + r]; }

    /// k x k matrix of u -> ru on coordinates (row-major, entry [i*k + j]).
    [[nodiscard]] const std::vector<std::int64_t>& left_matrix(Index r) const { return left_mat_[r]; }
    [[nodiscard]] const std::vector<std::int64_t>& right_matrix(Index r) const { return right_mat_[r]; }

    [[nodiscard]] RawBimodule raw() const {
        RawBimodule b;
        if (group_.built_from_factors())
            b.invariant_factors = group_.invariant_factors();
        else
            b.group_add = group_.table();
        const std::size_t n = ring_.order(), m = group_.order();
        b.left_action.assign(n, std::vector<long long>(m));
        b.right_action.assign(m, std::vector<long long>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t u = 0; u < m; ++u) {
                b.left_action[r][u] = left(static_cast<Index>(r), static_cast<Index>(u));
                b.right_action[u][r] = right(static_cast<Index>(u), static_cast<Index>(r));
            }
        return b;
    }

    friend bool operator==(const Bimodule& a, const Bimodule& b) {
        return a.ring_ == b.ring_ && a.group_.table() == b.group_.table() && a.left_ == b.left_ && a.right_ == b.right_;
    }

private:
    void build_matrices() {
        const std::size_t n = ring_.order(), k = group_.coord_count();
        left_mat_.assign(n, std::vector<std::int64_t>(k * k));
        right_mat_.assign(n, std::vector<std::int64_t>(k * k));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t j = 0; j < k; ++j) {
                const Index gj = group_.generator(j);
                const auto& lc = group_.coords(left(static_cast<Index>(r), gj));
                const auto& rc = group_.coords(right(gj, static_cast<Index>(r)));
                for (std::size_t i = 0; i < k; ++i) {
                    left_mat_[r][i * k + j] = lc[i];
                    right_mat_[r][i * k + j] = rc[i];
                }
            }
    }

    FiniteRing ring_;
    FiniteAbelianGroup group_;
    std::vector<Index> left_, right_;
    std::vector<std::vector<std::int64_t>> left_mat_, right_mat_;
};

/// M = R acting on itself by multiplication.
inline Bimodule regular_bimodule(const FiniteRing& ring) {
    const auto raw_ring = ring.raw();
    RawBimodule b;
    b.group_add = raw_ring.add;
    b.left_action = raw_ring.mul;
    b.right_action = raw_ring.mul;
    return Bimodule(ring, b);
}

/// M = Z/m with r acting as multiplication by the integer r (mod m) on both
/// sides; requires the ring to be Z/n with m | n.
inline Bimodule cyclic_bimodule(long long n, long long m) {
    if (m < 2 || n % m != 0) throw std::invalid_argument("Z/m is a Z/n-bimodule only when m divides n");
    RawBimodule b;
    b.invariant_factors = std::vector<std::int64_t>{m};
    b.left_action.assign(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(m)));
    b.right_action.assign(static_cast<std::size_t>(m), std::vector<long long>(static_cast<std::size_t>(n)));
    for (long long r = 0; r < n; ++r)
        for (long long u = 0; u < m; ++u) {
            b.left_action[r][u] = (r * u) % m;
            b.right_action[u][r] = (u * r) % m;
        }
    return Bimodule(make_cyclic_ring(n), b);
}

}  // namespace anncat
