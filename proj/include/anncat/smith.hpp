#pragma once

// Smith normal form over the integers with full transform bookkeeping.

#include "anncat/integer.hpp"
#include "anncat/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace anncat {

/// U * A * V == S, with U and V unimodular and S diagonal with
/// d_1 | d_2 | ... | d_r, all d_i > 0, zeros after position r.
/// U_inv and V_inv are kept alongside so callers never invert.
template <class T>
struct SmithResult {
    IntMatrix<T> U, S, V, U_inv, V_inv;
    std::size_t rank = 0;

    [[nodiscard]] std::vector<T> diagonal() const {
        std::vector<T> d;
        for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
        return d;
    }
};

namespace detail {

template <class T>
class SmithWorker {
public:
    explicit SmithWorker(const IntMatrix<T>& a)
        : s_(a),
          u_(IntMatrix<T>::identity(a.rows())),
          u_inv_(IntMatrix<T>::identity(a.rows())),
          v_(IntMatrix<T>::identity(a.cols())),
          v_inv_(IntMatrix<T>::identity(a.cols())) {}

    SmithResult<T> run() {
        const std::size_t m = s_.rows(), n = s_.cols();
        std::size_t t = 0;
        for (; t < std::min(m, n); ++t) {
            auto pivot = smallest_nonzero(t, t);
            if (!pivot) break;
            move_to(*pivot, t);
            for (;;) {
                eliminate(t);
                if (auto p = smallest_in_cross(t)) {
                    move_to(*p, t);
                    continue;
                }
                if (auto bad = non_divisible(t)) {
                    row_add(t, bad->first, T(1));
                    continue;
                }
                break;
            }
            if (s_(t, t) < T(0)) row_negate(t);
        }
        return SmithResult<T>{std::move(u_), std::move(s_), std::move(v_), std::move(u_inv_), std::move(v_inv_), t};
    }

private:
    using Pos = std::pair<std::size_t, std::size_t>;

    std::optional<Pos> smallest_nonzero(std::size_t r0, std::size_t c0) const {
        std::optional<Pos> best;
        T best_abs{};
        for (std::size_t i = r0; i < s_.rows(); ++i)
            for (std::size_t j = c0; j < s_.cols(); ++j) {
                const T& v = s_(i, j);
                if (v == T(0)) continue;
                T a = abs_value(v);
                if (!best || a < best_abs) {
                    best = Pos{i, j};
                    best_abs = a;
                    if (a == T(1)) return best;
                }
            }
        return best;
    }

    // Nonzero entries left in row t / column t after elimination are
    // remainders smaller than the pivot.
    std::optional<Pos> smallest_in_cross(std::size_t t) const {
        std::optional<Pos> best;
        T best_abs{};
        auto consider = [&](std::size_t i, std::size_t j) {
            const T& v = s_(i, j);
            if (v == T(0)) return;
            T a = abs_value(v);
            if (!best || a < best_abs) {
                best = Pos{i, j};
                best_abs = a;
            }
        };
        for (std::size_t i = t + 1; i < s_.rows(); ++i) consider(i, t);
        for (std::size_t j = t + 1; j < s_.cols(); ++j) consider(t, j);
        return best;
    }

    std::optional<Pos> non_divisible(std::size_t t) const {
        const T& p = s_(t, t);
        for (std::size_t i = t + 1; i < s_.rows(); ++i)
            for (std::size_t j = t + 1; j < s_.cols(); ++j)
                if (s_(i, j) % p != T(0)) return Pos{i, j};
        return std::nullopt;
    }

    void move_to(Pos p, std::size_t t) {
        row_swap(p.first, t);
        col_swap(p.second, t);
    }

    void eliminate(std::size_t t) {
        const T p = s_(t, t);
        for (std::size_t i = t + 1; i < s_.rows(); ++i) {
            if (s_(i, t) == T(0)) continue;
            T q = s_(i, t) / p;
            if (q != T(0)) row_add(i, t, T(0) - q);
        }
        for (std::size_t j = t + 1; j < s_.cols(); ++j) {
            if (s_(t, j) == T(0)) continue;
            T q = s_(t, j) / p;
            if (q != T(0)) col_add(j, t, T(0) - q);
        }
    }

    // row dst += k * row src
    void row_add(std::size_t dst, std::size_t src, const T& k) {
        s_.add_row_multiple(dst, src, k);
        u_.add_row_multiple(dst, src, k);
        u_inv_.add_col_multiple(src, dst, T(0) - k);
    }
    // col dst += k * col src
    void col_add(std::size_t dst, std::size_t src, const T& k) {
        s_.add_col_multiple(dst, src, k);
        v_.add_col_multiple(dst, src, k);
        v_inv_.add_row_multiple(src, dst, T(0) - k);
    }
    void row_swap(std::size_t a, std::size_t b) {
        s_.swap_rows(a, b);
        u_.swap_rows(a, b);
        u_inv_.swap_cols(a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        s_.swap_cols(a, b);
        v_.swap_cols(a, b);
        v_inv_.swap_rows(a, b);
    }
    void row_negate(std::size_t r) {
        s_.negate_row(r);
        u_.negate_row(r);
        u_inv_.negate_col(r);
    }

    IntMatrix<T> s_, u_, u_inv_, v_, v_inv_;
};

}  // namespace detail

template <class T>
SmithResult<T> smith_normal_form(const IntMatrix<T>& a) {
    return detail::SmithWorker<T>(a).run();
}

}  // namespace anncat
