#pragma once

// Every equation in this library is a signed sum of cochain values, each
// optionally acted on by a ring element from the left or right:
//
//     sum_i  c_i * (r_i .) f_i(args_i) (. r_i)   over lhs  ==  same over rhs
//
// One description serves three purposes: numeric evaluation on concrete
// tables, witness reporting (both sides), and linear row assembly over the
// integer coordinates of a CochainSpace.

#include "anncat/cochain.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace anncat {

enum class Act : std::uint8_t { none, left, right };

struct Term {
    int coef;
    Act act;
    Index scalar;
    Kind kind;
    Tuple args;
};

struct Equation {
    std::vector<Term> lhs, rhs;
    void clear() {
        lhs.clear();
        rhs.clear();
    }
};

// Builders: f(args), r.f(args), f(args).r
inline void term(std::vector<Term>& side, int coef, Kind k, Index a, Index b, Index c = 0, Index d = 0) {
    side.push_back({coef, Act::none, 0, k, {a, b, c, d}});
}
inline void term_left(std::vector<Term>& side, int coef, Index r, Kind k, Index a, Index b, Index c = 0, Index d = 0) {
    side.push_back({coef, Act::left, r, k, {a, b, c, d}});
}
inline void term_right(std::vector<Term>& side, int coef, Kind k, Index a, Index b, Index c, Index r) {
    side.push_back({coef, Act::right, r, k, {a, b, c, 0}});
}
inline void term_right4(std::vector<Term>& side, int coef, Kind k, const Tuple& args, Index r) {
    side.push_back({coef, Act::right, r, k, args});
}

/// Kind -> table lookup used during evaluation.
class CochainLookup {
public:
    CochainLookup() { tables_.fill(nullptr); }
    template <std::size_t N>
    explicit CochainLookup(const CochainBundle<N>& b) : CochainLookup() {
        add(b);
    }
    template <std::size_t N>
    CochainLookup& add(const CochainBundle<N>& b) {
        for (const auto& c : b.parts) tables_[static_cast<std::size_t>(c.kind())] = &c;
        return *this;
    }
    CochainLookup& add(const Cochain& c) {
        tables_[static_cast<std::size_t>(c.kind())] = &c;
        return *this;
    }
    [[nodiscard]] const Cochain& operator[](Kind k) const {
        const Cochain* c = tables_[static_cast<std::size_t>(k)];
        if (!c) throw std::invalid_argument("no " + std::string(kind_name(k)) + " table supplied");
        return *c;
    }

private:
    std::array<const Cochain*, kKindCount> tables_;
};

inline Index eval_term(const Term& t, const CochainLookup& f, const Bimodule& m) {
    Index v = f[t.kind].at(t.args);
    if (t.act == Act::left)
        v = m.left(t.scalar, v);
    else if (t.act == Act::right)
        v = m.right(v, t.scalar);
    return m.group().times(t.coef, v);
}

inline Index eval_side(const std::vector<Term>& side, const CochainLookup& f, const Bimodule& m) {
    Index acc = 0;
    for (const auto& t : side) acc = m.group().add(acc, eval_term(t, f, m));
    return acc;
}

/// Accumulates k rows (one per coordinate of M) over a CochainSpace.
/// Coefficients are kept reduced modulo the exponent e of M, and row i is
/// scaled by e / d_i so that every row lives in (Z/e)^w.
class RowAssembler {
public:
    explicit RowAssembler(const CochainSpace& space)
        : space_(space), k_(space.coords_per_slot()), e_(space.ambient()->group().exponent()) {
        rows_.assign(k_, std::vector<std::int64_t>(space.dimension(), 0));
    }

    void clear() {
        for (auto col : touched_)
            for (auto& r : rows_) r[col] = 0;
        touched_.clear();
    }

    void add(const Term& t, int sign) {
        const auto& amb = *space_.ambient();
        const std::size_t flat = flat_index(t.args, arity(t.kind), amb.ring_order());
        const std::int64_t slot = space_.slot_of(t.kind, flat);
        if (slot < 0) return;
        const std::vector<std::int64_t>* mat = nullptr;
        if (t.act == Act::left) mat = &amb.left_matrix(t.scalar);
        if (t.act == Act::right) mat = &amb.right_matrix(t.scalar);
        const std::int64_t c = static_cast<std::int64_t>(sign) * t.coef;
        for (std::size_t j = 0; j < k_; ++j) {
            const std::size_t col = static_cast<std::size_t>(slot) * k_ + j;
            for (std::size_t i = 0; i < k_; ++i) {
                const std::int64_t a = mat ? (*mat)[i * k_ + j] : (i == j ? 1 : 0);
                if (a == 0) continue;
                rows_[i][col] = mod_floor<std::int64_t>(rows_[i][col] + c * a, e_);
            }
            touched_.push_back(col);
        }
    }

    void add_equation(const Equation& eq) {
        for (const auto& t : eq.lhs) add(t, +1);
        for (const auto& t : eq.rhs) add(t, -1);
    }

    /// Row for coordinate i, scaled into (Z/e)^w.
    [[nodiscard]] std::vector<std::int64_t> scaled_row(std::size_t i) const {
        const std::int64_t scale = e_ / space_.ambient()->group().invariant_factors()[i];
        std::vector<std::int64_t> r = rows_[i];
        if (scale != 1)
            for (auto& v : r) v = mod_floor<std::int64_t>(v * scale, e_);
        return r;
    }
    [[nodiscard]] bool row_is_zero(std::size_t i) const {
        const std::int64_t d = space_.ambient()->group().invariant_factors()[i];
        for (auto col : touched_)
            if (rows_[i][col] % d != 0) return false;
        return true;
    }
    [[nodiscard]] std::size_t coord_count() const { return k_; }

private:
    const CochainSpace& space_;
    std::size_t k_;
    std::int64_t e_;
    std::vector<std::vector<std::int64_t>> rows_;
    std::vector<std::size_t> touched_;
};

}  // namespace anncat
