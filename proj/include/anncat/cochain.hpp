#pragma once

// Normalized cochains R^k -> M stored as dense tables, plus the bundles that
// the rest of the library passes around: structures (xi, eta, alpha, lambda,
// rho), MacLane quadruples (sigma, alpha, lambda, rho) and pairs (mu, nu).

#include "anncat/bimodule.hpp"
#include "anncat/integer.hpp"
#include "anncat/validation.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anncat {

using Ambient = std::shared_ptr<const Bimodule>;

inline Ambient make_ambient(Bimodule m) { return std::make_shared<const Bimodule>(std::move(m)); }

enum class Kind : std::uint8_t { xi, eta, alpha, lambda, rho, sigma, mu, nu };
inline constexpr std::size_t kKindCount = 8;

inline constexpr std::array<Kind, 5> kStructureKinds{Kind::xi, Kind::eta, Kind::alpha, Kind::lambda, Kind::rho};
inline constexpr std::array<Kind, 4> kQuadrupleKinds{Kind::sigma, Kind::alpha, Kind::lambda, Kind::rho};
inline constexpr std::array<Kind, 2> kPairKinds{Kind::mu, Kind::nu};

constexpr std::size_t arity(Kind k) {
    switch (k) {
        case Kind::eta:
        case Kind::mu:
        case Kind::nu: return 2;
        case Kind::sigma: return 4;
        default: return 3;
    }
}

constexpr std::string_view kind_name(Kind k) {
    constexpr std::array<std::string_view, kKindCount> names{"xi", "eta", "alpha", "lambda", "rho", "sigma", "mu", "nu"};
    return names[static_cast<std::size_t>(k)];
}

inline Kind parse_kind(std::string_view s) {
    for (std::size_t i = 0; i < kKindCount; ++i)
        if (kind_name(static_cast<Kind>(i)) == s) return static_cast<Kind>(i);
    throw FormatError("unknown cochain kind '" + std::string(s) + "'");
}

using Tuple = std::array<Index, 4>;

/// True when the normalization pattern of `kind` forces the value at t to 0.
inline bool is_forced_zero(Kind kind, const Tuple& t, Index one) {
    auto unitish = [one](Index a) { return a == 0 || a == one; };
    switch (kind) {
        case Kind::xi: return t[0] == 0 || t[1] == 0 || t[2] == 0;
        case Kind::eta:
        case Kind::mu: return t[0] == 0 || t[1] == 0;
        case Kind::alpha: return unitish(t[0]) || unitish(t[1]) || unitish(t[2]);
        case Kind::lambda: return unitish(t[0]) || t[1] == 0 || t[2] == 0;
        case Kind::rho: return t[2] == one || t[0] == 0 || t[1] == 0 || t[2] == 0;
        case Kind::nu: return unitish(t[0]) || unitish(t[1]);
        case Kind::sigma: {
            const bool x = t[0] == 0, y = t[1] == 0, z = t[2] == 0, w = t[3] == 0;
            return (x && y) || (z && w) || (x && z) || (y && w) || (y && z);
        }
    }
    return false;
}

inline std::size_t table_size(Kind kind, std::size_t n) {
    std::size_t s = 1;
    for (std::size_t i = 0; i < arity(kind); ++i) s *= n;
    return s;
}

inline std::size_t flat_index(const Tuple& t, std::size_t k, std::size_t n) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * n + t[i];
    return idx;
}

inline Tuple unflatten(std::size_t idx, std::size_t k, std::size_t n) {
    Tuple t{0, 0, 0, 0};
    for (std::size_t i = k; i-- > 0;) {
        t[i] = static_cast<Index>(idx % n);
        idx /= n;
    }
    return t;
}

/// Tuples not forced to zero, in lexicographic order.
inline std::vector<Tuple> free_support(Kind kind, const Bimodule& amb) {
    const std::size_t n = amb.ring_order(), k = arity(kind);
    std::vector<Tuple> out;
    for (std::size_t idx = 0; idx < table_size(kind, n); ++idx) {
        Tuple t = unflatten(idx, k, n);
        if (!is_forced_zero(kind, t, amb.ring().one())) out.push_back(t);
    }
    return out;
}

/// Normalization failure; carries every offending tuple.
class NormalizationError : public std::runtime_error {
public:
    NormalizationError(Kind kind, std::vector<Tuple> witnesses)
        : std::runtime_error(describe(kind, witnesses)), kind_(kind), witnesses_(std::move(witnesses)) {}
    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] const std::vector<Tuple>& witnesses() const { return witnesses_; }

private:
    static std::string describe(Kind kind, const std::vector<Tuple>& w) {
        std::string s = std::string(kind_name(kind)) + " violates its normalization at (";
        for (std::size_t i = 0; i < arity(kind); ++i) s += (i ? "," : "") + std::to_string(w.front()[i]);
        s += ")";
        if (w.size() > 1) s += " and " + std::to_string(w.size() - 1) + " more";
        return s;
    }
    Kind kind_;
    std::vector<Tuple> witnesses_;
};

class AmbientMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool same_ambient(const Ambient& a, const Ambient& b) { return a == b || (a && b && *a == *b); }

class Cochain {
public:
    Cochain() = default;

    /// Zero cochain.
    Cochain(Kind kind, Ambient amb) : kind_(kind), amb_(std::move(amb)) {
        values_.assign(table_size(kind_, amb_->ring_order()), 0);
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] const Ambient& ambient() const { return amb_; }
    [[nodiscard]] std::size_t arity() const { return anncat::arity(kind_); }
    [[nodiscard]] const std::vector<Index>& values() const { return values_; }

    [[nodiscard]] Index at(const Tuple& t) const { return values_[flat_index(t, arity(), amb_->ring_order())]; }
    [[nodiscard]] Index operator()(Index a, Index b) const { return at({a, b, 0, 0}); }
    [[nodiscard]] Index operator()(Index a, Index b, Index c) const { return at({a, b, c, 0}); }
    [[nodiscard]] Index operator()(Index a, Index b, Index c, Index d) const { return at({a, b, c, d}); }

    /// Raw write; callers keep the normalization pattern intact.
    void set(const Tuple& t, Index v) { values_[flat_index(t, arity(), amb_->ring_order())] = v; }
    void set_flat(std::size_t idx, Index v) { values_[idx] = v; }

    [[nodiscard]] std::vector<Tuple> normalization_violations() const {
        std::vector<Tuple> out;
        const std::size_t n = amb_->ring_order();
        for (std::size_t idx = 0; idx < values_.size(); ++idx)
            if (values_[idx] != 0) {
                Tuple t = unflatten(idx, arity(), n);
                if (is_forced_zero(kind_, t, amb_->ring().one())) out.push_back(t);
            }
        return out;
    }

    [[nodiscard]] bool is_zero() const {
        for (auto v : values_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.kind_ == b.kind_ && a.values_ == b.values_ && same_ambient(a.amb_, b.amb_);
    }

private:
    Kind kind_ = Kind::xi;
    Ambient amb_;
    std::vector<Index> values_;
};

/// Zero cochain when `entries` is empty; otherwise a validated copy.
/// Throws FormatError on shape/range problems, NormalizationError otherwise.
inline Cochain make_cochain(Kind kind, const Ambient& amb, const std::optional<std::vector<long long>>& entries = {}) {
    Cochain c(kind, amb);
    if (!entries) return c;
    const std::size_t expect = table_size(kind, amb->ring_order());
    if (entries->size() != expect)
        throw FormatError(std::string(kind_name(kind)) + " table has " + std::to_string(entries->size()) +
                          " entries, expected " + std::to_string(expect));
    for (std::size_t i = 0; i < expect; ++i) {
        const long long v = (*entries)[i];
        if (v < 0 || static_cast<std::size_t>(v) >= amb->order())
            throw FormatError(std::string(kind_name(kind)) + " entry " + std::to_string(i) + " = " + std::to_string(v) +
                              " is not an element of M");
        c.set_flat(i, static_cast<Index>(v));
    }
    if (auto bad = c.normalization_violations(); !bad.empty()) throw NormalizationError(kind, std::move(bad));
    return c;
}

inline void require_compatible(const Cochain& f, const Cochain& g) {
    if (f.kind() != g.kind()) throw std::invalid_argument("cochain kind mismatch");
    if (!same_ambient(f.ambient(), g.ambient())) throw AmbientMismatch("cochains live over different (R,M)");
}

inline Cochain cochain_add(const Cochain& f, const Cochain& g) {
    require_compatible(f, g);
    Cochain out(f.kind(), f.ambient());
    const auto& grp = f.ambient()->group();
    for (std::size_t i = 0; i < f.values().size(); ++i) out.set_flat(i, grp.add(f.values()[i], g.values()[i]));
    return out;
}

inline Cochain cochain_neg(const Cochain& f) {
    Cochain out(f.kind(), f.ambient());
    const auto& grp = f.ambient()->group();
    for (std::size_t i = 0; i < f.values().size(); ++i) out.set_flat(i, grp.neg(f.values()[i]));
    return out;
}

inline Cochain cochain_sub(const Cochain& f, const Cochain& g) { return cochain_add(f, cochain_neg(g)); }

// Fixed-shape bundles of cochains; slot order follows KINDS.

template <std::size_t N>
struct CochainBundle {
    Ambient ambient;
    std::array<Cochain, N> parts;

    [[nodiscard]] const Cochain* find(Kind k) const {
        for (const auto& c : parts)
            if (c.kind() == k) return &c;
        return nullptr;
    }
    [[nodiscard]] const Cochain& get(Kind k) const {
        if (auto* c = find(k)) return *c;
        throw std::invalid_argument("bundle has no " + std::string(kind_name(k)) + " component");
    }
    Cochain& get(Kind k) { return const_cast<Cochain&>(static_cast<const CochainBundle&>(*this).get(k)); }

    friend bool operator==(const CochainBundle& a, const CochainBundle& b) { return a.parts == b.parts; }
};

struct AnnStructure : CochainBundle<5> {
    [[nodiscard]] const Cochain& xi() const { return parts[0]; }
    [[nodiscard]] const Cochain& eta() const { return parts[1]; }
    [[nodiscard]] const Cochain& alpha() const { return parts[2]; }
    [[nodiscard]] const Cochain& lambda() const { return parts[3]; }
    [[nodiscard]] const Cochain& rho() const { return parts[4]; }
    static constexpr const auto& kinds() { return kStructureKinds; }
};

struct MacLaneQuadruple : CochainBundle<4> {
    [[nodiscard]] const Cochain& sigma() const { return parts[0]; }
    [[nodiscard]] const Cochain& alpha() const { return parts[1]; }
    [[nodiscard]] const Cochain& lambda() const { return parts[2]; }
    [[nodiscard]] const Cochain& rho() const { return parts[3]; }
    static constexpr const auto& kinds() { return kQuadrupleKinds; }
};

struct CochainPair : CochainBundle<2> {
    [[nodiscard]] const Cochain& mu() const { return parts[0]; }
    [[nodiscard]] const Cochain& nu() const { return parts[1]; }
    static constexpr const auto& kinds() { return kPairKinds; }
};

template <class B>
B zero_bundle(const Ambient& amb) {
    B b;
    b.ambient = amb;
    for (std::size_t i = 0; i < B::kinds().size(); ++i) b.parts[i] = Cochain(B::kinds()[i], amb);
    return b;
}

/// Assemble a bundle from cochains given in slot order; kinds and ambient must line up.
template <class B, std::size_t N>
B make_bundle(const Ambient& amb, std::array<Cochain, N> parts) {
    static_assert(N == B::kinds().size());
    B b;
    b.ambient = amb;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].kind() != B::kinds()[i])
            throw std::invalid_argument("expected a " + std::string(kind_name(B::kinds()[i])) + " cochain in slot " +
                                        std::to_string(i));
        if (!same_ambient(parts[i].ambient(), amb)) throw AmbientMismatch("component over a different (R,M)");
        b.parts[i] = std::move(parts[i]);
    }
    return b;
}

template <class B>
B bundle_add(const B& a, const B& b) {
    if (!same_ambient(a.ambient, b.ambient)) throw AmbientMismatch("bundles over different (R,M)");
    B out = a;
    for (std::size_t i = 0; i < out.parts.size(); ++i) out.parts[i] = cochain_add(a.parts[i], b.parts[i]);
    return out;
}

template <class B>
B bundle_neg(const B& a) {
    B out = a;
    for (std::size_t i = 0; i < out.parts.size(); ++i) out.parts[i] = cochain_neg(a.parts[i]);
    return out;
}

template <class B>
B bundle_sub(const B& a, const B& b) {
    return bundle_add(a, bundle_neg(b));
}

/// Integer coordinates for a bundle of normalized cochains: one block of
/// coord_count(M) integers per free tuple, kinds in bundle order. Coordinate
/// (tuple, i) has order d_i.
class CochainSpace {
public:
    CochainSpace(Ambient amb, std::vector<Kind> kinds) : amb_(std::move(amb)), kinds_(std::move(kinds)) {
        const std::size_t n = amb_->ring_order();
        position_.resize(kKindCount);
        for (Kind k : kinds_) {
            auto& pos = position_[static_cast<std::size_t>(k)];
            pos.assign(table_size(k, n), -1);
            for (const auto& t : free_support(k, *amb_)) {
                pos[flat_index(t, arity(k), n)] = static_cast<std::int64_t>(slots_.size());
                slots_.push_back({k, t});
            }
        }
    }

    struct Slot {
        Kind kind;
        Tuple tuple;
    };

    [[nodiscard]] const Ambient& ambient() const { return amb_; }
    [[nodiscard]] const std::vector<Kind>& kinds() const { return kinds_; }
    [[nodiscard]] std::size_t coords_per_slot() const { return amb_->group().coord_count(); }
    [[nodiscard]] std::size_t slot_count() const { return slots_.size(); }
    [[nodiscard]] std::size_t dimension() const { return slots_.size() * coords_per_slot(); }
    [[nodiscard]] const std::vector<Slot>& slots() const { return slots_; }

    /// Slot index of (kind, flat tuple index), or -1 when forced to zero / kind absent.
    [[nodiscard]] std::int64_t slot_of(Kind k, std::size_t flat) const {
        const auto& pos = position_[static_cast<std::size_t>(k)];
        return pos.empty() ? -1 : pos[flat];
    }

    [[nodiscard]] std::int64_t coord_order(std::size_t coord) const {
        return amb_->group().invariant_factors()[coord % coords_per_slot()];
    }
    [[nodiscard]] std::vector<std::int64_t> orders() const {
        std::vector<std::int64_t> out(dimension());
        for (std::size_t c = 0; c < out.size(); ++c) out[c] = coord_order(c);
        return out;
    }

    /// |M| ^ (number of free tuples).
    [[nodiscard]] BigInt size() const {
        BigInt s = 1;
        for (std::size_t i = 0; i < slots_.size(); ++i) s *= amb_->order();
        return s;
    }

    template <std::size_t N>
    [[nodiscard]] std::vector<std::int64_t> to_vector(const CochainBundle<N>& b) const {
        std::vector<std::int64_t> v;
        v.reserve(dimension());
        for (const auto& s : slots_) {
            const auto& c = amb_->group().coords(b.get(s.kind).at(s.tuple));
            v.insert(v.end(), c.begin(), c.end());
        }
        return v;
    }

    template <class B>
    [[nodiscard]] B from_vector(const std::vector<std::int64_t>& v) const {
        B b = zero_bundle<B>(amb_);
        const std::size_t k = coords_per_slot();
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            Coords c(v.begin() + static_cast<std::ptrdiff_t>(i * k), v.begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
            b.get(slots_[i].kind).set(slots_[i].tuple, amb_->group().from_coords(c));
        }
        return b;
    }

    template <class B>
    [[nodiscard]] B from_big_vector(const std::vector<BigInt>& v) const {
        std::vector<std::int64_t> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = to_int64(mod_floor(v[i], BigInt(coord_order(i))));
        return from_vector<B>(w);
    }

    /// Bundle whose only nonzero entry is the j-th generator of M at slot s.
    template <class B>
    [[nodiscard]] B unit(std::size_t coord) const {
        std::vector<std::int64_t> v(dimension(), 0);
        v[coord] = 1;
        return from_vector<B>(v);
    }

private:
    Ambient amb_;
    std::vector<Kind> kinds_;
    std::vector<std::vector<std::int64_t>> position_;
    std::vector<Slot> slots_;
};

template <class B>
CochainSpace space_of(const Ambient& amb) {
    return CochainSpace(amb, std::vector<Kind>(B::kinds().begin(), B::kinds().end()));
}

}  // namespace anncat
