#pragma once

// H^3(R,M) = Z^3 / B^3 and the structure-level counterparts.
//
// Cochains are integer vectors over the free-support coordinates of a
// CochainSpace (coordinate j has order d_j). A condition system cuts out a
// lattice L in Z^w containing diag(d) Z^w; the cocycle group is L / diag(d).
// Subgroups given by generators (coboundaries, plus the d_j e_j) become a
// second lattice inside L, and a Smith form of its coordinates in L's basis
// yields invariant factors, canonical labels and representatives.

#include "anncat/coboundary.hpp"
#include "anncat/lattice.hpp"
#include "anncat/presentation.hpp"
#include "anncat/relations.hpp"
#include "anncat/skeleton.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace anncat {

/// A computation that would exceed the configured budget.
class RefusalError : public std::runtime_error {
public:
    RefusalError(const std::string& what, BigInt size) : std::runtime_error(what), size_(std::move(size)) {}
    [[nodiscard]] const BigInt& size() const { return size_; }

private:
    BigInt size_;
};

class NotACocycle : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline BigInt product_of(const std::vector<std::int64_t>& v) {
    BigInt p = 1;
    for (auto x : v) p *= x;
    return p;
}

inline BigInt product_of(const std::vector<BigInt>& v) {
    BigInt p = 1;
    for (const auto& x : v) p *= x;
    return p;
}

inline std::vector<BigInt> to_big(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

/// Columns d_j e_j.
inline IntMatrix<BigInt> order_columns(const std::vector<std::int64_t>& orders) {
    IntMatrix<BigInt> m(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) m(i, i) = orders[i];
    return m;
}

/// outer / span(gens) for a lattice `outer` and generators lying in it.
/// The quotient is killed by the modulus e (e * outer lies in e Z^w, which is
/// inside span(gens) whenever the gens include the d_j e_j), so it is computed
/// from generator coordinates reduced mod e.
class KernelQuotient {
public:
    KernelQuotient() = default;
    KernelQuotient(ModularKernel outer, const IntMatrix<BigInt>& gens) : outer_(std::move(outer)) {
        const std::size_t w = outer_.width();
        const BigInt e = outer_.modulus;
        ModularRowReducer red(w, outer_.modulus);
        std::vector<std::int64_t> row(w);
        for (std::size_t j = 0; j < gens.cols(); ++j) {
            auto y = outer_.coordinates(gens.column(j));
            if (!y) throw std::logic_error("generator " + std::to_string(j) + " does not lie in the cocycle lattice");
            for (std::size_t i = 0; i < w; ++i) row[i] = to_int64(mod_floor((*y)[i], e));
            red.add_row(row);
        }
        auto lat = modular_row_lattice(red);
        Vt_ = lat.V.transpose();
        V_inv_t_ = lat.V_inv.transpose();
        basis_ = outer_.basis();
        for (std::size_t i = 0; i < w; ++i)
            if (lat.scale[i] != 1) {
                nontrivial_.push_back(i);
                factors_.push_back(lat.scale[i]);
            }
    }

    [[nodiscard]] const std::vector<BigInt>& invariant_factors() const { return factors_; }
    [[nodiscard]] BigInt order() const { return product_of(factors_); }
    [[nodiscard]] const ModularKernel& outer() const { return outer_; }

    /// Canonical label of x, or nullopt when x is not in the outer lattice.
    [[nodiscard]] std::optional<std::vector<BigInt>> label(const std::vector<BigInt>& x) const {
        auto y = outer_.coordinates(x);
        if (!y) return std::nullopt;
        auto z = Vt_.apply(*y);
        std::vector<BigInt> out(nontrivial_.size());
        for (std::size_t k = 0; k < nontrivial_.size(); ++k) out[k] = mod_floor(z[nontrivial_[k]], factors_[k]);
        return out;
    }

    /// An outer-lattice vector with the given label (entries unreduced).
    [[nodiscard]] std::vector<BigInt> element(const std::vector<BigInt>& lbl) const {
        std::vector<BigInt> z(outer_.width(), BigInt(0));
        for (std::size_t k = 0; k < nontrivial_.size(); ++k) z[nontrivial_[k]] = lbl[k];
        return basis_.apply(V_inv_t_.apply(z));
    }

    /// Labels in mixed-radix order, last factor fastest.
    template <class Fn>
    void for_each_label(Fn&& fn) const {
        std::vector<BigInt> lbl(factors_.size(), BigInt(0));
        while (true) {
            fn(static_cast<const std::vector<BigInt>&>(lbl));
            std::size_t i = lbl.size();
            while (i > 0) {
                --i;
                if (++lbl[i] < factors_[i]) break;
                lbl[i] = 0;
                if (i == 0) return;
            }
            if (lbl.empty()) return;
        }
    }

private:
    ModularKernel outer_;
    IntMatrix<BigInt> Vt_, V_inv_t_, basis_;
    std::vector<std::size_t> nontrivial_;
    std::vector<BigInt> factors_;
};

inline std::string label_string(const std::vector<BigInt>& lbl) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < lbl.size(); ++i) os << (i ? "," : "") << lbl[i];
    os << ')';
    return os.str();
}

inline std::vector<BigInt> reduce_mod_orders(std::vector<BigInt> x, const std::vector<std::int64_t>& orders) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_floor(x[i], BigInt(orders[i]));
    return x;
}

/// Kernel of a relation set over the coordinates of `space`.
inline ModularKernel relation_kernel(const std::vector<RelationDef>& defs, const CochainSpace& space) {
    ModularRowReducer red(space.dimension(), space.ambient()->group().exponent());
    assemble_relations(defs, space, red);
    return modular_kernel(red);
}

/// Columns f(unit_k) for a linear map given on bundles.
template <class Src, class Dst, class Map>
IntMatrix<BigInt> linear_map_matrix(const CochainSpace& src, const CochainSpace& dst, Map&& map) {
    IntMatrix<BigInt> m(dst.dimension(), src.dimension());
    for (std::size_t k = 0; k < src.dimension(); ++k) {
        const Dst img = map(src.template unit<Src>(k));
        const auto v = dst.to_vector(img);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, k) = v[i];
    }
    return m;
}

inline IntMatrix<BigInt> d2_matrix(const CochainSpace& c2, const CochainSpace& c3) {
    return linear_map_matrix<CochainPair, MacLaneQuadruple>(c2, c3, [](const CochainPair& p) { return coboundary(p); });
}

inline IntMatrix<BigInt> structure_delta_matrix(const CochainSpace& c2, const CochainSpace& cs) {
    return linear_map_matrix<CochainPair, AnnStructure>(c2, cs, [](const CochainPair& p) { return structure_coboundary(p); });
}

template <std::size_t N>
void require_normalized(const CochainBundle<N>& b) {
    for (const auto& c : b.parts)
        if (auto bad = c.normalization_violations(); !bad.empty()) throw NormalizationError(c.kind(), std::move(bad));
}

struct H3Options {
    std::size_t representative_cap = 64;
    std::size_t max_dimension = 4096;  // refuse larger cochain spaces
};

struct H3Result {
    Ambient ambient;
    CochainSpace c2, c3;
    BigInt z3_order, b3_order, h3_order;
    std::vector<BigInt> invariant_factors;
    KernelQuotient quotient;
    IntMatrix<BigInt> d2;
    std::vector<MacLaneQuadruple> representatives;
    bool representatives_truncated = false;
};

inline H3Result compute_h3(const Ambient& amb, const H3Options& opt = {}) {
    CochainSpace c3 = space_of<MacLaneQuadruple>(amb), c2 = space_of<CochainPair>(amb);
    if (c3.dimension() > opt.max_dimension)
        throw RefusalError("C^3 has " + std::to_string(c3.dimension()) + " coordinates (limit " +
                               std::to_string(opt.max_dimension) + ")",
                           BigInt(c3.dimension()));
    const auto orders = c3.orders();
    ModularKernel z3 = relation_kernel(cocycle_conditions(), c3);
    IntMatrix<BigInt> d2 = d2_matrix(c2, c3);
    KernelQuotient h3(z3, d2.hconcat(order_columns(orders)));

    H3Result r{amb, c2, c3, 0, 0, 0, h3.invariant_factors(), h3, d2, {}, false};
    r.z3_order = product_of(orders) / z3.index();
    r.h3_order = h3.order();
    if (r.z3_order % r.h3_order != 0) throw std::logic_error("|H^3| does not divide |Z^3|");
    r.b3_order = r.z3_order / r.h3_order;
    h3.for_each_label([&](const std::vector<BigInt>& lbl) {
        if (r.representatives.size() >= opt.representative_cap) {
            r.representatives_truncated = true;
            return;
        }
        r.representatives.push_back(c3.from_big_vector<MacLaneQuadruple>(reduce_mod_orders(h3.element(lbl), orders)));
    });
    return r;
}

/// Canonical class label of a cocycle. Throws NotACocycle otherwise.
inline std::vector<BigInt> class_of(const MacLaneQuadruple& q, const H3Result& h3) {
    if (!same_ambient(q.ambient, h3.ambient)) throw AmbientMismatch("quadruple over a different (R,M)");
    require_normalized(q);
    auto lbl = h3.quotient.label(to_big(h3.c3.to_vector(q)));
    if (!lbl) throw NotACocycle("quadruple does not satisfy the cocycle conditions");
    return *lbl;
}

inline Homomorphism d2_homomorphism(const H3Result& h3) {
    return Homomorphism(GroupPresentation::cyclic_product(to_big(h3.c2.orders())),
                        GroupPresentation::cyclic_product(to_big(h3.c3.orders())), h3.d2);
}

/// Solves d2(mu, nu) = q; the factorization is done once per (R,M).
class CoboundarySolver {
public:
    explicit CoboundarySolver(const H3Result& h3) : c2_(h3.c2), c3_(h3.c3), solver_(d2_homomorphism(h3)) {}

    /// Some (mu, nu) with d2(mu, nu) = q, or nullopt when q is not a coboundary.
    [[nodiscard]] std::optional<CochainPair> solve(const MacLaneQuadruple& q) const {
        if (!same_ambient(q.ambient, c3_.ambient())) throw AmbientMismatch("quadruple over a different (R,M)");
        require_normalized(q);
        auto x = solver_.solve(to_big(c3_.to_vector(q)));
        if (!x) return std::nullopt;
        return c2_.from_big_vector<CochainPair>(reduce_mod_orders(*x, c2_.orders()));
    }

private:
    CochainSpace c2_, c3_;
    PreimageSolver solver_;
};

inline std::optional<CochainPair> coboundary_preimage(const MacLaneQuadruple& q, const H3Result& h3) {
    return CoboundarySolver(h3).solve(q);
}

// ---------------------------------------------------------------------------
// Structure level

/// Solves delta(mu, nu) = f' - f.
class WitnessSolver {
public:
    explicit WitnessSolver(const Ambient& amb)
        : amb_(amb),
          c2_(space_of<CochainPair>(amb)),
          cs_(space_of<AnnStructure>(amb)),
          hom_(GroupPresentation::cyclic_product(to_big(c2_.orders())), GroupPresentation::cyclic_product(to_big(cs_.orders())),
               structure_delta_matrix(c2_, cs_)),
          solver_(hom_) {}

    [[nodiscard]] std::optional<CochainPair> solve(const AnnStructure& f, const AnnStructure& g) const {
        if (!same_ambient(f.ambient, amb_) || !same_ambient(g.ambient, amb_))
            throw AmbientMismatch("structures over a different (R,M)");
        require_normalized(f);
        require_normalized(g);
        const auto a = cs_.to_vector(f), b = cs_.to_vector(g);
        std::vector<BigInt> target(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) target[i] = mod_floor<std::int64_t>(b[i] - a[i], cs_.coord_order(i));
        auto x = solver_.solve(target);
        if (!x) return std::nullopt;
        CochainPair p = c2_.from_big_vector<CochainPair>(reduce_mod_orders(*x, c2_.orders()));
        if (!(apply_structure_coboundary(f, p) == g)) throw std::logic_error("witness does not reproduce the target structure");
        return p;
    }

    [[nodiscard]] const CochainSpace& pair_space() const { return c2_; }
    [[nodiscard]] const CochainSpace& structure_space() const { return cs_; }
    [[nodiscard]] const Homomorphism& delta() const { return hom_; }

private:
    Ambient amb_;
    CochainSpace c2_, cs_;
    Homomorphism hom_;
    PreimageSolver solver_;
};

inline std::optional<CochainPair> find_witness(const AnnStructure& f, const AnnStructure& g) {
    return WitnessSolver(f.ambient).solve(f, g);
}

/// Kernel of the diagram oracle, linearized: each unit structure is run
/// through every diagram and the path differences become matrix columns.
inline ModularKernel oracle_kernel(const CochainSpace& space) {
    const Bimodule& m = *space.ambient();
    const std::size_t w = space.dimension(), k = m.group().coord_count();
    std::vector<std::vector<std::int64_t>> cols(w);
    for (std::size_t c = 0; c < w; ++c) {
        const AnnStructure f = space.unit<AnnStructure>(c);
        for_each_diagram(f, [&](std::size_t, const std::vector<Index>&, SkeletalMorphism p1, SkeletalMorphism p2) {
            const auto& d = m.group().coords(m.group().sub(p1.value, p2.value));
            cols[c].insert(cols[c].end(), d.begin(), d.end());
        });
    }
    const std::int64_t e = m.group().exponent();
    const auto& inv = m.group().invariant_factors();
    ModularRowReducer red(w, e);
    const std::size_t rows = cols.empty() ? 0 : cols[0].size();
    std::vector<std::int64_t> row(w);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::int64_t scale = e / inv[r % k];
        bool any = false;
        for (std::size_t c = 0; c < w; ++c) {
            row[c] = mod_floor<std::int64_t>(cols[c][r] * scale, e);
            any = any || row[c] != 0;
        }
        if (any) red.add_row(row);
    }
    return modular_kernel(red);
}

/// True when the two lattices coincide (each basis lies in the other).
inline bool same_lattice(const ModularKernel& a, const ModularKernel& b) {
    auto contains = [](const ModularKernel& outer, const ModularKernel& inner) {
        const auto basis = inner.basis();
        for (std::size_t j = 0; j < basis.cols(); ++j)
            if (!outer.coordinates(basis.column(j))) return false;
        return true;
    };
    return a.width() == b.width() && contains(a, b) && contains(b, a);
}

enum class Strategy : std::uint8_t { automatic, brute, kernel };

inline const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::brute: return "brute";
        case Strategy::kernel: return "kernel";
        default: return "auto";
    }
}

inline Strategy parse_strategy(const std::string& s) {
    if (s == "auto") return Strategy::automatic;
    if (s == "brute") return Strategy::brute;
    if (s == "kernel") return Strategy::kernel;
    throw std::invalid_argument("unknown strategy '" + s + "' (expected auto, brute or kernel)");
}

struct EnumerationOptions {
    BigInt budget = BigInt(1) << 20;
    Strategy strategy = Strategy::automatic;
    bool regular = false;
    Variant variant = Variant::corrected;
};

struct Enumeration {
    BigInt search_space;  // |M|^(free entries)
    BigInt valid_count;
    Strategy used = Strategy::automatic;
    std::vector<AnnStructure> structures;
};

/// Element indices per slot; the enumeration order.
template <std::size_t N>
std::vector<Index> bundle_key(const CochainSpace& space, const CochainBundle<N>& b) {
    std::vector<Index> key;
    key.reserve(space.slot_count());
    for (const auto& s : space.slots()) key.push_back(b.get(s.kind).at(s.tuple));
    return key;
}

template <class B>
B bundle_from_elements(const CochainSpace& space, const std::vector<Index>& elems) {
    B b = zero_bundle<B>(space.ambient());
    for (std::size_t i = 0; i < elems.size(); ++i) b.get(space.slots()[i].kind).set(space.slots()[i].tuple, elems[i]);
    return b;
}

/// Calls fn(elements) for every assignment of M-elements to the slots, in
/// lexicographic order.
template <class Fn>
void for_each_assignment(const CochainSpace& space, Fn&& fn) {
    const auto m = static_cast<Index>(space.ambient()->order());
    std::vector<Index> e(space.slot_count(), 0);
    while (true) {
        fn(static_cast<const std::vector<Index>&>(e));
        std::size_t i = e.size();
        while (true) {
            if (i == 0) return;
            --i;
            if (++e[i] < m) break;
            e[i] = 0;
        }
    }
}

/// Every valid structure, lexicographically. Refuses (RefusalError carrying
/// the search-space size) when the chosen strategy would exceed the budget.
inline Enumeration enumerate_structures(const Ambient& amb, const EnumerationOptions& opt = {}) {
    const CochainSpace space = space_of<AnnStructure>(amb);
    Enumeration out;
    out.search_space = space.size();
    const auto defs = structure_relations(opt.variant, opt.regular);

    Strategy s = opt.strategy;
    if (s == Strategy::automatic) s = out.search_space <= opt.budget ? Strategy::brute : Strategy::kernel;
    out.used = s;

    if (s == Strategy::brute) {
        if (out.search_space > opt.budget)
            throw RefusalError("search space of " + out.search_space.str() + " candidates exceeds the budget of " +
                                   opt.budget.str(),
                               out.search_space);
        for_each_assignment(space, [&](const std::vector<Index>& e) {
            AnnStructure f = bundle_from_elements<AnnStructure>(space, e);
            if (evaluate_relations(defs, CochainLookup(f), *amb, 1).ok()) out.structures.push_back(std::move(f));
        });
        out.valid_count = out.structures.size();
        return out;
    }

    const auto orders = space.orders();
    KernelQuotient valid(relation_kernel(defs, space), order_columns(orders));
    out.valid_count = valid.order();
    if (out.valid_count > opt.budget)
        throw RefusalError("search space of " + out.search_space.str() + " candidates contains " + out.valid_count.str() +
                               " valid structures, more than the budget of " + opt.budget.str(),
                           out.search_space);
    valid.for_each_label([&](const std::vector<BigInt>& lbl) {
        out.structures.push_back(space.from_big_vector<AnnStructure>(reduce_mod_orders(valid.element(lbl), orders)));
    });
    std::vector<std::pair<std::vector<Index>, std::size_t>> keyed;
    keyed.reserve(out.structures.size());
    for (std::size_t i = 0; i < out.structures.size(); ++i) keyed.emplace_back(bundle_key(space, out.structures[i]), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<AnnStructure> sorted;
    sorted.reserve(keyed.size());
    for (auto& [k, i] : keyed) sorted.push_back(std::move(out.structures[i]));
    out.structures = std::move(sorted);
    return out;
}

// ---------------------------------------------------------------------------
// Independent counts for cross-checking compute_h3

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

/// Rank over F_p by plain Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
    if (rows.empty()) return 0;
    const std::size_t w = rows[0].size();
    std::size_t rank = 0;
    auto inverse = [p](std::int64_t a) {
        std::int64_t r = 1, b = a, e = p - 2;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    for (std::size_t c = 0; c < w && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && mod_floor(rows[piv][c], p) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const std::int64_t inv = inverse(mod_floor(rows[rank][c], p));
        for (auto& v : rows[rank]) v = mod_floor(v * inv, p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            const std::int64_t f = mod_floor(rows[r][c], p);
            if (f == 0) continue;
            for (std::size_t j = c; j < w; ++j) rows[r][j] = mod_floor(rows[r][j] - f * rows[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

struct IndependentCounts {
    std::optional<BigInt> z3, b3;
    std::string z3_method, b3_method;
    [[nodiscard]] std::optional<BigInt> h3() const {
        if (!z3 || !b3 || *b3 == 0 || *z3 % *b3 != 0) return std::nullopt;
        return *z3 / *b3;
    }
};

/// |Z^3| by filtering every quadruple through check_cocycle, or by rank over
/// F_p when M is elementary abelian; |B^3| by collecting every d2(mu, nu), or
/// by rank. Methods not applicable within `limit` are left empty.
inline IndependentCounts independent_h3_counts(const Ambient& amb, const BigInt& limit = BigInt(1) << 16) {
    IndependentCounts out;
    const CochainSpace c3 = space_of<MacLaneQuadruple>(amb), c2 = space_of<CochainPair>(amb);
    const auto& inv = amb->group().invariant_factors();
    const bool elementary = !inv.empty() && is_prime(inv[0]) && inv.front() == inv.back();
    const std::int64_t p = inv.empty() ? 1 : inv[0];

    if (amb->order() == 1) {
        out.z3 = out.b3 = BigInt(1);
        out.z3_method = out.b3_method = "trivial";
        return out;
    }
    if (c3.size() <= limit) {
        BigInt count = 0;
        const auto defs = cocycle_conditions();
        for_each_assignment(c3, [&](const std::vector<Index>& e) {
            const auto q = bundle_from_elements<MacLaneQuadruple>(c3, e);
            if (evaluate_relations(defs, CochainLookup(q), *amb, 1).ok()) ++count;
        });
        out.z3 = count;
        out.z3_method = "brute force over " + c3.size().str() + " quadruples";
    } else if (elementary) {
        const std::size_t r = rank_mod_p(relation_rows(cocycle_conditions(), c3), p);
        out.z3 = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(c3.dimension() - r));
        out.z3_method = "rank over F_" + std::to_string(p);
    }
    if (c2.size() <= limit) {
        std::set<std::vector<std::int64_t>> images;
        for_each_assignment(c2, [&](const std::vector<Index>& e) {
            images.insert(c3.to_vector(coboundary(bundle_from_elements<CochainPair>(c2, e))));
        });
        out.b3 = BigInt(images.size());
        out.b3_method = "image of all " + c2.size().str() + " pairs";
    } else if (elementary) {
        const auto m = d2_matrix(c2, c3);
        std::vector<std::vector<std::int64_t>> rows(m.cols(), std::vector<std::int64_t>(m.rows()));
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t i = 0; i < m.rows(); ++i) rows[j][i] = to_int64(m(i, j));
        out.b3 = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(rank_mod_p(rows, p)));
        out.b3_method = "rank over F_" + std::to_string(p);
    }
    return out;
}

}  // namespace anncat
