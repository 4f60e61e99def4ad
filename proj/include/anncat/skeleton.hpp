#pragma once

// The reduced Ann-category of type (R, M): objects are ring elements, every
// morphism is an automorphism (r, u) with u in M. Composition adds values,
// the two tensor operations act by
//     (s,u) + (t,v) = (s+t, u+v)        (s,u) x (t,v) = (st, sv + ut),
// and the constraints a+, c, a, L, R are read off the structure's tables.
// Axiom diagrams are checked by composing both paths element-wise, which
// makes this an oracle independent of the relation formulas.

#include "anncat/cochain.hpp"

#include <array>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace anncat {

struct SkeletalMorphism {
    Index object = 0;
    Index value = 0;
    friend bool operator==(const SkeletalMorphism&, const SkeletalMorphism&) = default;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline SkeletalMorphism mor_identity(Index r) { return {r, 0}; }

/// f o g; only defined on a common object.
inline SkeletalMorphism mor_compose(const Bimodule& m, const SkeletalMorphism& f, const SkeletalMorphism& g) {
    if (f.object != g.object)
        throw DomainError("cannot compose morphisms of objects " + std::to_string(f.object) + " and " + std::to_string(g.object));
    return {f.object, m.group().add(f.value, g.value)};
}

inline SkeletalMorphism mor_inverse(const Bimodule& m, const SkeletalMorphism& f) { return {f.object, m.group().neg(f.value)}; }

inline SkeletalMorphism mor_sum(const Bimodule& m, const SkeletalMorphism& f, const SkeletalMorphism& g) {
    return {m.ring().add(f.object, g.object), m.group().add(f.value, g.value)};
}

inline SkeletalMorphism mor_prod(const Bimodule& m, const SkeletalMorphism& f, const SkeletalMorphism& g) {
    return {m.ring().mul(f.object, g.object), m.group().add(m.left(f.object, g.value), m.right(f.value, g.object))};
}

enum class Constraint : std::uint8_t {
    assoc_plus,   // a+(x,y,z): x+(y+z) -> (x+y)+z
    commute,      // c(x,y): x+y -> y+x
    assoc_times,  // a(x,y,z): x(yz) -> (xy)z
    left_dist,    // L(x,y,z): x(y+z) -> xy+xz
    right_dist,   // R(x,y,z): (x+y)z -> xz+yz
    unit_plus,    // 0+x -> x and x+0 -> x
    unit_times,   // 1x -> x and x1 -> x
};

inline std::size_t constraint_arity(Constraint c) {
    switch (c) {
        case Constraint::commute: return 2;
        case Constraint::unit_plus:
        case Constraint::unit_times: return 1;
        default: return 3;
    }
}

inline SkeletalMorphism constraint_of(Constraint kind, const AnnStructure& f, std::initializer_list<Index> args) {
    if (args.size() != constraint_arity(kind)) throw std::invalid_argument("constraint arity mismatch");
    const Bimodule& m = *f.ambient;
    const auto& R = m.ring();
    const Index* a = args.begin();
    switch (kind) {
        case Constraint::assoc_plus: return {R.add(R.add(a[0], a[1]), a[2]), f.xi()(a[0], a[1], a[2])};
        case Constraint::commute: return {R.add(a[0], a[1]), f.eta()(a[0], a[1])};
        case Constraint::assoc_times: return {R.mul(R.mul(a[0], a[1]), a[2]), f.alpha()(a[0], a[1], a[2])};
        case Constraint::left_dist: return {R.mul(a[0], R.add(a[1], a[2])), f.lambda()(a[0], a[1], a[2])};
        case Constraint::right_dist: return {R.mul(R.add(a[0], a[1]), a[2]), f.rho()(a[0], a[1], a[2])};
        case Constraint::unit_plus:
        case Constraint::unit_times: return mor_identity(a[0]);
    }
    return {};
}

namespace detail {

// Evaluation context with terse names for writing diagrams.
class Skel {
public:
    explicit Skel(const AnnStructure& f) : f_(f), m_(*f.ambient), r_(m_.ring()) {}

    [[nodiscard]] Index add(Index a, Index b) const { return r_.add(a, b); }
    [[nodiscard]] Index mul(Index a, Index b) const { return r_.mul(a, b); }

    [[nodiscard]] SkeletalMorphism id(Index r) const { return mor_identity(r); }
    [[nodiscard]] SkeletalMorphism inv(SkeletalMorphism g) const { return mor_inverse(m_, g); }
    [[nodiscard]] SkeletalMorphism sum(SkeletalMorphism a, SkeletalMorphism b) const { return mor_sum(m_, a, b); }
    [[nodiscard]] SkeletalMorphism prod(SkeletalMorphism a, SkeletalMorphism b) const { return mor_prod(m_, a, b); }
    [[nodiscard]] SkeletalMorphism comp(std::initializer_list<SkeletalMorphism> gs) const {
        SkeletalMorphism acc = *gs.begin();
        for (auto it = gs.begin() + 1; it != gs.end(); ++it) acc = mor_compose(m_, acc, *it);
        return acc;
    }

    [[nodiscard]] SkeletalMorphism ap(Index x, Index y, Index z) const { return constraint_of(Constraint::assoc_plus, f_, {x, y, z}); }
    [[nodiscard]] SkeletalMorphism c(Index x, Index y) const { return constraint_of(Constraint::commute, f_, {x, y}); }
    [[nodiscard]] SkeletalMorphism at(Index x, Index y, Index z) const { return constraint_of(Constraint::assoc_times, f_, {x, y, z}); }
    [[nodiscard]] SkeletalMorphism L(Index x, Index y, Index z) const { return constraint_of(Constraint::left_dist, f_, {x, y, z}); }
    [[nodiscard]] SkeletalMorphism R(Index x, Index y, Index z) const { return constraint_of(Constraint::right_dist, f_, {x, y, z}); }

    // v: (x+y)+(z+t) -> (x+z)+(y+t), moving y past z with x held on the left.
    [[nodiscard]] SkeletalMorphism v(Index x, Index y, Index z, Index t) const {
        return comp({inv(ap(x, y, add(z, t))), sum(id(x), ap(y, z, t)), sum(id(x), sum(c(y, z), id(t))),
                     sum(id(x), inv(ap(z, y, t))), ap(x, z, add(y, t))});
    }
    // The same morphism, associating to the right first and holding t.
    [[nodiscard]] SkeletalMorphism v_alt(Index x, Index y, Index z, Index t) const {
        return comp({ap(add(x, y), z, t), sum(inv(ap(x, y, z)), id(t)), sum(sum(id(x), c(y, z)), id(t)),
                     sum(ap(x, z, y), id(t)), inv(ap(add(x, z), y, t))});
    }

private:
    const AnnStructure& f_;
    const Bimodule& m_;
    const FiniteRing& r_;
};

}  // namespace detail

struct InterchangeValue {
    SkeletalMorphism canonical;
    SkeletalMorphism alternative;
    [[nodiscard]] bool coherent() const { return canonical == alternative; }
};

inline InterchangeValue interchange_v(const AnnStructure& f, Index x, Index y, Index z, Index t) {
    detail::Skel s(f);
    return {s.v(x, y, z, t), s.v_alt(x, y, z, t)};
}

struct DiagramDef {
    std::string id;
    std::string description;
    std::size_t vars;
    std::vector<std::string> relations;  // relation ids this diagram corresponds to
};

inline const std::vector<DiagramDef>& diagram_inventory() {
    static const std::vector<DiagramDef> defs{
        {"pentagon-plus", "pentagon for a+", 4, {"1"}},
        {"triangle-plus", "a+ and c are identities when an argument is 0", 3, {"2"}},
        {"hexagon-c", "hexagon for c and a+", 3, {"3"}},
        {"c-involution", "c(y,x) o c(x,y) = id", 2, {"4"}},
        {"ann1-L-comm", "x(-) is compatible with c", 3, {"5"}},
        {"ann1-R-comm", "(-)z is compatible with c", 3, {"6"}},
        {"ann1-L-assoc", "x(-) is compatible with a+", 4, {"7"}},
        {"ann1-R-assoc", "(-)t is compatible with a+", 4, {"8"}},
        {"ann2-d4", "L, R and the interchange v on (a+b)(x+y)", 4, {"9"}},
        {"ann2-d1", "a and L on x(y(z+t))", 4, {"10"}},
        {"ann2-d3", "a, L and R on x((y+z)t)", 4, {"11"}},
        {"ann2-d2", "a and R on ((x+y)z)t", 4, {"12"}},
        {"pentagon-times", "pentagon for a", 4, {"13"}},
        {"triangle-times", "a is the identity when an argument is 1", 3, {"14"}},
        {"unit-zero-L", "a and L are identities when an argument is 0 (left side)", 3, {"15", "16"}},
        {"unit-zero-R", "a and R are identities when an argument is 0 (right side)", 3, {"15", "17"}},
        {"ann3-L", "L(1,y,z) = id", 2, {"16"}},
        {"ann3-R", "R(x,y,1) = id", 2, {"17"}},
    };
    return defs;
}

/// Visit every diagram instance: fn(diagram index, args, path1, path2).
template <class Fn>
void for_each_diagram(const AnnStructure& f, Fn&& fn) {
    detail::Skel s(f);
    const auto& defs = diagram_inventory();
    const Bimodule& m = *f.ambient;
    const auto n = static_cast<Index>(m.ring_order());
    const Index one = m.ring().one();
    auto idx = [&](const char* id) {
        for (std::size_t i = 0; i < defs.size(); ++i)
            if (defs[i].id == id) return i;
        throw std::logic_error("unknown diagram");
    };
    const std::size_t PENT = idx("pentagon-plus"), TRI = idx("triangle-plus"), HEX = idx("hexagon-c"),
                      INV = idx("c-involution"), L_C = idx("ann1-L-comm"), R_C = idx("ann1-R-comm"),
                      L_A = idx("ann1-L-assoc"), R_A = idx("ann1-R-assoc"), D4 = idx("ann2-d4"), D1 = idx("ann2-d1"),
                      D3 = idx("ann2-d3"), D2 = idx("ann2-d2"), PENTX = idx("pentagon-times"), TRIX = idx("triangle-times"),
                      UZL = idx("unit-zero-L"), UZR = idx("unit-zero-R"), A3L = idx("ann3-L"), A3R = idx("ann3-R");

    auto emit = [&](std::size_t d, std::initializer_list<Index> args, SkeletalMorphism p1, SkeletalMorphism p2) {
        if (p1.object != p2.object) throw DomainError("diagram paths end at different objects");
        fn(d, std::vector<Index>(args), p1, p2);
    };

    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            emit(INV, {x, y}, s.comp({s.c(x, y), s.c(y, x)}), s.id(s.add(x, y)));
            emit(A3L, {x, y}, s.L(one, x, y), s.id(s.add(x, y)));
            emit(A3R, {x, y}, s.R(x, y, one), s.id(s.add(x, y)));
        }

    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z) {
                const Index xy = s.mul(x, y), xz = s.mul(x, z), yz = s.mul(y, z);
                emit(HEX, {x, y, z}, s.comp({s.ap(x, y, z), s.c(s.add(x, y), z), s.ap(z, x, y)}),
                     s.comp({s.sum(s.id(x), s.c(y, z)), s.ap(x, z, y), s.sum(s.c(x, z), s.id(y))}));
                emit(L_C, {x, y, z}, s.comp({s.inv(s.L(x, y, z)), s.prod(s.id(x), s.c(y, z))}),
                     s.comp({s.c(xy, xz), s.inv(s.L(x, z, y))}));
                emit(R_C, {x, y, z}, s.comp({s.inv(s.R(x, y, z)), s.prod(s.c(x, y), s.id(z))}),
                     s.comp({s.c(xz, yz), s.inv(s.R(y, x, z))}));
                // Unit coherence. Each instance only contributes where an argument is 0 or 1.
                if (x == 0 || y == 0 || z == 0) {
                    emit(TRI, {x, y, z}, s.ap(x, y, z), s.id(s.add(s.add(x, y), z)));
                    if (x == 0 || y == 0) emit(TRI, {x, y, z}, s.c(x, y), s.id(s.add(x, y)));
                    emit(UZL, {x, y, z}, s.L(x, y, z), s.id(s.mul(x, s.add(y, z))));
                    if (x == 0 || y == 0) emit(UZL, {x, y, z}, s.at(x, y, z), s.id(s.mul(s.mul(x, y), z)));
                    emit(UZR, {x, y, z}, s.R(x, y, z), s.id(s.mul(s.add(x, y), z)));
                    if (z == 0) emit(UZR, {x, y, z}, s.at(x, y, z), s.id(s.mul(s.mul(x, y), z)));
                }
                if (x == one || y == one || z == one)
                    emit(TRIX, {x, y, z}, s.at(x, y, z), s.id(s.mul(s.mul(x, y), z)));
            }

    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z)
                for (Index t = 0; t < n; ++t) {
                    const Index xy = s.mul(x, y), xz = s.mul(x, z), xt = s.mul(x, t), yz = s.mul(y, z), yt = s.mul(y, t),
                                zt = s.mul(z, t);
                    emit(PENT, {x, y, z, t},
                         s.comp({s.sum(s.id(x), s.ap(y, z, t)), s.ap(x, s.add(y, z), t), s.sum(s.ap(x, y, z), s.id(t))}),
                         s.comp({s.ap(x, y, s.add(z, t)), s.ap(s.add(x, y), z, t)}));
                    emit(PENTX, {x, y, z, t},
                         s.comp({s.prod(s.id(x), s.at(y, z, t)), s.at(x, yz, t), s.prod(s.at(x, y, z), s.id(t))}),
                         s.comp({s.at(x, y, zt), s.at(xy, z, t)}));
                    emit(L_A, {x, y, z, t},
                         s.comp({s.sum(s.id(xy), s.inv(s.L(x, z, t))), s.inv(s.L(x, y, s.add(z, t))), s.prod(s.id(x), s.ap(y, z, t))}),
                         s.comp({s.ap(xy, xz, xt), s.sum(s.inv(s.L(x, y, z)), s.id(xt)), s.inv(s.L(x, s.add(y, z), t))}));
                    {
                        const Index xt_ = s.mul(x, t), yt_ = s.mul(y, t), zt_ = s.mul(z, t);
                        emit(R_A, {x, y, z, t},
                             s.comp({s.sum(s.id(xt_), s.inv(s.R(y, z, t))), s.inv(s.R(x, s.add(y, z), t)),
                                     s.prod(s.ap(x, y, z), s.id(t))}),
                             s.comp({s.ap(xt_, yt_, zt_), s.sum(s.inv(s.R(x, y, t)), s.id(zt_)), s.inv(s.R(s.add(x, y), z, t))}));
                    }
                    // x(y(z+t)): associate, then distribute; or distribute twice, then associate.
                    emit(D1, {x, y, z, t}, s.comp({s.at(x, y, s.add(z, t)), s.L(xy, z, t)}),
                         s.comp({s.prod(s.id(x), s.L(y, z, t)), s.L(x, yz, yt), s.sum(s.at(x, y, z), s.at(x, y, t))}));
                    emit(D2, {x, y, z, t},
                         s.comp({s.at(s.add(x, y), z, t), s.prod(s.R(x, y, z), s.id(t)), s.R(xz, yz, t)}),
                         s.comp({s.R(x, y, zt), s.sum(s.at(x, z, t), s.at(y, z, t))}));
                    emit(D3, {x, y, z, t},
                         s.comp({s.at(x, s.add(y, z), t), s.prod(s.L(x, y, z), s.id(t)), s.R(xy, xz, t)}),
                         s.comp({s.prod(s.id(x), s.R(y, z, t)), s.L(x, yt, zt), s.sum(s.at(x, y, t), s.at(x, z, t))}));
                    // (a+b)(X+Y) with a=x, b=y, X=z, Y=t.
                    emit(D4, {x, y, z, t},
                         s.comp({s.L(s.add(x, y), z, t), s.sum(s.R(x, y, z), s.R(x, y, t)), s.v(xz, yz, xt, yt)}),
                         s.comp({s.R(x, y, s.add(z, t)), s.sum(s.L(x, z, t), s.L(y, z, t))}));
                }
}

struct DiagramWitness {
    std::vector<Index> args;
    Index path1 = 0;
    Index path2 = 0;
};

struct DiagramStatus {
    std::string id;
    std::string description;
    std::size_t instances = 0;
    std::size_t violations = 0;
    std::vector<DiagramWitness> witnesses;
    [[nodiscard]] bool pass() const { return violations == 0; }
};

struct DiagramReport {
    std::vector<DiagramStatus> axioms;
    [[nodiscard]] bool ok() const {
        for (const auto& a : axioms)
            if (!a.pass()) return false;
        return true;
    }
    [[nodiscard]] const DiagramStatus* find(const std::string& id) const {
        for (const auto& a : axioms)
            if (a.id == id) return &a;
        return nullptr;
    }
    [[nodiscard]] std::vector<std::string> failing() const {
        std::vector<std::string> out;
        for (const auto& a : axioms)
            if (!a.pass()) out.push_back(a.id);
        return out;
    }
};

inline DiagramReport verify_axioms(const AnnStructure& f, std::size_t witness_cap = 10) {
    DiagramReport rep;
    for (const auto& d : diagram_inventory()) rep.axioms.push_back({d.id, d.description, 0, 0, {}});
    for_each_diagram(f, [&](std::size_t d, std::vector<Index> args, SkeletalMorphism p1, SkeletalMorphism p2) {
        auto& st = rep.axioms[d];
        ++st.instances;
        if (p1.value == p2.value) return;
        ++st.violations;
        if (st.witnesses.size() < witness_cap) st.witnesses.push_back({std::move(args), p1.value, p2.value});
    });
    return rep;
}

/// sigma(x,y,z,t) = value of v, for every tuple.
inline Cochain sigma_diagram(const AnnStructure& f) {
    Cochain s(Kind::sigma, f.ambient);
    const auto n = static_cast<Index>(f.ambient->ring_order());
    detail::Skel k(f);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z)
                for (Index t = 0; t < n; ++t) s.set({x, y, z, t}, k.v(x, y, z, t).value);
    return s;
}

struct InterchangeCoherence {
    std::size_t tuples = 0;
    std::size_t mismatches = 0;
    std::vector<Tuple> witnesses;
};

/// Compare the two factorizations of v at every tuple.
inline InterchangeCoherence check_interchange(const AnnStructure& f, std::size_t witness_cap = 10) {
    InterchangeCoherence out;
    const auto n = static_cast<Index>(f.ambient->ring_order());
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z)
                for (Index t = 0; t < n; ++t) {
                    ++out.tuples;
                    if (interchange_v(f, x, y, z, t).coherent()) continue;
                    ++out.mismatches;
                    if (out.witnesses.size() < witness_cap) out.witnesses.push_back({x, y, z, t});
                }
    return out;
}

}  // namespace anncat
