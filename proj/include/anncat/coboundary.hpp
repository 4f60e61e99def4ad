#pragma once

// Cochain-valued formulas: the MacLane coboundary d2 of a pair (mu, nu), the
// induced change of an Ann-structure under a change of constraints, and the
// sigma component attached to a structure.

#include "anncat/cochain.hpp"
#include "anncat/terms.hpp"

#include <string>
#include <vector>

namespace anncat {

/// value(target, t) = sum of terms over source cochains.
struct Formula {
    using Emit = void (*)(const FiniteRing&, const Tuple&, std::vector<Term>&);
    Kind target;
    std::string text;
    Emit emit;
};

namespace cob {

constexpr Kind MU = Kind::mu, NU = Kind::nu, XI = Kind::xi, ETA = Kind::eta;

inline void d2_sigma(const FiniteRing& R, const Tuple& a, std::vector<Term>& s) {
    const Index x = a[0], y = a[1], z = a[2], t = a[3];
    term(s, 1, MU, x, y);
    term(s, 1, MU, z, t);
    term(s, -1, MU, R.add(x, z), R.add(y, t));
    term(s, -1, MU, x, z);
    term(s, -1, MU, y, t);
    term(s, 1, MU, R.add(x, y), R.add(z, t));
}
inline void d2_alpha(const FiniteRing& R, const Tuple& a, std::vector<Term>& s) {
    const Index x = a[0], y = a[1], z = a[2];
    term_left(s, 1, x, NU, y, z);
    term(s, -1, NU, R.mul(x, y), z);
    term(s, 1, NU, x, R.mul(y, z));
    s.push_back({-1, Act::right, z, NU, {x, y, 0, 0}});
}
inline void d2_lambda(const FiniteRing& R, const Tuple& a, std::vector<Term>& s) {
    const Index x = a[0], y = a[1], z = a[2];
    term(s, 1, NU, x, R.add(y, z));
    term(s, -1, NU, x, y);
    term(s, -1, NU, x, z);
    term_left(s, 1, x, MU, y, z);
    term(s, -1, MU, R.mul(x, y), R.mul(x, z));
}
inline void d2_rho(const FiniteRing& R, const Tuple& a, std::vector<Term>& s) {
    const Index x = a[0], y = a[1], z = a[2];
    term(s, 1, NU, R.add(x, y), z);
    term(s, -1, NU, x, z);
    term(s, -1, NU, y, z);
    s.push_back({1, Act::right, z, MU, {x, y, 0, 0}});
    term(s, -1, MU, R.mul(x, z), R.mul(y, z));
}
inline void delta_xi(const FiniteRing& R, const Tuple& a, std::vector<Term>& s) {
    const Index x = a[0], y = a[1], z = a[2];
    term(s, 1, MU, y, z);
    term(s, -1, MU, R.add(x, y), z);
    term(s, 1, MU, x, R.add(y, z));
    term(s, -1, MU, x, y);
}
inline void delta_eta(const FiniteRing&, const Tuple& a, std::vector<Term>& s) {
    term(s, 1, MU, a[0], a[1]);
    term(s, -1, MU, a[1], a[0]);
}
inline void sigma_from_xi_eta(const FiniteRing& R, const Tuple& a, std::vector<Term>& s) {
    const Index x = a[0], y = a[1], z = a[2], t = a[3];
    term(s, -1, XI, x, y, R.add(z, t));
    term(s, 1, XI, y, z, t);
    term(s, 1, ETA, y, z);
    term(s, -1, XI, z, y, t);
    term(s, 1, XI, x, z, R.add(y, t));
}
inline void sigma_printed(const FiniteRing& R, const Tuple& a, std::vector<Term>& s) {
    const Index x = a[0], y = a[1], z = a[2], t = a[3];
    term(s, 1, XI, R.add(x, y), z, t);
    term(s, -1, XI, x, y, z);
    term(s, 1, ETA, y, z);
    term(s, 1, XI, x, z, y);
    term(s, -1, XI, R.add(x, z), y, t);
}

}  // namespace cob

/// d2 : (mu, nu) -> (sigma, alpha, lambda, rho).
inline const std::vector<Formula>& coboundary_formulas() {
    static const std::vector<Formula> f{
        {Kind::sigma, "mu(x,y) + mu(z,t) - mu(x+z,y+t) - mu(x,z) - mu(y,t) + mu(x+y,z+t)", cob::d2_sigma},
        {Kind::alpha, "x nu(y,z) - nu(xy,z) + nu(x,yz) - nu(x,y) z", cob::d2_alpha},
        {Kind::lambda, "nu(x,y+z) - nu(x,y) - nu(x,z) + x mu(y,z) - mu(xy,xz)", cob::d2_lambda},
        {Kind::rho, "nu(x+y,z) - nu(x,z) - nu(y,z) + mu(x,y) z - mu(xz,yz)", cob::d2_rho},
    };
    return f;
}

/// Change of (xi, eta, alpha, lambda, rho) when the constraints are conjugated by (mu, nu).
inline const std::vector<Formula>& structure_coboundary_formulas() {
    static const std::vector<Formula> f{
        {Kind::xi, "mu(y,z) - mu(x+y,z) + mu(x,y+z) - mu(x,y)", cob::delta_xi},
        {Kind::eta, "mu(x,y) - mu(y,x)", cob::delta_eta},
        coboundary_formulas()[1],
        coboundary_formulas()[2],
        coboundary_formulas()[3],
    };
    return f;
}

inline const Formula& sigma_formula() {
    static const Formula f{Kind::sigma, "-xi(x,y,z+t) + xi(y,z,t) + eta(y,z) - xi(z,y,t) + xi(x,z,y+t)",
                           cob::sigma_from_xi_eta};
    return f;
}

/// The commonly quoted sigma formula. It describes the same morphism through
/// the other factorization, so it agrees with sigma_formula() on every
/// structure satisfying the relations.
inline const Formula& sigma_printed_formula() {
    static const Formula f{Kind::sigma, "xi(x+y,z,t) - xi(x,y,z) + eta(y,z) + xi(x,z,y) - xi(x+z,y,t)", cob::sigma_printed};
    return f;
}

/// Evaluate a formula at every tuple. Nonzero values at forced tuples raise.
inline Cochain evaluate_formula(const Formula& f, const CochainLookup& src, const Ambient& amb) {
    Cochain out(f.target, amb);
    const std::size_t n = amb->ring_order(), k = arity(f.target);
    std::vector<Term> side;
    for (std::size_t idx = 0; idx < out.values().size(); ++idx) {
        side.clear();
        f.emit(amb->ring(), unflatten(idx, k, n), side);
        out.set_flat(idx, eval_side(side, src, *amb));
    }
    if (auto bad = out.normalization_violations(); !bad.empty()) throw NormalizationError(f.target, std::move(bad));
    return out;
}

inline MacLaneQuadruple coboundary(const CochainPair& p) {
    MacLaneQuadruple q = zero_bundle<MacLaneQuadruple>(p.ambient);
    const CochainLookup src(p);
    const auto& fs = coboundary_formulas();
    for (std::size_t i = 0; i < fs.size(); ++i) q.parts[i] = evaluate_formula(fs[i], src, p.ambient);
    return q;
}

inline AnnStructure structure_coboundary(const CochainPair& p) {
    AnnStructure f = zero_bundle<AnnStructure>(p.ambient);
    const CochainLookup src(p);
    const auto& fs = structure_coboundary_formulas();
    for (std::size_t i = 0; i < fs.size(); ++i) f.parts[i] = evaluate_formula(fs[i], src, p.ambient);
    return f;
}

/// f + delta(p). Throws AmbientMismatch if p lives elsewhere.
inline AnnStructure apply_structure_coboundary(const AnnStructure& f, const CochainPair& p) {
    if (!same_ambient(f.ambient, p.ambient)) throw AmbientMismatch("structure and pair over different (R,M)");
    return bundle_add(f, structure_coboundary(p));
}

inline Cochain sigma_of(const AnnStructure& f) { return evaluate_formula(sigma_formula(), CochainLookup(f), f.ambient); }

/// The printed formula is not guaranteed to be normalized on arbitrary
/// tables, so this variant skips the normalization check.
inline Cochain sigma_printed_of(const AnnStructure& f) {
    Cochain out(Kind::sigma, f.ambient);
    const CochainLookup src(f);
    const std::size_t n = f.ambient->ring_order();
    std::vector<Term> side;
    for (std::size_t idx = 0; idx < out.values().size(); ++idx) {
        side.clear();
        cob::sigma_printed(f.ambient->ring(), unflatten(idx, 4, n), side);
        out.set_flat(idx, eval_side(side, src, *f.ambient));
    }
    return out;
}

/// (sigma, alpha, lambda, rho) attached to a structure.
inline MacLaneQuadruple quadruple_of(const AnnStructure& f) {
    return make_bundle<MacLaneQuadruple, 4>(f.ambient, {sigma_of(f), f.alpha(), f.lambda(), f.rho()});
}

}  // namespace anncat
