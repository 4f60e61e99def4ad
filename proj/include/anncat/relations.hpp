#pragma once

// The structure relations 1-17 (+18 for regular structures) and the MacLane
// cocycle conditions v1-v10, in two variants: `corrected` (what the library
// ships and what agrees with the diagram oracle) and `printed` (the
// commonly quoted forms, which contain transcription errors; kept so the
// disagreements can be reported). typos.hpp lists the differences.

#include "anncat/cochain.hpp"
#include "anncat/lattice.hpp"
#include "anncat/terms.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace anncat {

enum class Variant : std::uint8_t { corrected, printed };

using Vars = std::array<Index, 8>;

struct RelationDef {
    using Emit = void (*)(const FiniteRing&, const Vars&, Equation&);
    using Filter = bool (*)(const FiniteRing&, const Vars&);

    std::string id;
    std::string formula;
    std::size_t vars = 0;
    Emit emit = nullptr;
    Filter applies = nullptr;  // null: every tuple in R^vars
};

struct RelationWitness {
    std::vector<Index> args;
    Index lhs = 0;
    Index rhs = 0;
};

struct RelationStatus {
    std::string id;
    std::string formula;
    std::size_t instances = 0;
    std::size_t violations = 0;
    std::vector<RelationWitness> witnesses;
    [[nodiscard]] bool pass() const { return violations == 0; }
};

struct RelationReport {
    std::vector<RelationStatus> relations;

    [[nodiscard]] bool ok() const {
        for (const auto& r : relations)
            if (!r.pass()) return false;
        return true;
    }
    [[nodiscard]] const RelationStatus* find(const std::string& id) const {
        for (const auto& r : relations)
            if (r.id == id) return &r;
        return nullptr;
    }
    [[nodiscard]] std::vector<std::string> failing() const {
        std::vector<std::string> out;
        for (const auto& r : relations)
            if (!r.pass()) out.push_back(r.id);
        return out;
    }
};

inline constexpr std::size_t kDefaultWitnessCap = 10;

namespace rel {

// Short aliases keep the formulas close to their written form.
constexpr Kind XI = Kind::xi, ETA = Kind::eta, AL = Kind::alpha, LA = Kind::lambda, RH = Kind::rho, SG = Kind::sigma;

inline bool forced(Kind k, const FiniteRing& r, const Vars& v) { return is_forced_zero(k, {v[0], v[1], v[2], v[3]}, r.one()); }

inline RelationDef vanishing(std::string id, std::string formula, Kind k, RelationDef::Filter f) {
    RelationDef d{std::move(id), std::move(formula), arity(k), nullptr, f};
    switch (k) {
        case Kind::xi: d.emit = [](const FiniteRing&, const Vars& v, Equation& e) { term(e.lhs, 1, XI, v[0], v[1], v[2]); }; break;
        case Kind::alpha: d.emit = [](const FiniteRing&, const Vars& v, Equation& e) { term(e.lhs, 1, AL, v[0], v[1], v[2]); }; break;
        case Kind::lambda: d.emit = [](const FiniteRing&, const Vars& v, Equation& e) { term(e.lhs, 1, LA, v[0], v[1], v[2]); }; break;
        case Kind::rho: d.emit = [](const FiniteRing&, const Vars& v, Equation& e) { term(e.lhs, 1, RH, v[0], v[1], v[2]); }; break;
        case Kind::sigma:
            d.emit = [](const FiniteRing&, const Vars& v, Equation& e) { term(e.lhs, 1, SG, v[0], v[1], v[2], v[3]); };
            break;
        default: throw std::invalid_argument("no vanishing relation for this kind");
    }
    return d;
}

}  // namespace rel

/// Structure relations. `regular` appends relation 18, eta(x,x) = 0.
inline std::vector<RelationDef> structure_relations(Variant variant = Variant::corrected, bool regular = false) {
    using namespace rel;
    const bool printed = variant == Variant::printed;
    std::vector<RelationDef> d;
    d.push_back({"1", "xi(y,z,t) - xi(x+y,z,t) + xi(x,y+z,t) - xi(x,y,z+t) + xi(x,y,z) = 0", 4,
                 [](const FiniteRing& R, const Vars& v, Equation& e) {
                     const Index x = v[0], y = v[1], z = v[2], t = v[3];
                     term(e.lhs, 1, XI, y, z, t);
                     term(e.lhs, -1, XI, R.add(x, y), z, t);
                     term(e.lhs, 1, XI, x, R.add(y, z), t);
                     term(e.lhs, -1, XI, x, y, R.add(z, t));
                     term(e.lhs, 1, XI, x, y, z);
                 }});
    d.push_back(vanishing("2", "xi(0,y,z) = xi(x,0,z) = xi(x,y,0) = 0", Kind::xi,
                          [](const FiniteRing& R, const Vars& v) { return forced(Kind::xi, R, v); }));
    d.push_back({"3", "xi(x,y,z) - xi(x,z,y) + xi(z,x,y) + eta(x+y,z) - eta(x,z) - eta(y,z) = 0", 3,
                 [](const FiniteRing& R, const Vars& v, Equation& e) {
                     const Index x = v[0], y = v[1], z = v[2];
                     term(e.lhs, 1, XI, x, y, z);
                     term(e.lhs, -1, XI, x, z, y);
                     term(e.lhs, 1, XI, z, x, y);
                     term(e.lhs, 1, ETA, R.add(x, y), z);
                     term(e.lhs, -1, ETA, x, z);
                     term(e.lhs, -1, ETA, y, z);
                 }});
    d.push_back({"4", "eta(x,y) + eta(y,x) = 0", 2, [](const FiniteRing&, const Vars& v, Equation& e) {
                     term(e.lhs, 1, ETA, v[0], v[1]);
                     term(e.lhs, 1, ETA, v[1], v[0]);
                 }});
    d.push_back({"5", "x eta(y,z) - eta(xy,xz) = lambda(x,y,z) - lambda(x,z,y)", 3,
                 [](const FiniteRing& R, const Vars& v, Equation& e) {
                     const Index x = v[0], y = v[1], z = v[2];
                     term_left(e.lhs, 1, x, ETA, y, z);
                     term(e.lhs, -1, ETA, R.mul(x, y), R.mul(x, z));
                     term(e.rhs, 1, LA, x, y, z);
                     term(e.rhs, -1, LA, x, z, y);
                 }});
    d.push_back({"6", "eta(x,y) z - eta(xz,yz) = rho(x,y,z) - rho(y,x,z)", 3,
                 [](const FiniteRing& R, const Vars& v, Equation& e) {
                     const Index x = v[0], y = v[1], z = v[2];
                     term_right4(e.lhs, 1, ETA, {x, y, 0, 0}, z);
                     term(e.lhs, -1, ETA, R.mul(x, z), R.mul(y, z));
                     term(e.rhs, 1, RH, x, y, z);
                     term(e.rhs, -1, RH, y, x, z);
                 }});
    d.push_back({"7", "x xi(y,z,t) - xi(xy,xz,xt) = lambda(x,z,t) - lambda(x,y+z,t) + lambda(x,y,z+t) - lambda(x,y,z)", 4,
                 [](const FiniteRing& R, const Vars& v, Equation& e) {
                     const Index x = v[0], y = v[1], z = v[2], t = v[3];
                     term_left(e.lhs, 1, x, XI, y, z, t);
                     term(e.lhs, -1, XI, R.mul(x, y), R.mul(x, z), R.mul(x, t));
                     term(e.rhs, 1, LA, x, z, t);
                     term(e.rhs, -1, LA, x, R.add(y, z), t);
                     term(e.rhs, 1, LA, x, y, R.add(z, t));
                     term(e.rhs, -1, LA, x, y, z);
                 }});
    if (!printed)
        d.push_back({"8", "xi(x,y,z) t - xi(xt,yt,zt) = rho(y,z,t) - rho(x+y,z,t) + rho(x,y+z,t) - rho(x,y,t)", 4,
                     [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index x = v[0], y = v[1], z = v[2], t = v[3];
                         term_right(e.lhs, 1, XI, x, y, z, t);
                         term(e.lhs, -1, XI, R.mul(x, t), R.mul(y, t), R.mul(z, t));
                         term(e.rhs, 1, RH, y, z, t);
                         term(e.rhs, -1, RH, R.add(x, y), z, t);
                         term(e.rhs, 1, RH, x, R.add(y, z), t);
                         term(e.rhs, -1, RH, x, y, t);
                     }});
    else
        d.push_back({"8", "xi(x,y,z) t - xi(xt,yt,zt) = rho(y,z,t) - rho(x+y,z,t) + rho(x,y+z,t) - rho(x,y,z)", 4,
                     [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index x = v[0], y = v[1], z = v[2], t = v[3];
                         term_right(e.lhs, 1, XI, x, y, z, t);
                         term(e.lhs, -1, XI, R.mul(x, t), R.mul(y, t), R.mul(z, t));
                         term(e.rhs, 1, RH, y, z, t);
                         term(e.rhs, -1, RH, R.add(x, y), z, t);
                         term(e.rhs, 1, RH, x, R.add(y, z), t);
                         term(e.rhs, -1, RH, x, y, z);
                     }});
    {
        RelationDef r9{"9",
                       printed ? "rho(x,y,z+t) - rho(x,y,z) - rho(x,y,t) + lambda(x,z,t) + lambda(y,z,t) - lambda(x+y,z,t) = "
                                 "xi(xz+xt,yz,yt) + xi(xz,xt,yz) - eta(xt,yz) + xi(xz+yz,xt,yt) - xi(xz,yz,xt)"
                               : "rho(x,y,z+t) - rho(x,y,z) - rho(x,y,t) + lambda(x,z,t) + lambda(y,z,t) - lambda(x+y,z,t) = "
                                 "-xi(xz+xt,yz,yt) + xi(xz,xt,yz) - eta(xt,yz) + xi(xz+yz,xt,yt) - xi(xz,yz,xt)",
                       4, nullptr, nullptr};
        auto body = [](const FiniteRing& R, const Vars& v, Equation& e, int first_sign) {
            const Index x = v[0], y = v[1], z = v[2], t = v[3];
            const Index xz = R.mul(x, z), xt = R.mul(x, t), yz = R.mul(y, z), yt = R.mul(y, t);
            term(e.lhs, 1, RH, x, y, R.add(z, t));
            term(e.lhs, -1, RH, x, y, z);
            term(e.lhs, -1, RH, x, y, t);
            term(e.lhs, 1, LA, x, z, t);
            term(e.lhs, 1, LA, y, z, t);
            term(e.lhs, -1, LA, R.add(x, y), z, t);
            term(e.rhs, first_sign, XI, R.add(xz, xt), yz, yt);
            term(e.rhs, 1, XI, xz, xt, yz);
            term(e.rhs, -1, ETA, xt, yz);
            term(e.rhs, 1, XI, R.add(xz, yz), xt, yt);
            term(e.rhs, -1, XI, xz, yz, xt);
        };
        static const auto rel9 = body;
        if (printed)
            r9.emit = [](const FiniteRing& R, const Vars& v, Equation& e) { rel9(R, v, e, +1); };
        else
            r9.emit = [](const FiniteRing& R, const Vars& v, Equation& e) { rel9(R, v, e, -1); };
        d.push_back(r9);
    }
    if (!printed)
        d.push_back({"10", "alpha(x,y,z+t) - alpha(x,y,z) - alpha(x,y,t) = x lambda(y,z,t) + lambda(x,yz,yt) - lambda(xy,z,t)", 4,
                     [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index x = v[0], y = v[1], z = v[2], t = v[3];
                         term(e.lhs, 1, AL, x, y, R.add(z, t));
                         term(e.lhs, -1, AL, x, y, z);
                         term(e.lhs, -1, AL, x, y, t);
                         term_left(e.rhs, 1, x, LA, y, z, t);
                         term(e.rhs, 1, LA, x, R.mul(y, z), R.mul(y, t));
                         term(e.rhs, -1, LA, R.mul(x, y), z, t);
                     }});
    else
        d.push_back({"10", "alpha(x,y,z+t) - alpha(x,y,z) - alpha(x,y,t) = x alpha(y,z,t) + lambda(x,yz,yt) - lambda(xy,z,t)", 4,
                     [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index x = v[0], y = v[1], z = v[2], t = v[3];
                         term(e.lhs, 1, AL, x, y, R.add(z, t));
                         term(e.lhs, -1, AL, x, y, z);
                         term(e.lhs, -1, AL, x, y, t);
                         term_left(e.rhs, 1, x, AL, y, z, t);
                         term(e.rhs, 1, LA, x, R.mul(y, z), R.mul(y, t));
                         term(e.rhs, -1, LA, R.mul(x, y), z, t);
                     }});
    d.push_back({"11",
                 "alpha(x,y+z,t) - alpha(x,y,t) - alpha(x,z,t) = x rho(y,z,t) - rho(xy,xz,t) + lambda(x,yt,zt) - lambda(x,y,z) t",
                 4, [](const FiniteRing& R, const Vars& v, Equation& e) {
                     const Index x = v[0], y = v[1], z = v[2], t = v[3];
                     term(e.lhs, 1, AL, x, R.add(y, z), t);
                     term(e.lhs, -1, AL, x, y, t);
                     term(e.lhs, -1, AL, x, z, t);
                     term_left(e.rhs, 1, x, RH, y, z, t);
                     term(e.rhs, -1, RH, R.mul(x, y), R.mul(x, z), t);
                     term(e.rhs, 1, LA, x, R.mul(y, t), R.mul(z, t));
                     term_right(e.rhs, -1, LA, x, y, z, t);
                 }});
    if (!printed)
        d.push_back({"12", "alpha(x+y,z,t) - alpha(x,z,t) - alpha(y,z,t) = -rho(x,y,z) t - rho(xz,yz,t) + rho(x,y,zt)", 4,
                     [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index x = v[0], y = v[1], z = v[2], t = v[3];
                         term(e.lhs, 1, AL, R.add(x, y), z, t);
                         term(e.lhs, -1, AL, x, z, t);
                         term(e.lhs, -1, AL, y, z, t);
                         term_right(e.rhs, -1, RH, x, y, z, t);
                         term(e.rhs, -1, RH, R.mul(x, z), R.mul(y, z), t);
                         term(e.rhs, 1, RH, x, y, R.mul(z, t));
                     }});
    else
        d.push_back({"12", "alpha(x+y,z,t) - alpha(x,y,t) - alpha(y,z,t) = -rho(x,y,z) t - rho(xz,yz,t) + rho(x,y,zt)", 4,
                     [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index x = v[0], y = v[1], z = v[2], t = v[3];
                         term(e.lhs, 1, AL, R.add(x, y), z, t);
                         term(e.lhs, -1, AL, x, y, t);
                         term(e.lhs, -1, AL, y, z, t);
                         term_right(e.rhs, -1, RH, x, y, z, t);
                         term(e.rhs, -1, RH, R.mul(x, z), R.mul(y, z), t);
                         term(e.rhs, 1, RH, x, y, R.mul(z, t));
                     }});
    d.push_back({"13", "x alpha(y,z,t) - alpha(xy,z,t) + alpha(x,yz,t) - alpha(x,y,zt) + alpha(x,y,z) t = 0", 4,
                 [](const FiniteRing& R, const Vars& v, Equation& e) {
                     const Index x = v[0], y = v[1], z = v[2], t = v[3];
                     term_left(e.lhs, 1, x, AL, y, z, t);
                     term(e.lhs, -1, AL, R.mul(x, y), z, t);
                     term(e.lhs, 1, AL, x, R.mul(y, z), t);
                     term(e.lhs, -1, AL, x, y, R.mul(z, t));
                     term_right(e.lhs, 1, AL, x, y, z, t);
                 }});
    d.push_back(vanishing("14", "alpha(1,y,z) = alpha(x,1,z) = alpha(x,y,1) = 0", Kind::alpha,
                          [](const FiniteRing& R, const Vars& v) { return v[0] == R.one() || v[1] == R.one() || v[2] == R.one(); }));
    d.push_back(vanishing("15", "alpha(0,y,z) = alpha(x,0,z) = alpha(x,y,0) = 0", Kind::alpha,
                          [](const FiniteRing&, const Vars& v) { return v[0] == 0 || v[1] == 0 || v[2] == 0; }));
    d.push_back(vanishing("16", "lambda(1,y,z) = lambda(0,y,z) = lambda(x,0,z) = lambda(x,y,0) = 0", Kind::lambda,
                          [](const FiniteRing& R, const Vars& v) { return forced(Kind::lambda, R, v); }));
    d.push_back(vanishing("17", "rho(x,y,1) = rho(0,y,z) = rho(x,0,z) = rho(x,y,0) = 0", Kind::rho,
                          [](const FiniteRing& R, const Vars& v) { return forced(Kind::rho, R, v); }));
    if (regular)
        d.push_back({"18", "eta(x,x) = 0", 1, [](const FiniteRing&, const Vars& v, Equation& e) { term(e.lhs, 1, ETA, v[0], v[0]); }});
    return d;
}

/// Cocycle conditions v1-v10 on quadruples (sigma, alpha, lambda, rho).
inline std::vector<RelationDef> cocycle_conditions(Variant variant = Variant::corrected) {
    using namespace rel;
    const bool printed = variant == Variant::printed;
    std::vector<RelationDef> d;
    d.push_back({"v1", "x alpha(y,z,t) - alpha(xy,z,t) + alpha(x,yz,t) - alpha(x,y,zt) + alpha(x,y,z) t = 0", 4,
                 [](const FiniteRing& R, const Vars& v, Equation& e) {
                     const Index x = v[0], y = v[1], z = v[2], t = v[3];
                     term_left(e.lhs, 1, x, AL, y, z, t);
                     term(e.lhs, -1, AL, R.mul(x, y), z, t);
                     term(e.lhs, 1, AL, x, R.mul(y, z), t);
                     term(e.lhs, -1, AL, x, y, R.mul(z, t));
                     term_right(e.lhs, 1, AL, x, y, z, t);
                 }});
    d.push_back(vanishing("v2", "alpha(1,y,z) = alpha(x,1,z) = alpha(x,y,1) = alpha(0,y,z) = alpha(x,0,z) = alpha(x,y,0) = 0",
                          Kind::alpha, [](const FiniteRing& R, const Vars& v) { return forced(Kind::alpha, R, v); }));
    if (!printed)
        d.push_back({"v3", "x lambda(y,z,t) + lambda(x,yz,yt) - lambda(xy,z,t) = alpha(x,y,z+t) - alpha(x,y,z) - alpha(x,y,t)", 4,
                     [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index x = v[0], y = v[1], z = v[2], t = v[3];
                         term_left(e.lhs, 1, x, LA, y, z, t);
                         term(e.lhs, 1, LA, x, R.mul(y, z), R.mul(y, t));
                         term(e.lhs, -1, LA, R.mul(x, y), z, t);
                         term(e.rhs, 1, AL, x, y, R.add(z, t));
                         term(e.rhs, -1, AL, x, y, z);
                         term(e.rhs, -1, AL, x, y, t);
                     }});
    else
        d.push_back({"v3", "x lambda(y,z,t) + lambda(x,yz,yt) - lambda(xy,z,t) = alpha(x,y,z) + alpha(x,y,t) - alpha(x,y,z+t)", 4,
                     [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index x = v[0], y = v[1], z = v[2], t = v[3];
                         term_left(e.lhs, 1, x, LA, y, z, t);
                         term(e.lhs, 1, LA, x, R.mul(y, z), R.mul(y, t));
                         term(e.lhs, -1, LA, R.mul(x, y), z, t);
                         term(e.rhs, 1, AL, x, y, z);
                         term(e.rhs, 1, AL, x, y, t);
                         term(e.rhs, -1, AL, x, y, R.add(z, t));
                     }});
    d.push_back({"v4",
                 "alpha(x,y,t) + alpha(x,z,t) - alpha(x,y+z,t) + x rho(y,z,t) - rho(xy,xz,t) + lambda(x,yt,zt) - lambda(x,y,z) t = 0",
                 4, [](const FiniteRing& R, const Vars& v, Equation& e) {
                     const Index x = v[0], y = v[1], z = v[2], t = v[3];
                     term(e.lhs, 1, AL, x, y, t);
                     term(e.lhs, 1, AL, x, z, t);
                     term(e.lhs, -1, AL, x, R.add(y, z), t);
                     term_left(e.lhs, 1, x, RH, y, z, t);
                     term(e.lhs, -1, RH, R.mul(x, y), R.mul(x, z), t);
                     term(e.lhs, 1, LA, x, R.mul(y, t), R.mul(z, t));
                     term_right(e.lhs, -1, LA, x, y, z, t);
                 }});
    if (!printed)
        d.push_back({"v5", "rho(xz,yz,t) - rho(x,y,zt) + rho(x,y,z) t = alpha(x,z,t) + alpha(y,z,t) - alpha(x+y,z,t)", 4,
                     [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index x = v[0], y = v[1], z = v[2], t = v[3];
                         term(e.lhs, 1, RH, R.mul(x, z), R.mul(y, z), t);
                         term(e.lhs, -1, RH, x, y, R.mul(z, t));
                         term_right(e.lhs, 1, RH, x, y, z, t);
                         term(e.rhs, 1, AL, x, z, t);
                         term(e.rhs, 1, AL, y, z, t);
                         term(e.rhs, -1, AL, R.add(x, y), z, t);
                     }});
    else
        d.push_back({"v5", "rho(xz,yz,t) - rho(x,y,zt) + lambda(x,y,z) t = alpha(x+y,z,t) - alpha(x,z,t) - alpha(y,z,t)", 4,
                     [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index x = v[0], y = v[1], z = v[2], t = v[3];
                         term(e.lhs, 1, RH, R.mul(x, z), R.mul(y, z), t);
                         term(e.lhs, -1, RH, x, y, R.mul(z, t));
                         term_right(e.lhs, 1, LA, x, y, z, t);
                         term(e.rhs, 1, AL, R.add(x, y), z, t);
                         term(e.rhs, -1, AL, x, z, t);
                         term(e.rhs, -1, AL, y, z, t);
                     }});
    if (!printed)
        d.push_back({"v6",
                     "sigma(ax,ay,az,at) - a sigma(x,y,z,t) = lambda(a,x,z) + lambda(a,y,t) - lambda(a,x+y,z+t) - lambda(a,x,y) - "
                     "lambda(a,z,t) + lambda(a,x+z,y+t)",
                     5, [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index a = v[0], x = v[1], y = v[2], z = v[3], t = v[4];
                         term(e.lhs, 1, SG, R.mul(a, x), R.mul(a, y), R.mul(a, z), R.mul(a, t));
                         term_left(e.lhs, -1, a, SG, x, y, z, t);
                         term(e.rhs, 1, LA, a, x, z);
                         term(e.rhs, 1, LA, a, y, t);
                         term(e.rhs, -1, LA, a, R.add(x, y), R.add(z, t));
                         term(e.rhs, -1, LA, a, x, y);
                         term(e.rhs, -1, LA, a, z, t);
                         term(e.rhs, 1, LA, a, R.add(x, z), R.add(y, t));
                     }});
    else
        d.push_back({"v6",
                     "sigma(ax,ay,az,at) - a sigma(x,y,z,t) = lambda(a,x,z) + lambda(a,y,t) - lambda(a,x+z,y+t) - lambda(a,x,y) - "
                     "lambda(a,z,t) + lambda(a,x+z,y+t)",
                     5, [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index a = v[0], x = v[1], y = v[2], z = v[3], t = v[4];
                         term(e.lhs, 1, SG, R.mul(a, x), R.mul(a, y), R.mul(a, z), R.mul(a, t));
                         term_left(e.lhs, -1, a, SG, x, y, z, t);
                         term(e.rhs, 1, LA, a, x, z);
                         term(e.rhs, 1, LA, a, y, t);
                         term(e.rhs, -1, LA, a, R.add(x, z), R.add(y, t));
                         term(e.rhs, -1, LA, a, x, y);
                         term(e.rhs, -1, LA, a, z, t);
                         term(e.rhs, 1, LA, a, R.add(x, z), R.add(y, t));
                     }});
    {
        RelationDef v7{"v7",
                       printed ? "sigma(ax,ay,bx,by) = lambda(a,x,y) + lambda(b,x,y) - lambda(a+b,x,y) - rho(a,b,x) - rho(a,b,y) + rho(a,b,x+y)"
                               : "sigma(ax,bx,ay,by) = lambda(a,x,y) + lambda(b,x,y) - lambda(a+b,x,y) - rho(a,b,x) - rho(a,b,y) + rho(a,b,x+y)",
                       4, nullptr, nullptr};
        static const auto rhs = [](const FiniteRing& R, Index a, Index b, Index x, Index y, Equation& e) {
            term(e.rhs, 1, LA, a, x, y);
            term(e.rhs, 1, LA, b, x, y);
            term(e.rhs, -1, LA, R.add(a, b), x, y);
            term(e.rhs, -1, RH, a, b, x);
            term(e.rhs, -1, RH, a, b, y);
            term(e.rhs, 1, RH, a, b, R.add(x, y));
        };
        if (printed)
            v7.emit = [](const FiniteRing& R, const Vars& v, Equation& e) {
                const Index a = v[0], b = v[1], x = v[2], y = v[3];
                term(e.lhs, 1, SG, R.mul(a, x), R.mul(a, y), R.mul(b, x), R.mul(b, y));
                rhs(R, a, b, x, y, e);
            };
        else
            v7.emit = [](const FiniteRing& R, const Vars& v, Equation& e) {
                const Index a = v[0], b = v[1], x = v[2], y = v[3];
                term(e.lhs, 1, SG, R.mul(a, x), R.mul(b, x), R.mul(a, y), R.mul(b, y));
                rhs(R, a, b, x, y, e);
            };
        d.push_back(v7);
    }
    d.push_back({"v8",
                 "sigma(xa,ya,za,ta) - sigma(x,y,z,t) a = rho(x,z,a) + rho(y,t,a) - rho(x+y,z+t,a) - rho(x,y,a) - rho(z,t,a) + "
                 "rho(x+z,y+t,a)",
                 5, [](const FiniteRing& R, const Vars& v, Equation& e) {
                     const Index a = v[0], x = v[1], y = v[2], z = v[3], t = v[4];
                     term(e.lhs, 1, SG, R.mul(x, a), R.mul(y, a), R.mul(z, a), R.mul(t, a));
                     term_right4(e.lhs, -1, SG, {x, y, z, t}, a);
                     term(e.rhs, 1, RH, x, z, a);
                     term(e.rhs, 1, RH, y, t, a);
                     term(e.rhs, -1, RH, R.add(x, y), R.add(z, t), a);
                     term(e.rhs, -1, RH, x, y, a);
                     term(e.rhs, -1, RH, z, t, a);
                     term(e.rhs, 1, RH, R.add(x, z), R.add(y, t), a);
                 }});
    if (!printed)
        d.push_back({"v9",
                     "sigma(a+b,c+d,x+y,z+t) + sigma(a,b,x,y) + sigma(c,d,z,t) + sigma(a+x,b+y,c+z,d+t) = sigma(a,b,c,d) + "
                     "sigma(x,y,z,t) + sigma(a+c,b+d,x+z,y+t) + sigma(a,c,x,z) + sigma(b,d,y,t)",
                     8, [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index a = v[0], b = v[1], c = v[2], dd = v[3], x = v[4], y = v[5], z = v[6], t = v[7];
                         term(e.lhs, 1, SG, R.add(a, b), R.add(c, dd), R.add(x, y), R.add(z, t));
                         term(e.lhs, 1, SG, a, b, x, y);
                         term(e.lhs, 1, SG, c, dd, z, t);
                         term(e.lhs, 1, SG, R.add(a, x), R.add(b, y), R.add(c, z), R.add(dd, t));
                         term(e.rhs, 1, SG, a, b, c, dd);
                         term(e.rhs, 1, SG, x, y, z, t);
                         term(e.rhs, 1, SG, R.add(a, c), R.add(b, dd), R.add(x, z), R.add(y, t));
                         term(e.rhs, 1, SG, a, c, x, z);
                         term(e.rhs, 1, SG, b, dd, y, t);
                     }});
    else
        d.push_back({"v9",
                     "sigma(a,b,c,d) + sigma(x,y,z,t) - sigma(a+x,b+y,c+z,d+t) + sigma(a,b,x,y) + sigma(c,d,z,t) - "
                     "sigma(a+c,b+d,x+z,y+t) + sigma(a,c,x,z) + sigma(b,d,y,t) - sigma(a+b,c+d,x+y,z+t) = 0",
                     8, [](const FiniteRing& R, const Vars& v, Equation& e) {
                         const Index a = v[0], b = v[1], c = v[2], dd = v[3], x = v[4], y = v[5], z = v[6], t = v[7];
                         term(e.lhs, 1, SG, a, b, c, dd);
                         term(e.lhs, 1, SG, x, y, z, t);
                         term(e.lhs, -1, SG, R.add(a, x), R.add(b, y), R.add(c, z), R.add(dd, t));
                         term(e.lhs, 1, SG, a, b, x, y);
                         term(e.lhs, 1, SG, c, dd, z, t);
                         term(e.lhs, -1, SG, R.add(a, c), R.add(b, dd), R.add(x, z), R.add(y, t));
                         term(e.lhs, 1, SG, a, c, x, z);
                         term(e.lhs, 1, SG, b, dd, y, t);
                         term(e.lhs, -1, SG, R.add(a, b), R.add(c, dd), R.add(x, y), R.add(z, t));
                     }});
    d.push_back(vanishing("v10", "sigma(0,0,z,t) = sigma(x,y,0,0) = sigma(0,y,0,t) = sigma(x,0,z,0) = sigma(x,0,0,t) = 0",
                          Kind::sigma, [](const FiniteRing& R, const Vars& v) { return forced(Kind::sigma, R, v); }));
    return d;
}

/// Visit every instance of every relation: fn(def, vars, equation).
template <class Fn>
void for_each_instance(const std::vector<RelationDef>& defs, const FiniteRing& ring, Fn&& fn) {
    const auto n = static_cast<Index>(ring.order());
    Equation eq;
    for (const auto& def : defs) {
        Vars v{};
        std::size_t total = 1;
        for (std::size_t i = 0; i < def.vars; ++i) total *= n;
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            for (std::size_t i = def.vars; i-- > 0;) {
                v[i] = static_cast<Index>(rest % n);
                rest /= n;
            }
            if (def.applies && !def.applies(ring, v)) continue;
            eq.clear();
            def.emit(ring, v, eq);
            fn(def, v, eq);
        }
    }
}

/// Evaluate a relation set on concrete tables.
inline RelationReport evaluate_relations(const std::vector<RelationDef>& defs, const CochainLookup& f, const Bimodule& m,
                                         std::size_t witness_cap = kDefaultWitnessCap) {
    RelationReport rep;
    for (const auto& def : defs) rep.relations.push_back({def.id, def.formula, 0, 0, {}});
    std::size_t current = 0;
    const RelationDef* last = nullptr;
    for_each_instance(defs, m.ring(), [&](const RelationDef& def, const Vars& v, const Equation& eq) {
        if (&def != last) {
            for (std::size_t i = 0; i < defs.size(); ++i)
                if (&defs[i] == &def) current = i;
            last = &def;
        }
        auto& st = rep.relations[current];
        ++st.instances;
        const Index l = eval_side(eq.lhs, f, m), r = eval_side(eq.rhs, f, m);
        if (l == r) return;
        ++st.violations;
        if (st.witnesses.size() < witness_cap)
            st.witnesses.push_back({std::vector<Index>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(def.vars)), l, r});
    });
    return rep;
}

/// Fold the linearized system into a reducer over the space's coordinates.
inline void assemble_relations(const std::vector<RelationDef>& defs, const CochainSpace& space, ModularRowReducer& red) {
    RowAssembler rows(space);
    for_each_instance(defs, space.ambient()->ring(), [&](const RelationDef&, const Vars&, const Equation& eq) {
        rows.clear();
        rows.add_equation(eq);
        for (std::size_t i = 0; i < rows.coord_count(); ++i)
            if (!rows.row_is_zero(i)) red.add_row(rows.scaled_row(i));
    });
}

/// The nonzero rows as a dense list (for independent checks).
inline std::vector<std::vector<std::int64_t>> relation_rows(const std::vector<RelationDef>& defs, const CochainSpace& space) {
    std::vector<std::vector<std::int64_t>> out;
    RowAssembler rows(space);
    for_each_instance(defs, space.ambient()->ring(), [&](const RelationDef&, const Vars&, const Equation& eq) {
        rows.clear();
        rows.add_equation(eq);
        for (std::size_t i = 0; i < rows.coord_count(); ++i)
            if (!rows.row_is_zero(i)) out.push_back(rows.scaled_row(i));
    });
    return out;
}

/// Structure relations 1-17 (and 18 when regular) on f.
inline RelationReport check_structure(const AnnStructure& f, bool regular = false, Variant variant = Variant::corrected,
                                      std::size_t witness_cap = kDefaultWitnessCap) {
    return evaluate_relations(structure_relations(variant, regular), CochainLookup(f), *f.ambient, witness_cap);
}

/// Conditions v1-v10 on q.
inline RelationReport check_cocycle(const MacLaneQuadruple& q, Variant variant = Variant::corrected,
                                    std::size_t witness_cap = kDefaultWitnessCap) {
    return evaluate_relations(cocycle_conditions(variant), CochainLookup(q), *q.ambient, witness_cap);
}

}  // namespace anncat
