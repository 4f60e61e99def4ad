#pragma once

// Helpers shared by the test binaries.

#include "anncat/anncat.hpp"
#include "oracles.hpp"

#include <random>
#include <vector>

namespace testing_support {

using namespace anncat;

inline Ambient regular_ambient(long long n) { return make_ambient(regular_bimodule(make_cyclic_ring(n))); }
inline Ambient cyclic_ambient(long long n, long long m) { return make_ambient(cyclic_bimodule(n, m)); }

inline oracle::Table table_of(const Cochain& c) { return {c.values().begin(), c.values().end()}; }

inline oracle::Structure to_oracle(const AnnStructure& f) {
    return {table_of(f.xi()), table_of(f.eta()), table_of(f.alpha()), table_of(f.lambda()), table_of(f.rho())};
}

inline std::vector<long long> to_ll(const oracle::Table& t) { return {t.begin(), t.end()}; }

inline CochainPair pair_from(const Ambient& amb, const oracle::Pair& p) {
    return make_bundle<CochainPair, 2>(amb, {make_cochain(Kind::mu, amb, to_ll(p.mu)), make_cochain(Kind::nu, amb, to_ll(p.nu))});
}

inline AnnStructure structure_from(const Ambient& amb, const oracle::Structure& s) {
    return make_bundle<AnnStructure, 5>(amb, {make_cochain(Kind::xi, amb, to_ll(s.xi)), make_cochain(Kind::eta, amb, to_ll(s.eta)),
                                              make_cochain(Kind::alpha, amb, to_ll(s.alpha)),
                                              make_cochain(Kind::lambda, amb, to_ll(s.lambda)),
                                              make_cochain(Kind::rho, amb, to_ll(s.rho))});
}

/// Uniform element of a bundle space: random values on the free support.
template <class B>
B random_bundle(const Ambient& amb, std::mt19937_64& rng) {
    const CochainSpace space = space_of<B>(amb);
    std::vector<std::int64_t> v(space.dimension());
    const auto orders = space.orders();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::uniform_int_distribution<std::int64_t>(0, orders[i] - 1)(rng);
    return space.template from_vector<B>(v);
}

/// Uniform solution of the structure relations (a valid structure for the
/// corrected variant).
class ValidSampler {
public:
    explicit ValidSampler(const Ambient& amb, Variant variant = Variant::corrected)
        : space_(space_of<AnnStructure>(amb)),
          orders_(space_.orders()),
          valid_(relation_kernel(structure_relations(variant), space_), order_columns(orders_)) {}

    [[nodiscard]] BigInt count() const { return valid_.order(); }

    AnnStructure draw(std::mt19937_64& rng) const {
        std::vector<BigInt> lbl;
        for (const auto& g : valid_.invariant_factors()) {
            const auto bound = static_cast<std::int64_t>(g) - 1;
            lbl.emplace_back(std::uniform_int_distribution<std::int64_t>(0, bound)(rng));
        }
        return space_.from_big_vector<AnnStructure>(reduce_mod_orders(valid_.element(lbl), orders_));
    }

private:
    CochainSpace space_;
    std::vector<std::int64_t> orders_;
    KernelQuotient valid_;
};

}  // namespace testing_support
