#include "support.hpp"

#include <gtest/gtest.h>

using namespace anncat;
using namespace testing_support;

namespace {

RawRing cyclic_raw(long long n) { return make_cyclic_ring(n).raw(); }

RawBimodule z2_over(long long n) {
    RawBimodule b;
    b.invariant_factors = std::vector<std::int64_t>{2};
    b.left_action.assign(static_cast<std::size_t>(n), std::vector<long long>(2));
    b.right_action.assign(2, std::vector<long long>(static_cast<std::size_t>(n)));
    for (long long r = 0; r < n; ++r)
        for (long long u = 0; u < 2; ++u) b.left_action[r][u] = b.right_action[u][r] = (r * u) % 2;
    return b;
}

}  // namespace

TEST(CyclicRing, Z2Tables) {
    const auto r = make_cyclic_ring(2).raw();
    EXPECT_EQ(r.add, (std::vector<std::vector<long long>>{{0, 1}, {1, 0}}));
    EXPECT_EQ(r.mul, (std::vector<std::vector<long long>>{{0, 0}, {0, 1}}));
}

TEST(CyclicRing, Z3Arithmetic) {
    const auto r = make_cyclic_ring(3);
    EXPECT_EQ(r.add(2, 2), 1u);
    EXPECT_EQ(r.mul(2, 2), 1u);
    EXPECT_EQ(r.neg(1), 2u);
}

TEST(CyclicRing, RejectsOrderOne) { EXPECT_THROW(make_cyclic_ring(1), std::invalid_argument); }

TEST(ProductRing, Z2xZ2) {
    const auto r = make_product_ring(make_cyclic_ring(2), make_cyclic_ring(2));
    EXPECT_EQ(r.order(), 4u);
    EXPECT_EQ(r.one(), 3u);
    EXPECT_EQ(r.mul(2, 1), 0u);  // (1,0)(0,1) = (0,0)
}

TEST(ProductRing, Z2xZ3IsCyclic) {
    const auto r = make_product_ring(make_cyclic_ring(2), make_cyclic_ring(3));
    ASSERT_EQ(r.order(), 6u);
    // 1 has additive order 6, so the additive group is Z/6.
    Index x = r.one();
    int k = 1;
    while (x != 0) {
        x = r.add(x, r.one());
        ++k;
    }
    EXPECT_EQ(k, 6);
}

TEST(ValidateRing, GeneratedInstancesAreRings) {
    for (long long n = 2; n <= 8; ++n) {
        const auto raw = cyclic_raw(n);
        EXPECT_TRUE(validate_ring(raw).ok()) << "Z/" << n;
        EXPECT_TRUE(oracle::is_ring(raw.add, raw.mul, raw.one));
    }
    for (long long a = 2; a <= 3; ++a)
        for (long long b = 2; b <= 4; ++b) {
            const auto raw = make_product_ring(make_cyclic_ring(a), make_cyclic_ring(b)).raw();
            EXPECT_TRUE(validate_ring(raw).ok());
            EXPECT_TRUE(oracle::is_ring(raw.add, raw.mul, raw.one));
        }
}

TEST(ValidateRing, IdempotentAdditionHasNoInverse) {
    auto raw = cyclic_raw(2);
    raw.add[1][1] = 1;
    const auto rep = validate_ring(raw);
    ASSERT_FALSE(rep.ok());
    const Violation* v = rep.find("add-inverse");
    ASSERT_NE(v, nullptr);
    EXPECT_EQ(v->witness, std::vector<Index>{1});
    EXPECT_NE(v->message.find("no additive inverse for 1"), std::string::npos);
}

TEST(ValidateRing, UnitAxiom) {
    auto raw = cyclic_raw(2);
    raw.mul[1][1] = 0;
    const auto rep = validate_ring(raw);
    const Violation* v = rep.find("mul-identity");
    ASSERT_NE(v, nullptr);
    EXPECT_EQ(v->witness, std::vector<Index>{1});
    EXPECT_NE(v->message.find("unit axiom violated"), std::string::npos);
}

TEST(ValidateRing, MalformedTablesAreFormatErrors) {
    auto raw = cyclic_raw(3);
    raw.mul[2].pop_back();
    EXPECT_THROW(validate_ring(raw), FormatError);
    raw = cyclic_raw(3);
    raw.add[0][0] = 7;
    EXPECT_THROW(validate_ring(raw), FormatError);
    raw = cyclic_raw(3);
    raw.one = 3;
    EXPECT_THROW(validate_ring(raw), FormatError);
}

TEST(ValidateRing, ZeroEqualsOneRejected) {
    auto raw = cyclic_raw(2);
    raw.one = 0;
    EXPECT_NE(validate_ring(raw).find("zero-ne-one"), nullptr);
}

TEST(FiniteRing, ConstructorThrowsOnAxiomFailure) {
    auto raw = cyclic_raw(3);
    raw.mul[2][2] = 2;
    try {
        FiniteRing r(raw);
        FAIL() << "accepted a non-ring";
    } catch (const AxiomError& e) {
        EXPECT_FALSE(e.report().ok());
    }
}

TEST(RegularBimodule, Examples) {
    const auto z2 = regular_bimodule(make_cyclic_ring(2));
    EXPECT_EQ(z2.left(1, 1), 1u);
    EXPECT_EQ(z2.right(1, 1), 1u);
    EXPECT_EQ(regular_bimodule(make_cyclic_ring(3)).left(2, 2), 1u);
    const auto v4 = regular_bimodule(make_product_ring(make_cyclic_ring(2), make_cyclic_ring(2)));
    EXPECT_EQ(v4.left(2, 1), 0u);
}

TEST(ValidateBimodule, RegularIsValid) {
    for (long long n = 2; n <= 8; ++n) {
        const auto r = make_cyclic_ring(n);
        EXPECT_TRUE(validate_bimodule(r, regular_bimodule(r).raw()).ok()) << n;
    }
    const auto v4 = make_product_ring(make_cyclic_ring(2), make_cyclic_ring(2));
    EXPECT_TRUE(validate_bimodule(v4, regular_bimodule(v4).raw()).ok());
}

TEST(ValidateBimodule, UnitLawWitness) {
    const auto r = make_cyclic_ring(2);
    auto b = z2_over(2);
    b.left_action[1][1] = 0;
    const auto rep = validate_bimodule(r, b);
    const Violation* v = rep.find("d");
    ASSERT_NE(v, nullptr);
    EXPECT_EQ(v->witness, std::vector<Index>{1});
    EXPECT_NE(v->message.find("law d) 1u=u violated"), std::string::npos);
}

TEST(ValidateBimodule, Z2OverZ4) {
    const auto r = make_cyclic_ring(4);
    const auto b = z2_over(4);
    EXPECT_TRUE(validate_bimodule(r, b).ok());
    // Direct evaluation of the nine laws over all 8*2*2 tuples.
    auto L = [&](int s, int u) { return static_cast<int>(b.left_action[s][u]); };
    auto R = [&](int u, int s) { return static_cast<int>(b.right_action[u][s]); };
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t)
            for (int u = 0; u < 2; ++u)
                for (int w = 0; w < 2; ++w) {
                    EXPECT_EQ(L(s, (u + w) % 2), (L(s, u) + L(s, w)) % 2);
                    EXPECT_EQ(R((u + w) % 2, s), (R(u, s) + R(w, s)) % 2);
                    EXPECT_EQ(L((s + t) % 4, u), (L(s, u) + L(t, u)) % 2);
                    EXPECT_EQ(R(u, (s + t) % 4), (R(u, s) + R(u, t)) % 2);
                    EXPECT_EQ(L(s, L(t, u)), L((s * t) % 4, u));
                    EXPECT_EQ(R(R(u, s), t), R(u, (s * t) % 4));
                    EXPECT_EQ(R(L(s, u), t), L(s, R(u, t)));
                }
    for (int u = 0; u < 2; ++u) {
        EXPECT_EQ(L(1, u), u);
        EXPECT_EQ(R(u, 1), u);
    }
}

TEST(ValidateBimodule, ShapeErrors) {
    const auto r = make_cyclic_ring(2);
    auto b = z2_over(2);
    b.left_action.pop_back();
    EXPECT_THROW(validate_bimodule(r, b), FormatError);
    b = z2_over(2);
    b.right_action[0][0] = 5;
    EXPECT_THROW(validate_bimodule(r, b), FormatError);
    b = z2_over(2);
    b.group_add = std::vector<std::vector<long long>>{{0, 1}, {1, 0}};
    EXPECT_THROW(validate_bimodule(r, b), FormatError);
}

TEST(ValidateBimodule, BrokenGroupTable) {
    const auto r = make_cyclic_ring(2);
    RawBimodule b;
    b.group_add = std::vector<std::vector<long long>>{{0, 1}, {1, 1}};
    b.left_action = {{0, 0}, {0, 1}};
    b.right_action = {{0, 0}, {0, 1}};
    const auto rep = validate_bimodule(r, b);
    EXPECT_NE(rep.find("group-inverse"), nullptr);
}

TEST(AbelianGroup, FromFactors) {
    const auto g = FiniteAbelianGroup::from_invariant_factors({2, 2});
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(g.exponent(), 2);
    for (Index a = 0; a < 4; ++a) EXPECT_EQ(g.add(a, a), 0u);
}

TEST(AbelianGroup, FromTableFindsInvariantFactors) {
    EXPECT_EQ(FiniteAbelianGroup::from_table(cyclic_raw(4).add).invariant_factors(), (std::vector<std::int64_t>{4}));
    EXPECT_EQ(FiniteAbelianGroup::from_table(cyclic_raw(6).add).invariant_factors(), (std::vector<std::int64_t>{6}));
    const auto v4 = make_product_ring(make_cyclic_ring(2), make_cyclic_ring(2)).raw();
    EXPECT_EQ(FiniteAbelianGroup::from_table(v4.add).invariant_factors(), (std::vector<std::int64_t>{2, 2}));
    const auto z2z4 = make_product_ring(make_cyclic_ring(2), make_cyclic_ring(4)).raw();
    const auto g = FiniteAbelianGroup::from_table(z2z4.add);
    EXPECT_EQ(g.invariant_factors(), (std::vector<std::int64_t>{2, 4}));
    // Coordinates are a group isomorphism.
    for (Index a = 0; a < 8; ++a)
        for (Index b = 0; b < 8; ++b) {
            const auto& ca = g.coords(a);
            const auto& cb = g.coords(b);
            Coords s(ca.size());
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = (ca[i] + cb[i]) % g.invariant_factors()[i];
            EXPECT_EQ(g.from_coords(s), g.add(a, b));
        }
}

TEST(Integer, CheckedArithmeticSignalsOverflow) {
    const CheckedInt64 big(std::numeric_limits<std::int64_t>::max());
    EXPECT_THROW(big + CheckedInt64(1), OverflowError);
    EXPECT_THROW(big * CheckedInt64(2), OverflowError);
    EXPECT_EQ((CheckedInt64(6) * CheckedInt64(7)).value(), 42);
}

TEST(Integer, Xgcd) {
    for (std::int64_t a = -20; a <= 20; ++a)
        for (std::int64_t b = -20; b <= 20; ++b) {
            const auto r = xgcd(a, b);
            EXPECT_EQ(r.g, std::gcd(a, b));
            EXPECT_EQ(r.s * a + r.t * b, r.g);
        }
    EXPECT_EQ(mod_floor<std::int64_t>(-7, 3), 2);
}
