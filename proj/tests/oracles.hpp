#pragma once

// Reference computations for the tests. These use plain integer arithmetic
// on Z/n acting on Z/m by multiplication and share no code with the library
// beyond its data types.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<int>;

// Z/n acting on Z/m (m | n) through r.u = u.r = ru mod m.
struct Cyclic {
    int n, m;
    int add(int a, int b) const { return (a + b) % n; }
    int mul(int a, int b) const { return (a * b) % n; }
    int act(int r, int u) const { return (r * u) % m; }
    int md(long long v) const { return static_cast<int>(((v % m) + m) % m); }
    std::size_t at(int a, int b) const { return static_cast<std::size_t>(a * n + b); }
    std::size_t at(int a, int b, int c) const { return static_cast<std::size_t>((a * n + b) * n + c); }
    std::size_t at(int a, int b, int c, int d) const { return static_cast<std::size_t>(((a * n + b) * n + c) * n + d); }
};

struct Pair {
    Table mu, nu;
};
struct Quad {
    Table sigma, alpha, lambda, rho;
};
struct Structure {
    Table xi, eta, alpha, lambda, rho;
    friend bool operator==(const Structure&, const Structure&) = default;
};

// The coboundary of (mu, nu), written out term by term.
inline Quad d2(const Cyclic& c, const Pair& p) {
    const int n = c.n;
    Quad q{Table(n * n * n * n), Table(n * n * n), Table(n * n * n), Table(n * n * n)};
    auto mu = [&](int a, int b) { return p.mu[c.at(a, b)]; };
    auto nu = [&](int a, int b) { return p.nu[c.at(a, b)]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                for (int t = 0; t < n; ++t)
                    q.sigma[c.at(x, y, z, t)] = c.md(mu(x, y) + mu(z, t) - mu(c.add(x, z), c.add(y, t)) - mu(x, z) - mu(y, t) +
                                                     mu(c.add(x, y), c.add(z, t)));
                q.alpha[c.at(x, y, z)] =
                    c.md(c.act(x, nu(y, z)) - nu(c.mul(x, y), z) + nu(x, c.mul(y, z)) - c.act(z, nu(x, y)));
                q.lambda[c.at(x, y, z)] =
                    c.md(nu(x, c.add(y, z)) - nu(x, y) - nu(x, z) + c.act(x, mu(y, z)) - mu(c.mul(x, y), c.mul(x, z)));
                q.rho[c.at(x, y, z)] =
                    c.md(nu(c.add(x, y), z) - nu(x, z) - nu(y, z) + c.act(z, mu(x, y)) - mu(c.mul(x, z), c.mul(y, z)));
            }
    return q;
}

// f' = f + delta(mu, nu) for the structure constraints.
inline Structure conjugate(const Cyclic& c, const Structure& f, const Pair& p) {
    const int n = c.n;
    Structure g = f;
    auto mu = [&](int a, int b) { return p.mu[c.at(a, b)]; };
    const Quad q = d2(c, p);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            g.eta[c.at(x, y)] = c.md(f.eta[c.at(x, y)] + mu(x, y) - mu(y, x));
            for (int z = 0; z < n; ++z) {
                const auto i = c.at(x, y, z);
                g.xi[i] = c.md(f.xi[i] + mu(y, z) - mu(c.add(x, y), z) + mu(x, c.add(y, z)) - mu(x, y));
                g.alpha[i] = c.md(f.alpha[i] + q.alpha[i]);
                g.lambda[i] = c.md(f.lambda[i] + q.lambda[i]);
                g.rho[i] = c.md(f.rho[i] + q.rho[i]);
            }
        }
    return g;
}

// Every normalized (mu, nu): mu vanishes on a zero argument, nu also on a unit argument.
inline std::vector<Pair> all_pairs(const Cyclic& c) {
    const int n = c.n;
    std::vector<std::size_t> mu_free, nu_free;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x != 0 && y != 0) mu_free.push_back(c.at(x, y));
            if (x > 1 && y > 1) nu_free.push_back(c.at(x, y));
        }
    const std::size_t k = mu_free.size() + nu_free.size();
    std::vector<Pair> out;
    std::vector<int> digits(k, 0);
    while (true) {
        Pair p{Table(n * n, 0), Table(n * n, 0)};
        for (std::size_t i = 0; i < mu_free.size(); ++i) p.mu[mu_free[i]] = digits[i];
        for (std::size_t i = 0; i < nu_free.size(); ++i) p.nu[nu_free[i]] = digits[mu_free.size() + i];
        out.push_back(std::move(p));
        std::size_t i = 0;
        while (i < k && ++digits[i] == c.m) digits[i++] = 0;
        if (i == k) break;
    }
    return out;
}

// Exhaustive: is there any normalized (mu, nu) taking f to g?
inline bool brute_congruent(const Cyclic& c, const Structure& f, const Structure& g) {
    for (const auto& p : all_pairs(c))
        if (conjugate(c, f, p) == g) return true;
    return false;
}

// Ring axioms by direct evaluation.
inline bool is_ring(const std::vector<std::vector<long long>>& add, const std::vector<std::vector<long long>>& mul, long long one) {
    const std::size_t n = add.size();
    if (one == 0) return false;
    auto A = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(add[a][b]); };
    auto M = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(mul[a][b]); };
    for (std::size_t x = 0; x < n; ++x) {
        if (A(0, x) != x || A(x, 0) != x) return false;
        if (M(one, x) != x || M(x, one) != x) return false;
        bool inv = false;
        for (std::size_t y = 0; y < n; ++y) inv = inv || A(x, y) == 0;
        if (!inv) return false;
        for (std::size_t y = 0; y < n; ++y) {
            if (A(x, y) != A(y, x)) return false;
            for (std::size_t z = 0; z < n; ++z) {
                if (A(A(x, y), z) != A(x, A(y, z))) return false;
                if (M(M(x, y), z) != M(x, M(y, z))) return false;
                if (M(x, A(y, z)) != A(M(x, y), M(x, z))) return false;
                if (M(A(x, y), z) != A(M(x, z), M(y, z))) return false;
            }
        }
    }
    return true;
}

// Smith diagonal from determinantal divisors: d_k = gcd of all k x k minors.
inline long long det(std::vector<std::vector<long long>> a) {
    // Bareiss elimination; exact for small integer matrices.
    const std::size_t n = a.size();
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline std::vector<long long> smith_by_minors(const std::vector<std::vector<long long>>& a) {
    const std::size_t r = a.size(), c = r ? a[0].size() : 0;
    std::vector<long long> d;
    long long prev = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        long long g = 0;
        std::vector<bool> rs(r, false), cs(c, false);
        std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
            do {
                std::vector<std::vector<long long>> m;
                for (std::size_t i = 0; i < r; ++i) {
                    if (!rs[i]) continue;
                    m.emplace_back();
                    for (std::size_t j = 0; j < c; ++j)
                        if (cs[j]) m.back().push_back(a[i][j]);
                }
                g = std::gcd(g, det(m));
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
        if (g == 0) {
            d.resize(std::min(r, c), 0);
            return d;
        }
        d.push_back(g / prev);
        prev = g;
    }
    return d;
}

// Order of the subgroup of prod Z/orders generated by gens, by closure.
inline std::size_t subgroup_order(const std::vector<std::vector<long long>>& gens, const std::vector<long long>& orders) {
    using V = std::vector<long long>;
    std::set<V> seen{V(orders.size(), 0)};
    std::vector<V> frontier{V(orders.size(), 0)};
    while (!frontier.empty()) {
        std::vector<V> next;
        for (const auto& v : frontier)
            for (const auto& g : gens) {
                V w(v.size());
                for (std::size_t i = 0; i < v.size(); ++i) w[i] = ((v[i] + g[i]) % orders[i] + orders[i]) % orders[i];
                if (seen.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace oracle
