#pragma once

// Enumerate valid structures, label each by the class of its quadruple in
// H^3, and audit the labels against witness search.

#include "anncat/cohomology.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace anncat {

struct ClassifyOptions {
    EnumerationOptions enumeration;
    H3Options h3;
    std::size_t audit_pairs = 100;       // per kind (same-class, cross-class); SIZE_MAX for all
    std::size_t closure_pairs = 1000000;  // pairs tried for the regular closure checks
    std::uint64_t seed = 1;
};

struct ClassEntry {
    std::vector<BigInt> label;
    std::size_t members = 0;
    std::size_t regular_members = 0;
};

struct PairAudit {
    std::size_t available = 0;
    std::size_t checked = 0;
    std::size_t failed = 0;
    [[nodiscard]] bool ok() const { return failed == 0; }
};

struct ClassificationReport {
    BigInt search_space;
    BigInt valid_count;
    Strategy strategy = Strategy::automatic;
    BigInt h3_order;
    std::vector<BigInt> h3_factors;
    std::vector<AnnStructure> structures;
    std::vector<std::vector<BigInt>> labels;  // aligned with structures
    std::vector<bool> regular;                // eta(x,x) = 0 for all x
    std::vector<ClassEntry> classes;          // sorted by label

    std::size_t regular_count = 0;
    bool regular_closed = true;          // regular structures closed under addition
    std::size_t regular_sums_checked = 0;
    bool regular_classes_closed = true;  // their labels closed under class addition
    std::size_t regular_class_count = 0;

    PairAudit same_class;   // witness must exist
    PairAudit cross_class;  // witness must not exist

    [[nodiscard]] bool ok() const { return same_class.ok() && cross_class.ok() && regular_closed && regular_classes_closed; }
};

inline bool is_regular(const AnnStructure& f) {
    const auto n = static_cast<Index>(f.ambient->ring_order());
    for (Index x = 0; x < n; ++x)
        if (f.eta()(x, x) != 0) return false;
    return true;
}

inline std::vector<BigInt> add_labels(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                                      const std::vector<BigInt>& factors) {
    std::vector<BigInt> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_floor(BigInt(a[i] + b[i]), factors[i]);
    return out;
}

namespace detail {

// All index pairs (i<j) satisfying pred when there are at most `cap` of
// them, otherwise `cap` distinct ones drawn at random.
template <class Pred>
std::vector<std::pair<std::size_t, std::size_t>> pick_pairs(std::size_t n, std::size_t cap, std::mt19937_64& rng, Pred pred,
                                                            std::size_t& available) {
    std::vector<std::pair<std::size_t, std::size_t>> all;
    available = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pred(i, j)) {
                ++available;
                all.emplace_back(i, j);
            }
    if (all.size() <= cap) return all;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(cap);
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace detail

inline ClassificationReport classify(const Ambient& amb, const ClassifyOptions& opt = {}) {
    ClassificationReport rep;
    EnumerationOptions eo = opt.enumeration;
    eo.regular = false;
    Enumeration en = enumerate_structures(amb, eo);
    rep.search_space = en.search_space;
    rep.valid_count = en.valid_count;
    rep.strategy = en.used;
    rep.structures = std::move(en.structures);

    const H3Result h3 = compute_h3(amb, opt.h3);
    rep.h3_order = h3.h3_order;
    rep.h3_factors = h3.invariant_factors;

    std::map<std::vector<BigInt>, ClassEntry> by_label;
    for (const auto& f : rep.structures) {
        rep.labels.push_back(class_of(quadruple_of(f), h3));
        rep.regular.push_back(is_regular(f));
        auto& e = by_label[rep.labels.back()];
        e.label = rep.labels.back();
        ++e.members;
        if (rep.regular.back()) {
            ++e.regular_members;
            ++rep.regular_count;
        }
    }
    for (auto& [k, e] : by_label) rep.classes.push_back(e);

    // Regular sub-family: closed under pointwise addition, and its labels
    // closed under class addition.
    const CochainSpace space = space_of<AnnStructure>(amb);
    std::vector<std::size_t> reg;
    for (std::size_t i = 0; i < rep.structures.size(); ++i)
        if (rep.regular[i]) reg.push_back(i);
    std::set<std::vector<Index>> reg_keys;
    for (auto i : reg) reg_keys.insert(bundle_key(space, rep.structures[i]));
    std::mt19937_64 rng(opt.seed);
    const std::size_t reg_pairs = reg.size() * reg.size();
    auto check_sum = [&](std::size_t a, std::size_t b) {
        ++rep.regular_sums_checked;
        const AnnStructure s = bundle_add(rep.structures[a], rep.structures[b]);
        if (!reg_keys.count(bundle_key(space, s))) rep.regular_closed = false;
    };
    if (reg_pairs <= opt.closure_pairs) {
        for (auto a : reg)
            for (auto b : reg) check_sum(a, b);
    } else {
        std::uniform_int_distribution<std::size_t> pick(0, reg.size() - 1);
        for (std::size_t k = 0; k < opt.closure_pairs; ++k) check_sum(reg[pick(rng)], reg[pick(rng)]);
    }
    std::set<std::vector<BigInt>> reg_labels;
    for (auto i : reg) reg_labels.insert(rep.labels[i]);
    rep.regular_class_count = reg_labels.size();
    for (const auto& a : reg_labels)
        for (const auto& b : reg_labels)
            if (!reg_labels.count(add_labels(a, b, rep.h3_factors))) rep.regular_classes_closed = false;

    // Self-audit against witness search.
    WitnessSolver solver(amb);
    const std::size_t n = rep.structures.size();
    auto same = detail::pick_pairs(
        n, opt.audit_pairs, rng, [&](std::size_t i, std::size_t j) { return rep.labels[i] == rep.labels[j]; },
        rep.same_class.available);
    for (auto [i, j] : same) {
        ++rep.same_class.checked;
        if (!solver.solve(rep.structures[i], rep.structures[j])) ++rep.same_class.failed;
    }
    auto cross = detail::pick_pairs(
        n, opt.audit_pairs, rng, [&](std::size_t i, std::size_t j) { return rep.labels[i] != rep.labels[j]; },
        rep.cross_class.available);
    for (auto [i, j] : cross) {
        ++rep.cross_class.checked;
        if (solver.solve(rep.structures[i], rep.structures[j])) ++rep.cross_class.failed;
    }
    return rep;
}

}  // namespace anncat
