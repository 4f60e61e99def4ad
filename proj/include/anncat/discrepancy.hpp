#pragma once

// Known transcription errors in the commonly quoted formulas, and the
// discrepancy log that records where a relation set and the diagram oracle
// disagree on a concrete structure.

#include "anncat/coboundary.hpp"
#include "anncat/relations.hpp"
#include "anncat/skeleton.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace anncat {

struct Typo {
    std::string id;
    std::string equation;  // relation / condition id, or a formula name
    std::string printed;
    std::string corrected;
    bool evaluated = true;  // false: the printed form is only recorded
};

/// Every relation and condition whose printed form differs from the shipped
/// one, plus the formulas that cannot be evaluated as printed.
inline const std::vector<Typo>& known_typos() {
    static const std::vector<Typo> all = [] {
        std::vector<Typo> out;
        auto diff = [&](const std::vector<RelationDef>& c, const std::vector<RelationDef>& p, const char* prefix) {
            for (const auto& rc : c)
                for (const auto& rp : p)
                    if (rc.id == rp.id && rc.formula != rp.formula)
                        out.push_back({std::string(prefix) + rc.id, rc.id, rp.formula, rc.formula, true});
        };
        diff(structure_relations(Variant::corrected, true), structure_relations(Variant::printed, true), "rel-");
        diff(cocycle_conditions(Variant::corrected), cocycle_conditions(Variant::printed), "cond-");
        out.push_back({"rel-1-alt", "1", "xi(s,t,u) - xi(r,t,s) + xi(r,s+t,u) - ...",
                       "xi(y,z,t) - xi(x+y,z,t) + xi(x,y+z,t) - xi(x,y,z+t) + xi(x,y,z) = 0", false});
        out.push_back({"delta-xi", "delta xi", "xi'(x,y,z) - xi(x,y,z) = mu(y,z) - mu(x+y,z) + mu(x,y+z) - mu(x,y,z)",
                       "xi'(x,y,z) - xi(x,y,z) = mu(y,z) - mu(x+y,z) + mu(x,y+z) - mu(x,y)", false});
        out.push_back({"delta-eta", "delta eta", "eta'(x,y) - eta(y,x) = mu(x,y) - mu(y,x)",
                       "eta'(x,y) - eta(x,y) = mu(x,y) - mu(y,x)", false});
        return out;
    }();
    return all;
}

inline const Typo* find_typo(const std::string& equation_id) {
    for (const auto& t : known_typos())
        if (t.equation == equation_id && t.evaluated) return &t;
    return nullptr;
}

/// FNV-1a over ring order, module order, then every table in bundle order.
template <std::size_t N>
std::string structure_hash(const CochainBundle<N>& b) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xffU;
            h *= 1099511628211ULL;
        }
    };
    mix(b.ambient->ring_order());
    mix(b.ambient->order());
    for (const auto& c : b.parts) {
        mix(static_cast<std::uint64_t>(c.kind()));
        for (auto v : c.values()) mix(v);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Discrepancy {
    std::string structure;  // hash
    std::string axiom;      // diagram id, or "sigma" for cocycle conditions
    std::string relation;
    std::string variant;
    std::vector<Index> witness;
    bool oracle_pass = false;
    bool relation_pass = false;
    std::optional<std::string> resolution;  // typo id

    [[nodiscard]] nlohmann::json to_json() const {
        nlohmann::json j{{"structure", structure},       {"axiom", axiom},       {"relation", relation},
                         {"variant", variant},           {"witness", witness},   {"oracle_pass", oracle_pass},
                         {"relation_pass", relation_pass}};
        j["resolution"] = resolution ? nlohmann::json(*resolution) : nlohmann::json(nullptr);
        return j;
    }
};

inline const char* variant_name(Variant v) { return v == Variant::printed ? "printed" : "corrected"; }

/// Compare each diagram with the relations it corresponds to. Only
/// discrepancies of the printed variant can be resolved by a known typo.
inline std::vector<Discrepancy> compare_with_oracle(const AnnStructure& f, Variant variant, const DiagramReport& oracle,
                                                    const RelationReport& rels) {
    std::vector<Discrepancy> out;
    // Only a disagreement of the overall verdicts counts. Diagram ann2-d4 and
    // relation 9 agree only modulo relation 4, so per-diagram mismatches on a
    // structure that both sides reject are not discrepancies.
    if (oracle.ok() == rels.ok()) return out;
    const std::string hash = structure_hash(f);
    const auto& defs = diagram_inventory();
    for (std::size_t d = 0; d < defs.size(); ++d) {
        const DiagramStatus& ds = oracle.axioms[d];
        for (const auto& rid : defs[d].relations) {
            const RelationStatus* rs = rels.find(rid);
            if (!rs || rs->pass() == ds.pass()) continue;
            Discrepancy x{hash, defs[d].id, rid, variant_name(variant), {}, ds.pass(), rs->pass(), std::nullopt};
            if (!ds.pass())
                x.witness = ds.witnesses.front().args;
            else
                x.witness = rs->witnesses.front().args;
            if (variant == Variant::printed)
                if (const Typo* t = find_typo(rid)) x.resolution = t->id;
            out.push_back(std::move(x));
        }
    }
    if (out.empty()) out.push_back({hash, "all", "all", variant_name(variant), {}, oracle.ok(), rels.ok(), std::nullopt});
    return out;
}

inline std::vector<Discrepancy> compare_with_oracle(const AnnStructure& f, Variant variant = Variant::corrected) {
    return compare_with_oracle(f, variant, verify_axioms(f), check_structure(f, false, variant));
}

/// For a structure the oracle accepts, its quadruple must satisfy every
/// condition; each failing condition is a discrepancy.
inline std::vector<Discrepancy> compare_cocycle_with_oracle(const AnnStructure& f, Variant variant) {
    std::vector<Discrepancy> out;
    const DiagramReport oracle = verify_axioms(f);
    if (!oracle.ok()) return out;
    const std::string hash = structure_hash(f);
    const RelationReport rep = check_cocycle(quadruple_of(f), variant);
    for (const auto& st : rep.relations) {
        if (st.pass()) continue;
        Discrepancy x{hash, "sigma", st.id, variant_name(variant), st.witnesses.front().args, true, false, std::nullopt};
        if (variant == Variant::printed)
            if (const Typo* t = find_typo(st.id)) x.resolution = t->id;
        out.push_back(std::move(x));
    }
    return out;
}

enum class SigmaMethod : std::uint8_t { diagram, printed };

inline SigmaMethod parse_sigma_method(const std::string& s) {
    if (s == "diagram") return SigmaMethod::diagram;
    if (s == "printed") return SigmaMethod::printed;
    throw std::invalid_argument("unknown method '" + s + "' (expected diagram or printed)");
}

inline Cochain sigma_of(const AnnStructure& f, SigmaMethod method) {
    return method == SigmaMethod::diagram ? sigma_diagram(f) : sigma_printed_of(f);
}

struct SigmaComparison {
    Cochain diagram, printed;
    std::size_t tuples = 0;
    std::size_t mismatches = 0;
    std::vector<Tuple> witnesses;
    InterchangeCoherence coherence;
    std::vector<Tuple> normalization_violations;  // of the diagram sigma
    [[nodiscard]] bool agree() const { return mismatches == 0; }
};

inline SigmaComparison compare_sigma(const AnnStructure& f, std::size_t witness_cap = kDefaultWitnessCap) {
    SigmaComparison c{sigma_diagram(f), sigma_printed_of(f), 0, 0, {}, check_interchange(f, witness_cap), {}};
    const std::size_t n = f.ambient->ring_order();
    for (std::size_t idx = 0; idx < c.diagram.values().size(); ++idx) {
        ++c.tuples;
        if (c.diagram.values()[idx] == c.printed.values()[idx]) continue;
        ++c.mismatches;
        if (c.witnesses.size() < witness_cap) c.witnesses.push_back(unflatten(idx, 4, n));
    }
    c.normalization_violations = c.diagram.normalization_violations();
    return c;
}

/// Append-only JSON-lines sink.
class DiscrepancyLog {
public:
    DiscrepancyLog() = default;
    explicit DiscrepancyLog(const std::string& path) : out_(path, std::ios::app) {
        if (!out_) throw std::runtime_error("cannot open discrepancy log " + path);
    }

    void append(const Discrepancy& d) {
        ++count_;
        if (!d.resolution) ++unresolved_;
        by_relation_[d.relation + "/" + d.variant]++;
        if (out_.is_open()) out_ << d.to_json().dump() << '\n';
    }
    void append(const std::vector<Discrepancy>& ds) {
        for (const auto& d : ds) append(d);
    }

    [[nodiscard]] std::size_t count() const { return count_; }
    [[nodiscard]] std::size_t unresolved() const { return unresolved_; }
    [[nodiscard]] const std::map<std::string, std::size_t>& by_relation() const { return by_relation_; }

private:
    std::ofstream out_;
    std::size_t count_ = 0, unresolved_ = 0;
    std::map<std::string, std::size_t> by_relation_;
};

}  // namespace anncat
