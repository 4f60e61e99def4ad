// anncat: command-line front end.
//
// Exit codes: 0 pass, 1 mathematical failure, 2 format error, 3 refusal.

#include "anncat/anncat.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace anncat;

namespace {

enum Exit : int { kPass = 0, kMath = 1, kFormat = 2, kRefused = 3 };

struct Report {
    json j = json::object();
    std::ostringstream text;
    int code = kPass;

    void fail(int c) {
        // A format error outranks a failure, which outranks a pass.
        if (c == kFormat || code == kFormat) code = kFormat;
        else if (c == kRefused || code == kRefused) code = kRefused;
        else code = std::max(code, c);
    }
};

struct Config {
    std::string format = "text";
    std::string out;
    bool regular = false;
    std::string method = "diagram";
    std::string variant = "corrected";
    std::string strategy = "auto";
    std::string budget = "1048576";
    std::size_t cap = kDefaultWitnessCap;
    bool cross_check = false;
    std::size_t audit = 100;
    std::uint64_t seed = 1;
    std::size_t reps = 64;
    std::string reps_dir;
    std::string ring_path, module_path;
    std::string log_path;
    std::vector<std::string> inputs;
};

json big(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

json big_list(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(big(x));
    return a;
}

std::string tuple_string(const std::vector<Index>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

std::vector<Index> tuple_prefix(const Tuple& t, std::size_t k) { return {t.begin(), t.begin() + static_cast<long>(k)}; }

json violations_json(const ValidationReport& r) {
    json a = json::array();
    for (const auto& v : r.violations)
        a.push_back({{"law", v.law}, {"message", v.message}, {"witness", v.witness}, {"count", v.count}});
    return a;
}

json relations_json(const RelationReport& r) {
    json a = json::array();
    for (const auto& s : r.relations) {
        json w = json::array();
        for (const auto& x : s.witnesses) w.push_back({{"args", x.args}, {"lhs", x.lhs}, {"rhs", x.rhs}});
        a.push_back({{"id", s.id},
                     {"formula", s.formula},
                     {"instances", s.instances},
                     {"violations", s.violations},
                     {"witnesses", w}});
    }
    return a;
}

void relations_text(std::ostream& os, const RelationReport& r, const char* what) {
    const auto bad = r.failing();
    if (bad.empty()) {
        os << "  " << what << ": all " << r.relations.size() << " hold\n";
        return;
    }
    os << "  " << what << ": " << bad.size() << " of " << r.relations.size() << " fail\n";
    for (const auto& s : r.relations) {
        if (s.pass()) continue;
        os << "    " << s.id << "  " << s.formula << "\n      " << s.violations << " of " << s.instances
           << " instances fail, first at " << tuple_string(s.witnesses.front().args) << "\n";
    }
}

json diagrams_json(const DiagramReport& r) {
    json a = json::array();
    for (const auto& d : r.axioms) {
        json w = json::array();
        for (const auto& x : d.witnesses) w.push_back({{"args", x.args}, {"path1", x.path1}, {"path2", x.path2}});
        a.push_back({{"id", d.id}, {"instances", d.instances}, {"violations", d.violations}, {"witnesses", w}});
    }
    return a;
}

json normalization_json(const NormalizationError& e) {
    json w = json::array();
    for (const auto& t : e.witnesses()) w.push_back(tuple_prefix(t, arity(e.kind())));
    return {{"kind", kind_name(e.kind())}, {"witnesses", w}};
}

Variant parse_variant(const std::string& s) {
    if (s == "corrected") return Variant::corrected;
    if (s == "printed") return Variant::printed;
    throw FormatError("unknown variant '" + s + "' (expected corrected or printed)");
}

BigInt parse_budget(const std::string& s) {
    try {
        BigInt b(s);
        if (b < 1) throw FormatError("budget must be positive");
        return b;
    } catch (const std::runtime_error&) {
        throw FormatError("budget '" + s + "' is not an integer");
    }
}

FiniteRing load_ring(const std::string& path) {
    const json j = read_json_file(path);
    return FiniteRing(raw_ring_from_json(j));
}

Ambient load_ambient(const std::string& ring_path, const std::string& module_path) {
    FiniteRing ring = load_ring(ring_path);
    const json m = read_json_file(module_path);
    return make_ambient(Bimodule(ring, raw_bimodule_from_json(m, ring)));
}

// Ambient of a bundle file: embedded, from --ring/--module, or both (then
// they must agree).
Ambient bundle_ambient(const json& j, const Config& cfg) {
    std::optional<Ambient> given;
    if (!cfg.ring_path.empty() || !cfg.module_path.empty()) {
        if (cfg.ring_path.empty() || cfg.module_path.empty()) throw FormatError("--ring and --module go together");
        given = load_ambient(cfg.ring_path, cfg.module_path);
    }
    const bool embedded = j.is_object() && (j.contains("ring") || j.contains("module"));
    if (!embedded) {
        if (!given) throw FormatError("no ring/module embedded; pass --ring and --module");
        return *given;
    }
    Ambient amb = ambient_from_json(j);
    if (given && !same_ambient(amb, *given)) throw AmbientMismatch("embedded ring/module differ from --ring/--module");
    return amb;
}

AnnStructure load_structure(const std::string& path, const Config& cfg) {
    const json j = read_json_file(path);
    if (detect_file_kind(j) != FileKind::structure) throw FormatError(path + ": not a structure file");
    return bundle_from_json<AnnStructure>(j, bundle_ambient(j, cfg));
}

std::string ambient_text(const Ambient& a) {
    return "|R| = " + std::to_string(a->ring_order()) + ", |M| = " + std::to_string(a->order());
}

json ambient_json(const Ambient& a) {
    json f = json::array();
    for (auto d : a->group().invariant_factors()) f.push_back(d);
    return {{"ring_order", a->ring_order()}, {"module_order", a->order()}, {"module_factors", f}};
}

// --- validate --------------------------------------------------------------

void validate_structure(const json& j, const Config& cfg, json& e, std::ostream& os, int& code) {
    const Ambient amb = bundle_ambient(j, cfg);
    AnnStructure f;
    try {
        f = bundle_from_json<AnnStructure>(j, amb);
    } catch (const NormalizationError& ne) {
        e["normalization"] = normalization_json(ne);
        os << "  normalization: " << ne.what() << "\n";
        code = kMath;
        return;
    }
    const Variant variant = parse_variant(cfg.variant);
    const RelationReport rels = check_structure(f, cfg.regular, variant, cfg.cap);
    const DiagramReport oracle = verify_axioms(f, cfg.cap);
    const auto disc = compare_with_oracle(f, variant, oracle, check_structure(f, false, variant, cfg.cap));
    if (!cfg.log_path.empty()) DiscrepancyLog(cfg.log_path).append(disc);
    bool reg_ok = true;
    if (cfg.regular) reg_ok = is_regular(f);

    e["hash"] = structure_hash(f);
    e["variant"] = variant_name(variant);
    e["relations"] = relations_json(rels);
    e["diagrams"] = diagrams_json(oracle);
    e["relations_pass"] = rels.ok();
    e["diagrams_pass"] = oracle.ok();
    json d = json::array();
    for (const auto& x : disc) d.push_back(x.to_json());
    e["discrepancies"] = d;
    relations_text(os, rels, "relations");
    os << "  diagrams: " << (oracle.ok() ? "all commute" : "fail:");
    for (const auto& id : oracle.failing()) os << ' ' << id;
    os << "\n";
    if (!disc.empty()) os << "  " << disc.size() << " disagreement(s) between relations and diagrams\n";
    if (!rels.ok() || !reg_ok) code = kMath;
}

void validate_one(const std::string& path, const Config& cfg, Report& rep) {
    json e{{"path", path}};
    std::ostringstream os;
    int code = kPass;
    try {
        const json j = read_json_file(path);
        const FileKind kind = detect_file_kind(j);
        e["kind"] = file_kind_name(kind);
        os << path << " [" << file_kind_name(kind) << "]\n";
        switch (kind) {
            case FileKind::ring: {
                const auto r = validate_ring(raw_ring_from_json(j));
                e["violations"] = violations_json(r);
                os << (r.ok() ? std::string("  unital ring\n") : r.to_string());
                if (!r.ok()) code = kMath;
                break;
            }
            case FileKind::bimodule: {
                if (cfg.ring_path.empty()) throw FormatError("bimodule files need --ring");
                const FiniteRing ring = load_ring(cfg.ring_path);
                const auto r = validate_bimodule(ring, raw_bimodule_from_json(j, ring));
                e["violations"] = violations_json(r);
                os << (r.ok() ? std::string("  R-bimodule\n") : r.to_string());
                if (!r.ok()) code = kMath;
                break;
            }
            case FileKind::cochain: {
                if (cfg.ring_path.empty() || cfg.module_path.empty())
                    throw FormatError("cochain files need --ring and --module");
                try {
                    cochain_from_json(j, load_ambient(cfg.ring_path, cfg.module_path));
                    os << "  normalized\n";
                } catch (const NormalizationError& ne) {
                    e["normalization"] = normalization_json(ne);
                    os << "  normalization: " << ne.what() << "\n";
                    code = kMath;
                }
                break;
            }
            case FileKind::structure: validate_structure(j, cfg, e, os, code); break;
            case FileKind::quadruple: {
                const Ambient amb = bundle_ambient(j, cfg);
                try {
                    const auto q = bundle_from_json<MacLaneQuadruple>(j, amb);
                    const auto r = check_cocycle(q, parse_variant(cfg.variant), cfg.cap);
                    e["conditions"] = relations_json(r);
                    relations_text(os, r, "conditions");
                    if (!r.ok()) code = kMath;
                } catch (const NormalizationError& ne) {
                    e["normalization"] = normalization_json(ne);
                    os << "  normalization: " << ne.what() << "\n";
                    code = kMath;
                }
                break;
            }
            case FileKind::pair: {
                const Ambient amb = bundle_ambient(j, cfg);
                try {
                    bundle_from_json<CochainPair>(j, amb);
                    os << "  normalized\n";
                } catch (const NormalizationError& ne) {
                    e["normalization"] = normalization_json(ne);
                    os << "  normalization: " << ne.what() << "\n";
                    code = kMath;
                }
                break;
            }
            default: throw FormatError(path + ": cannot tell what this file holds");
        }
    } catch (const FormatError& fe) {
        e["error"] = fe.what();
        os << path << "\n  format error: " << fe.what() << "\n";
        code = kFormat;
    } catch (const AmbientMismatch& am) {
        e["error"] = am.what();
        os << path << "\n  format error: " << am.what() << "\n";
        code = kFormat;
    } catch (const AxiomError& ae) {
        e["error"] = ae.what();
        e["violations"] = violations_json(ae.report());
        os << path << "\n  " << ae.what();
        code = kMath;
    }
    e["status"] = code == kPass ? "pass" : code == kMath ? "fail" : "error";
    rep.j["files"].push_back(e);
    rep.text << os.str();
    rep.fail(code);
}

Report cmd_validate(const Config& cfg) {
    Report rep;
    rep.j["files"] = json::array();
    for (const auto& p : cfg.inputs) validate_one(p, cfg, rep);
    return rep;
}

// --- enumerate / classify ----------------------------------------------------

EnumerationOptions enumeration_options(const Config& cfg) {
    EnumerationOptions eo;
    eo.budget = parse_budget(cfg.budget);
    eo.strategy = parse_strategy(cfg.strategy);
    eo.regular = cfg.regular;
    eo.variant = parse_variant(cfg.variant);
    return eo;
}

Report cmd_enumerate(const Config& cfg) {
    Report rep;
    const Ambient amb = load_ambient(cfg.inputs.at(0), cfg.inputs.at(1));
    const Enumeration en = enumerate_structures(amb, enumeration_options(cfg));
    json list = json::array();
    for (const auto& f : en.structures) list.push_back(bundle_to_json(f, false));
    rep.j = {{"ambient", ambient_json(amb)},
             {"search_space", big(en.search_space)},
             {"valid_count", big(en.valid_count)},
             {"strategy", strategy_name(en.used)},
             {"regular_only", cfg.regular},
             {"structures", list}};
    rep.text << ambient_text(amb) << "\n"
             << "candidates: " << en.search_space << "\n"
             << "valid" << (cfg.regular ? " regular" : "") << " structures: " << en.valid_count << " (" << strategy_name(en.used)
             << ")\n";
    for (const auto& f : en.structures) rep.text << "  " << structure_hash(f) << "\n";
    return rep;
}

Report cmd_classify(const Config& cfg) {
    Report rep;
    const Ambient amb = load_ambient(cfg.inputs.at(0), cfg.inputs.at(1));
    ClassifyOptions co;
    co.enumeration = enumeration_options(cfg);
    co.audit_pairs = cfg.audit;
    co.seed = cfg.seed;
    const ClassificationReport r = classify(amb, co);

    json classes = json::array();
    for (const auto& c : r.classes)
        classes.push_back({{"label", big_list(c.label)}, {"members", c.members}, {"regular_members", c.regular_members}});
    json members = json::array();
    for (std::size_t i = 0; i < r.structures.size(); ++i)
        members.push_back({{"hash", structure_hash(r.structures[i])}, {"label", big_list(r.labels[i])}, {"regular", bool(r.regular[i])}});
    auto audit = [](const PairAudit& a) { return json{{"available", a.available}, {"checked", a.checked}, {"failed", a.failed}}; };
    rep.j = {{"ambient", ambient_json(amb)},
             {"search_space", big(r.search_space)},
             {"valid_count", big(r.valid_count)},
             {"strategy", strategy_name(r.strategy)},
             {"h3_order", big(r.h3_order)},
             {"h3_factors", big_list(r.h3_factors)},
             {"class_count", r.classes.size()},
             {"classes", classes},
             {"structures", members},
             {"regular",
              {{"count", r.regular_count},
               {"closed_under_addition", r.regular_closed},
               {"sums_checked", r.regular_sums_checked},
               {"class_count", r.regular_class_count},
               {"classes_closed", r.regular_classes_closed}}},
             {"audit", {{"same_class", audit(r.same_class)}, {"cross_class", audit(r.cross_class)}}},
             {"ok", r.ok()}};

    auto& os = rep.text;
    os << ambient_text(amb) << "\n"
       << "candidates: " << r.search_space << "\n"
       << "valid structures: " << r.valid_count << " (" << strategy_name(r.strategy) << ")\n"
       << "H^3 order " << r.h3_order << ", factors " << label_string(r.h3_factors) << "\n"
       << "classes realized: " << r.classes.size() << "\n";
    for (const auto& c : r.classes)
        os << "  " << label_string(c.label) << ": " << c.members << " structures, " << c.regular_members << " regular\n";
    os << "regular structures: " << r.regular_count << ", " << r.regular_class_count << " classes\n"
       << "  closed under addition: " << (r.regular_closed ? "yes" : "NO") << " (" << r.regular_sums_checked << " sums)\n"
       << "  classes closed under addition: " << (r.regular_classes_closed ? "yes" : "NO") << "\n"
       << "audit: same-class " << r.same_class.checked << "/" << r.same_class.available << " checked, " << r.same_class.failed
       << " without witness; cross-class " << r.cross_class.checked << "/" << r.cross_class.available << " checked, "
       << r.cross_class.failed << " with witness\n";
    if (!r.ok()) rep.fail(kMath);
    return rep;
}

// --- h3 --------------------------------------------------------------------

Report cmd_h3(const Config& cfg) {
    Report rep;
    const Ambient amb = load_ambient(cfg.inputs.at(0), cfg.inputs.at(1));
    H3Options ho;
    ho.representative_cap = cfg.reps;
    const H3Result h = compute_h3(amb, ho);

    json reps = json::array();
    if (!cfg.reps_dir.empty()) {
        std::filesystem::create_directories(cfg.reps_dir);
        for (std::size_t i = 0; i < h.representatives.size(); ++i) {
            const std::string name = "rep_" + std::to_string(i) + ".json";
            write_text_file((std::filesystem::path(cfg.reps_dir) / name).string(),
                            bundle_to_json(h.representatives[i]).dump(1) + "\n");
            reps.push_back({{"file", name}, {"label", big_list(class_of(h.representatives[i], h))}});
        }
    }
    rep.j = {{"ambient", ambient_json(amb)},
             {"c2_dimension", h.c2.dimension()},
             {"c3_dimension", h.c3.dimension()},
             {"z3_order", big(h.z3_order)},
             {"b3_order", big(h.b3_order)},
             {"h3_order", big(h.h3_order)},
             {"invariant_factors", big_list(h.invariant_factors)},
             {"representatives", h.representatives.size()},
             {"representatives_truncated", h.representatives_truncated},
             {"representative_files", reps}};
    auto& os = rep.text;
    os << ambient_text(amb) << "\n"
       << "C^2 coordinates: " << h.c2.dimension() << ", C^3 coordinates: " << h.c3.dimension() << "\n"
       << "|Z^3| = " << h.z3_order << "\n|B^3| = " << h.b3_order << "\n|H^3| = " << h.h3_order << "\n"
       << "H^3 = " << (h.invariant_factors.empty() ? std::string("0") : "");
    for (std::size_t i = 0; i < h.invariant_factors.size(); ++i) os << (i ? " + " : "") << "Z/" << h.invariant_factors[i];
    os << "\n";
    if (!reps.empty()) os << reps.size() << " representatives written to " << cfg.reps_dir << "\n";

    if (cfg.cross_check) {
        const IndependentCounts ic = independent_h3_counts(amb);
        json cc{{"z3_method", ic.z3_method}, {"b3_method", ic.b3_method}};
        cc["z3_order"] = ic.z3 ? big(*ic.z3) : json(nullptr);
        cc["b3_order"] = ic.b3 ? big(*ic.b3) : json(nullptr);
        cc["h3_order"] = ic.h3() ? big(*ic.h3()) : json(nullptr);
        const bool available = ic.z3 && ic.b3;
        const bool agree = available && *ic.z3 == h.z3_order && *ic.b3 == h.b3_order;
        cc["agree"] = agree;
        rep.j["cross_check"] = cc;
        if (!available) {
            os << "cross-check: no independent method fits this size\n";
            rep.fail(kRefused);
        } else {
            os << "cross-check: |Z^3| = " << *ic.z3 << " (" << ic.z3_method << "), |B^3| = " << *ic.b3 << " (" << ic.b3_method
               << ") -> " << (agree ? "agree" : "DISAGREE") << "\n";
            if (!agree) rep.fail(kMath);
        }
    }
    return rep;
}

// --- sigma -----------------------------------------------------------------

Report cmd_sigma(const Config& cfg) {
    Report rep;
    const AnnStructure f = load_structure(cfg.inputs.at(0), cfg);
    const SigmaMethod method = parse_sigma_method(cfg.method);
    const RelationReport rels = check_structure(f, false, Variant::corrected, cfg.cap);
    const SigmaComparison cmp = compare_sigma(f, cfg.cap);
    const Cochain& s = method == SigmaMethod::diagram ? cmp.diagram : cmp.printed;
    const auto bad = s.normalization_violations();

    json mism = json::array(), incoh = json::array(), nbad = json::array();
    for (const auto& t : cmp.witnesses) mism.push_back(t);
    for (const auto& t : cmp.coherence.witnesses) incoh.push_back(t);
    for (const auto& t : bad) nbad.push_back(t);
    rep.j = {{"method", cfg.method},
             {"structure_valid", rels.ok()},
             {"sigma", cochain_to_json(s)},
             {"normalization_violations", nbad},
             {"comparison",
              {{"tuples", cmp.tuples}, {"mismatches", cmp.mismatches}, {"witnesses", mism}, {"agree", cmp.agree()}}},
             {"interchange",
              {{"tuples", cmp.coherence.tuples}, {"mismatches", cmp.coherence.mismatches}, {"witnesses", incoh}}}};

    auto& os = rep.text;
    os << "structure " << structure_hash(f) << (rels.ok() ? " (valid)" : " (fails its relations)") << "\n"
       << "sigma (" << cfg.method << "):";
    for (auto v : s.values()) os << ' ' << v;
    os << "\n"
       << "normalization: " << (bad.empty() ? "ok" : std::to_string(bad.size()) + " violations") << "\n"
       << "diagram vs printed: " << cmp.mismatches << " of " << cmp.tuples << " tuples differ\n"
       << "interchange factorizations: " << cmp.coherence.mismatches << " of " << cmp.coherence.tuples << " tuples differ\n";

    bool ok = bad.empty() && rels.ok();
    if (ok) {
        const auto q = make_bundle<MacLaneQuadruple, 4>(f.ambient, {s, f.alpha(), f.lambda(), f.rho()});
        const RelationReport cond = check_cocycle(q, Variant::corrected, cfg.cap);
        rep.j["conditions"] = relations_json(cond);
        rep.j["cocycle"] = cond.ok();
        relations_text(os, cond, "conditions on (sigma, alpha, lambda, rho)");
        ok = cond.ok();
    }
    if (!ok) rep.fail(kMath);
    return rep;
}

// --- witness ---------------------------------------------------------------

Report cmd_witness(const Config& cfg) {
    Report rep;
    const AnnStructure f = load_structure(cfg.inputs.at(0), cfg);
    const AnnStructure g = load_structure(cfg.inputs.at(1), cfg);
    if (!same_ambient(f.ambient, g.ambient)) throw AmbientMismatch("the two structures live over different (R,M)");
    const auto w = find_witness(f, g);
    rep.j = {{"first", structure_hash(f)}, {"second", structure_hash(g)}, {"congruent", w.has_value()}};
    rep.text << structure_hash(f) << " vs " << structure_hash(g) << ": ";
    if (w) {
        rep.j["witness"] = bundle_to_json(*w, false);
        rep.text << "congruent\n  mu:";
        for (auto v : w->mu().values()) rep.text << ' ' << v;
        rep.text << "\n  nu:";
        for (auto v : w->nu().values()) rep.text << ' ' << v;
        rep.text << "\n";
    } else {
        rep.j["witness"] = nullptr;
        rep.text << "not congruent\n";
        rep.fail(kMath);
    }
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skeletal Ann-category toolkit"};
    app.require_subcommand(1);
    Config cfg;

    app.add_option("--format", cfg.format, "Report format on stdout")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", cfg.out, "Also write the JSON report here");
    app.add_option("--cap", cfg.cap, "Witnesses kept per failing relation");

    auto* validate = app.add_subcommand("validate", "Check ring, bimodule, cochain, structure, quadruple or pair files");
    validate->add_option("files", cfg.inputs, "Input files")->required();
    validate->add_option("--ring", cfg.ring_path, "Ring file for inputs without an embedded ring");
    validate->add_option("--module", cfg.module_path, "Bimodule file for inputs without an embedded module");
    validate->add_flag("--regular", cfg.regular, "Also require eta(x,x) = 0");
    validate->add_option("--variant", cfg.variant, "Relation set")->check(CLI::IsMember({"corrected", "printed"}));
    validate->add_option("--discrepancy-log", cfg.log_path, "Append relation/diagram disagreements (JSON lines)");

    auto add_ambient = [&](CLI::App* sub) {
        sub->add_option("ring", cfg.ring_path, "Ring file")->required();
        sub->add_option("module", cfg.module_path, "Bimodule file")->required();
    };
    auto add_enum = [&](CLI::App* sub) {
        sub->add_option("--budget", cfg.budget, "Largest search space or valid count to enumerate");
        sub->add_option("--strategy", cfg.strategy, "Enumeration strategy")->check(CLI::IsMember({"auto", "brute", "kernel"}));
        sub->add_option("--variant", cfg.variant, "Relation set")->check(CLI::IsMember({"corrected", "printed"}));
    };

    auto* enumerate = app.add_subcommand("enumerate", "List every valid structure over (R,M)");
    add_ambient(enumerate);
    add_enum(enumerate);
    enumerate->add_flag("--regular", cfg.regular, "Only structures with eta(x,x) = 0");

    auto* classify_cmd = app.add_subcommand("classify", "Group valid structures by cohomology class");
    add_ambient(classify_cmd);
    add_enum(classify_cmd);
    classify_cmd->add_flag("--regular", cfg.regular, "Accepted for symmetry; the regular section is always reported");
    classify_cmd->add_option("--audit", cfg.audit, "Witness checks per pair kind");
    classify_cmd->add_option("--seed", cfg.seed, "Seed for sampled audits");

    auto* h3 = app.add_subcommand("h3", "Compute H^3(R,M)");
    add_ambient(h3);
    h3->add_flag("--cross-check", cfg.cross_check, "Recount |Z^3| and |B^3| independently");
    h3->add_option("--reps", cfg.reps, "Representatives to compute");
    h3->add_option("--reps-dir", cfg.reps_dir, "Write representatives as quadruple files");

    auto* sigma = app.add_subcommand("sigma", "Compute sigma of a structure");
    sigma->add_option("structure", cfg.inputs, "Structure file")->required()->expected(1);
    sigma->add_option("--method", cfg.method, "Construction")->check(CLI::IsMember({"diagram", "printed"}));
    sigma->add_option("--ring", cfg.ring_path, "Ring file");
    sigma->add_option("--module", cfg.module_path, "Bimodule file");

    auto* witness = app.add_subcommand("witness", "Find (mu, nu) relating two structures");
    witness->add_option("structures", cfg.inputs, "Two structure files")->required()->expected(2);
    witness->add_option("--ring", cfg.ring_path, "Ring file");
    witness->add_option("--module", cfg.module_path, "Bimodule file");

    for (auto* sub : {validate, enumerate, classify_cmd, h3, sigma, witness}) {
        sub->add_option("--format", cfg.format, "Report format on stdout")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", cfg.out, "Also write the JSON report here");
        sub->add_option("--cap", cfg.cap, "Witnesses kept per failing relation");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kFormat;
    }

    Report rep;
    std::string cmd;
    try {
        if (*validate) {
            cmd = "validate";
            rep = cmd_validate(cfg);
        } else {
            if (*enumerate || *classify_cmd || *h3) cfg.inputs = {cfg.ring_path, cfg.module_path};
            if (*enumerate) cmd = "enumerate", rep = cmd_enumerate(cfg);
            if (*classify_cmd) cmd = "classify", rep = cmd_classify(cfg);
            if (*h3) cmd = "h3", rep = cmd_h3(cfg);
            if (*sigma) cmd = "sigma", rep = cmd_sigma(cfg);
            if (*witness) cmd = "witness", rep = cmd_witness(cfg);
        }
    } catch (const RefusalError& e) {
        rep = Report{};
        rep.j = {{"error", e.what()}, {"search_space", big(e.size())}};
        rep.text << "refused: " << e.what() << "\n";
        rep.code = kRefused;
    } catch (const AxiomError& e) {
        rep = Report{};
        rep.j = {{"error", e.what()}, {"violations", violations_json(e.report())}};
        rep.text << e.what();
        rep.code = kMath;
    } catch (const NormalizationError& e) {
        rep = Report{};
        rep.j = {{"error", e.what()}, {"normalization", normalization_json(e)}};
        rep.text << "normalization: " << e.what() << "\n";
        rep.code = kMath;
    } catch (const FormatError& e) {
        rep = Report{};
        rep.j = {{"error", e.what()}};
        rep.text << "format error: " << e.what() << "\n";
        rep.code = kFormat;
    } catch (const AmbientMismatch& e) {
        rep = Report{};
        rep.j = {{"error", e.what()}};
        rep.text << "format error: " << e.what() << "\n";
        rep.code = kFormat;
    } catch (const std::invalid_argument& e) {
        rep = Report{};
        rep.j = {{"error", e.what()}};
        rep.text << "format error: " << e.what() << "\n";
        rep.code = kFormat;
    }

    rep.j["command"] = cmd;
    rep.j["exit_code"] = rep.code;
    const std::string dumped = rep.j.dump(2) + "\n";
    if (!cfg.out.empty()) {
        try {
            write_text_file(cfg.out, dumped);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return kFormat;
        }
    }
    if (cfg.format == "json")
        std::cout << dumped;
    else
        std::cout << rep.text.str();
    return rep.code;
}
