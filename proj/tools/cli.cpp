// Command-line front end: analyze set expressions, count and enumerate
// supported elements, run fixed-point iterations, inspect functions, replay
// enumerations inside the finite model, and verify cardinality witnesses.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nominal/analyzer.hpp"
#include "nominal/cardinal.hpp"
#include "nominal/counting.hpp"
#include "nominal/fixpoint.hpp"
#include "nominal/fun.hpp"
#include "nominal/oracle.hpp"
#include "nominal/text.hpp"

using json = nlohmann::json;
using namespace nominal;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

json trace_to_json(const std::vector<analyzer::TraceEntry>& trace) {
    json out = json::array();
    for (const auto& t : trace)
        out.push_back({{"rule", t.rule}, {"anchor", t.note}, {"derived", t.derived}});
    return out;
}

json atoms_to_json(const AtomVec& s) {
    json out = json::array();
    for (Atom a : s) out.push_back(atom_name(a));
    return out;
}

struct WitnessCheckOutcome {
    bool distinct = true;
    bool invariant = true;
};

WitnessCheckOutcome check_witness(const analyzer::WitnessFamily& w, std::uint64_t seed,
                                  std::size_t first_k = 20, std::size_t perms = 50) {
    WitnessCheckOutcome outcome;
    std::vector<Elem> members = w.first(first_k);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (members[i] == members[j]) outcome.distinct = false;

    AtomVec pool = w.common_support;
    for (const Elem& m : members) pool |= supp(m);
    pool |= AtomVec(fresh_atoms(3));
    for (const Perm& p : sample_fix(w.common_support, pool, perms, seed))
        for (const Elem& m : members)
            if (act(p, m) != m) outcome.invariant = false;
    return outcome;
}

int run_analyze(const std::string& expr_text, bool as_json, std::size_t first_k, bool check,
                std::uint64_t seed) {
    analyzer::SetExpr expr = analyzer::parse_expr(expr_text);
    analyzer::Verdict v = analyzer::analyze(expr);

    bool checks_ok = true;
    if (check && v.witness) {
        WitnessCheckOutcome outcome = check_witness(*v.witness, seed);
        checks_ok = outcome.distinct && outcome.invariant;
    }

    if (as_json) {
        json out{{"expression", expr.to_string()},
                 {"result", analyzer::result_name(v.result)},
                 {"trace", trace_to_json(v.trace)}};
        if (!v.reason.empty()) out["reason"] = v.reason;
        if (v.witness) {
            json members = json::array();
            for (const Elem& m : v.witness->first(first_k)) members.push_back(m.to_string());
            out["witness"] = {{"support", atoms_to_json(v.witness->common_support)},
                              {"family", v.witness->family},
                              {"first_k", members}};
        }
        if (check) out["witness_checks_passed"] = checks_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "expression: " << expr.to_string() << "\n";
        std::cout << "verdict: " << analyzer::result_name(v.result) << "\n";
        if (!v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
        if (!v.trace.empty()) {
            std::cout << "trace:\n";
            for (const auto& t : v.trace)
                std::cout << "  - " << t.rule << (t.derived ? " (derived)" : "") << ": " << t.note
                          << "\n";
        }
        if (v.witness) {
            std::cout << "witness: " << v.witness->family << "\n";
            std::cout << "common support: " << v.witness->common_support.to_string() << "\n";
            std::cout << "first " << first_k << ":";
            for (const Elem& m : v.witness->first(first_k))
                std::cout << " " << m.to_string();
            std::cout << "\n";
            if (check)
                std::cout << "witness checks: " << (checks_ok ? "passed" : "FAILED") << "\n";
        }
    }
    return checks_ok ? kOk : kMismatch;
}

int run_count(Kind kind, std::size_t arity, int support_size, const std::string& support_labels,
              bool cross, std::size_t universe, bool as_json) {
    if (cross) {
        text::Binder binder;
        AtomVec support = binder.bind_list(support_labels);
        counting::CrossCheckReport report = counting::cross_check(kind, support, universe, arity);
        if (as_json) {
            json out{{"kind", kind_name(kind)},
                     {"support", atoms_to_json(report.support)},
                     {"universe", report.universe},
                     {"formula", report.formula_count},
                     {"symbolic", report.symbolic_count},
                     {"oracle", report.oracle_count},
                     {"counts_match", report.counts_match},
                     {"bijection", report.bijection}};
            if (kind == Kind::FunATuple) out["arity"] = arity;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << report.to_string() << "\n";
        }
        return report.ok() ? kOk : kMismatch;
    }
    std::uint64_t n = counting::count_supported(kind, static_cast<std::size_t>(support_size),
                                                arity);
    if (as_json) {
        json out{{"kind", kind_name(kind)}, {"support_size", support_size}, {"count", n}};
        if (kind == Kind::FunATuple) out["arity"] = arity;
        for (const auto& f : counting::formula_registry()) {
            if (f.kind == kind) {
                out["provenance"] =
                    f.provenance == counting::Provenance::Stated ? "stated" : "derived";
                out["formula"] = f.note;
            }
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << n << "\n";
    }
    return kOk;
}

int run_enumerate(Kind kind, const std::string& support_labels, std::size_t arity, bool as_json) {
    text::Binder binder;
    AtomVec s = binder.bind_list(support_labels);
    std::vector<std::string> lines;
    switch (kind) {
        case Kind::Atoms:
            for (Atom a : s) lines.push_back(atom_name(a));
            break;
        case Kind::Subsets:
            for (const AtomSet& x : counting::enumerate_subsets_supported_by(s))
                lines.push_back(x.to_string());
            break;
        case Kind::InjTuples:
            for (const auto& t : counting::enumerate_inj_tuples_over(s)) {
                std::string line = "(";
                for (std::size_t i = 0; i < t.size(); ++i) {
                    if (i) line += ",";
                    line += atom_name(t[i]);
                }
                lines.push_back(line + ")");
            }
            break;
        case Kind::FunAA:
            for (const AtomFun& f : enumerate_atom_funs(s)) lines.push_back(f.to_string());
            break;
        case Kind::FunASet:
            for (const AtomSetFun& f : enumerate_set_funs(s)) lines.push_back(f.to_string());
            break;
        case Kind::FunATuple:
            for (const TupleFun& f : enumerate_tuple_funs(s, arity))
                lines.push_back(f.to_string());
            break;
    }
    if (as_json) {
        json out{{"kind", kind_name(kind)},
                 {"support", atoms_to_json(s)},
                 {"count", lines.size()},
                 {"elements", lines}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const std::string& line : lines) std::cout << line << "\n";
        std::cout << "count: " << lines.size() << "\n";
    }
    return kOk;
}

int run_fixpoint(const std::string& map_text, const std::string& from_text, std::size_t max_iter,
                 bool as_json) {
    text::Binder binder;
    fixpoint::MonotoneMap m = text::parse_map(map_text, binder);
    AtomVec z0 = from_text.empty() ? AtomVec{} : text::parse_atom_set(from_text, binder);

    try {
        fixpoint::FixpointResult result = z0.empty()
                                              ? fixpoint::lfp_from_empty(m, max_iter)
                                              : fixpoint::iterate_to_fix(m, z0, max_iter);
        if (as_json) {
            json chain = json::array();
            for (const AtomVec& z : result.chain) chain.push_back(atoms_to_json(z));
            json out{{"map", m.to_string()},
                     {"support", atoms_to_json(m.support())},
                     {"chain", chain},
                     {"fixpoint", atoms_to_json(result.fixpoint)},
                     {"steps", result.steps}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "map: " << m.to_string() << "\n";
            std::cout << "support: " << m.support().to_string() << "\n";
            for (const AtomVec& z : result.chain) std::cout << "  " << z.to_string() << "\n";
            std::cout << "fixpoint: " << result.fixpoint.to_string() << " (steps "
                      << result.steps << ")\n";
        }
        return kOk;
    } catch (const fixpoint::FixpointError& e) {
        std::cerr << "iteration failed: " << e.what() << "\n";
        for (const AtomVec& z : e.chain) std::cerr << "  " << z.to_string() << "\n";
        return kMismatch;
    }
}

int run_check_fn(const std::string& fun_text, bool as_json) {
    text::Binder binder;
    AtomFun f = text::parse_atom_fun(fun_text, binder);
    AtomFun n = f.normalized();
    bool inj = is_injective(n), surj = is_surjective(n);
    if (as_json) {
        json out{{"function", n.to_string()},
                 {"support", atoms_to_json(n.carrier())},
                 {"injective", inj},
                 {"surjective", surj}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "normalized: " << n.to_string() << "\n";
        std::cout << "support: " << n.carrier().to_string() << "\n";
        std::cout << "injective: " << (inj ? "yes" : "no") << "\n";
        std::cout << "surjective: " << (surj ? "yes" : "no") << "\n";
    }
    return kOk;
}

int run_oracle(Kind kind, const std::string& support_labels, std::size_t universe,
               std::size_t arity, bool as_json) {
    text::Binder binder;
    AtomVec s = binder.bind_list(support_labels);
    counting::CrossCheckReport report = counting::cross_check(kind, s, universe, arity);

    oracle::FiniteModel model = oracle::FiniteModel::containing(s, universe);
    std::vector<oracle::ModelElem> concrete = oracle::enumerate_supported(model, kind, s, arity);

    if (as_json) {
        json elements = json::array();
        for (const auto& e : concrete) elements.push_back(oracle::model_elem_to_string(e));
        json out{{"kind", kind_name(kind)},
                 {"support", atoms_to_json(s)},
                 {"universe", universe},
                 {"oracle_count", concrete.size()},
                 {"formula", report.formula_count},
                 {"symbolic", report.symbolic_count},
                 {"counts_match", report.counts_match},
                 {"bijection", report.bijection},
                 {"elements", elements}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& e : concrete) std::cout << oracle::model_elem_to_string(e) << "\n";
        std::cout << report.to_string() << "\n";
    }
    return report.ok() ? kOk : kMismatch;
}

cardinal::CardWitness witness_by_name(const std::string& name, text::Binder& binder,
                                      cardinal::Relation& relation) {
    relation = cardinal::Relation::Leq;
    if (name == "id-nat")
        return cardinal::identity_witness("id-nat",
                                          [](std::uint64_t i) { return Elem::nat(i); });
    if (name == "nat-pair") return cardinal::nat_pair_witness();
    if (name == "nat-bool") return cardinal::nat_bool_witness();
    if (name == "nat-bool-literal") return cardinal::nat_bool_literal_witness();
    if (name == "double-inject-A" || name == "proj-A2") {
        // a pool of named atoms standing in for A
        std::vector<Atom> pool;
        for (int i = 0; i < 24; ++i) pool.push_back(binder.bind("x" + std::to_string(i)));
        auto gen = [pool](std::uint64_t i) { return Elem::atom(pool[i % pool.size()]); };
        if (name == "proj-A2") {
            relation = cardinal::Relation::LeqStar;
            return cardinal::projection_witness(gen, "proj-A2");
        }
        Atom a1 = binder.bind("w1"), a2 = binder.bind("w2");
        return cardinal::double_inject(Elem::atom(a1), Elem::atom(a2), gen, "double-inject-A");
    }
    if (name == "nat-pair-then-incl") {
        cardinal::CardWitness incl;
        incl.kind = cardinal::CardWitness::Kind::Injection;
        incl.name = "incl";
        incl.mapping = [](const Elem& x) { return Elem::tuple({x, Elem::nat(0)}); };
        incl.domain_gen = [](std::uint64_t i) { return Elem::nat(i % 23); };
        return cardinal::compose_witnesses(cardinal::nat_pair_witness(), incl);
    }
    throw CLI::ValidationError("--witness", "unknown witness '" + name + "'");
}

int run_check_card(const std::string& name, std::size_t samples, std::uint64_t seed,
                   bool as_json) {
    text::Binder binder;
    cardinal::Relation relation;
    cardinal::CardWitness w = witness_by_name(name, binder, relation);

    cardinal::RelationReport rel = cardinal::relation_check(relation, w, samples, seed);
    cardinal::RelationReport equi = cardinal::equivariance_check(w, 50, seed + 1);

    bool ok = rel.ok && equi.ok;
    if (as_json) {
        json out{{"witness", w.name},
                 {"relation", relation == cardinal::Relation::Leq ? "leq" : "leq-star"},
                 {"relation_check", {{"ok", rel.ok}, {"failures", rel.failures}}},
                 {"equivariance", {{"ok", equi.ok}, {"failures", equi.failures}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "witness: " << w.name << "\n";
        std::cout << "relation check: " << rel.to_string() << "\n";
        std::cout << "equivariance: " << equi.to_string() << "\n";
    }
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic computation over finitely supported sets of atoms"};
    app.require_subcommand(1);

    // analyze
    std::string expr_text;
    bool an_json = false, an_check = false;
    std::size_t an_first_k = 5;
    std::uint64_t an_seed = 7;
    auto* analyze_cmd = app.add_subcommand("analyze", "decide uniformly-infinite vs not");
    analyze_cmd->add_option("expression", expr_text, "set expression")->required();
    analyze_cmd->add_flag("--json", an_json, "machine-readable output");
    analyze_cmd->add_flag("--check", an_check, "verify witness distinctness and invariance");
    analyze_cmd->add_option("--first-k", an_first_k, "witness preview length");
    analyze_cmd->add_option("--seed", an_seed, "sampling seed");

    // count
    std::string count_kind, count_support;
    int count_support_size = -1;
    std::size_t count_arity = 1, count_universe = 0;
    bool count_cross = false, count_json = false;
    auto* count_cmd = app.add_subcommand("count", "closed-form counts of supported elements");
    count_cmd->add_option("--kind", count_kind, "atoms|subsets|inj-tuples|funAA|funASet|funATuple")
        ->required();
    count_cmd->add_option("--support-size", count_support_size, "|S|");
    count_cmd->add_option("--support", count_support, "comma-separated atom labels");
    count_cmd->add_option("--arity", count_arity, "tuple arity for funATuple");
    count_cmd->add_flag("--cross-check", count_cross, "compare formula, symbolic, oracle");
    count_cmd->add_option("--universe", count_universe, "model size for --cross-check");
    count_cmd->add_flag("--json", count_json, "machine-readable output");

    // enumerate
    std::string enum_kind, enum_support;
    std::size_t enum_arity = 1;
    bool enum_json = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "list supported elements symbolically");
    enum_cmd->add_option("--kind", enum_kind, "what to enumerate")->required();
    enum_cmd->add_option("--support", enum_support, "comma-separated atom labels");
    enum_cmd->add_option("--arity", enum_arity, "tuple arity for funATuple");
    enum_cmd->add_flag("--json", enum_json, "machine-readable output");

    // fixpoint
    std::string fix_map, fix_from;
    std::size_t fix_max_iter = 0;
    bool fix_json = false;
    auto* fix_cmd = app.add_subcommand("fixpoint", "iterate a monotone map to a fixed point");
    fix_cmd->add_option("--map", fix_map, "map expression")->required();
    fix_cmd->add_option("--from", fix_from, "starting set, default {}");
    fix_cmd->add_option("--max-iter", fix_max_iter, "iteration cap (0 = support bound)");
    fix_cmd->add_flag("--json", fix_json, "machine-readable output");

    // check-fn
    std::string fn_text;
    bool fn_json = false;
    auto* fn_cmd = app.add_subcommand("check-fn", "normalize a function, decide inj/surj");
    fn_cmd->add_option("--fun", fn_text, "function text")->required();
    fn_cmd->add_flag("--json", fn_json, "machine-readable output");

    // oracle
    std::string oracle_kind, oracle_support;
    std::size_t oracle_universe = 0, oracle_arity = 1;
    bool oracle_json = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "finite-model enumeration and comparison");
    oracle_cmd->add_option("--universe", oracle_universe, "model size")->required();
    oracle_cmd->add_option("--kind", oracle_kind, "what to enumerate")->required();
    oracle_cmd->add_option("--support", oracle_support, "comma-separated atom labels");
    oracle_cmd->add_option("--arity", oracle_arity, "tuple arity for funATuple");
    oracle_cmd->add_flag("--json", oracle_json, "machine-readable output");

    // check-card
    std::string card_witness;
    std::size_t card_samples = 100;
    std::uint64_t card_seed = 7;
    bool card_json = false;
    auto* card_cmd = app.add_subcommand("check-card", "verify a cardinality witness");
    card_cmd->add_option("--witness", card_witness,
                         "id-nat|nat-pair|nat-bool|nat-bool-literal|double-inject-A|proj-A2|"
                         "nat-pair-then-incl")
        ->required();
    card_cmd->add_option("--samples", card_samples, "sample count");
    card_cmd->add_option("--seed", card_seed, "sampling seed");
    card_cmd->add_flag("--json", card_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (analyze_cmd->parsed())
            return run_analyze(expr_text, an_json, an_first_k, an_check, an_seed);
        if (count_cmd->parsed()) {
            auto kind = parse_kind(count_kind);
            if (!kind) throw std::invalid_argument("unknown kind '" + count_kind + "'");
            if (!count_cross && count_support_size < 0)
                throw std::invalid_argument("count needs --support-size or --cross-check");
            return run_count(*kind, count_arity, count_support_size, count_support, count_cross,
                             count_universe, count_json);
        }
        if (enum_cmd->parsed()) {
            auto kind = parse_kind(enum_kind);
            if (!kind) throw std::invalid_argument("unknown kind '" + enum_kind + "'");
            return run_enumerate(*kind, enum_support, enum_arity, enum_json);
        }
        if (fix_cmd->parsed()) return run_fixpoint(fix_map, fix_from, fix_max_iter, fix_json);
        if (fn_cmd->parsed()) return run_check_fn(fn_text, fn_json);
        if (oracle_cmd->parsed()) {
            auto kind = parse_kind(oracle_kind);
            if (!kind) throw std::invalid_argument("unknown kind '" + oracle_kind + "'");
            return run_oracle(*kind, oracle_support, oracle_universe, oracle_arity, oracle_json);
        }
        if (card_cmd->parsed()) return run_check_card(card_witness, card_samples, card_seed,
                                                      card_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error at offset " << e.offset << ": " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    return kUsage;
}
