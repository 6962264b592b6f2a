#include "nominal/analyzer.hpp"

#include <cctype>

namespace nominal::analyzer {

SetExpr SetExpr::fun_apow(std::size_t n) {
    if (n == 0) throw std::invalid_argument("arity must be at least 1");
    SetExpr e(ExprKind::FunAPow);
    e.arity_ = n;
    return e;
}

std::string SetExpr::to_string() const {
    switch (kind_) {
        case ExprKind::AtomsA: return "A";
        case ExprKind::Nat: return "Nat";
        case ExprKind::TFin: return "Tfin";
        case ExprKind::TDelta: return "Tdelta";
        case ExprKind::Prod: return "(" + left_->to_string() + " x " + right_->to_string() + ")";
        case ExprKind::Sum: return "(" + left_->to_string() + " + " + right_->to_string() + ")";
        case ExprKind::PFin: return "Pfin(" + left_->to_string() + ")";
        case ExprKind::PCofin: return "Pcofin(" + left_->to_string() + ")";
        case ExprKind::PUs: return "Pus(" + left_->to_string() + ")";
        case ExprKind::PFs: return "Pfs(" + left_->to_string() + ")";
        case ExprKind::FunAA: return "Fun(A, A)";
        case ExprKind::FunAPfs: return "Fun(A, Pfs(A))";
        case ExprKind::FunAPow: return "Fun(A, A^" + std::to_string(arity_) + ")";
        case ExprKind::FunATfin: return "Fun(A, Tfin)";
    }
    return "?";
}

// ----------------------------------------------------------------- parser

namespace {

struct Token {
    enum Type { Ident, Int, LParen, RParen, Comma, Plus, Caret, End } type;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Token::Ident, text.substr(start, i - start), start});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Token::Int, text.substr(start, i - start), start});
            continue;
        }
        switch (c) {
            case '(': out.push_back({Token::LParen, "(", i}); break;
            case ')': out.push_back({Token::RParen, ")", i}); break;
            case ',': out.push_back({Token::Comma, ",", i}); break;
            case '+': out.push_back({Token::Plus, "+", i}); break;
            case '^': out.push_back({Token::Caret, "^", i}); break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        ++i;
    }
    out.push_back({Token::End, "", text.size()});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    SetExpr parse() {
        SetExpr e = parse_sum();
        expect(Token::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }

    void expect(Token::Type type, const std::string& what) {
        if (peek().type != type)
            throw ParseError("expected " + what, peek().offset);
        next();
    }

    SetExpr parse_sum() {
        SetExpr e = parse_prod();
        while (peek().type == Token::Plus) {
            next();
            e = SetExpr::sum(std::move(e), parse_prod());
        }
        return e;
    }

    SetExpr parse_prod() {
        SetExpr e = parse_factor();
        while (peek().type == Token::Ident && peek().text == "x") {
            next();
            e = SetExpr::prod(std::move(e), parse_factor());
        }
        return e;
    }

    SetExpr parse_factor() {
        const Token& t = peek();
        if (t.type == Token::LParen) {
            next();
            SetExpr e = parse_sum();
            expect(Token::RParen, "')'");
            return e;
        }
        if (t.type != Token::Ident) throw ParseError("expected a set expression", t.offset);
        Token ident = next();
        if (ident.text == "A") return SetExpr::atoms();
        if (ident.text == "Nat") return SetExpr::nat();
        if (ident.text == "Tfin") return SetExpr::tfin();
        if (ident.text == "Tdelta") return SetExpr::tdelta();
        if (ident.text == "Pfin") return parse_power(&SetExpr::pfin);
        if (ident.text == "Pcofin") return parse_power(&SetExpr::pcofin);
        if (ident.text == "Pus") return parse_power(&SetExpr::pus);
        if (ident.text == "Pfs") return parse_power(&SetExpr::pfs);
        if (ident.text == "Fun") return parse_fun(ident.offset);
        throw ParseError("unknown identifier '" + ident.text + "'", ident.offset);
    }

    SetExpr parse_power(SetExpr (*ctor)(SetExpr)) {
        expect(Token::LParen, "'('");
        SetExpr inner = parse_sum();
        expect(Token::RParen, "')'");
        return ctor(std::move(inner));
    }

    SetExpr parse_fun(std::size_t fun_offset) {
        expect(Token::LParen, "'('");
        const Token& dom = peek();
        if (!(dom.type == Token::Ident && dom.text == "A"))
            throw ParseError("function domain must be A", dom.offset);
        next();
        expect(Token::Comma, "','");
        const Token& cod = peek();
        if (cod.type != Token::Ident)
            throw ParseError("expected a function codomain", cod.offset);
        SetExpr result = SetExpr::fun_aa();
        if (cod.text == "A") {
            next();
            if (peek().type == Token::Caret) {
                next();
                const Token& n = peek();
                if (n.type != Token::Int) throw ParseError("expected an arity", n.offset);
                std::size_t arity = std::stoul(n.text);
                if (arity == 0) throw ParseError("arity must be at least 1", n.offset);
                next();
                result = SetExpr::fun_apow(arity);
            } else {
                result = SetExpr::fun_aa();
            }
        } else if (cod.text == "Pfs") {
            next();
            expect(Token::LParen, "'('");
            const Token& inner = peek();
            if (!(inner.type == Token::Ident && inner.text == "A"))
                throw ParseError("only Pfs(A) is an analyzable codomain", inner.offset);
            next();
            expect(Token::RParen, "')'");
            result = SetExpr::fun_apfs();
        } else if (cod.text == "Tfin") {
            next();
            result = SetExpr::fun_atfin();
        } else {
            throw ParseError("unknown codomain '" + cod.text + "'", cod.offset);
        }
        expect(Token::RParen, "')'");
        (void)fun_offset;
        return result;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

SetExpr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string result_name(Result r) {
    switch (r) {
        case Result::UniformlyInfinite: return "uniformly-infinite";
        case Result::NonUniformlyInfinite: return "non-uniformly-infinite";
        case Result::Unknown: return "unknown";
    }
    return "?";
}

std::vector<Elem> WitnessFamily::first(std::size_t k) const {
    std::vector<Elem> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(generator(i));
    return out;
}

// ------------------------------------------------------------------ rules

namespace {

// Every grammar expression denotes an infinite, nonempty set: A and Nat are
// infinite, tuples and powersets of infinite sets are infinite, function
// spaces over A are infinite, and products/sums preserve all of it. The
// closure rules below use this silently.

bool is_trivial(const SetExpr& e) {
    switch (e.kind()) {
        case ExprKind::Nat: return true;
        case ExprKind::Prod:
        case ExprKind::Sum: return is_trivial(e.left()) && is_trivial(e.right());
        case ExprKind::PFin:
        case ExprKind::PCofin:
        case ExprKind::PUs:
        case ExprKind::PFs: return is_trivial(e.left());
        default: return false;
    }
}

struct Ctx {
    Atom fixed;  // one fixed atom shared by all canonical elements and witnesses
};

// A designated element of the denoted set, used to pad product witnesses.
std::pair<Elem, AtomVec> canonical_element(const SetExpr& e, const Ctx& ctx) {
    switch (e.kind()) {
        case ExprKind::AtomsA: return {Elem::atom(ctx.fixed), AtomVec{ctx.fixed}};
        case ExprKind::Nat: return {Elem::nat(0), {}};
        case ExprKind::TFin:
        case ExprKind::TDelta: return {Elem::tuple({}), {}};
        case ExprKind::Prod: {
            auto [l, sl] = canonical_element(e.left(), ctx);
            auto [r, sr] = canonical_element(e.right(), ctx);
            return {Elem::tuple({l, r}), sl | sr};
        }
        case ExprKind::Sum: {
            auto [l, sl] = canonical_element(e.left(), ctx);
            return {Elem::tagged(0, l), sl};
        }
        case ExprKind::PFin:
        case ExprKind::PUs:
        case ExprKind::PFs: return {Elem::fin_set({}), {}};
        case ExprKind::PCofin: return {Elem::sym("all(" + e.left().to_string() + ")"), {}};
        case ExprKind::FunAA: return {Elem::sym("id"), {}};
        case ExprKind::FunAPfs: return {Elem::sym("a|->{a}"), {}};
        case ExprKind::FunAPow: return {Elem::sym("diag^" + std::to_string(e.arity())), {}};
        case ExprKind::FunATfin: return {Elem::sym("a|->(a)"), {}};
    }
    return {Elem::nat(0), {}};
}

Verdict nui(std::vector<TraceEntry> trace) {
    Verdict v;
    v.result = Result::NonUniformlyInfinite;
    v.trace = std::move(trace);
    return v;
}

Verdict ui(std::vector<TraceEntry> trace, WitnessFamily w) {
    Verdict v;
    v.result = Result::UniformlyInfinite;
    v.trace = std::move(trace);
    v.witness = std::move(w);
    return v;
}

Verdict unknown(std::string reason, std::vector<TraceEntry> trace = {}) {
    Verdict v;
    v.result = Result::Unknown;
    v.trace = std::move(trace);
    v.reason = std::move(reason);
    return v;
}

std::vector<TraceEntry> merge(std::vector<TraceEntry> a, const std::vector<TraceEntry>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

WitnessFamily sized_family(const std::string& what, const std::string& base) {
    WitnessFamily w;
    w.family = "the set of all i-sized " + what + " of " + base + ", for i = 0, 1, 2, ...";
    w.generator = [what, base](std::uint64_t i) {
        return Elem::sym("{" + what + " of " + base + ": size " + std::to_string(i) + "}");
    };
    return w;
}

Verdict analyze_impl(const SetExpr& e, const Ctx& ctx);

Verdict analyze_powerset(const SetExpr& e, const Ctx& ctx) {
    // Pfin / Pus share the same two directions; Pcofin only the first.
    const SetExpr& inner = e.left();
    const char* rule_nui = nullptr;
    const char* note_nui = nullptr;
    switch (e.kind()) {
        case ExprKind::PFin:
            rule_nui = "finite-powerset-nui";
            note_nui = "finite subsets are uniformly supported by the union of their members' "
                       "supports, so an infinite uniformly supported family of them would union "
                       "into one inside the base set";
            break;
        case ExprKind::PCofin:
            rule_nui = "cofinite-powerset-nui";
            note_nui = "complementation injects the cofinite subsets into the finite powerset, "
                       "which has no infinite uniformly supported subset";
            break;
        default:
            rule_nui = "uniform-powerset-nui";
            note_nui = "a uniformly supported family of uniformly supported subsets would union "
                       "into an infinite uniformly supported subset of the base set";
            break;
    }

    Verdict vi = analyze_impl(inner, ctx);
    if (vi.result == Result::NonUniformlyInfinite)
        return nui(merge(std::move(vi.trace), {{rule_nui, note_nui, false}}));

    if (vi.result == Result::UniformlyInfinite && e.kind() != ExprKind::PCofin) {
        WitnessFamily w;
        w.common_support = vi.witness->common_support;
        w.family = "singletons {x_i} of: " + vi.witness->family;
        auto gen = vi.witness->generator;
        w.generator = [gen](std::uint64_t i) { return Elem::fin_set({gen(i)}); };
        std::vector<TraceEntry> trace = merge(
            std::move(vi.trace),
            {{"powerset-singletons-ui",
              "the singletons of an infinite uniformly supported family are themselves an "
              "infinite uniformly supported family of subsets",
              true}});
        if (is_trivial(inner))
            trace.push_back({"trivial-subsets-note",
                             "the base set carries the trivial action, so every subset of it is "
                             "uniformly supported by the empty set",
                             true});
        return ui(std::move(trace), std::move(w));
    }

    if (vi.result == Result::UniformlyInfinite)
        return unknown("no rule covers the cofinite powerset of a uniformly infinite set",
                       std::move(vi.trace));
    return unknown(std::move(vi.reason), std::move(vi.trace));
}

Verdict analyze_impl(const SetExpr& e, const Ctx& ctx) {
    switch (e.kind()) {
        case ExprKind::AtomsA:
            return nui({{"atoms-nui",
                         "a finite set S supports at most |S| atoms, namely the members of S",
                         false}});
        case ExprKind::Nat: {
            WitnessFamily w;
            w.family = "the elements themselves: 0, 1, 2, ...";
            w.generator = [](std::uint64_t i) { return Elem::nat(i); };
            return ui({{"trivial-ui",
                        "permutations act trivially here, so the whole infinite set is uniformly "
                        "supported by the empty set",
                        false}},
                      std::move(w));
        }
        case ExprKind::TFin:
            return nui({{"inj-tuples-nui",
                         "the injective tuples supported by S are exactly the injective tuples "
                         "over S, of which there are finitely many",
                         false}});
        case ExprKind::TDelta: {
            Atom a = ctx.fixed;
            WitnessFamily w;
            w.common_support = AtomVec{a};
            w.family = "constant tuples (a,...,a) of every length, a fixed";
            w.generator = [a](std::uint64_t i) {
                std::vector<Elem> items(i, Elem::atom(a));
                return Elem::tuple(std::move(items));
            };
            return ui({{"const-tuples-ui",
                        "the constant tuples (a,...,a), one per length, are pairwise distinct and "
                        "all supported by {a}",
                        false}},
                      std::move(w));
        }
        case ExprKind::FunAA:
            return nui({{"fun-atoms-nui",
                         "an S-supported function A->A is a table on S plus an identity or "
                         "constant tail: finitely many per S",
                         false}});
        case ExprKind::FunAPfs:
            return nui({{"fun-powerset-nui",
                         "an S-supported function A->Pfs(A) is a table on S plus one of finitely "
                         "many uniform tails over S",
                         false}});
        case ExprKind::FunAPow:
            return nui({{"fun-ntuple-nui",
                         "functions A->A^n split componentwise into n functions A->A, each with "
                         "finitely many S-supported choices",
                         false}});
        case ExprKind::FunATfin:
            return nui({{"fun-inj-tuples-nui",
                         "outside S an S-supported function A->Tfin lands in injective tuples of "
                         "one fixed length over S plus the argument: finitely many choices",
                         false}});
        case ExprKind::Prod: {
            Verdict vl = analyze_impl(e.left(), ctx);
            Verdict vr = analyze_impl(e.right(), ctx);
            if (vl.result == Result::NonUniformlyInfinite &&
                vr.result == Result::NonUniformlyInfinite) {
                return nui(merge(merge(std::move(vl.trace), vr.trace),
                                 {{"product-nui",
                                   "the support of a pair is the union of the component supports, "
                                   "so a uniformly supported family of pairs projects to one in a "
                                   "factor",
                                   false}}));
            }
            if (vl.result == Result::UniformlyInfinite ||
                vr.result == Result::UniformlyInfinite) {
                bool left_ui = vl.result == Result::UniformlyInfinite;
                const Verdict& vu = left_ui ? vl : vr;
                auto [fill, fill_supp] = canonical_element(left_ui ? e.right() : e.left(), ctx);
                WitnessFamily w;
                w.common_support = vu.witness->common_support | fill_supp;
                w.family = "pairs of: " + vu.witness->family + "; with a fixed " +
                           (left_ui ? "second" : "first") + " component " + fill.to_string();
                auto gen = vu.witness->generator;
                Elem fixed = fill;
                if (left_ui)
                    w.generator = [gen, fixed](std::uint64_t i) {
                        return Elem::tuple({gen(i), fixed});
                    };
                else
                    w.generator = [gen, fixed](std::uint64_t i) {
                        return Elem::tuple({fixed, gen(i)});
                    };
                return ui(merge(merge(std::move(vl.trace), vr.trace),
                                {{"product-ui",
                                  "pairing a uniformly supported family in one factor with a "
                                  "fixed element of the other (all grammar sets are nonempty) "
                                  "gives a uniformly supported family of pairs",
                                  true}}),
                          std::move(w));
            }
            return unknown("no product rule applies: neither factor resolved",
                           merge(std::move(vl.trace), vr.trace));
        }
        case ExprKind::Sum: {
            Verdict vl = analyze_impl(e.left(), ctx);
            Verdict vr = analyze_impl(e.right(), ctx);
            if (vl.result == Result::NonUniformlyInfinite &&
                vr.result == Result::NonUniformlyInfinite) {
                return nui(merge(merge(std::move(vl.trace), vr.trace),
                                 {{"sum-nui",
                                   "an infinite uniformly supported family in a disjoint union "
                                   "restricts to one inside a summand (the tags are constants)",
                                   false}}));
            }
            if (vl.result == Result::UniformlyInfinite ||
                vr.result == Result::UniformlyInfinite) {
                bool left_ui = vl.result == Result::UniformlyInfinite;
                const Verdict& vu = left_ui ? vl : vr;
                WitnessFamily w;
                w.common_support = vu.witness->common_support;
                w.family = "injected: " + vu.witness->family;
                auto gen = vu.witness->generator;
                std::uint32_t tag = left_ui ? 0 : 1;
                w.generator = [gen, tag](std::uint64_t i) { return Elem::tagged(tag, gen(i)); };
                return ui(merge(merge(std::move(vl.trace), vr.trace),
                                {{"sum-ui",
                                  "injecting a uniformly supported family into a summand keeps "
                                  "it uniformly supported and injective",
                                  true}}),
                          std::move(w));
            }
            return unknown("no sum rule applies: neither summand resolved",
                           merge(std::move(vl.trace), vr.trace));
        }
        case ExprKind::PFin:
        case ExprKind::PCofin:
            return analyze_powerset(e, ctx);
        case ExprKind::PUs: {
            if (e.left().kind() == ExprKind::AtomsA) {
                // Pus(A) collapses to Pfin(A): a uniformly supported set of
                // atoms is a subset of its common support, hence finite.
                Verdict v = analyze_impl(SetExpr::pfin(SetExpr::atoms()), ctx);
                v.trace.insert(v.trace.begin(),
                               {"us-atoms-canonical",
                                "a uniformly supported set of atoms sits inside its common "
                                "support, so the uniform powerset of A is its finite powerset",
                                false});
                return v;
            }
            return analyze_powerset(e, ctx);
        }
        case ExprKind::PFs: {
            const SetExpr& inner = e.left();
            if (inner.kind() == ExprKind::AtomsA)
                return nui({{"powerset-atoms-nui",
                             "at most 2^{|S|+1} subsets of A are supported by S: the subsets of "
                             "S and the complements of subsets of S",
                             false}});
            if (inner.kind() == ExprKind::PFin || inner.kind() == ExprKind::PFs) {
                WitnessFamily w =
                    sized_family("subsets", inner.left().to_string());
                return ui({{"sized-subsets-ui",
                            "the family X_i of all i-sized subsets of an infinite base is "
                            "supported by the base's support for every i, and the X_i are "
                            "pairwise distinct",
                            false}},
                          std::move(w));
            }
            if (inner.kind() == ExprKind::TFin) {
                WitnessFamily w = sized_family("injective tuples", "A");
                return ui({{"sized-inj-tuples-ui",
                            "the family Y_i of all i-sized injective atom tuples is equivariant "
                            "for every i, and the Y_i are pairwise distinct",
                            false}},
                          std::move(w));
            }
            Verdict vi = analyze_impl(inner, ctx);
            if (vi.result == Result::UniformlyInfinite) {
                WitnessFamily w;
                w.common_support = vi.witness->common_support;
                w.family = "singletons {x_i} of: " + vi.witness->family;
                auto gen = vi.witness->generator;
                w.generator = [gen](std::uint64_t i) { return Elem::fin_set({gen(i)}); };
                std::vector<TraceEntry> trace = merge(
                    std::move(vi.trace),
                    {{"powerset-singletons-ui",
                      "the singletons of an infinite uniformly supported family are themselves "
                      "an infinite uniformly supported family of subsets",
                      true}});
                if (is_trivial(inner))
                    trace.push_back({"trivial-subsets-note",
                                     "the base set carries the trivial action, so every subset "
                                     "of it is uniformly supported by the empty set",
                                     true});
                return ui(std::move(trace), std::move(w));
            }
            return unknown("no rule covers Pfs of this construction", std::move(vi.trace));
        }
    }
    return unknown("no rule covers this construction");
}

}  // namespace

Verdict analyze(const SetExpr& e) {
    Ctx ctx{fresh_atom()};
    return analyze_impl(e, ctx);
}

WitnessFamily witness(const SetExpr& e) {
    Verdict v = analyze(e);
    if (v.result != Result::UniformlyInfinite)
        throw std::invalid_argument("expression is not uniformly infinite: " + e.to_string());
    return *v.witness;
}

AtomVec supp_of_uniform_family(const std::vector<AtomVec>& member_supports) {
    AtomVec out;
    for (const AtomVec& s : member_supports) out |= s;
    return out;
}

AtomVec supp_of_uniform_family(const std::vector<Elem>& members) {
    AtomVec out;
    for (const Elem& m : members) out |= supp(m);
    return out;
}

ChainReport check_chain(const std::vector<Elem>& members,
                        const std::function<bool(const Elem&, const Elem&)>& less,
                        const AtomVec& order_support, std::uint64_t seed, std::size_t samples) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            bool lt = less(members[i], members[j]);
            bool gt = less(members[j], members[i]);
            bool equal = members[i] == members[j];
            bool total = equal ? (!lt && !gt) : (lt != gt);
            if (!total) throw std::invalid_argument("order not total on members");
        }
    }

    ChainReport report;
    report.common_support = order_support;
    for (const Elem& m : members) report.common_support |= supp(m);

    report.verified = true;
    AtomVec pool = report.common_support | AtomVec(fresh_atoms(3));
    for (const Perm& p : sample_fix(report.common_support, pool, samples, seed)) {
        bool fixed = true;
        for (const Elem& m : members)
            if (act(p, m) != m) fixed = false;
        report.checks.emplace_back(p, fixed);
        if (!fixed) report.verified = false;
    }
    return report;
}

}  // namespace nominal::analyzer
