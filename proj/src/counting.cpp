#include "nominal/counting.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "nominal/fun.hpp"

namespace nominal::counting {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;  // 0^0 == 1 on purpose
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            throw std::overflow_error("count exceeds 64 bits");
        r *= base;
    }
    return r;
}

}  // namespace

const std::vector<CountFormula>& formula_registry() {
    static const std::vector<CountFormula> registry = {
        {Kind::Atoms, Provenance::Stated, "|S| atoms: the members of S"},
        {Kind::Subsets, Provenance::Derived,
         "2^{|S|+1} subsets: the subsets of S and the cosets A\\X for X inside S "
         "(the bound is stated; exactness is checked against the oracle)"},
        {Kind::InjTuples, Provenance::Stated,
         "sum over k of |S|(|S|-1)...(|S|-k+1), including the empty tuple"},
        {Kind::FunAA, Provenance::Derived,
         "|S|^|S| tables times |S|+1 tails (identity or a constant from S)"},
        {Kind::FunASet, Provenance::Derived,
         "(2^{|S|+1})^{|S|} tables times 4*2^{|S|} uniform tails"},
        {Kind::FunATuple, Provenance::Derived,
         "|S|^{n|S|} tables times (|S|+1)^n tail patterns; componentwise product of funAA"},
    };
    return registry;
}

std::uint64_t count_supported(Kind kind, std::size_t s, std::size_t arity) {
    switch (kind) {
        case Kind::Atoms: return s;
        case Kind::Subsets: return ipow(2, s + 1);
        case Kind::InjTuples: {
            std::uint64_t total = 0, falling = 1;
            for (std::size_t k = 0; k <= s; ++k) {
                total += falling;  // k = 0 contributes the empty tuple
                falling *= (s - k);
            }
            return total;
        }
        case Kind::FunAA: return ipow(s, s) * (s + 1);
        case Kind::FunASet: return ipow(ipow(2, s + 1), s) * ipow(2, s + 2);
        case Kind::FunATuple:
            if (arity == 0) throw std::invalid_argument("arity must be at least 1");
            return ipow(s, arity * s) * ipow(s + 1, arity);
    }
    throw std::invalid_argument("unknown kind");
}

namespace {

std::uint64_t falling(std::uint64_t s, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (i >= s) return 0;
        r *= s - i;
    }
    return r;
}

}  // namespace

std::uint64_t count_inj_tuple_funs(std::size_t s, std::size_t n) {
    if (n == 0) throw std::invalid_argument("arity must be at least 1");
    std::uint64_t rows = ipow(falling(s, n), s);
    std::uint64_t patterns = falling(s, n) + n * falling(s, n - 1);
    return rows * patterns;
}

std::uint64_t count_funs_to_inj_tuples(std::size_t s) {
    // table: each carrier atom takes any injective tuple over S, of any
    // length; tail: one injective pattern over S u {SELF} of one fixed
    // length (the length is constant outside the carrier)
    std::uint64_t per_atom = count_supported(Kind::InjTuples, s);
    std::uint64_t patterns = 0;
    for (std::size_t n = 0; n <= s + 1; ++n)
        patterns += falling(s, n) + (n == 0 ? 0 : n * falling(s, n - 1));
    return ipow(per_atom, s) * patterns;
}

std::vector<AtomSet> enumerate_subsets_supported_by(const AtomVec& s) {
    return atom_sets_supported_by(s);
}

std::vector<std::vector<Atom>> enumerate_inj_tuples_over(const AtomVec& s) {
    std::vector<std::vector<Atom>> out;
    std::vector<Atom> cur;
    std::function<void()> rec = [&]() {
        out.push_back(cur);
        if (cur.size() == s.size()) return;
        for (Atom a : s) {
            if (std::find(cur.begin(), cur.end(), a) != cur.end()) continue;
            cur.push_back(a);
            rec();
            cur.pop_back();
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t min_universe(Kind kind, std::size_t support_size) {
    std::size_t n = 2 * support_size + 2;
    switch (kind) {
        case Kind::FunAA:
        case Kind::FunASet:
        case Kind::FunATuple: return std::max(n, support_size + 3);
        default: return n;
    }
}

std::string CrossCheckReport::to_string() const {
    std::string s = kind_name(kind);
    if (kind == Kind::FunATuple) s += "(n=" + std::to_string(arity) + ")";
    s += " S=" + support.to_string() + " N=" + std::to_string(universe) + ": formula " +
         std::to_string(formula_count) + ", symbolic " + std::to_string(symbolic_count) +
         ", oracle " + std::to_string(oracle_count);
    s += counts_match ? " [counts agree]" : " [COUNT MISMATCH]";
    s += bijection ? " [element bijection]" : " [ELEMENT MISMATCH]";
    for (const std::string& d : diagnostics) s += "\n  " + d;
    return s;
}

CrossCheckReport cross_check(Kind kind, const AtomVec& s, std::size_t n, std::size_t arity) {
    if (n < min_universe(kind, s.size()))
        throw std::invalid_argument("universe below threshold for this kind and support");

    CrossCheckReport report;
    report.kind = kind;
    report.arity = arity;
    report.support = s;
    report.universe = n;
    report.formula_count = count_supported(kind, s.size(), arity);

    oracle::FiniteModel model = oracle::FiniteModel::containing(s, n);

    std::vector<oracle::ModelElem> symbolic;
    switch (kind) {
        case Kind::Atoms:
            for (Atom a : s) symbolic.push_back(oracle::embed(model, a));
            break;
        case Kind::Subsets:
            for (const AtomSet& x : enumerate_subsets_supported_by(s))
                symbolic.push_back(oracle::embed(model, x));
            break;
        case Kind::InjTuples:
            for (const auto& t : enumerate_inj_tuples_over(s))
                symbolic.push_back(oracle::ModelTuple{t});
            break;
        case Kind::FunAA:
            for (const AtomFun& f : enumerate_atom_funs(s))
                symbolic.push_back(oracle::embed(model, f));
            break;
        case Kind::FunASet:
            for (const AtomSetFun& f : enumerate_set_funs(s))
                symbolic.push_back(oracle::embed(model, f));
            break;
        case Kind::FunATuple:
            for (const TupleFun& f : enumerate_tuple_funs(s, arity))
                symbolic.push_back(oracle::embed(model, f));
            break;
    }
    std::sort(symbolic.begin(), symbolic.end());
    report.symbolic_count = symbolic.size();

    std::vector<oracle::ModelElem> concrete = oracle::enumerate_supported(model, kind, s, arity);
    report.oracle_count = concrete.size();

    report.counts_match = report.formula_count == report.symbolic_count &&
                          report.symbolic_count == report.oracle_count;
    report.bijection = symbolic == concrete;
    if (!report.bijection) {
        for (const auto& e : symbolic)
            if (!std::binary_search(concrete.begin(), concrete.end(), e))
                report.diagnostics.push_back("symbolic only: " + oracle::model_elem_to_string(e));
        for (const auto& e : concrete)
            if (!std::binary_search(symbolic.begin(), symbolic.end(), e))
                report.diagnostics.push_back("oracle only: " + oracle::model_elem_to_string(e));
    }
    return report;
}

}  // namespace nominal::counting
