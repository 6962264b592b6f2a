#include "nominal/perm.hpp"

#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace nominal {

Perm Perm::transpose(Atom a, Atom b) {
    Perm p;
    if (a != b) {
        p.moves_[a] = b;
        p.moves_[b] = a;
    }
    return p;
}

Perm Perm::from_moves(const std::map<Atom, Atom>& moves) {
    std::set<Atom> domain, range;
    for (const auto& [from, to] : moves) {
        domain.insert(from);
        if (!range.insert(to).second) throw std::invalid_argument("move table is not injective");
    }
    if (domain != range) throw std::invalid_argument("move table domain differs from its range");
    Perm p;
    for (const auto& [from, to] : moves)
        if (from != to) p.moves_[from] = to;
    return p;
}

Perm Perm::cycle(const std::vector<Atom>& atoms) {
    std::map<Atom, Atom> moves;
    if (atoms.size() >= 2) {
        for (std::size_t i = 0; i < atoms.size(); ++i)
            moves[atoms[i]] = atoms[(i + 1) % atoms.size()];
    }
    return from_moves(moves);
}

Atom Perm::operator()(Atom a) const {
    auto it = moves_.find(a);
    return it == moves_.end() ? a : it->second;
}

AtomVec Perm::moved() const {
    std::vector<Atom> atoms;
    atoms.reserve(moves_.size());
    for (const auto& [from, to] : moves_) atoms.push_back(from);
    return AtomVec(std::move(atoms));
}

Perm Perm::inverse() const {
    Perm p;
    for (const auto& [from, to] : moves_) p.moves_[to] = from;
    return p;
}

std::vector<std::vector<Atom>> Perm::cycles() const {
    std::vector<std::vector<Atom>> out;
    std::set<Atom> seen;
    for (const auto& [start, unused] : moves_) {
        if (seen.count(start)) continue;
        std::vector<Atom> cyc;
        Atom cur = start;
        do {
            cyc.push_back(cur);
            seen.insert(cur);
            cur = (*this)(cur);
        } while (cur != start);
        // rotate so the least atom leads
        auto least = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), least, cyc.end());
        out.push_back(std::move(cyc));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::uint64_t Perm::order() const {
    std::uint64_t m = 1;
    for (const auto& cyc : cycles()) m = std::lcm(m, static_cast<std::uint64_t>(cyc.size()));
    return m;
}

std::string Perm::to_string() const {
    if (is_identity()) return "()";
    std::string s;
    for (const auto& cyc : cycles()) {
        s += "(";
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += " ";
            s += atom_name(cyc[i]);
        }
        s += ")";
    }
    return s;
}

Perm compose(const Perm& p, const Perm& q) {
    std::map<Atom, Atom> moves;
    AtomVec carrier = p.moved() | q.moved();
    for (Atom a : carrier) {
        Atom b = p(q(a));
        if (b != a) moves[a] = b;
    }
    // composition of bijections is a bijection; from_moves re-checks cheaply
    return Perm::from_moves(moves);
}

std::vector<Perm> sample_fix(const AtomVec& fixed, const AtomVec& pool, std::size_t k,
                             std::uint64_t seed) {
    AtomVec free = pool - fixed;
    std::mt19937_64 rng(seed);
    std::vector<Perm> out;
    out.reserve(k);
    bool have_nonid = false;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Atom> shuffled = free.items();
        for (std::size_t j = shuffled.size(); j > 1; --j) {
            std::uniform_int_distribution<std::size_t> dist(0, j - 1);
            std::swap(shuffled[j - 1], shuffled[dist(rng)]);
        }
        std::map<Atom, Atom> moves;
        for (std::size_t j = 0; j < shuffled.size(); ++j) moves[free.at(j)] = shuffled[j];
        Perm p = Perm::from_moves(moves);
        have_nonid = have_nonid || !p.is_identity();
        out.push_back(std::move(p));
    }
    if (!out.empty() && !have_nonid && free.size() >= 2)
        out.back() = Perm::transpose(free.at(0), free.at(1));
    return out;
}

}  // namespace nominal
