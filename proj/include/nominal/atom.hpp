#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nominal {

// An atom: an element of the countably infinite ground set A. Atoms carry
// no structure beyond decidable equality; the numeric id exists only so we
// can store them in containers and print them. No operation may give the
// ordering of ids semantic weight.
struct Atom {
    std::uint64_t id{0};

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

// Session-scoped freshness source. Every call returns an atom distinct from
// all atoms issued before it in this process. Thread-safe.
Atom fresh_atom();
std::vector<Atom> fresh_atoms(std::size_t n);

// Optional display label for an atom (used by the CLI to echo user-chosen
// names). Purely cosmetic; unlabeled atoms print as a<id>.
void set_atom_label(Atom a, const std::string& label);
std::string atom_name(Atom a);

// A finite set of atoms kept sorted and duplicate-free. This is the
// workhorse representation for supports, carriers and elements of the
// finite powerset of A.
class AtomVec {
public:
    AtomVec() = default;
    AtomVec(std::initializer_list<Atom> atoms);
    explicit AtomVec(std::vector<Atom> atoms);  // sorts and dedupes

    bool contains(Atom a) const;
    bool empty() const { return v_.empty(); }
    std::size_t size() const { return v_.size(); }

    void insert(Atom a);
    void erase(Atom a);

    AtomVec operator|(const AtomVec& o) const;  // union
    AtomVec operator&(const AtomVec& o) const;  // intersection
    AtomVec operator-(const AtomVec& o) const;  // difference
    AtomVec& operator|=(const AtomVec& o);

    bool subset_of(const AtomVec& o) const;

    friend bool operator==(const AtomVec&, const AtomVec&) = default;
    friend auto operator<=>(const AtomVec&, const AtomVec&) = default;

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    const std::vector<Atom>& items() const { return v_; }
    Atom at(std::size_t i) const { return v_[i]; }

    std::string to_string() const;  // "{a0,a1}"

private:
    std::vector<Atom> v_;
};

}  // namespace nominal

template <>
struct std::hash<nominal::Atom> {
    std::size_t operator()(const nominal::Atom& a) const noexcept {
        return std::hash<std::uint64_t>{}(a.id);
    }
};
