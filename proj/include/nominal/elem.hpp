#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "nominal/atom.hpp"
#include "nominal/perm.hpp"

namespace nominal {

// A small algebra of element descriptors: enough structure to write down
// members of the sets the analyzer and the cardinality witnesses talk
// about, act on them with permutations, and read off their supports.
//
//   nat(k)      an element of a set with trivial action
//   atom(a)     an atom
//   tuple(..)   an ordered tuple (also used for pairs)
//   fin_set(..) a finite set (kept canonically sorted)
//   tagged(i,x) the i-th injection into a disjoint union
//   sym(key)    an equivariant element named by its key, e.g. the family
//               member "all 3-sized subsets"; permutations fix it
class Elem {
public:
    Elem() : node_(std::uint64_t{0}) {}

    static Elem nat(std::uint64_t k) { return Elem(k); }
    static Elem atom(Atom a) { return Elem(a); }
    static Elem tuple(std::vector<Elem> items);
    static Elem fin_set(std::vector<Elem> items);  // sorts + dedupes
    static Elem tagged(std::uint32_t tag, Elem inner);
    static Elem sym(std::string key) { return Elem(std::move(key)); }

    bool is_nat() const { return std::holds_alternative<std::uint64_t>(node_); }
    bool is_atom() const { return std::holds_alternative<Atom>(node_); }
    bool is_tuple() const { return std::holds_alternative<Tuple>(node_); }
    bool is_fin_set() const { return std::holds_alternative<FinSet>(node_); }
    bool is_tagged() const { return std::holds_alternative<Tagged>(node_); }

    std::uint64_t nat_value() const { return std::get<std::uint64_t>(node_); }
    Atom atom_value() const { return std::get<Atom>(node_); }
    const std::vector<Elem>& tuple_items() const { return std::get<Tuple>(node_).items; }
    const std::vector<Elem>& fin_set_items() const { return std::get<FinSet>(node_).items; }
    std::uint32_t tag() const { return std::get<Tagged>(node_).tag; }
    const Elem& tagged_inner() const { return *std::get<Tagged>(node_).inner; }

    friend bool operator==(const Elem& a, const Elem& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Elem& a, const Elem& b) { return compare(a, b) != 0; }
    friend bool operator<(const Elem& a, const Elem& b) { return compare(a, b) < 0; }

    std::string to_string() const;

    friend Elem act(const Perm& p, const Elem& e);
    friend AtomVec supp(const Elem& e);

private:
    struct Tuple {
        std::vector<Elem> items;
    };
    struct FinSet {
        std::vector<Elem> items;  // sorted, unique
    };
    struct Tagged {
        std::uint32_t tag;
        std::shared_ptr<const Elem> inner;
    };

    explicit Elem(std::uint64_t k) : node_(k) {}
    explicit Elem(Atom a) : node_(a) {}
    explicit Elem(std::string key) : node_(std::move(key)) {}
    explicit Elem(Tuple t) : node_(std::move(t)) {}
    explicit Elem(FinSet s) : node_(std::move(s)) {}
    explicit Elem(Tagged t) : node_(std::move(t)) {}

    static int compare(const Elem& a, const Elem& b);

    std::variant<std::uint64_t, Atom, Tuple, FinSet, Tagged, std::string> node_;
};

Elem act(const Perm& p, const Elem& e);
AtomVec supp(const Elem& e);

}  // namespace nominal
