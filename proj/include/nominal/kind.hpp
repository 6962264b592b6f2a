#pragma once

#include <optional>
#include <string>

namespace nominal {

// The catalogued constructions whose supported slices we can count,
// enumerate symbolically, and replay inside a finite model.
enum class Kind {
    Atoms,      // elements of A
    Subsets,    // finitely supported subsets of A
    InjTuples,  // finite injective tuples of atoms
    FunAA,      // functions A -> A
    FunASet,    // functions A -> Pfs(A)
    FunATuple,  // functions A -> A^n
};

inline std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Atoms: return "atoms";
        case Kind::Subsets: return "subsets";
        case Kind::InjTuples: return "inj-tuples";
        case Kind::FunAA: return "funAA";
        case Kind::FunASet: return "funASet";
        case Kind::FunATuple: return "funATuple";
    }
    return "?";
}

inline std::optional<Kind> parse_kind(const std::string& s) {
    if (s == "atoms") return Kind::Atoms;
    if (s == "subsets") return Kind::Subsets;
    if (s == "inj-tuples") return Kind::InjTuples;
    if (s == "funAA") return Kind::FunAA;
    if (s == "funASet") return Kind::FunASet;
    if (s == "funATuple") return Kind::FunATuple;
    return std::nullopt;
}

}  // namespace nominal
