#pragma once

#include <map>
#include <string>

#include "nominal/atom.hpp"
#include "nominal/fixpoint.hpp"
#include "nominal/fun.hpp"
#include "nominal/parse_error.hpp"
#include "nominal/perm.hpp"

namespace nominal::text {

// Binds user-chosen atom labels to fresh atoms. One binder per CLI
// invocation: the same label always means the same atom within a run, and
// two runs with the same labels produce isomorphic (not identical) atoms.
class Binder {
public:
    Atom bind(const std::string& label);
    // "a,b,c" -> the bound atoms (empty string -> empty set)
    AtomVec bind_list(const std::string& labels);

private:
    std::map<std::string, Atom> by_label_;
};

// "{a,b}" or "{}"
AtomVec parse_atom_set(const std::string& s, Binder& binder);

// Cycle notation: "(a b)(c d e)"; "()" is the identity.
Perm parse_perm(const std::string& s, Binder& binder);

// "fun{a->b, b->a; tail=id}" or "fun{a->a; tail=const a}"
AtomFun parse_atom_fun(const std::string& s, Binder& binder);

// id | cup{a,b} | img(fun{...}) | perm((a b)) | (M | M) | (M ; M)
fixpoint::MonotoneMap parse_map(const std::string& s, Binder& binder);

}  // namespace nominal::text
