#include "nominal/atom.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <unordered_map>

namespace nominal {

namespace {
std::atomic<std::uint64_t> g_next_atom{0};

std::mutex g_label_mutex;
std::unordered_map<std::uint64_t, std::string>& label_table() {
    static std::unordered_map<std::uint64_t, std::string> table;
    return table;
}
}  // namespace

Atom fresh_atom() { return Atom{g_next_atom.fetch_add(1)}; }

std::vector<Atom> fresh_atoms(std::size_t n) {
    std::vector<Atom> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(fresh_atom());
    return out;
}

void set_atom_label(Atom a, const std::string& label) {
    std::lock_guard<std::mutex> guard(g_label_mutex);
    label_table()[a.id] = label;
}

std::string atom_name(Atom a) {
    {
        std::lock_guard<std::mutex> guard(g_label_mutex);
        auto it = label_table().find(a.id);
        if (it != label_table().end()) return it->second;
    }
    return "a" + std::to_string(a.id);
}

AtomVec::AtomVec(std::initializer_list<Atom> atoms) : AtomVec(std::vector<Atom>(atoms)) {}

AtomVec::AtomVec(std::vector<Atom> atoms) : v_(std::move(atoms)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

bool AtomVec::contains(Atom a) const {
    return std::binary_search(v_.begin(), v_.end(), a);
}

void AtomVec::insert(Atom a) {
    auto it = std::lower_bound(v_.begin(), v_.end(), a);
    if (it == v_.end() || *it != a) v_.insert(it, a);
}

void AtomVec::erase(Atom a) {
    auto it = std::lower_bound(v_.begin(), v_.end(), a);
    if (it != v_.end() && *it == a) v_.erase(it);
}

AtomVec AtomVec::operator|(const AtomVec& o) const {
    std::vector<Atom> out;
    std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
    AtomVec r;
    r.v_ = std::move(out);
    return r;
}

AtomVec AtomVec::operator&(const AtomVec& o) const {
    std::vector<Atom> out;
    std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
    AtomVec r;
    r.v_ = std::move(out);
    return r;
}

AtomVec AtomVec::operator-(const AtomVec& o) const {
    std::vector<Atom> out;
    std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
    AtomVec r;
    r.v_ = std::move(out);
    return r;
}

AtomVec& AtomVec::operator|=(const AtomVec& o) {
    *this = *this | o;
    return *this;
}

bool AtomVec::subset_of(const AtomVec& o) const {
    return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
}

std::string AtomVec::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ",";
        s += atom_name(v_[i]);
    }
    s += "}";
    return s;
}

}  // namespace nominal
