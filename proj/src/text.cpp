#include "nominal/text.hpp"

#include <cctype>

namespace nominal::text {

Atom Binder::bind(const std::string& label) {
    auto it = by_label_.find(label);
    if (it != by_label_.end()) return it->second;
    Atom a = fresh_atom();
    set_atom_label(a, label);
    by_label_.emplace(label, a);
    return a;
}

AtomVec Binder::bind_list(const std::string& labels) {
    AtomVec out;
    std::string cur;
    for (char c : labels) {
        if (c == ',') {
            if (!cur.empty()) out.insert(bind(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.insert(bind(cur));
    return out;
}

namespace {

// A tiny cursor over the input; all parse errors carry byte offsets.
struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
        return s[pos];
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (s.compare(pos, kw.size(), kw) == 0) {
            // keywords must not run into a longer identifier
            std::size_t end = pos + kw.size();
            if (end >= s.size() || !std::isalnum(static_cast<unsigned char>(s[end]))) {
                pos = end;
                return true;
            }
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected an atom label", start);
        return s.substr(start, pos - start);
    }
};

AtomVec parse_set_body(Cursor& cur, Binder& binder) {
    cur.expect('{');
    AtomVec out;
    if (cur.try_consume('}')) return out;
    while (true) {
        out.insert(binder.bind(cur.ident()));
        if (cur.try_consume('}')) return out;
        cur.expect(',');
    }
}

Perm parse_perm_body(Cursor& cur, Binder& binder) {
    Perm p;
    bool any = false;
    while (!cur.at_end() && cur.peek() == '(') {
        cur.expect('(');
        any = true;
        std::vector<Atom> cycle;
        while (!cur.try_consume(')')) {
            cycle.push_back(binder.bind(cur.ident()));
        }
        p = compose(p, Perm::cycle(cycle));
    }
    if (!any) throw ParseError("expected a permutation in cycle notation", cur.pos);
    return p;
}

AtomFun parse_fun_body(Cursor& cur, Binder& binder) {
    if (!cur.try_keyword("fun")) throw ParseError("expected 'fun{...}'", cur.pos);
    cur.expect('{');
    std::map<Atom, Atom> table;
    AtomVec carrier;
    while (true) {
        cur.skip_ws();
        if (cur.peek() == ';' || cur.peek() == '}') break;
        if (cur.try_keyword("tail")) {
            // allow "fun{tail=id}" with no entries and no semicolon
            cur.pos -= 4;
            break;
        }
        Atom from = binder.bind(cur.ident());
        cur.expect('-');
        cur.expect('>');
        Atom to = binder.bind(cur.ident());
        table[from] = to;
        carrier.insert(from);
        carrier.insert(to);
        if (!cur.try_consume(',')) break;
    }
    bool had_semicolon = cur.try_consume(';');
    if (!table.empty() && !had_semicolon)
        throw ParseError("expected ';' before the tail", cur.pos);
    if (!cur.try_keyword("tail")) throw ParseError("expected 'tail='", cur.pos);
    cur.expect('=');
    AtomFun::Tail tail;
    std::optional<Atom> cnst;
    if (cur.try_keyword("id")) {
        tail = AtomFun::Tail::Identity;
    } else if (cur.try_keyword("const")) {
        tail = AtomFun::Tail::Const;
        Atom c = binder.bind(cur.ident());
        cnst = c;
        carrier.insert(c);
    } else {
        throw ParseError("expected tail 'id' or 'const <atom>'", cur.pos);
    }
    cur.expect('}');
    // complete the table on the carrier: unmentioned carrier atoms follow
    // their written role (a value atom maps per the tail denotation)
    for (Atom a : carrier) {
        if (table.count(a)) continue;
        table[a] = tail == AtomFun::Tail::Identity ? a : *cnst;
    }
    return AtomFun::make(carrier, table, tail, cnst);
}

fixpoint::MonotoneMap parse_map_expr(Cursor& cur, Binder& binder) {
    cur.skip_ws();
    if (cur.try_keyword("id")) return fixpoint::MonotoneMap::identity();
    if (cur.try_keyword("cup"))
        return fixpoint::MonotoneMap::const_union(parse_set_body(cur, binder));
    if (cur.try_keyword("img")) {
        cur.expect('(');
        AtomFun g = parse_fun_body(cur, binder);
        cur.expect(')');
        return fixpoint::MonotoneMap::image_union(std::move(g));
    }
    if (cur.try_keyword("perm")) {
        cur.expect('(');
        Perm p = parse_perm_body(cur, binder);
        cur.expect(')');
        return fixpoint::MonotoneMap::perm_image(std::move(p));
    }
    if (cur.try_consume('(')) {
        fixpoint::MonotoneMap left = parse_map_expr(cur, binder);
        cur.skip_ws();
        char op = cur.peek();
        if (op != '|' && op != ';')
            throw ParseError("expected '|' or ';' between maps", cur.pos);
        ++cur.pos;
        fixpoint::MonotoneMap right = parse_map_expr(cur, binder);
        cur.expect(')');
        if (op == '|')
            return fixpoint::MonotoneMap::union_of(std::move(left), std::move(right));
        return fixpoint::MonotoneMap::compose_of(std::move(left), std::move(right));
    }
    throw ParseError("expected a map: id, cup{..}, img(..), perm(..) or (M | M) / (M ; M)",
                     cur.pos);
}

template <class T, class Fn>
T parse_all(const std::string& s, Fn fn) {
    Cursor cur{s};
    T result = fn(cur);
    if (!cur.at_end()) throw ParseError("trailing input", cur.pos);
    return result;
}

}  // namespace

AtomVec parse_atom_set(const std::string& s, Binder& binder) {
    return parse_all<AtomVec>(s, [&](Cursor& cur) { return parse_set_body(cur, binder); });
}

Perm parse_perm(const std::string& s, Binder& binder) {
    return parse_all<Perm>(s, [&](Cursor& cur) { return parse_perm_body(cur, binder); });
}

AtomFun parse_atom_fun(const std::string& s, Binder& binder) {
    return parse_all<AtomFun>(s, [&](Cursor& cur) { return parse_fun_body(cur, binder); });
}

fixpoint::MonotoneMap parse_map(const std::string& s, Binder& binder) {
    return parse_all<fixpoint::MonotoneMap>(
        s, [&](Cursor& cur) { return parse_map_expr(cur, binder); });
}

}  // namespace nominal::text
