#include "aclab/spec_parse.hpp"

#include <cctype>
#include <sstream>

#include "aclab/wreath.hpp"

namespace aclab {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    int line() const {
        int l = 1;
        for (size_t i = 0; i < pos && i < s.size(); ++i)
            if (s[i] == '\n') ++l;
        return l;
    }
    int column() const {
        int c = 1;
        for (size_t i = 0; i < pos && i < s.size(); ++i)
            c = (s[i] == '\n') ? 1 : c + 1;
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line(), column()); }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected an integer");
        return std::stoll(s.substr(start, pos - start));
    }
    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected an identifier");
        return s.substr(start, pos - start);
    }
    std::vector<int> int_list() {
        std::vector<int> out;
        out.push_back(static_cast<int>(integer()));
        while (eat(',')) out.push_back(static_cast<int>(integer()));
        return out;
    }
};

// cycles like (0 1)(2 3); fixed points implicit
Permutation parse_cycles(Cursor& cur, int degree) {
    Permutation p(degree);
    for (int i = 0; i < degree; ++i) p[i] = i;
    bool any = false;
    while (cur.eat('(')) {
        any = true;
        std::vector<int> cycle;
        cur.skip_ws();
        while (!cur.eat(')')) {
            long long v = cur.integer();
            if (v < 0 || v >= degree) cur.fail("cycle point out of range for the degree");
            cycle.push_back(static_cast<int>(v));
            cur.skip_ws();
        }
        for (size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
            if (p[from] != from) cur.fail("point repeated across cycles");
            p[from] = to;
        }
    }
    if (!any) cur.fail("expected a cycle '('");
    return p;
}

}  // namespace

GroupTable parse_group_spec(const std::string& text, int order_cap) {
    Cursor cur{text};
    std::string kind = cur.word();
    if (kind == "perm") {
        cur.skip_ws();
        std::string d = cur.word();
        if (d != "d") cur.fail("expected 'd=<degree>'");
        cur.expect('=');
        long long degree = cur.integer();
        if (degree < 1 || degree > 64) cur.fail("degree must be in [1, 64]");
        cur.expect(':');
        std::vector<Permutation> gens;
        if (!cur.done()) {
            gens.push_back(parse_cycles(cur, static_cast<int>(degree)));
            while (cur.eat(',')) gens.push_back(parse_cycles(cur, static_cast<int>(degree)));
        }
        if (!cur.done()) cur.fail("trailing input after permutation list");
        if (gens.empty()) {  // trivial group
            Permutation id(degree);
            for (int i = 0; i < degree; ++i) id[i] = i;
            gens.push_back(std::move(id));
        }
        return group_from_permutations(gens, order_cap);
    }
    if (kind == "builtin") {
        cur.expect(':');
        std::string name = cur.word();
        std::vector<int> params;
        if (cur.eat('(')) {
            if (!cur.eat(')')) {
                params.push_back(static_cast<int>(cur.integer()));
                while (cur.eat(',')) params.push_back(static_cast<int>(cur.integer()));
                cur.expect(')');
            }
        }
        if (!cur.done()) cur.fail("trailing input after builtin spec");
        return builtin_group(name, params, order_cap);
    }
    if (kind == "abelian") {
        cur.expect(':');
        std::vector<int> ds = cur.int_list();
        if (!cur.done()) cur.fail("trailing input after factor list");
        return builtin_group("abelian", ds, order_cap);
    }
    if (kind == "wreath") {
        cur.expect(':');
        std::vector<int> orders = cur.int_list();
        if (!cur.done()) cur.fail("trailing input after order list");
        return wreath_cyclic(WreathSpec{orders}, order_cap).table;
    }
    cur.fail("unknown group spec kind '" + kind + "'");
}

Tuple parse_tuple(const GroupTable& g, const std::string& text) {
    Cursor cur{text};
    Tuple t;
    if (cur.done()) return t;
    for (;;) {
        long long v = cur.integer();
        if (v < 0 || v >= g.order()) cur.fail("element id out of range");
        t.push_back(static_cast<Element>(v));
        if (!cur.eat(',')) break;
    }
    if (!cur.done()) cur.fail("trailing input after tuple");
    return t;
}

Tuple parse_tuple_perms(const GroupTable& g, const std::string& text) {
    if (!g.has_names())
        throw Error("permutation tuple literals need a permutation group");
    std::istringstream in(text);
    std::string part;
    Tuple t;
    while (std::getline(in, part, '|')) {
        // normalize whitespace inside the cycle text
        std::string want;
        for (char c : part)
            if (!std::isspace(static_cast<unsigned char>(c)) || (!want.empty() && want.back() != ' '))
                want += std::isspace(static_cast<unsigned char>(c)) ? ' ' : c;
        while (!want.empty() && want.back() == ' ') want.pop_back();
        bool found = false;
        for (Element x = 0; x < g.order(); ++x)
            if (g.name(x) == want) {
                t.push_back(x);
                found = true;
                break;
            }
        if (!found) throw Error("no element named '" + want + "' in the group");
    }
    return t;
}

}  // namespace aclab
