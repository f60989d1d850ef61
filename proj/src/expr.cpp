#include "fourfold/expr.hpp"

#include "fourfold/surgery.hpp"

#include <algorithm>
#include <cctype>

namespace fourfold {

namespace {

// Repetition counts and the total number of atoms are kept modest; every
// atom becomes a summand of the evaluated manifold.
constexpr std::int64_t kMaxCount = 100000;
constexpr std::int64_t kMaxAtoms = 100000;

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
    return s;
}

class Parser {
public:
    Parser(const std::string& text, const Catalog& catalog) : s_(text), catalog_(catalog) {}

    Expr run() {
        Expr e = expr();
        skip();
        if (pos_ < s_.size()) fail({"#", "end of input"}, "unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    const std::string& s_;
    const Catalog& catalog_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what, std::size_t at) const {
        throw ParseError(at, std::move(expected), what);
    }
    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
        fail(std::move(expected), what, pos_);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool at_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    bool at_ident() {
        skip();
        return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
    }
    std::string found() const {
        return pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    }
    void expect(char c, std::vector<std::string> expected) {
        if (!peek(c)) fail(std::move(expected), "expected '" + std::string(1, c) + "', found " + found());
        ++pos_;
    }

    std::int64_t integer() {
        skip();
        std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > 1000000000000LL) fail({}, "integer too large", start);
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    Expr expr() {
        Expr e = term();
        while (peek('#')) {
            ++pos_;
            e = Expr::sum(std::move(e), term());
        }
        return e;
    }

    Expr term() {
        if (at_digit()) {
            std::size_t start = pos_;
            std::int64_t k = integer();
            if (k < 1) fail({}, "repetition count must be positive", start);
            if (k > kMaxCount) fail({}, "repetition count exceeds " + std::to_string(kMaxCount), start);
            expect('*', {"*"});
            return Expr::repeat(k, term());
        }
        return primary();
    }

    Expr primary() {
        if (peek('(')) {
            ++pos_;
            Expr e = expr();
            expect(')', {"#", ")"});
            return e;
        }
        if (!at_ident()) fail({"(", "atom", "integer"}, "expected an atom, found " + found());
        return atom();
    }

    Expr atom() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        std::vector<std::int64_t> params;
        int arity = family_arity(name);
        if (arity > 0) {
            expect('(', {"("});
            for (int i = 0; i < arity; ++i) {
                if (i) expect(',', {","});
                if (!at_digit()) fail({"integer"}, "expected an integer parameter, found " + found());
                params.push_back(integer());
            }
            expect(')', {")"});
            if (auto e = family_parameter_error(name, params); !e.empty()) fail({}, e, start);
            return Expr::atom(name, params);
        }
        bool fixed = std::count(catalog_fixed_ids().begin(), catalog_fixed_ids().end(), name) > 0;
        if (!fixed && !catalog_.has_custom(name)) {
            std::vector<std::string> known = catalog_fixed_ids();
            known.insert(known.end(), {"Sigma", "Y", "Gompf"});
            for (const auto& c : catalog_.custom_ids()) known.push_back(c);
            fail({"atom"}, "unknown atom '" + name + "'; known: " + join(known), start);
        }
        return Expr::atom(name);
    }
};

void collect(const Expr& e, std::int64_t mult, std::map<std::string, std::int64_t>& out) {
    switch (e.kind) {
        case Expr::Kind::Atom: out[e.id()] += mult; break;
        case Expr::Kind::Repeat: collect(e.children[0], mult * e.count, out); break;
        case Expr::Kind::Sum:
            collect(e.children[0], mult, out);
            collect(e.children[1], mult, out);
            break;
    }
}

}  // namespace

Expr Expr::atom(std::string name, std::vector<std::int64_t> params) {
    Expr e;
    e.kind = Kind::Atom;
    e.name = std::move(name);
    e.params = std::move(params);
    return e;
}

Expr Expr::repeat(std::int64_t count, Expr inner) {
    Expr e;
    e.kind = Kind::Repeat;
    e.count = count;
    e.children.push_back(std::move(inner));
    return e;
}

Expr Expr::sum(Expr a, Expr b) {
    Expr e;
    e.kind = Kind::Sum;
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

std::string Expr::id() const {
    if (params.empty()) return name;
    std::string s = name + "(";
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s + ")";
}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message +
                         (expected.empty() ? "" : " (expected " + join(expected) + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

Expr parse(const std::string& text, const Catalog& catalog) {
    Parser p(text, catalog);
    Expr e = p.run();
    if (atom_count(e) > kMaxAtoms)
        throw ParseError(0, {}, "expression has more than " + std::to_string(kMaxAtoms) + " atoms");
    return e;
}

std::string print(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Atom: return e.id();
        case Expr::Kind::Repeat: {
            const Expr& c = e.children[0];
            std::string inner = print(c);
            return std::to_string(e.count) + "*" + (c.kind == Expr::Kind::Sum ? "(" + inner + ")" : inner);
        }
        case Expr::Kind::Sum: {
            // Left associative: only a sum on the right needs parentheses.
            const Expr& r = e.children[1];
            std::string rs = print(r);
            return print(e.children[0]) + " # " + (r.kind == Expr::Kind::Sum ? "(" + rs + ")" : rs);
        }
    }
    return {};
}

std::map<std::string, std::int64_t> normalize(const Expr& e) {
    std::map<std::string, std::int64_t> out;
    collect(e, 1, out);
    return out;
}

std::int64_t atom_count(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Atom: return 1;
        case Expr::Kind::Repeat: {
            std::int64_t c = atom_count(e.children[0]);
            return c > kMaxAtoms ? c : c * e.count;
        }
        case Expr::Kind::Sum: return atom_count(e.children[0]) + atom_count(e.children[1]);
    }
    return 0;
}

Manifold evaluate(const Expr& e, const Catalog& catalog) {
    std::vector<Manifold> parts;
    for (const auto& [id, k] : normalize(e)) {
        Manifold m = catalog.get(id);
        for (std::int64_t i = 0; i < k; ++i) parts.push_back(m);
    }
    return connected_sum(parts);
}

}  // namespace fourfold
