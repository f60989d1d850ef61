#pragma once

#include "fourfold/catalog.hpp"
#include "fourfold/model.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fourfold {

// expr := term ('#' term)*      left associative
// term := INT '*' term | primary
// primary := atom | '(' expr ')'
// atom := IDENT | IDENT '(' INT (',' INT)* ')'
struct Expr {
    enum class Kind { Atom, Repeat, Sum };

    Kind kind = Kind::Atom;
    std::string name;                  // Atom
    std::vector<std::int64_t> params;  // Atom
    std::int64_t count = 0;            // Repeat
    std::vector<Expr> children;        // Repeat: 1, Sum: 2

    static Expr atom(std::string name, std::vector<std::int64_t> params = {});
    static Expr repeat(std::int64_t count, Expr e);
    static Expr sum(Expr a, Expr b);

    // Catalog id, e.g. "Sigma(3,5)".
    std::string id() const;
    bool operator==(const Expr&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);
    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Atom names and parameters are checked against `catalog`; unknown names and
// out-of-range parameters are reported at the atom's offset.
Expr parse(const std::string& text, const Catalog& catalog = {});

// Minimal parentheses; parse(print(e)) == e for every tree.
std::string print(const Expr& e);

// Atom ids with multiplicities, in sorted order.
std::map<std::string, std::int64_t> normalize(const Expr& e);
std::int64_t atom_count(const Expr& e);

// Evaluates the sorted multiset, so textual order never changes the result.
Manifold evaluate(const Expr& e, const Catalog& catalog = {});

}  // namespace fourfold
