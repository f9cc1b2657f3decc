#ifndef MOTIVIC_SYMBOL_HPP
#define MOTIVIC_SYMBOL_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "motivic/laurent.hpp"
#include "motivic/weights.hpp"

namespace motivic {

// A declared class that is not rational in L (a Picard variety, say): a name,
// a dimension, a point count q -> rational (closed polynomial form and/or an
// exact per-q table; the table wins), and optionally a weight series used as
// the class's uwt surrogate.
struct Symbol {
    std::string name;
    int dim = 0;
    std::optional<Laurent> count_poly;       // polynomial in q
    std::map<Rat, Rat> count_table;          // exact values for selected q
    std::optional<WeightSeries> weight;
    bool invertible = false;                 // caller-asserted unit of the localised ring

    Rat count(const Rat& q) const; // UnknownCountError when no data covers q
};

using SymbolRef = std::shared_ptr<const Symbol>;

// Product of symbol powers; canonical (sorted by name, exponents nonzero).
// Symbols are identified by name; exponents may be negative only for symbols
// declared invertible.
class Monomial {
public:
    Monomial() = default;
    static Monomial unit() { return {}; }
    static Monomial of(SymbolRef s, int e = 1);

    bool is_unit() const { return parts_.empty(); }
    const std::vector<std::pair<SymbolRef, int>>& parts() const { return parts_; }
    Monomial operator*(const Monomial& o) const;
    int dim() const;
    Rat count(const Rat& q) const;
    WeightSeries weight() const; // throws UnknownCountError when a symbol lacks one
    bool operator<(const Monomial& o) const;
    bool operator==(const Monomial& o) const;
    std::string str() const;

private:
    std::vector<std::pair<SymbolRef, int>> parts_;
};

// Z[symbols]: the coefficient ring of completed classes over the catalog.
class SymPoly {
public:
    SymPoly() = default;
    SymPoly(Int c) { // NOLINT: implicit by design
        if (c != 0) terms_.emplace(Monomial::unit(), std::move(c));
    }
    SymPoly(long c) : SymPoly(Int(c)) {}
    SymPoly(Monomial m, Int c) {
        if (c != 0) terms_.emplace(std::move(m), std::move(c));
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_integer() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    Int as_integer() const; // requires is_integer()
    const std::map<Monomial, Int>& terms() const { return terms_; }

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly operator-() const;
    bool operator==(const SymPoly& o) const { return terms_ == o.terms_; }

    std::optional<int> dim() const; // max over terms; nullopt for 0
    Rat count(const Rat& q) const;
    WeightSeries weight() const;    // sum of |c| * monomial weight
    int weight_top_spread() const;  // max monomial weight top, 0 for integers
    std::string str() const;

private:
    std::map<Monomial, Int> terms_;
};

class SymbolTable {
public:
    SymbolRef declare(Symbol s);
    SymbolRef find(const std::string& name) const; // nullptr when absent
    std::vector<SymbolRef> all() const;

private:
    std::map<std::string, SymbolRef> map_;
};

// Manifest form: {"symbols": [{"name": ..., "dim": ...,
//   "count": {"poly": [c0, c1, ...]} and/or {"table": {"2": "3", ...}},
//   "weight": {"2": 1, ...}, "invertible": false}, ...]}
void load_symbol_manifest(SymbolTable& table, const std::string& json_text);

} // namespace motivic

#endif
