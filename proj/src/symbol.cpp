#include "motivic/symbol.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

Rat json_rat(const nlohmann::json& v) {
    if (v.is_string()) return Rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    throw std::invalid_argument("expected an integer or a rational string");
}

Int json_int(const nlohmann::json& v) {
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_integer()) return Int(v.get<long long>());
    throw std::invalid_argument("expected an integer");
}

} // namespace

Rat Symbol::count(const Rat& q) const {
    auto it = count_table.find(q);
    if (it != count_table.end()) return it->second;
    if (count_poly) return count_poly->eval(q);
    throw UnknownCountError("symbol '" + name + "' has no point count at the requested q");
}

Monomial Monomial::of(SymbolRef s, int e) {
    if (!s) throw std::invalid_argument("null symbol");
    if (e < 0 && !s->invertible)
        throw NotInvertibleError("symbol '" + s->name + "' is not declared invertible");
    Monomial m;
    if (e != 0) m.parts_.emplace_back(std::move(s), e);
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = parts_.begin(), b = o.parts_.begin();
    while (a != parts_.end() || b != o.parts_.end()) {
        if (b == o.parts_.end() || (a != parts_.end() && a->first->name < b->first->name)) {
            r.parts_.push_back(*a++);
        } else if (a == parts_.end() || b->first->name < a->first->name) {
            r.parts_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e < 0 && !a->first->invertible)
                throw NotInvertibleError("symbol '" + a->first->name + "' is not declared invertible");
            if (e != 0) r.parts_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return r;
}

int Monomial::dim() const {
    int d = 0;
    for (const auto& [s, e] : parts_) d += s->dim * e;
    return d;
}

Rat Monomial::count(const Rat& q) const {
    Rat r = 1;
    for (const auto& [s, e] : parts_) {
        Rat c = s->count(q);
        if (e < 0 && c == 0) throw PoleError("symbol '" + s->name + "' count vanishes at q");
        r *= rat_pow(c, e);
    }
    return r;
}

WeightSeries Monomial::weight() const {
    WeightSeries r = WeightSeries::term(0, 1);
    for (const auto& [s, e] : parts_) {
        if (!s->weight)
            throw UnknownCountError("symbol '" + s->name + "' has no declared weight series");
        if (e < 0)
            throw UnknownCountError("weight series of an inverted symbol is not defined");
        for (int i = 0; i < e; ++i) r = r * *s->weight;
    }
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    auto key = [](const Monomial& m) {
        std::vector<std::pair<std::string, int>> k;
        for (const auto& [s, e] : m.parts_) k.emplace_back(s->name, e);
        return k;
    };
    return key(*this) < key(o);
}

bool Monomial::operator==(const Monomial& o) const {
    return !(*this < o) && !(o < *this);
}

std::string Monomial::str() const {
    if (parts_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, e] : parts_) {
        if (!first) os << "*";
        first = false;
        os << s->name;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

Int SymPoly::as_integer() const {
    if (terms_.empty()) return 0;
    if (!is_integer()) throw std::domain_error("SymPoly is not an integer: " + str());
    return terms_.begin()->second;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + (-o); }

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1 * m2;
            Int c = c1 * c2;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                if (c != 0) r.terms_.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

SymPoly SymPoly::operator-() const {
    SymPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

std::optional<int> SymPoly::dim() const {
    if (terms_.empty()) return std::nullopt;
    int d = INT_MIN;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dim());
    return d;
}

Rat SymPoly::count(const Rat& q) const {
    Rat r = 0;
    for (const auto& [m, c] : terms_) r += Rat(c) * m.count(q);
    return r;
}

WeightSeries SymPoly::weight() const {
    WeightSeries r;
    for (const auto& [m, c] : terms_) {
        WeightSeries w = m.weight();
        // scale by |c|
        WeightSeries scaled;
        for (const auto& [deg, mult] : w.mult())
            scaled = scaled + WeightSeries::term(deg, mult * (c < 0 ? -c : c));
        r = r + scaled;
    }
    return r;
}

int SymPoly::weight_top_spread() const {
    int s = 0;
    for (const auto& [m, c] : terms_)
        if (!m.is_unit())
            if (auto t = m.weight().top()) s = std::max(s, *t);
    return s;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int v = c;
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        if (m.is_unit()) {
            os << v;
        } else {
            if (v != 1) os << v << "*";
            os << m.str();
        }
    }
    return os.str();
}

SymbolRef SymbolTable::declare(Symbol s) {
    if (s.name.empty()) throw std::invalid_argument("symbol needs a name");
    auto ref = std::make_shared<const Symbol>(std::move(s));
    map_[ref->name] = ref;
    return ref;
}

SymbolRef SymbolTable::find(const std::string& name) const {
    auto it = map_.find(name);
    return it == map_.end() ? nullptr : it->second;
}

std::vector<SymbolRef> SymbolTable::all() const {
    std::vector<SymbolRef> v;
    for (const auto& [n, s] : map_) v.push_back(s);
    return v;
}

void load_symbol_manifest(SymbolTable& table, const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    for (const auto& js : j.at("symbols")) {
        Symbol s;
        s.name = js.at("name").get<std::string>();
        s.dim = js.at("dim").get<int>();
        if (js.contains("invertible")) s.invertible = js["invertible"].get<bool>();
        if (js.contains("count")) {
            const auto& jc = js["count"];
            if (jc.contains("poly")) {
                Laurent p;
                int k = 0;
                for (const auto& c : jc["poly"])
                    p += Laurent::term(json_int(c), k++);
                s.count_poly = p;
            }
            if (jc.contains("table")) {
                for (auto it = jc["table"].begin(); it != jc["table"].end(); ++it)
                    s.count_table[Rat(it.key())] = json_rat(it.value());
            }
        }
        if (js.contains("weight")) {
            WeightSeries w;
            for (auto it = js["weight"].begin(); it != js["weight"].end(); ++it)
                w = w + WeightSeries::term(std::stoi(it.key()), Int(it.value().get<long>()));
            s.weight = w;
        }
        table.declare(std::move(s));
    }
}

} // namespace motivic
