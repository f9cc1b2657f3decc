#include "motivic/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "motivic/errors.hpp"

namespace motivic {

bool Laurent::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

int Laurent::degree() const {
    if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
    return coeffs_.rbegin()->first;
}

int Laurent::valuation() const {
    if (coeffs_.empty()) throw std::domain_error("valuation of the zero polynomial");
    return coeffs_.begin()->first;
}

const Int& Laurent::coeff(int k) const {
    static const Int zero = 0;
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? zero : it->second;
}

Int Laurent::leading() const {
    if (coeffs_.empty()) return 0;
    return coeffs_.rbegin()->second;
}

Int Laurent::content() const {
    Int g = 0;
    for (const auto& [k, c] : coeffs_) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? -g : g;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [k, c] : o.coeffs_) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [k, c] : o.coeffs_) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    r -= o;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [i, a] : coeffs_)
        for (const auto& [j, b] : o.coeffs_) {
            Int p = a * b;
            auto it = r.coeffs_.find(i + j);
            if (it == r.coeffs_.end()) {
                if (p != 0) r.coeffs_.emplace(i + j, std::move(p));
            } else {
                it->second += p;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& [k, c] : r.coeffs_) c = -c;
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
    return r;
}

Laurent Laurent::pow(unsigned e) const {
    Laurent r(Int(1));
    Laurent b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

Rat Laurent::eval(const Rat& q) const {
    if (coeffs_.empty()) return 0;
    if (q == 0 && valuation() < 0)
        throw std::domain_error("evaluation at 0 with negative exponents");
    Rat r = 0;
    for (const auto& [k, c] : coeffs_) r += Rat(c) * rat_pow(q, k);
    return r;
}

Int Laurent::eval_int(const Int& q) const {
    if (coeffs_.empty()) return 0;
    if (valuation() < 0) throw std::domain_error("eval_int on a non-polynomial");
    // Horner over the sparse support
    Int r = 0;
    int prev = degree();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r *= int_pow(q, static_cast<unsigned>(prev - it->first));
        r += it->second;
        prev = it->first;
    }
    return r * int_pow(q, static_cast<unsigned>(prev));
}

std::string Laurent::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Int c = it->second;
        int k = it->first;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (k == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            if (k == 1)
                os << "L";
            else
                os << "L^" << k;
        }
    }
    return os.str();
}

std::optional<Laurent> try_divide(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Laurent();
    // shift both to honest polynomials, divide, shift back
    int va = a.valuation(), vb = b.valuation();
    Laurent rem = a.shifted(-va);
    Laurent div = b.shifted(-vb);
    const Int lead = div.leading();
    const int dd = div.degree();
    Laurent quot;
    while (!rem.is_zero() && rem.degree() >= dd) {
        Int c = rem.leading();
        if (c % lead != 0) return std::nullopt;
        Laurent t = Laurent::term(c / lead, rem.degree() - dd);
        quot += t;
        rem -= t * div;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot.shifted(va - vb);
}

Laurent divide_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero");
    auto q = try_divide(a, b);
    if (!q) throw NotDivisibleError("exact division failed: (" + a.str() + ") / (" + b.str() + ")");
    return *q;
}

Laurent class_gl(int n) {
    if (n < 1) throw std::invalid_argument("class_gl requires n >= 1");
    Laurent r(Int(1));
    Laurent ln = Laurent::lclass(n);
    for (int k = 0; k < n; ++k) r = r * (ln - Laurent::lclass(k));
    return r;
}

Laurent class_sl(int n) {
    return divide_exact(class_gl(n), Laurent::lclass(1) - Laurent(Int(1)));
}

Laurent class_projective_space(int n) {
    if (n < 0) throw std::invalid_argument("class_projective_space requires n >= 0");
    Laurent r;
    for (int k = 0; k <= n; ++k) r += Laurent::lclass(k);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

} // namespace motivic
