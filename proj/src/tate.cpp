#include "motivic/tate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

// multiset of cyclotomic indices dividing the expansion: (L^n - 1) = prod_{d|n} Phi_d
std::map<int, int> cyclotomic_multiset(const std::vector<int>& factors) {
    std::map<int, int> m;
    for (int n : factors)
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) ++m[d];
    return m;
}

// Reassemble a cyclotomic multiset into (L^n - 1) factors.  The top index
// must head a factor, so the greedy top-down choice is forced; returns
// nothing when the multiset is not such a product.
std::optional<std::vector<int>> assemble_factors(std::map<int, int> m) {
    std::vector<int> out;
    while (!m.empty()) {
        int top = m.rbegin()->first;
        for (int d = 1; d <= top; ++d) {
            if (top % d != 0) continue;
            auto it = m.find(d);
            if (it == m.end()) return std::nullopt;
            if (--it->second == 0) m.erase(it);
        }
        out.push_back(top);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

AdmissibleDen AdmissibleDen::of(int l_power, std::vector<int> factors) {
    if (l_power < 0) throw std::invalid_argument("admissible denominator needs l_power >= 0");
    for (int n : factors)
        if (n < 1) throw std::invalid_argument("admissible factor index must be >= 1");
    std::sort(factors.begin(), factors.end());
    return AdmissibleDen{l_power, std::move(factors)};
}

Laurent AdmissibleDen::expanded() const {
    Laurent r = Laurent::lclass(l_power);
    for (int n : factors) r = r * (Laurent::lclass(n) - Laurent(Int(1)));
    return r;
}

int AdmissibleDen::degree() const {
    return l_power + std::accumulate(factors.begin(), factors.end(), 0);
}

Rat AdmissibleDen::eval(const Rat& q) const {
    Rat r = 1;
    if (l_power > 0) {
        if (q == 0) throw PoleError("denominator L^" + std::to_string(l_power) + " vanishes at q = 0");
        r = rat_pow(q, l_power);
    }
    for (int n : factors) {
        Rat f = rat_pow(q, n) - 1;
        if (f == 0)
            throw PoleError("denominator factor (L^" + std::to_string(n) + "-1) vanishes at q");
        r *= f;
    }
    return r;
}

std::string AdmissibleDen::str() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& base, int mult) {
        if (!first) os << " * ";
        first = false;
        os << base;
        if (mult > 1) os << "^" << mult;
    };
    if (l_power > 0) emit(l_power == 1 ? "L" : "L^" + std::to_string(l_power), 1);
    for (size_t i = 0; i < factors.size();) {
        size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        std::string base = factors[i] == 1 ? "(L-1)" : "(L^" + std::to_string(factors[i]) + "-1)";
        emit(base, static_cast<int>(j - i));
        i = j;
    }
    return os.str();
}

void TateRational::canonicalise() {
    if (num_.is_zero()) {
        den_ = AdmissibleDen::one();
        return;
    }
    // move the whole L-power into one place
    int s = std::min(num_.valuation(), den_.l_power);
    if (s != 0) {
        num_ = num_.shifted(-s);
        den_.l_power -= s;
    }
    // cancel cyclotomic factors while the leftover still assembles into
    // (L^n - 1)'s
    if (!den_.factors.empty() && num_.term_count() > 1) {
        auto cyclos = cyclotomic_multiset(den_.factors);
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = cyclos.rbegin(); it != cyclos.rend(); ++it) {
                auto q = try_divide(num_, cyclotomic(it->first));
                if (!q) continue;
                auto reduced = cyclos;
                auto jt = reduced.find(it->first);
                if (--jt->second == 0) reduced.erase(jt);
                auto factors = assemble_factors(reduced);
                if (!factors) continue;
                num_ = std::move(*q);
                cyclos = std::move(reduced);
                den_.factors = std::move(*factors);
                changed = true;
                break;
            }
            if (num_.term_count() <= 1) break;
        }
    }
    std::sort(den_.factors.begin(), den_.factors.end());
}

TateRational TateRational::operator+(const TateRational& o) const {
    // common denominator: per-factor maximum multiplicity, maximum L-power
    std::map<int, int> ma, mb;
    for (int n : den_.factors) ++ma[n];
    for (int n : o.den_.factors) ++mb[n];
    AdmissibleDen common;
    common.l_power = std::max(den_.l_power, o.den_.l_power);
    Laurent scale_a = Laurent::lclass(common.l_power - den_.l_power);
    Laurent scale_b = Laurent::lclass(common.l_power - o.den_.l_power);
    for (const auto& [n, cnt] : ma) common.factors.insert(common.factors.end(), std::max(cnt, mb.count(n) ? mb[n] : 0), n);
    for (const auto& [n, cnt] : mb)
        if (!ma.count(n)) common.factors.insert(common.factors.end(), cnt, n);
    std::sort(common.factors.begin(), common.factors.end());
    // multipliers: missing factors of each side
    auto mult_for = [&](const std::map<int, int>& own) {
        Laurent m(Int(1));
        std::map<int, int> need;
        for (int n : common.factors) ++need[n];
        for (const auto& [n, cnt] : own) need[n] -= cnt;
        for (const auto& [n, cnt] : need)
            for (int i = 0; i < cnt; ++i) m = m * (Laurent::lclass(n) - Laurent(Int(1)));
        return m;
    };
    Laurent num = num_ * scale_a * mult_for(ma) + o.num_ * scale_b * mult_for(mb);
    return TateRational(std::move(num), std::move(common));
}

TateRational TateRational::operator-(const TateRational& o) const { return *this + (-o); }

TateRational TateRational::operator*(const TateRational& o) const {
    AdmissibleDen den;
    den.l_power = den_.l_power + o.den_.l_power;
    den.factors = den_.factors;
    den.factors.insert(den.factors.end(), o.den_.factors.begin(), o.den_.factors.end());
    std::sort(den.factors.begin(), den.factors.end());
    return TateRational(num_ * o.num_, std::move(den));
}

TateRational TateRational::operator-() const {
    TateRational r = *this;
    r.num_ = -r.num_;
    return r;
}

bool TateRational::operator==(const TateRational& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_.expanded() == o.num_ * den_.expanded();
}

TateRational TateRational::inverse() const {
    if (num_.is_zero()) throw NotInvertibleError("division by zero");
    auto unit = is_invertible_localised(num_);
    if (!unit)
        throw NotInvertibleError("not a unit of the localised ring: " + num_.str());
    // net exponents of 1/x over the basis {L} u {(L^d - 1)}:
    // Phi_c = prod_{d|c} (L^d - 1)^{mu(c/d)}
    std::map<int, int> exp; // (L^d - 1) exponent in 1/x
    for (int n : den_.factors) ++exp[n];
    for (int c : unit->cyclotomics)
        for (int d = 1; d <= c; ++d)
            if (c % d == 0) exp[d] -= moebius(c / d);
    int lp = den_.l_power - unit->l_power;
    Laurent num = Laurent::term(unit->sign, std::max(lp, 0));
    AdmissibleDen den;
    den.l_power = std::max(-lp, 0);
    for (const auto& [d, e] : exp) {
        if (e > 0)
            for (int i = 0; i < e; ++i) num = num * (Laurent::lclass(d) - Laurent(Int(1)));
        else
            den.factors.insert(den.factors.end(), -e, d);
    }
    std::sort(den.factors.begin(), den.factors.end());
    return TateRational(std::move(num), std::move(den));
}

TateRational TateRational::divided_by_factor(int n) const {
    AdmissibleDen den = den_;
    den.factors.push_back(n);
    std::sort(den.factors.begin(), den.factors.end());
    return TateRational(num_, std::move(den));
}

TateRational TateRational::divided_by_l(int k) const {
    if (k < 0) return TateRational(num_.shifted(-k), den_);
    AdmissibleDen den = den_;
    den.l_power += k;
    return TateRational(num_, std::move(den));
}

Rat TateRational::eval(const Rat& q) const {
    return num_.eval(q) / den_.eval(q);
}

std::optional<int> TateRational::dim() const {
    if (num_.is_zero()) return std::nullopt;
    return num_.degree() - den_.degree();
}

std::string TateRational::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
    return n + " / (" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const TateRational& x) { return os << x.str(); }

} // namespace motivic
