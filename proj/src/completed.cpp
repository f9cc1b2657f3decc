#include "motivic/completed.hpp"

#include <algorithm>
#include <climits>
#include <ostream>
#include <sstream>
#include <vector>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

// S_d(x) = sum_{j>=0} j^d x^j, exact, via Eulerian numbers:
// S_d = (sum_k A(d,k) x^{k+1}) / (1-x)^{d+1} for d >= 1; S_0 = 1/(1-x).
Rat power_sum_series(int d, const Rat& x) {
    if (x <= 0 || x >= 1) throw std::invalid_argument("power_sum_series needs 0 < x < 1");
    Rat denom = rat_pow(1 - x, d + 1);
    if (d == 0) return 1 / (1 - x);
    // A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)
    std::vector<std::vector<Int>> eul(d + 1);
    eul[0] = {1};
    for (int n = 1; n <= d; ++n) {
        eul[n].assign(n, 0);
        for (int k = 0; k < n; ++k) {
            Int a = (k >= 1 && static_cast<size_t>(k - 1) < eul[n - 1].size()) ? eul[n - 1][k - 1] : 0;
            Int b = static_cast<size_t>(k) < eul[n - 1].size() ? eul[n - 1][k] : 0;
            eul[n][k] = Int(n - k) * a + Int(k + 1) * b;
        }
    }
    Rat num = 0;
    for (size_t k = 0; k < eul[d].size(); ++k) num += Rat(eul[d][k]) * rat_pow(x, static_cast<long>(k + 1));
    return num / denom;
}

Int abs_int(const Int& v) { return v < 0 ? -v : v; }

} // namespace

void CompletedClass::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.is_zero() || (floor_ && it->first < *floor_))
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

CompletedClass CompletedClass::zero_to_precision(int floor) {
    CompletedClass r;
    r.floor_ = floor;
    return r;
}

CompletedClass CompletedClass::term(int index, SymPoly c) {
    CompletedClass r;
    if (!c.is_zero()) r.coeffs_.emplace(index, std::move(c));
    return r;
}

CompletedClass CompletedClass::from_laurent(const Laurent& p) {
    CompletedClass r;
    for (const auto& [k, c] : p.terms()) r.coeffs_.emplace(k, SymPoly(c));
    return r;
}

SymPoly CompletedClass::coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? SymPoly() : it->second;
}

std::optional<int> CompletedClass::top_index() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

CompletedClass CompletedClass::truncated(int floor) const {
    if (floor_ && *floor_ > floor)
        throw std::invalid_argument("cannot deepen a precision floor by truncation");
    CompletedClass r = *this;
    r.floor_ = floor;
    r.prune();
    return r;
}

CompletedClass CompletedClass::operator+(const CompletedClass& o) const {
    CompletedClass r;
    if (floor_ || o.floor_)
        r.floor_ = std::max(floor_.value_or(INT_MIN), o.floor_.value_or(INT_MIN));
    for (const auto& [k, c] : coeffs_) r.coeffs_[k] = c;
    for (const auto& [k, c] : o.coeffs_) {
        auto it = r.coeffs_.find(k);
        if (it == r.coeffs_.end())
            r.coeffs_.emplace(k, c);
        else
            it->second = it->second + c;
    }
    r.prune();
    return r;
}

CompletedClass CompletedClass::operator-(const CompletedClass& o) const { return *this + (-o); }

CompletedClass CompletedClass::operator-() const {
    CompletedClass r = *this;
    for (auto& [k, c] : r.coeffs_) c = -c;
    return r;
}

CompletedClass CompletedClass::operator*(const CompletedClass& o) const {
    CompletedClass r;
    // result floor: max(floor_a + top_b, floor_b + top_a); a series truncated
    // down to nothing uses its floor as effective top
    auto eff_top = [](const CompletedClass& x) -> std::optional<int> {
        if (auto t = x.top_index()) return t;
        return x.floor();
    };
    auto ta = eff_top(*this), tb = eff_top(o);
    std::optional<int> f;
    if (floor_ && tb) f = *floor_ + *tb;
    if (o.floor_ && ta) {
        int g = *o.floor_ + *ta;
        f = f ? std::max(*f, g) : g;
    }
    r.floor_ = f;
    for (const auto& [i, a] : coeffs_)
        for (const auto& [j, b] : o.coeffs_) {
            if (f && i + j < *f) continue;
            auto it = r.coeffs_.find(i + j);
            if (it == r.coeffs_.end())
                r.coeffs_.emplace(i + j, a * b);
            else
                it->second = it->second + a * b;
        }
    r.prune();
    return r;
}

std::optional<int> CompletedClass::dim() const {
    if (coeffs_.empty()) {
        if (floor_)
            throw PrecisionExhaustedError(
                "all represented coefficients vanish at floor " + std::to_string(*floor_));
        return std::nullopt;
    }
    int d = INT_MIN;
    for (const auto& [k, c] : coeffs_) d = std::max(d, k + c.dim().value_or(0));
    return d;
}

std::string CompletedClass::str() const {
    std::ostringstream os;
    if (coeffs_.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [k, c] = *it;
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) {
                    os << "-";
                    cs = cs.substr(1);
                }
                first = false;
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            bool composite = cs.find(' ') != std::string::npos;
            if (k == 0) {
                os << (composite ? "(" + cs + ")" : cs);
            } else {
                if (cs != "1") os << (composite ? "(" + cs + ")" : cs) << "*";
                os << (k == 1 ? "L" : "L^" + std::to_string(k));
            }
        }
    }
    if (floor_) os << " + O(L^" << *floor_ - 1 << ")";
    return os.str();
}

CompletedClass expand(const TateRational& x, int floor) {
    if (x.is_zero()) return CompletedClass::exact_zero();
    CompletedClass r = CompletedClass::from_laurent(x.num().shifted(-x.den().l_power));
    const auto& factors = x.den().factors;
    if (factors.empty()) return r;
    // 1/(L^n - 1) = L^{-n} + L^{-2n} + ...; every remaining factor pushes
    // indices down by at least n_j, so the i-th partial product only needs
    // depth floor + (sum of the remaining n_j)
    int remaining = 0;
    for (int n : factors) remaining += n;
    for (int n : factors) {
        remaining -= n;
        const int depth = floor + remaining;
        if (r.coeffs().empty()) return CompletedClass::zero_to_precision(floor);
        const int top = *r.top_index();
        CompletedClass geo = CompletedClass::zero_to_precision(depth - top);
        for (int e = -n; e >= depth - top; e -= n)
            geo = geo + CompletedClass::term(e, SymPoly(Int(1)));
        r = r * geo;
    }
    return r;
}

std::pair<Rat, Rat> count_truncated(const CompletedClass& x, const Int& q,
                                    const GrowthCertificate& cert) {
    if (q < 2) throw std::invalid_argument("count_truncated requires q >= 2");
    if (cert.C < 0 || cert.D < 0 || cert.d < 0)
        throw std::invalid_argument("certificate constants must be non-negative");
    Rat qr(q);
    Rat value = 0;
    for (const auto& [k, c] : x.coeffs()) value += c.count(qr) * rat_pow(qr, k);
    if (x.is_exact()) return {value, 0};

    const int K = *x.floor() - 1;
    const Int absK = K < 0 ? -K : K;
    const Rat qK = rat_pow(qr, K);
    const Rat geo = qr / (qr - 1); // sum_{j>=0} q^{-j}
    Rat bound = Rat(cert.D) * qK * geo;
    if (cert.C > 0) {
        Int twoD = int_pow(2, static_cast<unsigned>(cert.d));
        Rat body = Rat(int_pow(absK, static_cast<unsigned>(cert.d))) * geo +
                   power_sum_series(cert.d, 1 / qr);
        bound += Rat(cert.C * twoD * twoD) * qK * body;
    }
    bound *= 2; // trace-tail estimate carries a factor 2
    return {value, bound};
}

GrowthCertificate derive_certificate(const TateRational& x) {
    GrowthCertificate cert;
    if (x.is_zero()) return cert;
    Int S = 0;
    int M = 0;
    for (const auto& [k, c] : x.num().terms()) {
        S += abs_int(c);
        M = std::max(M, std::abs(k - x.den().l_power));
    }
    const int r = static_cast<int>(x.den().factors.size());
    if (r == 0) {
        // exact Laurent polynomial: uwt_n <= max |coefficient|
        for (const auto& [k, c] : x.num().terms()) cert.D = std::max(cert.D, abs_int(c));
        return cert;
    }
    Int scale = S * int_pow(2, static_cast<unsigned>(r - 1));
    cert.C = scale;
    cert.d = r - 1;
    cert.D = scale * int_pow(Int(std::max(M, 1)), static_cast<unsigned>(r - 1));
    return cert;
}

WeightSeries weight_series(const CompletedClass& x) {
    WeightSeries r;
    int spread = 0;
    for (const auto& [k, c] : x.coeffs()) {
        r = r + c.weight().shifted(2 * k);
        spread = std::max(spread, c.weight_top_spread());
    }
    if (x.floor()) r.set_floor(2 * *x.floor() + spread);
    return r;
}

std::ostream& operator<<(std::ostream& os, const CompletedClass& x) { return os << x.str(); }

} // namespace motivic
