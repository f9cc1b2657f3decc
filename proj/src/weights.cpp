#include "motivic/weights.hpp"

#include <climits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace motivic {

namespace {

// binomial(n, k) for small n
Int binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// coefficient of t^m in the t^{-1}-expansion of 1/(t-1)^d:
// (t-1)^{-d} = sum_{j>=d} binom(j-1, d-1) t^{-j};  d = 0 means 1.
Int inv_tm1_coeff(int d, int m) {
    if (d == 0) return m == 0 ? 1 : 0;
    if (m > -d) return 0;
    return binom(-m - 1, d - 1);
}

} // namespace

WeightSeries WeightSeries::term(int weight, Int mult) {
    if (mult < 0) throw std::invalid_argument("weight multiplicities must be >= 0");
    WeightSeries r;
    if (mult != 0) r.mult_[weight] = std::move(mult);
    return r;
}

WeightSeries WeightSeries::closed_form(const Laurent& phi, int d, int floor) {
    WeightSeries r;
    r.floor_ = floor;
    r.closed_ = ClosedForm{phi, d};
    for (const auto& [e, c] : phi.terms()) {
        if (c < 0) throw std::invalid_argument("closed form numerator must be non-negative");
        for (int m = floor; m <= e - d; ++m) {
            Int v = c * inv_tm1_coeff(d, m - e);
            if (v != 0) r.mult_[m] += v;
        }
    }
    // drop zeros (cannot occur with non-negative input, kept for safety)
    for (auto it = r.mult_.begin(); it != r.mult_.end();)
        it = it->second == 0 ? r.mult_.erase(it) : std::next(it);
    return r;
}

Int WeightSeries::at(int weight) const {
    auto it = mult_.find(weight);
    return it == mult_.end() ? Int(0) : it->second;
}

std::optional<int> WeightSeries::top() const {
    if (mult_.empty()) return std::nullopt;
    return mult_.rbegin()->first;
}

WeightSeries& WeightSeries::set_floor(std::optional<int> f) {
    floor_ = f;
    if (f) {
        for (auto it = mult_.begin(); it != mult_.end() && it->first < *f;)
            it = mult_.erase(it);
    }
    return *this;
}

WeightSeries WeightSeries::shifted(int by) const {
    WeightSeries r;
    for (const auto& [w, m] : mult_) r.mult_[w + by] = m;
    if (floor_) r.floor_ = *floor_ + by;
    return r;
}

WeightSeries WeightSeries::operator+(const WeightSeries& o) const {
    WeightSeries r;
    if (floor_ || o.floor_) {
        int f = std::max(floor_.value_or(INT_MIN), o.floor_.value_or(INT_MIN));
        r.floor_ = f;
    }
    for (const auto& [w, m] : mult_) r.mult_[w] += m;
    for (const auto& [w, m] : o.mult_) r.mult_[w] += m;
    r.set_floor(r.floor_);
    for (auto it = r.mult_.begin(); it != r.mult_.end();)
        it = it->second == 0 ? r.mult_.erase(it) : std::next(it);
    return r;
}

WeightSeries WeightSeries::operator*(const WeightSeries& o) const {
    WeightSeries r;
    // effective top of a truncated-to-nothing series is its floor
    auto eff_top = [](const WeightSeries& s) -> std::optional<int> {
        if (auto t = s.top()) return t;
        return s.floor(); // nullopt for exact zero
    };
    auto ta = eff_top(*this), tb = eff_top(o);
    if (floor_ && tb) r.floor_ = *floor_ + *tb;
    if (o.floor_ && ta) {
        int f = *o.floor_ + *ta;
        r.floor_ = r.floor_ ? std::max(*r.floor_, f) : f;
    }
    for (const auto& [w1, m1] : mult_)
        for (const auto& [w2, m2] : o.mult_) r.mult_[w1 + w2] += m1 * m2;
    r.set_floor(r.floor_);
    return r;
}

bool WeightSeries::dominated_by_series(const WeightSeries& o) const {
    for (const auto& [w, m] : mult_)
        if (m > o.at(w)) return false;
    return true;
}

std::string WeightSeries::str() const {
    std::ostringstream os;
    if (mult_.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            if (it->second != 1 || it->first == 0) os << it->second;
            if (it->first != 0) {
                if (it->second != 1) os << "*";
                os << "t";
                if (it->first != 1) os << "^" << it->first;
            }
        }
    }
    if (floor_) os << " + O(t^" << *floor_ - 1 << ")";
    return os.str();
}

WeightSeries weight_series(const Laurent& x) {
    WeightSeries r;
    for (const auto& [k, c] : x.terms())
        r = r + WeightSeries::term(2 * k, c < 0 ? -c : c);
    return r;
}

bool dominated_by(const WeightSeries& ws, const Laurent& phi, int d) {
    for (const auto& [e, c] : phi.terms())
        if (c < 0) throw std::invalid_argument("dominating numerator must have non-negative coefficients");
    if (d < 0) throw std::invalid_argument("dominated_by requires d >= 0");
    if (ws.is_zero()) return true;
    int low = ws.floor().value_or(ws.mult().begin()->first);
    WeightSeries dom = WeightSeries::closed_form(phi, d, std::min(low, ws.mult().begin()->first));
    return ws.dominated_by_series(dom);
}

std::ostream& operator<<(std::ostream& os, const WeightSeries& ws) { return os << ws.str(); }

} // namespace motivic
