#include "motivic/torsion.hpp"

#include <algorithm>
#include <climits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace motivic {

TorsionModuleClass TorsionModuleClass::alpha(int q, int n, Int mult) {
    if (q < 2 || n < 1) throw std::invalid_argument("alpha_{q,n} needs a prime q and n >= 1");
    TorsionModuleClass r;
    if (mult != 0) r.alphas_[{q, n}] = std::move(mult);
    return r;
}

TorsionModuleClass TorsionModuleClass::operator+(const TorsionModuleClass& o) const {
    TorsionModuleClass r = *this;
    r.unit_ += o.unit_;
    for (const auto& [k, m] : o.alphas_) {
        auto it = r.alphas_.find(k);
        if (it == r.alphas_.end()) {
            r.alphas_.emplace(k, m);
        } else {
            it->second += m;
            if (it->second == 0) r.alphas_.erase(it);
        }
    }
    return r;
}

TorsionModuleClass TorsionModuleClass::operator-() const {
    TorsionModuleClass r = *this;
    r.unit_ = -r.unit_;
    for (auto& [k, m] : r.alphas_) m = -m;
    return r;
}

TorsionModuleClass TorsionModuleClass::scaled(const Int& c) const {
    if (c == 0) return {};
    TorsionModuleClass r = *this;
    r.unit_ *= c;
    for (auto& [k, m] : r.alphas_) m *= c;
    return r;
}

std::pair<TorsionModuleClass, TorsionModuleClass>
TorsionModuleClass::mul_split(const TorsionModuleClass& o) const {
    TorsionModuleClass same, lower;
    same.unit_ = unit_ * o.unit_;
    for (const auto& [k, m] : o.alphas_) {
        Int v = unit_ * m;
        if (v != 0) same.alphas_[k] += v;
    }
    for (const auto& [k, m] : alphas_) {
        Int v = o.unit_ * m;
        if (v != 0) same.alphas_[k] += v;
    }
    for (const auto& [ka, ma] : alphas_)
        for (const auto& [kb, mb] : o.alphas_) {
            if (ka.first != kb.first) continue; // distinct primes annihilate
            AlphaKey k{ka.first, std::min(ka.second, kb.second)};
            Int v = ma * mb;
            same.alphas_[k] += v;
            lower.alphas_[k] += v;
        }
    auto drop_zeros = [](TorsionModuleClass& t) {
        for (auto it = t.alphas_.begin(); it != t.alphas_.end();)
            it = it->second == 0 ? t.alphas_.erase(it) : std::next(it);
    };
    drop_zeros(same);
    drop_zeros(lower);
    return {same, lower};
}

std::string TorsionModuleClass::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Int& c, const std::string& base) {
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
        if (base.empty()) {
            os << v;
        } else {
            if (v != 1) os << v << "*";
            os << base;
        }
    };
    if (unit_ != 0) emit(unit_, "");
    for (const auto& [k, m] : alphas_)
        emit(m, "a(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")");
    return os.str();
}

void GradedTorsionSeries::prune() {
    for (auto it = grades_.begin(); it != grades_.end();) {
        if (it->second.is_zero() || (floor_ && it->first < *floor_))
            it = grades_.erase(it);
        else
            ++it;
    }
}

GradedTorsionSeries GradedTorsionSeries::term(int degree, TorsionModuleClass c) {
    GradedTorsionSeries r;
    if (!c.is_zero()) r.grades_.emplace(degree, std::move(c));
    return r;
}

GradedTorsionSeries GradedTorsionSeries::zero_to_precision(int floor) {
    GradedTorsionSeries r;
    r.floor_ = floor;
    return r;
}

TorsionModuleClass GradedTorsionSeries::grade(int i) const {
    auto it = grades_.find(i);
    return it == grades_.end() ? TorsionModuleClass() : it->second;
}

std::optional<int> GradedTorsionSeries::top_degree() const {
    if (grades_.empty()) return std::nullopt;
    return grades_.rbegin()->first;
}

GradedTorsionSeries GradedTorsionSeries::operator+(const GradedTorsionSeries& o) const {
    GradedTorsionSeries r;
    if (floor_ || o.floor_)
        r.floor_ = std::max(floor_.value_or(INT_MIN), o.floor_.value_or(INT_MIN));
    r.grades_ = grades_;
    for (const auto& [i, c] : o.grades_) {
        auto it = r.grades_.find(i);
        if (it == r.grades_.end())
            r.grades_.emplace(i, c);
        else
            it->second = it->second + c;
    }
    r.prune();
    return r;
}

GradedTorsionSeries GradedTorsionSeries::operator-() const {
    GradedTorsionSeries r = *this;
    for (auto& [i, c] : r.grades_) c = -c;
    return r;
}

std::string GradedTorsionSeries::str() const {
    std::ostringstream os;
    if (grades_.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& [i, c] : grades_) {
            if (!first) os << " + ";
            first = false;
            std::string cs = c.str();
            bool composite = cs.find(' ') != std::string::npos;
            if (i == 0) {
                os << (composite ? "(" + cs + ")" : cs);
            } else {
                if (cs == "1")
                    os << "t";
                else
                    os << (composite ? "(" + cs + ")" : cs) << "*t";
                if (i != 1) os << "^" << i;
            }
        }
    }
    if (floor_) os << " + O(t^" << *floor_ - 1 << ")";
    return os.str();
}

GradedTorsionSeries torsion_mul(const GradedTorsionSeries& a, const GradedTorsionSeries& b) {
    GradedTorsionSeries r;
    auto eff_top = [](const GradedTorsionSeries& x) -> std::optional<int> {
        if (auto t = x.top_degree()) return t;
        return x.floor();
    };
    auto ta = eff_top(a), tb = eff_top(b);
    std::optional<int> f;
    if (a.floor() && tb) f = *a.floor() + *tb;
    if (b.floor() && ta) {
        int g = *b.floor() + *ta;
        f = f ? std::max(*f, g) : g;
    }
    r.floor_ = f;
    for (const auto& [i, ca] : a.grades())
        for (const auto& [j, cb] : b.grades()) {
            auto [same, lower] = ca.mul_split(cb);
            if (!same.is_zero() && (!f || i + j >= *f)) {
                auto it = r.grades_.find(i + j);
                if (it == r.grades_.end())
                    r.grades_.emplace(i + j, same);
                else
                    it->second = it->second + same;
            }
            if (!lower.is_zero() && (!f || i + j - 1 >= *f)) {
                auto it = r.grades_.find(i + j - 1);
                if (it == r.grades_.end())
                    r.grades_.emplace(i + j - 1, lower);
                else
                    it->second = it->second + lower;
            }
        }
    r.prune();
    return r;
}

CohomologyDescriptor& CohomologyDescriptor::set_rank(int degree, Int rank) {
    if (rank < 0) throw std::invalid_argument("betti rank must be >= 0");
    degrees[degree].rank = std::move(rank);
    return *this;
}

CohomologyDescriptor& CohomologyDescriptor::add_torsion(int degree, int q, int n, int mult) {
    if (q < 2 || n < 1 || mult < 1) throw std::invalid_argument("bad torsion summand");
    degrees[degree].torsion[{q, n}] += mult;
    return *this;
}

CohomologyDescriptor CohomologyDescriptor::point() {
    CohomologyDescriptor d;
    d.set_rank(0, 1);
    return d;
}

CohomologyDescriptor CohomologyDescriptor::projective_line() {
    CohomologyDescriptor d;
    d.set_rank(0, 1).set_rank(2, 1);
    return d;
}

CohomologyDescriptor CohomologyDescriptor::operator+(const CohomologyDescriptor& o) const {
    CohomologyDescriptor r = *this;
    for (const auto& [i, dd] : o.degrees) {
        auto& t = r.degrees[i];
        t.rank += dd.rank;
        for (const auto& [k, m] : dd.torsion) t.torsion[k] += m;
    }
    return r;
}

CohomologyDescriptor CohomologyDescriptor::parse(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    CohomologyDescriptor d;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int degree = std::stoi(it.key());
        const auto& v = it.value();
        if (v.contains("rank")) d.set_rank(degree, Int(v["rank"].get<long>()));
        if (v.contains("torsion"))
            for (const auto& t : v["torsion"])
                d.add_torsion(degree, t.at(0).get<int>(), t.at(1).get<int>());
    }
    return d;
}

GradedTorsionSeries chi_g(const CohomologyDescriptor& x) {
    GradedTorsionSeries r;
    for (const auto& [i, dd] : x.degrees) {
        TorsionModuleClass c(dd.rank);
        for (const auto& [k, m] : dd.torsion)
            c = c + TorsionModuleClass::alpha(k.first, k.second, m);
        r = r + GradedTorsionSeries::term(i, c);
    }
    return r;
}

GradedTorsionSeries tate_twist(const GradedTorsionSeries& x, int m) {
    GradedTorsionSeries r;
    for (const auto& [i, c] : x.grades()) r = r + GradedTorsionSeries::term(i - 2 * m, c);
    if (x.floor()) r = r + GradedTorsionSeries::zero_to_precision(*x.floor() - 2 * m);
    return r;
}

GradedTorsionSeries projective_bundle_expected(const CohomologyDescriptor& x, int n) {
    if (n < 0) throw std::invalid_argument("projective bundle dimension must be >= 0");
    GradedTorsionSeries s;
    for (int k = 0; k <= n; ++k)
        s = s + GradedTorsionSeries::term(2 * k, TorsionModuleClass(1));
    return torsion_mul(s, chi_g(x));
}

bool torsion_obstruction(const CohomologyDescriptor& X, const CohomologyDescriptor& P, int n) {
    return chi_g(P) != projective_bundle_expected(X, n);
}

std::ostream& operator<<(std::ostream& os, const GradedTorsionSeries& x) { return os << x.str(); }

} // namespace motivic
