#include "motivic/catalog.hpp"

#include <algorithm>
#include <climits>
#include <ostream>
#include <sstream>

#include "motivic/errors.hpp"

namespace motivic {

TateRational MotivicClass::as_tate() const {
    if (terms_.empty()) return TateRational();
    if (!is_tate()) throw std::domain_error("class is not rational in L: " + str());
    return terms_.begin()->second;
}

MotivicClass MotivicClass::operator+(const MotivicClass& o) const {
    MotivicClass r = *this;
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

MotivicClass MotivicClass::operator-(const MotivicClass& o) const { return *this + (-o); }

MotivicClass MotivicClass::operator*(const MotivicClass& o) const {
    MotivicClass r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1 * m2;
            TateRational c = c1 * c2;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                if (!c.is_zero()) r.terms_.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

MotivicClass MotivicClass::operator-() const {
    MotivicClass r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

bool MotivicClass::operator==(const MotivicClass& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b) {
        if (!(a->first == b->first)) return false;
        if (a->second != b->second) return false;
    }
    return true;
}

MotivicClass MotivicClass::operator/(const MotivicClass& o) const {
    if (o.is_zero()) throw NotInvertibleError("division by zero");
    if (o.terms_.size() != 1)
        throw NotInvertibleError("divisor must be a single invertible term: " + o.str());
    const auto& [m, c] = *o.terms_.begin();
    TateRational cinv = c.inverse();
    Monomial minv = Monomial::unit();
    for (const auto& [s, e] : m.parts()) minv = minv * Monomial::of(s, -e);
    return *this * MotivicClass(std::move(minv), std::move(cinv));
}

Rat MotivicClass::count(const Rat& q) const {
    Rat r = 0;
    for (const auto& [m, c] : terms_) r += c.eval(q) * m.count(q);
    return r;
}

std::optional<int> MotivicClass::dim() const {
    if (terms_.empty()) return std::nullopt;
    int d = INT_MIN;
    for (const auto& [m, c] : terms_) d = std::max(d, *c.dim() + m.dim());
    return d;
}

std::string MotivicClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m.is_unit()) {
            os << c.str();
        } else if (c.is_one()) {
            os << m.str();
        } else {
            os << "(" << c.str() << ")*" << m.str();
        }
    }
    return os.str();
}

GroupDescriptor GroupDescriptor::gl(int n) {
    if (n < 1) throw std::invalid_argument("GL(n) needs n >= 1");
    GroupDescriptor g;
    g.kind_ = Kind::GL;
    g.n_ = n;
    g.special_ = true;
    g.name_ = "GL(" + std::to_string(n) + ")";
    return g;
}

GroupDescriptor GroupDescriptor::sl(int n) {
    if (n < 1) throw std::invalid_argument("SL(n) needs n >= 1");
    GroupDescriptor g;
    g.kind_ = Kind::SL;
    g.n_ = n;
    g.special_ = true;
    g.name_ = "SL(" + std::to_string(n) + ")";
    return g;
}

GroupDescriptor GroupDescriptor::gm() {
    GroupDescriptor g;
    g.kind_ = Kind::Gm;
    g.special_ = true;
    g.name_ = "Gm";
    return g;
}

GroupDescriptor GroupDescriptor::mu(int n) {
    if (n < 1) throw std::invalid_argument("mu(n) needs n >= 1");
    GroupDescriptor g;
    g.kind_ = Kind::Mu;
    g.n_ = n;
    g.special_ = false;
    g.name_ = "Mu(" + std::to_string(n) + ")";
    return g;
}

GroupDescriptor GroupDescriptor::monomial(int k) {
    if (k < 1) throw std::invalid_argument("monomial group needs k >= 1");
    GroupDescriptor g;
    g.kind_ = Kind::Monomial;
    g.n_ = k;
    g.special_ = false;
    g.name_ = "Monomial(" + std::to_string(k) + ")";
    return g;
}

GroupDescriptor GroupDescriptor::sigma(int n) {
    if (n < 1) throw std::invalid_argument("Sigma(n) needs n >= 1");
    GroupDescriptor g;
    g.kind_ = Kind::Sigma;
    g.n_ = n;
    g.special_ = false;
    g.name_ = "Sigma(" + std::to_string(n) + ")";
    return g;
}

GroupDescriptor GroupDescriptor::extension(std::string name, std::vector<GroupDescriptor> factors) {
    GroupDescriptor g;
    g.kind_ = Kind::Extension;
    g.name_ = std::move(name);
    g.special_ = true;
    MotivicClass cls(Int(1));
    for (const auto& f : factors) {
        g.special_ = g.special_ && f.special();
        cls = cls * f.group_class();
    }
    g.declared_class_ = std::move(cls);
    return g;
}

GroupDescriptor GroupDescriptor::declared(std::string name, MotivicClass cls, bool special) {
    GroupDescriptor g;
    g.kind_ = Kind::Extension;
    g.name_ = std::move(name);
    g.special_ = special;
    g.declared_class_ = std::move(cls);
    return g;
}

MotivicClass GroupDescriptor::group_class() const {
    switch (kind_) {
    case Kind::GL: return MotivicClass(class_gl(n_));
    case Kind::SL: return MotivicClass(class_sl(n_));
    case Kind::Gm: return MotivicClass(Laurent::lclass(1) - Laurent(Int(1)));
    case Kind::Sigma: {
        Int f = 1;
        for (int i = 2; i <= n_; ++i) f *= i;
        return MotivicClass(f); // constant group scheme on n! points
    }
    case Kind::Monomial: {
        // as a variety: G_m^k x Sigma_k
        Int f = 1;
        for (int i = 2; i <= n_; ++i) f *= i;
        Laurent gm = Laurent::lclass(1) - Laurent(Int(1));
        return MotivicClass(gm.pow(static_cast<unsigned>(n_)) * Laurent(f));
    }
    case Kind::Extension: return *declared_class_;
    case Kind::Mu:
        throw UnsupportedError("the class of mu_n depends on the base field");
    }
    throw std::logic_error("unreachable");
}

MotivicClass b_class(const GroupDescriptor& g) {
    if (!g.special())
        throw NotSpecialError("{B " + g.name() + "}: group is not special; use its dedicated operation");
    switch (g.kind()) {
    case GroupDescriptor::Kind::GL: {
        // {GL_n} = L^{n(n-1)/2} (L-1)(L^2-1)...(L^n-1)
        std::vector<int> fs;
        for (int j = 1; j <= g.n(); ++j) fs.push_back(j);
        return MotivicClass(TateRational(Laurent(Int(1)),
                                         AdmissibleDen::of(g.n() * (g.n() - 1) / 2, fs)));
    }
    case GroupDescriptor::Kind::SL: {
        // {SL_n} = {GL_n}/(L-1)
        std::vector<int> fs;
        for (int j = 2; j <= g.n(); ++j) fs.push_back(j);
        return MotivicClass(TateRational(Laurent(Int(1)),
                                         AdmissibleDen::of(g.n() * (g.n() - 1) / 2, fs)));
    }
    case GroupDescriptor::Kind::Gm:
        return MotivicClass(TateRational(Laurent(Int(1)), AdmissibleDen::of(0, {1})));
    default:
        return MotivicClass(TateRational(Int(1))) / g.group_class();
    }
}

MotivicClass torsor_total(const GroupDescriptor& g, const MotivicClass& base) {
    if (!g.special())
        throw NotSpecialError("torsor formula needs a special structure group, got " + g.name());
    return g.group_class() * base;
}

MotivicClass fibration_class(const MotivicClass& fibre, const MotivicClass& base) {
    return fibre * base;
}

MotivicClass subgroup_bclass(const GroupDescriptor& g, const MotivicClass& quotient) {
    return quotient * b_class(g);
}

MotivicClass b_sigma(int n) {
    if (n == 1) return MotivicClass(Int(1));
    if (n != 2 && n != 3)
        throw UnsupportedError("{B Sigma_n} is only cataloged for n <= 3");
    return MotivicClass(Int(1));
}

MotivicClass b_mu(int n) {
    if (n < 1) throw std::invalid_argument("b_mu needs n >= 1");
    // subgroup formula for mu_n < G_m with quotient G_m: (L-1) * 1/(L-1)
    return subgroup_bclass(GroupDescriptor::gm(),
                           MotivicClass(Laurent::lclass(1) - Laurent(Int(1))));
}

MotivicClass b_monomial(int k) {
    if (k < 1 || k > 3) throw UnsupportedError("b_monomial is only cataloged for k <= 3");
    // (L^k - 1) {B H_k} = sum_{j=0}^{k-1} {B H_j}, {B H_0} = 1
    TateRational prev[3];
    prev[0] = TateRational(Int(1));
    TateRational result;
    for (int m = 1; m <= k; ++m) {
        TateRational rhs(Int(0));
        for (int j = 0; j < m; ++j) rhs += prev[j];
        result = rhs.divided_by_factor(m);
        if (m < 3) prev[m] = result;
    }
    return MotivicClass(result);
}

MotivicClass vector_bundle_class(int rank, const MotivicClass& base) {
    if (rank < 0) throw std::invalid_argument("vector bundle rank must be >= 0");
    return MotivicClass(Laurent::lclass(rank)) * base;
}

std::ostream& operator<<(std::ostream& os, const MotivicClass& x) { return os << x.str(); }

} // namespace motivic
