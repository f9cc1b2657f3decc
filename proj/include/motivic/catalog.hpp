#ifndef MOTIVIC_CATALOG_HPP
#define MOTIVIC_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motivic/symbol.hpp"
#include "motivic/tate.hpp"

namespace motivic {

// Finite formal sum (TateRational coefficient) x (monomial in declared
// symbols); the general element of the localised ring over the catalog.
class MotivicClass {
public:
    MotivicClass() = default;
    MotivicClass(TateRational t) { // NOLINT: implicit by design
        if (!t.is_zero()) terms_.emplace(Monomial::unit(), std::move(t));
    }
    MotivicClass(Laurent p) : MotivicClass(TateRational(std::move(p))) {}
    MotivicClass(Int c) : MotivicClass(TateRational(std::move(c))) {}
    MotivicClass(long c) : MotivicClass(TateRational(c)) {}
    MotivicClass(Monomial m, TateRational c) {
        if (!c.is_zero()) terms_.emplace(std::move(m), std::move(c));
    }

    const std::map<Monomial, TateRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_tate() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    TateRational as_tate() const; // requires is_tate()

    MotivicClass operator+(const MotivicClass& o) const;
    MotivicClass operator-(const MotivicClass& o) const;
    MotivicClass operator*(const MotivicClass& o) const;
    MotivicClass operator-() const;
    bool operator==(const MotivicClass& o) const;
    bool operator!=(const MotivicClass& o) const { return !(*this == o); }

    // division by a pure Tate unit, or by a single declared-invertible
    // symbol monomial with unit coefficient
    MotivicClass operator/(const MotivicClass& o) const;

    Rat count(const Rat& q) const;   // point count; needs symbol counts
    std::optional<int> dim() const;  // nullopt is -infinity
    std::string str() const;

private:
    std::map<Monomial, TateRational> terms_;
};

// Groups of the catalog.  `special` marks members of the class of groups
// whose torsors over every extension field are trivial: GL_n, SL_n, G_m and
// extensions of those; only their classifying classes come from inverting
// the group class.
class GroupDescriptor {
public:
    enum class Kind { GL, SL, Gm, Mu, Monomial, Sigma, Extension };

    static GroupDescriptor gl(int n);
    static GroupDescriptor sl(int n);
    static GroupDescriptor gm();
    static GroupDescriptor mu(int n);
    static GroupDescriptor monomial(int k); // G_m^k semidirect Sigma_k
    static GroupDescriptor sigma(int n);
    // extension of special groups with declared factor classes; special
    // when every factor is
    static GroupDescriptor extension(std::string name, std::vector<GroupDescriptor> factors);
    // caller-declared group with asserted class and specialness (e.g. G_a)
    static GroupDescriptor declared(std::string name, MotivicClass cls, bool special);

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    bool special() const { return special_; }
    const std::string& name() const { return name_; }
    // {G} as a variety class; defined for every kind except Mu (the class of
    // mu_n depends on the base field)
    MotivicClass group_class() const;

private:
    GroupDescriptor() = default;
    Kind kind_ = Kind::Gm;
    int n_ = 1;
    bool special_ = false;
    std::string name_;
    std::optional<MotivicClass> declared_class_;
};

// {B G} = {G}^{-1} for special G; NotSpecialError otherwise (finite and
// monomial groups go through their dedicated operations below).
MotivicClass b_class(const GroupDescriptor& g);

// {X} = {G} {Y} for a torsor X -> Y under special G (or a caller-asserted
// extension of special groups).
MotivicClass torsor_total(const GroupDescriptor& g, const MotivicClass& base);

// {Z} = {F} {Y} for the associated fibration; hypotheses asserted by caller.
MotivicClass fibration_class(const MotivicClass& fibre, const MotivicClass& base);

// {B H} = {G/H} {B G} for a subgroup H of special G.
MotivicClass subgroup_bclass(const GroupDescriptor& g, const MotivicClass& quotient);

// {B Sigma_n} = 1 for n in {2, 3}; UnsupportedError beyond.
MotivicClass b_sigma(int n);

// {B mu_n} = 1 (the quotient G_m/mu_n is G_m again, so the subgroup formula
// gives (L-1) {B G_m}).
MotivicClass b_mu(int n);

// {B(G_m^k semidirect Sigma_k)} for k <= 3, by solving the stratification of
// the linear action on A^k: (L^k - 1) {B H_k} = sum_{j<k} {B H_j}, the j-th
// stratum (vectors with exactly j zeros) being a single orbit whose
// stabiliser is Sigma_{k-j} x H_j.  Note the Sigma-twist on the torus part
// of the stabilisers: the two-zeros stratum of k = 3 has stabiliser
// G_m^2 semidirect Sigma_2, class L/((L-1)^2 (L+1)), not 1/(L-1)^2; the
// groupoid masses over F_q force this.
MotivicClass b_monomial(int k);

// third defining relation: {E} = L^r {X} for a rank-r vector bundle E -> X
MotivicClass vector_bundle_class(int rank, const MotivicClass& base);

std::ostream& operator<<(std::ostream& os, const MotivicClass& x);

} // namespace motivic

#endif
