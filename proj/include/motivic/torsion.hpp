#ifndef MOTIVIC_TORSION_HPP
#define MOTIVIC_TORSION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "motivic/numeric.hpp"

namespace motivic {

// Element of the torsion Grothendieck group of finitely generated abelian
// groups: free on 1 = {Z} and alpha_{q,n} = {Z/q^n}, q prime, n >= 1.
class TorsionModuleClass {
public:
    using AlphaKey = std::pair<int, int>; // (prime q, exponent n)

    TorsionModuleClass() = default;
    TorsionModuleClass(Int unit) : unit_(std::move(unit)) {} // NOLINT
    TorsionModuleClass(long unit) : unit_(unit) {}
    static TorsionModuleClass alpha(int q, int n, Int mult = 1);

    const Int& unit() const { return unit_; }
    const std::map<AlphaKey, Int>& alphas() const { return alphas_; }
    bool is_zero() const { return unit_ == 0 && alphas_.empty(); }

    TorsionModuleClass operator+(const TorsionModuleClass& o) const;
    TorsionModuleClass operator-() const;
    TorsionModuleClass scaled(const Int& c) const;
    bool operator==(const TorsionModuleClass& o) const = default;

    // alpha_{q,m} alpha_{q',n} = 0 for q != q' and alpha_{q,min(m,n)} (1 + t^{-1})
    // for q = q'; the first component sits in the product degree, the second
    // one degree lower.
    std::pair<TorsionModuleClass, TorsionModuleClass> mul_split(const TorsionModuleClass& o) const;

    std::string str() const;

private:
    Int unit_ = 0;
    std::map<AlphaKey, Int> alphas_;
};

// Graded element sum_i c_i t^i of the torsion ring, support bounded above,
// optional truncation floor (grades below it unknown).
class GradedTorsionSeries {
public:
    GradedTorsionSeries() = default;
    static GradedTorsionSeries term(int degree, TorsionModuleClass c);
    static GradedTorsionSeries zero_to_precision(int floor);

    const std::map<int, TorsionModuleClass>& grades() const { return grades_; }
    std::optional<int> floor() const { return floor_; }
    TorsionModuleClass grade(int i) const;
    std::optional<int> top_degree() const;

    GradedTorsionSeries operator+(const GradedTorsionSeries& o) const;
    GradedTorsionSeries operator-() const;
    bool operator==(const GradedTorsionSeries& o) const {
        return grades_ == o.grades_ && floor_ == o.floor_;
    }
    bool operator!=(const GradedTorsionSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    friend GradedTorsionSeries torsion_mul(const GradedTorsionSeries&, const GradedTorsionSeries&);
    std::map<int, TorsionModuleClass> grades_;
    std::optional<int> floor_;

    void prune();
};

// Graded convolution through the alpha-table; floors propagate like series
// precision.
GradedTorsionSeries torsion_mul(const GradedTorsionSeries& a, const GradedTorsionSeries& b);

// Integral cohomology data: per degree, a betti rank and a torsion multiset
// of (prime, exponent) with multiplicities.
struct CohomologyDescriptor {
    struct DegreeData {
        Int rank = 0;
        std::map<std::pair<int, int>, int> torsion; // (q, n) -> multiplicity
    };
    std::map<int, DegreeData> degrees;

    CohomologyDescriptor& set_rank(int degree, Int rank);
    CohomologyDescriptor& add_torsion(int degree, int q, int n, int mult = 1);

    static CohomologyDescriptor point();
    static CohomologyDescriptor projective_line();

    // disjoint union: degreewise direct sum
    CohomologyDescriptor operator+(const CohomologyDescriptor& o) const;

    // manifest form: {"0": {"rank": 1}, "3": {"rank": 0, "torsion": [[2,1],[2,1]]}}
    static CohomologyDescriptor parse(const std::string& json_text);
};

// Refined Euler characteristic at descriptor level: degree i carries
// b_i * 1 + the alpha of each torsion summand.
GradedTorsionSeries chi_g(const CohomologyDescriptor& x);

// multiplication by {Z(m)[2m]}: shift every degree by -2m
GradedTorsionSeries tate_twist(const GradedTorsionSeries& x, int m);

// (1 + s + ... + s^n) chi_g(x) with s = t^2: what chi_g of a Zariski-locally
// trivial P^n-bundle over x would be.
GradedTorsionSeries projective_bundle_expected(const CohomologyDescriptor& x, int n);

// true when chi_g(P) differs from the expected series, certifying
// {P} != {P^n} {X} in the completed ring
bool torsion_obstruction(const CohomologyDescriptor& X, const CohomologyDescriptor& P, int n);

std::ostream& operator<<(std::ostream& os, const GradedTorsionSeries& x);

} // namespace motivic

#endif
