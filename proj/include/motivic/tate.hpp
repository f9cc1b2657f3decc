#ifndef MOTIVIC_TATE_HPP
#define MOTIVIC_TATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "motivic/cyclotomic.hpp"
#include "motivic/laurent.hpp"

namespace motivic {

// An element L^a * prod (L^{n_i} - 1) of the multiplicative set that defines
// the localised ring; the empty product is 1.
struct AdmissibleDen {
    int l_power = 0;          // >= 0
    std::vector<int> factors; // each n >= 1, sorted ascending, with multiplicity

    static AdmissibleDen one() { return {}; }
    static AdmissibleDen of(int l_power, std::vector<int> factors);

    bool is_one() const { return l_power == 0 && factors.empty(); }
    Laurent expanded() const;
    int degree() const; // degree of the expansion
    Rat eval(const Rat& q) const; // throws PoleError when a factor vanishes
    std::string str() const;
    bool operator==(const AdmissibleDen& o) const = default;
};

// num / den with den in the admissible multiplicative set; the computable
// model of the localised Grothendieck ring.  Kept canonical: the L-power and
// whole cyclotomic factors common to num and den are divided out (cyclotomic
// factors are removed only while the remaining multiset still assembles into
// a product of (L^n - 1)'s, so the denominator stays admissible).  Equality
// is decided by cross-multiplication, independent of the stored form.
class TateRational {
public:
    TateRational() = default;
    TateRational(Laurent num) : num_(std::move(num)) {} // NOLINT: implicit by design
    TateRational(Int c) : num_(Laurent(std::move(c))) {}
    TateRational(long c) : num_(Laurent(Int(c))) {}
    TateRational(Laurent num, AdmissibleDen den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalise();
    }

    const Laurent& num() const { return num_; }
    const AdmissibleDen& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    TateRational operator+(const TateRational& o) const;
    TateRational operator-(const TateRational& o) const;
    TateRational operator*(const TateRational& o) const;
    TateRational operator-() const;
    TateRational& operator+=(const TateRational& o) { return *this = *this + o; }
    TateRational& operator-=(const TateRational& o) { return *this = *this - o; }
    TateRational& operator*=(const TateRational& o) { return *this = *this * o; }

    // value equality by cross-multiplication
    bool operator==(const TateRational& o) const;
    bool operator!=(const TateRational& o) const { return !(*this == o); }

    // 1/x; requires num to pass is_invertible_localised, else NotInvertibleError
    TateRational inverse() const;
    TateRational operator/(const TateRational& o) const { return *this * o.inverse(); }

    // divide by a single admissible factor (L^n - 1), resp. by L^k
    TateRational divided_by_factor(int n) const;
    TateRational divided_by_l(int k) const;

    // specialisation L -> q; exact; PoleError when a denominator factor
    // vanishes (any integer q >= 2 is safe)
    Rat eval(const Rat& q) const;

    // virtual dimension: deg num - deg den; nullopt is -infinity (the zero class)
    std::optional<int> dim() const;

    std::string str() const;

private:
    void canonicalise();

    Laurent num_;
    AdmissibleDen den_;
};

std::ostream& operator<<(std::ostream& os, const TateRational& x);

} // namespace motivic

#endif
