#ifndef MOTIVIC_LAURENT_HPP
#define MOTIVIC_LAURENT_HPP

#include <map>
#include <optional>
#include <string>

#include "motivic/numeric.hpp"

namespace motivic {

// Integer Laurent polynomial in the Lefschetz class L.  Stored sparsely,
// exponent -> coefficient, no zero coefficients; the stored form is canonical.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(Int c) {
        if (c != 0) coeffs_[0] = std::move(c);
    }
    explicit Laurent(long c) : Laurent(Int(c)) {}

    static Laurent term(Int c, int k) {
        Laurent r;
        if (c != 0) r.coeffs_[k] = std::move(c);
        return r;
    }
    // L^k
    static Laurent lclass(int k = 1) { return term(1, k); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    const std::map<int, Int>& terms() const { return coeffs_; }
    size_t term_count() const { return coeffs_.size(); }

    // top exponent / lowest exponent; both require a nonzero polynomial
    int degree() const;
    int valuation() const;
    const Int& coeff(int k) const;
    Int leading() const;
    Int content() const; // gcd of coefficients, 0 for the zero polynomial
    bool is_polynomial() const { return coeffs_.empty() || valuation() >= 0; }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent shifted(int k) const; // multiply by L^k
    Laurent pow(unsigned e) const;

    // exact evaluation at L = q; q must be nonzero when negative exponents occur
    Rat eval(const Rat& q) const;
    Int eval_int(const Int& q) const; // requires a polynomial (valuation >= 0)

    // "L^4 - L^3 - L^2 + L"; terms in decreasing exponent
    std::string str() const;

private:
    std::map<int, Int> coeffs_;
};

// c with a = b*c when the remainder is zero, otherwise nothing.
std::optional<Laurent> try_divide(const Laurent& a, const Laurent& b);
// Same but throwing NotDivisibleError; b must be nonzero.
Laurent divide_exact(const Laurent& a, const Laurent& b);

// {GL_n} = (L^n - 1)(L^n - L)...(L^n - L^{n-1}), n >= 1
Laurent class_gl(int n);
// {SL_n} = {GL_n} / (L - 1), the determinant torsor
Laurent class_sl(int n);
// {P^n} = 1 + L + ... + L^n
Laurent class_projective_space(int n);

std::ostream& operator<<(std::ostream& os, const Laurent& p);

} // namespace motivic

#endif
