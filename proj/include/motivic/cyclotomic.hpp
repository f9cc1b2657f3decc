#ifndef MOTIVIC_CYCLOTOMIC_HPP
#define MOTIVIC_CYCLOTOMIC_HPP

#include <optional>
#include <vector>

#include "motivic/laurent.hpp"

namespace motivic {

// Phi_n(L), cached; n >= 1
Laurent cyclotomic(int n);

// Moebius function
int moebius(int n);

// f = sign * L^l_power * prod Phi_{n_i}(L); the units of the localised ring.
struct UnitFactorization {
    int sign = 1;
    int l_power = 0;
    std::vector<int> cyclotomics; // sorted ascending, with multiplicity

    Laurent reconstruct() const;
};

// Decision procedure for membership in the unit group of the localised ring.
// Succeeds exactly when f is +-L^a times a product of cyclotomic polynomials;
// a definite negative answer is nullopt, not an error.  f must be nonzero.
//
// Termination bound: phi(n) >= sqrt(n/2), so any cyclotomic factor of f has
// index n <= 2*deg(f)^2 and trial division over that range is exhaustive.
std::optional<UnitFactorization> is_invertible_localised(const Laurent& f);

} // namespace motivic

#endif
