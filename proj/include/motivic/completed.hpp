#ifndef MOTIVIC_COMPLETED_HPP
#define MOTIVIC_COMPLETED_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "motivic/symbol.hpp"
#include "motivic/tate.hpp"

namespace motivic {

// Caller-supplied assertion uwt_n(x) <= C|n|^d + D for every weight n of the
// full series, not just the represented part.  Certified bounds are
// conditional on it; it is never inferred from a truncation.
struct GrowthCertificate {
    Int C = 0;
    int d = 0;
    Int D = 0;
};

// Element of the dimension-filtered completion: a Laurent series in L^{-1}
// whose coefficients live in the symbol ring, with an explicit precision
// floor.  Terms at index >= floor are exact; below the floor nothing is
// known.  No floor means the element is exact.
class CompletedClass {
public:
    CompletedClass() = default; // exact zero

    static CompletedClass exact_zero() { return {}; }
    static CompletedClass zero_to_precision(int floor);
    static CompletedClass term(int index, SymPoly c);
    static CompletedClass from_laurent(const Laurent& p);

    const std::map<int, SymPoly>& coeffs() const { return coeffs_; }
    std::optional<int> floor() const { return floor_; }
    bool is_exact() const { return !floor_.has_value(); }
    SymPoly coeff(int k) const; // zero when absent (known-zero if k >= floor)
    std::optional<int> top_index() const; // largest stored index

    // re-truncate to a shallower floor (or attach one to an exact element)
    CompletedClass truncated(int floor) const;

    CompletedClass operator+(const CompletedClass& o) const;
    CompletedClass operator-(const CompletedClass& o) const;
    CompletedClass operator*(const CompletedClass& o) const;
    CompletedClass operator-() const;
    bool operator==(const CompletedClass& o) const {
        return coeffs_ == o.coeffs_ && floor_ == o.floor_;
    }

    // virtual dimension: max over stored terms of index + coefficient
    // dimension.  nullopt is -infinity (exact zero); PrecisionExhaustedError
    // when every represented coefficient vanishes but the element is only
    // known to a finite floor.
    std::optional<int> dim() const;

    // "c_top*L^top + ... + c_floor*L^floor + O(L^(floor-1))"
    std::string str() const;

private:
    std::map<int, SymPoly> coeffs_;
    std::optional<int> floor_;

    void prune();
};

// Laurent expansion of x in L^{-1}, exact down to the given floor.  The
// result is exact (floorless) when the denominator is a pure L-power.
CompletedClass expand(const TateRational& x, int floor);

// value = sum of represented c_k q^k;  bound >= |sum of the unrepresented
// tail| under the certificate, by the closed-form majorisation
//   sum_{k<=K} (C(2|k|)^d + D) q^k
//     <= C 2^d q^K 2^d (|K|^d q/(q-1) + S_d(1/q)) + D q^K q/(q-1),
// S_d exact via Eulerian numbers, all doubled for the trace-tail estimate
// 2(C|n|^d + D) q^{n/2} applied at weight n = 2k.  Exact elements get
// bound 0.  Requires integer q >= 2.
std::pair<Rat, Rat> count_truncated(const CompletedClass& x, const Int& q,
                                    const GrowthCertificate& cert);

// A certificate valid for the full series of a TateRational, from the
// composition-count bound: with r denominator factors, S the sum of |num|
// coefficients and M the largest exponent shift, the coefficient at L^k is
// at most S(|k|+M)^{r-1}, so uwt_n <= S 2^{r-1} |n|^{r-1} + S 2^{r-1} M^{r-1}.
GrowthCertificate derive_certificate(const TateRational& x);

// uwt of a completed class: multiplicity of weight 2k+j collects, over
// stored terms c * m * L^k, |c| times the weight-j multiplicity of the
// monomial m.  Truncated at 2*floor plus the represented symbols' weight
// spread (below that, unknown terms could still contribute).
WeightSeries weight_series(const CompletedClass& x);

std::ostream& operator<<(std::ostream& os, const CompletedClass& x);

} // namespace motivic

#endif
