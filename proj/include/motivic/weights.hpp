#ifndef MOTIVIC_WEIGHTS_HPP
#define MOTIVIC_WEIGHTS_HPP

#include <map>
#include <optional>
#include <string>

#include "motivic/laurent.hpp"

namespace motivic {

// Weight multiplicity series: weight -> multiplicity >= 0, support bounded
// above, as a Laurent series in t^{-1}.  An optional floor marks truncation
// (multiplicities below it are unknown); an optional closed form phi(t)/(t-1)^d
// records the series it was expanded from.
//
// Everything here is the canonical upper-bound surrogate computed from the
// L-normal form: the weight-2k multiplicity of a class is |coefficient of
// L^k| and odd weights vanish.  That is an upper bound for the minimal-
// representative weight function, compatible with subadditivity and
// submultiplicativity, which is all the growth certificates need.
class WeightSeries {
public:
    struct ClosedForm {
        Laurent phi; // polynomial in t, non-negative coefficients
        int d = 0;
    };

    WeightSeries() = default;

    static WeightSeries term(int weight, Int mult);
    // expansion of phi(t)/(t-1)^d in t^{-1} down to t^floor (inclusive)
    static WeightSeries closed_form(const Laurent& phi, int d, int floor);

    const std::map<int, Int>& mult() const { return mult_; }
    Int at(int weight) const;
    std::optional<int> floor() const { return floor_; }
    const std::optional<ClosedForm>& closed() const { return closed_; }
    bool is_zero() const { return mult_.empty(); }
    std::optional<int> top() const; // largest weight with nonzero multiplicity

    WeightSeries& set_floor(std::optional<int> f);
    WeightSeries shifted(int by) const; // multiply by t^by

    // coefficientwise sum / convolution; truncation floors propagate like
    // series precision (add: max of floors; mul: max(fa+top_b, fb+top_a))
    WeightSeries operator+(const WeightSeries& o) const;
    WeightSeries operator*(const WeightSeries& o) const;
    bool operator==(const WeightSeries& o) const {
        return mult_ == o.mult_ && floor_ == o.floor_;
    }

    // every represented multiplicity of this <= the matching one of o, down
    // to this's truncation
    bool dominated_by_series(const WeightSeries& o) const;

    std::string str() const;

private:
    std::map<int, Int> mult_;
    std::optional<int> floor_;
    std::optional<ClosedForm> closed_;
};

// uwt(x, t) of a Laurent polynomial in L: multiplicity |c_k| at weight 2k.
WeightSeries weight_series(const Laurent& x);

// coefficientwise comparison against the expansion of phi(t)/(t-1)^d, down to
// ws's truncation; phi must have non-negative coefficients
bool dominated_by(const WeightSeries& ws, const Laurent& phi, int d);

std::ostream& operator<<(std::ostream& os, const WeightSeries& ws);

} // namespace motivic

#endif
