#include "motivic/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace motivic {

namespace {

std::vector<int> divisors_of(int n) {
    std::vector<int> d;
    for (int i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    std::sort(d.begin(), d.end());
    return d;
}

// totients 1..n by sieve
std::vector<int> totient_sieve(int n) {
    std::vector<int> phi(n + 1);
    for (int i = 0; i <= n; ++i) phi[i] = i;
    for (int i = 2; i <= n; ++i)
        if (phi[i] == i) // i prime
            for (int j = i; j <= n; j += i) phi[j] -= phi[j] / i;
    return phi;
}

// Phi_n(2) = prod_{d|n} (2^d - 1)^{mu(n/d)}, an exact integer; cheap
// divisibility filter for trial division.
Int cyclotomic_at_2(int n) {
    if (n == 1) return 1; // 2 - 1
    Int num = 1, den = 1;
    for (int d : divisors_of(n)) {
        int mu = moebius(n / d);
        if (mu == 0) continue;
        Int v = int_pow(2, static_cast<unsigned>(d)) - 1;
        (mu > 0 ? num : den) *= v;
    }
    return num / den; // exact: the product is a monic polynomial value
}

} // namespace

int moebius(int n) {
    if (n < 1) throw std::invalid_argument("moebius requires n >= 1");
    int r = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    if (n > 1) r = -r;
    return r;
}

Laurent cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic requires n >= 1");
    static std::map<int, Laurent> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (L^n - 1) / prod_{d|n, d<n} Phi_d, computed bottom-up
    std::function<Laurent(int)> get = [&](int m) -> Laurent {
        auto jt = cache.find(m);
        if (jt != cache.end()) return jt->second;
        Laurent num = Laurent::lclass(m) - Laurent(Int(1));
        for (int d : divisors_of(m))
            if (d < m) num = divide_exact(num, get(d));
        cache.emplace(m, num);
        return num;
    };
    return get(n);
}

Laurent UnitFactorization::reconstruct() const {
    Laurent r = Laurent::term(sign, l_power);
    for (int n : cyclotomics) r = r * cyclotomic(n);
    return r;
}

std::optional<UnitFactorization> is_invertible_localised(const Laurent& f) {
    if (f.is_zero()) throw std::invalid_argument("is_invertible_localised on 0");

    UnitFactorization u;
    u.l_power = f.valuation();
    Laurent rem = f.shifted(-u.l_power);
    if (rem.leading() < 0) {
        u.sign = -1;
        rem = -rem;
    }
    if (rem.is_one()) return u;
    if (rem.degree() == 0) return std::nullopt; // content > 1
    if (rem.content() != 1) return std::nullopt;

    const int bound = 2 * rem.degree() * rem.degree();
    const std::vector<int> phi = totient_sieve(bound);
    Int rem2 = rem.eval_int(2);

    for (int n = 1; n <= bound && !rem.is_one(); ++n) {
        if (phi[n] > rem.degree()) continue;
        // a true factor Phi_n forces Phi_n(2) | rem(2)
        Int f2 = cyclotomic_at_2(n);
        if (rem2 != 0 && rem2 % f2 != 0) continue;
        const Laurent& cyc = cyclotomic(n);
        while (true) {
            auto q = try_divide(rem, cyc);
            if (!q) break;
            rem = std::move(*q);
            u.cyclotomics.push_back(n);
            rem2 = rem.eval_int(2);
            if (rem.is_one() || phi[n] > rem.degree()) break;
        }
    }
    if (!rem.is_one()) return std::nullopt;
    std::sort(u.cyclotomics.begin(), u.cyclotomics.end());
    return u;
}

} // namespace motivic
