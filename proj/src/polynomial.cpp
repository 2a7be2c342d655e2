#include "coalg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "coalg/errors.hpp"

namespace coalg {

namespace {

constexpr std::uint64_t kExhaustiveLimit = 5000;
constexpr unsigned long kTrialDivisionBound = 1000000;
constexpr std::size_t kMaxDivisors = 200000;

Field field_of(const Polynomial& f) {
    if (f.empty()) throw std::invalid_argument("polynomial has no field");
    return f.front().field();
}

Polynomial monic(Polynomial f) {
    trim(f);
    if (f.empty()) return f;
    const Scalar inv = f.back().inverse();
    for (auto& c : f) c *= inv;
    return f;
}

Polynomial mod_poly(const Polynomial& a, const Polynomial& m) { return divide(a, m).second; }

Polynomial pow_mod_poly(Polynomial base, std::uint64_t e, const Polynomial& m) {
    const Field f = field_of(m);
    Polynomial result{f.one()};
    base = mod_poly(base, m);
    while (e) {
        if (e & 1) result = mod_poly(multiply(result, base), m);
        base = mod_poly(multiply(base, base), m);
        e >>= 1;
    }
    return result;
}

// Distinct roots of a squarefree product of linear factors over F_p, p odd.
void equal_degree_roots(const Polynomial& g, std::vector<Scalar>& roots) {
    const Field f = field_of(g);
    const std::uint64_t p = f.characteristic();
    if (degree(g) <= 0) return;
    if (degree(g) == 1) {
        roots.push_back(-g[0] / g[1]);
        return;
    }
    for (std::int64_t a = 1;; ++a) {
        Polynomial shifted{f.from_int(a), f.one()};
        Polynomial h = pow_mod_poly(shifted, (p - 1) / 2, g);
        if (h.empty()) h.push_back(f.zero());
        h[0] -= f.one();
        trim(h);
        Polynomial d = monic_gcd(g, h);
        if (degree(d) > 0 && degree(d) < degree(g)) {
            equal_degree_roots(d, roots);
            equal_degree_roots(divide(g, d).first, roots);
            return;
        }
        if (a > 4096) throw ConsistencyError("root splitting over F_p failed to converge");
    }
}

std::vector<Scalar> roots_mod_p(const Polynomial& f) {
    const Field fld = field_of(f);
    const std::uint64_t p = fld.characteristic();
    std::vector<Scalar> roots;
    if (p < kExhaustiveLimit) {
        for (std::uint64_t x = 0; x < p; ++x) {
            Scalar s = fld.from_int(static_cast<std::int64_t>(x));
            if (evaluate(f, s).is_zero()) roots.push_back(s);
        }
        return roots;
    }
    // gcd(f, x^p - x) is the product of the distinct linear factors of f.
    Polynomial xp = pow_mod_poly(Polynomial{fld.zero(), fld.one()}, p, f);
    xp.resize(std::max<std::size_t>(xp.size(), 2), fld.zero());
    xp[1] -= fld.one();
    trim(xp);
    Polynomial g = monic_gcd(f, xp);
    equal_degree_roots(g, roots);
    return roots;
}

std::vector<mpz_class> divisors_of(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (unsigned long d = 2; d <= kTrialDivisionBound && mpz_class(d) * d <= n; ++d) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d) == 0) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
            n /= d;
            ++e;
        }
        factors.emplace_back(mpz_class(d), e);
    }
    if (n > 1) {
        const bool small = n <= mpz_class(kTrialDivisionBound) * kTrialDivisionBound;
        if (!small && mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw RefusalError("rational root search: cannot factor coefficient " + n.get_str());
        factors.emplace_back(n, 1);
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [q, e] : factors) {
        const std::size_t base = divs.size();
        mpz_class power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= q;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
        }
        if (divs.size() > kMaxDivisors) throw RefusalError("rational root search: too many candidate roots");
    }
    return divs;
}

std::vector<Scalar> roots_over_rationals(const Polynomial& f) {
    const Field fld = field_of(f);
    // Clear denominators.
    mpz_class lcm_den = 1;
    for (const auto& c : f) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : f) ints.push_back(mpz_class(c.rational() * lcm_den));
    std::vector<Scalar> roots;
    std::size_t low = 0;
    while (low < ints.size() && ints[low] == 0) ++low;
    if (low > 0) roots.push_back(fld.zero());
    if (ints.size() - low <= 1) return roots;
    const auto numerators = divisors_of(ints[low]);
    const auto denominators = divisors_of(ints.back());
    for (const auto& u : numerators)
        for (const auto& v : denominators) {
            if (gcd(u, v) != 1) continue;
            for (int sign : {1, -1}) {
                Scalar cand = fld.from_rational(mpq_class(sign * u, v));
                if (evaluate(f, cand).is_zero()) roots.push_back(cand);
            }
        }
    return roots;
}

}  // namespace

void trim(Polynomial& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int degree(const Polynomial& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (!f[i].is_zero()) return static_cast<int>(i);
    return -1;
}

Scalar evaluate(const Polynomial& f, const Scalar& x) {
    Scalar acc = x.field().zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    const Field f = field_of(a);
    Polynomial out(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    trim(r);
    Polynomial d = b;
    trim(d);
    if (d.empty()) throw std::domain_error("polynomial division by zero");
    const Field f = field_of(d);
    if (degree(r) < degree(d)) return {{}, r};
    Polynomial q(r.size() - d.size() + 1, f.zero());
    const Scalar lead_inv = d.back().inverse();
    while (degree(r) >= degree(d)) {
        const std::size_t shift = r.size() - d.size();
        const Scalar c = r.back() * lead_inv;
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
        trim(r);
    }
    trim(q);
    return {q, r};
}

Polynomial monic_gcd(Polynomial a, Polynomial b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Polynomial r = divide(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

std::string format_polynomial(const Polynomial& f) {
    if (degree(f) < 0) return "0";
    std::string s;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        const bool unit = f[i].is_one() && i > 0;
        if (!unit) s += f[i].to_string();
        if (i > 0) s += (unit ? "" : "*") + std::string("x") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
}

LinearSplit split_linear_factors(const Polynomial& f) {
    Polynomial g = monic(f);
    if (g.empty()) throw std::invalid_argument("split_linear_factors: zero polynomial");
    const Field fld = field_of(g);
    LinearSplit out;
    out.roots = fld.is_rational() ? roots_over_rationals(g) : roots_mod_p(g);
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    Polynomial residual = g;
    for (const auto& r : out.roots) residual = divide(residual, Polynomial{-r, fld.one()}).first;
    out.residual = monic(residual);
    return out;
}

}  // namespace coalg
