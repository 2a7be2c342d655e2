#include "coalg/scalar.hpp"

#include <stdexcept>

namespace coalg {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
    mpz_class m = z % mpz_class(std::to_string(p));
    if (m < 0) m += mpz_class(std::to_string(p));
    return std::stoull(m.get_str());
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 62))
        throw std::invalid_argument("prime modulus out of range: " + std::to_string(p));
    mpz_class z(std::to_string(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
    return Field{p};
}

Scalar Field::zero() const {
    Scalar s;
    s.p_ = p_;
    return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
    Scalar s;
    s.p_ = p_;
    if (p_ == 0) {
        s.q_ = mpq_class(mpz_class(std::to_string(v)));
    } else {
        auto m = static_cast<__int128>(v) % static_cast<__int128>(p_);
        if (m < 0) m += p_;
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Field::from_rational(const mpq_class& q) const {
    Scalar s;
    s.p_ = p_;
    if (p_ == 0) {
        s.q_ = q;
        s.q_.canonicalize();
        return s;
    }
    std::uint64_t num = mpz_mod_u64(q.get_num(), p_);
    std::uint64_t den = mpz_mod_u64(q.get_den(), p_);
    if (den == 0) throw std::domain_error("denominator vanishes in " + name());
    s.r_ = mul_mod(num, pow_mod(den, p_ - 2, p_), p_);
    return s;
}

Scalar Field::parse(std::string_view text) const {
    Scalar s;
    s.p_ = p_;
    if (p_ != 0) {
        if (!all_digits(text))
            throw std::invalid_argument("malformed residue '" + std::string(text) + "'");
        mpz_class z{std::string(text)};
        if (z >= mpz_class(std::to_string(p_)))
            throw std::invalid_argument("residue '" + std::string(text) + "' not in [0, " +
                                        std::to_string(p_) + ")");
        s.r_ = std::stoull(z.get_str());
        return s;
    }
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string{num});
    mpz_class d(std::string{den});
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (gcd(n, d) != 1 && n != 0)
        throw std::invalid_argument("'" + std::string(text) + "' not in lowest terms");
    if (n == 0 && d != 1)
        throw std::invalid_argument("'" + std::string(text) + "' not in lowest terms");
    s.q_ = mpq_class(negative ? mpz_class(-n) : n, d);
    s.q_.canonicalize();
    return s;
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Field Scalar::field() const { return Field{p_}; }

void Scalar::require_same_field(const Scalar& o) const {
    if (p_ != o.p_) throw std::logic_error("arithmetic between scalars of different fields");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s = *this;
    if (p_ == 0)
        s.q_ = 1 / q_;
    else
        s.r_ = pow_mod(r_, p_ - 2, p_);
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_ == 0)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : p_ - r_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(o);
    if (p_ == 0) {
        q_ += o.q_;
    } else {
        r_ += o.r_;
        if (r_ >= p_) r_ -= p_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_field(o);
    if (p_ == 0)
        q_ -= o.q_;
    else
        r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + (p_ - o.r_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(o);
    if (p_ == 0)
        q_ *= o.q_;
    else
        r_ = mul_mod(r_, o.r_, p_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return false;
    return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    if (a.p_ != 0) return a.r_ <=> b.r_;
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Scalar::to_string() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
    Vector v = zero_vector(f, n);
    v.at(i) = f.one();
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Scalar dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    if (a.empty()) return Scalar{};
    Scalar s = a.front().field().zero();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
    if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

Vector scaled(const Vector& x, const Scalar& a) {
    Vector y = x;
    for (auto& v : y) v *= a;
    return y;
}

std::strong_ordering lex_compare(const Vector& a, const Vector& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        auto c = a[i] <=> b[i];
        if (c != 0) return c;
    }
    return a.size() <=> b.size();
}

std::string to_string(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

}  // namespace coalg
