#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace coalg {

class Scalar;

/// The ground field: either the rationals or a prime field F_p.
///
/// A Field is a small value type; two fields compare equal iff they have the
/// same characteristic.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{0}; }
    /// Throws std::invalid_argument unless p is a prime below 2^62.
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t v) const;
    /// Reduces q into the field; throws std::domain_error if the denominator
    /// vanishes mod p.
    Scalar from_rational(const mpq_class& q) const;

    /// Parses the canonical textual form. For Q: "a" or "a/b" with b > 0 and
    /// gcd(a, b) = 1. For F_p: a decimal residue in [0, p).
    /// Throws std::invalid_argument with a human-readable reason.
    Scalar parse(std::string_view text) const;

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

/// An exact element of a Field.
///
/// Rationals are held in lowest terms with positive denominator (GMP keeps
/// mpq_class canonical); residues live in [0, p). Arithmetic between scalars
/// of different fields throws std::logic_error.
class Scalar {
public:
    Scalar() = default;  // rational zero

    Field field() const;
    bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

    /// Throws std::domain_error on zero.
    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    /// Total order used only for deterministic output: numeric order on Q,
    /// residue order on F_p.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// Canonical text: "a", "-a/b" for Q; decimal residue for F_p.
    std::string to_string() const;

    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

private:
    friend class Field;
    void require_same_field(const Scalar& o) const;

    mpq_class q_;
    std::uint64_t r_ = 0;
    std::uint64_t p_ = 0;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
/// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);
Vector scaled(const Vector& x, const Scalar& a);
std::strong_ordering lex_compare(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

}  // namespace coalg
