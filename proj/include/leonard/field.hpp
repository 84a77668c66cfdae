#ifndef LEONARD_FIELD_HPP
#define LEONARD_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace leonard {

/// Which field a FieldSpec describes.
enum class FieldKind { Rationals, PrimeField, BinaryField };

/// Description of an exact field: the rationals Q, a prime field GF(p)
/// with p < 2^31, or a binary extension field GF(2^k) with 1 <= k <= 16.
///
/// A BinaryField is given by an irreducible modulus over GF(2), encoded
/// as a bit pattern: bit i of modulus() is the coefficient of x^i, so
/// x^2+x+1 is 0b111 = 7.  Primality and irreducibility are verified at
/// construction.
class FieldSpec {
public:
    static FieldSpec rationals();
    static FieldSpec prime_field(std::int64_t p);
    static FieldSpec binary_field(int k, std::uint32_t modulus);

    FieldKind kind() const { return kind_; }
    std::int64_t p() const { return p_; }
    int k() const { return k_; }
    std::uint32_t modulus() const { return modulus_; }

    /// 0 for Q, p for GF(p), 2 for GF(2^k).
    std::int64_t characteristic() const;

    /// Number of elements; 0 means infinite (Q).
    std::int64_t order() const;

    bool operator==(const FieldSpec& other) const;
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

    std::string description() const;

private:
    FieldSpec() = default;
    FieldKind kind_ = FieldKind::Rationals;
    std::int64_t p_ = 0;        // PrimeField only
    int k_ = 0;                 // BinaryField only
    std::uint32_t modulus_ = 0; // BinaryField only
};

/// An element of one of the supported fields, always in canonical form:
/// reduced fraction with positive denominator (Q), residue in [0,p)
/// (GF(p)), or bit-polynomial of degree < k (GF(2^k)).  Two elements are
/// equal exactly when their representations coincide.
///
/// Elements are immutable values; all operations are pure and exact.
/// Mixing elements of different fields throws std::invalid_argument;
/// division by zero throws std::domain_error.
class FieldElement {
public:
    FieldElement(); // zero of Q; real uses construct via a FieldSpec

    static FieldElement zero(const FieldSpec& field);
    static FieldElement one(const FieldSpec& field);

    /// Integer image n * 1 in the field (reduced mod char for finite fields).
    static FieldElement from_integer(const FieldSpec& field, std::int64_t n);
    static FieldElement from_integer(const FieldSpec& field, const mpz_class& n);

    /// Rational a/b in Q (throws for finite fields).
    static FieldElement from_rational(const FieldSpec& field,
                                      const mpz_class& num, const mpz_class& den);

    /// Raw canonical value: residue for GF(p), bit pattern for GF(2^k).
    static FieldElement from_raw(const FieldSpec& field, std::uint64_t raw);

    /// Parses the external string form: "a" or "a/b" over Q, a decimal
    /// integer over the finite fields (residue / polynomial bits).
    static FieldElement from_string(const FieldSpec& field, const std::string& text);

    const FieldSpec& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator/(const FieldElement& other) const;
    FieldElement operator-() const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    FieldElement inverse() const;

    /// x^e for any integer exponent (negative requires x != 0).
    FieldElement pow(std::int64_t e) const;

    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    /// Canonical string form, matching from_string.
    std::string str() const;

    /// Rational value (Q elements only).
    const mpq_class& rational_value() const;
    /// Residue / bit pattern (finite fields only).
    std::uint64_t raw_value() const;

    /// A square root in the field if one exists.  When two roots exist the
    /// canonical one is returned: nonnegative over Q, the smaller residue
    /// over GF(p).  Over GF(2^k) the root is unique.
    std::optional<FieldElement> sqrt() const;

private:
    FieldSpec field_;
    mpq_class rat_;          // Rationals
    std::uint64_t fin_ = 0;  // PrimeField residue or BinaryField bits
};

/// 0 for Q, p for GF(p), 2 for GF(2^k).
std::int64_t field_char(const FieldSpec& spec);

/// Square root wrapper matching the element method.
std::optional<FieldElement> field_sqrt(const FieldElement& x);

/// Roots in the field of a*x^2 + b*x + c = 0 (a != 0), sorted
/// canonically, without multiplicity.  Over GF(2^k) the roots are found
/// by scanning the field; elsewhere by discriminant and field_sqrt.
std::vector<FieldElement> solve_quadratic(const FieldElement& a,
                                          const FieldElement& b,
                                          const FieldElement& c);

} // namespace leonard

#endif
