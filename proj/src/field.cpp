#include "leonard/field.hpp"

#include <algorithm>

namespace leonard {

namespace {

bool is_prime_u64(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

int gf2_degree(std::uint64_t bits) {
    int d = -1;
    while (bits) { ++d; bits >>= 1; }
    return d;
}

// Remainder of a modulo b in GF(2)[x].
std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b) {
    const int db = gf2_degree(b);
    int da = gf2_degree(a);
    while (da >= db) {
        a ^= b << (da - db);
        da = gf2_degree(a);
    }
    return a;
}

bool gf2_irreducible(std::uint64_t f, int k) {
    if (gf2_degree(f) != k) return false;
    if (k == 1) return true;
    // No factor of degree 1..k/2 survives; the candidate pool is tiny.
    for (int m = 1; 2 * m <= k; ++m) {
        for (std::uint64_t g = (1ull << m); g < (2ull << m); ++g) {
            if (gf2_mod(f, g) == 0) return false;
        }
    }
    return true;
}

// Carry-less multiply then reduce; operands have degree < k <= 16.
std::uint64_t gf2k_mul(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        a <<= 1;
        b >>= 1;
    }
    return gf2_mod(acc, modulus);
}

std::uint64_t gf2k_pow(std::uint64_t a, std::uint64_t e, std::uint64_t modulus) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = gf2k_mul(r, a, modulus);
        a = gf2k_mul(a, a, modulus);
        e >>= 1;
    }
    return r;
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = static_cast<std::int64_t>((__int128)r * a % p);
        a = static_cast<std::int64_t>((__int128)a * a % p);
        e >>= 1;
    }
    return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t; t = new_t; new_t = tmp;
        tmp = r - q * new_r; r = new_r; new_r = tmp;
    }
    if (r != 1) throw std::domain_error("element not invertible mod p");
    return ((t % p) + p) % p;
}

// Tonelli-Shanks with a deterministic scan for the non-residue.
std::optional<std::int64_t> mod_sqrt(std::int64_t n, std::int64_t p) {
    n %= p;
    if (n == 0) return 0;
    if (p == 2) return n;
    if (mod_pow(n, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) {
        std::int64_t r = mod_pow(n, (p + 1) / 4, p);
        return std::min(r, p - r);
    }
    std::int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    std::int64_t z = 2;
    while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
    std::int64_t m = s;
    std::int64_t c = mod_pow(z, q, p);
    std::int64_t t = mod_pow(n, q, p);
    std::int64_t r = mod_pow(n, (q + 1) / 2, p);
    while (t != 1) {
        std::int64_t i = 0, tt = t;
        while (tt != 1) { tt = static_cast<std::int64_t>((__int128)tt * tt % p); ++i; }
        std::int64_t b = c;
        for (std::int64_t j = 0; j < m - i - 1; ++j)
            b = static_cast<std::int64_t>((__int128)b * b % p);
        m = i;
        c = static_cast<std::int64_t>((__int128)b * b % p);
        t = static_cast<std::int64_t>((__int128)t * c % p);
        r = static_cast<std::int64_t>((__int128)r * b % p);
    }
    return std::min(r, p - r);
}

} // namespace

FieldSpec FieldSpec::rationals() {
    FieldSpec s;
    s.kind_ = FieldKind::Rationals;
    return s;
}

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (p < 2 || p >= (1ll << 31))
        throw std::invalid_argument("prime field modulus out of range");
    if (!is_prime_u64(p))
        throw std::invalid_argument("prime field modulus is not prime");
    FieldSpec s;
    s.kind_ = FieldKind::PrimeField;
    s.p_ = p;
    return s;
}

FieldSpec FieldSpec::binary_field(int k, std::uint32_t modulus) {
    if (k < 1 || k > 16)
        throw std::invalid_argument("binary field degree must be in 1..16");
    if (!gf2_irreducible(modulus, k))
        throw std::invalid_argument("binary field modulus is not irreducible of the stated degree");
    FieldSpec s;
    s.kind_ = FieldKind::BinaryField;
    s.k_ = k;
    s.modulus_ = modulus;
    return s;
}

std::int64_t FieldSpec::characteristic() const {
    switch (kind_) {
        case FieldKind::Rationals: return 0;
        case FieldKind::PrimeField: return p_;
        case FieldKind::BinaryField: return 2;
    }
    return 0;
}

std::int64_t FieldSpec::order() const {
    switch (kind_) {
        case FieldKind::Rationals: return 0;
        case FieldKind::PrimeField: return p_;
        case FieldKind::BinaryField: return std::int64_t(1) << k_;
    }
    return 0;
}

bool FieldSpec::operator==(const FieldSpec& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case FieldKind::Rationals: return true;
        case FieldKind::PrimeField: return p_ == other.p_;
        case FieldKind::BinaryField: return k_ == other.k_ && modulus_ == other.modulus_;
    }
    return false;
}

std::string FieldSpec::description() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
        case FieldKind::BinaryField: return "GF(2^" + std::to_string(k_) + ")";
    }
    return "?";
}

FieldElement::FieldElement() : field_(FieldSpec::rationals()), rat_(0) {}

FieldElement FieldElement::zero(const FieldSpec& field) {
    FieldElement e;
    e.field_ = field;
    e.rat_ = 0;
    e.fin_ = 0;
    return e;
}

FieldElement FieldElement::one(const FieldSpec& field) {
    FieldElement e = zero(field);
    if (field.kind() == FieldKind::Rationals)
        e.rat_ = 1;
    else
        e.fin_ = 1;
    return e;
}

FieldElement FieldElement::from_integer(const FieldSpec& field, std::int64_t n) {
    return from_integer(field, mpz_class(static_cast<long>(n)));
}

FieldElement FieldElement::from_integer(const FieldSpec& field, const mpz_class& n) {
    FieldElement e = zero(field);
    switch (field.kind()) {
        case FieldKind::Rationals:
            e.rat_ = mpq_class(n);
            break;
        case FieldKind::PrimeField: {
            mpz_class r = n % field.p();
            if (r < 0) r += field.p();
            e.fin_ = r.get_ui();
            break;
        }
        case FieldKind::BinaryField: {
            mpz_class r = n % 2;
            e.fin_ = (r != 0) ? 1 : 0;
            break;
        }
    }
    return e;
}

FieldElement FieldElement::from_rational(const FieldSpec& field,
                                         const mpz_class& num, const mpz_class& den) {
    if (field.kind() != FieldKind::Rationals)
        throw std::invalid_argument("rational literal over a finite field");
    if (den == 0) throw std::domain_error("zero denominator");
    FieldElement e = zero(field);
    e.rat_ = mpq_class(num) / mpq_class(den);
    e.rat_.canonicalize();
    return e;
}

FieldElement FieldElement::from_raw(const FieldSpec& field, std::uint64_t raw) {
    FieldElement e = zero(field);
    switch (field.kind()) {
        case FieldKind::Rationals:
            throw std::invalid_argument("raw value over Q");
        case FieldKind::PrimeField:
            if (raw >= static_cast<std::uint64_t>(field.p()))
                throw std::invalid_argument("residue out of range");
            e.fin_ = raw;
            break;
        case FieldKind::BinaryField:
            if (raw >> field.k())
                throw std::invalid_argument("bit pattern out of range");
            e.fin_ = raw;
            break;
    }
    return e;
}

FieldElement FieldElement::from_string(const FieldSpec& field, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty field element literal");
    if (field.kind() == FieldKind::Rationals) {
        mpq_class v;
        if (v.set_str(text, 10) != 0)
            throw std::invalid_argument("bad rational literal: " + text);
        if (v.get_den() == 0) throw std::domain_error("zero denominator: " + text);
        v.canonicalize();
        FieldElement e = zero(field);
        e.rat_ = v;
        return e;
    }
    mpz_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("bad field element literal: " + text);
    if (field.kind() == FieldKind::PrimeField) {
        mpz_class r = v % field.p();
        if (r < 0) r += field.p();
        return from_raw(field, r.get_ui());
    }
    // BinaryField: the integer's bits encode the polynomial.
    if (v < 0 || v >> field.k() != 0)
        throw std::invalid_argument("bit pattern out of range: " + text);
    return from_raw(field, v.get_ui());
}

bool FieldElement::is_zero() const {
    return field_.kind() == FieldKind::Rationals ? rat_ == 0 : fin_ == 0;
}

bool FieldElement::is_one() const {
    return field_.kind() == FieldKind::Rationals ? rat_ == 1 : fin_ == 1;
}

namespace {
void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (a != b) throw std::invalid_argument("field mismatch between operands");
}
} // namespace

FieldElement FieldElement::operator+(const FieldElement& other) const {
    require_same_field(field_, other.field_);
    FieldElement e = zero(field_);
    switch (field_.kind()) {
        case FieldKind::Rationals: e.rat_ = rat_ + other.rat_; break;
        case FieldKind::PrimeField: e.fin_ = (fin_ + other.fin_) % field_.p(); break;
        case FieldKind::BinaryField: e.fin_ = fin_ ^ other.fin_; break;
    }
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
    return *this + (-other);
}

FieldElement FieldElement::operator-() const {
    FieldElement e = zero(field_);
    switch (field_.kind()) {
        case FieldKind::Rationals: e.rat_ = -rat_; break;
        case FieldKind::PrimeField: e.fin_ = fin_ == 0 ? 0 : field_.p() - fin_; break;
        case FieldKind::BinaryField: e.fin_ = fin_; break;
    }
    return e;
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    require_same_field(field_, other.field_);
    FieldElement e = zero(field_);
    switch (field_.kind()) {
        case FieldKind::Rationals: e.rat_ = rat_ * other.rat_; e.rat_.canonicalize(); break;
        case FieldKind::PrimeField:
            e.fin_ = static_cast<std::uint64_t>((__int128)fin_ * other.fin_ % field_.p());
            break;
        case FieldKind::BinaryField:
            e.fin_ = gf2k_mul(fin_, other.fin_, field_.modulus());
            break;
    }
    return e;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    FieldElement e = zero(field_);
    switch (field_.kind()) {
        case FieldKind::Rationals: e.rat_ = 1 / rat_; break;
        case FieldKind::PrimeField: e.fin_ = mod_inv(static_cast<std::int64_t>(fin_), field_.p()); break;
        case FieldKind::BinaryField:
            e.fin_ = gf2k_pow(fin_, (std::uint64_t(1) << field_.k()) - 2, field_.modulus());
            break;
    }
    return e;
}

FieldElement FieldElement::operator/(const FieldElement& other) const {
    require_same_field(field_, other.field_);
    return *this * other.inverse();
}

FieldElement FieldElement::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement r = one(field_);
    std::uint64_t n = static_cast<std::uint64_t>(e);
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& other) const {
    if (field_ != other.field_) return false;
    return field_.kind() == FieldKind::Rationals ? rat_ == other.rat_ : fin_ == other.fin_;
}

std::string FieldElement::str() const {
    if (field_.kind() == FieldKind::Rationals) return rat_.get_str();
    return std::to_string(fin_);
}

const mpq_class& FieldElement::rational_value() const {
    if (field_.kind() != FieldKind::Rationals)
        throw std::invalid_argument("not a rational element");
    return rat_;
}

std::uint64_t FieldElement::raw_value() const {
    if (field_.kind() == FieldKind::Rationals)
        throw std::invalid_argument("not a finite-field element");
    return fin_;
}

std::optional<FieldElement> FieldElement::sqrt() const {
    switch (field_.kind()) {
        case FieldKind::Rationals: {
            if (rat_ < 0) return std::nullopt;
            const mpz_class num = rat_.get_num(), den = rat_.get_den();
            if (!mpz_perfect_square_p(num.get_mpz_t()) ||
                !mpz_perfect_square_p(den.get_mpz_t()))
                return std::nullopt;
            mpz_class rn, rd;
            mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
            return from_rational(field_, rn, rd);
        }
        case FieldKind::PrimeField: {
            auto r = mod_sqrt(static_cast<std::int64_t>(fin_), field_.p());
            if (!r) return std::nullopt;
            return from_raw(field_, static_cast<std::uint64_t>(*r));
        }
        case FieldKind::BinaryField: {
            // Frobenius is bijective in characteristic 2: the unique root
            // is x^(2^(k-1)).
            std::uint64_t r = gf2k_pow(fin_, std::uint64_t(1) << (field_.k() - 1),
                                       field_.modulus());
            return from_raw(field_, r);
        }
    }
    return std::nullopt;
}

std::int64_t field_char(const FieldSpec& spec) { return spec.characteristic(); }

std::optional<FieldElement> field_sqrt(const FieldElement& x) { return x.sqrt(); }

std::vector<FieldElement> solve_quadratic(const FieldElement& a,
                                          const FieldElement& b,
                                          const FieldElement& c) {
    if (a.is_zero()) throw std::invalid_argument("leading coefficient is zero");
    const FieldSpec& f = a.field();
    std::vector<FieldElement> roots;
    if (f.characteristic() == 2) {
        // The discriminant formula degenerates; the field is small, scan it.
        for (std::int64_t v = 0; v < f.order(); ++v) {
            FieldElement x = FieldElement::from_raw(f, static_cast<std::uint64_t>(v));
            if (((a * x + b) * x + c).is_zero()) roots.push_back(x);
        }
        return roots;
    }
    FieldElement two = FieldElement::from_integer(f, 2);
    FieldElement disc = b * b - FieldElement::from_integer(f, 4) * a * c;
    auto sq = disc.sqrt();
    if (!sq) return roots;
    FieldElement denom = (two * a).inverse();
    FieldElement r1 = (-b + *sq) * denom;
    FieldElement r2 = (-b - *sq) * denom;
    roots.push_back(r1);
    if (r2 != r1) roots.push_back(r2);
    return roots;
}

} // namespace leonard
