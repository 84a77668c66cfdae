#ifndef LEONARD_TESTS_FIXTURES_HPP
#define LEONARD_TESTS_FIXTURES_HPP

// Shared desk-scale fixtures.  Each array is built here by direct
// substitution with plain field arithmetic, independently of the family
// generators, so the two construction paths check each other.

#include <cstdint>

#include "leonard/families.hpp"
#include "leonard/parray.hpp"

namespace fixtures {

using namespace leonard;

inline FieldElement q_of(std::int64_t n, std::int64_t den = 1) {
    return FieldElement::from_rational(FieldSpec::rationals(), n, den);
}

// Krawtchouk over Q with theta_i = theta*_i = d - 2i, varphi_i = -2i(d-i+1),
// phi_i = 2i(d-i+1).
inline ParameterArray krawtchouk_cube(std::size_t d) {
    const FieldSpec f = FieldSpec::rationals();
    std::vector<FieldElement> th, ths, vph, ph;
    for (std::size_t i = 0; i <= d; ++i) {
        th.push_back(q_of(static_cast<std::int64_t>(d) - 2 * static_cast<std::int64_t>(i)));
        ths.push_back(th.back());
    }
    for (std::size_t i = 1; i <= d; ++i) {
        const std::int64_t v = 2 * static_cast<std::int64_t>(i) *
                               (static_cast<std::int64_t>(d) - static_cast<std::int64_t>(i) + 1);
        vph.push_back(q_of(-v));
        ph.push_back(q_of(v));
    }
    return ParameterArray(f, th, ths, vph, ph);
}

inline ParameterArray kr3() { return krawtchouk_cube(3); }

// q-Racah over Q by substitution: theta_0 = theta*_0 = 0, h = h* = s = s* = 1,
// r2 = 1, r1 = s s* q^{d+1}.
inline ParameterArray q_racah_fixture(std::size_t d, const FieldElement& q) {
    const FieldSpec f = q.field();
    const FieldElement one = FieldElement::one(f);
    const FieldElement r1 = q.pow(static_cast<std::int64_t>(d) + 1);
    std::vector<FieldElement> th, ths, vph, ph;
    for (std::size_t i = 0; i <= d; ++i) {
        const FieldElement qi = q.pow(static_cast<std::int64_t>(i));
        const FieldElement v = (one - qi) * (one - qi * q) / qi;
        th.push_back(v);
        ths.push_back(v);
    }
    for (std::size_t i = 1; i <= d; ++i) {
        const FieldElement qi = q.pow(static_cast<std::int64_t>(i));
        const FieldElement common =
            q.pow(1 - 2 * static_cast<std::int64_t>(i)) * (one - qi) *
            (one - qi / q.pow(static_cast<std::int64_t>(d) + 1));
        vph.push_back(common * (one - r1 * qi) * (one - qi));
        ph.push_back(common * (r1 - qi) * (one - qi));
    }
    return ParameterArray(f, th, ths, vph, ph);
}

inline ParameterArray qr3() { return q_racah_fixture(3, q_of(2)); }
inline ParameterArray qr4() { return q_racah_fixture(4, q_of(3)); }

inline FieldSpec gf4() { return FieldSpec::binary_field(2, 0b111); }

// Orphan over GF(4): h = h* = 1, s = s* = r = w (a generator), giving
// theta = theta* = (0, w^2, 1, w), varphi = (w, 1, w), phi = (w^2, 1, w^2).
inline ParameterArray orph4() {
    const FieldSpec f = gf4();
    auto el = [&](std::uint64_t bits) { return FieldElement::from_raw(f, bits); };
    const FieldElement w = el(2), w2 = el(3), one = el(1), zero = el(0);
    std::vector<FieldElement> th = {zero, w2, one, w};
    std::vector<FieldElement> vph = {w, one, w};
    std::vector<FieldElement> ph = {w2, one, w2};
    return ParameterArray(f, th, th, vph, ph);
}

// Valid array with linear eigenvalues over Q: theta_i = theta0 + s*i,
// theta*_i = thetastar0 + sstar*i, varphi_i = r*i*(i-d-1),
// phi_i = (r - s*sstar)*i*(i-d-1).  Needs s, sstar, r nonzero, r != s*sstar.
inline ParameterArray linear_array(std::size_t d, const FieldElement& theta0,
                                   const FieldElement& thetastar0,
                                   const FieldElement& s, const FieldElement& sstar,
                                   const FieldElement& r) {
    const FieldSpec f = theta0.field();
    std::vector<FieldElement> th, ths, vph, ph;
    for (std::size_t i = 0; i <= d; ++i) {
        const FieldElement fi = FieldElement::from_integer(f, static_cast<std::int64_t>(i));
        th.push_back(theta0 + s * fi);
        ths.push_back(thetastar0 + sstar * fi);
    }
    for (std::size_t i = 1; i <= d; ++i) {
        const FieldElement w = FieldElement::from_integer(
            f, static_cast<std::int64_t>(i) *
                   (static_cast<std::int64_t>(i) - static_cast<std::int64_t>(d) - 1));
        vph.push_back(r * w);
        ph.push_back((r - s * sstar) * w);
    }
    return ParameterArray(f, th, ths, vph, ph);
}

// Deterministic xorshift generator for property-style sweeps.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    std::int64_t range(std::int64_t lo, std::int64_t hi) { // inclusive
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    FieldElement element(const FieldSpec& f) {
        if (f.kind() == FieldKind::Rationals)
            return FieldElement::from_rational(f, range(-20, 20), range(1, 12));
        return FieldElement::from_raw(f, next() % static_cast<std::uint64_t>(f.order()));
    }
    FieldElement nonzero(const FieldSpec& f) {
        while (true) {
            FieldElement e = element(f);
            if (!e.is_zero()) return e;
        }
    }
};

// Random valid array over Q via linear_array, diameter 1..5.
inline ParameterArray random_valid_array(Rng& rng) {
    const FieldSpec f = FieldSpec::rationals();
    const std::size_t d = static_cast<std::size_t>(rng.range(1, 5));
    while (true) {
        const FieldElement s = rng.nonzero(f), sstar = rng.nonzero(f), r = rng.nonzero(f);
        if (r == s * sstar) continue;
        return linear_array(d, rng.element(f), rng.element(f), s, sstar, r);
    }
}

// One admissible representative per family, over a suitable field.
inline std::vector<std::pair<FamilyParams, FieldSpec>> family_zoo() {
    const FieldSpec Q = FieldSpec::rationals();
    std::vector<std::pair<FamilyParams, FieldSpec>> zoo;
    auto add = [&](FamilyTag tag, std::size_t d, const FieldSpec& f,
                   std::initializer_list<std::pair<const char*, std::int64_t>> ints) {
        FamilyParams fp;
        fp.tag = tag;
        fp.d = d;
        for (const auto& [k, v] : ints) fp.values[k] = FieldElement::from_integer(f, v);
        zoo.push_back({fp, f});
    };
    add(FamilyTag::QRacah, 3, Q,
        {{"theta0", 0}, {"thetastar0", 0}, {"q", 2}, {"h", 1}, {"hstar", 1},
         {"s", 1}, {"sstar", 1}, {"r1", 16}, {"r2", 1}});
    add(FamilyTag::QHahn, 3, Q,
        {{"theta0", 0}, {"thetastar0", 0}, {"q", 2}, {"h", 1}, {"hstar", 1},
         {"sstar", 5}, {"r", 3}});
    add(FamilyTag::DualQHahn, 3, Q,
        {{"theta0", 0}, {"thetastar0", 0}, {"q", 2}, {"h", 1}, {"hstar", 1},
         {"s", 5}, {"r", 3}});
    add(FamilyTag::QuantumQKrawtchouk, 3, Q,
        {{"theta0", 0}, {"thetastar0", 0}, {"q", 2}, {"hstar", 1}, {"s", 5}, {"r", 3}});
    add(FamilyTag::QKrawtchouk, 3, Q,
        {{"theta0", 0}, {"thetastar0", 0}, {"q", 2}, {"h", 1}, {"hstar", 1},
         {"sstar", 5}});
    add(FamilyTag::AffineQKrawtchouk, 3, Q,
        {{"theta0", 0}, {"thetastar0", 0}, {"q", 2}, {"h", 1}, {"hstar", 1}, {"r", 5}});
    add(FamilyTag::DualQKrawtchouk, 3, Q,
        {{"theta0", 0}, {"thetastar0", 0}, {"q", 2}, {"h", 1}, {"hstar", 1}, {"s", 5}});
    add(FamilyTag::Racah, 3, Q,
        {{"theta0", 0}, {"thetastar0", 0}, {"h", 1}, {"hstar", 1}, {"s", 5},
         {"sstar", 7}, {"r1", 4}, {"r2", 12}});
    add(FamilyTag::Hahn, 3, Q,
        {{"theta0", 0}, {"thetastar0", 0}, {"hstar", 1}, {"s", 2}, {"sstar", 7},
         {"r", 3}});
    add(FamilyTag::DualHahn, 3, Q,
        {{"theta0", 0}, {"thetastar0", 0}, {"h", 1}, {"s", 7}, {"sstar", 2}, {"r", 3}});
    add(FamilyTag::Krawtchouk, 3, Q,
        {{"theta0", 3}, {"thetastar0", 3}, {"s", -2}, {"sstar", -2}, {"r", 2}});
    add(FamilyTag::BannaiIto, 3, Q,
        {{"theta0", 0}, {"thetastar0", 0}, {"h", 1}, {"hstar", 1}, {"s", 5},
         {"sstar", 7}, {"r1", 1}, {"r2", -9}});
    {
        const FieldSpec f4 = gf4();
        FamilyParams fp;
        fp.tag = FamilyTag::Orphan;
        fp.d = 3;
        for (const char* k : {"theta0", "thetastar0"})
            fp.values[k] = FieldElement::from_raw(f4, 0);
        for (const char* k : {"h", "hstar"}) fp.values[k] = FieldElement::from_raw(f4, 1);
        for (const char* k : {"s", "sstar", "r"})
            fp.values[k] = FieldElement::from_raw(f4, 2);
        zoo.push_back({fp, f4});
    }
    return zoo;
}

// Valid diameter-3 array over Q whose natural nome lives in a quadratic
// extension: theta = theta* = (2, 3, 7, 18) follows t_{i+1} = 3 t_i - t_{i-1},
// the split sequences are completed through the defining sums from phi_1 = 1.
inline ParameterArray lucas_array() {
    const FieldSpec f = FieldSpec::rationals();
    std::vector<FieldElement> th = {q_of(2), q_of(3), q_of(7), q_of(18)};
    std::vector<FieldElement> vph, ph;
    const FieldElement phi1 = q_of(1);
    const FieldElement span = th[0] - th[3];
    for (std::size_t i = 1; i <= 3; ++i) {
        FieldElement partial = q_of(0);
        for (std::size_t h = 0; h < i; ++h) partial += (th[h] - th[3 - h]) / span;
        vph.push_back(phi1 * partial + (th[i] - th[0]) * (th[i - 1] - th[3]));
    }
    for (std::size_t i = 1; i <= 3; ++i) {
        FieldElement partial = q_of(0);
        for (std::size_t h = 0; h < i; ++h) partial += (th[h] - th[3 - h]) / span;
        ph.push_back(vph[0] * partial + (th[i] - th[0]) * (th[3 - i + 1] - th[0]));
    }
    return ParameterArray(f, th, th, vph, ph);
}

} // namespace fixtures

#endif
