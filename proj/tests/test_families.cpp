#include <doctest.h>

#include "fixtures.hpp"
#include "leonard/families.hpp"
#include "leonard/formulas.hpp"

using namespace leonard;
using fixtures::kr3;
using fixtures::q_of;
using fixtures::qr3;

namespace {

const FieldSpec Q = FieldSpec::rationals();

FamilyParams params_of(FamilyTag tag, std::size_t d,
                       std::initializer_list<std::pair<const char*, FieldElement>> kv) {
    FamilyParams fp;
    fp.tag = tag;
    fp.d = d;
    for (const auto& [k, v] : kv) fp.values[k] = v;
    return fp;
}

FamilyParams kr3_params() {
    return params_of(FamilyTag::Krawtchouk, 3,
                     {{"theta0", q_of(3)},
                      {"thetastar0", q_of(3)},
                      {"s", q_of(-2)},
                      {"sstar", q_of(-2)},
                      {"r", q_of(2)}});
}

FamilyParams qr3_params() {
    return params_of(FamilyTag::QRacah, 3,
                     {{"theta0", q_of(0)},
                      {"thetastar0", q_of(0)},
                      {"q", q_of(2)},
                      {"h", q_of(1)},
                      {"hstar", q_of(1)},
                      {"s", q_of(1)},
                      {"sstar", q_of(1)},
                      {"r1", q_of(16)},
                      {"r2", q_of(1)}});
}

FamilyParams orph4_params() {
    const FieldSpec f = fixtures::gf4();
    auto el = [&](std::uint64_t b) { return FieldElement::from_raw(f, b); };
    return params_of(FamilyTag::Orphan, 3,
                     {{"theta0", el(0)},
                      {"thetastar0", el(0)},
                      {"h", el(1)},
                      {"hstar", el(1)},
                      {"s", el(2)},
                      {"sstar", el(2)},
                      {"r", el(2)}});
}

bool has_match_regenerating(const ClassificationResult& result, const ParameterArray& pa) {
    for (const auto& m : result.matches)
        if (make_family(m, pa.field) == pa) return true;
    return false;
}

bool has_family(const ClassificationResult& result, FamilyTag tag) {
    for (const auto& m : result.matches)
        if (m.tag == tag) return true;
    return false;
}

} // namespace

TEST_CASE("generators reproduce the fixtures") {
    CHECK(make_family(kr3_params(), Q) == kr3());
    CHECK(make_family(qr3_params(), Q) == qr3());
    CHECK(make_family(orph4_params(), fixtures::gf4()) == fixtures::orph4());
}

TEST_CASE("generated arrays validate across families") {
    // One smoke instance per family over an admissible field.
    std::vector<std::pair<FamilyParams, FieldSpec>> cases;
    cases.push_back({qr3_params(), Q});
    cases.push_back({params_of(FamilyTag::QHahn, 3,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"q", q_of(2)},
                                {"h", q_of(1)},
                                {"hstar", q_of(1)},
                                {"sstar", q_of(5)},
                                {"r", q_of(3)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::DualQHahn, 3,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"q", q_of(2)},
                                {"h", q_of(1)},
                                {"hstar", q_of(1)},
                                {"s", q_of(5)},
                                {"r", q_of(3)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::QuantumQKrawtchouk, 3,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"q", q_of(2)},
                                {"hstar", q_of(1)},
                                {"s", q_of(5)},
                                {"r", q_of(3)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::QKrawtchouk, 3,
                               {{"theta0", q_of(1)},
                                {"thetastar0", q_of(1)},
                                {"q", q_of(2)},
                                {"h", q_of(2)},
                                {"hstar", q_of(1)},
                                {"sstar", q_of(5)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::AffineQKrawtchouk, 3,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"q", q_of(2)},
                                {"h", q_of(1)},
                                {"hstar", q_of(1)},
                                {"r", q_of(5)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::DualQKrawtchouk, 3,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"q", q_of(2)},
                                {"h", q_of(1)},
                                {"hstar", q_of(1)},
                                {"s", q_of(5)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::Racah, 3,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"h", q_of(1)},
                                {"hstar", q_of(1)},
                                {"s", q_of(5)},
                                {"sstar", q_of(7)},
                                {"r1", q_of(4)},
                                {"r2", q_of(12)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::Hahn, 3,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"hstar", q_of(1)},
                                {"s", q_of(2)},
                                {"sstar", q_of(7)},
                                {"r", q_of(3)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::DualHahn, 3,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"h", q_of(1)},
                                {"s", q_of(7)},
                                {"sstar", q_of(2)},
                                {"r", q_of(3)}}),
                     Q});
    cases.push_back({kr3_params(), Q});
    cases.push_back({params_of(FamilyTag::BannaiIto, 3,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"h", q_of(1)},
                                {"hstar", q_of(1)},
                                {"s", q_of(5)},
                                {"sstar", q_of(7)},
                                {"r1", q_of(1)},
                                {"r2", q_of(-9)}}),
                     Q});
    cases.push_back({orph4_params(), fixtures::gf4()});
    for (const auto& [fp, field] : cases) {
        const ParameterArray pa = make_family(fp, field);
        CHECK(validate(pa).empty());
        CHECK(pa.d == fp.d);
    }
}

TEST_CASE("preconditions are named and enforced") {
    FamilyParams bad = qr3_params();
    bad.values["r1"] = q_of(8); // breaks r1 r2 = s sstar q^4
    auto violations = family_preconditions(bad, Q);
    REQUIRE(!violations.empty());
    CHECK(violations.front().find("r1 r2") != std::string::npos);
    CHECK_THROWS_AS(make_family(bad, Q), std::invalid_argument);

    FamilyParams zero_s = kr3_params();
    zero_s.values["s"] = q_of(0);
    CHECK_THROWS_AS(make_family(zero_s, Q), std::invalid_argument);
}

TEST_CASE("violating a single named condition breaks validation") {
    // Krawtchouk: r = s sstar makes every phi vanish.
    FamilyParams kp = kr3_params();
    kp.values["r"] = q_of(4);
    CHECK(!family_preconditions(kp, Q).empty());
    CHECK(!validate(make_family_unchecked(kp, Q)).empty());

    // q-Racah: r1 q^i = 1 kills varphi_i.
    FamilyParams qp = qr3_params();
    qp.values["r1"] = q_of(1, 2);
    qp.values["r2"] = q_of(32); // keep the product condition
    CHECK(!family_preconditions(qp, Q).empty());
    CHECK(!validate(make_family_unchecked(qp, Q)).empty());

    // q-Racah: sstar q^i = 1 for i in 2..2d duplicates dual eigenvalues.
    FamilyParams sp = qr3_params();
    sp.values["sstar"] = q_of(1, 4);
    sp.values["r1"] = q_of(4); // r1 r2 = s sstar q^4 = 4
    sp.values["r2"] = q_of(1);
    CHECK(!family_preconditions(sp, Q).empty());
    CHECK(!validate(make_family_unchecked(sp, Q)).empty());

    // Racah over GF(5) with d = 7 violates the characteristic bound and
    // zeroes a split value.
    const FieldSpec f5 = FieldSpec::prime_field(5);
    auto e5 = [&](std::int64_t v) { return FieldElement::from_integer(f5, v); };
    FamilyParams rp = params_of(FamilyTag::Racah, 7,
                                {{"theta0", e5(0)},
                                 {"thetastar0", e5(0)},
                                 {"h", e5(1)},
                                 {"hstar", e5(1)},
                                 {"s", e5(1)},
                                 {"sstar", e5(1)},
                                 {"r1", e5(4)},
                                 {"r2", e5(1)}});
    CHECK(!family_preconditions(rp, f5).empty());
    CHECK(!validate(make_family_unchecked(rp, f5)).empty());

    // Orphan: r = s(1 + sstar) zeroes phi_1.
    FamilyParams op = orph4_params();
    op.values["r"] = FieldElement::from_raw(fixtures::gf4(), 1); // s(1+sstar) = 1
    CHECK(!family_preconditions(op, fixtures::gf4()).empty());
    CHECK(!validate(make_family_unchecked(op, fixtures::gf4())).empty());
}

TEST_CASE("classify the cube array") {
    const ClassificationResult result = classify(kr3());
    CHECK(result.case_label == "II");
    CHECK(!result.extension_required);
    REQUIRE(has_family(result, FamilyTag::Krawtchouk));
    CHECK(has_match_regenerating(result, kr3()));
    for (const auto& m : result.matches)
        if (m.tag == FamilyTag::Krawtchouk) {
            CHECK(m.at("s") == q_of(-2));
            CHECK(m.at("sstar") == q_of(-2));
            CHECK(m.at("r") == q_of(2));
            CHECK(m.at("theta0") == q_of(3));
        }
}

TEST_CASE("classify the q-Racah fixture") {
    const ClassificationResult result = classify(qr3());
    CHECK(result.case_label == "I");
    REQUIRE(has_family(result, FamilyTag::QRacah));
    CHECK(has_match_regenerating(result, qr3()));
    // Both orientations q = 2 and q = 1/2 are reported.
    bool saw_two = false, saw_half = false;
    for (const auto& m : result.matches)
        if (m.tag == FamilyTag::QRacah) {
            if (m.at("q") == q_of(2)) saw_two = true;
            if (m.at("q") == q_of(1, 2)) saw_half = true;
        }
    CHECK(saw_two);
    CHECK(saw_half);
}

TEST_CASE("classify the orphan fixture") {
    const ClassificationResult result = classify(fixtures::orph4());
    CHECK(result.case_label == "IV");
    REQUIRE(has_family(result, FamilyTag::Orphan));
    CHECK(has_match_regenerating(result, fixtures::orph4()));
}

TEST_CASE("classification round trips for every family") {
    std::vector<std::pair<FamilyParams, FieldSpec>> cases;
    // A second instance per family beyond the smoke tests above.
    cases.push_back({qr3_params(), Q});
    cases.push_back({params_of(FamilyTag::QHahn, 4,
                               {{"theta0", q_of(2)},
                                {"thetastar0", q_of(-1)},
                                {"q", q_of(3)},
                                {"h", q_of(2)},
                                {"hstar", q_of(1)},
                                {"sstar", q_of(7)},
                                {"r", q_of(2)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::DualQHahn, 3,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(2)},
                                {"q", q_of(3)},
                                {"h", q_of(1)},
                                {"hstar", q_of(2)},
                                {"s", q_of(7)},
                                {"r", q_of(2)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::QuantumQKrawtchouk, 4,
                               {{"theta0", q_of(1)},
                                {"thetastar0", q_of(0)},
                                {"q", q_of(2)},
                                {"hstar", q_of(3)},
                                {"s", q_of(7)},
                                {"r", q_of(5)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::QKrawtchouk, 3,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"q", q_of(3)},
                                {"h", q_of(1)},
                                {"hstar", q_of(2)},
                                {"sstar", q_of(7)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::AffineQKrawtchouk, 4,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(3)},
                                {"q", q_of(2)},
                                {"h", q_of(3)},
                                {"hstar", q_of(1)},
                                {"r", q_of(7)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::DualQKrawtchouk, 3,
                               {{"theta0", q_of(5)},
                                {"thetastar0", q_of(0)},
                                {"q", q_of(2)},
                                {"h", q_of(1)},
                                {"hstar", q_of(3)},
                                {"s", q_of(7)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::Racah, 4,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"h", q_of(1)},
                                {"hstar", q_of(2)},
                                {"s", q_of(6)},
                                {"sstar", q_of(8)},
                                {"r1", q_of(13)},
                                {"r2", q_of(6)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::Hahn, 4,
                               {{"theta0", q_of(1)},
                                {"thetastar0", q_of(0)},
                                {"hstar", q_of(1)},
                                {"s", q_of(3)},
                                {"sstar", q_of(9)},
                                {"r", q_of(4)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::DualHahn, 4,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(1)},
                                {"h", q_of(1)},
                                {"s", q_of(9)},
                                {"sstar", q_of(3)},
                                {"r", q_of(4)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::Krawtchouk, 5,
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"s", q_of(1)},
                                {"sstar", q_of(2)},
                                {"r", q_of(3)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::BannaiIto, 4, // even diameter
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"h", q_of(1)},
                                {"hstar", q_of(1)},
                                {"s", q_of(5)},
                                {"sstar", q_of(7)},
                                {"r1", q_of(1)},
                                {"r2", q_of(-8)}}),
                     Q});
    cases.push_back({params_of(FamilyTag::BannaiIto, 3, // odd diameter
                               {{"theta0", q_of(0)},
                                {"thetastar0", q_of(0)},
                                {"h", q_of(1)},
                                {"hstar", q_of(1)},
                                {"s", q_of(5)},
                                {"sstar", q_of(7)},
                                {"r1", q_of(1)},
                                {"r2", q_of(-9)}}),
                     Q});
    cases.push_back({orph4_params(), fixtures::gf4()});

    for (const auto& [fp, field] : cases) {
        const ParameterArray pa = make_family(fp, field);
        const ClassificationResult result = classify(pa);
        INFO("family ", family_name(fp.tag), " d=", fp.d);
        CHECK(has_family(result, fp.tag));
        CHECK(has_match_regenerating(result, pa));
    }
}

TEST_CASE("orbit members classify somewhere") {
    for (const auto& base : {kr3(), qr3(), fixtures::orph4()})
        for (const auto& member : d4_orbit(base))
            CHECK(!classify(member).matches.empty());
}

TEST_CASE("extension-required outcome") {
    // theta with PA5 ratio 4 gives beta = 3, and z^2 - 3z + 1 has no
    // rational root: build from Racah-type data with q in a quadratic
    // extension.  Use a dual q-Krawtchouk-like array over Q with q = golden
    // ratio squared; simplest concrete source: theta_i following the
    // Fibonacci-style recurrence theta_{i+1} = 3 theta_i - theta_{i-1}.
    // Instead of hand-building, take the Krawtchouk array and check its
    // classification does NOT require an extension, then mutate to a case-I
    // array over GF(7) where z^2 - 3z + 1 does factor; extension cases are
    // exercised in the acceptance suite via a purpose-built array.
    const ClassificationResult ok = classify(kr3());
    CHECK(!ok.extension_required);
}

TEST_CASE("small-diameter classification") {
    const ParameterArray d0(Q, {q_of(4)}, {q_of(-1)}, {}, {});
    const ClassificationResult r0 = classify(d0);
    CHECK(!r0.matches.empty());
    CHECK(has_match_regenerating(r0, d0));

    fixtures::Rng rng(91);
    for (int t = 0; t < 5; ++t) {
        const ParameterArray pa = fixtures::linear_array(
            1, rng.element(Q), rng.element(Q), rng.nonzero(Q), rng.nonzero(Q), q_of(7));
        if (!is_valid(pa)) continue;
        const ClassificationResult r1 = classify(pa);
        CHECK(has_match_regenerating(r1, pa));
    }
    const ParameterArray d2 =
        fixtures::linear_array(2, q_of(0), q_of(0), q_of(1), q_of(1), q_of(3));
    const ClassificationResult r2 = classify(d2);
    CHECK(has_match_regenerating(r2, d2));
    CHECK(has_family(r2, FamilyTag::Krawtchouk));
}

TEST_CASE("ordinary hypergeometric sums") {
    auto f21 = [&](std::int64_t a, std::int64_t b, std::int64_t c, FieldElement z) {
        return hypergeom(HypergeomKind::F21, {q_of(a), q_of(b)}, {q_of(c)}, z);
    };
    CHECK(f21(-1, -1, -3, q_of(2)) == q_of(1, 3));
    CHECK(f21(0, 5, 7, q_of(2)) == q_of(1));   // empty rising factorial
    // three-term sum: 1 + (-2)(-2)/((-5) 1!) + (-2)(-1)(-2)(-1)/((-5)(-4) 2!)
    CHECK(f21(-2, -2, -5, q_of(1)) == q_of(1) - q_of(4, 5) + q_of(1, 10));
    CHECK_THROWS_AS(hypergeom(HypergeomKind::F21, {q_of(1), q_of(2)}, {q_of(5)}, q_of(1)),
                    std::invalid_argument); // never terminates
    CHECK_THROWS_AS(f21(-3, 1, -2, q_of(1)), std::domain_error); // denominator hits zero
}

TEST_CASE("basic hypergeometric sums") {
    const FieldElement q = q_of(2);
    // 2phi1(q^-1, x; y; q, z) = 1 + (1 - q^-1)(1 - x) z / ((1 - y)(1 - q))
    const FieldElement x = q_of(3), y = q_of(5), z = q_of(7);
    const FieldElement expect =
        q_of(1) + (q_of(1) - q_of(1, 2)) * (q_of(1) - x) * z /
                      ((q_of(1) - y) * (q_of(1) - q_of(2)));
    CHECK(hypergeom(HypergeomKind::Phi21, {q_of(1, 2), x}, {y}, z, q) == expect);
    CHECK_THROWS_AS(hypergeom(HypergeomKind::Phi21, {x, y}, {z}, q_of(1), q),
                    std::invalid_argument);
    CHECK_THROWS_AS(hypergeom(HypergeomKind::Phi21, {x, y}, {z}, q_of(1)),
                    std::invalid_argument); // missing q
}

TEST_CASE("u table matches the Krawtchouk series") {
    // u_i(theta_j) = 2F1(-i, -j; -d; s sstar / r) with the fixture values.
    const Matrix t = u_table(kr3());
    const FieldElement z = q_of(2); // (-2)(-2)/2
    for (std::int64_t i = 0; i <= 3; ++i)
        for (std::int64_t j = 0; j <= 3; ++j)
            CHECK(t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ==
                  hypergeom(HypergeomKind::F21, {q_of(-i), q_of(-j)}, {q_of(-3)}, z));
}

TEST_CASE("u table matches the q-Racah series") {
    const ParameterArray pa = qr3();
    const Matrix t = u_table(pa);
    const FieldElement q = q_of(2);
    const FieldElement r1 = q_of(16), r2 = q_of(1);
    for (std::int64_t i = 0; i <= 3; ++i)
        for (std::int64_t j = 0; j <= 3; ++j) {
            const FieldElement val = hypergeom(
                HypergeomKind::Phi43,
                {q.pow(-i), q.pow(i + 1), q.pow(-j), q.pow(j + 1)},
                {r1 * q, r2 * q, q.pow(-3)}, q, q);
            CHECK(t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == val);
        }
}

namespace {

// A precondition violation must be flagged by name, and the raw
// substitution must then fail validation (or be impossible to evaluate).
void expect_degenerate(const FamilyParams& fp, const FieldSpec& field) {
    INFO("family ", family_name(fp.tag));
    const auto violations = family_preconditions(fp, field);
    CHECK(!violations.empty());
    try {
        const ParameterArray pa = make_family_unchecked(fp, field);
        CHECK(!validate(pa).empty());
    } catch (const std::domain_error&) {
        // substitution itself degenerates (division by zero)
    } catch (const std::invalid_argument&) {
        // duplicate-length or out-of-field degeneration
    }
}

FamilyParams tweak(const FamilyParams& base,
                   std::initializer_list<std::pair<const char*, FieldElement>> kv) {
    FamilyParams fp = base;
    for (const auto& [k, v] : kv) fp.values[k] = v;
    return fp;
}

// Some nonzeroness conditions guard family membership rather than
// validity: zeroing the parameter removes a linear factor and lands
// exactly on a smaller family.  The violation must still be flagged,
// the array stays valid, and the classifier no longer reports the
// original family.
void expect_family_boundary(const FamilyParams& fp, const FieldSpec& field) {
    INFO("family ", family_name(fp.tag));
    CHECK(!family_preconditions(fp, field).empty());
    const ParameterArray pa = make_family_unchecked(fp, field);
    CHECK(validate(pa).empty());
    const ClassificationResult result = classify(pa);
    CHECK(!result.matches.empty());
    CHECK(!has_family(result, fp.tag));
}

} // namespace

TEST_CASE("every listed admissibility condition is load-bearing") {
    const auto zoo = fixtures::family_zoo();
    auto base_of = [&](FamilyTag tag) {
        for (const auto& [fp, field] : zoo)
            if (fp.tag == tag) return std::make_pair(fp, field);
        throw std::logic_error("family missing from zoo");
    };

    SUBCASE("q-racah") {
        auto [base, f] = base_of(FamilyTag::QRacah);
        expect_degenerate(tweak(base, {{"h", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"q", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"s", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"r1", q_of(0)}}), f);
        // product constraint r1 r2 = s sstar q^{d+1}
        expect_degenerate(tweak(base, {{"r1", q_of(8)}}), f);
        // q^i = 1 within 1..d
        expect_degenerate(tweak(base, {{"q", q_of(-1)}, {"r1", q_of(1)}, {"r2", q_of(1)}}), f);
        // r1 q = 1
        expect_degenerate(tweak(base, {{"r1", q_of(1, 2)}, {"r2", q_of(32)}}), f);
        // sstar q / r1 = 1
        expect_degenerate(tweak(base, {{"sstar", q_of(8)}, {"r2", q_of(8)}}), f);
        // s q^2 = 1 within 2..2d
        expect_degenerate(tweak(base, {{"s", q_of(1, 4)}, {"r1", q_of(4)}}), f);
        // sstar q^2 = 1 within 2..2d
        expect_degenerate(tweak(base, {{"sstar", q_of(1, 4)}, {"r1", q_of(4)}}), f);
    }
    SUBCASE("q-hahn") {
        auto [base, f] = base_of(FamilyTag::QHahn);
        expect_degenerate(tweak(base, {{"hstar", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"q", q_of(-1)}}), f);
        expect_degenerate(tweak(base, {{"r", q_of(1, 2)}}), f);       // r q = 1
        expect_degenerate(tweak(base, {{"sstar", q_of(3, 2)}}), f);   // sstar q / r = 1
        expect_degenerate(tweak(base, {{"sstar", q_of(1, 4)}}), f);   // sstar q^2 = 1
        // r = 0 lands on q-Krawtchouk, sstar = 0 on affine q-Krawtchouk
        expect_family_boundary(tweak(base, {{"r", q_of(0)}}), f);
        expect_family_boundary(tweak(base, {{"sstar", q_of(0)}}), f);
    }
    SUBCASE("dual q-hahn") {
        auto [base, f] = base_of(FamilyTag::DualQHahn);
        expect_degenerate(tweak(base, {{"q", q_of(-1)}}), f);
        expect_degenerate(tweak(base, {{"r", q_of(1, 2)}}), f);
        expect_degenerate(tweak(base, {{"s", q_of(3, 2)}}), f); // s q / r = 1
        expect_degenerate(tweak(base, {{"s", q_of(1, 4)}}), f); // s q^2 = 1
        // s = 0 lands on affine q-Krawtchouk, r = 0 on dual q-Krawtchouk
        expect_family_boundary(tweak(base, {{"s", q_of(0)}}), f);
        expect_family_boundary(tweak(base, {{"r", q_of(0)}}), f);
    }
    SUBCASE("quantum q-krawtchouk") {
        auto [base, f] = base_of(FamilyTag::QuantumQKrawtchouk);
        expect_degenerate(tweak(base, {{"hstar", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"s", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"r", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"q", q_of(-1)}}), f);
        expect_degenerate(tweak(base, {{"s", q_of(3, 2)}}), f); // s q / r = 1
    }
    SUBCASE("q-krawtchouk") {
        auto [base, f] = base_of(FamilyTag::QKrawtchouk);
        expect_degenerate(tweak(base, {{"h", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"sstar", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"q", q_of(-1)}}), f);
        expect_degenerate(tweak(base, {{"sstar", q_of(1, 4)}}), f);
    }
    SUBCASE("affine q-krawtchouk") {
        auto [base, f] = base_of(FamilyTag::AffineQKrawtchouk);
        expect_degenerate(tweak(base, {{"r", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"q", q_of(-1)}}), f);
        expect_degenerate(tweak(base, {{"r", q_of(1, 2)}}), f); // r q = 1
    }
    SUBCASE("dual q-krawtchouk") {
        auto [base, f] = base_of(FamilyTag::DualQKrawtchouk);
        expect_degenerate(tweak(base, {{"s", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"q", q_of(-1)}}), f);
        expect_degenerate(tweak(base, {{"s", q_of(1, 4)}}), f); // s q^2 = 1
    }
    SUBCASE("racah") {
        auto [base, f] = base_of(FamilyTag::Racah);
        expect_degenerate(tweak(base, {{"h", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"hstar", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"r1", q_of(5)}}), f);               // sum constraint
        expect_degenerate(tweak(base, {{"r1", q_of(-2)}, {"r2", q_of(18)}}), f); // r1 = -2
        expect_degenerate(tweak(base, {{"r1", q_of(9)}, {"r2", q_of(7)}}), f);   // sstar - r1 = -2
        expect_degenerate(
            tweak(base, {{"s", q_of(-4)}, {"r1", q_of(1)}, {"r2", q_of(6)}}), f); // s = -4
        // characteristic <= d
        const FieldSpec f3 = FieldSpec::prime_field(3);
        auto e3 = [&](std::int64_t v) { return FieldElement::from_integer(f3, v); };
        FamilyParams rp;
        rp.tag = FamilyTag::Racah;
        rp.d = 3;
        for (const char* k : {"theta0", "thetastar0"}) rp.values[k] = e3(0);
        for (const char* k : {"h", "hstar", "s", "sstar", "r1"}) rp.values[k] = e3(1);
        rp.values["r2"] = e3(2); // r1 + r2 = 0 = s + sstar + d + 1 mod 3
        expect_degenerate(rp, f3);
    }
    SUBCASE("hahn") {
        auto [base, f] = base_of(FamilyTag::Hahn);
        expect_degenerate(tweak(base, {{"hstar", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"s", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"r", q_of(-2)}}), f);      // r = -2
        expect_degenerate(tweak(base, {{"r", q_of(9)}}), f);       // sstar - r = -2
        expect_degenerate(tweak(base, {{"sstar", q_of(-4)}}), f);  // sstar = -4
        const FieldSpec f3 = FieldSpec::prime_field(3);
        auto e3 = [&](std::int64_t v) { return FieldElement::from_integer(f3, v); };
        FamilyParams hp;
        hp.tag = FamilyTag::Hahn;
        hp.d = 3;
        for (const char* k : {"theta0", "thetastar0"}) hp.values[k] = e3(0);
        for (const char* k : {"hstar", "s", "sstar", "r"}) hp.values[k] = e3(1);
        expect_degenerate(hp, f3);
    }
    SUBCASE("dual hahn") {
        auto [base, f] = base_of(FamilyTag::DualHahn);
        expect_degenerate(tweak(base, {{"h", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"sstar", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"r", q_of(-2)}}), f); // r = -2
        expect_degenerate(tweak(base, {{"r", q_of(9)}}), f);  // s - r = -2
        expect_degenerate(tweak(base, {{"s", q_of(-4)}}), f); // s = -4
    }
    SUBCASE("krawtchouk") {
        auto [base, f] = base_of(FamilyTag::Krawtchouk);
        expect_degenerate(tweak(base, {{"r", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"s", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"sstar", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"r", q_of(4)}}), f); // r = s sstar
        const FieldSpec f3 = FieldSpec::prime_field(3);
        auto e3 = [&](std::int64_t v) { return FieldElement::from_integer(f3, v); };
        FamilyParams kp;
        kp.tag = FamilyTag::Krawtchouk;
        kp.d = 3;
        for (const char* k : {"theta0", "thetastar0"}) kp.values[k] = e3(0);
        kp.values["s"] = e3(1);
        kp.values["sstar"] = e3(1);
        kp.values["r"] = e3(2);
        expect_degenerate(kp, f3);
    }
    SUBCASE("bannai-ito") {
        auto [base, f] = base_of(FamilyTag::BannaiIto);
        expect_degenerate(tweak(base, {{"h", q_of(0)}}), f);
        expect_degenerate(tweak(base, {{"r1", q_of(2)}}), f); // sum constraint
        expect_degenerate(tweak(base, {{"r1", q_of(-1)}, {"r2", q_of(-7)}}), f); // r1 = -1
        expect_degenerate(
            tweak(base, {{"s", q_of(2)}, {"r1", q_of(2)}, {"r2", q_of(-7)}}), f); // s = 2
        const FieldSpec f2 = FieldSpec::prime_field(2);
        auto e2 = [&](std::int64_t v) { return FieldElement::from_integer(f2, v); };
        FamilyParams bp;
        bp.tag = FamilyTag::BannaiIto;
        bp.d = 3;
        for (const auto& [k, v] : base.values) bp.values[k] = e2(1);
        bp.values["theta0"] = e2(0);
        bp.values["thetastar0"] = e2(0);
        expect_degenerate(bp, f2); // characteristic 2
    }
    SUBCASE("orphan") {
        auto [base, f] = base_of(FamilyTag::Orphan);
        auto el = [&](std::uint64_t b) { return FieldElement::from_raw(f, b); };
        expect_degenerate(tweak(base, {{"h", el(0)}}), f);
        expect_degenerate(tweak(base, {{"s", el(0)}}), f);
        expect_degenerate(tweak(base, {{"s", el(1)}}), f);     // s = 1
        expect_degenerate(tweak(base, {{"sstar", el(1)}}), f); // sstar = 1
        expect_degenerate(tweak(base, {{"r", el(1)}}), f);     // r = s(1 + sstar)
        // characteristic other than 2
        FamilyParams op;
        op.tag = FamilyTag::Orphan;
        op.d = 3;
        const FieldSpec Qf = FieldSpec::rationals();
        op.values["theta0"] = q_of(0);
        op.values["thetastar0"] = q_of(0);
        op.values["h"] = q_of(1);
        op.values["hstar"] = q_of(1);
        op.values["s"] = q_of(2);
        op.values["sstar"] = q_of(2);
        op.values["r"] = q_of(2);
        expect_degenerate(op, Qf);
    }
}

TEST_CASE("characterizations hold across the family zoo and orbits") {
    for (const auto& [fp, field] : fixtures::family_zoo()) {
        const ParameterArray pa = make_family(fp, field);
        INFO("family ", family_name(fp.tag));
        CHECK(pa_poly_characterization(pa));
        for (const auto& member : d4_orbit(pa)) {
            CHECK(pa_poly_characterization(member));
            CHECK(pa_bidiagonal_G(member).has_value());
        }
    }
}

TEST_CASE("extension-required outcomes carry the unsolved quadratic") {
    // Eigenvalues following t_{i+1} = 3 t_i - t_{i-1} have nome ratio 4, so
    // the nome solves z^2 - 3z + 1 = 0, which is irreducible over Q.
    const ParameterArray lucas = fixtures::lucas_array();
    REQUIRE(validate(lucas).empty());
    const ClassificationResult result = classify(lucas);
    CHECK(result.case_label == "I");
    CHECK(result.matches.empty());
    CHECK(result.extension_required);
    REQUIRE(result.extension_quadratic.has_value());
    CHECK(result.extension_quadratic->a == q_of(1));
    CHECK(result.extension_quadratic->b == q_of(-3));
    CHECK(result.extension_quadratic->c == q_of(1));

    // A q-Racah-shaped array over Q whose r-pair is a conjugate pair:
    // substitute the symmetric functions e1 = r1 + r2 = 1, e2 = r1 r2 = 16
    // into the family formulas (q = 2, h = hstar = s = sstar = 1, d = 3).
    const FieldSpec f = FieldSpec::rationals();
    const FieldElement one = q_of(1), q = q_of(2);
    const FieldElement e1 = q_of(1), e2 = q_of(16);
    std::vector<FieldElement> th, vph, ph;
    for (std::int64_t i = 0; i <= 3; ++i)
        th.push_back((one - q.pow(i)) * (one - q.pow(i + 1)) / q.pow(i));
    for (std::int64_t i = 1; i <= 3; ++i) {
        const FieldElement frame =
            q.pow(1 - 2 * i) * (one - q.pow(i)) * (one - q.pow(i - 4));
        const FieldElement qi = q.pow(i);
        vph.push_back(frame * (one - e1 * qi + e2 * qi * qi));
        ph.push_back(frame * (e2 - e1 * qi + qi * qi));
    }
    const ParameterArray conj(f, th, th, vph, ph);
    REQUIRE(validate(conj).empty());
    const ClassificationResult rc = classify(conj);
    CHECK(rc.case_label == "I");
    CHECK(rc.extension_required);
    REQUIRE(rc.extension_quadratic.has_value());
    // z^2 - (r1 + r2) z + r1 r2 with no rational root
    CHECK(rc.extension_quadratic->b == q_of(-1));
    CHECK(rc.extension_quadratic->c == q_of(16));
    CHECK(!has_family(rc, FamilyTag::QRacah));
}

TEST_CASE("classification round trips over a prime field") {
    const FieldSpec f13 = FieldSpec::prime_field(13);
    auto e = [&](std::int64_t v) { return FieldElement::from_integer(f13, v); };
    FamilyParams fp;
    fp.tag = FamilyTag::QRacah;
    fp.d = 3;
    fp.values["theta0"] = e(0);
    fp.values["thetastar0"] = e(0);
    fp.values["q"] = e(2);
    fp.values["h"] = e(1);
    fp.values["hstar"] = e(1);
    fp.values["s"] = e(1);
    fp.values["sstar"] = e(1);
    fp.values["r1"] = e(3); // r1 r2 = s sstar q^4 = 16 = 3 mod 13
    fp.values["r2"] = e(1);
    const ParameterArray pa = make_family(fp, f13);
    const ClassificationResult result = classify(pa);
    CHECK(result.case_label == "I");
    CHECK(has_family(result, FamilyTag::QRacah));
    CHECK(has_match_regenerating(result, pa));
}

TEST_CASE("small diameters regenerate through some family") {
    const FieldSpec Q = FieldSpec::rationals();
    auto regenerates = [](const ParameterArray& pa) {
        for (const auto& m : classify(pa).matches)
            if (make_family(m, pa.field) == pa) return true;
        return false;
    };

    // d = 2 array built with a nome outside the deterministic candidate
    // pool; it comes back through another family (here Bannai/Ito).
    FamilyParams fp;
    fp.tag = FamilyTag::QRacah;
    fp.d = 2;
    fp.values["theta0"] = q_of(0);
    fp.values["thetastar0"] = q_of(0);
    fp.values["q"] = q_of(5);
    fp.values["h"] = q_of(1);
    fp.values["hstar"] = q_of(1);
    fp.values["s"] = q_of(1);
    fp.values["sstar"] = q_of(1);
    fp.values["r1"] = q_of(125);
    fp.values["r2"] = q_of(1);
    CHECK(regenerates(make_family(fp, Q)));

    // Consistent d = 1 data: phi_1 = varphi_1 + (th*_1 - th*_0)(th_1 - th_0).
    const ParameterArray d1(Q, {q_of(0), q_of(7)}, {q_of(2), q_of(5)}, {q_of(3)},
                            {q_of(24)});
    REQUIRE(validate(d1).empty());
    CHECK(regenerates(d1));

    // Bannai/Ito at even small diameter.
    FamilyParams bi;
    bi.tag = FamilyTag::BannaiIto;
    bi.d = 2;
    bi.values["theta0"] = q_of(0);
    bi.values["thetastar0"] = q_of(0);
    bi.values["h"] = q_of(1);
    bi.values["hstar"] = q_of(1);
    bi.values["s"] = q_of(5);
    bi.values["sstar"] = q_of(7);
    bi.values["r1"] = q_of(1);
    bi.values["r2"] = q_of(-10);
    const ParameterArray bia = make_family(bi, Q);
    const ClassificationResult bres = classify(bia);
    CHECK(has_family(bres, FamilyTag::BannaiIto));
    CHECK(has_match_regenerating(bres, bia));

    // Tiny field: the only d = 0 arrays over GF(2) still classify.
    const FieldSpec f2 = FieldSpec::prime_field(2);
    const ParameterArray d0(f2, {FieldElement::zero(f2)}, {FieldElement::one(f2)}, {},
                            {});
    CHECK(regenerates(d0));
}

TEST_CASE("no valid diameter-1 arrays exist over GF(2)") {
    // varphi_1 = phi_1 + 1 forces one split value to vanish.
    const FieldSpec f2 = FieldSpec::prime_field(2);
    auto e = [&](std::int64_t v) { return FieldElement::from_integer(f2, v); };
    for (std::int64_t vph = 0; vph <= 1; ++vph)
        for (std::int64_t ph = 0; ph <= 1; ++ph) {
            const ParameterArray pa(f2, {e(0), e(1)}, {e(1), e(0)}, {e(vph)}, {e(ph)});
            CHECK(!validate(pa).empty());
        }
}
