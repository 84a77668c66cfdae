#ifndef LEONARD_PARRAY_HPP
#define LEONARD_PARRAY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leonard/linalg.hpp"

namespace leonard {

/// The sequence (theta_0..theta_d; theta*_0..theta*_d; varphi_1..varphi_d;
/// phi_1..phi_d) over a field.  A constructed instance only guarantees
/// consistent lengths; whether PA1-PA5 hold is the business of validate().
///
/// By convention varphi_0 = varphi_{d+1} = phi_0 = phi_{d+1} = 0; the
/// *_ext accessors return those zeros rather than storing them.
struct ParameterArray {
    FieldSpec field;
    std::size_t d = 0;
    std::vector<FieldElement> theta;       // size d+1
    std::vector<FieldElement> theta_star;  // size d+1
    std::vector<FieldElement> varphi;      // size d, first split sequence
    std::vector<FieldElement> phi;         // size d, second split sequence

    ParameterArray(FieldSpec f, std::vector<FieldElement> th,
                   std::vector<FieldElement> ths, std::vector<FieldElement> vph,
                   std::vector<FieldElement> ph);

    /// varphi_j for 0 <= j <= d+1 (zero outside 1..d).
    FieldElement varphi_ext(std::size_t j) const;
    FieldElement phi_ext(std::size_t j) const;

    bool operator==(const ParameterArray& other) const;
    bool operator!=(const ParameterArray& other) const { return !(*this == other); }
};

enum class PARule { PA1, PA2, PA3, PA4, PA5 };

std::string pa_rule_name(PARule rule);

/// One validation failure with an exact witness: the two sides whose
/// inequality (PA1: equality) triggered the report.
struct PAViolation {
    PARule rule;
    std::size_t index = 0;       // offending i
    std::size_t index2 = 0;      // second index (PA1 only)
    FieldElement lhs;
    FieldElement rhs;
    std::string detail;
};

/// Checks PA1-PA5 exhaustively; empty result iff pa is a parameter array.
/// PA3-PA5 involve divisions that PA1 legitimizes, so they are skipped
/// when PA1 fails.  PA5 is vacuous for d < 3.
std::vector<PAViolation> validate(const ParameterArray& pa);

bool is_valid(const ParameterArray& pa);

/// Element of the dihedral group of order 8 generated by the star, down
/// and double-down involutions.
class D4Element {
public:
    D4Element() = default; // identity

    static D4Element identity();
    static D4Element star();
    static D4Element down();
    static D4Element ddown();

    /// All 8 elements, identity first, in a fixed order.
    static const std::vector<D4Element>& all();

    D4Element operator*(const D4Element& other) const; // this after other
    bool operator==(const D4Element& other) const;

    bool has_star() const { return star_; }
    /// Reversal applied to the idempotent order of the first operator.
    bool flips_e() const { return flip_e_; }
    /// Reversal applied to the idempotent order of the second operator.
    bool flips_estar() const { return flip_estar_; }

    std::string name() const;

private:
    D4Element(bool s, bool fe, bool fs) : star_(s), flip_e_(fe), flip_estar_(fs) {}
    bool star_ = false;
    bool flip_e_ = false;
    bool flip_estar_ = false;
};

/// Parameter array of the relative obtained by acting with g.
ParameterArray d4_apply(const ParameterArray& pa, const D4Element& g);

/// Orbit under all 8 elements, deduplicated by exact equality, in the
/// order of D4Element::all().
std::vector<ParameterArray> d4_orbit(const ParameterArray& pa);

/// Common value of the PA5 ratios, defined for d >= 3 only.
std::optional<FieldElement> beta_plus_one(const ParameterArray& pa);

/// Polynomial characterization: for each i the varphi-weighted sum of
/// tau-products is a scalar multiple of its phi/eta-weighted partner.
/// Equivalent to PA3-PA5 when PA1 and PA2 hold (which is required).
bool pa_poly_characterization(const ParameterArray& pa);

/// Invertible G conjugating the (theta, subdiagonal 1) bidiagonal matrix
/// into its reversed-diagonal twin and the varphi upper bidiagonal into
/// the phi one; nullopt when only singular solutions exist.  Requires
/// PA1 and PA2.
std::optional<Matrix> pa_bidiagonal_G(const ParameterArray& pa);

} // namespace leonard

#endif
