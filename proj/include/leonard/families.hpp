#ifndef LEONARD_FAMILIES_HPP
#define LEONARD_FAMILIES_HPP

#include <map>

#include "leonard/parray.hpp"

namespace leonard {

/// The thirteen terminating Askey-scheme families.
enum class FamilyTag {
    QRacah,
    QHahn,
    DualQHahn,
    QuantumQKrawtchouk,
    QKrawtchouk,
    AffineQKrawtchouk,
    DualQKrawtchouk,
    Racah,
    Hahn,
    DualHahn,
    Krawtchouk,
    BannaiIto,
    Orphan,
};

const std::vector<FamilyTag>& all_family_tags();
std::string family_name(FamilyTag tag);
FamilyTag family_from_name(const std::string& name);

/// Parameter names a family generator expects, beyond theta0/thetastar0.
std::vector<std::string> family_param_names(FamilyTag tag);

/// A family instance: diameter plus the named parameter values
/// (always including theta0 and thetastar0).
struct FamilyParams {
    FamilyTag tag = FamilyTag::Krawtchouk;
    std::size_t d = 0;
    std::map<std::string, FieldElement> values;

    const FieldElement& at(const std::string& key) const;
    bool operator==(const FamilyParams& other) const {
        return tag == other.tag && d == other.d && values == other.values;
    }
};

/// Human-readable list of violated admissibility conditions; empty when
/// the parameters are admissible.
std::vector<std::string> family_preconditions(const FamilyParams& fp, const FieldSpec& field);

/// Builds the parameter array by direct substitution.  Throws
/// std::invalid_argument naming every violated precondition; the result
/// always validates.
ParameterArray make_family(const FamilyParams& fp, const FieldSpec& field);

/// Substitution without admissibility checks (the array may then fail
/// validation); used to probe how each precondition backs PA1-PA5.
ParameterArray make_family_unchecked(const FamilyParams& fp, const FieldSpec& field);

struct QuadraticWitness {
    FieldElement a, b, c; // a z^2 + b z + c with no root in the field
};

struct ClassificationResult {
    std::string case_label; // "I", "II", "III" or "IV"
    std::vector<FamilyParams> matches;
    bool extension_required = false;
    std::optional<QuadraticWitness> extension_quadratic;
};

/// Decides the case of a valid array from the common PA5 ratio and
/// recovers every family parameterization over the base field that
/// regenerates the array exactly.  When a needed quadratic has no root
/// in the field the result flags extension_required and carries the
/// quadratic; matches not needing it are still returned.  For d <= 2
/// each family is attempted directly with deterministic parameter
/// choices.
ClassificationResult classify(const ParameterArray& pa);

enum class HypergeomKind { F21, F32, F43, Phi21, Phi32, Phi43 };

/// Terminating (basic) hypergeometric sum.  Ordinary kinds use rising
/// factorials and need some numerator parameter equal to a nonpositive
/// integer image; basic kinds use q-shifted factorials, need q, and some
/// numerator parameter of the form q^{-n}.  Errors: non-terminating
/// input, a denominator factor vanishing before termination, or a
/// non-invertible factorial.
FieldElement hypergeom(HypergeomKind kind, const std::vector<FieldElement>& numerator,
                       const std::vector<FieldElement>& denominator,
                       const FieldElement& argument,
                       const std::optional<FieldElement>& q = std::nullopt);

} // namespace leonard

#endif
