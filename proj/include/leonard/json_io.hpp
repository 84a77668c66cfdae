#ifndef LEONARD_JSON_IO_HPP
#define LEONARD_JSON_IO_HPP

#include <json.hpp>

#include "leonard/families.hpp"
#include "leonard/realize.hpp"
#include "leonard/verify.hpp"

namespace leonard {

// Insertion-ordered JSON keeps the output byte-stable.
using Json = nlohmann::ordered_json;

// {"kind":"Q"} | {"kind":"Fp","p":7} | {"kind":"F2k","k":2,"modulus":[1,1,1]}
Json field_spec_to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const Json& j);

// Q elements as "a/b" strings, finite-field elements as integers.
Json element_to_json(const FieldElement& e);
FieldElement element_from_json(const FieldSpec& field, const Json& j);

Json parameter_array_to_json(const ParameterArray& pa);
ParameterArray parameter_array_from_json(const Json& j);

// Row-major array of field-element strings.
Json matrix_to_json(const Matrix& m);

Json violations_to_json(const std::vector<PAViolation>& violations);
Json report_to_json(const VerificationReport& report);

Json family_params_to_json(const FamilyParams& fp);
FamilyParams family_params_from_json(const Json& j, const FieldSpec& field);

Json classification_to_json(const ClassificationResult& result);
Json aw_params_to_json(const AWParams& params);
Json intersection_numbers_to_json(const IntersectionNumbers& ix);

} // namespace leonard

#endif
