#include "leonard/json_io.hpp"

namespace leonard {

Json field_spec_to_json(const FieldSpec& spec) {
    Json j;
    switch (spec.kind()) {
        case FieldKind::Rationals:
            j["kind"] = "Q";
            break;
        case FieldKind::PrimeField:
            j["kind"] = "Fp";
            j["p"] = spec.p();
            break;
        case FieldKind::BinaryField: {
            j["kind"] = "F2k";
            j["k"] = spec.k();
            Json bits = Json::array();
            for (int i = 0; i <= spec.k(); ++i) bits.push_back((spec.modulus() >> i) & 1u);
            j["modulus"] = bits;
            break;
        }
    }
    return j;
}

FieldSpec field_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("field spec must be an object with a \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "Fp") {
        if (!j.contains("p")) throw std::invalid_argument("Fp spec needs \"p\"");
        return FieldSpec::prime_field(j["p"].get<std::int64_t>());
    }
    if (kind == "F2k") {
        if (!j.contains("k") || !j.contains("modulus"))
            throw std::invalid_argument("F2k spec needs \"k\" and \"modulus\"");
        const int k = j["k"].get<int>();
        const Json& bits = j["modulus"];
        if (!bits.is_array() || bits.size() != static_cast<std::size_t>(k) + 1)
            throw std::invalid_argument("F2k modulus must list k+1 bits, low to high");
        std::uint32_t modulus = 0;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            const int b = bits[i].get<int>();
            if (b != 0 && b != 1) throw std::invalid_argument("modulus bits must be 0 or 1");
            modulus |= static_cast<std::uint32_t>(b) << i;
        }
        return FieldSpec::binary_field(k, modulus);
    }
    throw std::invalid_argument("unknown field kind: " + kind);
}

Json element_to_json(const FieldElement& e) {
    if (e.field().kind() == FieldKind::Rationals) return e.str();
    return static_cast<std::int64_t>(e.raw_value());
}

FieldElement element_from_json(const FieldSpec& field, const Json& j) {
    if (j.is_string()) return FieldElement::from_string(field, j.get<std::string>());
    if (j.is_number_integer())
        return FieldElement::from_string(field, std::to_string(j.get<std::int64_t>()));
    throw std::invalid_argument("field element must be a string or an integer");
}

namespace {

Json element_vector_to_json(const std::vector<FieldElement>& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(element_to_json(e));
    return out;
}

std::vector<FieldElement> element_vector_from_json(const FieldSpec& field, const Json& j,
                                                   const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<FieldElement> out;
    for (const auto& item : j) out.push_back(element_from_json(field, item));
    return out;
}

} // namespace

Json parameter_array_to_json(const ParameterArray& pa) {
    Json j;
    j["field"] = field_spec_to_json(pa.field);
    j["d"] = pa.d;
    j["theta"] = element_vector_to_json(pa.theta);
    j["theta_star"] = element_vector_to_json(pa.theta_star);
    j["varphi"] = element_vector_to_json(pa.varphi);
    j["phi"] = element_vector_to_json(pa.phi);
    return j;
}

ParameterArray parameter_array_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("parameter array must be an object");
    for (const char* key : {"field", "d", "theta", "theta_star", "varphi", "phi"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("parameter array needs \"") + key + "\"");
    const FieldSpec field = field_spec_from_json(j["field"]);
    ParameterArray pa(field, element_vector_from_json(field, j["theta"], "theta"),
                      element_vector_from_json(field, j["theta_star"], "theta_star"),
                      element_vector_from_json(field, j["varphi"], "varphi"),
                      element_vector_from_json(field, j["phi"], "phi"));
    if (j["d"].get<std::size_t>() != pa.d)
        throw std::invalid_argument("stated d does not match the sequence lengths");
    return pa;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

Json violations_to_json(const std::vector<PAViolation>& violations) {
    Json out = Json::array();
    for (const auto& v : violations) {
        Json j;
        j["rule"] = pa_rule_name(v.rule);
        j["index"] = v.index;
        if (v.rule == PARule::PA1) j["index2"] = v.index2;
        j["lhs"] = v.lhs.str();
        j["rhs"] = v.rhs.str();
        j["detail"] = v.detail;
        out.push_back(j);
    }
    return out;
}

Json report_to_json(const VerificationReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        if (!c.passed) j["witness"] = c.witness;
        checks.push_back(j);
    }
    Json out;
    out["checks"] = checks;
    out["all_passed"] = report.all_passed();
    return out;
}

Json family_params_to_json(const FamilyParams& fp) {
    Json params;
    for (const auto& [key, value] : fp.values) params[key] = element_to_json(value);
    Json j;
    j["family"] = family_name(fp.tag);
    j["d"] = fp.d;
    j["params"] = params;
    return j;
}

FamilyParams family_params_from_json(const Json& j, const FieldSpec& field) {
    if (!j.is_object() || !j.contains("family") || !j.contains("d") || !j.contains("params"))
        throw std::invalid_argument("family spec needs \"family\", \"d\" and \"params\"");
    FamilyParams fp;
    fp.tag = family_from_name(j["family"].get<std::string>());
    fp.d = j["d"].get<std::size_t>();
    for (const auto& [key, value] : j["params"].items())
        fp.values[key] = element_from_json(field, value);
    return fp;
}

Json classification_to_json(const ClassificationResult& result) {
    Json j;
    j["case"] = result.case_label;
    Json matches = Json::array();
    for (const auto& m : result.matches) matches.push_back(family_params_to_json(m));
    j["matches"] = matches;
    j["extension_required"] = result.extension_required;
    if (result.extension_quadratic) {
        Json q;
        q["a"] = element_to_json(result.extension_quadratic->a);
        q["b"] = element_to_json(result.extension_quadratic->b);
        q["c"] = element_to_json(result.extension_quadratic->c);
        j["extension_quadratic"] = q;
    }
    return j;
}

Json aw_params_to_json(const AWParams& params) {
    Json j;
    j["beta"] = element_to_json(params.beta);
    j["gamma"] = element_to_json(params.gamma);
    j["gamma_star"] = element_to_json(params.gamma_star);
    j["rho"] = element_to_json(params.rho);
    j["rho_star"] = element_to_json(params.rho_star);
    j["omega"] = element_to_json(params.omega);
    j["eta"] = element_to_json(params.eta);
    j["eta_star"] = element_to_json(params.eta_star);
    j["unique"] = params.unique;
    return j;
}

Json intersection_numbers_to_json(const IntersectionNumbers& ix) {
    Json out = Json::array();
    for (std::size_t i = 0; i <= ix.diameter(); ++i) {
        Json layer = Json::array();
        for (std::size_t j = 0; j <= ix.diameter(); ++j) {
            Json row = Json::array();
            for (std::size_t h = 0; h <= ix.diameter(); ++h)
                row.push_back(ix.at(h, i, j).str());
            layer.push_back(row);
        }
        out.push_back(layer);
    }
    return out;
}

} // namespace leonard
