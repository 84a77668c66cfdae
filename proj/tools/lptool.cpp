// Command-line front end: builds, validates, realizes, verifies and
// classifies Leonard-pair parameter arrays with JSON input and output.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "leonard/json_io.hpp"

namespace {

using leonard::Json;

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;

struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_json_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open input file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

leonard::ParameterArray load_array(const std::string& path) {
    try {
        return leonard::parameter_array_from_json(read_json_input(path));
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

// Accepts the JSON spec or the shorthands Q, Fp:<p>, F2k:<k>:<modulus bits as integer>.
leonard::FieldSpec parse_field_option(const std::string& text) {
    try {
        if (!text.empty() && text.front() == '{')
            return leonard::field_spec_from_json(Json::parse(text));
        if (text == "Q") return leonard::FieldSpec::rationals();
        if (text.rfind("Fp:", 0) == 0)
            return leonard::FieldSpec::prime_field(std::stoll(text.substr(3)));
        if (text.rfind("F2k:", 0) == 0) {
            const auto rest = text.substr(4);
            const auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw UsageError("F2k shorthand is F2k:<k>:<modulus>");
            const int k = std::stoi(rest.substr(0, colon));
            const auto modulus = static_cast<std::uint32_t>(std::stoul(rest.substr(colon + 1)));
            return leonard::FieldSpec::binary_field(k, modulus);
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad field spec: ") + e.what());
    }
    throw UsageError("unknown field spec: " + text);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int emit_error(int code, const std::string& message) {
    Json j;
    j["error"] = message;
    std::cerr << j.dump(2) << "\n";
    return code;
}

leonard::Basis parse_basis(const std::string& name) {
    if (name == "monic") return leonard::Basis::Monic;
    if (name == "split") return leonard::Basis::Split;
    if (name == "standard") return leonard::Basis::Standard;
    throw UsageError("unknown basis: " + name);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Leonard pair/system toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a parameter array from a family");
    std::string gen_family, gen_field = "Q";
    std::size_t gen_d = 3;
    std::vector<std::string> gen_params;
    gen->add_option("--family", gen_family, "family name, e.g. krawtchouk")->required();
    gen->add_option("--d", gen_d, "diameter");
    gen->add_option("--param", gen_params, "name=value, repeatable");
    gen->add_option("--field", gen_field, "Q | Fp:<p> | F2k:<k>:<modulus> | JSON");

    // single-input verbs
    std::string in_validate, in_realize, in_verify, in_classify, in_orbit, in_table,
        in_aw, in_ix;
    auto* validate_cmd =
        app.add_subcommand("validate", "check the parameter array conditions");
    validate_cmd->add_option("input", in_validate, "file or - for stdin")->required();
    auto* realize_cmd = app.add_subcommand("realize", "matrix pair in a chosen basis");
    realize_cmd->add_option("input", in_realize)->required();
    std::string realize_basis = "standard";
    realize_cmd->add_option("--basis", realize_basis, "monic | split | standard");
    auto* verify_cmd = app.add_subcommand("verify", "run the identity catalog");
    verify_cmd->add_option("input", in_verify)->required();
    auto* classify_cmd = app.add_subcommand("classify", "match against the 13 families");
    classify_cmd->add_option("input", in_classify)->required();
    auto* orbit_cmd = app.add_subcommand("orbit", "relatives under the dihedral action");
    orbit_cmd->add_option("input", in_orbit)->required();
    auto* table_cmd = app.add_subcommand("table", "matrix of polynomial values");
    table_cmd->add_option("input", in_table)->required();
    std::string table_what = "u";
    table_cmd->add_option("--what", table_what, "u | v | p | P | gram");
    auto* aw_cmd = app.add_subcommand("aw", "solve the Askey-Wilson relations");
    aw_cmd->add_option("input", in_aw)->required();
    std::string aw_basis = "standard";
    aw_cmd->add_option("--basis", aw_basis, "monic | split | standard");
    auto* ix_cmd = app.add_subcommand("ix", "intersection numbers");
    ix_cmd->add_option("input", in_ix)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return kExitOk;
        }
        return emit_error(kExitUsage, e.what());
    }

    try {
        if (gen->parsed()) {
            const leonard::FieldSpec field = parse_field_option(gen_field);
            leonard::FamilyParams fp;
            fp.tag = leonard::family_from_name(gen_family);
            fp.d = gen_d;
            for (const auto& kv : gen_params) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw UsageError("--param expects name=value, got: " + kv);
                fp.values[kv.substr(0, eq)] =
                    leonard::FieldElement::from_string(field, kv.substr(eq + 1));
            }
            try {
                emit(leonard::parameter_array_to_json(leonard::make_family(fp, field)));
            } catch (const std::invalid_argument& e) {
                throw SemanticError(e.what());
            }
            return kExitOk;
        }
        if (validate_cmd->parsed()) {
            const auto pa = load_array(in_validate);
            const auto violations = leonard::validate(pa);
            Json j;
            j["violations"] = leonard::violations_to_json(violations);
            j["valid"] = violations.empty();
            emit(j);
            return violations.empty() ? kExitOk : kExitSemantic;
        }
        if (realize_cmd->parsed()) {
            const auto pa = load_array(in_realize);
            try {
                const auto r = leonard::realize(pa, parse_basis(realize_basis));
                Json j;
                j["basis"] = leonard::basis_name(r.basis);
                j["A"] = leonard::matrix_to_json(r.A);
                j["Astar"] = leonard::matrix_to_json(r.Astar);
                emit(j);
            } catch (const std::invalid_argument& e) {
                throw SemanticError(e.what());
            }
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            const auto pa = load_array(in_verify);
            const auto report = leonard::verify_identities(pa);
            emit(leonard::report_to_json(report));
            return report.all_passed() ? kExitOk : kExitSemantic;
        }
        if (classify_cmd->parsed()) {
            const auto pa = load_array(in_classify);
            try {
                emit(leonard::classification_to_json(leonard::classify(pa)));
            } catch (const std::invalid_argument& e) {
                throw SemanticError(e.what());
            }
            return kExitOk;
        }
        if (orbit_cmd->parsed()) {
            const auto pa = load_array(in_orbit);
            if (!leonard::is_valid(pa)) throw SemanticError("parameter array fails validation");
            Json j = Json::array();
            for (const auto& member : leonard::d4_orbit(pa))
                j.push_back(leonard::parameter_array_to_json(member));
            emit(j);
            return kExitOk;
        }
        if (table_cmd->parsed()) {
            const auto pa = load_array(in_table);
            try {
                Json j;
                if (table_what == "P") {
                    j = leonard::matrix_to_json(leonard::p_matrix(pa));
                } else if (table_what == "gram") {
                    j = leonard::matrix_to_json(leonard::gram_matrix(pa));
                } else if (table_what == "u" || table_what == "v" || table_what == "p") {
                    const auto ps = leonard::polynomial_set(pa);
                    const auto& polys = table_what == "u"   ? ps.u
                                        : table_what == "v" ? ps.v
                                                            : ps.p;
                    leonard::Matrix t(pa.field, pa.d + 1, pa.d + 1);
                    for (std::size_t i = 0; i <= pa.d; ++i)
                        for (std::size_t col = 0; col <= pa.d; ++col)
                            t.set(i, col, polys[i].eval(pa.theta[col]));
                    j = leonard::matrix_to_json(t);
                } else {
                    throw UsageError("unknown table kind: " + table_what);
                }
                emit(j);
            } catch (const std::invalid_argument& e) {
                throw SemanticError(e.what());
            }
            return kExitOk;
        }
        if (aw_cmd->parsed()) {
            const auto pa = load_array(in_aw);
            try {
                const auto r = leonard::realize(pa, parse_basis(aw_basis));
                emit(leonard::aw_params_to_json(leonard::solve_askey_wilson(r)));
            } catch (const std::invalid_argument& e) {
                throw SemanticError(e.what());
            } catch (const std::domain_error& e) {
                throw SemanticError(e.what());
            }
            return kExitOk;
        }
        if (ix_cmd->parsed()) {
            const auto pa = load_array(in_ix);
            try {
                emit(leonard::intersection_numbers_to_json(leonard::intersection_numbers(pa)));
            } catch (const std::invalid_argument& e) {
                throw SemanticError(e.what());
            }
            return kExitOk;
        }
        return emit_error(kExitUsage, "no subcommand given");
    } catch (const SemanticError& e) {
        return emit_error(kExitSemantic, e.what());
    } catch (const UsageError& e) {
        return emit_error(kExitUsage, e.what());
    } catch (const std::exception& e) {
        return emit_error(kExitUsage, e.what());
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
