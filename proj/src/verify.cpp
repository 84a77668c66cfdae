#include "leonard/verify.hpp"

#include <algorithm>
#include <sstream>

namespace leonard {

namespace {

std::string witness_entry(const char* what, std::size_t i, std::size_t j,
                          const FieldElement& lhs, const FieldElement& rhs) {
    std::ostringstream os;
    os << what << " at (" << i << "," << j << "): " << lhs.str() << " vs " << rhs.str();
    return os.str();
}

// Everything the catalog consumes, computed once.
struct Context {
    ParameterArray pa;
    ParameterArray dual;
    DerivedScalars s;
    DerivedScalars sd;
    PolynomialSet ps;
    Realization monic, split, standard;
    Realization dual_standard;
    IdempotentSet std_ids;
    Matrix p;

    explicit Context(const ParameterArray& input)
        : pa(input), dual(d4_apply(input, D4Element::star())), s(derived_scalars(pa)),
          sd(derived_scalars(dual)), ps(polynomial_set(pa)),
          monic(realize(pa, Basis::Monic)), split(realize(pa, Basis::Split)),
          standard(realize(pa, Basis::Standard)),
          dual_standard(realize(dual, Basis::Standard)),
          std_ids(idempotents(standard)), p(p_matrix(pa)) {}
};

using CheckFn = void (*)(const Context&, CheckResult&);

void check_duality(const Context& c, CheckResult& out) {
    const Matrix t = u_table(c.pa);
    const Matrix ts = u_table(c.dual);
    for (std::size_t i = 0; i <= c.pa.d; ++i)
        for (std::size_t j = 0; j <= c.pa.d; ++j)
            if (t.at(i, j) != ts.at(j, i)) {
                out.witness = witness_entry("u_i(theta_j) != u*_j(theta*_i)", i, j,
                                            t.at(i, j), ts.at(j, i));
                return;
            }
    out.passed = true;
}

void check_three_term(const Context& c, CheckResult& out) {
    const std::size_t d = c.pa.d;
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; j <= d; ++j) {
            const FieldElement uij = c.ps.u[i].eval(c.pa.theta[j]);
            FieldElement rhs = c.s.a[i] * uij;
            if (i + 1 <= d) rhs += c.s.b[i] * c.ps.u[i + 1].eval(c.pa.theta[j]);
            if (i >= 1) rhs += c.s.c[i] * c.ps.u[i - 1].eval(c.pa.theta[j]);
            if (c.pa.theta[j] * uij != rhs) {
                out.witness = witness_entry("recurrence", i, j, c.pa.theta[j] * uij, rhs);
                return;
            }
        }
    out.passed = true;
}

void check_difference_eq(const Context& c, CheckResult& out) {
    const std::size_t d = c.pa.d;
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; j <= d; ++j) {
            const FieldElement uij = c.ps.u[i].eval(c.pa.theta[j]);
            FieldElement rhs = c.sd.a[j] * uij;
            if (j + 1 <= d) rhs += c.sd.b[j] * c.ps.u[i].eval(c.pa.theta[j + 1]);
            if (j >= 1) rhs += c.sd.c[j] * c.ps.u[i].eval(c.pa.theta[j - 1]);
            if (c.pa.theta_star[i] * uij != rhs) {
                out.witness =
                    witness_entry("difference equation", i, j, c.pa.theta_star[i] * uij, rhs);
                return;
            }
        }
    out.passed = true;
}

void check_orthogonality_v_rows(const Context& c, CheckResult& out) {
    const std::size_t d = c.pa.d;
    const FieldElement zero = FieldElement::zero(c.pa.field);
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; j <= d; ++j) {
            FieldElement acc = zero;
            for (std::size_t r = 0; r <= d; ++r)
                acc += c.ps.v[i].eval(c.pa.theta[r]) * c.ps.v[j].eval(c.pa.theta[r]) *
                       c.sd.k[r];
            const FieldElement want = i == j ? c.s.nu * c.s.k[i] : zero;
            if (acc != want) {
                out.witness = witness_entry("v-orthogonality", i, j, acc, want);
                return;
            }
        }
    out.passed = true;
}

void check_orthogonality_v_columns(const Context& c, CheckResult& out) {
    const std::size_t d = c.pa.d;
    const FieldElement zero = FieldElement::zero(c.pa.field);
    for (std::size_t r = 0; r <= d; ++r)
        for (std::size_t t = 0; t <= d; ++t) {
            FieldElement acc = zero;
            for (std::size_t i = 0; i <= d; ++i)
                acc += c.ps.v[i].eval(c.pa.theta[r]) * c.ps.v[i].eval(c.pa.theta[t]) /
                       c.s.k[i];
            const FieldElement want = r == t ? c.s.nu / c.sd.k[r] : zero;
            if (acc != want) {
                out.witness = witness_entry("dual v-orthogonality", r, t, acc, want);
                return;
            }
        }
    out.passed = true;
}

void check_orthogonality_u_rows(const Context& c, CheckResult& out) {
    const std::size_t d = c.pa.d;
    const FieldElement zero = FieldElement::zero(c.pa.field);
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; j <= d; ++j) {
            FieldElement acc = zero;
            for (std::size_t r = 0; r <= d; ++r)
                acc += c.ps.u[i].eval(c.pa.theta[r]) * c.ps.u[j].eval(c.pa.theta[r]) *
                       c.sd.k[r];
            const FieldElement want = i == j ? c.s.nu / c.s.k[i] : zero;
            if (acc != want) {
                out.witness = witness_entry("u-orthogonality", i, j, acc, want);
                return;
            }
        }
    out.passed = true;
}

void check_orthogonality_u_columns(const Context& c, CheckResult& out) {
    const std::size_t d = c.pa.d;
    const FieldElement zero = FieldElement::zero(c.pa.field);
    for (std::size_t r = 0; r <= d; ++r)
        for (std::size_t t = 0; t <= d; ++t) {
            FieldElement acc = zero;
            for (std::size_t i = 0; i <= d; ++i)
                acc += c.ps.u[i].eval(c.pa.theta[r]) * c.ps.u[i].eval(c.pa.theta[t]) *
                       c.s.k[i];
            const FieldElement want = r == t ? c.s.nu / c.sd.k[r] : zero;
            if (acc != want) {
                out.witness = witness_entry("dual u-orthogonality", r, t, acc, want);
                return;
            }
        }
    out.passed = true;
}

void check_orthogonality_p_rows(const Context& c, CheckResult& out) {
    const std::size_t d = c.pa.d;
    const FieldElement zero = FieldElement::zero(c.pa.field);
    FieldElement xprod = FieldElement::one(c.pa.field);
    for (std::size_t i = 0; i <= d; ++i) {
        if (i > 0) xprod *= c.s.x[i];
        for (std::size_t j = 0; j <= d; ++j) {
            FieldElement acc = zero;
            for (std::size_t r = 0; r <= d; ++r)
                acc += c.ps.p[i].eval(c.pa.theta[r]) * c.ps.p[j].eval(c.pa.theta[r]) *
                       c.s.m[r];
            const FieldElement want = i == j ? xprod : zero;
            if (acc != want) {
                out.witness = witness_entry("p-orthogonality", i, j, acc, want);
                return;
            }
        }
    }
    out.passed = true;
}

void check_orthogonality_p_columns(const Context& c, CheckResult& out) {
    const std::size_t d = c.pa.d;
    const FieldElement zero = FieldElement::zero(c.pa.field);
    for (std::size_t r = 0; r <= d; ++r)
        for (std::size_t t = 0; t <= d; ++t) {
            FieldElement acc = zero;
            FieldElement xprod = FieldElement::one(c.pa.field);
            for (std::size_t i = 0; i <= d; ++i) {
                if (i > 0) xprod *= c.s.x[i];
                acc += c.ps.p[i].eval(c.pa.theta[r]) * c.ps.p[i].eval(c.pa.theta[t]) / xprod;
            }
            const FieldElement want = r == t ? c.s.m[r].inverse() : zero;
            if (acc != want) {
                out.witness = witness_entry("dual p-orthogonality", r, t, acc, want);
                return;
            }
        }
    out.passed = true;
}

void check_frame(const Context& c, CheckResult& out) {
    FieldElement lhs = FieldElement::one(c.pa.field);
    for (std::size_t i = 1; i <= c.pa.d; ++i) lhs *= c.pa.theta[0] - c.pa.theta[i];
    FieldElement rhs = c.s.nu;
    for (std::size_t i = 1; i <= c.pa.d; ++i) rhs *= c.s.c[i];
    if (lhs != rhs) {
        out.witness = witness_entry("frame identity", 0, 0, lhs, rhs);
        return;
    }
    out.passed = true;
}

void check_p_dual_p(const Context& c, CheckResult& out) {
    const Matrix pd = p_matrix(c.dual);
    const Matrix want = Matrix::identity(c.pa.field, c.pa.d + 1) * c.s.nu;
    if (pd * c.p != want) {
        out.witness = "P(star) P != nu I";
        return;
    }
    out.passed = true;
}

void check_intertwine_a(const Context& c, CheckResult& out) {
    const Matrix lhs = Matrix::diagonal(c.pa.theta) * c.p;
    const Matrix rhs = c.p * c.standard.A;
    if (lhs != rhs) {
        out.witness = "diag(theta) P != P A(standard)";
        return;
    }
    out.passed = true;
}

void check_intertwine_astar(const Context& c, CheckResult& out) {
    const Matrix lhs = c.dual_standard.A * c.p;
    const Matrix rhs = c.p * Matrix::diagonal(c.pa.theta_star);
    if (lhs != rhs) {
        out.witness = "A*(dual standard) P != P diag(theta*)";
        return;
    }
    out.passed = true;
}

void leonard_axioms_for(const Realization& r, CheckResult& out) {
    const IdempotentSet ids = idempotents(r);
    const std::size_t d = r.pa.d;
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; j <= d; ++j) {
            const std::size_t gap = i > j ? i - j : j - i;
            const bool estar_zero = (ids.E[i] * r.Astar * ids.E[j]).is_zero();
            if (gap > 1 && !estar_zero) {
                out.witness = witness_entry("E_i A* E_j != 0", i, j,
                                            FieldElement::one(r.pa.field),
                                            FieldElement::zero(r.pa.field));
                return;
            }
            if (gap == 1 && estar_zero) {
                out.witness = witness_entry("E_i A* E_j = 0", i, j,
                                            FieldElement::zero(r.pa.field),
                                            FieldElement::one(r.pa.field));
                return;
            }
            const bool e_zero = (ids.Estar[i] * r.A * ids.Estar[j]).is_zero();
            if (gap > 1 && !e_zero) {
                out.witness = witness_entry("E*_i A E*_j != 0", i, j,
                                            FieldElement::one(r.pa.field),
                                            FieldElement::zero(r.pa.field));
                return;
            }
            if (gap == 1 && e_zero) {
                out.witness = witness_entry("E*_i A E*_j = 0", i, j,
                                            FieldElement::zero(r.pa.field),
                                            FieldElement::one(r.pa.field));
                return;
            }
        }
    out.passed = true;
}

void check_trace_a(const Context& c, CheckResult& out) {
    for (std::size_t i = 0; i <= c.pa.d; ++i) {
        const FieldElement tr = (c.std_ids.Estar[i] * c.standard.A).trace();
        if (tr != c.s.a[i]) {
            out.witness = witness_entry("tr(E*_i A) != a_i", i, i, tr, c.s.a[i]);
            return;
        }
    }
    out.passed = true;
}

void check_trace_x(const Context& c, CheckResult& out) {
    for (std::size_t i = 1; i <= c.pa.d; ++i) {
        const FieldElement tr =
            (c.std_ids.Estar[i] * c.standard.A * c.std_ids.Estar[i - 1] * c.standard.A)
                .trace();
        if (tr != c.s.x[i]) {
            out.witness = witness_entry("tr(E*_i A E*_{i-1} A) != x_i", i, i, tr, c.s.x[i]);
            return;
        }
    }
    out.passed = true;
}

void check_trace_m(const Context& c, CheckResult& out) {
    for (std::size_t i = 0; i <= c.pa.d; ++i) {
        const FieldElement tr = (c.std_ids.E[i] * c.std_ids.Estar[0]).trace();
        if (tr != c.s.m[i]) {
            out.witness = witness_entry("tr(E_i E*_0) != m_i", i, i, tr, c.s.m[i]);
            return;
        }
    }
    out.passed = true;
}

void check_trace_nu(const Context& c, CheckResult& out) {
    const FieldElement tr = (c.std_ids.E[0] * c.std_ids.Estar[0]).trace();
    if (tr != c.s.nu.inverse()) {
        out.witness = witness_entry("tr(E_0 E*_0) != 1/nu", 0, 0, tr, c.s.nu.inverse());
        return;
    }
    out.passed = true;
}

void check_trace_k(const Context& c, CheckResult& out) {
    for (std::size_t i = 0; i <= c.pa.d; ++i) {
        const FieldElement mstar = (c.std_ids.Estar[i] * c.std_ids.E[0]).trace();
        if (mstar * c.s.nu != c.s.k[i]) {
            out.witness = witness_entry("nu tr(E*_i E_0) != k_i", i, i, mstar * c.s.nu,
                                        c.s.k[i]);
            return;
        }
    }
    out.passed = true;
}

void check_lemma_xiprod(const Context& c, CheckResult& out) {
    for (std::size_t i = 0; i <= c.pa.d; ++i) {
        if (c.std_ids.Estar[i] * c.standard.A * c.std_ids.Estar[i] !=
            c.std_ids.Estar[i] * c.s.a[i]) {
            out.witness = "E*_i A E*_i != a_i E*_i at i=" + std::to_string(i);
            return;
        }
        if (i >= 1 &&
            c.std_ids.Estar[i] * c.standard.A * c.std_ids.Estar[i - 1] * c.standard.A *
                    c.std_ids.Estar[i] !=
                c.std_ids.Estar[i] * c.s.x[i]) {
            out.witness = "E*_i A E*_{i-1} A E*_i != x_i E*_i at i=" + std::to_string(i);
            return;
        }
    }
    out.passed = true;
}

void check_lemma_mid(const Context& c, CheckResult& out) {
    for (std::size_t i = 0; i <= c.pa.d; ++i)
        if (c.std_ids.E[i] * c.std_ids.Estar[0] * c.std_ids.E[i] !=
            c.std_ids.E[i] * c.s.m[i]) {
            out.witness = "E_i E*_0 E_i != m_i E_i at i=" + std::to_string(i);
            return;
        }
    out.passed = true;
}

void check_lemma_threeone(const Context& c, CheckResult& out) {
    const Matrix& e0 = c.std_ids.E[0];
    const Matrix& f0 = c.std_ids.Estar[0];
    if (e0 * f0 * e0 * c.s.nu != e0) {
        out.witness = "nu E_0 E*_0 E_0 != E_0";
        return;
    }
    if (f0 * e0 * f0 * c.s.nu != f0) {
        out.witness = "nu E*_0 E_0 E*_0 != E*_0";
        return;
    }
    out.passed = true;
}

void check_lemma_eispoly(const Context& c, CheckResult& out) {
    FieldElement xprod = FieldElement::one(c.pa.field);
    for (std::size_t i = 0; i <= c.pa.d; ++i) {
        if (i > 0) xprod *= c.s.x[i];
        const Matrix pia = mat_poly_eval(c.ps.p[i], c.standard.A);
        if (pia * c.std_ids.Estar[0] * pia != c.std_ids.Estar[i] * xprod) {
            out.witness = "p_i(A) E*_0 p_i(A) != x_1..x_i E*_i at i=" + std::to_string(i);
            return;
        }
    }
    out.passed = true;
}

void check_lemma_pimon(const Context& c, CheckResult& out) {
    Matrix apow = Matrix::identity(c.pa.field, c.pa.d + 1);
    for (std::size_t i = 0; i <= c.pa.d; ++i) {
        if (i > 0) apow = apow * c.standard.A;
        const Matrix lhs = mat_poly_eval(c.ps.p[i], c.standard.A) * c.std_ids.Estar[0];
        const Matrix rhs = c.std_ids.Estar[i] * apow * c.std_ids.Estar[0];
        if (lhs != rhs) {
            out.witness = "p_i(A) E*_0 != E*_i A^i E*_0 at i=" + std::to_string(i);
            return;
        }
    }
    out.passed = true;
}

void check_lemma_vi3(const Context& c, CheckResult& out) {
    // u = sum of the standard basis is the all-ones coordinate vector.
    const std::size_t n = c.pa.d + 1;
    std::vector<FieldElement> u(n, FieldElement::one(c.pa.field));
    for (std::size_t i = 0; i < n; ++i) {
        const auto lhs = mat_poly_eval(c.ps.v[i], c.standard.A)
                             .apply(c.std_ids.Estar[0].apply(u));
        const auto rhs = c.std_ids.Estar[i].apply(u);
        if (lhs != rhs) {
            out.witness = "v_i(A) E*_0 u != E*_i u at i=" + std::to_string(i);
            return;
        }
    }
    out.passed = true;
}

void check_matrix_basis(const Context& c, CheckResult& out) {
    const std::size_t n = c.pa.d + 1;
    Matrix flat(c.pa.field, n * n, n * n);
    std::vector<Matrix> apow = {Matrix::identity(c.pa.field, n)};
    for (std::size_t r = 1; r < n; ++r) apow.push_back(apow.back() * c.standard.A);
    std::size_t row = 0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            const Matrix m = apow[r] * c.std_ids.Estar[0] * apow[s];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) flat.set(row, i * n + j, m.at(i, j));
            ++row;
        }
    if (matrix_rank(flat) != n * n) {
        out.witness = "A^r E*_0 A^s are linearly dependent";
        return;
    }
    out.passed = true;
}

} // namespace

VerificationReport verify_identities(const ParameterArray& pa) {
    VerificationReport report;
    {
        CheckResult pa_check{"pa_valid", false, ""};
        const auto violations = validate(pa);
        if (violations.empty()) {
            pa_check.passed = true;
        } else {
            std::ostringstream os;
            for (const auto& v : violations)
                os << pa_rule_name(v.rule) << " at " << v.index << "; ";
            pa_check.witness = os.str();
        }
        report.checks.push_back(pa_check);
        if (!pa_check.passed) return report; // downstream checks need a valid array
    }

    const Context c(pa);
    const std::vector<std::pair<std::string, CheckFn>> catalog = {
        {"duality_u_table", check_duality},
        {"three_term_recurrence", check_three_term},
        {"difference_equation", check_difference_eq},
        {"orthogonality_v_rows", check_orthogonality_v_rows},
        {"orthogonality_v_columns", check_orthogonality_v_columns},
        {"orthogonality_u_rows", check_orthogonality_u_rows},
        {"orthogonality_u_columns", check_orthogonality_u_columns},
        {"orthogonality_p_rows", check_orthogonality_p_rows},
        {"orthogonality_p_columns", check_orthogonality_p_columns},
        {"frame_identity", check_frame},
        {"p_dual_p", check_p_dual_p},
        {"intertwine_a", check_intertwine_a},
        {"intertwine_astar", check_intertwine_astar},
        {"trace_a", check_trace_a},
        {"trace_x", check_trace_x},
        {"trace_m", check_trace_m},
        {"trace_nu", check_trace_nu},
        {"trace_k", check_trace_k},
        {"lemma_xiprod", check_lemma_xiprod},
        {"lemma_mid", check_lemma_mid},
        {"lemma_threeone", check_lemma_threeone},
        {"lemma_eispoly", check_lemma_eispoly},
        {"lemma_pimon", check_lemma_pimon},
        {"lemma_vi3", check_lemma_vi3},
    };
    for (const auto& [name, fn] : catalog) {
        CheckResult result{name, false, ""};
        fn(c, result);
        report.checks.push_back(std::move(result));
    }
    for (auto [basis, name] :
         {std::pair{Basis::Monic, "leonard_axioms_monic"},
          std::pair{Basis::Split, "leonard_axioms_split"},
          std::pair{Basis::Standard, "leonard_axioms_standard"}}) {
        CheckResult result{name, false, ""};
        leonard_axioms_for(realize(pa, basis), result);
        report.checks.push_back(std::move(result));
    }
    if (pa.d <= 4) {
        CheckResult result{"matrix_basis", false, ""};
        check_matrix_basis(c, result);
        report.checks.push_back(std::move(result));
    }
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return report;
}

namespace {

// Row-reduces the augmented system and back-substitutes with free
// variables at zero; nullopt when inconsistent.
std::optional<std::pair<std::vector<FieldElement>, std::size_t>> solve_rectangular(
    const Matrix& a, const std::vector<FieldElement>& b) {
    const FieldSpec& f = a.field();
    Matrix aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, a.cols(), b[i]);
    }
    // Gaussian elimination restricted to the coefficient columns.
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pr = row;
        while (pr < a.rows() && aug.at(pr, col).is_zero()) ++pr;
        if (pr == a.rows()) continue;
        for (std::size_t j = 0; j <= a.cols(); ++j) {
            FieldElement t = aug.at(row, j);
            aug.set(row, j, aug.at(pr, j));
            aug.set(pr, j, t);
        }
        const FieldElement inv = aug.at(row, col).inverse();
        for (std::size_t j = 0; j <= a.cols(); ++j) aug.set(row, j, aug.at(row, j) * inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            const FieldElement factor = aug.at(i, col);
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j <= a.cols(); ++j)
                aug.set(i, j, aug.at(i, j) - factor * aug.at(row, j));
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < a.rows(); ++i)
        if (!aug.at(i, a.cols()).is_zero()) return std::nullopt;
    std::vector<FieldElement> x(a.cols(), FieldElement::zero(f));
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = aug.at(r, a.cols());
    return std::make_pair(std::move(x), pivot_cols.size());
}

} // namespace

AWParams solve_askey_wilson(const Realization& r) {
    const FieldSpec& f = r.pa.field;
    const std::size_t n = r.pa.d + 1;
    const Matrix &a = r.A, &as = r.Astar;
    const Matrix id = Matrix::identity(f, n);
    const Matrix aa = a * a, ss = as * as;
    const Matrix aas = a * as, asa = as * a;
    const Matrix a_as_a = a * as * a, as_a_as = as * a * as;
    const Matrix rhs1 = -(aa * as + as * aa);
    const Matrix rhs2 = -(ss * a + a * ss);

    // Unknowns: beta, gamma, gamma*, rho, rho*, omega, eta, eta*.
    Matrix sys(f, 2 * n * n, 8);
    std::vector<FieldElement> rhs;
    rhs.reserve(2 * n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            sys.set(row, 0, -a_as_a.at(i, j));
            sys.set(row, 1, -(aas.at(i, j) + asa.at(i, j)));
            sys.set(row, 2, -aa.at(i, j));
            sys.set(row, 3, -as.at(i, j));
            sys.set(row, 5, -a.at(i, j));
            sys.set(row, 6, -id.at(i, j));
            rhs.push_back(rhs1.at(i, j));
            ++row;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            sys.set(row, 0, -as_a_as.at(i, j));
            sys.set(row, 1, -ss.at(i, j));
            sys.set(row, 2, -(asa.at(i, j) + aas.at(i, j)));
            sys.set(row, 4, -a.at(i, j));
            sys.set(row, 5, -as.at(i, j));
            sys.set(row, 7, -id.at(i, j));
            rhs.push_back(rhs2.at(i, j));
            ++row;
        }

    auto solved = solve_rectangular(sys, rhs);
    if (!solved) throw std::domain_error("Askey-Wilson system is inconsistent");
    const auto& [x, rank] = *solved;
    AWParams params{x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7], rank == 8};

    // Substitute back; the relations must hold exactly.
    const Matrix lhs1 = aa * as - a_as_a * params.beta + as * aa -
                        (aas + asa) * params.gamma - as * params.rho;
    const Matrix want1 = aa * params.gamma_star + a * params.omega + id * params.eta;
    const Matrix lhs2 = ss * a - as_a_as * params.beta + a * ss -
                        (asa + aas) * params.gamma_star - a * params.rho_star;
    const Matrix want2 = ss * params.gamma + as * params.omega + id * params.eta_star;
    if (lhs1 != want1 || lhs2 != want2)
        throw std::domain_error("Askey-Wilson solution fails back-substitution");
    return params;
}

std::optional<ParameterArray> recognize_bidiagonal(const Matrix& a, const Matrix& astar,
                                                   const FieldSpec& field) {
    if (!structure_check(a, MatrixShape::LowerBidiagonal) ||
        !structure_check(astar, MatrixShape::UpperBidiagonal))
        throw std::invalid_argument("expected a lower bidiagonal and an upper bidiagonal matrix");
    if (a.rows() != astar.rows()) throw std::invalid_argument("matrix size mismatch");
    const std::size_t d = a.rows() - 1;
    std::vector<FieldElement> th, ths, vph, ph;
    for (std::size_t i = 0; i <= d; ++i) {
        th.push_back(a.at(i, i));
        ths.push_back(astar.at(i, i));
    }
    for (std::size_t i = 1; i <= d; ++i)
        vph.push_back(a.at(i, i - 1) * astar.at(i - 1, i));
    if (d >= 1) {
        if (th[0] == th[d]) return std::nullopt;
        const FieldElement span = th[0] - th[d];
        FieldElement partial = FieldElement::zero(field);
        for (std::size_t i = 1; i <= d; ++i) {
            partial += (th[i - 1] - th[d - i + 1]) / span;
            ph.push_back(vph[0] * partial + (ths[i] - ths[0]) * (th[d - i + 1] - th[0]));
        }
    }
    ParameterArray pa(field, th, ths, vph, ph);
    if (!is_valid(pa)) return std::nullopt;
    return pa;
}

VerificationReport check_tridiag_diag(const Matrix& a, const Matrix& astar,
                                      const ParameterArray& pa) {
    if (!structure_check(a, MatrixShape::Tridiagonal) ||
        !structure_check(astar, MatrixShape::Diagonal))
        throw std::invalid_argument("expected a tridiagonal and a diagonal matrix");
    if (a.rows() != pa.d + 1 || astar.rows() != pa.d + 1)
        throw std::invalid_argument("matrix size mismatch");
    if (!is_valid(pa))
        throw std::invalid_argument("parameter array fails validation");

    VerificationReport report;
    const DerivedScalars s = derived_scalars(pa);
    CheckResult diag{"diagonal_entries", true, ""};
    for (std::size_t i = 0; i <= pa.d; ++i)
        if (a.at(i, i) != s.a[i]) {
            diag.passed = false;
            diag.witness = witness_entry("A_ii", i, i, a.at(i, i), s.a[i]);
            break;
        }
    report.checks.push_back(diag);

    CheckResult cross{"cross_products", true, ""};
    for (std::size_t i = 1; i <= pa.d; ++i) {
        // varphi_i phi_i weighted by the dual eigenvalue gaps.
        FieldElement want = pa.varphi[i - 1] * pa.phi[i - 1];
        for (std::size_t h = 0; h + 2 <= i; ++h)
            want *= pa.theta_star[i - 1] - pa.theta_star[h];
        for (std::size_t h = 0; h + 1 <= i; ++h)
            want /= pa.theta_star[i] - pa.theta_star[h];
        for (std::size_t h = i + 1; h <= pa.d; ++h)
            want *= pa.theta_star[i] - pa.theta_star[h];
        for (std::size_t h = i; h <= pa.d; ++h)
            want /= pa.theta_star[i - 1] - pa.theta_star[h];
        if (a.at(i, i - 1) * a.at(i - 1, i) != want) {
            cross.passed = false;
            cross.witness = witness_entry("A_{i,i-1} A_{i-1,i}", i, i - 1,
                                          a.at(i, i - 1) * a.at(i - 1, i), want);
            break;
        }
    }
    report.checks.push_back(cross);

    CheckResult dual{"dual_diagonal", true, ""};
    for (std::size_t i = 0; i <= pa.d; ++i)
        if (astar.at(i, i) != pa.theta_star[i]) {
            dual.passed = false;
            dual.witness = witness_entry("A*_ii", i, i, astar.at(i, i), pa.theta_star[i]);
            break;
        }
    report.checks.push_back(dual);
    return report;
}

} // namespace leonard
