#include "leonard/formulas.hpp"

namespace leonard {

std::vector<Poly> shift_products(const std::vector<FieldElement>& points,
                                 std::size_t count) {
    if (points.empty()) throw std::invalid_argument("empty point sequence");
    const FieldSpec& f = points.front().field();
    std::vector<Poly> out;
    out.reserve(count + 1);
    out.push_back(Poly::constant(FieldElement::one(f)));
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(out.back() * Poly::linear_shift(points[i]));
    return out;
}

namespace {

void require_valid(const ParameterArray& pa) {
    if (!is_valid(pa))
        throw std::invalid_argument("parameter array fails validation");
}

std::vector<FieldElement> reversed(const std::vector<FieldElement>& v) {
    return {v.rbegin(), v.rend()};
}

} // namespace

DerivedScalars derived_scalars(const ParameterArray& pa) {
    require_valid(pa);
    const FieldSpec& f = pa.field;
    const std::size_t d = pa.d;
    const FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);

    const auto tau_star = shift_products(pa.theta_star, d + 1);
    const auto eta_star = shift_products(reversed(pa.theta_star), d + 1);
    const auto eta = shift_products(reversed(pa.theta), d + 1);
    const auto tau = shift_products(pa.theta, d + 1);

    DerivedScalars s{std::vector<FieldElement>(d + 1, zero),
                     std::vector<FieldElement>(d + 1, zero),
                     std::vector<FieldElement>(d + 1, zero),
                     std::vector<FieldElement>(d + 1, zero),
                     std::vector<FieldElement>(d + 1, zero),
                     std::vector<FieldElement>(d + 1, zero),
                     zero,
                     std::vector<FieldElement>(d + 1, zero)};

    // a_i = theta_i + varphi_i/(th*_i - th*_{i-1}) + varphi_{i+1}/(th*_i - th*_{i+1});
    // the varphi_0 and varphi_{d+1} terms vanish and are dropped rather than
    // evaluated, so the out-of-range dual eigenvalues never appear.
    for (std::size_t i = 0; i <= d; ++i) {
        FieldElement v = pa.theta[i];
        if (i >= 1) v += pa.varphi[i - 1] / (pa.theta_star[i] - pa.theta_star[i - 1]);
        if (i + 1 <= d) v += pa.varphi[i] / (pa.theta_star[i] - pa.theta_star[i + 1]);
        s.a[i] = v;
    }

    // b_i, c_i, x_i = b_{i-1} c_i.
    for (std::size_t i = 0; i + 1 <= d; ++i)
        s.b[i] = pa.varphi[i] * tau_star[i].eval(pa.theta_star[i]) /
                 tau_star[i + 1].eval(pa.theta_star[i + 1]);
    for (std::size_t i = 1; i <= d; ++i)
        s.c[i] = pa.phi[i - 1] * eta_star[d - i].eval(pa.theta_star[i]) /
                 eta_star[d - i + 1].eval(pa.theta_star[i - 1]);
    for (std::size_t i = 1; i <= d; ++i) s.x[i] = s.b[i - 1] * s.c[i];

    // nu, k_i, m_i, p_i(theta_0).
    FieldElement phi_full = one;
    for (const auto& v : pa.phi) phi_full *= v;
    s.nu = eta[d].eval(pa.theta[0]) * eta_star[d].eval(pa.theta_star[0]) / phi_full;

    FieldElement vph_prod = one, ph_prod = one;
    const FieldElement eta_star_d0 = eta_star[d].eval(pa.theta_star[0]);
    for (std::size_t i = 0; i <= d; ++i) {
        if (i > 0) {
            vph_prod *= pa.varphi[i - 1];
            ph_prod *= pa.phi[i - 1];
        }
        s.k[i] = (vph_prod / ph_prod) * eta_star_d0 /
                 (tau_star[i].eval(pa.theta_star[i]) * eta_star[d - i].eval(pa.theta_star[i]));
        s.p_at_theta0[i] = vph_prod / tau_star[i].eval(pa.theta_star[i]);
    }

    FieldElement vph_prefix = one;
    for (std::size_t i = 0; i <= d; ++i) {
        if (i > 0) vph_prefix *= pa.varphi[i - 1];
        FieldElement ph_suffix = one;
        for (std::size_t j = 1; j + i <= d; ++j) ph_suffix *= pa.phi[j - 1];
        s.m[i] = vph_prefix * ph_suffix /
                 (eta_star_d0 * tau[i].eval(pa.theta[i]) * eta[d - i].eval(pa.theta[i]));
    }
    return s;
}

PolynomialSet polynomial_set(const ParameterArray& pa) {
    const DerivedScalars s = derived_scalars(pa);
    const FieldSpec& f = pa.field;
    const std::size_t d = pa.d;

    PolynomialSet ps;
    ps.tau = shift_products(pa.theta, d + 1);
    ps.tau_star = shift_products(pa.theta_star, d + 1);
    ps.eta = shift_products(reversed(pa.theta), d + 1);
    ps.eta_star = shift_products(reversed(pa.theta_star), d + 1);

    std::vector<FieldElement> x_args(s.x.begin() + 1, s.x.end());
    ps.p = poly_three_term(s.a, x_args);

    // Closed form of each p_i, cross-checked against the recurrence; a
    // mismatch means the field arithmetic itself is broken.
    for (std::size_t i = 0; i <= d; ++i) {
        Poly closed = Poly::zero(f);
        FieldElement vph_tail = FieldElement::one(f); // varphi_{h+1}..varphi_i
        std::vector<FieldElement> weights(i + 1, FieldElement::zero(f));
        for (std::size_t h = i + 1; h-- > 0;) {
            weights[h] = vph_tail;
            if (h > 0) vph_tail *= pa.varphi[h - 1];
        }
        const FieldElement denom = ps.tau_star[i].eval(pa.theta_star[i]);
        for (std::size_t h = 0; h <= i; ++h)
            closed = closed +
                     ps.tau[h] * (weights[h] * ps.tau_star[h].eval(pa.theta_star[i]) / denom);
        if (closed != ps.p[i])
            throw std::logic_error("three-term recurrence and closed form disagree at p_" +
                                   std::to_string(i));
    }

    for (std::size_t i = 0; i <= d; ++i) {
        ps.u.push_back(ps.p[i] * s.p_at_theta0[i].inverse());
        ps.v.push_back(ps.u.back() * s.k[i]);
    }
    return ps;
}

Matrix u_table(const ParameterArray& pa) {
    const PolynomialSet ps = polynomial_set(pa);
    const std::size_t n = pa.d + 1;
    Matrix t(pa.field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.set(i, j, ps.u[i].eval(pa.theta[j]));
    return t;
}

} // namespace leonard
