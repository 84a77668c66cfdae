#include "leonard/parray.hpp"

#include <algorithm>

namespace leonard {

ParameterArray::ParameterArray(FieldSpec f, std::vector<FieldElement> th,
                               std::vector<FieldElement> ths,
                               std::vector<FieldElement> vph,
                               std::vector<FieldElement> ph)
    : field(std::move(f)), theta(std::move(th)), theta_star(std::move(ths)),
      varphi(std::move(vph)), phi(std::move(ph)) {
    if (theta.empty()) throw std::invalid_argument("empty eigenvalue sequence");
    d = theta.size() - 1;
    if (theta_star.size() != d + 1 || varphi.size() != d || phi.size() != d)
        throw std::invalid_argument("parameter array length mismatch");
    auto check = [&](const std::vector<FieldElement>& v) {
        for (const auto& e : v)
            if (e.field() != field)
                throw std::invalid_argument("parameter array element not in the stated field");
    };
    check(theta);
    check(theta_star);
    check(varphi);
    check(phi);
}

FieldElement ParameterArray::varphi_ext(std::size_t j) const {
    if (j >= 1 && j <= d) return varphi[j - 1];
    return FieldElement::zero(field);
}

FieldElement ParameterArray::phi_ext(std::size_t j) const {
    if (j >= 1 && j <= d) return phi[j - 1];
    return FieldElement::zero(field);
}

bool ParameterArray::operator==(const ParameterArray& other) const {
    return field == other.field && d == other.d && theta == other.theta &&
           theta_star == other.theta_star && varphi == other.varphi && phi == other.phi;
}

std::string pa_rule_name(PARule rule) {
    switch (rule) {
        case PARule::PA1: return "PA1";
        case PARule::PA2: return "PA2";
        case PARule::PA3: return "PA3";
        case PARule::PA4: return "PA4";
        case PARule::PA5: return "PA5";
    }
    return "?";
}

std::vector<PAViolation> validate(const ParameterArray& pa) {
    std::vector<PAViolation> out;
    const std::size_t d = pa.d;
    bool pa1_ok = true;
    auto check_distinct = [&](const std::vector<FieldElement>& v, const char* label) {
        for (std::size_t i = 0; i <= d; ++i)
            for (std::size_t j = i + 1; j <= d; ++j)
                if (v[i] == v[j]) {
                    pa1_ok = false;
                    out.push_back({PARule::PA1, i, j, v[i], v[j],
                                   std::string(label) + " entries coincide"});
                }
    };
    check_distinct(pa.theta, "theta");
    check_distinct(pa.theta_star, "theta_star");

    const FieldElement zero = FieldElement::zero(pa.field);
    for (std::size_t i = 1; i <= d; ++i) {
        if (pa.varphi[i - 1].is_zero())
            out.push_back({PARule::PA2, i, 0, pa.varphi[i - 1], zero, "varphi vanishes"});
        if (pa.phi[i - 1].is_zero())
            out.push_back({PARule::PA2, i, 0, pa.phi[i - 1], zero, "phi vanishes"});
    }

    if (!pa1_ok) return out; // PA3-PA5 divide by PA1-guaranteed differences

    if (d >= 1) {
        const FieldElement span = pa.theta[0] - pa.theta[d];
        FieldElement partial = zero; // sum of (theta_h - theta_{d-h}) / span
        for (std::size_t i = 1; i <= d; ++i) {
            partial += (pa.theta[i - 1] - pa.theta[d - i + 1]) / span;
            const FieldElement rhs3 =
                pa.phi[0] * partial + (pa.theta_star[i] - pa.theta_star[0]) *
                                          (pa.theta[i - 1] - pa.theta[d]);
            if (pa.varphi[i - 1] != rhs3)
                out.push_back({PARule::PA3, i, 0, pa.varphi[i - 1], rhs3,
                               "varphi does not match its split-sequence sum"});
            const FieldElement rhs4 =
                pa.varphi[0] * partial + (pa.theta_star[i] - pa.theta_star[0]) *
                                             (pa.theta[d - i + 1] - pa.theta[0]);
            if (pa.phi[i - 1] != rhs4)
                out.push_back({PARule::PA4, i, 0, pa.phi[i - 1], rhs4,
                               "phi does not match its split-sequence sum"});
        }
    }

    if (d >= 3) {
        auto ratio = [](const std::vector<FieldElement>& v, std::size_t i) {
            return (v[i - 2] - v[i + 1]) / (v[i - 1] - v[i]);
        };
        const FieldElement ref = ratio(pa.theta, 2);
        for (std::size_t i = 2; i + 1 <= d; ++i) {
            const FieldElement r = ratio(pa.theta, i);
            if (r != ref)
                out.push_back({PARule::PA5, i, 0, r, ref, "eigenvalue ratio drifts"});
            const FieldElement rs = ratio(pa.theta_star, i);
            if (rs != ref)
                out.push_back({PARule::PA5, i, 0, rs, ref, "dual eigenvalue ratio drifts"});
        }
    }
    return out;
}

bool is_valid(const ParameterArray& pa) { return validate(pa).empty(); }

D4Element D4Element::identity() { return D4Element(false, false, false); }
D4Element D4Element::star() { return D4Element(true, false, false); }
D4Element D4Element::down() { return D4Element(false, false, true); }
D4Element D4Element::ddown() { return D4Element(false, true, false); }

const std::vector<D4Element>& D4Element::all() {
    static const std::vector<D4Element> elems = {
        D4Element(false, false, false), D4Element(false, false, true),
        D4Element(false, true, false),  D4Element(false, true, true),
        D4Element(true, false, false),  D4Element(true, false, true),
        D4Element(true, true, false),   D4Element(true, true, true),
    };
    return elems;
}

D4Element D4Element::operator*(const D4Element& other) const {
    // Composition "this after other".  Applying star swaps which idempotent
    // list the two reversal flags refer to.
    if (!star_)
        return D4Element(other.star_, other.flip_e_ != flip_e_, other.flip_estar_ != flip_estar_);
    return D4Element(!other.star_, other.flip_estar_ != flip_e_, other.flip_e_ != flip_estar_);
}

bool D4Element::operator==(const D4Element& other) const {
    return star_ == other.star_ && flip_e_ == other.flip_e_ && flip_estar_ == other.flip_estar_;
}

std::string D4Element::name() const {
    std::string n;
    if (star_) n = "star";
    if (flip_e_) n += (n.empty() ? "" : "_") + std::string("ddown");
    if (flip_estar_) n += (n.empty() ? "" : "_") + std::string("down");
    return n.empty() ? "identity" : n;
}

namespace {

ParameterArray star_action(const ParameterArray& pa) {
    std::vector<FieldElement> phi2(pa.phi.rbegin(), pa.phi.rend());
    return ParameterArray(pa.field, pa.theta_star, pa.theta, pa.varphi, phi2);
}

ParameterArray down_action(const ParameterArray& pa) {
    std::vector<FieldElement> ths(pa.theta_star.rbegin(), pa.theta_star.rend());
    std::vector<FieldElement> vph(pa.phi.rbegin(), pa.phi.rend());
    std::vector<FieldElement> ph(pa.varphi.rbegin(), pa.varphi.rend());
    return ParameterArray(pa.field, pa.theta, ths, vph, ph);
}

ParameterArray ddown_action(const ParameterArray& pa) {
    std::vector<FieldElement> th(pa.theta.rbegin(), pa.theta.rend());
    return ParameterArray(pa.field, th, pa.theta_star, pa.phi, pa.varphi);
}

} // namespace

ParameterArray d4_apply(const ParameterArray& pa, const D4Element& g) {
    ParameterArray out = pa;
    if (g.has_star()) out = star_action(out);
    if (g.flips_e()) out = ddown_action(out);
    if (g.flips_estar()) out = down_action(out);
    return out;
}

std::vector<ParameterArray> d4_orbit(const ParameterArray& pa) {
    std::vector<ParameterArray> orbit;
    for (const auto& g : D4Element::all()) {
        ParameterArray img = d4_apply(pa, g);
        if (std::find(orbit.begin(), orbit.end(), img) == orbit.end())
            orbit.push_back(std::move(img));
    }
    return orbit;
}

std::optional<FieldElement> beta_plus_one(const ParameterArray& pa) {
    if (pa.d < 3) return std::nullopt;
    return (pa.theta[0] - pa.theta[3]) / (pa.theta[1] - pa.theta[2]);
}

namespace {

void require_pa12(const ParameterArray& pa) {
    for (const auto& v : validate(pa))
        if (v.rule == PARule::PA1 || v.rule == PARule::PA2)
            throw std::invalid_argument("input violates " + pa_rule_name(v.rule));
}

} // namespace

bool pa_poly_characterization(const ParameterArray& pa) {
    require_pa12(pa);
    const FieldSpec& f = pa.field;
    const std::size_t d = pa.d;
    for (std::size_t i = 0; i <= d; ++i) {
        Poly lhs = Poly::zero(f), rhs = Poly::zero(f);
        Poly tau = Poly::constant(FieldElement::one(f));
        Poly eta = tau;
        FieldElement ts_prod = FieldElement::one(f); // (th*_i - th*_0)..(th*_i - th*_{n-1})
        FieldElement vph_prod = FieldElement::one(f);
        FieldElement ph_prod = FieldElement::one(f);
        for (std::size_t n = 0; n <= i; ++n) {
            if (n > 0) {
                tau = tau * Poly::linear_shift(pa.theta[n - 1]);
                eta = eta * Poly::linear_shift(pa.theta[d - n + 1]);
                ts_prod *= pa.theta_star[i] - pa.theta_star[n - 1];
                vph_prod *= pa.varphi[n - 1];
                ph_prod *= pa.phi[n - 1];
            }
            lhs = lhs + tau * (ts_prod / vph_prod);
            rhs = rhs + eta * (ts_prod / ph_prod);
        }
        // Both have degree exactly i with nonzero leading coefficient.
        const FieldElement scale = lhs.leading() / rhs.leading();
        if (lhs != rhs * scale) return false;
    }
    return true;
}

std::optional<Matrix> pa_bidiagonal_G(const ParameterArray& pa) {
    require_pa12(pa);
    const FieldSpec& f = pa.field;
    const std::size_t n = pa.d + 1;
    const FieldElement one = FieldElement::one(f);

    Matrix L(f, n, n), Lrev(f, n, n), U(f, n, n), Uphi(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        L.set(i, i, pa.theta[i]);
        Lrev.set(i, i, pa.theta[n - 1 - i]);
        U.set(i, i, pa.theta_star[i]);
        Uphi.set(i, i, pa.theta_star[i]);
        if (i > 0) {
            L.set(i, i - 1, one);
            Lrev.set(i, i - 1, one);
            U.set(i - 1, i, pa.varphi[i - 1]);
            Uphi.set(i - 1, i, pa.phi[i - 1]);
        }
    }

    // Intertwining equations M G = G M' as one homogeneous system in the
    // n^2 entries of G (row-major).
    Matrix sys(f, 2 * n * n, n * n);
    std::size_t row = 0;
    auto add_equations = [&](const Matrix& m, const Matrix& mp) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    sys.set(row, k * n + j, sys.at(row, k * n + j) + m.at(i, k));
                    sys.set(row, i * n + k, sys.at(row, i * n + k) - mp.at(k, j));
                }
                ++row;
            }
    };
    add_equations(L, Lrev);
    add_equations(U, Uphi);

    const auto basis = kernel_basis(sys);
    auto as_matrix = [&](const std::vector<FieldElement>& v) {
        Matrix g(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g.set(i, j, v[i * n + j]);
        return g;
    };
    for (const auto& v : basis) {
        Matrix g = as_matrix(v);
        if (matrix_inverse(g)) return g;
    }
    if (basis.size() > 1) {
        // Deterministic small-integer sweep over the solution space.
        std::vector<std::size_t> coeff(basis.size(), 0);
        const std::size_t radix = pa.d + 2;
        std::size_t tried = 0;
        while (true) {
            std::size_t pos = 0;
            while (pos < coeff.size() && coeff[pos] + 1 == radix) coeff[pos++] = 0;
            if (pos == coeff.size()) break;
            ++coeff[pos];
            std::vector<FieldElement> v(n * n, FieldElement::zero(f));
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (coeff[b] == 0) continue;
                const FieldElement c = FieldElement::from_integer(f, static_cast<std::int64_t>(coeff[b]));
                for (std::size_t t = 0; t < v.size(); ++t) v[t] += basis[b][t] * c;
            }
            Matrix g = as_matrix(v);
            if (matrix_inverse(g)) return g;
            if (++tried > 200000) break;
        }
    }
    return std::nullopt;
}

} // namespace leonard
