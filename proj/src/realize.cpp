#include "leonard/realize.hpp"

namespace leonard {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::Monic: return "monic";
        case Basis::Split: return "split";
        case Basis::Standard: return "standard";
    }
    return "?";
}

Realization realize(const ParameterArray& pa, Basis basis) {
    if (!is_valid(pa))
        throw std::invalid_argument("parameter array fails validation");
    const FieldSpec& f = pa.field;
    const std::size_t n = pa.d + 1;
    const FieldElement one = FieldElement::one(f);
    Matrix A(f, n, n), Astar(f, n, n);

    switch (basis) {
        case Basis::Monic: {
            const DerivedScalars s = derived_scalars(pa);
            for (std::size_t i = 0; i < n; ++i) {
                A.set(i, i, s.a[i]);
                Astar.set(i, i, pa.theta_star[i]);
                if (i > 0) {
                    A.set(i, i - 1, one);
                    A.set(i - 1, i, s.x[i]);
                }
            }
            break;
        }
        case Basis::Split: {
            for (std::size_t i = 0; i < n; ++i) {
                A.set(i, i, pa.theta[i]);
                Astar.set(i, i, pa.theta_star[i]);
                if (i > 0) {
                    A.set(i, i - 1, one);
                    Astar.set(i - 1, i, pa.varphi[i - 1]);
                }
            }
            break;
        }
        case Basis::Standard: {
            const DerivedScalars s = derived_scalars(pa);
            for (std::size_t i = 0; i < n; ++i) {
                A.set(i, i, s.a[i]);
                Astar.set(i, i, pa.theta_star[i]);
                if (i > 0) {
                    A.set(i, i - 1, s.c[i]);
                    A.set(i - 1, i, s.b[i - 1]);
                }
            }
            break;
        }
    }
    return Realization{basis, std::move(A), std::move(Astar), pa};
}

namespace {

std::vector<Matrix> lagrange_idempotents(const Matrix& m,
                                         const std::vector<FieldElement>& eigs) {
    const std::size_t n = m.rows();
    std::vector<Matrix> out;
    out.reserve(eigs.size());
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        Matrix e = Matrix::identity(m.field(), n);
        for (std::size_t j = 0; j < eigs.size(); ++j) {
            if (j == i) continue;
            Matrix shift = m;
            for (std::size_t t = 0; t < n; ++t)
                shift.set(t, t, shift.at(t, t) - eigs[j]);
            e = e * shift * (eigs[i] - eigs[j]).inverse();
        }
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

IdempotentSet idempotents(const Realization& r) {
    return IdempotentSet{lagrange_idempotents(r.A, r.pa.theta),
                         lagrange_idempotents(r.Astar, r.pa.theta_star)};
}

Matrix p_matrix(const ParameterArray& pa) {
    const PolynomialSet ps = polynomial_set(pa);
    const std::size_t n = pa.d + 1;
    Matrix p(pa.field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.set(i, j, ps.v[j].eval(pa.theta[i]));
    return p;
}

Matrix dagger_diag(const Realization& r) {
    if (r.basis == Basis::Split)
        throw std::invalid_argument("dagger diagonal needs A tridiagonal and A* diagonal");
    const std::size_t n = r.pa.d + 1;
    Matrix d(r.pa.field, n, n);
    FieldElement run = FieldElement::one(r.pa.field);
    d.set(0, 0, run);
    for (std::size_t i = 1; i < n; ++i) {
        run *= r.A.at(i - 1, i) / r.A.at(i, i - 1);
        d.set(i, i, run);
    }
    return d;
}

Matrix gram_matrix(const ParameterArray& pa) {
    const DerivedScalars s = derived_scalars(pa);
    std::vector<FieldElement> diag;
    diag.reserve(s.k.size());
    const FieldElement nu_inv = s.nu.inverse();
    for (const auto& k : s.k) diag.push_back(k * nu_inv);
    return Matrix::diagonal(diag);
}

namespace {

// First nonzero column of a rank-one matrix, as a vector.
std::vector<FieldElement> column_rep(const Matrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m.at(i, j).is_zero()) {
                std::vector<FieldElement> v;
                v.reserve(m.rows());
                for (std::size_t t = 0; t < m.rows(); ++t) v.push_back(m.at(t, j));
                return v;
            }
    throw std::logic_error("zero idempotent");
}

std::vector<FieldElement> scale_leading_one(std::vector<FieldElement> v) {
    for (const auto& e : v)
        if (!e.is_zero()) {
            const FieldElement inv = e.inverse();
            for (auto& t : v) t *= inv;
            return v;
        }
    throw std::logic_error("zero vector");
}

// span(cols of S1) meet span(cols of S2); columns of the result span the
// intersection.
std::vector<std::vector<FieldElement>> span_intersection(
    const FieldSpec& f, const std::vector<std::vector<FieldElement>>& s1,
    const std::vector<std::vector<FieldElement>>& s2) {
    const std::size_t n = s1.front().size();
    Matrix sys(f, n, s1.size() + s2.size());
    for (std::size_t j = 0; j < s1.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) sys.set(i, j, s1[j][i]);
    for (std::size_t j = 0; j < s2.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) sys.set(i, s1.size() + j, -s2[j][i]);
    std::vector<std::vector<FieldElement>> out;
    for (const auto& ker : kernel_basis(sys)) {
        std::vector<FieldElement> v(n, FieldElement::zero(f));
        for (std::size_t j = 0; j < s1.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) v[i] += s1[j][i] * ker[j];
        bool nonzero = false;
        for (const auto& e : v) nonzero = nonzero || !e.is_zero();
        if (nonzero) out.push_back(std::move(v));
    }
    return out;
}

bool parallel(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    // Rank of the 2 x n pair is at most 1.
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

} // namespace

std::vector<std::vector<FieldElement>> split_subspaces(const Realization& r) {
    const FieldSpec& f = r.pa.field;
    const std::size_t d = r.pa.d;
    if (r.basis == Basis::Split) {
        // The split realization is written in its own split basis.
        std::vector<std::vector<FieldElement>> axes;
        for (std::size_t i = 0; i <= d; ++i) {
            std::vector<FieldElement> e(d + 1, FieldElement::zero(f));
            e[i] = FieldElement::one(f);
            axes.push_back(std::move(e));
        }
        return axes;
    }

    const IdempotentSet ids = idempotents(r);
    std::vector<FieldElement> seed = scale_leading_one(column_rep(ids.Estar[0]));

    std::vector<std::vector<FieldElement>> w;
    w.push_back(seed);
    for (std::size_t i = 1; i <= d; ++i) {
        // w_i = (A - theta_{i-1} I) w_{i-1}
        std::vector<FieldElement> next = r.A.apply(w.back());
        for (std::size_t t = 0; t < next.size(); ++t)
            next[t] -= r.pa.theta[i - 1] * w.back()[t];
        w.push_back(std::move(next));
    }

    // Independent route: U_i as an intersection of idempotent column spans.
    for (std::size_t i = 0; i <= d; ++i) {
        std::vector<std::vector<FieldElement>> low, high;
        for (std::size_t h = 0; h <= i; ++h) low.push_back(column_rep(ids.Estar[h]));
        for (std::size_t k = i; k <= d; ++k) high.push_back(column_rep(ids.E[k]));
        const auto meet = span_intersection(f, low, high);
        if (meet.size() != 1 || !parallel(meet.front(), w[i]))
            throw std::logic_error("split decomposition routes disagree at index " +
                                   std::to_string(i));
    }
    return w;
}

IntersectionNumbers::IntersectionNumbers(std::size_t d, const FieldSpec& field)
    : d_(d), data_((d + 1) * (d + 1) * (d + 1), FieldElement::zero(field)) {}

const FieldElement& IntersectionNumbers::at(std::size_t h, std::size_t i,
                                            std::size_t j) const {
    if (h > d_ || i > d_ || j > d_) throw std::out_of_range("intersection number index");
    return data_[(h * (d_ + 1) + i) * (d_ + 1) + j];
}

void IntersectionNumbers::set(std::size_t h, std::size_t i, std::size_t j,
                              const FieldElement& v) {
    if (h > d_ || i > d_ || j > d_) throw std::out_of_range("intersection number index");
    data_[(h * (d_ + 1) + i) * (d_ + 1) + j] = v;
}

IntersectionNumbers intersection_numbers(const ParameterArray& pa) {
    const PolynomialSet ps = polynomial_set(pa);
    const std::size_t d = pa.d;
    IntersectionNumbers out(d, pa.field);
    const Poly& min_poly = ps.p[d + 1];
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; j <= d; ++j) {
            Poly rem = (ps.v[i] * ps.v[j]).divmod(min_poly).second;
            // The v_h are triangular in degree, so peel from the top.
            for (std::size_t h = d + 1; h-- > 0;) {
                const FieldElement num = rem.coeff(h);
                if (num.is_zero()) continue;
                const FieldElement coef = num / ps.v[h].coeff(h);
                out.set(h, i, j, coef);
                rem = rem - ps.v[h] * coef;
            }
            if (!rem.is_zero())
                throw std::logic_error("intersection-number reduction left a remainder");
        }
    return out;
}

Matrix monic_transition_matrix(const ParameterArray& pa) {
    const DerivedScalars s = derived_scalars(pa);
    const PolynomialSet ps = polynomial_set(pa);
    const ParameterArray dual = d4_apply(pa, D4Element::star());
    const PolynomialSet psd = polynomial_set(dual);
    const std::size_t n = pa.d + 1;
    Matrix x(pa.field, n, n);
    FieldElement xprod = FieldElement::one(pa.field);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) xprod *= s.x[i];
        for (std::size_t j = 0; j < n; ++j)
            x.set(i, j, ps.p[i].eval(pa.theta[j]) *
                            psd.p[j].eval(dual.theta[0]) / xprod);
    }
    return x;
}

} // namespace leonard
