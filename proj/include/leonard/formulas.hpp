#ifndef LEONARD_FORMULAS_HPP
#define LEONARD_FORMULAS_HPP

#include "leonard/parray.hpp"

namespace leonard {

/// Scalar data of the Leonard system attached to a parameter array,
/// computed from the closed forms.  Index conventions: a has size d+1;
/// x is stored with x[0] = 0 so x_i = x[i] for 1 <= i <= d; b carries
/// b_d = 0 and c carries c_0 = 0.
struct DerivedScalars {
    std::vector<FieldElement> a;            // a_0..a_d
    std::vector<FieldElement> x;            // x_0 = 0, x_1..x_d
    std::vector<FieldElement> b;            // b_0..b_{d-1}, b_d = 0
    std::vector<FieldElement> c;            // c_0 = 0, c_1..c_d
    std::vector<FieldElement> k;            // k_0..k_d
    std::vector<FieldElement> m;            // m_0..m_d
    FieldElement nu;
    std::vector<FieldElement> p_at_theta0;  // p_0(theta_0)..p_d(theta_0)
};

/// The polynomial families attached to a parameter array.  p_i is monic
/// of degree i (p has d+2 entries); u_i = p_i / p_i(theta_0);
/// v_i = k_i u_i; tau/eta are the rising products of eigenvalue shifts,
/// degrees 0..d+1.
struct PolynomialSet {
    std::vector<Poly> p;         // p_0..p_{d+1}
    std::vector<Poly> u;         // u_0..u_d
    std::vector<Poly> v;         // v_0..v_d
    std::vector<Poly> tau;       // tau_0..tau_{d+1}
    std::vector<Poly> tau_star;
    std::vector<Poly> eta;
    std::vector<Poly> eta_star;
};

/// tau_i = prod_{h<i}(lambda - points[h]); returns degrees 0..count.
std::vector<Poly> shift_products(const std::vector<FieldElement>& points,
                                 std::size_t count);

/// All closed-form scalars.  The input must validate; the nonzeroness
/// guarantees (x_i, b_i, c_i, k_i, m_i, nu, p_i(theta_0)) then hold
/// automatically and a vanishing denominator signals a defect upstream.
DerivedScalars derived_scalars(const ParameterArray& pa);

/// Polynomial families; p is computed both by the three-term recurrence
/// and by the closed form, which must agree (an internal cross-check
/// that throws std::logic_error on mismatch).
PolynomialSet polynomial_set(const ParameterArray& pa);

/// (d+1) x (d+1) table with entry (i, j) = u_i(theta_j).
Matrix u_table(const ParameterArray& pa);

} // namespace leonard

#endif
