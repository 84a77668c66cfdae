#ifndef LEONARD_VERIFY_HPP
#define LEONARD_VERIFY_HPP

#include "leonard/realize.hpp"

namespace leonard {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness; // empty when passed; exact counterexample otherwise
};

struct VerificationReport {
    std::vector<CheckResult> checks; // sorted by check name

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Runs the full identity catalog against the Leonard system of pa:
/// PA re-validation, Askey-Wilson duality, three-term recurrence,
/// difference equation, the six orthogonality sums, the frame identity,
/// P(star) P = nu I, the standard-basis intertwining relations, the
/// Leonard-system axioms in all three realizations, the five trace
/// cross-checks, the structural idempotent lemmas, and (for d <= 4)
/// linear independence of the A^r E*_0 A^s basis.  Check names are a
/// stable contract; the report is sorted by name.  An invalid array
/// yields a report containing only the failing pa_valid check.
VerificationReport verify_identities(const ParameterArray& pa);

struct AWParams {
    FieldElement beta, gamma, gamma_star, rho, rho_star, omega, eta, eta_star;
    bool unique = true; // false for d <= 2 where free coordinates were zeroed
};

/// Solves the two cubic relations
///   A^2 A* - beta A A* A + A* A^2 - gamma (A A* + A* A) - rho A*
///     = gamma* A^2 + omega A + eta I
///   A*^2 A - beta A* A A* + A A*^2 - gamma* (A* A + A A*) - rho* A
///     = gamma A*^2 + omega A* + eta* I
/// exactly as a linear system in the eight scalars.  Unique for d >= 3;
/// for smaller d the free coordinates are set to zero and flagged.
/// Throws std::domain_error when the system is inconsistent.
AWParams solve_askey_wilson(const Realization& r);

/// Reads a parameter array off a lower-bidiagonal / upper-bidiagonal
/// pair: theta from diag(A), theta* from diag(A*), varphi from the
/// subdiagonal-superdiagonal products, phi from the PA4 sum.  Returns
/// the array iff it validates.
std::optional<ParameterArray> recognize_bidiagonal(const Matrix& a, const Matrix& astar,
                                                   const FieldSpec& field);

/// Checks that a tridiagonal A and diagonal A* realize pa in some
/// standard-type basis: diagonal entries, subdiagonal-superdiagonal
/// cross products, and the dual diagonal.
VerificationReport check_tridiag_diag(const Matrix& a, const Matrix& astar,
                                      const ParameterArray& pa);

} // namespace leonard

#endif
