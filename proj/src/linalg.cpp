#include "leonard/linalg.hpp"

namespace leonard {

namespace {
void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (a != b) throw std::invalid_argument("field mismatch between operands");
}
} // namespace

Poly::Poly(const FieldSpec& field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same_field(field_, c.field());
    trim();
}

Poly Poly::constant(const FieldElement& c) {
    return Poly(c.field(), {c});
}

Poly Poly::linear_shift(const FieldElement& c) {
    return Poly(c.field(), {-c, FieldElement::one(c.field())});
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Poly::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return FieldElement::zero(field_);
}

FieldElement Poly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& other) const {
    require_same_field(field_, other.field_);
    std::vector<FieldElement> out;
    const std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(coeff(i) + other.coeff(i));
    return Poly(field_, std::move(out));
}

Poly Poly::operator-() const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
    require_same_field(field_, other.field_);
    if (is_zero() || other.is_zero()) return Poly(field_);
    std::vector<FieldElement> out(coeffs_.size() + other.coeffs_.size() - 1,
                                  FieldElement::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return Poly(field_, std::move(out));
}

Poly Poly::operator*(const FieldElement& s) const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c * s);
    return Poly(field_, std::move(out));
}

bool Poly::operator==(const Poly& other) const {
    return field_ == other.field_ && coeffs_ == other.coeffs_;
}

FieldElement Poly::eval(const FieldElement& x) const {
    FieldElement acc = FieldElement::zero(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    require_same_field(field_, divisor.field_);
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < divisor.degree()) return {Poly(field_), rem};
    std::vector<FieldElement> q(rem.degree() - divisor.degree() + 1,
                                FieldElement::zero(field_));
    const FieldElement lead_inv = divisor.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const int shift = rem.degree() - divisor.degree();
        const FieldElement f = rem.leading() * lead_inv;
        q[shift] = f;
        std::vector<FieldElement> sub(shift, FieldElement::zero(field_));
        for (const auto& c : divisor.coeffs()) sub.push_back(c * f);
        rem = rem - Poly(field_, std::move(sub));
    }
    return {Poly(field_, std::move(q)), rem};
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      entries_(rows * cols, FieldElement::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, FieldElement::one(field));
    return m;
}

Matrix Matrix::diagonal(const std::vector<FieldElement>& entries) {
    if (entries.empty()) throw std::invalid_argument("empty diagonal");
    Matrix m(entries.front().field(), entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
    return m;
}

const FieldElement& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return entries_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, const FieldElement& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    require_same_field(field_, v.field());
    entries_[i * cols_ + j] = v;
}

Matrix Matrix::operator+(const Matrix& other) const {
    require_same_field(field_, other.field_);
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + (-other); }

Matrix Matrix::operator*(const Matrix& other) const {
    require_same_field(field_, other.field_);
    if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.entries_[i * other.cols_ + j] += aik * other.at(k, j);
        }
    return out;
}

Matrix Matrix::operator*(const FieldElement& s) const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * s;
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

FieldElement Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
    FieldElement t = FieldElement::zero(field_);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<FieldElement> out(rows_, FieldElement::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

bool structure_check(const Matrix& m, MatrixShape shape) {
    if (!m.is_square()) throw std::invalid_argument("shape check on a non-square matrix");
    const std::size_t n = m.rows();
    auto band_zero_outside = [&](std::size_t lo, std::size_t hi) {
        // Entries (i,j) with j < i - lo or j > i + hi must vanish.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const bool inside = (j + lo >= i) && (j <= i + hi);
                if (!inside && !m.at(i, j).is_zero()) return false;
            }
        return true;
    };
    switch (shape) {
        case MatrixShape::Diagonal:
            return band_zero_outside(0, 0);
        case MatrixShape::Tridiagonal:
            return band_zero_outside(1, 1);
        case MatrixShape::IrreducibleTridiagonal: {
            if (!band_zero_outside(1, 1)) return false;
            for (std::size_t i = 0; i + 1 < n; ++i)
                if (m.at(i + 1, i).is_zero() || m.at(i, i + 1).is_zero()) return false;
            return true;
        }
        case MatrixShape::LowerBidiagonal:
            return band_zero_outside(1, 0);
        case MatrixShape::UpperBidiagonal:
            return band_zero_outside(0, 1);
    }
    return false;
}

std::vector<Poly> poly_three_term(const std::vector<FieldElement>& a,
                                  const std::vector<FieldElement>& x) {
    if (a.empty()) throw std::invalid_argument("empty diagonal sequence");
    if (x.size() + 1 != a.size())
        throw std::invalid_argument("length mismatch between diagonal and product sequences");
    const FieldSpec& field = a.front().field();
    const std::size_t d = a.size() - 1;
    std::vector<Poly> p;
    p.reserve(d + 2);
    p.push_back(Poly::constant(FieldElement::one(field)));
    const Poly lambda(field, {FieldElement::zero(field), FieldElement::one(field)});
    for (std::size_t i = 0; i <= d; ++i) {
        // p_{i+1} = (lambda - a_i) p_i - x_i p_{i-1}
        Poly next = (lambda - Poly::constant(a[i])) * p[i];
        if (i > 0) next = next - p[i - 1] * x[i - 1];
        p.push_back(std::move(next));
    }
    return p;
}

Matrix mat_poly_eval(const Poly& p, const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("polynomial of a non-square matrix");
    Matrix acc(m.field(), m.rows(), m.cols());
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t j = 0; j < m.rows(); ++j)
            acc.set(j, j, acc.at(j, j) + c[i]);
    }
    return acc;
}

namespace {

// Row-reduce [A | B] in place; returns pivot columns of A.
// Any nonzero pivot is valid over an exact field.
std::vector<std::size_t> eliminate(Matrix& a, Matrix* b) {
    const std::size_t n = a.rows(), m = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < n; ++col) {
        std::size_t pr = row;
        while (pr < n && a.at(pr, col).is_zero()) ++pr;
        if (pr == n) continue;
        if (pr != row) {
            for (std::size_t j = 0; j < m; ++j) {
                FieldElement t = a.at(row, j);
                a.set(row, j, a.at(pr, j));
                a.set(pr, j, t);
            }
            if (b)
                for (std::size_t j = 0; j < b->cols(); ++j) {
                    FieldElement t = b->at(row, j);
                    b->set(row, j, b->at(pr, j));
                    b->set(pr, j, t);
                }
        }
        const FieldElement inv = a.at(row, col).inverse();
        for (std::size_t j = 0; j < m; ++j) a.set(row, j, a.at(row, j) * inv);
        if (b)
            for (std::size_t j = 0; j < b->cols(); ++j)
                b->set(row, j, b->at(row, j) * inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row) continue;
            const FieldElement f = a.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                a.set(i, j, a.at(i, j) - f * a.at(row, j));
            if (b)
                for (std::size_t j = 0; j < b->cols(); ++j)
                    b->set(i, j, b->at(i, j) - f * b->at(row, j));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
    if (!a.is_square()) throw std::invalid_argument("coefficient matrix must be square");
    if (a.rows() != b.rows()) throw std::invalid_argument("right-hand side row mismatch");
    require_same_field(a.field(), b.field());
    Matrix work = a, rhs = b;
    auto pivots = eliminate(work, &rhs);
    if (pivots.size() != a.rows()) return std::nullopt;
    return rhs;
}

std::optional<Matrix> matrix_inverse(const Matrix& a) {
    return solve_linear(a, Matrix::identity(a.field(), a.rows()));
}

std::size_t matrix_rank(const Matrix& a) {
    Matrix work = a;
    return eliminate(work, nullptr).size();
}

std::vector<std::vector<FieldElement>> kernel_basis(const Matrix& a) {
    Matrix work = a;
    const auto pivots = eliminate(work, nullptr);
    const std::size_t m = a.cols();
    std::vector<bool> is_pivot(m, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free_col = 0; free_col < m; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> v(m, FieldElement::zero(a.field()));
        v[free_col] = FieldElement::one(a.field());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -work.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace leonard
