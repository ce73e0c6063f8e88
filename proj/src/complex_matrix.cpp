#include "spinring/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace spinring {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex(0.0, 0.0)) {
    if (dim == 0) throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Complex(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t n = rows.size();
    ComplexMatrix m(n);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != n)
            throw std::invalid_argument("ComplexMatrix::from_rows: matrix must be square");
        std::size_t c = 0;
        for (const auto& v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) out.data_[i] = std::conj(data_[i]);
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_error() const {
    double m = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const auto& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix ComplexMatrix::hermitized() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        out(i, i) = Complex((*this)(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const Complex v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
    }
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& v : data_) v *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    const std::size_t n = a.dim_;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex* arow = a.row(i);
        Complex* orow = out.row(i);
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = arow[k];
            if (aik == Complex(0.0, 0.0)) continue;
            const Complex* brow = b.row(k);
            for (std::size_t j = 0; j < n; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

std::vector<Complex> apply(const ComplexMatrix& m, const std::vector<Complex>& psi) {
    if (psi.size() != m.dim()) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Complex> out(m.dim(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < m.dim(); ++i) {
        const Complex* row = m.row(i);
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j < m.dim(); ++j) acc += row[j] * psi[j];
        out[i] = acc;
    }
    return out;
}

}  // namespace spinring
