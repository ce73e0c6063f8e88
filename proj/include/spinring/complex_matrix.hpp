#ifndef SPINRING_COMPLEX_MATRIX_HPP
#define SPINRING_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace spinring {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage.
///
/// Carrier type for Hamiltonians, density matrices and spin operators.
/// Indexing is (row, col); the basis convention for multi-qubit operators
/// is fixed in spin_model.hpp (site 0 = most significant bit).
class ComplexMatrix {
public:
    ComplexMatrix() : dim_(1), data_(1, Complex(0.0, 0.0)) {}
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    Complex* row(std::size_t r) { return data_.data() + r * dim_; }
    const Complex* row(std::size_t r) const { return data_.data() + r * dim_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix transpose() const;

    Complex trace() const;
    double max_abs() const;         // max elementwise |m_ij|
    double frobenius_norm() const;
    double hermiticity_error() const;  // max |m_ij - conj(m_ji)|
    bool is_finite() const;

    /// (M + M†)/2, exact Hermitian result.
    ComplexMatrix hermitized() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s, 0.0); }
    friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s, 0.0); }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

/// max elementwise |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Apply matrix to a vector (dim must match psi.size()).
std::vector<Complex> apply(const ComplexMatrix& m, const std::vector<Complex>& psi);

}  // namespace spinring

#endif
