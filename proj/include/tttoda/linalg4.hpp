#pragma once

#include <array>
#include <complex>
#include <initializer_list>

namespace ttt {

using cplx = std::complex<double>;

// Dense complex 4x4 matrix, row-major.
struct Mat4 {
    std::array<cplx, 16> a{};

    cplx& operator()(int i, int j) { return a[4 * i + j]; }
    const cplx& operator()(int i, int j) const { return a[4 * i + j]; }

    static Mat4 zero() { return {}; }
    static Mat4 identity();
    static Mat4 diag(cplx d0, cplx d1, cplx d2, cplx d3);
    static Mat4 rows(std::initializer_list<std::initializer_list<cplx>> r);
    // Matrix unit E_{ij}.
    static Mat4 unit(int i, int j);
};

Mat4 operator+(const Mat4& x, const Mat4& y);
Mat4 operator-(const Mat4& x, const Mat4& y);
Mat4 operator-(const Mat4& x);
Mat4 operator*(const Mat4& x, const Mat4& y);
Mat4 operator*(cplx s, const Mat4& x);
Mat4& operator+=(Mat4& x, const Mat4& y);

Mat4 transpose(const Mat4& x);
Mat4 conj(const Mat4& x);
double frobenius(const Mat4& x);
double max_abs(const Mat4& x);
cplx trace(const Mat4& x);

// LU with partial pivoting.
struct LU4 {
    Mat4 lu;
    std::array<int, 4> piv{};
    int sign = 1;
    bool singular = false;
};
LU4 lu_factor(const Mat4& x);
cplx det(const Mat4& x);
// Throws StructureInconsistent on a singular matrix.
Mat4 inverse(const Mat4& x);
Mat4 inv_transpose(const Mat4& x);
// 1-norm condition number estimate (exact, via the inverse).
double cond1(const Mat4& x);

// exp(s M) for nilpotent M (M^4 = 0), as a finite series.
Mat4 exp_nilpotent(const Mat4& M, cplx s);
bool is_nilpotent(const Mat4& M, double tol);

// Coefficients c0..c3 of det(xI - A) = x^4 + c3 x^3 + c2 x^2 + c1 x + c0.
std::array<cplx, 4> char_poly(const Mat4& x);

// omega^x = exp(i pi x / 2).
cplx omega_pow(double x);

}  // namespace ttt
