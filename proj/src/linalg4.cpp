#include "tttoda/linalg4.hpp"

#include "tttoda/errors.hpp"

#include <cmath>
#include <numbers>

namespace ttt {

Mat4 Mat4::identity()
{
    return diag(1.0, 1.0, 1.0, 1.0);
}

Mat4 Mat4::diag(cplx d0, cplx d1, cplx d2, cplx d3)
{
    Mat4 m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    m(3, 3) = d3;
    return m;
}

Mat4 Mat4::rows(std::initializer_list<std::initializer_list<cplx>> r)
{
    Mat4 m;
    int i = 0;
    for (const auto& row : r) {
        int j = 0;
        for (const auto& v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

Mat4 Mat4::unit(int i, int j)
{
    Mat4 m;
    m(i, j) = 1.0;
    return m;
}

Mat4 operator+(const Mat4& x, const Mat4& y)
{
    Mat4 r;
    for (int k = 0; k < 16; ++k)
        r.a[k] = x.a[k] + y.a[k];
    return r;
}

Mat4& operator+=(Mat4& x, const Mat4& y)
{
    for (int k = 0; k < 16; ++k)
        x.a[k] += y.a[k];
    return x;
}

Mat4 operator-(const Mat4& x, const Mat4& y)
{
    Mat4 r;
    for (int k = 0; k < 16; ++k)
        r.a[k] = x.a[k] - y.a[k];
    return r;
}

Mat4 operator-(const Mat4& x)
{
    Mat4 r;
    for (int k = 0; k < 16; ++k)
        r.a[k] = -x.a[k];
    return r;
}

Mat4 operator*(const Mat4& x, const Mat4& y)
{
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 4; ++k)
                s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

Mat4 operator*(cplx s, const Mat4& x)
{
    Mat4 r;
    for (int k = 0; k < 16; ++k)
        r.a[k] = s * x.a[k];
    return r;
}

Mat4 transpose(const Mat4& x)
{
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = x(j, i);
    return r;
}

Mat4 conj(const Mat4& x)
{
    Mat4 r;
    for (int k = 0; k < 16; ++k)
        r.a[k] = std::conj(x.a[k]);
    return r;
}

double frobenius(const Mat4& x)
{
    double s = 0.0;
    for (const auto& v : x.a)
        s += std::norm(v);
    return std::sqrt(s);
}

double max_abs(const Mat4& x)
{
    double m = 0.0;
    for (const auto& v : x.a)
        m = std::max(m, std::abs(v));
    return m;
}

cplx trace(const Mat4& x)
{
    return x(0, 0) + x(1, 1) + x(2, 2) + x(3, 3);
}

LU4 lu_factor(const Mat4& x)
{
    LU4 f;
    f.lu = x;
    Mat4& a = f.lu;
    for (int i = 0; i < 4; ++i)
        f.piv[i] = i;
    for (int k = 0; k < 4; ++k) {
        int p = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < 4; ++i)
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                p = i;
            }
        if (best == 0.0) {
            f.singular = true;
            continue;
        }
        if (p != k) {
            for (int j = 0; j < 4; ++j)
                std::swap(a(k, j), a(p, j));
            std::swap(f.piv[k], f.piv[p]);
            f.sign = -f.sign;
        }
        for (int i = k + 1; i < 4; ++i) {
            a(i, k) /= a(k, k);
            for (int j = k + 1; j < 4; ++j)
                a(i, j) -= a(i, k) * a(k, j);
        }
    }
    return f;
}

cplx det(const Mat4& x)
{
    const LU4 f = lu_factor(x);
    if (f.singular)
        return 0.0;
    cplx d = static_cast<double>(f.sign);
    for (int i = 0; i < 4; ++i)
        d *= f.lu(i, i);
    return d;
}

Mat4 inverse(const Mat4& x)
{
    const LU4 f = lu_factor(x);
    if (f.singular)
        throw Error(ErrorKind::StructureInconsistent, "singular 4x4 matrix");
    Mat4 inv;
    for (int col = 0; col < 4; ++col) {
        std::array<cplx, 4> b{};
        for (int i = 0; i < 4; ++i)
            b[i] = (f.piv[i] == col) ? 1.0 : 0.0;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < i; ++k)
                b[i] -= f.lu(i, k) * b[k];
        for (int i = 3; i >= 0; --i) {
            for (int k = i + 1; k < 4; ++k)
                b[i] -= f.lu(i, k) * b[k];
            b[i] /= f.lu(i, i);
        }
        for (int i = 0; i < 4; ++i)
            inv(i, col) = b[i];
    }
    return inv;
}

Mat4 inv_transpose(const Mat4& x)
{
    return transpose(inverse(x));
}

double cond1(const Mat4& x)
{
    auto norm1 = [](const Mat4& m) {
        double best = 0.0;
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int i = 0; i < 4; ++i)
                s += std::abs(m(i, j));
            best = std::max(best, s);
        }
        return best;
    };
    return norm1(x) * norm1(inverse(x));
}

Mat4 exp_nilpotent(const Mat4& M, cplx s)
{
    Mat4 term = Mat4::identity();
    Mat4 sum = term;
    for (int k = 1; k < 4; ++k) {
        term = (s / static_cast<double>(k)) * (term * M);
        sum += term;
    }
    return sum;
}

bool is_nilpotent(const Mat4& M, double tol)
{
    const Mat4 M2 = M * M;
    const double n = frobenius(M);
    return frobenius(M2 * M2) <= tol * std::max(1.0, n * n * n * n);
}

std::array<cplx, 4> char_poly(const Mat4& x)
{
    // Faddeev-LeVerrier
    std::array<cplx, 5> c{};
    c[4] = 1.0;
    Mat4 Mk;
    for (int k = 1; k <= 4; ++k) {
        Mk = x * Mk + c[5 - k] * Mat4::identity();
        c[4 - k] = -trace(x * Mk) / static_cast<double>(k);
    }
    return {c[0], c[1], c[2], c[3]};
}

cplx omega_pow(double x)
{
    return std::polar(1.0, std::numbers::pi * x / 2.0);
}

}  // namespace ttt
