#pragma once

#include <optional>
#include <vector>

#include "wgm/rat.hpp"

namespace wgm {

/* Dense matrix over an exact coefficient type. Ring entries (LocElem)
 * only use the arithmetic layer; the elimination algorithms below
 * require a field (Rat or PolyFrac) and deterministic pivoting: first
 * nonzero row in column order, so results are reproducible. */
template <class T>
class Mat {
  public:
    Mat() : r_(0), c_(0) {}
    Mat(int r, int c, const T& fill) : r_(r), c_(c), a_(static_cast<size_t>(r) * c, fill) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const T& operator()(int i, int j) const
    {
        return a_[static_cast<size_t>(i) * c_ + j];
    }

    bool operator==(const Mat& o) const
    {
        return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    static Mat identity(int n, const T& zero, const T& one)
    {
        Mat m(n, n, zero);
        for (int i = 0; i < n; ++i)
            m(i, i) = one;
        return m;
    }

    Mat transposed() const
    {
        Mat m(c_, r_, a_.empty() ? T() : a_[0]);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                m(j, i) = (*this)(i, j);
        return m;
    }

    template <class F>
    Mat<T> map(F f) const
    {
        Mat m = *this;
        for (auto& x : m.a_)
            x = f(x);
        return m;
    }

  private:
    int r_, c_;
    std::vector<T> a_;
};

template <class T>
Mat<T> mat_add(const Mat<T>& a, const Mat<T>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("matrix shape mismatch in +");
    Mat<T> m = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j) + b(i, j);
    return m;
}

template <class T>
Mat<T> mat_sub(const Mat<T>& a, const Mat<T>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("matrix shape mismatch in -");
    Mat<T> m = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j) - b(i, j);
    return m;
}

template <class T>
Mat<T> mat_neg(const Mat<T>& a)
{
    return a.map([](const T& x) { return -x; });
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b, const T& zero)
{
    if (a.cols() != b.rows())
        throw Error("matrix shape mismatch in *");
    Mat<T> m(a.rows(), b.cols(), zero);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            for (int j = 0; j < b.cols(); ++j)
                m(i, j) = m(i, j) + a(i, k) * b(k, j);
    return m;
}

template <class T>
std::vector<T> mat_apply(const Mat<T>& a, const std::vector<T>& v, const T& zero)
{
    if (a.cols() != static_cast<int>(v.size()))
        throw Error("matrix/vector shape mismatch");
    std::vector<T> out(a.rows(), zero);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out[i] = out[i] + a(i, j) * v[j];
    return out;
}

inline bool fe_is_zero(const Rat& x) { return rat_is_zero(x); }

/* Row echelon form in place; returns the pivot column of each pivot row. */
template <class T>
std::vector<int> rref(Mat<T>& m, const T& zero)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!fe_is_zero(m(i, col))) {
                pr = i;
                break;
            }
        if (pr < 0)
            continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(pr, j), m(row, j));
        T inv = m(row, col);
        for (int j = col; j < m.cols(); ++j)
            m(row, j) = m(row, j) / inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || fe_is_zero(m(i, col)))
                continue;
            T f = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T>
int mat_rank(Mat<T> m, const T& zero)
{
    return static_cast<int>(rref(m, zero).size());
}

/* Basis of the right kernel, one column per basis vector, with the
 * free coordinates chosen in increasing column order. */
template <class T>
Mat<T> nullspace(Mat<T> m, const T& zero, const T& one)
{
    std::vector<int> piv = rref(m, zero);
    std::vector<bool> is_piv(m.cols(), false);
    for (int c : piv)
        is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_piv[c])
            free_cols.push_back(c);
    Mat<T> ker(m.cols(), static_cast<int>(free_cols.size()), zero);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        ker(fc, static_cast<int>(k)) = one;
        for (size_t r = 0; r < piv.size(); ++r)
            ker(piv[r], static_cast<int>(k)) = -m(static_cast<int>(r), fc);
    }
    return ker;
}

/* Solve A x = b; returns std::nullopt when inconsistent. */
template <class T>
std::optional<std::vector<T>> solve(const Mat<T>& a, const std::vector<T>& b,
                                    const T& zero)
{
    Mat<T> aug(a.rows(), a.cols() + 1, zero);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<int> piv = rref(aug, zero);
    std::vector<T> x(a.cols(), zero);
    for (size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == a.cols())
            return std::nullopt;  // pivot in the rhs column
        x[piv[r]] = aug(static_cast<int>(r), a.cols());
    }
    return x;
}

}  // namespace wgm
