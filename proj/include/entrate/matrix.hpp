#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace entrate {

/// Minimal dense row-major matrix. The models here are small (l <= 16),
/// so everything is kept simple and value-semantic.
template <class Scalar>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, Scalar fill = Scalar{})
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
    }
    Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
        data_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                throw std::invalid_argument("Mat: ragged initializer");
            for (const auto& v : r) data_.push_back(v);
        }
    }

    static Mat from_row_major(int rows, int cols, const std::vector<Scalar>& values) {
        if (static_cast<size_t>(rows) * cols != values.size())
            throw std::invalid_argument("Mat: size mismatch");
        Mat m(rows, cols);
        m.data_ = values;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    const std::vector<Scalar>& data() const { return data_; }

private:
    int rows_, cols_;
    std::vector<Scalar> data_;
};

using RealMatrix = Mat<double>;
using ComplexMatrix = Mat<std::complex<double>>;

/// Row vector times matrix: (x M)_j = sum_i x_i m_ij.
template <class Scalar>
std::vector<Scalar> row_times(const std::vector<Scalar>& x, const Mat<Scalar>& m) {
    if (static_cast<int>(x.size()) != m.rows())
        throw std::invalid_argument("row_times: dimension mismatch");
    std::vector<Scalar> out(static_cast<size_t>(m.cols()), Scalar{});
    for (int i = 0; i < m.rows(); ++i) {
        const Scalar xi = x[static_cast<size_t>(i)];
        for (int j = 0; j < m.cols(); ++j) out[static_cast<size_t>(j)] += xi * m(i, j);
    }
    return out;
}

/// Solve A x = b by Gaussian elimination with partial pivoting.
/// Works for real and complex scalars; throws on a (numerically) singular system.
template <class Scalar>
std::vector<Scalar> solve_dense(Mat<Scalar> a, std::vector<Scalar> b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_dense: shape mismatch");
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double mag = std::abs(a(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) throw std::runtime_error("solve_dense: singular matrix");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            std::swap(b[static_cast<size_t>(col)], b[static_cast<size_t>(pivot)]);
        }
        for (int r = col + 1; r < n; ++r) {
            const Scalar f = a(r, col) / a(col, col);
            if (f == Scalar{}) continue;
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
        }
    }
    std::vector<Scalar> x(static_cast<size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        Scalar acc = b[static_cast<size_t>(r)];
        for (int j = r + 1; j < n; ++j) acc -= a(r, j) * x[static_cast<size_t>(j)];
        x[static_cast<size_t>(r)] = acc / a(r, r);
    }
    return x;
}

}  // namespace entrate
