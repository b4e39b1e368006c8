#include "gptb/vec.hpp"

#include <sstream>

#include "gptb/errors.hpp"

namespace gptb {

namespace {

void require_same_dim(size_t a, size_t b, const char* what) {
    if (a != b) throw DimensionError(std::string(what) + ": dimension mismatch");
}

Scalar::Mode common_mode(const std::vector<Scalar>& entries, const char* what) {
    if (entries.empty()) throw DimensionError(std::string(what) + ": empty");
    Scalar::Mode m = entries.front().mode();
    for (const Scalar& s : entries)
        if (s.mode() != m) throw ScalarModeError(std::string(what) + ": mixed scalar modes");
    return m;
}

}  // namespace

Vec::Vec(std::vector<Scalar> coords) : c_(std::move(coords)), mode_(common_mode(c_, "Vec")) {}

Vec Vec::zeros(size_t dim, Scalar::Mode m) {
    return Vec(std::vector<Scalar>(dim, Scalar::zero(m)));
}

Vec Vec::unit(size_t dim, size_t axis, Scalar::Mode m) {
    std::vector<Scalar> c(dim, Scalar::zero(m));
    c.at(axis) = Scalar::one(m);
    return Vec(std::move(c));
}

Vec Vec::operator-() const {
    std::vector<Scalar> c;
    c.reserve(dim());
    for (const Scalar& s : c_) c.push_back(-s);
    return Vec(std::move(c));
}

Vec operator+(const Vec& a, const Vec& b) {
    require_same_dim(a.dim(), b.dim(), "Vec+");
    std::vector<Scalar> c;
    c.reserve(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) c.push_back(a[i] + b[i]);
    return Vec(std::move(c));
}

Vec operator-(const Vec& a, const Vec& b) {
    require_same_dim(a.dim(), b.dim(), "Vec-");
    std::vector<Scalar> c;
    c.reserve(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) c.push_back(a[i] - b[i]);
    return Vec(std::move(c));
}

Vec operator*(const Scalar& s, const Vec& v) {
    std::vector<Scalar> c;
    c.reserve(v.dim());
    for (size_t i = 0; i < v.dim(); ++i) c.push_back(s * v[i]);
    return Vec(std::move(c));
}

bool Vec::operator==(const Vec& o) const {
    if (dim() != o.dim()) return false;
    for (size_t i = 0; i < dim(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string Vec::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < dim(); ++i) os << (i ? ", " : "") << c_[i].str();
    os << ')';
    return os.str();
}

Scalar dot(const Vec& a, const Vec& b) {
    require_same_dim(a.dim(), b.dim(), "dot");
    Scalar acc = Scalar::zero(a.mode());
    for (size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
    return acc;
}

Vec kron(const Vec& a, const Vec& b) {
    std::vector<Scalar> c;
    c.reserve(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < b.dim(); ++j) c.push_back(a[i] * b[j]);
    return Vec(std::move(c));
}

bool lex_less(const Vec& a, const Vec& b) {
    require_same_dim(a.dim(), b.dim(), "lex_less");
    for (size_t i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

bool eq_within(const Vec& a, const Vec& b, double eps) {
    if (a.dim() != b.dim()) return false;
    for (size_t i = 0; i < a.dim(); ++i)
        if (!eq_within(a[i], b[i], eps)) return false;
    return true;
}

Mat::Mat(size_t rows, size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)), mode_(common_mode(a_, "Mat")) {
    if (a_.size() != rows * cols) throw DimensionError("Mat: entry count does not match shape");
}

Mat Mat::identity(size_t n, Scalar::Mode m) {
    std::vector<Scalar> a(n * n, Scalar::zero(m));
    for (size_t i = 0; i < n; ++i) a[i * n + i] = Scalar::one(m);
    return Mat(n, n, std::move(a));
}

Mat Mat::zeros(size_t rows, size_t cols, Scalar::Mode m) {
    return Mat(rows, cols, std::vector<Scalar>(rows * cols, Scalar::zero(m)));
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) throw DimensionError("Mat::from_rows: no rows");
    size_t cols = rows.front().dim();
    std::vector<Scalar> a;
    a.reserve(rows.size() * cols);
    for (const Vec& r : rows) {
        require_same_dim(r.dim(), cols, "Mat::from_rows");
        for (size_t j = 0; j < cols; ++j) a.push_back(r[j]);
    }
    return Mat(rows.size(), cols, std::move(a));
}

Mat Mat::outer(const Vec& col, const Vec& row) {
    std::vector<Scalar> a;
    a.reserve(col.dim() * row.dim());
    for (size_t i = 0; i < col.dim(); ++i)
        for (size_t j = 0; j < row.dim(); ++j) a.push_back(col[i] * row[j]);
    return Mat(col.dim(), row.dim(), std::move(a));
}

Vec Mat::row(size_t r) const {
    std::vector<Scalar> c(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
    return Vec(std::move(c));
}

Vec Mat::apply(const Vec& x) const {
    require_same_dim(cols_, x.dim(), "Mat::apply");
    std::vector<Scalar> y;
    y.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        Scalar acc = Scalar::zero(mode_);
        for (size_t j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
        y.push_back(std::move(acc));
    }
    return Vec(std::move(y));
}

Mat operator*(const Mat& a, const Mat& b) {
    require_same_dim(a.cols(), b.rows(), "Mat*");
    std::vector<Scalar> c(a.rows() * b.cols(), Scalar::zero(a.mode()));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j) c[i * b.cols() + j] += aik * b.at(k, j);
        }
    return Mat(a.rows(), b.cols(), std::move(c));
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("Mat+: shape mismatch");
    std::vector<Scalar> c;
    c.reserve(a.rows() * a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) c.push_back(a.at(i, j) + b.at(i, j));
    return Mat(a.rows(), a.cols(), std::move(c));
}

Mat operator*(const Scalar& s, const Mat& m) {
    std::vector<Scalar> c;
    c.reserve(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) c.push_back(s * m.at(i, j));
    return Mat(m.rows(), m.cols(), std::move(c));
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Mat kron(const Mat& a, const Mat& b) {
    size_t R = a.rows() * b.rows();
    size_t C = a.cols() * b.cols();
    std::vector<Scalar> c(R * C, Scalar::zero(a.mode()));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    c[(i * b.rows() + k) * C + (j * b.cols() + l)] = aij * b.at(k, l);
        }
    return Mat(R, C, std::move(c));
}

bool eq_within(const Mat& a, const Mat& b, double eps) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (!eq_within(a.at(i, j), b.at(i, j), eps)) return false;
    return true;
}

}  // namespace gptb
