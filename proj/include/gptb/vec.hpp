#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gptb/scalar.hpp"

namespace gptb {

/* Fixed-dimension vector of scalars, all of one mode. Values are immutable
 * after construction; every binary operation checks dimensions and modes. */
class Vec {
public:
    explicit Vec(std::vector<Scalar> coords);
    Vec(std::initializer_list<Scalar> coords) : Vec(std::vector<Scalar>(coords)) {}

    static Vec zeros(size_t dim, Scalar::Mode m);
    static Vec unit(size_t dim, size_t axis, Scalar::Mode m);

    size_t dim() const { return c_.size(); }
    Scalar::Mode mode() const { return mode_; }
    const Scalar& operator[](size_t i) const { return c_[i]; }
    const std::vector<Scalar>& coords() const { return c_; }

    Vec operator-() const;
    friend Vec operator+(const Vec& a, const Vec& b);
    friend Vec operator-(const Vec& a, const Vec& b);
    friend Vec operator*(const Scalar& s, const Vec& v);

    bool operator==(const Vec& o) const;

    std::string str() const;

private:
    std::vector<Scalar> c_;
    Scalar::Mode mode_;
};

Scalar dot(const Vec& a, const Vec& b);
Vec kron(const Vec& a, const Vec& b);

bool lex_less(const Vec& a, const Vec& b);
bool eq_within(const Vec& a, const Vec& b, double eps);

inline Vec vec3(Scalar x, Scalar y, Scalar z) { return Vec({std::move(x), std::move(y), std::move(z)}); }

/* Dense row-major matrix over one scalar mode. */
class Mat {
public:
    Mat(size_t rows, size_t cols, std::vector<Scalar> entries);

    static Mat identity(size_t n, Scalar::Mode m);
    static Mat from_rows(const std::vector<Vec>& rows);
    /// Rank-one product col * row^T.
    static Mat outer(const Vec& col, const Vec& row);
    static Mat zeros(size_t rows, size_t cols, Scalar::Mode m);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar::Mode mode() const { return mode_; }
    const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    Vec row(size_t r) const;

    Vec apply(const Vec& x) const;
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator*(const Scalar& s, const Mat& m);

    bool operator==(const Mat& o) const;

private:
    size_t rows_, cols_;
    std::vector<Scalar> a_;
    Scalar::Mode mode_;
};

Mat kron(const Mat& a, const Mat& b);
bool eq_within(const Mat& a, const Mat& b, double eps);

}  // namespace gptb
