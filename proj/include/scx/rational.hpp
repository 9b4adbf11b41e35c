#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "scx/errors.hpp"

namespace scx {

/// Exact rational scalar used for all weights and matrix assembly.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

/// Parses "p", "-p" or "p/q" into an exact rational.
Rational parse_rational(const std::string& text);

/// Formats a rational as "p" or "p/q".
std::string format_rational(const Rational& q);

/// Small dense matrix over exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    bool operator==(const RationalMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    RationalMatrix operator+(const RationalMatrix& other) const {
        RationalMatrix out(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
        return out;
    }

    RationalMatrix operator*(const RationalMatrix& other) const {
        RationalMatrix out(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < other.cols_; ++j) {
                    const Rational& b = other(k, j);
                    if (b != 0) out(i, j) += a * b;
                }
            }
        return out;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    Rational trace() const {
        Rational t = 0;
        for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace scx
