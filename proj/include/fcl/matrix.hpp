#pragma once

#include "fcl/laurent.hpp"

#include <functional>
#include <vector>

namespace fcl {

// Dense matrix over Laurent polynomials; used for representation matrices.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static PolyMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    LaurentPoly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    PolyMatrix map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const;

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const LaurentPoly& c, const PolyMatrix& a);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<LaurentPoly> a_;
};

} // namespace fcl
