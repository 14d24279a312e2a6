#include "fcl/matrix.hpp"
#include "fcl/errors.hpp"

namespace fcl {

PolyMatrix PolyMatrix::identity(std::size_t n)
{
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool PolyMatrix::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const
{
    PolyMatrix r = *this;
    for (auto& x : r.a_) x = f(x);
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix shape mismatch");
    PolyMatrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b)
{
    return a + (LaurentPoly(-1) * b);
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch");
    PolyMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const LaurentPoly& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

PolyMatrix operator*(const LaurentPoly& c, const PolyMatrix& a)
{
    PolyMatrix r = a;
    for (auto& x : r.a_) x *= c;
    return r;
}

} // namespace fcl
