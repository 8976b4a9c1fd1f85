#pragma once

#include "tlau/algebra.hpp"
#include "tlau/generate.hpp"

#include <initializer_list>
#include <ostream>

namespace tlau {

inline void PrintTo(const Matrix& m, std::ostream* os)
{
    *os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        *os << (r ? "; " : "");
        for (std::size_t c = 0; c < m.cols(); ++c) *os << (c ? " " : "") << m(r, c);
    }
    *os << "]";
}

inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s; }

} // namespace tlau

namespace support {

using namespace tlau;

inline FiniteAlgebra alg(const std::string& family) { return curated(family).algebra; }

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows)
{
    std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline Vector vec(std::initializer_list<long> xs)
{
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline Scalar q(long p, long d) { return Scalar(mpq_class(p, d)); }

inline AlgebraHom hom(const std::string& b, const std::string& a, const Matrix& m) { return AlgebraHom(alg(b), alg(a), m); }

inline AlgebraHom identity_hom(const std::string& a) { return hom(a, a, Matrix::identity(alg(a).dim())); }

inline AlgebraHom zero_hom(const std::string& b, const std::string& a)
{
    return hom(b, a, Matrix(alg(a).dim(), alg(b).dim()));
}

} // namespace support
