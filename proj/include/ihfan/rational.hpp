#ifndef IHFAN_RATIONAL_HPP
#define IHFAN_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace ihfan {

// Exact arithmetic only: every rank, dimension and coefficient in this
// library is computed over Q. No floating point anywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonPointedCone     : public Error { using Error::Error; };
class ConesIntersectBadly: public Error { using Error::Error; };
class NotPure            : public Error { using Error::Error; };
class ZeroCone           : public Error { using Error::Error; };
class DegreeTooHigh      : public Error { using Error::Error; };
class NotQuasiConvexHint : public Error { using Error::Error; };
class DegreeBoundTooSmall: public Error { using Error::Error; };
class NotARefinement     : public Error { using Error::Error; };
class NotFlabby          : public Error { using Error::Error; };
class NotFreeStalks      : public Error { using Error::Error; };
class DegenerateInput    : public Error { using Error::Error; };
class SchemaError        : public Error { using Error::Error; };

inline VecQ to_vecq(const std::vector<Rational>& v) {
    VecQ out(static_cast<Eigen::Index>(v.size()));
    for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = v[static_cast<size_t>(i)];
    return out;
}

} // namespace ihfan

#endif
