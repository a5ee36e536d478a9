#ifndef IHFAN_POINCARE_HPP
#define IHFAN_POINCARE_HPP

#include "ihfan/rational.hpp"

#include <string>
#include <vector>

namespace ihfan {

/**
 * Even-graded integer polynomial sum_q a_q t^{2q}, indexed by q.  Linear
 * functions count as degree 2, so coefficient q records the dimension of the
 * degree-2q graded piece.  Coefficients are arbitrary-precision integers;
 * Betti numbers grow combinatorially and must never overflow.
 */
class PoincarePoly {
public:
    PoincarePoly() = default;
    explicit PoincarePoly(std::vector<Integer> coeffs);
    static PoincarePoly one();
    static PoincarePoly zero();
    /// c * t^{2q}
    static PoincarePoly term(const Integer& c, int q);

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    Integer coeff(int q) const;
    /// Degree in t (always even), or -1 for the zero polynomial.
    int t_degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool nonnegative() const;

    PoincarePoly operator+(const PoincarePoly& o) const;
    PoincarePoly operator-(const PoincarePoly& o) const;
    PoincarePoly operator*(const PoincarePoly& o) const;
    bool operator==(const PoincarePoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const PoincarePoly& o) const { return !(*this == o); }

    /// p^k for small k >= 0.
    PoincarePoly pow(int k) const;

    /// Keeps exactly the terms of t-degree < j.
    PoincarePoly truncate_below(int j) const;

    /// t^{2n} p(1/t): coefficient reversal in a window of length n + 1.
    /// Throws DegreeTooHigh when deg p > 2n.
    PoincarePoly duality_transform(int n) const;

    /// Palindromic in the window [0, 2n]?
    bool is_palindromic(int n) const { return *this == duality_transform(n); }

    std::vector<Integer> as_h_vector() const { return coeffs_; }
    /// g_0 = a_0, g_q = a_q - a_{q-1} for 1 <= q <= floor(n/2).
    std::vector<Integer> g_vector(int n) const;

    /// Rendering like "1 + 5t^2 + 5t^4 + t^6".
    std::string str() const;

private:
    void trim();
    std::vector<Integer> coeffs_; // coeffs_[q] multiplies t^{2q}
};

/// (t^2 - 1)^k as a PoincarePoly (signed intermediates are permitted).
PoincarePoly t2_minus_1_pow(int k);

/// (1 - t^2).
PoincarePoly one_minus_t2();

} // namespace ihfan

#endif
