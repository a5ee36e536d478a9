#ifndef IHFAN_POLY_HPP
#define IHFAN_POLY_HPP

#include "ihfan/rational.hpp"

#include <map>
#include <vector>

namespace ihfan {

/// Exponent vector; length = number of variables.
using Expo = std::vector<int>;

/// Monomials of total degree q in nvars variables, in a fixed graded-lex
/// order (lexicographically decreasing exponent tuples).  The order is the
/// canonical basis order used everywhere coefficients are serialized.
std::vector<Expo> monomials_of_degree(int nvars, int q);

/// Number of monomials of total degree q in nvars variables.
long monomial_count(int nvars, int q);

/**
 * Sparse exact multivariate polynomial over Q.  Terms are kept in a map with
 * a deterministic ordering so coefficient extraction is canonical.
 */
class MultiPoly {
public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c);
    /// The coordinate variable x_i.
    static MultiPoly variable(int nvars, int i);
    /// A linear form sum_i coeffs[i] x_i.
    static MultiPoly linear_form(const VecQ& coeffs);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // -1 for the zero polynomial

    void add_term(const Expo& e, const Rational& c);
    Rational coeff(const Expo& e) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// Substitute x_i -> images[i] (polynomials in possibly different vars).
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    /// Set the given variables to zero and drop them, keeping the variables
    /// listed in `keep` (in order) as the new coordinates.
    MultiPoly restrict_to(const std::vector<int>& keep) const;

    /// Re-embed into a larger variable set: variable i becomes var_map[i].
    MultiPoly embed(int new_nvars, const std::vector<int>& var_map) const;

    /// Coefficient vector on monomials_of_degree(nvars, q).  The polynomial
    /// must be homogeneous of degree q (or zero).
    VecQ coeff_vector(int q) const;
    static MultiPoly from_coeff_vector(int nvars, int q, const VecQ& v);

    const std::map<Expo, Rational>& terms() const { return terms_; }

private:
    int nvars_;
    std::map<Expo, Rational> terms_;
};

} // namespace ihfan

#endif
