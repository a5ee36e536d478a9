#include "ihfan/poincare.hpp"

#include <sstream>

namespace ihfan {

PoincarePoly::PoincarePoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

PoincarePoly PoincarePoly::one() { return PoincarePoly({Integer(1)}); }
PoincarePoly PoincarePoly::zero() { return PoincarePoly(); }

PoincarePoly PoincarePoly::term(const Integer& c, int q) {
    std::vector<Integer> v(static_cast<size_t>(q) + 1, Integer(0));
    v[static_cast<size_t>(q)] = c;
    return PoincarePoly(std::move(v));
}

Integer PoincarePoly::coeff(int q) const {
    if (q < 0 || q >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(q)];
}

int PoincarePoly::t_degree() const {
    return coeffs_.empty() ? -1 : 2 * (static_cast<int>(coeffs_.size()) - 1);
}

bool PoincarePoly::nonnegative() const {
    for (const auto& c : coeffs_)
        if (c < 0) return false;
    return true;
}

void PoincarePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PoincarePoly PoincarePoly::operator+(const PoincarePoly& o) const {
    std::vector<Integer> v(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return PoincarePoly(std::move(v));
}

PoincarePoly PoincarePoly::operator-(const PoincarePoly& o) const {
    std::vector<Integer> v(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return PoincarePoly(std::move(v));
}

PoincarePoly PoincarePoly::operator*(const PoincarePoly& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return zero();
    std::vector<Integer> v(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return PoincarePoly(std::move(v));
}

PoincarePoly PoincarePoly::pow(int k) const {
    PoincarePoly out = one();
    for (int i = 0; i < k; ++i) out = out * (*this);
    return out;
}

PoincarePoly PoincarePoly::truncate_below(int j) const {
    std::vector<Integer> v;
    for (size_t q = 0; q < coeffs_.size(); ++q) {
        if (2 * static_cast<int>(q) < j) v.push_back(coeffs_[q]);
    }
    return PoincarePoly(std::move(v));
}

PoincarePoly PoincarePoly::duality_transform(int n) const {
    if (t_degree() > 2 * n)
        throw DegreeTooHigh("duality_transform: degree " + std::to_string(t_degree()) +
                            " exceeds window 2n = " + std::to_string(2 * n));
    std::vector<Integer> v(static_cast<size_t>(n) + 1, Integer(0));
    for (int q = 0; q <= n; ++q) v[static_cast<size_t>(n - q)] = coeff(q);
    return PoincarePoly(std::move(v));
}

std::vector<Integer> PoincarePoly::g_vector(int n) const {
    std::vector<Integer> g;
    const int top = n / 2;
    for (int q = 0; q <= top; ++q) g.push_back(coeff(q) - (q == 0 ? Integer(0) : coeff(q - 1)));
    return g;
}

std::string PoincarePoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t q = 0; q < coeffs_.size(); ++q) {
        const Integer& c = coeffs_[q];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Integer a = c < 0 ? Integer(-c) : c;
        if (q == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str();
            os << "t^" << 2 * q;
        }
        first = false;
    }
    return os.str();
}

PoincarePoly t2_minus_1_pow(int k) {
    PoincarePoly base({Integer(-1), Integer(1)});
    return base.pow(k);
}

PoincarePoly one_minus_t2() { return PoincarePoly({Integer(1), Integer(-1)}); }

} // namespace ihfan
