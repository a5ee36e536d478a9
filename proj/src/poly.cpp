#include "ihfan/poly.hpp"

#include <algorithm>
#include <cassert>

namespace ihfan {

static void enumerate(int nvars, int q, Expo& cur, int pos, std::vector<Expo>& out) {
    if (pos == nvars - 1) {
        cur[static_cast<size_t>(pos)] = q;
        out.push_back(cur);
        return;
    }
    for (int e = q; e >= 0; --e) {
        cur[static_cast<size_t>(pos)] = e;
        enumerate(nvars, q - e, cur, pos + 1, out);
    }
}

std::vector<Expo> monomials_of_degree(int nvars, int q) {
    std::vector<Expo> out;
    if (q < 0) return out;
    if (nvars == 0) {
        if (q == 0) out.push_back(Expo{});
        return out;
    }
    Expo cur(static_cast<size_t>(nvars), 0);
    enumerate(nvars, q, cur, 0, out);
    return out;
}

long monomial_count(int nvars, int q) {
    if (q < 0) return 0;
    if (nvars == 0) return q == 0 ? 1 : 0;
    // C(q + nvars - 1, nvars - 1)
    long num = 1, den = 1;
    for (int i = 1; i <= nvars - 1; ++i) {
        num *= q + i;
        den *= i;
    }
    return num / den;
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[Expo(static_cast<size_t>(nvars), 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    MultiPoly p(nvars);
    Expo e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i)] = 1;
    p.terms_[e] = 1;
    return p;
}

MultiPoly MultiPoly::linear_form(const VecQ& coeffs) {
    MultiPoly p(static_cast<int>(coeffs.size()));
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        if (coeffs(i) != 0) {
            Expo e(static_cast<size_t>(coeffs.size()), 0);
            e[static_cast<size_t>(i)] = 1;
            p.terms_[e] = coeffs(i);
        }
    }
    return p;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

void MultiPoly::add_term(const Expo& e, const Rational& c) {
    assert(static_cast<int>(e.size()) == nvars_);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultiPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    assert(nvars_ == o.nvars_);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    assert(nvars_ == o.nvars_);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    assert(nvars_ == o.nvars_);
    MultiPoly out(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Expo e(e1);
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, cc] : terms_) out.terms_[e] = cc * c;
    return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    assert(static_cast<int>(images.size()) == nvars_);
    const int out_vars = images.empty() ? 0 : images[0].nvars();
    MultiPoly out(out_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i) {
            for (int k = 0; k < e[static_cast<size_t>(i)]; ++k)
                term = term * images[static_cast<size_t>(i)];
        }
        out = out + term;
    }
    return out;
}

MultiPoly MultiPoly::restrict_to(const std::vector<int>& keep) const {
    std::vector<int> pos(static_cast<size_t>(nvars_), -1);
    for (size_t k = 0; k < keep.size(); ++k) pos[static_cast<size_t>(keep[k])] = static_cast<int>(k);
    MultiPoly out(static_cast<int>(keep.size()));
    for (const auto& [e, c] : terms_) {
        bool dies = false;
        Expo ne(keep.size(), 0);
        for (int i = 0; i < nvars_; ++i) {
            if (e[static_cast<size_t>(i)] == 0) continue;
            if (pos[static_cast<size_t>(i)] < 0) { dies = true; break; }
            ne[static_cast<size_t>(pos[static_cast<size_t>(i)])] = e[static_cast<size_t>(i)];
        }
        if (!dies) out.add_term(ne, c);
    }
    return out;
}

MultiPoly MultiPoly::embed(int new_nvars, const std::vector<int>& var_map) const {
    assert(static_cast<int>(var_map.size()) == nvars_);
    MultiPoly out(new_nvars);
    for (const auto& [e, c] : terms_) {
        Expo ne(static_cast<size_t>(new_nvars), 0);
        for (int i = 0; i < nvars_; ++i)
            ne[static_cast<size_t>(var_map[static_cast<size_t>(i)])] = e[static_cast<size_t>(i)];
        out.add_term(ne, c);
    }
    return out;
}

VecQ MultiPoly::coeff_vector(int q) const {
    auto mons = monomials_of_degree(nvars_, q);
    VecQ v = VecQ::Zero(static_cast<Eigen::Index>(mons.size()));
    for (size_t i = 0; i < mons.size(); ++i) v(static_cast<Eigen::Index>(i)) = coeff(mons[i]);
    return v;
}

MultiPoly MultiPoly::from_coeff_vector(int nvars, int q, const VecQ& v) {
    auto mons = monomials_of_degree(nvars, q);
    assert(static_cast<Eigen::Index>(mons.size()) == v.size());
    MultiPoly p(nvars);
    for (size_t i = 0; i < mons.size(); ++i)
        if (v(static_cast<Eigen::Index>(i)) != 0) p.add_term(mons[i], v(static_cast<Eigen::Index>(i)));
    return p;
}

} // namespace ihfan
