#pragma once

#include "wsa/semigroup.hpp"
#include "wsa/weight.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace wsa {

/// Coefficient with real and imaginary parts in the active mode. Exact mode
/// carries complex values structurally but refuses the modulus of a genuinely
/// complex value (it is irrational in general); log mode computes it.
template <ScalarMode S>
struct Complex {
    S re = S::zero();
    S im = S::zero();

    static Complex real(S v) { return {std::move(v), S::zero()}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const Complex& o) const { return re == o.re && im == o.im; }

    S modulus() const {
        if (im.is_zero()) return re.abs();
        if constexpr (S::is_exact) {
            throw ModeError("modulus of a complex coefficient is irrational; rerun in log mode");
        } else {
            return S::hypot(re, im);
        }
    }

    std::string str() const {
        if (im.is_zero()) return re.str();
        return re.str() + (im.sign() < 0 ? "-" : "+") + im.abs().str() + "i";
    }
};

/// Finitely supported coefficient map: a member of c00(S). Zero coefficients
/// are never stored, so the support is canonical and iteration order is the
/// canonical element order.
template <ScalarMode S>
class FinSupp {
public:
    using Coeffs = std::map<Element, Complex<S>, ElementLess>;

    FinSupp() = default;

    static FinSupp delta(const Element& s) {
        FinSupp f;
        f.coeffs_[s] = Complex<S>::real(S::one());
        return f;
    }

    static FinSupp normalized_delta(const Element& s, const Weight<S>& w) {
        FinSupp f;
        f.coeffs_[s] = Complex<S>::real(S::one() / w(s));
        return f;
    }

    /// CLI literal "1:1,3:1" meaning sum of coeff * delta_elem; elements may
    /// be fractions written p/q, coefficients rationals or decimals.
    static FinSupp parse(const std::string& literal);

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }
    const Coeffs& coeffs() const { return coeffs_; }

    Complex<S> at(const Element& s) const {
        auto it = coeffs_.find(s);
        return it == coeffs_.end() ? Complex<S>{} : it->second;
    }

    void set(const Element& s, Complex<S> c) {
        if (c.is_zero()) coeffs_.erase(s);
        else coeffs_[s] = std::move(c);
    }

    void add_term(const Element& s, const Complex<S>& c) { set(s, at(s) + c); }

    FinSupp operator+(const FinSupp& o) const {
        FinSupp out = *this;
        for (const auto& [s, c] : o.coeffs_) out.add_term(s, c);
        return out;
    }

    FinSupp scaled(const Complex<S>& factor) const {
        FinSupp out;
        for (const auto& [s, c] : coeffs_) out.set(s, c * factor);
        return out;
    }

    bool operator==(const FinSupp& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [s, c] : coeffs_) {
            if (!out.empty()) out += ",";
            out += s.str() + ":" + c.str();
        }
        return out;
    }

private:
    Coeffs coeffs_;
};

template <ScalarMode S>
FinSupp<S> FinSupp<S>::parse(const std::string& literal) {
    FinSupp f;
    std::size_t pos = 0;
    while (pos < literal.size()) {
        std::size_t comma = literal.find(',', pos);
        std::string item = literal.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ConfigError("element literal items are elem:coeff, got '" + item + "'");
        Element e = Element::parse(item.substr(0, colon));
        S c = parse_scalar<S>(item.substr(colon + 1));
        f.add_term(e, Complex<S>::real(c));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return f;
}

/// Exact double sum over support pairs, accumulating coinciding products.
/// In log mode, terms whose magnitude fell 45 decades below the largest are
/// cancellation noise and are dropped.
template <ScalarMode S>
FinSupp<S> convolve(const Semigroup& sg, const FinSupp<S>& f, const FinSupp<S>& g) {
    FinSupp<S> out;
    for (const auto& [u, fu] : f.coeffs())
        for (const auto& [v, gv] : g.coeffs()) out.add_term(sg.compose(u, v), fu * gv);
    if constexpr (!S::is_exact) {
        double max_lg = -std::numeric_limits<double>::infinity();
        for (const auto& [s, c] : out.coeffs()) {
            S mod = c.modulus();
            if (!mod.is_zero()) max_lg = std::max(max_lg, mod.log_magnitude());
        }
        const double cutoff = max_lg - 45.0 * std::log(10.0);
        std::vector<Element> drop;
        for (const auto& [s, c] : out.coeffs()) {
            S mod = c.modulus();
            if (mod.is_zero() || mod.log_magnitude() < cutoff) drop.push_back(s);
        }
        for (const Element& s : drop) out.set(s, Complex<S>{});
    }
    return out;
}

/// Weighted l1 norm: sum of |f(s)| w(s) over the support, accumulated in
/// canonical order through the mode's stable sum.
template <ScalarMode S>
S weighted_norm(const FinSupp<S>& f, const typename Weight<S>::Eval& value) {
    std::vector<S> terms;
    terms.reserve(f.support_size());
    for (const auto& [s, c] : f.coeffs()) terms.push_back(c.modulus() * value(s));
    return S::sum(terms);
}

template <ScalarMode S>
S weighted_norm(const FinSupp<S>& f, const Weight<S>& w) {
    return weighted_norm<S>(f, w.eval());
}

/// Max modulus over the support; 0 for the zero element.
template <ScalarMode S>
S sup_norm(const FinSupp<S>& f) {
    S best = S::zero();
    for (const auto& [s, c] : f.coeffs()) {
        S mod = c.modulus();
        if (best < mod) best = mod;
    }
    return best;
}

} // namespace wsa
