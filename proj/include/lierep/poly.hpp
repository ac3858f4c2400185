#pragma once

#include <vector>

#include "lierep/rational.hpp"

namespace lierep {

// Dense univariate polynomial over the rationals; just enough for exact
// identity checks between the closed-form dimension formulas.
struct Poly {
    std::vector<Rat> c;  // c[i] * m^i

    Poly() = default;
    Poly(std::initializer_list<Rat> xs) : c(xs) { trim(); }
    static Poly constant(const Rat& v) { return Poly{v}; }
    static Poly var() { return Poly{Rat(0), Rat(1)}; }
    // a*m + b
    static Poly linear(const Rat& a, const Rat& b) { return Poly{b, a}; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    Rat eval(const Rat& m) const {
        Rat r = 0;
        for (size_t i = c.size(); i-- > 0;) r = r * m + c[i];
        return r;
    }
    Poly operator+(const Poly& o) const {
        Poly r;
        r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
        for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
        r.trim();
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r;
        r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
        for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
        r.trim();
        return r;
    }
    Poly operator*(const Poly& o) const {
        if (zero() || o.zero()) return Poly();
        Poly r;
        r.c.assign(c.size() + o.c.size() - 1, Rat(0));
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        r.trim();
        return r;
    }
    bool operator==(const Poly& o) const { return c == o.c; }
};

// Rational function as a numerator/denominator pair; equality by
// cross-multiplication.
struct RatFunc {
    Poly num, den;

    RatFunc() : den{Rat(1)} {}
    RatFunc(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {}
    static RatFunc from(const Poly& p) { return RatFunc(p, Poly{Rat(1)}); }

    RatFunc operator*(const RatFunc& o) const { return RatFunc(num * o.num, den * o.den); }
    bool operator==(const RatFunc& o) const { return num * o.den == o.num * den; }
    Rat eval(const Rat& m) const {
        Rat d = den.eval(m);
        if (d == 0) throw std::domain_error("pole of rational function");
        return num.eval(m) / d;
    }
};

}  // namespace lierep
