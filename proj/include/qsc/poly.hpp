#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qsc/gf.hpp"

namespace qsc {

// Dense polynomial over a FieldSpec. Coefficients ascending, no trailing
// zeros; the zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
  public:
    Polynomial() = default; // detached; arithmetic on it throws
    explicit Polynomial(FieldSpec::Ptr spec) : spec_(std::move(spec)) {
        if (!spec_) throw precondition_error("polynomial needs a field");
    }
    Polynomial(FieldSpec::Ptr spec, std::vector<FieldElement> coeffs);

    bool valid() const { return spec_ != nullptr; }

    static Polynomial zero(FieldSpec::Ptr spec) { return Polynomial(std::move(spec)); }
    static Polynomial one(FieldSpec::Ptr spec);
    static Polynomial x(FieldSpec::Ptr spec);
    // x^n + c, handy for x^N - 1
    static Polynomial x_pow_minus_one(FieldSpec::Ptr spec, uint64_t n);
    static Polynomial from_ints(FieldSpec::Ptr spec, const std::vector<int64_t>& coeffs);
    // linear factor (x - root); root may live in any field
    static Polynomial x_minus(const FieldElement& root);

    const FieldSpec::Ptr& spec() const { return spec_; }
    int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement coeff(uint64_t i) const; // zero beyond degree
    FieldElement leading() const;         // throws on zero polynomial
    FieldElement constant_term() const;   // zero field element for the zero polynomial
    bool is_monic() const;

    FieldElement evaluate(const FieldElement& at) const;
    Polynomial make_monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const FieldElement& s) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  private:
    void normalize();

    FieldSpec::Ptr spec_;
    std::vector<FieldElement> c_;
};

// a = q*b + r with deg r < deg b. Division by the zero polynomial throws.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// exact division: throws verification_error if the remainder is nonzero
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& b, const Polynomial& a); // b | a

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b); // monic
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b); // monic

// h(0)^{-1} x^{deg h} h(1/x): coefficient order reversed, normalized monic.
// Requires h(0) != 0.
Polynomial reciprocal(const Polynomial& h);
// true iff reciprocal(h) == make_monic(h)
bool is_self_reciprocal(const Polynomial& h);

// Order of f relative to x^N - 1 with N = 2^n: the least e (a divisor of N,
// checked ascending) with f | x^e - 1, after stripping any x^tau factor.
// Note the order here is always taken against x^e - 1, not x^e; a polynomial
// with nonzero constant term never divides a pure power of x.
uint64_t order_of(const Polynomial& f, uint64_t N);

// find_irreducible as a Polynomial over GF(p)
Polynomial find_irreducible(uint32_t p, uint32_t m, uint64_t seed);

// Canonical text form "c0 + c1*x + ... + ck*x^k"; coefficients print as plain
// residues for prime fields and "(c0,c1,...)" tuples for extension fields.
std::string to_text(const Polynomial& f);
std::string to_text(const FieldElement& x);

} // namespace qsc
