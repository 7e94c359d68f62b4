#include "qsc/poly.hpp"

#include <algorithm>

namespace qsc {

namespace {
void require_poly(const Polynomial& f) {
    if (!f.valid()) throw precondition_error("operation on a detached polynomial");
}
void require_pair(const Polynomial& a, const Polynomial& b) {
    require_poly(a);
    require_poly(b);
    if (!a.spec()->same_as(*b.spec()))
        throw precondition_error("polynomials over different fields");
}
} // namespace

Polynomial::Polynomial(FieldSpec::Ptr spec, std::vector<FieldElement> coeffs)
    : spec_(std::move(spec)), c_(std::move(coeffs)) {
    if (!spec_) throw precondition_error("polynomial needs a field");
    for (const auto& c : c_)
        if (!c.valid() || !c.spec()->same_as(*spec_))
            throw precondition_error("polynomial coefficient from the wrong field");
    normalize();
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::one(FieldSpec::Ptr spec) {
    auto e = spec->one();
    return Polynomial(std::move(spec), {e});
}

Polynomial Polynomial::x(FieldSpec::Ptr spec) {
    auto z = spec->zero();
    auto o = spec->one();
    return Polynomial(std::move(spec), {z, o});
}

Polynomial Polynomial::x_pow_minus_one(FieldSpec::Ptr spec, uint64_t n) {
    if (n == 0) return zero(spec); // x^0 - 1
    std::vector<FieldElement> c(n + 1, spec->zero());
    c[0] = -spec->one();
    c[n] = spec->one();
    return Polynomial(std::move(spec), std::move(c));
}

Polynomial Polynomial::from_ints(FieldSpec::Ptr spec, const std::vector<int64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(spec->from_int(v));
    return Polynomial(std::move(spec), std::move(c));
}

Polynomial Polynomial::x_minus(const FieldElement& root) {
    if (!root.valid()) throw precondition_error("linear factor needs a valid root");
    return Polynomial(root.spec(), {-root, root.spec()->one()});
}

FieldElement Polynomial::coeff(uint64_t i) const {
    require_poly(*this);
    if (i < c_.size()) return c_[i];
    return spec_->zero();
}

FieldElement Polynomial::leading() const {
    if (c_.empty()) throw precondition_error("zero polynomial has no leading coefficient");
    return c_.back();
}

FieldElement Polynomial::constant_term() const {
    require_poly(*this);
    return c_.empty() ? spec_->zero() : c_.front();
}

bool Polynomial::is_monic() const {
    return !c_.empty() && c_.back().is_one();
}

FieldElement Polynomial::evaluate(const FieldElement& at) const {
    if (!at.valid()) throw precondition_error("evaluation point is detached");
    FieldElement acc = at.spec()->zero();
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * at;
        // coefficient may live in a subfield of `at`; only same-field supported here
        acc = acc + c_[i];
    }
    return acc;
}

Polynomial Polynomial::make_monic() const {
    if (c_.empty()) throw precondition_error("cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    return *this * c_.back().inv();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_pair(a, b);
    std::vector<FieldElement> c(std::max(a.c_.size(), b.c_.size()), a.spec_->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Polynomial(a.spec_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_pair(a, b);
    std::vector<FieldElement> c(std::max(a.c_.size(), b.c_.size()), a.spec_->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
    return Polynomial(a.spec_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_pair(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.spec_);
    std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, a.spec_->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(a.spec_, std::move(c));
}

Polynomial Polynomial::operator*(const FieldElement& s) const {
    require_poly(*this);
    if (!s.valid() || !s.spec()->same_as(*spec_))
        throw precondition_error("scalar from the wrong field");
    std::vector<FieldElement> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v * s);
    return Polynomial(spec_, std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!a.valid() || !b.valid()) return a.valid() == b.valid();
    if (!a.spec_->same_as(*b.spec_)) return false;
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    require_pair(a, b);
    if (b.is_zero()) throw precondition_error("polynomial division by zero");
    auto spec = a.spec();
    if (a.degree() < b.degree()) return {Polynomial::zero(spec), a};

    const FieldElement lead_inv = b.leading().inv();
    std::vector<FieldElement> rem(a.coeffs());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<FieldElement> quot(rem.size() - db, spec->zero());

    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        FieldElement f = rem[i] * lead_inv;
        quot[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] = rem[i - db + j] - f * b.coeffs()[j];
    }
    return {Polynomial(spec, std::move(quot)), Polynomial(spec, std::move(rem))};
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw verification_error("division expected to be exact left a remainder");
    return q;
}

bool divides(const Polynomial& b, const Polynomial& a) {
    if (b.is_zero()) return a.is_zero();
    return divmod(a, b).second.is_zero();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Polynomial r2 = divmod(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.is_zero()) return r0;
    return r0.make_monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.spec());
    Polynomial g = poly_gcd(a, b);
    return divide_exact(a * b, g).make_monic();
}

Polynomial reciprocal(const Polynomial& h) {
    if (h.is_zero() || h.constant_term().is_zero())
        throw precondition_error("reciprocal needs a nonzero constant term");
    std::vector<FieldElement> c(h.coeffs().rbegin(), h.coeffs().rend());
    Polynomial r(h.spec(), std::move(c));
    return r.make_monic();
}

bool is_self_reciprocal(const Polynomial& h) {
    return reciprocal(h) == h.make_monic();
}

uint64_t order_of(const Polynomial& f, uint64_t N) {
    if (f.is_zero()) throw precondition_error("the zero polynomial has no order");
    if (N == 0 || (N & (N - 1)) != 0) throw precondition_error("order reference must be a power of two");
    // strip x^tau
    Polynomial g = f;
    while (!g.is_zero() && g.constant_term().is_zero())
        g = divide_exact(g, Polynomial::x(g.spec()));
    if (g.degree() == 0) return 1; // units divide x^1 - 1
    for (uint64_t e = 1; e <= N; e *= 2) {
        if (divides(g, Polynomial::x_pow_minus_one(g.spec(), e))) return e;
    }
    throw precondition_error("polynomial does not divide x^N - 1");
}

Polynomial find_irreducible(uint32_t p, uint32_t m, uint64_t seed) {
    auto F = FieldSpec::prime(p);
    auto coeffs = find_irreducible_coeffs(p, m, seed);
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (uint32_t v : coeffs) c.push_back(F->from_int(v));
    return Polynomial(F, std::move(c));
}

std::string to_text(const FieldElement& x) {
    if (!x.valid()) throw precondition_error("cannot render a detached element");
    if (x.spec()->degree() == 1) return std::to_string(x.coeffs()[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x.coeffs()[i]);
    }
    s += ")";
    return s;
}

std::string to_text(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) s += " + ";
        s += to_text(f.coeffs()[i]);
        if (i == 1) s += "*x";
        else if (i > 1) s += "*x^" + std::to_string(i);
    }
    return s;
}

} // namespace qsc
