#include "qsc/gf.hpp"

#include <algorithm>
#include <string>

namespace qsc {

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

bool is_prime_u32(uint32_t v) {
    if (v < 2) return false;
    for (uint32_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// ---- polynomial helpers over GF(p), coefficients ascending, p < 2^32 ----

using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
    return r;
}

// a mod f, f monic
PPoly pmod(PPoly a, const PPoly& f, uint64_t p) {
    ptrim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - df;
        if (c != 0)
            for (std::size_t j = 0; j < df; ++j) {
                uint64_t sub = (c * f[j]) % p;
                a[shift + j] = static_cast<uint32_t>((a[shift + j] + p - sub) % p);
            }
        a.pop_back();
        ptrim(a);
    }
    return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, uint64_t p) {
    return pmod(pmul(a, b, p), f, p);
}

PPoly psub(PPoly a, const PPoly& b, uint64_t p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = static_cast<uint32_t>((a[i] + p - b[i]) % p);
    ptrim(a);
    return a;
}

// x^e mod f
PPoly pxpowmod(u128 e, const PPoly& f, uint64_t p) {
    PPoly result{1};
    PPoly base{0, 1};
    if (f.size() == 2) base = pmod(base, f, p);
    while (e > 0) {
        if (e & 1) result = pmulmod(result, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

PPoly pgcd(PPoly a, PPoly b, uint64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // reduce a mod b after making b monic
        uint64_t lead = b.back();
        if (lead != 1) {
            // inverse of lead mod p
            uint64_t inv = 1, base = lead, ex = p - 2;
            while (ex) {
                if (ex & 1) inv = inv * base % p;
                base = base * base % p;
                ex >>= 1;
            }
            for (auto& c : b) c = static_cast<uint32_t>(c * inv % p);
        }
        a = pmod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

u128 pow_u128_checked(uint32_t base, uint32_t exp) {
    u128 r = 1;
    const u128 limit = ~static_cast<u128>(0);
    for (uint32_t i = 0; i < exp; ++i) {
        if (r > limit / base) throw precondition_error("field size exceeds 128 bits");
        r *= base;
    }
    return r;
}

} // namespace

bool is_irreducible_mod_p(uint32_t p, const std::vector<uint32_t>& f) {
    if (f.size() < 2) return false;
    if (f.back() != 1) throw precondition_error("irreducibility test expects a monic polynomial");
    const uint32_t m = static_cast<uint32_t>(f.size() - 1);
    if (m == 1) return true;
    // Rabin: x^{p^m} == x (mod f), and gcd(x^{p^{m/l}} - x, f) = 1 for primes l | m
    const u128 pm = pow_u128_checked(p, m);
    PPoly x{0, 1};
    if (psub(pxpowmod(pm, f, p), x, p) != PPoly{}) return false;
    std::vector<uint32_t> primes;
    uint32_t rem = m;
    for (uint32_t l = 2; l * l <= rem; ++l)
        if (rem % l == 0) {
            primes.push_back(l);
            while (rem % l == 0) rem /= l;
        }
    if (rem > 1) primes.push_back(rem);
    for (uint32_t l : primes) {
        const u128 pml = pow_u128_checked(p, m / l);
        PPoly g = pgcd(psub(pxpowmod(pml, f, p), x, p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<uint32_t> find_irreducible_coeffs(uint32_t p, uint32_t m, uint64_t seed) {
    if (!is_prime_u32(p) || p == 2) throw precondition_error("p must be an odd prime");
    if (m == 0) throw precondition_error("degree must be positive");
    u128 space = pow_u128_checked(p, m);
    u128 start = static_cast<u128>(seed) % space;
    for (u128 step = 0; step < space; ++step) {
        u128 idx = start + step;
        if (idx >= space) idx -= space;
        std::vector<uint32_t> f(m + 1, 0);
        u128 v = idx;
        for (uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<uint32_t>(v % p);
            v /= p;
        }
        f[m] = 1;
        if (is_irreducible_mod_p(p, f)) return f;
    }
    throw verification_error("no irreducible polynomial found (unreachable)");
}

// ---- FieldSpec ----

FieldSpec::FieldSpec(uint32_t p, uint32_t deg, std::vector<uint32_t> modulus)
    : p_(p), deg_(deg), modulus_(std::move(modulus)), size_(pow_u128_checked(p, deg)) {}

FieldSpec::Ptr FieldSpec::prime(uint32_t p) {
    if (!is_prime_u32(p) || p == 2) throw precondition_error("characteristic must be an odd prime");
    return Ptr(new FieldSpec(p, 1, {}));
}

FieldSpec::Ptr FieldSpec::extension(uint32_t p, const std::vector<uint32_t>& modulus) {
    if (!is_prime_u32(p) || p == 2) throw precondition_error("characteristic must be an odd prime");
    if (modulus.size() < 3) throw precondition_error("extension modulus must have degree >= 2");
    for (uint32_t c : modulus)
        if (c >= p) throw precondition_error("modulus coefficients must be reduced mod p");
    if (modulus.back() != 1) throw precondition_error("modulus must be monic");
    if (!is_irreducible_mod_p(p, modulus)) throw precondition_error("modulus is reducible");
    return Ptr(new FieldSpec(p, static_cast<uint32_t>(modulus.size() - 1), modulus));
}

FieldSpec::Ptr FieldSpec::extension(uint32_t p, uint32_t a, uint64_t seed) {
    if (a == 0) throw precondition_error("extension degree must be positive");
    if (a == 1) return prime(p);
    return extension(p, find_irreducible_coeffs(p, a, seed));
}

FieldSpec::Ptr FieldSpec::of_order(uint64_t q) {
    if (q < 3 || q % 2 == 0) throw precondition_error("field order must be an odd prime power");
    uint64_t p = 0;
    for (uint64_t d = 3; d * d <= q; d += 2)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return prime(static_cast<uint32_t>(q));
    uint32_t a = 0;
    uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++a;
    }
    if (v != 1) throw precondition_error("field order must be a prime power");
    return extension(static_cast<uint32_t>(p), a, 0);
}

bool FieldSpec::same_as(const FieldSpec& other) const {
    return p_ == other.p_ && deg_ == other.deg_ && modulus_ == other.modulus_;
}

FieldElement FieldSpec::zero() const {
    return FieldElement(shared_from_this(), std::vector<uint32_t>(deg_, 0));
}

FieldElement FieldSpec::one() const {
    std::vector<uint32_t> c(deg_, 0);
    c[0] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::from_residues(std::vector<uint32_t> coeffs) const {
    for (auto& c : coeffs) c %= p_;
    while (coeffs.size() > deg_) {
        if (coeffs.back() != 0)
            throw precondition_error("residue vector longer than the field degree");
        coeffs.pop_back();
    }
    coeffs.resize(deg_, 0);
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement FieldSpec::from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    std::vector<uint32_t> c(deg_, 0);
    c[0] = static_cast<uint32_t>(r);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::from_index(u128 index) const {
    if (index >= size_) throw precondition_error("element index out of range");
    std::vector<uint32_t> c(deg_, 0);
    for (uint32_t i = 0; i < deg_; ++i) {
        c[i] = static_cast<uint32_t>(index % p_);
        index /= p_;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

// ---- FieldElement ----

FieldElement::FieldElement(FieldSpec::Ptr spec, std::vector<uint32_t> c)
    : spec_(std::move(spec)), c_(std::move(c)) {}

namespace {
void require_valid(const FieldElement& x) {
    if (!x.valid()) throw precondition_error("arithmetic on a detached field element");
}
void require_same(const FieldElement& x, const FieldElement& y) {
    require_valid(x);
    require_valid(y);
    if (x.spec().get() != y.spec().get() && !x.spec()->same_as(*y.spec()))
        throw precondition_error("field elements belong to different fields");
}
} // namespace

bool FieldElement::is_zero() const {
    require_valid(*this);
    return std::all_of(c_.begin(), c_.end(), [](uint32_t v) { return v == 0; });
}

bool FieldElement::is_one() const {
    require_valid(*this);
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](uint32_t v) { return v == 0; });
}

u128 FieldElement::index() const {
    require_valid(*this);
    u128 idx = 0;
    for (std::size_t i = c_.size(); i-- > 0;) idx = idx * spec_->characteristic() + c_[i];
    return idx;
}

FieldElement FieldElement::operator-() const {
    require_valid(*this);
    const uint32_t p = spec_->characteristic();
    std::vector<uint32_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] == 0 ? 0 : p - c_[i];
    return FieldElement(spec_, std::move(r));
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    require_same(x, y);
    const uint32_t p = x.spec_->characteristic();
    std::vector<uint32_t> r(x.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        uint32_t s = x.c_[i] + y.c_[i];
        r[i] = s >= p ? s - p : s;
    }
    return FieldElement(x.spec_, std::move(r));
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    require_same(x, y);
    const uint32_t p = x.spec_->characteristic();
    std::vector<uint32_t> r(x.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (x.c_[i] + p - y.c_[i]) % p;
    return FieldElement(x.spec_, std::move(r));
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    require_same(x, y);
    const uint64_t p = x.spec_->characteristic();
    const uint32_t deg = x.spec_->degree();
    if (deg == 1) {
        uint64_t v = static_cast<uint64_t>(x.c_[0]) * y.c_[0] % p;
        return FieldElement(x.spec_, {static_cast<uint32_t>(v)});
    }
    std::vector<uint64_t> t(2 * deg - 1, 0);
    for (uint32_t i = 0; i < deg; ++i) {
        if (x.c_[i] == 0) continue;
        for (uint32_t j = 0; j < deg; ++j)
            t[i + j] = (t[i + j] + static_cast<uint64_t>(x.c_[i]) * y.c_[j]) % p;
    }
    const auto& f = x.spec_->modulus();
    for (std::size_t i = t.size(); i-- > deg;) {
        const uint64_t c = t[i];
        if (c == 0) continue;
        t[i] = 0;
        for (uint32_t j = 0; j < deg; ++j)
            t[i - deg + j] = (t[i - deg + j] + p - c * f[j] % p) % p;
    }
    std::vector<uint32_t> r(deg);
    for (uint32_t i = 0; i < deg; ++i) r[i] = static_cast<uint32_t>(t[i]);
    return FieldElement(x.spec_, std::move(r));
}

bool operator==(const FieldElement& x, const FieldElement& y) {
    require_same(x, y);
    return x.c_ == y.c_;
}

FieldElement FieldElement::pow(u128 e) const {
    require_valid(*this);
    FieldElement result = spec_->one();
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

FieldElement FieldElement::inv() const {
    require_valid(*this);
    if (is_zero()) throw precondition_error("zero has no multiplicative inverse");
    const uint64_t p = spec_->characteristic();
    if (spec_->degree() == 1) {
        uint64_t inv = 1, base = c_[0], ex = p - 2;
        while (ex) {
            if (ex & 1) inv = inv * base % p;
            base = base * base % p;
            ex >>= 1;
        }
        return FieldElement(spec_, {static_cast<uint32_t>(inv)});
    }
    // extended Euclid between the element (as a polynomial) and the modulus
    PPoly r0 = spec_->modulus(), r1 = c_;
    ptrim(r1);
    PPoly s0 = {}, s1 = {1};
    while (!r1.empty() && r1.size() > 1) {
        // make r1 monic, divide r0 by r1
        uint64_t lead = r1.back();
        uint64_t il = 1, base = lead, ex = p - 2;
        while (ex) {
            if (ex & 1) il = il * base % p;
            base = base * base % p;
            ex >>= 1;
        }
        PPoly r1m = r1, s1m = s1;
        for (auto& c : r1m) c = static_cast<uint32_t>(c * il % p);
        for (auto& c : s1m) c = static_cast<uint32_t>(c * il % p);
        // long division r0 = q*r1m + rem, tracking s
        PPoly rem = r0, srem = s0;
        while (rem.size() >= r1m.size() && !rem.empty()) {
            uint64_t c = rem.back();
            std::size_t shift = rem.size() - r1m.size();
            if (c != 0) {
                PPoly term(shift + 1, 0);
                term[shift] = static_cast<uint32_t>(c);
                rem = psub(std::move(rem), pmul(term, r1m, p), p);
                srem = psub(std::move(srem), pmul(term, s1m, p), p);
            } else {
                rem.pop_back();
            }
            ptrim(rem);
        }
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(rem);
        s1 = std::move(srem);
    }
    if (r1.empty()) throw verification_error("inverse failed: element shares a factor with the modulus");
    // r1 is a nonzero constant; scale s1 by its inverse
    uint64_t lead = r1[0];
    uint64_t il = 1, base = lead, ex = p - 2;
    while (ex) {
        if (ex & 1) il = il * base % p;
        base = base * base % p;
        ex >>= 1;
    }
    std::vector<uint32_t> out(spec_->degree(), 0);
    if (s1.size() > out.size()) throw verification_error("inverse cofactor degree out of range");
    for (std::size_t i = 0; i < s1.size(); ++i) out[i] = static_cast<uint32_t>(s1[i] * il % p);
    return FieldElement(spec_, std::move(out));
}

u128 multiplicative_order(const FieldElement& x, u128 group_order) {
    if (x.is_zero()) throw precondition_error("zero has no multiplicative order");
    if (!x.pow(group_order).is_one())
        throw precondition_error("group_order is not a multiple of the element order");
    // factor group_order by trial division; intended for smooth orders (2^n etc.)
    u128 order = group_order;
    u128 rem = group_order;
    auto strip = [&](u128 prime) {
        while (rem % prime == 0) rem /= prime;
        while (order % prime == 0 && x.pow(order / prime).is_one()) order /= prime;
    };
    for (u128 d = 2; d <= 1000000 && d * d <= rem; ++d)
        if (rem % d == 0) strip(d);
    if (rem > 1) strip(rem);
    return order;
}

// ---- TowerSpec ----

namespace {

// Gaussian elimination over GF(p): returns a basis of the kernel of A (rows x cols).
std::vector<std::vector<uint32_t>> kernel_basis(std::vector<std::vector<uint32_t>> A,
                                                std::size_t rows, std::size_t cols, uint64_t p) {
    auto invmod = [&](uint64_t v) {
        uint64_t r = 1, b = v, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && A[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[rank], A[piv]);
        uint64_t il = invmod(A[rank][col]);
        for (std::size_t j = col; j < cols; ++j)
            A[rank][j] = static_cast<uint32_t>(A[rank][j] * il % p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || A[i][col] == 0) continue;
            uint64_t f = A[i][col];
            for (std::size_t j = col; j < cols; ++j)
                A[i][j] = static_cast<uint32_t>((A[i][j] + p * p - f * A[rank][j] % p) % p);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<uint32_t> v(cols, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            uint64_t val = A[r][free_col];
            v[pivot_col[r]] = static_cast<uint32_t>(val == 0 ? 0 : p - val);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

TowerSpec TowerSpec::build(FieldSpec::Ptr base, uint32_t t, uint64_t seed) {
    if (!base) throw precondition_error("tower needs a base field");
    if (t == 0) throw precondition_error("tower degree must be positive");
    TowerSpec tw;
    tw.base_ = base;
    tw.t_ = t;
    const uint32_t p = base->characteristic();
    const uint32_t a = base->degree();

    if (t == 1) {
        tw.top_ = base;
        if (a == 1) {
            tw.gen_image_ = base->one();
        } else {
            std::vector<uint32_t> y(a, 0);
            y[1] = 1;
            tw.gen_image_ = base->from_residues(y);
        }
    } else {
        const uint32_t M = a * t;
        tw.top_ = FieldSpec::extension(p, M, seed);
        if (a == 1) {
            tw.gen_image_ = tw.top_->one();
        } else {
            // subfield GF(p^a) = fixed points of x -> x^{p^a}; find a root of the
            // base modulus inside it
            const u128 pa = pow_u128_checked(p, a);
            const uint32_t M2 = M;
            std::vector<std::vector<uint32_t>> A(M2, std::vector<uint32_t>(M2, 0));
            for (uint32_t i = 0; i < M2; ++i) {
                std::vector<uint32_t> e(M2, 0);
                e[i] = 1;
                FieldElement xi = tw.top_->from_residues(e);
                FieldElement img = xi.pow(pa) - xi;
                for (uint32_t r = 0; r < M2; ++r) A[r][i] = img.coeffs()[r];
            }
            auto kb = kernel_basis(std::move(A), M2, M2, p);
            if (kb.size() != a)
                throw verification_error("subfield fixed-space has wrong dimension");
            const auto& mod = base->modulus();
            FieldElement root;
            const u128 combos = pow_u128_checked(p, static_cast<uint32_t>(kb.size()));
            for (u128 idx = 1; idx < combos && !root.valid(); ++idx) {
                u128 v = idx;
                std::vector<uint32_t> coords(M2, 0);
                for (const auto& kvec : kb) {
                    const uint32_t lambda = static_cast<uint32_t>(v % p);
                    v /= p;
                    if (lambda == 0) continue;
                    for (uint32_t i = 0; i < M2; ++i)
                        coords[i] = static_cast<uint32_t>(
                            (coords[i] + static_cast<uint64_t>(lambda) * kvec[i]) % p);
                }
                FieldElement cand = tw.top_->from_residues(coords);
                FieldElement acc = tw.top_->zero();
                for (std::size_t i = mod.size(); i-- > 0;)
                    acc = acc * cand + tw.top_->from_int(mod[i]);
                if (acc.is_zero()) root = cand;
            }
            if (!root.valid())
                throw verification_error("base modulus has no root in the subfield");
            tw.gen_image_ = root;
        }
    }

    // columns: coordinates of gen_image^i in the top field, i < a
    const uint32_t M = tw.top_->degree();
    tw.basis_.assign(M, std::vector<uint32_t>(a, 0));
    FieldElement pw = tw.top_->one();
    for (uint32_t i = 0; i < a; ++i) {
        for (uint32_t r = 0; r < M; ++r) tw.basis_[r][i] = pw.coeffs()[r];
        pw = pw * tw.gen_image_;
    }
    return tw;
}

FieldElement TowerSpec::embed(const FieldElement& x) const {
    if (!x.valid() || !x.spec()->same_as(*base_))
        throw precondition_error("embed expects an element of the base field");
    FieldElement acc = top_->zero();
    FieldElement pw = top_->one();
    for (uint32_t i = 0; i < base_->degree(); ++i) {
        if (x.coeffs()[i] != 0) acc = acc + pw * top_->from_int(x.coeffs()[i]);
        pw = pw * gen_image_;
    }
    return acc;
}

bool TowerSpec::is_in_subfield(const FieldElement& x) const {
    if (!x.valid() || !x.spec()->same_as(*top_))
        throw precondition_error("subfield test expects an element of the top field");
    return x.pow(base_->size()) == x;
}

FieldElement TowerSpec::project_to_base(const FieldElement& x) const {
    if (!x.valid() || !x.spec()->same_as(*top_))
        throw precondition_error("projection expects an element of the top field");
    const uint32_t a = base_->degree();
    const uint32_t M = top_->degree();
    const uint64_t p = base_->characteristic();
    // solve basis_ * b = coords(x) over GF(p)
    std::vector<std::vector<uint32_t>> aug(M, std::vector<uint32_t>(a + 1, 0));
    for (uint32_t r = 0; r < M; ++r) {
        for (uint32_t c = 0; c < a; ++c) aug[r][c] = basis_[r][c];
        aug[r][a] = x.coeffs()[r];
    }
    auto invmod = [&](uint64_t v) {
        uint64_t r = 1, b = v, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    std::vector<int64_t> pivot_of_col(a, -1);
    for (uint32_t col = 0; col < a && rank < M; ++col) {
        std::size_t piv = rank;
        while (piv < M && aug[piv][col] == 0) ++piv;
        if (piv == M) continue;
        std::swap(aug[rank], aug[piv]);
        uint64_t il = invmod(aug[rank][col]);
        for (uint32_t j = col; j <= a; ++j)
            aug[rank][j] = static_cast<uint32_t>(aug[rank][j] * il % p);
        for (std::size_t i = 0; i < M; ++i) {
            if (i == rank || aug[i][col] == 0) continue;
            uint64_t f = aug[i][col];
            for (uint32_t j = col; j <= a; ++j)
                aug[i][j] = static_cast<uint32_t>((aug[i][j] + p * p - f * aug[rank][j] % p) % p);
        }
        pivot_of_col[col] = static_cast<int64_t>(rank);
        ++rank;
    }
    for (std::size_t i = rank; i < M; ++i)
        if (aug[i][a] != 0)
            throw precondition_error("element lies outside the embedded base field");
    std::vector<uint32_t> b(a, 0);
    for (uint32_t col = 0; col < a; ++col)
        if (pivot_of_col[col] >= 0) b[col] = aug[static_cast<std::size_t>(pivot_of_col[col])][a];
    return base_->from_residues(b);
}

FieldElement primitive_nth_root(const TowerSpec& tower, uint64_t N) {
    if (N == 0) throw precondition_error("root order must be positive");
    const u128 group = tower.top_order() - 1;
    if (group % N != 0)
        throw precondition_error("N does not divide the multiplicative group order");
    if (N == 1) return tower.top()->one();
    const u128 cofactor = group / N;
    for (u128 idx = 1; idx < tower.top_order(); ++idx) {
        FieldElement g = tower.top()->from_index(idx);
        FieldElement beta = g.pow(cofactor);
        if (beta.is_one()) continue;
        if (!beta.pow(N).is_one())
            throw verification_error("cofactor power escaped the order-N subgroup");
        // order divides N = 2^n here only when N is a prime power; test exactly
        if (multiplicative_order(beta, N) == N) return beta;
    }
    throw verification_error("no primitive root found (unreachable for a field)");
}

} // namespace qsc
