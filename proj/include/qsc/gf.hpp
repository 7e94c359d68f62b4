#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qsc/errors.hpp"

namespace qsc {

using u128 = unsigned __int128;

std::string u128_to_string(u128 v);

class FieldElement;

// Description of a finite field GF(p^a), p an odd prime.
// For a == 1 the modulus is empty; for a > 1 it is a monic irreducible
// polynomial of degree a over GF(p), stored as ascending residue coefficients.
// Specs are immutable and shared; elements keep a shared_ptr back to them.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  public:
    using Ptr = std::shared_ptr<const FieldSpec>;

    // GF(p) for odd prime p.
    static Ptr prime(uint32_t p);
    // GF(p^a) with an explicit monic irreducible modulus (degree a, ascending coeffs).
    static Ptr extension(uint32_t p, const std::vector<uint32_t>& modulus);
    // GF(p^a) with the first irreducible modulus found from `seed` (find_irreducible order).
    static Ptr extension(uint32_t p, uint32_t a, uint64_t seed);
    // Convenience: GF(q) for q = p^a, default modulus (seed 0).
    static Ptr of_order(uint64_t q);

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return deg_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    u128 size() const { return size_; } // p^a
    bool same_as(const FieldSpec& other) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_residues(std::vector<uint32_t> coeffs) const; // values reduced mod p
    FieldElement from_int(int64_t v) const;                         // v mod p as a constant
    FieldElement from_index(u128 index) const;                      // base-p digits, c0 least significant
    u128 element_count() const { return size_; }

  private:
    FieldSpec(uint32_t p, uint32_t deg, std::vector<uint32_t> modulus);

    uint32_t p_;
    uint32_t deg_;
    std::vector<uint32_t> modulus_; // size deg_+1 when deg_ > 1, else empty
    u128 size_;
};

// Element of GF(p^a): `a` residues mod p, ascending degree.
class FieldElement {
  public:
    FieldElement() = default; // detached; any arithmetic on it throws

    const FieldSpec::Ptr& spec() const { return spec_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    bool valid() const { return spec_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;
    u128 index() const; // sum c_i p^i

    FieldElement operator-() const;
    FieldElement inv() const; // throws precondition_error on zero
    FieldElement pow(u128 e) const;

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
    friend bool operator==(const FieldElement& x, const FieldElement& y);
    friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

  private:
    friend class FieldSpec;
    friend class TowerSpec;
    FieldElement(FieldSpec::Ptr spec, std::vector<uint32_t> c);

    FieldSpec::Ptr spec_;
    std::vector<uint32_t> c_;
};

// Multiplicative order of x; x must be nonzero. Exhausts divisor chain of size()-1
// only through the given bound candidates, so callers pass orders they can bound.
u128 multiplicative_order(const FieldElement& x, u128 group_order);

// First monic irreducible polynomial of degree m over GF(p), enumerating
// candidates by their base-p coefficient index starting at `seed` (wrapping),
// returned as ascending coefficients of length m+1. Deterministic.
std::vector<uint32_t> find_irreducible_coeffs(uint32_t p, uint32_t m, uint64_t seed);

bool is_irreducible_mod_p(uint32_t p, const std::vector<uint32_t>& f);

// GF(q) = GF(p^a) embedded in GF(q^t), realized as GF(p^{a*t}) over a single
// modulus. The embedding sends the base generator y to a root `gen_image` of
// the base modulus inside the top field, found by a deterministic search in
// the degree-a subfield (kernel of Frobenius^a - id).
class TowerSpec {
  public:
    // t >= 1; top field is GF(p^{a*t}) with modulus find_irreducible(p, a*t, seed)
    // (the base spec itself when t == 1 and the degrees match).
    static TowerSpec build(FieldSpec::Ptr base, uint32_t t, uint64_t seed = 0);

    const FieldSpec::Ptr& base() const { return base_; }
    const FieldSpec::Ptr& top() const { return top_; }
    uint32_t t() const { return t_; }
    u128 base_order() const { return base_->size(); }
    u128 top_order() const { return top_->size(); }
    const FieldElement& gen_image() const { return gen_image_; }

    FieldElement embed(const FieldElement& x) const;
    // true iff x^q = x, q the base field order
    bool is_in_subfield(const FieldElement& x) const;
    // unique preimage under embed; throws precondition_error when x is outside
    FieldElement project_to_base(const FieldElement& x) const;

  private:
    FieldSpec::Ptr base_;
    FieldSpec::Ptr top_;
    uint32_t t_ = 0;
    FieldElement gen_image_;                     // embed(y); equals one() when base degree is 1
    std::vector<std::vector<uint32_t>> basis_;   // columns: coords of gen_image^i, i < base degree
};

// alpha with multiplicative order exactly N in tower.top(). N must divide
// q^t - 1. First candidate (by element index) whose (q^t-1)/N power has order
// exactly N; reproducible across runs.
FieldElement primitive_nth_root(const TowerSpec& tower, uint64_t N);

} // namespace qsc
