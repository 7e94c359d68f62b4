#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsc/cosets.hpp"
#include "qsc/gf.hpp"
#include "qsc/poly.hpp"

namespace qsc {

// Everything needed to work with cyclic codes of length N = 2^n over GF(q):
// the coset table, the tower GF(q) in GF(q^t) hosting a primitive N-th root
// of unity alpha, cached powers of alpha, and the minimal polynomial of each
// coset. Construction verifies that the minimal polynomials multiply back to
// x^N - 1 over GF(q).
class AlgebraContext {
  public:
    // q = p^a read off automatically; t = ord(q mod 2^n). max_t caps the
    // extension degree (the default matches what fits comfortably in 128-bit
    // arithmetic across the supported grid).
    static AlgebraContext build(uint64_t q, uint32_t n, uint32_t max_t = 16);

    const FieldSpec::Ptr& field() const { return field_; }
    uint32_t n() const { return n_; }
    uint64_t N() const { return N_; }
    uint64_t q() const { return zdec_.q; }
    const ZDecomposition& zdec() const { return zdec_; }
    const CosetTable& table() const { return table_; }
    const TowerSpec& tower() const { return tower_; }
    const FieldElement& alpha() const { return alpha_; }
    const FieldElement& alpha_pow(uint64_t i) const { return alpha_pow_[i % N_]; }

    // M_s(x) = prod_{i in C_s} (x - alpha^i), projected onto GF(q)
    const Polynomial& minimal_polynomial(std::size_t coset_idx) const;
    const Polynomial& minimal_polynomial_of(uint64_t s) const;
    Polynomial xN_minus_1() const;

  private:
    AlgebraContext() = default;

    FieldSpec::Ptr field_;
    uint32_t n_ = 0;
    uint64_t N_ = 0;
    ZDecomposition zdec_;
    CosetTable table_;
    TowerSpec tower_;
    FieldElement alpha_;
    std::vector<FieldElement> alpha_pow_;
    std::vector<Polynomial> min_polys_;
};

// The verified factorization x^N - 1 = prod M_s, one factor per coset.
std::vector<std::pair<std::size_t, Polynomial>> factorize_xN_minus_1(const AlgebraContext& ctx);

// Cyclic code of length N over GF(q) with monic generator g | x^N - 1.
struct CyclicCode {
    uint64_t N = 0;
    Polynomial g;
    Polynomial h;                        // (x^N - 1) / g
    uint64_t k = 0;                      // N - deg g
    std::vector<std::size_t> coset_idxs; // cosets whose minimal polynomials divide g
    std::vector<uint64_t> roots;         // exponents i with g(alpha^i) = 0, sorted

    bool has_root(uint64_t i) const;
};

CyclicCode code_from_cosets(const AlgebraContext& ctx, const std::vector<std::size_t>& coset_idxs);
// g must be monic and a product of minimal polynomials (i.e. divide x^N - 1)
CyclicCode code_from_generator(const AlgebraContext& ctx, const Polynomial& g);

// generator = reciprocal(h); dim(C) + dim(dual) = N
CyclicCode dual_code(const AlgebraContext& ctx, const CyclicCode& C);

// Certificate for C_perp subseteq C. Computed two ways that must agree:
// (a) g | reciprocal(h), (b) the root set never meets its own negation.
struct DualContainingCert {
    bool contains_dual = false;
    std::vector<uint64_t> self_paired;                     // reps of selected self-paired cosets
    std::vector<std::pair<uint64_t, uint64_t>> pair_hits;  // reps (s, -s) both selected
};

DualContainingCert is_dual_containing(const AlgebraContext& ctx, const CyclicCode& C);

// true iff g_b | g_a (then every codeword of Ca lies in Cb)
bool is_subcode(const CyclicCode& Ca, const CyclicCode& Cb);

// Lengths of the longest run of consecutive root exponents, with and without
// wraparound mod N. The BCH bound is cyclic + 1.
struct RootRuns {
    uint64_t cyclic = 0;
    uint64_t linear = 0;
};

RootRuns longest_root_runs(const CyclicCode& C);
uint64_t bch_bound(const CyclicCode& C);

struct DistanceResult {
    std::optional<uint64_t> exact;
    uint64_t lower_bound = 0;              // BCH, or more once weights are exhausted
    std::optional<uint64_t> upper_bound;   // weight of the best witness seen
    std::optional<std::vector<FieldElement>> witness; // codeword of weight upper_bound
    uint64_t rank_tests = 0;
    bool budget_exhausted = false;
};

// Exact minimum distance by support enumeration: the least w such that some w
// columns of the parity-check matrix are linearly dependent. Supports are
// scanned in lexicographic order, so the witness is the lexicographically
// least minimum-weight support. `budget` caps the number of rank tests; once
// exceeded the result carries bounds only. Rejects k = 0 and k = N.
DistanceResult min_distance(const AlgebraContext& ctx, const CyclicCode& C,
                            uint64_t budget = 10'000'000);

using Matrix = std::vector<std::vector<FieldElement>>;

// k rows, shifts of g's coefficients
Matrix generator_matrix(const AlgebraContext& ctx, const CyclicCode& C);
// N-k rows, shifts of reciprocal(h)'s coefficients; G H^T = 0
Matrix parity_check_matrix(const AlgebraContext& ctx, const CyclicCode& C);

} // namespace qsc
