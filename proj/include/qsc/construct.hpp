#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsc/cyclic.hpp"

namespace qsc {

// A selection of cyclotomic cosets for the generator polynomial, by coset
// index into the context's table. Order-insensitive; duplicates rejected.
struct SelectionVector {
    std::vector<std::size_t> idxs;
};

// Throws precondition_error on duplicates or out-of-range indices.
void validate_selection(const AlgebraContext& ctx, const SelectionVector& sel);

// Indices of C_{-s} for each selected C_s.
SelectionVector negate_selection(const AlgebraContext& ctx, const SelectionVector& sel);

// Builds the cyclic code with g = prod of the selected minimal polynomials
// and certifies dual containment. Throws precondition_error when the
// selection picks a self-paired coset or both members of a +/- pair.
struct DualContainingCode {
    CyclicCode code;
    DualContainingCert cert;
};

DualContainingCode build_dual_containing(const AlgebraContext& ctx, const SelectionVector& sel);

// Augmented pair: C_a from sel_a, C_b from the strict subset sel_b, so that
// C_a subsetneq C_b (removing factors from g enlarges the code). C_a must be
// dual-containing; C_b need not be. Throws precondition_error unless
// sel_b is a strict subset of sel_a.
struct AugmentedPair {
    CyclicCode Ca;
    CyclicCode Cb;
    DualContainingCert cert_a;
};

AugmentedPair build_augmented_pair(const AlgebraContext& ctx, const SelectionVector& sel_a,
                                   const SelectionVector& sel_b);

// The z = n-1 construction ingredients: when q = 1 + 2^{n-1} c, every odd
// coset is the pair {v, v + 2^{n-1}} and every even coset is a singleton.
// hat_MS multiplies the odd-coset minimal polynomials for v = 1, 3, ...,
// 2^{n-2} - 1 (one coset per +/- pair); the overline variant drops the coset
// of 1.
struct HatMS {
    Polynomial poly;
    std::vector<std::size_t> coset_idxs;
};

HatMS hat_MS(const AlgebraContext& ctx);
HatMS hat_MS_overline(const AlgebraContext& ctx);

// Order of the quotient polynomial f = g_a / g_b (well defined because
// C_a subseteq C_b forces g_b | g_a): the least e with f(x) | x^e - 1.
// Maximal tolerance needs ord = N, equivalently f has a root alpha^i with i
// odd. Both routes are computed and must agree.
struct SyncCertificate {
    Polynomial f;
    uint64_t order = 0;
    bool maximal = false;
    std::optional<uint64_t> odd_root; // least odd exponent among f's roots
};

// f-level primitive: f must divide x^N - 1 over GF(q).
SyncCertificate sync_certificate(const AlgebraContext& ctx, const Polynomial& f);
SyncCertificate sync_certificate(const AlgebraContext& ctx, const AugmentedPair& pair);

// Parameters of the synchronizable code obtained from an augmented pair with
// left/right margins obeying c_l + c_r < ord(f). The error-correction floors
// come from the distances of C_b (bit flips) and C_a (phase flips); each floor
// is labeled exact when the underlying distance was exact, otherwise it is a
// lower bound derived from the best available bound.
struct QscParams {
    uint64_t n_phys = 0;       // N + c_l + c_r
    uint64_t k_log = 0;        // 2 k_a - N
    uint64_t c_l = 0;
    uint64_t c_r = 0;
    uint64_t ord_f = 0;        // order of the quotient polynomial
    uint64_t max_margin = 0;   // ord_f - 1, the largest admissible c_l + c_r
    bool maximal_tolerance = false; // ord_f == N
    uint64_t d_a = 0;          // distance value used for C_a (exact or bound)
    uint64_t d_b = 0;          // distance value used for C_b
    bool d_a_exact = false;
    bool d_b_exact = false;
    uint64_t bit_floor = 0;    // floor((d_b - 1) / 2)
    uint64_t phase_floor = 0;  // floor((d_a - 1) / 2)
};

QscParams qsc_params(const AlgebraContext& ctx, const AugmentedPair& pair, uint64_t c_l,
                     uint64_t c_r, const DistanceResult& dist_a, const DistanceResult& dist_b);

// The z = n-1 family: g_1 = hat_MS * prod_{j=1}^{2^{n-3}} (x - alpha^{2j}) *
// extra minimal polynomials; g_2 drops the coset of 1 and keeps each extra
// factor only where eps = 1. delta1 counts the extra cosets.
struct Theorem1Config {
    uint32_t n = 0;
    uint64_t q = 0;
    std::vector<uint64_t> extra_reps; // representatives of the delta1 extra even cosets
    std::vector<uint32_t> eps;        // one flag per extra rep
};

struct Theorem1Result {
    AugmentedPair pair;
    SyncCertificate sync;
    uint64_t delta1 = 0;
    int64_t k_q = 0;     // 2 k_a - N, the logical dimension
    uint64_t bch_d1 = 0; // >= 2^{n-2} + 1
    uint64_t bch_d2 = 0; // >= 2^{n-2}
    std::vector<std::string> failures; // verification failures, empty on success

    bool ok() const { return failures.empty(); }
};

// Even cosets individually eligible as extras: not 0 or 2^{n-1}, and not in
// the 2j block or its negation. Sorted ascending. A chosen subset must
// additionally avoid taking both members of a +/- pair (enforced by
// theorem1_pair, which re-verifies dual containment).
std::vector<uint64_t> theorem1_eligible_extras(const AlgebraContext& ctx);

Theorem1Result theorem1_pair(const AlgebraContext& ctx, const Theorem1Config& cfg);

} // namespace qsc
