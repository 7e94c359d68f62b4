#pragma once

#include <cstdint>
#include <vector>

#include "qsc/errors.hpp"

namespace qsc {

// q = 1 + 2^z * c with z >= 2 and c odd. Defined only for q = 1 (mod 4).
struct ZDecomposition {
    uint64_t q = 0;
    uint32_t z = 0;
    uint64_t c = 0;
};

ZDecomposition z_decompose(uint64_t q);

// Partition of Z_{2^n} into q-cyclotomic cosets C_s = {s, sq, sq^2, ...}.
// Cosets are stored sorted by their representative (minimum element) and each
// coset's members are sorted ascending. `pairing` maps a coset to the coset
// of the negated representative; it is an involution with exactly C_0 and
// C_{2^{n-1}} as fixed points.
struct CosetTable {
    uint64_t q = 0;
    uint32_t n = 0;
    uint64_t N = 0;
    bool closed_form = false; // false: orbit enumeration; true: built from the S_r representatives
    std::vector<std::vector<uint64_t>> cosets;
    std::vector<std::size_t> rep_of;  // residue -> coset index
    std::vector<std::size_t> pairing; // coset index -> index of C_{-s}

    std::size_t index_of(uint64_t s) const { return rep_of.at(s % N); }
    uint64_t rep(std::size_t idx) const { return cosets[idx].front(); }
    std::size_t size(std::size_t idx) const { return cosets[idx].size(); }
    std::size_t negate(std::size_t idx) const { return pairing[idx]; }
    bool self_paired(std::size_t idx) const { return pairing[idx] == idx; }
};

// Orbit enumeration of multiplication by q on Z_{2^n}. Needs odd q only.
CosetTable cosets_bruteforce(uint64_t q, uint32_t n);

// Builds the table from the level representatives S_r * 2^{n-r} with sizes
// from the order formula, no orbit search. Requires q = 1 (mod 4); for n < 3
// falls back to orbit enumeration (closed_form stays false).
CosetTable cosets_closed_form(uint64_t q, uint32_t n);

// Size of every coset at level r (those with representative S*2^{n-r}):
// 2^{r-z} when r >= z+1, else 1.
uint64_t coset_size_formula(uint32_t z, uint32_t r);

// Level representatives {±3^j * 2^{n-r}} reduced mod 2^n, for 2 <= r <= n.
// The exponent range is j < 2^{r-2} for r <= z and j < 2^{z-2} for r > z,
// so the set holds 2^{min(r,z)-1} residues.
struct SrSet {
    uint32_t r = 0;
    std::vector<uint64_t> members; // scaled residues, +3^j block then -3^j block
};

SrSet sr_set(uint32_t n, uint32_t z, uint32_t r);

} // namespace qsc
