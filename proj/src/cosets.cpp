#include "qsc/cosets.hpp"

#include <algorithm>
#include <limits>

namespace qsc {

namespace {

void check_n(uint32_t n) {
    if (n == 0 || n > 30) throw precondition_error("n must lie in [1, 30]");
}

// shared finalization: sort members, sort cosets by smallest member, build
// rep_of and pairing, and make sure the cosets really partition Z_N
void finalize(CosetTable& t) {
    for (auto& c : t.cosets) std::sort(c.begin(), c.end());
    std::sort(t.cosets.begin(), t.cosets.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    t.rep_of.assign(t.N, std::numeric_limits<std::size_t>::max());
    uint64_t covered = 0;
    for (std::size_t i = 0; i < t.cosets.size(); ++i) {
        for (uint64_t m : t.cosets[i]) {
            if (m >= t.N || t.rep_of[m] != std::numeric_limits<std::size_t>::max())
                throw verification_error("cosets overlap or leave Z_N");
            t.rep_of[m] = i;
            ++covered;
        }
    }
    if (covered != t.N) throw verification_error("cosets do not cover Z_N");

    t.pairing.resize(t.cosets.size());
    for (std::size_t i = 0; i < t.cosets.size(); ++i) {
        uint64_t neg = (t.N - t.rep(i)) % t.N;
        t.pairing[i] = t.rep_of[neg];
    }
    for (std::size_t i = 0; i < t.cosets.size(); ++i)
        if (t.pairing[t.pairing[i]] != i)
            throw verification_error("coset pairing is not an involution");
}

} // namespace

ZDecomposition z_decompose(uint64_t q) {
    if (q < 5 || q % 4 != 1)
        throw precondition_error("q must satisfy q = 1 (mod 4) and q >= 5");
    ZDecomposition d;
    d.q = q;
    uint64_t v = q - 1;
    while (v % 2 == 0) {
        v /= 2;
        ++d.z;
    }
    d.c = v;
    return d;
}

CosetTable cosets_bruteforce(uint64_t q, uint32_t n) {
    if (q % 2 == 0) throw precondition_error("q must be odd");
    check_n(n);
    CosetTable t;
    t.q = q;
    t.n = n;
    t.N = uint64_t(1) << n;
    t.closed_form = false;

    std::vector<bool> seen(t.N, false);
    for (uint64_t s = 0; s < t.N; ++s) {
        if (seen[s]) continue;
        std::vector<uint64_t> orbit;
        uint64_t v = s;
        do {
            orbit.push_back(v);
            seen[v] = true;
            v = v * (q % t.N) % t.N;
        } while (v != s);
        t.cosets.push_back(std::move(orbit));
    }
    finalize(t);
    return t;
}

uint64_t coset_size_formula(uint32_t z, uint32_t r) {
    return r >= z + 1 ? uint64_t(1) << (r - z) : 1;
}

SrSet sr_set(uint32_t n, uint32_t z, uint32_t r) {
    if (r < 2 || r > n) throw precondition_error("level r must lie in [2, n]");
    if (z < 2) throw precondition_error("z must be at least 2");
    SrSet s;
    s.r = r;
    const uint64_t N = uint64_t(1) << n;
    const uint64_t scale = uint64_t(1) << (n - r);
    const uint64_t jmax = uint64_t(1) << (std::min(r, z) - 2);
    uint64_t pw = 1; // 3^j mod 2^n
    std::vector<uint64_t> plus, minus;
    for (uint64_t j = 0; j < jmax; ++j) {
        plus.push_back(pw * scale % N);
        minus.push_back((N - pw * scale % N) % N);
        pw = pw * 3 % N;
    }
    s.members = std::move(plus);
    s.members.insert(s.members.end(), minus.begin(), minus.end());
    return s;
}

CosetTable cosets_closed_form(uint64_t q, uint32_t n) {
    ZDecomposition d = z_decompose(q);
    check_n(n);
    if (n < 3) {
        CosetTable t = cosets_bruteforce(q, n);
        return t;
    }

    CosetTable t;
    t.q = q;
    t.n = n;
    t.N = uint64_t(1) << n;
    t.closed_form = true;

    const uint64_t qm = q % t.N;
    auto expand = [&](uint64_t s, uint64_t size) {
        std::vector<uint64_t> coset;
        coset.reserve(size);
        uint64_t v = s;
        for (uint64_t i = 0; i < size; ++i) {
            coset.push_back(v);
            v = v * qm % t.N;
        }
        if (v != s) throw verification_error("order formula disagrees with the orbit");
        return coset;
    };

    t.cosets.push_back({0});
    t.cosets.push_back({t.N / 2});
    for (uint32_t r = 2; r <= n; ++r) {
        const uint64_t size = coset_size_formula(d.z, r);
        for (uint64_t s : sr_set(n, d.z, r).members) t.cosets.push_back(expand(s, size));
    }
    finalize(t);
    return t;
}

} // namespace qsc
