// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every tolerance is exact; time budgets are pinned in the table below.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qsc/construct.hpp"
#include "qsc/cosets.hpp"
#include "qsc/cyclic.hpp"
#include "qsc/errors.hpp"
#include "qsc/gf.hpp"
#include "qsc/poly.hpp"
#include "qsc/verify.hpp"

#include "oracle.hpp"

namespace {

using namespace qsc;

constexpr uint64_t kGridQ[] = {5, 9, 13, 17, 25, 41, 49, 73, 97};
constexpr uint32_t kGridNLo = 3, kGridNHi = 10;
constexpr uint32_t kMaxTowerT = 16; // u128 accumulator bound: 97^16 < 2^128

// Collects failures; the runner prints the first few verbatim.
struct Gate {
    uint64_t failures = 0;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        if (ok) return;
        ++failures;
        if (notes.size() < 6) notes.push_back(what);
    }
};

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// grid points where the 2^n-th root of unity fits in the supported tower:
// t = ord(q mod 2^n) = 2^{max(n-z,0)} <= 16 forces n <= z + 4
std::vector<std::pair<uint64_t, uint32_t>> realizable_grid() {
    std::vector<std::pair<uint64_t, uint32_t>> pts;
    for (uint64_t q : kGridQ) {
        const uint32_t z = z_decompose(q).z;
        const uint32_t hi = std::min(kGridNHi, z + 4);
        for (uint32_t n = kGridNLo; n <= hi; ++n) pts.emplace_back(q, n);
    }
    return pts;
}

oracle::Field oracle_field_for(const FieldSpec::Ptr& F) {
    std::vector<uint32_t> mod(F->modulus().begin(), F->modulus().end());
    return oracle::Field(F->characteristic(), F->degree(), mod);
}

std::vector<uint32_t> to_codes(const Polynomial& f) {
    std::vector<uint32_t> out;
    for (const auto& c : f.coeffs()) out.push_back(static_cast<uint32_t>(c.index()));
    return out;
}

uint64_t exact_distance(Gate& g, const AlgebraContext& ctx, const CyclicCode& C,
                        const std::string& label) {
    const auto d = min_distance(ctx, C, 50'000'000);
    g.check(d.exact.has_value(), label + ": support enumeration did not finish");
    return d.exact.value_or(0);
}

SelectionVector sel_of(const AlgebraContext& ctx, const std::vector<uint64_t>& reps) {
    SelectionVector sel;
    for (uint64_t s : reps) sel.idxs.push_back(ctx.table().index_of(s));
    return sel;
}

// ------------------------------------------------------------------ 1

void crit_coset_partition(Gate& g) {
    for (uint64_t q : kGridQ)
        for (uint32_t n = kGridNLo; n <= kGridNHi; ++n) {
            const auto cf = cosets_closed_form(q, n);
            const auto bf = cosets_bruteforce(q, n);
            g.check(cf.closed_form, fmt("(%llu,%u): closed form fell back", (unsigned long long)q, n));
            g.check(cf.cosets == bf.cosets, fmt("(%llu,%u): partitions differ", (unsigned long long)q, n));
            g.check(cf.pairing == bf.pairing, fmt("(%llu,%u): pairings differ", (unsigned long long)q, n));
            g.check(cf.cosets == oracle::cosets_orbits(q, cf.N),
                    fmt("(%llu,%u): oracle orbits differ", (unsigned long long)q, n));
        }
}

// ------------------------------------------------------------------ 2

void crit_order_formula(Gate& g) {
    for (uint64_t q : kGridQ) {
        const auto zd = z_decompose(q);
        for (uint32_t n = kGridNLo; n <= kGridNHi; ++n) {
            const auto t = cosets_bruteforce(q, n);
            for (std::size_t i = 0; i < t.cosets.size(); ++i) {
                const uint64_t s = t.rep(i);
                uint64_t expect = 1;
                if (s != 0) {
                    const uint32_t r = n - static_cast<uint32_t>(__builtin_ctzll(s));
                    expect = coset_size_formula(zd.z, r);
                }
                g.check(t.size(i) == expect,
                        fmt("(%llu,%u): |C_%llu| = %llu, formula says %llu",
                            (unsigned long long)q, n, (unsigned long long)s,
                            (unsigned long long)t.size(i), (unsigned long long)expect));
            }
        }
    }
}

// ------------------------------------------------------------------ 3

void crit_factorization(Gate& g) {
    for (const auto& [q, n] : realizable_grid()) {
        const auto ctx = AlgebraContext::build(q, n, kMaxTowerT);
        const auto factors = factorize_xN_minus_1(ctx);
        g.check(factors.size() == ctx.table().cosets.size(),
                fmt("(%llu,%u): factor count != coset count", (unsigned long long)q, n));
        Polynomial prod = Polynomial::one(ctx.field());
        for (const auto& [idx, f] : factors) {
            g.check(f.is_monic(), fmt("(%llu,%u): factor not monic", (unsigned long long)q, n));
            g.check(f.spec()->same_as(*ctx.field()),
                    fmt("(%llu,%u): coefficients escaped GF(q)", (unsigned long long)q, n));
            g.check(static_cast<uint64_t>(f.degree()) == ctx.table().size(idx),
                    fmt("(%llu,%u): deg M_%llu != coset size", (unsigned long long)q, n,
                        (unsigned long long)ctx.table().rep(idx)));
            prod = prod * f;
        }
        g.check(prod == ctx.xN_minus_1(),
                fmt("(%llu,%u): product is not x^N - 1", (unsigned long long)q, n));
    }
}

// ------------------------------------------------------------------ 4

void crit_reference_listing(Gate& g) {
    const auto table = cosets_closed_form(17, 5);
    // the eight odd cosets, in the documented order, members in orbit order
    const std::vector<std::vector<uint64_t>> expected = {
        {1, 17}, {31, 15}, {3, 19}, {29, 13}, {9, 25}, {23, 7}, {27, 11}, {5, 21}};
    for (const auto& want : expected) {
        const std::size_t idx = table.index_of(want[0]);
        std::vector<uint64_t> got = {want[0], want[0] * 17 % 32};
        std::vector<uint64_t> sorted_got = got, sorted_want = want;
        std::sort(sorted_got.begin(), sorted_got.end());
        g.check(table.cosets[idx] == sorted_got && got == want,
                fmt("coset of %llu is not {%llu,%llu}", (unsigned long long)want[0],
                    (unsigned long long)want[0], (unsigned long long)want[1]));
    }
    std::size_t odd = 0;
    for (const auto& c : table.cosets)
        if (c.front() % 2 == 1) {
            ++odd;
            g.check(c.size() == 2, "odd coset is not a pair");
        }
    g.check(odd == 8, "expected exactly eight odd cosets");

    const auto ctx = AlgebraContext::build(17, 5);
    const auto C = code_from_cosets(ctx, {sel_of(ctx, {1, 3, 5, 7, 2, 4, 6, 8}).idxs});
    g.check(C.N == 32 && C.k == 20, fmt("reference code is [%llu,%llu], want [32,20]",
                                        (unsigned long long)C.N, (unsigned long long)C.k));
    g.check(bch_bound(C) >= 9, fmt("BCH run gives %llu, want at least 9",
                                   (unsigned long long)bch_bound(C)));
}

// ------------------------------------------------------------------ 5

void crit_reference_table1(Gate& g) {
    const auto ctx = AlgebraContext::build(5, 3);
    const auto OF = oracle_field_for(ctx.field());

    // row 1: roots {1,5,2} = C_1 u C_2 -> [8,5,3], dual [8,3,4], dual-containing
    const auto A = code_from_cosets(ctx, sel_of(ctx, {1, 2}).idxs);
    const auto Adual = dual_code(ctx, A);
    g.check(A.k == 5 && Adual.k == 3, "row 1 dimensions are off");
    g.check(is_dual_containing(ctx, A).contains_dual, "row 1 must be dual-containing");
    const uint64_t dA = exact_distance(g, ctx, A, "row 1 code");
    const uint64_t dAd = exact_distance(g, ctx, Adual, "row 1 dual");
    g.check(dA == 3 && dAd == 4, fmt("row 1 distances (%llu,%llu), want (3,4)",
                                     (unsigned long long)dA, (unsigned long long)dAd));
    g.check(oracle::min_weight_bruteforce(OF, 8, to_codes(A.g)) == 3,
            "row 1: 5^5 enumeration disagrees");
    g.check(oracle::min_weight_bruteforce(OF, 8, to_codes(Adual.g)) == 4,
            "row 1 dual: 5^3 enumeration disagrees");

    // row 2: roots {1,5,3,6,7} = C_1 u C_3 u C_6 -> [8,3,4], dual [8,5,2];
    // the bundled dual-containment claim is wrong (C_1 and C_3 are a +/- pair)
    // and ships as a whitelisted discrepancy
    const auto B = code_from_cosets(ctx, sel_of(ctx, {1, 3, 6}).idxs);
    const auto Bdual = dual_code(ctx, B);
    g.check(B.k == 3 && Bdual.k == 5, "row 2 dimensions are off");
    const uint64_t dB = exact_distance(g, ctx, B, "row 2 code");
    const uint64_t dBd = exact_distance(g, ctx, Bdual, "row 2 dual");
    g.check(dB == 4 && dBd == 2, fmt("row 2 distances (%llu,%llu), want (4,2)",
                                     (unsigned long long)dB, (unsigned long long)dBd));
    g.check(oracle::min_weight_bruteforce(OF, 8, to_codes(B.g)) == 4,
            "row 2: 5^3 enumeration disagrees");
    g.check(!is_dual_containing(ctx, B).contains_dual,
            "row 2 is not dual-containing (C_1, C_3 are negations)");

    // row 3: flagged via the whitelist, corrected parameters reported
    const auto rep = run_reference_checks(default_whitelist());
    const auto by_id = [&](const std::string& id) -> const CheckResult* {
        for (const auto& c : rep.checks)
            if (c.id == id) return &c;
        return nullptr;
    };
    const auto* r1 = by_id("table1_row1");
    const auto* r2 = by_id("table1_row2");
    const auto* r3 = by_id("table1_row3");
    g.check(r1 && r1->status == "match", "row 1 check must match");
    g.check(r2 && r2->status == "mismatch-flagged" && r2->whitelisted,
            "row 2 must be a whitelisted discrepancy");
    g.check(r3 && r3->status == "mismatch-flagged" && r3->whitelisted,
            "row 3 must be a whitelisted discrepancy");
    if (r3) {
        const auto corrected = r3->detail.value("known_discrepancy", ojson::object())
                                   .value("corrected", ojson::object());
        g.check(corrected.value("code", ojson::array()) == ojson::array({16, 6, 8}),
                "row 3 corrected parameters must be [16,6,8]");
    }
    // and the corrected row recomputes from scratch
    const auto ctx9 = AlgebraContext::build(9, 4);
    const auto R3 = code_from_cosets(ctx9, sel_of(ctx9, {1, 3, 5, 8, 10, 12, 14}).idxs);
    g.check(R3.k == 6, "row 3 corrected dimension is 6");
    g.check(exact_distance(g, ctx9, R3, "row 3 code") == 8, "row 3 corrected distance is 8");
}

// ------------------------------------------------------------------ 6

void crit_reference_table2(Gate& g) {
    {
        const auto ctx = AlgebraContext::build(5, 3);
        const auto pair = build_augmented_pair(ctx, sel_of(ctx, {1, 2}), sel_of(ctx, {2}));
        g.check(pair.Ca.k == 5 && pair.Cb.k == 7, "8-length pair dimensions are off");
        g.check(is_subcode(pair.Ca, pair.Cb), "8-length pair must nest");
        g.check(pair.cert_a.contains_dual, "8-length inner code must be dual-containing");
        g.check(exact_distance(g, ctx, pair.Ca, "inner [8,5]") == 3, "inner distance 3");
        g.check(exact_distance(g, ctx, pair.Cb, "outer [8,7]") == 2, "outer distance 2");
    }
    {
        const auto ctx = AlgebraContext::build(5, 4);
        const auto pair = build_augmented_pair(ctx, sel_of(ctx, {1, 4}), sel_of(ctx, {4}));
        g.check(pair.Ca.k == 11 && pair.Cb.k == 15, "16-length pair dimensions are off");
        g.check(is_subcode(pair.Ca, pair.Cb), "16-length pair must nest");
        g.check(pair.cert_a.contains_dual, "16-length inner code must be dual-containing");
        g.check(exact_distance(g, ctx, pair.Ca, "inner [16,11]") == 3, "inner distance 3");
        g.check(exact_distance(g, ctx, pair.Cb, "outer [16,15]") == 2, "outer distance 2");
    }
}

// ------------------------------------------------------------------ 7

void crit_reference_pipeline(Gate& g) {
    const auto ctx = AlgebraContext::build(41, 4);
    Theorem1Config cfg;
    cfg.n = 4;
    cfg.q = 41;
    cfg.extra_reps = {6};
    cfg.eps = {0};
    const auto r = theorem1_pair(ctx, cfg);
    g.check(r.ok(), "pipeline self-checks failed");
    g.check(r.pair.Ca.k == 9 && r.pair.Cb.k == 12, "dimensions must be 9 and 12");

    const auto da = min_distance(ctx, r.pair.Ca, 50'000'000);
    const auto db = min_distance(ctx, r.pair.Cb, 50'000'000);
    g.check(da.exact == 6, "inner distance must be exactly 6");
    g.check(db.exact == 4, "outer distance must be exactly 4");

    // f carries exactly the roots {1, 9, 6}: the coset of 1 and the coset of 6
    const auto f_expect =
        ctx.minimal_polynomial_of(1) * ctx.minimal_polynomial_of(6);
    g.check(r.sync.f == f_expect, "f must be M_1 * M_6 (roots 1, 9, 6)");
    g.check(r.sync.order == 16 && r.sync.maximal, "ord(f) must be 16 = N");
    g.check(r.sync.odd_root.has_value(), "odd-root criterion must fire");

    // independent order recomputation over the lookup-table field
    const auto OF = oracle_field_for(ctx.field());
    g.check(oracle::poly_order_bruteforce(OF, to_codes(r.sync.f), 64) == 16,
            "brute-force ord(f) disagrees");

    const auto p = qsc_params(ctx, r.pair, 0, 15, da, db);
    g.check(p.n_phys == 31 && p.k_log == 2, "margins (0,15) must give a [[31,2]] block");
    g.check(p.bit_floor == 1 && p.phase_floor == 2, "floors must be 1 (bit) and 2 (phase)");
    g.check(p.d_a_exact && p.d_b_exact, "floors must be labeled exact");
    g.check(p.max_margin == 15 && p.maximal_tolerance, "margin headroom must be 15");
    const auto p2 = qsc_params(ctx, r.pair, 7, 8, da, db);
    g.check(p2.n_phys == 31 && p2.k_log == 2, "margins (7,8) must give the same block");
}

// ------------------------------------------------------------------ 8

void crit_family_sweep(Gate& g) {
    const std::vector<std::pair<uint32_t, uint64_t>> points = {{4, 41}, {4, 73}, {5, 17}};
    const std::vector<uint64_t> expected_counts = {5, 5, 61};

    for (std::size_t pi = 0; pi < points.size(); ++pi) {
        const auto [n, q] = points[pi];
        const auto ctx = AlgebraContext::build(q, n);
        const uint64_t N = ctx.N(), quarter = N / 4;
        const auto eligible = theorem1_eligible_extras(ctx);
        uint64_t count = 0;

        for (uint64_t d1 = 0; d1 <= 2; ++d1) {
            // lexicographic combinations of eligible reps
            std::vector<std::size_t> pick(d1);
            for (std::size_t i = 0; i < d1; ++i) pick[i] = i;
            if (d1 > eligible.size()) continue;
            while (true) {
                std::vector<uint64_t> combo;
                for (std::size_t i = 0; i < d1; ++i) combo.push_back(eligible[pick[i]]);

                bool pair_ok = true;
                std::set<std::size_t> idxs;
                for (uint64_t s : combo) idxs.insert(ctx.table().index_of(s));
                for (std::size_t idx : idxs)
                    if (idxs.count(ctx.table().negate(idx)) && ctx.table().negate(idx) != idx)
                        pair_ok = false;

                if (pair_ok) {
                    for (uint64_t mask = 0; mask < (uint64_t{1} << d1); ++mask) {
                        Theorem1Config cfg;
                        cfg.n = n;
                        cfg.q = q;
                        cfg.extra_reps = combo;
                        for (std::size_t i = 0; i < d1; ++i)
                            cfg.eps.push_back((mask >> (d1 - 1 - i)) & 1 ? 1 : 0);
                        const auto r = theorem1_pair(ctx, cfg);
                        ++count;

                        const std::string tag =
                            fmt("(%u,%llu) d1=%llu mask=%llu", n, (unsigned long long)q,
                                (unsigned long long)d1, (unsigned long long)mask);
                        g.check(r.ok(), tag + ": pipeline checks failed");
                        g.check(r.pair.cert_a.contains_dual, tag + ": not dual-containing");
                        g.check(is_subcode(r.pair.Ca, r.pair.Cb), tag + ": not nested");
                        g.check(r.k_q == static_cast<int64_t>(quarter) -
                                             2 * static_cast<int64_t>(d1),
                                tag + ": k_q formula broken");
                        for (uint64_t i = 1; i <= quarter; ++i) {
                            g.check(r.pair.Ca.has_root(i), tag + ": g_1 misses a root");
                            if (i >= 2) g.check(r.pair.Cb.has_root(i), tag + ": g_2 misses a root");
                        }
                        g.check(r.sync.order == N, tag + ": ord(f) != 2^n");
                    }
                }

                // advance combination
                std::size_t i = d1;
                bool done = (d1 == 0);
                while (i > 0) {
                    --i;
                    if (pick[i] + (d1 - i) < eligible.size()) {
                        ++pick[i];
                        for (std::size_t j = i + 1; j < d1; ++j) pick[j] = pick[j - 1] + 1;
                        break;
                    }
                    if (i == 0) done = true;
                }
                if (done) break;
            }
        }
        g.check(count == expected_counts[pi],
                fmt("(%u,%llu): %llu valid configs, expected %llu", n, (unsigned long long)q,
                    (unsigned long long)count, (unsigned long long)expected_counts[pi]));
    }
}

// ------------------------------------------------------------------ 9

void crit_distance_oracle(Gate& g) {
    uint64_t checked = 0;

    // every coset selection whose code satisfies q^k <= 10^6
    const auto sweep_point = [&](uint64_t q, uint32_t n, uint64_t kmax) {
        const auto ctx = AlgebraContext::build(q, n);
        const auto OF = oracle_field_for(ctx.field());
        const std::size_t m = ctx.table().cosets.size();
        for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask) {
            std::vector<std::size_t> idxs;
            for (std::size_t i = 0; i < m; ++i)
                if (mask >> i & 1) idxs.push_back(i);
            const auto C = code_from_cosets(ctx, idxs);
            if (C.k == 0 || C.k > kmax) continue;
            const auto d = min_distance(ctx, C, 50'000'000);
            const uint64_t want = oracle::min_weight_bruteforce(OF, C.N, to_codes(C.g));
            g.check(d.exact.has_value() && *d.exact == want,
                    fmt("(%llu,%u) mask=%llu: support %llu vs enumeration %llu",
                        (unsigned long long)q, n, (unsigned long long)mask,
                        (unsigned long long)d.exact.value_or(0), (unsigned long long)want));
            ++checked;
        }
    };
    sweep_point(5, 3, 7);  // 5^7 = 78125
    sweep_point(9, 3, 6);  // 9^6 = 531441
    sweep_point(13, 3, 5); // 13^5 = 371293

    // the corrected 16-length reference code over GF(9): 9^6 <= 10^6
    const auto ctx9 = AlgebraContext::build(9, 4);
    const auto R3 = code_from_cosets(ctx9, sel_of(ctx9, {1, 3, 5, 8, 10, 12, 14}).idxs);
    const auto d = min_distance(ctx9, R3, 50'000'000);
    const auto OF9 = oracle_field_for(ctx9.field());
    g.check(d.exact.has_value() &&
                *d.exact == oracle::min_weight_bruteforce(OF9, 16, to_codes(R3.g)),
            "16-length reference code: oracle disagreement");
    ++checked;

    // 62 selections at (5,3), 246 at (9,3), 50 at (13,3), one 16-length code
    g.check(checked == 359, fmt("%llu codes cross-checked, expected 359",
                                (unsigned long long)checked));
}

// ------------------------------------------------------------------ 10

void crit_duality_algebra(Gate& g) {
    for (const auto& [q, n] : realizable_grid()) {
        const auto ctx = AlgebraContext::build(q, n, kMaxTowerT);
        const auto& table = ctx.table();
        const std::size_t m = table.cosets.size();

        // reciprocal(M_s) = M_{-s}, both sides monic by construction
        for (std::size_t i = 0; i < m; ++i)
            g.check(reciprocal(ctx.minimal_polynomial(i)) == ctx.minimal_polynomial(table.negate(i)),
                    fmt("(%llu,%u): reciprocal(M_%llu) != M_{-%llu}", (unsigned long long)q, n,
                        (unsigned long long)table.rep(i), (unsigned long long)table.rep(i)));

        // 200 random selections: divisibility route vs +/- pair rule
        std::mt19937_64 rng(0x51C0DE + q * 1000 + n);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::size_t> idxs;
            for (std::size_t i = 0; i < m; ++i)
                if (rng() & 1) idxs.push_back(i);
            const auto C = code_from_cosets(ctx, idxs);

            bool pair_rule = true;
            const std::set<std::size_t> sel(idxs.begin(), idxs.end());
            for (std::size_t i : sel) {
                if (table.self_paired(i)) pair_rule = false;
                if (table.negate(i) != i && sel.count(table.negate(i))) pair_rule = false;
            }
            const bool division = divides(C.g, reciprocal(C.h));
            // is_dual_containing re-runs both and throws on any internal split
            const auto cert = is_dual_containing(ctx, C);
            g.check(division == pair_rule && cert.contains_dual == pair_rule,
                    fmt("(%llu,%u) trial %d: duality routes disagree", (unsigned long long)q, n,
                        trial));
        }
    }
}

// ------------------------------------------------------------------ runner

struct Criterion {
    int id;
    const char* label;
    double budget_s; // 0 = untimed (exact-only criterion)
    void (*body)(Gate&);
};

const Criterion kCriteria[] = {
    {1, "coset partition: closed form equals orbit enumeration on the full grid", 10.0,
     crit_coset_partition},
    {2, "coset sizes obey the two-adic order formula at every grid point", 0.0,
     crit_order_formula},
    {3, "minimal polynomials multiply back to x^N - 1 on realizable points", 0.0,
     crit_factorization},
    {4, "reference coset listing at (q=17, n=5) with a BCH run of at least 9", 1.0,
     crit_reference_listing},
    {5, "reference dual-containing codes over GF(5); 16-length row flagged + corrected", 5.0,
     crit_reference_table1},
    {6, "reference augmented pairs nest with exact distances", 10.0, crit_reference_table2},
    {7, "reference pipeline at (q=41, n=4) yields [[31,2]] with floors 1 and 2", 30.0,
     crit_reference_pipeline},
    {8, "family sweep at (4,41), (4,73), (5,17): every valid config re-verified", 120.0,
     crit_family_sweep},
    {9, "support enumeration equals full codeword enumeration on small codes", 0.0,
     crit_distance_oracle},
    {10, "dual-containment routes agree; reciprocal minimal polynomials pair up", 0.0,
     crit_duality_algebra},
};

} // namespace

int main() {
    int failed = 0;
    for (const auto& c : kCriteria) {
        Gate gate;
        std::string aborted;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(gate);
        } catch (const std::exception& ex) {
            aborted = ex.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        const bool over = c.budget_s > 0 && secs > c.budget_s;
        const bool pass = aborted.empty() && gate.failures == 0 && !over;
        if (!pass) ++failed;

        char timing[64];
        if (c.budget_s > 0)
            std::snprintf(timing, sizeof timing, "%6.2fs / %.0fs", secs, c.budget_s);
        else
            std::snprintf(timing, sizeof timing, "%6.2fs", secs);
        std::printf("[%2d] %s  %-74s %s\n", c.id, pass ? "PASS" : "FAIL", c.label, timing);

        if (!aborted.empty()) std::printf("     exception: %s\n", aborted.c_str());
        if (over) std::printf("     over budget\n");
        for (const auto& note : gate.notes) std::printf("     %s\n", note.c_str());
        if (gate.failures > gate.notes.size())
            std::printf("     ... and %llu more\n",
                        (unsigned long long)(gate.failures - gate.notes.size()));
        std::fflush(stdout);
    }
    std::printf("%d/10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
