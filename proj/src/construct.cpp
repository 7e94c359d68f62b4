#include "qsc/construct.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

std::string coset_name(const CosetTable& t, std::size_t idx) {
    return "C_" + std::to_string(t.rep(idx));
}

// Rejects selections that can never yield a dual-containing code: a
// self-paired coset puts a root pair {i, -i} straight into g, and picking
// both members of a +/- pair does the same across two cosets.
void enforce_pair_rule(const CosetTable& t, const std::set<std::size_t>& chosen) {
    for (std::size_t idx : chosen) {
        if (t.self_paired(idx))
            throw precondition_error(coset_name(t, idx) +
                                     " is its own negation and can never be selected");
        const std::size_t mate = t.negate(idx);
        if (idx < mate && chosen.count(mate))
            throw precondition_error("selection holds both " + coset_name(t, idx) + " and " +
                                     coset_name(t, mate) + ", which are negations of each other");
    }
}

} // namespace

void validate_selection(const AlgebraContext& ctx, const SelectionVector& sel) {
    const auto& t = ctx.table();
    std::set<std::size_t> seen;
    for (std::size_t idx : sel.idxs) {
        if (idx >= t.cosets.size())
            throw precondition_error("selection index " + std::to_string(idx) +
                                     " out of range: the table has " +
                                     std::to_string(t.cosets.size()) + " cosets");
        if (!seen.insert(idx).second)
            throw precondition_error("selection repeats " + coset_name(t, idx));
    }
}

SelectionVector negate_selection(const AlgebraContext& ctx, const SelectionVector& sel) {
    validate_selection(ctx, sel);
    SelectionVector out;
    out.idxs.reserve(sel.idxs.size());
    for (std::size_t idx : sel.idxs) out.idxs.push_back(ctx.table().negate(idx));
    return out;
}

DualContainingCode build_dual_containing(const AlgebraContext& ctx, const SelectionVector& sel) {
    validate_selection(ctx, sel);
    enforce_pair_rule(ctx.table(), {sel.idxs.begin(), sel.idxs.end()});
    DualContainingCode out;
    out.code = code_from_cosets(ctx, sel.idxs);
    out.cert = is_dual_containing(ctx, out.code);
    if (!out.cert.contains_dual)
        throw verification_error("selection obeys the pair rule yet the certificate failed");
    return out;
}

AugmentedPair build_augmented_pair(const AlgebraContext& ctx, const SelectionVector& sel_a,
                                   const SelectionVector& sel_b) {
    validate_selection(ctx, sel_a);
    validate_selection(ctx, sel_b);
    const std::set<std::size_t> a(sel_a.idxs.begin(), sel_a.idxs.end());
    const std::set<std::size_t> b(sel_b.idxs.begin(), sel_b.idxs.end());
    for (std::size_t idx : b)
        if (!a.count(idx))
            throw precondition_error(coset_name(ctx.table(), idx) +
                                     " appears in the larger code's selection only; every factor "
                                     "of g_b must also divide g_a");
    if (b.size() == a.size())
        throw precondition_error("the selections coincide, so the inclusion would not be strict");

    DualContainingCode dc = build_dual_containing(ctx, sel_a);
    AugmentedPair out;
    out.Ca = std::move(dc.code);
    out.cert_a = std::move(dc.cert);
    out.Cb = code_from_cosets(ctx, sel_b.idxs);
    if (!is_subcode(out.Ca, out.Cb) || out.Ca.k >= out.Cb.k)
        throw verification_error("augmented pair failed the inclusion check");
    return out;
}

namespace {

HatMS hat_product(const AlgebraContext& ctx, bool drop_coset_of_one) {
    const auto& zd = ctx.zdec();
    if (zd.z != ctx.n() - 1)
        throw precondition_error("the paired-odd-coset product needs z = n-1, but q = " +
                                 std::to_string(zd.q) + " has z = " + std::to_string(zd.z) +
                                 " at n = " + std::to_string(ctx.n()));
    const uint64_t count = ctx.N() >> 3; // 2^{n-3} odd cosets, one per +/- pair
    const auto& t = ctx.table();
    HatMS out;
    Polynomial g = Polynomial::one(ctx.field());
    for (uint64_t k = drop_coset_of_one ? 2 : 1; k <= count; ++k) {
        const uint64_t v = 2 * k - 1;
        const std::size_t idx = t.index_of(v);
        if (t.size(idx) != 2)
            throw verification_error("odd coset of " + std::to_string(v) +
                                     " does not have size 2 despite z = n-1");
        out.coset_idxs.push_back(idx);
        g = g * ctx.minimal_polynomial(idx);
    }
    const auto expect = static_cast<int64_t>(2 * (count - (drop_coset_of_one ? 1 : 0)));
    if (g.degree() != expect) throw verification_error("paired-odd-coset product has wrong degree");
    out.poly = std::move(g);
    return out;
}

} // namespace

HatMS hat_MS(const AlgebraContext& ctx) { return hat_product(ctx, false); }

HatMS hat_MS_overline(const AlgebraContext& ctx) { return hat_product(ctx, true); }

SyncCertificate sync_certificate(const AlgebraContext& ctx, const Polynomial& f) {
    if (f.is_zero() || !f.is_monic())
        throw precondition_error("the quotient polynomial must be monic");
    if (!f.spec()->same_as(*ctx.field()))
        throw precondition_error("the quotient polynomial is over the wrong field");
    if (!divides(f, ctx.xN_minus_1()))
        throw precondition_error("the quotient polynomial must divide x^N - 1");

    SyncCertificate out;
    out.f = f;
    out.order = order_of(f, ctx.N());

    // Independent route: collect f's root exponents from the cosets whose
    // minimal polynomials divide it, and look for an odd one.
    for (std::size_t i = 0; i < ctx.table().cosets.size(); ++i) {
        if (!divides(ctx.minimal_polynomial(i), f)) continue;
        for (uint64_t e : ctx.table().cosets[i])
            if (e % 2 == 1 && (!out.odd_root || e < *out.odd_root)) out.odd_root = e;
    }
    out.maximal = out.order == ctx.N();
    if (out.maximal != out.odd_root.has_value())
        throw verification_error("order of the quotient disagrees with the odd-root criterion");
    return out;
}

SyncCertificate sync_certificate(const AlgebraContext& ctx, const AugmentedPair& pair) {
    return sync_certificate(ctx, divide_exact(pair.Ca.g, pair.Cb.g));
}

QscParams qsc_params(const AlgebraContext& ctx, const AugmentedPair& pair, uint64_t c_l,
                     uint64_t c_r, const DistanceResult& dist_a, const DistanceResult& dist_b) {
    if (!pair.cert_a.contains_dual)
        throw precondition_error("the inner code does not contain its dual");
    if (!is_subcode(pair.Ca, pair.Cb) || pair.Ca.k >= pair.Cb.k)
        throw precondition_error("the pair is not strictly nested");
    if (2 * pair.Ca.k < ctx.N())
        throw precondition_error("2 k_a - N is negative; no logical qudits remain");

    const SyncCertificate sync = sync_certificate(ctx, pair);
    if (c_l + c_r >= sync.order)
        throw precondition_error("margins c_l + c_r = " + std::to_string(c_l + c_r) +
                                 " must stay strictly below ord(f) = " +
                                 std::to_string(sync.order));

    QscParams p;
    p.n_phys = ctx.N() + c_l + c_r;
    p.k_log = 2 * pair.Ca.k - ctx.N();
    p.c_l = c_l;
    p.c_r = c_r;
    p.ord_f = sync.order;
    p.max_margin = sync.order - 1;
    p.maximal_tolerance = sync.maximal;
    p.d_a_exact = dist_a.exact.has_value();
    p.d_b_exact = dist_b.exact.has_value();
    p.d_a = p.d_a_exact ? *dist_a.exact : dist_a.lower_bound;
    p.d_b = p.d_b_exact ? *dist_b.exact : dist_b.lower_bound;
    if (p.d_a == 0 || p.d_b == 0) throw precondition_error("distance information is empty");
    p.bit_floor = (p.d_b - 1) / 2;
    p.phase_floor = (p.d_a - 1) / 2;
    return p;
}

std::vector<uint64_t> theorem1_eligible_extras(const AlgebraContext& ctx) {
    if (ctx.zdec().z != ctx.n() - 1)
        throw precondition_error("extra cosets are defined for the z = n-1 family only");
    const uint64_t N = ctx.N();
    std::set<uint64_t> excluded{0, N / 2};
    for (uint64_t j = 1; j <= N / 8; ++j) {
        excluded.insert(2 * j);
        excluded.insert(N - 2 * j);
    }
    std::vector<uint64_t> out;
    for (uint64_t s = 2; s < N; s += 2)
        if (!excluded.count(s)) out.push_back(s);
    return out;
}

Theorem1Result theorem1_pair(const AlgebraContext& ctx, const Theorem1Config& cfg) {
    if (cfg.q != ctx.q() || cfg.n != ctx.n())
        throw precondition_error("configuration does not match the algebra context");
    if (ctx.zdec().z != ctx.n() - 1)
        throw precondition_error("this family needs z = n-1; q = " + std::to_string(ctx.q()) +
                                 " has z = " + std::to_string(ctx.zdec().z));
    const uint64_t N = ctx.N();
    const uint64_t quarter = N / 4; // 2^{n-2}
    const uint64_t delta1 = cfg.extra_reps.size();
    if (delta1 + 2 > quarter)
        throw precondition_error("delta1 = " + std::to_string(delta1) +
                                 " exceeds the bound 2^{n-2} - 2 = " + std::to_string(quarter - 2));
    if (cfg.eps.size() != delta1)
        throw precondition_error("need exactly one keep/drop flag per extra coset");
    for (uint32_t e : cfg.eps)
        if (e > 1) throw precondition_error("keep/drop flags must be 0 or 1");

    const auto eligible = theorem1_eligible_extras(ctx);
    const auto& t = ctx.table();
    std::set<std::size_t> extra_idxs;
    for (uint64_t s : cfg.extra_reps) {
        if (!std::binary_search(eligible.begin(), eligible.end(), s % N))
            throw precondition_error("C_" + std::to_string(s) + " is not an eligible extra coset");
        if (!extra_idxs.insert(t.index_of(s)).second)
            throw precondition_error("extra coset C_" + std::to_string(s) + " repeats");
    }
    enforce_pair_rule(t, extra_idxs);

    // g_1: every paired odd coset representative, the even block alpha^{2j}
    // for j = 1..2^{n-3}, and the extras. g_2: the same minus the coset of 1,
    // with each extra kept only where its flag says so.
    SelectionVector sel_a, sel_b;
    const HatMS hat = hat_MS(ctx);
    sel_a.idxs = hat.coset_idxs;
    sel_b.idxs.assign(hat.coset_idxs.begin() + 1, hat.coset_idxs.end());
    for (uint64_t j = 1; j <= N / 8; ++j) {
        sel_a.idxs.push_back(t.index_of(2 * j));
        sel_b.idxs.push_back(t.index_of(2 * j));
    }
    std::size_t pos = 0;
    for (uint64_t s : cfg.extra_reps) {
        sel_a.idxs.push_back(t.index_of(s));
        if (cfg.eps[pos] == 1) sel_b.idxs.push_back(t.index_of(s));
        ++pos;
    }

    Theorem1Result r;
    r.delta1 = delta1;
    r.pair = build_augmented_pair(ctx, sel_a, sel_b);
    r.sync = sync_certificate(ctx, r.pair);
    r.k_q = 2 * static_cast<int64_t>(r.pair.Ca.k) - static_cast<int64_t>(N);
    r.bch_d1 = bch_bound(r.pair.Ca);
    r.bch_d2 = bch_bound(r.pair.Cb);

    auto fail = [&r](const std::string& what) { r.failures.push_back(what); };

    const auto expect_deg1 = static_cast<int64_t>(quarter + N / 8 + delta1);
    if (r.pair.Ca.g.degree() != expect_deg1)
        fail("deg g_1 = " + std::to_string(r.pair.Ca.g.degree()) + ", expected " +
             std::to_string(expect_deg1));

    uint64_t kept = 0;
    for (uint32_t e : cfg.eps) kept += e;
    const auto expect_gap = static_cast<int64_t>(2 + (delta1 - kept));
    if (r.pair.Ca.g.degree() - r.pair.Cb.g.degree() != expect_gap)
        fail("deg g_1 - deg g_2 = " +
             std::to_string(r.pair.Ca.g.degree() - r.pair.Cb.g.degree()) + ", expected " +
             std::to_string(expect_gap));

    const auto expect_kq = static_cast<int64_t>(quarter) - 2 * static_cast<int64_t>(delta1);
    if (r.k_q != expect_kq)
        fail("k_q = " + std::to_string(r.k_q) + ", expected 2^{n-2} - 2 delta1 = " +
             std::to_string(expect_kq));
    if (r.k_q < 0) fail("k_q is negative");

    for (uint64_t i = 1; i <= quarter; ++i)
        if (!r.pair.Ca.has_root(i)) {
            fail("g_1 misses the root exponent " + std::to_string(i));
            break;
        }
    for (uint64_t i = 2; i <= quarter; ++i)
        if (!r.pair.Cb.has_root(i)) {
            fail("g_2 misses the root exponent " + std::to_string(i));
            break;
        }

    if (r.bch_d1 < quarter + 1)
        fail("BCH bound for C_a is " + std::to_string(r.bch_d1) + " < " +
             std::to_string(quarter + 1));
    if (r.bch_d2 < quarter)
        fail("BCH bound for C_b is " + std::to_string(r.bch_d2) + " < " + std::to_string(quarter));

    if (!r.sync.maximal || r.sync.order != N)
        fail("ord(f) = " + std::to_string(r.sync.order) + " is below the maximum " +
             std::to_string(N));

    return r;
}

} // namespace qsc
