#include "qsc/verify.hpp"

#include <array>
#include <fstream>
#include <set>

#include "qsc/construct.hpp"
#include "qsc/errors.hpp"

namespace qsc {

namespace {

// Embedded copy of data/known_discrepancies.json; a unit test keeps the two
// in sync so a packaged binary needs no data directory.
constexpr const char* kDefaultWhitelist = R"json({
  "known_discrepancies": [
    {
      "check": "table1_row2",
      "reason": "The listed generator takes both the coset of 1 and the coset of 3, which are negations of each other, and the dimension 3 is below N/2 = 4, so the code cannot contain its dual. The printed parameters themselves are correct.",
      "corrected": {
        "code": [8, 3, 4],
        "dual": [8, 5, 2],
        "contains_dual": false,
        "violating_pair": [1, 3]
      }
    },
    {
      "check": "table1_row3",
      "reason": "Closing the listed root set under multiplication by 9 forces a generator of degree 10, so the code is [16,6] with dual [16,10]; the printed distance 8 is correct for the [16,6] code. The code is also not dual-containing: the coset of 8 is self-paired and the cosets of 3 and 5 are negations of each other.",
      "corrected": {
        "code": [16, 6, 8],
        "dual": [16, 10, 4],
        "contains_dual": false,
        "self_paired": [8],
        "violating_pair": [3, 5]
      }
    },
    {
      "check": "table2_row3",
      "reason": "The inner code inherits the correction to [16,6,8]. Among the twelve whole-coset removals that leave dimension 9, dropping the cosets of 1 and 8 realizes a [16,9,6] supercode, so the advertised outer parameters are attainable over the corrected inner code.",
      "corrected": {
        "code_a": [16, 6, 8],
        "code_b": [16, 9, 6],
        "removed_cosets": [1, 8]
      }
    }
  ]
})json";

using Params = std::array<uint64_t, 3>; // N, k, d

std::string params_text(uint64_t q, const Params& p) {
    return "[" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) +
           "]_" + std::to_string(q);
}

std::string computed_text(uint64_t q, const CyclicCode& C, const DistanceResult& d) {
    std::string s = "[" + std::to_string(C.N) + "," + std::to_string(C.k) + ",";
    s += d.exact ? std::to_string(*d.exact) : (">=" + std::to_string(d.lower_bound));
    return s + "]_" + std::to_string(q);
}

bool params_match(const CyclicCode& C, const DistanceResult& d, const Params& claim) {
    return C.N == claim[0] && C.k == claim[1] && d.exact && *d.exact == claim[2];
}

std::string cert_text(const DualContainingCert& cert) {
    if (cert.contains_dual) return "dual-containing";
    std::string s = "not dual-containing (";
    bool first = true;
    for (uint64_t r : cert.self_paired) {
        if (!first) s += "; ";
        s += "C_" + std::to_string(r) + " is self-paired";
        first = false;
    }
    for (const auto& [a, b] : cert.pair_hits) {
        if (!first) s += "; ";
        s += "C_" + std::to_string(a) + " and C_" + std::to_string(b) + " are negations";
        first = false;
    }
    return s + ")";
}

std::vector<std::size_t> idxs_of(const AlgebraContext& ctx, const std::vector<uint64_t>& reps) {
    std::vector<std::size_t> out;
    out.reserve(reps.size());
    for (uint64_t s : reps) out.push_back(ctx.table().index_of(s));
    return out;
}

CheckResult table1_row(const std::string& id, uint64_t q, uint32_t n,
                       const std::vector<uint64_t>& reps, const Params& code_claim,
                       const Params& dual_claim) {
    const auto ctx = AlgebraContext::build(q, n);
    const auto C = code_from_cosets(ctx, idxs_of(ctx, reps));
    const auto cert = is_dual_containing(ctx, C);
    const auto D = dual_code(ctx, C);
    const auto dC = min_distance(ctx, C);
    const auto dD = min_distance(ctx, D);

    CheckResult r;
    r.id = id;
    r.claimed = params_text(q, code_claim) + ", dual " + params_text(q, dual_claim) +
                ", dual-containing";
    r.computed = computed_text(q, C, dC) + ", dual " + computed_text(q, D, dD) + ", " +
                 cert_text(cert);
    if (!dC.exact || !dD.exact) {
        r.status = "bound-only";
    } else if (params_match(C, dC, code_claim) && params_match(D, dD, dual_claim) &&
               cert.contains_dual) {
        r.status = "match";
    } else {
        r.status = "mismatch-flagged";
    }
    r.detail["code"] = code_json(ctx, C);
    r.detail["code_distance"] = distance_json(dC);
    r.detail["dual"] = code_json(ctx, D);
    r.detail["dual_distance"] = distance_json(dD);
    r.detail["dual_containment"] = dual_cert_json(ctx, cert);
    return r;
}

CheckResult table2_row(const std::string& id, uint64_t q, uint32_t n,
                       const std::vector<uint64_t>& reps_a, const std::vector<uint64_t>& reps_b,
                       const Params& claim_a, const Params& claim_b) {
    const auto ctx = AlgebraContext::build(q, n);
    SelectionVector sa{idxs_of(ctx, reps_a)}, sb{idxs_of(ctx, reps_b)};
    const auto pair = build_augmented_pair(ctx, sa, sb);
    const auto da = min_distance(ctx, pair.Ca);
    const auto db = min_distance(ctx, pair.Cb);

    CheckResult r;
    r.id = id;
    r.claimed = params_text(q, claim_a) + " nested in " + params_text(q, claim_b);
    r.computed = computed_text(q, pair.Ca, da) + " nested in " + computed_text(q, pair.Cb, db);
    if (!da.exact || !db.exact)
        r.status = "bound-only";
    else if (params_match(pair.Ca, da, claim_a) && params_match(pair.Cb, db, claim_b) &&
             pair.cert_a.contains_dual)
        r.status = "match";
    else
        r.status = "mismatch-flagged";
    r.detail["pair"] = pair_json(ctx, pair);
    r.detail["distance_a"] = distance_json(da);
    r.detail["distance_b"] = distance_json(db);
    return r;
}

// The third augmented row inherits the corrected [16,6,8] inner code, so the
// claimed [16,7,8] inner parameters cannot appear. The check instead looks
// for the lexicographically first whole-coset removal realizing the claimed
// outer parameters over the corrected inner code.
CheckResult table2_row3() {
    const uint64_t q = 9;
    const auto ctx = AlgebraContext::build(q, 4);
    const std::vector<uint64_t> inner_reps{1, 3, 5, 8, 10, 12, 14};
    const auto Ca = code_from_cosets(ctx, idxs_of(ctx, inner_reps));
    const auto da = min_distance(ctx, Ca);

    CheckResult r;
    r.id = "table2_row3";
    r.claimed = params_text(q, {16, 7, 8}) + " nested in " + params_text(q, {16, 9, 6});

    struct Realization {
        uint64_t odd = 0, even = 0;
        CyclicCode code;
        DistanceResult dist;
    };
    std::optional<Realization> found;
    for (uint64_t odd : {1, 3, 5}) {
        for (uint64_t even : {8, 10, 12, 14}) {
            std::vector<uint64_t> keep;
            for (uint64_t s : inner_reps)
                if (s != odd && s != even) keep.push_back(s);
            auto Cb = code_from_cosets(ctx, idxs_of(ctx, keep));
            if (Cb.k != 9 || !is_subcode(Ca, Cb)) continue;
            auto db = min_distance(ctx, Cb);
            if (db.exact && *db.exact == 6) {
                found = Realization{odd, even, std::move(Cb), std::move(db)};
                break;
            }
        }
        if (found) break;
    }

    r.computed = computed_text(q, Ca, da);
    if (found) {
        r.computed += " nested in " + computed_text(q, found->code, found->dist) +
                      " after removing C_" + std::to_string(found->odd) + " and C_" +
                      std::to_string(found->even);
    } else {
        r.computed += "; no whole-coset removal realizes the claimed outer code";
    }
    // the claimed inner dimension 7 is not attainable, so this is always a
    // flagged mismatch; the realization shows how close the construction gets
    r.status = !da.exact ? "bound-only" : "mismatch-flagged";
    r.detail["code_a"] = code_json(ctx, Ca);
    r.detail["distance_a"] = distance_json(da);
    if (found) {
        r.detail["code_b"] = code_json(ctx, found->code);
        r.detail["distance_b"] = distance_json(found->dist);
        r.detail["removed_cosets"] = ojson::array({found->odd, found->even});
        r.detail["nested"] = true;
    } else {
        r.detail["code_b"] = nullptr;
    }
    return r;
}

CheckResult example1() {
    const uint64_t q = 17;
    const auto ctx = AlgebraContext::build(q, 5);
    const auto& t = ctx.table();

    // the listing keeps the source's order and starts each coset at its label
    const std::vector<std::pair<uint64_t, std::vector<uint64_t>>> listing{
        {1, {1, 17}},  {31, {31, 15}}, {3, {3, 19}},   {29, {29, 13}},
        {9, {9, 25}},  {23, {23, 7}},  {27, {27, 11}}, {5, {5, 21}},
    };

    bool cosets_ok = true;
    std::string claimed_cosets, computed_cosets;
    for (const auto& [label, members] : listing) {
        if (!claimed_cosets.empty()) claimed_cosets += ", ";
        claimed_cosets += "C_" + std::to_string(label) + "={" + std::to_string(members[0]) + "," +
                          std::to_string(members[1]) + "}";

        // walk the orbit from the label so the rendering matches the listing
        std::vector<uint64_t> orbit{label % ctx.N()};
        for (uint64_t v = label * q % ctx.N(); v != orbit.front(); v = v * q % ctx.N())
            orbit.push_back(v);
        if (!computed_cosets.empty()) computed_cosets += ", ";
        computed_cosets += "C_" + std::to_string(label) + "={";
        for (std::size_t i = 0; i < orbit.size(); ++i)
            computed_cosets += (i ? "," : "") + std::to_string(orbit[i]);
        computed_cosets += "}";

        const auto& stored = t.cosets[t.index_of(label)];
        std::set<uint64_t> want(members.begin(), members.end());
        std::set<uint64_t> got(stored.begin(), stored.end());
        cosets_ok = cosets_ok && want == got && orbit.size() == 2;
    }

    // exactly eight odd cosets
    std::size_t odd_count = 0;
    for (const auto& c : t.cosets) odd_count += c.front() % 2;
    cosets_ok = cosets_ok && odd_count == listing.size();

    // the run bound: cosets of 1,3,5,7 plus the singletons 2,4,6,8
    const auto C = code_from_cosets(ctx, idxs_of(ctx, {1, 3, 5, 7, 2, 4, 6, 8}));
    const uint64_t bch = bch_bound(C);

    CheckResult r;
    r.id = "example1";
    r.claimed = claimed_cosets + "; code distance at least 9";
    r.computed = computed_cosets + "; BCH bound " + std::to_string(bch);
    r.status = (cosets_ok && bch >= 9) ? "match" : "mismatch-flagged";
    r.detail["cosets"] = coset_table_json(t);
    r.detail["code"] = code_json(ctx, C);
    r.detail["bch_bound"] = bch;
    return r;
}

CheckResult example2() {
    const uint64_t q = 41;
    const auto ctx = AlgebraContext::build(q, 4);
    Theorem1Config cfg;
    cfg.n = 4;
    cfg.q = q;
    cfg.extra_reps = {6};
    cfg.eps = {0};
    const auto t1 = theorem1_pair(ctx, cfg);
    const auto da = min_distance(ctx, t1.pair.Ca);
    const auto db = min_distance(ctx, t1.pair.Cb);
    const auto p = qsc_params(ctx, t1.pair, 0, 15, da, db);

    std::vector<uint64_t> f_roots;
    for (std::size_t i = 0; i < ctx.table().cosets.size(); ++i)
        if (divides(ctx.minimal_polynomial(i), t1.sync.f))
            for (uint64_t e : ctx.table().cosets[i]) f_roots.push_back(e);
    std::sort(f_roots.begin(), f_roots.end());

    const bool ok = t1.ok() && params_match(t1.pair.Ca, da, {16, 9, 6}) &&
                    params_match(t1.pair.Cb, db, {16, 12, 4}) &&
                    f_roots == std::vector<uint64_t>{1, 6, 9} && t1.sync.order == 16 &&
                    t1.sync.maximal && p.n_phys == 31 && p.k_log == 2 && p.bit_floor == 1 &&
                    p.phase_floor == 2 && p.maximal_tolerance;

    CheckResult r;
    r.id = "example2";
    r.claimed = "C_a=[16,9,6]_41 nested in C_b=[16,12,4]_41, f roots {1,6,9}, ord(f)=16, "
                "[[16+c_l+c_r,2]]_41 for c_l+c_r<16, bit floor 1, phase floor 2";
    std::string froots = "{";
    for (std::size_t i = 0; i < f_roots.size(); ++i)
        froots += (i ? "," : "") + std::to_string(f_roots[i]);
    froots += "}";
    r.computed = "C_a=" + computed_text(q, t1.pair.Ca, da) + " nested in C_b=" +
                 computed_text(q, t1.pair.Cb, db) + ", f roots " + froots + ", ord(f)=" +
                 std::to_string(t1.sync.order) + ", [[" + std::to_string(p.n_phys) + "," +
                 std::to_string(p.k_log) + "]]_41 at (c_l,c_r)=(0,15), bit floor " +
                 std::to_string(p.bit_floor) + ", phase floor " + std::to_string(p.phase_floor);
    if (!da.exact || !db.exact)
        r.status = "bound-only";
    else
        r.status = ok ? "match" : "mismatch-flagged";
    r.detail["pipeline"] = theorem1_json(ctx, t1);
    r.detail["distance_a"] = distance_json(da);
    r.detail["distance_b"] = distance_json(db);
    r.detail["qsc"] = qsc_json(p);
    return r;
}

} // namespace

Whitelist default_whitelist() { return parse_whitelist(ojson::parse(kDefaultWhitelist)); }

Whitelist parse_whitelist(const ojson& doc) {
    Whitelist wl;
    if (doc.is_null()) return wl;
    if (!doc.is_object()) throw precondition_error("a whitelist must be a JSON object");
    if (!doc.contains("known_discrepancies")) return wl;
    const auto& arr = doc.at("known_discrepancies");
    if (!arr.is_array()) throw precondition_error("known_discrepancies must be an array");
    for (const auto& e : arr) {
        if (!e.is_object() || !e.contains("check") || !e.at("check").is_string())
            throw precondition_error("every known discrepancy needs a string 'check' id");
        DiscrepancyEntry d;
        d.check_id = e.at("check").get<std::string>();
        if (e.contains("reason")) {
            if (!e.at("reason").is_string())
                throw precondition_error("discrepancy 'reason' must be a string");
            d.reason = e.at("reason").get<std::string>();
        }
        if (e.contains("corrected")) d.corrected = e.at("corrected");
        if (!wl.emplace(d.check_id, std::move(d)).second)
            throw precondition_error("duplicate whitelist entry for " + d.check_id);
    }
    return wl;
}

Whitelist load_whitelist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open whitelist file: " + path);
    ojson doc;
    try {
        doc = ojson::parse(in);
    } catch (const std::exception& ex) {
        throw precondition_error("whitelist file is not valid JSON: " + std::string(ex.what()));
    }
    return parse_whitelist(doc);
}

VerificationReport run_reference_checks(const Whitelist& wl) {
    VerificationReport rep;
    rep.checks.push_back(
        table1_row("table1_row1", 5, 3, {1, 2}, {8, 5, 3}, {8, 3, 4}));
    rep.checks.push_back(
        table1_row("table1_row2", 5, 3, {1, 3, 6}, {8, 3, 4}, {8, 5, 2}));
    rep.checks.push_back(table1_row("table1_row3", 9, 4, {1, 3, 5, 8, 10, 12, 14}, {16, 7, 8},
                                    {16, 9, 6}));
    rep.checks.push_back(table2_row("table2_row1", 5, 3, {1, 2}, {2}, {8, 5, 3}, {8, 7, 2}));
    rep.checks.push_back(table2_row("table2_row2", 5, 4, {1, 4}, {4}, {16, 11, 3}, {16, 15, 2}));
    rep.checks.push_back(table2_row3());
    rep.checks.push_back(example1());
    rep.checks.push_back(example2());

    rep.ok = true;
    for (auto& chk : rep.checks) {
        if (chk.status == "mismatch-flagged") {
            auto it = wl.find(chk.id);
            if (it != wl.end()) {
                chk.whitelisted = true;
                ojson known;
                known["reason"] = it->second.reason;
                known["corrected"] = it->second.corrected;
                chk.detail["known_discrepancy"] = std::move(known);
            }
        }
        rep.ok = rep.ok && (chk.status == "match" ||
                            (chk.status == "mismatch-flagged" && chk.whitelisted));
    }
    return rep;
}

ojson verification_report_json(const VerificationReport& rep) {
    ojson out;
    ojson checks = ojson::array();
    for (const auto& chk : rep.checks) {
        ojson c;
        c["id"] = chk.id;
        c["claimed"] = chk.claimed;
        c["computed"] = chk.computed;
        c["status"] = chk.status;
        c["whitelisted"] = chk.whitelisted;
        c["detail"] = chk.detail;
        checks.push_back(std::move(c));
    }
    out["checks"] = std::move(checks);
    out["ok"] = rep.ok;
    return out;
}

} // namespace qsc
