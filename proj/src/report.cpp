#include "qsc/report.hpp"

#include <string>

namespace qsc {

ojson meta_block(const AlgebraContext& ctx) {
    ojson m;
    m["q"] = ctx.q();
    m["n"] = ctx.n();
    m["z"] = ctx.zdec().z;
    m["c"] = ctx.zdec().c;
    return m;
}

ojson coset_table_json(const CosetTable& t) {
    ojson out;
    out["q"] = t.q;
    out["n"] = t.n;
    out["N"] = t.N;
    out["closed_form"] = t.closed_form;
    ojson list = ojson::array();
    for (std::size_t i = 0; i < t.cosets.size(); ++i) {
        ojson c;
        c["rep"] = t.rep(i);
        c["size"] = t.size(i);
        c["members"] = t.cosets[i];
        c["negation_rep"] = t.rep(t.negate(i));
        list.push_back(std::move(c));
    }
    out["cosets"] = std::move(list);
    return out;
}

ojson code_json(const AlgebraContext& ctx, const CyclicCode& C) {
    ojson out;
    out["N"] = C.N;
    out["k"] = C.k;
    out["generator"] = to_text(C.g);
    out["parity_check"] = to_text(C.h);
    std::vector<uint64_t> reps;
    reps.reserve(C.coset_idxs.size());
    for (std::size_t i : C.coset_idxs) reps.push_back(ctx.table().rep(i));
    out["coset_reps"] = std::move(reps);
    out["roots"] = C.roots;
    out["bch_bound"] = bch_bound(C);
    return out;
}

ojson dual_cert_json(const AlgebraContext&, const DualContainingCert& cert) {
    ojson out;
    out["contains_dual"] = cert.contains_dual;
    out["self_paired"] = cert.self_paired;
    ojson hits = ojson::array();
    for (const auto& [a, b] : cert.pair_hits) hits.push_back(ojson::array({a, b}));
    out["pair_hits"] = std::move(hits);
    return out;
}

ojson distance_json(const DistanceResult& d) {
    ojson out;
    if (d.exact)
        out["exact"] = *d.exact;
    else
        out["exact"] = nullptr;
    out["lower_bound"] = d.lower_bound;
    if (d.upper_bound)
        out["upper_bound"] = *d.upper_bound;
    else
        out["upper_bound"] = nullptr;
    if (d.witness) {
        ojson w = ojson::array();
        for (const auto& e : *d.witness) w.push_back(to_text(e));
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    out["rank_tests"] = d.rank_tests;
    out["budget_exhausted"] = d.budget_exhausted;
    return out;
}

ojson pair_json(const AlgebraContext& ctx, const AugmentedPair& pair) {
    ojson out;
    out["code_a"] = code_json(ctx, pair.Ca);
    out["code_b"] = code_json(ctx, pair.Cb);
    out["dual_containment_a"] = dual_cert_json(ctx, pair.cert_a);
    out["nested"] = is_subcode(pair.Ca, pair.Cb);
    return out;
}

ojson sync_json(const AlgebraContext&, const SyncCertificate& sync) {
    ojson out;
    out["f"] = to_text(sync.f);
    out["degree"] = sync.f.degree();
    out["order"] = sync.order;
    out["maximal"] = sync.maximal;
    if (sync.odd_root)
        out["odd_root"] = *sync.odd_root;
    else
        out["odd_root"] = nullptr;
    return out;
}

ojson qsc_json(const QscParams& p) {
    ojson out;
    out["n_phys"] = p.n_phys;
    out["k_log"] = p.k_log;
    out["c_l"] = p.c_l;
    out["c_r"] = p.c_r;
    out["ord_f"] = p.ord_f;
    out["max_margin"] = p.max_margin;
    out["maximal_tolerance"] = p.maximal_tolerance;
    out["d_a"] = p.d_a;
    out["d_a_exact"] = p.d_a_exact;
    out["d_b"] = p.d_b;
    out["d_b_exact"] = p.d_b_exact;
    out["bit_floor"] = p.bit_floor;
    out["phase_floor"] = p.phase_floor;
    return out;
}

ojson theorem1_json(const AlgebraContext& ctx, const Theorem1Result& r) {
    ojson out;
    out["delta1"] = r.delta1;
    out["k_q"] = r.k_q;
    out["pair"] = pair_json(ctx, r.pair);
    out["sync"] = sync_json(ctx, r.sync);
    out["bch_d1"] = r.bch_d1;
    out["bch_d2"] = r.bch_d2;
    out["ok"] = r.ok();
    out["failures"] = r.failures;
    return out;
}

ojson envelope(const AlgebraContext& ctx, ojson result, ojson certificates) {
    ojson out;
    out["meta"] = meta_block(ctx);
    out["result"] = std::move(result);
    out["certificates"] = std::move(certificates);
    return out;
}

namespace {

std::string csv_cell(const ojson& v) {
    std::string s;
    if (v.is_string())
        s = v.get<std::string>();
    else
        s = v.dump();
    bool needs_quotes = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quotes) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

} // namespace

std::string to_csv(const ojson& rows) {
    ojson list = rows.is_array() ? rows : ojson::array({rows});
    std::vector<std::string> header;
    for (const auto& row : list) {
        if (!row.is_object()) throw precondition_error("CSV output needs objects with named fields");
        for (const auto& [key, value] : row.items()) {
            (void)value;
            bool known = false;
            for (const auto& h : header) known = known || h == key;
            if (!known) header.push_back(key);
        }
    }
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += csv_cell(header[i]);
    }
    out += '\n';
    for (const auto& row : list) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out += ',';
            if (row.contains(header[i])) out += csv_cell(row.at(header[i]));
        }
        out += '\n';
    }
    return out;
}

} // namespace qsc
