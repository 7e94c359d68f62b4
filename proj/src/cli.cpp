#include "qsc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsc/construct.hpp"
#include "qsc/errors.hpp"
#include "qsc/report.hpp"
#include "qsc/verify.hpp"

namespace qsc::cli {

namespace {

// The CLI keeps every option as text and converts late, so values coming from
// flags and from a scenario file go through identical validation.

uint64_t to_u64(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw precondition_error(what + ": '" + text + "' is not a nonnegative integer");
    }
    if (pos != text.size() || text.front() == '-')
        throw precondition_error(what + ": '" + text + "' is not a nonnegative integer");
    return v;
}

std::vector<uint64_t> to_u64_list(const std::string& csv, const std::string& what) {
    std::vector<uint64_t> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        if (item.empty()) throw precondition_error(what + ": empty entry in '" + csv + "'");
        out.push_back(to_u64(item, what));
    }
    return out;
}

// One subcommand's merged view of flags and the scenario document.
class Params {
  public:
    Params(CLI::App* sub, std::map<std::string, std::string> vals, ojson scen)
        : sub_(sub), vals_(std::move(vals)), scen_(std::move(scen)) {}

    std::optional<std::string> raw(const std::string& key) const {
        if (sub_->count("--" + key) > 0) return vals_.at(key);
        if (scen_.is_object() && scen_.contains(key)) {
            const auto& v = scen_.at(key);
            if (v.is_string()) return v.get<std::string>();
            if (v.is_number_integer()) {
                if (!v.is_number_unsigned() && v.get<int64_t>() < 0)
                    throw precondition_error("scenario key '" + key + "' must be nonnegative");
                return std::to_string(v.get<uint64_t>());
            }
            if (v.is_array()) {
                std::string csv;
                for (const auto& e : v) {
                    if (!e.is_number_integer() || (!e.is_number_unsigned() && e.get<int64_t>() < 0))
                        throw precondition_error("scenario key '" + key +
                                                 "' must hold nonnegative integers");
                    if (!csv.empty()) csv += ',';
                    csv += std::to_string(e.get<uint64_t>());
                }
                return csv;
            }
            throw precondition_error("scenario key '" + key + "' has an unsupported type");
        }
        return std::nullopt;
    }

    uint64_t need_u64(const std::string& key) const {
        auto r = raw(key);
        if (!r) throw precondition_error("missing --" + key + " (flag or scenario)");
        return to_u64(*r, "--" + key);
    }

    uint64_t u64_or(const std::string& key, uint64_t fallback) const {
        auto r = raw(key);
        return r ? to_u64(*r, "--" + key) : fallback;
    }

    std::optional<uint64_t> opt_u64(const std::string& key) const {
        auto r = raw(key);
        if (!r) return std::nullopt;
        return to_u64(*r, "--" + key);
    }

    std::vector<uint64_t> list(const std::string& key) const {
        auto r = raw(key);
        return r ? to_u64_list(*r, "--" + key) : std::vector<uint64_t>{};
    }

    std::optional<std::string> str(const std::string& key) const { return raw(key); }

  private:
    CLI::App* sub_;
    std::map<std::string, std::string> vals_;
    ojson scen_;
};

ojson meta_of(uint64_t q, uint32_t n) {
    const auto zd = z_decompose(q);
    ojson m;
    m["q"] = q;
    m["n"] = n;
    m["z"] = zd.z;
    m["c"] = zd.c;
    return m;
}

ojson wrap(ojson meta, ojson result, ojson certificates) {
    ojson out;
    out["meta"] = std::move(meta);
    out["result"] = std::move(result);
    out["certificates"] = std::move(certificates);
    return out;
}

struct Output {
    ojson envelope;
    ojson rows; // flat objects for CSV rendering
    int exit_code = 0;
};

uint32_t need_n(const Params& P) {
    const uint64_t n = P.need_u64("n");
    if (n < 1 || n > 20)
        throw precondition_error("--n must lie in [1, 20]; lengths beyond 2^20 are unsupported");
    return static_cast<uint32_t>(n);
}

std::vector<std::size_t> select_idxs(const AlgebraContext& ctx, const std::vector<uint64_t>& reps) {
    std::vector<std::size_t> out;
    out.reserve(reps.size());
    for (uint64_t s : reps) out.push_back(ctx.table().index_of(s));
    return out;
}

ojson code_row(const CyclicCode& C, const char* role) {
    ojson r;
    if (role) r["role"] = role;
    r["N"] = C.N;
    r["k"] = C.k;
    r["degree"] = C.g.degree();
    r["bch_bound"] = bch_bound(C);
    r["generator"] = to_text(C.g);
    return r;
}

// ---------------------------------------------------------------- cosets

Output run_cosets(const Params& P) {
    const uint64_t q = P.need_u64("q");
    const uint32_t n = need_n(P);
    const auto table = cosets_closed_form(q, n);
    const auto brute = cosets_bruteforce(q, n);
    if (table.cosets != brute.cosets || table.pairing != brute.pairing)
        throw verification_error("closed-form cosets disagree with orbit enumeration");

    ojson certs = ojson::array();
    certs.push_back(ojson{{"kind", "orbit-crosscheck"}, {"agrees", true}});

    Output o;
    o.envelope = wrap(meta_of(q, n), coset_table_json(table), std::move(certs));
    o.rows = ojson::array();
    for (std::size_t i = 0; i < table.cosets.size(); ++i) {
        ojson r;
        r["rep"] = table.rep(i);
        r["size"] = table.size(i);
        r["members"] = ojson(table.cosets[i]).dump();
        r["negation_rep"] = table.rep(table.negate(i));
        o.rows.push_back(std::move(r));
    }
    return o;
}

// ---------------------------------------------------------------- factor

Output run_factor(const Params& P) {
    const uint64_t q = P.need_u64("q");
    const uint32_t n = need_n(P);
    const auto ctx = AlgebraContext::build(q, n);
    const auto factors = factorize_xN_minus_1(ctx);

    Polynomial prod = Polynomial::one(ctx.field());
    for (const auto& [idx, f] : factors) prod = prod * f;
    if (prod != ctx.xN_minus_1())
        throw verification_error("factor product does not reproduce x^N - 1");

    ojson list = ojson::array();
    ojson rows = ojson::array();
    for (const auto& [idx, f] : factors) {
        ojson e;
        e["coset_rep"] = ctx.table().rep(idx);
        e["degree"] = f.degree();
        e["poly"] = to_text(f);
        rows.push_back(e);
        list.push_back(std::move(e));
    }
    ojson result;
    result["N"] = ctx.N();
    result["extension_degree"] = ctx.tower().t();
    result["factors"] = std::move(list);

    ojson certs = ojson::array();
    certs.push_back(ojson{{"kind", "product-check"}, {"equals", "x^N - 1"}, {"ok", true}});

    Output o;
    o.envelope = wrap(meta_of(q, n), std::move(result), std::move(certs));
    o.rows = std::move(rows);
    return o;
}

// ---------------------------------------------------------------- code / dual / mindist

Output run_code(const Params& P) {
    const uint64_t q = P.need_u64("q");
    const uint32_t n = need_n(P);
    const auto ctx = AlgebraContext::build(q, n);
    const auto C = code_from_cosets(ctx, select_idxs(ctx, P.list("select")));

    ojson certs = ojson::array();
    certs.push_back(ojson{{"kind", "generator-divides-x^N-1"}, {"ok", true}});

    Output o;
    o.envelope = wrap(meta_of(q, n), code_json(ctx, C), std::move(certs));
    o.rows = ojson::array({code_row(C, nullptr)});
    return o;
}

Output run_dual(const Params& P) {
    const uint64_t q = P.need_u64("q");
    const uint32_t n = need_n(P);
    const auto ctx = AlgebraContext::build(q, n);
    const auto C = code_from_cosets(ctx, select_idxs(ctx, P.list("select")));
    const auto D = dual_code(ctx, C);
    const auto cert = is_dual_containing(ctx, C);

    ojson result;
    result["code"] = code_json(ctx, C);
    result["dual"] = code_json(ctx, D);
    result["dual_containment"] = dual_cert_json(ctx, cert);

    ojson certs = ojson::array();
    certs.push_back(ojson{{"kind", "dimension-sum"}, {"ok", C.k + D.k == ctx.N()}});
    certs.push_back(ojson{{"kind", "dual-containment"}, {"contains_dual", cert.contains_dual}});

    Output o;
    o.envelope = wrap(meta_of(q, n), std::move(result), std::move(certs));
    o.rows = ojson::array({code_row(C, "code"), code_row(D, "dual")});
    return o;
}

Output run_mindist(const Params& P) {
    const uint64_t q = P.need_u64("q");
    const uint32_t n = need_n(P);
    const uint64_t budget = P.u64_or("budget", 10'000'000);
    const auto ctx = AlgebraContext::build(q, n);
    const auto C = code_from_cosets(ctx, select_idxs(ctx, P.list("select")));
    const auto d = min_distance(ctx, C, budget);

    ojson result;
    result["code"] = code_json(ctx, C);
    result["distance"] = distance_json(d);

    ojson certs = ojson::array();
    certs.push_back(ojson{{"kind", "support-enumeration"},
                          {"rank_tests", d.rank_tests},
                          {"budget", budget},
                          {"exhausted", d.budget_exhausted}});

    Output o;
    o.envelope = wrap(meta_of(q, n), std::move(result), std::move(certs));
    ojson row = code_row(C, nullptr);
    row["exact"] = d.exact ? ojson(*d.exact) : ojson(nullptr);
    row["lower_bound"] = d.lower_bound;
    row["upper_bound"] = d.upper_bound ? ojson(*d.upper_bound) : ojson(nullptr);
    row["rank_tests"] = d.rank_tests;
    row["budget_exhausted"] = d.budget_exhausted;
    o.rows = ojson::array({std::move(row)});
    return o;
}

// ---------------------------------------------------------------- augment

Output run_augment(const Params& P) {
    const uint64_t q = P.need_u64("q");
    const uint32_t n = need_n(P);
    const auto ctx = AlgebraContext::build(q, n);
    SelectionVector sel_a{select_idxs(ctx, P.list("select"))};
    SelectionVector sel_b{select_idxs(ctx, P.list("select-b"))};
    const auto pair = build_augmented_pair(ctx, sel_a, sel_b);
    const auto sync = sync_certificate(ctx, pair);

    ojson result;
    result["pair"] = pair_json(ctx, pair);
    result["sync"] = sync_json(ctx, sync);

    ojson certs = ojson::array();
    certs.push_back(ojson{{"kind", "dual-containment-a"},
                          {"contains_dual", pair.cert_a.contains_dual}});
    certs.push_back(ojson{{"kind", "nesting"}, {"ok", is_subcode(pair.Ca, pair.Cb)}});
    certs.push_back(ojson{{"kind", "order-crosscheck"},
                          {"order", sync.order},
                          {"odd_root", sync.odd_root ? ojson(*sync.odd_root) : ojson(nullptr)}});

    Output o;
    o.envelope = wrap(meta_of(q, n), std::move(result), std::move(certs));
    ojson frow;
    frow["role"] = "f";
    frow["N"] = ctx.N();
    frow["degree"] = sync.f.degree();
    frow["generator"] = to_text(sync.f);
    frow["order"] = sync.order;
    frow["maximal"] = sync.maximal;
    o.rows = ojson::array({code_row(pair.Ca, "code_a"), code_row(pair.Cb, "code_b"), std::move(frow)});
    return o;
}

// ---------------------------------------------------------------- qsc

Output run_qsc(const Params& P) {
    const uint64_t q = P.need_u64("q");
    const uint32_t n = need_n(P);
    const uint64_t budget = P.u64_or("budget", 10'000'000);

    Theorem1Config cfg;
    cfg.n = n;
    cfg.q = q;
    cfg.extra_reps = P.list("extra");
    const auto eps_raw = P.list("eps");
    for (uint64_t e : eps_raw) {
        if (e > 1) throw precondition_error("--eps entries must be 0 or 1");
        cfg.eps.push_back(static_cast<uint32_t>(e));
    }
    if (cfg.eps.empty()) cfg.eps.assign(cfg.extra_reps.size(), 0);
    if (const auto d1 = P.opt_u64("delta1"); d1 && *d1 != cfg.extra_reps.size())
        throw precondition_error("--delta1 = " + std::to_string(*d1) + " disagrees with the " +
                                 std::to_string(cfg.extra_reps.size()) + " extra cosets listed");

    const uint64_t cl = P.u64_or("cl", 0);
    const uint64_t cr = P.u64_or("cr", 0);

    const auto ctx = AlgebraContext::build(q, n);
    const auto r = theorem1_pair(ctx, cfg);
    const auto da = min_distance(ctx, r.pair.Ca, budget);
    const auto db = min_distance(ctx, r.pair.Cb, budget);
    const auto p = qsc_params(ctx, r.pair, cl, cr, da, db);

    ojson result;
    result["pipeline"] = theorem1_json(ctx, r);
    result["distance_a"] = distance_json(da);
    result["distance_b"] = distance_json(db);
    result["qsc"] = qsc_json(p);

    ojson certs = ojson::array();
    certs.push_back(ojson{{"kind", "pipeline-checks"}, {"ok", r.ok()}, {"failures", r.failures}});
    certs.push_back(ojson{{"kind", "order-crosscheck"},
                          {"order", r.sync.order},
                          {"odd_root", r.sync.odd_root ? ojson(*r.sync.odd_root) : ojson(nullptr)}});

    Output o;
    o.envelope = wrap(meta_of(q, n), std::move(result), std::move(certs));
    ojson row;
    row["q"] = q;
    row["n"] = n;
    row["delta1"] = r.delta1;
    row["extra"] = ojson(cfg.extra_reps).dump();
    row["eps"] = ojson(cfg.eps).dump();
    row["k1"] = r.pair.Ca.k;
    row["k2"] = r.pair.Cb.k;
    row["k_q"] = r.k_q;
    row["d_a"] = p.d_a;
    row["d_a_exact"] = p.d_a_exact;
    row["d_b"] = p.d_b;
    row["d_b_exact"] = p.d_b_exact;
    row["ord_f"] = p.ord_f;
    row["maximal_tolerance"] = p.maximal_tolerance;
    row["n_phys"] = p.n_phys;
    row["k_log"] = p.k_log;
    row["bit_floor"] = p.bit_floor;
    row["phase_floor"] = p.phase_floor;
    row["ok"] = r.ok();
    o.rows = ojson::array({std::move(row)});
    o.exit_code = r.ok() ? 0 : 2;
    return o;
}

// ---------------------------------------------------------------- verify-paper

Output run_verify(const Params& P) {
    const auto wl_path = P.str("whitelist");
    const Whitelist wl = wl_path ? load_whitelist(*wl_path) : default_whitelist();
    const auto rep = run_reference_checks(wl);

    Output o;
    o.envelope = wrap(nullptr, verification_report_json(rep), ojson::array());
    o.rows = ojson::array();
    for (const auto& chk : rep.checks) {
        ojson r;
        r["id"] = chk.id;
        r["claimed"] = chk.claimed;
        r["computed"] = chk.computed;
        r["status"] = chk.status;
        r["whitelisted"] = chk.whitelisted;
        o.rows.push_back(std::move(r));
    }
    o.exit_code = rep.ok ? 0 : 2;
    return o;
}

// ---------------------------------------------------------------- sweep

// lexicographic size-k combinations of `pool`, reported through `emit`
void combinations(const std::vector<uint64_t>& pool, std::size_t k,
                  const std::function<void(const std::vector<uint64_t>&)>& emit) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    if (k > pool.size()) return;
    std::vector<uint64_t> combo(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) combo[i] = pool[pick[i]];
        emit(combo);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (pick[i] + (k - i) < pool.size()) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

Output run_sweep(const Params& P) {
    // a provided-but-empty axis is a legal empty grid; a missing one is not
    const auto qraw = P.str("q");
    const auto nraw = P.str("n");
    if (!qraw) throw precondition_error("missing --q (flag or scenario)");
    if (!nraw) throw precondition_error("missing --n (flag or scenario)");
    const auto qs = to_u64_list(*qraw, "--q");
    const auto ns = to_u64_list(*nraw, "--n");
    const uint64_t d1max = P.u64_or("delta1", 2);

    ojson rows = ojson::array();
    uint64_t points = 0, configs = 0, maximal = 0, errors = 0, not_ok = 0;

    for (uint64_t q : qs) {
        for (uint64_t n64 : ns) {
            ++points;
            ojson base;
            base["q"] = q;
            base["n"] = n64;
            try {
                if (n64 < 3 || n64 > 20)
                    throw precondition_error("n must lie in [3, 20] for the z = n-1 family");
                const auto n = static_cast<uint32_t>(n64);
                const auto zd = z_decompose(q);
                if (zd.z != n - 1)
                    throw precondition_error("q = " + std::to_string(q) + " has z = " +
                                             std::to_string(zd.z) + ", but the family needs z = n-1 = " +
                                             std::to_string(n - 1));
                const auto ctx = AlgebraContext::build(q, n);
                const auto eligible = theorem1_eligible_extras(ctx);
                const uint64_t quarter = ctx.N() / 4;
                const uint64_t d1cap = std::min<uint64_t>(d1max, quarter >= 2 ? quarter - 2 : 0);

                for (uint64_t d1 = 0; d1 <= d1cap; ++d1) {
                    uint64_t at_this_d1 = 0;
                    combinations(eligible, d1, [&](const std::vector<uint64_t>& combo) {
                        // skip subsets violating the +/- pair rule
                        std::set<std::size_t> idxs;
                        for (uint64_t s : combo) idxs.insert(ctx.table().index_of(s));
                        for (std::size_t idx : idxs)
                            if (idxs.count(ctx.table().negate(idx)) && ctx.table().negate(idx) != idx)
                                return;

                        const uint64_t masks = d1 > 12 ? 0 : (uint64_t{1} << d1);
                        for (uint64_t mask = 0; mask < masks; ++mask) {
                            Theorem1Config cfg;
                            cfg.n = n;
                            cfg.q = q;
                            cfg.extra_reps = combo;
                            for (std::size_t i = 0; i < d1; ++i)
                                cfg.eps.push_back((mask >> (d1 - 1 - i)) & 1 ? 1 : 0);
                            const auto r = theorem1_pair(ctx, cfg);
                            ojson row = base;
                            row["delta1"] = d1;
                            row["extra"] = ojson(cfg.extra_reps).dump();
                            row["eps"] = ojson(cfg.eps).dump();
                            row["k1"] = r.pair.Ca.k;
                            row["k2"] = r.pair.Cb.k;
                            row["k_q"] = r.k_q;
                            row["bch_d1"] = r.bch_d1;
                            row["bch_d2"] = r.bch_d2;
                            row["ord_f"] = r.sync.order;
                            row["maximal_tolerance"] = r.sync.maximal;
                            row["ok"] = r.ok();
                            if (!r.ok()) {
                                row["failures"] = ojson(r.failures).dump();
                                ++not_ok;
                            }
                            rows.push_back(std::move(row));
                            ++configs;
                            ++at_this_d1;
                            if (r.sync.maximal) ++maximal;
                        }
                    });
                    if (at_this_d1 == 0) {
                        // a delta1 within the bound can admit no valid selection;
                        // report it instead of skipping silently
                        ojson row = base;
                        row["delta1"] = d1;
                        row["note"] = "no valid selection within the bound";
                        rows.push_back(std::move(row));
                    }
                }
            } catch (const precondition_error& ex) {
                ojson row = base;
                row["error"] = ex.what();
                rows.push_back(std::move(row));
                ++errors;
            }
        }
    }

    ojson summary;
    summary["grid_points"] = points;
    summary["configs"] = configs;
    summary["maximal_tolerance"] = maximal;
    summary["verification_failures"] = not_ok;
    summary["invalid_points"] = errors;

    ojson result;
    result["configs"] = rows;
    result["summary"] = std::move(summary);

    Output o;
    o.envelope = wrap(nullptr, std::move(result), ojson::array());
    o.rows = std::move(rows);
    return o;
}

// ---------------------------------------------------------------- driver

void emit_error(std::ostream& err, int code, const std::string& message) {
    ojson e;
    e["error"] = ojson{{"exit_code", code}, {"message", message}};
    err << e.dump(2) << "\n";
}

struct SubSpec {
    CLI::App* app = nullptr;
    std::vector<std::string> keys; // scenario keys the subcommand accepts
    Output (*fn)(const Params&) = nullptr;
};

int run_impl(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact constructor and verifier for synchronizable cyclic-code pairs "
                 "of length 2^n over GF(q)"};
    app.require_subcommand(1);

    std::map<const CLI::App*, std::map<std::string, std::string>> store;
    std::vector<SubSpec> specs;

    const auto add_sub = [&](const std::string& name, const std::string& desc,
                             std::vector<std::string> keys, Output (*fn)(const Params&)) {
        CLI::App* sub = app.add_subcommand(name, desc);
        auto& vals = store[sub];
        for (const auto& key : keys) {
            static const std::map<std::string, std::string> help{
                {"q", "field size, a power of an odd prime with q = 1 (mod 4)"},
                {"n", "length exponent; the code length is N = 2^n"},
                {"select", "coset representatives whose minimal polynomials form g (csv)"},
                {"select-b", "coset representatives for the larger code (csv)"},
                {"extra", "representatives of the extra even cosets (csv)"},
                {"eps", "0/1 keep flags, one per extra coset (csv)"},
                {"delta1", "number of extra cosets (must match --extra)"},
                {"cl", "left margin"},
                {"cr", "right margin"},
                {"budget", "rank-test budget for distance enumeration"},
                {"whitelist", "path to a known-discrepancy whitelist JSON"},
            };
            const auto it = help.find(key);
            sub->add_option("--" + key, vals[key], it == help.end() ? "" : it->second);
        }
        sub->add_option("--scenario", vals["scenario"], "JSON file mirroring the flags");
        sub->add_option("--out", vals["out"], "write the report here instead of stdout");
        sub->add_option("--format", vals["format"], "json (default) or csv");
        keys.insert(keys.end(), {"out", "format"});
        specs.push_back(SubSpec{sub, std::move(keys), fn});
    };

    add_sub("cosets", "partition Z_{2^n} into q-cyclotomic cosets, with orbit cross-check",
            {"q", "n"}, &run_cosets);
    add_sub("factor", "factor x^N - 1 into minimal polynomials over GF(q)", {"q", "n"},
            &run_factor);
    add_sub("code", "build the cyclic code generated by selected cosets", {"q", "n", "select"},
            &run_code);
    add_sub("dual", "build a code and its dual, with containment certificate",
            {"q", "n", "select"}, &run_dual);
    add_sub("mindist", "exact minimum distance by support enumeration",
            {"q", "n", "select", "budget"}, &run_mindist);
    add_sub("augment", "build a nested pair C_a inside C_b from two selections",
            {"q", "n", "select", "select-b"}, &run_augment);
    add_sub("qsc", "full synchronizable-code pipeline for the z = n-1 family",
            {"q", "n", "delta1", "extra", "eps", "cl", "cr", "budget"}, &run_qsc);
    add_sub("verify-paper", "recompute the bundled reference claims and compare",
            {"whitelist"}, &run_verify);
    add_sub("sweep", "enumerate and verify every admissible configuration on a grid",
            {"q", "n", "delta1"}, &run_sweep);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed); // CLI11's vector overload expects reversed argv
    } catch (const CLI::CallForHelp&) {
        for (const auto& spec : specs)
            if (spec.app->count("--help") > 0) {
                out << spec.app->help();
                return 0;
            }
        out << app.help();
        return 0;
    }

    for (const auto& spec : specs) {
        if (!spec.app->parsed()) continue;

        ojson scen;
        if (spec.app->count("--scenario") > 0) {
            const std::string path = store[spec.app]["scenario"];
            std::ifstream in(path);
            if (!in) throw precondition_error("cannot open scenario file: " + path);
            try {
                scen = ojson::parse(in);
            } catch (const std::exception& ex) {
                throw precondition_error("scenario file is not valid JSON: " +
                                         std::string(ex.what()));
            }
            if (!scen.is_object()) throw precondition_error("a scenario must be a JSON object");
            for (const auto& [key, value] : scen.items()) {
                (void)value;
                if (key == "command") {
                    if (!scen.at("command").is_string() ||
                        scen.at("command").get<std::string>() != spec.app->get_name())
                        throw precondition_error("scenario is for command '" +
                                                 scen.at("command").dump() + "', not '" +
                                                 spec.app->get_name() + "'");
                    continue;
                }
                if (std::find(spec.keys.begin(), spec.keys.end(), key) == spec.keys.end())
                    throw precondition_error("scenario key '" + key + "' is not accepted by '" +
                                             spec.app->get_name() + "'");
            }
        }

        Params P(spec.app, store[spec.app], std::move(scen));

        const std::string format = P.str("format").value_or("json");
        if (format != "json" && format != "csv")
            throw precondition_error("--format must be json or csv");

        const Output o = spec.fn(P);
        const std::string text =
            format == "json" ? o.envelope.dump(2) + "\n" : to_csv(o.rows);

        if (const auto path = P.str("out")) {
            std::ofstream f(*path);
            if (!f) throw precondition_error("cannot open output file: " + *path);
            f << text;
        } else {
            out << text;
        }
        return o.exit_code;
    }
    throw precondition_error("no subcommand given");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out);
    } catch (const CLI::ParseError& ex) {
        emit_error(err, 1, std::string("argument error: ") + ex.what());
        return 1;
    } catch (const precondition_error& ex) {
        emit_error(err, 1, ex.what());
        return 1;
    } catch (const verification_error& ex) {
        emit_error(err, 2, ex.what());
        return 2;
    } catch (const std::exception& ex) {
        emit_error(err, 1, ex.what());
        return 1;
    }
}

} // namespace qsc::cli
