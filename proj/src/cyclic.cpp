#include "qsc/cyclic.hpp"

#include <algorithm>
#include <set>

namespace qsc {

AlgebraContext AlgebraContext::build(uint64_t q, uint32_t n, uint32_t max_t) {
    AlgebraContext ctx;
    ctx.field_ = FieldSpec::of_order(q);
    ctx.zdec_ = z_decompose(q);
    ctx.n_ = n;
    ctx.table_ = cosets_closed_form(q, n);
    ctx.N_ = ctx.table_.N;

    // t = ord(q mod 2^n), by direct iteration, cross-checked against the
    // order formula applied at the top level (the largest coset size)
    const uint64_t qm = q % ctx.N_;
    uint64_t t_direct = 1;
    for (uint64_t v = qm; v != 1; v = v * qm % ctx.N_) {
        if (++t_direct > ctx.N_) throw verification_error("q is not a unit mod 2^n");
    }
    const uint64_t t_formula = n >= 1 ? coset_size_formula(ctx.zdec_.z, n) : 1;
    if (t_direct != t_formula)
        throw verification_error("multiplicative order of q disagrees with the size formula");
    if (t_direct > max_t)
        throw precondition_error("extension degree t = ord(q mod 2^n) exceeds the supported bound");

    ctx.tower_ = TowerSpec::build(ctx.field_, static_cast<uint32_t>(t_direct));
    ctx.alpha_ = primitive_nth_root(ctx.tower_, ctx.N_);

    ctx.alpha_pow_.reserve(ctx.N_);
    ctx.alpha_pow_.push_back(ctx.tower_.top()->one());
    for (uint64_t i = 1; i < ctx.N_; ++i) ctx.alpha_pow_.push_back(ctx.alpha_pow_.back() * ctx.alpha_);

    // minimal polynomial of each coset: expand in the top field, project down
    ctx.min_polys_.reserve(ctx.table_.cosets.size());
    for (const auto& coset : ctx.table_.cosets) {
        Polynomial m = Polynomial::one(ctx.tower_.top());
        for (uint64_t i : coset) m = m * Polynomial::x_minus(ctx.alpha_pow_[i]);
        std::vector<FieldElement> down;
        down.reserve(m.coeffs().size());
        for (const auto& c : m.coeffs()) {
            if (!ctx.tower_.is_in_subfield(c))
                throw verification_error("minimal polynomial coefficient escapes GF(q)");
            down.push_back(ctx.tower_.project_to_base(c));
        }
        Polynomial ms(ctx.field_, std::move(down));
        if (ms.degree() != static_cast<int64_t>(coset.size()) || !ms.is_monic())
            throw verification_error("minimal polynomial has the wrong shape");
        ctx.min_polys_.push_back(std::move(ms));
    }

    // the factors must rebuild x^N - 1 exactly
    Polynomial prod = Polynomial::one(ctx.field_);
    for (const auto& m : ctx.min_polys_) prod = prod * m;
    if (prod != ctx.xN_minus_1())
        throw verification_error("minimal polynomials do not multiply to x^N - 1");
    return ctx;
}

const Polynomial& AlgebraContext::minimal_polynomial(std::size_t coset_idx) const {
    if (coset_idx >= min_polys_.size()) throw precondition_error("coset index out of range");
    return min_polys_[coset_idx];
}

const Polynomial& AlgebraContext::minimal_polynomial_of(uint64_t s) const {
    return min_polys_[table_.index_of(s)];
}

Polynomial AlgebraContext::xN_minus_1() const {
    return Polynomial::x_pow_minus_one(field_, N_);
}

std::vector<std::pair<std::size_t, Polynomial>> factorize_xN_minus_1(const AlgebraContext& ctx) {
    std::vector<std::pair<std::size_t, Polynomial>> out;
    Polynomial prod = Polynomial::one(ctx.field());
    for (std::size_t i = 0; i < ctx.table().cosets.size(); ++i) {
        out.emplace_back(i, ctx.minimal_polynomial(i));
        prod = prod * ctx.minimal_polynomial(i);
    }
    if (prod != ctx.xN_minus_1())
        throw verification_error("factor product is not x^N - 1");
    return out;
}

bool CyclicCode::has_root(uint64_t i) const {
    return std::binary_search(roots.begin(), roots.end(), i % N);
}

namespace {

CyclicCode assemble(const AlgebraContext& ctx, std::vector<std::size_t> idxs) {
    std::sort(idxs.begin(), idxs.end());
    CyclicCode C;
    C.N = ctx.N();
    C.coset_idxs = std::move(idxs);
    Polynomial g = Polynomial::one(ctx.field());
    for (std::size_t i : C.coset_idxs) {
        g = g * ctx.minimal_polynomial(i);
        for (uint64_t m : ctx.table().cosets[i]) C.roots.push_back(m);
    }
    std::sort(C.roots.begin(), C.roots.end());
    C.g = std::move(g);
    C.h = divide_exact(ctx.xN_minus_1(), C.g); // also certifies g | x^N - 1
    C.k = C.N - static_cast<uint64_t>(C.g.degree());
    if (C.roots.size() != static_cast<std::size_t>(C.g.degree()))
        throw verification_error("root count disagrees with the generator degree");
    return C;
}

} // namespace

CyclicCode code_from_cosets(const AlgebraContext& ctx, const std::vector<std::size_t>& coset_idxs) {
    std::set<std::size_t> distinct;
    for (std::size_t i : coset_idxs) {
        if (i >= ctx.table().cosets.size()) throw precondition_error("coset index out of range");
        if (!distinct.insert(i).second) throw precondition_error("duplicate coset index");
    }
    return assemble(ctx, {distinct.begin(), distinct.end()});
}

CyclicCode code_from_generator(const AlgebraContext& ctx, const Polynomial& g) {
    if (g.is_zero() || !g.is_monic()) throw precondition_error("generator must be monic");
    if (!g.spec()->same_as(*ctx.field()))
        throw precondition_error("generator is over the wrong field");
    if (!divides(g, ctx.xN_minus_1())) throw precondition_error("generator must divide x^N - 1");
    std::vector<std::size_t> idxs;
    Polynomial prod = Polynomial::one(ctx.field());
    for (std::size_t i = 0; i < ctx.table().cosets.size(); ++i)
        if (divides(ctx.minimal_polynomial(i), g)) {
            idxs.push_back(i);
            prod = prod * ctx.minimal_polynomial(i);
        }
    if (prod != g)
        throw verification_error("divisor of x^N - 1 failed to split into minimal polynomials");
    return assemble(ctx, std::move(idxs));
}

CyclicCode dual_code(const AlgebraContext& ctx, const CyclicCode& C) {
    CyclicCode D = code_from_generator(ctx, reciprocal(C.h));
    if (D.k + C.k != C.N) throw verification_error("dual dimension mismatch");
    return D;
}

DualContainingCert is_dual_containing(const AlgebraContext& ctx, const CyclicCode& C) {
    DualContainingCert cert;

    // route (a): the dual's generator is a multiple of g
    const bool by_division = divides(C.g, reciprocal(C.h));

    // route (b): no self-paired coset, never both members of a +/- pair
    const auto& t = ctx.table();
    std::set<std::size_t> chosen(C.coset_idxs.begin(), C.coset_idxs.end());
    for (std::size_t i : C.coset_idxs) {
        if (t.self_paired(i)) {
            cert.self_paired.push_back(t.rep(i));
        } else if (chosen.count(t.negate(i)) && t.rep(i) < t.rep(t.negate(i))) {
            cert.pair_hits.emplace_back(t.rep(i), t.rep(t.negate(i)));
        }
    }
    const bool by_cosets = cert.self_paired.empty() && cert.pair_hits.empty();

    if (by_division != by_cosets)
        throw verification_error("dual-containment routes disagree");
    cert.contains_dual = by_division;
    return cert;
}

bool is_subcode(const CyclicCode& Ca, const CyclicCode& Cb) {
    if (Ca.N != Cb.N || !Ca.g.spec()->same_as(*Cb.g.spec()))
        throw precondition_error("subcode test needs codes of the same length and field");
    return divides(Cb.g, Ca.g);
}

RootRuns longest_root_runs(const CyclicCode& C) {
    RootRuns rr;
    std::vector<bool> is_root(C.N, false);
    for (uint64_t r : C.roots) is_root[r] = true;

    uint64_t run = 0;
    for (uint64_t i = 0; i < C.N; ++i) {
        run = is_root[i] ? run + 1 : 0;
        rr.linear = std::max(rr.linear, run);
    }
    if (rr.linear == C.N) {
        rr.cyclic = C.N;
        return rr;
    }
    run = 0;
    for (uint64_t i = 0; i < 2 * C.N; ++i) {
        run = is_root[i % C.N] ? run + 1 : 0;
        rr.cyclic = std::max(rr.cyclic, run);
    }
    return rr;
}

uint64_t bch_bound(const CyclicCode& C) {
    return longest_root_runs(C).cyclic + 1;
}

Matrix generator_matrix(const AlgebraContext& ctx, const CyclicCode& C) {
    Matrix G(C.k, std::vector<FieldElement>(C.N, ctx.field()->zero()));
    for (uint64_t i = 0; i < C.k; ++i)
        for (std::size_t j = 0; j < C.g.coeffs().size(); ++j) G[i][i + j] = C.g.coeffs()[j];
    return G;
}

Matrix parity_check_matrix(const AlgebraContext& ctx, const CyclicCode& C) {
    const Polynomial ht = reciprocal(C.h);
    const uint64_t rows = C.N - C.k;
    Matrix H(rows, std::vector<FieldElement>(C.N, ctx.field()->zero()));
    for (uint64_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < ht.coeffs().size(); ++j) H[i][i + j] = ht.coeffs()[j];
    return H;
}

namespace {

// rank of the submatrix of H given by `support` columns; when defective,
// fills `null_vec` (size w) with the essentially unique kernel vector
bool columns_dependent(const Matrix& H, const std::vector<uint64_t>& support,
                       std::vector<FieldElement>* null_vec) {
    const std::size_t rows = H.size();
    const std::size_t w = support.size();
    const auto& spec = H[0][0].spec();
    std::vector<std::vector<FieldElement>> A(rows, std::vector<FieldElement>(w, spec->zero()));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < w; ++c) A[r][c] = H[r][support[c]];

    std::vector<std::size_t> pivot_row_of_col(w, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < w && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && A[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(A[rank], A[piv]);
        FieldElement il = A[rank][col].inv();
        for (std::size_t j = col; j < w; ++j) A[rank][j] = A[rank][j] * il;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][col].is_zero()) continue;
            FieldElement f = A[r][col];
            for (std::size_t j = col; j < w; ++j) A[r][j] = A[r][j] - f * A[rank][j];
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }
    if (rank == w) return false;

    if (null_vec) {
        // one free column exists; set it to 1 and read the pivots
        std::size_t free_col = 0;
        while (pivot_row_of_col[free_col] != SIZE_MAX) ++free_col;
        null_vec->assign(w, spec->zero());
        (*null_vec)[free_col] = spec->one();
        for (std::size_t col = 0; col < free_col; ++col)
            if (pivot_row_of_col[col] != SIZE_MAX)
                (*null_vec)[col] = -A[pivot_row_of_col[col]][free_col];
    }
    return true;
}

} // namespace

DistanceResult min_distance(const AlgebraContext& ctx, const CyclicCode& C, uint64_t budget) {
    if (C.k == 0 || C.k == C.N)
        throw precondition_error("minimum distance needs 1 <= k <= N-1");

    DistanceResult res;
    res.lower_bound = bch_bound(C);
    const Matrix H = parity_check_matrix(ctx, C);

    for (uint64_t w = 1; w <= C.N; ++w) {
        // lexicographic w-subsets of column indices
        std::vector<uint64_t> sup(w);
        for (uint64_t i = 0; i < w; ++i) sup[i] = i;
        while (true) {
            if (res.rank_tests >= budget) {
                res.budget_exhausted = true;
                res.lower_bound = std::max(res.lower_bound, w);
                // the generator itself is always a codeword
                std::vector<FieldElement> gword(C.N, ctx.field()->zero());
                uint64_t gw = 0;
                for (std::size_t j = 0; j < C.g.coeffs().size(); ++j) {
                    gword[j] = C.g.coeffs()[j];
                    gw += !C.g.coeffs()[j].is_zero();
                }
                res.upper_bound = gw;
                res.witness = std::move(gword);
                return res;
            }
            ++res.rank_tests;
            std::vector<FieldElement> nv;
            if (columns_dependent(H, sup, &nv)) {
                res.exact = w;
                res.upper_bound = w;
                std::vector<FieldElement> word(C.N, ctx.field()->zero());
                FieldElement scale = ctx.field()->one();
                for (std::size_t c = 0; c < w; ++c)
                    if (!nv[c].is_zero()) {
                        scale = nv[c].inv();
                        break;
                    }
                for (std::size_t c = 0; c < w; ++c) word[sup[c]] = nv[c] * scale;
                res.witness = std::move(word);
                return res;
            }
            // next combination
            std::size_t i = w;
            while (i > 0 && sup[i - 1] == C.N - w + (i - 1)) --i;
            if (i == 0) break;
            ++sup[i - 1];
            for (std::size_t j = i; j < w; ++j) sup[j] = sup[j - 1] + 1;
        }
    }
    throw verification_error("no dependent columns in a code with k >= 1");
}

} // namespace qsc
