#pragma once

#include "snailhom/chaincx.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace snailhom {

/// Input of the snake lemma: two three-term rows with vertical maps,
///
///     A --t1--> B --t2--> C          t2 = cokernel of t1
///     |va       |vb       |vc
///     A'--b1--> B'--b2--> C'         b1 = kernel of b2
///
/// all squares commuting.
struct SnakeInput {
    ModMap t1, t2;
    ModMap b1, b2;
    ModMap va, vb, vc;

    void validate() const
    {
        if (!maps_equal(compose(t1, vb), compose(va, b1)) ||
            !maps_equal(compose(t2, vc), compose(vb, b2)))
            throw std::invalid_argument("snake: squares do not commute");
        if (!is_regular_epi(t2) || !exactness_at(t1, t2).exact())
            throw std::invalid_argument("snake: top row is not right-exact");
        if (!is_mono(b1) || !exactness_at(b1, b2).exact())
            throw std::invalid_argument("snake: bottom row is not left-exact");
    }
};

struct SnakeResult {
    std::array<FpModule, 6> objects; // Ker va, Ker vb, Ker vc, Cok va, Cok vb, Cok vc
    std::array<ModMap, 5> maps;      // maps[2] is the connecting morphism
    bool exact = false;              // at the four middle points
};

namespace snake_detail {

/// Generator-level preimages under an epi, modulo the target
/// relations: any matrix U with U . e == t mod rels. Not itself a
/// module map; only the full zig-zag composite is one.
inline ExactMatrix preimage_matrix(const ExactMatrix& t, const ModMap& e)
{
    ExactMatrix stacked = ExactMatrix::vstack(e.matrix(), e.target().relations());
    auto sol = solve_left(stacked, t);
    if (!sol) throw std::logic_error("snake: preimage solve failed (map not epi?)");
    return sol->col_slice(0, e.matrix().rows());
}

} // namespace snake_detail

/// Connecting morphism by the zig-zag: lift a kernel element of vc
/// through t2, push through vb, pull back through b1, project to
/// Cok(va), then negate. The sign makes the comparison square with the
/// pullback-quotient connecting map commute on the nose. An optional
/// perturbation (any matrix with rows in Ker(t2), generator-level) lets
/// tests confirm independence from the choice of preimages.
inline ModMap snake_connecting(const SnakeInput& s, const ExactMatrix* perturbation = nullptr)
{
    KernelPair kc = kernel(s.vc);
    CokernelPair ca = cokernel(s.va);
    ExactMatrix u = snake_detail::preimage_matrix(kc.embed.matrix(), s.t2);
    if (perturbation) {
        if (perturbation->rows() != u.rows() || perturbation->cols() != u.cols())
            throw std::invalid_argument("snake: bad perturbation shape");
        u = u + *perturbation;
    }
    ExactMatrix w = u * s.vb.matrix();
    ExactMatrix stacked = ExactMatrix::vstack(s.b1.matrix(), s.b1.target().relations());
    auto v = solve_left(stacked, w);
    if (!v) throw std::logic_error("snake: pushed element misses the kernel row");
    ExactMatrix vv = v->col_slice(0, s.b1.matrix().rows());
    return ModMap(kc.module, ca.module, -vv); // validating ctor: well-definedness is the claim
}

inline SnakeResult snake(const SnakeInput& s)
{
    s.validate();
    KernelPair ka = kernel(s.va), kb = kernel(s.vb), kc = kernel(s.vc);
    CokernelPair ca = cokernel(s.va), cb = cokernel(s.vb), cc = cokernel(s.vc);

    ModMap k1 = lift_through_mono(compose(ka.embed, s.t1), kb.embed);
    ModMap k2 = lift_through_mono(compose(kb.embed, s.t2), kc.embed);
    ModMap conn = snake_connecting(s);
    ModMap c1 = colift_through_epi(compose(s.b1, cb.project), ca.project);
    ModMap c2 = colift_through_epi(compose(s.b2, cc.project), cb.project);

    SnakeResult r{{ka.module, kb.module, kc.module, ca.module, cb.module, cc.module},
                  {k1, k2, conn, c1, c2},
                  true};
    for (int p = 0; p < 4; ++p)
        r.exact = r.exact && exactness_at(r.maps[p], r.maps[p + 1]).exact();
    return r;
}

// ---------------------------------------------------------------------
// extensions of complexes and the classical long exact sequence
// ---------------------------------------------------------------------

struct Extension {
    Complex a, b, c;
    ChainMor f; // A -> B, level-wise kernel of g
    ChainMor g; // B -> C, level-wise cokernel of f

    void validate() const
    {
        for (int n = std::min({a.lo(), b.lo(), c.lo()}) - 1;
             n <= std::max({a.hi(), b.hi(), c.hi()}) + 1; ++n) {
            if (!is_mono(f.map(n)) || !is_regular_epi(g.map(n)) ||
                !exactness_at(f.map(n), g.map(n)).exact())
                throw std::invalid_argument("extension: rows fail at degree " + std::to_string(n));
        }
    }
};

struct ClassicalLes {
    SeqFamily fa, fb, fc;
    SeqMor ff, fg;
    std::vector<int> degrees;        // descending, aligned with snakes
    std::vector<SnakeResult> snakes;
    ChainOfModules chain;            // ... H_n(B) -> H_n(C) -> H_{n-1}(A) ...
    bool exact = false;
};

/// The textbook long homology sequence: one snake per degree on the
/// factorized rows, pasted along the connecting isomorphisms of the
/// associated families.
inline ClassicalLes classical_les(const Extension& e)
{
    e.validate();
    SeqFamily fa = functor_F(e.a), fb = functor_F(e.b), fc = functor_F(e.c);
    SeqMor ff = functor_F_on_morphism(e.f, fa, fb);
    SeqMor fg = functor_F_on_morphism(e.g, fb, fc);
    int lo = std::min({fa.lo(), fb.lo(), fc.lo()}) - 1;
    int hi = std::max({fa.hi(), fb.hi(), fc.hi()}) + 1;

    ClassicalLes out{fa, fb, fc, ff, fg, {}, {}, {}, true};
    FpModule z = FpModule::zero(e.a.ring());
    out.chain.objects.push_back(z);
    out.chain.labels.push_back("0");
    for (int n = hi; n >= lo; --n) {
        SnakeInput in{ff.comp(n).first,  fg.comp(n).first, ff.comp(n).second,
                      fg.comp(n).second, fa.level(n).map,  fb.level(n).map,
                      fc.level(n).map};
        SnakeResult sn = snake(in);
        out.exact = out.exact && sn.exact;

        // splice: Cok(h^FA_{n+1}) --i^FA_n--> Ker(h^FA_n) --K(Ff)_n--> Ker(h^FB_n)
        ModMap splice = n == hi ? ModMap::zero(z, sn.objects[1])
                                : compose(fa.connector(n), sn.maps[0]);
        out.chain.maps.push_back(splice);
        out.chain.objects.push_back(sn.objects[1]);
        out.chain.labels.push_back("H_" + std::to_string(n) + "(B)");
        out.chain.maps.push_back(sn.maps[1]);
        out.chain.objects.push_back(sn.objects[2]);
        out.chain.labels.push_back("H_" + std::to_string(n) + "(C)");
        out.chain.maps.push_back(sn.maps[2]);
        out.chain.objects.push_back(sn.objects[3]);
        out.chain.labels.push_back("H_" + std::to_string(n - 1) + "(A)");
        out.degrees.push_back(n);
        out.snakes.push_back(std::move(sn));
    }
    out.chain.maps.push_back(ModMap::zero(out.chain.objects.back(), z));
    out.chain.objects.push_back(z);
    out.chain.labels.push_back("0");
    out.exact = out.exact && out.chain.check_exact();
    return out;
}

// ---------------------------------------------------------------------
// comparison with the snail-derived sequence
// ---------------------------------------------------------------------

/// The comparison F(A) -> N(F(g)): factorization of F(f) through the
/// Theta-kernel, with the zero nullhomotopy on F(f).F(g) = 0.
inline SeqMor sigma_comparison(const SeqCat& cat, const SeqMor& ff, const SeqMor& fg,
                               const typename SeqCat::Kernel& ker)
{
    if (!cat.is_zero_mor(cat.compose(ff, fg)))
        throw std::logic_error("sigma_comparison: F(f) . F(g) is not zero");
    return cat.factor_through_kernel(ff, cat.star(ff.source(), fg.target()), ker);
}

/// Quasi-isomorphism in Seq: all induced kernel and cokernel maps are
/// isomorphisms.
inline bool seq_mor_is_quasi_iso(const SeqMor& m)
{
    int lo = std::min(m.source().lo(), m.target().lo()) - 1;
    int hi = std::max(m.source().hi(), m.target().hi()) + 1;
    for (int n = lo; n <= hi; ++n)
        if (!is_iso(m.kmap(n)) || !is_iso(m.cmap(n))) return false;
    return true;
}

/// The cokernel half on its own: C(m)_n an isomorphism for all n. For
/// the comparison sigma this is the half that identifies Cok(h^P_{n+1})
/// with H_n(A); the kernel half fails whenever a connecting map into
/// H_n(A) is nonzero, since Ker(h^P_n) is only the image of H_n(A) in
/// H_n(B).
inline bool seq_mor_cok_maps_iso(const SeqMor& m)
{
    int lo = std::min(m.source().lo(), m.target().lo()) - 1;
    int hi = std::max(m.source().hi(), m.target().hi()) + 1;
    for (int n = lo; n <= hi; ++n)
        if (!is_iso(m.cmap(n))) return false;
    return true;
}

struct SnailComparison {
    LongHomologySeq paper_side;  // via the Theta-kernel of F(g)
    ClassicalLes classical_side; // via the snake lemma
    SeqMor sigma;
    bool sigma_quasi_iso = false; // both halves: K(sigma) and C(sigma)
    bool sigma_cok_iso = false;   // the cokernel half alone
    bool degreewise_iso = false;  // commuting isomorphisms between the chains
    std::vector<std::string> failures;
};

/// The two long sequences are isomorphic as diagrams: the
/// kernel-representation entries are literally shared, and C(sigma)_n
/// carries Cok(h^FA_n) onto Cok(h^P_n) compatibly with both connecting
/// maps and both splices.
inline SnailComparison compare_with_snail(const SeqCat& cat, const Extension& e)
{
    e.validate();
    LongHomologySeq paper = long_homology_sequence(cat, e.g);
    ClassicalLes classical = classical_les(e);
    SeqMor ff = functor_F_on_morphism(e.f, classical.fa, paper.fb);
    SeqMor sigma = sigma_comparison(cat, ff, paper.fg, paper.seq.ker);

    SnailComparison out{std::move(paper), std::move(classical), sigma, false, false, true, {}};
    out.sigma_quasi_iso = seq_mor_is_quasi_iso(sigma);
    out.sigma_cok_iso = seq_mor_cok_maps_iso(sigma);
    if (!out.sigma_quasi_iso) out.failures.push_back("sigma is not a quasi-isomorphism");

    auto row_of = [&](int n) -> const SeqSixTermRow* {
        for (const auto& r : out.paper_side.seq.rows)
            if (r.degree == n) return &r;
        return nullptr;
    };
    auto snake_of = [&](int n) -> const SnakeResult* {
        for (size_t i = 0; i < out.classical_side.degrees.size(); ++i)
            if (out.classical_side.degrees[i] == n) return &out.classical_side.snakes[i];
        return nullptr;
    };

    int lo = std::min(out.paper_side.seq.rows.back().degree, out.classical_side.degrees.back());
    int hi = std::max(out.paper_side.seq.rows.front().degree, out.classical_side.degrees.front());
    for (int n = hi; n >= lo; --n) {
        const SeqSixTermRow* row = row_of(n);
        const SnakeResult* sn = snake_of(n);
        if (!row || !sn) {
            // a degree seen by only one side must be entirely zero there
            bool zero = true;
            if (row)
                for (const auto& m : row->objects) zero = zero && m.is_zero_module();
            if (sn)
                for (const auto& m : sn->objects) zero = zero && m.is_zero_module();
            if (!zero) {
                out.degreewise_iso = false;
                out.failures.push_back("window mismatch at degree " + std::to_string(n));
            }
            continue;
        }

        if (!maps_equal(row->maps[1], sn->maps[1])) {
            out.degreewise_iso = false;
            out.failures.push_back("K(F g)_" + std::to_string(n) + " disagrees");
        }
        ModMap csig = sigma.cmap(n);
        if (!is_iso(csig)) {
            out.degreewise_iso = false;
            out.failures.push_back("C(sigma)_" + std::to_string(n) + " is not an isomorphism");
            continue;
        }
        if (!maps_equal(compose(sn->maps[2], csig), row->maps[2])) {
            out.degreewise_iso = false;
            out.failures.push_back("connecting maps disagree at degree " + std::to_string(n));
        }
        const SeqSixTermRow* row_below = row_of(n - 1);
        const SnakeResult* sn_below = snake_of(n - 1);
        if (row_below && sn_below) {
            ModMap paper_splice =
                compose(out.paper_side.seq.ker.embed.cmap(n), out.paper_side.fb.connector(n - 1));
            ModMap classical_splice =
                compose(out.classical_side.fa.connector(n - 1), sn_below->maps[0]);
            if (!maps_equal(compose(csig, paper_splice), classical_splice)) {
                out.degreewise_iso = false;
                out.failures.push_back("splice squares disagree at degree " + std::to_string(n));
            }
        }
    }
    return out;
}

} // namespace snailhom
