#pragma once

#include "snailhom/smith.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snailhom {

/// Finitely presented module over the ring: the cokernel of the
/// relations matrix acting on R^gens. The zero module has gens = 0.
/// Presentations are never normalized behind the caller's back;
/// "sameness" across differently presented modules is always mediated
/// by explicit isomorphisms.
class FpModule {
public:
    FpModule(Ring ring, int gens, ExactMatrix relations)
        : ring_(ring), gens_(gens), rels_(std::move(relations))
    {
        if (rels_.cols() != gens_)
            throw std::invalid_argument("relations column count must equal generator count");
        if (rels_.ring() != ring_)
            throw std::invalid_argument("relations ring mismatch");
        solver_ = std::make_shared<SmithSolver>(rels_);
    }

    FpModule(Ring ring, int gens) // free module
        : FpModule(ring, gens, ExactMatrix(ring, 0, gens))
    {
    }

    static FpModule zero(Ring ring) { return FpModule(ring, 0); }

    const Ring& ring() const { return ring_; }
    int gens() const { return gens_; }
    const ExactMatrix& relations() const { return rels_; }
    const SmithSolver& rel_solver() const { return *solver_; }

    /// Element v of R^gens represents 0 in the module.
    bool element_is_zero(const ExactMatrix& v) const
    {
        return solver_->solve(v).has_value();
    }

    int free_rank() const { return gens_ - solver_->rank(); }

    /// Nonzero non-unit diagonal entries of the Smith form of the
    /// relations, in divisibility order. Empty over fields.
    std::vector<Rat> invariant_factors() const
    {
        std::vector<Rat> out;
        const auto& d = solver_->decomposition().D;
        for (int t = 0; t < solver_->rank(); ++t)
            if (!ring_.is_unit(d.at(t, t))) out.push_back(d.at(t, t));
        return out;
    }

    bool is_zero_module() const { return free_rank() == 0 && invariant_factors().empty(); }

    bool same_presentation(const FpModule& o) const
    {
        return ring_ == o.ring_ && gens_ == o.gens_ && rels_ == o.rels_;
    }

    std::string describe() const
    {
        std::vector<std::string> parts;
        for (const auto& d : invariant_factors())
            parts.push_back(ring_.name() + "/" + ring_.to_string(d));
        int f = free_rank();
        if (f == 1) parts.push_back(ring_.name());
        else if (f > 1) parts.push_back(ring_.name() + "^" + std::to_string(f));
        if (parts.empty()) return "0";
        std::string s = parts[0];
        for (size_t i = 1; i < parts.size(); ++i) s += " (+) " + parts[i];
        return s;
    }

private:
    Ring ring_;
    int gens_;
    ExactMatrix rels_;
    std::shared_ptr<const SmithSolver> solver_;
};

/// Morphism of finitely presented modules given by a gens(src) x
/// gens(dst) matrix acting on row vectors: generator i of the source
/// goes to row i. Composition f.then(g) is the matrix product.
class ModMap {
public:
    ModMap(FpModule src, FpModule dst, ExactMatrix mat)
        : src_(std::move(src)), dst_(std::move(dst)), mat_(std::move(mat))
    {
        check_shape();
        if (!well_defined())
            throw std::invalid_argument("map does not respect relations");
    }

    /// For composites and universal factorizations whose validity is
    /// forced; skips the solve in the validating constructor.
    static ModMap unchecked(FpModule src, FpModule dst, ExactMatrix mat)
    {
        ModMap m(Unchecked{}, std::move(src), std::move(dst), std::move(mat));
        m.check_shape();
        return m;
    }

    static ModMap identity(const FpModule& m)
    {
        return unchecked(m, m, ExactMatrix::identity(m.ring(), m.gens()));
    }

    static ModMap zero(const FpModule& src, const FpModule& dst)
    {
        return unchecked(src, dst, ExactMatrix(src.ring(), src.gens(), dst.gens()));
    }

    const FpModule& source() const { return src_; }
    const FpModule& target() const { return dst_; }
    const ExactMatrix& matrix() const { return mat_; }
    const Ring& ring() const { return src_.ring(); }

    bool well_defined() const
    {
        return dst_.rel_solver().solve(src_.relations() * mat_).has_value();
    }

    bool is_zero_map() const
    {
        return dst_.rel_solver().solve(mat_).has_value();
    }

private:
    struct Unchecked {};
    ModMap(Unchecked, FpModule src, FpModule dst, ExactMatrix mat)
        : src_(std::move(src)), dst_(std::move(dst)), mat_(std::move(mat))
    {
    }

    void check_shape() const
    {
        if (mat_.rows() != src_.gens() || mat_.cols() != dst_.gens())
            throw std::invalid_argument("morphism matrix shape mismatch");
        if (src_.ring() != dst_.ring() || mat_.ring() != src_.ring())
            throw std::invalid_argument("morphism ring mismatch");
    }

    FpModule src_, dst_;
    ExactMatrix mat_;
};

inline ModMap compose(const ModMap& f, const ModMap& g)
{
    if (!f.target().same_presentation(g.source()))
        throw std::invalid_argument("compose: middle objects differ");
    return ModMap::unchecked(f.source(), g.target(), f.matrix() * g.matrix());
}

/// Equality of morphisms: every row of the difference lies in the row
/// span of the target relations.
inline bool maps_equal(const ModMap& f, const ModMap& g)
{
    if (!f.source().same_presentation(g.source()) || !f.target().same_presentation(g.target()))
        throw std::invalid_argument("maps_equal: boundary mismatch");
    return f.target().rel_solver().solve(f.matrix() - g.matrix()).has_value();
}

inline bool is_zero_arrow(const ModMap& f) { return f.is_zero_map(); }

// ---------------------------------------------------------------------
// kernels, cokernels, pullbacks
// ---------------------------------------------------------------------

struct KernelPair {
    FpModule module;
    ModMap embed; // mono into the source of the defining map
};

struct CokernelPair {
    FpModule module;
    ModMap project; // regular epi from the target of the defining map
};

/// Kernel as the syzygy module of the stacked matrix [matrix; target
/// relations]; the embedding matrix is the projection of the syzygy
/// basis onto the source generators.
inline KernelPair kernel(const ModMap& f)
{
    const Ring& ring = f.ring();
    const int gs = f.source().gens();
    ExactMatrix stacked = ExactMatrix::vstack(f.matrix(), f.target().relations());
    ExactMatrix syz = left_kernel(stacked);
    ExactMatrix embed = syz.col_slice(0, gs);

    ExactMatrix stacked2 = ExactMatrix::vstack(embed, f.source().relations());
    ExactMatrix rels = left_kernel(stacked2).col_slice(0, embed.rows());
    FpModule k(ring, embed.rows(), rels);
    return KernelPair{k, ModMap::unchecked(k, f.source(), embed)};
}

/// Cokernel keeps the target generators and adds the image rows as
/// relations; the projection is the identity matrix.
inline CokernelPair cokernel(const ModMap& f)
{
    FpModule c(f.ring(), f.target().gens(),
               ExactMatrix::vstack(f.target().relations(), f.matrix()));
    return CokernelPair{c, ModMap::unchecked(f.target(), c,
                                             ExactMatrix::identity(f.ring(), f.target().gens()))};
}

inline bool is_mono(const ModMap& f) { return kernel(f).module.is_zero_module(); }
inline bool is_regular_epi(const ModMap& f) { return cokernel(f).module.is_zero_module(); }
inline bool is_iso(const ModMap& f) { return is_mono(f) && is_regular_epi(f); }

// ---------------------------------------------------------------------
// lifts and colifts
// ---------------------------------------------------------------------

/// Unique u with u . k = t, for k mono; nullopt when t does not land in
/// the image of k.
inline std::optional<ModMap> try_lift_through_mono(const ModMap& t, const ModMap& k)
{
    if (!t.target().same_presentation(k.target()))
        throw std::invalid_argument("lift: targets differ");
    ExactMatrix stacked = ExactMatrix::vstack(k.matrix(), k.target().relations());
    auto sol = solve_left(stacked, t.matrix());
    if (!sol) return std::nullopt;
    ExactMatrix x = sol->col_slice(0, k.source().gens());
    // when k is mono the factorization automatically respects relations
    return ModMap(t.source(), k.source(), x);
}

inline ModMap lift_through_mono(const ModMap& t, const ModMap& k)
{
    auto u = try_lift_through_mono(t, k);
    if (!u) throw std::runtime_error("no lift through mono");
    return *u;
}

/// Solve A . X = B modulo the row span of rels, where A maps into the
/// X-side on the left. Vectorized via vec(A X) = vec(X) (A^T kron I).
inline std::optional<ExactMatrix> solve_mod(const ExactMatrix& a, const ExactMatrix& b,
                                            const ExactMatrix& rels)
{
    const Ring& ring = a.ring();
    const int r = a.rows(), p = a.cols(), q = b.cols();
    if (b.rows() != r || rels.cols() != q)
        throw std::invalid_argument("solve_mod shape mismatch");
    ExactMatrix big = ExactMatrix::vstack(
        ExactMatrix::kron(a.transposed(), ExactMatrix::identity(ring, q)),
        ExactMatrix::kron(ExactMatrix::identity(ring, r), rels));
    auto sol = solve_left(big, b.vec_row());
    if (!sol) return std::nullopt;
    return ExactMatrix::unvec_row(sol->col_slice(0, p * q), p, q);
}

/// Unique u with c . u = t, for c regular epi and t vanishing on the
/// kernel of c; nullopt otherwise.
inline std::optional<ModMap> try_colift_through_epi(const ModMap& t, const ModMap& c)
{
    if (!t.source().same_presentation(c.source()))
        throw std::invalid_argument("colift: sources differ");
    // conditions: c.mat X == t.mat and rel_C X == 0, both mod target rels
    ExactMatrix a = ExactMatrix::vstack(c.matrix(), c.target().relations());
    ExactMatrix b = ExactMatrix::vstack(
        t.matrix(), ExactMatrix(t.ring(), c.target().relations().rows(), t.target().gens()));
    auto x = solve_mod(a, b, t.target().relations());
    if (!x) return std::nullopt;
    return ModMap::unchecked(c.target(), t.target(), *x);
}

inline ModMap colift_through_epi(const ModMap& t, const ModMap& c)
{
    auto u = try_colift_through_epi(t, c);
    if (!u) throw std::runtime_error("no colift through epi");
    return *u;
}

/// Two-sided inverse of an isomorphism, built by lifting the identity.
inline ModMap inverse_of_iso(const ModMap& f)
{
    ModMap inv = lift_through_mono(ModMap::identity(f.target()), f);
    if (!maps_equal(compose(inv, f), ModMap::identity(f.target())) ||
        !maps_equal(compose(f, inv), ModMap::identity(f.source())))
        throw std::runtime_error("inverse_of_iso: input is not an isomorphism");
    return inv;
}

// ---------------------------------------------------------------------
// direct sums and pullbacks
// ---------------------------------------------------------------------

struct DirectSum {
    FpModule sum;
    ModMap inj1, inj2;  // A -> A(+)B, B -> A(+)B
    ModMap proj1, proj2;
};

inline DirectSum direct_sum(const FpModule& a, const FpModule& b)
{
    const Ring& ring = a.ring();
    FpModule s(ring, a.gens() + b.gens(),
               ExactMatrix::block_diag(a.relations(), b.relations()));
    ExactMatrix ia = ExactMatrix::hstack(ExactMatrix::identity(ring, a.gens()),
                                         ExactMatrix(ring, a.gens(), b.gens()));
    ExactMatrix ib = ExactMatrix::hstack(ExactMatrix(ring, b.gens(), a.gens()),
                                         ExactMatrix::identity(ring, b.gens()));
    return DirectSum{s,
                     ModMap::unchecked(a, s, ia),
                     ModMap::unchecked(b, s, ib),
                     ModMap::unchecked(s, a, ia.transposed()),
                     ModMap::unchecked(s, b, ib.transposed())};
}

/// Pairing <t1, t2> : T -> A (+) B.
inline ModMap pair_into_sum(const DirectSum& ds, const ModMap& t1, const ModMap& t2)
{
    if (!t1.source().same_presentation(t2.source()))
        throw std::invalid_argument("pair_into_sum: sources differ");
    return ModMap::unchecked(t1.source(), ds.sum,
                             ExactMatrix::hstack(t1.matrix(), t2.matrix()));
}

struct PullbackData {
    FpModule apex;
    ModMap p1, p2;       // projections to the sources of f and g
    DirectSum sum;       // of the two sources
    ModMap embed;        // mono apex -> sum, kernel of the difference map
};

/// Pullback of a cospan f : A -> C <- B : g, computed as the kernel of
/// the difference map A (+) B -> C.
inline PullbackData pullback(const ModMap& f, const ModMap& g)
{
    if (!f.target().same_presentation(g.target()))
        throw std::invalid_argument("pullback: targets differ");
    DirectSum ds = direct_sum(f.source(), g.source());
    ModMap diff = ModMap::unchecked(ds.sum, f.target(),
                                    ExactMatrix::vstack(f.matrix(), -g.matrix()));
    KernelPair k = kernel(diff);
    ModMap p1 = compose(k.embed, ds.proj1);
    ModMap p2 = compose(k.embed, ds.proj2);
    return PullbackData{k.module, p1, p2, ds, k.embed};
}

/// Unique mediating arrow into the pullback from a commuting cone.
inline ModMap into_pullback(const PullbackData& pb, const ModMap& t1, const ModMap& t2)
{
    return lift_through_mono(pair_into_sum(pb.sum, t1, t2), pb.embed);
}

// ---------------------------------------------------------------------
// isomorphism tests and canonical decompositions
// ---------------------------------------------------------------------

inline bool modules_isomorphic(const FpModule& a, const FpModule& b)
{
    if (a.ring() != b.ring()) throw std::invalid_argument("modules_isomorphic: ring mismatch");
    return a.free_rank() == b.free_rank() && a.invariant_factors() == b.invariant_factors();
}

struct CanonicalForm {
    FpModule canon; // (+) R/d_i (+) R^f, torsion coordinates first
    ModMap to, from;
};

/// Explicit isomorphism onto the invariant-factor decomposition,
/// extracted from the Smith form of the relations.
inline CanonicalForm canonical_form(const FpModule& m)
{
    const Ring& ring = m.ring();
    const auto& dec = m.rel_solver().decomposition();
    const int g = m.gens();
    const int rank = m.rel_solver().rank();

    std::vector<int> kept;           // coordinates surviving in the canonical form
    std::vector<Rat> torsion;        // their invariant factors (0 for free)
    for (int t = 0; t < rank; ++t)
        if (!ring.is_unit(dec.D.at(t, t))) {
            kept.push_back(t);
            torsion.push_back(dec.D.at(t, t));
        }
    for (int t = rank; t < g; ++t) kept.push_back(t);

    const int kc = static_cast<int>(kept.size());
    ExactMatrix canon_rels(ring, static_cast<int>(torsion.size()), kc);
    for (int i = 0; i < static_cast<int>(torsion.size()); ++i) canon_rels.at(i, i) = torsion[i];
    FpModule canon(ring, kc, canon_rels);

    ExactMatrix sel(ring, g, kc);            // coordinate selection
    for (int j = 0; j < kc; ++j) sel.at(kept[j], j) = 1;

    auto vinv = inverse(dec.V);
    if (!vinv) throw std::logic_error("canonical_form: V not invertible");

    ModMap to = ModMap::unchecked(m, canon, dec.V * sel);
    ModMap from = ModMap::unchecked(canon, m, sel.transposed() * *vinv);
    return CanonicalForm{canon, to, from};
}

/// Explicit isomorphism pair between abstractly isomorphic modules,
/// routed through the canonical form. nullopt when invariants differ.
inline std::optional<std::pair<ModMap, ModMap>> iso_between(const FpModule& a, const FpModule& b)
{
    if (!modules_isomorphic(a, b)) return std::nullopt;
    CanonicalForm ca = canonical_form(a);
    CanonicalForm cb = canonical_form(b);
    if (!ca.canon.same_presentation(cb.canon))
        throw std::logic_error("iso_between: canonical forms disagree");
    ModMap fwd = ModMap::unchecked(a, b, ca.to.matrix() * cb.from.matrix());
    ModMap bwd = ModMap::unchecked(b, a, cb.to.matrix() * ca.from.matrix());
    return std::make_pair(fwd, bwd);
}

/// The factorization of f through the kernel of its cokernel is a
/// regular epimorphism. Always true over the module categories here;
/// computed, not assumed.
inline bool is_proper_arrow(const ModMap& f)
{
    CokernelPair c = cokernel(f);
    KernelPair k = kernel(c.project);
    ModMap fbar = lift_through_mono(f, k.embed);
    return is_regular_epi(fbar);
}

// ---------------------------------------------------------------------
// hom lattice and exactness
// ---------------------------------------------------------------------

/// Generators of Hom(M, N) as a lattice (Z) or vector space (fields):
/// matrices T with rel_M T == S rel_N for some S.
inline std::vector<ExactMatrix> hom_basis(const FpModule& m, const FpModule& n)
{
    const Ring& ring = m.ring();
    const int gm = m.gens(), gn = n.gens(), rm = m.relations().rows();
    if (gm == 0 || gn == 0) return {};
    ExactMatrix big = ExactMatrix::vstack(
        ExactMatrix::kron(m.relations().transposed(), ExactMatrix::identity(ring, gn)),
        ExactMatrix::kron(ExactMatrix::identity(ring, rm), n.relations()));
    ExactMatrix ker = left_kernel(big);
    std::vector<ExactMatrix> out;
    for (int i = 0; i < ker.rows(); ++i) {
        ExactMatrix t = ExactMatrix::unvec_row(ker.row(i).col_slice(0, gm * gn), gm, gn);
        if (!t.is_zero()) out.push_back(std::move(t));
    }
    return out;
}

struct ExactnessAtPoint {
    bool composite_zero = false;
    bool factor_epi = false;
    bool exact() const { return composite_zero && factor_epi; }
};

/// Exactness of A -u-> B -v-> C at B: the composite vanishes and the
/// corestriction of u onto Ker(v) is a regular epimorphism.
inline ExactnessAtPoint exactness_at(const ModMap& u, const ModMap& v)
{
    ExactnessAtPoint r;
    r.composite_zero = is_zero_arrow(compose(u, v));
    if (!r.composite_zero) return r;
    KernelPair k = kernel(v);
    auto sigma = try_lift_through_mono(u, k.embed);
    if (!sigma) return r;
    r.factor_epi = is_regular_epi(*sigma);
    return r;
}

} // namespace snailhom
