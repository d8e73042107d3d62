#pragma once

#include "snailhom/classical.hpp"
#include "snailhom/linsys.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace snailhom {

struct GenConfig {
    std::uint64_t seed = 1;
    Ring ring = Ring::integers();
    int max_generators = 3;
    int max_relations = 2;
    int entry_bound = 2;       // absolute value of integer entries
    int support_width = 3;
    int count = 100;
    int degenerate_percent = 15; // bias toward zero/identity shapes
};

/// Counter-based splittable generator (splitmix64): identical streams
/// on every platform, independent substreams per instance index.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    Rng split() { return Rng(next() ^ 0x5851f42d4c957f2dull); }

    /// Uniform-ish in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    int int_in(int lo, int hi) // inclusive
    {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool percent(int p) { return static_cast<int>(below(100)) < p; }

private:
    std::uint64_t state_;
};

inline Rat random_scalar(Rng& rng, const GenConfig& cfg)
{
    const Ring& r = cfg.ring;
    if (r.tag() == Ring::Tag::PrimeField)
        return r.normalize(Rat(rng.int_in(0, static_cast<int>(r.characteristic()) - 1)));
    int num = rng.int_in(-cfg.entry_bound, cfg.entry_bound);
    if (r.tag() == Ring::Tag::Rationals && rng.percent(30)) {
        int den = rng.int_in(1, 3);
        return Rat(num, den);
    }
    return Rat(num);
}

inline ExactMatrix random_matrix(Rng& rng, const GenConfig& cfg, int rows, int cols)
{
    ExactMatrix m(cfg.ring, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, random_scalar(rng, cfg));
    return m;
}

inline FpModule gen_module(Rng& rng, const GenConfig& cfg)
{
    if (rng.percent(cfg.degenerate_percent)) return FpModule::zero(cfg.ring);
    int g = rng.int_in(1, cfg.max_generators);
    int r = rng.int_in(0, cfg.max_relations);
    return FpModule(cfg.ring, g, random_matrix(rng, cfg, r, g));
}

/// Random morphism: a small random combination of generators of the
/// hom lattice, so commuting-with-relations holds by construction.
inline ModMap gen_map(Rng& rng, const GenConfig& cfg, const FpModule& m, const FpModule& n)
{
    if (m.gens() == 0 || n.gens() == 0 || rng.percent(cfg.degenerate_percent / 2))
        return ModMap::zero(m, n);
    std::vector<ExactMatrix> basis = hom_basis(m, n);
    ExactMatrix t(cfg.ring, m.gens(), n.gens());
    for (const auto& b : basis)
        if (!rng.percent(40)) t = t + b.scaled(Rat(rng.int_in(-cfg.entry_bound, cfg.entry_bound)));
    return ModMap(m, n, t);
}

// ---------------------------------------------------------------------
// complexes, chain morphisms, extensions
// ---------------------------------------------------------------------

/// Random bounded complex: modules first, then each next differential
/// drawn from Hom(C_{n+1}, Ker(d_n)) composed with the kernel
/// embedding, which enforces d.d = 0 by construction.
inline Complex gen_complex(Rng& rng, const GenConfig& cfg)
{
    int width = rng.percent(cfg.degenerate_percent / 3) ? 0 : rng.int_in(1, cfg.support_width);
    if (width == 0) return Complex::zero(cfg.ring);
    std::vector<FpModule> mods;
    for (int i = 0; i < width; ++i) mods.push_back(gen_module(rng, cfg));
    std::vector<ModMap> diffs;
    for (int i = 1; i < width; ++i) {
        if (i == 1) {
            diffs.push_back(gen_map(rng, cfg, mods[1], mods[0]));
        } else {
            KernelPair k = kernel(diffs[i - 2]);
            diffs.push_back(compose(gen_map(rng, cfg, mods[i], k.module), k.embed));
        }
    }
    return Complex(cfg.ring, 0, std::move(mods), std::move(diffs));
}

/// Random chain morphism between fixed complexes: the commuting-square
/// constraints across all degrees form one homogeneous linear system;
/// sample from its solution lattice.
inline ChainMor gen_chain_morphism(Rng& rng, const GenConfig& cfg, const Complex& b,
                                   const Complex& c)
{
    int lo = std::min(b.lo(), c.lo()), hi = std::max(b.hi(), c.hi());
    if (lo > hi) return chain_zero_mor(b, c);

    MatrixSystem sys(cfg.ring);
    std::vector<int> unk;
    for (int n = lo; n <= hi; ++n)
        unk.push_back(sys.add_unknown(b.module(n).gens(), c.module(n).gens()));
    auto unknown_at = [&](int n) { return unk[n - lo]; };

    for (int n = lo; n <= hi; ++n) {
        // well-definedness: rel_{B_n} g_n == 0 mod rel_{C_n}
        int cw = sys.add_condition(
            ExactMatrix(cfg.ring, b.module(n).relations().rows(), c.module(n).gens()),
            c.module(n).relations());
        sys.add_term(cw, unknown_at(n), b.module(n).relations(),
                     ExactMatrix::identity(cfg.ring, c.module(n).gens()));
    }
    for (int n = lo; n <= hi + 1; ++n) {
        // g_n d^C_n == d^B_n g_{n-1}  mod rel_{C_{n-1}}
        int cc = sys.add_condition(ExactMatrix(cfg.ring, b.module(n).gens(),
                                               c.module(n - 1).gens()),
                                   c.module(n - 1).relations());
        if (n >= lo && n <= hi)
            sys.add_term(cc, unknown_at(n), ExactMatrix::identity(cfg.ring, b.module(n).gens()),
                         c.diff(n).matrix());
        if (n - 1 >= lo && n - 1 <= hi)
            sys.add_term(cc, unknown_at(n - 1), -b.diff(n).matrix(),
                         ExactMatrix::identity(cfg.ring, c.module(n - 1).gens()));
    }
    auto sol = sys.solve();
    if (!sol) throw std::logic_error("gen_chain_morphism: homogeneous system has no solution");

    std::vector<ExactMatrix> mats;
    for (int n = lo; n <= hi; ++n) mats.push_back(sol->particular[unknown_at(n)]); // zero
    for (const auto& gen : sol->homogeneous)
        if (!rng.percent(40)) {
            Rat c0(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
            for (int n = lo; n <= hi; ++n)
                mats[n - lo] = mats[n - lo] + gen[unknown_at(n)].scaled(c0);
        }
    std::vector<ModMap> maps;
    for (int n = lo; n <= hi; ++n)
        maps.push_back(ModMap(b.module(n), c.module(n), mats[n - lo]));
    return ChainMor(b, c, lo, std::move(maps));
}

/// Random nullhomotopic pair (g, phi): draw the diagonals phi_n as
/// module maps and let g be their boundary, so phi is a nullhomotopy
/// on g by construction.
struct NullhomotopicChainPair {
    ChainMor g;
    ChainNull phi;
};

inline NullhomotopicChainPair gen_nullhomotopic_chain_pair(Rng& rng, const GenConfig& cfg,
                                                           const Complex& b, const Complex& c)
{
    int lo = std::min(b.lo(), c.lo()) - 1, hi = std::max(b.hi(), c.hi()) + 1;
    std::vector<ModMap> diags;
    for (int n = lo; n <= hi; ++n)
        diags.push_back(gen_map(rng, cfg, b.module(n), c.module(n + 1)));
    ChainNull phi(b, c, lo, std::move(diags));
    std::vector<ModMap> maps;
    for (int n = lo; n <= hi; ++n) {
        ExactMatrix gm = compose(phi.diag(n), c.diff(n + 1)).matrix() +
                         compose(b.diff(n), phi.diag(n - 1)).matrix();
        maps.push_back(ModMap(b.module(n), c.module(n), gm));
    }
    ChainMor g(b, c, lo, std::move(maps));
    if (!is_nullhomotopy_on(phi, g))
        throw std::logic_error("gen_nullhomotopic_chain_pair: boundary construction failed");
    return NullhomotopicChainPair{std::move(g), std::move(phi)};
}

/// Random extension: either a level-split sum with a twisted
/// differential (nonzero connecting maps), or a scalar multiplication
/// embedding over Z, or a plain split sum.
inline Extension gen_extension(Rng& rng, const GenConfig& cfg)
{
    int mode = rng.int_in(0, cfg.ring.tag() == Ring::Tag::Integers ? 2 : 1);
    GenConfig acfg = cfg;
    if (mode == 2) acfg.max_relations = 0; // scalar embeddings need torsion-free levels
    Complex a = gen_complex(rng, acfg);

    if (mode == 2) { // scalar: 0 -> A -x m-> A -> A/m -> 0
        int m = rng.percent(50) ? 2 : 3;
        std::vector<ModMap> fmaps, gmaps;
        std::vector<FpModule> cmods;
        std::vector<ModMap> cdiffs;
        std::vector<CokernelPair> coks;
        for (int n = a.lo(); n <= a.hi(); ++n) {
            ModMap mul = ModMap::unchecked(a.module(n), a.module(n),
                                           ExactMatrix::identity(cfg.ring, a.module(n).gens())
                                               .scaled(Rat(m)));
            coks.push_back(cokernel(mul));
            cmods.push_back(coks.back().module);
            fmaps.push_back(mul);
        }
        for (int n = a.lo() + 1; n <= a.hi(); ++n)
            cdiffs.push_back(colift_through_epi(compose(a.diff(n), coks[n - a.lo() - 1].project),
                                                coks[n - a.lo()].project));
        Complex c = a.hi() < a.lo() ? Complex::zero(cfg.ring)
                                    : Complex(cfg.ring, a.lo(), cmods, cdiffs);
        for (int n = a.lo(); n <= a.hi(); ++n) gmaps.push_back(coks[n - a.lo()].project);
        ChainMor f = a.hi() < a.lo() ? chain_zero_mor(a, a) : ChainMor(a, a, a.lo(), fmaps);
        ChainMor g = a.hi() < a.lo() ? chain_zero_mor(a, c) : ChainMor(a, c, a.lo(), gmaps);
        return Extension{a, a, c, f, g};
    }

    // split or twisted-split: B_n = A_n (+) T_n with the twist mapping
    // the complement into A, so A stays a subcomplex
    Complex t = gen_complex(rng, cfg);
    int lo = std::min(a.lo(), t.lo()), hi = std::max(a.hi(), t.hi());
    bool twist = mode == 1 && hi > lo;

    std::map<int, ExactMatrix> tau; // tau_n : T_n -> A_{n-1}
    if (twist) {
        MatrixSystem sys(cfg.ring);
        std::vector<int> unk;
        for (int n = lo; n <= hi; ++n)
            unk.push_back(sys.add_unknown(t.module(n).gens(), a.module(n - 1).gens()));
        auto at = [&](int n) { return unk[n - lo]; };
        for (int n = lo; n <= hi; ++n) {
            int cw = sys.add_condition(ExactMatrix(cfg.ring, t.module(n).relations().rows(),
                                                   a.module(n - 1).gens()),
                                       a.module(n - 1).relations());
            sys.add_term(cw, at(n), t.module(n).relations(),
                         ExactMatrix::identity(cfg.ring, a.module(n - 1).gens()));
        }
        for (int n = lo; n <= hi + 1; ++n) {
            // tau_n d^A_{n-1} + d^T_n tau_{n-1} == 0 mod rel
            int cc = sys.add_condition(ExactMatrix(cfg.ring, t.module(n).gens(),
                                                   a.module(n - 2).gens()),
                                       a.module(n - 2).relations());
            if (n >= lo && n <= hi)
                sys.add_term(cc, at(n), ExactMatrix::identity(cfg.ring, t.module(n).gens()),
                             a.diff(n - 1).matrix());
            if (n - 1 >= lo && n - 1 <= hi)
                sys.add_term(cc, at(n - 1), t.diff(n).matrix(),
                             ExactMatrix::identity(cfg.ring, a.module(n - 2).gens()));
        }
        auto sol = sys.solve();
        if (!sol) throw std::logic_error("gen_extension: twist system has no solution");
        std::vector<ExactMatrix> mats;
        for (int n = lo; n <= hi; ++n) mats.push_back(sol->particular[at(n)]);
        for (const auto& gen : sol->homogeneous)
            if (!rng.percent(40)) {
                Rat c0(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
                for (int n = lo; n <= hi; ++n) mats[n - lo] = mats[n - lo] + gen[at(n)].scaled(c0);
            }
        for (int n = lo; n <= hi; ++n) tau.emplace(n, std::move(mats[n - lo]));
    }
    auto tau_at = [&](int n) -> ExactMatrix {
        auto it = tau.find(n);
        if (it != tau.end()) return it->second;
        return ExactMatrix(cfg.ring, t.module(n).gens(), a.module(n - 1).gens());
    };

    std::vector<FpModule> bmods;
    std::vector<ModMap> bdiffs;
    std::vector<DirectSum> sums;
    for (int n = lo; n <= hi; ++n) sums.push_back(direct_sum(a.module(n), t.module(n)));
    for (int n = lo + 1; n <= hi; ++n) {
        ExactMatrix top = ExactMatrix::hstack(
            a.diff(n).matrix(),
            ExactMatrix(cfg.ring, a.module(n).gens(), t.module(n - 1).gens()));
        ExactMatrix bot = ExactMatrix::hstack(tau_at(n), t.diff(n).matrix());
        bdiffs.push_back(ModMap(sums[n - lo].sum, sums[n - lo - 1].sum,
                                ExactMatrix::vstack(top, bot)));
    }
    for (int n = lo; n <= hi; ++n) bmods.push_back(sums[n - lo].sum);
    Complex b = lo > hi ? Complex::zero(cfg.ring) : Complex(cfg.ring, lo, bmods, bdiffs);

    std::vector<ModMap> fmaps, gmaps;
    std::vector<FpModule> cmods;
    std::vector<ModMap> cdiffs;
    std::vector<CokernelPair> coks;
    for (int n = lo; n <= hi; ++n) {
        fmaps.push_back(ModMap::unchecked(a.module(n), b.module(n), sums[n - lo].inj1.matrix()));
        coks.push_back(cokernel(fmaps.back()));
        cmods.push_back(coks.back().module);
        gmaps.push_back(coks.back().project);
    }
    for (int n = lo + 1; n <= hi; ++n)
        cdiffs.push_back(colift_through_epi(compose(b.diff(n), coks[n - lo - 1].project),
                                            coks[n - lo].project));
    Complex c = lo > hi ? Complex::zero(cfg.ring) : Complex(cfg.ring, lo, cmods, cdiffs);
    ChainMor f = lo > hi ? chain_zero_mor(a, b) : ChainMor(a, b, lo, fmaps);
    ChainMor g = lo > hi ? chain_zero_mor(b, c) : ChainMor(b, c, lo, gmaps);
    return Extension{a, b, c, f, g};
}

// ---------------------------------------------------------------------
// arrow-category data
// ---------------------------------------------------------------------

inline ArrObj gen_arr_object(Rng& rng, const GenConfig& cfg)
{
    FpModule top = gen_module(rng, cfg);
    FpModule bot = gen_module(rng, cfg);
    return ArrObj(top, bot, gen_map(rng, cfg, top, bot));
}

/// Random commuting square between two fixed arrow objects, sampled
/// from the joint solution lattice of the square and well-definedness
/// constraints.
inline ArrMor gen_arr_morphism_between(Rng& rng, const GenConfig& cfg, const ArrObj& x,
                                       const ArrObj& y)
{
    MatrixSystem sys(cfg.ring);
    int ut = sys.add_unknown(x.top.gens(), y.top.gens());
    int ub = sys.add_unknown(x.bottom.gens(), y.bottom.gens());

    int cwt = sys.add_condition(ExactMatrix(cfg.ring, x.top.relations().rows(), y.top.gens()),
                                y.top.relations());
    sys.add_term(cwt, ut, x.top.relations(), ExactMatrix::identity(cfg.ring, y.top.gens()));
    int cwb = sys.add_condition(
        ExactMatrix(cfg.ring, x.bottom.relations().rows(), y.bottom.gens()),
        y.bottom.relations());
    sys.add_term(cwb, ub, x.bottom.relations(),
                 ExactMatrix::identity(cfg.ring, y.bottom.gens()));

    int csq = sys.add_condition(ExactMatrix(cfg.ring, x.top.gens(), y.bottom.gens()),
                                y.bottom.relations());
    sys.add_term(csq, ut, ExactMatrix::identity(cfg.ring, x.top.gens()), y.arrow.matrix());
    sys.add_term(csq, ub, -x.arrow.matrix(),
                 ExactMatrix::identity(cfg.ring, y.bottom.gens()));

    auto sol = sys.solve();
    if (!sol) throw std::logic_error("gen_arr_morphism_between: no solution");
    ExactMatrix mt = sol->particular[ut], mb = sol->particular[ub];
    for (const auto& gen : sol->homogeneous)
        if (!rng.percent(40)) {
            Rat c(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
            mt = mt + gen[ut].scaled(c);
            mb = mb + gen[ub].scaled(c);
        }
    return ArrMor(x, y, ModMap(x.top, y.top, mt), ModMap(x.bottom, y.bottom, mb));
}

inline ArrMor gen_arr_morphism(Rng& rng, const GenConfig& cfg)
{
    ArrObj x = gen_arr_object(rng, cfg);
    ArrObj y = gen_arr_object(rng, cfg);
    return gen_arr_morphism_between(rng, cfg, x, y);
}

/// Random (morphism, nullhomotopy) pair: pick the diagonal first and
/// induce the morphism it bounds.
struct ArrNullPair {
    ArrMor mor;
    ArrNull null;
};

inline ArrNullPair gen_arr_null_pair(Rng& rng, const GenConfig& cfg, const ArrObj& x,
                                     const ArrObj& y)
{
    ModMap d = gen_map(rng, cfg, x.bottom, y.top);
    ArrMor m(x, y, compose(x.arrow, d), compose(d, y.arrow));
    ArrNull phi(x, y, d);
    if (!is_nullhomotopy_on(phi, m))
        throw std::logic_error("gen_arr_null_pair: induced pair invalid");
    return ArrNullPair{std::move(m), std::move(phi)};
}

/// Random cone (f, phi) over the kernel triple of g: a random arrow
/// into N(g) whisked onto the structural data.
struct ArrCone {
    ArrMor into_kernel; // a : A -> N(g)
    ArrMor f;           // a . n_g
    ArrNull phi;        // a o nu_g
};

inline ArrCone gen_arr_cone(Rng& rng, const GenConfig& cfg, const ArrCat& cat,
                            const typename ArrCat::Kernel& ker)
{
    ArrObj a = gen_arr_object(rng, cfg);
    ArrMor into = gen_arr_morphism_between(rng, cfg, a, ker.object);
    ArrMor f = cat.compose(into, ker.embed);
    ArrNull phi = cat.whisker(into, ker.nu, cat.identity(ker.nu.dst));
    return ArrCone{std::move(into), std::move(f), std::move(phi)};
}

// ---------------------------------------------------------------------
// sequentiable-family data
// ---------------------------------------------------------------------

/// Random isosequentiable family: the image of a random complex.
inline SeqFamily gen_isoseq_family(Rng& rng, const GenConfig& cfg)
{
    return functor_F(gen_complex(rng, cfg));
}

/// Random morphism between fixed families, from the joint lattice of
/// all level squares, well-definedness and connector compatibility.
inline SeqMor gen_seq_morphism_between(Rng& rng, const GenConfig& cfg, const SeqFamily& h,
                                       const SeqFamily& hp)
{
    int lo = std::min(h.lo(), hp.lo()), hi = std::max(h.hi(), hp.hi());
    if (lo > hi) return SeqMor(h, hp, 0, {});

    MatrixSystem sys(cfg.ring);
    std::vector<int> ud, uc;
    for (int n = lo; n <= hi; ++n) {
        ud.push_back(sys.add_unknown(h.level(n).dom.gens(), hp.level(n).dom.gens()));
        uc.push_back(sys.add_unknown(h.level(n).cod.gens(), hp.level(n).cod.gens()));
    }
    auto du = [&](int n) { return ud[n - lo]; };
    auto cu = [&](int n) { return uc[n - lo]; };
    auto id = [&](int g) { return ExactMatrix::identity(cfg.ring, g); };

    for (int n = lo; n <= hi; ++n) {
        SeqLevel s = h.level(n), d = hp.level(n);
        int c1 = sys.add_condition(ExactMatrix(cfg.ring, s.dom.relations().rows(), d.dom.gens()),
                                   d.dom.relations());
        sys.add_term(c1, du(n), s.dom.relations(), id(d.dom.gens()));
        int c2 = sys.add_condition(ExactMatrix(cfg.ring, s.cod.relations().rows(), d.cod.gens()),
                                   d.cod.relations());
        sys.add_term(c2, cu(n), s.cod.relations(), id(d.cod.gens()));
        // square: fd_n h'_n == h_n fc_n
        int c3 = sys.add_condition(ExactMatrix(cfg.ring, s.dom.gens(), d.cod.gens()),
                                   d.cod.relations());
        sys.add_term(c3, du(n), id(s.dom.gens()), d.map.matrix());
        sys.add_term(c3, cu(n), -s.map.matrix(), id(d.cod.gens()));
    }
    // connector compatibility, composed form:
    // fc_{n+1} . (q' i' k')_n == (q i k)_n . fd_n   mod rel(Dom(h'_n))
    for (int n = lo - 1; n <= hi; ++n) {
        ExactMatrix qik_src = (h.level_cok(n + 1).project.matrix() * h.connector(n).matrix()) *
                              h.level_kernel(n).embed.matrix();
        ExactMatrix qik_dst = (hp.level_cok(n + 1).project.matrix() * hp.connector(n).matrix()) *
                              hp.level_kernel(n).embed.matrix();
        int c = sys.add_condition(ExactMatrix(cfg.ring, h.level(n + 1).cod.gens(),
                                              hp.level(n).dom.gens()),
                                  hp.level(n).dom.relations());
        if (n + 1 >= lo && n + 1 <= hi)
            sys.add_term(c, cu(n + 1), id(h.level(n + 1).cod.gens()), qik_dst);
        if (n >= lo && n <= hi)
            sys.add_term(c, du(n), -qik_src, id(hp.level(n).dom.gens()));
    }

    auto sol = sys.solve();
    if (!sol) throw std::logic_error("gen_seq_morphism_between: no solution");
    std::vector<std::pair<ModMap, ModMap>> comps;
    std::vector<ExactMatrix> md, mc;
    for (int n = lo; n <= hi; ++n) {
        md.push_back(sol->particular[du(n)]);
        mc.push_back(sol->particular[cu(n)]);
    }
    for (const auto& gen : sol->homogeneous)
        if (!rng.percent(40)) {
            Rat c(rng.int_in(-cfg.entry_bound, cfg.entry_bound));
            for (int n = lo; n <= hi; ++n) {
                md[n - lo] = md[n - lo] + gen[du(n)].scaled(c);
                mc[n - lo] = mc[n - lo] + gen[cu(n)].scaled(c);
            }
        }
    for (int n = lo; n <= hi; ++n)
        comps.push_back({ModMap(h.level(n).dom, hp.level(n).dom, md[n - lo]),
                         ModMap(h.level(n).cod, hp.level(n).cod, mc[n - lo])});
    return SeqMor(h, hp, lo, std::move(comps));
}

struct SeqNullPair {
    SeqMor mor;
    SeqNull null;
};

inline SeqNullPair gen_seq_null_pair(Rng& rng, const GenConfig& cfg, const SeqFamily& h,
                                     const SeqFamily& hp)
{
    int lo = std::min(h.lo(), hp.lo()), hi = std::max(h.hi(), hp.hi());
    std::vector<ModMap> diags;
    std::vector<std::pair<ModMap, ModMap>> comps;
    for (int n = lo; n <= hi; ++n) {
        ModMap d = gen_map(rng, cfg, h.level(n).cod, hp.level(n).dom);
        comps.push_back({compose(h.level(n).map, d), compose(d, hp.level(n).map)});
        diags.push_back(d);
    }
    if (lo > hi) {
        SeqMor m(h, hp, 0, {});
        return SeqNullPair{m, SeqNull(h, hp, 0, {})};
    }
    SeqMor m(h, hp, lo, std::move(comps));
    SeqNull phi(h, hp, lo, std::move(diags));
    if (!is_nullhomotopy_on(phi, m))
        throw std::logic_error("gen_seq_null_pair: induced pair invalid");
    return SeqNullPair{std::move(m), std::move(phi)};
}

struct SeqCone {
    SeqMor into_kernel;
    SeqMor f;
    SeqNull phi;
};

inline SeqCone gen_seq_cone(Rng& rng, const GenConfig& cfg, const SeqCat& cat,
                            const typename SeqCat::Kernel& ker)
{
    SeqFamily a = gen_isoseq_family(rng, cfg);
    SeqMor into = gen_seq_morphism_between(rng, cfg, a, ker.object);
    SeqMor f = cat.compose(into, ker.embed);
    SeqNull phi = cat.whisker(into, ker.nu, cat.identity(ker.nu.target()));
    return SeqCone{std::move(into), std::move(f), std::move(phi)};
}

} // namespace snailhom
