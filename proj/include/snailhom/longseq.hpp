#pragma once

#include "snailhom/seqfam.hpp"

#include <array>
#include <string>
#include <vector>

namespace snailhom {

/// A linear diagram of modules with mechanical exactness checking:
/// exact at an interior point when the composite vanishes and the
/// corestriction onto the kernel is a regular epimorphism.
struct ChainOfModules {
    std::vector<FpModule> objects;
    std::vector<ModMap> maps; // maps[i] : objects[i] -> objects[i+1]
    std::vector<std::string> labels;

    bool check_exact(std::vector<std::string>* failures = nullptr) const
    {
        bool ok = true;
        for (size_t i = 0; i + 1 < maps.size(); ++i) {
            if (!exactness_at(maps[i], maps[i + 1]).exact()) {
                ok = false;
                if (failures)
                    failures->push_back("not exact at " +
                                        (i + 1 < labels.size() ? labels[i + 1]
                                                               : std::to_string(i + 1)));
            }
        }
        return ok;
    }
};

/// One six-term row of the snail sequence of a Seq morphism, in the
/// base category:
/// Ker(h^P_n) -> Ker(h_n) -> Ker(h'_n) -> Cok(h^P_n) -> Cok(h_n) -> Cok(h'_n)
/// with the middle map <0, k'_n> . q^P_n.
struct SeqSixTermRow {
    int degree;
    std::array<FpModule, 6> objects;
    std::array<ModMap, 5> maps;
};

/// Builds the row at degree n from the Theta-kernel data of f.
inline SeqSixTermRow seq_six_term_row(const typename SeqCat::Kernel& ker, int n)
{
    const SeqMor& f = ker.of;
    const SeqFamily& h = f.source();
    const SeqFamily& hp = f.target();
    const SeqFamily& np = ker.object;

    CokernelPair cok_hp_n = np.level_cok(n);

    // K(pi)_n and C(pi)_n, the embed morphism's induced maps
    ModMap kpi = ker.embed.kmap(n);
    ModMap cpi = ker.embed.cmap(n);
    ModMap kf = f.kmap(n);
    ModMap cf = f.cmap(n);

    // middle map: include Ker(h'_n) into the pullback P_n as <0, k'_n>,
    // then project onto Cok(h^P_n)
    KernelPair k_hp = hp.level_kernel(n);
    ModMap embed_cod = ker.embed.comp(n).second; // pi_n : P_n -> Cod(h_n)
    ModMap nu_diag = ker.nu.diag(n);             // pi'_n : P_n -> Dom(h'_n)
    DirectSum ds = direct_sum(embed_cod.target(), nu_diag.target());
    ModMap joint = pair_into_sum(ds, embed_cod, nu_diag);
    ModMap cone = pair_into_sum(ds, ModMap::zero(k_hp.module, embed_cod.target()), k_hp.embed);
    ModMap into_p = lift_through_mono(cone, joint);
    ModMap mid = compose(into_p, cok_hp_n.project);

    return SeqSixTermRow{n,
                         {np.level_kernel(n).module, h.level_kernel(n).module,
                          hp.level_kernel(n).module, np.level_cok(n).module,
                          h.level_cok(n).module, hp.level_cok(n).module},
                         {kpi, kf, mid, cpi, cf}};
}

struct LongSeq {
    typename SeqCat::Kernel ker; // N(f) with embed and nu
    std::vector<SeqSixTermRow> rows; // degrees descending, guard rows included
    bool rows_exact = false;        // four middle points of every row
    bool spliced = false;           // both families isosequentiable
    bool chain_exact = false;       // the pasted chain, every point
    ChainOfModules chain;           // built when spliced
    std::vector<std::string> failures;
};

/// The long sequence obtained by pasting the six-term rows along the
/// connecting arrows. Rows are always checked at their four middle
/// points; when source and target are isosequentiable the rows are
/// spliced into a single chain
///   ... -> Ker(h_n) -> Ker(h'_n) -> Cok(h^P_n) -> Ker(h_{n-1}) -> ...
/// with connecting map C(pi)_n . i_{n-1}, exact at every point.
inline LongSeq unroll_long_sequence(const SeqCat& cat, const SeqMor& f)
{
    LongSeq out{cat.theta_kernel(f), {}, true, false, false, {}, {}};
    const SeqFamily& h = f.source();
    const SeqFamily& hp = f.target();
    int lo = std::min(h.lo(), hp.lo()) - 1, hi = std::max(h.hi(), hp.hi()) + 1;

    for (int n = hi; n >= lo; --n) {
        SeqSixTermRow row = seq_six_term_row(out.ker, n);
        for (int p = 0; p < 4; ++p) {
            if (!exactness_at(row.maps[p], row.maps[p + 1]).exact()) {
                out.rows_exact = false;
                out.failures.push_back("row " + std::to_string(n) + " not exact at position " +
                                       std::to_string(p + 1));
            }
        }
        out.rows.push_back(std::move(row));
    }

    if (is_isoseq(h) && is_isoseq(hp)) {
        out.spliced = true;
        FpModule z = FpModule::zero(cat.ring());
        out.chain.objects.push_back(z);
        out.chain.labels.push_back("0");
        for (int n = hi; n >= lo; --n) {
            const SeqSixTermRow& row = out.rows[hi - n];
            // connector into this block: C(pi)_{n+1} . i_n, zero at the top guard
            ModMap splice = n == hi ? ModMap::zero(z, h.level_kernel(n).module)
                                    : compose(out.ker.embed.cmap(n + 1), h.connector(n));
            out.chain.maps.push_back(splice);
            out.chain.objects.push_back(row.objects[1]);
            out.chain.labels.push_back("Ker(h_" + std::to_string(n) + ")");
            out.chain.maps.push_back(row.maps[1]); // K(f)_n
            out.chain.objects.push_back(row.objects[2]);
            out.chain.labels.push_back("Ker(h'_" + std::to_string(n) + ")");
            out.chain.maps.push_back(row.maps[2]); // middle map
            out.chain.objects.push_back(row.objects[3]);
            out.chain.labels.push_back("Cok(h^P_" + std::to_string(n) + ")");
        }
        out.chain.maps.push_back(ModMap::zero(out.chain.objects.back(), z));
        out.chain.objects.push_back(z);
        out.chain.labels.push_back("0");
        out.chain_exact = out.chain.check_exact(&out.failures);
    }
    return out;
}

// ---------------------------------------------------------------------
// special-case Theta-kernels and their generic counterparts
// ---------------------------------------------------------------------

/// N(id): levels (Dom(h_n), id, Dom(h_n)), embed (id, h_n), nu = id.
inline typename SeqCat::Kernel special_kernel_of_identity(const SeqCat& cat, const SeqFamily& h)
{
    std::vector<SeqLevel> levels;
    std::vector<std::pair<ModMap, ModMap>> ecomps;
    std::vector<ModMap> nudiag;
    for (int n = h.lo(); n <= h.hi(); ++n) {
        SeqLevel l = h.level(n);
        levels.push_back(SeqLevel{l.dom, l.dom, ModMap::identity(l.dom)});
        ecomps.push_back({ModMap::identity(l.dom), l.map});
        nudiag.push_back(ModMap::identity(l.dom));
    }
    std::vector<ModMap> connectors;
    for (int n = h.lo(); n <= h.hi() - 1; ++n) {
        KernelPair kk = kernel(levels[n - h.lo()].map);
        CokernelPair ck = cokernel(levels[n + 1 - h.lo()].map);
        connectors.push_back(ModMap::zero(ck.module, kk.module));
    }
    SeqFamily nf = h.empty_window() ? SeqFamily::zero(cat.ring())
                                    : SeqFamily(cat.ring(), h.lo(), levels, connectors);
    SeqMor id_h = cat.identity(h);
    SeqMor embed = h.empty_window() ? cat.zero_mor(nf, h) : SeqMor(nf, h, h.lo(), ecomps);
    SeqNull nu = h.empty_window() ? cat.star(nf, h) : SeqNull(nf, h, h.lo(), nudiag);
    return typename SeqCat::Kernel{nf, embed, nu, id_h};
}

/// N(0 -> h): levels (0, 0, Ker(h_n)), nu the kernel embeddings.
inline typename SeqCat::Kernel special_kernel_of_initial(const SeqCat& cat, const SeqFamily& h)
{
    FpModule z = FpModule::zero(cat.ring());
    std::vector<SeqLevel> levels;
    std::vector<ModMap> nudiag;
    for (int n = h.lo(); n <= h.hi(); ++n) {
        KernelPair k = h.level_kernel(n);
        levels.push_back(SeqLevel{z, k.module, ModMap::zero(z, k.module)});
        nudiag.push_back(k.embed);
    }
    std::vector<ModMap> connectors;
    for (int n = h.lo(); n <= h.hi() - 1; ++n) {
        KernelPair kk = kernel(levels[n - h.lo()].map);
        CokernelPair ck = cokernel(levels[n + 1 - h.lo()].map);
        connectors.push_back(ModMap::zero(ck.module, kk.module));
    }
    SeqFamily nf = h.empty_window() ? SeqFamily::zero(cat.ring())
                                    : SeqFamily(cat.ring(), h.lo(), levels, connectors);
    SeqMor embed = cat.zero_mor(nf, cat.zero_object());
    SeqNull nu = h.empty_window() ? cat.star(nf, h) : SeqNull(nf, h, h.lo(), nudiag);
    return typename SeqCat::Kernel{nf, embed, nu, cat.initial(h)};
}

/// pi0: levels (0, 0, Cok(h_n)), eta = (0, quotient).
struct SpecialPi0 {
    SeqFamily pi0;
    SeqMor eta;
};

inline SpecialPi0 special_pi0(const SeqCat& cat, const SeqFamily& h)
{
    FpModule z = FpModule::zero(cat.ring());
    std::vector<SeqLevel> levels;
    std::vector<std::pair<ModMap, ModMap>> etacomps;
    for (int n = h.lo(); n <= h.hi(); ++n) {
        CokernelPair c = h.level_cok(n);
        levels.push_back(SeqLevel{z, c.module, ModMap::zero(z, c.module)});
        etacomps.push_back({ModMap::zero(h.level(n).dom, z), c.project});
    }
    std::vector<ModMap> connectors;
    for (int n = h.lo(); n <= h.hi() - 1; ++n) {
        KernelPair kk = kernel(levels[n - h.lo()].map);
        CokernelPair ck = cokernel(levels[n + 1 - h.lo()].map);
        connectors.push_back(ModMap::zero(ck.module, kk.module));
    }
    SeqFamily p = h.empty_window() ? SeqFamily::zero(cat.ring())
                                   : SeqFamily(cat.ring(), h.lo(), levels, connectors);
    SeqMor eta = h.empty_window() ? cat.zero_mor(h, p) : SeqMor(h, p, h.lo(), etacomps);
    return SpecialPi0{p, eta};
}

/// A special-shape triple agrees with the generic one when the unique
/// comparison (from the universal property of the generic kernel) is a
/// level-wise isomorphism.
inline bool kernel_triples_agree(const SeqCat& cat, const typename SeqCat::Kernel& special,
                                 const typename SeqCat::Kernel& generic)
{
    if (!cat.mor_equal(special.of, generic.of)) return false;
    SeqMor cmp = cat.factor_through_kernel(special.embed, special.nu, generic);
    for (int n = std::min(cmp.source().lo(), cmp.target().lo());
         n <= std::max(cmp.source().hi(), cmp.target().hi()); ++n)
        if (!is_iso(cmp.comp(n).first) || !is_iso(cmp.comp(n).second)) return false;
    return true;
}

/// All the special-case shapes match the generic constructions.
inline bool special_cases_match_generic(const SeqCat& cat, const SeqFamily& h)
{
    if (!kernel_triples_agree(cat, special_kernel_of_identity(cat, h),
                              cat.theta_kernel(cat.identity(h))))
        return false;
    if (!kernel_triples_agree(cat, special_kernel_of_initial(cat, h),
                              cat.theta_kernel(cat.initial(h))))
        return false;

    // pi0: compare through the generic universal property; the special
    // cokernels are presentation-identical to the generic C(0^h) tops,
    // so the identity diagonals give the connecting nullhomotopy.
    SpecialPi0 sp = special_pi0(cat, h);
    Pi0Data<SeqCat> gp = build_pi0(cat, h);
    std::vector<ModMap> diags;
    int lo = std::min(sp.pi0.lo(), gp.cok.object.lo());
    int hi = std::max(sp.pi0.hi(), gp.cok.object.hi());
    for (int n = lo; n <= hi; ++n) {
        const FpModule& a = sp.pi0.level(n).cod;
        const FpModule& b = gp.cok.object.level(n).dom;
        if (!a.same_presentation(b)) return false;
        diags.push_back(ModMap::identity(a));
    }
    SeqNull link = lo > hi ? cat.star(sp.pi0, gp.cok.object)
                           : SeqNull(sp.pi0, gp.cok.object, lo, diags);
    SeqMor w = cat.factor_through_kernel(cat.terminal(sp.pi0), link, gp.ker);
    for (int n = lo; n <= hi; ++n)
        if (!is_iso(w.comp(n).first) || !is_iso(w.comp(n).second)) return false;
    if (!cat.mor_equal(cat.compose(sp.eta, w), gp.eta)) return false;

    // proper-comparison shape: the factorization of each h_n through
    // the kernel of its cokernel decides S-properness
    bool levelwise = true;
    for (int n = h.lo(); n <= h.hi(); ++n)
        levelwise = levelwise && is_proper_arrow(h.level(n).map);
    if (levelwise != check_s_proper(cat, h)) return false;
    return true;
}

} // namespace snailhom
