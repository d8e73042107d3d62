#pragma once

#include "snailhom/arrcat.hpp"
#include "snailhom/homotopy.hpp"
#include "snailhom/module.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snailhom {

struct SeqLevel {
    FpModule dom, cod;
    ModMap map; // h_n : dom -> cod
};

/// Sequentiable family with bounded support: h_n and the connecting
/// arrows i_n : Cok(h_{n+1}) -> Ker(h_n). Everything outside [lo, hi]
/// is the zero module; accessors synthesize canonical zero data for any
/// degree, so formulas never special-case the window edges. Kernels and
/// cokernels of the levels are computed once and the connectors are
/// stored against those presentations.
class SeqFamily {
public:
    SeqFamily(Ring ring, int lo, std::vector<SeqLevel> levels, std::vector<ModMap> connectors)
        : ring_(ring), lo_(lo), hi_(lo + static_cast<int>(levels.size()) - 1),
          levels_(std::move(levels)), connectors_(std::move(connectors))
    {
        if (static_cast<int>(connectors_.size()) != std::max(0, hi_ - lo_))
            throw std::invalid_argument("SeqFamily: need one connector per adjacent level pair");
        for (const auto& l : levels_) {
            if (!l.map.source().same_presentation(l.dom) || !l.map.target().same_presentation(l.cod))
                throw std::invalid_argument("SeqFamily: level map boundary mismatch");
        }
        for (int n = lo_; n <= hi_ - 1; ++n) {
            const ModMap& i = connectors_[n - lo_];
            if (!i.source().same_presentation(level_cok(n + 1).module) ||
                !i.target().same_presentation(level_kernel(n).module))
                throw std::invalid_argument("SeqFamily: connector " + std::to_string(n) +
                                            " not based on the computed Cok/Ker presentations");
        }
    }

    static SeqFamily zero(Ring ring) { return SeqFamily(ring, 0, {}, {}); }

    const Ring& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool empty_window() const { return hi_ < lo_; }

    SeqLevel level(int n) const
    {
        if (n < lo_ || n > hi_) {
            FpModule z = FpModule::zero(ring_);
            return SeqLevel{z, z, ModMap::zero(z, z)};
        }
        return levels_[n - lo_];
    }

    KernelPair level_kernel(int n) const { return kernel(level(n).map); }
    CokernelPair level_cok(int n) const { return cokernel(level(n).map); }

    /// i_n : Cok(h_{n+1}) -> Ker(h_n); forced zero outside the window.
    ModMap connector(int n) const
    {
        if (n >= lo_ && n <= hi_ - 1) return connectors_[n - lo_];
        return ModMap::zero(level_cok(n + 1).module, level_kernel(n).module);
    }

    bool same_presentation(const SeqFamily& o) const
    {
        if (ring_ != o.ring_) return false;
        int l = std::min(lo_, o.lo_), h = std::max(hi_, o.hi_);
        for (int n = l; n <= h; ++n) {
            SeqLevel a = level(n), b = o.level(n);
            if (!a.dom.same_presentation(b.dom) || !a.cod.same_presentation(b.cod) ||
                a.map.matrix() != b.map.matrix())
                return false;
            if (n < h && connector(n).matrix() != o.connector(n).matrix()) return false;
        }
        return true;
    }

private:
    Ring ring_;
    int lo_, hi_;
    std::vector<SeqLevel> levels_;
    std::vector<ModMap> connectors_;
};

inline bool is_isoseq(const SeqFamily& h)
{
    for (int n = h.lo() - 1; n <= h.hi(); ++n)
        if (!is_iso(h.connector(n))) return false;
    return true;
}

struct FamilyHomology {
    FpModule via_cok; // Cok(h_{n+1})
    FpModule via_ker; // Ker(h_n)
    ModMap iso;       // the connecting arrow, an isomorphism
};

/// Both descriptions of the homology of an isosequentiable family at
/// degree n, with the connecting isomorphism witnessing agreement.
inline FamilyHomology homology_of_family(const SeqFamily& h, int n)
{
    ModMap i = h.connector(n);
    if (!is_iso(i)) throw std::domain_error("homology_of_family: family is not isosequentiable at " +
                                            std::to_string(n));
    return FamilyHomology{h.level_cok(n + 1).module, h.level_kernel(n).module, i};
}

/// Morphism of sequentiable families: level-wise squares plus the
/// compatibility of the induced Cok/Ker maps with the connectors. The
/// induced maps K(f)_n and C(f)_n are computed and cached up front.
class SeqMor {
public:
    SeqMor(SeqFamily src, SeqFamily dst, int lo, std::vector<std::pair<ModMap, ModMap>> comps)
        : src_(std::move(src)), dst_(std::move(dst)), lo_(lo),
          hi_(lo + static_cast<int>(comps.size()) - 1), comps_(std::move(comps))
    {
        int ulo = std::min(src_.lo(), dst_.lo()), uhi = std::max(src_.hi(), dst_.hi());
        if (!(lo_ <= ulo && hi_ >= uhi) && !(src_.empty_window() && dst_.empty_window()))
            throw std::invalid_argument("SeqMor: components must cover the union window");
        for (int n = lo_; n <= hi_; ++n) {
            const auto& [fd, fc] = comps_[n - lo_];
            if (!fd.source().same_presentation(src_.level(n).dom) ||
                !fd.target().same_presentation(dst_.level(n).dom) ||
                !fc.source().same_presentation(src_.level(n).cod) ||
                !fc.target().same_presentation(dst_.level(n).cod))
                throw std::invalid_argument("SeqMor: component boundary mismatch at " +
                                            std::to_string(n));
        }
        for (int n = lo_ - 1; n <= hi_ + 1; ++n) {
            auto [fd, fc] = comp(n);
            if (!maps_equal(compose(fd, dst_.level(n).map), compose(src_.level(n).map, fc)))
                throw std::invalid_argument("SeqMor: square fails at " + std::to_string(n));
        }
        for (int n = lo_ - 1; n <= hi_ + 1; ++n) {
            kmaps_.emplace(n, make_kmap(n));
            cmaps_.emplace(n, make_cmap(n));
        }
        for (int n = lo_ - 1; n <= hi_; ++n) {
            if (!maps_equal(compose(cmap(n + 1), dst_.connector(n)),
                            compose(src_.connector(n), kmap(n))))
                throw std::invalid_argument("SeqMor: connector compatibility fails at " +
                                            std::to_string(n));
        }
    }

    const SeqFamily& source() const { return src_; }
    const SeqFamily& target() const { return dst_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    /// (dom-component, cod-component) at degree n; zero outside.
    std::pair<ModMap, ModMap> comp(int n) const
    {
        if (n < lo_ || n > hi_)
            return {ModMap::zero(src_.level(n).dom, dst_.level(n).dom),
                    ModMap::zero(src_.level(n).cod, dst_.level(n).cod)};
        return comps_[n - lo_];
    }

    /// Induced map on kernels K(f)_n : Ker(h_n) -> Ker(h'_n).
    ModMap kmap(int n) const
    {
        auto it = kmaps_.find(n);
        return it != kmaps_.end() ? it->second : make_kmap(n);
    }

    /// Induced map on cokernels C(f)_n : Cok(h_n) -> Cok(h'_n).
    ModMap cmap(int n) const
    {
        auto it = cmaps_.find(n);
        return it != cmaps_.end() ? it->second : make_cmap(n);
    }

private:
    ModMap make_kmap(int n) const
    {
        return lift_through_mono(compose(src_.level_kernel(n).embed, comp(n).first),
                                 dst_.level_kernel(n).embed);
    }
    ModMap make_cmap(int n) const
    {
        return colift_through_epi(compose(comp(n).second, dst_.level_cok(n).project),
                                  src_.level_cok(n).project);
    }

    SeqFamily src_, dst_;
    int lo_, hi_;
    std::vector<std::pair<ModMap, ModMap>> comps_;
    std::map<int, ModMap> kmaps_, cmaps_;
};

/// Nullhomotopy value: level-wise diagonals Cod(h_n) -> Dom(h'_n).
class SeqNull {
public:
    SeqNull(SeqFamily src, SeqFamily dst, int lo, std::vector<ModMap> diags)
        : src_(std::move(src)), dst_(std::move(dst)), lo_(lo),
          hi_(lo + static_cast<int>(diags.size()) - 1), diags_(std::move(diags))
    {
        for (int n = lo_; n <= hi_; ++n) {
            const ModMap& d = diags_[n - lo_];
            if (!d.source().same_presentation(src_.level(n).cod) ||
                !d.target().same_presentation(dst_.level(n).dom))
                throw std::invalid_argument("SeqNull: diagonal boundary mismatch at " +
                                            std::to_string(n));
        }
    }

    const SeqFamily& source() const { return src_; }
    const SeqFamily& target() const { return dst_; }

    ModMap diag(int n) const
    {
        if (n < lo_ || n > hi_) return ModMap::zero(src_.level(n).cod, dst_.level(n).dom);
        return diags_[n - lo_];
    }

private:
    SeqFamily src_, dst_;
    int lo_, hi_;
    std::vector<ModMap> diags_;
};

inline bool is_nullhomotopy_on(const SeqNull& phi, const SeqMor& m)
{
    if (!phi.source().same_presentation(m.source()) || !phi.target().same_presentation(m.target()))
        return false;
    int lo = std::min(m.source().lo(), m.target().lo()) - 1;
    int hi = std::max(m.source().hi(), m.target().hi()) + 1;
    for (int n = lo; n <= hi; ++n) {
        auto [fd, fc] = m.comp(n);
        if (!maps_equal(compose(m.source().level(n).map, phi.diag(n)), fd)) return false;
        if (!maps_equal(compose(phi.diag(n), m.target().level(n).map), fc)) return false;
    }
    return true;
}

/// Nullhomotopies on a Seq morphism solved level-wise; degrees are
/// independent, so the joint system splits.
inline std::optional<SeqNull> find_nullhomotopy(const SeqMor& m)
{
    int lo = std::min(m.source().lo(), m.target().lo());
    int hi = std::max(m.source().hi(), m.target().hi());
    std::vector<ModMap> diags;
    for (int n = lo; n <= hi; ++n) {
        SeqLevel s = m.source().level(n), d = m.target().level(n);
        auto [fd, fc] = m.comp(n);
        ArrObj so(s.dom, s.cod, s.map), dd(d.dom, d.cod, d.map);
        auto arr = find_nullhomotopy(ArrMor(so, dd, fd, fc));
        if (!arr) return std::nullopt;
        diags.push_back(arr->diag);
    }
    return SeqNull(m.source(), m.target(), lo, std::move(diags));
}

/// The sequentiable-family instance of the nullhomotopy interface;
/// everything is the arrow-category construction applied level-wise,
/// plus the connecting arrows.
class SeqCat {
public:
    using Obj = SeqFamily;
    using Mor = SeqMor;
    using Null = SeqNull;
    using Kernel = KernelTriple<Obj, Mor, Null>;
    using Cokernel = CokernelTriple<Obj, Null>;

    explicit SeqCat(Ring ring) : ring_(ring) {}
    const Ring& ring() const { return ring_; }

    Obj dom(const Mor& m) const { return m.source(); }
    Obj cod(const Mor& m) const { return m.target(); }
    Obj zero_object() const { return SeqFamily::zero(ring_); }

    Mor identity(const Obj& x) const
    {
        std::vector<std::pair<ModMap, ModMap>> comps;
        for (int n = x.lo(); n <= x.hi(); ++n)
            comps.push_back({ModMap::identity(x.level(n).dom), ModMap::identity(x.level(n).cod)});
        return Mor(x, x, x.lo(), std::move(comps));
    }

    Mor compose(const Mor& f, const Mor& g) const
    {
        if (!f.target().same_presentation(g.source()))
            throw std::invalid_argument("compose: middle families differ");
        int lo = std::min(f.lo(), g.lo()), hi = std::max(f.hi(), g.hi());
        std::vector<std::pair<ModMap, ModMap>> comps;
        for (int n = lo; n <= hi; ++n)
            comps.push_back({snailhom::compose(f.comp(n).first, g.comp(n).first),
                             snailhom::compose(f.comp(n).second, g.comp(n).second)});
        return Mor(f.source(), g.target(), lo, std::move(comps));
    }

    Mor zero_mor(const Obj& x, const Obj& y) const
    {
        int lo = std::min(x.lo(), y.lo()), hi = std::max(x.hi(), y.hi());
        std::vector<std::pair<ModMap, ModMap>> comps;
        for (int n = lo; n <= hi; ++n)
            comps.push_back({ModMap::zero(x.level(n).dom, y.level(n).dom),
                             ModMap::zero(x.level(n).cod, y.level(n).cod)});
        if (lo > hi) return Mor(x, y, 0, {});
        return Mor(x, y, lo, std::move(comps));
    }

    Mor initial(const Obj& x) const { return zero_mor(zero_object(), x); }
    Mor terminal(const Obj& x) const { return zero_mor(x, zero_object()); }

    bool mor_equal(const Mor& f, const Mor& g) const
    {
        if (!f.source().same_presentation(g.source()) || !f.target().same_presentation(g.target()))
            return false;
        int lo = std::min(f.lo(), g.lo()), hi = std::max(f.hi(), g.hi());
        for (int n = lo; n <= hi; ++n) {
            if (!maps_equal(f.comp(n).first, g.comp(n).first)) return false;
            if (!maps_equal(f.comp(n).second, g.comp(n).second)) return false;
        }
        return true;
    }

    bool is_zero_mor(const Mor& f) const
    {
        for (int n = f.lo(); n <= f.hi(); ++n)
            if (!f.comp(n).first.is_zero_map() || !f.comp(n).second.is_zero_map()) return false;
        return true;
    }

    bool null_equal(const Null& a, const Null& b) const
    {
        if (!a.source().same_presentation(b.source()) || !a.target().same_presentation(b.target()))
            return false;
        int lo = std::min(a.source().lo(), b.source().lo());
        int hi = std::max(a.source().hi(), b.source().hi());
        lo = std::min(lo, std::min(a.target().lo(), b.target().lo()));
        hi = std::max(hi, std::max(a.target().hi(), b.target().hi()));
        for (int n = lo; n <= hi; ++n)
            if (!maps_equal(a.diag(n), b.diag(n))) return false;
        return true;
    }

    Null whisker(const Mor& f, const Null& phi, const Mor& h) const
    {
        int lo = std::min({f.lo(), h.lo(), f.source().lo(), h.target().lo()});
        int hi = std::max({f.hi(), h.hi(), f.source().hi(), h.target().hi()});
        std::vector<ModMap> diags;
        for (int n = lo; n <= hi; ++n)
            diags.push_back(snailhom::compose(
                f.comp(n).second, snailhom::compose(phi.diag(n), h.comp(n).first)));
        return Null(f.source(), h.target(), lo, std::move(diags));
    }

    Null star(const Obj& x, const Obj& y) const
    {
        int lo = std::min(x.lo(), y.lo()), hi = std::max(x.hi(), y.hi());
        std::vector<ModMap> diags;
        for (int n = lo; n <= hi; ++n)
            diags.push_back(ModMap::zero(x.level(n).cod, y.level(n).dom));
        if (lo > hi) return Null(x, y, 0, {});
        return Null(x, y, lo, std::move(diags));
    }

    bool is_discrete(const Obj& x) const
    {
        for (int n = x.lo(); n <= x.hi(); ++n)
            if (!x.level(n).dom.is_zero_module()) return false;
        return true;
    }

    bool in_S(const Mor& m) const
    {
        for (int n = m.lo(); n <= m.hi(); ++n)
            if (!is_regular_epi(m.comp(n).first) || !is_regular_epi(m.comp(n).second)) return false;
        return true;
    }

    bool is_mono(const Mor& m) const
    {
        for (int n = m.lo(); n <= m.hi(); ++n)
            if (!snailhom::is_mono(m.comp(n).first) || !snailhom::is_mono(m.comp(n).second))
                return false;
        return true;
    }

    /// Theta-kernel, level-wise pullbacks P_n with the connecting
    /// arrows i^P_n : Cok(h^P_{n+1}) -> Ker(h^P_n), each obtained by
    /// factoring C(pi)_{n+1} . i_n . k_n through the kernel embedding
    /// and cancelling the mono k_n.
    Kernel theta_kernel(const Mor& m) const
    {
        const SeqFamily& s = m.source();
        const SeqFamily& d = m.target();
        int lo = std::min(s.lo(), d.lo()), hi = std::max(s.hi(), d.hi());

        std::vector<SeqLevel> levels;
        std::vector<ModMap> pi1s, pi2s;
        for (int n = lo; n <= hi; ++n) {
            PullbackData pb = pullback(m.comp(n).second, d.level(n).map);
            ModMap hp = into_pullback(pb, s.level(n).map, m.comp(n).first);
            levels.push_back(SeqLevel{s.level(n).dom, pb.apex, hp});
            pi1s.push_back(pb.p1);
            pi2s.push_back(pb.p2);
        }
        auto level_at = [&](int n) -> const SeqLevel& { return levels[n - lo]; };

        std::vector<ModMap> connectors;
        for (int n = lo; n <= hi - 1; ++n) {
            CokernelPair cokp = cokernel(level_at(n + 1).map);
            KernelPair kerp = kernel(level_at(n).map);
            ModMap c_pi = colift_through_epi(
                snailhom::compose(pi1s[n + 1 - lo], s.level_cok(n + 1).project), cokp.project);
            ModMap u = snailhom::compose(
                c_pi, snailhom::compose(s.connector(n), s.level_kernel(n).embed));
            if (!is_zero_arrow(snailhom::compose(u, level_at(n).map)))
                throw std::logic_error("theta_kernel: connecting candidate does not land in the kernel");
            connectors.push_back(lift_through_mono(u, kerp.embed));
        }

        SeqFamily nf(ring_, lo, levels, connectors);
        if (lo > hi) nf = SeqFamily::zero(ring_);

        std::vector<std::pair<ModMap, ModMap>> ecomps;
        std::vector<ModMap> nudiags;
        for (int n = lo; n <= hi; ++n) {
            ecomps.push_back({ModMap::identity(s.level(n).dom), pi1s[n - lo]});
            nudiags.push_back(pi2s[n - lo]);
        }
        Mor embed = lo > hi ? zero_mor(nf, s) : Mor(nf, s, lo, std::move(ecomps));
        Null nu = lo > hi ? star(nf, d) : Null(nf, d, lo, std::move(nudiags));
        if (!is_nullhomotopy_on(nu, compose(embed, m)))
            throw std::logic_error("theta_kernel: structural nullhomotopy invalid");
        return Kernel{std::move(nf), std::move(embed), std::move(nu), m};
    }

    Cokernel theta_cokernel_terminal(const Obj& y) const
    {
        std::vector<SeqLevel> levels;
        std::vector<ModMap> gammas;
        FpModule z = FpModule::zero(ring_);
        for (int n = y.lo(); n <= y.hi(); ++n) {
            CokernelPair ck = y.level_cok(n);
            levels.push_back(SeqLevel{ck.module, z, ModMap::zero(ck.module, z)});
            gammas.push_back(ck.project);
        }
        std::vector<ModMap> connectors;
        for (int n = y.lo(); n <= y.hi() - 1; ++n) {
            CokernelPair c_above = cokernel(levels[n + 1 - y.lo()].map);
            KernelPair k_here = kernel(levels[n - y.lo()].map);
            connectors.push_back(ModMap::zero(c_above.module, k_here.module));
        }
        SeqFamily c = y.empty_window() ? SeqFamily::zero(ring_)
                                       : SeqFamily(ring_, y.lo(), levels, connectors);
        Null gamma = y.empty_window() ? star(y, c) : Null(y, c, y.lo(), std::move(gammas));
        return Cokernel{std::move(c), std::move(gamma)};
    }

    Mor factor_through_kernel(const Mor& f, const Null& phi, const Kernel& ker) const
    {
        if (!f.target().same_presentation(ker.of.source()))
            throw std::invalid_argument("factor_through_kernel: cone target mismatch");
        int lo = std::min({f.lo(), f.source().lo(), ker.object.lo()});
        int hi = std::max({f.hi(), f.source().hi(), ker.object.hi()});
        std::vector<std::pair<ModMap, ModMap>> comps;
        for (int n = lo; n <= hi; ++n) {
            DirectSum ds = direct_sum(ker.embed.comp(n).second.target(),
                                      ker.nu.diag(n).target());
            ModMap joint = pair_into_sum(ds, ker.embed.comp(n).second, ker.nu.diag(n));
            ModMap cone = pair_into_sum(ds, f.comp(n).second, phi.diag(n));
            comps.push_back({f.comp(n).first, lift_through_mono(cone, joint)});
        }
        Mor out = lo > hi ? zero_mor(f.source(), ker.object)
                          : Mor(f.source(), ker.object, lo, std::move(comps));
        if (!mor_equal(compose(out, ker.embed), f))
            throw std::logic_error("factor_through_kernel: first equation failed");
        if (!null_equal(whisker(out, ker.nu, identity(ker.nu.target())), phi))
            throw std::logic_error("factor_through_kernel: second equation failed");
        return out;
    }

    Null strong_factor(const Mor& f, const Null& phi, const Kernel& ker) const
    {
        Null lhs = whisker_null_by(phi, ker.of);
        Null rhs = whisker(f, ker.nu, identity(ker.nu.target()));
        if (!null_equal(lhs, rhs))
            throw std::invalid_argument("strong_factor: compatibility fails");
        int lo = std::min(f.source().lo(), ker.object.lo());
        int hi = std::max(f.source().hi(), ker.object.hi());
        std::vector<ModMap> diags;
        for (int n = lo; n <= hi; ++n)
            diags.push_back(lift_through_mono(phi.diag(n), ker.embed.comp(n).first));
        Null out = lo > hi ? star(f.source(), ker.object)
                           : Null(f.source(), ker.object, lo, std::move(diags));
        if (!is_nullhomotopy_on(out, f))
            throw std::logic_error("strong_factor: result is not a nullhomotopy on f");
        return out;
    }

    Mor cofactor_through_cokernel(const Null& phi, const Cokernel& cok, const Obj& d) const
    {
        int lo = std::min(cok.object.lo(), d.lo()), hi = std::max(cok.object.hi(), d.hi());
        std::vector<std::pair<ModMap, ModMap>> comps;
        for (int n = lo; n <= hi; ++n) {
            ModMap top = colift_through_epi(phi.diag(n), cok.gamma.diag(n));
            comps.push_back({top, ModMap::zero(cok.object.level(n).cod, d.level(n).cod)});
        }
        Mor out = lo > hi ? zero_mor(cok.object, d) : Mor(cok.object, d, lo, std::move(comps));
        if (!null_equal(whisker(identity(cok.gamma.source()), cok.gamma, out), phi))
            throw std::logic_error("cofactor_through_cokernel: equation failed");
        return out;
    }

    /// Level-wise categorical kernel with the induced connectors,
    /// obtained by lifting through the (mono) induced kernel map.
    std::pair<Obj, Mor> categorical_kernel(const Mor& m) const
    {
        const SeqFamily& s = m.source();
        int lo = std::min(s.lo(), m.target().lo()), hi = std::max(s.hi(), m.target().hi());
        std::vector<SeqLevel> levels;
        std::vector<ModMap> ed, ec; // embed components
        for (int n = lo; n <= hi; ++n) {
            KernelPair kd = kernel(m.comp(n).first);
            KernelPair kc = kernel(m.comp(n).second);
            ModMap h = lift_through_mono(snailhom::compose(kd.embed, s.level(n).map), kc.embed);
            levels.push_back(SeqLevel{kd.module, kc.module, h});
            ed.push_back(kd.embed);
            ec.push_back(kc.embed);
        }
        auto level_at = [&](int n) -> const SeqLevel& { return levels[n - lo]; };
        std::vector<ModMap> connectors;
        for (int n = lo; n <= hi - 1; ++n) {
            KernelPair kk = kernel(level_at(n).map);
            CokernelPair ck = cokernel(level_at(n + 1).map);
            ModMap kkn = lift_through_mono(snailhom::compose(kk.embed, ed[n - lo]),
                                           s.level_kernel(n).embed);
            ModMap ckn = colift_through_epi(
                snailhom::compose(ec[n + 1 - lo], s.level_cok(n + 1).project), ck.project);
            connectors.push_back(
                lift_through_mono(snailhom::compose(ckn, s.connector(n)), kkn));
        }
        SeqFamily k = lo > hi ? SeqFamily::zero(ring_) : SeqFamily(ring_, lo, levels, connectors);
        std::vector<std::pair<ModMap, ModMap>> comps;
        for (int n = lo; n <= hi; ++n) comps.push_back({ed[n - lo], ec[n - lo]});
        Mor e = lo > hi ? zero_mor(k, s) : Mor(k, s, lo, std::move(comps));
        return {std::move(k), std::move(e)};
    }

    Mor lift_through(const Mor& t, const Mor& k) const
    {
        int lo = std::min(t.source().lo(), k.source().lo());
        int hi = std::max(t.source().hi(), k.source().hi());
        std::vector<std::pair<ModMap, ModMap>> comps;
        for (int n = lo; n <= hi; ++n)
            comps.push_back({lift_through_mono(t.comp(n).first, k.comp(n).first),
                             lift_through_mono(t.comp(n).second, k.comp(n).second)});
        if (lo > hi) return zero_mor(t.source(), k.source());
        return Mor(t.source(), k.source(), lo, std::move(comps));
    }

private:
    Null whisker_null_by(const Null& phi, const Mor& g) const
    {
        int lo = std::min(phi.source().lo(), g.target().lo());
        int hi = std::max(phi.source().hi(), g.target().hi());
        std::vector<ModMap> diags;
        for (int n = lo; n <= hi; ++n)
            diags.push_back(snailhom::compose(phi.diag(n), g.comp(n).first));
        if (lo > hi) return star(phi.source(), g.target());
        return Null(phi.source(), g.target(), lo, std::move(diags));
    }

    Ring ring_;
};

} // namespace snailhom
