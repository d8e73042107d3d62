#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snailhom {

// ---------------------------------------------------------------------
// Pointed category with nullhomotopies.
//
// An instance type Cat provides:
//   types   Obj, Mor, Null, Kernel (= KernelTriple<...>), Cokernel
//   objects dom(m), cod(m), zero_object()
//   arrows  identity(X), compose(f, g), zero_mor(X, Y),
//           initial(X) (0 -> X), terminal(X) (X -> 0)
//   tests   mor_equal, null_equal, is_zero_mor, is_discrete(X),
//           in_S(m) (level-wise regular epis), is_mono(m)
//   nulls   whisker(f, phi, h) : Theta(m) -> Theta(f.m.h)
//           star(X, Y), the canonical nullhomotopy on the zero arrow
//   limits  theta_kernel(m), theta_cokernel_terminal(X),
//           factor_through_kernel(f, phi, ker)       (universal property)
//           strong_factor(f, phi, ker)               (strongness)
//           cofactor_through_cokernel(phi, cok, D)   (dual, terminal case)
//           categorical_kernel(m), lift_through(t, k) (k mono)
//
// The snail construction below only ever uses this surface, so the
// arrow-category and sequentiable-family instances share all of it.
// ---------------------------------------------------------------------

template <class Obj, class Mor, class Null>
struct KernelTriple {
    Obj object; // N(g)
    Mor embed;  // n_g : N(g) -> dom(g)
    Null nu;    // in Theta(n_g . g)
    Mor of;     // the arrow g the triple is a kernel of
};

template <class Obj, class Null>
struct CokernelTriple { // Theta-cokernel of the terminal arrow of some Y
    Obj object; // C(0^Y)
    Null gamma; // in Theta(Y -> C(0^Y)), the zero arrow
};

template <class Cat>
concept HomotopyCategory = requires(const Cat& cat, const typename Cat::Obj& x,
                                    const typename Cat::Mor& f, const typename Cat::Null& p) {
    { cat.dom(f) } -> std::convertible_to<typename Cat::Obj>;
    { cat.compose(f, f) } -> std::convertible_to<typename Cat::Mor>;
    { cat.mor_equal(f, f) } -> std::convertible_to<bool>;
    { cat.whisker(f, p, f) } -> std::convertible_to<typename Cat::Null>;
    { cat.theta_kernel(f) } -> std::convertible_to<typename Cat::Kernel>;
    { cat.is_discrete(x) } -> std::convertible_to<bool>;
};

template <class Cat>
struct Pi0Data {
    typename Cat::Cokernel cok; // C(0^Y) with gamma
    typename Cat::Kernel ker;   // pi0(Y) = N(0_{C(0^Y)}) with (n, nu)
    typename Cat::Obj pi0;      // == ker.object
    typename Cat::Mor eta;      // unit Y -> pi0(Y)
};

/// Everything Steps 1-5 produce, witnesses included, so tests can
/// replay each defining equation.
template <class Cat>
struct SnailResult {
    using Obj = typename Cat::Obj;
    using Mor = typename Cat::Mor;
    using Null = typename Cat::Null;

    Mor g;
    typename Cat::Kernel ker_g; // N(g)

    typename Cat::Kernel n0_ng, n0_x, n0_y; // N(0_-) of N(g), X, Y
    Pi0Data<Cat> pi0_ng, pi0_x, pi0_y;

    Mor n_of_ng, n_of_g;        // induced N(0_{N(g)}) -> N(0_X) -> N(0_Y)
    Mor c_of_ng, c_of_g;        // induced on Theta-cokernels
    Mor pi0_of_ng, pi0_of_g;    // induced pi0(N(g)) -> pi0(X) -> pi0(Y)
    Mor delta_cap;              // Delta : N(0_Y) -> N(g)
    Mor delta;                  // Delta . eta_{N(g)}

    typename Cat::Kernel ker_id_x, ker_id_ng; // N(id_X), N(id_{N(g)})
    Mor t_x, s_x, r_x;
    Null nu_x_g;     // in Theta(s_x), strong factorization witness
    Null null_step1; // witness in Theta(n(n_g) . n(g))
};

namespace snail_detail {

inline void require(bool ok, const char* what)
{
    if (!ok) throw std::logic_error(std::string("snail construction: ") + what);
}

} // namespace snail_detail

/// Unique arrow N(a) -> N(b) induced by a commuting square
///     A --gp--> B
///     a|        |b        gp.b == a.g
///     X --g---> Y
/// with n(g,gp).n_b = n_a.gp and n(g,gp) o nu_b = nu_a o g.
template <HomotopyCategory Cat>
typename Cat::Mor induced_kernel_arrow(const Cat& cat, const typename Cat::Mor& gp,
                                       const typename Cat::Mor& a, const typename Cat::Mor& g,
                                       const typename Cat::Mor& b,
                                       const typename Cat::Kernel& ka,
                                       const typename Cat::Kernel& kb)
{
    if (!cat.mor_equal(cat.compose(gp, b), cat.compose(a, g)))
        throw std::invalid_argument("induced_kernel_arrow: square does not commute");
    auto f = cat.compose(ka.embed, gp);
    auto phi = cat.whisker(cat.identity(cat.dom(ka.embed)), ka.nu, g);
    auto n = cat.factor_through_kernel(f, phi, kb);
    snail_detail::require(cat.mor_equal(cat.compose(n, kb.embed), f),
                          "induced arrow fails its first equation");
    return n;
}

/// Unique nullhomotopy on the induced arrow, from the strongness of
/// N(b): n(psi) o n_b = psi o gp. Requires some phi in Theta(g) to
/// exist (passed for the precondition check inside strong_factor).
template <HomotopyCategory Cat>
typename Cat::Null induced_kernel_nullhomotopy(const Cat& cat, const typename Cat::Mor& gp,
                                               const typename Cat::Mor& n_arrow,
                                               const typename Cat::Null& psi,
                                               const typename Cat::Kernel& kb)
{
    auto cand = cat.whisker(cat.identity(cat.dom(n_arrow)), psi, gp);
    return cat.strong_factor(n_arrow, cand, kb);
}

template <HomotopyCategory Cat>
Pi0Data<Cat> build_pi0(const Cat& cat, const typename Cat::Obj& y)
{
    auto cok = cat.theta_cokernel_terminal(y);
    auto ker = cat.theta_kernel(cat.initial(cok.object));
    auto pi0 = ker.object;
    auto eta = cat.factor_through_kernel(cat.terminal(y), cok.gamma, ker);
    snail_detail::require(
        cat.null_equal(cat.whisker(eta, ker.nu, cat.identity(cok.object)), cok.gamma),
        "eta fails its defining equation");
    snail_detail::require(cat.is_discrete(pi0), "pi0 is not discrete");
    return Pi0Data<Cat>{std::move(cok), std::move(ker), std::move(pi0), std::move(eta)};
}

/// Steps 1-5. Every defining equation and every zero-composite claim is
/// asserted; a failure means the instance violates its axioms.
template <HomotopyCategory Cat>
SnailResult<Cat> build_snail(const Cat& cat, const typename Cat::Mor& g)
{
    using snail_detail::require;
    auto X = cat.dom(g);
    auto Y = cat.cod(g);
    auto ker_g = cat.theta_kernel(g);
    auto NG = ker_g.object;

    auto n0_ng = cat.theta_kernel(cat.initial(NG));
    auto n0_x = cat.theta_kernel(cat.initial(X));
    auto n0_y = cat.theta_kernel(cat.initial(Y));
    require(cat.is_discrete(n0_ng.object) && cat.is_discrete(n0_x.object) &&
                cat.is_discrete(n0_y.object),
            "N(0_-) must be discrete");

    // Step 1: arrows induced between the N(0_-) over n_g and g.
    auto id0 = cat.identity(cat.zero_object());
    auto n_of_ng =
        induced_kernel_arrow(cat, id0, cat.initial(NG), ker_g.embed, cat.initial(X), n0_ng, n0_x);
    auto n_of_g = induced_kernel_arrow(cat, id0, cat.initial(X), g, cat.initial(Y), n0_x, n0_y);

    // nullhomotopy on the composite, via the square over n_g . g
    auto comp01 = cat.compose(n_of_ng, n_of_g);
    {
        auto direct = induced_kernel_arrow(cat, id0, cat.initial(NG), cat.compose(ker_g.embed, g),
                                           cat.initial(Y), n0_ng, n0_y);
        require(cat.mor_equal(direct, comp01), "composite square disagrees with composite");
    }
    auto null_step1 = induced_kernel_nullhomotopy(
        cat, id0, comp01, cat.star(n0_ng.object, cat.zero_object()), n0_y);
    require(cat.is_zero_mor(comp01), "n(n_g) . n(g) must vanish");

    // Step 2: pi0 row.
    auto pi0_ng = build_pi0(cat, NG);
    auto pi0_x = build_pi0(cat, X);
    auto pi0_y = build_pi0(cat, Y);

    auto c_of_g = cat.cofactor_through_cokernel(
        cat.whisker(g, pi0_y.cok.gamma, cat.identity(pi0_y.cok.object)), pi0_x.cok,
        pi0_y.cok.object);
    auto c_of_ng = cat.cofactor_through_cokernel(
        cat.whisker(ker_g.embed, pi0_x.cok.gamma, cat.identity(pi0_x.cok.object)), pi0_ng.cok,
        pi0_x.cok.object);

    auto pi0_of_g = induced_kernel_arrow(cat, id0, cat.initial(pi0_x.cok.object), c_of_g,
                                         cat.initial(pi0_y.cok.object), pi0_x.ker, pi0_y.ker);
    auto pi0_of_ng = induced_kernel_arrow(cat, id0, cat.initial(pi0_ng.cok.object), c_of_ng,
                                          cat.initial(pi0_x.cok.object), pi0_ng.ker, pi0_x.ker);

    require(cat.mor_equal(cat.compose(g, pi0_y.eta), cat.compose(pi0_x.eta, pi0_of_g)),
            "eta is not natural along g");
    require(cat.mor_equal(cat.compose(ker_g.embed, pi0_x.eta), cat.compose(pi0_ng.eta, pi0_of_ng)),
            "eta is not natural along n_g");
    require(cat.is_zero_mor(cat.compose(c_of_ng, c_of_g)), "c(n_g) . c(g) must vanish");
    require(cat.is_zero_mor(cat.compose(pi0_of_ng, pi0_of_g)), "pi0(n_g) . pi0(g) must vanish");

    // Step 3: the connecting arrow.
    auto delta_cap =
        cat.factor_through_kernel(cat.zero_mor(n0_y.object, X), n0_y.nu, ker_g);
    require(cat.is_zero_mor(cat.compose(delta_cap, ker_g.embed)), "Delta . n_g must vanish");
    require(cat.null_equal(cat.whisker(delta_cap, ker_g.nu, cat.identity(Y)), n0_y.nu),
            "Delta o nu_g must give nu_{0_Y}");
    auto delta = cat.compose(delta_cap, pi0_ng.eta);

    // Step 4: witnesses t_X, s_X, nu_{X,g}, r_X and the key identity.
    auto ker_id_x = cat.theta_kernel(cat.identity(X));
    auto ker_id_ng = cat.theta_kernel(cat.identity(NG));
    auto t_x = cat.factor_through_kernel(cat.zero_mor(n0_x.object, X), n0_x.nu, ker_id_x);
    auto s_x = cat.factor_through_kernel(
        ker_id_x.embed, cat.whisker(cat.identity(ker_id_x.object), ker_id_x.nu, g), ker_g);
    auto nu_x_g = cat.strong_factor(s_x, ker_id_x.nu, ker_g);
    require(cat.null_equal(cat.whisker(cat.identity(ker_id_x.object), nu_x_g, ker_g.embed),
                           ker_id_x.nu),
            "nu_{X,g} o n_g must give nu_{id_X}");
    auto r_x = cat.factor_through_kernel(s_x, nu_x_g, ker_id_ng);
    require(cat.mor_equal(cat.compose(n_of_g, delta_cap),
                          cat.compose(t_x, cat.compose(r_x, ker_id_ng.embed))),
            "n(g) . Delta must factor through N(id_{N(g)})");
    require(cat.is_zero_mor(cat.compose(n_of_g, delta)), "n(g) . delta must vanish");

    // Step 5.
    require(cat.is_zero_mor(cat.compose(delta, pi0_of_ng)), "delta . pi0(n_g) must vanish");

    return SnailResult<Cat>{g,       ker_g,    n0_ng,    n0_x,     n0_y,     pi0_ng,
                            pi0_x,   pi0_y,    n_of_ng,  n_of_g,   c_of_ng,  c_of_g,
                            pi0_of_ng, pi0_of_g, delta_cap, delta,  ker_id_x, ker_id_ng,
                            t_x,     s_x,      r_x,      nu_x_g,   null_step1};
}

/// Delta : N(0_Y) -> N(g) is a kernel of n_g in the plain categorical
/// sense: mono, killed by n_g, and every test cone with a . n_g = 0
/// factors through it (uniquely, since Delta is mono).
template <HomotopyCategory Cat>
bool delta_is_categorical_kernel(const Cat& cat, const SnailResult<Cat>& res,
                                 std::span<const typename Cat::Mor> test_cones)
{
    if (!cat.is_zero_mor(cat.compose(res.delta_cap, res.ker_g.embed))) return false;
    if (!cat.is_mono(res.delta_cap)) return false;
    for (const auto& a : test_cones) {
        if (!cat.is_zero_mor(cat.compose(a, res.ker_g.embed)))
            throw std::invalid_argument("test cone is not killed by n_g");
        auto phi = cat.whisker(a, res.ker_g.nu, cat.identity(cat.cod(res.g)));
        auto b = cat.factor_through_kernel(cat.terminal(cat.dom(a)), phi, res.n0_y);
        if (!cat.mor_equal(cat.compose(b, res.delta_cap), a)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------
// S-exactness
// ---------------------------------------------------------------------

struct SExactEntry {
    std::string point;
    bool composite_zero = false;
    bool sigma_in_s = false;
    bool categorical_route_agrees = true; // when the codomain is discrete
    bool exact() const { return composite_zero && sigma_in_s && categorical_route_agrees; }
};

/// S-exactness of (f, phi, g): the factorization of (f, phi) through
/// the Theta-kernel of g lies in S. When cod(g) is discrete the
/// factorization through the plain categorical kernel must agree.
template <HomotopyCategory Cat>
SExactEntry check_s_exact(const Cat& cat, const typename Cat::Mor& f,
                          const typename Cat::Null& phi, const typename Cat::Mor& g,
                          std::string point = {})
{
    SExactEntry e;
    e.point = std::move(point);
    e.composite_zero = cat.is_zero_mor(cat.compose(f, g));
    auto ker = cat.theta_kernel(g);
    auto sigma = cat.factor_through_kernel(f, phi, ker);
    e.sigma_in_s = cat.in_S(sigma);
    if (cat.is_discrete(cat.cod(g))) {
        auto [kobj, kembed] = cat.categorical_kernel(g);
        auto sigma2 = cat.lift_through(f, kembed);
        e.categorical_route_agrees = (cat.in_S(sigma2) == e.sigma_in_s);
    }
    return e;
}

/// The comparison N(id_Y) -> N(eta_Y) lies in S.
template <HomotopyCategory Cat>
bool check_s_proper(const Cat& cat, const typename Cat::Obj& y)
{
    auto pi0 = build_pi0(cat, y);
    auto ker_id = cat.theta_kernel(cat.identity(y));
    auto ker_eta = cat.theta_kernel(pi0.eta);
    auto ybar = cat.factor_through_kernel(
        ker_id.embed, cat.whisker(cat.identity(ker_id.object), ker_id.nu, pi0.eta), ker_eta);
    return cat.in_S(ybar);
}

template <HomotopyCategory Cat>
bool check_s_global(const Cat& cat, const typename Cat::Obj& y)
{
    return cat.in_S(build_pi0(cat, y).eta);
}

struct ExactnessReport {
    bool hyp_y_proper = false, hyp_ng_proper = false, hyp_x_global = false;
    bool hyp_x_proper = false, hyp_ng_global = false;
    std::vector<SExactEntry> entries; // N(0_X), N(0_Y), pi0(N(g)), pi0(X)
    bool all_exact() const
    {
        for (const auto& e : entries)
            if (!e.exact()) return false;
        return !entries.empty();
    }
};

/// The four middle checkpoints of the snail sequence.
template <HomotopyCategory Cat>
ExactnessReport verify_snail_exactness(const Cat& cat, const SnailResult<Cat>& res)
{
    ExactnessReport rep;
    auto X = cat.dom(res.g);
    auto Y = cat.cod(res.g);
    rep.hyp_y_proper = check_s_proper(cat, Y);
    rep.hyp_ng_proper = check_s_proper(cat, res.ker_g.object);
    rep.hyp_x_global = check_s_global(cat, X);
    rep.hyp_x_proper = check_s_proper(cat, X);
    rep.hyp_ng_global = check_s_global(cat, res.ker_g.object);

    rep.entries.push_back(
        check_s_exact(cat, res.n_of_ng, res.null_step1, res.n_of_g, "N(0_X)"));

    auto null_ng_delta = cat.whisker(cat.compose(res.t_x, res.r_x), res.ker_id_ng.nu,
                                     res.pi0_ng.eta);
    rep.entries.push_back(check_s_exact(cat, res.n_of_g, null_ng_delta, res.delta, "N(0_Y)"));

    rep.entries.push_back(check_s_exact(cat, res.delta,
                                        cat.star(res.n0_y.object, res.pi0_x.pi0),
                                        res.pi0_of_ng, "pi0(N(g))"));

    rep.entries.push_back(check_s_exact(cat, res.pi0_of_ng,
                                        cat.star(res.pi0_ng.pi0, res.pi0_y.pi0),
                                        res.pi0_of_g, "pi0(X)"));
    return rep;
}

} // namespace snailhom
