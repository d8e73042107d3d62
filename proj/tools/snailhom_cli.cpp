// Command-line front end: homology, snail sequences, long sequences,
// comparison against the snake-lemma construction, verification suites
// and fuzz campaigns over JSON documents.

#include <CLI11.hpp>

#include "snailhom/genrand.hpp"
#include "snailhom/io.hpp"
#include "snailhom/longseq.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

using namespace snailhom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int thread_count()
{
    if (const char* env = std::getenv("SNAILHOM_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

/// Evaluates fn(i) for i in [0, count) on the configured number of
/// threads; results land in index order regardless of schedule.
template <class Fn>
std::vector<std::pair<bool, std::string>> parallel_map(int count, Fn fn)
{
    std::vector<std::pair<bool, std::string>> out(count);
    int threads = std::min(thread_count(), std::max(count, 1));
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            out[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

Ring parse_ring_flag(const std::string& s)
{
    if (s == "Z") return Ring::integers();
    if (s == "Q") return Ring::rationals();
    if (s.rfind("Fp:", 0) == 0) return Ring::prime_field(std::atoll(s.c_str() + 3));
    throw ParseError("--ring", "expected Z, Q or Fp:<p>");
}

struct Report {
    Json j = Json::object();
    bool ok = true;
    std::ostringstream text;

    void checkpoint(const std::string& name, bool pass, const std::string& detail = {})
    {
        ok = ok && pass;
        text << "  " << name << ": " << (pass ? "ok" : "FAIL");
        if (!detail.empty()) text << "  (" << detail << ")";
        text << "\n";
        Json entry{{"name", name}, {"pass", pass}};
        if (!detail.empty()) entry["detail"] = detail;
        if (!j.contains("checkpoints")) j["checkpoints"] = Json::array();
        j["checkpoints"].push_back(std::move(entry));
    }

    void line(const std::string& s)
    {
        text << s << "\n";
    }

    int finish(bool json, const std::string& command)
    {
        j["command"] = command;
        j["ok"] = ok;
        if (json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text.str() << (ok ? "result: pass" : "result: FAIL") << "\n";
        return ok ? kExitOk : kExitCheckFailed;
    }
};

// ---------------------------------------------------------------------
// homology
// ---------------------------------------------------------------------

int cmd_homology(const std::string& file, std::optional<int> degree, bool json)
{
    Document doc = parse_document(read_input(file));
    if (doc.kind != Document::Kind::Complex)
        throw ParseError("$", "homology expects a complex document");
    const auto& c = std::get<Complex>(doc.payload);
    Report rep;
    Json hs = Json::object();
    int lo = degree ? *degree : c.lo(), hi = degree ? *degree : c.hi();
    for (int n = lo; n <= hi; ++n) {
        FpModule h = homology(c, n);
        rep.line("H_" + std::to_string(n) + " = " + h.describe());
        hs[std::to_string(n)] = h.describe();
    }
    rep.j["homology"] = std::move(hs);
    return rep.finish(json, "homology");
}

// ---------------------------------------------------------------------
// snail
// ---------------------------------------------------------------------

int cmd_snail(const std::string& file, bool json)
{
    Document doc = parse_document(read_input(file));
    Report rep;
    if (doc.kind == Document::Kind::ArrowMorphism) {
        ArrCat cat(doc.ring);
        const auto& m = std::get<ArrMor>(doc.payload);
        SnailResult<ArrCat> res = build_snail(cat, m);

        const char* names[6] = {"N(0_N(g))", "N(0_X)", "N(0_Y)",
                                "pi0(N(g))", "pi0(X)", "pi0(Y)"};
        const FpModule mods[6] = {res.n0_ng.object.bottom, res.n0_x.object.bottom,
                                  res.n0_y.object.bottom,  res.pi0_ng.pi0.bottom,
                                  res.pi0_x.pi0.bottom,    res.pi0_y.pi0.bottom};
        Json objs = Json::object();
        rep.line("snail sequence:");
        for (int i = 0; i < 6; ++i) {
            rep.line(std::string("  ") + names[i] + " = " + mods[i].describe());
            objs[names[i]] = mods[i].describe();
        }
        rep.j["objects"] = std::move(objs);
        rep.line("delta = " + res.delta.bottom.matrix().to_string());
        rep.checkpoint("matches explicit sequence", snail_matches_generic(cat, m));
        ExactnessReport ex = verify_snail_exactness(cat, res);
        for (const auto& e : ex.entries) rep.checkpoint("exact at " + e.point, e.exact());
        return rep.finish(json, "snail");
    }
    if (doc.kind == Document::Kind::SeqMorphism) {
        SeqCat cat(doc.ring);
        const auto& m = std::get<SeqMor>(doc.payload);
        SnailResult<SeqCat> res = build_snail(cat, m);
        ExactnessReport ex = verify_snail_exactness(cat, res);
        for (const auto& e : ex.entries) rep.checkpoint("exact at " + e.point, e.exact());
        return rep.finish(json, "snail");
    }
    throw ParseError("$", "snail expects an arrow_morphism or seq_morphism document");
}

// ---------------------------------------------------------------------
// longseq
// ---------------------------------------------------------------------

void print_long_sequence(Report& rep, const LongSeq& seq)
{
    Json rows = Json::array();
    for (const auto& row : seq.rows) {
        bool all_zero = true;
        for (const auto& m : row.objects) all_zero = all_zero && m.is_zero_module();
        if (all_zero) continue;
        std::ostringstream os;
        os << "degree " << row.degree << ": ";
        const char* shapes[6] = {"Ker(h^P)", "Ker(h)", "Ker(h')", "Cok(h^P)", "Cok(h)", "Cok(h')"};
        Json jrow{{"degree", row.degree}};
        for (int i = 0; i < 6; ++i) {
            os << shapes[i] << " = " << row.objects[i].describe() << (i < 5 ? ", " : "");
            jrow[shapes[i]] = row.objects[i].describe();
        }
        rep.line(os.str());
        rows.push_back(std::move(jrow));
    }
    rep.j["rows"] = std::move(rows);
    if (seq.spliced) {
        std::ostringstream os;
        os << "chain: 0";
        for (size_t i = 1; i + 1 < seq.chain.objects.size(); ++i)
            os << " -> " << seq.chain.labels[i] << " [" << seq.chain.objects[i].describe() << "]";
        os << " -> 0";
        rep.line(os.str());
    }
    rep.checkpoint("rows exact", seq.rows_exact);
    if (seq.spliced) rep.checkpoint("pasted chain exact", seq.chain_exact);
}

int cmd_longseq(const std::string& file, bool json)
{
    Document doc = parse_document(read_input(file));
    Report rep;
    if (doc.kind == Document::Kind::ComplexMorphism) {
        SeqCat cat(doc.ring);
        LongHomologySeq les = long_homology_sequence(cat, std::get<ChainMor>(doc.payload));
        rep.checkpoint("hypotheses (proper complexes, proper kernel family)", les.hypotheses_ok);
        rep.checkpoint("homology objects identified", les.homology_identified);
        print_long_sequence(rep, les.seq);
        return rep.finish(json, "longseq");
    }
    if (doc.kind == Document::Kind::SeqMorphism) {
        SeqCat cat(doc.ring);
        LongSeq seq = unroll_long_sequence(cat, std::get<SeqMor>(doc.payload));
        print_long_sequence(rep, seq);
        return rep.finish(json, "longseq");
    }
    throw ParseError("$", "longseq expects a complex_morphism or seq_morphism document");
}

// ---------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------

int cmd_compare(const std::string& file, bool json)
{
    Document doc = parse_document(read_input(file));
    if (doc.kind != Document::Kind::Ext)
        throw ParseError("$", "compare expects an extension document");
    SeqCat cat(doc.ring);
    Report rep;
    SnailComparison cmp = compare_with_snail(cat, std::get<Extension>(doc.payload));
    print_long_sequence(rep, cmp.paper_side.seq);
    rep.checkpoint("classical sequence exact", cmp.classical_side.exact);
    rep.checkpoint("sigma is a quasi-isomorphism", cmp.sigma_quasi_iso);
    rep.checkpoint("sequences isomorphic degree-wise", cmp.degreewise_iso,
                   cmp.failures.empty() ? "" : cmp.failures.front());
    return rep.finish(json, "compare");
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

struct VerifyContext {
    Ring ring;
    GenConfig cfg;
    Rng rng;
    Report& rep;
};

bool wants(const std::vector<std::string>& checks, const std::string& name)
{
    if (checks.empty()) return true;
    for (const auto& c : checks)
        if (c == name) return true;
    return false;
}

void verify_interchange_arr(VerifyContext& vc, const ArrObj& a, const ArrObj& b, const ArrObj& c)
{
    ArrCat cat(vc.ring);
    bool ok = true;
    for (int it = 0; it < 20 && ok; ++it) {
        ArrNullPair fp = gen_arr_null_pair(vc.rng, vc.cfg, a, b);
        ArrNullPair gp = gen_arr_null_pair(vc.rng, vc.cfg, b, c);
        ok = cat.null_equal(cat.whisker(cat.identity(a), fp.null, gp.mor),
                            cat.whisker(fp.mor, gp.null, cat.identity(c)));
    }
    vc.rep.checkpoint("interchange", ok);
}

int cmd_verify(const std::string& file, const std::vector<std::string>& checks,
               std::uint64_t seed, bool json)
{
    Document doc = parse_document(read_input(file));
    Report rep;
    GenConfig cfg;
    cfg.ring = doc.ring;
    VerifyContext vc{doc.ring, cfg, Rng(seed), rep};

    switch (doc.kind) {
    case Document::Kind::ArrowMorphism: {
        ArrCat cat(doc.ring);
        const auto& m = std::get<ArrMor>(doc.payload);
        if (wants(checks, "interchange")) verify_interchange_arr(vc, m.src, m.dst, m.src);
        if (wants(checks, "discreteness")) {
            SnailResult<ArrCat> res = build_snail(cat, m);
            bool ok = cat.is_discrete(res.n0_y.object) && cat.is_discrete(res.pi0_y.pi0) &&
                      cat.is_discrete(res.n0_x.object) && cat.is_discrete(res.pi0_ng.pi0);
            rep.checkpoint("discreteness", ok);
        }
        if (wants(checks, "universal")) {
            auto ker = cat.theta_kernel(m);
            bool ok = true;
            for (int it = 0; it < 10 && ok; ++it) {
                ArrCone cone = gen_arr_cone(vc.rng, cfg, cat, ker);
                ArrMor u = cat.factor_through_kernel(cone.f, cone.phi, ker);
                ok = cat.mor_equal(u, cone.into_kernel);
            }
            rep.checkpoint("universal", ok);
        }
        if (wants(checks, "exactness")) {
            SnailResult<ArrCat> res = build_snail(cat, m);
            rep.checkpoint("exactness", verify_snail_exactness(cat, res).all_exact());
        }
        if (wants(checks, "delta-kernel")) {
            SnailResult<ArrCat> res = build_snail(cat, m);
            auto [kobj, kembed] = cat.categorical_kernel(res.ker_g.embed);
            std::vector<ArrMor> cones;
            for (int i = 0; i < 4; ++i) {
                ArrObj a = gen_arr_object(vc.rng, cfg);
                cones.push_back(
                    cat.compose(gen_arr_morphism_between(vc.rng, cfg, a, kobj), kembed));
            }
            rep.checkpoint("delta-kernel", delta_is_categorical_kernel(cat, res, cones));
        }
        break;
    }
    case Document::Kind::SeqMorphism: {
        SeqCat cat(doc.ring);
        const auto& m = std::get<SeqMor>(doc.payload);
        if (wants(checks, "interchange")) {
            bool ok = true;
            for (int it = 0; it < 10 && ok; ++it) {
                SeqNullPair fp = gen_seq_null_pair(vc.rng, cfg, m.source(), m.target());
                SeqNullPair gp = gen_seq_null_pair(vc.rng, cfg, m.target(), m.source());
                ok = cat.null_equal(
                    cat.whisker(cat.identity(m.source()), fp.null, gp.mor),
                    cat.whisker(fp.mor, gp.null, cat.identity(m.source())));
            }
            rep.checkpoint("interchange", ok);
        }
        if (wants(checks, "universal")) {
            auto ker = cat.theta_kernel(m);
            bool ok = true;
            for (int it = 0; it < 5 && ok; ++it) {
                SeqCone cone = gen_seq_cone(vc.rng, cfg, cat, ker);
                SeqMor u = cat.factor_through_kernel(cone.f, cone.phi, ker);
                ok = cat.mor_equal(u, cone.into_kernel);
            }
            rep.checkpoint("universal", ok);
        }
        if (wants(checks, "exactness")) {
            LongSeq seq = unroll_long_sequence(cat, m);
            rep.checkpoint("exactness", seq.rows_exact && (!seq.spliced || seq.chain_exact));
        }
        if (wants(checks, "partkh")) {
            bool ok = special_cases_match_generic(cat, m.source()) &&
                      special_cases_match_generic(cat, m.target());
            rep.checkpoint("partkh", ok);
        }
        break;
    }
    case Document::Kind::Complex: {
        const auto& c = std::get<Complex>(doc.payload);
        if (wants(checks, "functor-f")) {
            SeqFamily f = functor_F(c);
            bool ok = is_isoseq(f);
            for (int n = c.lo() - 1; n <= c.hi() + 1 && ok; ++n) {
                FpModule h = homology(c, n);
                ok = modules_isomorphic(h, f.level_kernel(n).module) &&
                     modules_isomorphic(h, f.level_cok(n + 1).module);
            }
            rep.checkpoint("functor-f", ok);
        }
        if (wants(checks, "partkh")) {
            SeqCat cat(doc.ring);
            rep.checkpoint("partkh", special_cases_match_generic(cat, functor_F(c)));
        }
        break;
    }
    case Document::Kind::ComplexMorphism: {
        SeqCat cat(doc.ring);
        const auto& g = std::get<ChainMor>(doc.payload);
        if (wants(checks, "functor-f")) {
            SeqMor fg = functor_F_on_morphism(g);
            bool ok = cat.mor_equal(functor_F_on_morphism(chain_identity(g.source())),
                                    cat.identity(fg.source()));
            rep.checkpoint("functor-f", ok);
        }
        if (wants(checks, "exactness")) {
            LongHomologySeq les = long_homology_sequence(cat, g);
            rep.checkpoint("exactness", les.seq.rows_exact && les.seq.chain_exact);
        }
        break;
    }
    case Document::Kind::Ext: {
        SeqCat cat(doc.ring);
        const auto& e = std::get<Extension>(doc.payload);
        if (wants(checks, "exactness")) {
            SnailComparison cmp = compare_with_snail(cat, e);
            rep.checkpoint("exactness", cmp.classical_side.exact && cmp.degreewise_iso &&
                                            cmp.sigma_quasi_iso);
        }
        break;
    }
    case Document::Kind::SeqFamilyDoc: {
        SeqCat cat(doc.ring);
        const auto& f = std::get<SeqFamily>(doc.payload);
        if (wants(checks, "partkh")) rep.checkpoint("partkh", special_cases_match_generic(cat, f));
        if (wants(checks, "discreteness")) {
            auto pi0 = build_pi0(cat, f);
            rep.checkpoint("discreteness", cat.is_discrete(pi0.pi0));
        }
        if (wants(checks, "isoseq")) rep.checkpoint("isoseq", is_isoseq(f));
        break;
    }
    }
    if (rep.j.value("checkpoints", Json::array()).empty())
        rep.checkpoint("no applicable checks", true);
    return rep.finish(json, "verify");
}

// ---------------------------------------------------------------------
// fuzz
// ---------------------------------------------------------------------

std::pair<bool, std::string> fuzz_instance(Ring ring, std::uint64_t seed, int index,
                                           const std::vector<std::string>& checks,
                                           const GenConfig& base)
{
    GenConfig cfg = base;
    cfg.ring = ring;
    Rng rng(seed + 0x9e3779b97f4a7c15ull * (index + 1));
    try {
        if (wants(checks, "snail")) {
            ArrCat cat(ring);
            ArrMor m = gen_arr_morphism(rng, cfg);
            if (!snail_matches_generic(cat, m)) return {false, "snail mismatch"};
            SnailResult<ArrCat> res = build_snail(cat, m);
            if (!verify_snail_exactness(cat, res).all_exact())
                return {false, "snail exactness failed"};
        }
        if (wants(checks, "longseq")) {
            SeqCat cat(ring);
            SeqFamily h = gen_isoseq_family(rng, cfg);
            SeqFamily hp = gen_isoseq_family(rng, cfg);
            SeqMor f = gen_seq_morphism_between(rng, cfg, h, hp);
            LongSeq seq = unroll_long_sequence(cat, f);
            if (!seq.rows_exact || !seq.chain_exact) return {false, "long sequence not exact"};
        }
        if (wants(checks, "compare")) {
            SeqCat cat(ring);
            Extension e = gen_extension(rng, cfg);
            SnailComparison cmp = compare_with_snail(cat, e);
            if (!cmp.degreewise_iso || !cmp.sigma_quasi_iso)
                return {false, cmp.failures.empty() ? "comparison failed" : cmp.failures.front()};
        }
        if (wants(checks, "interchange")) {
            ArrCat cat(ring);
            ArrObj a = gen_arr_object(rng, cfg), b = gen_arr_object(rng, cfg),
                   c = gen_arr_object(rng, cfg);
            ArrNullPair fp = gen_arr_null_pair(rng, cfg, a, b);
            ArrNullPair gp = gen_arr_null_pair(rng, cfg, b, c);
            if (!cat.null_equal(cat.whisker(cat.identity(a), fp.null, gp.mor),
                                cat.whisker(fp.mor, gp.null, cat.identity(c))))
                return {false, "interchange failed"};
        }
        return {true, ""};
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
}

int cmd_fuzz(std::uint64_t seed, int count, const std::string& ring_flag, int max_rank,
             int support, const std::vector<std::string>& checks, bool json)
{
    Ring ring = parse_ring_flag(ring_flag);
    GenConfig cfg;
    cfg.max_generators = max_rank;
    cfg.support_width = support;
    auto results = parallel_map(count, [&](int i) {
        return fuzz_instance(ring, seed, i, checks, cfg);
    });
    int pass = 0;
    Json failures = Json::array();
    std::ostringstream fails;
    for (int i = 0; i < count; ++i) {
        if (results[i].first) {
            ++pass;
        } else {
            fails << "  instance " << i << ": " << results[i].second << "\n";
            failures.push_back(Json{{"instance", i}, {"reason", results[i].second}});
        }
    }
    bool ok = pass == count;
    if (json) {
        Json j{{"command", "fuzz"}, {"ok", ok},       {"pass", pass},
               {"count", count},    {"seed", seed},   {"ring", ring.name()},
               {"failures", failures}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << fails.str() << "summary: " << pass << "/" << count << " pass\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"computational engine for six-term and long exact sequences "
                 "of finitely presented modules"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;
    std::optional<int> degree;
    std::vector<std::string> checks;
    std::uint64_t seed = 1;
    int count = 100;
    std::string ring_flag = "Z";
    int max_rank = 3;
    int support = 3;

    auto add_common = [&](CLI::App* sub, bool with_file = true) {
        if (with_file) sub->add_option("file", file, "document path, or - for stdin")->required();
        sub->add_flag("--json,-j", json, "machine-readable report");
    };

    CLI::App* hom = app.add_subcommand("homology", "homology of a complex document");
    add_common(hom);
    hom->add_option("--degree,-n", degree, "single degree instead of the whole window");

    add_common(app.add_subcommand("snail", "six-term snail sequence of a morphism"));
    add_common(app.add_subcommand("longseq", "pasted long sequence of a morphism"));
    add_common(app.add_subcommand("compare",
                                  "compare the snail-derived and snake-derived sequences"));

    CLI::App* verify = app.add_subcommand("verify", "run verification suites on a document");
    add_common(verify);
    verify->add_option("--checks", checks,
                       "comma-separated: exactness,universal,interchange,discreteness,"
                       "delta-kernel,partkh,functor-f,isoseq")
        ->delimiter(',');
    verify->add_option("--seed", seed, "seed for sampled checks");

    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized campaign");
    add_common(fuzz, false);
    fuzz->add_option("--seed", seed, "base seed");
    fuzz->add_option("--count", count, "number of instances");
    fuzz->add_option("--ring", ring_flag, "Z, Q or Fp:<p>");
    fuzz->add_option("--max-rank", max_rank, "generator bound for random modules");
    fuzz->add_option("--support", support, "support width for complexes and families");
    fuzz->add_option("--checks", checks, "comma-separated: snail,longseq,compare,interchange")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("homology")) return cmd_homology(file, degree, json);
        if (app.got_subcommand("snail")) return cmd_snail(file, json);
        if (app.got_subcommand("longseq")) return cmd_longseq(file, json);
        if (app.got_subcommand("compare")) return cmd_compare(file, json);
        if (app.got_subcommand("verify")) return cmd_verify(file, checks, seed, json);
        if (app.got_subcommand("fuzz"))
            return cmd_fuzz(seed, count, ring_flag, max_rank, support, checks, json);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInputError;
}
