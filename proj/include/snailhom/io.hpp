#pragma once

#include "snailhom/classical.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace snailhom {

using Json = nlohmann::json;

/// Schema violations carry the JSON path of the offending node.
struct ParseError : std::runtime_error {
    ParseError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what)
    {
    }
};

struct Document {
    enum class Kind { Complex, ComplexMorphism, ArrowMorphism, SeqFamilyDoc, SeqMorphism, Ext };
    Ring ring;
    Kind kind;
    std::variant<snailhom::Complex, ChainMor, ArrMor, SeqFamily, SeqMor, Extension> payload;
};

namespace io_detail {

inline Rat parse_scalar(const Json& j, const std::string& path)
{
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(Int(s));
            return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw ParseError(path, "malformed scalar '" + s + "'");
        }
    }
    throw ParseError(path, "expected an integer or a 'p/q' string");
}

inline ExactMatrix parse_matrix(const Json& j, Ring ring, int rows, int cols,
                                const std::string& path)
{
    if (!j.is_array()) throw ParseError(path, "expected a matrix (list of rows)");
    if (static_cast<int>(j.size()) != rows)
        throw ParseError(path, "expected " + std::to_string(rows) + " rows, found " +
                                   std::to_string(j.size()));
    ExactMatrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError(path + "[" + std::to_string(i) + "]",
                             "expected a row of " + std::to_string(cols) + " entries");
        for (int k = 0; k < cols; ++k)
            m.set(i, k, parse_scalar(row[k], path + "[" + std::to_string(i) + "][" +
                                                 std::to_string(k) + "]"));
    }
    return m;
}

/// Free-form matrix whose dimensions come from the data itself.
inline ExactMatrix parse_matrix_any(const Json& j, Ring ring, const std::string& path)
{
    if (!j.is_array()) throw ParseError(path, "expected a matrix (list of rows)");
    int rows = static_cast<int>(j.size());
    int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
    return parse_matrix(j, ring, rows, cols, path);
}

inline Json scalar_to_json(const Rat& v)
{
    Int num = boost::multiprecision::numerator(v);
    Int den = boost::multiprecision::denominator(v);
    if (den == 1 && num >= Int(-(1ll << 53)) && num <= Int(1ll << 53))
        return Json(static_cast<std::int64_t>(num));
    std::ostringstream os;
    os << v;
    return Json(os.str());
}

inline Json matrix_to_json(const ExactMatrix& m)
{
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Ring parse_ring(const Json& j, const std::string& path)
{
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "Z") return Ring::integers();
        if (s == "Q") return Ring::rationals();
        throw ParseError(path, "unknown ring '" + s + "'");
    }
    if (j.is_object() && j.contains("Fp")) {
        if (!j["Fp"].is_number_integer()) throw ParseError(path + ".Fp", "expected a prime");
        try {
            return Ring::prime_field(j["Fp"].get<std::int64_t>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(path + ".Fp", e.what());
        }
    }
    throw ParseError(path, "expected \"Z\", \"Q\" or {\"Fp\": p}");
}

inline Json ring_to_json(const Ring& r)
{
    switch (r.tag()) {
    case Ring::Tag::Integers: return Json("Z");
    case Ring::Tag::Rationals: return Json("Q");
    case Ring::Tag::PrimeField: return Json{{"Fp", r.characteristic()}};
    }
    throw std::logic_error("unreachable");
}

/// Module: a free rank as a plain integer, or
/// {"generators": g, "relations": [[..]]}.
inline FpModule parse_module(const Json& j, Ring ring, const std::string& path)
{
    if (j.is_number_integer()) {
        int g = j.get<int>();
        if (g < 0) throw ParseError(path, "negative rank");
        return FpModule(ring, g);
    }
    if (!j.is_object() || !j.contains("generators"))
        throw ParseError(path, "expected a rank or {generators, relations}");
    int g = j["generators"].get<int>();
    if (g < 0) throw ParseError(path + ".generators", "negative generator count");
    if (!j.contains("relations")) return FpModule(ring, g);
    const Json& rel = j["relations"];
    if (!rel.is_array()) throw ParseError(path + ".relations", "expected a matrix");
    return FpModule(ring, g,
                    parse_matrix(rel, ring, static_cast<int>(rel.size()), g, path + ".relations"));
}

inline Json module_to_json(const FpModule& m)
{
    if (m.relations().rows() == 0) return Json(m.gens());
    return Json{{"generators", m.gens()}, {"relations", matrix_to_json(m.relations())}};
}

inline std::pair<int, int> parse_support(const Json& j, const std::string& path)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError(path, "expected [lo, hi]");
    return {j[0].get<int>(), j[1].get<int>()};
}

inline const Json* degree_entry(const Json& obj, int n)
{
    auto it = obj.find(std::to_string(n));
    return it == obj.end() ? nullptr : &*it;
}

inline snailhom::Complex parse_complex(const Json& j, Ring ring, const std::string& path)
{
    if (!j.is_object() || !j.contains("support")) throw ParseError(path, "expected a complex");
    auto [lo, hi] = parse_support(j["support"], path + ".support");
    if (hi < lo) return snailhom::Complex::zero(ring);

    const Json empty = Json::object();
    const Json& mods = j.contains("modules") ? j["modules"] : empty;
    const Json& ranks = j.contains("ranks") ? j["ranks"] : empty;
    const Json& diffs = j.contains("differentials") ? j["differentials"] : empty;

    // generator counts: explicit module, explicit rank, or inferred from
    // the differentials (rows of d_n / columns of d_{n+1})
    std::vector<int> gens(hi - lo + 1, -1);
    for (int n = lo; n <= hi; ++n) {
        if (const Json* m = degree_entry(mods, n)) {
            gens[n - lo] = m->is_number_integer()
                               ? m->get<int>()
                               : (m->contains("generators")
                                      ? (*m)["generators"].get<int>()
                                      : throw ParseError(path + ".modules." + std::to_string(n),
                                                         "expected generators"));
        } else if (const Json* r = degree_entry(ranks, n)) {
            gens[n - lo] = r->get<int>();
        }
    }
    for (int n = lo; n <= hi; ++n) {
        if (gens[n - lo] >= 0) continue;
        if (const Json* d = degree_entry(diffs, n)) gens[n - lo] = static_cast<int>(d->size());
        else if (const Json* d2 = degree_entry(diffs, n + 1))
            gens[n - lo] = d2->empty() ? 0 : static_cast<int>((*d2)[0].size());
        else gens[n - lo] = 0;
    }

    std::vector<FpModule> modules;
    for (int n = lo; n <= hi; ++n) {
        if (const Json* m = degree_entry(mods, n))
            modules.push_back(parse_module(*m, ring, path + ".modules." + std::to_string(n)));
        else
            modules.push_back(FpModule(ring, gens[n - lo]));
    }

    std::vector<ModMap> dmaps;
    for (int n = lo + 1; n <= hi; ++n) {
        const std::string dpath = path + ".differentials." + std::to_string(n);
        ExactMatrix mat(ring, modules[n - lo].gens(), modules[n - lo - 1].gens());
        if (const Json* d = degree_entry(diffs, n))
            mat = parse_matrix(*d, ring, modules[n - lo].gens(), modules[n - lo - 1].gens(), dpath);
        try {
            dmaps.push_back(ModMap(modules[n - lo], modules[n - lo - 1], mat));
        } catch (const std::invalid_argument& e) {
            throw ParseError(dpath, e.what());
        }
    }
    try {
        return snailhom::Complex(ring, lo, std::move(modules), std::move(dmaps));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

inline Json complex_to_json(const snailhom::Complex& c)
{
    Json out{{"support", Json::array({c.lo(), c.hi()})}};
    Json mods = Json::object(), diffs = Json::object();
    for (int n = c.lo(); n <= c.hi(); ++n) {
        mods[std::to_string(n)] = module_to_json(c.module(n));
        if (n > c.lo()) diffs[std::to_string(n)] = matrix_to_json(c.diff(n).matrix());
    }
    out["modules"] = std::move(mods);
    out["differentials"] = std::move(diffs);
    return out;
}

inline ChainMor parse_complex_morphism(const Json& j, Ring ring, const std::string& path)
{
    if (!j.contains("source") || !j.contains("target"))
        throw ParseError(path, "expected source and target complexes");
    snailhom::Complex b = parse_complex(j["source"], ring, path + ".source");
    snailhom::Complex c = parse_complex(j["target"], ring, path + ".target");
    int lo = std::min(b.lo(), c.lo()), hi = std::max(b.hi(), c.hi());
    const Json empty = Json::object();
    const Json& maps = j.contains("maps") ? j["maps"] : empty;
    std::vector<ModMap> gmaps;
    for (int n = lo; n <= hi; ++n) {
        const std::string mpath = path + ".maps." + std::to_string(n);
        ExactMatrix mat(ring, b.module(n).gens(), c.module(n).gens());
        if (const Json* m = degree_entry(maps, n))
            mat = parse_matrix(*m, ring, b.module(n).gens(), c.module(n).gens(), mpath);
        try {
            gmaps.push_back(ModMap(b.module(n), c.module(n), mat));
        } catch (const std::invalid_argument& e) {
            throw ParseError(mpath, e.what());
        }
    }
    try {
        if (lo > hi) return chain_zero_mor(b, c);
        return ChainMor(b, c, lo, std::move(gmaps));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

inline Json complex_morphism_to_json(const ChainMor& g)
{
    Json maps = Json::object();
    for (int n = std::min(g.source().lo(), g.target().lo());
         n <= std::max(g.source().hi(), g.target().hi()); ++n)
        maps[std::to_string(n)] = matrix_to_json(g.map(n).matrix());
    return Json{{"source", complex_to_json(g.source())},
                {"target", complex_to_json(g.target())},
                {"maps", std::move(maps)}};
}

inline ArrObj parse_arrow_object(const Json& j, Ring ring, const std::string& path)
{
    if (!j.is_object() || !j.contains("top") || !j.contains("bottom"))
        throw ParseError(path, "expected {top, bottom, matrix}");
    FpModule top = parse_module(j["top"], ring, path + ".top");
    FpModule bot = parse_module(j["bottom"], ring, path + ".bottom");
    ExactMatrix mat(ring, top.gens(), bot.gens());
    if (j.contains("matrix"))
        mat = parse_matrix(j["matrix"], ring, top.gens(), bot.gens(), path + ".matrix");
    try {
        return ArrObj(top, bot, ModMap(top, bot, mat));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

inline Json arrow_object_to_json(const ArrObj& o)
{
    return Json{{"top", module_to_json(o.top)},
                {"bottom", module_to_json(o.bottom)},
                {"matrix", matrix_to_json(o.arrow.matrix())}};
}

inline ArrMor parse_arrow_morphism(const Json& j, Ring ring, const std::string& path)
{
    if (!j.contains("source") || !j.contains("target"))
        throw ParseError(path, "expected source and target arrow objects");
    ArrObj src = parse_arrow_object(j["source"], ring, path + ".source");
    ArrObj dst = parse_arrow_object(j["target"], ring, path + ".target");
    ExactMatrix tm(ring, src.top.gens(), dst.top.gens());
    ExactMatrix bm(ring, src.bottom.gens(), dst.bottom.gens());
    if (j.contains("top_map"))
        tm = parse_matrix(j["top_map"], ring, src.top.gens(), dst.top.gens(), path + ".top_map");
    if (j.contains("bottom_map"))
        bm = parse_matrix(j["bottom_map"], ring, src.bottom.gens(), dst.bottom.gens(),
                          path + ".bottom_map");
    try {
        return ArrMor(src, dst, ModMap(src.top, dst.top, tm), ModMap(src.bottom, dst.bottom, bm));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

inline Json arrow_morphism_to_json(const ArrMor& m)
{
    return Json{{"source", arrow_object_to_json(m.src)},
                {"target", arrow_object_to_json(m.dst)},
                {"top_map", matrix_to_json(m.top.matrix())},
                {"bottom_map", matrix_to_json(m.bottom.matrix())}};
}

/// Connectors are supplied as composites into the ambient module:
/// the matrix of i_n . k_n from the generators of Cod(h_{n+1}) to the
/// generators of Dom(h_n). Ingestion re-bases them onto the computed
/// kernel presentation by lifting through the embedding.
inline SeqFamily parse_seq_family(const Json& j, Ring ring, const std::string& path)
{
    if (!j.is_object() || !j.contains("support")) throw ParseError(path, "expected a family");
    auto [lo, hi] = parse_support(j["support"], path + ".support");
    if (hi < lo) return SeqFamily::zero(ring);
    const Json empty = Json::object();
    const Json& levels = j.contains("levels") ? j["levels"] : empty;
    const Json& conns = j.contains("connectors") ? j["connectors"] : empty;

    std::vector<SeqLevel> lv;
    for (int n = lo; n <= hi; ++n) {
        const std::string lpath = path + ".levels." + std::to_string(n);
        const Json* l = degree_entry(levels, n);
        if (!l) {
            FpModule z = FpModule::zero(ring);
            lv.push_back(SeqLevel{z, z, ModMap::zero(z, z)});
            continue;
        }
        if (!l->contains("dom") || !l->contains("cod"))
            throw ParseError(lpath, "expected {dom, cod, map}");
        FpModule dom = parse_module((*l)["dom"], ring, lpath + ".dom");
        FpModule cod = parse_module((*l)["cod"], ring, lpath + ".cod");
        ExactMatrix mat(ring, dom.gens(), cod.gens());
        if (l->contains("map"))
            mat = parse_matrix((*l)["map"], ring, dom.gens(), cod.gens(), lpath + ".map");
        try {
            lv.push_back(SeqLevel{dom, cod, ModMap(dom, cod, mat)});
        } catch (const std::invalid_argument& e) {
            throw ParseError(lpath + ".map", e.what());
        }
    }

    std::vector<ModMap> connectors;
    for (int n = lo; n <= hi - 1; ++n) {
        const std::string cpath = path + ".connectors." + std::to_string(n);
        CokernelPair cok = cokernel(lv[n + 1 - lo].map);
        KernelPair ker = kernel(lv[n - lo].map);
        const Json* c = degree_entry(conns, n);
        if (!c) {
            if (!cok.module.is_zero_module() && !ker.module.is_zero_module())
                throw ParseError(cpath, "connector required (neither side is zero)");
            connectors.push_back(ModMap::zero(cok.module, ker.module));
            continue;
        }
        ExactMatrix composite = parse_matrix(*c, ring, lv[n + 1 - lo].cod.gens(),
                                             lv[n - lo].dom.gens(), cpath);
        try {
            ModMap into_dom(cok.module, lv[n - lo].dom, composite);
            auto lifted = try_lift_through_mono(into_dom, ker.embed);
            if (!lifted) throw ParseError(cpath, "connector does not land in the kernel");
            connectors.push_back(*lifted);
        } catch (const std::invalid_argument& e) {
            throw ParseError(cpath, e.what());
        }
    }
    try {
        return SeqFamily(ring, lo, std::move(lv), std::move(connectors));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

inline Json seq_family_to_json(const SeqFamily& f)
{
    Json out{{"support", Json::array({f.lo(), f.hi()})}};
    Json levels = Json::object(), conns = Json::object();
    for (int n = f.lo(); n <= f.hi(); ++n) {
        SeqLevel l = f.level(n);
        levels[std::to_string(n)] = Json{{"dom", module_to_json(l.dom)},
                                         {"cod", module_to_json(l.cod)},
                                         {"map", matrix_to_json(l.map.matrix())}};
        if (n < f.hi())
            conns[std::to_string(n)] =
                matrix_to_json(compose(f.connector(n), f.level_kernel(n).embed).matrix());
    }
    out["levels"] = std::move(levels);
    out["connectors"] = std::move(conns);
    return out;
}

inline SeqMor parse_seq_morphism(const Json& j, Ring ring, const std::string& path)
{
    if (!j.contains("source") || !j.contains("target"))
        throw ParseError(path, "expected source and target families");
    SeqFamily h = parse_seq_family(j["source"], ring, path + ".source");
    SeqFamily hp = parse_seq_family(j["target"], ring, path + ".target");
    int lo = std::min(h.lo(), hp.lo()), hi = std::max(h.hi(), hp.hi());
    const Json empty = Json::object();
    const Json& dmaps = j.contains("dom_maps") ? j["dom_maps"] : empty;
    const Json& cmaps = j.contains("cod_maps") ? j["cod_maps"] : empty;
    std::vector<std::pair<ModMap, ModMap>> comps;
    for (int n = lo; n <= hi; ++n) {
        SeqLevel s = h.level(n), d = hp.level(n);
        ExactMatrix dm(ring, s.dom.gens(), d.dom.gens());
        ExactMatrix cm(ring, s.cod.gens(), d.cod.gens());
        if (const Json* m = degree_entry(dmaps, n))
            dm = parse_matrix(*m, ring, s.dom.gens(), d.dom.gens(),
                              path + ".dom_maps." + std::to_string(n));
        if (const Json* m = degree_entry(cmaps, n))
            cm = parse_matrix(*m, ring, s.cod.gens(), d.cod.gens(),
                              path + ".cod_maps." + std::to_string(n));
        try {
            comps.push_back({ModMap(s.dom, d.dom, dm), ModMap(s.cod, d.cod, cm)});
        } catch (const std::invalid_argument& e) {
            throw ParseError(path + " at degree " + std::to_string(n), e.what());
        }
    }
    try {
        if (lo > hi) return SeqMor(h, hp, 0, {});
        return SeqMor(h, hp, lo, std::move(comps));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

inline Json seq_morphism_to_json(const SeqMor& m)
{
    Json dmaps = Json::object(), cmaps = Json::object();
    for (int n = m.lo(); n <= m.hi(); ++n) {
        dmaps[std::to_string(n)] = matrix_to_json(m.comp(n).first.matrix());
        cmaps[std::to_string(n)] = matrix_to_json(m.comp(n).second.matrix());
    }
    return Json{{"source", seq_family_to_json(m.source())},
                {"target", seq_family_to_json(m.target())},
                {"dom_maps", std::move(dmaps)},
                {"cod_maps", std::move(cmaps)}};
}

inline Extension parse_extension(const Json& j, Ring ring, const std::string& path)
{
    for (const char* k : {"A", "B", "C", "f", "g"})
        if (!j.contains(k)) throw ParseError(path, std::string("missing '") + k + "'");
    snailhom::Complex a = parse_complex(j["A"], ring, path + ".A");
    snailhom::Complex b = parse_complex(j["B"], ring, path + ".B");
    snailhom::Complex c = parse_complex(j["C"], ring, path + ".C");
    auto maps_between = [&](const snailhom::Complex& s, const snailhom::Complex& t,
                            const Json& maps, const std::string& mpath) {
        int lo = std::min(s.lo(), t.lo()), hi = std::max(s.hi(), t.hi());
        std::vector<ModMap> out;
        for (int n = lo; n <= hi; ++n) {
            ExactMatrix mat(ring, s.module(n).gens(), t.module(n).gens());
            if (const Json* m = degree_entry(maps, n))
                mat = parse_matrix(*m, ring, s.module(n).gens(), t.module(n).gens(),
                                   mpath + "." + std::to_string(n));
            try {
                out.push_back(ModMap(s.module(n), t.module(n), mat));
            } catch (const std::invalid_argument& e) {
                throw ParseError(mpath + "." + std::to_string(n), e.what());
            }
        }
        if (lo > hi) return chain_zero_mor(s, t);
        return ChainMor(s, t, lo, std::move(out));
    };
    try {
        Extension e{a, b, c, maps_between(a, b, j["f"], path + ".f"),
                    maps_between(b, c, j["g"], path + ".g")};
        e.validate();
        return e;
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

inline Json extension_to_json(const Extension& e)
{
    Json fmaps = Json::object(), gmaps = Json::object();
    for (int n = std::min({e.a.lo(), e.b.lo(), e.c.lo()});
         n <= std::max({e.a.hi(), e.b.hi(), e.c.hi()}); ++n) {
        fmaps[std::to_string(n)] = matrix_to_json(e.f.map(n).matrix());
        gmaps[std::to_string(n)] = matrix_to_json(e.g.map(n).matrix());
    }
    return Json{{"A", complex_to_json(e.a)},  {"B", complex_to_json(e.b)},
                {"C", complex_to_json(e.c)},  {"f", std::move(fmaps)},
                {"g", std::move(gmaps)}};
}

} // namespace io_detail

inline Document parse_document(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("$", e.what());
    }
    if (!j.is_object()) throw ParseError("$", "expected a JSON object");
    if (!j.contains("ring")) throw ParseError("$.ring", "missing");
    if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("$.kind", "missing");
    Ring ring = io_detail::parse_ring(j["ring"], "$.ring");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "complex")
        return Document{ring, Document::Kind::Complex, io_detail::parse_complex(j, ring, "$")};
    if (kind == "complex_morphism")
        return Document{ring, Document::Kind::ComplexMorphism,
                        io_detail::parse_complex_morphism(j, ring, "$")};
    if (kind == "arrow_morphism")
        return Document{ring, Document::Kind::ArrowMorphism,
                        io_detail::parse_arrow_morphism(j, ring, "$")};
    if (kind == "seq_family")
        return Document{ring, Document::Kind::SeqFamilyDoc,
                        io_detail::parse_seq_family(j, ring, "$")};
    if (kind == "seq_morphism")
        return Document{ring, Document::Kind::SeqMorphism,
                        io_detail::parse_seq_morphism(j, ring, "$")};
    if (kind == "extension")
        return Document{ring, Document::Kind::Ext, io_detail::parse_extension(j, ring, "$")};
    throw ParseError("$.kind", "unknown kind '" + kind + "'");
}

inline std::string serialize_document(const Document& doc)
{
    Json j;
    switch (doc.kind) {
    case Document::Kind::Complex:
        j = io_detail::complex_to_json(std::get<snailhom::Complex>(doc.payload));
        j["kind"] = "complex";
        break;
    case Document::Kind::ComplexMorphism:
        j = io_detail::complex_morphism_to_json(std::get<ChainMor>(doc.payload));
        j["kind"] = "complex_morphism";
        break;
    case Document::Kind::ArrowMorphism:
        j = io_detail::arrow_morphism_to_json(std::get<ArrMor>(doc.payload));
        j["kind"] = "arrow_morphism";
        break;
    case Document::Kind::SeqFamilyDoc:
        j = io_detail::seq_family_to_json(std::get<SeqFamily>(doc.payload));
        j["kind"] = "seq_family";
        break;
    case Document::Kind::SeqMorphism:
        j = io_detail::seq_morphism_to_json(std::get<SeqMor>(doc.payload));
        j["kind"] = "seq_morphism";
        break;
    case Document::Kind::Ext:
        j = io_detail::extension_to_json(std::get<Extension>(doc.payload));
        j["kind"] = "extension";
        break;
    }
    j["ring"] = io_detail::ring_to_json(doc.ring);
    return j.dump(2);
}

} // namespace snailhom
