#include <catch2/catch_amalgamated.hpp>

#include "snailhom/genrand.hpp"
#include "snailhom/io.hpp"

using namespace snailhom;

namespace {

const char* x2_complex_doc = R"({
  "ring": "Z",
  "kind": "complex",
  "support": [0, 1],
  "ranks": {"0": 1, "1": 1},
  "differentials": {"1": [[2]]}
})";

} // namespace

TEST_CASE("parsing the x2 complex document")
{
    Document doc = parse_document(x2_complex_doc);
    REQUIRE(doc.kind == Document::Kind::Complex);
    const auto& c = std::get<Complex>(doc.payload);
    REQUIRE(c.lo() == 0);
    REQUIRE(c.hi() == 1);
    REQUIRE(modules_isomorphic(homology(c, 0),
                               FpModule(Ring::integers(), 1,
                                        ExactMatrix::from_rows(Ring::integers(), {{2}}))));
    REQUIRE(homology(c, 1).is_zero_module());
}

TEST_CASE("empty support parses to the zero complex")
{
    Document doc = parse_document(R"({"ring":"Z","kind":"complex","support":[0,-1]})");
    const auto& c = std::get<Complex>(doc.payload);
    REQUIRE(c.hi() < c.lo());
}

TEST_CASE("rationals and prime fields in documents")
{
    Document doc = parse_document(R"({
      "ring": "Q", "kind": "complex", "support": [0, 1],
      "ranks": {"0": 1, "1": 1},
      "differentials": {"1": [["1/2"]]}
    })");
    const auto& c = std::get<Complex>(doc.payload);
    REQUIRE(c.diff(1).matrix().at(0, 0) == Rat(1, 2));

    Document doc2 = parse_document(R"({
      "ring": {"Fp": 5}, "kind": "complex", "support": [0, 0], "ranks": {"0": 2}
    })");
    REQUIRE(std::get<Complex>(doc2.payload).module(0).gens() == 2);

    REQUIRE_THROWS_AS(parse_document(R"({"ring":{"Fp":4},"kind":"complex","support":[0,0]})"),
                      ParseError);
}

TEST_CASE("schema violations carry a located path")
{
    SECTION("wrong column count")
    {
        try {
            parse_document(R"({
              "ring": "Z", "kind": "complex", "support": [0, 1],
              "ranks": {"0": 2, "1": 1},
              "differentials": {"1": [[2]]}
            })");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            REQUIRE(std::string(e.what()).find("differentials.1") != std::string::npos);
        }
    }
    SECTION("d.d != 0 is rejected")
    {
        REQUIRE_THROWS_AS(parse_document(R"({
          "ring": "Z", "kind": "complex", "support": [0, 2],
          "ranks": {"0": 1, "1": 1, "2": 1},
          "differentials": {"1": [[2]], "2": [[3]]}
        })"),
                          ParseError);
    }
    SECTION("non-commuting square is rejected")
    {
        REQUIRE_THROWS_AS(parse_document(R"({
          "ring": "Z", "kind": "arrow_morphism",
          "source": {"top": 1, "bottom": 1, "matrix": [[2]]},
          "target": {"top": 1, "bottom": 1, "matrix": [[3]]},
          "top_map": [[1]], "bottom_map": [[1]]
        })"),
                          ParseError);
    }
}

TEST_CASE("round trips through serialization")
{
    GenConfig cfg;
    Rng rng(201);

    SECTION("complexes")
    {
        for (int it = 0; it < 6; ++it) {
            Complex c = gen_complex(rng, cfg);
            Document doc{cfg.ring, Document::Kind::Complex, c};
            Document back = parse_document(serialize_document(doc));
            REQUIRE(std::get<Complex>(back.payload).same_presentation(c));
        }
    }
    SECTION("complex morphisms")
    {
        Complex b = gen_complex(rng, cfg);
        Complex c = gen_complex(rng, cfg);
        ChainMor g = gen_chain_morphism(rng, cfg, b, c);
        Document doc{cfg.ring, Document::Kind::ComplexMorphism, g};
        Document back = parse_document(serialize_document(doc));
        REQUIRE(chain_mor_equal(std::get<ChainMor>(back.payload), g));
    }
    SECTION("arrow morphisms")
    {
        ArrMor m = gen_arr_morphism(rng, cfg);
        Document doc{cfg.ring, Document::Kind::ArrowMorphism, m};
        Document back = parse_document(serialize_document(doc));
        ArrCat cat(cfg.ring);
        REQUIRE(cat.mor_equal(std::get<ArrMor>(back.payload), m));
    }
    SECTION("families with their connectors")
    {
        for (int it = 0; it < 4; ++it) {
            SeqFamily f = gen_isoseq_family(rng, cfg);
            Document doc{cfg.ring, Document::Kind::SeqFamilyDoc, f};
            Document back = parse_document(serialize_document(doc));
            REQUIRE(std::get<SeqFamily>(back.payload).same_presentation(f));
        }
    }
    SECTION("seq morphisms")
    {
        SeqFamily h = gen_isoseq_family(rng, cfg);
        SeqFamily hp = gen_isoseq_family(rng, cfg);
        SeqMor m = gen_seq_morphism_between(rng, cfg, h, hp);
        Document doc{cfg.ring, Document::Kind::SeqMorphism, m};
        Document back = parse_document(serialize_document(doc));
        SeqCat cat(cfg.ring);
        REQUIRE(cat.mor_equal(std::get<SeqMor>(back.payload), m));
    }
    SECTION("extensions")
    {
        Extension e = gen_extension(rng, cfg);
        Document doc{cfg.ring, Document::Kind::Ext, e};
        Document back = parse_document(serialize_document(doc));
        const auto& e2 = std::get<Extension>(back.payload);
        REQUIRE(e2.b.same_presentation(e.b));
        REQUIRE(chain_mor_equal(e2.g, e.g));
    }
}

TEST_CASE("the x2 extension document parses and validates")
{
    Document doc = parse_document(R"({
      "ring": "Z", "kind": "extension",
      "A": {"support": [0,0], "ranks": {"0": 1}},
      "B": {"support": [0,0], "ranks": {"0": 1}},
      "C": {"support": [0,0], "modules": {"0": {"generators": 1, "relations": [[2]]}}},
      "f": {"0": [[2]]},
      "g": {"0": [[1]]}
    })");
    const auto& e = std::get<Extension>(doc.payload);
    REQUIRE(modules_isomorphic(homology(e.c, 0),
                               FpModule(Ring::integers(), 1,
                                        ExactMatrix::from_rows(Ring::integers(), {{2}}))));
}
