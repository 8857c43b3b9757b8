#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "gsa/dsl.hpp"
#include "gsa/parity.hpp"
#include "gsa/polar.hpp"
#include "gsa/random.hpp"
#include "gsa/symmetry.hpp"

using namespace gsa;

namespace {

std::string path(const std::string& rel) { return std::string(GSA_TEST_DIR) + "/" + rel; }

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kMinimal = R"(kind weighted 2
nmanifold true
chart U {
  x even @(0)
  xi1 odd @(1)
  xi2 odd @(1)
  z even @(2)
}
chart V { x even @(0) xi1 odd @(1) xi2 odd @(1) z even @(2) }
transition U -> V {
  forward { z = z + xi1*xi2 }
  inverse { z = z - xi1*xi2 }
}
)";

// Line and column of the first error, or (0,0) if the text parses.
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return {e.line, e.column};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("parse a minimal atlas") {
  auto doc = parse_document(kMinimal);
  const auto& a = *doc.atlas;
  CHECK(a.kind == AtlasKind::weighted(2));
  CHECK(a.nmanifold);
  REQUIRE(a.charts.size() == 2);
  REQUIRE(a.transitions.size() == 1);
  CHECK_FALSE(doc.action);
  CHECK(validate_atlas(a).ok());

  const auto& u = a.charts[0];
  auto v = [&](const char* n) { return Polynomial::coordinate(u, n); };
  const auto& fwd = a.transitions[0].forward;
  CHECK(fwd.image(u->index_of("z")) == v("z") + v("xi1") * v("xi2"));
  CHECK(fwd.image(u->index_of("x")) == v("x"));
}

TEST_CASE("expressions: precedence, powers and rationals") {
  std::string text = R"(kind weighted 1
chart U { x even @(0) e odd @(1) }
chart V { x even @(0) e odd @(1) }
transition U -> V {
  forward { x = 3/6*x^2 - (x + 1)*2 + -x  e = (1 + x)*e }
  inverse { x = x  e = e }
}
)";
  auto doc = parse_document(text);
  const auto& u = doc.atlas->charts[0];
  auto x = Polynomial::coordinate(u, "x");
  auto one = Polynomial::constant(u, 1);
  CHECK(doc.atlas->transitions[0].forward.image(0) == Rational(1, 2) * x * x - Rational(3) * x - Rational(2) * one);
}

TEST_CASE("parse errors carry a location") {
  // (1,2) under a vector kind: second entry is not a 0/1 vector slot
  std::string bad = "kind vector 2\nchart U {\n  x even @(1,2)\n}\n";
  CHECK_THROWS_AS(parse_document(bad), ParseError);
  CHECK(error_at(bad) == std::pair<std::size_t, std::size_t>{3, 10});

  CHECK(error_at("kind weighted 1\nchart U { x even @(0) }\nchart V { x even @(0) }\n"
                 "transition U -> V { forward { x = y } inverse { } }\n")
            .first == 4);
  CHECK(error_at("kind weighted 1\nchart U { x even @(0) x odd @(1) }\n") == std::pair<std::size_t, std::size_t>{2, 23});
  CHECK(error_at("kind weighted 1\nchart U { x neutral @(0) }\n") == std::pair<std::size_t, std::size_t>{2, 13});
  CHECK(error_at("kind weighted 1\nchart U { x even @(2) }\n").first == 2);
  CHECK(error_at("chart U { x even @(0) }\n").first == 1);
  CHECK(error_at("kind weighted 1\nchart U { x even @(0)\n").first == 3);
  CHECK(error_at(kMinimal) == std::pair<std::size_t, std::size_t>{0, 0});
}

TEST_CASE("parse rejects odd images of even coordinates") {
  std::string text = "kind weighted 1\nchart U { x even @(0) e odd @(1) }\nchart V { x even @(0) e odd @(1) }\n"
                     "transition U -> V { forward { x = e } inverse { } }\n";
  CHECK_THROWS(parse_document(text));
}

TEST_CASE("fixture files load and validate") {
  for (const char* f : {"aba.gsa", "degree2.gsa", "swap.gsa", "line_bundle.gsa"}) {
    CAPTURE(f);
    auto doc = load_document(path(std::string("fixtures/") + f));
    CHECK(validate_atlas(*doc.atlas).ok());
    if (doc.action) CHECK(validate_action(*doc.action).ok());
  }
  auto broken = load_document(path("fixtures/broken_homogeneity.gsa"));
  auto r = validate_atlas(*broken.atlas);
  CHECK_FALSE(r.ok());
  CHECK(r.has("homogeneity"));
}

TEST_CASE("an action block lists generators only") {
  auto doc = load_document(path("fixtures/swap.gsa"));
  REQUIRE(doc.action);
  CHECK(doc.action->maps.size() == 2);
  auto nice = nice_coordinates(*doc.action);
  CHECK(check_nice(nice.action).ok());
}

TEST_CASE("emit and parse are inverse") {
  AtlasGenerator gen(17);
  for (int i = 0; i < 12; ++i) {
    RandomAtlasOptions o;
    o.kind = i % 3 == 0 ? AtlasKind::multivector(2) : i % 3 == 1 ? AtlasKind::weighted(3) : AtlasKind{1, 2};
    o.odd_base = 1;
    o.charts = 2 + i % 2;
    Document doc{std::make_shared<const Atlas>(gen.atlas(o)), std::nullopt};
    auto text = emit_document(doc);
    auto back = parse_document(text);
    CHECK(*back.atlas == *doc.atlas);
    CHECK(emit_document(back) == text);
    CHECK(*from_json(to_json(doc)).atlas == *doc.atlas);
  }
  auto swap = load_document(path("fixtures/swap.gsa"));
  auto text = emit_document(swap);
  auto back = parse_document(text);
  REQUIRE(back.action);
  CHECK(back.action->maps == swap.action->maps);
  auto viaj = from_json(to_json(swap));
  REQUIRE(viaj.action);
  CHECK(viaj.action->maps == swap.action->maps);
  CHECK(to_json(swap)["schema"] == "gsa-atlas/1");
}

TEST_CASE("JSON schema errors are ParseErrors") {
  CHECK_THROWS_AS(from_json(nlohmann::json::parse(R"({"schema":"other"})")), ParseError);
  CHECK_THROWS_AS(from_json(nlohmann::json::parse(R"({"schema":"gsa-atlas/1","kind":{}})")), ParseError);
}

TEST_CASE("parser is total on mutated input") {
  std::mt19937_64 rng(5);
  const std::string base = slurp(path("fixtures/swap.gsa")) + kMinimal;
  const std::string alphabet = "{}()@,=+-*/^[] \n0123456789xyzUV_odd even";
  for (int i = 0; i < 2000; ++i) {
    std::string s = base;
    int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits; ++e) {
      std::size_t at = rng() % s.size();
      switch (rng() % 3) {
        case 0: s.erase(at, 1 + rng() % 5); break;
        case 1: s.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
        default: s[at] = alphabet[rng() % alphabet.size()];
      }
      if (s.empty()) s = "x";
    }
    try {
      parse_document(s);
    } catch (const ParseError&) {
    } catch (const std::exception& e) {
      FAIL("unexpected exception: " << e.what() << "\n" << s);
    }
  }
}

TEST_CASE("golden: total parity reversion of the double vector bundle") {
  auto doc = load_document(path("fixtures/aba.gsa"));
  Document out{std::make_shared<const Atlas>(total_reversion(*doc.atlas)), std::nullopt};
  auto text = emit_document(out);
  CHECK(text.find("    x_pi[1,1] = -x_pi[1,0]*x_pi[0,1] + x_pi[1,1]\n") != std::string::npos);
  CHECK(text == slurp(path("golden/aba_pi.gsa")));
}

TEST_CASE("golden: desuperization of a degree-2 N-manifold") {
  auto doc = load_document(path("fixtures/degree2.gsa"));
  auto l = desuperize(doc.atlas, 2);
  CHECK(emit_document({l.atlas, l}) == slurp(path("golden/degree2_desuper.gsa")));
}
