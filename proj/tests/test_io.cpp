#include <doctest.h>

#include "orchard/errors.hpp"
#include "orchard/io.hpp"
#include "orchard/random.hpp"
#include "orchard/svg.hpp"

using namespace orchard;
using K = SymmetryKind;

TEST_CASE("signfn JSON round-trips (property over random functions)") {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(rng.between(1, 9));
    const int arity = static_cast<int>(rng.between(1, n));
    const auto kind = rng.sign() > 0 ? K::Symmetric : K::Antisymmetric;
    auto f = random_sign_function(n, arity, kind, rng.next());
    const std::string text = io::dump(io::to_json(f));
    auto g = io::read_signfn(text, "mem");
    REQUIRE(g == f);
    REQUIRE(io::dump(io::to_json(g)) == text);
  }
}

TEST_CASE("signfn canonical text") {
  auto f = flip(constant_one(3, 2, K::Antisymmetric), Subset(3, {1, 3}));
  CHECK(io::dump(io::to_json(f)) ==
        "{\"n\":3,\"arity\":2,\"kind\":\"antisymmetric\",\"signs\":[1,-1,1]}\n");
}

TEST_CASE("signfn parser rejects bad files") {
  auto bad = [](const char* text) { CHECK_THROWS_AS(io::read_signfn(text, "t.json"), parse_error); };
  bad(R"({"n":3,"arity":2,"kind":"symmetric","signs":[1,1]})");         // length
  bad(R"({"n":3,"arity":2,"kind":"symmetric","signs":[1,1,0]})");       // zero
  bad(R"({"n":3,"arity":2,"kind":"symmetric","signs":[1,1,2]})");       // range
  bad(R"({"n":3,"arity":2,"kind":"symmetric","signs":[1,1,1.0]})");     // float
  bad(R"({"n":3,"arity":2,"kind":"symmetric","signs":[1,1,"1"]})");     // string
  bad(R"({"n":3,"arity":2,"kind":"skew","signs":[1,1,1]})");            // kind
  bad(R"({"n":3,"arity":4,"kind":"symmetric","signs":[]})");            // arity
  bad(R"({"n":3,"kind":"symmetric","signs":[1,1,1]})");                 // missing
  bad(R"({"n":3,"arity":2,"kind":"symmetric","signs":[1,1,1])");        // syntax
  bad("[]");
  try {
    io::read_signfn("{\"n\":3,", "x.json");
  } catch (const parse_error& e) {
    CHECK(e.where().rfind("x.json:byte ", 0) == 0);
  }
}

TEST_CASE("partition and complex JSON") {
  OrchardPartition p({0, 1, 0, 1});
  CHECK(io::dump(io::to_json(p)) == "{\"n\":4,\"labels\":[0,1,0,1]}\n");
  CHECK(io::partition_from_json(io::to_json(p)) == p);
  CHECK_THROWS_AS(io::partition_from_json(io::Json::parse(R"({"n":2,"labels":[1,0]})")), input_error);
  CHECK(io::dump(io::to_json(build_f2_complex(3))) == "{\"n\":3,\"homology_dims\":[1,0,0]}\n");
}

TEST_CASE("tournament JSON") {
  auto t = Tournament::random(5, 3);
  CHECK(io::read_tournament(io::dump(io::to_json(t)), "t") == t);
  CHECK_THROWS_AS(io::read_tournament(R"({"n":2,"matrix":[[0,1],[1,0]]})", "t"), parse_error);
  CHECK_THROWS_AS(io::read_tournament(R"({"n":2,"matrix":[[0,1]]})", "t"), parse_error);
  CHECK_THROWS_AS(io::read_tournament(R"({"n":2,"matrix":[[0,1],[-1]]})", "t"), parse_error);
}

TEST_CASE("points CSV") {
  auto cfg = io::read_points("dim=2\n0,0\n1/2, -3\n\n 4 ,5/7\r\n", "p.csv");
  CHECK(cfg.dim() == 2);
  CHECK(cfg.size() == 3);
  CHECK(cfg.point(2)[0] == Rational(1, 2));
  CHECK(cfg.point(3)[1] == Rational(5, 7));
  CHECK(io::read_points(io::write_points(cfg), "again").points() == cfg.points());

  auto error_at = [](const char* text) -> std::string {
    try {
      io::read_points(text, "p.csv");
    } catch (const parse_error& e) {
      return e.where();
    }
    return "no error";
  };
  CHECK(error_at("0,0\n") == "p.csv:1");                 // missing header
  CHECK(error_at("dim=2\n0,0\n1.5,2\n3,3\n") == "p.csv:3");  // float
  CHECK(error_at("dim=2\n0,0\n1,2,3\n3,3\n") == "p.csv:3");  // columns
  CHECK(error_at("dim=2\n0,0\n1,2\n") == "p.csv");           // n <= d
  CHECK(error_at("dim=x\n") == "p.csv:1");
  CHECK(error_at("dim=2\n0,0\n1,\n2,2\n") == "p.csv:3");
}

TEST_CASE("svg output") {
  auto cfg = io::read_points("dim=2\n0,0\n1,0\n1,1\n0,1\n", "sq");
  auto p = partition(points_to_signfn(cfg));
  const auto svg = plot_svg(cfg, p);
  CHECK(svg == plot_svg(cfg, p));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  // P1 and P3 share a fill, P2 and P4 the other.
  auto fill_of = [&](int i) {
    std::size_t pos = 0;
    for (int k = 0; k < i; ++k) pos = svg.find("<circle", pos + 1);
    const auto f = svg.find("fill=\"", pos) + 6;
    return svg.substr(f, 7);
  };
  CHECK(fill_of(1) == fill_of(3));
  CHECK(fill_of(2) == fill_of(4));
  CHECK(fill_of(1) != fill_of(2));
  CHECK(svg.find(">P4</text>") != std::string::npos);
  auto line = io::read_points("dim=1\n0\n1\n", "line");
  CHECK_THROWS_AS(plot_svg(line, OrchardPartition({0, 1})), input_error);
}
