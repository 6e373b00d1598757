#include <doctest.h>

#include <string>

#include <json.hpp>

#include "onecob/cobordism.hpp"
#include "onecob/errors.hpp"
#include "onecob/exact_matrix.hpp"
#include "onecob/generator_word.hpp"
#include "onecob/io.hpp"
#include "onecob/rational.hpp"

using namespace onecob;

namespace {

Endpoint in(std::size_t i) { return Endpoint{Side::In, i}; }
Endpoint out(std::size_t i) { return Endpoint{Side::Out, i}; }

Cobordism example_k() {
  return Cobordism(SignedObject("+--+"), SignedObject("+-"),
                   {{in(0), in(1)}, {in(2), out(1)}, {in(3), out(0)}}, 0);
}

}  // namespace

TEST_CASE("cobordism documents round-trip and are byte-stable") {
  const std::string text = io::serialize_cobordism(example_k());
  CHECK(io::parse_cobordism(text) == example_k());
  CHECK(io::serialize_cobordism(io::parse_cobordism(text)) == text);

  CHECK(io::serialize_cobordism(generator(GeneratorKind::CapPM)) ==
        R"({"arcs":[["in0","in1"]],"circles":0,"source":"+-","target":""})");
  CHECK(io::serialize_cobordism(generator(GeneratorKind::Circle)) ==
        R"({"arcs":[],"circles":1,"source":"","target":""})");

  // Arcs listed in any order and orientation parse to the same morphism.
  const Cobordism k = io::parse_cobordism(
      R"({"source":"+--+","target":"+-",)"
      R"("arcs":[["out0","in3"],["in2","out1"],["in1","in0"]],"circles":0})");
  CHECK(k == example_k());
}

TEST_CASE("sign strings accept the typographic minus on input") {
  const Cobordism k = io::parse_cobordism(
      R"({"source":"−+","target":"","arcs":[["in0","in1"]],"circles":0})");
  CHECK(k == generator(GeneratorKind::CapMP));
  CHECK(k.source().to_string() == "-+");  // output is plain ASCII
}

TEST_CASE("cobordism documents reject malformed input with pointed messages") {
  CHECK_THROWS_AS(io::parse_cobordism("not json"), ValidationError);
  CHECK_THROWS_AS(io::parse_cobordism("[1,2]"), ValidationError);
  CHECK_THROWS_AS(
      io::parse_cobordism(R"({"target":"","arcs":[],"circles":0})"),
      ValidationError);
  CHECK_THROWS_AS(
      io::parse_cobordism(R"({"source":"+*","target":"","arcs":[],"circles":0})"),
      ValidationError);
  CHECK_THROWS_AS(
      io::parse_cobordism(
          R"({"source":"+-","target":"","arcs":[["mid0","in1"]],"circles":0})"),
      ValidationError);
  CHECK_THROWS_AS(
      io::parse_cobordism(
          R"({"source":"+-","target":"","arcs":[["in0","in1","in2"]],"circles":0})"),
      ValidationError);
  CHECK_THROWS_AS(
      io::parse_cobordism(
          R"({"source":"+-","target":"","arcs":[["in0","in1"]],"circles":-1})"),
      ValidationError);

  try {
    io::parse_cobordism(R"({"target":"","arcs":[],"circles":0})");
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("source") != std::string::npos);
  }
  try {
    io::parse_cobordism(
        R"({"source":"+-","target":"","arcs":[["in","in1"]],"circles":0})");
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("in0") != std::string::npos);
  }
}

TEST_CASE("word documents round-trip through serialization") {
  const GeneratorWord word = decompose(example_k());
  const std::string text = io::serialize_word(word);
  const GeneratorWord back = io::parse_word(text);
  CHECK(recompose(back) == example_k());
  CHECK(io::serialize_word(back) == text);

  // All four atom tokens survive a round trip.
  GeneratorWord atoms;
  atoms.layers.push_back(
      AtomLayer{{Atom::IdPlus, Atom::IdMinus, Atom::CapPM, Atom::CupMP}});
  const std::string atext = io::serialize_word(atoms);
  CHECK(atext.find("\"id+\"") != std::string::npos);
  CHECK(atext.find("\"id-\"") != std::string::npos);
  CHECK(atext.find("\"cap+-\"") != std::string::npos);
  CHECK(atext.find("\"cup-+\"") != std::string::npos);
  const GeneratorWord aback = io::parse_word(atext);
  const auto& layer = std::get<AtomLayer>(aback.layers.at(0));
  CHECK(layer.atoms ==
        std::vector<Atom>{Atom::IdPlus, Atom::IdMinus, Atom::CapPM, Atom::CupMP});

  const GeneratorWord circles = io::parse_word(R"({"circles":3,"layers":[]})");
  CHECK(circles.scalar_circles == 3);
  CHECK(circles.layers.empty());
}

TEST_CASE("word documents reject unknown atoms and shapeless layers") {
  CHECK_THROWS_AS(io::parse_word(R"({"circles":0,"layers":[{"atoms":["cap-+"]}]})"),
                  ValidationError);
  CHECK_THROWS_AS(io::parse_word(R"({"circles":0,"layers":[{}]})"), ValidationError);
  CHECK_THROWS_AS(io::parse_word(R"({"circles":0,"layers":[{"permutation":[0]}]})"),
                  ValidationError);  // permutation layer needs its source
  CHECK_THROWS_AS(
      io::parse_word(R"({"circles":0,"layers":[{"source":"+","permutation":[-1]}]})"),
      ValidationError);
  CHECK_THROWS_AS(io::parse_word(R"({"layers":[]})"), ValidationError);
}

TEST_CASE("matrix JSON documents round-trip rationals exactly") {
  ExactMatrix m(2, 2);
  m(0, 0) = parse_rational("2/3");
  m(0, 1) = parse_rational("-5");
  m(1, 0) = Rational(0);
  m(1, 1) = parse_rational("-7/11");
  const std::string text = io::serialize_matrix_json(m);
  CHECK(io::parse_matrix_json(text) == m);
  CHECK(text.find("\"2/3\"") != std::string::npos);
  CHECK(text.find("\"-7/11\"") != std::string::npos);

  // Plain JSON integers are accepted alongside strings.
  const ExactMatrix mixed =
      io::parse_matrix_json(R"({"rows":1,"cols":2,"entries":[[3,"1/2"]]})");
  CHECK(mixed == ExactMatrix({{3, Rational(1) / 2}}));

  CHECK_THROWS_AS(io::parse_matrix_json(R"({"rows":2,"cols":1,"entries":[["1"]]})"),
                  ValidationError);
  CHECK_THROWS_AS(io::parse_matrix_json(R"({"rows":1,"cols":2,"entries":[["1"]]})"),
                  ValidationError);
  CHECK_THROWS_AS(
      io::parse_matrix_json(R"({"rows":1,"cols":1,"entries":[[true]]})"),
      ValidationError);
  CHECK_THROWS_AS(io::parse_matrix_json(R"({"cols":1,"entries":[["1"]]})"),
                  ValidationError);
}

TEST_CASE("matrix CSV documents: golden form, round trip, and rejections") {
  ExactMatrix m(2, 2);
  m(0, 0) = Rational(1);
  m(0, 1) = Rational(1) / 2;
  m(1, 0) = Rational(-3);
  m(1, 1) = Rational(0);
  CHECK(io::serialize_matrix_csv(m) == "1,1/2\n-3,0\n");
  CHECK(io::parse_matrix_csv("1,1/2\n-3,0\n") == m);
  CHECK(io::parse_matrix_csv("1,1/2\r\n-3,0\r\n") == m);
  CHECK(io::parse_matrix_csv("1,1/2\n-3,0") == m);  // no trailing newline

  CHECK_THROWS_AS(io::parse_matrix_csv("1,2\n3\n"), ValidationError);
  CHECK_THROWS_AS(io::parse_matrix_csv("1,2\n\n3,4\n"), ValidationError);
  CHECK_THROWS_AS(io::parse_matrix_csv(""), ValidationError);
  CHECK_THROWS_AS(io::parse_matrix_csv("abc\n"), ValidationError);
  CHECK_THROWS_AS(io::parse_matrix_csv("1/0\n"), ValidationError);
}

TEST_CASE("verification reports serialize with morphisms or nulls") {
  VerifyReport rep;
  rep.tally(true);
  rep.tally(false);
  rep.counterexamples.push_back({example_k(), std::nullopt,
                                 ExactMatrix({{1}}), ExactMatrix({{2}})});
  const nlohmann::json j = nlohmann::json::parse(io::serialize_report(rep));
  CHECK(j.at("checked") == 2);
  CHECK(j.at("passed") == 1);
  CHECK(j.at("failed") == 1);
  REQUIRE(j.at("counterexamples").size() == 1);
  const auto& cex = j.at("counterexamples").at(0);
  CHECK(cex.at("K").at("source") == "+--+");
  CHECK(cex.at("L").is_null());
  CHECK(cex.at("lhs").at("entries").at(0).at(0) == "1");
  CHECK(cex.at("rhs").at("entries").at(0).at(0) == "2");

  const nlohmann::json clean = nlohmann::json::parse(io::serialize_report(VerifyReport{}));
  CHECK(clean.at("checked") == 0);
  CHECK(clean.at("counterexamples").empty());
}
