#include "onecob/io.hpp"

#include <charconv>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "onecob/errors.hpp"
#include "onecob/rational.hpp"

namespace onecob::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

const json& require_field(const json& j, const char* name, const char* what) {
  if (!j.is_object() || !j.contains(name)) {
    throw ValidationError(std::string(what) + " document is missing the \"" + name + "\" field");
  }
  return j.at(name);
}

std::string require_string(const json& j, const char* name, const char* what) {
  const json& field = require_field(j, name, what);
  if (!field.is_string()) {
    throw ValidationError(std::string("field \"") + name + "\" of a " + what +
                          " document must be a string");
  }
  return field.get<std::string>();
}

std::uint64_t require_count(const json& j, const char* name, const char* what) {
  const json& field = require_field(j, name, what);
  if (!field.is_number_unsigned()) {
    throw ValidationError(std::string("field \"") + name + "\" of a " + what +
                          " document must be a non-negative integer");
  }
  return field.get<std::uint64_t>();
}

Endpoint parse_endpoint(const std::string& token) {
  std::string_view rest(token);
  Side side;
  if (rest.starts_with("in")) {
    side = Side::In;
    rest.remove_prefix(2);
  } else if (rest.starts_with("out")) {
    side = Side::Out;
    rest.remove_prefix(3);
  } else {
    throw ValidationError("endpoint \"" + token + "\" must look like \"in0\" or \"out3\"");
  }
  std::size_t index = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) {
    throw ValidationError("endpoint \"" + token + "\" must look like \"in0\" or \"out3\"");
  }
  return Endpoint{side, index};
}

std::string endpoint_token(const Endpoint& e) {
  return (e.side == Side::In ? "in" : "out") + std::to_string(e.index);
}

Cobordism cobordism_from_json(const json& j) {
  const SignedObject source(require_string(j, "source", "cobordism"));
  const SignedObject target(require_string(j, "target", "cobordism"));
  const json& jarcs = require_field(j, "arcs", "cobordism");
  if (!jarcs.is_array()) {
    throw ValidationError("field \"arcs\" of a cobordism document must be an array");
  }
  std::vector<Arc> arcs;
  arcs.reserve(jarcs.size());
  for (const json& ja : jarcs) {
    if (!ja.is_array() || ja.size() != 2 || !ja[0].is_string() || !ja[1].is_string()) {
      throw ValidationError("each arc must be a two-element array of endpoint strings");
    }
    arcs.push_back({parse_endpoint(ja[0].get<std::string>()),
                    parse_endpoint(ja[1].get<std::string>())});
  }
  const std::uint64_t circles = require_count(j, "circles", "cobordism");
  if (circles > std::numeric_limits<std::uint32_t>::max()) {
    throw ValidationError("circle count " + std::to_string(circles) + " is out of range");
  }
  return Cobordism(source, target, std::move(arcs), static_cast<std::uint32_t>(circles));
}

json cobordism_to_json(const Cobordism& k) {
  json jarcs = json::array();
  for (const Arc& arc : k.arcs()) {
    jarcs.push_back({endpoint_token(arc.first), endpoint_token(arc.second)});
  }
  return json{{"source", k.source().to_string()},
              {"target", k.target().to_string()},
              {"arcs", std::move(jarcs)},
              {"circles", k.circles()}};
}

Atom parse_atom(const std::string& token) {
  if (token == "id+") return Atom::IdPlus;
  if (token == "id-") return Atom::IdMinus;
  if (token == "cap+-") return Atom::CapPM;
  if (token == "cup-+") return Atom::CupMP;
  throw ValidationError("unknown atom \"" + token +
                        "\"; expected id+, id-, cap+- or cup-+");
}

const char* atom_token(Atom a) {
  switch (a) {
    case Atom::IdPlus: return "id+";
    case Atom::IdMinus: return "id-";
    case Atom::CapPM: return "cap+-";
    case Atom::CupMP: return "cup-+";
  }
  throw ValidationError("unknown atom");
}

Rational entry_from_json(const json& e) {
  if (e.is_string()) return parse_rational(e.get<std::string>());
  if (e.is_number_integer()) return Rational(e.get<std::int64_t>());
  throw ValidationError("matrix entries must be strings like \"2/3\" or integers");
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

}  // namespace

Cobordism parse_cobordism(std::string_view text) {
  return cobordism_from_json(parse_json(text));
}

std::string serialize_cobordism(const Cobordism& k) { return cobordism_to_json(k).dump(); }

GeneratorWord parse_word(std::string_view text) {
  const json j = parse_json(text);
  GeneratorWord word;
  const std::uint64_t circles = require_count(j, "circles", "word");
  if (circles > std::numeric_limits<std::uint32_t>::max()) {
    throw ValidationError("circle count " + std::to_string(circles) + " is out of range");
  }
  word.scalar_circles = static_cast<std::uint32_t>(circles);
  const json& jlayers = require_field(j, "layers", "word");
  if (!jlayers.is_array()) {
    throw ValidationError("field \"layers\" of a word document must be an array");
  }
  for (const json& jl : jlayers) {
    if (!jl.is_object()) {
      throw ValidationError("each layer must be an object");
    }
    if (jl.contains("permutation")) {
      const json& jp = jl.at("permutation");
      if (!jp.is_array()) {
        throw ValidationError("field \"permutation\" of a layer must be an array");
      }
      PermutationLayer layer;
      layer.source = SignedObject(require_string(jl, "source", "permutation layer"));
      for (const json& v : jp) {
        if (!v.is_number_unsigned()) {
          throw ValidationError("permutation entries must be non-negative integers");
        }
        layer.perm.push_back(v.get<std::size_t>());
      }
      word.layers.push_back(std::move(layer));
    } else if (jl.contains("atoms")) {
      const json& ja = jl.at("atoms");
      if (!ja.is_array()) {
        throw ValidationError("field \"atoms\" of a layer must be an array");
      }
      AtomLayer layer;
      for (const json& v : ja) {
        if (!v.is_string()) {
          throw ValidationError("atoms must be strings");
        }
        layer.atoms.push_back(parse_atom(v.get<std::string>()));
      }
      word.layers.push_back(std::move(layer));
    } else {
      throw ValidationError("each layer needs a \"permutation\" or an \"atoms\" field");
    }
  }
  return word;
}

std::string serialize_word(const GeneratorWord& word) {
  json jlayers = json::array();
  for (const Layer& layer : word.layers) {
    if (const auto* p = std::get_if<PermutationLayer>(&layer)) {
      jlayers.push_back(json{{"source", p->source.to_string()}, {"permutation", p->perm}});
    } else {
      json atoms = json::array();
      for (Atom a : std::get<AtomLayer>(layer).atoms) atoms.push_back(atom_token(a));
      jlayers.push_back(json{{"atoms", std::move(atoms)}});
    }
  }
  return json{{"circles", word.scalar_circles}, {"layers", std::move(jlayers)}}.dump();
}

ExactMatrix parse_matrix_json(std::string_view text) {
  const json j = parse_json(text);
  const std::uint64_t rows = require_count(j, "rows", "matrix");
  const std::uint64_t cols = require_count(j, "cols", "matrix");
  const json& jentries = require_field(j, "entries", "matrix");
  if (!jentries.is_array() || jentries.size() != rows) {
    throw ValidationError("matrix document needs exactly " + std::to_string(rows) +
                          " entry rows");
  }
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = jentries[r];
    if (!row.is_array() || row.size() != cols) {
      throw ValidationError("matrix row " + std::to_string(r) + " needs exactly " +
                            std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry_from_json(row[c]);
  }
  return m;
}

std::string serialize_matrix_json(const ExactMatrix& m) { return matrix_to_json(m).dump(); }

ExactMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      if (pos < text.size()) {
        throw ValidationError("blank line inside CSV matrix");
      }
      continue;  // trailing newline
    }
    std::vector<Rational> row;
    std::size_t field = 0;
    for (;;) {
      std::size_t comma = line.find(',', field);
      const std::string_view cell =
          line.substr(field, comma == std::string_view::npos ? comma : comma - field);
      row.push_back(parse_rational(cell));
      if (comma == std::string_view::npos) break;
      field = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ValidationError("empty CSV matrix");
  }
  const std::size_t cols = rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ValidationError("CSV row " + std::to_string(r) + " has " +
                            std::to_string(rows[r].size()) + " fields, expected " +
                            std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = std::move(rows[r][c]);
  }
  return m;
}

std::string serialize_matrix_csv(const ExactMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += format_rational(m(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string serialize_report(const VerifyReport& report) {
  json cexs = json::array();
  for (const Counterexample& cex : report.counterexamples) {
    json jc;
    jc["K"] = cex.k ? cobordism_to_json(*cex.k) : json(nullptr);
    jc["L"] = cex.l ? cobordism_to_json(*cex.l) : json(nullptr);
    jc["lhs"] = matrix_to_json(cex.lhs);
    jc["rhs"] = matrix_to_json(cex.rhs);
    cexs.push_back(std::move(jc));
  }
  return json{{"checked", report.checked},
              {"passed", report.passed},
              {"failed", report.failed},
              {"counterexamples", std::move(cexs)}}
      .dump();
}

}  // namespace onecob::io
