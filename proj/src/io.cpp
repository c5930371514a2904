#include "orchard/io.hpp"

#include <fstream>
#include <sstream>

#include "orchard/errors.hpp"

namespace orchard::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw input_error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw input_error(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer())
    throw input_error(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw input_error(std::string("field \"") + key + "\" must be an array");
  return v;
}

template <typename T, typename F>
T with_source(std::string_view text, const std::string& source, F&& convert) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(source + ":byte " + std::to_string(e.byte), "malformed JSON");
  }
  try {
    return convert(j);
  } catch (const parse_error&) {
    throw;
  } catch (const input_error& e) {
    throw parse_error(source, e.what());
  }
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Json to_json(const SignFunction& f) {
  Json signs = Json::array();
  for (auto s : f.signs()) signs.push_back(static_cast<int>(s));
  Json j;
  j["n"] = f.n();
  j["arity"] = f.arity();
  j["kind"] = std::string(to_string(f.kind()));
  j["signs"] = std::move(signs);
  return j;
}

SignFunction signfn_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const int arity = int_field(j, "arity");
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw input_error("field \"kind\" must be a string");
  if (n < 1 || arity < 1 || arity > n)
    throw input_error("need 1 <= arity <= n (n=" + std::to_string(n) +
                      ", arity=" + std::to_string(arity) + ")");
  const Json& signs = array_field(j, "signs");
  const auto expected = binomial(n, arity);
  if (signs.size() != expected)
    throw input_error("\"signs\" has " + std::to_string(signs.size()) +
                      " entries, expected C(" + std::to_string(n) + "," +
                      std::to_string(arity) + ") = " + std::to_string(expected));
  std::vector<std::int8_t> values;
  values.reserve(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const Json& v = signs[i];
    if (!v.is_number_integer() || (v.get<long long>() != 1 && v.get<long long>() != -1))
      throw input_error("\"signs\"[" + std::to_string(i) + "] must be -1 or 1");
    values.push_back(static_cast<std::int8_t>(v.get<int>()));
  }
  return SignFunction(n, arity, parse_kind(kind.get<std::string>()), std::move(values));
}

Json to_json(const OrchardPartition& p) {
  Json labels = Json::array();
  for (auto l : p.labels()) labels.push_back(static_cast<int>(l));
  Json j;
  j["n"] = p.n();
  j["labels"] = std::move(labels);
  return j;
}

OrchardPartition partition_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const Json& labels = array_field(j, "labels");
  if (n < 1 || labels.size() != static_cast<std::size_t>(n))
    throw input_error("\"labels\" must have n entries");
  std::vector<std::uint8_t> out;
  for (const auto& l : labels) {
    if (!l.is_number_integer() || (l.get<int>() != 0 && l.get<int>() != 1))
      throw input_error("labels must be 0 or 1");
    out.push_back(static_cast<std::uint8_t>(l.get<int>()));
  }
  if (out[0] != 0) throw input_error("labels[0] must be 0");
  return OrchardPartition(std::move(out));
}

Json to_json(const F2Complex& c) {
  Json j;
  j["n"] = c.n;
  j["homology_dims"] = c.homology_dims;
  return j;
}

Json to_json(const Tournament& t) {
  Json matrix = Json::array();
  for (int i = 1; i <= t.n(); ++i) {
    Json row = Json::array();
    for (int k = 1; k <= t.n(); ++k) row.push_back(t.entry(i, k));
    matrix.push_back(std::move(row));
  }
  Json j;
  j["n"] = t.n();
  j["matrix"] = std::move(matrix);
  return j;
}

Tournament tournament_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const Json& matrix = array_field(j, "matrix");
  if (n < 1 || matrix.size() != static_cast<std::size_t>(n))
    throw input_error("\"matrix\" must have n rows");
  std::vector<int> entries;
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    const Json& row = matrix[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw input_error("\"matrix\" row " + std::to_string(r + 1) + " must have n entries");
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw input_error("matrix entries must be integers");
      entries.push_back(v.get<int>());
    }
  }
  return Tournament(n, std::move(entries));
}

SignFunction read_signfn(std::string_view text, const std::string& source) {
  return with_source<SignFunction>(text, source, signfn_from_json);
}

Tournament read_tournament(std::string_view text, const std::string& source) {
  return with_source<Tournament>(text, source, tournament_from_json);
}

PointConfiguration read_points(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int dim = -1;
  std::vector<Point> points;
  auto where = [&] { return source + ":" + std::to_string(lineno); };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (dim < 0) {
      if (t.rfind("dim=", 0) != 0) throw parse_error(where(), "expected header \"dim=<d>\"");
      const std::string value = t.substr(4);
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos ||
          value.size() > 6)
        throw parse_error(where(), "bad dimension \"" + value + "\"");
      dim = std::stoi(value);
      if (dim < 1) throw parse_error(where(), "dimension must be at least 1");
      continue;
    }
    Point p;
    std::size_t start = 0;
    for (;;) {
      const auto comma = t.find(',', start);
      const std::string token = trim(std::string_view(t).substr(start, comma - start));
      try {
        p.push_back(parse_rational(token));
      } catch (const input_error& e) {
        throw parse_error(where(), e.what());
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (static_cast<int>(p.size()) != dim)
      throw parse_error(where(), "expected " + std::to_string(dim) + " coordinates, got " +
                                     std::to_string(p.size()));
    points.push_back(std::move(p));
  }
  if (dim < 0) throw parse_error(source, "missing \"dim=<d>\" header");
  if (static_cast<int>(points.size()) <= dim)
    throw parse_error(source, "need more than " + std::to_string(dim) + " points, got " +
                                  std::to_string(points.size()));
  return PointConfiguration(dim, std::move(points));
}

std::string write_points(const PointConfiguration& config) {
  std::ostringstream out;
  out << "dim=" << config.dim() << '\n';
  for (const auto& p : config.points()) {
    for (std::size_t j = 0; j < p.size(); ++j) out << (j ? "," : "") << p[j].str();
    out << '\n';
  }
  return out.str();
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace orchard::io
