#include "coherent/json_io.hpp"

namespace coherent::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw ValidationError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<Rational> rational_array(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

json rational_array_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(rational_to_json(r));
  return out;
}

}  // namespace

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  throw ValidationError("rationals must be \"p/q\" strings or integers");
}

json to_json(const Partition& p) { return {{"n", p.n()}, {"parts", p.parts()}}; }

Partition partition_from_json(const json& j) {
  const json& parts = field(j, "parts");
  if (!parts.is_array()) throw ValidationError("'parts' must be an array");
  std::vector<int> v;
  for (const auto& x : parts) {
    if (!x.is_number_integer()) throw ValidationError("parts must be integers");
    v.push_back(x.get<int>());
  }
  return Partition(int_field(j, "n"), std::move(v));
}

json to_json(const StepFn& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces())
    pieces.push_back({{"width", rational_to_json(p.width)}, {"height", rational_to_json(p.height)}});
  return {{"pieces", pieces}};
}

StepFn stepfn_from_json(const json& j) {
  const json& pieces = field(j, "pieces");
  if (!pieces.is_array()) throw ValidationError("'pieces' must be an array");
  std::vector<StepPiece> out;
  for (const auto& p : pieces)
    out.push_back({rational_from_json(field(p, "width")), rational_from_json(field(p, "height"))});
  return StepFn(std::move(out));
}

json to_json(const DiscreteLaw& law) {
  json atoms = json::array();
  for (const auto& a : law.atoms)
    atoms.push_back({{"value", rational_to_json(a.value)}, {"prob", rational_to_json(a.prob)}});
  return atoms;
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.to_rows()) rows.push_back(rational_array_to_json(row));
  return rows;
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) rows.push_back(rational_array(row));
  return RationalMatrix::from_rows(rows);
}

json to_json(const CoherentMatrixPair& pair) {
  json j{{"A", to_json(pair.a())}, {"B", to_json(pair.b())}};
  if (pair.rows() == pair.cols()) j["n"] = pair.rows();
  return j;
}

CoherentMatrixPair matrix_pair_from_json(const json& j) {
  RationalMatrix a = matrix_from_json(field(j, "A"));
  RationalMatrix b = matrix_from_json(field(j, "B"));
  if (j.contains("n")) {
    const int n = int_field(j, "n");
    if (a.rows() != static_cast<std::size_t>(n) || a.cols() != static_cast<std::size_t>(n))
      throw ValidationError("'n' does not match the matrix shape");
  }
  return CoherentMatrixPair(std::move(a), std::move(b));
}

json to_json(const ProductWeights& w) {
  return {{"R", rational_array_to_json(w.row)}, {"C", rational_array_to_json(w.col)}};
}

ProductWeights weights_from_json(const json& j) {
  ProductWeights w{rational_array(field(j, "R")), rational_array(field(j, "C"))};
  outer_product(w);  // validates both vectors
  return w;
}

json to_json(const BipartiteGraph& g) { return {{"n", g.n()}, {"adj", g.to_rows()}}; }

BipartiteGraph graph_from_json(const json& j) {
  const json& adj = field(j, "adj");
  if (!adj.is_array()) throw ValidationError("'adj' must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : adj) {
    if (!row.is_array()) throw ValidationError("'adj' rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ValidationError("adjacency entries must be integers");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw ValidationError("empty adjacency matrix");
  auto g = BipartiteGraph::from_rows(rows);
  if (int_field(j, "n") != g.n()) throw ValidationError("'n' does not match the adjacency matrix");
  return g;
}

namespace {

json witness_to_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> json {
        using W = std::decay_t<decltype(x)>;
        json j = to_json(x);
        if constexpr (std::is_same_v<W, Partition>) j["kind"] = "partition";
        else if constexpr (std::is_same_v<W, StepFn>) j["kind"] = "diagram";
        else j["kind"] = "graph";
        return j;
      },
      w);
}

Witness witness_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "partition") return partition_from_json(j);
  if (kind == "diagram") return stepfn_from_json(j);
  if (kind == "graph") return graph_from_json(j);
  throw ValidationError("unknown witness kind '" + kind + "'");
}

SearchMethod method_from_name(const std::string& s) {
  for (auto m : {SearchMethod::exhaustive, SearchMethod::local, SearchMethod::analytic_family})
    if (method_name(m) == s) return m;
  throw ValidationError("unknown search method '" + s + "'");
}

}  // namespace

json to_json(const SearchReport& r) {
  json j;
  j["objective"] = r.objective;
  if (r.k) j["k"] = *r.k;
  if (r.delta) {
    j["delta"] = rational_to_json(*r.delta);
    j["strict"] = r.strict;
  }
  j["n"] = r.n;
  j["best"] = rational_to_json(r.best);
  j["best_float"] = format_float(r.best);
  j["witness"] = witness_to_json(r.witness);
  j["examined"] = r.examined;
  j["method"] = std::string(method_name(r.method));
  json bounds = json::array();
  for (const auto& b : r.bounds)
    bounds.push_back({{"name", b.name},
                      {"value", rational_to_json(b.value)},
                      {"proven", b.proven},
                      {"satisfied", b.satisfied}});
  j["bounds"] = bounds;
  if (r.exceeds_power_bound) j["exceeds_power_bound"] = *r.exceeds_power_bound;
  if (r.gap) j["gap"] = rational_to_json(*r.gap);
  if (!r.stages.empty()) {
    json stages = json::array();
    for (const auto& s : r.stages) stages.push_back(to_json(s));
    j["stages"] = stages;
  }
  return j;
}

SearchReport search_report_from_json(const json& j) {
  SearchReport r;
  r.objective = field(j, "objective").get<std::string>();
  if (j.contains("k")) r.k = j.at("k").get<unsigned>();
  if (j.contains("delta")) r.delta = rational_from_json(j.at("delta"));
  if (j.contains("strict")) r.strict = j.at("strict").get<bool>();
  r.n = int_field(j, "n");
  r.best = rational_from_json(field(j, "best"));
  r.witness = witness_from_json(field(j, "witness"));
  r.examined = field(j, "examined").get<long long>();
  r.method = method_from_name(field(j, "method").get<std::string>());
  for (const auto& b : field(j, "bounds"))
    r.bounds.push_back({field(b, "name").get<std::string>(), rational_from_json(field(b, "value")),
                        field(b, "proven").get<bool>(), field(b, "satisfied").get<bool>()});
  if (j.contains("exceeds_power_bound")) r.exceeds_power_bound = j.at("exceeds_power_bound").get<bool>();
  if (j.contains("gap")) r.gap = rational_from_json(j.at("gap"));
  if (j.contains("stages"))
    for (const auto& s : j.at("stages")) r.stages.push_back(search_report_from_json(s));
  return r;
}

}  // namespace coherent::io
