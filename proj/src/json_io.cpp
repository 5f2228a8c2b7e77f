#include "tetra/json_io.hpp"

#include "tetra/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tetra {

namespace {

std::vector<std::vector<int>> int_rows(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be a JSON array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidInput(std::string(what) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " entries must be integers");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

Json to_json(const Asm& a) { return Json(a.entries()); }
Json to_json(const MonotoneTriangle& m) { return Json(m.rows()); }
Json to_json(const Tsscpp& t) { return Json(t.heights()); }
Json to_json(const StaircaseArray& x) { return Json(x.rows()); }

Json to_json(const Tournament& t) {
  Json out = Json::array();
  for (const auto& g : t.games()) out.push_back({g[0], g[1], g[2]});
  return out;
}

Json ideal_to_json(const TetraPoset& t, const OrderIdeal& ideal) {
  Json out = Json::array();
  for (const Vertex& v : ideal.sorted_vertices(t)) out.push_back({v.c1, v.c2, v.c3});
  return out;
}

Json poset_to_json(const Subposet& p) {
  const TetraPoset& t = p.parent();
  Json out;
  out["n"] = p.n();
  out["colors"] = Json::array();
  for (Color c : p.colors().colors()) out["colors"].push_back(std::string(1, color_letter(c)));
  if (p.is_dual()) out["dual"] = true;
  out["vertices"] = Json::array();
  for (const Vertex& v : t.vertices()) out["vertices"].push_back({v.c1, v.c2, v.c3});
  Json edges = Json::object();
  for (Color c : p.colors().colors()) {
    Json list = Json::array();
    for (const Edge& e : t.edges(c)) {
      const Vertex& lo = t.vertex(p.is_dual() ? e.high : e.low);
      const Vertex& hi = t.vertex(p.is_dual() ? e.low : e.high);
      list.push_back({{lo.c1, lo.c2, lo.c3}, {hi.c1, hi.c2, hi.c3}});
    }
    edges[std::string(1, color_letter(c))] = std::move(list);
  }
  out["edges"] = std::move(edges);
  return out;
}

Json to_json(const SparsePoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json xs = Json::object();
    for (std::size_t k = 0; k < m.x.size(); ++k)
      if (m.x[k] != 0) xs[std::to_string(k + 1)] = m.x[k];
    out.push_back({{"lambda", m.lambda}, {"x", std::move(xs)}, {"coeff", c.str()}});
  }
  return out;
}

Json to_json(const QPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

Asm asm_from_json(const Json& j) { return Asm(int_rows(j, "ASM")); }
MonotoneTriangle mt_from_json(const Json& j) { return MonotoneTriangle(int_rows(j, "monotone triangle")); }
Tsscpp tsscpp_from_json(const Json& j) { return Tsscpp(int_rows(j, "TSSCPP")); }
StaircaseArray array_from_json(const Json& j) { return StaircaseArray::from_rows(int_rows(j, "staircase array")); }

Tournament tournament_from_json(const Json& j) {
  const auto games = int_rows(j, "tournament");
  std::vector<std::array<int, 3>> triples;
  for (const auto& g : games) {
    if (g.size() != 3) throw InvalidInput("tournament games must be [i, j, winner]");
    triples.push_back({g[0], g[1], g[2]});
  }
  int n = 1;
  while (n * (n - 1) / 2 < static_cast<int>(triples.size())) ++n;
  if (n * (n - 1) / 2 != static_cast<int>(triples.size()))
    throw InvalidInput("number of games is not n choose 2 for any n");
  return Tournament::from_games(n, triples);
}

OrderIdeal ideal_from_json(const Subposet& p, const Json& j) {
  const auto rows = int_rows(j, "ideal");
  OrderIdeal ideal{std::vector<bool>(p.size(), false)};
  for (const auto& r : rows) {
    if (r.size() != 3) throw InvalidInput("ideal members must be [c1, c2, c3]");
    auto id = p.parent().find({r[0], r[1], r[2]});
    if (!id) throw InvalidInput("vertex [" + std::to_string(r[0]) + "," + std::to_string(r[1]) + "," +
                                std::to_string(r[2]) + "] is not in T_" + std::to_string(p.n()));
    ideal.members[*id] = true;
  }
  if (!is_ideal(p, ideal)) throw InvalidInput("vertex set is not down-closed in T_n(" + p.colors().letters() + ")");
  return ideal;
}

SparsePoly sparse_poly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial must be a JSON array of terms");
  SparsePoly p;
  for (const auto& t : j) {
    try {
      Monomial m;
      m.lambda = t.at("lambda").get<unsigned>();
      for (const auto& [k, e] : t.at("x").items()) {
        const std::size_t idx = std::stoul(k);
        if (idx == 0) throw InvalidInput("x indices are 1-based");
        if (m.x.size() < idx) m.x.resize(idx, 0);
        m.x[idx - 1] = e.get<unsigned>();
      }
      p.add_term(m, BigInt(t.at("coeff").get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("malformed polynomial term: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(std::string("malformed polynomial term: ") + e.what());
    }
  }
  return p;
}

}  // namespace tetra
