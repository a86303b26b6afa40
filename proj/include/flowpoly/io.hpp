#pragma once
// Graph / net-flow spec parsing and JSON encodings of every object kind.
//
//   graph:   caracol:n=7,k=2 | mcar:a=3,k=2 | ps:n=5 | complete:n=5 | edges:[(1,2),(1,3),...]
//   netflow: unit | ones | xy:x=1,y=2 | custom:[1,0,-1]
//
// Big counts travel as decimal strings so no JSON reader truncates them.
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowpoly/gravity.hpp"
#include "flowpoly/kostant.hpp"
#include "flowpoly/lidskii.hpp"
#include "flowpoly/paths.hpp"
#include "flowpoly/unified.hpp"

namespace flowpoly {

using json = nlohmann::json;

// ---------------------------------------------------------------- parsing

namespace detail {

class SpecCursor {
 public:
  explicit SpecCursor(const std::string& s) : s_(s) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, "at position " + std::to_string(p_) + " in '" + s_ + "': " + what);
  }
  void skip_ws() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool at_end() {
    skip_ws();
    return p_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return p_ < s_.size() && s_[p_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++p_;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++p_;
    return true;
  }
  std::string word() {
    skip_ws();
    std::size_t b = p_;
    while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
    if (b == p_) fail("expected a name");
    return s_.substr(b, p_ - b);
  }
  long long integer() {
    skip_ws();
    std::size_t b = p_;
    if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) ++p_;
    std::size_t digits = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (digits == p_) {
      p_ = b;
      fail("expected an integer");
    }
    if (p_ - digits > 15) fail("integer too large");
    return std::stoll(s_.substr(b, p_ - b));
  }
  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }
  // name=value,name=value
  std::map<std::string, long long> params(std::initializer_list<const char*> allowed) {
    std::map<std::string, long long> out;
    do {
      std::string key = word();
      bool ok = false;
      for (auto* a : allowed) ok = ok || key == a;
      if (!ok) fail("unknown parameter '" + key + "'");
      expect('=');
      if (out.count(key)) fail("duplicate parameter '" + key + "'");
      out[key] = integer();
    } while (accept(','));
    for (auto* a : allowed)
      if (!out.count(a)) fail(std::string("missing parameter '") + a + "'");
    return out;
  }
  std::vector<long long> int_list() {
    std::vector<long long> v;
    expect('[');
    if (!accept(']')) {
      do v.push_back(integer());
      while (accept(','));
      expect(']');
    }
    return v;
  }

 private:
  const std::string& s_;
  std::size_t p_ = 0;
};

inline int small_int(SpecCursor& c, long long v, long long lo, long long hi, const char* what) {
  if (v < lo || v > hi)
    c.fail(std::string(what) + " out of range [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

}  // namespace detail

inline DirectedMultigraph parse_graph_spec(const std::string& spec) {
  detail::SpecCursor c(spec);
  std::string kind = c.word();
  c.expect(':');
  DirectedMultigraph g;
  if (kind == "caracol") {
    auto p = c.params({"n", "k"});
    g = caracol_k(detail::small_int(c, p["n"], 2, 64, "n"), detail::small_int(c, p["k"], 1, 63, "k"));
  } else if (kind == "mcar") {
    auto p = c.params({"a", "k"});
    g = multicaracol(detail::small_int(c, p["a"], 1, 64, "a"), detail::small_int(c, p["k"], 1, 64, "k"));
  } else if (kind == "ps") {
    auto p = c.params({"n"});
    g = pitman_stanley(detail::small_int(c, p["n"], 2, 64, "n"));
  } else if (kind == "complete") {
    auto p = c.params({"n"});
    g = complete_graph(detail::small_int(c, p["n"], 1, 64, "n"));
  } else if (kind == "edges") {
    std::vector<std::pair<int, int>> e;
    int nv = 0;
    c.expect('[');
    if (!c.accept(']')) {
      do {
        c.expect('(');
        int u = detail::small_int(c, c.integer(), 1, 1000, "vertex");
        c.expect(',');
        int v = detail::small_int(c, c.integer(), 1, 1000, "vertex");
        c.expect(')');
        e.push_back({u, v});
        nv = std::max({nv, u, v});
      } while (c.accept(','));
      c.expect(']');
    }
    c.finish();
    return from_edge_list(nv, e);
  } else {
    throw Error(Errc::ParseError, "at position 0 in '" + spec + "': unknown graph kind '" + kind + "'");
  }
  c.finish();
  return g;
}

inline NetFlow parse_netflow_spec(const std::string& spec, const DirectedMultigraph& g) {
  detail::SpecCursor c(spec);
  std::string kind = c.word();
  NetFlow a;
  if (kind == "unit") {
    a = unit_flow(g);
  } else if (kind == "ones") {
    a = ones_flow(g);
  } else if (kind == "xy") {
    c.expect(':');
    auto p = c.params({"x", "y"});
    if (p["x"] < 0 || p["y"] < 0) c.fail("x and y must be nonnegative");
    auto f = g.family();
    if (f.kind == GraphFamily::Kind::Caracol) a = xy_flow_caracol(f.n, f.k, p["x"], p["y"]);
    else if (f.kind == GraphFamily::Kind::Multicaracol) a = xy_flow_mcar(f.a, f.k, p["x"], p["y"]);
    else throw Error(Errc::MethodUnavailable, "xy net flows are defined for caracol and mcar graphs only");
  } else if (kind == "custom") {
    c.expect(':');
    a = c.int_list();
  } else {
    c.fail("unknown net flow '" + kind + "'");
  }
  c.finish();
  if (a.size() != static_cast<std::size_t>(g.num_vertices()))
    throw Error(Errc::LengthMismatch, "net flow has " + std::to_string(a.size()) + " entries, graph has " +
                                          std::to_string(g.num_vertices()) + " vertices");
  long long s = 0;
  for (auto x : a) s += x;
  if (s != 0) throw Error(Errc::SumNonzero, "net flow entries must sum to zero");
  return a;
}

// ---------------------------------------------------------------- JSON

inline json big_to_json(const BigCount& x) { return to_string(x); }

inline BigCount big_from_json(const json& j) {
  if (j.is_number_integer()) return BigCount(j.get<long long>());
  auto s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
    throw Error(Errc::ParseError, "bad integer string '" + s + "'");
  return BigCount(s);
}

inline json to_json(const DirectedMultigraph& g) {
  json e = json::array();
  for (auto& [u, v] : g.edge_list()) e.push_back({u, v});
  return {{"type", "graph"}, {"spec", describe(g.family())}, {"vertices", g.num_vertices()}, {"edges", e}};
}

inline DirectedMultigraph graph_from_json(const json& j) {
  std::vector<std::pair<int, int>> e;
  for (auto& p : j.at("edges")) e.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  auto spec = j.value("spec", std::string("edges"));
  if (spec != "edges") {
    auto g = parse_graph_spec(spec);
    if (g.edge_list() != from_edge_list(j.at("vertices").get<int>(), e).edge_list())
      throw Error(Errc::ParseError, "edge list does not match family spec");
    return g;
  }
  return from_edge_list(j.at("vertices").get<int>(), e);
}

inline json to_json(const TDyckPath& p) { return {{"type", "t-dyck"}, {"s", p.shape}, {"t", p.reference}}; }

inline TDyckPath t_dyck_from_json(const json& j) {
  return make_t_dyck(j.at("s").get<Composition>(), j.at("t").get<Composition>());
}

inline json to_json(const LabeledTDyckPath& p) {
  json j = to_json(p.path);
  j["type"] = "labeled-t-dyck";
  j["labels"] = p.labels;
  return j;
}

inline LabeledTDyckPath labeled_from_json(const json& j) {
  return {t_dyck_from_json(j), j.at("labels").get<std::vector<int>>()};
}

// barred labels are written as strings "b0", "b1", ...; cars as integers
inline json to_json(const MultiLabeledDyckPath& M) {
  json labels = json::array();
  for (int L : M.labels) {
    if (L <= 0) labels.push_back("b" + std::to_string(-L));
    else labels.push_back(L);
  }
  return {{"type", "multilabeled"}, {"k", M.k}, {"r", M.r}, {"i", M.i}, {"shape", M.shape}, {"labels", labels}};
}

inline MultiLabeledDyckPath multilabeled_from_json(const json& j) {
  MultiLabeledDyckPath M{j.at("k").get<int>(), j.at("r").get<int>(), j.at("i").get<int>(),
                         j.at("shape").get<Composition>(), {}};
  for (auto& L : j.at("labels")) {
    if (L.is_string()) {
      auto s = L.get<std::string>();
      if (s.size() < 2 || s[0] != 'b') throw Error(Errc::ParseError, "bad barred label '" + s + "'");
      M.labels.push_back(-std::stoi(s.substr(1)));
    } else {
      M.labels.push_back(L.get<int>());
    }
  }
  if (!is_valid(M)) throw Error(Errc::MalformedDiagram, "not a multi-labeled Dyck path");
  return M;
}

inline json to_json(const ParkingPreference& pp) {
  return {{"type", "parking-preference"}, {"motorcycles", pp.motorcycle_prefs}, {"cars", pp.car_prefs}};
}

inline ParkingPreference preference_from_json(const json& j) {
  return {j.at("motorcycles").get<std::vector<std::vector<int>>>(), j.at("cars").get<std::vector<int>>()};
}

inline json to_json(const GravityDiagram& d) {
  json segs = json::array(), colors = json::array();
  for (auto& s : d.segments) {
    segs.push_back({s.row, s.left, s.right});
    if (d.kind == DiagramKind::McarOut) colors.push_back(s.color);
  }
  json j{{"type", "gravity"}, {"kind", kind_name(d.kind)}, {"n", d.n}, {"k", d.k}, {"segments", segs}};
  if (d.kind == DiagramKind::McarOut) {
    j["a"] = d.a;
    j["colors"] = colors;
  }
  return j;
}

inline GravityDiagram gravity_from_json(const json& j) {
  auto kind = j.at("kind").get<std::string>();
  GravityDiagram d;
  d.n = j.at("n").get<int>();
  d.k = j.at("k").get<int>();
  d.a = d.n - d.k;
  if (kind == "in") d.kind = DiagramKind::In;
  else if (kind == "out") d.kind = DiagramKind::Out;
  else if (kind == "mcar-out") {
    d.kind = DiagramKind::McarOut;
    d.a = j.at("a").get<int>();
  } else {
    throw Error(Errc::ParseError, "unknown gravity kind '" + kind + "'");
  }
  const auto& segs = j.at("segments");
  for (std::size_t r = 0; r < segs.size(); ++r) {
    Segment s{segs[r].at(0).get<int>(), segs[r].at(1).get<int>(), segs[r].at(2).get<int>(), 0};
    if (d.kind == DiagramKind::McarOut) s.color = j.at("colors").at(r).get<int>();
    d.segments.push_back(s);
  }
  bool ok = d.kind == DiagramKind::In ? is_valid_in(d) : d.kind == DiagramKind::Out ? is_valid_out(d) : is_valid_mcar_out(d);
  if (!ok) throw Error(Errc::MalformedDiagram, "not a canonical gravity diagram");
  return d;
}

inline json to_json(const TruncatedDiagram& U) {
  json segs = json::array();
  for (auto& s : U.gamma) segs.push_back({s.row, s.left, s.right});
  return {{"type", "truncated"}, {"n", U.n}, {"k", U.k}, {"i", U.i},
          {"q", U.q}, {"kappa", U.kappa}, {"segments", segs}};
}

inline TruncatedDiagram truncated_from_json(const json& j) {
  TruncatedDiagram U{j.at("n").get<int>(), j.at("k").get<int>(), j.at("i").get<int>(),
                     j.at("q").get<Composition>(), j.at("kappa").get<std::vector<int>>(), {}};
  for (auto& s : j.at("segments")) U.gamma.push_back({s.at(0).get<int>(), s.at(1).get<int>(), s.at(2).get<int>(), 0});
  if (!is_valid(U)) throw Error(Errc::MalformedDiagram, "not a truncated diagram");
  return U;
}

inline json to_json(const UnifiedDiagram& U) {
  return {{"type", "unified"}, {"s", U.path.shape}, {"t", U.path.reference}, {"sigma", U.sigma},
          {"alpha", U.alpha}, {"flow", U.gamma}};
}

inline UnifiedDiagram unified_from_json(const json& j) {
  return {t_dyck_from_json(j), j.at("sigma").get<std::vector<int>>(),
          j.at("alpha").get<std::vector<std::vector<long long>>>(), j.at("flow").get<std::vector<long long>>()};
}

inline json to_json(const VectorPartition& v) {
  return {{"type", "vector-partition"}, {"counts", v.counts}, {"weight", big_to_json(v.weight)}};
}

inline VectorPartition vector_partition_from_json(const json& j) {
  VectorPartition v;
  v.counts = j.at("counts").get<decltype(v.counts)>();
  v.weight = big_from_json(j.at("weight"));
  return v;
}

}  // namespace flowpoly
