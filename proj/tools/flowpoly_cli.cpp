// flowpoly: volumes, Kostant values, tables, enumerations and verification suites.
// Exit status: 0 success, 1 a check failed, 2 usage or input error.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "flowpoly/io.hpp"

using namespace flowpoly;

namespace {

struct Check {
  std::string name, expected, got;
  bool pass = false;
};

// Everything a subcommand produces; emitted in one of three formats.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs, results;
  std::vector<Check> checks;
  std::vector<json> items_json;
  std::vector<std::string> items_text;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void input(const std::string& k, const std::string& v) { inputs.push_back({k, v}); }
  void result(const std::string& k, const std::string& v) { results.push_back({k, v}); }
  void result(const std::string& k, const BigCount& v) { result(k, to_string(v)); }
  bool check(const std::string& name, const std::string& expected, const std::string& got) {
    checks.push_back({name, expected, got, expected == got});
    return expected == got;
  }
  bool check(const std::string& name, const BigCount& expected, const BigCount& got) {
    return check(name, to_string(expected), to_string(got));
  }
  bool failed() const {
    for (auto& c : checks)
      if (!c.pass) return true;
    return false;
  }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const Report& r, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json j;
    j["command"] = r.command;
    j["inputs"] = json::object();
    for (auto& [k, v] : r.inputs) j["inputs"][k] = v;
    j["results"] = json::object();
    for (auto& [k, v] : r.results) j["results"][k] = v;
    j["checks"] = json::array();
    for (auto& c : r.checks)
      j["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
    if (!r.items_json.empty()) j["items"] = r.items_json;
    else if (!r.items_text.empty()) j["items"] = r.items_text;
    if (!r.header.empty()) j["table"] = {{"header", r.header}, {"rows", r.rows}};
    j["ok"] = !r.failed();
    os << j.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    if (!r.header.empty()) {
      for (std::size_t c = 0; c < r.header.size(); ++c) os << (c ? "," : "") << csv_field(r.header[c]);
      os << "\n";
      for (auto& row : r.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
        os << "\n";
      }
      return;
    }
    os << "section,name,expected,got,pass\n";
    for (auto& [k, v] : r.inputs) os << "input," << csv_field(k) << ",," << csv_field(v) << ",\n";
    for (std::size_t i = 0; i < r.items_json.size(); ++i)
      os << "item," << i + 1 << ",," << csv_field(r.items_json[i].dump()) << ",\n";
    if (r.items_json.empty())
      for (std::size_t i = 0; i < r.items_text.size(); ++i)
        os << "item," << i + 1 << ",," << csv_field(r.items_text[i]) << ",\n";
    for (auto& [k, v] : r.results) os << "result," << csv_field(k) << ",," << csv_field(v) << ",\n";
    for (auto& c : r.checks)
      os << "check," << csv_field(c.name) << "," << csv_field(c.expected) << "," << csv_field(c.got) << ","
         << (c.pass ? "PASS" : "FAIL") << "\n";
    return;
  }
  os << "# " << r.command << "\n";
  for (auto& [k, v] : r.inputs) os << k << ": " << v << "\n";
  if (!r.header.empty()) {
    std::vector<std::size_t> w(r.header.size(), 0);
    for (std::size_t c = 0; c < r.header.size(); ++c) w[c] = r.header[c].size();
    for (auto& row : r.rows)
      for (std::size_t c = 0; c < row.size() && c < w.size(); ++c) w[c] = std::max(w[c], row[c].size());
    auto line = [&](const std::vector<std::string>& row) {
      std::string s;
      for (std::size_t c = 0; c < row.size(); ++c)
        s += (c ? "  " : "") + std::string(w[c] - row[c].size(), ' ') + row[c];
      s.erase(s.find_last_not_of(' ') + 1);
      os << s << "\n";
    };
    line(r.header);
    for (auto& row : r.rows) line(row);
  }
  for (std::size_t i = 0; i < r.items_text.size(); ++i) os << "[" << i + 1 << "]\n" << r.items_text[i];
  if (r.items_text.empty())
    for (auto& j : r.items_json) os << j.dump() << "\n";
  for (auto& [k, v] : r.results) os << k << ": " << v << "\n";
  for (auto& c : r.checks)
    os << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected << ", got " << c.got << "\n";
}

std::string flow_string(const NetFlow& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  return os.str() + "]";
}

template <class C>
std::string comp_string(const C& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os.str() + ")";
}

// ---------------------------------------------------------------- volume

// Closed form, when the graph and net flow fit one of the known families.
std::optional<BigCount> closed_volume(const DirectedMultigraph& g, const NetFlow& a) {
  auto f = g.family();
  if (f.kind == GraphFamily::Kind::Caracol && a == unit_flow(g))
    return rational_catalan(f.n - f.k, f.k * (f.n - f.k) - 1);
  if (f.kind == GraphFamily::Kind::Multicaracol && a == unit_flow(g))
    return rational_catalan(f.a, f.k * f.a - 1);
  if (f.kind == GraphFamily::Kind::Caracol) {
    long long x = a[0], y = a[f.k < f.n ? f.k : 0];
    if (x < 0 || y < 0 || a != xy_flow_caracol(f.n, f.k, x, y)) return std::nullopt;
    return volume_closed_form(f.n, f.k, x, y);
  }
  if (f.kind == GraphFamily::Kind::Multicaracol) {
    if (a[0] < 0 || a[0] % f.k != 0) return std::nullopt;
    long long x = a[0] / f.k, y = a[1];
    if (y < 0 || a != xy_flow_mcar(f.a, f.k, x, y)) return std::nullopt;
    return volume_closed_form_mcar(f.a, f.k, x, y);
  }
  if (f.kind == GraphFamily::Kind::Complete && a == unit_flow(g)) {
    BigCount p = 1;  // product of the first n-2 Catalan numbers
    for (int j = 1; j <= f.n - 2; ++j) p *= rational_catalan(j + 1, j);
    return p;
  }
  return std::nullopt;
}

void cmd_volume(Report& r, const std::string& gspec, const std::string& fspec, const std::string& method) {
  auto g = parse_graph_spec(gspec);
  auto a = parse_netflow_spec(fspec, g);
  r.input("graph", gspec);
  r.input("netflow", flow_string(a));
  r.input("method", method);
  std::vector<std::pair<std::string, BigCount>> got;
  if (method == "lidskii" || method == "all") got.push_back({"lidskii", volume(g, a)});
  if (method == "unified" || method == "all") got.push_back({"unified", enumerate_unified(g, a)});
  if (method == "closed" || method == "all") {
    auto c = closed_volume(g, a);
    if (c) got.push_back({"closed", *c});
    else if (method == "closed")
      throw Error(Errc::MethodUnavailable, "no closed form for this graph and net flow");
  }
  for (auto& [name, v] : got) r.result(name, v);
  if (method == "all" && got.back().first != "closed") r.result("closed", "n/a");
  for (std::size_t i = 1; i < got.size(); ++i)
    r.check(got[i].first + " = " + got[0].first, got[0].second, got[i].second);
}

void cmd_kostant(Report& r, const std::string& gspec, const std::string& vec) {
  auto g = parse_graph_spec(gspec);
  NetFlow v;
  {
    std::string spec = vec.rfind("custom:", 0) == 0 ? vec : "custom:" + vec;
    v = parse_netflow_spec(spec, g);
  }
  r.input("graph", gspec);
  r.input("vector", flow_string(v));
  r.result("kostant", kostant(g, v));
}

// ---------------------------------------------------------------- tables

void cmd_tables(Report& r, const std::string& kind, int k, int rmax, const std::string& family, int nmax) {
  r.input("kind", kind);
  if (kind == "parking") {
    if (rmax < 0 || rmax > 30) throw Error(Errc::BadParameters, "--rmax must be in 0..30");
    std::vector<int> ks;
    if (k > 0) ks.push_back(k);
    else ks = {1, 2, 3, 4};
    r.input("k", k > 0 ? std::to_string(k) : "1..4");
    r.input("rmax", std::to_string(rmax));
    r.header = {"k", "r"};
    for (int i = 0; i <= rmax; ++i) r.header.push_back("i=" + std::to_string(i));
    for (int kk : ks) {
      if (kk < 1 || kk > 20) throw Error(Errc::BadParameters, "--k must be in 1..20");
      for (int rr = 0; rr <= rmax; ++rr) {
        std::vector<std::string> row{std::to_string(kk), std::to_string(rr)};
        std::vector<BigCount> vals;
        for (int i = 0; i <= rmax; ++i) {
          if (i <= rr) {
            vals.push_back(k_parking_number(kk, rr, i));
            row.push_back(to_string(vals.back()));
          } else {
            row.push_back("");
          }
        }
        r.rows.push_back(row);
        r.check("log-concave T_" + std::to_string(kk) + "(" + std::to_string(rr) + ",.)", "true",
                is_log_concave(vals) ? "true" : "false");
      }
    }
    return;
  }
  if (kind == "gravity-counts") {
    if (nmax < 2 || nmax > 9) throw Error(Errc::BadParameters, "--nmax must be in 2..9");
    r.input("family", family);
    r.input("nmax", std::to_string(nmax));
    if (family == "caracol") {
      r.header = {"n", "k", "in", "out", "Cat(n-k,k(n-k)-1)"};
      for (int n = 2; n <= nmax; ++n)
        for (int kk = 1; kk < n; ++kk) {
          auto in = enumerate_in_gravity(n, kk).size(), out = enumerate_out_gravity(n, kk).size();
          auto cat = rational_catalan(n - kk, kk * (n - kk) - 1);
          r.rows.push_back({std::to_string(n), std::to_string(kk), std::to_string(in), std::to_string(out), to_string(cat)});
          std::string tag = "(" + std::to_string(n) + "," + std::to_string(kk) + ")";
          r.check("in-degree count " + tag, cat, BigCount(in));
          r.check("out-degree count " + tag, cat, BigCount(out));
        }
    } else if (family == "mcar") {
      r.header = {"a", "k", "out", "Cat(a,ka-1)"};
      for (int a = 1; a + 1 <= nmax; ++a)
        for (int kk = 1; a + kk <= nmax; ++kk) {
          auto out = enumerate_out_gravity_mcar(a, kk).size();
          auto cat = rational_catalan(a, kk * a - 1);
          r.rows.push_back({std::to_string(a), std::to_string(kk), std::to_string(out), to_string(cat)});
          r.check("mcar count (" + std::to_string(a) + "," + std::to_string(kk) + ")", cat, BigCount(out));
        }
    } else {
      throw Error(Errc::BadParameters, "--family must be caracol or mcar");
    }
    return;
  }
  throw Error(Errc::BadParameters, "unknown table '" + kind + "' (parking, gravity-counts)");
}

// ---------------------------------------------------------------- verify

void verify_bijections(Report& r, int n, int k) {
  std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
  auto t = fuss_shape(n, k);
  std::set<Composition> paths;
  for_each_dominating(t, [&](const Composition& s) { paths.insert(s); });
  auto sz = BigCount(paths.size());
  {
    std::set<Composition> img;
    std::size_t ok = 0;
    for (auto& d : enumerate_in_gravity(n, k)) {
      auto p = psi_in(d);
      img.insert(p.shape);
      ok += psi_in_inverse(n, k, p) == d;
    }
    r.check("psi_in round trips " + tag, sz, BigCount(ok));
    r.check("psi_in image is all paths " + tag, "true", img == paths ? "true" : "false");
  }
  {
    std::set<Composition> img;
    std::size_t ok = 0;
    for (auto& d : enumerate_out_gravity(n, k)) {
      auto p = psi_out(d);
      img.insert(p.shape);
      ok += psi_out_inverse(n, k, p) == d;
    }
    r.check("psi_out round trips " + tag, sz, BigCount(ok));
    r.check("psi_out image is all paths " + tag, "true", img == paths ? "true" : "false");
  }
  r.check("in/out correspondence " + tag, sz, BigCount(in_out_correspondence(n, k).size()));
  {
    std::size_t ok = 0, total = 0;
    std::set<std::vector<std::pair<int, int>>> img, all;
    for (auto& d : enumerate_out_gravity(n, k)) {
      auto m = xi(d);
      ok += xi_inverse(m) == d;
      ++total;
      std::vector<std::pair<int, int>> key;
      for (auto& s : m.segments) key.push_back({s.color, s.right});
      img.insert(key);
    }
    for (auto& m : enumerate_out_gravity_mcar(n - k, k)) {
      std::vector<std::pair<int, int>> key;
      for (auto& s : m.segments) key.push_back({s.color, s.right});
      all.insert(key);
    }
    r.check("xi round trips " + tag, BigCount(total), BigCount(ok));
    r.check("xi image is all mcar diagrams " + tag, "true", img == all ? "true" : "false");
  }
  for (int i = 0; i <= n - k - 1; ++i) {
    std::set<std::pair<Composition, std::vector<int>>> img, all;
    std::size_t ok = 0;
    for (auto& U : enumerate_truncated(n, k, i)) {
      auto M = theta(U);
      img.insert({M.shape, M.labels});
      ok += theta_inverse(n, k, M) == U;
    }
    for (auto& M : enumerate_multilabeled(k, n - k - 1, i)) all.insert({M.shape, M.labels});
    std::string ti = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(i) + ")";
    r.check("theta round trips " + ti, k_parking_number(k, n - k - 1, i), BigCount(ok));
    r.check("theta image is all multi-labeled paths " + ti, "true", img == all ? "true" : "false");
  }
}

void verify_lidskii(Report& r, int n, int k) {
  std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
  auto g = caracol_k(n, k);
  r.check("unit-flow volume " + tag, rational_catalan(n - k, k * (n - k) - 1), volume_unit_flow(g));
  auto ones = ones_flow(g);
  auto vol = volume(g, ones);
  r.result("volume at ones " + tag, vol);
  r.check("unified count at ones " + tag, vol, enumerate_unified(g, ones));
  r.check("closed form at ones " + tag, volume_closed_form(n, k, 1, 1), vol);
  for (long long x : {1, 2})
    for (long long y : {0, 1, 2})
      r.check("closed form at x=" + std::to_string(x) + ",y=" + std::to_string(y) + " " + tag,
              volume_closed_form(n, k, x, y), volume(g, xy_flow_caracol(n, k, x, y)));
  BigCount levels = 0;
  for (int i = 0; i <= n - k - 1; ++i) levels += binomial(g.m() - g.n(), i) * standardized_count(n, k, i);
  r.check("level identity " + tag, vol, levels);
  for (auto& a : {unit_flow(g), NetFlow(xy_flow_caracol(n, k, 1, 0)), ones}) {
    auto K = kostant(g, a);
    r.check("lattice points (binomial) at " + flow_string(a), K, lattice_points_binomial(g, a));
    r.check("lattice points (multiset) at " + flow_string(a), K, lattice_points_multiset(g, a));
  }
}

void verify_simplex(Report& r, int N, int k) {
  std::size_t count = 0, ok_cover = 0, ok_total = 0;
  for_each_weak_composition(N, k, [&](const Composition& c0) {
    ++count;
    try {
      auto parts = simplex_partition(c0);
      ++ok_cover;
      BigCount t = 0;
      for (auto& p : parts) t += p.total;
      ok_total += t == ipow(k, N);
      if (N == 6 && k == 3 && c0 == Composition{2, 2, 2}) {
        for (std::size_t j = 0; j < parts.size(); ++j)
          r.result("C(c" + std::to_string(j) + ") c=" + comp_string(parts[j].hull), parts[j].total);
        r.result("total", t);
      }
    } catch (const Error&) {
    }
  });
  std::string tag = "(N=" + std::to_string(N) + ",k=" + std::to_string(k) + ")";
  r.check("disjoint cover for every c0 " + tag, BigCount(count), BigCount(ok_cover));
  r.check("multinomial totals = k^N " + tag, BigCount(count), BigCount(ok_total));
}

void verify_orbits(Report& r, int n, int k) {
  for (int i = 0; i <= n - k - 1; ++i) {
    std::string ti = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(i) + ")";
    auto f = standardized_formula(n, k, i);
    auto s = standardized_count(n, k, i);
    r.result("standardized count " + ti, s);
    r.check("standardized count " + ti, f, s);
    r.check("standardized count, direct completions " + ti, f, standardized_count_direct(n, k, i));
    std::size_t orbits = 0, good = 0;
    long long N = initial_height(n, k, i);
    for (auto& orb : cyclic_orbits(n, k, i)) {
      ++orbits;
      BigCount sum = 0;
      for (auto& U : orb) sum += completions(U);
      good += sum * k == BigCount(orb.size()) * ipow(k, N);
    }
    r.check("orbit sums (|O|/k) k^N " + ti, BigCount(orbits), BigCount(good));
  }
}

void cmd_verify(Report& r, const std::string& suite, int n, int k, int N) {
  r.input("suite", suite);
  bool all = suite == "all";
  if (!all && suite != "bijections" && suite != "lidskii" && suite != "simplex" && suite != "orbits")
    throw Error(Errc::BadParameters, "unknown suite '" + suite + "' (bijections, lidskii, simplex, orbits, all)");
  if (suite != "simplex" && (n > 0 || k > 0)) {
    if (n < 2 || k < 1 || k >= n || n > 8) throw Error(Errc::BadParameters, "need 1 <= k < n <= 8");
  }
  int vn = n > 0 ? n : 0, vk = k > 0 ? k : 0;
  if (suite == "bijections" || all) verify_bijections(r, vn ? vn : 6, vk ? vk : 2);
  if (suite == "lidskii" || all) verify_lidskii(r, vn ? vn : 5, vk ? vk : 2);
  if (suite == "simplex" || all) {
    int sk = suite == "simplex" && k > 0 ? k : 3;
    int sN = N >= 0 ? N : 6;
    if (sk < 2 || sk > 6 || sN > 12) throw Error(Errc::BadParameters, "simplex needs 2 <= k <= 6, N <= 12");
    verify_simplex(r, sN, sk);
  }
  if (suite == "orbits" || all) verify_orbits(r, vn ? vn : 5, vk ? vk : 2);
}

// ---------------------------------------------------------------- enumerate

void cmd_enumerate(Report& r, const std::string& object, const std::string& render, long long cap,
                   const std::string& kind, int n, int k, int a, int b, int rr, int i,
                   const std::string& gspec, const std::string& fspec) {
  r.input("object", object);
  bool as_json = render == "json";
  if (render != "json" && render != "text") throw Error(Errc::BadParameters, "--render must be text or json");
  auto guard = [&](const BigCount& est) {
    r.result("count", est);
    if (est > cap) throw Error(Errc::TooLarge, to_string(est) + " items exceed the cap of " + std::to_string(cap));
  };
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw Error(Errc::BadParameters, what);
  };
  std::size_t emitted = 0;
  if (object == "gravity") {
    r.input("kind", kind);
    auto put = [&](const GravityDiagram& d) {
      ++emitted;
      if (as_json) r.items_json.push_back(to_json(d));
      else r.items_text.push_back(render_text(d));
    };
    if (kind == "mcar") {
      need(a >= 1 && k >= 1 && a + k <= 12, "gravity mcar needs --a >= 1, --k >= 1, a + k <= 12");
      guard(rational_catalan(a, k * a - 1));
      for_each_out_gravity_mcar(a, k, put);
    } else {
      need(kind == "in" || kind == "out", "--kind must be in, out or mcar");
      need(n >= 2 && k >= 1 && k < n && n <= 12, "gravity needs 1 <= k < n <= 12");
      guard(rational_catalan(n - k, k * (n - k) - 1));
      if (kind == "in") for_each_in_gravity(n, k, put);
      else for_each_out_gravity(n, k, put);
    }
  } else if (object == "dyck") {
    need(a >= 1 && b >= 1 && a + b <= 40, "dyck needs --a, --b >= 1, a + b <= 40");
    auto t = rational_shape(a, b);
    guard(rational_catalan(a, b));
    for_each_t_dyck(t, [&](const TDyckPath& p) {
      ++emitted;
      if (as_json) r.items_json.push_back(to_json(p));
      else r.items_text.push_back("s = " + comp_string(p.shape) + "\n");
    });
  } else if (object == "unified") {
    auto g = parse_graph_spec(gspec);
    auto fl = parse_netflow_spec(fspec, g);
    r.input("graph", gspec);
    r.input("netflow", flow_string(fl));
    guard(enumerate_unified(g, fl));
    for_each_unified(g, fl, [&](const UnifiedDiagram& U) {
      ++emitted;
      if (as_json) r.items_json.push_back(to_json(U));
      else r.items_text.push_back(render_text(U));
    });
  } else if (object == "truncated") {
    need(n >= 2 && k >= 1 && k < n && n <= 12 && i >= 0 && i <= n - k - 1, "truncated needs 1 <= k < n <= 12, 0 <= i < n-k");
    guard(k_parking_number(k, n - k - 1, i));
    for_each_truncated(n, k, i, [&](const TruncatedDiagram& U) {
      ++emitted;
      if (as_json) r.items_json.push_back(to_json(U));
      else r.items_text.push_back(render_text(U));
    });
  } else if (object == "multilabeled") {
    need(k >= 1 && rr >= 0 && i >= 0 && i <= rr && rr <= 10, "multilabeled needs --k >= 1, 0 <= i <= r <= 10");
    guard(k_parking_number(k, rr, i));
    for_each_multilabeled(k, rr, i, [&](const MultiLabeledDyckPath& M) {
      ++emitted;
      if (as_json) {
        r.items_json.push_back(to_json(M));
      } else {
        std::ostringstream os;
        os << "shape " << comp_string(M.shape) << " labels";
        for (int L : M.labels) os << ' ' << (L <= 0 ? "b" + std::to_string(-L) : std::to_string(L));
        r.items_text.push_back(os.str() + "\n");
      }
    });
  } else {
    throw Error(Errc::BadParameters, "unknown object '" + object + "' (gravity, dyck, unified, truncated, multilabeled)");
  }
  r.check("emitted = count", r.results.front().second, std::to_string(emitted));
}

int exit_code_for(Errc e) {
  switch (e) {
    case Errc::InternalMismatch: return 1;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flowpoly: flow polytope volumes, Kostant partition functions and unified diagrams"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  std::string format = "text", out_file;
  long long cap = 1000000;
  app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_file, "write the report to FILE instead of stdout");
  app.add_option("--cap", cap, "refuse to enumerate more items than this")->check(CLI::PositiveNumber);

  std::string gspec, fspec = "unit", method = "all", vec;
  auto* vol = app.add_subcommand("volume", "normalized volume of F_G(a)");
  vol->add_option("--graph", gspec, "graph spec")->required();
  vol->add_option("--netflow", fspec, "unit, ones, xy:x=..,y=.. or custom:[..]");
  vol->add_option("--method", method)->check(CLI::IsMember({"lidskii", "unified", "closed", "all"}));

  auto* kos = app.add_subcommand("kostant", "evaluate K_G(v)");
  kos->add_option("--graph", gspec, "graph spec")->required();
  kos->add_option("--vector", vec, "[v1,...,v_{n+1}]")->required();

  std::string table_kind, family = "caracol";
  int tk = 0, rmax = 5, nmax = 7;
  auto* tab = app.add_subcommand("tables", "k-parking triangles and gravity-diagram counts");
  tab->add_option("kind", table_kind, "parking or gravity-counts")->required();
  tab->add_option("--k", tk, "parking: one k (default: 1..4)");
  tab->add_option("--rmax", rmax);
  tab->add_option("--family", family, "caracol or mcar");
  tab->add_option("--nmax", nmax);

  std::string suite;
  int vn = 0, vk = 0, vN = -1;
  auto* ver = app.add_subcommand("verify", "run invariant suites");
  ver->add_option("suite", suite, "bijections, lidskii, simplex, orbits or all")->required();
  ver->add_option("--n", vn);
  ver->add_option("--k", vk);
  ver->add_option("--N", vN);

  std::string object, render = "text", gkind = "out";
  int en = 0, ek = 0, ea = 0, eb = 0, er = 0, ei = 0;
  auto* en_cmd = app.add_subcommand("enumerate", "list objects in canonical order");
  en_cmd->add_option("object", object, "gravity, dyck, unified, truncated or multilabeled")->required();
  en_cmd->add_option("--render", render, "text or json");
  en_cmd->add_option("--kind", gkind, "gravity: in, out or mcar");
  en_cmd->add_option("--n", en);
  en_cmd->add_option("--k", ek);
  en_cmd->add_option("--a", ea);
  en_cmd->add_option("--b", eb);
  en_cmd->add_option("--r", er);
  en_cmd->add_option("--i", ei);
  en_cmd->add_option("--graph", gspec);
  en_cmd->add_option("--netflow", fspec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report r;
  for (int i = 1; i < argc; ++i) r.command += (i > 1 ? " " : "") + std::string(argv[i]);
  auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (*vol) cmd_volume(r, gspec, fspec, method);
    else if (*kos) cmd_kostant(r, gspec, vec);
    else if (*tab) cmd_tables(r, table_kind, tk, rmax, family, nmax);
    else if (*ver) cmd_verify(r, suite, vn, vk, vN);
    else if (*en_cmd) cmd_enumerate(r, object, render, cap, gkind, en, ek, ea, eb, er, ei, gspec, fspec);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  if (r.failed()) code = 1;

  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) {
      std::cerr << "error: cannot write " << out_file << "\n";
      return 2;
    }
    emit(r, format, f);
  } else {
    emit(r, format, std::cout);
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "time: " << ms << " ms\n";
  return code;
}
