#include "ecpairs/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ecpairs/census.hpp"
#include "ecpairs/curves.hpp"
#include "ecpairs/kernels.hpp"
#include "ecpairs/lists_cycles.hpp"
#include "ecpairs/pairs.hpp"
#include "ecpairs/quadform.hpp"

namespace ecpairs::cli {

namespace {

using Json = nlohmann::ordered_json;

// A payload plus, for tabular commands, the member holding the rows.
struct Result {
  Json payload = Json::object();
  std::string table;
  std::vector<std::string> columns;
  int code = kExitOk;
};

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string join(const Json& arr, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr[i].is_array() ? join(arr[i], sep) : scalar_text(arr[i]);
  }
  return s;
}

std::string cell(const Json& v) { return v.is_array() ? join(v, ";") : scalar_text(v); }

void print_text(const Json& payload, std::ostream& out) {
  for (const auto& [key, v] : payload.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << key << ":\n";
      for (const auto& row : v) {
        out << " ";
        for (const auto& [rk, rv] : row.items()) out << ' ' << rk << '=' << cell(rv);
        out << '\n';
      }
    } else if (v.is_array()) {
      out << key << ": " << join(v, " ") << '\n';
    } else {
      out << key << ": " << scalar_text(v) << '\n';
    }
  }
}

void print_csv(const Result& r, std::ostream& out) {
  if (!r.table.empty()) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
    out << '\n';
    for (const auto& row : r.payload.at(r.table)) {
      for (std::size_t i = 0; i < r.columns.size(); ++i) {
        out << (i ? "," : "") << cell(row.at(r.columns[i]));
      }
      out << '\n';
    }
    return;
  }
  bool first = true;
  for (const auto& item : r.payload.items()) {
    out << (first ? "" : ",") << item.key();
    first = false;
  }
  out << '\n';
  first = true;
  for (const auto& item : r.payload.items()) {
    out << (first ? "" : ",") << cell(item.value());
    first = false;
  }
  out << '\n';
}

Json cycle_json(const SixCycle& c) {
  return Json{{"a", c.a},
              {"b", c.b},
              {"values", c.values},
              {"proper", c.proper},
              {"anomalous", c.anomalous}};
}

Json record_json(const CensusRecord& r) {
  return Json{{"d", r.d}, {"h", r.h}, {"sqrt_d_over_h2", r.xi}, {"Y", r.Y}, {"c_hat", r.c_hat}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic pairs, lists and cycles over CM fields", "ecpairs"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false, as_csv = false;
  u64 seed = kDefaultSeed;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string kernel = "auto";
  app.add_flag("--json", as_json, "JSON output");
  app.add_flag("--csv", as_csv, "CSV output");
  app.add_option("--seed", seed, "Seed for random point sampling")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--kernel", kernel, "Kernel backend")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
      ->capture_default_str();

  std::function<Result()> action;
  const auto bind = [&](CLI::App* sub, std::function<Result()> fn) {
    sub->callback([&action, fn] { action = fn; });
  };

  // pair
  u64 pair_p = 0, pair_q = 0;
  std::optional<u64> pair_d;
  auto* pair = app.add_subcommand("pair", "Test whether (p, q) is an elliptic pair");
  pair->add_option("p", pair_p)->required();
  pair->add_option("q", pair_q)->required();
  pair->add_option("--d", pair_d, "Require this d");
  bind(pair, [&] {
    Result r;
    const auto found = make_pair(pair_p, pair_q);
    const bool ok = found && (!pair_d || found->d == *pair_d);
    r.payload = {{"p", pair_p}, {"q", pair_q}, {"is_pair", ok}};
    r.payload["d"] = found ? Json(found->d) : Json(nullptr);
    r.payload["A"] = found ? Json(found->A) : Json(nullptr);
    return r;
  });

  // decompose
  u64 dec_p = 0, dec_d = 0;
  auto* dec = app.add_subcommand("decompose", "4p = a^2 + d b^2 (p = a^2 + 3b^2 for d = 3)");
  dec->add_option("p", dec_p)->required();
  dec->add_option("d", dec_d)->required();
  bind(dec, [&] {
    Result r;
    std::optional<CmDecomposition> c;
    if (dec_d == 3) {
      // A prime p = 2 (mod 3) simply has no representation.
      if (dec_p > 3 && dec_p % 3 == 2 && is_prime(dec_p)) {
        throw NotFoundError("no representation of " + std::to_string(dec_p));
      }
      c = decompose3(dec_p);
    } else {
      c = decompose(dec_p, dec_d);
    }
    if (!c) throw NotFoundError("no representation of " + std::to_string(dec_p));
    r.payload = {{"p", c->p}, {"d", c->d}, {"a", c->a}, {"b", c->b}};
    return r;
  });

  // order
  u64 ord_p = 0, ord_k = 0;
  auto* ord = app.add_subcommand("order", "Group order of y^2 = x^3 + k over F_p");
  ord->add_option("p", ord_p)->required();
  ord->add_option("k", ord_k)->required();
  bind(ord, [&] {
    Result r;
    std::mt19937_64 rng(seed);
    const u64 n = curve_order(ord_p, ord_k, rng);
    r.payload = {{"p", ord_p}, {"k", ord_k}, {"order", n}, {"seed", seed}};
    return r;
  });

  // orders
  u64 ords_p = 0;
  auto* ords = app.add_subcommand("orders", "The six possible orders for p = 1 (mod 3)");
  ords->add_option("p", ords_p)->required();
  bind(ords, [&] {
    Result r;
    const SixOrders s = six_orders(ords_p);
    r.payload = {{"p", s.p},
                 {"a", s.a},
                 {"b", s.b},
                 {"sixth_power", s.sixth_power},
                 {"cubic_not_quadratic", s.cubic_not_quadratic},
                 {"quadratic_not_cubic", s.quadratic_not_cubic},
                 {"neither", s.neither}};
    return r;
  });

  // list
  u64 list_p = 0, list_d = 0;
  auto* list = app.add_subcommand("list", "Maximal ascending elliptic list from p1");
  list->add_option("p1", list_p)->required();
  list->add_option("d", list_d)->required();
  bind(list, [&] {
    Result r;
    const EllipticList l = build_list(list_p, list_d);
    r.payload = {{"d", l.d}, {"a1", l.a1}, {"b", l.b}, {"length", l.primes.size()}, {"primes", l.primes}};
    return r;
  });

  // longest-list
  u64 ll_d = 0, ll_bound = 0;
  auto* ll = app.add_subcommand("longest-list", "Longest list over starts below a bound");
  ll->add_option("d", ll_d)->required();
  ll->add_option("--bound", ll_bound)->required();
  bind(ll, [&] {
    Result r;
    const LongestList l = longest_list(ll_d, ll_bound, threads);
    r.payload = {{"d", ll_d}, {"bound", ll_bound}, {"length", l.length}, {"start", l.start}};
    return r;
  });

  // mld
  u64 mld_d = 0, mld_bound = 10000;
  auto* mld = app.add_subcommand("mld", "Maximum allowable length, longest found, and difference");
  mld->add_option("d", mld_d)->required();
  mld->add_option("--bound", mld_bound)->capture_default_str();
  bind(mld, [&] {
    Result r;
    const u64 m = max_allowable(mld_d);
    const LongestList l = longest_list(mld_d, mld_bound, threads);
    r.payload = {{"d", mld_d},
                 {"h", class_number(mld_d)},
                 {"M", m},
                 {"L_hat", l.length},
                 {"f_hat", static_cast<i64>(m) - static_cast<i64>(l.length)},
                 {"start", l.start},
                 {"bound", mld_bound}};
    return r;
  });

  // cycle-search
  u64 cs_bound = 0;
  bool cs_anomalous = false, cs_no_mod7 = false;
  auto* cs = app.add_subcommand("cycle-search", "Search elliptic 6-cycles over d = 3");
  cs->add_option("--bound", cs_bound, "Least member below this")->required();
  cs->add_flag("--anomalous", cs_anomalous, "Anomalous cycles instead of proper ones");
  cs->add_flag("--no-mod7-filter", cs_no_mod7, "Do not restrict to a = -1 (mod 7), 7 | b");
  bind(cs, [&] {
    Result r;
    CycleSearch s;
    s.bound = cs_bound;
    s.kind = cs_anomalous ? CycleKind::anomalous : CycleKind::proper;
    s.mod7_filter = !cs_no_mod7;
    s.threads = threads;
    Json rows = Json::array();
    for (const auto& c : find_6cycles(s)) rows.push_back(cycle_json(c));
    r.payload = {{"bound", cs_bound},
                 {"kind", cs_anomalous ? "anomalous" : "proper"},
                 {"mod7_filter", s.mod7_filter},
                 {"count", rows.size()},
                 {"cycles", rows}};
    r.table = "cycles";
    r.columns = {"a", "b", "values", "proper", "anomalous"};
    return r;
  });

  // cycle-from-ab
  i64 cab_a = 0, cab_b = 0;
  auto* cab = app.add_subcommand("cycle-from-ab", "The six values generated by (a, b)");
  cab->add_option("a", cab_a)->required();
  cab->add_option("b", cab_b)->required();
  bind(cab, [&] {
    Result r;
    r.payload = cycle_json(cycle_from_ab(cab_a, cab_b));
    return r;
  });

  // aliquot
  std::vector<u64> aq_primes;
  u64 aq_limit = kDefaultAliquotLimit;
  auto* aq = app.add_subcommand("aliquot", "Least k realizing the cycle p1 -> p2 -> ... -> p1");
  aq->add_option("primes", aq_primes)->required()->expected(1, 64);
  aq->add_option("--limit", aq_limit)->capture_default_str();
  bind(aq, [&] {
    Result r;
    const u64 k = aliquot_k(aq_primes, aq_limit, seed);
    r.payload = {{"primes", aq_primes}, {"k", k}, {"limit", aq_limit}, {"seed", seed}};
    return r;
  });

  // anomalous
  u64 an_d = 0, an_below = 0;
  auto* an = app.add_subcommand("anomalous", "Primes p with (p, p) an elliptic pair over d");
  an->add_option("d", an_d)->required();
  an->add_option("--below", an_below)->required();
  bind(an, [&] {
    Result r;
    r.payload = {{"d", an_d}, {"below", an_below}, {"primes", anomalous_primes(an_d, an_below)}};
    return r;
  });

  // mod7-table
  auto* m7 = app.add_subcommand("mod7-table", "Cycle members and their product modulo 7");
  bind(m7, [&] {
    Result r;
    Json rows = Json::array();
    for (const auto& row : mod7_table()) {
      rows.push_back({{"a", row.a}, {"b", row.b}, {"residues", row.residues}, {"product", row.product}});
    }
    r.payload = {{"rows", rows}};
    r.table = "rows";
    r.columns = {"a", "b", "residues", "product"};
    return r;
  });

  // census
  u64 cen_d = 0, cen_x = 0;
  auto* cen = app.add_subcommand("census", "Count pairs p <= q < X over d");
  cen->add_option("d", cen_d)->required();
  cen->add_option("--x", cen_x)->required();
  bind(cen, [&] {
    Result r;
    const u64 y = count_pairs(cen_d, cen_x, threads);
    r.payload = {{"d", cen_d}, {"X", cen_x}, {"Y", y}, {"c_hat", cd_estimate(cen_x, y)}};
    return r;
  });

  // scan-census
  u64 sc_x = 0;
  auto* sc = app.add_subcommand("scan-census", "Histogram of d over all prime pairs below X");
  sc->add_option("--x", sc_x)->required();
  bind(sc, [&] {
    Result r;
    Json rows = Json::array();
    for (const auto& [d, y] : scan_census(sc_x)) rows.push_back({{"d", d}, {"Y", y}});
    r.payload = {{"X", sc_x}, {"counts", rows}};
    r.table = "counts";
    r.columns = {"d", "Y"};
    return r;
  });

  // table2
  u64 t2_x = 0, t2_h = 4, t2_d = 1555;
  std::string t2_out;
  auto* t2 = app.add_subcommand("table2", "Census over every d with small class number");
  t2->add_option("--x", t2_x)->required();
  t2->add_option("--hmax", t2_h)->capture_default_str();
  t2->add_option("--dmax", t2_d)->capture_default_str();
  t2->add_option("--out", t2_out, "Write the CSV table here");
  bind(t2, [&] {
    Result r;
    const Table2 t = table2(t2_x, t2_h, t2_d, threads);
    if (!t2_out.empty()) {
      std::ofstream f(t2_out);
      if (!f) throw std::invalid_argument("cannot open " + t2_out);
      write_census_csv(f, t.rows);
    }
    Json rows = Json::array();
    for (const auto& rec : t.rows) rows.push_back(record_json(rec));
    r.payload = {{"X", t2_x},
                 {"count", t.rows.size()},
                 {"slope", t.fit.slope},
                 {"intercept", t.fit.intercept}};
    r.payload["d3_ratio"] = t.fit.d3_ratio ? Json(*t.fit.d3_ratio) : Json(nullptr);
    r.payload["rows"] = rows;
    r.table = "rows";
    r.columns = {"d", "h", "sqrt_d_over_h2", "Y", "c_hat"};
    if (as_csv) {
      // Same bytes as the --out file.
      std::ostringstream csv;
      write_census_csv(csv, t.rows);
      r.payload = {{"csv", csv.str()}};
      r.table.clear();
    }
    return r;
  });

  // class-number
  u64 cn_d = 0;
  auto* cn = app.add_subcommand("class-number", "h(-d) by reduced forms");
  cn->add_option("d", cn_d)->required();
  bind(cn, [&] {
    Result r;
    r.payload = {{"d", cn_d}, {"h", class_number(cn_d)}, {"M", max_allowable(cn_d)}};
    return r;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }
  if (as_json && as_csv) {
    err << "error: --json and --csv are exclusive\n\n" << app.help();
    return kExitInvalid;
  }

  try {
    if (kernel == "auto") {
      kernels::reset_backend();
    } else {
      kernels::set_backend(kernel == "avx2" ? kernels::Backend::avx2 : kernels::Backend::scalar);
    }
    const Result r = action();
    if (as_json) {
      out << r.payload.dump() << '\n';
    } else if (as_csv) {
      if (r.payload.size() == 1 && r.payload.contains("csv")) {
        out << r.payload["csv"].get<std::string>();
      } else {
        print_csv(r, out);
      }
    } else {
      print_text(r.payload, out);
    }
    kernels::reset_backend();
    return r.code;
  } catch (const NotFoundError& e) {
    kernels::reset_backend();
    err << "not found: " << e.what() << '\n';
    return kExitNotFound;
  } catch (const std::exception& e) {
    kernels::reset_backend();
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ecpairs");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ecpairs::cli
