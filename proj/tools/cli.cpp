#include "cli.hpp"

#include "corelat/atomic.hpp"
#include "corelat/diophantine.hpp"
#include "corelat/dynkin.hpp"
#include "corelat/param.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace corelat::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string type;
  std::string case_id;
  std::string weight = "L0";
  std::string lattice = "M";
  std::string format = "csv";
  std::string figure;
  std::string q;
  std::optional<long long> N;
  std::optional<long long> max_N;
  long long seed = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int weight_index(const std::string& w) { return std::stoi(w.substr(1)); }

CLI::Validator weight_check() {
  return CLI::Validator(
      [](std::string& w) -> std::string {
        if (w.size() < 2 || w[0] != 'L' || w.find_first_not_of("0123456789", 1) != std::string::npos)
          return "weight must look like L0, L1, ...";
        return {};
      },
      "L<i>");
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '(' && ch != ')') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

ordered_json ivec_json(const IVec& v) { return ordered_json(v); }

ordered_json vec_json(const Vec& v) {
  bool integral = std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_integer(r); });
  ordered_json a = ordered_json::array();
  for (const auto& x : v) {
    if (integral)
      a.push_back(to_ll(x));
    else
      a.push_back(to_string(x));
  }
  return a;
}

ordered_json report_json(const Report& r) {
  ordered_json j;
  j["case"] = r.case_id;
  j["N"] = r.N;
  j["status"] = r.pass ? "PASS" : "FAIL";
  j["counts"] = {{"solutions", r.solutions}, {"orbits", r.orbits}, {"phi_images", r.phi_images}};
  if (r.witness) j["witness"] = *r.witness;
  ordered_json checks = ordered_json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  j["checks"] = checks;
  if (!r.uncovered.empty()) {
    ordered_json u = ordered_json::array();
    for (const auto& o : r.uncovered) u.push_back(join_tuples(o));
    j["uncovered"] = u;
  }
  return j;
}

void write_table(std::ostream& out, const Table& t, const std::string& format) {
  if (format == "csv") {
    write_csv(out, t);
    return;
  }
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json obj;
    for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
    rows.push_back(obj);
  }
  out << rows.dump(2) << '\n';
}

std::pair<long long, long long> level_range(const Options& o) {
  if (o.N && o.max_N) throw UsageError("give either --N or --max-N, not both");
  if (o.N) return {*o.N, *o.N};
  if (o.max_N) return {0, *o.max_N};
  throw UsageError("one of --N or --max-N is required");
}

int emit_reports(std::ostream& out, std::ostream& err, const std::vector<Report>& reports, const Options& o,
                 bool single) {
  bool all_pass = true;
  for (const auto& r : reports)
    if (!r.pass) {
      all_pass = false;
      err << "FAIL " << r.case_id << " N=" << r.N << ": " << r.witness.value_or("no witness") << '\n';
    }
  if (o.format == "json") {
    if (single) {
      out << report_json(reports.front()).dump(2) << '\n';
    } else {
      ordered_json a = ordered_json::array();
      for (const auto& r : reports) a.push_back(report_json(r));
      out << a.dump(2) << '\n';
    }
  } else {
    Table t;
    t.header = {"case", "N", "status", "solutions", "orbits", "phi_images", "witness"};
    for (const auto& r : reports)
      t.rows.push_back({r.case_id, std::to_string(r.N), r.pass ? "PASS" : "FAIL", std::to_string(r.solutions),
                        std::to_string(r.orbits), std::to_string(r.phi_images), r.witness.value_or("")});
    write_csv(out, t);
  }
  return all_pass ? 0 : 1;
}

std::vector<Report> run_levels(const ParamCase& c, long long lo, long long hi) {
  if (lo == hi) return {verify(c, lo)};
  return sweep(c, hi);
}

int do_atomic_length(const Options& o, std::ostream& out) {
  if (o.type.empty() || o.q.empty()) throw UsageError("atomic-length needs --type and --q");
  TypeData t = lookup_type(o.type);
  Vec q;
  for (const auto& s : split_csv(o.q)) q.push_back(parse_rational(s));
  if (static_cast<int>(q.size()) != t.ambient_dim)
    throw UsageError("--q needs " + std::to_string(t.ambient_dim) + " coordinates for " + t.id.str());
  const int w = weight_index(o.weight);
  Rational value = w == 0 ? atomic_length0(t, q) : atomic_length_i(t, w, q);
  if (o.format == "json") {
    ordered_json j{{"type", t.id.str()}, {"weight", o.weight}, {"q", vec_json(q)}, {"length", to_string(value)}};
    out << j.dump(2) << '\n';
  } else {
    Table tab{{"type", "weight", "q", "length"}, {{t.id.str(), o.weight, format_tuple(q), to_string(value)}}};
    write_csv(out, tab);
  }
  return 0;
}

int do_enumerate(const Options& o, std::ostream& out) {
  if (!o.N) throw UsageError("enumerate needs --N");
  if (o.type.empty() == o.case_id.empty()) throw UsageError("enumerate needs exactly one of --type or --case");
  if (!o.type.empty()) {
    TypeData t = lookup_type(o.type);
    const LatticeKind lat = o.lattice == "L" ? LatticeKind::L : LatticeKind::M;
    const auto pts = enumerate_atomic(t, weight_index(o.weight), Rational(*o.N), lat);
    if (o.format == "json") {
      ordered_json a = ordered_json::array();
      for (const auto& p : pts) a.push_back(vec_json(p));
      out << ordered_json{{"type", t.id.str()}, {"weight", o.weight}, {"lattice", o.lattice}, {"N", *o.N},
                          {"elements", a}}
                 .dump(2)
          << '\n';
    } else {
      Table tab{{"q"}, {}};
      for (const auto& p : pts) tab.rows.push_back({format_tuple(p)});
      write_csv(out, tab);
    }
    return 0;
  }
  const ParamCase c = make_case(o.case_id);
  const auto pts = case_domain(c, *o.N);
  if (o.format == "json") {
    ordered_json a = ordered_json::array();
    for (const auto& p : pts)
      a.push_back({{"q", vec_json(p)}, {"coordinates", vec_json(case_coordinates(c, p))}, {"phi", ivec_json(phi(c, p))}});
    out << ordered_json{{"case", c.id}, {"N", *o.N}, {"elements", a}}.dump(2) << '\n';
  } else {
    Table tab{{"q", "coordinates", "phi"}, {}};
    for (const auto& p : pts)
      tab.rows.push_back({format_tuple(p), format_tuple(case_coordinates(c, p)), format_tuple(phi(c, p))});
    write_csv(out, tab);
  }
  return 0;
}

int do_solve(const Options& o, std::ostream& out) {
  if (!o.N || o.case_id.empty()) throw UsageError("solve needs --case and --N");
  const ParamCase c = make_case(o.case_id);
  const auto sols = case_solutions(c, *o.N);
  const auto orbits = orbit_partition(case_group(c), sols);
  if (o.format == "json") {
    ordered_json a = ordered_json::array();
    for (const auto& orb : orbits) {
      ordered_json pts = ordered_json::array();
      for (const auto& p : orb) pts.push_back(ivec_json(p));
      a.push_back(pts);
    }
    out << ordered_json{{"case", c.id},
                        {"N", *o.N},
                        {"value", target_value(c, *o.N)},
                        {"solutions", sols.size()},
                        {"orbits", a}}
               .dump(2)
        << '\n';
  } else {
    Table tab{{"orbit", "point"}, {}};
    for (std::size_t i = 0; i < orbits.size(); ++i)
      for (const auto& p : orbits[i]) tab.rows.push_back({std::to_string(i), format_tuple(p)});
    write_csv(out, tab);
  }
  return 0;
}

int do_table(const Options& o, std::ostream& out) {
  if (!o.max_N) throw UsageError("table needs --max-N");
  if (o.figure.empty() == o.case_id.empty()) throw UsageError("table needs exactly one of --figure or --case");
  Table t = o.figure.empty() ? case_table(make_case(o.case_id), *o.max_N) : figure_table(o.figure, *o.max_N);
  write_table(out, t, o.format);
  return 0;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.case_id.empty()) throw UsageError("verify needs --case");
  auto [lo, hi] = level_range(o);
  const ParamCase c = make_case(o.case_id);
  return emit_reports(out, err, run_levels(c, lo, hi), o, lo == hi && o.N.has_value());
}

int do_conjecture(const Options& o, std::ostream& out, std::ostream& err) {
  auto [lo, hi] = level_range(o);
  const ParamCase c = make_case("A3");
  return emit_reports(out, err, run_levels(c, lo, hi), o, lo == hi && o.N.has_value());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Atomic lengths, core partitions and quadric parametrisations"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", o.seed, "accepted and ignored; every computation is deterministic");
  };
  auto add_case = [&](CLI::App* sub) { sub->add_option("--case", o.case_id, "A2|A2ext|C2|C2L1|D3t|A42|G21|D43|A3|HYP:<type>"); };
  auto add_levels = [&](CLI::App* sub) {
    sub->add_option("--N", o.N, "single level")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-N", o.max_N, "levels 0..max-N")->check(CLI::NonNegativeNumber);
  };

  auto* al = app.add_subcommand("atomic-length", "atomic length of one lattice vector");
  al->add_option("--type", o.type, "type label such as C2_1")->required();
  al->add_option("--q", o.q, "stored coordinates, comma separated, rationals allowed")->required();
  al->add_option("--weight", o.weight, "L0, L1, ...")->check(weight_check());
  add_common(al);

  auto* en = app.add_subcommand("enumerate", "lattice points of a given atomic length");
  en->add_option("--type", o.type, "type label such as C2_1");
  add_case(en);
  en->add_option("--N", o.N, "atomic length")->check(CLI::NonNegativeNumber);
  en->add_option("--weight", o.weight, "L0, L1, ...")->check(weight_check());
  en->add_option("--lattice", o.lattice, "M or L")->check(CLI::IsMember({"M", "L"}));
  add_common(en);

  auto* so = app.add_subcommand("solve", "integer solutions of the case quadric, grouped by orbit");
  add_case(so);
  so->add_option("--N", o.N, "level")->check(CLI::NonNegativeNumber);
  add_common(so);

  auto* ta = app.add_subcommand("table", "per-level table of B(N), phi(B(N)) and the solutions");
  ta->add_option("--figure", o.figure, "8N+1|40N+10|6N+7|12N+7")
      ->check(CLI::IsMember({"8N+1", "40N+10", "6N+7", "12N+7"}));
  add_case(ta);
  ta->add_option("--max-N", o.max_N, "last level")->check(CLI::NonNegativeNumber);
  add_common(ta);

  auto* ve = app.add_subcommand("verify", "check the claim of a case level by level");
  add_case(ve);
  add_levels(ve);
  add_common(ve);

  auto* cj = app.add_subcommand("conjecture-a3", "strata, orbit and coverage checks for A3");
  add_levels(cj);
  add_common(cj);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*al) return do_atomic_length(o, out);
    if (*en) return do_enumerate(o, out);
    if (*so) return do_solve(o, out);
    if (*ta) return do_table(o, out);
    if (*ve) return do_verify(o, out, err);
    if (*cj) return do_conjecture(o, out, err);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace corelat::cli
