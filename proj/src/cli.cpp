#include "monoidrep/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monoidrep/bicharacter.hpp"
#include "monoidrep/character_table.hpp"
#include "monoidrep/errors.hpp"
#include "monoidrep/green.hpp"
#include "monoidrep/monoid_table.hpp"
#include "monoidrep/radical.hpp"

namespace monoidrep {

namespace {

using nlohmann::json;

std::vector<int> parse_points(const std::string& text, int lineno) {
  std::vector<int> points;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("expected a 1-based point, got '" + token + "'",
                       lineno);
    }
    points.push_back(value);
  }
  return points;
}

void check_point_range(const std::vector<int>& points, int degree,
                       int lineno) {
  for (int p : points) {
    if (p < 1 || p > degree) {
      throw ParseError("point " + std::to_string(p) + " out of range 1.." +
                           std::to_string(degree),
                       lineno);
    }
  }
}

std::string join_images(const Transformation& t) {
  std::string s;
  for (int i = 1; i <= t.degree(); ++i) {
    if (i > 1) s += ' ';
    s += std::to_string(t(i));
  }
  return s;
}

json images_json(const Transformation& t) {
  json a = json::array();
  for (int i = 1; i <= t.degree(); ++i) a.push_back(t(i));
  return a;
}

json cyclotomic_json(const Cyclotomic& v) {
  json coeffs = json::array();
  for (const mpq_class& c : v.coeffs()) coeffs.push_back(c.get_str());
  json o = json::object();
  o["coeffs"] = coeffs;
  o["conductor"] = v.conductor();
  return o;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Everything the staged pipeline can produce; commands fill a prefix.
struct Stages {
  MonoidTable table;
  GreenStructure structure;
  GroupTables tables;
  TestElements cm;
  BicharacterMatrix bichar;
  std::vector<ReferenceRadical> radicals;
  MonoidCharTable x;
  std::vector<long> dims;
  CartanMatrix cartan;
};

int cmd_enumerate(const RunConfig& cfg, const MonoidTable& table,
                  std::ostream& out) {
  std::size_t max_word = 0;
  for (int x = 0; x < table.size(); ++x)
    max_word = std::max(max_word, table.word(x).size());
  const long idem = static_cast<long>(idempotents(table).size());

  if (cfg.format == "json") {
    json j = json::object();
    j["degree"] = table.degree();
    j["generators"] = table.generators().size();
    j["idempotents"] = idem;
    j["max_word_length"] = max_word;
    j["order"] = table.size();
    emit_json(out, j);
  } else if (cfg.format == "csv") {
    out << "key,value\n";
    out << "degree," << table.degree() << "\n";
    out << "generators," << table.generators().size() << "\n";
    out << "idempotents," << idem << "\n";
    out << "max_word_length," << max_word << "\n";
    out << "order," << table.size() << "\n";
  } else {
    out << "degree " << table.degree() << "\n";
    out << "generators " << table.generators().size() << "\n";
    out << "idempotents " << idem << "\n";
    out << "max_word_length " << max_word << "\n";
    out << "order " << table.size() << "\n";
  }
  return 0;
}

int cmd_membership(const RunConfig& cfg,
                   const std::vector<Transformation>& gens,
                   std::ostream& out) {
  if (cfg.element.empty())
    throw ParseError("membership requires --element \"i1 i2 ... in\"");
  const int degree = gens.front().degree();
  const std::vector<int> points = parse_points(cfg.element, 0);
  if (static_cast<int>(points.size()) != degree) {
    throw ParseError("element has " + std::to_string(points.size()) +
                     " images, generators have degree " +
                     std::to_string(degree));
  }
  check_point_range(points, degree, 0);
  const bool member = contains(gens, Transformation(points));

  if (cfg.format == "json") {
    json j = json::object();
    j["element"] = points;
    j["member"] = member;
    emit_json(out, j);
  } else if (cfg.format == "csv") {
    out << "member\n" << bool_text(member) << "\n";
  } else {
    out << bool_text(member) << "\n";
  }
  return 0;
}

int cmd_green(const RunConfig& cfg, const MonoidTable& table,
              const GreenStructure& st, std::ostream& out) {
  if (cfg.format == "dot") {
    out << eggbox_dot(table, st);
    return 0;
  }
  const long idem = static_cast<long>(idempotents(table).size());
  if (cfg.format == "json") {
    json classes = json::array();
    for (int j = 0; j < st.num_jclasses(); ++j) {
      const JClassData& jd = st.jclasses[j];
      json o = json::object();
      o["grid_cols"] = jd.l_ids.size();
      o["grid_rows"] = jd.r_ids.size();
      o["hclass_size"] = jd.hclass_size;
      o["id"] = j;
      o["idempotents"] = jd.idempotents.size();
      o["rank"] = jd.rank;
      o["regular"] = jd.regular;
      o["size"] = jd.size;
      classes.push_back(o);
    }
    json j = json::object();
    j["idempotents"] = idem;
    j["jclasses"] = classes;
    j["num_hclasses"] = st.num_hclasses();
    j["num_jclasses"] = st.num_jclasses();
    j["num_lclasses"] = st.num_lclasses();
    j["num_rclasses"] = st.num_rclasses();
    emit_json(out, j);
  } else if (cfg.format == "csv") {
    out << "jclass,rank,grid_rows,grid_cols,hclass_size,size,regular,"
           "idempotents\n";
    for (int j = 0; j < st.num_jclasses(); ++j) {
      const JClassData& jd = st.jclasses[j];
      out << j << "," << jd.rank << "," << jd.r_ids.size() << ","
          << jd.l_ids.size() << "," << jd.hclass_size << "," << jd.size << ","
          << bool_text(jd.regular) << "," << jd.idempotents.size() << "\n";
    }
  } else {
    out << "jclasses " << st.num_jclasses() << "\n";
    out << "lclasses " << st.num_lclasses() << "\n";
    out << "rclasses " << st.num_rclasses() << "\n";
    out << "hclasses " << st.num_hclasses() << "\n";
    out << "idempotents " << idem << "\n";
    for (int j = 0; j < st.num_jclasses(); ++j) {
      const JClassData& jd = st.jclasses[j];
      out << "J " << j << ": rank " << jd.rank << " grid "
          << jd.r_ids.size() << "x" << jd.l_ids.size() << " hclass_size "
          << jd.hclass_size << " size " << jd.size << " regular "
          << bool_text(jd.regular) << " idempotents "
          << jd.idempotents.size() << "\n";
    }
  }
  return 0;
}

int cmd_schutz(const RunConfig& cfg, const GreenStructure& st,
               const GroupTables& tables, std::ostream& out) {
  if (cfg.format == "json") {
    json rows = json::array();
    for (int j = 0; j < st.num_jclasses(); ++j) {
      const JClassGroups& jg = tables.per_j[j];
      const ColumnGroup& cg = jg.columns[jg.ref_col];
      json o = json::object();
      o["classes"] = cg.classes.representative.size();
      o["group_order"] = cg.group.order();
      o["jclass"] = j;
      o["regular"] = st.jclasses[j].regular;
      rows.push_back(o);
    }
    json j = json::object();
    j["jclasses"] = rows;
    emit_json(out, j);
  } else if (cfg.format == "csv") {
    out << "jclass,regular,group_order,classes\n";
    for (int j = 0; j < st.num_jclasses(); ++j) {
      const JClassGroups& jg = tables.per_j[j];
      const ColumnGroup& cg = jg.columns[jg.ref_col];
      out << j << "," << bool_text(st.jclasses[j].regular) << ","
          << cg.group.order() << "," << cg.classes.representative.size()
          << "\n";
    }
  } else {
    for (int j = 0; j < st.num_jclasses(); ++j) {
      const JClassGroups& jg = tables.per_j[j];
      const ColumnGroup& cg = jg.columns[jg.ref_col];
      out << "J " << j << ": regular " << bool_text(st.jclasses[j].regular)
          << " group_order " << cg.group.order() << " classes "
          << cg.classes.representative.size() << "\n";
    }
  }
  return 0;
}

int cmd_bichar(const RunConfig& cfg, const MonoidTable& table,
               const TestElements& cm, const BicharacterMatrix& b,
               std::ostream& out) {
  if (cfg.format == "json") {
    json reps = json::array();
    for (int r : cm.representatives)
      reps.push_back(images_json(table.element(r)));
    json matrix = json::array();
    for (int i = 0; i < b.n; ++i) {
      json row = json::array();
      for (int j = 0; j < b.n; ++j) row.push_back(b.at(i, j));
      matrix.push_back(row);
    }
    json j = json::object();
    j["c_m"] = reps;
    j["matrix"] = matrix;
    emit_json(out, j);
  } else if (cfg.format == "csv") {
    for (int i = 0; i < b.n; ++i) {
      for (int j = 0; j < b.n; ++j) out << (j ? "," : "") << b.at(i, j);
      out << "\n";
    }
  } else {
    out << "c_m " << cm.representatives.size() << "\n";
    for (int r : cm.representatives)
      out << "rep " << join_images(table.element(r)) << "\n";
    out << "matrix\n";
    for (int i = 0; i < b.n; ++i) {
      for (int j = 0; j < b.n; ++j) out << (j ? " " : "") << b.at(i, j);
      out << "\n";
    }
  }
  return 0;
}

int cmd_radical(const RunConfig& cfg, const MonoidTable& table,
                const GreenStructure& st, std::string& stage,
                std::ostream& out) {
  struct Row {
    int lclass, jclass, size, dim;
  };
  std::vector<Row> rows;
  long total = 0;
  for (int l = 0; l < st.num_lclasses(); ++l) {
    bool has_idempotent = false;
    for (int x : st.lclass_members[l])
      if (table.product(x, x) == x) {
        has_idempotent = true;
        break;
      }
    if (!has_idempotent) continue;  // no module data for this L-class
    const RationalMatrix n = lclass_radical(table, st, l);
    rows.push_back({l, st.jclass_of_lclass[l],
                    static_cast<int>(st.lclass_members[l].size()), n.rows()});
    total += n.rows();
  }

  bool have_oracle = false;
  int oracle_dim = 0;
  if (table.size() <= cfg.oracle_max) {
    stage = "oracle";
    oracle_dim = trace_form_radical(table, cfg.oracle_max);
    have_oracle = true;
    stage = "radical";
  }

  if (cfg.format == "json") {
    json lrows = json::array();
    for (const Row& r : rows) {
      json o = json::object();
      o["dim"] = r.dim;
      o["jclass"] = r.jclass;
      o["lclass"] = r.lclass;
      o["size"] = r.size;
      lrows.push_back(o);
    }
    json j = json::object();
    j["lclasses"] = lrows;
    j["total_dim"] = total;
    if (have_oracle) j["trace_form_radical"] = oracle_dim;
    emit_json(out, j);
  } else if (cfg.format == "csv") {
    out << "lclass,jclass,size,dim\n";
    for (const Row& r : rows)
      out << r.lclass << "," << r.jclass << "," << r.size << "," << r.dim
          << "\n";
  } else {
    for (const Row& r : rows)
      out << "L " << r.lclass << ": jclass " << r.jclass << " size "
          << r.size << " radical_dim " << r.dim << "\n";
    out << "total_radical_dim " << total << "\n";
    if (have_oracle) out << "trace_form_radical " << oracle_dim << "\n";
  }
  return 0;
}

int cmd_chartable(const RunConfig& cfg, const Stages& p, std::ostream& out) {
  if (cfg.format == "json") {
    json irr = json::array();
    for (const auto& [j, v] : p.x.irreducibles) {
      json pair = json::array();
      pair.push_back(j);
      pair.push_back(v);
      irr.push_back(pair);
    }
    json reps = json::array();
    for (int r : p.cm.representatives)
      reps.push_back(images_json(p.table.element(r)));
    json tbl = json::array();
    for (int i = 0; i < p.x.size(); ++i) {
      json row = json::array();
      for (int j = 0; j < p.x.size(); ++j)
        row.push_back(cyclotomic_json(p.x.at(i, j)));
      tbl.push_back(row);
    }
    json car = json::array();
    for (int i = 0; i < p.cartan.size(); ++i) {
      json row = json::array();
      for (int j = 0; j < p.cartan.size(); ++j)
        row.push_back(p.cartan.at(i, j));
      car.push_back(row);
    }
    json j = json::object();
    j["c_m"] = reps;
    j["cartan"] = car;
    j["dims"] = p.dims;
    j["irreducibles"] = irr;
    j["table"] = tbl;
    emit_json(out, j);
    return 0;
  }
  if (cfg.format == "csv") {
    if (cfg.command == "cartan") {
      for (int i = 0; i < p.cartan.size(); ++i) {
        for (int j = 0; j < p.cartan.size(); ++j)
          out << (j ? "," : "") << p.cartan.at(i, j);
        out << "\n";
      }
    } else {
      for (int i = 0; i < p.x.size(); ++i) {
        for (int j = 0; j < p.x.size(); ++j)
          out << (j ? "," : "") << p.x.at(i, j).to_string();
        out << "\n";
      }
    }
    return 0;
  }
  out << "irreducibles";
  for (const auto& [j, v] : p.x.irreducibles) out << " J" << j << ".V" << v;
  out << "\n";
  out << "c_m " << p.cm.representatives.size() << "\n";
  for (int r : p.cm.representatives)
    out << "rep " << join_images(p.table.element(r)) << "\n";
  out << "table\n";
  for (int i = 0; i < p.x.size(); ++i) {
    for (int j = 0; j < p.x.size(); ++j)
      out << (j ? " " : "") << p.x.at(i, j).to_string();
    out << "\n";
  }
  out << "cartan\n";
  for (int i = 0; i < p.cartan.size(); ++i) {
    for (int j = 0; j < p.cartan.size(); ++j)
      out << (j ? " " : "") << p.cartan.at(i, j);
    out << "\n";
  }
  out << "dims";
  for (long d : p.dims) out << " " << d;
  out << "\n";
  return 0;
}

int cmd_bench(const RunConfig& cfg, const std::vector<Transformation>& gens,
              std::string& stage, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  const std::vector<std::string> names = {"enumerate", "green",  "schutz",
                                          "cm",        "bichar", "radical",
                                          "chartable", "cartan"};
  std::map<std::string, std::vector<double>> times;
  Stages p;
  for (int r = 0; r < std::max(1, cfg.repeat); ++r) {
    p = Stages();
    auto timed = [&](const std::string& name, auto&& fn) {
      stage = name;
      const auto t0 = clock::now();
      fn();
      const std::chrono::duration<double, std::milli> dt = clock::now() - t0;
      times[name].push_back(dt.count());
    };
    timed("enumerate", [&] { p.table = enumerate(gens); });
    timed("green", [&] { p.structure = green_structure(p.table); });
    timed("schutz",
          [&] { p.tables = build_group_tables(p.table, p.structure); });
    timed("cm", [&] { p.cm = compute_c_m(p.table, p.structure, p.tables); });
    timed("bichar", [&] {
      p.bichar = bicharacter_matrix(p.table, p.structure, p.tables, p.cm,
                                    cfg.jobs);
    });
    timed("radical", [&] {
      p.radicals = reference_radicals(p.table, p.structure, p.tables);
    });
    timed("chartable", [&] {
      p.x = character_table(p.table, p.structure, p.tables, p.cm, p.radicals);
      p.dims = simple_dimensions(p.x);
    });
    timed("cartan", [&] { p.cartan = cartan_matrix(p.x, p.bichar); });
  }
  stage = "bench";

  long radical_dims = 0;
  for (const ReferenceRadical& rad : p.radicals)
    radical_dims += rad.nullspace_rows.rows();
  const std::map<std::string, long> counters = {
      {"cm", static_cast<long>(p.cm.representatives.size())},
      {"elements", p.table.size()},
      {"jclasses", p.structure.num_jclasses()},
      {"radical_dims", radical_dims},
      {"table_dim", p.x.size()},
  };

  if (cfg.format == "json") {
    json st = json::object();
    for (const std::string& name : names)
      st[name] = median_of(times[name]);
    json cn = json::object();
    for (const auto& [k, v] : counters) cn[k] = v;
    json j = json::object();
    j["counters"] = cn;
    j["repeat"] = cfg.repeat;
    j["stages_ms"] = st;
    emit_json(out, j);
  } else if (cfg.format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : counters) out << k << "," << v << "\n";
    for (const std::string& name : names)
      out << name << "_ms," << std::fixed << std::setprecision(3)
          << median_of(times[name]) << "\n";
  } else {
    for (const auto& [k, v] : counters)
      out << "counter " << k << " " << v << "\n";
    for (const std::string& name : names)
      out << "stage " << name << " " << std::fixed << std::setprecision(3)
          << median_of(times[name]) << " ms\n";
  }
  return 0;
}

}  // namespace

std::vector<Transformation> read_generators(std::istream& in) {
  std::vector<Transformation> gens;
  std::string line;
  int lineno = 0;
  int degree = -1;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::vector<int> points = parse_points(line, lineno);
    if (points.empty()) continue;
    if (degree < 0) {
      degree = static_cast<int>(points.size());
    } else if (static_cast<int>(points.size()) != degree) {
      throw ParseError("expected " + std::to_string(degree) +
                           " images per line, got " +
                           std::to_string(points.size()),
                       lineno);
    }
    check_point_range(points, degree, lineno);
    gens.emplace_back(points);
  }
  if (gens.empty()) throw ParseError("no generators in input");
  return gens;
}

std::vector<Transformation> read_generators_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open generator file '" + path + "'");
  return read_generators(in);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string stage = "parse";
  try {
    if (cfg.format == "dot" && cfg.command != "green")
      throw ParseError("format 'dot' is only valid for the green command");

    const std::vector<Transformation> gens = read_generators_file(cfg.input);

    if (cfg.command == "membership") return cmd_membership(cfg, gens, out);
    if (cfg.command == "bench") return cmd_bench(cfg, gens, stage, out);

    Stages p;
    stage = "enumerate";
    p.table = enumerate(gens);
    if (cfg.command == "enumerate") return cmd_enumerate(cfg, p.table, out);

    stage = "green";
    p.structure = green_structure(p.table);
    if (cfg.command == "green")
      return cmd_green(cfg, p.table, p.structure, out);

    if (cfg.command == "radical") {
      stage = "radical";
      return cmd_radical(cfg, p.table, p.structure, stage, out);
    }

    stage = "schutz";
    p.tables = build_group_tables(p.table, p.structure);
    if (cfg.command == "schutz")
      return cmd_schutz(cfg, p.structure, p.tables, out);

    stage = "cm";
    p.cm = compute_c_m(p.table, p.structure, p.tables);
    stage = "bichar";
    p.bichar =
        bicharacter_matrix(p.table, p.structure, p.tables, p.cm, cfg.jobs);
    if (cfg.command == "bichar")
      return cmd_bichar(cfg, p.table, p.cm, p.bichar, out);

    stage = "radical";
    p.radicals = reference_radicals(p.table, p.structure, p.tables);
    stage = "chartable";
    p.x = character_table(p.table, p.structure, p.tables, p.cm, p.radicals);
    p.dims = simple_dimensions(p.x);
    stage = "cartan";
    p.cartan = cartan_matrix(p.x, p.bichar);
    if (cfg.command == "chartable" || cfg.command == "cartan")
      return cmd_chartable(cfg, p, out);

    throw ParseError("unknown command '" + cfg.command + "'");
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ContractError& e) {
    err << "contract violation in stage '" << stage << "' [" << e.name()
        << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error in stage '" << stage << "': " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Exact Green structure, character table, and Cartan matrix of a "
      "finite transformation monoid given by generators"};
  app.require_subcommand(1);

  RunConfig cfg;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"enumerate", "order, idempotent count, and word statistics"},
      {"membership", "test whether --element lies in the monoid"},
      {"green", "eggbox summary (or DOT with --format dot)"},
      {"schutz", "per-J-class group orders and class counts"},
      {"bichar", "test elements C_M and the fixed-point matrix"},
      {"chartable", "character table, Cartan matrix, and dimensions"},
      {"cartan", "same output as chartable"},
      {"radical", "per-L-class radical dimensions"},
      {"bench", "per-stage wall-time medians and size counters"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--input", cfg.input, "generator file")->required();
    const bool dot_ok = name == "green";
    sub->add_option("--format", cfg.format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember(dot_ok ? std::vector<std::string>{
                                           "text", "json", "csv", "dot"}
                                     : std::vector<std::string>{
                                           "text", "json", "csv"}));
    sub->add_option("--jobs", cfg.jobs, "parallelism degree")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    if (name == "membership") {
      sub->add_option("--element", cfg.element,
                      "transformation as 1-based images, e.g. \"2 1 3\"");
    }
    if (name == "bench") {
      sub->add_option("--repeat", cfg.repeat, "benchmark repetitions")
          ->capture_default_str()
          ->check(CLI::PositiveNumber);
    }
    if (name == "radical") {
      sub->add_option("--oracle-max", cfg.oracle_max,
                      "size bound for the trace-form radical oracle")
          ->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }
  for (const CLI::App* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
  }
  return run(cfg, out, err);
}

}  // namespace monoidrep
