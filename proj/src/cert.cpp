#include "dblcone/cert.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "dblcone/lattice.hpp"
#include "dblcone/rr.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dblcone {
namespace {

using json = nlohmann::json;  // std::map keys, so dumps are sorted

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

const json& need(const json& j, const char* key, const std::string& msg) {
  auto it = j.find(key);
  if (it == j.end()) fail(msg);
  return *it;
}

Rat rat_from(const json& j) {
  if (!j.is_string()) fail("rational values must be strings");
  return Rat::parse(j.get<std::string>());
}

long long int_from(const json& j, const char* what) {
  if (!j.is_number_integer())
    fail(std::string(what) + " must be an integer");
  return j.get<long long>();
}

bool bool_from(const json& j, const char* what) {
  if (!j.is_boolean()) fail(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

std::string string_from(const json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Model model_from(const json& j) {
  std::string s = string_from(j, "model");
  if (s == "V") return Model::V;
  if (s == "U") return Model::U;
  fail("unknown model '" + s + "'");
}

json class_to(const DivisorClassV& c) {
  json j;
  j["model"] = model_name(c.model);
  j["n"] = c.n;
  j["m"] = c.m;
  return j;
}

DivisorClassV class_from(const json& j) {
  DivisorClassV c;
  c.model = model_from(need(j, "model", "missing class model"));
  c.n = int_from(need(j, "n", "missing class coefficient n"), "n");
  c.m = int_from(need(j, "m", "missing class coefficient m"), "m");
  return c;
}

json cycle_to(const CycleClass& c) {
  json j;
  j["sigma"] = c.sigma.str();
  j["phi"] = c.phi.str();
  return j;
}

CycleClass cycle_from(const json& j) {
  return {rat_from(need(j, "sigma", "missing cycle sigma")),
          rat_from(need(j, "phi", "missing cycle phi"))};
}

MarkKind mark_kind_from(const std::string& s) {
  if (s == "section_pair") return MarkKind::SectionPair;
  if (s == "s1") return MarkKind::S1;
  if (s == "s2") return MarkKind::S2;
  fail("unknown mark kind '" + s + "'");
}

json system_to(const MarkedSystem& sys) {
  json j;
  j["class"] = class_to(sys.cls);
  j["m_known"] = sys.m_known;
  json marks = json::array();
  for (const CurveMark& mk : sys.marks) {
    json m;
    m["id"] = mk.id;
    m["kind"] = mark_kind_name(mk.kind);
    m["class"] = cycle_to(mk.cls);
    m["mult"] = mk.mult.str();
    m["conj_mult"] = mk.conj_mult.str();
    m["on_ramification"] = mk.on_ramification;
    marks.push_back(m);
  }
  j["marks"] = marks;
  return j;
}

MarkedSystem system_from(const json& j) {
  MarkedSystem sys;
  sys.cls = class_from(need(j, "class", "missing system class"));
  if (j.contains("m_known")) sys.m_known = bool_from(j["m_known"], "m_known");
  sys.marks.clear();
  if (j.contains("marks")) {
    if (!j["marks"].is_array()) fail("marks must be an array");
    for (const json& m : j["marks"]) {
      CurveMark mk;
      mk.id = string_from(need(m, "id", "missing mark id"), "mark id");
      mk.kind = mark_kind_from(
          string_from(need(m, "kind", "missing mark kind"), "mark kind"));
      mk.cls = cycle_from(need(m, "class", "missing mark class"));
      mk.mult = rat_from(need(m, "mult", "missing mark multiplicity"));
      if (m.contains("conj_mult")) mk.conj_mult = rat_from(m["conj_mult"]);
      if (m.contains("on_ramification"))
        mk.on_ramification = bool_from(m["on_ramification"], "on_ramification");
      sys.marks.push_back(mk);
    }
  }
  return sys;
}

json graph_to(const ResolutionGraph& g) {
  json j;
  j["N"] = g.N;
  j["L"] = g.L;
  j["L_prime"] = g.L_prime;
  json arrows = json::array();
  for (const auto& [i, k] : g.extra_arrows)
    arrows.push_back(json::array({i, k}));
  j["arrows"] = arrows;
  json ladder = json::array();
  for (const Rat& v : g.nu) ladder.push_back(v.str());
  j["ladder"] = ladder;
  if (g.q) j["q"] = *g.q;
  return j;
}

ResolutionGraph graph_from(const json& j) {
  ResolutionGraph g;
  g.N = static_cast<int>(int_from(need(j, "N", "missing graph N"), "N"));
  g.L = static_cast<int>(int_from(need(j, "L", "missing graph L"), "L"));
  g.L_prime = static_cast<int>(
      int_from(need(j, "L_prime", "missing graph L_prime"), "L_prime"));
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) fail("arrows must be an array");
    for (const json& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 2) fail("arrow must be a pair [i, j]");
      g.extra_arrows.emplace_back(
          static_cast<int>(int_from(a[0], "arrow source")),
          static_cast<int>(int_from(a[1], "arrow target")));
    }
  }
  const json& ladder = need(j, "ladder", "missing graph ladder");
  if (!ladder.is_array()) fail("ladder must be an array");
  for (const json& v : ladder) {
    Rat nu = rat_from(v);
    if (!g.nu.empty() && nu > g.nu.back()) fail("ladder not non-increasing");
    g.nu.push_back(nu);
  }
  if (j.contains("q"))
    g.q = static_cast<int>(int_from(j["q"], "q"));
  return g;
}

json rat_array(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& r : v) a.push_back(r.str());
  return a;
}

std::vector<Rat> rat_array_from(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<Rat> v;
  for (const json& e : j) v.push_back(rat_from(e));
  return v;
}

json data_to(const SingularityData& d) {
  json j;
  j["n"] = d.n;
  j["m"] = d.m;
  j["alpha1"] = d.alpha1.str();
  j["alpha2"] = d.alpha2.str();
  j["p"] = d.p;
  j["mh"] = d.mh.str();
  j["mv"] = d.mv.str();
  j["condition_a"] = d.condition_a;
  if (!d.mh_levels.empty()) j["mh_levels"] = rat_array(d.mh_levels);
  if (!d.d.empty()) j["degrees"] = rat_array(d.d);
  if (!d.mij.empty()) {
    json rows = json::array();
    for (const auto& row : d.mij) rows.push_back(rat_array(row));
    j["corrections"] = rows;
  }
  if (d.theta) j["theta"] = d.theta->str();
  if (d.b1) j["b1"] = b1_position_name(*d.b1);
  return j;
}

B1Position b1_from(const std::string& s) {
  if (s == "point-off-fiber") return B1Position::PointOffFiber;
  if (s == "point-on-fiber") return B1Position::PointOnFiber;
  if (s == "line-in-fiber") return B1Position::LineInFiber;
  if (s == "line-off-fiber") return B1Position::LineOffFiber;
  fail("unknown B1 position '" + s + "'");
}

SingularityData data_from(const json& j) {
  SingularityData d;
  d.n = int_from(need(j, "n", "missing singularity degree n"), "n");
  if (j.contains("m")) d.m = int_from(j["m"], "m");
  if (j.contains("alpha1")) d.alpha1 = rat_from(j["alpha1"]);
  if (j.contains("alpha2")) d.alpha2 = rat_from(j["alpha2"]);
  if (j.contains("p")) d.p = int_from(j["p"], "p");
  if (j.contains("mh")) d.mh = rat_from(j["mh"]);
  if (j.contains("mv")) d.mv = rat_from(j["mv"]);
  if (j.contains("condition_a"))
    d.condition_a = bool_from(j["condition_a"], "condition_a");
  if (j.contains("mh_levels"))
    d.mh_levels = rat_array_from(j["mh_levels"], "mh_levels");
  if (j.contains("degrees")) d.d = rat_array_from(j["degrees"], "degrees");
  if (j.contains("corrections")) {
    if (!j["corrections"].is_array()) fail("corrections must be an array");
    for (const json& row : j["corrections"])
      d.mij.push_back(rat_array_from(row, "corrections row"));
  }
  if (j.contains("theta")) d.theta = rat_from(j["theta"]);
  if (j.contains("b1")) d.b1 = b1_from(string_from(j["b1"], "b1"));
  return d;
}

json bounds_to(const EnumBounds& b) {
  json j;
  j["n_max"] = b.n_max;
  j["N_max"] = b.N_max;
  j["L_max"] = b.L_max;
  j["denom"] = b.denom;
  j["m_max"] = b.m_max;
  j["condition_a"] = b.condition_a;
  return j;
}

EnumBounds bounds_from(const json& j) {
  EnumBounds b;
  b.n_max = int_from(need(j, "n_max", "missing bound n_max"), "n_max");
  b.N_max = static_cast<int>(
      int_from(need(j, "N_max", "missing bound N_max"), "N_max"));
  b.L_max = static_cast<int>(
      int_from(need(j, "L_max", "missing bound L_max"), "L_max"));
  b.denom = int_from(need(j, "denom", "missing bound denom"), "denom");
  if (j.contains("m_max")) b.m_max = int_from(j["m_max"], "m_max");
  if (j.contains("condition_a"))
    b.condition_a = bool_from(j["condition_a"], "condition_a");
  return b;
}

json job_to_json(const JobFile& job) {
  json j;
  j["schema"] = job.schema;
  j["kind"] = job.kind;
  if (job.kind == "untwist") {
    j["system"] = system_to(job.system);
  } else if (job.kind == "exclude") {
    j["center"] = job.center;
    if (job.center == "two-curves") {
      json d;
      d["n"] = job.data.n;
      d["nu1"] = job.nu1.str();
      d["nu2"] = job.nu2.str();
      j["data"] = d;
    } else {
      j["graph"] = graph_to(job.graph);
      j["data"] = data_to(job.data);
    }
  } else if (job.kind == "enumerate") {
    j["bounds"] = bounds_to(job.bounds);
  } else if (job.kind == "chi") {
    j["class"] = class_to(job.cls);
  } else if (job.kind == "lattice-query") {
    j["op"] = job.op;
    if (job.op == "triple") {
      json cls = json::array();
      for (const DivisorClassV& c : job.classes) cls.push_back(class_to(c));
      j["classes"] = cls;
    } else if (job.op == "pair") {
      j["class"] = class_to(job.classes.at(0));
      j["cycle"] = cycle_to(job.cycle);
    } else if (job.op == "transfer") {
      json x;
      x["a"] = job.x_class.a;
      x["b"] = job.x_class.b;
      j["x_class"] = x;
      j["target"] = model_name(job.target);
    } else {
      fail("unknown lattice op '" + job.op + "'");
    }
  } else {
    fail("unknown job kind '" + job.kind + "'");
  }
  return j;
}

JobFile job_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() ||
      j["kind"].get<std::string>().empty())
    fail("missing job kind");
  JobFile job;
  job.kind = j["kind"].get<std::string>();
  if (!j.contains("schema")) fail("missing schema version");
  if (!j["schema"].is_number_integer() || j["schema"].get<long long>() != 1)
    fail("unsupported schema version");
  job.schema = 1;
  if (job.kind == "untwist") {
    job.system = system_from(need(j, "system", "missing untwist system"));
  } else if (job.kind == "exclude") {
    job.center =
        string_from(need(j, "center", "missing exclusion center"), "center");
    if (job.center == "two-curves") {
      const json& d = need(j, "data", "missing singularity data");
      job.data.n = int_from(need(d, "n", "missing singularity degree n"), "n");
      job.nu1 = rat_from(need(d, "nu1", "missing multiplicity nu1"));
      job.nu2 = rat_from(need(d, "nu2", "missing multiplicity nu2"));
    } else if (job.center == "general" || job.center == "on-s1" ||
               job.center == "infinitely-near") {
      job.graph = graph_from(need(j, "graph", "missing resolution graph"));
      job.data = data_from(need(j, "data", "missing singularity data"));
    } else {
      fail("unknown center '" + job.center + "'");
    }
  } else if (job.kind == "enumerate") {
    job.bounds = bounds_from(need(j, "bounds", "missing sweep bounds"));
  } else if (job.kind == "chi") {
    job.cls = class_from(need(j, "class", "missing divisor class"));
  } else if (job.kind == "lattice-query") {
    job.op = string_from(need(j, "op", "missing lattice op"), "op");
    if (job.op == "triple") {
      const json& cls = need(j, "classes", "missing lattice classes");
      if (!cls.is_array() || cls.size() != 3)
        fail("triple needs exactly three classes");
      for (const json& c : cls) job.classes.push_back(class_from(c));
    } else if (job.op == "pair") {
      job.classes.push_back(class_from(need(j, "class", "missing class")));
      job.cycle = cycle_from(need(j, "cycle", "missing cycle"));
    } else if (job.op == "transfer") {
      const json& x = need(j, "x_class", "missing x_class");
      job.x_class.a = int_from(need(x, "a", "missing x_class a"), "a");
      job.x_class.b = int_from(need(x, "b", "missing x_class b"), "b");
      job.target = model_from(need(j, "target", "missing target model"));
    } else {
      fail("unknown lattice op '" + job.op + "'");
    }
  } else {
    fail("unknown job kind '" + job.kind + "'");
  }
  return job;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

ExclusionCertificate run_exclusion(const JobFile& job) {
  if (job.center == "general")
    return exclusion_point_general(job.data, job.graph);
  if (job.center == "on-s1") return exclusion_point_on_s1(job.data, job.graph);
  if (job.center == "infinitely-near")
    return exclusion_infinitely_near(job.data, job.graph);
  if (job.center == "two-curves")
    return two_curves_exclusion(job.data.n, job.nu1, job.nu2);
  fail("unknown center '" + job.center + "'");
}

bool eval_rel(const Rat& lhs, const std::string& rel, const Rat& rhs) {
  if (rel == "<") return lhs < rhs;
  if (rel == "<=") return lhs <= rhs;
  if (rel == ">") return lhs > rhs;
  if (rel == ">=") return lhs >= rhs;
  if (rel == "==") return lhs == rhs;
  fail("unknown relation '" + rel + "'");
}

Generator generator_from(const std::string& s) {
  if (s == "tau_1") return {Generator::Tau1, ""};
  if (s == "tau_2") return {Generator::Tau2, ""};
  if (s.size() > 7 && s.substr(0, 6) == "tau_l(" && s.back() == ')')
    return {Generator::TauL, s.substr(6, s.size() - 7)};
  fail("unknown generator '" + s + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

JobFile parse_job(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    fail("missing job kind");
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("malformed job JSON: ") + e.what());
  }
  return job_from_json(j);
}

std::string serialize_job(const JobFile& job) {
  return dump_canonical(job_to_json(job));
}

std::string emit_certificate(const JobFile& job,
                             const ExclusionCertificate& cert) {
  json c;
  c["schema"] = 1;
  c["kind"] = "exclusion";
  c["case"] = cert.case_label;
  c["input"] = job_to_json(job);
  c["notes"] = cert.notes;
  c["consequences"] = cert.consequences;
  c["failed"] = cert.failed;
  json trace = json::array();
  for (const TraceLine& ln : cert.trace) {
    json t;
    t["name"] = ln.name;
    t["lhs"] = ln.lhs.str();
    t["rel"] = ln.rel;
    t["rhs"] = ln.rhs.str();
    t["holds"] = ln.holds;
    trace.push_back(t);
  }
  c["trace"] = trace;
  c["verdict"] = verdict_name(cert.verdict);
  return dump_canonical(c);
}

std::string emit_certificate(const JobFile& job, const UntwistResult& result) {
  json c;
  c["schema"] = 1;
  c["kind"] = "untwist";
  c["input"] = job_to_json(job);
  json steps = json::array();
  for (const std::string& s : result.steps) {
    json t;
    t["action"] = s;
    steps.push_back(t);
  }
  c["steps"] = steps;
  json word = json::array();
  for (const Generator& g : result.word) word.push_back(generator_name(g));
  c["word"] = word;
  c["terminal"] = system_to(result.terminal);
  c["notes"] = result.notes;
  c["verdict"] = result.pencil ? "pencil" : "terminal";
  return dump_canonical(c);
}

std::string emit_certificate(const JobFile& job, const EnumReport& report) {
  json c;
  c["schema"] = 1;
  c["kind"] = "enumeration";
  c["input"] = job_to_json(job);
  json counts;
  counts["candidates"] = report.candidates;
  counts["excluded"] = report.excluded;
  counts["input_infeasible"] = report.input_infeasible;
  counts["escapes"] = static_cast<long long>(report.escapes.size());
  c["counts"] = counts;
  c["by_case"] = report.by_case;
  c["by_reason"] = report.by_reason;
  c["escapes"] = report.escapes;
  c["verdict"] = report.escapes.empty() ? "clean" : "escapes";
  return dump_canonical(c);
}

std::vector<std::string> verify_certificate(const std::string& cert_text) {
  json c;
  try {
    c = json::parse(cert_text);
  } catch (const json::exception&) {
    return {"malformed certificate JSON"};
  }
  if (!c.is_object() || !c.contains("kind") || !c["kind"].is_string() ||
      !c.contains("input"))
    return {"certificate missing kind or input"};
  std::string kind = c["kind"].get<std::string>();
  JobFile job;
  try {
    job = job_from_json(c["input"]);
  } catch (const std::exception& e) {
    return {std::string("embedded input rejected: ") + e.what()};
  }

  std::vector<std::string> issues;
  std::string replayed;
  try {
    if (kind == "exclusion") {
      replayed = emit_certificate(job, run_exclusion(job));
    } else if (kind == "untwist") {
      replayed = emit_certificate(job, untwist(job.system));
    } else if (kind == "enumeration") {
      replayed = emit_certificate(job, enumerate_verify(job.bounds, true));
    } else {
      return {"unknown certificate kind '" + kind + "'"};
    }
  } catch (const std::exception& e) {
    return {std::string("re-run failed: ") + e.what()};
  }
  if (replayed != cert_text)
    issues.push_back("re-run certificate differs from the stored bytes");

  try {
    if (kind == "exclusion" && c.contains("trace")) {
      for (const json& t : c["trace"]) {
        std::string name = t.at("name").get<std::string>();
        Rat lhs = Rat::parse(t.at("lhs").get<std::string>());
        Rat rhs = Rat::parse(t.at("rhs").get<std::string>());
        bool holds = eval_rel(lhs, t.at("rel").get<std::string>(), rhs);
        if (holds != t.at("holds").get<bool>())
          issues.push_back("trace line '" + name +
                           "' holds flag does not match its sides");
      }
    } else if (kind == "untwist") {
      UntwistWord word;
      for (const json& w : c.at("word"))
        word.push_back(generator_from(w.get<std::string>()));
      MarkedSystem terminal = replay(job.system, word);
      if (system_to(terminal) != c.at("terminal"))
        issues.push_back("replayed word does not reach the terminal system");
    } else if (kind == "enumeration") {
      const json& counts = c.at("counts");
      long long total = counts.at("candidates").get<long long>();
      long long parts = counts.at("excluded").get<long long>() +
                        counts.at("input_infeasible").get<long long>() +
                        counts.at("escapes").get<long long>();
      if (total != parts)
        issues.push_back("enumeration counts do not partition");
    }
  } catch (const std::exception& e) {
    issues.push_back(std::string("certificate body malformed: ") + e.what());
  }
  return issues;
}

namespace {

DivisorClassV class_flag(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    fail("class flag must be 'n,m', got '" + s + "'");
  try {
    size_t used = 0;
    long long n = std::stoll(s.substr(0, comma), &used);
    if (used != comma) fail("class flag must be 'n,m', got '" + s + "'");
    std::string rest = s.substr(comma + 1);
    long long m = std::stoll(rest, &used);
    if (used != rest.size()) fail("class flag must be 'n,m', got '" + s + "'");
    return {Model::V, n, m};
  } catch (const std::invalid_argument&) {
    fail("class flag must be 'n,m', got '" + s + "'");
  } catch (const std::out_of_range&) {
    fail("class flag out of range: '" + s + "'");
  }
}

JobFile load_job(const std::string& path, const std::string& expect_kind) {
  JobFile job = parse_job(read_file(path));
  if (job.kind != expect_kind)
    fail("job kind is '" + job.kind + "', expected '" + expect_kind + "'");
  return job;
}

void print_summary(std::ostream& out, const EnumReport& rep) {
  out << "candidates: " << rep.candidates << "\n";
  out << "excluded: " << rep.excluded << "\n";
  out << "input-infeasible: " << rep.input_infeasible << "\n";
  out << "by-case:\n";
  for (const auto& [label, count] : rep.by_case)
    out << "  " << label << ": " << count << "\n";
  out << "by-reason:\n";
  for (const auto& [name, count] : rep.by_reason)
    out << "  " << name << ": " << count << "\n";
  for (const std::string& e : rep.escapes) out << "escape: " << e << "\n";
  out << rep.escapes.size() << " escapes\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact-arithmetic certifier for the double cone"};
  app.require_subcommand(1);

  std::string untwist_path;
  CLI::App* cmd_untwist =
      app.add_subcommand("untwist", "run the untwisting descent on a job");
  cmd_untwist->add_option("job", untwist_path, "job JSON file")->required();

  std::string exclude_path;
  CLI::App* cmd_exclude =
      app.add_subcommand("exclude", "run one exclusion chain on a job");
  cmd_exclude->add_option("job", exclude_path, "job JSON file")->required();

  EnumBounds bounds;
  int jobs = 0;
  bool serial = false;
  std::string out_path;
  CLI::App* cmd_enum = app.add_subcommand(
      "enumerate", "sweep candidate singularities and tally the verdicts");
  cmd_enum->add_option("--N", bounds.N_max, "max tower length")->required();
  cmd_enum->add_option("--L", bounds.L_max, "max point levels")->required();
  cmd_enum->add_option("--n", bounds.n_max, "max degree n")->required();
  cmd_enum->add_option("--denom", bounds.denom, "ladder denominator")
      ->required();
  cmd_enum->add_option("--m", bounds.m_max, "max fiber shift m");
  cmd_enum->add_option("--jobs", jobs, "OpenMP thread count");
  cmd_enum->add_flag("--serial", serial, "use the serial reference sweep");
  cmd_enum->add_option("--out", out_path, "write the report certificate here");

  long long chi_n = 0, chi_m = 0;
  CLI::App* cmd_chi = app.add_subcommand(
      "chi", "Euler characteristic of the class (n, m) on V");
  cmd_chi->add_option("--n", chi_n, "anticanonical coefficient")->required();
  cmd_chi->add_option("--m", chi_m, "fiber coefficient");

  CLI::App* cmd_lattice =
      app.add_subcommand("lattice", "intersection lattice queries");
  cmd_lattice->require_subcommand(1);
  std::string cls_a, cls_b, cls_c, cls_d;
  CLI::App* cmd_triple =
      cmd_lattice->add_subcommand("triple", "triple product of divisors");
  cmd_triple->add_option("--a", cls_a, "first class n,m")->required();
  cmd_triple->add_option("--b", cls_b, "second class n,m")->required();
  cmd_triple->add_option("--c", cls_c, "third class n,m")->required();
  std::string sigma_str = "0", phi_str = "0";
  CLI::App* cmd_pair =
      cmd_lattice->add_subcommand("pair", "divisor against a 1-cycle");
  cmd_pair->add_option("--d", cls_d, "divisor class n,m")->required();
  cmd_pair->add_option("--sigma", sigma_str, "cycle sigma coefficient");
  cmd_pair->add_option("--phi", phi_str, "cycle phi coefficient");
  long long xa = 0, xb = 0;
  std::string target_str = "V";
  CLI::App* cmd_transfer = cmd_lattice->add_subcommand(
      "transfer", "express an X-lattice class on a model");
  cmd_transfer->add_option("--a", xa, "coefficient of s")->required();
  cmd_transfer->add_option("--b", xb, "coefficient of f")->required();
  cmd_transfer->add_option("--target", target_str, "model V or U");

  std::string verify_path;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "re-run a certificate and compare byte for byte");
  cmd_verify->add_option("cert", verify_path, "certificate JSON file")
      ->required();

  std::vector<const char*> argv;
  argv.push_back("dblcone");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_untwist)) {
      JobFile job = load_job(untwist_path, "untwist");
      out << emit_certificate(job, untwist(job.system));
      return 0;
    }
    if (app.got_subcommand(cmd_exclude)) {
      JobFile job = load_job(exclude_path, "exclude");
      ExclusionCertificate cert = run_exclusion(job);
      out << emit_certificate(job, cert);
      switch (cert.verdict) {
        case ExVerdict::Excluded:
          return 0;
        case ExVerdict::InputInfeasible:
          err << "error: input infeasible at '" << cert.failed << "'\n";
          return 2;
        case ExVerdict::Escape:
          err << "error: all hypotheses hold, nothing was excluded\n";
          return 1;
      }
    }
    if (app.got_subcommand(cmd_enum)) {
      long long limit = 10'000'000;
      if (const char* env = std::getenv("DBLCONE_WORK_LIMIT")) {
        char* end = nullptr;
        limit = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || limit <= 0) {
          err << "error: invalid DBLCONE_WORK_LIMIT '" << env << "'\n";
          return 2;
        }
      }
      long long dry = enumerate_dry_count(bounds);
      if (dry > limit) {
        err << "error: sweep would submit " << dry
            << " candidates, over the work limit " << limit
            << " (set DBLCONE_WORK_LIMIT to raise it)\n";
        return 2;
      }
#ifdef _OPENMP
      if (jobs > 0) omp_set_num_threads(jobs);
#else
      (void)jobs;
#endif
      auto t0 = std::chrono::steady_clock::now();
      EnumReport rep = enumerate_verify(bounds, !serial);
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      err << "elapsed: " << dt.count() << "s over " << rep.candidates
          << " candidates\n";
      print_summary(out, rep);
      if (!out_path.empty()) {
        JobFile job;
        job.kind = "enumerate";
        job.bounds = bounds;
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
        f << emit_certificate(job, rep);
      }
      return rep.escapes.empty() ? 0 : 1;
    }
    if (app.got_subcommand(cmd_chi)) {
      out << chi_line_bundle({Model::V, chi_n, chi_m}).str() << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_lattice)) {
      if (cmd_lattice->got_subcommand(cmd_triple)) {
        out << div_triple(class_flag(cls_a), class_flag(cls_b),
                          class_flag(cls_c))
                   .str()
            << "\n";
        return 0;
      }
      if (cmd_lattice->got_subcommand(cmd_pair)) {
        CycleClass cycle{Rat::parse(sigma_str), Rat::parse(phi_str)};
        out << div_cycle_pair(class_flag(cls_d), cycle).str() << "\n";
        return 0;
      }
      Model target = Model::V;
      if (target_str == "U")
        target = Model::U;
      else if (target_str != "V")
        fail("unknown model '" + target_str + "'");
      out << dump_canonical(
          class_to(model_transfer(DivisorClassX{xa, xb}, target)));
      return 0;
    }
    if (app.got_subcommand(cmd_verify)) {
      std::vector<std::string> issues =
          verify_certificate(read_file(verify_path));
      if (issues.empty()) {
        out << "verified\n";
        return 0;
      }
      for (const std::string& s : issues) err << "mismatch: " << s << "\n";
      return 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace dblcone
