// Command-line front end. Links only the C API of libanum.
//
// Exit codes: 0 success (including reported disagreements), 1 invalid
// parameters/usage, 2 hard internal consistency failure, 3 resource guard.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anum/anum.h"

namespace {

using nlohmann::ordered_json;

struct CurveDeleter {
  void operator()(anum_curve* c) const { anum_curve_free(c); }
};
using CurvePtr = std::unique_ptr<anum_curve, CurveDeleter>;

struct StringDeleter {
  void operator()(char* s) const { anum_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

int fail(anum_status st, bool json_errors, const std::string& context) {
  if (json_errors) {
    ordered_json j;
    j["error"] = anum_last_error();
    j["context"] = context;
    j["code"] = static_cast<int>(st);
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << "error: " << anum_last_error() << " (" << context << ")\n";
  }
  return static_cast<int>(st);
}

CurvePtr make_curve(long long p, int s, long long m, bool strict, anum_status& st) {
  anum_curve* raw = nullptr;
  st = anum_curve_create(p, s, m, strict ? 1 : 0, &raw);
  return CurvePtr(raw);
}

// Pretty table for humans from the verify JSON.
void print_report_table(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text);
  std::printf("curve        y^%lld = x^%lld + x over F_q^2, p=%lld s=%lld q=%lld\n",
              j["n"].get<long long>(), j["m"].get<long long>(), j["p"].get<long long>(),
              j["s"].get<long long>(), j["q"].get<long long>());
  std::printf("genus        %lld\n", j["g"].get<long long>());
  std::printf("matrix rank  %lld\n", j["matrix_rank"].get<long long>());
  std::printf("a-number     %lld\n", j["a_number"].get<long long>());
  std::printf("p-rank       %lld\n", j["p_rank"].get<long long>());
  std::printf("cc honest    %lld   cc paper-literal %lld\n", j["cc_honest"].get<long long>(),
              j["cc_paper"].get<long long>());
  std::printf("formula rank %lld/%lld   formula a %lld/%lld\n",
              j["formula_rank_num"].get<long long>(), j["formula_rank_den"].get<long long>(),
              j["formula_a_num"].get<long long>(), j["formula_a_den"].get<long long>());
  if (!j["points_total"].is_null())
    std::printf("points       %lld over F_q^2   maximal=%s\n", j["points_total"].get<long long>(),
                j["maximal"].get<bool>() ? "yes" : "no");
  std::printf("flags       ");
  for (auto& [k, v] : j["flags"].items()) std::printf(" %s=%d", k.c_str(), v.get<bool>() ? 1 : 0);
  std::printf("\n");
}

struct SweepInstance {
  long long p;
  int s;
  long long m;
};

unsigned sweep_workers() {
  if (const char* env = std::getenv("ANUM_SWEEP_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

int run_sweep(const std::string& spec_path, bool json_errors) {
  std::ifstream in(spec_path);
  if (!in) {
    std::cerr << "error: cannot open sweep spec " << spec_path << "\n";
    return 1;
  }
  ordered_json spec;
  try {
    in >> spec;
  } catch (const std::exception& e) {
    std::cerr << "error: bad sweep spec: " << e.what() << "\n";
    return 1;
  }

  std::vector<long long> primes = spec.value("primes", std::vector<long long>{});
  std::vector<int> s_values = spec.value("s_values", std::vector<int>{});
  bool strict = spec.value("strict_hypotheses", false);
  long long genus_cap = spec.value("genus_cap", 2000LL);
  std::string format = spec.value("format", std::string("json"));
  std::string output_path = spec.value("output", std::string(""));

  // m modes: "two", "three", or {"p_power": b}
  struct MMode {
    bool p_power;
    long long value;  // m itself, or the exponent b
  };
  std::vector<MMode> modes;
  for (const auto& mm : spec.value("m_modes", ordered_json::array())) {
    if (mm.is_string()) {
      std::string name = mm.get<std::string>();
      if (name == "two") modes.push_back({false, 2});
      else if (name == "three") modes.push_back({false, 3});
      else {
        std::cerr << "error: unknown m mode '" << name << "'\n";
        return 1;
      }
    } else if (mm.is_object() && mm.contains("p_power")) {
      modes.push_back({true, mm["p_power"].get<long long>()});
    } else {
      std::cerr << "error: bad m mode entry\n";
      return 1;
    }
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!output_path.empty()) {
    file_out.open(output_path);
    if (!file_out) {
      std::cerr << "error: cannot open output " << output_path << "\n";
      return 1;
    }
    out = &file_out;
  }

  // Expand the grid; structural validation (primality, p > 3) filters here,
  // hypothesis failures filter only in strict mode.
  std::vector<SweepInstance> instances;
  for (long long p : primes) {
    for (int s : s_values) {
      for (const MMode& mode : modes) {
        long long m = mode.value;
        if (mode.p_power) {
          if (mode.value < 1 || s % mode.value != 0) continue;
          m = 1;
          for (long long i = 0; i < mode.value; ++i) m *= p;
        }
        anum_status st;
        CurvePtr probe = make_curve(p, s, m, false, st);
        if (st != ANUM_OK) continue;  // structurally invalid triple
        if (strict && !anum_hypotheses_ok(probe.get())) continue;
        instances.push_back({p, s, m});
      }
    }
  }

  // Each line is either a report or a skip record; output order follows the
  // sweep index regardless of which worker finished first.
  std::vector<std::string> lines(instances.size());
  std::vector<int> codes(instances.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= instances.size()) return;
      const SweepInstance& inst = instances[idx];
      anum_status st;
      CurvePtr curve = make_curve(inst.p, inst.s, inst.m, false, st);
      if (st != ANUM_OK) {
        codes[idx] = static_cast<int>(st);
        continue;
      }
      if (anum_genus(curve.get()) > genus_cap) {
        if (format == "csv") {
          std::ostringstream os;
          // p,s,m then empty n,q, then g, then 11 empty value fields, flags last
          os << inst.p << ',' << inst.s << ',' << inst.m << ",,," << anum_genus(curve.get())
             << ",,,,,,,,,,,,skipped:genus_cap";
          lines[idx] = os.str();
        } else {
          ordered_json j;
          j["p"] = inst.p;
          j["s"] = inst.s;
          j["m"] = inst.m;
          j["g"] = anum_genus(curve.get());
          j["skipped"] = "genus_cap";
          lines[idx] = j.dump();
        }
        continue;
      }
      char* text = nullptr;
      anum_status vst = (format == "csv") ? anum_verify_csv(curve.get(), 0, &text)
                                          : anum_verify_json(curve.get(), &text);
      if (vst != ANUM_OK) {
        codes[idx] = static_cast<int>(vst);
        continue;
      }
      lines[idx] = text;
      anum_string_free(text);
    }
  };

  unsigned nworkers = sweep_workers();
  std::vector<std::thread> threads;
  for (unsigned i = 1; i < nworkers; ++i) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  if (format == "csv")
    *out << "p,s,m,n,q,g,matrix_rank,a_number,p_rank,cc_honest,cc_paper,"
            "formula_rank_num,formula_rank_den,formula_a_num,formula_a_den,"
            "points_total,maximal,flags\n";
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (codes[i] != 0) return fail(static_cast<anum_status>(codes[i]), json_errors, "sweep");
    *out << lines[i] << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Cartier-matrix / a-number toolkit for y^((q+1)/2) = x^m + x"};
  app.require_subcommand(1);

  long long p = 0, m = 0;
  int s = 1;
  bool use_json = false, use_csv = false, strict = false;
  app.add_flag("--json", use_json, "machine-readable JSON output");
  app.add_flag("--csv", use_csv, "CSV output");
  app.add_flag("--strict", strict, "reject parameter sets failing any hypothesis");

  auto add_params = [&](CLI::App* sub) {
    sub->fallthrough();  // let --json/--csv/--strict appear after the subcommand
    sub->add_option("--p", p, "characteristic (prime > 3)")->required();
    sub->add_option("--s", s, "exponent: q = p^s")->required();
    sub->add_option("--m", m, "curve degree m")->required();
  };

  auto* cmd_check = app.add_subcommand("check", "validate parameters, genus, basis size");
  add_params(cmd_check);
  auto* cmd_a = app.add_subcommand("a-number", "a-number from the Cartier matrix");
  add_params(cmd_a);
  auto* cmd_rank = app.add_subcommand("rank", "rank of the Cartier matrix");
  add_params(cmd_rank);
  auto* cmd_prank = app.add_subcommand("p-rank", "stable rank of the iterated matrix");
  add_params(cmd_prank);

  auto* cmd_matrix = app.add_subcommand("matrix", "Cartier matrix");
  add_params(cmd_matrix);
  bool dump = false;
  cmd_matrix->add_flag("--dump", dump, "canonical text dump of columns");

  auto* cmd_cc = app.add_subcommand("congruence-count", "solvable-congruence count");
  add_params(cmd_cc);
  std::string exponent_mode = "honest", index_mode = "derived-basis", h_range = "half";
  cmd_cc->add_option("--exponent-mode", exponent_mode, "honest | paper-literal");
  cmd_cc->add_option("--index-mode", index_mode, "derived-basis | paper-literal");
  cmd_cc->add_option("--h-range", h_range, "half | full");

  auto* cmd_points = app.add_subcommand("point-count", "brute-force points over F_p^e");
  add_params(cmd_points);
  int e = 1;
  cmd_points->add_option("--e", e, "extension degree")->required();

  auto* cmd_verify = app.add_subcommand("verify", "full verification report");
  add_params(cmd_verify);

  auto* cmd_sweep = app.add_subcommand("sweep", "run a parameter grid from a spec file");
  cmd_sweep->fallthrough();
  std::string spec_path;
  cmd_sweep->add_option("--spec", spec_path, "sweep spec JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  if (app.got_subcommand(cmd_sweep)) return run_sweep(spec_path, use_json);

  anum_status st;
  CurvePtr curve = make_curve(p, s, m, strict, st);
  if (st != ANUM_OK) return fail(st, use_json, "curve construction");

  auto print_scalar = [&](const char* name, long long value) {
    if (use_json) {
      ordered_json j;
      j["p"] = p;
      j["s"] = s;
      j["m"] = m;
      j[name] = value;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << name << " " << value << "\n";
    }
  };

  if (app.got_subcommand(cmd_check)) {
    char* text = nullptr;
    st = anum_check_json(curve.get(), &text);
    if (st != ANUM_OK) return fail(st, use_json, "check");
    ApiString guard(text);
    if (use_json) {
      std::cout << text << "\n";
    } else {
      ordered_json j = ordered_json::parse(text);
      std::cout << "n " << j["n"] << "  q " << j["q"] << "  g " << j["g"] << "  basis "
                << j["basis_size"] << "  paper-index-set " << j["paper_index_set_size"] << "\n"
                << "hypotheses " << (j["hypotheses"]["all"].get<bool>() ? "ok" : "FAIL") << "\n";
    }
    return 0;
  }
  if (app.got_subcommand(cmd_a)) {
    long long v = 0;
    st = anum_a_number(curve.get(), &v);
    if (st != ANUM_OK) return fail(st, use_json, "a-number");
    print_scalar("a_number", v);
    return 0;
  }
  if (app.got_subcommand(cmd_rank)) {
    long long v = 0;
    st = anum_matrix_rank(curve.get(), &v);
    if (st != ANUM_OK) return fail(st, use_json, "rank");
    print_scalar("rank", v);
    return 0;
  }
  if (app.got_subcommand(cmd_prank)) {
    long long v = 0;
    st = anum_p_rank(curve.get(), &v);
    if (st != ANUM_OK) return fail(st, use_json, "p-rank");
    print_scalar("p_rank", v);
    return 0;
  }
  if (app.got_subcommand(cmd_matrix)) {
    char* text = nullptr;
    st = anum_matrix_dump(curve.get(), &text);
    if (st != ANUM_OK) return fail(st, use_json, "matrix");
    ApiString guard(text);
    std::cout << text;
    return 0;
  }
  if (app.got_subcommand(cmd_cc)) {
    long long v = 0;
    st = anum_congruence_count(curve.get(), exponent_mode.c_str(), index_mode.c_str(),
                               h_range.c_str(), &v);
    if (st != ANUM_OK) return fail(st, use_json, "congruence-count");
    print_scalar("congruence_count", v);
    return 0;
  }
  if (app.got_subcommand(cmd_points)) {
    long long total = 0;
    st = anum_point_count(curve.get(), e, &total);
    if (st != ANUM_OK) return fail(st, use_json, "point-count");
    print_scalar("points_total", total);
    return 0;
  }
  if (app.got_subcommand(cmd_verify)) {
    char* text = nullptr;
    if (use_csv) {
      st = anum_verify_csv(curve.get(), 1, &text);
      if (st != ANUM_OK) return fail(st, use_json, "verify");
      ApiString guard(text);
      std::cout << text << "\n";
    } else {
      st = anum_verify_json(curve.get(), &text);
      if (st != ANUM_OK) return fail(st, use_json, "verify");
      ApiString guard(text);
      if (use_json)
        std::cout << text << "\n";
      else
        print_report_table(text);
    }
    return 0;
  }
  return 1;
}
