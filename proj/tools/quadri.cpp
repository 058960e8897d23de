// Command-line driver: runs the verification checks and emits one report
// line per check as JSON, CSV or text.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadri/checks.hpp"

namespace {

using quadri::Algebra;
using quadri::CheckResult;
using quadri::OperadName;

struct TimedResult {
  CheckResult result;
  long long elapsed_ms = 0;
};

TimedResult timed(const std::function<CheckResult()>& fn) {
  auto start = std::chrono::steady_clock::now();
  TimedResult out{fn(), 0};
  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

std::string value_str(const CheckResult::Value& v) {
  if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
  return std::get<std::string>(v);
}

// JSON output carries no timing so identical invocations stay byte-identical.
void emit_json(const TimedResult& r, std::ostream& os) {
  nlohmann::ordered_json j;
  j["check"] = r.result.name;
  for (const auto& [k, v] : r.result.fields) {
    if (std::holds_alternative<long long>(v))
      j[k] = std::get<long long>(v);
    else if (std::holds_alternative<bool>(v))
      j[k] = std::get<bool>(v);
    else
      j[k] = std::get<std::string>(v);
  }
  j["pass"] = r.result.pass;
  os << j.dump() << '\n';
}

void emit_csv(const TimedResult& r, std::ostream& os) {
  auto cell = [](std::string s) {
    if (s.find(',') != std::string::npos || s.find('"') != std::string::npos) {
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      quoted += '"';
      return quoted;
    }
    return s;
  };
  for (const auto& [k, v] : r.result.fields)
    os << r.result.name << ',' << k << ',' << cell(value_str(v)) << '\n';
  os << r.result.name << ",pass," << (r.result.pass ? "true" : "false") << '\n';
}

void emit_text(const TimedResult& r, std::ostream& os) {
  os << (r.result.pass ? "PASS" : "FAIL") << ' ' << r.result.name;
  for (const auto& [k, v] : r.result.fields) os << ' ' << k << '=' << value_str(v);
  os << " (" << r.elapsed_ms << " ms)\n";
}

void emit(const TimedResult& r, const std::string& format, std::ostream& os) {
  if (format == "json")
    emit_json(r, os);
  else if (format == "csv")
    emit_csv(r, os);
  else
    emit_text(r, os);
}

Algebra parse_algebra(const std::string& s) {
  if (s == "fqsym") return Algebra::kFqsym;
  if (s == "wqsym") return Algebra::kWqsym;
  if (s == "rect") return Algebra::kRect;
  if (s == "shuffle-words") return Algebra::kShuffleWords;
  throw CLI::ValidationError("--algebra", "unknown algebra: " + s);
}

OperadName parse_operad(const std::string& s) {
  if (s == "quad") return OperadName::kQuad;
  if (s == "dend") return OperadName::kDend;
  if (s == "dias") return OperadName::kDias;
  if (s == "quad-shriek") return OperadName::kQuadShriek;
  throw CLI::ValidationError("--operad", "unknown operad: " + s);
}

int default_axiom_degree(Algebra a) {
  switch (a) {
    case Algebra::kFqsym: return 6;
    case Algebra::kWqsym: return 5;
    case Algebra::kShuffleWords: return 5;
    case Algebra::kRect: return 3;
  }
  return 4;
}

int run_tasks(std::vector<std::function<CheckResult()>> tasks, const std::string& format,
              int jobs) {
  std::vector<TimedResult> results(tasks.size());
  if (jobs < 1) jobs = 1;
  std::mutex queue_mutex;
  std::size_t next = 0;
  auto worker = [&]() {
    while (true) {
      std::size_t mine;
      {
        std::lock_guard<std::mutex> lock(queue_mutex);
        if (next >= tasks.size()) return;
        mine = next++;
      }
      results[mine] = timed(tasks[mine]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<int>(jobs, static_cast<int>(tasks.size())); ++t)
    pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  bool all_pass = true;
  for (const auto& r : results) {
    emit(r, format, std::cout);
    all_pass = all_pass && r.result.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic verification workbench for quadri-algebras, "
               "their dual operad, and the permutation/packed-word models"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  int jobs = 0;
  app.add_option("--jobs", jobs, "Concurrent checks for `report` (env QUADRI_JOBS)");
  bool slow = false;
  app.add_flag("--slow", slow, "Enable the slow paths (degree-8 span, arity-4 theta)");

  CLI::App* check = app.add_subcommand("check", "Run one verification");
  check->require_subcommand(1);

  std::string algebra_str = "fqsym";
  int max_degree = 0;
  auto* axioms = check->add_subcommand("axioms", "Quadri-algebra axioms, exhaustive by degree");
  axioms->add_option("--algebra", algebra_str, "fqsym|wqsym|rect|shuffle-words");
  axioms->add_option("--max-degree", max_degree, "Total degree bound");

  auto* coaxioms = check->add_subcommand("coaxioms", "Quadri-coalgebra axioms");
  coaxioms->add_option("--algebra", algebra_str, "fqsym|wqsym");
  coaxioms->add_option("--max-degree", max_degree, "Degree bound");

  auto* bialgebra = check->add_subcommand("bialgebra", "The sixteen compatibilities");
  bialgebra->add_option("--algebra", algebra_str, "fqsym|wqsym");
  bialgebra->add_option("--max-degree", max_degree, "Total degree bound");

  std::string operad_str = "quad-shriek";
  auto* confluence = check->add_subcommand("confluence", "Rewriting confluence and dimensions");
  confluence->add_option("--operad", operad_str, "quad-shriek|dend|dias");

  std::string dual_operad_str = "quad";
  auto* koszul = check->add_subcommand("koszul-dual", "Orthogonal relations of the dual");
  koszul->add_option("--operad", dual_operad_str, "quad|dend");

  check->add_subcommand("manin", "Black product of dias with itself");

  int max_arity = 3;
  auto* theta = check->add_subcommand("theta", "Embedding into the dendriform tensor square");
  theta->add_option("--max-arity", max_arity, "3 or 4 (4 needs --slow)")
      ->check(CLI::IsMember({3, 4}));

  int freeness_degree = 6;
  auto* freeness = check->add_subcommand("freeness-fqsym", "Span ranks of the (12) subalgebra");
  freeness->add_option("--max-degree", freeness_degree, "6 or 8 (8 needs --slow)")
      ->check(CLI::IsMember({6, 8}));

  int max_n = 6;
  auto* rect = check->add_subcommand("rect", "Rectangle model: generation, iso, soundness");
  rect->add_option("--max-n", max_n, "Generation bound");

  int psi_degree = 6;
  auto* psi_cmd = check->add_subcommand("psi", "Halving morphism on even permutations");
  psi_cmd->add_option("--max-degree", psi_degree, "Total degree bound");

  check->add_subcommand("primitives", "Primitive elements of the permutation model");

  auto* dims = app.add_subcommand("dims", "Dimension table of an operad");
  std::string dims_operad = "quad";
  int upto = 10;
  dims->add_option("--operad", dims_operad, "quad|quad-shriek|dend|dias");
  dims->add_option("--upto", upto, "Last arity");

  auto* series_cmd = app.add_subcommand("series", "Component/primitive/generator tables");
  std::string table = "abc";
  series_cmd->add_option("--table", table, "Which table")->check(CLI::IsMember({"abc"}));

  app.add_subcommand("report", "Run the full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (jobs == 0) {
    if (const char* env = std::getenv("QUADRI_JOBS")) jobs = std::atoi(env);
    if (jobs == 0) jobs = 1;
  }

  try {
    std::vector<std::function<CheckResult()>> tasks;

    if (app.got_subcommand("dims")) {
      OperadName op = parse_operad(dims_operad);
      tasks.push_back([op, upto] { return quadri::check_dims(op, upto); });
    } else if (app.got_subcommand("series")) {
      tasks.push_back([] { return quadri::check_series(); });
    } else if (app.got_subcommand("report")) {
      bool s = slow;
      tasks = {
          [] { return quadri::check_series(); },
          [] { return quadri::check_dims(OperadName::kQuad, 10); },
          [] { return quadri::check_koszul_dual(OperadName::kQuad); },
          [] { return quadri::check_koszul_dual(OperadName::kDend); },
          [] { return quadri::check_confluence(OperadName::kQuadShriek); },
          [] { return quadri::check_confluence(OperadName::kDend); },
          [] { return quadri::check_confluence(OperadName::kDias); },
          [] { return quadri::check_manin(); },
          [s] { return quadri::check_theta(s ? 4 : 3); },
          [] { return quadri::check_axioms(Algebra::kFqsym, 6); },
          [] { return quadri::check_coaxioms(Algebra::kFqsym, 6); },
          [] { return quadri::check_bialgebra(Algebra::kFqsym, 5); },
          [] { return quadri::check_axioms(Algebra::kWqsym, 5); },
          [] { return quadri::check_coaxioms(Algebra::kWqsym, 5); },
          [] { return quadri::check_bialgebra(Algebra::kWqsym, 4); },
          [] { return quadri::check_axioms(Algebra::kShuffleWords, 5); },
          [s] { return quadri::check_freeness_fqsym(s ? 8 : 6); },
          [] { return quadri::check_axioms(Algebra::kRect, 3); },
          [] { return quadri::check_rect(6); },
          [] { return quadri::check_psi(6); },
          [] { return quadri::check_primitives(); },
      };
    } else {
      if (axioms->parsed()) {
        Algebra a = parse_algebra(algebra_str);
        int d = max_degree > 0 ? max_degree : default_axiom_degree(a);
        tasks.push_back([a, d] { return quadri::check_axioms(a, d); });
      } else if (coaxioms->parsed()) {
        Algebra a = parse_algebra(algebra_str);
        int d = max_degree > 0 ? max_degree : default_axiom_degree(a);
        tasks.push_back([a, d] { return quadri::check_coaxioms(a, d); });
      } else if (bialgebra->parsed()) {
        Algebra a = parse_algebra(algebra_str);
        int d = max_degree > 0 ? max_degree : default_axiom_degree(a) - 1;
        tasks.push_back([a, d] { return quadri::check_bialgebra(a, d); });
      } else if (confluence->parsed()) {
        OperadName op = parse_operad(operad_str);
        if (op == OperadName::kQuad) throw CLI::ValidationError("--operad", "no rewriting for quad");
        tasks.push_back([op] { return quadri::check_confluence(op); });
      } else if (koszul->parsed()) {
        OperadName op = parse_operad(dual_operad_str);
        tasks.push_back([op] { return quadri::check_koszul_dual(op); });
      } else if (check->got_subcommand("manin")) {
        tasks.push_back([] { return quadri::check_manin(); });
      } else if (theta->parsed()) {
        if (max_arity == 4 && !slow)
          throw CLI::ValidationError("--max-arity", "arity 4 needs --slow");
        int m = max_arity;
        tasks.push_back([m] { return quadri::check_theta(m); });
      } else if (freeness->parsed()) {
        if (freeness_degree == 8 && !slow)
          throw CLI::ValidationError("--max-degree", "degree 8 needs --slow");
        int d = freeness_degree;
        tasks.push_back([d] { return quadri::check_freeness_fqsym(d); });
      } else if (rect->parsed()) {
        int n = max_n;
        tasks.push_back([n] { return quadri::check_rect(n); });
      } else if (psi_cmd->parsed()) {
        int d = psi_degree;
        tasks.push_back([d] { return quadri::check_psi(d); });
      } else if (check->got_subcommand("primitives")) {
        tasks.push_back([] { return quadri::check_primitives(); });
      } else {
        std::cerr << check->help() << '\n';
        return 2;
      }
    }

    return run_tasks(std::move(tasks), format, jobs);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
