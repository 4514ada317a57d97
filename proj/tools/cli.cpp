#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "coherent/bounds.hpp"
#include "coherent/diagrams.hpp"
#include "coherent/json_io.hpp"
#include "coherent/matrices.hpp"
#include "coherent/partitions.hpp"
#include "coherent/search.hpp"
#include "coherent/verify.hpp"

namespace coherent::cli {

namespace {

using io::json;

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ValidationError(std::string(flag) + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError(std::string(flag) + " needs at least one value");
  return out;
}

Partition make_partition(std::vector<int> parts, int n, const char* flag) {
  if (n <= 0) {
    n = static_cast<int>(parts.size());
    for (int p : parts) n = std::max(n, p);
  }
  if (parts.size() > static_cast<std::size_t>(n))
    throw ValidationError(std::string(flag) + " has more than n = " + std::to_string(n) + " parts");
  parts.resize(static_cast<std::size_t>(n), 0);
  return Partition(n, std::move(parts));
}

// "a:b:step", inclusive of b when the step lands on it.
std::vector<Rational> parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw ValidationError("--delta-grid expects start:stop:step");
  const Rational lo = parse_rational(text.substr(0, c1));
  const Rational hi = parse_rational(text.substr(c1 + 1, c2 - c1 - 1));
  const Rational step = parse_rational(text.substr(c2 + 1));
  if (step <= 0) throw ValidationError("--delta-grid step must be positive");
  if (lo < 0 || hi > 1 || lo > hi) throw ValidationError("--delta-grid must satisfy 0 <= start <= stop <= 1");
  std::vector<Rational> out;
  for (Rational d = lo; d <= hi; d += step) {
    out.push_back(d);
    if (out.size() > 100000) throw ValidationError("--delta-grid has too many points");
  }
  return out;
}

json read_json_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return io::parse(ss.str());
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse(ss.str());
}

json value_json(const Rational& v) { return {{"value", io::rational_to_json(v)}, {"value_float", format_float(v)}}; }

std::string csv_parameter(const SearchReport& r) {
  if (r.k) return "k=" + std::to_string(*r.k);
  if (r.delta) return "delta=" + to_string(*r.delta);
  return "";
}

void write_report_csv(const SearchReport& top, std::ostream& out) {
  out << "method,parameter,n,value_exact,value_float,bound,bound_value,satisfied,gap\n";
  auto rows = [&](const SearchReport& r) {
    for (const auto& b : r.bounds)
      out << method_name(r.method) << ',' << csv_parameter(r) << ',' << r.n << ',' << to_string(r.best) << ','
          << format_float(r.best) << ',' << b.name << ',' << to_string(b.value) << ','
          << (b.satisfied ? "true" : "false") << ',' << to_string(b.value - r.best) << '\n';
    if (r.bounds.empty())
      out << method_name(r.method) << ',' << csv_parameter(r) << ',' << r.n << ',' << to_string(r.best) << ','
          << format_float(r.best) << ",,,,\n";
  };
  for (const auto& s : top.stages) rows(s);
  if (top.stages.empty()) rows(top);
}

void emit_report(const SearchReport& r, const std::string& format, std::ostream& out) {
  if (format == "csv") write_report_csv(r, out);
  else out << io::to_json(r).dump(2) << '\n';
}

const char* paint(bool color, bool ok) {
  if (!color) return "";
  return ok ? "\033[32m" : "\033[31m";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Exact computations on coherent pairs, Ferrer diagrams and bipartite degree sequences", "coherent"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "coherent 1.0.0");

  // conjugate
  std::string parts_text;
  int box = 0;
  auto* conj = app.add_subcommand("conjugate", "Conjugate partition of a box partition");
  conj->add_option("--parts", parts_text, "Comma-separated parts, e.g. 5,4,3,3,2")->required();
  conj->add_option("--n", box, "Box size (default: smallest box holding the parts)");

  // bigraphic
  std::string a_text, b_text;
  auto* bigr = app.add_subcommand("bigraphic", "Gale-Ryser test of a degree-sequence pair");
  bigr->add_option("--a", a_text, "x-side degrees")->required();
  bigr->add_option("--b", b_text, "y-side degrees")->required();
  bigr->add_option("--n", box, "Box size");

  // eval
  std::string diagram_path, graph_path, matrices_path, delta_text;
  unsigned k = 0;
  bool strict = false;
  auto* eval = app.add_subcommand("eval", "Evaluate a moment or tail of a diagram, graph or matrix pair");
  auto* src_group = eval->add_option_group("input");
  src_group->add_option("--diagram", diagram_path, "Step-function JSON file ('-' for stdin)");
  src_group->add_option("--graph", graph_path, "Graph JSON file ('-' for stdin)");
  src_group->add_option("--matrices", matrices_path, "Matrix-pair JSON file ('-' for stdin)");
  src_group->require_option(1);
  auto* k_opt = eval->add_option("--k", k, "Moment exponent")->check(CLI::Range(1u, 64u));
  auto* delta_opt = eval->add_option("--delta", delta_text, "Tail threshold (rational or decimal)");
  eval->add_flag("--strict", strict, "Use P(|X-Y| > delta) instead of >=");
  k_opt->excludes(delta_opt);

  // search
  auto* search = app.add_subcommand("search", "Maximize objectives by enumeration or local search");
  search->require_subcommand(1, 1);
  std::string format = "json";
  int n = 0, n_max = 12, resolution = 10;
  unsigned workers = 1;
  std::string method = "exhaustive";
  LocalSearchOptions local;
  bool non_strict = false;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto* best = search->add_subcommand("best", "Best E|X-Y|^k over box partitions or graphs");
  best->add_option("--n", n, "Box size")->required()->check(CLI::PositiveNumber);
  best->add_option("--k", k, "Exponent")->required()->check(CLI::Range(1u, 64u));
  best->add_option("--method", method, "exhaustive, local or graphs")
      ->check(CLI::IsMember({"exhaustive", "local", "graphs"}));
  best->add_option("--seed", local.seed, "Local search seed");
  best->add_option("--iters", local.max_iters, "Local search move budget")->check(CLI::NonNegativeNumber);
  best->add_option("--restarts", local.restarts, "Local search restarts")->check(CLI::PositiveNumber);
  best->add_option("--workers", workers, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  add_format(best);

  auto* counter = search->add_subcommand("counterexample", "Look for E|X-Y|^k > 2^-k (k >= 4)");
  counter->add_option("--k", k, "Exponent")->required()->check(CLI::Range(1u, 64u));
  counter->add_option("--n-max", n_max, "Largest box size")->check(CLI::PositiveNumber);
  counter->add_option("--workers", workers, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  add_format(counter);

  auto* tail_cmd = search->add_subcommand("tail", "Best P(|X-Y| > delta) over box diagrams");
  tail_cmd->add_option("--delta", delta_text, "Threshold in (1/2, 1]")->required();
  tail_cmd->add_option("--resolution", resolution, "Box size m")->check(CLI::PositiveNumber);
  tail_cmd->add_flag("--non-strict", non_strict, "Use >= instead of >");
  add_format(tail_cmd);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds");
  bounds->require_subcommand(1, 1);
  unsigned k_max = 8;
  std::string grid_text = "0.55:0.95:0.05";
  auto* table = bounds->add_subcommand("table", "CSV of every closed form");
  table->add_option("--k-max", k_max, "Largest exponent")->check(CLI::Range(1u, 64u));
  table->add_option("--delta-grid", grid_text, "start:stop:step");

  // verify
  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--suite", suite, "all, slicing, galeryser, chord or zagreb");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) {
      failing = sub;
      for (auto* inner : sub->get_subcommands()) failing = inner;
    }
    err << failing->help();
    return kValidation;
  }

  try {
    if (*conj) {
      const auto p = make_partition(parse_int_list(parts_text, "--parts"), box, "--parts");
      out << io::to_json(conjugate(p)).dump() << '\n';
    } else if (*bigr) {
      auto a = parse_int_list(a_text, "--a"), b = parse_int_list(b_text, "--b");
      if (box <= 0) {
        box = static_cast<int>(std::max(a.size(), b.size()));
        for (int v : a) box = std::max(box, v);
        for (int v : b) box = std::max(box, v);
      }
      const auto pa = make_partition(a, box, "--a"), pb = make_partition(b, box, "--b");
      const auto trace = bigraphic_trace(pa, pb);
      json j;
      j["bigraphic"] = trace.holds();
      j["n"] = box;
      j["a"] = pa.sorted().parts();
      j["b"] = pb.sorted().parts();
      j["b_conjugate"] = conjugate(pb).parts();
      j["trace"] = {{"b_conjugate_prefix", trace.x_prefix},
                    {"a_prefix", trace.y_prefix},
                    {"first_failure", trace.first_failure ? json(*trace.first_failure + 1) : json(nullptr)},
                    {"totals_equal", trace.totals_equal}};
      out << j.dump() << '\n';
    } else if (*eval) {
      const bool want_tail = delta_opt->count() > 0;
      if (!want_tail && k_opt->count() == 0) throw ValidationError("eval needs --k or --delta");
      json j;
      if (!diagram_path.empty()) {
        const auto f = io::stepfn_from_json(read_json_file(diagram_path));
        if (want_tail) {
          const Rational d = parse_rational(delta_text);
          if (d < 0 || d > 1) throw ValidationError("--delta must lie in [0, 1]");
          j = {{"objective", "tail"}, {"delta", io::rational_to_json(d)}, {"strict", strict}};
          j.update(value_json(tail(f, d, strict)));
        } else {
          j = {{"objective", "moment"}, {"k", k}};
          j.update(value_json(moment(f, k)));
        }
      } else {
        if (want_tail) throw ValidationError("--delta applies to diagrams only");
        if (!graph_path.empty()) {
          const auto g = io::graph_from_json(read_json_file(graph_path));
          j = {{"objective", "degree"}, {"k", k}};
          j.update(value_json(objective(g, k)));
        } else {
          const auto pair = io::matrix_pair_from_json(read_json_file(matrices_path));
          j = {{"objective", "phi"}, {"k", k}};
          j.update(value_json(phi(pair, k)));
        }
      }
      out << j.dump() << '\n';
    } else if (*best) {
      SearchReport r;
      if (method == "exhaustive") r = exhaustive_best(n, k, {workers});
      else if (method == "graphs") r = exhaustive_graphs(n, k, {workers});
      else r = local_search(n, k, local);
      emit_report(r, format, out);
    } else if (*counter) {
      emit_report(counterexample_hunt(k, n_max, {workers}), format, out);
    } else if (*tail_cmd) {
      emit_report(tail_search(parse_rational(delta_text), resolution, !non_strict), format, out);
    } else if (*table) {
      out << "name,parameter,value_exact,value_float\n";
      for (const auto& row : bounds_table(k_max, parse_grid(grid_text)))
        out << row.name << ',' << row.parameter << ',' << (row.exact ? to_string(*row.exact) : "") << ','
            << format_float(row.value) << '\n';
    } else if (*verify_cmd) {
      bool all_passed = true;
      const char* reset = color ? "\033[0m" : "";
      for (const auto& r : verify::run_suite(suite)) {
        all_passed = all_passed && r.passed;
        out << paint(color, r.passed) << (r.passed ? "PASS" : "FAIL") << reset << ' ' << r.name << " (" << r.checked
            << " checks)";
        if (!r.passed) out << ": " << r.detail;
        out << '\n';
      }
      return all_passed ? kOk : kVerifyFailed;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
  return kOk;
}

}  // namespace coherent::cli
