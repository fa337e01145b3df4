#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pneg/pneg.hpp"

namespace pneg::cli {

using nlohmann::json;

// Exit codes: 0 success, 1 check failure, 2 usage/validation error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { json_document, csv_series, plain_table };

// ---------------------------------------------------------------------------
// parsing

inline std::string trim(std::string_view s) {
  constexpr const char* kWs = " \t\r\n";
  const auto first = s.find_first_not_of(kWs);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kWs);
  return std::string(s.substr(first, last - first + 1));
}

inline double parse_double(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw Error(Errc::InvalidArgument, "not a number: '" + text + "'");
  return value;
}

inline OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json_document;
  if (text == "csv") return OutputFormat::csv_series;
  if (text == "table") return OutputFormat::plain_table;
  throw Error(Errc::InvalidArgument, "format must be json, csv, or table: '" + text + "'");
}

inline NegationOperator parse_operator(const std::string& text) {
  if (text == "exp" || text == "exponential") return NegationOperator::exponential;
  if (text == "yager") return NegationOperator::yager;
  throw Error(Errc::InvalidArgument, "operator must be exp or yager: '" + text + "'");
}

/// Accepts comma-separated decimals ("0.1, 0.4, 0.5") or @file.json holding
/// a JSON array of numbers.
inline Distribution parse_distribution(const std::string& arg) {
  std::vector<double> values;
  if (!arg.empty() && arg.front() == '@') {
    const std::string path = arg.substr(1);
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidArgument, "cannot read '" + path + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(Errc::InvalidArgument, path + ": " + e.what());
    }
    if (!doc.is_array())
      throw Error(Errc::InvalidArgument, path + ": expected a JSON array of numbers");
    for (const auto& item : doc) {
      if (!item.is_number())
        throw Error(Errc::InvalidArgument, path + ": expected a JSON array of numbers");
      values.push_back(item.get<double>());
    }
  } else {
    std::size_t start = 0;
    while (start <= arg.size()) {
      const std::size_t comma = arg.find(',', start);
      const std::string token =
          trim(std::string_view(arg).substr(start, comma == std::string::npos ? arg.size() - start
                                                                              : comma - start));
      if (!token.empty()) values.push_back(parse_double(token));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return make_distribution(std::move(values));
}

/// Criterion grammar: dp:<d> or linf:<eps>.
inline ConvergenceCriterion parse_criterion(const std::string& text) {
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);
    if (head == "dp") {
      int places = 0;
      const char* end = tail.data() + tail.size();
      const auto [ptr, ec] = std::from_chars(tail.data(), end, places);
      if (ec != std::errc() || ptr != end)
        throw Error(Errc::InvalidArgument, "bad decimal-place count: '" + tail + "'");
      return DecimalPlaces(places);
    }
    if (head == "linf") return LInfTolerance(parse_double(tail));
  }
  throw Error(Errc::InvalidArgument, "criterion must be dp:<d> or linf:<eps>: '" + text + "'");
}

/// Range grammar: "a..b" or a single "n" meaning n..n.
inline std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto parse_size = [](const std::string& token) {
    std::size_t n = 0;
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, n);
    if (ec != std::errc() || ptr != end)
      throw Error(Errc::InvalidArgument, "bad dimension: '" + token + "'");
    return n;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t n = parse_size(trim(text));
    return {n, n};
  }
  return {parse_size(trim(text.substr(0, dots))), parse_size(trim(text.substr(dots + 2)))};
}

// ---------------------------------------------------------------------------
// rendering

/// Shortest representation that parses back to the same double.
inline std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

/// Fixed rendering after half-away-from-zero rounding at `places`.
inline std::string format_places(double v, int places) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", places, round_to_places(v, places));
  return buf;
}

inline std::string criterion_string(const ConvergenceCriterion& criterion) {
  if (const auto* dp = std::get_if<DecimalPlaces>(&criterion))
    return "dp:" + std::to_string(dp->places);
  return "linf:" + format_double(std::get<LInfTolerance>(criterion).eps);
}

inline json status_json(const TraceStatus& status) {
  using Kind = TraceStatus::Kind;
  const char* kind = status.kind == Kind::converged ? "converged"
                     : status.kind == Kind::cycle   ? "cycle"
                                                    : "max_iter";
  json j{{"kind", kind}, {"at", static_cast<std::int64_t>(status.at)}};
  if (status.kind == Kind::cycle) j["period"] = static_cast<std::int64_t>(status.period);
  return j;
}

inline std::string status_text(const TraceStatus& status) {
  switch (status.kind) {
    case TraceStatus::Kind::converged:
      return "converged at k=" + std::to_string(status.at);
    case TraceStatus::Kind::cycle:
      return "cycle of period " + std::to_string(status.period) + " detected at k=" +
             std::to_string(status.at);
    case TraceStatus::Kind::max_iterations:
      return "no convergence within " + std::to_string(status.at) + " iterations";
  }
  return "unknown";
}

inline json values_json(const Distribution& p) {
  return json(p.values());
}

inline json rounded_json(const Distribution& p, int places) {
  json arr = json::array();
  for (double v : p) arr.push_back(round_to_places(v, places));
  return arr;
}

// ---------------------------------------------------------------------------
// subcommands

inline int run_negate(NegationOperator op, const Distribution& input, OutputFormat format,
                      std::ostream& out) {
  const Distribution output = apply(op, input);
  switch (format) {
    case OutputFormat::json_document: {
      const json doc{{"operator", to_string(op)},
                     {"input", values_json(input)},
                     {"output", values_json(output)},
                     {"output_3dp", rounded_json(output, 3)}};
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::csv_series: {
      out << "i,input,output,output_3dp\n";
      for (std::size_t i = 0; i < output.size(); ++i)
        out << i + 1 << ',' << format_double(input[i]) << ',' << format_double(output[i]) << ','
            << format_places(output[i], 3) << '\n';
      break;
    }
    case OutputFormat::plain_table: {
      out << "operator: " << to_string(op) << '\n';
      out << std::left << std::setw(9) << "element" << std::setw(24) << "output"
          << "3dp" << '\n';
      for (std::size_t i = 0; i < output.size(); ++i)
        out << std::left << std::setw(9) << i + 1 << std::setw(24) << format_double(output[i])
            << format_places(output[i], 3) << '\n';
      break;
    }
  }
  return kExitOk;
}

inline int run_entropy(const Distribution& input, OutputFormat format, std::ostream& out) {
  const double shannon = shannon_entropy(input);
  const double quadratic = quadratic_entropy(input);
  switch (format) {
    case OutputFormat::json_document: {
      const json doc{
          {"input", values_json(input)}, {"shannon", shannon}, {"quadratic", quadratic}};
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::csv_series:
      out << "shannon,quadratic\n"
          << format_double(shannon) << ',' << format_double(quadratic) << '\n';
      break;
    case OutputFormat::plain_table:
      out << "shannon:   " << format_double(shannon) << " nats\n"
          << "quadratic: " << format_double(quadratic) << '\n';
      break;
  }
  return kExitOk;
}

inline int run_iterate(NegationOperator op, const Distribution& start,
                       const ConvergenceCriterion& criterion, std::size_t max_iter,
                       OutputFormat format, std::ostream& out) {
  const IterationTrace trace = iterate(op, start, criterion, max_iter);
  switch (format) {
    case OutputFormat::json_document: {
      json states = json::array();
      for (const Distribution& state : trace.states) states.push_back(values_json(state));
      const json doc{{"operator", to_string(op)},
                     {"criterion", criterion_string(criterion)},
                     {"status", status_json(trace.status)},
                     {"states", states},
                     {"entropy", json(trace.entropies)}};
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::csv_series: {
      out << 'k';
      for (std::size_t i = 1; i <= start.size(); ++i) out << ",p" << i;
      out << ",entropy\n";
      for (std::size_t k = 0; k < trace.states.size(); ++k) {
        out << k;
        for (double v : trace.states[k]) out << ',' << format_double(v);
        out << ',' << format_double(trace.entropies[k]) << '\n';
      }
      break;
    }
    case OutputFormat::plain_table: {
      out << "operator: " << to_string(op) << "   criterion: " << criterion_string(criterion)
          << '\n';
      out << std::right << std::setw(4) << 'k';
      for (std::size_t i = 1; i <= start.size(); ++i) out << std::setw(8) << ("p" + std::to_string(i));
      out << std::setw(12) << "entropy" << '\n';
      for (std::size_t k = 0; k < trace.states.size(); ++k) {
        out << std::right << std::setw(4) << k;
        for (double v : trace.states[k]) out << std::setw(8) << format_places(v, 3);
        out << std::setw(12) << format_places(trace.entropies[k], 6) << '\n';
      }
      out << "status: " << status_text(trace.status) << '\n';
      break;
    }
  }
  return kExitOk;
}

inline int run_compare(const Distribution& start, const ConvergenceCriterion& criterion,
                       std::size_t max_iter, OutputFormat format, std::ostream& out) {
  const SpeedComparison result = speed_comparison(start, criterion, max_iter);
  switch (format) {
    case OutputFormat::json_document: {
      const json doc{{"criterion", criterion_string(criterion)},
                     {"exp", status_json(result.exponential)},
                     {"yager", status_json(result.yager)}};
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::csv_series: {
      out << "operator,kind,at,period\n";
      for (const auto& [name, status] :
           {std::pair<const char*, const TraceStatus&>{"exp", result.exponential},
            std::pair<const char*, const TraceStatus&>{"yager", result.yager}}) {
        out << name << ',' << status_json(status)["kind"].get<std::string>() << ',' << status.at
            << ',' << status.period << '\n';
      }
      break;
    }
    case OutputFormat::plain_table:
      out << "criterion: " << criterion_string(criterion) << '\n'
          << "exp:   " << status_text(result.exponential) << '\n'
          << "yager: " << status_text(result.yager) << '\n';
      break;
  }
  return kExitOk;
}

inline json table_report_json(const TableReport& report) {
  json cells = json::array();
  for (const CellComparison& cell : report.cells)
    cells.push_back(json{{"element", cell.element},
                         {"k", cell.k},
                         {"computed", cell.computed},
                         {"expected", cell.expected},
                         {"deviation", cell.deviation},
                         {"ok", cell.ok}});
  return json{{"id", report.id},
              {"name", report.name},
              {"operator", to_string(report.op)},
              {"pass", report.pass},
              {"max_deviation", report.max_deviation},
              {"earliest_uniform_3dp", status_json(report.earliest_uniform_3dp)},
              {"cells", cells}};
}

inline int run_tables(const std::vector<TableReport>& reports, bool check, OutputFormat format,
                      std::ostream& out) {
  const bool all_pass =
      std::all_of(reports.begin(), reports.end(), [](const TableReport& r) { return r.pass; });
  switch (format) {
    case OutputFormat::json_document: {
      json docs = json::array();
      for (const TableReport& report : reports) docs.push_back(table_report_json(report));
      out << json{{"all_pass", all_pass}, {"tables", docs}}.dump() << '\n';
      break;
    }
    case OutputFormat::csv_series: {
      out << "table,element,k,computed,expected,deviation,ok\n";
      for (const TableReport& report : reports)
        for (const CellComparison& cell : report.cells)
          out << report.id << ',' << cell.element << ',' << cell.k << ','
              << format_double(cell.computed) << ',' << format_double(cell.expected) << ','
              << format_double(cell.deviation) << ',' << (cell.ok ? 1 : 0) << '\n';
      break;
    }
    case OutputFormat::plain_table: {
      for (const TableReport& report : reports) {
        out << "table " << report.id << ": " << report.name << "  ["
            << (report.pass ? "PASS" : "FAIL") << "]  max deviation "
            << format_double(report.max_deviation) << '\n';
        for (const CellComparison& cell : report.cells)
          if (!cell.ok)
            out << "  element " << cell.element << " k=" << cell.k << ": computed "
                << format_double(cell.computed) << ", printed " << format_double(cell.expected)
                << " (dev " << format_double(cell.deviation) << ")\n";
        out << "  earliest uniform at 3dp: " << status_text(report.earliest_uniform_3dp) << '\n';
      }
      out << (all_pass ? "all tables match" : "MISMATCH in at least one table") << '\n';
      break;
    }
  }
  if (check && !all_pass) return kExitCheckFailed;
  return kExitOk;
}

inline int run_sweep(NegationOperator op, std::size_t first_n, std::size_t last_n,
                     const ConvergenceCriterion& criterion, std::size_t max_iter,
                     OutputFormat format, std::ostream& out) {
  const SweepReport report =
      convergence_sweep(op, first_n, last_n, SweepInit::delta_on_first, criterion, max_iter);
  switch (format) {
    case OutputFormat::json_document: {
      json rows = json::array();
      for (const SweepRow& row : report.rows)
        rows.push_back(json{{"n", row.dimension}, {"status", status_json(row.outcome)}});
      const json doc{{"operator", to_string(op)},
                     {"criterion", criterion_string(criterion)},
                     {"init", "delta_on_first"},
                     {"rows", rows}};
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::csv_series: {
      out << "n,iterations,status\n";
      for (const SweepRow& row : report.rows) {
        out << row.dimension << ',';
        if (row.outcome.converged()) out << row.outcome.at;
        out << ',' << status_json(row.outcome)["kind"].get<std::string>() << '\n';
      }
      break;
    }
    case OutputFormat::plain_table: {
      out << "operator: " << to_string(op) << "   criterion: " << criterion_string(criterion)
          << "   start: delta on first outcome\n";
      for (const SweepRow& row : report.rows)
        out << std::right << std::setw(4) << row.dimension << "  " << status_text(row.outcome)
            << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// dispatch

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"negation operators on finite probability distributions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "json";
  app.add_option("--format", format_text, "output format: json, csv, or table")
      ->capture_default_str();
  std::uint64_t seed = 0;
  app.add_option("--seed", seed,
                 "seed for sampling-based runs (reserved; current subcommands are deterministic)");

  std::string op_text, dist_text, criterion_text = "dp:3", range_text;
  std::size_t max_iter = kDefaultMaxIterations;
  int table_id = 0;
  bool all_tables = false, check_tables = false;

  CLI::App* negate_cmd = app.add_subcommand("negate", "apply one negation to a distribution");
  negate_cmd->add_option("--op", op_text, "yager or exp")->required();
  negate_cmd->add_option("--dist", dist_text, "comma-separated values or @file.json")->required();

  CLI::App* entropy_cmd =
      app.add_subcommand("entropy", "print Shannon and quadratic entropy of a distribution");
  entropy_cmd->add_option("--dist", dist_text, "comma-separated values or @file.json")->required();

  CLI::App* iterate_cmd =
      app.add_subcommand("iterate", "repeat a negation until uniform, a cycle, or the cap");
  iterate_cmd->add_option("--op", op_text, "yager or exp")->required();
  iterate_cmd->add_option("--dist", dist_text, "comma-separated values or @file.json")->required();
  iterate_cmd->add_option("--criterion", criterion_text, "dp:<d> or linf:<eps>")
      ->capture_default_str();
  iterate_cmd->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "iterations to uniform for both operators");
  compare_cmd->add_option("--dist", dist_text, "comma-separated values or @file.json")->required();
  compare_cmd->add_option("--criterion", criterion_text, "dp:<d> or linf:<eps>")
      ->capture_default_str();
  compare_cmd->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();

  CLI::App* tables_cmd =
      app.add_subcommand("tables", "re-run the reference iteration tables and compare cells");
  tables_cmd->add_option("--id", table_id, "table id 1..7");
  tables_cmd->add_flag("--all", all_tables, "run every table");
  tables_cmd->add_flag("--check", check_tables, "exit 1 unless every selected table matches");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "iterations to uniform per dimension from {1,0,...,0}");
  sweep_cmd->add_option("--op", op_text, "yager or exp")->required();
  sweep_cmd->add_option("--n", range_text, "dimension range a..b within [2, 64]")->required();
  sweep_cmd->add_option("--criterion", criterion_text, "dp:<d> or linf:<eps>")
      ->capture_default_str();
  sweep_cmd->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const OutputFormat format = parse_format(format_text);
    if (negate_cmd->parsed())
      return run_negate(parse_operator(op_text), parse_distribution(dist_text), format, out);
    if (entropy_cmd->parsed()) return run_entropy(parse_distribution(dist_text), format, out);
    if (iterate_cmd->parsed())
      return run_iterate(parse_operator(op_text), parse_distribution(dist_text),
                         parse_criterion(criterion_text), max_iter, format, out);
    if (compare_cmd->parsed())
      return run_compare(parse_distribution(dist_text), parse_criterion(criterion_text), max_iter,
                         format, out);
    if (tables_cmd->parsed()) {
      if (all_tables == (table_id != 0))
        throw Error(Errc::InvalidArgument, "pass exactly one of --id or --all");
      const std::vector<TableReport> reports =
          all_tables ? reproduce_all_tables() : std::vector<TableReport>{reproduce_table(table_id)};
      return run_tables(reports, check_tables, format, out);
    }
    if (sweep_cmd->parsed()) {
      const auto [first_n, last_n] = parse_range(range_text);
      return run_sweep(parse_operator(op_text), first_n, last_n, parse_criterion(criterion_text),
                       max_iter, format, out);
    }
    err << "error: no subcommand\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pneg::cli
