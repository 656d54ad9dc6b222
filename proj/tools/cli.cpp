#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache_file.hpp"
#include "planepart/asymptotics.hpp"
#include "planepart/bose.hpp"
#include "planepart/errors.hpp"
#include "planepart/exact_enum.hpp"
#include "planepart/plane_generator.hpp"

namespace planepart::cli {

namespace {

using nlohmann::json;

enum class Format { kTable, kCsv, kJson };

struct Globals {
  std::string format = "table";
  std::string cache;
  std::string jobs = "1";
  std::string ceiling = "30";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& text, const char* flag, int min) {
  static const std::regex digits("[0-9]{1,9}");
  if (!std::regex_match(text, digits)) {
    throw UsageError(std::string(flag) + ": expected a decimal integer, got '" + text + "'");
  }
  const int v = std::stoi(text);
  if (v < min) throw UsageError(std::string(flag) + ": must be >= " + std::to_string(min) + ", got " + text);
  return v;
}

double parse_real(const std::string& text, const char* flag) {
  static const std::regex decimal(R"([+-]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][+-]?[0-9]+)?)");
  if (!std::regex_match(text, decimal)) {
    throw UsageError(std::string(flag) + ": expected a decimal number, got '" + text + "'");
  }
  return std::stod(text);
}

Format parse_format(const std::string& text) {
  if (text == "table") return Format::kTable;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw UsageError("--format: expected table, csv or json, got '" + text + "'");
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Shortest text that parses back to the same double.
std::string exact_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string table_real(double v) {
  if (std::abs(v) >= 1e9) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
  }
  return fixed(v, 6);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void write_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

// Right-aligned columns, two spaces apart.
void write_table(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << "  ";
      out << std::string(width[i] - cells[i].size(), ' ') << cells[i];
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

struct Context {
  Format format;
  GeneratorLimits limits;
  std::optional<CacheFile> cache;
  std::ostream& out;
  std::ostream& err;
};

BigCount cached_count(Context& ctx, SequenceId id, int n) {
  if (ctx.cache) {
    if (auto hit = ctx.cache->find(id, n)) return *hit;
  }
  BigCount v = id == SequenceId::kP1d ? p1d(n) : p2d(n);
  if (ctx.cache) ctx.cache->store(id, n, v);
  return v;
}

// ---- count -----------------------------------------------------------------

struct CountArgs {
  std::string kind;
  std::string n;
  std::string max_parts;
};

int cmd_count(Context& ctx, const CountArgs& a) {
  const int n = parse_int(a.n, "--n", 0);
  std::optional<int> cap;
  if (!a.max_parts.empty()) cap = parse_int(a.max_parts, "--max-parts", 1);
  const RestrictionSpec spec{n, cap};
  const SequenceId id = a.kind == "p1d" ? SequenceId::kP1d : SequenceId::kP2d;

  BigCount value;
  if (spec.saturates()) {
    value = cached_count(ctx, id, n);
  } else {
    value = id == SequenceId::kP1d ? p1d_atmost(spec) : p2d_atmost(spec, ctx.limits);
  }

  const std::string cap_text = cap ? std::to_string(*cap) : "";
  switch (ctx.format) {
    case Format::kTable:
      ctx.out << value << '\n';
      break;
    case Format::kCsv:
      write_csv(ctx.out, {"kind", "n", "max_parts", "count"}, {{a.kind, std::to_string(n), cap_text, value.to_string()}});
      break;
    case Format::kJson: {
      json j = {{"kind", a.kind}, {"n", n}, {"max_parts", nullptr}, {"count", value.to_string()}};
      if (cap) j["max_parts"] = *cap;
      ctx.out << j.dump() << '\n';
      break;
    }
  }
  return kOk;
}

// ---- estimate --------------------------------------------------------------

struct EstimateArgs {
  std::string n;
  std::string max_parts;
  std::string base = "exact";
};

int cmd_estimate(Context& ctx, const EstimateArgs& a) {
  const int n = parse_int(a.n, "--n", 1);
  std::optional<int> cap;
  if (!a.max_parts.empty()) cap = parse_int(a.max_parts, "--max-parts", 1);
  EstimateBase base;
  if (a.base == "exact") {
    base = EstimateBase::kExact;
  } else if (a.base == "wright") {
    base = EstimateBase::kWright;
  } else if (a.base == "pr") {
    base = EstimateBase::kPr;
  } else {
    throw UsageError("--base: expected exact, wright or pr, got '" + a.base + "'");
  }

  double value = 0.0;
  std::optional<bool> in_window;
  if (cap) {
    value = p2d_restricted_estimate(n, *cap, base);
    in_window = in_validity_window(n, *cap);
    if (!*in_window) {
      const double lower = std::cbrt(n / (2.0 * Constants::zeta3));
      ctx.err << "warning: N = " << *cap << " is outside the validity window [" << fixed(lower, 4) << ", " << n
              << ") for n = " << n << '\n';
    }
  } else if (base == EstimateBase::kExact) {
    value = cached_count(ctx, SequenceId::kP2d, n).to_double();
  } else {
    value = p2d_unrestricted_estimate(n, base == EstimateBase::kWright ? CVariant::kWright : CVariant::kPr);
  }
  const long long rounded = round_count(value);
  const std::string cap_text = cap ? std::to_string(*cap) : "";

  switch (ctx.format) {
    case Format::kTable:
      write_table(ctx.out, {"n", "N", "base", "estimate", "rounded", "window"},
                  {{std::to_string(n), cap ? cap_text : "-", a.base, table_real(value), std::to_string(rounded),
                    in_window ? (*in_window ? "ok" : "outside") : "-"}});
      break;
    case Format::kCsv:
      write_csv(ctx.out, {"n", "max_parts", "base", "estimate", "rounded", "in_window"},
                {{std::to_string(n), cap_text, a.base, exact_real(value), std::to_string(rounded),
                  in_window ? (*in_window ? "true" : "false") : ""}});
      break;
    case Format::kJson: {
      json j = {{"n", n},          {"max_parts", nullptr}, {"base", a.base},
                {"estimate", value}, {"rounded", rounded}, {"in_window", nullptr}};
      if (cap) j["max_parts"] = *cap;
      if (in_window) j["in_window"] = *in_window;
      ctx.out << j.dump() << '\n';
      break;
    }
  }
  return kOk;
}

// ---- zn --------------------------------------------------------------------

struct ZnArgs {
  std::string dim;
  std::string x;
  std::string n_max;
  std::string tol = "1e-14";
};

int cmd_zn(Context& ctx, const ZnArgs& a) {
  const int dim = parse_int(a.dim, "--dim", 1);
  if (dim > 2) throw UsageError("--dim: must be 1 or 2");
  const double x = parse_real(a.x, "--x");
  if (!(x > 0.0 && x < 1.0)) throw UsageError("--x: must satisfy 0 < x < 1");
  const int n_max = parse_int(a.n_max, "--n-max", 1);
  const double tol = parse_real(a.tol, "--tol");
  if (!(tol > 0.0)) throw UsageError("--tol: must be positive");

  const OscillatorPoint point(x, dim);
  const ZSequence z = zn_recurrence(point, n_max);
  const std::vector<double> log_y = log_y_sequence(point, n_max, tol);

  std::vector<double> closed;
  double max_dev = 0.0;
  if (dim == 1) {
    for (int n = 0; n <= n_max; ++n) {
      closed.push_back(zn_1d_closed(point, n));
      max_dev = std::max(max_dev, std::abs(z.values[static_cast<std::size_t>(n)] / closed.back() - 1.0));
    }
  }

  std::vector<std::string> header = {"N", "Z_N", "y_N"};
  if (dim == 1) {
    header.push_back("Z_closed");
    header.push_back("rel_dev");
  }
  auto real = ctx.format == Format::kTable ? table_real : exact_real;
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const double y = std::exp(log_y[i]);
    std::vector<std::string> r = {std::to_string(n), real(z.values[i]), real(y)};
    json jr = {{"N", n}, {"Z_N", z.values[i]}, {"y_N", y}};
    if (dim == 1) {
      const double dev = std::abs(z.values[i] / closed[i] - 1.0);
      r.push_back(real(closed[i]));
      r.push_back(exact_real(dev));
      jr["Z_closed"] = closed[i];
      jr["rel_dev"] = dev;
    }
    rows.push_back(std::move(r));
    jrows.push_back(std::move(jr));
  }

  switch (ctx.format) {
    case Format::kTable:
      write_table(ctx.out, header, rows);
      if (dim == 1) ctx.out << "max relative deviation: " << exact_real(max_dev) << '\n';
      break;
    case Format::kCsv:
      write_csv(ctx.out, header, rows);
      break;
    case Format::kJson: {
      json j = {{"dim", dim}, {"x", x}, {"n_max", n_max}, {"rows", jrows}};
      if (dim == 1) j["max_rel_dev"] = max_dev;
      ctx.out << j.dump() << '\n';
      break;
    }
  }
  return kOk;
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::string n;
  bool emit = false;
};

std::string compact_rows(const PlanePartition& p) {
  std::ostringstream s;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    if (i) s << '/';
    for (std::size_t j = 0; j < p.rows[i].size(); ++j) s << (j ? " " : "") << p.rows[i][j];
  }
  return s.str();
}

int cmd_gen(Context& ctx, const GenArgs& a) {
  const int n = parse_int(a.n, "--n", 0);

  if (!a.emit) {
    BigCount total;
    for (const auto& [parts, c] : count_by_parts(n, ctx.limits)) total += c;
    switch (ctx.format) {
      case Format::kTable:
        ctx.out << total << '\n';
        break;
      case Format::kCsv:
        write_csv(ctx.out, {"n", "count"}, {{std::to_string(n), total.to_string()}});
        break;
      case Format::kJson:
        ctx.out << json{{"n", n}, {"count", total.to_string()}}.dump() << '\n';
        break;
    }
    return kOk;
  }

  std::uint64_t total = 0;
  switch (ctx.format) {
    case Format::kTable:
      generate_all(n, [&](const PlanePartition& p) {
        write_block(ctx.out, p);
        ctx.out << '\n';
        ++total;
      }, ctx.limits);
      ctx.out << "total " << total << '\n';
      break;
    case Format::kCsv:
      ctx.out << "index,parts,rows\n";
      generate_all(n, [&](const PlanePartition& p) {
        ctx.out << total++ << ',' << p.parts() << ',' << csv_field(compact_rows(p)) << '\n';
      }, ctx.limits);
      break;
    case Format::kJson: {
      json parts = json::array();
      generate_all(n, [&](const PlanePartition& p) {
        parts.push_back(p.rows);
        ++total;
      }, ctx.limits);
      ctx.out << json{{"n", n}, {"count", std::to_string(total)}, {"partitions", parts}}.dump() << '\n';
      break;
    }
  }
  return kOk;
}

// ---- table1 ----------------------------------------------------------------

std::string optional_count(const std::optional<BigCount>& c) { return c ? c->to_string() : ""; }
std::string optional_percent(const std::optional<double>& p) { return p ? fixed(round_percent(*p), 1) : ""; }

int cmd_table1(Context& ctx) {
  const auto rows = table1_report(ctx.limits);

  switch (ctx.format) {
    case Format::kTable: {
      std::vector<std::vector<std::string>> cells;
      for (const auto& r : rows) {
        cells.push_back({std::to_string(r.n), std::to_string(r.max_parts), optional_count(r.p2d_exact),
                         optional_count(r.exact_restricted), std::to_string(round_count(r.calc1)),
                         std::to_string(round_count(r.calc2)), std::to_string(round_count(r.calc3)),
                         optional_percent(r.rel_err1), optional_percent(r.rel_err2), optional_percent(r.rel_err3)});
      }
      write_table(ctx.out, {"n", "N", "p2d(n)", "exact", "calc.1", "calc.2", "calc.3", "err.1%", "err.2%", "err.3%"},
                  cells);
      break;
    }
    case Format::kCsv: {
      std::vector<std::vector<std::string>> cells;
      for (const auto& r : rows) {
        cells.push_back({std::to_string(r.n), std::to_string(r.max_parts), optional_count(r.p2d_exact),
                         optional_count(r.exact_restricted), std::to_string(round_count(r.calc1)),
                         std::to_string(round_count(r.calc2)), std::to_string(round_count(r.calc3)),
                         optional_percent(r.rel_err1), optional_percent(r.rel_err2), optional_percent(r.rel_err3),
                         exact_real(r.calc1), exact_real(r.calc2), exact_real(r.calc3), r.in_window ? "true" : "false"});
      }
      write_csv(ctx.out,
                {"n", "N", "p2d", "exact", "calc1", "calc2", "calc3", "err1", "err2", "err3", "calc1_raw", "calc2_raw",
                 "calc3_raw", "in_window"},
                cells);
      break;
    }
    case Format::kJson: {
      json arr = json::array();
      for (const auto& r : rows) {
        json j = {{"n", r.n},
                  {"max_parts", r.max_parts},
                  {"p2d_exact", r.p2d_exact ? json(r.p2d_exact->to_string()) : json(nullptr)},
                  {"exact_restricted", r.exact_restricted ? json(r.exact_restricted->to_string()) : json(nullptr)},
                  {"calc1", r.calc1},
                  {"calc2", r.calc2},
                  {"calc3", r.calc3},
                  {"rel_err1", r.rel_err1 ? json(*r.rel_err1) : json(nullptr)},
                  {"rel_err2", r.rel_err2 ? json(*r.rel_err2) : json(nullptr)},
                  {"rel_err3", r.rel_err3 ? json(*r.rel_err3) : json(nullptr)},
                  {"in_window", r.in_window}};
        arr.push_back(std::move(j));
      }
      ctx.out << arr.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_cache) {
  CLI::App app{"Exact and asymptotic counts of restricted plane partitions", "planepart"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format: table, csv or json");
  app.add_option("--cache", g.cache, "JSON count cache (also $PLANEPART_CACHE)");
  app.add_option("--jobs", g.jobs, "Worker threads for the plane-partition counting pass");
  app.add_option("--ceiling", g.ceiling, "Largest n the exhaustive generator accepts");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Exact number of linear (p1d) or plane (p2d) partitions");
  count->add_option("kind", count_args.kind, "p1d or p2d")->required()->check(CLI::IsMember({"p1d", "p2d"}));
  count->add_option("--n", count_args.n, "Number to partition")->required();
  count->add_option("--max-parts", count_args.max_parts, "At most this many nonzero parts");

  EstimateArgs est_args;
  auto* estimate = app.add_subcommand("estimate", "Asymptotic number of plane partitions into at most N parts");
  estimate->add_option("--n", est_args.n)->required();
  estimate->add_option("--max-parts", est_args.max_parts);
  estimate->add_option("--base", est_args.base, "exact, wright or pr");

  ZnArgs zn_args;
  auto* zn = app.add_subcommand("zn", "Finite-N oscillator partition function Z_N(x) and y_N = Z_N / Z_inf");
  zn->add_option("--dim", zn_args.dim, "1 or 2")->required();
  zn->add_option("--x", zn_args.x, "Boltzmann factor, 0 < x < 1")->required();
  zn->add_option("--n-max", zn_args.n_max)->required();
  zn->add_option("--tol", zn_args.tol, "Relative truncation tolerance for Z_inf");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Enumerate plane partitions of n");
  gen->add_option("--n", gen_args.n)->required();
  gen->add_flag("--emit", gen_args.emit, "Print every partition as a block of rows");

  auto* table1 = app.add_subcommand("table1", "Exact vs. estimated restricted plane-partition counts");

  for (auto* sub : {count, estimate, zn, gen, table1}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    const int jobs = parse_int(g.jobs, "--jobs", 1);
    const int ceiling = parse_int(g.ceiling, "--ceiling", 0);
    Context ctx{parse_format(g.format), GeneratorLimits{ceiling, jobs}, std::nullopt, out, err};
    const std::string cache_path = !g.cache.empty() ? g.cache : env_cache.value_or("");
    if (!cache_path.empty()) ctx.cache = CacheFile::load(cache_path);

    int status = kOk;
    if (count->parsed()) {
      status = cmd_count(ctx, count_args);
    } else if (estimate->parsed()) {
      status = cmd_estimate(ctx, est_args);
    } else if (zn->parsed()) {
      status = cmd_zn(ctx, zn_args);
    } else if (gen->parsed()) {
      status = cmd_gen(ctx, gen_args);
    } else if (table1->parsed()) {
      status = cmd_table1(ctx);
    }
    if (ctx.cache) ctx.cache->save();
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCeiling;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace planepart::cli
