// bmseq: exact verification runner for the Boros-Moll coefficient triangle.
// Subcommands: table, export, check, conjecture, identities.
// Exit codes: 0 clean, 1 property violation found, 2 usage/domain error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <bmseq/bounds.hpp>
#include <bmseq/conjectures.hpp>
#include <bmseq/identities.hpp>
#include <bmseq/report.hpp>
#include <bmseq/tableio.hpp>

namespace {

using namespace bmseq;
using Clock = std::chrono::steady_clock;

struct CommonOpts {
  std::string format = "text";
  std::string out;
  std::string cache;
  unsigned threads = 1;
  bool no_timing = false;
};

void add_cache_opts(CLI::App* cmd, CommonOpts& opts) {
  const char* env = std::getenv("BMSEQ_CACHE");
  if (env != nullptr) opts.cache = env;
  cmd->add_option("--cache", opts.cache,
                  "BMTABLE v1 cache path (default: $BMSEQ_CACHE); reused when it covers "
                  "the requested size, rebuilt and rewritten otherwise");
  cmd->add_option("--threads", opts.threads, "Worker threads for table build and sweeps")
      ->check(CLI::PositiveNumber);
}

void add_report_opts(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--out", opts.out, "Write the report to this file instead of stdout");
  cmd->add_flag("--no-timing", opts.no_timing,
                "Report runtime_ms as 0 for byte-stable output");
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_cache = true) {
  add_report_opts(cmd, opts);
  if (with_cache) add_cache_opts(cmd, opts);
}

BMTable acquire_table(const CommonOpts& opts, unsigned needed_max_m) {
  if (!opts.cache.empty() && std::filesystem::exists(opts.cache)) {
    BMTable cached = read_cache_file(opts.cache);
    if (cached.max_m() >= needed_max_m) return cached;
  }
  BMTable built = BMTable::build(needed_max_m, opts.threads);
  if (!opts.cache.empty()) write_cache_file(opts.cache, built);
  return built;
}

void emit(const std::string& text, const CommonOpts& opts) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(opts.out);
  if (!os) throw std::runtime_error("cannot open for writing: " + opts.out);
  os << text;
}

int emit_reports(std::vector<SuiteReport> reports, const CommonOpts& opts) {
  const ReportFormat format = *parse_format(opts.format);
  bool clean = true;
  std::string text;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (opts.no_timing) reports[i].runtime_ms = 0;
    clean = clean && reports[i].clean();
    if (format == ReportFormat::csv && reports.size() > 1)
      text += "# suite " + reports[i].suite + "\n";
    text += render(reports[i], format);
    if (format == ReportFormat::text && i + 1 < reports.size()) text += "\n";
  }
  emit(text, opts);
  return clean ? 0 : 1;
}

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

int run_table(const CommonOpts& opts, unsigned max_m) {
  const auto t0 = Clock::now();
  const BMTable table = acquire_table(opts, max_m);
  std::cout << "table ready: max_m=" << table.max_m() << " entries="
            << static_cast<unsigned long long>(table.max_m() + 1) * (table.max_m() + 2) / 2
            << (opts.no_timing ? std::string() : " build_ms=" + std::to_string(ms_since(t0)))
            << '\n';
  return 0;
}

int run_export(const CommonOpts& opts, unsigned max_m, const std::string& kind,
               const std::string& out) {
  const BMTable table = acquire_table(opts, max_m).truncated(max_m);
  if (kind == "csv")
    write_csv_file(out, table);
  else
    write_cache_file(out, table);
  std::cout << "wrote " << kind << " for max_m=" << max_m << " to " << out << '\n';
  return 0;
}

int run_check(const CommonOpts& opts, const std::string& suite, long max_m) {
  const BoundSpec* spec = find_bound_spec(suite);
  if (spec == nullptr) throw std::invalid_argument("unknown suite: " + suite);
  if (max_m < spec->ell_min + 1)
    throw std::domain_error("empty domain: suite " + suite + " needs max_m >= " +
                            std::to_string(spec->ell_min + 1));
  const BMTable table =
      acquire_table(opts, static_cast<unsigned>(max_m) + (spec->needs_next_row ? 1 : 0));
  const auto t0 = Clock::now();
  SuiteReport report = to_suite_report(sweep(spec->id, max_m, table, opts.threads));
  report.runtime_ms = ms_since(t0);
  return emit_reports({std::move(report)}, opts);
}

int run_conjecture(const CommonOpts& opts, const std::string& id_name, long max_m, long single_m,
                   long ell, bool ell_given, unsigned depth) {
  const auto id = parse_conjecture_id(id_name);
  if (!id) throw std::invalid_argument("unknown conjecture id: " + id_name);
  if (single_m < 0) throw std::invalid_argument("--m must be positive");
  if (max_m < 0) throw std::invalid_argument("--max-m must be positive");

  const auto t0 = Clock::now();
  ConjectureReport report;
  switch (*id) {
    case ConjectureId::C11_ROWS: {
      const BMTable table =
          acquire_table(opts, static_cast<unsigned>(single_m > 0 ? single_m : max_m));
      report = single_m > 0
                   ? check_row_inf_logconcave(table, static_cast<unsigned>(single_m), depth)
                   : check_rows_inf_logconcave_range(table, 2, static_cast<unsigned>(max_m),
                                                     depth);
      break;
    }
    case ConjectureId::C41: {
      if (!ell_given) ell = 3;
      if (ell < 3) throw std::domain_error("c41 is stated for l >= 3");
      const BMTable table = acquire_table(opts, static_cast<unsigned>(max_m));
      report = check_inf_logconcave(table, static_cast<unsigned>(ell), depth,
                                    static_cast<unsigned>(max_m));
      break;
    }
    case ConjectureId::C42: {
      if (!ell_given) ell = 1;
      if (ell < 1) throw std::domain_error("c42 is stated for l >= 1");
      const BMTable table = acquire_table(opts, static_cast<unsigned>(max_m));
      report = check_conj_c42(table, static_cast<unsigned>(ell), static_cast<unsigned>(max_m));
      break;
    }
    case ConjectureId::C43: {
      if (!ell_given) ell = 0;
      if (ell < 0) throw std::domain_error("c43 is stated for l >= 0");
      const BMTable table = acquire_table(opts, static_cast<unsigned>(max_m));
      report = check_conj_c43(table, static_cast<unsigned>(ell), static_cast<unsigned>(max_m));
      break;
    }
    case ConjectureId::C44: {
      const BMTable table =
          acquire_table(opts, static_cast<unsigned>(single_m > 0 ? single_m : max_m));
      report = single_m > 0 ? check_half_split(table, static_cast<unsigned>(single_m))
                            : check_half_split_range(table, 3, static_cast<unsigned>(max_m));
      break;
    }
    case ConjectureId::C45: {
      if (!ell_given) ell = 0;
      const BMTable table = acquire_table(opts, static_cast<unsigned>(max_m));
      report = check_log_monotonic_conj(table, static_cast<unsigned>(ell), depth,
                                        static_cast<unsigned>(max_m));
      break;
    }
  }
  SuiteReport suite = to_suite_report(report);
  suite.runtime_ms = ms_since(t0);
  return emit_reports({std::move(suite)}, opts);
}

int run_identities(const CommonOpts& opts, const std::string& id, bool all) {
  std::vector<SuiteReport> reports;
  auto timed = [&](auto&& fn) {
    const auto t0 = Clock::now();
    SuiteReport r = to_suite_report(fn());
    r.runtime_ms = ms_since(t0);
    reports.push_back(std::move(r));
  };

  if (!all && id.empty()) {
    std::string text = "polynomial identities:\n";
    for (const auto& pid : poly_identity_ids()) text += "  " + pid + "\n";
    text += "single-radical identities:\n";
    for (const auto& sid : surd_identity_ids()) text += "  " + sid + "\n";
    text += "positivity claims:\n";
    for (const auto& cid : positivity_claim_ids()) text += "  " + cid + "\n";
    emit(text, opts);
    return 0;
  }

  auto run_one = [&](const std::string& one) {
    for (const auto& pid : poly_identity_ids())
      if (pid == one) {
        timed([&] { return certify_poly_identity(one); });
        return true;
      }
    for (const auto& sid : surd_identity_ids())
      if (sid == one) {
        timed([&] { return check_surd_identity(one); });
        return true;
      }
    for (const auto& cid : positivity_claim_ids())
      if (cid == one) {
        timed([&] { return positivity_scan(one); });
        return true;
      }
    return false;
  };

  if (all) {
    for (const auto& pid : poly_identity_ids()) run_one(pid);
    for (const auto& sid : surd_identity_ids()) run_one(sid);
    for (const auto& cid : positivity_claim_ids()) run_one(cid);
  } else if (!run_one(id)) {
    throw std::invalid_argument("unknown identity or claim id: " + id);
  }
  return emit_reports(std::move(reports), opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Boros-Moll triangle computation and inequality verification"};
  app.require_subcommand(1);

  CommonOpts table_opts;
  unsigned table_max_m = 200;
  CLI::App* table_cmd = app.add_subcommand("table", "Build the triangle (optionally cached)");
  table_cmd->add_option("--max-m", table_max_m, "Largest row index");
  table_cmd->add_flag("--no-timing", table_opts.no_timing,
                      "Suppress the build-time field for byte-stable output");
  add_cache_opts(table_cmd, table_opts);

  CommonOpts export_opts;
  unsigned export_max_m = 200;
  std::string export_kind = "csv";
  std::string export_out;
  CLI::App* export_cmd = app.add_subcommand("export", "Write the triangle to a file");
  export_cmd->add_option("--max-m", export_max_m, "Largest row index");
  export_cmd->add_option("--kind", export_kind, "File kind: csv (d values) or bmtable (cache)")
      ->check(CLI::IsMember({"csv", "bmtable"}));
  export_cmd->add_option("--out", export_out, "Output path")->required();
  add_cache_opts(export_cmd, export_opts);

  CommonOpts check_opts;
  std::string check_suite;
  long check_max_m = 200;
  CLI::App* check_cmd = app.add_subcommand("check", "Run one inequality sweep");
  {
    std::vector<std::string> names;
    for (const auto& s : bound_specs()) names.push_back(s.name);
    check_cmd->add_option("--suite", check_suite, "Suite id")
        ->required()
        ->check(CLI::IsMember(names));
  }
  check_cmd->add_option("--max-m", check_max_m, "Sweep m <= max_m");
  add_common(check_cmd, check_opts);

  CommonOpts conj_opts;
  std::string conj_id;
  long conj_max_m = 200;
  long conj_single_m = 0;
  long conj_ell = 0;
  unsigned conj_depth = 4;
  CLI::App* conj_cmd = app.add_subcommand("conjecture", "Run a finite-depth conjecture verifier");
  conj_cmd->add_option("--id", conj_id, "Conjecture id: c11, c41, c42, c43, c44, c45")
      ->required()
      ->check(CLI::IsMember({"c11", "c41", "c42", "c43", "c44", "c45"}));
  conj_cmd->add_option("--max-m", conj_max_m, "Window bound m <= max_m");
  conj_cmd->add_option("--m", conj_single_m, "Single m (c11 row / c44 listing mode)");
  CLI::Option* ell_opt = conj_cmd->add_option("--l", conj_ell, "Sequence index l");
  conj_cmd->add_option("--depth,--order", conj_depth, "L-depth or log-monotonic order");
  add_common(conj_cmd, conj_opts);

  CommonOpts id_opts;
  std::string identities_id;
  bool identities_all = false;
  CLI::App* id_cmd =
      app.add_subcommand("identities", "List or certify proof identities and sign claims");
  id_cmd->add_option("--id", identities_id, "Run a single identity or claim by id");
  id_cmd->add_flag("--all", identities_all, "Run the whole registry");
  add_common(id_cmd, id_opts, /*with_cache=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table_cmd->parsed()) return run_table(table_opts, table_max_m);
    if (export_cmd->parsed())
      return run_export(export_opts, export_max_m, export_kind, export_out);
    if (check_cmd->parsed()) return run_check(check_opts, check_suite, check_max_m);
    if (conj_cmd->parsed())
      return run_conjecture(conj_opts, conj_id, conj_max_m, conj_single_m, conj_ell,
                            ell_opt->count() > 0, conj_depth);
    if (id_cmd->parsed()) return run_identities(id_opts, identities_id, identities_all);
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "window error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "coverage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
