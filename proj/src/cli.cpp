#include "pubcite/cli.hpp"

#include "pubcite/defaults.hpp"
#include "pubcite/errors.hpp"
#include "pubcite/indicators.hpp"
#include "pubcite/ingest.hpp"
#include "pubcite/normalize.hpp"
#include "pubcite/report.hpp"
#include "pubcite/taxonomy.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "text.hpp"

namespace pubcite::cli {

namespace {

// Everything a subcommand needs, collected from flags after config-file
// defaults were applied.
struct Options {
  std::string records_path;
  std::string taxonomy_path;
  std::string aliases_path;
  int from_year = 2006;
  int to_year = 2011;
  std::vector<std::string> disciplines;
  std::string count_mode = "all";
  std::string series_threshold;
  std::string series_action = "flag";
  std::string format = "csv";
  std::string out_path;
  std::string cpb_mode = "floor";
  unsigned shards = 1;
  std::string export_dir = ".";
};

Taxonomy load_taxonomy(const Options& opt) {
  if (opt.taxonomy_path.empty()) return Taxonomy::builtin_default();
  return Taxonomy::parse_file(opt.taxonomy_path);
}

AliasTable load_aliases(const Options& opt) {
  if (opt.aliases_path.empty()) return AliasTable::builtin_default();
  return AliasTable::parse_file(opt.aliases_path);
}

Corpus load_records(const Options& opt) {
  return load_corpus_file(opt.records_path, YearWindow(opt.from_year, opt.to_year));
}

SeriesPolicy series_policy(const Options& opt) {
  SeriesPolicy policy;
  if (!opt.series_threshold.empty()) {
    policy.threshold = parse_rational(opt.series_threshold);
    policy.action = opt.series_action == "exclude" ? SeriesPolicy::Action::Exclude
                                                   : SeriesPolicy::Action::FlagOnly;
  }
  return policy;
}

void write_output(const Options& opt, std::ostream& out, const std::string& rendered) {
  if (opt.out_path.empty()) {
    out << rendered;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open output file: " + opt.out_path);
  file << rendered;
  if (!file) throw IoError("cannot write output file: " + opt.out_path);
}

void emit_warnings(const Corpus& corpus, const Taxonomy& taxonomy, std::ostream& err) {
  err << render_warnings(validate_corpus(corpus, taxonomy));
}

// Throws on an unknown discipline name, listing the valid ones.
void check_disciplines(const std::vector<std::string>& requested, const Taxonomy& taxonomy) {
  for (const auto& name : requested) {
    if (taxonomy.has_discipline(name)) continue;
    std::string message = "unknown discipline: \"" + name + "\"; valid disciplines are:";
    for (const auto& discipline : taxonomy.disciplines()) message += "\n  " + discipline;
    throw Error(message);
  }
}

int cmd_report(const Options& opt, std::ostream& out, std::ostream& err) {
  const Taxonomy taxonomy = load_taxonomy(opt);
  const AliasTable aliases = load_aliases(opt);
  check_disciplines(opt.disciplines, taxonomy);
  const Corpus corpus = load_records(opt);
  emit_warnings(corpus, taxonomy, err);

  Aggregation aggregation = aggregate(corpus, aliases, taxonomy, parse_count_mode(opt.count_mode),
                                      series_policy(opt), opt.shards);
  ReportSet report;
  report.cpb_mode = parse_cpb_mode(opt.cpb_mode);
  if (opt.disciplines.empty()) {
    for (auto& [discipline, rows] : aggregation.by_discipline) {
      report.rankings.emplace_back(discipline, rank_discipline(std::move(rows)));
    }
  } else {
    for (const auto& name : opt.disciplines) {
      auto it = aggregation.by_discipline.find(name);
      std::vector<IndicatorRow> rows =
          it == aggregation.by_discipline.end() ? std::vector<IndicatorRow>{} : it->second;
      report.rankings.emplace_back(name, rank_discipline(std::move(rows)));
    }
  }
  for (const auto& flag : aggregation.series_flags) {
    err << "warning: series " << (flag.excluded ? "excluded" : "flagged") << ": "
        << flag.discipline << " / " << flag.publisher.canonical_name << " ("
        << flag.books << " books, " << flag.chapters << " chapters, ratio "
        << round_avg(flag.ratio) << ")\n";
  }
  write_output(opt, out, render(report, parse_format(opt.format)));
  return 0;
}

int cmd_overview(const Options& opt, std::ostream& out, std::ostream& err) {
  const Taxonomy taxonomy = load_taxonomy(opt);
  const AliasTable aliases = load_aliases(opt);
  const Corpus corpus = load_records(opt);
  emit_warnings(corpus, taxonomy, err);

  Aggregation aggregation = aggregate(corpus, aliases, taxonomy, parse_count_mode(opt.count_mode),
                                      series_policy(opt), opt.shards);
  ReportSet report;
  report.cpb_mode = parse_cpb_mode(opt.cpb_mode);
  report.overview = discipline_overview(aggregation);
  write_output(opt, out, render(report, parse_format(opt.format)));
  return 0;
}

int cmd_summary(const Options& opt, std::ostream& out, std::ostream& err) {
  const Taxonomy taxonomy = load_taxonomy(opt);
  check_disciplines(opt.disciplines, taxonomy);
  const Corpus corpus = load_records(opt);
  emit_warnings(corpus, taxonomy, err);

  const CorpusSummary summary =
      opt.disciplines.empty() ? corpus_summary(corpus, taxonomy)
                              : corpus_summary(corpus, taxonomy, opt.disciplines);
  const CpbMode mode = parse_cpb_mode(opt.cpb_mode);
  if (opt.format == "csv") {
    // plain key: value lines are the native summary form
    write_output(opt, out, render_summary(summary, mode));
  } else {
    ReportSet report;
    report.summary = summary;
    report.cpb_mode = mode;
    write_output(opt, out, render(report, parse_format(opt.format)));
  }
  return 0;
}

int cmd_audit(const Options& opt, std::ostream& out, std::ostream& err) {
  const Taxonomy taxonomy = load_taxonomy(opt);
  const AliasTable aliases = load_aliases(opt);
  const Corpus corpus = load_records(opt);
  emit_warnings(corpus, taxonomy, err);
  write_output(opt, out, render_audit(audit_variants(corpus, aliases), parse_format(opt.format)));
  return 0;
}

int cmd_series(const Options& opt, std::ostream& out, std::ostream& err) {
  const Taxonomy taxonomy = load_taxonomy(opt);
  const AliasTable aliases = load_aliases(opt);
  const Corpus corpus = load_records(opt);
  emit_warnings(corpus, taxonomy, err);
  write_output(opt, out,
               render_series(series_diagnostic(corpus, aliases, taxonomy),
                             parse_format(opt.format)));
  return 0;
}

int cmd_export_defaults(const Options& opt, std::ostream& out, std::ostream&) {
  namespace fs = std::filesystem;
  const fs::path dir(opt.export_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  for (const auto& [name, text] :
       {std::pair<std::string, std::string_view>{"default_taxonomy.tsv", default_taxonomy_tsv()},
        std::pair<std::string, std::string_view>{"default_aliases.tsv", default_aliases_tsv()}}) {
    const fs::path path = dir / name;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open output file: " + path.string());
    file << text;
    if (!file) throw IoError("cannot write output file: " + path.string());
    out << "wrote " << path.string() << "\n";
  }
  return 0;
}

void apply_config_defaults(Options& opt, const std::map<std::string, std::string>& config) {
  auto set_string = [&](const char* key, std::string& target) {
    if (auto it = config.find(key); it != config.end()) target = it->second;
  };
  auto set_int = [&](const char* key, auto& target) {
    if (auto it = config.find(key); it != config.end()) {
      try {
        target = static_cast<std::remove_reference_t<decltype(target)>>(std::stol(it->second));
      } catch (const std::exception&) {
        throw ConfigError("invalid integer for \"" + std::string(key) + "\": " + it->second);
      }
    }
  };
  for (const auto& [key, _] : config) {
    static const std::set<std::string> known = {
        "records",       "taxonomy",      "aliases", "from_year", "to_year",
        "count_mode",    "series_threshold", "series_action", "format",
        "out",           "chapters_per_book_mode", "shards"};
    if (!known.contains(key)) throw ConfigError("unknown config key: " + key);
  }
  set_string("records", opt.records_path);
  set_string("taxonomy", opt.taxonomy_path);
  set_string("aliases", opt.aliases_path);
  set_int("from_year", opt.from_year);
  set_int("to_year", opt.to_year);
  set_string("count_mode", opt.count_mode);
  set_string("series_threshold", opt.series_threshold);
  set_string("series_action", opt.series_action);
  set_string("format", opt.format);
  set_string("out", opt.out_path);
  set_string("chapters_per_book_mode", opt.cpb_mode);
  set_int("shards", opt.shards);
}

}  // namespace

std::map<std::string, std::string> parse_config_text(std::string_view config_text) {
  std::map<std::string, std::string> config;
  int line_no = 0;
  for (std::string_view line : text::split(config_text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view stripped = text::trim_ascii(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key(text::trim_ascii(stripped.substr(0, eq)));
    std::string value(text::trim_ascii(stripped.substr(eq + 1)));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    }
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    config[key] = value;
  }
  return config;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config_text(buffer.str());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pubcite — publisher citation report toolkit"};
  app.require_subcommand(0, 1);

  Options opt;
  try {
    if (const char* config_path = std::getenv("PUBCITE_CONFIG")) {
      apply_config_defaults(opt, parse_config_file(config_path));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  auto add_common = [&](CLI::App* cmd, bool needs_records) {
    auto* records =
        cmd->add_option("--records", opt.records_path, "record TSV file");
    if (needs_records && opt.records_path.empty()) records->required();
    cmd->add_option("--taxonomy", opt.taxonomy_path,
                    "category->discipline TSV (default: embedded)");
    cmd->add_option("--aliases", opt.aliases_path,
                    "publisher alias TSV (default: embedded)");
    cmd->add_option("--from-year", opt.from_year, "window start (inclusive)")
        ->capture_default_str();
    cmd->add_option("--to-year", opt.to_year, "window end (inclusive)")->capture_default_str();
    cmd->add_option("--format", opt.format, "csv|json|md")->capture_default_str();
    cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
    cmd->add_option("--shards", opt.shards, "parallel aggregation shards")
        ->capture_default_str();
  };

  auto* report_cmd = app.add_subcommand("report", "per-discipline publisher rankings");
  add_common(report_cmd, true);
  report_cmd->add_option("--discipline", opt.disciplines,
                         "discipline to report (repeatable; default: all)");
  report_cmd->add_option("--count-mode", opt.count_mode, "all|books|chapters")
      ->capture_default_str();
  report_cmd->add_option("--series-threshold", opt.series_threshold,
                         "flag cells whose chapters-per-book ratio exceeds this");
  report_cmd->add_option("--series-action", opt.series_action, "flag|exclude")
      ->capture_default_str();
  report_cmd->add_option("--chapters-per-book-mode", opt.cpb_mode, "floor|decimals")
      ->capture_default_str();

  auto* overview_cmd = app.add_subcommand("overview", "per-discipline totals (all publishers)");
  add_common(overview_cmd, true);
  overview_cmd->add_option("--count-mode", opt.count_mode, "all|books|chapters")
      ->capture_default_str();
  overview_cmd->add_option("--series-threshold", opt.series_threshold,
                           "flag cells whose chapters-per-book ratio exceeds this");
  overview_cmd->add_option("--series-action", opt.series_action, "flag|exclude")
      ->capture_default_str();
  overview_cmd->add_option("--chapters-per-book-mode", opt.cpb_mode, "floor|decimals")
      ->capture_default_str();

  auto* summary_cmd = app.add_subcommand("summary", "corpus-wide totals and field share");
  add_common(summary_cmd, true);
  summary_cmd->add_option("--discipline", opt.disciplines,
                          "discipline defining the field share (repeatable; default: all)");
  summary_cmd->add_option("--chapters-per-book-mode", opt.cpb_mode, "floor|decimals")
      ->capture_default_str();

  auto* audit_cmd = app.add_subcommand("audit", "publisher variant clusters and near misses");
  add_common(audit_cmd, true);

  auto* series_cmd = app.add_subcommand("series", "chapters-per-book diagnostic table");
  add_common(series_cmd, true);

  auto* export_cmd =
      app.add_subcommand("export-defaults", "write the embedded taxonomy/alias files");
  export_cmd->add_option("--dir", opt.export_dir, "target directory")->capture_default_str();

  std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 takes reversed args
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (report_cmd->parsed()) return cmd_report(opt, out, err);
    if (overview_cmd->parsed()) return cmd_overview(opt, out, err);
    if (summary_cmd->parsed()) return cmd_summary(opt, out, err);
    if (audit_cmd->parsed()) return cmd_audit(opt, out, err);
    if (series_cmd->parsed()) return cmd_series(opt, out, err);
    if (export_cmd->parsed()) return cmd_export_defaults(opt, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  out << app.help();
  return 0;
}

}  // namespace pubcite::cli
