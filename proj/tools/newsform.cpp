// Copyright 2026 The NewsForm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// newsform: extract, validate and query NewsForm documents.
//
// Exit codes: 0 success, 1 validation findings, 2 resource error,
// 3 query or rule syntax error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "newsform/codec.hpp"
#include "newsform/codes.hpp"
#include "newsform/extract.hpp"
#include "newsform/padoof.hpp"
#include "newsform/schema.hpp"
#include "newsform/validate.hpp"

namespace fs = std::filesystem;
using namespace newsform;

namespace {

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kResource = 2;
constexpr int kSyntax = 3;

struct ResourceFailure {
  std::string message;
};

std::string read_input(const std::string& name) {
  if (name == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(name, std::ios::binary);
  if (!in) throw ResourceFailure{"cannot read " + name};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Config {
  std::string lexicons;
  std::string rules;
  std::string kb;
};

fs::path resource_dir(const std::string& flag, const char* sub) {
  fs::path dir = flag.empty() ? data_root() / sub : fs::path(flag);
  if (!fs::is_directory(dir)) throw ResourceFailure{std::string(sub) + " directory not found: " + dir.string()};
  return dir;
}

std::string event_tsv(const NewsForm& form) {
  std::string out;
  for (std::size_t i = 0; i < form.events.size(); ++i)
    for (const auto& leaf : event_leaves(form.events[i]))
      out += std::to_string(i) + "\t" + std::string(event_name(form.events[i])) + "/" + leaf.path + "\t" +
             leaf_text(leaf.value) + "\n";
  return out;
}

int cmd_extract(const Config& cfg, const std::vector<std::string>& inputs, const std::string& format,
                bool review, const std::string& dateline) {
  std::optional<UtcTime> when;
  if (!dateline.empty()) {
    when = parse_basic_utc(dateline);
    if (!when) {
      std::cerr << "newsform: --dateline expects a time like 19990125T181917Z\n";
      return kSyntax;
    }
  }
  auto resources = ExtractResources::load(resource_dir(cfg.lexicons, "lexicons"),
                                          resource_dir(cfg.rules, "rules"), resource_dir(cfg.kb, "kb"));
  for (const auto& input : inputs) {
    auto result = extract(read_input(input), resources, when);
    if (format == "debug") std::cout << debug_dump(result.parse);
    if (format == "tsv")
      std::cout << event_tsv(result.form);
    else
      std::cout << serialize_newsform(result.form);
    if (review) {
      for (const auto& f : result.fragments)
        std::cerr << "fragment\t" << f.rule_id << "\tsentence " << f.sentence_index + 1 << "\t"
                  << encode_event(f.event).name << "\n";
      std::cerr << format_diagnostics(result.diagnostics);
    }
  }
  return kOk;
}

int cmd_validate(const std::vector<std::string>& files) {
  int status = kOk;
  for (const auto& file : files) {
    std::string label = file == "-" ? "<stdin>" : file;
    NewsForm form;
    try {
      form = parse_newsform(read_input(file));
    } catch (const ParseError& e) {
      for (const auto& d : e.diagnostics())
        std::cout << label << "\terror\t" << d.path << "\t" << diagnostic_kind_name(d.kind) << "\t" << d.line
                  << ":" << d.column << ": " << d.message << "\n";
      status = kFindings;
      continue;
    }
    auto report = validate(form);
    for (const auto& e : report.errors)
      std::cout << label << "\terror\t" << e.path << "\t" << e.code << "\t" << e.message << "\n";
    for (const auto& w : report.warnings)
      std::cout << label << "\twarning\t" << w.path << "\t" << w.code << "\t" << w.message << "\n";
    if (!report.ok()) status = kFindings;
  }
  return status;
}

CorpusIndex load_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw ResourceFailure{"corpus directory not found: " + dir};
  std::vector<Diagnostic> diagnostics;
  auto index = CorpusIndex::build_dir(dir, &diagnostics);
  std::cerr << format_diagnostics(diagnostics);
  return index;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NewsForm toolkit: extract events from news text and query NewsForm corpora"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--lexicons", cfg.lexicons, "Lexicon directory (default: $NEWSFORM_DATA/lexicons)");
  app.add_option("--rules", cfg.rules, "Rule directory (default: $NEWSFORM_DATA/rules)");
  app.add_option("--kb", cfg.kb, "Commonsense table directory (default: $NEWSFORM_DATA/kb)");

  std::vector<std::string> inputs;
  std::string format = "xml";
  bool debug = false;
  bool review = false;
  std::string dateline;
  auto* extract_cmd = app.add_subcommand("extract", "Convert news text into a NewsForm");
  extract_cmd->add_option("input", inputs, "Text files, or - for standard input")->default_val("-");
  extract_cmd->add_option("--format", format, "Output: xml, debug or tsv")
      ->check(CLI::IsMember({"xml", "debug", "tsv"}));
  extract_cmd->add_flag("--debug", debug, "Print the token, group and mention dump before the XML");
  extract_cmd->add_flag("--review", review, "Print fragments and diagnostics to standard error");
  extract_cmd->add_option("--dateline", dateline, "DatelineTime for the Head, e.g. 19990125T181917Z");

  std::vector<std::string> files;
  auto* validate_cmd = app.add_subcommand("validate", "Check NewsForm files");
  validate_cmd->add_option("files", files, "NewsForm XML files, or - for standard input")->required();

  std::string corpus;
  std::string query_text;
  auto* query_cmd = app.add_subcommand("query", "Find corpus documents matching a field-path query");
  query_cmd->add_option("corpus", corpus, "Directory of .newsform.xml files")->required();
  query_cmd->add_option("query", query_text, "e.g. \"Deal.Target.Ticker = BEL\"")->required();

  std::string variant;
  std::string bucket = "day";
  auto* stats_cmd = app.add_subcommand("stats", "Count events of one type per day or week");
  stats_cmd->add_option("corpus", corpus, "Directory of .newsform.xml files")->required();
  stats_cmd->add_option("variant", variant, "Event type, e.g. NewProduct")->required();
  stats_cmd->add_option("bucket", bucket, "day or week")->check(CLI::IsMember({"day", "week"}));

  std::string geo_query;
  auto* geo_cmd = app.add_subcommand("geo", "Positive/negative/other events per country");
  geo_cmd->add_option("corpus", corpus, "Directory of .newsform.xml files")->required();
  geo_cmd->add_option("query", geo_query, "Query selecting events (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage mistakes share the syntax-error status; --help exits 0.
    return app.exit(e) == 0 ? kOk : kSyntax;
  }

  std::string active_query;
  try {
    if (*extract_cmd) return cmd_extract(cfg, inputs, debug ? "debug" : format, review, dateline);
    if (*validate_cmd) return cmd_validate(files);
    if (*query_cmd) {
      active_query = query_text;
      auto q = parse_query(query_text);
      std::cout << format_hits(query(load_corpus(corpus), q));
      return kOk;
    }
    if (*stats_cmd) {
      auto kind = event_kind(variant);
      if (!kind) {
        std::cerr << "newsform: unknown event type '" << variant << "'\n";
        return kSyntax;
      }
      std::cout << format_stats(stats(load_corpus(corpus), *kind, bucket == "week" ? Bucket::kWeek : Bucket::kDay));
      return kOk;
    }
    if (*geo_cmd) {
      active_query = geo_query;
      auto q = parse_query(geo_query);
      std::cout << format_geo(geo_distribution(load_corpus(corpus), q));
      return kOk;
    }
  } catch (const QueryError& e) {
    std::cerr << annotate_query_error(active_query, e);
    return kSyntax;
  } catch (const RuleError& e) {
    std::cerr << "newsform: " << e.what() << "\n";
    return kSyntax;
  } catch (const ResourceFailure& e) {
    std::cerr << "newsform: " << e.message << "\n";
    return kResource;
  } catch (const ResourceError& e) {
    std::cerr << "newsform: " << e.what() << "\n";
    return kResource;
  } catch (const InvalidDocument& e) {
    for (const auto& issue : e.report().errors)
      std::cerr << "newsform: " << issue.path << ": " << issue.message << "\n";
    return kFindings;
  }
  return kOk;
}
