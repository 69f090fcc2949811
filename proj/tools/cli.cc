// Copyright 2026 The relanno Authors.
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

#include "cli.h"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "relanno/relanno.h"

namespace relanno::cli {
namespace {

struct SessionDeleter {
  void operator()(relanno_session *s) const { relanno_session_destroy(s); }
};
using SessionPtr = std::unique_ptr<relanno_session, SessionDeleter>;

struct StringDeleter {
  void operator()(char *s) const { relanno_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Thrown to end the command with a given exit code; the message goes to
// standard error.
struct Exit {
  int code;
  std::string message;
};

struct Config {
  std::string command;
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
  std::string format;
  std::string report_format = "table";
};

int ExitCodeFor(relanno_status status) {
  return status == RELANNO_ERR_INVALID_SESSION ? kExitValidationErrors
                                               : kExitIo;
}

void Check(relanno_status status, const char *what) {
  if (status == RELANNO_OK) return;
  throw Exit{ExitCodeFor(status), std::string(what) + ": " +
                                      relanno_status_name(status) + ": " +
                                      relanno_last_error()};
}

class Command {
 public:
  Command(const Config &config, std::istream &in, std::ostream &out)
      : config_(config), in_(in), out_(out) {}

  int Run() {
    if (config_.command == "validate") return Validate();
    if (config_.command == "stats") return Stats();
    if (config_.command == "convert") return Convert();
    return Demo();
  }

 private:
  std::string ReadInput() {
    if (!config_.input_path) {
      return std::string(std::istreambuf_iterator<char>(in_), {});
    }
    std::ifstream file(*config_.input_path, std::ios::binary);
    if (!file) throw Exit{kExitIo, "cannot open " + *config_.input_path};
    std::string data(std::istreambuf_iterator<char>(file), {});
    if (file.bad()) throw Exit{kExitIo, "cannot read " + *config_.input_path};
    return data;
  }

  static void WriteFile(const std::string &path, const std::string &data) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file << data;
    file.close();
    if (!file) throw Exit{kExitIo, "cannot write " + path};
  }

  void WriteOutput(const std::string &data) {
    if (config_.output_path) {
      WriteFile(*config_.output_path, data);
      return;
    }
    out_ << data;
    out_.flush();
    if (!out_) throw Exit{kExitIo, "cannot write to standard output"};
  }

  SessionPtr Load() {
    const std::string json = ReadInput();
    relanno_session *raw = nullptr;
    Check(relanno_import_json(json.c_str(), &raw), "import");
    return SessionPtr(raw);
  }

  int Validate() {
    SessionPtr session = Load();
    relanno_validation summary{};
    char *report = nullptr;
    Check(relanno_validate(session.get(), &summary, &report), "validate");
    OwnedString owned(report);
    WriteOutput(report);
    return summary.error_count > 0 ? kExitValidationErrors : kExitOk;
  }

  int Stats() {
    SessionPtr session = Load();
    relanno_corpus_stats stats{};
    Check(relanno_compute_corpus_stats(session.get(), &stats), "stats");
    if (config_.report_format == "json") {
      nlohmann::ordered_json report;
      report["sentence_count"] = stats.sentence_count;
      report["entity_count"] = stats.entity_count;
      report["relation_pair_count"] = stats.relation_pair_count;
      report["triplet_count"] = stats.triplet_count;
      report["avg_entities_per_sentence"] = stats.avg_entities_per_sentence;
      report["avg_relation_pairs_per_sentence"] =
          stats.avg_relation_pairs_per_sentence;
      report["avg_triplets_per_sentence"] = stats.avg_triplets_per_sentence;
      WriteOutput(report.dump(2) + "\n");
      return kExitOk;
    }
    std::ostringstream table;
    const auto row = [&](const char *name, auto value) {
      table << std::left << std::setw(34) << name << std::right
            << std::setw(10) << value << "\n";
    };
    table << std::fixed << std::setprecision(2);
    row("sentences", stats.sentence_count);
    row("entities", stats.entity_count);
    row("labeled pairs", stats.relation_pair_count);
    row("triplets", stats.triplet_count);
    row("avg entities per sentence", stats.avg_entities_per_sentence);
    row("avg labeled pairs per sentence",
        stats.avg_relation_pairs_per_sentence);
    row("avg triplets per sentence", stats.avg_triplets_per_sentence);
    WriteOutput(table.str());
    return kExitOk;
  }

  int Convert() {
    SessionPtr session = Load();
    if (config_.format == "json") {
      char *json = nullptr;
      Check(relanno_export_json(session.get(), &json), "export");
      OwnedString owned(json);
      WriteOutput(json);
      return kExitOk;
    }
    char *text = nullptr;
    char *annotations = nullptr;
    Check(relanno_export_brat(session.get(), &text, &annotations), "export");
    OwnedString owned_text(text);
    OwnedString owned_annotations(annotations);
    std::string stem = *config_.output_path;
    for (const char *ext : {".ann", ".txt"}) {
      if (stem.size() > 4 && stem.ends_with(ext)) stem.resize(stem.size() - 4);
    }
    WriteFile(stem + ".txt", text);
    WriteFile(stem + ".ann", annotations);
    return kExitOk;
  }

  int Demo() {
    relanno_session *raw = nullptr;
    Check(relanno_session_demo(&raw), "demo");
    SessionPtr session(raw);
    char *json = nullptr;
    Check(relanno_export_json(session.get(), &json), "export");
    OwnedString owned(json);
    WriteOutput(json);
    return kExitOk;
  }

  const Config &config_;
  std::istream &in_;
  std::ostream &out_;
};

}  // namespace

int Run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
  Config config;
  CLI::App app{"Relation triplet annotation toolkit", "relanno"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", config.input_path,
                 "Input file (default: standard input)");
  app.add_option("--output", config.output_path,
                 "Output file (default: standard output)");

  app.add_subcommand("validate", "Check an exported session for errors");
  CLI::App *stats = app.add_subcommand("stats", "Report corpus statistics");
  stats->add_option("--report-format", config.report_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  CLI::App *convert =
      app.add_subcommand("convert", "Re-export a session as json or brat");
  convert->add_option("--format", config.format, "json or brat")
      ->required()
      ->check(CLI::IsMember({"json", "brat"}));
  app.add_subcommand("demo", "Write the bundled sample session");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();
  if (config.command == "convert" && config.format == "brat" &&
      !config.output_path) {
    err << "convert --format brat requires --output (writes <stem>.txt and "
           "<stem>.ann)\n";
    return kExitUsage;
  }

  try {
    return Command(config, in, out).Run();
  } catch (const Exit &e) {
    err << "relanno: " << e.message << "\n";
    return e.code;
  }
}

}  // namespace relanno::cli
