// Copyright 2026 The r2c Authors
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

// r2c: command-line front end.
//
//   r2c compress  --target-tokens N [options] < prompt.txt
//   r2c evaluate  --dataset FILE --format nq|longbench --target-tokens N
//   r2c score     --question Q < context.txt
//
// Exit codes: 0 success, 1 I/O or data error, 2 usage or validation error,
// 3 scorer transport error, 4 scorer protocol error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "r2c/aggregator.hpp"
#include "r2c/audit.hpp"
#include "r2c/compressor.hpp"
#include "r2c/error.hpp"
#include "r2c/eval/dataset.hpp"
#include "r2c/eval/harness.hpp"
#include "r2c/eval/report.hpp"
#include "r2c/gateway.hpp"
#include "r2c/remote_scorer.hpp"
#include "r2c/segmenter.hpp"
#include "r2c/settings.hpp"
#include "r2c/tokenizer.hpp"

namespace {

using nlohmann::json;

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTransport = 3;
constexpr int kExitProtocol = 4;

// Flags shared by every subcommand that compresses. Values stay strings so
// that only flags actually given take part in precedence resolution.
struct CommonFlags {
  std::string config_file;
  r2c::KeyValues values;
};

void add_setting(CLI::App* cmd, CommonFlags& flags, const std::string& name,
                 const std::string& key, const std::string& help) {
  cmd->add_option_function<std::string>(
      name, [&flags, key](const std::string& v) { flags.values[key] = v; },
      help);
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
  add_setting(cmd, flags, "--target-tokens", "target_tokens",
              "Target prompt length T");
  add_setting(cmd, flags, "--rho", "rho",
              "Share of the removal budget spent on chunks (default 0.8)");
  add_setting(cmd, flags, "--gamma", "gamma",
              "Sentence-budget exponent (default 1.0)");
  add_setting(cmd, flags, "--pooling", "pooling", "mean | max | sum");
  add_setting(cmd, flags, "--ordering", "ordering", "original | sorted");
  add_setting(cmd, flags, "--max-chunk-tokens", "max_chunk_tokens",
              "Chunk size cap (default 128)");
  add_setting(cmd, flags, "--slack-rollover", "slack_rollover",
              "Move unused chunk budget to the sentence stage (true|false)");
  add_setting(cmd, flags, "--scorer", "scorer",
              "uniform | lexical | remote | remote:ENDPOINT");
  add_setting(cmd, flags, "--scorer-endpoint", "scorer_endpoint",
              "Endpoint for --scorer remote");
  add_setting(cmd, flags, "--tokenizer", "tokenizer",
              "Counting tokenizer: whitespace | bpe:MERGES_FILE");
  add_setting(cmd, flags, "--max-batch-chunks", "max_batch_chunks",
              "Chunks per scorer call, 0 = unlimited");
  cmd->add_option("--config", flags.config_file, "Key-value config file");
}

r2c::Settings resolve(const CommonFlags& flags,
                      std::optional<r2c::eval::DatasetFormat> format) {
  const r2c::KeyValues file = flags.config_file.empty()
                                  ? r2c::KeyValues{}
                                  : r2c::load_config_file(flags.config_file);
  r2c::Settings s =
      r2c::resolve_settings(flags.values, r2c::settings_from_environment(), file);
  if (s.origin.at("target_tokens") == "default") {
    throw r2c::ConfigError("--target-tokens is required");
  }
  // Retrieved passages are emitted most relevant first unless an ordering
  // was asked for.
  if (format == r2c::eval::DatasetFormat::kNq &&
      s.origin.at("ordering") == "default") {
    s.compression.ordering = r2c::Ordering::kSorted;
    s.origin["ordering"] = "format";
  }
  return s;
}

std::shared_ptr<r2c::Scorer> build_scorer(const r2c::Settings& s) {
  r2c::GatewayOptions gateway;
  gateway.max_batch_chunks = s.max_batch_chunks;
  return r2c::make_scorer(s.scorer, s.scorer_endpoint, r2c::RemoteOptions{},
                          gateway);
}

// Fails fast when a remote scorer cannot be reached at all, before any
// record is processed.
void probe_remote(const r2c::Settings& s) {
  std::string_view spec = s.scorer;
  if (!spec.starts_with("remote")) return;
  std::string_view where = spec == "remote" ? std::string_view(s.scorer_endpoint)
                                            : spec.substr(spec.find(':') + 1);
  const r2c::RemoteScorer probe(r2c::Endpoint::parse(where));
  if (!probe.healthy()) {
    throw r2c::TransportError(probe.endpoint().url(), 1, true,
                              "health check failed");
  }
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_all(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input " + path);
  return read_all(in);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

r2c::Prompt prompt_from_json(const std::string& line, std::size_t line_no) {
  json row;
  try {
    row = json::parse(line);
  } catch (const json::parse_error& e) {
    throw r2c::SchemaError(line_no, e.what());
  }
  if (!row.is_object() || !row.contains("context") ||
      !row["context"].is_string()) {
    throw r2c::SchemaError(line_no, "expected an object with a string context");
  }
  r2c::Prompt p;
  p.context = row["context"].get<std::string>();
  p.question = row.value("question", "");
  p.instruction = row.value("instruction", "");
  p.source_id = row.value("id", std::to_string(line_no));
  if (row.contains("unit_hints")) {
    p.unit_hints = row["unit_hints"].get<std::vector<std::string>>();
  }
  return p;
}

struct CompressArgs {
  CommonFlags common;
  std::string input;
  std::string output;
  std::string input_format = "text";
  std::string question;
  std::string instruction;
  std::string audit;
};

int run_compress(const CompressArgs& args) {
  std::optional<r2c::eval::DatasetFormat> dataset_format;
  if (args.input_format == "nq" || args.input_format == "longbench") {
    dataset_format = r2c::eval::parse_format(args.input_format);
  } else if (args.input_format != "text" && args.input_format != "jsonl") {
    throw r2c::ConfigError("unknown input format '" + args.input_format + "'");
  }
  const r2c::Settings settings = resolve(args.common, dataset_format);
  const auto counter = r2c::make_token_counter(settings.tokenizer);
  const auto scorer = build_scorer(settings);
  const r2c::Compressor compressor(settings.compression, scorer, counter);

  Output out(args.output);
  std::unique_ptr<Output> audit;
  std::ostream* audit_stream = nullptr;
  if (!args.audit.empty()) {
    if (args.audit == "-") {
      audit_stream = &std::cerr;
    } else {
      audit = std::make_unique<Output>(args.audit);
      audit_stream = &audit->stream();
    }
    json header = json::parse(r2c::settings_to_json(settings));
    *audit_stream << json{{"event", "config"},
                          {"settings", header},
                          {"tokenizer", counter->name()},
                          {"scorer", scorer->name()}}
                         .dump()
                  << '\n';
  }

  if (args.input_format == "text") {
    r2c::Prompt p;
    p.context = read_input(args.input);
    p.question = args.question;
    p.instruction = args.instruction;
    p.source_id = "stdin";
    const r2c::CompressionResult r = compressor(p);
    std::ostream& o = out.stream();
    o << r.compressed_context;
    if (!r.noop && !r.compressed_context.empty() &&
        r.compressed_context.back() != '\n') {
      o << '\n';
    }
    if (audit_stream) *audit_stream << r2c::audit_record(r, p.source_id) << '\n';
    return 0;
  }

  std::istringstream lines(read_input(args.input));
  std::optional<r2c::eval::DatasetReader> reader;
  if (dataset_format) {
    reader.emplace(std::make_unique<std::istringstream>(lines.str()),
                   *dataset_format, r2c::eval::LoadOptions{true});
  }
  std::size_t line_no = 0;
  std::string line;
  for (;;) {
    r2c::Prompt p;
    std::string task;
    if (reader) {
      std::optional<r2c::eval::EvalRecord> rec = reader->next();
      if (!rec) break;
      p = r2c::eval::make_prompt(*rec, *dataset_format);
      task = rec->task_tag;
    } else {
      if (!std::getline(lines, line)) break;
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      p = prompt_from_json(line, line_no);
    }
    const r2c::CompressionResult r = compressor(p);
    json row = {{"id", p.source_id},
                {"compressed_context", r.compressed_context},
                {"original_tokens", r.original_tokens},
                {"compressed_tokens", r.compressed_tokens},
                {"rejoined_tokens", r.rejoined_tokens},
                {"noop", r.noop}};
    if (!task.empty()) row["task"] = task;
    out.stream() << row.dump() << '\n';
    if (audit_stream) *audit_stream << r2c::audit_record(r, p.source_id) << '\n';
  }
  return 0;
}

struct EvaluateArgs {
  CommonFlags common;
  std::string dataset;
  std::string format = "nq";
  std::string report = "r2c_report";
  std::size_t jobs = 0;
  std::string ablation = "hierarchical";
  double sample = 1.0;
  std::uint64_t seed = 0;
  bool strict = false;
  std::optional<std::string> reply;
};

int run_evaluate(const EvaluateArgs& args) {
  const r2c::eval::DatasetFormat format = r2c::eval::parse_format(args.format);
  const r2c::Settings settings = resolve(args.common, format);
  const r2c::eval::Ablation ablation = r2c::eval::parse_ablation(args.ablation);
  if (!(args.sample > 0.0 && args.sample <= 1.0)) {
    throw r2c::ConfigError("--sample must lie in (0, 1]");
  }
  const auto counter = r2c::make_token_counter(settings.tokenizer);
  const auto scorer = build_scorer(settings);

  auto reader = r2c::eval::DatasetReader::open(args.dataset, format,
                                               r2c::eval::LoadOptions{args.strict});
  std::vector<r2c::eval::EvalRecord> records;
  while (auto rec = reader.next()) records.push_back(std::move(*rec));
  for (const auto& issue : reader.issues()) {
    std::cerr << "r2c: " << args.dataset << ":" << issue.line
              << ": skipped: " << issue.message << '\n';
  }
  if (args.sample < 1.0) {
    records = r2c::eval::sample_records(std::move(records), args.sample, args.seed);
  }
  if (!records.empty()) probe_remote(settings);

  std::optional<r2c::eval::EchoGenerator> generator;
  r2c::eval::HarnessOptions options;
  options.jobs = args.jobs > 0 ? args.jobs : settings.jobs;
  options.ablation = ablation;
  if (args.reply) {
    generator.emplace(*args.reply);
    options.generator = &*generator;
  }
  const r2c::eval::EvalReport report = r2c::eval::measure_compression(
      records, format, settings.compression, *scorer, *counter, options);
  r2c::eval::write_report_files(args.report, report);
  r2c::eval::write_summary_json(std::cout, report);
  std::cout << '\n';
  if (report.aggregates.failed > 0) {
    std::cerr << "r2c: " << report.aggregates.failed << " of "
              << report.aggregates.records << " records failed";
    for (const auto& row : report.rows) {
      if (!row.error.empty()) {
        std::cerr << " (first: " << row.id << ": " << row.error << ")";
        break;
      }
    }
    std::cerr << '\n';
  }
  return report.aggregates.records > 0 &&
                 report.aggregates.failed == report.aggregates.records
             ? kExitData
             : 0;
}

struct ScoreArgs {
  CommonFlags common;
  std::string input;
  std::string question;
};

// Prints chunk and sentence scores for a context; a diagnostic aid for
// inspecting what the scorer considers important.
int run_score(const ScoreArgs& args) {
  CommonFlags common = args.common;
  if (!common.values.contains("target_tokens")) common.values["target_tokens"] = "0";
  const r2c::Settings settings = resolve(common, std::nullopt);
  const auto counter = r2c::make_token_counter(settings.tokenizer);
  const auto scorer = build_scorer(settings);

  const std::string context = read_input(args.input);
  std::vector<r2c::Chunk> chunks =
      r2c::segment_context(context, {}, settings.compression, *counter);
  r2c::ScoreRequest request;
  request.question = args.question;
  request.backend = scorer->name();
  for (const r2c::Chunk& c : chunks) request.chunks.push_back(c.text);
  const r2c::ScoreResponse response = scorer->score(request);
  r2c::validate_response(request, response);
  r2c::aggregate_chunk_scores(chunks, response.per_chunk,
                              settings.compression.pooling);

  json out = json::array();
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    r2c::aggregate_sentence_scores(chunks[i], response.per_chunk[i],
                                   settings.compression.pooling);
    json sentences = json::array();
    for (const r2c::Sentence& s : chunks[i].sentences) {
      sentences.push_back(
          {{"text", s.text}, {"tokens", s.token_count}, {"score", s.score}});
    }
    out.push_back({{"chunk", i},
                   {"tokens", chunks[i].token_count},
                   {"score", chunks[i].score},
                   {"sentences", sentences}});
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical prompt compression"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "r2c 0.1.0");

  CompressArgs compress;
  CLI::App* c = app.add_subcommand("compress", "Compress prompts");
  add_common(c, compress.common);
  c->add_option("--input,-i", compress.input, "Input file (default stdin)");
  c->add_option("--output,-o", compress.output, "Output file (default stdout)");
  c->add_option("--input-format", compress.input_format,
                "text | jsonl | nq | longbench");
  c->add_option("--question,-q", compress.question, "Question (text input)");
  c->add_option("--instruction", compress.instruction,
                "Instruction (text input)");
  c->add_option("--audit", compress.audit,
                "Write a JSON-lines audit trail to FILE ('-' for stderr)");

  EvaluateArgs evaluate;
  CLI::App* e = app.add_subcommand("evaluate", "Run the evaluation harness");
  add_common(e, evaluate.common);
  e->add_option("--dataset", evaluate.dataset, "JSON-lines dataset")->required();
  e->add_option("--format", evaluate.format, "nq | longbench");
  e->add_option("--report", evaluate.report,
                "Report prefix: writes PREFIX.tsv and PREFIX.summary.json");
  e->add_option("--jobs,-j", evaluate.jobs, "Records compressed in parallel");
  e->add_option("--ablation", evaluate.ablation,
                "hierarchical | chunk-only | sentence-only | token-only");
  e->add_option("--sample", evaluate.sample, "Fraction of records to keep");
  e->add_option("--seed", evaluate.seed, "Sampling seed");
  e->add_flag("--strict", evaluate.strict, "Abort on the first malformed row");
  e->add_option("--reply", evaluate.reply,
                "Score Span EM against this fixed generator reply");

  ScoreArgs score;
  CLI::App* s = app.add_subcommand("score", "Show chunk and sentence scores");
  add_common(s, score.common);
  s->add_option("--input,-i", score.input, "Context file (default stdin)");
  s->add_option("--question,-q", score.question, "Question");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (c->parsed()) return run_compress(compress);
    if (e->parsed()) return run_evaluate(evaluate);
    return run_score(score);
  } catch (const r2c::ConfigError& err) {
    std::cerr << "r2c: usage: " << err.what() << '\n';
    return kExitUsage;
  } catch (const r2c::ValidationError& err) {
    std::cerr << "r2c: invalid input: " << err.what() << '\n';
    return kExitUsage;
  } catch (const r2c::TransportError& err) {
    std::cerr << "r2c: scorer unreachable at " << err.endpoint() << " after "
              << err.attempts() << " attempt(s): " << err.what() << '\n';
    return kExitTransport;
  } catch (const r2c::ProtocolError& err) {
    std::cerr << "r2c: scorer protocol error: " << err.what() << '\n';
    return kExitProtocol;
  } catch (const std::exception& err) {
    std::cerr << "r2c: " << err.what() << '\n';
    return kExitData;
  }
}
