// Copyright 2026 The argproj Authors.
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

#include "argproj/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ostream>

#include "argproj/conll.h"
#include "argproj/datasetops.h"
#include "argproj/error.h"
#include "argproj/evaluate.h"
#include "argproj/model1.h"
#include "argproj/postprocess.h"
#include "argproj/projection.h"
#include "argproj/relations.h"
#include "argproj/reports.h"
#include "argproj/review_server.h"
#include "argproj/review_session.h"
#include "argproj/text.h"

namespace argproj {
namespace {

namespace fs = std::filesystem;

struct IobFlags {
  bool strict = false;
  bool repair = false;

  IobMode Mode(IobMode fallback) const {
    if (strict) return IobMode::kStrict;
    if (repair) return IobMode::kRepair;
    return fallback;
  }
};

void AddIobFlags(CLI::App* app, IobFlags* flags) {
  CLI::Option* strict =
      app->add_flag("--strict", flags->strict, "Reject malformed IOB");
  CLI::Option* repair = app->add_flag(
      "--repair", flags->repair, "Open a span at a stray I- tag");
  strict->excludes(repair);
}

// "name=path" or a bare path named after its stem.
std::pair<std::string, std::string> NamedPath(const std::string& arg) {
  const std::size_t eq = arg.find('=');
  if (eq != std::string::npos && eq > 0 &&
      arg.find('/') > eq) {
    return {arg.substr(0, eq), arg.substr(eq + 1)};
  }
  return {fs::path(arg).stem().string(), arg};
}

std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("ARGPROJ_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t seed = 0;
  const std::string_view text(env);
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ValidationError("ARGPROJ_SEED is not an unsigned integer: " +
                          std::string(text));
  }
  return seed;
}

void EmitJson(const Json& json, const std::string& path, std::ostream& out) {
  const std::string text = json.dump(2) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

std::string JoinLines(const std::vector<std::string>& lines) {
  std::string text;
  for (const std::string& line : lines) {
    text += line;
    text += '\n';
  }
  return text;
}

// --- stats -----------------------------------------------------------------

struct StatsArgs {
  std::vector<std::string> corpora;
  std::vector<std::string> relations;
  std::string out;
  IobFlags iob;
};

void RunStats(const StatsArgs& args, std::ostream& out) {
  std::vector<std::pair<std::string, Corpus>> corpora;
  for (const std::string& arg : args.corpora) {
    auto [name, path] = NamedPath(arg);
    corpora.emplace_back(name, ReadConllFile(path, args.iob.Mode(IobMode::kStrict)));
  }
  std::vector<std::pair<std::string, std::vector<RelationInstance>>> relations;
  for (const std::string& arg : args.relations) {
    auto [name, path] = NamedPath(arg);
    relations.emplace_back(name, ParseRelations(ReadFile(path)));
  }
  EmitJson(ToJson(DistributionReport(corpora, relations)), args.out, out);
}

// --- align-train / align ---------------------------------------------------

struct AlignTrainArgs {
  std::string src;
  std::string tgt;
  std::string out;
  std::string report;
  Model1Options options;
};

void RunAlignTrain(const AlignTrainArgs& args) {
  const std::vector<ParallelSentence> corpus = ReadParallelText(args.src, args.tgt);
  const Model1Result result = TrainModel1(corpus, args.options);
  WriteFile(args.out, result.table.Serialize());
  if (!args.report.empty()) {
    WriteFile(args.report,
              Model1TraceToJson(result, args.options).dump(2) + "\n");
  }
}

struct AlignArgs {
  std::string src;
  std::string tgt;
  std::string table;
  std::string reverse_table;
  std::string symmetrize = "intersection";
  std::string out;
};

void RunAlign(const AlignArgs& args) {
  const std::vector<ParallelSentence> corpus = ReadParallelText(args.src, args.tgt);
  const TranslationTable forward = TranslationTable::Parse(ReadFile(args.table));
  std::optional<TranslationTable> reverse;
  if (!args.reverse_table.empty()) {
    reverse = TranslationTable::Parse(ReadFile(args.reverse_table));
  }
  const SymmetrizeMethod method = args.symmetrize == "union"
                                      ? SymmetrizeMethod::kUnion
                                      : SymmetrizeMethod::kIntersection;
  std::vector<std::string> lines;
  lines.reserve(corpus.size());
  for (const ParallelSentence& pair : corpus) {
    SentenceAlignment alignment = AlignWithTable(forward, pair);
    if (reverse) {
      const SentenceAlignment backward =
          AlignWithTable(*reverse, {pair.target, pair.source}).Transposed();
      alignment = Symmetrize(alignment, backward, method);
    }
    lines.push_back(FormatPharaoh(alignment));
  }
  WriteFile(args.out, JoinLines(lines));
}

// --- project / postprocess -------------------------------------------------

struct ProjectArgs {
  std::string src;
  std::string tgt;
  std::string align;
  std::string out;
  std::string report;
  std::size_t gap = 2;
  bool exclude_punctuation = false;
  std::string on_unprojectable = "drop";
  int jobs = 1;
  IobFlags iob;
};

void RunProject(const ProjectArgs& args) {
  const Corpus source = ReadConllFile(args.src, args.iob.Mode(IobMode::kStrict));
  ProjectionConfig config;
  config.gap_tolerance = args.gap;
  config.include_punctuation = !args.exclude_punctuation;
  config.on_unprojectable = args.on_unprojectable == "error"
                                ? UnprojectablePolicy::kError
                                : UnprojectablePolicy::kDrop;
  const ProjectedCorpus projected = ProjectCorpusFromText(
      source, ReadFile(args.tgt), ReadFile(args.align), config, args.jobs);
  WriteConllFile(args.out, projected.corpus);
  if (!args.report.empty()) {
    WriteFile(args.report, ToJson(projected.report).dump(2) + "\n");
  }
}

struct PostprocessArgs {
  std::string src;
  std::string tgt;
  std::string out;
  std::string report;
  std::vector<std::string> rules;
  std::string lexicon;
  bool exclude_punctuation = false;
  int jobs = 1;
  IobFlags iob;
};

void RunPostprocess(const PostprocessArgs& args) {
  const IobMode mode = args.iob.Mode(IobMode::kStrict);
  const Corpus source = ReadConllFile(args.src, mode);
  const Corpus target = ReadConllFile(args.tgt, mode);
  RulePipelineConfig config;
  if (!args.rules.empty()) {
    config.rules.clear();
    for (const std::string& name : args.rules) {
      const auto rule = ParseCorrectionRule(name);
      if (!rule) throw ValidationError("unknown rule: " + name);
      config.rules.push_back(*rule);
    }
  }
  if (!args.lexicon.empty()) config.article_lexicon = ParseLexicon(ReadFile(args.lexicon));
  config.include_punctuation = !args.exclude_punctuation;
  config.Validate();

  const PostprocessResult result = RunPipeline(source, target, config, args.jobs);
  WriteConllFile(args.out, result.corpus);
  if (!args.report.empty()) {
    // Appended to an existing projection report when there is one.
    Json report = Json::object();
    if (fs::exists(args.report)) {
      try {
        report = Json::parse(ReadFile(args.report));
      } catch (const Json::exception& e) {
        throw ValidationError(args.report + ": not JSON: " + e.what());
      }
      if (!report.is_object()) {
        throw ValidationError(args.report + ": not a JSON object");
      }
    }
    report["auto_corrections"] = ToJson(result.report);
    WriteFile(args.report, report.dump(2) + "\n");
  }
}

// --- eval ------------------------------------------------------------------

struct EvalArgs {
  std::string gold;
  std::vector<std::string> pred;
  std::string mode = "token";
  std::string gold_relations;
  std::string pred_labels;
  std::string out;
  IobFlags iob;
};

void RunEval(const EvalArgs& args, std::ostream& out) {
  if (args.gold.empty() == !args.pred.empty()) {
    throw CLI::ValidationError("--gold and --pred go together");
  }
  if (args.gold_relations.empty() != args.pred_labels.empty()) {
    throw CLI::ValidationError("--gold-relations and --pred-labels go together");
  }
  if (args.gold.empty() && args.gold_relations.empty()) {
    throw CLI::ValidationError("nothing to evaluate");
  }
  Json report = Json::object();
  if (!args.gold.empty()) {
    const EvalMode mode = args.mode == "span" ? EvalMode::kSpan : EvalMode::kToken;
    const Corpus gold = ReadConllFile(args.gold, args.iob.Mode(IobMode::kStrict));
    std::vector<std::pair<std::string, EvalReport>> variants;
    for (const std::string& arg : args.pred) {
      auto [name, path] = NamedPath(arg);
      // Model output is read leniently unless --strict is given.
      const Corpus pred = ReadConllFile(path, args.iob.Mode(IobMode::kRepair));
      variants.emplace_back(name, ScoreComponents(gold, pred, mode));
    }
    if (variants.size() == 1) {
      report["components"] = ToJson(variants.front().second);
    } else {
      Json named = Json::object();
      for (const auto& [name, scores] : variants) named[name] = ToJson(scores);
      const VariantComparison comparison = CompareVariants(variants);
      report["components"] = {{"variants", named},
                              {"comparison", ToJson(comparison)}};
      if (!args.out.empty()) out << comparison.ToText();
    }
  }
  if (!args.gold_relations.empty()) {
    const std::vector<RelationInstance> gold =
        ParseRelations(ReadFile(args.gold_relations));
    const std::vector<RelationLabel> pred =
        ParseRelationLabels(ReadFile(args.pred_labels));
    report["relations"] = ToJson(ScoreRelations(gold, pred));
  }
  EmitJson(report, args.out, out);
}

// --- merge / export-relations ----------------------------------------------

struct MergeArgs {
  std::vector<std::string> corpora;
  std::optional<std::uint64_t> seed;
  std::string name = "merged";
  std::string out;
  IobFlags iob;
};

void RunMerge(const MergeArgs& args) {
  std::vector<Corpus> corpora;
  for (const std::string& arg : args.corpora) {
    auto [name, path] = NamedPath(arg);
    Corpus corpus = ReadConllFile(path, args.iob.Mode(IobMode::kStrict));
    corpus.name = name;
    corpora.push_back(std::move(corpus));
  }
  WriteConllFile(args.out, MergeCorpora(corpora, ResolveSeed(args.seed), args.name));
}

struct ExportRelationsArgs {
  std::vector<std::string> inputs;
  std::string out;
  std::string report;
};

void RunExportRelations(const ExportRelationsArgs& args) {
  std::vector<std::vector<RelationInstance>> parts;
  for (const std::string& path : args.inputs) {
    parts.push_back(ParseRelations(ReadFile(path)));
  }
  const std::string text = ExportRelations(parts);
  WriteFile(args.out, text);
  if (!args.report.empty()) {
    const std::vector<RelationInstance> merged = ParseRelations(text);
    WriteFile(args.report, ToJson(ComputeRelationStats(merged)).dump(2) + "\n");
  }
}

// --- serve -----------------------------------------------------------------

struct ServeArgs {
  std::string session;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string token;
  std::string src;
  std::string tgt;
  bool include_full_components = false;
  std::vector<std::string> classes;
  std::size_t snapshot_every = 100;
  IobFlags iob;
};

void RunServe(const ServeArgs& args, std::ostream& out) {
  if (!ReviewSession::Exists(args.session)) {
    if (args.src.empty() || args.tgt.empty()) {
      throw CLI::ValidationError(
          "no session in " + args.session + "; pass --src and --tgt to create one");
    }
    const IobMode mode = args.iob.Mode(IobMode::kStrict);
    ReviewSession::Create(args.session, ReadConllFile(args.src, mode),
                          ReadConllFile(args.tgt, mode));
  } else if (!args.src.empty() || !args.tgt.empty()) {
    throw ValidationError(args.session + " already holds a session");
  }
  ReviewQueueConfig config;
  config.skip_full_components = !args.include_full_components;
  config.snapshot_every = args.snapshot_every;
  for (const std::string& name : args.classes) {
    bool found = false;
    for (SentenceClass value : {SentenceClass::kFullO, SentenceClass::kFullComponent,
                                SentenceClass::kPartial}) {
      if (ToString(value) == name) {
        config.classes.push_back(value);
        found = true;
      }
    }
    if (!found) throw CLI::ValidationError("unknown class: " + name);
  }
  ReviewSession session(args.session, config);
  ReviewServerOptions options;
  options.host = args.host;
  options.token = args.token;
  ReviewServer server(session, options);
  const int port = server.Bind(args.port);
  if (port < 0) {
    throw Error("cannot bind " + args.host + ":" + std::to_string(args.port));
  }
  out << "serving " << args.session << " on http://" << args.host << ":" << port
      << "\n"
      << std::flush;
  if (!server.Run()) throw Error("server stopped with an error");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Cross-lingual projection of argument annotations", "argproj");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::function<void()> action;

  StatsArgs stats;
  CLI::App* cmd = app.add_subcommand("stats", "Component and relation counts");
  cmd->add_option("--corpus", stats.corpora, "[name=]path.conll")->allow_extra_args(false);
  cmd->add_option("--relations", stats.relations, "[name=]path.txt")->allow_extra_args(false);
  cmd->add_option("--out", stats.out, "JSON report (default stdout)");
  AddIobFlags(cmd, &stats.iob);
  cmd->callback([&] {
    if (stats.corpora.empty() && stats.relations.empty()) {
      throw CLI::RequiredError("--corpus or --relations");
    }
    action = [&] { RunStats(stats, out); };
  });

  AlignTrainArgs train;
  cmd = app.add_subcommand("align-train", "Train an IBM Model 1 table");
  cmd->add_option("--src", train.src, "Tokenized source, one sentence per line")
      ->required();
  cmd->add_option("--tgt", train.tgt, "Tokenized target, one sentence per line")
      ->required();
  cmd->add_option("--out", train.out, "Translation table")->required();
  cmd->add_option("--report", train.report, "Log-likelihood trace (JSON)");
  cmd->add_option("--iterations", train.options.iterations, "EM iterations")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--epsilon", train.options.epsilon,
                  "Stop once the log-likelihood gain drops below this")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--lowercase", train.options.lowercase, "Case-fold the vocabulary");
  cmd->add_option("--jobs", train.options.jobs, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->callback([&] { action = [&] { RunAlignTrain(train); }; });

  AlignArgs align;
  cmd = app.add_subcommand("align", "Align sentence pairs with a trained table");
  cmd->add_option("--src", align.src, "Tokenized source")->required();
  cmd->add_option("--tgt", align.tgt, "Tokenized target")->required();
  cmd->add_option("--table", align.table, "Source-to-target table")->required();
  cmd->add_option("--reverse-table", align.reverse_table,
                  "Target-to-source table; enables symmetrization");
  cmd->add_option("--symmetrize", align.symmetrize, "intersection or union")
      ->capture_default_str()
      ->check(CLI::IsMember({"intersection", "union"}));
  cmd->add_option("--out", align.out, "Pharaoh output")->required();
  cmd->callback([&] { action = [&] { RunAlign(align); }; });

  ProjectArgs project;
  cmd = app.add_subcommand("project", "Project source spans onto the target");
  cmd->add_option("--src", project.src, "Annotated source (CoNLL)")->required();
  cmd->add_option("--tgt", project.tgt, "Tokenized target text")->required();
  cmd->add_option("--align", project.align, "Pharaoh alignments")->required();
  cmd->add_option("--out", project.out, "Projected target (CoNLL)")->required();
  cmd->add_option("--report", project.report, "Projection report (JSON)");
  cmd->add_option("--gap", project.gap, "Gap tolerance")->capture_default_str();
  cmd->add_flag("--exclude-punctuation", project.exclude_punctuation,
                "Trim punctuation at span edges");
  cmd->add_option("--on-unprojectable", project.on_unprojectable, "drop or error")
      ->capture_default_str()
      ->check(CLI::IsMember({"drop", "error"}));
  cmd->add_option("--jobs", project.jobs, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  AddIobFlags(cmd, &project.iob);
  cmd->callback([&] { action = [&] { RunProject(project); }; });

  PostprocessArgs post;
  cmd = app.add_subcommand("postprocess", "Apply correction rules to a projection");
  cmd->add_option("--src", post.src, "Annotated source (CoNLL)")->required();
  cmd->add_option("--tgt", post.tgt, "Projected target (CoNLL)")->required();
  cmd->add_option("--out", post.out, "Corrected target (CoNLL)")->required();
  cmd->add_option("--report", post.report,
                  "JSON report; the result goes under \"auto_corrections\"");
  cmd->add_option("--rules", post.rules, "Rules to run, in order")
      ->delimiter(',')
      ->check(CLI::IsMember({"full_component_expansion", "article_fix",
                             "punctuation_absorption"}));
  cmd->add_option("--lexicon", post.lexicon, "Article list, one per line");
  cmd->add_flag("--exclude-punctuation", post.exclude_punctuation,
                "Expanded full components leave edge punctuation out");
  cmd->add_option("--jobs", post.jobs, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  AddIobFlags(cmd, &post.iob);
  cmd->callback([&] { action = [&] { RunPostprocess(post); }; });

  EvalArgs eval;
  cmd = app.add_subcommand("eval", "Score predictions against gold");
  cmd->add_option("--gold", eval.gold, "Gold corpus (CoNLL)");
  cmd->add_option("--pred", eval.pred, "[name=]predictions.conll; repeat to compare")
      ->allow_extra_args(false);
  cmd->add_option("--mode", eval.mode, "token or span")
      ->capture_default_str()
      ->check(CLI::IsMember({"token", "span"}));
  cmd->add_option("--gold-relations", eval.gold_relations, "Gold relation file");
  cmd->add_option("--pred-labels", eval.pred_labels, "Predicted labels, one per line");
  cmd->add_option("--out", eval.out, "JSON report (default stdout)");
  AddIobFlags(cmd, &eval.iob);
  cmd->callback([&] { action = [&] { RunEval(eval, out); }; });

  MergeArgs merge;
  cmd = app.add_subcommand("merge", "Merge corpora and shuffle documents");
  cmd->add_option("--corpus", merge.corpora, "[name=]path.conll")
      ->required()
      ->allow_extra_args(false);
  cmd->add_option("--seed", merge.seed, "Shuffle seed (default $ARGPROJ_SEED or 0)");
  cmd->add_option("--name", merge.name, "Merged corpus name")->capture_default_str();
  cmd->add_option("--out", merge.out, "Merged corpus (CoNLL)")->required();
  AddIobFlags(cmd, &merge.iob);
  cmd->callback([&] { action = [&] { RunMerge(merge); }; });

  ExportRelationsArgs export_relations;
  cmd = app.add_subcommand("export-relations", "Concatenate relation files");
  cmd->add_option("--in", export_relations.inputs, "Relation file")
      ->required()
      ->allow_extra_args(false);
  cmd->add_option("--out", export_relations.out, "Output file")->required();
  cmd->add_option("--report", export_relations.report, "Label counts (JSON)");
  cmd->callback([&] { action = [&] { RunExportRelations(export_relations); }; });

  ServeArgs serve;
  cmd = app.add_subcommand("serve", "Serve a review session over HTTP");
  cmd->add_option("--session", serve.session, "Session directory")->required();
  cmd->add_option("--port", serve.port, "Port; 0 picks a free one")
      ->capture_default_str()
      ->check(CLI::Range(0, 65535));
  cmd->add_option("--host", serve.host, "Bind address")->capture_default_str();
  cmd->add_option("--token", serve.token, "Require X-Argproj-Token");
  cmd->add_option("--src", serve.src, "Source corpus, to create a session");
  cmd->add_option("--tgt", serve.tgt, "Target corpus, to create a session");
  cmd->add_flag("--include-full-components", serve.include_full_components,
                "Queue source full-component sentences too");
  cmd->add_option("--class", serve.classes, "Queue only this class; repeatable")
      ->allow_extra_args(false)
      ->check(CLI::IsMember({"full_O", "full_component", "partial"}));
  cmd->add_option("--snapshot-every", serve.snapshot_every,
                  "Compact the journal after this many events")
      ->capture_default_str();
  AddIobFlags(cmd, &serve.iob);
  cmd->callback([&] { action = [&] { RunServe(serve, out); }; });

  // CLI11 wants argv in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    action();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    for (const CLI::App* sub : app.get_subcommands()) out << sub->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "argproj: " << e.what() << "\n\n";
    const std::vector<CLI::App*> subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "argproj: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace argproj
