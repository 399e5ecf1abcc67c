// phonotax.cpp
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
//
// Copyright 2026 The phonotax Authors.

// Command-line driver: train a path model, score stimuli, correlate scores
// with judgments, and print frequency tables.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid data or arguments.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "phonotax/error.hpp"
#include "phonotax/mitton.hpp"
#include "phonotax/phonology.hpp"
#include "phonotax/score.hpp"
#include "phonotax/stats.hpp"
#include "phonotax/text.hpp"
#include "phonotax/train.hpp"

namespace fs = std::filesystem;
using namespace phonotax;

namespace {

struct Options {
  std::string inventory = PHONOTAX_DEFAULT_INVENTORY;
  std::string medial_split = "max-onset";
  std::string gt = "simple";
  double epsilon = 1e-9;
  std::size_t top = 10;
  std::uint64_t seed = 1;
  double noise = 1.5;
  std::string out = ".";

  std::string lexicon;
  std::string model;
  std::string stimuli;
  std::string judgments;
  std::string mitton;
};

std::string out_path(const Options& o, const std::string& name) {
  std::error_code ec;
  fs::create_directories(o.out, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create '" + o.out + "'");
  return (fs::path(o.out) / name).string();
}

PhonemeInventory read_inventory(const Options& o) {
  return load_inventory(text::read_file(o.inventory));
}

TrainedModel read_model(const Options& o, const PhonemeInventory& inv) {
  TrainedModel model = load_model(text::read_file(o.model));
  if (model.config().inventory_fingerprint != inv.fingerprint())
    throw Error(ErrorCode::InventoryMismatch,
                "model was trained with a different inventory than '" +
                    o.inventory + "'");
  return model;
}

int cmd_train(const Options& o) {
  if (!(o.epsilon > 0.0 && o.epsilon <= 1e-3))
    throw Error(ErrorCode::InvalidArgument, "--epsilon must lie in (0, 1e-3]");
  const PhonemeInventory inv = read_inventory(o);
  ModelConfig cfg;
  cfg.medial_split = medial_split_from_name(o.medial_split);
  cfg.good_turing = good_turing_mode_from_name(o.gt);
  cfg.epsilon = o.epsilon;
  const std::string lexicon = text::read_file(o.lexicon);
  TrainingResult result = train(lexicon, inv, cfg);
  const std::string path = out_path(o, "model.txt");
  text::write_file(path, save_model(result.model));
  std::cout << format_training_report(result);
  for (const auto& s : result.report.skipped)
    std::cerr << o.lexicon << ":" << s.line << ": skipped ("
              << skip_reason_name(s.reason) << ") " << s.detail << "\n";
  std::cerr << "model written to " << path << "\n";
  return 0;
}

int cmd_score(const Options& o) {
  const PhonemeInventory inv = read_inventory(o);
  const TrainedModel model = read_model(o, inv);
  const auto rows = score_batch(model, inv, text::read_file(o.stimuli));
  if (rows.empty()) std::cerr << "warning: no stimuli in " << o.stimuli << "\n";
  std::cout << format_score_table(rows);
  return 0;
}

int cmd_evaluate(const Options& o) {
  const PhonemeInventory inv = read_inventory(o);
  const TrainedModel model = read_model(o, inv);
  const auto rows = score_batch(model, inv, text::read_file(o.stimuli));
  for (const auto& r : rows)
    if (!r.report) std::cerr << "warning: " << r.word_id << ": " << r.error << "\n";
  const auto judgments = load_judgments(text::read_file(o.judgments));
  const Evaluation ev = evaluate(rows, judgments);
  std::cout << format_significance_table(ev);
  text::write_file(out_path(o, "scatter.csv"), format_scatter_csv(ev));
  text::write_file(out_path(o, "scatter.svg"), render_scatter_svg(ev));
  return 0;
}

int cmd_synth(const Options& o) {
  const PhonemeInventory inv = read_inventory(o);
  const TrainedModel model = read_model(o, inv);
  const auto rows = score_batch(model, inv, text::read_file(o.stimuli));
  const auto judgments = synthetic_judgments(rows, {o.seed, o.noise});
  const std::string path = out_path(o, "judgments.csv");
  text::write_file(path, format_judgments(judgments));
  std::cerr << judgments.size() << " synthetic judgments written to " << path
            << "\n";
  return 0;
}

int cmd_tables(const Options& o) {
  if (o.top == 0) throw Error(ErrorCode::InvalidArgument, "--top must be >= 1");
  const TrainedModel model = load_model(text::read_file(o.model));
  std::cout << format_top_table(model, o.top);
  return 0;
}

int cmd_import(const Options& o) {
  const MittonImport imp = import_mitton(text::read_file(o.mitton));
  const std::string path = out_path(o, "lexicon.tsv");
  text::write_file(path, imp.lexicon);
  for (const auto& issue : imp.issues)
    std::cerr << o.mitton << ":" << issue.line << ": " << issue.detail << "\n";
  std::cout << "mapping: " << kMittonMappingVersion << "\n"
            << "converted: " << imp.converted << "\n"
            << "rejected: " << imp.issues.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positional onset/rhyme path grammar: train, score, evaluate"};
  app.require_subcommand(1);
  Options o;

  auto add_inventory = [&](CLI::App* cmd) {
    cmd->add_option("--inventory", o.inventory, "Phoneme inventory file")
        ->capture_default_str();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
  };

  auto* train_cmd = app.add_subcommand("train", "Train a model from a lexicon");
  train_cmd->add_option("lexicon", o.lexicon, "orthography<TAB>transcription file")
      ->required();
  add_inventory(train_cmd);
  train_cmd->add_option("--medial-split", o.medial_split, "Medial cluster policy")
      ->check(CLI::IsMember({"max-onset", "always-split-cc"}))
      ->capture_default_str();
  train_cmd->add_option("--gt", o.gt, "Good-Turing mode")
      ->check(CLI::IsMember({"simple", "full"}))
      ->capture_default_str();
  train_cmd->add_option("--epsilon", o.epsilon, "Floor for never-observed cells")
      ->capture_default_str();
  add_out(train_cmd);

  auto* score_cmd = app.add_subcommand("score", "Score stimuli (TSV to stdout)");
  score_cmd->add_option("model", o.model)->required();
  score_cmd->add_option("stimuli", o.stimuli)->required();
  add_inventory(score_cmd);

  auto* eval_cmd =
      app.add_subcommand("evaluate", "Correlate scores with judgments");
  eval_cmd->add_option("model", o.model)->required();
  eval_cmd->add_option("stimuli", o.stimuli)->required();
  eval_cmd->add_option("judgments", o.judgments)->required();
  add_inventory(eval_cmd);
  add_out(eval_cmd);

  auto* synth_cmd = app.add_subcommand(
      "synth-judgments", "Write seeded synthetic judgments for stimuli");
  synth_cmd->add_option("model", o.model)->required();
  synth_cmd->add_option("stimuli", o.stimuli)->required();
  add_inventory(synth_cmd);
  synth_cmd->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  synth_cmd->add_option("--noise", o.noise, "Vote noise standard deviation")
      ->capture_default_str();
  add_out(synth_cmd);

  auto* tables_cmd =
      app.add_subcommand("tables", "Most frequent onsets and rhymes per cell");
  tables_cmd->add_option("model", o.model)->required();
  tables_cmd->add_option("--top", o.top, "Rows per column")->capture_default_str();

  auto* import_cmd = app.add_subcommand(
      "import-mitton", "Convert text710.dat to lexicon format");
  import_cmd->add_option("text710", o.mitton)->required();
  add_out(import_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*train_cmd) return cmd_train(o);
    if (*score_cmd) return cmd_score(o);
    if (*eval_cmd) return cmd_evaluate(o);
    if (*synth_cmd) return cmd_synth(o);
    if (*tables_cmd) return cmd_tables(o);
    if (*import_cmd) return cmd_import(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Io ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
