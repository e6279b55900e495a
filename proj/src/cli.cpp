// Copyright 2026 The tweetpiece Authors
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

#include "tweetpiece/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tweetpiece/corpus_io.hpp"
#include "tweetpiece/finetune.hpp"
#include "tweetpiece/length_bench.hpp"
#include "tweetpiece/metrics.hpp"
#include "tweetpiece/mlm.hpp"
#include "tweetpiece/normalizer.hpp"
#include "tweetpiece/trainer.hpp"
#include "tweetpiece/unicode.hpp"
#include "tweetpiece/unigram.hpp"

namespace tweetpiece {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path);
  return out;
}

CaseMode require_mode(const std::string& name) {
  auto mode = parse_case_mode(name);
  if (!mode) {
    throw CLI::ValidationError("--mode", "expected cased, uncased or deacc");
  }
  return *mode;
}

NormalizationConfig config_for(const std::string& mode_name,
                               const std::string& dict_path,
                               const std::string& emoji_path,
                               bool preserve_enye) {
  NormalizationConfig config = NormalizationConfig::defaults(require_mode(mode_name));
  config.preserve_enye = preserve_enye;
  if (!dict_path.empty()) config.hashtag_dictionary = read_word_dictionary(dict_path);
  if (!emoji_path.empty()) config.emoji_table = read_emoji_table(emoji_path);
  return config;
}

// Normalization config matching a model's recorded mode; identity when the
// model carries no mode tag.
std::optional<NormalizationConfig> config_for_model(const UnigramModel& model) {
  auto mode = parse_case_mode(model.mode_tag());
  if (!mode) return std::nullopt;
  return NormalizationConfig::defaults(*mode);
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string basename_no_ext(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

struct CommonInput {
  std::string input;
  std::string format = "plain";
  std::string field = "text";

  void attach(CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--input", input, "input corpus path");
    if (required) opt->required();
    sub->add_option("--format", format, "input format: plain or jsonl")
        ->check(CLI::IsMember({"plain", "jsonl"}));
    sub->add_option("--field", field, "JSONL text field name");
  }

  CorpusReader reader() const {
    return CorpusReader(input, parse_corpus_format(format), field);
  }
};

int cmd_normalize(const CommonInput& in, const std::string& output,
                  const std::string& mode_name, const std::string& dict_path,
                  const std::string& emoji_path, bool preserve_enye) {
  const NormalizationConfig config =
      config_for(mode_name, dict_path, emoji_path, preserve_enye);
  CorpusReader reader = in.reader();
  std::ofstream out = open_output(output);
  CorpusRecord record;
  while (reader.next(record)) {
    out << normalize(record.text, config).text << '\n';
  }
  return 0;
}

int cmd_train(const CommonInput& in, const std::string& out_path,
              const std::string& mode_name, TokenizerTrainConfig train_config,
              bool pre_normalized) {
  const NormalizationConfig norm_config =
      NormalizationConfig::defaults(require_mode(mode_name));
  train_config.mode_tag = mode_name;

  CorpusReader reader = in.reader();
  std::vector<std::string> corpus;
  CorpusRecord record;
  while (reader.next(record)) {
    corpus.push_back(pre_normalized ? std::move(record.text)
                                    : normalize(record.text, norm_config).text);
  }
  const UnigramModel model = train_unigram(corpus, train_config);
  model.save(out_path);
  return 0;
}

int cmd_encode(const CommonInput& in, const std::string& model_path,
               const std::string& output, bool raw) {
  const UnigramModel model = UnigramModel::load(model_path);
  const auto norm_config = config_for_model(model);
  CorpusReader reader = in.reader();
  std::ofstream out = open_output(output);
  CorpusRecord record;
  while (reader.next(record)) {
    const std::string text = (raw || !norm_config)
                                 ? record.text
                                 : normalize(record.text, *norm_config).text;
    const std::vector<int> ids = model.encode(text);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i > 0) out << ' ';
      out << ids[i];
    }
    out << '\n';
  }
  return 0;
}

int cmd_decode(const std::string& model_path, const std::string& input,
               const std::string& output) {
  const UnigramModel model = UnigramModel::load(model_path);
  std::ifstream in(input, std::ios::binary);
  if (!in) throw DataError("cannot open input file: " + input);
  std::ofstream out = open_output(output);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<int> ids;
    std::istringstream ss(line);
    long long id;
    while (ss >> id) ids.push_back(static_cast<int>(id));
    if (!ss.eof()) {
      throw DataError(input + ": line " + std::to_string(line_number) +
                      ": expected space-separated ids");
    }
    try {
      out << model.decode(ids) << '\n';
    } catch (const std::out_of_range& e) {
      throw DataError(input + ": line " + std::to_string(line_number) + ": " +
                      e.what());
    }
  }
  return 0;
}

int cmd_mask(const CommonInput& in, const std::string& model_path,
             const std::string& out_path, std::uint64_t seed,
             double mask_probability, int max_seq_length) {
  const UnigramModel model = UnigramModel::load(model_path);
  const auto norm_config = config_for_model(model);
  MaskingConfig config = MaskingConfig::for_model(model, seed);
  config.mask_probability = mask_probability;
  config.max_seq_length = max_seq_length;
  config.validate();

  CorpusReader reader = in.reader();
  std::ofstream out = open_output(out_path);
  CorpusRecord record;
  std::uint64_t example_index = 0;
  while (reader.next(record)) {
    const std::string text =
        norm_config ? normalize(record.text, *norm_config).text : record.text;
    const std::vector<int> framed = frame_and_truncate(model.encode(text), config);
    const MaskedExample example = build_example(framed, config, example_index++);
    nlohmann::json j;
    j["input_ids"] = example.input_ids;
    j["labels"] = example.labels;
    j["mask_positions"] = example.mask_positions;
    out << j.dump() << '\n';
  }
  return 0;
}

int cmd_schedule(const std::string& kind, long long total, long long step,
                 bool has_step, long long stride, double peak_lr,
                 double warmup_fraction, long long warmup_steps,
                 const std::string& output) {
  FinetuneConfig fine;
  PretrainConfig pre;
  if (peak_lr > 0) {
    fine.peak_lr = peak_lr;
    pre.peak_lr = peak_lr;
  }
  fine.warmup_fraction = warmup_fraction;
  pre.total_steps = total;
  pre.warmup_steps = warmup_steps >= 0
                         ? warmup_steps
                         : std::llround(0.06 * static_cast<double>(total));

  auto rate_at = [&](long long s) {
    return kind == "triangular" ? triangular_lr(s, total, fine)
                                : pretrain_lr(s, pre);
  };

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!output.empty()) {
    file = open_output(output);
    out = &file;
  }
  char buffer[64];
  *out << "step,rate\n";
  if (has_step) {
    std::snprintf(buffer, sizeof(buffer), "%.12g", rate_at(step));
    *out << step << ',' << buffer << '\n';
    return 0;
  }
  for (long long s = 0; s <= total; s += stride) {
    std::snprintf(buffer, sizeof(buffer), "%.12g", rate_at(s));
    *out << s << ',' << buffer << '\n';
  }
  if ((total % stride) != 0) {
    std::snprintf(buffer, sizeof(buffer), "%.12g", rate_at(total));
    *out << total << ',' << buffer << '\n';
  }
  return 0;
}

int cmd_align(const std::string& model_path, const std::string& input,
              const std::string& output) {
  const UnigramModel model = UnigramModel::load(model_path);
  std::ifstream in(input, std::ios::binary);
  if (!in) throw DataError("cannot open input file: " + input);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!output.empty()) {
    file = open_output(output);
    out = &file;
  }

  const FinetuneConfig config;
  std::vector<std::pair<std::string, int>> words;
  std::vector<std::string> tags;
  std::vector<std::vector<int>> word_ids;

  auto flush_sentence = [&]() {
    if (words.empty()) return;
    // Tags become dense ids for align_labels, then map back for printing.
    std::map<std::string, int> tag_ids;
    for (const auto& t : tags) tag_ids.emplace(t, 0);
    int next_id = 0;
    for (auto& [tag, id] : tag_ids) id = next_id++;
    std::vector<int> labels;
    for (const auto& t : tags) labels.push_back(tag_ids.at(t));
    std::vector<std::string> tag_by_id(tag_ids.size());
    for (const auto& [tag, id] : tag_ids) tag_by_id[static_cast<std::size_t>(id)] = tag;

    const std::vector<int> aligned = align_labels(words, labels, config);
    std::size_t pos = 0;
    for (const auto& ids : word_ids) {
      for (int id : ids) {
        const int label = aligned[pos++];
        *out << model.piece(id) << '\t'
             << (label == config.ignore_label
                     ? std::string("_")
                     : tag_by_id[static_cast<std::size_t>(label)])
             << '\n';
      }
    }
    *out << '\n';
    words.clear();
    tags.clear();
    word_ids.clear();
  };

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush_sentence();
      continue;
    }
    if (!uni::is_valid_utf8(line)) {
      throw DataError(input + ": line " + std::to_string(line_number) +
                      ": invalid UTF-8");
    }
    std::istringstream ss(line);
    std::string token, tag;
    ss >> token >> tag;
    if (token.empty() || tag.empty()) {
      throw DataError(input + ": line " + std::to_string(line_number) +
                      ": expected 'token tag'");
    }
    // Words after the first are encoded with their word boundary.
    const std::string encoded_form = words.empty() ? token : " " + token;
    std::vector<int> ids = model.encode(encoded_form);
    if (ids.empty()) ids.push_back(model.unk_id());
    words.emplace_back(token, static_cast<int>(ids.size()));
    tags.push_back(tag);
    word_ids.push_back(std::move(ids));
  }
  flush_sentence();
  return 0;
}

std::vector<std::string> read_label_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

int cmd_score(const std::string& gold_path, const std::string& pred_path,
              const std::string& labels_path, const std::string& output) {
  const std::vector<std::string> gold = read_label_lines(gold_path);
  const std::vector<std::string> pred = read_label_lines(pred_path);
  const std::vector<std::string> labels = read_label_lines(labels_path);
  MetricReport report;
  try {
    report = classification_metrics(gold, pred, labels);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  if (output.empty()) {
    std::cout << report.to_json() << '\n';
  } else {
    open_output(output) << report.to_json() << '\n';
  }
  return 0;
}

int cmd_aggregate(const std::string& scores_csv) {
  std::vector<double> scores;
  for (const std::string& item : split_list(scores_csv)) {
    try {
      scores.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw DataError("not a number: " + item);
    }
  }
  if (scores.empty()) throw DataError("no scores given");
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1f", benchmark_score(scores));
  std::cout << buffer << '\n';
  return 0;
}

int cmd_bench(const CommonInput& in, const std::string& models_csv,
              const std::string& out_path) {
  const std::vector<std::string> model_paths = split_list(models_csv);
  if (model_paths.empty()) throw DataError("no models given");

  std::vector<std::string> corpus;
  {
    CorpusReader reader = in.reader();
    CorpusRecord record;
    while (reader.next(record)) corpus.push_back(std::move(record.text));
  }

  std::vector<UnigramModel> models;
  std::vector<const UnigramModel*> model_ptrs;
  std::vector<NormalizationConfig> configs;
  std::vector<std::string> names;
  for (const std::string& path : model_paths) {
    models.push_back(UnigramModel::load(path));
  }
  for (const UnigramModel& model : models) {
    model_ptrs.push_back(&model);
    auto config = config_for_model(model);
    configs.push_back(config ? *config
                             : NormalizationConfig::defaults(CaseMode::cased));
    if (!config) configs.back().mode = CaseMode::cased;
  }
  for (const std::string& path : model_paths) names.push_back(basename_no_ext(path));

  const std::vector<LengthStats> rows = compare_tokenizers(
      corpus, model_ptrs, configs, basename_no_ext(in.input), names);

  std::ofstream out = open_output(out_path);
  out << "corpus,tokenizer,n,mean,std,ci_low,ci_high\n";
  char buffer[256];
  for (const LengthStats& row : rows) {
    std::snprintf(buffer, sizeof(buffer), "%s,%s,%zu,%.6f,%.6f,%.6f,%.6f",
                  row.corpus_name.c_str(), row.tokenizer_name.c_str(), row.n,
                  row.mean, row.std_dev, row.ci_low, row.ci_high);
    out << buffer << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"tweetpiece: tweet normalization, tokenization and MLM data tools"};
  app.require_subcommand(1);
  int exit_code = 0;

  // normalize
  auto* norm = app.add_subcommand("normalize", "normalize a corpus");
  auto norm_in = std::make_shared<CommonInput>();
  norm_in->attach(norm);
  auto norm_out = std::make_shared<std::string>();
  auto norm_mode = std::make_shared<std::string>();
  auto norm_dict = std::make_shared<std::string>();
  auto norm_emoji = std::make_shared<std::string>();
  auto norm_enye = std::make_shared<bool>(false);
  norm->add_option("--mode", *norm_mode, "cased, uncased or deacc")->required();
  norm->add_option("--output", *norm_out, "output path")->required();
  norm->add_option("--dict", *norm_dict, "hashtag segmentation dictionary");
  norm->add_option("--emoji-table", *norm_emoji, "emoji alias table (JSON)");
  norm->add_flag("--preserve-enye", *norm_enye, "keep the tilde of n under deacc");
  norm->callback([=, &exit_code] {
    exit_code = cmd_normalize(*norm_in, *norm_out, *norm_mode, *norm_dict,
                              *norm_emoji, *norm_enye);
  });

  // train-tokenizer
  auto* train = app.add_subcommand("train-tokenizer", "train a unigram tokenizer");
  auto train_in = std::make_shared<CommonInput>();
  train_in->attach(train);
  auto train_out = std::make_shared<std::string>();
  auto train_mode = std::make_shared<std::string>();
  auto train_config = std::make_shared<TokenizerTrainConfig>();
  auto train_prenorm = std::make_shared<bool>(false);
  auto train_no_fallback = std::make_shared<bool>(false);
  train->add_option("--out", *train_out, "model output path")->required();
  train->add_option("--mode", *train_mode, "cased, uncased or deacc")->required();
  train->add_option("--vocab-size", train_config->vocab_size, "vocabulary size");
  train->add_option("--seed-multiplier", train_config->seed_multiplier,
                    "seed vocab = multiplier * vocab-size");
  train->add_option("--max-piece-length", train_config->max_piece_length,
                    "max piece length in code points");
  train->add_option("--em-iterations", train_config->em_iterations_per_round,
                    "EM iterations per pruning round");
  train->add_option("--shrink-factor", train_config->shrink_factor,
                    "per-round vocabulary shrink factor");
  train->add_option("--coverage", train_config->required_chars_coverage,
                    "required character coverage");
  train->add_flag("--no-char-fallback", *train_no_fallback,
                  "map rare characters to unk instead of keeping them");
  train->add_flag("--pre-normalized", *train_prenorm,
                  "input is already normalized");
  train->callback([=, &exit_code] {
    train_config->char_fallback = !*train_no_fallback;
    exit_code = cmd_train(*train_in, *train_out, *train_mode, *train_config,
                          *train_prenorm);
  });

  // encode
  auto* enc = app.add_subcommand("encode", "encode text to ids");
  auto enc_in = std::make_shared<CommonInput>();
  enc_in->attach(enc);
  auto enc_model = std::make_shared<std::string>();
  auto enc_out = std::make_shared<std::string>();
  auto enc_raw = std::make_shared<bool>(false);
  enc->add_option("--model", *enc_model, "model path")->required();
  enc->add_option("--output", *enc_out, "output path")->required();
  enc->add_flag("--raw", *enc_raw, "skip normalization before encoding");
  enc->callback([=, &exit_code] {
    exit_code = cmd_encode(*enc_in, *enc_model, *enc_out, *enc_raw);
  });

  // decode
  auto* dec = app.add_subcommand("decode", "decode ids to text");
  auto dec_model = std::make_shared<std::string>();
  auto dec_in = std::make_shared<std::string>();
  auto dec_out = std::make_shared<std::string>();
  dec->add_option("--model", *dec_model, "model path")->required();
  dec->add_option("--input", *dec_in, "input path (ids per line)")->required();
  dec->add_option("--output", *dec_out, "output path")->required();
  dec->callback([=, &exit_code] {
    exit_code = cmd_decode(*dec_model, *dec_in, *dec_out);
  });

  // mask
  auto* mask = app.add_subcommand("mask", "build masked-LM examples");
  auto mask_in = std::make_shared<CommonInput>();
  mask_in->attach(mask);
  auto mask_model = std::make_shared<std::string>();
  auto mask_out = std::make_shared<std::string>();
  auto mask_seed = std::make_shared<std::uint64_t>(0);
  auto mask_prob = std::make_shared<double>(0.15);
  auto mask_len = std::make_shared<int>(128);
  mask->add_option("--model", *mask_model, "model path")->required();
  mask->add_option("--out", *mask_out, "output JSONL path")->required();
  mask->add_option("--seed", *mask_seed, "rng seed")->required();
  mask->add_option("--mask-probability", *mask_prob, "masking probability");
  mask->add_option("--max-seq-length", *mask_len, "max sequence length");
  mask->callback([=, &exit_code] {
    exit_code = cmd_mask(*mask_in, *mask_model, *mask_out, *mask_seed,
                         *mask_prob, *mask_len);
  });

  // schedule
  auto* sched = app.add_subcommand("schedule", "print a learning-rate schedule");
  auto sched_kind = std::make_shared<std::string>();
  auto sched_total = std::make_shared<long long>(0);
  auto sched_step = std::make_shared<long long>(0);
  auto sched_stride = std::make_shared<long long>(1);
  auto sched_peak = std::make_shared<double>(0.0);
  auto sched_warm_frac = std::make_shared<double>(0.10);
  auto sched_warm_steps = std::make_shared<long long>(-1);
  auto sched_out = std::make_shared<std::string>();
  sched->add_option("--kind", *sched_kind, "triangular or pretrain")
      ->required()
      ->check(CLI::IsMember({"triangular", "pretrain"}));
  sched->add_option("--total", *sched_total, "total steps")->required();
  auto* step_opt = sched->add_option("--step", *sched_step, "print one step only");
  sched->add_option("--stride", *sched_stride, "grid stride")->check(CLI::PositiveNumber);
  sched->add_option("--peak-lr", *sched_peak, "peak learning rate");
  sched->add_option("--warmup-fraction", *sched_warm_frac,
                    "triangular warmup fraction");
  sched->add_option("--warmup-steps", *sched_warm_steps, "pretrain warmup steps");
  sched->add_option("--output", *sched_out, "output path (default stdout)");
  sched->callback([=, &exit_code] {
    exit_code = cmd_schedule(*sched_kind, *sched_total, *sched_step,
                             step_opt->count() > 0, *sched_stride, *sched_peak,
                             *sched_warm_frac, *sched_warm_steps, *sched_out);
  });

  // align
  auto* align = app.add_subcommand("align", "first-sub-word label alignment");
  auto align_model = std::make_shared<std::string>();
  auto align_in = std::make_shared<std::string>();
  auto align_out = std::make_shared<std::string>();
  align->add_option("--model", *align_model, "model path")->required();
  align->add_option("--input", *align_in, "CoNLL-style token/tag file")->required();
  align->add_option("--output", *align_out, "output path (default stdout)");
  align->callback([=, &exit_code] {
    exit_code = cmd_align(*align_model, *align_in, *align_out);
  });

  // score
  auto* score = app.add_subcommand("score", "classification metrics");
  auto score_gold = std::make_shared<std::string>();
  auto score_pred = std::make_shared<std::string>();
  auto score_labels = std::make_shared<std::string>();
  auto score_out = std::make_shared<std::string>();
  score->add_option("--gold", *score_gold, "gold labels, one per line")->required();
  score->add_option("--pred", *score_pred, "predicted labels")->required();
  score->add_option("--labels", *score_labels, "label set")->required();
  score->add_option("--output", *score_out, "output path (default stdout)");
  score->callback([=, &exit_code] {
    exit_code = cmd_score(*score_gold, *score_pred, *score_labels, *score_out);
  });

  // aggregate
  auto* agg = app.add_subcommand("aggregate", "benchmark score over task scores");
  auto agg_scores = std::make_shared<std::string>();
  agg->add_option("--scores", *agg_scores, "comma-separated task scores")
      ->required();
  agg->callback([=, &exit_code] { exit_code = cmd_aggregate(*agg_scores); });

  // bench
  auto* bench = app.add_subcommand("bench", "tokens-per-instance benchmark");
  auto bench_in = std::make_shared<CommonInput>();
  bench_in->attach(bench, /*required=*/false);
  auto bench_corpus = std::make_shared<std::string>();
  auto bench_models = std::make_shared<std::string>();
  auto bench_out = std::make_shared<std::string>();
  bench->add_option("--corpus", *bench_corpus, "corpus path (alias of --input)");
  bench->add_option("--models", *bench_models, "comma-separated model paths")
      ->required();
  bench->add_option("--out", *bench_out, "output CSV path")->required();
  bench->callback([=, &exit_code] {
    CommonInput in = *bench_in;
    if (in.input.empty()) in.input = *bench_corpus;
    if (in.input.empty()) {
      throw CLI::ValidationError("--corpus", "a corpus path is required");
    }
    exit_code = cmd_bench(in, *bench_models, *bench_out);
  });

  try {
    std::vector<const char*> argv;
    argv.push_back("tweetpiece");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

}  // namespace tweetpiece
