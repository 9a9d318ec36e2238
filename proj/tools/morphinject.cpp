// morphinject: batch front end for the morphology injection pipeline.
// Subcommands mirror the pipeline stages: classify, inflect, join, extract,
// build-dict, inject, simulate. Diagnostics go to stderr; data only on
// stdout / output files. Exit code 0 iff no line-level errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "morphinject/dictgen.hpp"
#include "morphinject/errors.hpp"
#include "morphinject/extract.hpp"
#include "morphinject/oov.hpp"
#include "morphinject/profile.hpp"

namespace fs = std::filesystem;
using namespace morphinject;

namespace {

struct Options {
  std::string profile = "hi";
  std::string profile_base = "data";
  std::string lexicon, verb_lexicon, bilingual, paradigm, rules;
  std::string corpus_src, corpus_tgt, align, parsed, dict, test, freq;
  std::string mode = "factored";
  std::string scheme = "noun";
  int min_count = 0;
  size_t width = 0;
  size_t target_width = 0;
  std::string out, out_src, out_tgt, out_align;
  bool json = false;
};

LanguageProfile load_profile(const Options& opt) {
  LanguageProfile p;
  try {
    p = LanguageProfile::resolve(opt.profile, opt.profile_base);
  } catch (const MorphError& e) {
    // Built-in defaults still serve subcommands whose inputs all arrive via
    // explicit flags.
    std::cerr << "morphinject: " << e.what() << "; using built-in defaults\n";
  }
  // Explicit flags win over profile files.
  if (!opt.rules.empty()) p.joiner = Joiner::load(opt.rules);
  if (!opt.lexicon.empty()) p.noun_lexicon = load_noun_lexicon(opt.lexicon);
  if (!opt.verb_lexicon.empty()) p.verb_lexicon = load_verb_lexicon(opt.verb_lexicon);
  if (!opt.paradigm.empty()) p.verb_paradigm = VerbParadigmTable::load(opt.paradigm);
  if (!opt.bilingual.empty()) p.bilingual = load_bilingual(opt.bilingual);
  return p;
}

InjectMode parse_mode(const std::string& mode) {
  if (mode == "factored") return InjectMode::Factored;
  if (mode == "surface") return InjectMode::Surface;
  throw ArgumentError("unknown mode '" + mode + "' (expected factored|surface)");
}

FactorScheme parse_scheme(const std::string& scheme) {
  if (scheme == "noun") return FactorScheme::Noun;
  if (scheme == "verb") return FactorScheme::Verb;
  if (scheme == "noun-verb") return FactorScheme::NounVerb;
  throw ArgumentError("unknown scheme '" + scheme + "' (expected noun|verb|noun-verb)");
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw ParseError("cannot write output file: " + path);
  return file;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write output file: " + path);
  for (const auto& line : lines) out << line << '\n';
}

int cmd_classify(const Options& opt) {
  if (opt.lexicon.empty())
    throw ArgumentError("classify: --lexicon is required");
  std::ifstream in(opt.lexicon);
  if (!in) throw ParseError("cannot open noun lexicon: " + opt.lexicon);
  std::ofstream file;
  std::ostream& out = open_out(opt.out, file);
  std::string line;
  size_t lineno = 0;
  int errors = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      NounLexEntry entry = parse_noun_lexicon_line(line);
      out << entry.root << '\t' << to_string(classify(entry)) << '\n';
    } catch (const MorphError& e) {
      std::cerr << opt.lexicon << ":" << lineno << ": " << e.what() << '\n';
      ++errors;
    }
  }
  return errors ? 1 : 0;
}

int cmd_inflect(const Options& opt, const std::vector<std::string>& args) {
  LanguageProfile profile = load_profile(opt);
  std::vector<NounLexEntry> entries;
  if (!args.empty()) {
    if (args.size() != 3)
      throw ArgumentError("inflect: expected ROOT GENDER COUNTABILITY (or --lexicon)");
    entries.push_back(
        parse_noun_lexicon_line(args[0] + "\t" + args[1] + "\t" + args[2]));
  } else if (!opt.lexicon.empty()) {
    entries = load_noun_lexicon(opt.lexicon);
  } else {
    entries = profile.noun_lexicon;
  }
  std::ofstream file;
  std::ostream& out = open_out(opt.out, file);
  int errors = 0;
  for (const auto& entry : entries) {
    std::string source = profile.bilingual.count(entry.root)
                             ? profile.bilingual.at(entry.root)
                             : entry.root;
    try {
      for (const auto& rec : noun_paradigm({source, entry}, profile.joiner)) {
        out << rec.source_factors[0] << '\t' << rec.source_factors[1] << '\t'
            << rec.target_surface << '\t' << rec.target_root << '\t'
            << rec.target_suffix.render() << '\n';
      }
    } catch (const MorphError& e) {
      std::cerr << "inflect: " << e.what() << '\n';
      ++errors;
    }
  }
  return errors ? 1 : 0;
}

int cmd_join(const Options& opt, const std::vector<std::string>& args) {
  LanguageProfile profile = load_profile(opt);
  if (args.size() != 2) throw ArgumentError("join: expected ROOT SUFFIX");
  Suffix suffix = args[1] == "null" ? Suffix::null() : Suffix::of(args[1]);
  std::ofstream file;
  std::ostream& out = open_out(opt.out, file);
  out << profile.joiner.join(args[0], suffix) << '\n';
  return 0;
}

int cmd_extract(const Options& opt) {
  LanguageProfile profile = load_profile(opt);
  if (opt.parsed.empty()) throw ArgumentError("extract: --parsed is required");
  FactorScheme scheme = parse_scheme(opt.scheme);
  auto graphs = read_parsed_file(opt.parsed, profile.relation_aliases);
  std::ofstream file;
  std::ostream& out = open_out(opt.out, file);
  for (const auto& graph : graphs)
    out << format_sentence(annotate(graph, scheme)) << '\n';
  return 0;
}

int cmd_build_dict(const Options& opt, const std::string& dict_mode) {
  LanguageProfile profile = load_profile(opt);
  WordFormDictionary dict;
  if (dict_mode == "lexicon") {
    LexiconBuildStats stats;
    auto feature_space = profile.verb_paradigm.feature_space();
    dict = build_from_lexicon(profile.noun_lexicon, profile.verb_lexicon,
                              profile.bilingual, feature_space,
                              profile.verb_paradigm, profile.joiner, &stats);
    for (const auto& msg : stats.messages) std::cerr << "build-dict: " << msg << '\n';
    std::cerr << "build-dict: " << stats.nouns_classified << " nouns classified, "
              << stats.nouns_skipped_no_translation << " without translation, "
              << stats.nouns_skipped_unclassifiable << " unclassifiable\n";
  } else if (dict_mode == "parallel") {
    if (opt.corpus_src.empty() || opt.corpus_tgt.empty() || opt.align.empty())
      throw ArgumentError("build-dict --mode parallel needs --corpus-src, --corpus-tgt, --align");
    auto corpus = load_parallel_corpus(opt.corpus_src, opt.corpus_tgt, opt.align);
    auto pairs = to_aligned_pairs(corpus);
    auto evidence = classify_from_parallel(pairs);
    for (const auto& [key, ev] : evidence)
      if (ev.total == 0)
        std::cerr << "build-dict: pair " << key.first << " - " << key.second
                  << " has no classifiable occurrence, skipped\n";
    dict = build_from_parallel(pairs, evidence, profile.joiner);
  } else {
    throw ArgumentError("build-dict: --mode must be lexicon or parallel");
  }
  if (!opt.freq.empty() || opt.min_count > 0) {
    std::map<std::string, int> freq;
    if (!opt.freq.empty()) freq = load_frequencies(opt.freq);
    dict = filter_infrequent(dict, freq, opt.min_count);
  }
  size_t nouns = 0, verbs = 0;
  for (const auto& rec : dict.records) (rec.pos == Pos::Noun ? nouns : verbs) += 1;
  std::cerr << "build-dict: " << dict.records.size() << " records (" << nouns
            << " noun forms, " << verbs << " verb forms)\n";
  std::ofstream file;
  std::ostream& out = open_out(opt.out, file);
  save_dictionary(dict, out);
  return 0;
}

int cmd_inject(const Options& opt) {
  if (opt.corpus_src.empty() || opt.corpus_tgt.empty() || opt.align.empty())
    throw ArgumentError("inject needs --corpus-src, --corpus-tgt, --align");
  if (opt.dict.empty()) throw ArgumentError("inject: --dict is required");
  auto corpus = load_parallel_corpus(opt.corpus_src, opt.corpus_tgt, opt.align);
  auto dict = load_dictionary(opt.dict);
  auto augmented =
      inject(corpus, dict, parse_mode(opt.mode), opt.width, opt.target_width);
  std::string out_src = opt.out_src.empty() ? opt.corpus_src + ".injected" : opt.out_src;
  std::string out_tgt = opt.out_tgt.empty() ? opt.corpus_tgt + ".injected" : opt.out_tgt;
  std::string out_align = opt.out_align.empty() ? opt.align + ".injected" : opt.out_align;
  write_lines(out_src, augmented.source);
  write_lines(out_tgt, augmented.target);
  write_lines(out_align, augmented.alignment);
  std::cerr << "inject: " << corpus.source.size() << " -> " << augmented.source.size()
            << " lines\n";
  return 0;
}

int cmd_simulate(const Options& opt) {
  if (opt.corpus_src.empty() || opt.corpus_tgt.empty() || opt.align.empty())
    throw ArgumentError("simulate needs --corpus-src, --corpus-tgt, --align");
  if (opt.test.empty()) throw ArgumentError("simulate: --test is required");
  auto corpus = load_parallel_corpus(opt.corpus_src, opt.corpus_tgt, opt.align);
  auto pairs = to_aligned_pairs(corpus);

  std::ifstream test_in(opt.test);
  if (!test_in) throw ParseError("cannot open test file: " + opt.test);
  std::vector<std::vector<FactoredToken>> test;
  std::string line;
  while (std::getline(test_in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) test.push_back(parse_sentence(line));
  }

  WordFormDictionary dict;
  if (!opt.dict.empty()) dict = load_dictionary(opt.dict);
  auto result = simulate(pairs, test, dict, parse_mode(opt.mode));

  std::ofstream file;
  std::ostream& out = open_out(opt.out, file);
  if (opt.json) {
    out << "{\"before\": " << result.before.to_json()
        << ", \"after\": " << result.after.to_json()
        << ", \"reduction\": " << result.reduction.to_json() << "}\n";
  } else {
    out << "before: total " << result.before.total_tokens << ", oov "
        << result.before.oov_tokens << " (translation "
        << result.before.unknown_translation << ", generation "
        << result.before.unknown_generation << ")\n";
    out << "after:  total " << result.after.total_tokens << ", oov "
        << result.after.oov_tokens << " (translation "
        << result.after.unknown_translation << ", generation "
        << result.after.unknown_generation << ")\n";
    out << "oov reduction: " << result.reduction.reduction_percent << "%\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"morphology injection toolkit"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--profile", opt.profile, "language profile id (default hi)");
  app.add_option("--profile-base", opt.profile_base,
                 "profile base directory (overridden by MORPHINJECT_PROFILE_DIR)");

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", opt.lexicon, "noun lexicon TSV");
    cmd->add_option("--verb-lexicon", opt.verb_lexicon, "verb lexicon TSV");
    cmd->add_option("--bilingual", opt.bilingual, "bilingual dictionary TSV");
    cmd->add_option("--paradigm", opt.paradigm, "verb paradigm TSV");
    cmd->add_option("--rules", opt.rules, "joiner rules TSV");
    cmd->add_option("--out", opt.out, "output file (default stdout)");
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify a noun lexicon");
  add_common(classify_cmd);

  auto* inflect_cmd = app.add_subcommand("inflect", "noun paradigm listing");
  add_common(inflect_cmd);
  std::vector<std::string> inflect_args;
  inflect_cmd->add_option("spec", inflect_args, "ROOT GENDER{m,f} COUNTABILITY{count,mass}");

  auto* join_cmd = app.add_subcommand("join", "join a root and a suffix");
  add_common(join_cmd);
  std::vector<std::string> join_args;
  join_cmd->add_option("spec", join_args, "ROOT SUFFIX ('null' for the empty suffix)");

  auto* extract_cmd = app.add_subcommand("extract", "factored corpus from parsed input");
  add_common(extract_cmd);
  extract_cmd->add_option("--parsed", opt.parsed, "dependency-parsed input file");
  extract_cmd->add_option("--scheme", opt.scheme, "factor scheme: noun|verb|noun-verb");

  std::string dict_mode = "lexicon";
  auto* build_cmd = app.add_subcommand("build-dict", "build a word-form dictionary");
  add_common(build_cmd);
  build_cmd->add_option("--mode", dict_mode, "pipeline: lexicon|parallel");
  build_cmd->add_option("--corpus-src", opt.corpus_src, "factored source corpus");
  build_cmd->add_option("--corpus-tgt", opt.corpus_tgt, "factored target corpus");
  build_cmd->add_option("--align", opt.align, "alignment file (i-j pairs, 0-based)");
  build_cmd->add_option("--freq", opt.freq, "target root frequency list TSV");
  build_cmd->add_option("--min-count", opt.min_count, "frequency filter threshold");

  auto* inject_cmd = app.add_subcommand("inject", "augment a training corpus");
  add_common(inject_cmd);
  inject_cmd->add_option("--corpus-src", opt.corpus_src, "source corpus");
  inject_cmd->add_option("--corpus-tgt", opt.corpus_tgt, "target corpus");
  inject_cmd->add_option("--align", opt.align, "alignment file");
  inject_cmd->add_option("--dict", opt.dict, "word-form dictionary file");
  inject_cmd->add_option("--mode", opt.mode, "factored|surface");
  inject_cmd->add_option("--width", opt.width, "source factor width (factored mode)");
  inject_cmd->add_option("--target-width", opt.target_width, "target factor width");
  inject_cmd->add_option("--out-src", opt.out_src, "augmented source output");
  inject_cmd->add_option("--out-tgt", opt.out_tgt, "augmented target output");
  inject_cmd->add_option("--out-align", opt.out_align, "augmented alignment output");

  auto* sim_cmd = app.add_subcommand("simulate", "before/after OOV measurement");
  add_common(sim_cmd);
  sim_cmd->add_option("--corpus-src", opt.corpus_src, "training source corpus");
  sim_cmd->add_option("--corpus-tgt", opt.corpus_tgt, "training target corpus");
  sim_cmd->add_option("--align", opt.align, "training alignment file");
  sim_cmd->add_option("--test", opt.test, "factored test sentences (source side)");
  sim_cmd->add_option("--dict", opt.dict, "word-form dictionary file");
  sim_cmd->add_option("--mode", opt.mode, "factored|surface");
  sim_cmd->add_flag("--json", opt.json, "machine-readable report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) return cmd_classify(opt);
    if (inflect_cmd->parsed()) return cmd_inflect(opt, inflect_args);
    if (join_cmd->parsed()) return cmd_join(opt, join_args);
    if (extract_cmd->parsed()) return cmd_extract(opt);
    if (build_cmd->parsed()) return cmd_build_dict(opt, dict_mode);
    if (inject_cmd->parsed()) return cmd_inject(opt);
    if (sim_cmd->parsed()) return cmd_simulate(opt);
  } catch (const std::exception& e) {
    std::cerr << "morphinject: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
