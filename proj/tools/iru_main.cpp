// iru: replay annotated dialogue transcripts through the grounding engine.
//
//   iru trace FILE [--format text|tabular]
//   iru classify FILE [--format text|tabular]
//   iru check FILE...
//   iru stats DIR [--remote-gap N] [--format text|tabular]
//
// Exit codes: 0 ok, 2 input error, 3 semantic error.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iru/engine.hpp"
#include "iru/error.hpp"
#include "iru/stats.hpp"
#include "iru/trace.hpp"
#include "iru/transcript.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kSemanticError = 3;

void report(const std::filesystem::path& file, const iru::ParseError& e) {
  for (const auto& d : e.diagnostics()) std::cerr << file.string() << ": " << iru::format_diagnostic(d) << '\n';
}

int run_trace(const std::string& path, const std::string& format) {
  try {
    auto transcript = iru::load_transcript(path);
    auto records = iru::replay(transcript);
    std::cout << (format == "tabular" ? iru::write_trace_tabular(records) : iru::write_trace(records));
    return kOk;
  } catch (const iru::ParseError& e) {
    report(path, e);
    return kInputError;
  } catch (const iru::Error& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kSemanticError;
  }
}

int run_classify(const std::string& path, const std::string& format) {
  try {
    auto transcript = iru::load_transcript(path);
    auto records = iru::replay(transcript);
    const char sep = format == "tabular" ? '\t' : ' ';
    if (format == "tabular") std::cout << "event\tturn\tspeaker\tclass\tantecedents\tintonation\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      if (r.iru == iru::IruClass::kNone) continue;
      std::string ants;
      for (const auto& a : r.antecedents) ants += (ants.empty() ? "" : ",") + a.str();
      std::cout << r.event << sep << r.turn << sep << r.speaker << sep << iru::to_string(r.iru) << sep
                << (ants.empty() ? "-" : ants) << sep
                << iru::to_string(transcript.events[i].intonation) << '\n';
    }
    return kOk;
  } catch (const iru::ParseError& e) {
    report(path, e);
    return kInputError;
  } catch (const iru::Error& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kSemanticError;
  }
}

int run_check(const std::vector<std::string>& paths) {
  int status = kOk;
  for (const auto& path : paths) {
    try {
      auto t = iru::load_transcript(path);
      std::cout << path << ": ok (" << t.events.size() << " utterances)\n";
    } catch (const iru::ParseError& e) {
      report(path, e);
      status = kInputError;
    }
  }
  return status;
}

int run_stats(const std::string& dir, std::uint32_t remote_gap, const std::string& format) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    std::cerr << dir << ": not a directory\n";
    return kInputError;
  }
  auto files = iru::list_transcripts(dir);
  if (files.empty()) {
    std::cerr << dir << ": no .dlg transcripts\n";
    return kInputError;
  }
  std::vector<iru::Transcript> corpus;
  int status = kOk;
  for (const auto& f : files) {
    try {
      corpus.push_back(iru::load_transcript(f));
    } catch (const iru::ParseError& e) {
      report(f, e);
      status = kInputError;
    }
  }
  if (status != kOk) return status;
  try {
    iru::StatsOptions options;
    options.remote_gap = remote_gap;
    auto stats = iru::corpus_stats(corpus, options);
    std::cout << iru::render_stats(stats, format == "tabular" ? iru::TableFormat::kTabular
                                                              : iru::TableFormat::kText);
    return kOk;
  } catch (const iru::Error& e) {
    std::cerr << e.what() << '\n';
    return kSemanticError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded mutual belief from informationally redundant utterances"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string file;
  std::vector<std::string> files;
  std::string dir;
  std::uint32_t remote_gap = 1;
  const std::vector<std::string> formats = {"text", "tabular"};

  auto* trace = app.add_subcommand("trace", "Replay a transcript and print the belief-state trace");
  trace->add_option("file", file, "Transcript (.dlg)")->required();
  trace->add_option("--format", format, "text or tabular")->check(CLI::IsMember(formats));

  auto* classify = app.add_subcommand("classify", "List the IRUs in a transcript");
  classify->add_option("file", file, "Transcript (.dlg)")->required();
  classify->add_option("--format", format, "text or tabular")->check(CLI::IsMember(formats));

  auto* check = app.add_subcommand("check", "Parse transcripts without replaying them");
  check->add_option("files", files, "Transcripts (.dlg)")->required();

  auto* stats = app.add_subcommand("stats", "Distributional statistics over a corpus directory");
  stats->add_option("dir", dir, "Directory of .dlg files")->required();
  stats->add_option("--remote-gap", remote_gap, "Antecedents more than N turns back are remote")
      ->check(CLI::PositiveNumber);
  stats->add_option("--format", format, "text or tabular")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (*trace) return run_trace(file, format);
  if (*classify) return run_classify(file, format);
  if (*check) return run_check(files);
  return run_stats(dir, remote_gap, format);
}
