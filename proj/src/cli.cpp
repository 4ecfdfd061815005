#include "heegaard/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "heegaard/diagram.hpp"
#include "heegaard/errors.hpp"
#include "heegaard/io.hpp"
#include "heegaard/oracle.hpp"
#include "heegaard/pants.hpp"
#include "heegaard/twist.hpp"

namespace heegaard {
namespace {

namespace fs = std::filesystem;

struct GlobalOptions {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string out;
  bool record = false;
  std::string record_dir = ".heegaard-runs";
};

// What a command produced: the document printed to stdout and any files.
struct CommandOutput {
  int exit_code = kExitOk;
  std::string stdout_text;
  std::vector<std::pair<fs::path, std::string>> files;
};

std::string render(const GlobalOptions& opts, const Json& doc, const std::string& text) {
  return opts.format == "text" ? text : format_json(doc);
}

std::string matrix_text(const Gf2Matrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "  ";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (m.at(r, c) ? '1' : '0');
    out << "\n";
  }
  return out.str();
}

CommandOutput cmd_check(const GlobalOptions& opts, const std::string& file) {
  const auto doc = diagram_document_from_json(read_json_file(file));
  const Gf2Matrix matrix = std::holds_alternative<HeegaardDiagram>(doc)
                               ? parity_matrix(std::get<HeegaardDiagram>(doc))
                               : std::get<MatrixOnlyDiagram>(doc).parity;
  const auto cert = certify_parity_matrix(matrix);
  const auto json = certificate_to_json(cert, matrix);

  CommandOutput out;
  out.exit_code = cert.certified() ? kExitOk : kExitNegative;
  out.stdout_text = render(opts, json, certificate_message(cert) + "\nparity matrix:\n" + matrix_text(matrix));
  if (!opts.out.empty()) out.files.emplace_back(opts.out, format_json(json));
  return out;
}

CommandOutput cmd_evenize(const GlobalOptions& opts, const std::string& file, const std::string& final_path,
                          bool trajectory) {
  const auto diagram = diagram_from_json(read_json_file(file));
  const auto result = evenize(diagram);
  const auto initial_rank = rank(result.sequence.initial_matrix);
  const auto cert = check_even_parity(result.diagram);

  const auto sequence_json = sequence_to_json(result.sequence, trajectory);
  const auto final_json = diagram_to_json(result.diagram);
  Json summary;
  summary["steps"] = result.sequence.steps.size();
  summary["initial_rank"] = initial_rank;
  summary["certificate"] = certificate_to_json(cert, result.sequence.final_matrix);
  summary["twist_sequence"] = sequence_json;
  summary["final_diagram"] = final_json;

  std::ostringstream text;
  text << "steps: " << result.sequence.steps.size() << "\ninitial rank: " << initial_rank << "\n";
  for (const auto& step : result.sequence.steps) {
    text << "  stage " << step.stage << ": pivot (" << step.pivot.first + 1 << ", " << step.pivot.second + 1
         << "), gamma = [";
    for (int b : step.gamma.to_bits()) text << b;
    text << "]\n";
  }
  text << certificate_message(cert) << "\n";

  CommandOutput out;
  out.exit_code = cert.certified() ? kExitOk : kExitNegative;
  out.stdout_text = render(opts, summary, text.str());
  if (!opts.out.empty()) {
    out.files.emplace_back(opts.out, format_json(sequence_json));
  }
  fs::path final_file = final_path;
  if (final_file.empty() && !opts.out.empty()) {
    final_file = fs::path(opts.out).replace_extension(".final.json");
  }
  if (!final_file.empty()) out.files.emplace_back(final_file, format_json(final_json));
  return out;
}

CommandOutput cmd_pants_propagate(const GlobalOptions& opts, const std::string& file, const std::string& dot) {
  const auto doc = pants_from_json(read_json_file(file));
  const auto result = color_propagate(doc.graph, doc.coloring);
  const auto json = propagation_to_json(doc.graph, doc.coloring, result);

  std::ostringstream text;
  text << (result.all_red() ? "all curves red" : "fixpoint is not all red") << " after " << result.trace.size()
       << " firings\n";
  for (const auto& f : result.trace) {
    text << "  stage " << f.stage << ": edge " << f.edge + 1 << " at pants " << f.vertex + 1 << "\n";
  }

  CommandOutput out;
  out.exit_code = result.all_red() ? kExitOk : kExitNegative;
  out.stdout_text = render(opts, json, text.str());
  if (!opts.out.empty()) out.files.emplace_back(opts.out, format_json(json));
  if (!dot.empty()) out.files.emplace_back(dot, pants_to_dot(doc.graph, doc.coloring, result));
  return out;
}

CommandOutput cmd_pants_complete(const GlobalOptions& opts, const std::string& file) {
  const auto doc = pants_from_json(read_json_file(file));
  if (!doc.red_parities) throw InputError("graph file has no red_parities");
  const auto parities = parity_complete(doc.graph, doc.coloring, *doc.red_parities);
  const auto json = completion_to_json(doc.graph, doc.coloring, parities);

  std::ostringstream text;
  for (std::size_t e = 0; e < parities.size(); ++e) {
    text << "edge " << e + 1 << " (" << (doc.coloring[e] == EdgeColor::Red ? "red" : "blue")
         << "): " << parities[e] << "\n";
  }
  CommandOutput out;
  out.stdout_text = render(opts, json, text.str());
  if (!opts.out.empty()) out.files.emplace_back(opts.out, format_json(json));
  return out;
}

CommandOutput cmd_random(const GlobalOptions& opts, int genus, const std::string& kind) {
  if (genus < 2 || genus > kMaxGenus) {
    throw InputError("--genus must be in [2, " + std::to_string(kMaxGenus) + "]");
  }
  Json json;
  if (kind == "graph") {
    auto [graph, coloring] = random_pants(genus, opts.seed);
    json = pants_to_json(PantsDocument{std::move(graph), std::move(coloring), std::nullopt});
  } else {
    json = diagram_to_json(random_diagram(genus, opts.seed));
  }
  CommandOutput out;
  out.stdout_text = format_json(json);
  if (!opts.out.empty()) out.files.emplace_back(opts.out, out.stdout_text);
  return out;
}

CommandOutput cmd_selftest(const GlobalOptions& opts, std::size_t trials, const std::string& mutate) {
  PropertySuiteOptions suite;
  if (mutate == "transvection") suite.transvection = corrupted_transvection;
  const auto report = property_suite(opts.seed, trials, suite);
  const auto json = report_to_json(report);

  std::ostringstream text;
  for (const auto& c : report.counters) {
    text << std::left << std::setw(28) << c.name << " runs " << std::setw(7) << c.runs << " failures "
         << c.failures << "\n";
  }
  for (const auto& f : report.failures) text << "FAIL " << f.check << ": " << f.counterexample << "\n";
  text << (report.passed() ? "selftest passed" : "selftest FAILED") << "\n";

  CommandOutput out;
  out.exit_code = report.passed() ? kExitOk : kExitNegative;
  out.stdout_text = render(opts, json, text.str());
  if (!opts.out.empty()) out.files.emplace_back(opts.out, format_json(json));
  return out;
}

// Arguments that identify the run; the record flags themselves are excluded.
std::vector<std::string> identifying_args(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--record") continue;
    if (args[k] == "--record-dir") {
      ++k;
      continue;
    }
    if (args[k].rfind("--record-dir=", 0) == 0) continue;
    out.push_back(args[k]);
  }
  return out;
}

void write_record(const GlobalOptions& opts, const std::vector<std::string>& args, const std::string& input_file,
                  const CommandOutput& output, std::int64_t micros) {
  const auto command = identifying_args(args);
  Json input_digest = nullptr;
  std::string digest_source;
  for (const auto& a : command) digest_source += a + '\0';
  if (!input_file.empty()) {
    const auto digest = sha256_hex(read_text_file(input_file));
    input_digest = digest;
    digest_source += digest;
  }
  const auto run_digest = sha256_hex(digest_source);

  Json files = Json::object();
  for (const auto& [path, contents] : output.files) files[path.string()] = contents;
  Json record;
  record["command"] = command;
  record["input_digest"] = input_digest;
  record["seed"] = opts.seed;
  record["exit_code"] = output.exit_code;
  record["outputs"] = {{"stdout", output.stdout_text}, {"files", files}};
  record["timing_us"] = micros;
  write_text_file(fs::path(opts.record_dir) / run_digest / "record.json", format_json(record));
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int k = 0; k < length; ++k) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[k]};
  return hex.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Even parity certificates and Dehn-twist evenization for Heegaard diagrams", "heegaard"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opts.seed, "Seed for generators and the self test");
  app.add_option("--out", opts.out, "Write the command's JSON result to this path");
  app.add_flag("--record", opts.record, "Persist a run record under the record directory");
  app.add_option("--record-dir", opts.record_dir, "Directory for run records");

  std::string input;
  std::string final_path;
  std::string dot_path;
  std::string kind = "diagram";
  std::string mutate;
  bool trajectory = false;
  int genus = 0;
  std::size_t trials = 1000;

  auto* check = app.add_subcommand("check", "Certify a diagram by the even parity condition");
  check->add_option("file", input, "Diagram JSON")->required();

  auto* even = app.add_subcommand("evenize", "Twist the D-system until the parity matrix vanishes");
  even->add_option("file", input, "Diagram JSON")->required();
  even->add_option("--final", final_path, "Where to write the final diagram");
  even->add_flag("--trajectory", trajectory, "Include the parity matrix after every step");

  auto* pants = app.add_subcommand("pants", "Pants graph operations");
  pants->require_subcommand(1);
  auto* propagate = pants->add_subcommand("propagate", "Run color propagation to its fixpoint");
  propagate->add_option("file", input, "Graph JSON")->required();
  propagate->add_option("--dot", dot_path, "Write a DOT rendering");
  auto* complete = pants->add_subcommand("complete", "Extend red parities to the blue edges");
  complete->add_option("file", input, "Graph JSON")->required();

  auto* random = app.add_subcommand("random", "Generate a random diagram or pants graph");
  random->add_option("--genus", genus, "Genus")->required();
  random->add_option("--kind", kind, "What to generate")->check(CLI::IsMember({"diagram", "graph"}));

  auto* selftest = app.add_subcommand("selftest", "Run the randomized property suite");
  selftest->add_option("--trials", trials, "Number of trials");
  selftest->add_option("--mutate", mutate)->check(CLI::IsMember({"transvection"}))->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  CommandOutput result;
  try {
    if (check->parsed()) {
      result = cmd_check(opts, input);
    } else if (even->parsed()) {
      result = cmd_evenize(opts, input, final_path, trajectory);
    } else if (propagate->parsed()) {
      result = cmd_pants_propagate(opts, input, dot_path);
    } else if (complete->parsed()) {
      result = cmd_pants_complete(opts, input);
    } else if (random->parsed()) {
      result = cmd_random(opts, genus, kind);
    } else if (selftest->parsed()) {
      result = cmd_selftest(opts, trials, mutate);
    }
    for (const auto& [path, contents] : result.files) write_text_file(path, contents);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  const auto micros =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();

  out << result.stdout_text;
  if (opts.record) write_record(opts, args, input, result, micros);
  return result.exit_code;
}

}  // namespace heegaard
