#include "gbsknot/cli.hpp"

#include "gbsknot/classifier.hpp"
#include "gbsknot/dsl.hpp"
#include "gbsknot/error.hpp"
#include "gbsknot/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <thread>

namespace gbsknot::cli {
namespace {

namespace fs = std::filesystem;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Word parse_word(const std::string& text, const std::string& what) {
  try {
    return Word::parse(text);
  } catch (const ParseError& e) {
    throw InputError(what + " '" + text + "': " + e.what());
  }
}

WordEngineOptions word_options() {
  if (const char* raw = std::getenv("GBSKNOT_STEP_BUDGET")) {
    const auto value = parse_integer(raw);
    if (!value || *value <= 0) {
      throw InputError("GBSKNOT_STEP_BUDGET must be a positive integer, got '" + std::string(raw) +
                       "'");
    }
  }
  return WordEngineOptions::from_environment();
}

void print_text(std::ostream& out, const KnotVerdict& v) {
  out << "reduced: " << describe(v.shape) << '\n';
  out << "betti1: " << v.betti1 << '\n';
  out << "abelianization: " << v.abelianization.to_string() << '\n';
  out << "modular: " << name(v.modular.tag) << '\n';
  out << "1-knot: " << name(v.one_knot.status);
  if (v.one_knot.status == Status::Yes) {
    out << ", T(" << v.one_knot.p << "," << v.one_knot.q << ")";
    if (!v.one_knot.both_prime) out << " (labels not both prime)";
  } else {
    out << " (" << v.one_knot.reason << ")";
  }
  out << '\n';
  out << "n-knot (n>=3): " << name(v.n_knot.status);
  if (v.n_knot.status == Status::Yes) {
    out << ", " << name(v.n_knot.source) << " (" << v.n_knot.k << "," << v.n_knot.l << ")";
  } else {
    out << " (" << v.n_knot.reason << ")";
  }
  out << '\n';
  if (v.exceptional) out << "exceptional: " << name(*v.exceptional) << '\n';
  if (v.cycle_check && v.cycle_check->strict != v.cycle_check->lenient) {
    out << "note: signed test " << (v.cycle_check->strict ? "passes" : "fails")
        << ", absolute-value test " << (v.cycle_check->lenient ? "passes" : "fails") << '\n';
  }
}

void print_witness(std::ostream& out, const Witness& w) {
  out << "source: " << w.source << '\n';
  for (const auto& r : w.source_relators) out << "  relator: " << r.to_string() << '\n';
  for (const auto& g : w.source_generators) {
    auto it = w.images.find(g);
    if (it != w.images.end()) out << "  " << g << " -> " << it->second.to_string() << '\n';
  }
  for (const auto& e : w.elimination) {
    out << "  " << e.generator << " = " << e.step_word.to_string() << " = " << e.word.to_string()
        << "  (alpha " << e.alpha << ", beta " << e.beta << ")\n";
  }
  out << "  verified: " << (w.verified ? "yes" : "no") << '\n';
}

std::string describe_error(const std::string& file, const Error& e) {
  return file + ": " + std::string(name(e.code())) + ": " + e.what();
}

Json error_json(const std::string& file, const std::exception& e) {
  Json out;
  out["file"] = file;
  Json error;
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    error["code"] = name(pe->code());
    error["line"] = pe->line();
    error["column"] = pe->column();
  } else if (const auto* ge = dynamic_cast<const Error*>(&e)) {
    error["code"] = name(ge->code());
  } else {
    error["code"] = "Input";
  }
  error["message"] = e.what();
  out["error"] = error;
  return out;
}

struct BatchLine {
  std::string json;
  int status;
};

BatchLine classify_one(const fs::path& path, const ClassifyOptions& options) {
  const std::string file = path.filename().string();
  try {
    const std::string text = read_file(path.string());
    const KnotVerdict v = classify(parse_graph(text), options);
    Json line;
    line["file"] = file;
    const Json full = report(text, v);
    for (const auto& [key, value] : full.items()) line[key] = value;
    return {line.dump(), v.is_knot_group() ? kExitOk : kExitNotKnotGroup};
  } catch (const std::exception& e) {
    return {error_json(file, e).dump(), kExitInputError};
  }
}

int classify_directory(const fs::path& dir, const ClassifyOptions& options, std::ostream& out) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".gbs") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<BatchLine> lines(files.size());
  for (std::size_t start = 0; start < files.size(); start += workers) {
    std::vector<std::future<BatchLine>> jobs;
    for (std::size_t i = start; i < std::min(files.size(), start + workers); ++i) {
      jobs.push_back(std::async(std::launch::async, classify_one, files[i], options));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) lines[start + i] = jobs[i].get();
  }

  int status = kExitOk;
  for (const auto& line : lines) {
    out << line.json << '\n';
    if (line.status == kExitInputError) {
      status = kExitInputError;
    } else if (line.status == kExitNotKnotGroup && status == kExitOk) {
      status = kExitNotKnotGroup;
    }
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot-group recognition for generalized Baumslag-Solitar groups"};
  app.name("gbsknot");
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  auto add_command = [&](const char* command, const char* help) {
    CLI::App* sub = app.add_subcommand(command, help);
    sub->add_option("file", file, "graph file (.gbs)")->required();
    sub->add_flag("--json", json, "machine-readable output");
    return sub;
  };

  CLI::App* validate_cmd = add_command("validate", "check a graph file");
  CLI::App* reduce_cmd = add_command("reduce", "print the reduced graph");
  CLI::App* present_cmd = add_command("present", "print the standard presentation");
  CLI::App* abelianize_cmd = add_command("abelianize", "abelianization, optionally of a quotient");
  std::vector<std::string> kill;
  abelianize_cmd->add_option("--kill", kill, "extra relators in word syntax");
  CLI::App* modular_cmd = add_command("modular", "image of the modular homomorphism");
  CLI::App* classify_cmd = add_command("classify", "decide 1-knot and n-knot status (file or directory)");
  CLI::App* witness_cmd = add_command("witness", "homomorphisms witnessing the n-knot verdict");
  CLI::App* word_cmd = add_command("word", "normal form, equality and ellipticity of words");
  std::string word_text;
  std::string equal_text;
  bool elliptic = false;
  word_cmd->add_option("word", word_text, "word over the presentation generators")->required();
  CLI::Option* equal_opt = word_cmd->add_option("--equal", equal_text, "compare with a second word");
  CLI::Option* elliptic_opt = word_cmd->add_flag("--elliptic", elliptic, "test for a fixed point");
  equal_opt->excludes(elliptic_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const ClassifyOptions options{word_options()};

    if (classify_cmd->parsed() && fs::is_directory(file)) {
      return classify_directory(file, options, out);
    }

    const std::string text = read_file(file);
    const LabeledGraph graph = parse_graph(text);

    if (validate_cmd->parsed()) {
      if (json) {
        out << Json{{"valid", true},
                    {"vertices", graph.vertices().size()},
                    {"edges", graph.edges().size()},
                    {"betti1", betti1(graph)},
                    {"reduced", is_reduced(graph)}}
                   .dump(2)
            << '\n';
      } else {
        out << "ok: " << graph.vertices().size() << " vertices, " << graph.edges().size()
            << " edges, betti1 " << betti1(graph) << (is_reduced(graph) ? ", reduced" : "") << '\n';
      }
      return kExitOk;
    }

    if (reduce_cmd->parsed()) {
      const LabeledGraph reduced = reduce(graph);
      if (json) {
        out << Json{{"reduced_graph", serialize_graph(reduced)}, {"shape", to_json(shape(reduced))}}
                   .dump(2)
            << '\n';
      } else {
        out << serialize_graph(reduced);
      }
      return kExitOk;
    }

    if (present_cmd->parsed()) {
      const SpanningTree tree = spanning_tree(graph);
      const Presentation p = build_presentation(graph, tree);
      if (json) {
        Json j = to_json(p);
        j["tree"] = tree.edge_ids();
        out << j.dump(2) << '\n';
      } else {
        std::string generators;
        for (const auto& g : p.generators()) generators += (generators.empty() ? "" : ", ") + g;
        out << "generators: " << generators << '\n';
        for (const auto& r : p.relators) out << r.to_string() << '\n';
      }
      return kExitOk;
    }

    if (abelianize_cmd->parsed()) {
      AbelianStructure ab;
      if (kill.empty()) {
        ab = abelianization(graph);
      } else {
        std::vector<Word> extra;
        for (const auto& k : kill) extra.push_back(parse_word(k, "--kill"));
        ab = quotient_abelianization(build_presentation(graph), extra);
      }
      out << (json ? to_json(ab).dump(2) : ab.to_string()) << '\n';
      return kExitOk;
    }

    if (modular_cmd->parsed()) {
      const ModularImage image = modular_image(graph);
      if (json) {
        out << to_json(image).dump(2) << '\n';
      } else {
        out << "tag: " << name(image.tag) << '\n';
        for (const auto& g : image.generators) {
          out << g.edge << ": " << g.value.to_string() << '\n';
        }
      }
      return kExitOk;
    }

    if (word_cmd->parsed()) {
      const WordEngine engine(graph, options.words);
      const Word w = parse_word(word_text, "word");
      if (equal_opt->count() > 0) {
        const bool same = engine.equal(w, parse_word(equal_text, "--equal"));
        if (json) {
          out << Json{{"word", w.to_string()}, {"other", equal_text}, {"equal", same}}.dump(2)
              << '\n';
        } else {
          out << (same ? "true" : "false") << '\n';
        }
      } else if (elliptic) {
        const bool e = engine.is_elliptic(w);
        if (json) {
          out << Json{{"word", w.to_string()}, {"elliptic", e}}.dump(2) << '\n';
        } else {
          out << (e ? "true" : "false") << '\n';
        }
      } else {
        const Word nf = engine.normal_form(w);
        if (json) {
          out << Json{{"word", w.to_string()},
                      {"normal_form", nf.to_string()},
                      {"identity", engine.is_identity(w)}}
                     .dump(2)
              << '\n';
        } else {
          out << nf.to_string() << '\n';
        }
      }
      return kExitOk;
    }

    const KnotVerdict verdict = classify(graph, options);

    if (witness_cmd->parsed()) {
      const auto& witnesses = verdict.n_knot.witnesses;
      if (json) {
        Json list = Json::array();
        for (const auto& w : witnesses) list.push_back(to_json(w));
        out << list.dump(2) << '\n';
      } else if (witnesses.empty()) {
        out << "no witness: " << (verdict.n_knot.reason.empty() ? "none needed"
                                                                 : verdict.n_knot.reason)
            << '\n';
      } else {
        for (const auto& w : witnesses) print_witness(out, w);
      }
      return verdict.is_knot_group() ? kExitOk : kExitNotKnotGroup;
    }

    if (json) {
      out << report(text, verdict).dump(2) << '\n';
    } else {
      print_text(out, verdict);
    }
    return verdict.is_knot_group() ? kExitOk : kExitNotKnotGroup;
  } catch (const Error& e) {
    err << "error: " << describe_error(file, e) << '\n';
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
}

}  // namespace gbsknot::cli
