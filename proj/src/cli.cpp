#include "jel/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jel/commitments.hpp"
#include "jel/derive.hpp"
#include "jel/error.hpp"
#include "jel/scenario.hpp"
#include "jel/strength.hpp"

namespace jel {

namespace {

// Unreadable input files are usage errors, not domain errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  for (const std::string& l : lines) f << l << '\n';
}

std::string step_line(const DerivationStep& s) {
  std::string premises;
  for (const Formula& p : s.premises)
    premises += (premises.empty() ? "" : " ; ") + print_formula(p);
  return std::string(rule_name(s.rule)) + " | " + premises + " | " +
         print_formula(s.conclusion);
}

std::string rank_text(const Term& t) {
  auto r = try_pattern_rank(t);
  return r ? std::to_string(*r) : "-";
}

struct Options {
  std::vector<std::string> texts;
  std::string file;
  std::string goal;
  int depth = 3;
  std::string justified;
  std::string asker;
  std::string trace_file;
  std::string format = "text";
};

int cmd_parse(const Options& o, std::ostream& out, bool terms) {
  for (const std::string& t : o.texts)
    out << (terms ? print_term(parse_term(t)) : print_formula(parse_formula(t)))
        << '\n';
  return 0;
}

int cmd_derive(const Options& o, std::ostream& out, std::ostream& err) {
  Scenario s = parse_scenario(read_file(o.file), false);
  Closure closure = saturate_closure(s.kb, o.depth);
  if (!o.goal.empty()) {
    Formula goal = parse_formula(o.goal);
    auto d = prove(closure, s.kb, goal, o.depth);
    if (!d) {
      out << "no derivation of " << print_formula(goal) << " within depth "
          << o.depth << '\n';
      return 0;
    }
    for (const DerivationStep& step : d->steps) out << step_line(step) << '\n';
    return 0;
  }
  std::vector<std::pair<std::string, Formula>> derived;
  for (const auto& [f, steps] : closure.producers)
    derived.emplace_back(print_formula(f), f);
  std::sort(derived.begin(), derived.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [text, f] : derived) {
    auto d = prove(closure, s.kb, f, o.depth);
    out << step_line(d->steps.back()) << '\n';
  }
  if (closure.truncated)
    err << "note: closure truncated at depth " << o.depth << '\n';
  return 0;
}

int cmd_strength(const Options& o, std::istream& in, std::ostream& out) {
  std::vector<std::string> texts = o.texts;
  if (texts.empty()) {
    std::string line;
    while (texts.size() < 2 && std::getline(in, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        texts.push_back(line);
  }
  if (texts.size() != 2) throw UsageError("strength needs exactly two terms");
  Term x = parse_term(texts[0]);
  Term y = parse_term(texts[1]);
  out << verdict_name(stronger(x, y)) << '\n';
  out << "rank " << rank_text(x) << ' ' << rank_text(y) << '\n';
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  if (o.texts.size() != 1) throw UsageError("classify needs one term");
  Term t = parse_term(o.texts[0]);
  out << pattern_name(classify_term(t)) << '\n';
  if (o.justified.empty() != o.asker.empty())
    throw UsageError("--justified and --asker go together");
  if (!o.justified.empty()) {
    for (const auto& q : critical_questions(t, parse_formula(o.justified),
                                            Agent(o.asker)))
      out << cq_name(q.id) << ": " << q.text << '\n';
  }
  return 0;
}

int report(const ScenarioRun& run, const Options& o, std::ostream& out) {
  auto records = trace_lines(run.state);
  if (!o.trace_file.empty()) write_file(o.trace_file, records);
  for (const std::string& l : records) out << l << '\n';
  if (o.format == "text")
    for (const std::string& l : outcome_lines(run)) out << l << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Justification and explanation logic toolkit", "jel"};
  app.require_subcommand(1);
  Options o;

  auto* parse = app.add_subcommand("parse", "Parse formulas and echo them");
  parse->add_option("formula", o.texts, "Formula text")->required();
  auto* term = app.add_subcommand("term", "Parse proof terms and echo them");
  term->add_option("term", o.texts, "Term text")->required();

  auto* derive = app.add_subcommand("derive", "Saturate a knowledge base");
  derive->add_option("file", o.file, "File with a [kb] section")->required();
  derive->add_option("--goal", o.goal, "Formula to prove");
  derive->add_option("--depth", o.depth, "Maximum term height")
      ->check(CLI::NonNegativeNumber);

  auto* strength = app.add_subcommand(
      "strength", "Compare two justifiers (arguments or two stdin lines)");
  strength->add_option("terms", o.texts, "Two terms")->expected(0, 2);

  auto* classify =
      app.add_subcommand("classify", "Pattern class and critical questions");
  classify->add_option("term", o.texts, "Commitment or compound term")
      ->required();
  classify->add_option("--justified", o.justified, "Formula it supports");
  classify->add_option("--asker", o.asker, "Agent raising questions");

  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--trace", o.trace_file, "Also write trace records here");
    cmd->add_option("--format", o.format, "text or records")
        ->check(CLI::IsMember({"text", "records"}));
    cmd->add_option("--depth", o.depth, "Maximum term height")
        ->check(CLI::NonNegativeNumber);
  };
  auto* dialogue = app.add_subcommand("dialogue", "Dialogue runner");
  dialogue->require_subcommand(1);
  auto* dialogue_run = dialogue->add_subcommand("run", "Run a scenario file");
  dialogue_run->add_option("file", o.file, "Scenario file")->required();
  add_run_flags(dialogue_run);

  auto* scenario = app.add_subcommand("scenario", "Bundled scenarios");
  scenario->require_subcommand(1);
  auto* trip = scenario->add_subcommand("trip-booking", "Trip booking dialogue");
  add_run_flags(trip);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (parse->parsed()) return cmd_parse(o, out, false);
    if (term->parsed()) return cmd_parse(o, out, true);
    if (derive->parsed()) return cmd_derive(o, out, err);
    if (strength->parsed()) return cmd_strength(o, in, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (dialogue_run->parsed())
      return report(run_scenario(parse_scenario(read_file(o.file)), o.depth), o,
                    out);
    if (trip->parsed())
      return report(run_scenario(trip_booking_scenario(), o.depth), o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace jel
