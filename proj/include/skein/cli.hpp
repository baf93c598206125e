#pragma once

// Command-line front end. run() takes the argument vector without the
// program name and writes to the given streams; it returns the exit status:
// 0 success, 1 a check failed, 2 usage or input error.

#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skein/json.hpp"

namespace skein::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

struct Options {
  std::string word;
  int color = 2;
  int n = 1;
  int strands = 2;
  std::string framing = "blackboard";
  std::string format = "text";
  std::string example;
  int max_cable_color = 0;
  int max_total_width = 0;
};

inline std::string read_word_argument(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string term_line(const Matching& m, const RationalFn& c) {
  return m.to_string() + "  " + c.to_string();
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  CLI::App app{"Colored Temperley-Lieb evaluation of singular braid closures", "skein"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_color = [&](CLI::App* sub) {
    sub->add_option("--color", o.color, "Even cable color 2n")->check(CLI::PositiveNumber);
  };
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--max-cable-color", o.max_cable_color, "Override the cable color bound");
    sub->add_option("--max-total-width", o.max_total_width, "Override the total width bound");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate the closure of a singular braid word");
  eval->add_option("word", o.word, "Word such as \"strands=2 t1 s1\", or - for stdin")->required();
  add_color(eval);
  eval->add_option("--framing", o.framing, "blackboard or zero")->check(CLI::IsMember({"blackboard", "zero"}));
  add_format(eval);
  add_bounds(eval);

  auto* jw = app.add_subcommand("jw", "Print the Jones-Wenzl projector f^(n)");
  jw->add_option("n", o.n, "Projector width")->required()->check(CLI::PositiveNumber);
  add_format(jw);

  auto* rel = app.add_subcommand("relations", "Check the singular braid monoid relations");
  rel->add_option("--strands", o.strands, "Strand count")->check(CLI::PositiveNumber);
  add_color(rel);
  add_format(rel);
  add_bounds(rel);

  auto* closed = app.add_subcommand("closed-form", "Print a closed-form example value");
  closed->add_option("example", o.example, "ex1, ex1-reindexed or ex2")
      ->required()
      ->check(CLI::IsMember({"ex1", "ex1-reindexed", "ex2"}));
  closed->add_option("--n", o.n, "Half color n")->check(CLI::PositiveNumber);
  add_format(closed);

  auto* integ = app.add_subcommand("integrality", "Scale by C_{2n,n}^k and test membership in Z[A,A^-1]");
  integ->add_option("word", o.word, "Word, or - for stdin")->required();
  add_color(integ);
  add_format(integ);
  add_bounds(integ);

  auto* ids = app.add_subcommand("identities", "Check the local vertex and crossing identities");
  ids->add_option("--n", o.n, "Half color n")->check(CLI::PositiveNumber);
  add_format(ids);
  add_bounds(ids);

  auto* orc = app.add_subcommand("oracle", "Brute-force cabled bracket of a classical braid word");
  orc->add_option("word", o.word, "Word, or - for stdin")->required();
  add_color(orc);
  orc->add_option("--framing", o.framing, "blackboard or zero")->check(CLI::IsMember({"blackboard", "zero"}));
  add_format(orc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const bool as_json = o.format == "json";
  auto emit = [&](const json& j) { out << j.dump(2) << "\n"; };
  if (o.max_cable_color > 0) limits().max_cable_color = o.max_cable_color;
  if (o.max_total_width > 0) limits().max_total_width = o.max_total_width;

  try {
    if (*eval || *integ || *orc || *rel) require_color(o.color);

    if (*eval) {
      const auto word = parse_word(read_word_argument(o.word, in));
      const auto r = evaluate(word, o.color, o.framing == "zero" ? Framing::Zero : Framing::Blackboard);
      if (as_json) {
        emit(r);
      } else {
        out << r.value.to_string() << "\n";
        if (r.framing_caveat) err << "note: zero framing applied to a word with vertices\n";
      }
      return kOk;
    }

    if (*jw) {
      const TLElement& f = jones_wenzl(o.n);
      if (as_json) {
        emit(f);
      } else {
        for (const auto& [m, c] : f.terms()) out << term_line(m, c) << "\n";
      }
      return kOk;
    }

    if (*rel) {
      const auto report = check_relations(o.strands, o.color);
      if (as_json) {
        emit(report);
      } else {
        for (const auto& c : report.checks) out << (c.passed ? "PASS  " : "FAIL  ") << c.label << "\n";
        out << (report.all_passed() ? "all relations hold" : "some relations fail") << "\n";
      }
      return report.all_passed() ? kOk : kCheckFailed;
    }

    if (*closed) {
      RationalFn v;
      if (o.example == "ex1") v = closed_form_example1(o.n);
      if (o.example == "ex1-reindexed") v = closed_form_example1_reindexed(o.n);
      if (o.example == "ex2") v = closed_form_example2(o.n);
      if (as_json) {
        emit(json{{"example", o.example}, {"n", o.n}, {"value", v}});
      } else {
        out << v.to_string() << "\n";
      }
      return kOk;
    }

    if (*integ) {
      const auto word = parse_word(read_word_argument(o.word, in));
      const auto r = integrality_check(word, o.color);
      if (as_json) {
        emit(r);
      } else {
        out << "singular letters: " << r.singular_count << "\n"
            << "raw:      " << r.raw.to_string() << "\n"
            << "scaled:   " << r.scaled.to_string() << "\n"
            << "integral: " << (r.integral ? "yes" : "no") << "\n";
      }
      return kOk;
    }

    if (*ids) {
      const auto checks = check_identities(o.n);
      bool all = true;
      for (const auto& c : checks) all = all && c.holds;
      if (as_json) {
        emit(json{{"n", o.n}, {"all_hold", all}, {"checks", checks}});
      } else {
        for (const auto& c : checks) out << (c.holds ? "PASS  " : "FAIL  ") << c.name << "\n";
      }
      return all ? kOk : kCheckFailed;
    }

    if (*orc) {
      const auto word = parse_word(read_word_argument(o.word, in));
      const auto r = oracle::colored_bracket(word, o.color);
      if (as_json) {
        emit(r);
      } else {
        out << (o.framing == "zero" ? r.zero_framed : r.blackboard).to_string() << "\n";
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace skein::cli
