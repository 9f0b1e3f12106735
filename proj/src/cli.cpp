#include "duplex/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "duplex/cassette1.hpp"
#include "duplex/error.hpp"
#include "duplex/lambda.hpp"
#include "duplex/stacked/choice.hpp"
#include "duplex/value_json.hpp"

namespace duplex::cli {

namespace {

namespace fs = std::filesystem;

struct Failure {
  int code;
  std::string message;
};

struct Config {
  std::string engine = "cassette";
  std::string grammar = "lambda";
  std::string input;
};

std::string drop_newline(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::string read_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Failure{kEnvironment, "cannot read " + path.string()};
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw Failure{kEnvironment, "cannot read " + path.string()};
  return ss.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (!path.empty()) return drop_newline(read_file(path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return drop_newline(ss.str());
}

Text decode(std::string_view bytes) {
  try {
    return text::from_utf8(bytes);
  } catch (const ContractViolation& e) {
    throw Failure{kEnvironment, std::string("input is not UTF-8: ") + e.what()};
  }
}

std::optional<Value> parse_term(const std::string& engine, TextView s) {
  return engine == "stacked" ? lambda::parse_stacked(s) : lambda::parse_cassette(s);
}

std::optional<Text> pretty_term(const std::string& engine, const Value& t) {
  return engine == "stacked" ? lambda::pretty_stacked(t) : lambda::pretty_cassette(t);
}

Value parse_or_fail(const Config& c, std::istream& in) {
  const auto t = parse_term(c.engine, decode(read_input(c.input, in)));
  if (!t) throw Failure{kSyntax, "no parse"};
  return *t;
}

Text pretty_or_fail(const Config& c, const Value& t) {
  auto s = pretty_term(c.engine, t);
  if (!s) throw Failure{kSyntax, "value has no printed form"};
  return *s;
}

int cmd_parse(const Config& c, std::istream& in, std::ostream& out) {
  out << lambda::term_to_json(parse_or_fail(c, in)) << '\n';
  return kOk;
}

int cmd_pretty(const Config& c, std::istream& in, std::ostream& out) {
  const auto t = lambda::term_from_json(read_input(c.input, in));
  if (!t) throw Failure{kSyntax, "input is not a term"};
  out << text::to_utf8(pretty_or_fail(c, *t)) << '\n';
  return kOk;
}

int cmd_roundtrip(const Config& c, std::istream& in, std::ostream& out) {
  out << text::to_utf8(pretty_or_fail(c, parse_or_fail(c, in))) << '\n';
  return kOk;
}

Value int_arg(const std::string& s) {
  std::int64_t n = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || end != s.data() + s.size()) throw Failure{kEnvironment, "not an integer: " + s};
  return Value::integer(n);
}

Value char_arg(const std::string& s) {
  const Text t = decode(s);
  if (t.size() != 1) throw Failure{kEnvironment, "not a single character: " + s};
  return Value::character(t.front());
}

std::string show(const Value& v) {
  if (v.kind() == Value::Kind::character) return text::to_utf8(v.as_char());
  if (v.kind() == Value::Kind::integer) return std::to_string(v.as_int());
  return v.debug();
}

int cmd_fmt_print(int tier, const std::vector<std::string>& raw, std::ostream& out) {
  const std::vector<Value> args = {int_arg(raw.at(0)), char_arg(raw.at(1)), char_arg(raw.at(2))};
  if (tier == 1) {
    out << text::to_utf8(cassette1::format(cassette1::example_format(), args)) << '\n';
    return kOk;
  }
  const auto s = stacked::choice::run_print(stacked::choice::example_format(), Stack::of(args));
  if (!s) throw Failure{kSyntax, "arguments have no printed form"};
  out << text::to_utf8(*s) << '\n';
  return kOk;
}

int cmd_fmt_scan(int tier, const std::string& arg, const std::string& input, std::istream& in, std::ostream& out) {
  const Text s = decode(arg.empty() ? read_input(input, in) : arg);
  std::vector<Value> values;
  if (tier == 1) {
    const auto outcome = cassette1::run_parse(cassette1::example_format(), s);
    if (const auto* v = std::get_if<cassette1::Violation>(&outcome)) throw Failure{kEnvironment, v->diagnostic};
    const auto& done = std::get<cassette1::Done>(outcome);
    if (done.consumed != s.size()) {
      throw Failure{kEnvironment, "trailing input at offset " + std::to_string(done.consumed)};
    }
    for (const auto& e : done.stack) values.push_back(e.value());
    std::reverse(values.begin(), values.end());
  } else {
    const auto r = stacked::choice::parse_prefix(stacked::choice::example_format(), s);
    if (!r || r->second != s.size()) throw Failure{kSyntax, "no parse"};
    values = r->first.args();
  }
  for (const auto& v : values) out << show(v) << '\n';
  return kOk;
}

// One corpus case: NAME.lam with NAME.json (the expected AST, or null when
// the text must be rejected) and, for accepted text, NAME.canon.lam.
std::optional<std::string> check_case(const std::string& engine, const fs::path& lam) {
  const std::string stem = lam.string().substr(0, lam.string().size() - 4);
  const Text src = decode(drop_newline(read_file(lam)));
  const std::string want = drop_newline(read_file(stem + ".json"));
  const auto t = parse_term(engine, src);
  const std::string got = t ? lambda::term_to_json(*t) : "null";
  if (got != want) return "parse gave " + got + ", expected " + want;
  if (!t) return std::nullopt;
  const std::string canon = drop_newline(read_file(stem + ".canon.lam"));
  const auto printed = pretty_term(engine, *t);
  if (!printed) return "no printed form";
  if (text::to_utf8(*printed) != canon) return "pretty gave " + text::to_utf8(*printed) + ", expected " + canon;
  if (parse_term(engine, *printed) != t) return "printed text does not parse back";
  return std::nullopt;
}

int cmd_test_corpus(const std::string& engine, const std::string& dir, std::ostream& out) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Failure{kEnvironment, "not a directory: " + dir};
  std::vector<fs::path> cases;
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (e.path().extension() == ".lam" && !name.ends_with(".canon.lam")) cases.push_back(e.path());
  }
  std::sort(cases.begin(), cases.end());
  std::size_t failed = 0;
  for (const auto& lam : cases) {
    const auto problem = check_case(engine, lam);
    const std::string name = lam.stem().string();
    if (problem) {
      ++failed;
      out << "FAIL " << name << ": " << *problem << '\n';
    } else {
      out << "PASS " << name << '\n';
    }
  }
  out << cases.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? kOk : kSyntax;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parse and print with invertible syntax descriptors.", "duplex"};
  app.require_subcommand(1);

  Config config;
  const auto engine_opt = [&](CLI::App* sub) {
    sub->add_option("--engine", config.engine, "cassette or stacked")
        ->check(CLI::IsMember({"cassette", "stacked"}))
        ->capture_default_str();
  };
  const auto term_opts = [&](CLI::App* sub) {
    engine_opt(sub);
    sub->add_option("--grammar", config.grammar, "grammar to use")->check(CLI::IsMember({"lambda"}))->capture_default_str();
    sub->add_option("--input", config.input, "read from this file instead of standard input");
  };

  auto* parse = app.add_subcommand("parse", "parse text, print the JSON AST");
  term_opts(parse);
  auto* pretty = app.add_subcommand("pretty", "print a JSON AST as text");
  term_opts(pretty);
  auto* roundtrip = app.add_subcommand("roundtrip", "parse, then print");
  term_opts(roundtrip);

  int tier = 1;
  std::vector<std::string> print_args;
  std::string scan_text;
  auto* fmt = app.add_subcommand("fmt", "the ordinal format: INT-th character after CHAR is CHAR");
  fmt->require_subcommand(1);
  auto* fmt_print = fmt->add_subcommand("print", "format an int and two chars");
  fmt_print->add_option("--tier", tier, "1 or 3")->check(CLI::IsMember({1, 3}))->capture_default_str();
  fmt_print->add_option("args", print_args, "INT CHAR CHAR")->expected(3)->required();
  auto* fmt_scan = fmt->add_subcommand("scan", "scan text back into an int and two chars");
  fmt_scan->add_option("--tier", tier, "1 or 3")->check(CLI::IsMember({1, 3}))->capture_default_str();
  fmt_scan->add_option("text", scan_text, "text to scan (default: the input)");
  fmt_scan->add_option("--input", config.input, "read from this file instead of standard input");

  std::string corpus_dir;
  auto* corpus = app.add_subcommand("test-corpus", "check a directory of corpus cases");
  engine_opt(corpus);
  corpus->add_option("dir", corpus_dir, "corpus directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kEnvironment;
  }

  try {
    if (*parse) return cmd_parse(config, in, out);
    if (*pretty) return cmd_pretty(config, in, out);
    if (*roundtrip) return cmd_roundtrip(config, in, out);
    if (*fmt_print) return cmd_fmt_print(tier, print_args, out);
    if (*fmt_scan) return cmd_fmt_scan(tier, scan_text, config.input, in, out);
    if (*corpus) return cmd_test_corpus(config.engine, corpus_dir, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kEnvironment;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kEnvironment;
  }
  return kEnvironment;
}

}  // namespace duplex::cli
