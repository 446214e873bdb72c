#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcollatz/conjugacy.hpp"
#include "qcollatz/error.hpp"
#include "qcollatz/verify.hpp"

namespace qcollatz::cli {

using Json = nlohmann::ordered_json;

MapSpec parse_map(const std::string& text) {
  if (text == "T") return MapSpec::classic_t();
  if (text == "Tq") return MapSpec::tq();
  if (text == "shift") return MapSpec::shift();
  const auto comma = text.find(',');
  if (text.rfind("A=", 0) != 0 || comma == std::string::npos ||
      text.compare(comma + 1, 2, "B=") != 0)
    throw std::invalid_argument("unknown map '" + text + "'; expected T, Tq, shift or A=<poly>,B=<poly>");
  const Gf2RatFun a = parse_ratfun(text.substr(2, comma - 2));
  const Gf2RatFun b = parse_ratfun(text.substr(comma + 3));
  return MapSpec::q_analog(a, b);
}

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string show(const OddRational& x) { return x.to_string(); }
std::string show(const Gf2RatFun& x) { return format_ratfun(x); }
std::string show(const EpWord& w) { return w.to_string(); }

std::string show_optional(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

Json json_optional(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

template <class State>
void print_orbit(const MapSpec& spec, const OrbitRecord<State>& rec, const std::string& format,
                 std::ostream& out) {
  if (format == "json") {
    Json states = Json::array();
    for (const auto& s : rec.states) states.push_back(show(s));
    Json j{{"map", spec.name()},
           {"start", show(rec.states.front())},
           {"states", states},
           {"parities", to_string(rec.parities)},
           {"cycle_entry", json_optional(rec.cycle_entry)},
           {"cycle_length", json_optional(rec.cycle_length)},
           {"budget_exhausted", rec.budget_exhausted}};
    out << j.dump(2) << '\n';
    return;
  }
  out << "map: " << spec.name() << '\n';
  out << "start: " << show(rec.states.front()) << '\n';
  for (std::size_t k = 0; k < rec.states.size(); ++k)
    out << std::setw(6) << k << "  " << (rec.parities[k] ? "odd " : "even") << "  "
        << show(rec.states[k]) << '\n';
  out << "cycle_entry: " << show_optional(rec.cycle_entry) << '\n';
  out << "cycle_length: " << show_optional(rec.cycle_length) << '\n';
  if (rec.budget_exhausted) {
    out << "result: budget exhausted after " << rec.states.size() - 1 << " steps\n";
  } else if (rec.cycle_length == 1U) {
    out << "result: fixed point " << show(rec.states[*rec.cycle_entry]) << '\n';
  } else {
    out << "result: cycle of length " << *rec.cycle_length << " entered at step "
        << *rec.cycle_entry << '\n';
  }
}

int cmd_orbit(const std::string& map_text, const std::string& start, std::size_t budget,
              const std::string& format, std::ostream& out) {
  const MapSpec spec = parse_map(map_text);
  switch (spec.kind()) {
    case MapKind::ClassicT:
      print_orbit(spec, orbit(spec, OddRational::parse(start), budget), format, out);
      break;
    case MapKind::Shift:
      print_orbit(spec, orbit(spec, EpWord::parse(start), budget), format, out);
      break;
    case MapKind::QAnalog:
      print_orbit(spec, orbit(spec, parse_ratfun(start), budget), format, out);
      break;
  }
  return kExitOk;
}

int cmd_pv(const std::string& map_text, const std::string& start, std::size_t bits,
           std::size_t precision, std::size_t budget, const std::string& format,
           std::ostream& out) {
  const MapSpec spec = parse_map(map_text);
  std::optional<EpWord> exact;
  Bits prefix;
  auto compute = [&](const auto& x) {
    if (bits == 0) exact = pv_exact(spec, x, budget);
    // An orbit that never cycles still has a well-defined prefix.
    if (bits > 0 || !exact) prefix = pv_trunc(spec, x, bits > 0 ? bits : precision);
  };
  switch (spec.kind()) {
    case MapKind::ClassicT:
      compute(OddRational::parse(start));
      break;
    case MapKind::Shift:
      compute(EpWord::parse(start));
      break;
    case MapKind::QAnalog:
      compute(parse_ratfun(start));
      break;
  }
  if (format == "json") {
    Json j{{"map", spec.name()}, {"start", start}};
    if (bits == 0) j["pv"] = exact ? Json(exact->to_string()) : Json(nullptr);
    if (!prefix.empty()) j["prefix"] = to_string(prefix);
    out << j.dump(2) << '\n';
  } else if (exact) {
    out << exact->to_string() << '\n';
  } else if (bits > 0) {
    out << to_string(prefix) << '\n';
  } else {
    out << "undetermined within " << budget << " steps; first " << prefix.size()
        << " bits: " << to_string(prefix) << '\n';
  }
  return kExitOk;
}

int cmd_pv_inv(const std::string& map_text, const std::string& word, const std::string& bits,
               const std::string& format, std::ostream& out) {
  const MapSpec spec = parse_map(map_text);
  if (word.empty() == bits.empty()) throw UsageError("pv-inv needs exactly one of --word or --bits");
  if (spec.kind() == MapKind::Shift) throw UsageError("the shift is its own parity vector");
  Json j{{"map", spec.name()}};
  std::string text;
  if (!bits.empty()) {
    if (!spec.is_q_analog()) throw UsageError("--bits needs a q-analog map");
    const TruncatedSeries x = pv_inverse_trunc(spec, bits_from_string(bits));
    text = to_string(x.bits());
    j["bits"] = bits;
    j["residue"] = text;
    j["precision"] = x.precision();
  } else {
    const EpWord v = EpWord::parse(word);
    j["pv"] = v.to_string();
    if (spec.is_q_analog()) {
      const Gf2RatFun x = pv_inverse_exact(spec, v);
      text = format_ratfun(x);
      j["value"] = text;
      j["xi"] = xi(x).to_string();
    } else {
      text = phi(v).to_string();
      j["value"] = text;
    }
  }
  if (format == "json")
    out << j.dump(2) << '\n';
  else
    out << text << '\n';
  return kExitOk;
}

std::string table_expression(const TableRow& row) {
  if (!row.value) return "undetermined";
  if (row.value->is_polynomial()) return format_poly(row.value->num());
  return format_mixed(*row.word);
}

int cmd_conjugate(const std::string& map_text, std::uint64_t n_max, std::size_t budget,
                  const std::string& format, std::ostream& out) {
  const MapSpec spec = parse_map(map_text);
  if (!spec.is_q_analog()) throw UsageError("conjugate needs a q-analog map (Tq or A=...,B=...)");
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  const auto rows = make_table(spec, n_max, budget);
  bool all_determined = true;
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json r{{"n", row.n}};
      if (row.value) {
        r["xi"] = row.xi->to_string();
        r["value"] = format_ratfun(*row.value);
        r["expression"] = table_expression(row);
        r["word"] = row.word->to_string();
        r["polynomial"] = row.value->is_polynomial();
      } else {
        r["xi"] = nullptr;
        all_determined = false;
      }
      arr.push_back(r);
    }
    out << Json{{"map", spec.name()}, {"rows", arr}}.dump(2) << '\n';
  } else if (format == "csv") {
    out << "n,xi,value,word\n";
    for (const auto& row : rows) {
      if (!row.value) {
        all_determined = false;
        out << row.n << ",undetermined,,\n";
        continue;
      }
      out << row.n << ',' << row.xi->to_string() << ',' << format_ratfun(*row.value) << ','
          << row.word->to_string() << '\n';
    }
  } else {
    out << "| n | ξ(h(n)) | h(n) |\n";
    out << "|--:|--:|:--|\n";
    for (const auto& row : rows) {
      all_determined = all_determined && row.value.has_value();
      out << "| " << row.n << " | " << (row.xi ? row.xi->to_string() : "undetermined") << " | "
          << table_expression(row) << " |\n";
    }
  }
  return all_determined ? kExitOk : kExitCheckFailed;
}

int cmd_xi(const std::string& value, bool inverse, const std::string& format, std::ostream& out) {
  Json j;
  std::string text;
  if (inverse) {
    const OddRational x = OddRational::parse(value);
    const Gf2RatFun f = xi_inverse(x);
    text = format_ratfun(f);
    j = Json{{"rational", x.to_string()}, {"value", text}, {"word", rational_to_word(x).to_string()}};
  } else {
    const Gf2RatFun f = parse_ratfun(value);
    const EpWord w = ratfun_to_word(f);
    text = word_to_rational(w).to_string();
    j = Json{{"value", format_ratfun(f)}, {"word", w.to_string()}, {"xi", text}};
  }
  if (format == "json")
    out << j.dump(2) << '\n';
  else
    out << text << '\n';
  return kExitOk;
}

int cmd_verify(std::uint64_t seed, double scale, bool timing, const std::string& format,
               std::ostream& out) {
  VerifyOptions options;
  options.seed = seed;
  options.scale = scale;
  const auto results = run_verification(options);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) {
      Json e{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}};
      if (!r.passed) e["counterexample"] = r.counterexample;
      if (timing) e["seconds"] = r.seconds;
      arr.push_back(e);
    }
    out << Json{{"passed", ok}, {"checks", arr}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.cases << " cases";
      if (timing) out << ", " << std::fixed << std::setprecision(2) << r.seconds << " s";
      out << ")\n";
      if (!r.passed) out << "       counterexample: " << r.counterexample << '\n';
    }
    out << (ok ? "all checks passed" : "VERIFICATION FAILED") << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact 3x+1 dynamics on 2-adic integers and GF(2) q-series", "qcollatz"};
  app.require_subcommand(1);

  std::string map_text;
  std::string start;
  std::string format;
  std::size_t budget = kDefaultBudget;

  auto* orbit_cmd = app.add_subcommand("orbit", "Iterate a map until its orbit cycles");
  orbit_cmd->add_option("--map", map_text, "T, Tq, shift or A=<poly>,B=<poly>")->required();
  orbit_cmd->add_option("--start", start, "Starting value")->required();
  orbit_cmd->add_option("--budget", budget, "Maximum number of steps")->check(CLI::PositiveNumber);
  orbit_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::size_t bits = 0;
  auto* pv_cmd = app.add_subcommand("pv", "Parity vector of a value");
  pv_cmd->add_option("--map", map_text, "T, Tq, shift or A=<poly>,B=<poly>")->required();
  pv_cmd->add_option("--start", start, "Value")->required();
  pv_cmd->add_option("--bits", bits, "Number of digits (0 for the exact eventually periodic vector)");
  std::size_t precision = 64;
  pv_cmd->add_option("--precision", precision, "Prefix length reported when the exact vector is undetermined")
      ->check(CLI::PositiveNumber);
  pv_cmd->add_option("--budget", budget, "Maximum number of steps")->check(CLI::PositiveNumber);
  pv_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string word;
  std::string bit_text;
  auto* pv_inv_cmd = app.add_subcommand("pv-inv", "Value with a given parity vector");
  pv_inv_cmd->add_option("--map", map_text, "T, Tq or A=<poly>,B=<poly>")->required();
  pv_inv_cmd->add_option("--word", word, "Exact parity vector as pre|per");
  pv_inv_cmd->add_option("--bits", bit_text, "Parity prefix; the answer is a residue mod q^n");
  pv_inv_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::uint64_t n_max = 20;
  auto* conj_cmd = app.add_subcommand("conjugate", "Tabulate the conjugacy from T at n = 1..n-max");
  conj_cmd->add_option("--map", map_text, "Tq or A=<poly>,B=<poly>")->required();
  conj_cmd->add_option("--n-max", n_max, "Last row")->check(CLI::PositiveNumber);
  conj_cmd->add_option("--budget", budget, "Maximum T steps per row")->check(CLI::PositiveNumber);
  conj_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"markdown", "json", "csv"}));

  std::uint64_t seed = VerifyOptions{}.seed;
  double scale = 1.0;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_option("--scale", scale, "Multiplier for random case counts")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--timing", timing, "Report seconds per check");
  verify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string value;
  bool inverse = false;
  auto* xi_cmd = app.add_subcommand("xi", "Read a q-series as a 2-adic integer (q = 2)");
  xi_cmd->add_option("--value", value, "Expression in q, or a rational with --inverse")->required();
  xi_cmd->add_flag("--inverse", inverse, "Map a rational with odd denominator to its q-series");
  xi_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*orbit_cmd) return cmd_orbit(map_text, start, budget, format.empty() ? "text" : format, out);
    if (*pv_cmd) return cmd_pv(map_text, start, bits, precision, budget, format.empty() ? "text" : format, out);
    if (*pv_inv_cmd)
      return cmd_pv_inv(map_text, word, bit_text, format.empty() ? "text" : format, out);
    if (*conj_cmd)
      return cmd_conjugate(map_text, n_max, budget, format.empty() ? "markdown" : format, out);
    if (*verify_cmd) return cmd_verify(seed, scale, timing, format.empty() ? "text" : format, out);
    if (*xi_cmd) return cmd_xi(value, inverse, format.empty() ? "text" : format, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qcollatz::cli
