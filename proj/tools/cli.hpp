#pragma once

// Command-line front end. run() is stream-parameterized so tests can drive it in-process.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "burstcodes/burstcodes.hpp"

namespace burst::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct Options {
  std::string family;
  std::size_t n = 0;
  std::size_t b = 2;
  std::string params;
  std::string model;
  std::uint64_t seed = 1;
  std::string in;
  std::string out;
  std::string codebook;
  std::string format = "text";
  bool slow = false;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::string flavor;
  std::string word;
  bool distribution = false;
  bool size_only = false;
  bool transversal = false;
  std::size_t count = 10;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string fixed(double v, int digits = 4) {
  if (!std::isfinite(v)) return "inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

inline Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

/// "del-exact" (size from --b) or "del-exact:3".
inline ErrorModel parse_model(const std::string& text, std::size_t default_b) {
  const auto colon = text.find(':');
  const ErrorKind k = parse_kind(text.substr(0, colon));
  if (k == ErrorKind::Burst21) return ErrorModel::burst21();
  std::size_t b = default_b;
  if (colon != std::string::npos) b = std::stoul(text.substr(colon + 1));
  return {k, b};
}

inline std::vector<std::string> read_lines(std::istream& is) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

class Runner {
 public:
  Runner(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
      : o_(o), stdin_(in), stdout_(out), err_(err) {}

  std::istream& input() {
    if (o_.in.empty() || o_.in == "-") return stdin_;
    file_in_ = std::make_unique<std::ifstream>(o_.in);
    if (!*file_in_) throw UsageError("cannot open " + o_.in);
    return *file_in_;
  }

  std::ostream& output() {
    if (o_.out.empty() || o_.out == "-") return stdout_;
    if (!file_out_) {
      file_out_ = std::make_unique<std::ofstream>(o_.out);
      if (!*file_out_) throw UsageError("cannot open " + o_.out);
    }
    return *file_out_;
  }

  bool json() const { return o_.format == "json"; }

  void check_slow(Family f, std::size_t n) const {
    if (f == Family::NonCons4 && n >= 24 && !o_.slow)
      throw UsageError("noncons4 at n >= 24 is slow; pass --slow to run it");
  }

  // Spec from --family/--n/--b/--params, resolving "best".
  std::pair<CodeSpec, bool> spec_from_flags() {
    if (o_.family.empty()) throw UsageError("--family is required");
    if (o_.n == 0) throw UsageError("--n is required");
    if (o_.params.empty()) throw UsageError("--params is required (a comma list or 'best')");
    const Family f = parse_family(o_.family);
    check_slow(f, o_.n);
    if (o_.params == "best") return {best_params(f, o_.n, o_.b).spec, true};
    return {make_spec(f, o_.n, o_.b, ParamTuple::parse(o_.params)), false};
  }

  Codebook codebook_from_flags() {
    if (!o_.codebook.empty()) {
      std::ifstream is(o_.codebook);
      if (!is) throw UsageError("cannot open " + o_.codebook);
      return read_codebook(is);
    }
    const auto [spec, best] = spec_from_flags();
    if (best) err_ << "selected params=" << spec.params.to_string() << '\n';
    return build(spec);
  }

  int build_cmd() {
    const auto [spec, best] = spec_from_flags();
    const Codebook cb = build(spec);
    if (json()) {
      const RedundancyReport r = redundancy_report(cb);
      Json j;
      j["family"] = std::string(family_name(spec.family));
      j["n"] = spec.n;
      j["b"] = spec.b;
      j["params"] = spec.params.to_string();
      j["selected"] = best ? "best" : "given";
      j["cardinality"] = r.cardinality;
      j["redundancy_measured"] = number_or_null(r.redundancy_measured);
      j["redundancy_formula"] = r.redundancy_formula;
      j["lower_bound"] = r.lower_bound ? Json(*r.lower_bound) : Json(nullptr);
      if (!o_.out.empty()) write_codebook(output(), cb);
      stdout_ << j.dump(2) << '\n';
      return kOk;
    }
    std::ostream& os = output();
    write_codebook(os, cb);
    os << "# cardinality=" << cb.size() << " redundancy=" << fixed(cb.redundancy())
       << (best ? " selected=best" : "") << '\n';
    return kOk;
  }

  int verify_cmd() {
    const Codebook cb = codebook_from_flags();
    std::vector<ErrorModel> models;
    if (!o_.model.empty()) models.push_back(parse_model(o_.model, o_.b));
    else if (cb.spec) models = verification_models(cb.spec->family, cb.spec->b);
    else throw UsageError("--model is required for a codebook without a family");
    const VerifyReport r = verify_code(cb, models);
    std::ostream& os = output();
    if (json()) {
      Json j;
      j["model"] = r.model;
      j["codebook"] = r.codebook_id;
      j["cardinality"] = cb.size();
      j["pairs_checked"] = r.pairs_checked;
      Json v = Json::array();
      for (const auto& x : r.violations)
        v.push_back({{"x", x.first.to_string()}, {"x2", x.second.to_string()}, {"common", x.common.to_string()}});
      j["violations"] = v;
      j["passed"] = r.passed;
      os << j.dump(2) << '\n';
    } else {
      os << "codebook " << r.codebook_id << " size=" << cb.size() << " model=" << r.model
         << " pairs=" << r.pairs_checked << '\n';
      for (const auto& x : r.violations)
        os << "violation " << x.first << ' ' << x.second << " common " << x.common << '\n';
      os << (r.passed ? "passed" : "FAILED") << '\n';
    }
    return r.passed ? kOk : kFailure;
  }

  int decode_cmd() {
    std::optional<CodeSpec> spec;
    std::optional<BallIndex> oracle;
    if (!o_.codebook.empty() && !o_.model.empty()) {
      const Codebook cb = codebook_from_flags();
      const ErrorModel m = parse_model(o_.model, o_.b);
      oracle.emplace(cb, std::span<const ErrorModel>(&m, 1));
    } else if (!o_.codebook.empty()) {
      const Codebook cb = codebook_from_flags();
      if (!cb.spec) throw UsageError("--model is required for a codebook without a family");
      spec = cb.spec;
    } else {
      const auto [s, best] = spec_from_flags();
      if (best) err_ << "selected params=" << s.params.to_string() << '\n';
      spec = s;
    }
    int status = kOk;
    Json arr = Json::array();
    std::ostream& os = output();
    for (const auto& line : read_lines(input())) {
      const Word y = Word::parse(line);
      try {
        const DecodeResult r = oracle ? oracle->decode(y) : decode(*spec, y);
        if (json())
          arr.push_back({{"received", line},
                         {"decoded", r.word.to_string()},
                         {"window", r.window.length() ? Json::array({r.window.first, r.window.last}) : Json(nullptr)}});
        else
          os << r.word << '\n';
      } catch (const DecodeFailure& e) {
        err_ << "decode failure for " << line << ": " << e.what() << '\n';
        if (json()) arr.push_back({{"received", line}, {"error", e.what()}});
        status = kFailure;
      } catch (const CodeIntegrityError& e) {
        err_ << "ambiguous " << line << ": " << e.what() << '\n';
        if (json()) arr.push_back({{"received", line}, {"error", e.what()}});
        status = kFailure;
      }
    }
    if (json()) os << arr.dump(2) << '\n';
    return status;
  }

  int bound_cmd() {
    if (o_.n == 0) throw UsageError("--n is required");
    const BoundReport r = bound_report(o_.n, o_.b, o_.transversal);
    std::ostream& os = output();
    if (json()) {
      Json j;
      j["n"] = r.n;
      j["b"] = r.b;
      j["upper_bound"] = to_string(r.upper_bound_cardinality);
      j["upper_bound_value"] = to_double(r.upper_bound_cardinality);
      j["lower_bound_redundancy"] = r.lower_bound_redundancy;
      j["transversal_weight"] =
          r.transversal_weight_enumerated ? Json(to_string(*r.transversal_weight_enumerated)) : Json(nullptr);
      j["transversal_matches"] = r.transversal_weight_enumerated ? Json(r.transversal_matches()) : Json(nullptr);
      j["formulas"] = r.formulas;
      os << j.dump(2) << '\n';
    } else {
      os << "n=" << r.n << " b=" << r.b << '\n';
      os << "upper_bound            " << to_string(r.upper_bound_cardinality) << " ("
         << fixed(to_double(r.upper_bound_cardinality)) << ")\n";
      os << "lower_bound_redundancy " << fixed(r.lower_bound_redundancy) << '\n';
      if (r.transversal_weight_enumerated)
        os << "transversal_weight     " << to_string(*r.transversal_weight_enumerated)
           << (r.transversal_matches() ? " (matches)" : " (MISMATCH)") << '\n';
      for (const auto& [k, v] : r.formulas) os << std::left << std::setw(23) << k << fixed(v) << '\n';
    }
    return r.transversal_matches() ? kOk : kFailure;
  }

  int tabulate_cmd() {
    const Family f = parse_family(o_.family.empty() ? "burst-exact" : o_.family);
    const std::size_t lo = o_.n_min ? o_.n_min : (o_.n ? o_.n : 4);
    const std::size_t hi = o_.n_max ? o_.n_max : lo;
    if (lo > hi) throw UsageError("--n-min exceeds --n-max");
    const std::vector<std::string> cols = {"cheng1", "burst_exact", "at_most_cons", "noncons3", "noncons4"};
    Json rows = Json::array();
    std::ostream& os = output();
    if (!json()) {
      os << std::left << std::setw(5) << "n" << std::setw(4) << "b" << std::setw(34) << "params" << std::right
         << std::setw(8) << "size" << std::setw(10) << "measured" << std::setw(10) << "formula";
      for (const auto& c : cols) os << std::setw(14) << c;
      os << std::setw(13) << "lower_bound" << '\n';
    }
    for (std::size_t n = lo; n <= hi; ++n) {
      try {
        CodeLayout::make(f, n, o_.b);
      } catch (const DomainError&) {
        continue;
      }
      if (n > kMaxBuildLength) break;
      check_slow(f, n);
      const BestChoice best = best_params(f, n, o_.b);
      const Codebook cb = build(best.spec);
      const RedundancyReport r = redundancy_report(cb);
      const auto formulas = reference_redundancies(n, best.spec.b);
      if (json()) {
        Json j;
        j["n"] = n;
        j["b"] = best.spec.b;
        j["family"] = std::string(family_name(f));
        j["params"] = best.spec.params.to_string();
        j["cardinality"] = r.cardinality;
        j["redundancy_measured"] = number_or_null(r.redundancy_measured);
        j["redundancy_formula"] = r.redundancy_formula;
        for (const auto& c : cols) j[c] = formulas.count(c) ? Json(formulas.at(c)) : Json(nullptr);
        j["lower_bound"] = r.lower_bound ? Json(*r.lower_bound) : Json(nullptr);
        rows.push_back(j);
      } else {
        os << std::left << std::setw(5) << n << std::setw(4) << best.spec.b << std::setw(34)
           << best.spec.params.to_string() << std::right << std::setw(8) << r.cardinality << std::setw(10)
           << fixed(r.redundancy_measured, 3) << std::setw(10) << fixed(r.redundancy_formula, 3);
        for (const auto& c : cols) os << std::setw(14) << (formulas.count(c) ? fixed(formulas.at(c), 3) : "-");
        os << std::setw(13) << (r.lower_bound ? fixed(*r.lower_bound, 3) : "-") << '\n';
      }
    }
    if (json()) os << rows.dump(2) << '\n';
    else if (f == Family::AtMostConsecutive)
      os << "note: at-most-cons uses the VT-plus-2-burst substitute for the two-adjacent-deletion layer;"
            " its measured redundancy exceeds the formula by about log2(n)\n";
    return kOk;
  }

  int rll_cmd(bool encode) {
    std::ostream& os = output();
    int status = kOk;
    for (const auto& line : read_lines(input())) {
      try {
        const Word w = Word::parse(line);
        os << (encode ? rll_encode(w) : rll_decode(w)) << '\n';
      } catch (const DecodeFailure& e) {
        err_ << "rll decode failure for " << line << ": " << e.what() << '\n';
        status = kFailure;
      }
    }
    return status;
  }

  int ball_cmd() {
    std::ostream& os = output();
    if (o_.distribution) {
      if (o_.n == 0) throw UsageError("--n is required with --distribution");
      const BallSizeDistribution d = ball_size_distribution(o_.n, o_.b, o_.n <= 20);
      if (json()) {
        Json arr = Json::array();
        for (const auto& c : d.counts)
          arr.push_back({{"size", c.i}, {"formula", c.formula},
                         {"enumerated", c.enumerated ? Json(*c.enumerated) : Json(nullptr)}});
        os << Json{{"n", d.n}, {"b", d.b}, {"counts", arr}, {"consistent", d.consistent()}}.dump(2) << '\n';
      } else {
        os << std::left << std::setw(6) << "size" << std::right << std::setw(14) << "words" << std::setw(14)
           << "enumerated" << '\n';
        for (const auto& c : d.counts)
          os << std::left << std::setw(6) << c.i << std::right << std::setw(14) << c.formula << std::setw(14)
             << (c.enumerated ? std::to_string(*c.enumerated) : "-") << '\n';
        os << (d.consistent() ? "consistent" : "INCONSISTENT") << '\n';
      }
      return d.consistent() ? kOk : kFailure;
    }
    if (o_.word.empty()) throw UsageError("--word is required (or --distribution)");
    if (o_.model.empty()) throw UsageError("--model is required");
    const Word x = Word::parse(o_.word);
    const ErrorModel m = parse_model(o_.model, o_.b);
    const auto words = ball(x, m);
    if (json()) {
      Json j{{"word", x.to_string()}, {"model", model_name(m)}, {"size", words.size()}};
      if (!o_.size_only) {
        Json arr = Json::array();
        for (const auto& w : words) arr.push_back(w.to_string());
        j["ball"] = arr;
      }
      os << j.dump(2) << '\n';
    } else if (o_.size_only) {
      os << words.size() << '\n';
    } else {
      for (const auto& w : words) os << w << '\n';
    }
    return kOk;
  }

  int equiv_cmd() {
    std::vector<std::size_t> ns;
    if (o_.n) ns.push_back(o_.n);
    else
      for (std::size_t n = o_.b + 1; n <= kMaxEquivalenceLength; ++n) ns.push_back(n);
    std::vector<Flavor> flavors;
    if (o_.flavor.empty()) flavors = {Flavor::Exact, Flavor::AtMostCons, Flavor::AtMostNonCons};
    else flavors = {parse_flavor(o_.flavor)};
    bool all = true;
    Json arr = Json::array();
    std::ostream& os = output();
    for (const std::size_t n : ns)
      for (const Flavor f : flavors) {
        const EquivalenceResult r = equivalence_check(n, o_.b, f);
        all = all && r.equivalent();
        if (json())
          arr.push_back({{"n", n}, {"b", o_.b}, {"flavor", std::string(flavor_name(f))},
                         {"deletion_conflicts", r.deletion_conflicts}, {"insertion_conflicts", r.insertion_conflicts},
                         {"equivalent", r.equivalent()}});
        else
          os << "n=" << n << " b=" << o_.b << " flavor=" << flavor_name(f)
             << " deletion_conflicts=" << r.deletion_conflicts << " insertion_conflicts=" << r.insertion_conflicts
             << ' ' << (r.equivalent() ? "equivalent" : "NOT-EQUIVALENT") << '\n';
      }
    if (json()) os << arr.dump(2) << '\n';
    return all ? kOk : kFailure;
  }

  int simulate_cmd() {
    const Codebook cb = codebook_from_flags();
    if (cb.words.empty()) throw UsageError("codebook is empty");
    ErrorModel m;
    if (!o_.model.empty()) m = parse_model(o_.model, o_.b);
    else if (cb.spec) m = target_model(cb.spec->family, cb.spec->b);
    else throw UsageError("--model is required for a codebook without a family");
    std::optional<BallIndex> oracle;
    if (!cb.spec) oracle.emplace(cb, std::span<const ErrorModel>(&m, 1));

    // One master stream draws the message and the per-trial event seed.
    std::mt19937_64 master(o_.seed);
    std::uniform_int_distribution<std::size_t> pick(0, cb.size() - 1);
    std::ostream& os = output();
    Json arr = Json::array();
    std::size_t failures = 0;
    for (std::size_t t = 0; t < o_.count; ++t) {
      const std::size_t msg = pick(master);
      const std::uint64_t event_seed = master();
      const Word& x = cb.encode(msg);
      const auto [y, ev] = apply_error(x, m, event_seed);
      std::string decoded;
      bool ok = false;
      try {
        const DecodeResult r = oracle ? oracle->decode(y) : decode(*cb.spec, y);
        decoded = r.word.to_string();
        ok = r.word == x;
      } catch (const std::exception& e) {
        decoded = std::string("error: ") + e.what();
      }
      failures += ok ? 0 : 1;
      if (json())
        arr.push_back({{"trial", t}, {"message", msg}, {"sent", x.to_string()}, {"received", y.to_string()},
                       {"event", ev.to_string()}, {"decoded", decoded}, {"ok", ok}});
      else
        os << t << ' ' << x << ' ' << y << " [" << ev.to_string() << "] -> " << decoded << (ok ? " ok" : " FAIL")
           << '\n';
    }
    if (json()) os << arr.dump(2) << '\n';
    else os << "trials=" << o_.count << " failures=" << failures << " rng=mt19937_64\n";
    return failures ? kFailure : kOk;
  }

 private:
  const Options& o_;
  std::istream& stdin_;
  std::ostream& stdout_;
  std::ostream& err_;
  std::unique_ptr<std::ifstream> file_in_;
  std::unique_ptr<std::ofstream> file_out_;
};

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burst-deletion code toolkit: construct, verify, decode and bound codes"};
  app.require_subcommand(1);
  Options o;

  auto add_code = [&](CLI::App* c) {
    c->add_option("--family", o.family, "cheng1|burst-exact|at-most-cons|c21|noncons3|noncons4|cl2");
    c->add_option("--n", o.n, "code length");
    c->add_option("--b", o.b, "burst size")->capture_default_str();
    c->add_option("--params", o.params, "comma list or 'best'");
    c->add_flag("--slow", o.slow, "allow the slow noncons4 n>=24 sweep");
  };
  auto add_io = [&](CLI::App* c) {
    c->add_option("--in", o.in, "input file (default stdin)");
    c->add_option("--out", o.out, "output file (default stdout)");
    c->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };

  auto* build = app.add_subcommand("build", "build a codebook by enumeration");
  add_code(build);
  add_io(build);
  auto* verify = app.add_subcommand("verify", "exhaustively verify ball disjointness");
  add_code(verify);
  add_io(verify);
  verify->add_option("--codebook", o.codebook, "codebook file");
  verify->add_option("--model", o.model, "error model, e.g. del-exact:2");
  auto* dec = app.add_subcommand("decode", "decode received words, one per line");
  add_code(dec);
  add_io(dec);
  dec->add_option("--codebook", o.codebook, "codebook file");
  dec->add_option("--model", o.model, "with --codebook: decode by unique ball membership");
  auto* bound = app.add_subcommand("bound", "upper and lower bounds");
  bound->add_option("--n", o.n, "code length");
  bound->add_option("--b", o.b, "burst size")->capture_default_str();
  bound->add_flag("--transversal", o.transversal, "enumerate the fractional transversal weight");
  add_io(bound);
  auto* tab = app.add_subcommand("tabulate", "redundancy table over a range of n");
  add_code(tab);
  add_io(tab);
  tab->add_option("--n-min", o.n_min, "first n");
  tab->add_option("--n-max", o.n_max, "last n");
  auto* enc = app.add_subcommand("rll-encode", "run-length-limiting encoder");
  add_io(enc);
  auto* rdec = app.add_subcommand("rll-decode", "inverse of rll-encode");
  add_io(rdec);
  auto* bl = app.add_subcommand("ball", "list an error ball or tabulate ball sizes");
  add_io(bl);
  bl->add_option("--word", o.word, "center word");
  bl->add_option("--model", o.model, "error model, e.g. del-exact:2");
  bl->add_option("--n", o.n, "length for --distribution");
  bl->add_option("--b", o.b, "burst size")->capture_default_str();
  bl->add_flag("--distribution", o.distribution, "ball-size distribution over {0,1}^n");
  bl->add_flag("--size-only", o.size_only, "print only the ball size");
  auto* eq = app.add_subcommand("equiv", "deletion/insertion ball equivalence scan");
  add_io(eq);
  eq->add_option("--n", o.n, "length (default: all b < n <= 10)");
  eq->add_option("--b", o.b, "burst size")->capture_default_str();
  eq->add_option("--flavor", o.flavor, "exact|at-most-cons|at-most-noncons (default: all)");
  auto* sim = app.add_subcommand("simulate", "random burst channel with decoding");
  add_code(sim);
  add_io(sim);
  sim->add_option("--codebook", o.codebook, "codebook file");
  sim->add_option("--model", o.model, "error model (default: the family's target)");
  sim->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  sim->add_option("--count", o.count, "number of trials")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  Runner r(o, in, out, err);
  try {
    if (build->parsed()) return r.build_cmd();
    if (verify->parsed()) return r.verify_cmd();
    if (dec->parsed()) return r.decode_cmd();
    if (bound->parsed()) return r.bound_cmd();
    if (tab->parsed()) return r.tabulate_cmd();
    if (enc->parsed()) return r.rll_cmd(true);
    if (rdec->parsed()) return r.rll_cmd(false);
    if (bl->parsed()) return r.ball_cmd();
    if (eq->parsed()) return r.equiv_cmd();
    if (sim->parsed()) return r.simulate_cmd();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DecodeFailure& e) {
    err << "decode failure: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace burst::cli
