#include "walklab/cli.hpp"

#include <CLI11.hpp>

#include "walklab/automata.hpp"
#include "walklab/errors.hpp"
#include "walklab/format.hpp"
#include "walklab/numeration.hpp"
#include "walklab/recurrences.hpp"
#include "walklab/substitution.hpp"
#include "walklab/verify.hpp"
#include "walklab/walk.hpp"

namespace walklab {

namespace {

struct Options {
  std::string theta = "2sqrt2";
  std::string which = "a";
  std::string emit;
  std::string format = "bfile";
  std::uint64_t n = 100;

  std::string base = "sqrt2m1";
  bool lsd = false;
  std::string value;

  std::string kind = "zeros";
  std::string fixture;
  std::string out = "dot";
  bool include_dead = false;

  std::uint32_t m = 2;
  bool golden = false;
  std::size_t len = 100;

  std::string name = "lune";

  std::string xi = "sqrt2";
  std::uint64_t h = 1;
  std::uint64_t k = 2;

  std::string suite = "all";
  std::string scale = "quick";
  bool json = false;
};

template <class T>
void emit(std::ostream& os, std::string_view name, const std::vector<T>& v, const Options& o,
          std::uint64_t first = 1) {
  write_sequence(os, name, std::span<const T>(v), parse_format(o.format), first);
}

WalkSpec theta_spec(const Options& o) { return WalkSpec::from_theta(parse_surd(o.theta)); }

OstrowskiBase base_of(const std::string& text) {
  const QuadraticSurd xi = parse_surd(text);
  return OstrowskiBase(as_surd(frac(xi)));
}

void cmd_seq(const Options& o, std::ostream& out) {
  const WalkSpec spec = theta_spec(o);
  if (o.which == "a" || o.which == "b") {
    std::uint64_t length = 2 * o.n + 8;
    for (;;) {
      AbSequences ab = ab_sequences(spec, length);
      std::vector<std::uint64_t>& v = o.which == "a" ? ab.a : ab.b;
      if (v.size() >= o.n) {
        v.resize(o.n);
        emit(out, o.which, v, o);
        return;
      }
      length *= 2;
    }
  }
  if (o.which == "diff") {
    emit(out, "b-a", diff_sequence(spec, o.n), o);
  } else if (o.which == "sums") {
    const WalkTrace t = brute_walk(spec, o.n);
    emit(out, "S", std::vector<std::int32_t>(t.sums.begin() + 1, t.sums.end()), o);
  } else {
    throw ParseError("--which must be a, b, diff or sums");
  }
}

void cmd_walk(const Options& o, std::ostream& out) {
  const WalkSpec spec = theta_spec(o);
  const std::string what = o.emit.empty() ? "sums" : o.emit;
  if (what == "sums") {
    const WalkTrace t = brute_walk(spec, o.n);
    emit(out, "S", std::vector<std::int32_t>(t.sums.begin() + 1, t.sums.end()), o);
  } else if (what == "signs") {
    const std::vector<std::int8_t> s = step_signs(spec, o.n);
    emit(out, "step", std::vector<std::int32_t>(s.begin(), s.end()), o);
  } else if (what == "records") {
    emit(out, "record", records(spec, o.n).indices, o);
  } else if (what == "record_values") {
    emit(out, "value", records(spec, o.n).values, o);
  } else if (what == "zeros") {
    emit(out, "zero", zeros(spec, o.n), o);
  } else {
    throw ParseError("--emit must be sums, signs, records, record_values or zeros");
  }
}

void cmd_encode(const Options& o, std::ostream& out) {
  const OstrowskiBase base = base_of(o.base);
  const OstrowskiWord w = encode(BigInt(o.value), base);
  out << format_word(w, base, o.lsd ? DigitOrder::lsd : DigitOrder::msd) << '\n';
}

void cmd_decode(const Options& o, std::ostream& out) {
  const OstrowskiBase base = base_of(o.base);
  out << decode(parse_word(o.value, o.lsd ? DigitOrder::lsd : DigitOrder::msd), base) << '\n';
}

DigitDfa dfa_of(const Options& o) {
  if (!o.fixture.empty()) return hardcoded_fixture(o.fixture);
  const OstrowskiBase base = base_of(o.base);
  if (o.kind == "zeros") return build_zero_dfa(base);
  if (o.kind == "records") return build_record_dfa(base);
  throw ParseError("--kind must be zeros or records");
}

void write_dfa(const DigitDfa& dfa, const Options& o, std::ostream& out) {
  if (o.out == "dot") {
    out << to_dot(dfa, DotOptions{o.include_dead});
  } else if (o.out == "table") {
    out << to_table(dfa);
  } else {
    throw ParseError("--out must be dot or table");
  }
}

void cmd_dfa_run(const Options& o, std::ostream& out) {
  const DigitDfa dfa = dfa_of(o);
  const OstrowskiBase base = base_of(o.base);
  const OstrowskiWord w = encode(BigInt(o.value), base);
  out << format_word(w, base) << ' ' << to_string(run(dfa, w)) << '\n';
}

void cmd_subst(const Options& o, std::ostream& out) {
  const Substitution s = o.golden ? golden_substitution() : noble_substitution(o.m);
  const std::string what = o.emit.empty() ? "sigma" : o.emit;
  if (what == "sigma") {
    for (const char x : {'a', 'b', 'c'}) {
      out << x << " -> " << s.image(x) << "  tau=" << int(s.coding[letter_index(x)]) << '\n';
    }
  } else if (what == "fixedpoint") {
    out << fixed_point(s, 'a', o.len) << '\n';
  } else if (what == "coded") {
    out << s.code(fixed_point(s, 'a', o.len)) << '\n';
  } else {
    throw ParseError("--emit must be sigma, fixedpoint or coded");
  }
}

void cmd_recur(const Options& o, std::ostream& out) {
  const RecurrenceSeq seq = recurrence_by_name(o.name, o.n);
  emit(out, seq.name, seq.terms, o);
}

void cmd_discrepancy(const Options& o, std::ostream& out) {
  const QuadraticSurd xi = as_surd(frac(parse_surd(o.xi)));
  const std::vector<std::int64_t> d = discrepancy(xi, o.h, o.k, o.n);
  emit(out, "k*D", std::vector<std::int64_t>(d.begin() + 1, d.end()), o);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Scale scale = scale_from_env(parse_scale(o.scale));
  const VerifyReport report = run_checks(standard_checks(), o.suite, bounds_for(scale));
  write_report(out, report, o.json);
  if (const CheckResult* f = report.first_failure()) {
    err << "first failing check: " << f->suite << '.' << f->name << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Deterministic random walks, Ostrowski numeration and digit automata", "walklab"};
  app.require_subcommand(1);

  auto theta = [&](CLI::App* c) { c->add_option("--theta", o.theta, "walk slope theta")->capture_default_str(); };
  auto n = [&](CLI::App* c, const char* help) { c->add_option("--n", o.n, help)->capture_default_str(); };
  auto format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "bfile, csv or json")->capture_default_str();
  };

  CLI::App* seq = app.add_subcommand("seq", "a(n), b(n), b(n)-a(n) or S_n as a sequence");
  theta(seq);
  seq->add_option("--which", o.which, "a, b, diff or sums")->capture_default_str();
  n(seq, "number of terms");
  format(seq);

  CLI::App* walk = app.add_subcommand("walk", "brute-force walk up to n");
  theta(walk);
  walk->add_option("--emit", o.emit, "sums, signs, records, record_values or zeros");
  n(walk, "walk length");
  format(walk);

  CLI::App* rec = app.add_subcommand("records", "record indices up to n, index 0 included");
  theta(rec);
  n(rec, "walk length");
  format(rec);

  CLI::App* zer = app.add_subcommand("zeros", "zero indices up to n, index 0 included");
  theta(zer);
  n(zer, "walk length");
  format(zer);

  CLI::App* enc = app.add_subcommand("encode", "Ostrowski digits of N");
  enc->add_option("--base", o.base, "rotation xi")->capture_default_str();
  enc->add_flag("--lsd", o.lsd, "least significant digit first");
  enc->add_option("value", o.value, "N")->required();

  CLI::App* dec = app.add_subcommand("decode", "value of an Ostrowski word");
  dec->add_option("--base", o.base, "rotation xi")->capture_default_str();
  dec->add_flag("--lsd", o.lsd, "least significant digit first");
  dec->add_option("word", o.value, "digits")->required();

  CLI::App* dfa = app.add_subcommand("dfa", "digit automata");
  dfa->require_subcommand(1);
  CLI::App* build = dfa->add_subcommand("build", "build the zero or record automaton of a BR-number");
  build->add_option("--kind", o.kind, "zeros or records")->capture_default_str();
  build->add_option("--base", o.base, "rotation xi")->capture_default_str();
  build->add_option("--out", o.out, "dot or table")->capture_default_str();
  build->add_flag("--include-dead", o.include_dead, "draw the dead state");
  CLI::App* fix = dfa->add_subcommand("fixture", "a hand-written Pell automaton");
  fix->add_option("name", o.fixture, "records_sqrt2, records_2sqrt2 or zeros_2sqrt2")->required();
  fix->add_option("--out", o.out, "dot or table")->capture_default_str();
  fix->add_flag("--include-dead", o.include_dead, "draw the dead state");
  CLI::App* drun = dfa->add_subcommand("run", "verdict on the Ostrowski digits of N");
  drun->add_option("--kind", o.kind, "zeros or records")->capture_default_str();
  drun->add_option("--fixture", o.fixture, "use a hand-written automaton");
  drun->add_option("--base", o.base, "rotation xi")->capture_default_str();
  drun->add_option("value", o.value, "N")->required();

  CLI::App* sub = app.add_subcommand("subst", "noble-mean substitutions");
  sub->add_option("--m", o.m, "even m")->capture_default_str();
  sub->add_flag("--golden", o.golden, "the golden-mean substitution");
  sub->add_option("--emit", o.emit, "sigma, fixedpoint or coded");
  sub->add_option("--len", o.len, "prefix length")->capture_default_str();

  CLI::App* rcr = app.add_subcommand("recur", "record recurrences");
  rcr->add_option("--name", o.name, "lune, kotesovecA, kotesovecB, halfpell or sqrt3")->capture_default_str();
  n(rcr, "number of terms");
  format(rcr);

  CLI::App* dis = app.add_subcommand("discrepancy", "k D_n for the interval [0, h/k)");
  dis->set_help_flag("--help", "Print this help message and exit");
  dis->add_option("--xi", o.xi, "rotation; its fractional part is used")->capture_default_str();
  dis->add_option("--h", o.h)->capture_default_str();
  dis->add_option("--k", o.k)->capture_default_str();
  n(dis, "number of terms");
  format(dis);

  CLI::App* ver = app.add_subcommand("verify", "run the property suites");
  ver->add_option("--suite", o.suite, "all, walk, automata, substitution, recurrences or numeration")
      ->capture_default_str();
  ver->add_option("--scale", o.scale, "quick or full; WALKLAB_SCALE overrides")->capture_default_str();
  ver->add_flag("--json", o.json, "JSON report");

  std::vector<std::string> argv_store{"walklab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*seq) cmd_seq(o, out);
    else if (*walk) cmd_walk(o, out);
    else if (*rec) emit(out, "record", records(theta_spec(o), o.n).indices, o);
    else if (*zer) emit(out, "zero", zeros(theta_spec(o), o.n), o);
    else if (*enc) cmd_encode(o, out);
    else if (*dec) cmd_decode(o, out);
    else if (*build || *fix) write_dfa(dfa_of(o), o, out);
    else if (*drun) cmd_dfa_run(o, out);
    else if (*sub) cmd_subst(o, out);
    else if (*rcr) cmd_recur(o, out);
    else if (*dis) cmd_discrepancy(o, out);
    else if (*ver) return cmd_verify(o, out, err);
  } catch (const CheckFailed& e) {
    err << "walklab: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "walklab: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace walklab
