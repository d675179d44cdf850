#include "p23/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "p23/analysis.hpp"
#include "p23/axioms.hpp"
#include "p23/generators.hpp"
#include "p23/io.hpp"

namespace p23 {

namespace {

// Input/output failures that map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kTextViolationLimit = 20;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out.flush()) throw UsageError("cannot write " + path);
}

std::string render(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "]";
}

void render(std::ostream& out, const std::string& name, const Subspace& s) {
  out << name << ": dim " << s.dim() << "\n";
  for (const auto& row : s.basis()) out << "  " << render(row) << "\n";
}

void render(std::ostream& out, const std::string& title, const AxiomReport& r) {
  out << title << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checks << " checks, " << r.violations.size()
      << " violations)\n";
  std::size_t shown = 0;
  for (const auto& v : r.violations) {
    if (shown++ == kTextViolationLimit) {
      out << "  ... " << r.violations.size() - kTextViolationLimit << " more\n";
      break;
    }
    Json j = to_json(v);
    out << "  " << v.axiom;
    if (j.contains("witness")) {
      out << " witness (";
      for (std::size_t i = 0; i < j["witness"].size(); ++i) out << (i ? "," : "") << j["witness"][i].get<std::size_t>();
      out << ")";
    } else {
      out << " trial " << j["trial"].get<std::size_t>() << " params " << j["params"].dump();
    }
    out << ": lhs " << render(v.lhs) << " rhs " << render(v.rhs) << "\n";
  }
}

Json header(const std::string& command, const Algebra& a) {
  Json out = Json::object();
  out["command"] = command;
  out["field"] = a.field().name();
  out["dim"] = a.dim();
  return out;
}

void emit_json(std::ostream& out, const Json& j) { out << dump(j); }

struct Options {
  bool json = false;
  std::size_t max_dim = AxiomOptions{}.max_dim;
  std::string file;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::string output;
  std::string ideal;
  std::string emit_ideal;
  std::string fixture;
  std::uint64_t prime = 0;
};

int cmd_check(const Options& o, std::ostream& out) {
  AlgebraPtr a = parse_algebra_file(read_file(o.file));
  AxiomReport axioms = check_axioms(*a, AxiomOptions{.max_dim = o.max_dim});
  AxiomReport derived = verify_derived_identities(*a, o.trials, o.seed);
  bool ok = axioms.passed() && derived.passed();
  if (o.json) {
    Json j = header("check", *a);
    j["trials"] = o.trials;
    j["seed"] = o.seed;
    j["axioms"] = to_json(axioms);
    j["derived_identities"] = to_json(derived);
    j["passed"] = ok;
    emit_json(out, j);
  } else {
    out << "check " << o.file << " (" << a->field().name() << ", dim " << a->dim() << ")\n";
    render(out, "axioms", axioms);
    render(out, "derived identities (" + std::to_string(o.trials) + " trials, seed " + std::to_string(o.seed) + ")",
           derived);
    out << "verdict: " << (ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitVerdictFailed;
}

int cmd_center(const Options& o, std::ostream& out) {
  AlgebraPtr a = parse_algebra_file(read_file(o.file));
  Subspace z = center(a);
  bool closed = is_subalgebra(z);
  if (o.json) {
    Json j = header("center", *a);
    j["center"] = to_json(z);
    j["codim"] = z.codim();
    j["center_is_subalgebra"] = closed;
    j["passed"] = closed;
    emit_json(out, j);
  } else {
    render(out, "center", z);
    out << "codim: " << z.codim() << "\n";
    out << "center_is_subalgebra: " << std::boolalpha << closed << "\n";
  }
  return closed ? kExitOk : kExitVerdictFailed;
}

int cmd_schur(const Options& o, std::ostream& out) {
  AlgebraPtr a = parse_algebra_file(read_file(o.file));
  SchurReport r = schur_analysis(a);
  if (!o.emit_ideal.empty()) write_file(o.emit_ideal, write_generator_file(r.K));
  if (o.json) {
    Json j = header("schur", *a);
    Json fields = to_json(r);
    for (auto& [key, value] : fields.items()) j[key] = value;
    emit_json(out, j);
  } else {
    render(out, "center", r.center);
    out << "codim_d: " << r.codim_d << "\n";
    render(out, "derived", r.derived);
    render(out, "K", r.K);
    out << std::boolalpha;
    out << "dim_K: " << r.dim_K << "\n";
    out << "bound: " << r.bound << "\n";
    out << "bound_ok: " << r.bound_ok << "\n";
    out << "K_is_lie_ideal: " << r.K_is_lie_ideal << "\n";
    out << "K_is_ideal: " << r.K_is_ideal << "\n";
    out << "quotient_abelian: " << r.quotient_abelian << "\n";
    out << "generator_count_check: " << r.generator_count_check << "\n";
    out << "single_round: " << r.single_round << "\n";
    out << "proof_generators_agree: " << r.proof_generators_agree << "\n";
    out << "verdict: " << (r.passed() ? "pass" : "FAIL") << "\n";
  }
  return r.passed() ? kExitOk : kExitVerdictFailed;
}

// Writes `b` to -o, or embeds it in the report.
void deliver_algebra(const Options& o, const Algebra& b, Json& j, std::ostream& out) {
  if (!o.output.empty()) {
    write_file(o.output, write_algebra_file(b));
    if (o.json) j["output"] = o.output;
    else out << "written: " << o.output << "\n";
  } else if (o.json) {
    j["algebra"] = to_json(b);
  } else {
    out << write_algebra_file(b);
  }
}

int cmd_unitalize(const Options& o, std::ostream& out) {
  AlgebraPtr a = parse_algebra_file(read_file(o.file));
  Unitalization u = unitalize(a);
  Json j = header("unitalize", *a);
  j["unitalized_dim"] = u.algebra->dim();
  j["embed_rank"] = rref(u.embed, u.algebra->dim()).rank();
  if (!o.json) out << "unitalized dim: " << u.algebra->dim() << "\n";
  deliver_algebra(o, *u.algebra, j, out);
  if (o.json) emit_json(out, j);
  return kExitOk;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  AlgebraPtr a = parse_algebra_file(read_file(o.file));
  Subspace seed(a, parse_generator_file(read_file(o.ideal), *a));
  Subspace ideal = poisson_ideal_closure(seed);
  bool enlarged = ideal != seed;
  QuotientResult q = quotient(a, ideal);
  Json j = header("quotient", *a);
  j["generators"] = to_json(seed);
  j["ideal"] = to_json(ideal);
  j["closure_enlarged"] = enlarged;
  j["quotient_dim"] = q.quotient->dim();
  if (!o.json) {
    render(out, "ideal", ideal);
    out << "closure_enlarged: " << std::boolalpha << enlarged << "\n";
    out << "quotient dim: " << q.quotient->dim() << "\n";
  }
  deliver_algebra(o, *q.quotient, j, out);
  if (o.json) emit_json(out, j);
  return kExitOk;
}

int cmd_fixtures_emit(const Options& o, std::ostream& out) {
  Field f = o.prime == 0 ? Field::rationals() : Field::prime(o.prime);
  AlgebraPtr a = make_fixture(o.fixture, f);
  std::string text = write_algebra_file(*a);
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
    if (o.json) {
      Json j = Json::object();
      j["command"] = "fixtures emit";
      j["fixture"] = o.fixture;
      j["field"] = f.name();
      j["output"] = o.output;
      emit_json(out, j);
    } else {
      out << "written: " << o.output << "\n";
    }
  }
  return kExitOk;
}

int cmd_fixtures_list(const Options& o, std::ostream& out) {
  if (o.json) {
    Json j = Json::object();
    j["command"] = "fixtures list";
    j["fixtures"] = fixture_names();
    emit_json(out, j);
  } else {
    for (const auto& name : fixture_names()) out << name << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations in finite-dimensional Poisson (2-3)-algebras", "p23"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--max-dim", o.max_dim, "Largest dimension accepted by the axiom scan")->capture_default_str();

  auto* check = app.add_subcommand("check", "Check the axioms and derived identities");
  check->add_option("file", o.file, "Algebra file")->required();
  check->add_option("--trials", o.trials, "Random trials for derived identities")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  check->add_option("--seed", o.seed, "Random seed")->capture_default_str();

  auto* center_cmd = app.add_subcommand("center", "Center of the bracket");
  center_cmd->add_option("file", o.file, "Algebra file")->required();

  auto* schur = app.add_subcommand("schur", "Ideal K generated by the derived subspace, with its bound");
  schur->add_option("file", o.file, "Algebra file")->required();
  schur->add_option("--emit-ideal", o.emit_ideal, "Write a basis of K as a generator file");

  auto* unit = app.add_subcommand("unitalize", "Adjoin an identity");
  unit->add_option("file", o.file, "Algebra file")->required();
  unit->add_option("-o,--output", o.output, "Output algebra file");

  auto* quot = app.add_subcommand("quotient", "Quotient by the ideal generated by a generator file");
  quot->add_option("file", o.file, "Algebra file")->required();
  quot->add_option("--ideal", o.ideal, "Generator file")->required();
  quot->add_option("-o,--output", o.output, "Output algebra file");

  auto* fixtures = app.add_subcommand("fixtures", "Built-in example algebras");
  fixtures->require_subcommand(1);
  auto* emit = fixtures->add_subcommand("emit", "Write a fixture as an algebra file");
  emit->add_option("name", o.fixture, "Fixture name")->required();
  emit->add_option("-o,--output", o.output, "Output algebra file");
  emit->add_option("--prime", o.prime, "Build over F_p instead of Q");
  auto* list = fixtures->add_subcommand("list", "List fixture names");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (center_cmd->parsed()) return cmd_center(o, out);
    if (schur->parsed()) return cmd_schur(o, out);
    if (unit->parsed()) return cmd_unitalize(o, out);
    if (quot->parsed()) return cmd_quotient(o, out);
    if (emit->parsed()) return cmd_fixtures_emit(o, out);
    if (list->parsed()) return cmd_fixtures_list(o, out);
  } catch (const std::exception& e) {
    // Parse errors, unreadable files, bad moduli, unknown fixtures and
    // algebras above the scan cap.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace p23
